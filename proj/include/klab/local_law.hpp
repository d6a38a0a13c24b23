#pragma once

#include <optional>
#include <vector>

#include "klab/graph.hpp"
#include "klab/green_matrix.hpp"
#include "klab/resolvent.hpp"
#include "klab/rng.hpp"

namespace klab {

// Eigendecomposition of H = A/sqrt(d-1); eigenvalues ascending, eigenvectors
// orthonormal columns.  For connected regular graphs the trivial eigenvalue
// d/sqrt(d-1) sits at the top.
struct SpectrumBundle {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;  // empty when not requested
    int n = 0;
    int d = 0;

    bool has_vectors() const { return eigenvectors.size() > 0; }
};

SpectrumBundle spectrum(const Graph& g, int d, bool want_vectors = true);

// m(z) = (1/N) sum_j 1/(lambda_j - z).
Complex empirical_stieltjes(const SpectrumBundle& s, const SpectralPoint& z);

struct DomainGridOptions {
    int re_points = 9;
    int eta_points = 7;
    double re_max = 2.5;
    double eta_max = 1.0;
    std::optional<double> eta_floor;  // overrides the (log N)^{48a+1}/N floor
    bool symmetric = false;           // mirror the grid under Re z -> -Re z
};

// The spectral domain: Im z >= eta_floor and |z +- 2| >= edge_margin with
// edge_margin = (log N)^{1 - alpha/2}.  At desk scale the paper's eta floor
// exceeds any usable scale, so an explicit floor override is supported.
struct DomainGrid {
    std::vector<Complex> points;
    int n = 0;
    int d = 0;
    double alpha = 0.0;
    double eta_floor = 0.0;
    double edge_margin = 0.0;
};

DomainGrid domain_grid(int n, double alpha, int d, const DomainGridOptions& options = {});
bool in_domain(Complex z, double eta_floor, double edge_margin);

// r_* = 2 ell_* + 1 with ell_* = floor(alpha log_{d-1} log N).
int default_local_radius(int n, int d, double alpha);

struct LocalLawReport {
    Complex z;
    int r = 0;
    // |G_ij - P_ij(E_r(i,j))| over pairs with dist <= r.
    long near_count = 0;
    double near_max = 0.0, near_q50 = 0.0, near_q90 = 0.0;
    // |G_ij| over random pairs with dist > r (where P_ij = 0).
    long far_count = 0;
    double far_max = 0.0, far_q50 = 0.0, far_q90 = 0.0;
    // Stieltjes comparison.
    Complex m_empirical;
    Complex m_km;
    double m_abs_err = 0.0;
    // Diagonal detail over the sampled vertices; a vertex is tree-like when
    // E_r(i,i) has zero excess, in which case P_ii = m_d exactly.
    long diag_count = 0;
    long tree_diag_count = 0;
    double tree_diag_median = 0.0;  // median |G_ii - m_d| over tree-like vertices
    double diag_median = 0.0;       // median |G_ii - P_ii| over all sampled vertices
};

// Local-law error metric at one spectral point.  Near pairs are enumerated
// exactly up to near_budget and sampled beyond it; far_budget random far
// pairs contribute the scalar |G_ij| metric.
LocalLawReport local_law_error(const Graph& g, const SpectralPoint& z, int d, int r,
                               int far_budget, Rng& rng, int near_budget = 4000);

// P_ij(E_r) evaluated from the full Green's function through a low-rank
// update over the removed edges; requires a d-regular graph.  Used when
// E_r(i,j) covers most of the graph, where a fresh dense solve per pair
// would be wasteful.
Complex localized_green_via_update(const Graph& g, const GreenMatrix& full, const Subgraph& er,
                                   int i, int j, int d);

struct DelocalizationStats {
    double max_scaled_sup = 0.0;             // max over bulk of sqrt(N) ||v||_inf
    std::vector<double> eigenvalues;         // bulk eigenvalues, ascending
    std::vector<double> scaled_sup_norms;    // sqrt(N) ||v||_inf per bulk vector
};

// sqrt(N)-scaled sup norms of bulk eigenvectors (|lambda +- 2| >= margin),
// excluding the trivial constant eigenvector.
DelocalizationStats delocalization_stats(const SpectrumBundle& s, double bulk_margin);

struct QueStats {
    double density_max = 0.0;    // max_k |sum_i q_i (v_i^k)^2|, ||q||_inf = 1
    double isotropic_max = 0.0;  // max_k |<q, v^k>|, ||q||_2 = 1
    long bulk_count = 0;
};

// Flatness statistics of bulk eigenvector densities against a centered test
// vector (sum_i q_i = 0 required).
QueStats que_statistic(const SpectrumBundle& s, const Eigen::VectorXd& test,
                       double bulk_margin);

// CDF of the Kesten-McKay density on [-2,2] by adaptive quadrature.
double km_cdf(double x, int d);

// Kolmogorov-Smirnov distance between the empirical CDF of the nontrivial
// eigenvalues and the Kesten-McKay law.
double km_ks_distance(const SpectrumBundle& s, int d);

}  // namespace klab
