#pragma once

#include "klab/graph.hpp"
#include "klab/green_matrix.hpp"

namespace klab {

// Green's function G(z) = (H - z)^{-1} of the normalized adjacency matrix
// H = A/sqrt(d-1).  The normalization uses the target degree d regardless of
// the actual degrees of the graph.
GreenMatrix green_full(const Graph& g, const SpectralPoint& z, int d);

// Green's function of the graph with the vertices in `removed` deleted;
// same normalization.  Row labels are the surviving vertices.
GreenMatrix green_minor(const Graph& g, const std::vector<int>& removed,
                        const SpectralPoint& z, int d);

// Single column of the Green's function by a sparse solve; usable above the
// dense cap.
Eigen::VectorXcd green_column(const Graph& g, int column, const SpectralPoint& z, int d);

// G^{(k)}_{ij} = G_ij - G_ik G_kj / G_kk  (Schur complement, single vertex).
Complex schur_minor_entry(const GreenMatrix& gm, int i, int j, int k);

// max_i | sum_j |G_ij|^2 - Im G_ii / eta |; identically zero for the exact
// resolvent of a symmetric matrix.
double ward_residual(const GreenMatrix& gm);

struct QValue {
    Complex z;
    Complex q_of_g;
    int n = 0;
    int d = 0;
};

// Q(G,z) = (1/(N d)) sum over oriented edges (i,j) of G^{(i)}_{jj}, computed
// from a single full solve through the Schur complement identity.
QValue q_functional(const Graph& g, const SpectralPoint& z, int d);

// Residual of the self-consistent equation,
//   (Q - m_sc) - ((d-2)/(d-1)) m_d m_sc^{2 ell + 1} (Q - m_sc).
Complex sce_residual(const QValue& q, int ell);
Complex sce_residual(const Graph& g, const SpectralPoint& z, int d, int ell);

}  // namespace klab
