#include "klab/local_law.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "klab/tree_green.hpp"

namespace klab {

SpectrumBundle spectrum(const Graph& g, int d, bool want_vectors) {
    if (d < 3) throw DegreeTooLarge("spectrum requires d >= 3");
    if (g.size() > dense_cap())
        throw SizeCapExceeded("spectrum of size " + std::to_string(g.size()));
    const double norm = 1.0 / std::sqrt(d - 1.0);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(g.size(), g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.neighbors(u)) h(u, v) = norm;

    SpectrumBundle s;
    s.n = g.size();
    s.d = d;
    symmetric_eigen(h, s.eigenvalues, s.eigenvectors, want_vectors);
    return s;
}

Complex empirical_stieltjes(const SpectrumBundle& s, const SpectralPoint& z) {
    Complex sum = 0.0;
    for (int j = 0; j < s.n; ++j) sum += 1.0 / (s.eigenvalues[j] - z.z());
    return sum / static_cast<double>(s.n);
}

bool in_domain(Complex z, double eta_floor, double edge_margin) {
    if (z.imag() < eta_floor) return false;
    return std::abs(z - 2.0) >= edge_margin && std::abs(z + 2.0) >= edge_margin;
}

DomainGrid domain_grid(int n, double alpha, int d, const DomainGridOptions& options) {
    if (alpha <= 0.0) throw ConfigError("alpha must be positive");
    if (alpha <= 4.0)
        std::cerr << "klab: warning: alpha=" << alpha
                  << " is below the alpha>4 hypothesis; domain is heuristic\n";
    const double log_n = std::log(static_cast<double>(n));
    DomainGrid grid;
    grid.n = n;
    grid.d = d;
    grid.alpha = alpha;
    grid.eta_floor =
        options.eta_floor ? *options.eta_floor : std::pow(log_n, 48.0 * alpha + 1.0) / n;
    grid.edge_margin = std::pow(log_n, 1.0 - alpha / 2.0);

    if (grid.eta_floor <= options.eta_max) {
        const double lo = std::log(grid.eta_floor), hi = std::log(options.eta_max);
        for (int ir = 0; ir < options.re_points; ++ir) {
            double re = options.symmetric
                            ? options.re_max * ir / std::max(1, options.re_points - 1)
                            : -options.re_max +
                                  2.0 * options.re_max * ir / std::max(1, options.re_points - 1);
            for (int ie = 0; ie < options.eta_points; ++ie) {
                double eta =
                    std::exp(lo + (hi - lo) * ie / std::max(1, options.eta_points - 1));
                Complex z(re, eta);
                if (!in_domain(z, grid.eta_floor, grid.edge_margin)) continue;
                grid.points.push_back(z);
                if (options.symmetric && re > 0.0) grid.points.push_back(Complex(-re, eta));
            }
        }
    }
    std::sort(grid.points.begin(), grid.points.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    if (grid.points.empty())
        throw EmptyDomain("spectral domain constraints exclude every grid point");
    return grid;
}

int default_local_radius(int n, int d, double alpha) {
    const double ell = std::floor(alpha * std::log(std::log(static_cast<double>(n))) /
                                  std::log(static_cast<double>(d - 1)));
    return 2 * std::max(0, static_cast<int>(ell)) + 1;
}

namespace {

double quantile(std::vector<double>& v, double p) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const double idx = p * (v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(idx);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (idx - lo) * (v[hi] - v[lo]);
}

double median(std::vector<double> v) { return quantile(v, 0.5); }

}  // namespace

// The tree extension of E_r differs from G by the removed edges plus the
// self-loop weights at their endpoints; with the full Green's function in
// hand, P_ij follows from a solve on the support of that update.
Complex localized_green_via_update(const Graph& g, const GreenMatrix& full, const Subgraph& er,
                                   int i, int j, int d) {
    const Complex msc = m_sc(SpectralPoint(full.z));
    std::vector<int> local_of(g.size(), -1);
    for (int a = 0; a < er.size(); ++a) local_of[er.vertices[a]] = a;

    std::vector<Edge> removed;
    std::vector<int> loop_count(g.size(), 0);
    for (int a = 0; a < er.size(); ++a) {
        const int u = er.vertices[a];
        for (int v : g.neighbors(u)) {
            const int b = local_of[v];
            if (b >= 0 && er.graph.has_edge(a, b)) continue;
            if (b < 0 || u < v) removed.emplace_back(u, v);
            ++loop_count[u];
        }
    }
    std::vector<int> support;
    for (auto [u, v] : removed) {
        support.push_back(u);
        support.push_back(v);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    const int s = static_cast<int>(support.size());
    if (s == 0) return full(i, j);  // E_r is the whole graph
    if (s > 2000) throw SizeCapExceeded("low-rank update support of size " + std::to_string(s));

    std::vector<int> pos(g.size(), -1);
    for (int k = 0; k < s; ++k) pos[support[k]] = k;

    MatrixXc delta = MatrixXc::Zero(s, s);
    const double norm = 1.0 / std::sqrt(d - 1.0);
    for (auto [u, v] : removed) {
        delta(pos[u], pos[v]) -= norm;
        delta(pos[v], pos[u]) -= norm;
    }
    for (int k = 0; k < s; ++k) {
        const int u = support[k];
        if (local_of[u] >= 0 && loop_count[u] > 0)
            delta(k, k) = -msc * static_cast<double>(loop_count[u]) / (d - 1.0);
    }

    MatrixXc gbb(s, s);
    Eigen::VectorXcd gbj(s), gib(s);
    for (int p = 0; p < s; ++p) {
        for (int q = 0; q < s; ++q) gbb(p, q) = full(support[p], support[q]);
        gbj[p] = full(support[p], j);
        gib[p] = full(i, support[p]);
    }
    MatrixXc k = MatrixXc::Identity(s, s) + delta * gbb;
    Eigen::VectorXcd y = k.partialPivLu().solve(delta * gbj);
    return full(i, j) - gib.cwiseProduct(y).sum();
}

namespace {

// The low-rank path assumes a vanishing deficit function (regular parent).
Complex localized_entry(const Graph& g, bool regular, const GreenMatrix& full,
                        const Subgraph& er, int i, int j, const SpectralPoint& z, int d) {
    if (er.empty()) return Complex(0.0, 0.0);
    if (regular && er.size() > g.size() / 2)
        return localized_green_via_update(g, full, er, i, j, d);
    GreenMatrix p = tree_extension_green(TreeExtensionSpec(er, d), z);
    return p(er.local(i), er.local(j));
}

}  // namespace

LocalLawReport local_law_error(const Graph& g, const SpectralPoint& z, int d, int r,
                               int far_budget, Rng& rng, int near_budget) {
    if (r < 0) throw IndexOutOfRange("negative radius");
    Graph base = g.target_degree() ? g : g.with_target_degree(d);
    GreenMatrix full = green_full(base, z, d);
    const Complex md = m_d(z, d);

    LocalLawReport rep;
    rep.z = z.z();
    rep.r = r;
    rep.m_empirical = full.entries.trace() / static_cast<double>(g.size());
    rep.m_km = md;
    rep.m_abs_err = std::abs(rep.m_empirical - rep.m_km);

    std::vector<int> order(g.size());
    for (int v = 0; v < g.size(); ++v) order[v] = v;
    shuffle_vector(order, rng);

    const bool regular = base.is_regular();
    std::vector<double> near_err, diag_err, tree_err;
    for (int i : order) {
        if (static_cast<int>(near_err.size()) >= near_budget) break;
        Subgraph eii = path_neighborhood(base, i, i, r);
        Complex pii = localized_entry(base, regular, full, eii, i, i, z, d);
        const double err = std::abs(full(i, i) - pii);
        near_err.push_back(err);
        diag_err.push_back(err);
        if (excess(eii) == 0) tree_err.push_back(std::abs(full(i, i) - md));

        auto di = dist_from(base, {i}, r);
        for (int j = 0; j < g.size() && static_cast<int>(near_err.size()) < near_budget; ++j) {
            if (j == i || di[j] == Graph::kUnreachable || di[j] > r) continue;
            if (j < i) continue;  // counted from the other side
            Subgraph er = path_neighborhood(base, i, j, r);
            Complex pij = localized_entry(base, regular, full, er, i, j, z, d);
            near_err.push_back(std::abs(full(i, j) - pij));
        }
    }
    rep.near_count = static_cast<long>(near_err.size());
    rep.diag_count = static_cast<long>(diag_err.size());
    rep.tree_diag_count = static_cast<long>(tree_err.size());
    rep.diag_median = median(diag_err);
    rep.tree_diag_median = median(tree_err);
    rep.near_max = near_err.empty() ? 0.0 : *std::max_element(near_err.begin(), near_err.end());
    rep.near_q50 = quantile(near_err, 0.5);
    rep.near_q90 = quantile(near_err, 0.9);

    std::vector<double> far_err;
    for (int t = 0; t < far_budget; ++t) {
        int i = static_cast<int>(uniform_below(rng, g.size()));
        int j = static_cast<int>(uniform_below(rng, g.size()));
        auto di = dist_from(base, {i}, r);
        if (j == i || (di[j] != Graph::kUnreachable && di[j] <= r)) continue;
        far_err.push_back(std::abs(full(i, j)));
    }
    rep.far_count = static_cast<long>(far_err.size());
    rep.far_max = far_err.empty() ? 0.0 : *std::max_element(far_err.begin(), far_err.end());
    rep.far_q50 = quantile(far_err, 0.5);
    rep.far_q90 = quantile(far_err, 0.9);
    return rep;
}

namespace {

std::vector<int> bulk_indices(const SpectrumBundle& s, double margin) {
    const double trivial = s.d / std::sqrt(s.d - 1.0);
    std::vector<int> idx;
    for (int k = 0; k < s.n; ++k) {
        const double lam = s.eigenvalues[k];
        if (std::abs(lam - trivial) < 1e-8) continue;
        if (std::abs(lam - 2.0) < margin || std::abs(lam + 2.0) < margin) continue;
        idx.push_back(k);
    }
    return idx;
}

}  // namespace

DelocalizationStats delocalization_stats(const SpectrumBundle& s, double bulk_margin) {
    if (!s.has_vectors()) throw EigFailed("spectrum bundle carries no eigenvectors");
    DelocalizationStats out;
    const double scale = std::sqrt(static_cast<double>(s.n));
    for (int k : bulk_indices(s, bulk_margin)) {
        const double sup = s.eigenvectors.col(k).cwiseAbs().maxCoeff();
        out.eigenvalues.push_back(s.eigenvalues[k]);
        out.scaled_sup_norms.push_back(scale * sup);
        out.max_scaled_sup = std::max(out.max_scaled_sup, scale * sup);
    }
    return out;
}

QueStats que_statistic(const SpectrumBundle& s, const Eigen::VectorXd& test,
                       double bulk_margin) {
    if (!s.has_vectors()) throw EigFailed("spectrum bundle carries no eigenvectors");
    if (test.size() != s.n) throw IndexOutOfRange("test vector size mismatch");
    const double linf = test.cwiseAbs().maxCoeff();
    const double l2 = test.norm();
    if (linf == 0.0) return {};  // zero vector: statistics vanish
    if (std::abs(test.sum()) > 1e-9 * l2 * std::sqrt(static_cast<double>(s.n)))
        throw NotCentered("test vector entries must sum to zero");

    QueStats out;
    for (int k : bulk_indices(s, bulk_margin)) {
        const auto v = s.eigenvectors.col(k);
        const double density = std::abs(v.cwiseAbs2().dot(test)) / linf;
        const double iso = std::abs(v.dot(test)) / l2;
        out.density_max = std::max(out.density_max, density);
        out.isotropic_max = std::max(out.isotropic_max, iso);
        ++out.bulk_count;
    }
    return out;
}

namespace {

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth, int d) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = km_density(lm, d), frm = km_density(rm, d);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(a, m, fa, flm, fm, left, tol / 2.0, depth - 1, d) +
           adaptive_simpson(m, b, fm, frm, fb, right, tol / 2.0, depth - 1, d);
}

double km_integral(double a, double b, int d, double tol) {
    if (b <= a) return 0.0;
    const double fa = km_density(a, d), fb = km_density(b, d),
                 fm = km_density(0.5 * (a + b), d);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(a, b, fa, fm, fb, whole, tol, 40, d);
}

}  // namespace

double km_cdf(double x, int d) {
    if (x <= -2.0) return 0.0;
    if (x >= 2.0) return 1.0;
    return km_integral(-2.0, x, d, 1e-11);
}

double km_ks_distance(const SpectrumBundle& s, int d) {
    const double trivial = s.d / std::sqrt(s.d - 1.0);
    std::vector<double> lams;
    for (int k = 0; k < s.n; ++k)
        if (std::abs(s.eigenvalues[k] - trivial) >= 1e-8) lams.push_back(s.eigenvalues[k]);
    std::sort(lams.begin(), lams.end());
    const double m = static_cast<double>(lams.size());
    double ks = 0.0;
    for (std::size_t k = 0; k < lams.size(); ++k) {
        const double f = km_cdf(lams[k], d);
        ks = std::max(ks, std::abs(f - static_cast<double>(k) / m));
        ks = std::max(ks, std::abs(f - static_cast<double>(k + 1) / m));
    }
    return ks;
}

}  // namespace klab
