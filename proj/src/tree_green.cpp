#include "klab/tree_green.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "klab/nbw.hpp"

namespace klab {

Complex m_sc(const SpectralPoint& zp) {
    const Complex z = zp.z();
    Complex s = std::sqrt(z * z - 4.0);
    // Orient the root to avoid cancellation in z + s; the large root is then
    // stable and the other one is its reciprocal (the roots multiply to 1).
    if (z.real() * s.real() + z.imag() * s.imag() < 0.0) s = -s;
    const Complex large = (-z - s) / 2.0;
    Complex m = 1.0 / large;
    if (m.imag() <= 0.0) m = large;
    assert(std::abs(z + m + 1.0 / m) < 1e-12 * std::max(1.0, std::abs(z)));
    return m;
}

Complex m_d(const SpectralPoint& zp, int d) {
    if (d < 3) throw DegreeTooLarge("m_d requires d >= 3");
    const Complex m = m_sc(zp);
    return 1.0 / (-zp.z() - (static_cast<double>(d) / (d - 1)) * m);
}

double km_density(double x, int d) {
    if (d < 3) throw DegreeTooLarge("km_density requires d >= 3");
    const double supp = 4.0 - x * x;
    if (supp <= 0.0) return 0.0;
    const double pref = 1.0 + 1.0 / (d - 1) - x * x / d;
    return std::sqrt(supp) / (2.0 * std::numbers::pi * pref);
}

double q_param(const SpectralPoint& z, int d) {
    if (d < 3) throw DegreeTooLarge("q_param requires d >= 3");
    return std::abs(m_sc(z)) / std::sqrt(d - 1.0);
}

Complex tree_green_entry(int dist, const SpectralPoint& z, int d) {
    if (dist < 0) throw UnrealizableGeometry("negative distance");
    const Complex hop = -m_sc(z) / std::sqrt(d - 1.0);
    return m_d(z, d) * std::pow(hop, dist);
}

Complex rooted_tree_green(int dist, int ancestor_depth, const SpectralPoint& z, int d) {
    if (dist < 0 || ancestor_depth < 0 || d < 3)
        throw UnrealizableGeometry("rooted tree parameters");
    const Complex hop = -m_sc(z) / std::sqrt(d - 1.0);
    return m_d(z, d) * (1.0 - std::pow(hop, 2 * ancestor_depth + 2)) * std::pow(hop, dist);
}

TreeExtensionSpec::TreeExtensionSpec(Subgraph g, int degree) : g0(std::move(g)), d(degree) {
    if (d < 2) throw DegreeTooLarge("tree extension requires d >= 2");
    if (!g0.empty() && !g0.graph.has_deficit())
        throw MissingDeficit("tree extension requires a deficit function");
    for (int v = 0; v < g0.size(); ++v) {
        if (g0.graph.degree(v) + g0.graph.deficit(v) > d)
            throw DegreeTooLarge("deg+g exceeds d at local vertex " + std::to_string(v));
    }
}

GreenMatrix tree_extension_green(const TreeExtensionSpec& spec, const SpectralPoint& z) {
    const int n = spec.g0.size();
    const Graph& g0 = spec.g0.graph;
    const double norm = 1.0 / std::sqrt(spec.d - 1.0);
    const Complex msc = m_sc(z);

    MatrixXc a = MatrixXc::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v : g0.neighbors(u)) a(u, v) = norm;
        const int slots = spec.d - g0.deficit(u) - g0.degree(u);
        if (slots > 0) a(u, u) = -msc * static_cast<double>(slots) / (spec.d - 1.0);
        a(u, u) -= z.z();
    }

    GreenMatrix out;
    out.z = z.z();
    out.vertices = spec.g0.vertices;
    out.entries = dense_inverse(a, out.residual);
    if (out.residual > 1e-10)
        throw SingularSystem("tree extension solve residual " + std::to_string(out.residual));
    return out;
}

Complex localized_green(const Graph& g, int i, int j, int r, const SpectralPoint& z, int d) {
    Graph base = g.target_degree() ? g : g.with_target_degree(d);
    if (*base.target_degree() != d)
        throw DegreeTooLarge("graph target degree disagrees with d");
    Subgraph er = path_neighborhood(base, i, j, r);
    if (er.empty()) return Complex(0.0, 0.0);
    GreenMatrix p = tree_extension_green(TreeExtensionSpec(er, d), z);
    return p(er.local(i), er.local(j));
}

NbwSeriesResult nbw_series_green(const TreeExtensionSpec& spec, int i, int j,
                                 const SpectralPoint& z, int max_len) {
    const Graph& g0 = spec.g0.graph;
    for (int v = 0; v < g0.size(); ++v)
        if (g0.deficit(v) != 0)
            throw InvalidData("series form requires a vanishing deficit function");
    if (i < 0 || i >= g0.size() || j < 0 || j >= g0.size())
        throw IndexOutOfRange("nbw_series_green vertex");

    const int omega = excess(g0);
    const double q = q_param(z, spec.d);
    NbwSeriesResult res;
    res.ratio = std::ldexp(q, omega);  // 2^omega q
    if (res.ratio >= 1.0) throw SeriesDiverging("2^omega q >= 1");

    const int d0 = dist(g0, i, j);
    if (d0 == Graph::kUnreachable) {
        res.value = 0.0;
        return res;  // distinct components: every term vanishes
    }

    const Complex hop = -m_sc(z) / std::sqrt(spec.d - 1.0);
    const Complex md = m_d(z, spec.d);
    // A non-backtracking walk entering an attached tree can never return, so
    // the counts in TE(G0) between vertices of G0 equal those in G0 itself.
    Complex sum = 0.0;
    Complex hop_k = std::pow(hop, d0);
    for (int k = d0; k <= max_len; ++k) {
        BigInt walks = count_nbw_big(g0, i, j, k);
        if (walks != 0) sum += static_cast<double>(walks) * hop_k;
        hop_k *= hop;
        ++res.terms;
    }
    res.value = md * sum;

    // Tail from the excess bound: walks of length d0+k-1 number at most
    // 2^(omega k), so lengths > max_len contribute at most
    // |m_d| sum_{k >= k0} (2^omega)^k q^(d0+k-1) with k0 = max(1, max_len-d0+2).
    const int k0 = std::max(1, max_len - d0 + 2);
    res.tail_bound =
        std::abs(md) * std::pow(res.ratio, k0) * std::pow(q, d0 - 1) / (1.0 - res.ratio);
    return res;
}

}  // namespace klab
