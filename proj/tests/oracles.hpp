// Test-only reference computations, kept independent of the library paths
// they are used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "klab/graph.hpp"
#include "klab/rng.hpp"

namespace oracle {

using Complex = std::complex<double>;

// ---------------------------------------------------------------- quadrature

template <class F, class Value>
Value simpson_rec(const F& f, double a, double b, Value fa, Value fm, Value fb, Value whole,
                  double tol, int depth) {
    const double m = 0.5 * (a + b);
    const Value flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
    const Value left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const Value right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

// Adaptive Simpson; Value may be double or std::complex<double>.
template <class F>
auto integrate(const F& f, double a, double b, double tol = 1e-10, int depth = 48) {
    auto fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    auto whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Kesten-McKay density evaluated from its formula, written out independently.
inline double km_density_ref(double x, int d) {
    if (x * x >= 4.0) return 0.0;
    const double denom = 1.0 + 1.0 / (d - 1.0) - x * x / d;
    return std::sqrt(4.0 - x * x) / (2.0 * 3.14159265358979323846 * denom);
}

// ------------------------------------------------------------ walks and NBWs

// All walks from i to j of length exactly len, enumerated by depth-first
// search; `edge_used` records which edges appear on at least one such walk.
inline std::uint64_t dfs_walks(const klab::Graph& g, int i, int j, int len,
                               std::set<std::pair<int, int>>* edge_used = nullptr,
                               bool non_backtracking = false) {
    std::uint64_t count = 0;
    std::vector<int> walk = {i};
    std::function<void(int, int)> go = [&](int v, int steps) {
        if (steps == len) {
            if (v == j) {
                ++count;
                if (edge_used)
                    for (std::size_t t = 0; t + 1 < walk.size(); ++t)
                        edge_used->insert({std::min(walk[t], walk[t + 1]),
                                           std::max(walk[t], walk[t + 1])});
            }
            return;
        }
        for (int w : g.neighbors(v)) {
            if (non_backtracking && walk.size() >= 2 && w == walk[walk.size() - 2]) continue;
            walk.push_back(w);
            go(w, steps + 1);
            walk.pop_back();
        }
    };
    go(i, 0);
    return count;
}

inline std::uint64_t dfs_nbw_count(const klab::Graph& g, int i, int j, int len) {
    return dfs_walks(g, i, j, len, nullptr, true);
}

// Edge set of the union of all i-j walks of length <= r (the E_r oracle).
inline std::set<std::pair<int, int>> walk_edge_union(const klab::Graph& g, int i, int j, int r) {
    std::set<std::pair<int, int>> edges;
    for (int len = 1; len <= r; ++len) dfs_walks(g, i, j, len, &edges, false);
    return edges;
}

// --------------------------------------------------------- truncated trees

// Green's function entries of depth-limited regular trees by the leaf-to-root
// Schur recursion; no Stieltjes transforms involved.
//   t_m: diagonal entry of a vertex with m levels below it, parent removed.
inline std::vector<Complex> tree_ladder(Complex z, int depth) {
    std::vector<Complex> t(depth + 1);
    t[0] = -1.0 / z;
    for (int m = 1; m <= depth; ++m) t[m] = -1.0 / (z + t[m - 1]);
    return t;
}

// Entry G_{o,v} of the depth-`depth` truncation of the infinite d-regular
// tree, where o is the center and v sits at the given distance from o.
inline Complex truncated_tree_entry(Complex z, int d, int depth, int distance) {
    auto t = tree_ladder(z, depth);
    Complex g = -1.0 / (z + (static_cast<double>(d) / (d - 1.0)) * t[depth - 1]);
    const double root = std::sqrt(d - 1.0);
    for (int k = 1; k <= distance; ++k) g *= -t[depth - k] / root;
    return g;
}

// Root diagonal of the depth-limited rooted tree with root degree d-1.
inline Complex truncated_rooted_diag(Complex z, int /*d*/, int depth) {
    return tree_ladder(z, depth)[depth];
}

// ------------------------------------------------- labeled regular graphs

// Exhaustive enumeration of all labeled d-regular simple graphs on n
// vertices (n small).  Returns each graph as a sorted edge list.
inline std::vector<std::vector<klab::Edge>> enumerate_regular(int n, int d) {
    std::vector<klab::Edge> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    const int m = static_cast<int>(all_pairs.size());
    const int want = n * d / 2;
    std::vector<std::vector<klab::Edge>> found;
    std::vector<klab::Edge> chosen;
    std::vector<int> deg(n, 0);
    std::function<void(int)> go = [&](int from) {
        if (static_cast<int>(chosen.size()) == want) {
            for (int v = 0; v < n; ++v)
                if (deg[v] != d) return;
            found.push_back(chosen);
            return;
        }
        if (m - from < want - static_cast<int>(chosen.size())) return;
        for (int k = from; k < m; ++k) {
            auto [u, v] = all_pairs[k];
            if (deg[u] >= d || deg[v] >= d) continue;
            chosen.push_back(all_pairs[k]);
            ++deg[u];
            ++deg[v];
            go(k + 1);
            chosen.pop_back();
            --deg[u];
            --deg[v];
        }
    };
    go(0);
    return found;
}

inline std::string edge_key(const std::vector<klab::Edge>& edges) {
    std::string key;
    for (auto [u, v] : edges) {
        key += static_cast<char>('a' + u);
        key += static_cast<char>('a' + v);
    }
    return key;
}

// ------------------------------------------------------------- statistics

// Upper-tail chi-square p-value via the regularized incomplete gamma
// function Q(k/2, x/2), evaluated by series / continued fraction.
inline double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) return 1.0;
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        // P by series, return 1-P.
        double term = 1.0 / a, sum = term;
        for (int n = 1; n < 600; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) break;
        }
        const double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        return 1.0 - p;
    }
    // Q by Lentz continued fraction.
    double b = x + 1.0 - a, c = 1e300, dd = 1.0 / b, h = dd;
    for (int n = 1; n < 600; ++n) {
        const double an = -n * (n - a);
        b += 2.0;
        dd = an * dd + b;
        if (std::abs(dd) < 1e-30) dd = 1e-30;
        c = b + an / c;
        if (std::abs(c) < 1e-30) c = 1e-30;
        dd = 1.0 / dd;
        const double delta = dd * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

inline double chi_square_pvalue(const std::vector<long>& observed, double expected_each) {
    double stat = 0.0;
    for (long o : observed) {
        const double diff = o - expected_each;
        stat += diff * diff / expected_each;
    }
    return gamma_q(0.5 * (observed.size() - 1), 0.5 * stat);
}

// --------------------------------------------------------------- utilities

// Random connected graph with excess exactly `extra` (a random tree plus
// `extra` additional edges), all degrees <= max_degree.
inline klab::Graph random_bounded_excess_graph(int n, int extra, int max_degree,
                                               klab::Rng& rng) {
    std::vector<klab::Edge> edges;
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
        for (int tries = 0; tries < 200; ++tries) {
            int u = static_cast<int>(klab::uniform_below(rng, v));
            if (deg[u] < max_degree - 1) {
                edges.emplace_back(u, v);
                ++deg[u];
                ++deg[v];
                break;
            }
        }
    }
    auto has = [&](int u, int v) {
        return std::find(edges.begin(), edges.end(),
                         std::make_pair(std::min(u, v), std::max(u, v))) != edges.end();
    };
    int added = 0;
    for (int tries = 0; tries < 2000 && added < extra; ++tries) {
        int u = static_cast<int>(klab::uniform_below(rng, n));
        int v = static_cast<int>(klab::uniform_below(rng, n));
        if (u == v || has(u, v) || deg[u] >= max_degree || deg[v] >= max_degree) continue;
        edges.emplace_back(std::min(u, v), std::max(u, v));
        ++deg[u];
        ++deg[v];
        ++added;
    }
    return klab::Graph(n, edges);
}

}  // namespace oracle
