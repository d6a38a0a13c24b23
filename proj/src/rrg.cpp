#include "klab/rrg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace klab {

namespace {

// Expected number of pairing attempts until a simple outcome,
// exp(lambda + lambda^2) with lambda = (d-1)/2.
double expected_attempts(int d) {
    const double lambda = (d - 1) / 2.0;
    return std::exp(lambda + lambda * lambda);
}

bool try_pairing(int n, int d, Rng& rng, std::vector<std::vector<int>>& adj,
                 std::vector<int>& stubs) {
    stubs.resize(static_cast<std::size_t>(n) * d);
    for (std::size_t s = 0; s < stubs.size(); ++s) stubs[s] = static_cast<int>(s) / d;
    shuffle_vector(stubs, rng);
    adj.assign(n, {});
    for (std::size_t s = 0; s + 1 < stubs.size(); s += 2) {
        int u = stubs[s], v = stubs[s + 1];
        if (u == v) return false;
        auto& au = adj[u];
        if (std::find(au.begin(), au.end(), v) != au.end()) return false;
        au.push_back(v);
        adj[v].push_back(u);
    }
    return true;
}

Graph sample_by_rejection(int n, int d, Rng& rng, long max_attempts) {
    std::vector<std::vector<int>> adj;
    std::vector<int> stubs;
    for (long attempt = 0; attempt < max_attempts; ++attempt) {
        if (try_pairing(n, d, rng, adj, stubs))
            return Graph::from_adjacency(std::move(adj), d);
    }
    throw RetryBudgetExceeded("no simple pairing in " + std::to_string(max_attempts) +
                              " attempts (n=" + std::to_string(n) +
                              ", d=" + std::to_string(d) + ")");
}

// Deterministic d-regular circulant start for the switch chain.
std::vector<std::vector<int>> circulant_adjacency(int n, int d) {
    std::vector<std::vector<int>> adj(n);
    auto connect = [&](int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    for (int k = 1; k <= d / 2; ++k)
        for (int v = 0; v < n; ++v) connect(v, (v + k) % n);
    if (d % 2 == 1)
        for (int v = 0; v < n / 2; ++v) connect(v, v + n / 2);
    return adj;
}

bool adj_has(const std::vector<int>& a, int v) {
    return std::find(a.begin(), a.end(), v) != a.end();
}

void adj_replace(std::vector<int>& a, int old_v, int new_v) {
    *std::find(a.begin(), a.end(), old_v) = new_v;
}

Graph sample_by_switch_mix(int n, int d, Rng& rng, long sweeps) {
    auto adj = circulant_adjacency(n, d);
    std::vector<Edge> edge_list;
    edge_list.reserve(static_cast<std::size_t>(n) * d / 2);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edge_list.emplace_back(u, v);

    const long attempts = sweeps * static_cast<long>(edge_list.size());
    for (long t = 0; t < attempts; ++t) {
        auto i1 = uniform_below(rng, edge_list.size());
        auto i2 = uniform_below(rng, edge_list.size());
        auto [v1, v2] = edge_list[i1];
        auto [v3, v4] = edge_list[i2];
        if (uniform_below(rng, 2) == 1) std::swap(v3, v4);
        if (v1 == v3 || v1 == v4 || v2 == v3 || v2 == v4) continue;
        // {v1,v2},{v3,v4} -> {v1,v4},{v2,v3}
        if (adj_has(adj[v1], v4) || adj_has(adj[v2], v3)) continue;
        adj_replace(adj[v1], v2, v4);
        adj_replace(adj[v2], v1, v3);
        adj_replace(adj[v3], v4, v2);
        adj_replace(adj[v4], v3, v1);
        edge_list[i1] = {std::min(v1, v4), std::max(v1, v4)};
        edge_list[i2] = {std::min(v2, v3), std::max(v2, v3)};
    }
    return Graph::from_adjacency(std::move(adj), d);
}

}  // namespace

Graph sample_regular(int n, int d, Rng& rng, const SampleOptions& options) {
    if (d < 1) throw DegreeTooLarge("degree must be positive");
    if (d >= n) throw DegreeTooLarge("d must be smaller than n");
    if ((static_cast<long>(n) * d) % 2 != 0) throw OddProduct("n*d must be even");

    SampleMethod method = options.method;
    if (method == SampleMethod::kAuto) {
        method = expected_attempts(d) <= 2e4 ? SampleMethod::kPairingRejection
                                             : SampleMethod::kSwitchMix;
    }
    if (method == SampleMethod::kPairingRejection) {
        long budget = options.max_attempts;
        if (budget <= 0) budget = 100 + static_cast<long>(60.0 * expected_attempts(d));
        return sample_by_rejection(n, d, rng, budget);
    }
    return sample_by_switch_mix(n, d, rng, options.mix_sweeps);
}

Graph simple_switch(const Graph& g, Edge e1, Edge e2) {
    auto [v1, v2] = e1;
    auto [v3, v4] = e2;
    std::set<int> distinct = {v1, v2, v3, v4};
    if (distinct.size() != 4) throw NotSwitchable("vertices are not distinct");
    if (!g.has_edge(v1, v2) || !g.has_edge(v3, v4)) throw NotSwitchable("edge missing");
    if (g.has_edge(v1, v4) || g.has_edge(v2, v3)) throw NotSwitchable("replacement edge present");

    std::vector<std::vector<int>> adj(g.size());
    for (int v = 0; v < g.size(); ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    adj_replace(adj[v1], v2, v4);
    adj_replace(adj[v2], v1, v3);
    adj_replace(adj[v3], v4, v2);
    adj_replace(adj[v4], v3, v1);
    return Graph::from_adjacency(std::move(adj), g.target_degree());
}

namespace {

// Vertex set [S_i] of an entry (the two edges may share vertices in invalid
// proposals; admissibility handles that).
std::vector<int> entry_vertices(const ResamplingEntry& e) {
    std::vector<int> v = {e.l, e.a, e.b, e.c};
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int shared_vertices(const std::vector<int>& x, const std::vector<int>& y) {
    int count = 0;
    std::size_t p = 0, q = 0;
    while (p < x.size() && q < y.size()) {
        if (x[p] < y[q])
            ++p;
        else if (x[p] > y[q])
            ++q;
        else {
            ++count;
            ++p;
            ++q;
        }
    }
    return count;
}

std::vector<char> ball_mask(const Graph& g, int center, int ell) {
    auto d = dist_from(g, {center}, ell);
    std::vector<char> in(g.size(), 0);
    for (int v = 0; v < g.size(); ++v)
        if (d[v] != Graph::kUnreachable) in[v] = 1;
    return in;
}

// Boundary edges (l inside, a outside), sorted by (l, a).
std::vector<Edge> boundary_edges(const Graph& g, const std::vector<char>& in_ball) {
    std::vector<Edge> out;
    for (int l = 0; l < g.size(); ++l) {
        if (!in_ball[l]) continue;
        for (int a : g.neighbors(l))
            if (!in_ball[a]) out.emplace_back(l, a);
    }
    return out;  // scanning order is already (l, a) lexicographic
}

void validate_resampling(const Graph& g, const ResamplingData& data,
                         const std::vector<char>& in_ball) {
    auto expected = boundary_edges(g, in_ball);
    if (expected.size() != data.entries.size())
        throw InvalidData("boundary edge count mismatch");
    std::vector<Edge> got;
    got.reserve(data.entries.size());
    for (const auto& e : data.entries) {
        if (e.l < 0 || e.l >= g.size() || e.a < 0 || e.a >= g.size() || e.b < 0 ||
            e.b >= g.size() || e.c < 0 || e.c >= g.size())
            throw InvalidData("entry vertex out of range");
        if (!in_ball[e.l] || in_ball[e.a]) throw InvalidData("boundary edge not (inside,outside)");
        if (in_ball[e.b] || in_ball[e.c]) throw InvalidData("(b,c) endpoint inside the ball");
        if (!g.has_edge(e.l, e.a)) throw InvalidData("boundary edge missing from graph");
        if (!g.has_edge(e.b, e.c)) throw InvalidData("(b,c) is not an edge");
        got.emplace_back(e.l, e.a);
    }
    std::sort(got.begin(), got.end());
    if (got != expected) throw InvalidData("entries do not enumerate the edge boundary");
    auto admissible = compute_admissible(g, data.center, data.ell, data.entries);
    if (admissible != data.admissible) throw InvalidData("admissible set mismatch");
}

}  // namespace

std::vector<int> compute_admissible(const Graph& g, int /*center*/, int /*ell*/,
                                    const std::vector<ResamplingEntry>& entries) {
    const int mu = static_cast<int>(entries.size());
    std::vector<std::vector<int>> verts(mu);
    for (int i = 0; i < mu; ++i) verts[i] = entry_vertices(entries[i]);

    std::vector<int> admissible;
    for (int i = 0; i < mu; ++i) {
        const auto& e = entries[i];
        bool ok = verts[i].size() == 4;
        // I_i: the four vertices induce exactly the two edges of S_i.
        ok = ok && g.has_edge(e.l, e.a) && g.has_edge(e.b, e.c);
        ok = ok && !g.has_edge(e.l, e.b) && !g.has_edge(e.l, e.c) && !g.has_edge(e.a, e.b) &&
             !g.has_edge(e.a, e.c);
        // J_i: no interference with any other proposed switch.
        for (int j = 0; ok && j < mu; ++j)
            if (j != i && shared_vertices(verts[i], verts[j]) > 1) ok = false;
        if (ok) admissible.push_back(i);
    }
    return admissible;
}

ResamplingData propose_resampling(const Graph& g, int center, int ell, Rng& rng) {
    if (center < 0 || center >= g.size()) throw IndexOutOfRange("center vertex");
    if (ell < 0) throw IndexOutOfRange("negative radius");
    if (!g.target_degree() || !g.is_regular())
        throw InvalidData("resampling requires a d-regular graph");

    auto in_ball = ball_mask(g, center, ell);
    // Oriented edges of G^(T), in deterministic order.
    std::vector<Edge> outside;
    for (int u = 0; u < g.size(); ++u) {
        if (in_ball[u]) continue;
        for (int v : g.neighbors(u))
            if (!in_ball[v] && u < v) outside.emplace_back(u, v);
    }
    if (outside.empty()) throw BallTooLarge("no edges remain outside the ball");

    ResamplingData data;
    data.center = center;
    data.ell = ell;
    for (auto [l, a] : boundary_edges(g, in_ball)) {
        auto pick = uniform_below(rng, 2 * outside.size());
        auto [u, v] = outside[pick / 2];
        ResamplingEntry entry;
        entry.l = l;
        entry.a = a;
        entry.b = (pick % 2 == 0) ? u : v;
        entry.c = (pick % 2 == 0) ? v : u;
        data.entries.push_back(entry);
    }
    data.admissible = compute_admissible(g, center, ell, data.entries);
    return data;
}

Graph apply_resampling(const Graph& g, const ResamplingData& data) {
    if (data.center < 0 || data.center >= g.size()) throw InvalidData("center out of range");
    if (!g.target_degree() || !g.is_regular())
        throw InvalidData("resampling requires a d-regular graph");
    auto in_ball = ball_mask(g, data.center, data.ell);
    validate_resampling(g, data, in_ball);

    std::vector<std::vector<int>> adj(g.size());
    for (int v = 0; v < g.size(); ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    for (int i : data.admissible) {
        const auto& e = data.entries[i];
        // {l,a},{b,c} -> {l,b},{a,c}
        adj_replace(adj[e.l], e.a, e.b);
        adj_replace(adj[e.a], e.l, e.c);
        adj_replace(adj[e.b], e.c, e.l);
        adj_replace(adj[e.c], e.b, e.a);
    }
    Graph out = Graph::from_adjacency(std::move(adj), g.target_degree());
    if (!out.is_regular()) throw InvalidData("switched graph is not regular");
    return out;
}

EnlargedSample involution(const EnlargedSample& sample) {
    EnlargedSample out;
    out.graph = apply_resampling(sample.graph, sample.data);
    out.data = sample.data;
    for (int i : sample.data.admissible) {
        auto& e = out.data.entries[i];
        std::swap(e.a, e.b);  // (l,a,b,c) -> (l,b,a,c)
    }
    auto w = compute_admissible(out.graph, out.data.center, out.data.ell, out.data.entries);
    if (w != sample.data.admissible)
        throw InvalidData("admissible set not preserved by the switch");
    return out;
}

}  // namespace klab
