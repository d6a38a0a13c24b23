#include "klab/graph.hpp"

#include <algorithm>
#include <deque>

namespace klab {

Graph::Graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw IndexOutOfRange("negative vertex count");
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw SelfLoop("self-loop at " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw DuplicateEdge("duplicate edge");
    }
    edge_count_ = static_cast<long>(edges.size());
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adj, std::optional<int> target_degree) {
    Graph g;
    const int n = static_cast<int>(adj.size());
    long stubs = 0;
    for (int v = 0; v < n; ++v) {
        auto& a = adj[v];
        std::sort(a.begin(), a.end());
        if (!a.empty() && (a.front() < 0 || a.back() >= n))
            throw IndexOutOfRange("neighbor out of range");
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw DuplicateEdge("duplicate edge");
        if (std::binary_search(a.begin(), a.end(), v)) throw SelfLoop("self-loop at " + std::to_string(v));
        stubs += static_cast<long>(a.size());
    }
    g.adj_ = std::move(adj);
    g.edge_count_ = stubs / 2;
    if (target_degree) g = g.with_target_degree(*target_degree);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[check(u)];
    check(v);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < size(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_regular() const {
    if (!target_degree_) return false;
    for (int v = 0; v < size(); ++v)
        if (degree(v) != *target_degree_) return false;
    return true;
}

Graph Graph::with_target_degree(int d) const {
    Graph g = *this;
    g.target_degree_ = d;
    for (int v = 0; v < size(); ++v)
        if (g.degree(v) + (g.deficit_.empty() ? 0 : g.deficit_[v]) > d)
            throw DegreeTooLarge("deg+g exceeds d at vertex " + std::to_string(v));
    return g;
}

Graph Graph::with_deficit(std::vector<int> deficit) const {
    if (!target_degree_) throw MissingDeficit("attach a target degree before a deficit function");
    if (static_cast<int>(deficit.size()) != size()) throw InvalidData("deficit size mismatch");
    Graph g = *this;
    for (int v = 0; v < size(); ++v) {
        if (deficit[v] < 0 || degree(v) + deficit[v] > *target_degree_)
            throw DegreeTooLarge("deg+g exceeds d at vertex " + std::to_string(v));
    }
    g.deficit_ = std::move(deficit);
    return g;
}

int Graph::deficit(int v) const {
    check(v);
    if (!target_degree_) throw MissingDeficit("graph carries no deficit function");
    if (deficit_.empty()) return *target_degree_ - degree(v);
    return deficit_[v];
}

bool Graph::operator==(const Graph& other) const {
    if (adj_ != other.adj_ || target_degree_ != other.target_degree_) return false;
    if (!target_degree_) return true;
    for (int v = 0; v < size(); ++v)
        if (deficit(v) != other.deficit(v)) return false;
    return true;
}

int Subgraph::local(int parent_vertex) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), parent_vertex);
    if (it == vertices.end() || *it != parent_vertex) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::vector<int> dist_from(const Graph& g, const std::vector<int>& sources, int cap) {
    std::vector<int> d(g.size(), Graph::kUnreachable);
    std::deque<int> queue;
    for (int s : sources) {
        if (s < 0 || s >= g.size()) throw IndexOutOfRange("source " + std::to_string(s));
        if (d[s] == 0) continue;
        d[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (cap >= 0 && d[u] >= cap) continue;
        for (int w : g.neighbors(u)) {
            if (d[w] == Graph::kUnreachable) {
                d[w] = d[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return d;
}

int dist(const Graph& g, int u, int v) {
    if (v < 0 || v >= g.size()) throw IndexOutOfRange("vertex " + std::to_string(v));
    return dist_from(g, {u})[v];
}

namespace {

// Induced subgraph on a sorted vertex set; deficit computed by `rule`.
template <class DeficitRule>
Subgraph induced(const Graph& g, std::vector<int> verts, DeficitRule rule) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local_of(g.size(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local_of[verts[i]] = i;

    std::vector<std::vector<int>> adj(verts.size());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for (int w : g.neighbors(verts[i]))
            if (local_of[w] >= 0) adj[i].push_back(local_of[w]);

    Subgraph s;
    s.graph = Graph::from_adjacency(std::move(adj));
    s.vertices = std::move(verts);
    if (g.target_degree()) {
        s.graph = s.graph.with_target_degree(*g.target_degree());
        std::vector<int> def(s.vertices.size());
        for (int i = 0; i < static_cast<int>(s.vertices.size()); ++i)
            def[i] = rule(s.vertices[i], s.graph.degree(i));
        s.graph = s.graph.with_deficit(std::move(def));
    }
    return s;
}

Subgraph induced_restrict(const Graph& g, std::vector<int> verts) {
    return induced(g, std::move(verts), [&](int parent, int) { return g.deficit(parent); });
}

}  // namespace

Subgraph ball(const Graph& g, const std::vector<int>& centers, int r) {
    if (r < 0) throw IndexOutOfRange("negative radius");
    auto d = dist_from(g, centers, r);
    std::vector<int> verts;
    for (int v = 0; v < g.size(); ++v)
        if (d[v] != Graph::kUnreachable) verts.push_back(v);
    return induced_restrict(g, std::move(verts));
}

Subgraph ball(const Graph& g, int center, int r) {
    return ball(g, std::vector<int>{center}, r);
}

Subgraph path_neighborhood(const Graph& g, int i, int j, int r) {
    if (r < 0) throw IndexOutOfRange("negative radius");
    auto di = dist_from(g, {i});
    auto dj = (i == j) ? di : dist_from(g, {j});
    if (di[j] == Graph::kUnreachable || di[j] > r) return {};

    auto on_short_walk = [&](int u, int v) {
        if (di[u] == Graph::kUnreachable || dj[v] == Graph::kUnreachable) return false;
        return di[u] + 1 + dj[v] <= r;
    };
    std::vector<char> keep(g.size(), 0);
    keep[i] = keep[j] = 1;
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.neighbors(u))
            if (on_short_walk(u, v)) keep[u] = keep[v] = 1;

    std::vector<int> verts;
    for (int v = 0; v < g.size(); ++v)
        if (keep[v]) verts.push_back(v);

    std::vector<int> local_of(g.size(), -1);
    for (int a = 0; a < static_cast<int>(verts.size()); ++a) local_of[verts[a]] = a;
    std::vector<std::vector<int>> adj(verts.size());
    for (int a = 0; a < static_cast<int>(verts.size()); ++a) {
        int u = verts[a];
        for (int v : g.neighbors(u))
            if (local_of[v] >= 0 && (on_short_walk(u, v) || on_short_walk(v, u)))
                adj[a].push_back(local_of[v]);
    }

    Subgraph out;
    out.graph = Graph::from_adjacency(std::move(adj));
    out.vertices = std::move(verts);
    if (g.target_degree()) {
        out.graph = out.graph.with_target_degree(*g.target_degree());
        std::vector<int> def(out.vertices.size());
        for (int a = 0; a < out.size(); ++a) def[a] = g.deficit(out.vertices[a]);
        out.graph = out.graph.with_deficit(std::move(def));
    }
    return out;
}

int component_count(const Graph& g) {
    std::vector<char> seen(g.size(), 0);
    int count = 0;
    std::vector<int> stack;
    for (int v = 0; v < g.size(); ++v) {
        if (seen[v]) continue;
        ++count;
        seen[v] = 1;
        stack.push_back(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

int excess(const Graph& g) {
    return static_cast<int>(g.edge_count()) - g.size() + component_count(g);
}

int excess(const Subgraph& s) { return excess(s.graph); }

Subgraph remove_vertices(const Graph& g, const std::vector<int>& removed) {
    std::vector<char> gone(g.size(), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.size()) throw IndexOutOfRange("vertex " + std::to_string(v));
        gone[v] = 1;
    }
    std::vector<int> verts;
    for (int v = 0; v < g.size(); ++v)
        if (!gone[v]) verts.push_back(v);
    // g'(v) = g(v) + deg_G(v) - deg_G'(v)
    return induced(g, std::move(verts), [&](int parent, int new_deg) {
        return g.deficit(parent) + g.degree(parent) - new_deg;
    });
}

StructureStats structure_stats(const Graph& g, int radius, int omega) {
    StructureStats stats;
    for (int v = 0; v < g.size(); ++v) {
        Subgraph b = ball(g, v, radius);
        int ex = excess(b);
        stats.max_ball_excess = std::max(stats.max_ball_excess, ex);
        if (ex > 0) ++stats.cyclic_ball_count;
    }
    stats.excess_le_omega = stats.max_ball_excess <= omega;
    return stats;
}

std::vector<int> component_deficit_sums(const Subgraph& s) {
    if (!s.graph.has_deficit()) throw MissingDeficit("subgraph carries no deficit function");
    std::vector<char> seen(s.size(), 0);
    std::vector<int> sums;
    std::vector<int> stack;
    for (int v = 0; v < s.size(); ++v) {
        if (seen[v]) continue;
        int total = 0;
        seen[v] = 1;
        stack.push_back(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            total += s.graph.deficit(u);
            for (int w : s.graph.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        sums.push_back(total);
    }
    return sums;
}

}  // namespace klab
