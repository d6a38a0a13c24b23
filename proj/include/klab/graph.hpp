#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "klab/errors.hpp"

namespace klab {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
//
// A graph may carry a target degree d and a deficit function g.  The deficit
// g(v) measures how far the allowed degree of v falls short of d: a vertex is
// extensible iff deg(v) < d - g(v).  When no explicit deficit is stored, the
// default g(v) = d - deg(v) applies (no vertex extensible).  Instances are
// immutable after construction and safe to share across threads.
class Graph {
public:
    static constexpr int kUnreachable = -1;

    Graph() = default;

    // Validates endpoints, rejects self-loops and duplicate edges.
    Graph(int n, const std::vector<Edge>& edges);

    static Graph from_adjacency(std::vector<std::vector<int>> adj,
                                std::optional<int> target_degree = std::nullopt);

    int size() const { return static_cast<int>(adj_.size()); }
    long edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
    std::span<const int> neighbors(int v) const {
        const auto& a = adj_[check(v)];
        return {a.data(), a.size()};
    }
    bool has_edge(int u, int v) const;
    // All edges with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    std::optional<int> target_degree() const { return target_degree_; }
    bool is_regular() const;

    // Returns a copy with target degree d attached; the default deficit
    // g(v) = d - deg(v) applies unless an explicit deficit is set.
    Graph with_target_degree(int d) const;
    Graph with_deficit(std::vector<int> deficit) const;

    bool has_deficit() const { return target_degree_.has_value(); }
    // g(v); throws MissingDeficit when no target degree is attached.
    int deficit(int v) const;
    bool extensible(int v) const { return degree(v) < *target_degree_ - deficit(v); }

    // Structural equality; stored and derived deficits compare as equal.
    bool operator==(const Graph& other) const;

private:
    int check(int v) const {
        if (v < 0 || v >= size()) throw IndexOutOfRange("vertex " + std::to_string(v));
        return v;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> deficit_;  // explicit deficit; empty means default d - deg
    std::optional<int> target_degree_;
    long edge_count_ = 0;
};

// Induced subgraph with its original vertex labels.  graph is relabeled to
// 0..k-1; vertices[i] is the parent label of local vertex i (ascending).
struct Subgraph {
    Graph graph;
    std::vector<int> vertices;

    int size() const { return graph.size(); }
    bool empty() const { return graph.size() == 0; }
    // Local index of a parent vertex, or -1 if absent.
    int local(int parent_vertex) const;
};

// BFS geodesic distance; Graph::kUnreachable across components.
int dist(const Graph& g, int u, int v);

// Distances from a source set; entries are kUnreachable where not reached.
std::vector<int> dist_from(const Graph& g, const std::vector<int>& sources,
                           int cap = -1);

// Induced subgraph on {j : dist(X, j) <= r}, deficit inherited by restriction.
Subgraph ball(const Graph& g, const std::vector<int>& centers, int r);
Subgraph ball(const Graph& g, int center, int r);

// Smallest subgraph containing all walks of length <= r between i and j:
// edge {u,v} is kept iff dist(i,u)+1+dist(v,j) <= r or dist(i,v)+1+dist(u,j) <= r.
// Empty when dist(i,j) > r; otherwise the vertex set always includes i and j.
Subgraph path_neighborhood(const Graph& g, int i, int j, int r);

// #edges - #vertices + #components; zero exactly for forests.
int excess(const Graph& g);
int excess(const Subgraph& s);

// Induced graph on the complement of `removed`, with the deficit update
// g'(v) = g(v) + deg_G(v) - deg_G'(v).
Subgraph remove_vertices(const Graph& g, const std::vector<int>& removed);

struct StructureStats {
    int max_ball_excess = 0;
    long cyclic_ball_count = 0;
    bool excess_le_omega = true;
};

// Radius-R neighborhood statistics: max excess over all vertex balls and the
// number of vertices whose ball contains a cycle.
StructureStats structure_stats(const Graph& g, int radius, int omega);

// Sum of the deficit function over each connected component, in discovery
// order (scan from local vertex 0 upward).
std::vector<int> component_deficit_sums(const Subgraph& s);

int component_count(const Graph& g);

}  // namespace klab
