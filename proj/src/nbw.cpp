#include "klab/nbw.hpp"

#include <algorithm>
#include <limits>

namespace klab {

DirectedEdgeIndex::DirectedEdgeIndex(const Graph& g) {
    const int n = g.size();
    out_.assign(n, {});
    in_.assign(n, {});
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            int e = static_cast<int>(tail_.size());
            tail_.push_back(u);
            head_.push_back(v);
            out_[u].push_back(e);
            in_[v].push_back(e);
        }
    }
    succ_.assign(tail_.size(), {});
    for (int e = 0; e < count(); ++e) {
        for (int f : out_[head_[e]])
            if (head_[f] != tail_[e]) succ_[e].push_back(f);
    }
}

namespace {

template <class Counter>
Counter count_nbw_impl(const Graph& g, int i, int j, int length) {
    if (i < 0 || i >= g.size() || j < 0 || j >= g.size())
        throw IndexOutOfRange("count_nbw vertex");
    if (length < 0) throw IndexOutOfRange("negative walk length");
    if (length == 0) return Counter(i == j ? 1 : 0);

    DirectedEdgeIndex index(g);
    std::vector<Counter> walks(index.count(), Counter(0));
    for (int e : index.out_edges(i)) walks[e] = Counter(1);
    std::vector<Counter> next(index.count());
    for (int step = 1; step < length; ++step) {
        std::fill(next.begin(), next.end(), Counter(0));
        for (int e = 0; e < index.count(); ++e) {
            if (walks[e] == Counter(0)) continue;
            for (int f : index.successors(e)) {
                if constexpr (std::is_same_v<Counter, std::uint64_t>) {
                    if (next[f] > std::numeric_limits<std::uint64_t>::max() - walks[e])
                        throw Overflow("non-backtracking walk count exceeds 64 bits");
                }
                next[f] += walks[e];
            }
        }
        walks.swap(next);
    }
    Counter total(0);
    for (int e : index.in_edges(j)) {
        if constexpr (std::is_same_v<Counter, std::uint64_t>) {
            if (total > std::numeric_limits<std::uint64_t>::max() - walks[e])
                throw Overflow("non-backtracking walk count exceeds 64 bits");
        }
        total += walks[e];
    }
    return total;
}

}  // namespace

std::uint64_t count_nbw(const Graph& g, int i, int j, int length) {
    return count_nbw_impl<std::uint64_t>(g, i, j, length);
}

BigInt count_nbw_big(const Graph& g, int i, int j, int length) {
    return count_nbw_impl<BigInt>(g, i, j, length);
}

NbwBoundRecord verify_nbw_bound(const Graph& g, int i, int j, int k) {
    if (k < 1) throw IndexOutOfRange("offset k must be >= 1");
    int d0 = dist(g, i, j);
    if (d0 == Graph::kUnreachable) throw Disconnected("i and j are in different components");

    NbwBoundRecord rec;
    rec.omega = excess(ball(g, std::vector<int>{i, j}, d0 + k));
    rec.count = count_nbw(g, i, j, d0 + k - 1);
    rec.bound = BigInt(1) << (rec.omega * k);
    rec.holds = BigInt(rec.count) <= rec.bound;
    return rec;
}

EscapeBoundRecord verify_escape_bound(const Graph& g, const Subgraph& h, int i, int j,
                                      int ell, int k) {
    if (k < 1 || ell < 0) throw IndexOutOfRange("verify_escape_bound offsets");
    // E_ell(i,j,g) must be contained in h, edgewise.
    Subgraph er = path_neighborhood(g, i, j, ell);
    for (int a = 0; a < er.size(); ++a) {
        int u = er.vertices[a];
        int lu = h.local(u);
        if (lu < 0) throw PreconditionViolated("E_ell vertex not in subgraph");
        for (int b : er.graph.neighbors(a)) {
            int lv = h.local(er.vertices[b]);
            if (lv < 0 || !h.graph.has_edge(lu, lv))
                throw PreconditionViolated("E_ell edge not in subgraph");
        }
    }
    int li = h.local(i), lj = h.local(j);
    if (li < 0 || lj < 0) throw PreconditionViolated("endpoint not in subgraph");

    EscapeBoundRecord rec;
    std::uint64_t total = count_nbw(g, i, j, ell + k);
    std::uint64_t inside = count_nbw(h.graph, li, lj, ell + k);
    rec.count = total - inside;
    rec.omega = excess(ball(g, std::vector<int>{i, j}, ell + k));
    rec.bound = BigInt(1) << (rec.omega * (k + 1) + 1);
    rec.holds = BigInt(rec.count) <= rec.bound;
    return rec;
}

}  // namespace klab
