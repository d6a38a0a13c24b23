#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "klab/graph.hpp"

namespace klab {

using BigInt = boost::multiprecision::cpp_int;

// Oriented-edge enumeration with the non-backtracking successor relation
// (u,v) -> (v,w), w != u.  The enumeration is stable for identical input:
// oriented edge ids are assigned scanning vertices upward.
class DirectedEdgeIndex {
public:
    explicit DirectedEdgeIndex(const Graph& g);

    int count() const { return static_cast<int>(tail_.size()); }
    int tail(int e) const { return tail_[e]; }
    int head(int e) const { return head_[e]; }
    // Oriented edges leaving / entering a vertex.
    const std::vector<int>& out_edges(int v) const { return out_[v]; }
    const std::vector<int>& in_edges(int v) const { return in_[v]; }
    // Successors of e under the non-backtracking relation.
    const std::vector<int>& successors(int e) const { return succ_[e]; }

private:
    std::vector<int> tail_, head_;
    std::vector<std::vector<int>> out_, in_, succ_;
};

// Exact number of non-backtracking walks from i to j of the given length,
// via repeated application of the transfer relation.  Length 0 counts [i==j].
// Throws Overflow if any intermediate count exceeds 64 bits.
std::uint64_t count_nbw(const Graph& g, int i, int j, int length);

// Arbitrary-precision variant; never overflows.
BigInt count_nbw_big(const Graph& g, int i, int j, int length);

struct NbwBoundRecord {
    std::uint64_t count = 0;
    BigInt bound;
    int omega = 0;
    bool holds = false;
};

// Checks count(dist+k-1) <= 2^(omega*k), with omega the excess of
// ball({i,j}, dist+k).
NbwBoundRecord verify_nbw_bound(const Graph& g, int i, int j, int k);

struct EscapeBoundRecord {
    std::uint64_t count = 0;
    BigInt bound;
    int omega = 0;
    bool holds = false;
};

// Counts length-(ell+k) non-backtracking walks from i to j that are not
// contained in h, against the bound 2^(omega*(k+1)+1).  Requires
// path_neighborhood(g,i,j,ell) to be a subgraph of h.
EscapeBoundRecord verify_escape_bound(const Graph& g, const Subgraph& h, int i, int j,
                                      int ell, int k);

}  // namespace klab
