#pragma once

#include <vector>

#include "klab/graph.hpp"
#include "klab/rng.hpp"

namespace klab {

enum class SampleMethod {
    kAuto,              // pairing rejection when feasible, switch mixing otherwise
    kPairingRejection,  // exactly uniform over simple d-regular graphs
    kSwitchMix,         // circulant start + random switch chain (approximate)
};

struct SampleOptions {
    SampleMethod method = SampleMethod::kAuto;
    long max_attempts = 0;   // 0: derived from the expected rejection count
    long mix_sweeps = 30;    // switch attempts per edge in kSwitchMix
};

// Uniform random d-regular graph on n vertices (pairing model conditioned on
// simplicity).  Requires n*d even and d < n.  For degrees where the rejection
// probability is impractical (d >= 7), kAuto falls back to a well-mixed
// random switch chain, which is not exactly uniform.
Graph sample_regular(int n, int d, Rng& rng, const SampleOptions& options = {});

// Replaces edges {v1,v2},{v3,v4} by {v1,v4},{v2,v3}.  Throws NotSwitchable
// unless the four vertices are distinct, both edges exist, and both
// replacement edges are absent.
Graph simple_switch(const Graph& g, Edge e1, Edge e2);

// One boundary edge of the ball together with its proposed partner edge:
// {l,a} is the boundary edge (l inside, a outside) and (b,c) an oriented
// edge with both endpoints outside the ball.
struct ResamplingEntry {
    int l = 0, a = 0, b = 0, c = 0;
    bool operator==(const ResamplingEntry&) const = default;
};

// Resampling proposal for the radius-ell ball around a center vertex.
struct ResamplingData {
    int center = 0;
    int ell = 0;
    std::vector<ResamplingEntry> entries;
    std::vector<int> admissible;  // sorted index set W_S

    bool operator==(const ResamplingData&) const = default;
};

struct EnlargedSample {
    Graph graph;
    ResamplingData data;

    bool operator==(const EnlargedSample&) const = default;
};

// The admissible index set W_S: indices i whose four vertices are distinct
// and induce exactly the two edges of S_i, and whose vertex set meets every
// other [S_j] in at most one vertex.
std::vector<int> compute_admissible(const Graph& g, int center, int ell,
                                    const std::vector<ResamplingEntry>& entries);

// Enumerates the edge boundary of ball(center, ell) sorted by (l, a) and
// draws one independent uniformly random oriented edge of G^(T) per boundary
// edge.  Throws BallTooLarge when no edge survives outside the ball.
ResamplingData propose_resampling(const Graph& g, int center, int ell, Rng& rng);

// For each admissible i, replaces {l_i,a_i},{b_i,c_i} by {l_i,b_i},{a_i,c_i};
// all other indices are left in place.  The ball of the center is unchanged
// and the result is simple and d-regular.
Graph apply_resampling(const Graph& g, const ResamplingData& data);

// The involution on the enlarged space: maps (G, S) to (T_S(G), T(S)) where
// T(S) carries each admissible entry (l,a,b,c) to (l,b,a,c).  Applying it
// twice returns the input exactly.
EnlargedSample involution(const EnlargedSample& sample);

}  // namespace klab
