#pragma once

#include <complex>

#include "klab/graph.hpp"
#include "klab/green_matrix.hpp"

namespace klab {

// Stieltjes transform of the semicircle law: the root of m^2 + z m + 1 = 0
// with Im m > 0.  Satisfies z = -(m + 1/m) and |m| <= 1.
Complex m_sc(const SpectralPoint& z);

// Stieltjes transform of the Kesten-McKay law,
// m_d = 1 / (-z - d (d-1)^{-1} m_sc(z)).
Complex m_d(const SpectralPoint& z, int d);

// Density of the rescaled Kesten-McKay law on [-2,2].
double km_density(double x, int d);

// q(z) = |m_sc(z)| / sqrt(d-1); the per-hop decay rate of tree Green's
// function entries.
double q_param(const SpectralPoint& z, int d);

// Green's function entry of the infinite d-regular tree at the given
// distance: m_d * (-m_sc/sqrt(d-1))^dist.
Complex tree_green_entry(int dist, const SpectralPoint& z, int d);

// Green's function entry of the rooted d-regular tree with root degree d-1,
// parameterized by the distance between the vertices and the depth of their
// common ancestor.  At the root diagonal this equals m_sc exactly.
Complex rooted_tree_green(int dist, int ancestor_depth, const SpectralPoint& z, int d);

// A finite graph with deficit function, to be extended by attaching rooted
// trees at every extensible vertex.
struct TreeExtensionSpec {
    Subgraph g0;
    int d = 0;

    TreeExtensionSpec(Subgraph g, int degree);
};

// Green's function P(G0) of the tree extension, computed as (H2 - z)^{-1}
// where H2 carries a self-loop of weight -m_sc (d-g(v)-deg(v)) / sqrt(d-1)
// at every extensible vertex.
GreenMatrix tree_extension_green(const TreeExtensionSpec& spec, const SpectralPoint& z);

// Localized Green's function P_ij(E_r(i,j,G), z); exactly 0 when dist(i,j) > r.
Complex localized_green(const Graph& g, int i, int j, int r, const SpectralPoint& z, int d);

struct NbwSeriesResult {
    Complex value;
    double tail_bound = 0.0;
    int terms = 0;       // number of walk lengths included
    double ratio = 0.0;  // 2^omega q; the series is summable when < 1
};

// Non-backtracking-walk series for P_ij on a deficit-free spec:
//   m_d * sum_k #NBW(i->j, length k) (-m_sc/sqrt(d-1))^k,
// truncated at max_len, with the tail bounded via the excess-based walk
// counts.  Throws SeriesDiverging when 2^omega q >= 1.
NbwSeriesResult nbw_series_green(const TreeExtensionSpec& spec, int i, int j,
                                 const SpectralPoint& z, int max_len);

}  // namespace klab
