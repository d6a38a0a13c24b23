#pragma once

#include <string>

#include "klab/graph.hpp"
#include "klab/rrg.hpp"

namespace klab {

// Graph wire format: {"n": int, "edges": [[u,v],...], "d": optional int};
// edges sorted lexicographically on write, invariants enforced on read.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_file(const std::string& path);

// Resampling data for replay:
// {"center":..,"ell":..,"entries":[[l,a,b,c],...],"admissible":[...]}.
std::string resampling_to_json(const ResamplingData& data);
ResamplingData resampling_from_json(const std::string& text);

}  // namespace klab
