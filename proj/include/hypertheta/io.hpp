#pragma once

// Text formats.
//
//   .hg   line 1 "r n m", then m lines of r strictly increasing 0-based
//         vertex indices separated by single spaces.
//   .whg  as .hg, with one extra token per edge line: the edge weight as a
//         rational ("3/4") or decimal.
//   weights  n lines, one decimal (or p/q) per line.
//
// Lines starting with '#' are comments; blank lines are skipped. Violations
// raise FormatError with the 1-based line and column.

#include <iosfwd>
#include <string>
#include <vector>

#include "hypertheta/hypergraph.hpp"
#include "hypertheta/rational.hpp"

namespace hypertheta {

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

std::vector<Rational> read_weights_exact(std::istream& in, int n);
std::vector<Rational> read_weights_file_exact(const std::string& path, int n);
WeightVector read_weights_file(const std::string& path, int n);

/// Edge list with one rational weight per edge, as read from a .whg file.
struct WeightedEdgeList {
    int r = 0;
    int n = 0;
    std::vector<Edge> edges;
    std::vector<Rational> weights;
};

WeightedEdgeList read_weighted_edges(std::istream& in);
WeightedEdgeList read_weighted_edges_file(const std::string& path);

}  // namespace hypertheta
