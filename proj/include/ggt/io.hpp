#pragma once

#include "ggt/cayley.hpp"
#include "ggt/entourage.hpp"
#include "ggt/graph.hpp"

#include <iosfwd>
#include <string>

namespace ggt {

/// Structured-text documents, versioned with a "format" field:
///   ggt-graph-1      vertices, edges, optional labels and norms
///   ggt-entourage-1  vertices, off-diagonal pairs
/// Serialization is deterministic (fixed key order, sorted edge lists).

std::string graph_to_json(const Graph &g, const std::vector<int> &norm = {});
Graph graph_from_json(const std::string &text);

/// Ball export is the graph document with norms plus group metadata.
std::string ball_to_json(const CayleyBall &ball);

std::string entourage_to_json(const Entourage &u);
Entourage entourage_from_json(const std::string &text);

/// Norm annotations of a graph document ("norm" field), when present.
std::vector<int> norms_from_json(const std::string &text);

/// DOT description, optionally labelling edges with weights.
std::string graph_to_dot(const Graph &g, const EdgeWeights &weights = {});

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace ggt
