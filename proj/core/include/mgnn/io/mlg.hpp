#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgnn/mlgraph/multilayer_network.hpp"

namespace mgnn {

/*
  .mlg text format, one record per line, '#' starts a comment:

    nodes <N>
    layers <L>
    layerinfo <a> <name> <directed|undirected>     once per layer
    e <a> <i> <b> <j> [w]                          intra iff a == b
    label <i> <class>
    feat <a> <i> <f1> ... <fF>

  Ids are 0-based; weights default to 1. All header records (nodes, layers,
  every layerinfo) precede the first body record. Inter-layer edges are
  undirected. If any feat record is present, every replica needs one.
*/
struct MlgDocument {
  MultilayerNetwork network;
  std::vector<std::string> layer_names;
  std::map<NodeId, std::string> labels;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

MlgDocument parse_mlg(std::string_view text);
MlgDocument read_mlg_file(const std::string& path);

/// Canonical rendering: header, then intra edges layer by layer in stored
/// order, inter edges, labels by node, features by replica.
std::string write_mlg(const MlgDocument& doc);
void write_mlg_file(const std::string& path, const MlgDocument& doc);

/// Layer names "l0", "l1", ... and no labels.
MlgDocument make_document(MultilayerNetwork net);

/// Class strings in sorted order; ids index into it.
struct ClassLabels {
  std::vector<std::string> names;
  std::vector<std::uint32_t> ids;  // per node
};

/// Throws std::invalid_argument if any node lacks a label.
ClassLabels class_labels(const MlgDocument& doc);

}  // namespace mgnn
