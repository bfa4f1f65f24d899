#include "mgnn/io/mlg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace mgnn {

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Reader {
  std::size_t line = 0;

  [[noreturn]] void fail(const std::string& reason) const { throw ParseError(line, reason); }

  std::size_t index(std::string_view tok, const char* what) const {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      fail(std::string("expected a non-negative integer for ") + what + ", got '" + std::string(tok) + "'");
    }
    return v;
  }

  double real(std::string_view tok, const char* what) const {
    const std::string s(tok);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
      fail(std::string("expected a finite number for ") + what + ", got '" + s + "'");
    }
    return v;
  }
};

std::string number(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

}  // namespace

MlgDocument parse_mlg(std::string_view text) {
  Reader rd;
  std::optional<std::size_t> n_nodes;
  std::optional<std::size_t> n_layers;
  std::vector<std::optional<bool>> directed;
  std::vector<std::string> names;
  bool in_body = false;

  std::vector<std::vector<Edge>> intra;
  std::vector<std::set<std::pair<NodeId, NodeId>>> intra_seen;
  std::vector<InterEdge> inter;
  std::set<std::pair<std::size_t, std::size_t>> inter_seen;
  std::map<NodeId, std::string> labels;
  std::vector<std::optional<std::vector<double>>> feats;
  std::optional<std::size_t> feat_width;
  std::size_t n_feats = 0;

  auto start_body = [&] {
    if (in_body) return;
    if (!n_nodes || !n_layers) rd.fail("missing 'nodes' or 'layers' header record");
    for (std::size_t a = 0; a < *n_layers; ++a) {
      if (!directed[a]) rd.fail("layer " + std::to_string(a) + " has no layerinfo record");
    }
    in_body = true;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++rd.line;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto tok = split_ws(raw);
    if (tok.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    const std::string_view kind = tok[0];

    if (kind == "nodes" || kind == "layers") {
      if (in_body) rd.fail("'" + std::string(kind) + "' after body records");
      if (tok.size() != 2) rd.fail("'" + std::string(kind) + "' takes one value");
      const std::size_t v = rd.index(tok[1], kind.data());
      if (v == 0) rd.fail("'" + std::string(kind) + "' must be positive");
      auto& slot = kind == "nodes" ? n_nodes : n_layers;
      if (slot) rd.fail("duplicate '" + std::string(kind) + "' record");
      slot = v;
      if (kind == "layers") {
        directed.assign(v, std::nullopt);
        names.assign(v, "");
      }
    } else if (kind == "layerinfo") {
      if (in_body) rd.fail("'layerinfo' after body records");
      if (!n_layers) rd.fail("'layerinfo' before 'layers'");
      if (tok.size() != 4) rd.fail("'layerinfo' takes <layer> <name> <directed|undirected>");
      const std::size_t a = rd.index(tok[1], "layer");
      if (a >= *n_layers) rd.fail("layer " + std::to_string(a) + " out of range");
      if (directed[a]) rd.fail("duplicate layerinfo for layer " + std::to_string(a));
      if (tok[3] == "directed") directed[a] = true;
      else if (tok[3] == "undirected") directed[a] = false;
      else rd.fail("expected 'directed' or 'undirected', got '" + std::string(tok[3]) + "'");
      names[a] = std::string(tok[2]);
    } else if (kind == "e") {
      start_body();
      if (tok.size() != 5 && tok.size() != 6) rd.fail("'e' takes <a> <i> <b> <j> [w]");
      const std::size_t a = rd.index(tok[1], "layer");
      const std::size_t i = rd.index(tok[2], "node");
      const std::size_t b = rd.index(tok[3], "layer");
      const std::size_t j = rd.index(tok[4], "node");
      const double w = tok.size() == 6 ? rd.real(tok[5], "weight") : 1.0;
      if (a >= *n_layers || b >= *n_layers) rd.fail("layer id out of range");
      if (i >= *n_nodes || j >= *n_nodes) {
        rd.fail("node id " + std::to_string(std::max(i, j)) + " out of range (nodes " + std::to_string(*n_nodes) + ")");
      }
      if (!(w > 0.0)) rd.fail("edge weight must be positive");
      if (intra.empty()) {
        intra.resize(*n_layers);
        intra_seen.resize(*n_layers);
      }
      if (a == b) {
        if (i == j) rd.fail("self-loop on node " + std::to_string(i));
        auto key = std::pair<NodeId, NodeId>(static_cast<NodeId>(i), static_cast<NodeId>(j));
        if (!*directed[a] && key.first > key.second) std::swap(key.first, key.second);
        if (!intra_seen[a].insert(key).second) rd.fail("duplicate edge " + std::to_string(i) + " " + std::to_string(j));
        intra[a].push_back(Edge{static_cast<NodeId>(i), static_cast<NodeId>(j), w});
      } else {
        const std::size_t u = a * *n_nodes + i;
        const std::size_t v = b * *n_nodes + j;
        if (!inter_seen.insert({std::min(u, v), std::max(u, v)}).second) rd.fail("duplicate inter-layer edge");
        inter.push_back(InterEdge{{static_cast<NodeId>(i), static_cast<LayerId>(a)},
                                  {static_cast<NodeId>(j), static_cast<LayerId>(b)}, w});
      }
    } else if (kind == "label") {
      start_body();
      if (tok.size() != 3) rd.fail("'label' takes <node> <class>");
      const std::size_t i = rd.index(tok[1], "node");
      if (i >= *n_nodes) rd.fail("node id " + std::to_string(i) + " out of range");
      if (!labels.emplace(static_cast<NodeId>(i), std::string(tok[2])).second) {
        rd.fail("duplicate label for node " + std::to_string(i));
      }
    } else if (kind == "feat") {
      start_body();
      if (tok.size() < 4) rd.fail("'feat' takes <layer> <node> <f1> ...");
      const std::size_t a = rd.index(tok[1], "layer");
      const std::size_t i = rd.index(tok[2], "node");
      if (a >= *n_layers || i >= *n_nodes) rd.fail("replica id out of range");
      const std::size_t width = tok.size() - 3;
      if (feat_width && *feat_width != width) {
        rd.fail("feature width " + std::to_string(width) + " differs from " + std::to_string(*feat_width));
      }
      feat_width = width;
      if (feats.empty()) feats.resize(*n_nodes * *n_layers);
      auto& slot = feats[a * *n_nodes + i];
      if (slot) rd.fail("duplicate features for replica");
      slot.emplace();
      for (std::size_t k = 3; k < tok.size(); ++k) slot->push_back(rd.real(tok[k], "feature"));
      ++n_feats;
    } else {
      rd.fail("unknown record '" + std::string(kind) + "'");
    }
    if (nl == text.size()) break;
  }

  start_body();
  if (intra.empty()) intra.resize(*n_layers);
  std::vector<LayerGraph> layers;
  for (std::size_t a = 0; a < *n_layers; ++a) layers.emplace_back(*n_nodes, *directed[a], std::move(intra[a]));
  std::optional<FeatureMatrix> features;
  if (n_feats > 0) {
    if (n_feats != *n_nodes * *n_layers) {
      throw ParseError(rd.line, "features given for " + std::to_string(n_feats) + " of " +
                                    std::to_string(*n_nodes * *n_layers) + " replicas");
    }
    FeatureMatrix fm{*n_nodes * *n_layers, *feat_width, {}};
    for (const auto& f : feats) fm.values.insert(fm.values.end(), f->begin(), f->end());
    features = std::move(fm);
  }
  return MlgDocument{MultilayerNetwork(*n_nodes, std::move(layers), std::move(inter), std::move(features)),
                     std::move(names), std::move(labels)};
}

MlgDocument read_mlg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_mlg(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

std::string write_mlg(const MlgDocument& doc) {
  const MultilayerNetwork& net = doc.network;
  std::ostringstream out;
  out << "nodes " << net.n_nodes() << "\n";
  out << "layers " << net.n_layers() << "\n";
  for (std::size_t a = 0; a < net.n_layers(); ++a) {
    const std::string name = a < doc.layer_names.size() && !doc.layer_names[a].empty() ? doc.layer_names[a]
                                                                                        : "l" + std::to_string(a);
    out << "layerinfo " << a << " " << name << " "
        << (net.layer(static_cast<LayerId>(a)).directed() ? "directed" : "undirected") << "\n";
  }
  auto weight = [](double w) { return w == 1.0 ? std::string() : " " + number(w); };
  for (std::size_t a = 0; a < net.n_layers(); ++a) {
    for (const Edge& e : net.layer(static_cast<LayerId>(a)).edges()) {
      out << "e " << a << " " << e.src << " " << a << " " << e.dst << weight(e.weight) << "\n";
    }
  }
  for (const InterEdge& e : net.inter_edges()) {
    out << "e " << e.src.layer << " " << e.src.node << " " << e.dst.layer << " " << e.dst.node << weight(e.weight)
        << "\n";
  }
  for (const auto& [node, cls] : doc.labels) out << "label " << node << " " << cls << "\n";
  if (net.features()) {
    const FeatureMatrix& f = *net.features();
    for (std::size_t r = 0; r < f.rows; ++r) {
      const ReplicaId id = unflatten(r, net.n_nodes());
      out << "feat " << id.layer << " " << id.node;
      for (double v : f.row(r)) out << " " << number(v);
      out << "\n";
    }
  }
  return out.str();
}

void write_mlg_file(const std::string& path, const MlgDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << write_mlg(doc);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

MlgDocument make_document(MultilayerNetwork net) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < net.n_layers(); ++a) names.push_back("l" + std::to_string(a));
  return MlgDocument{std::move(net), std::move(names), {}};
}

ClassLabels class_labels(const MlgDocument& doc) {
  const std::size_t n = doc.network.n_nodes();
  if (doc.labels.size() != n) {
    for (NodeId i = 0; i < n; ++i) {
      if (!doc.labels.count(i)) throw std::invalid_argument("node " + std::to_string(i) + " has no label");
    }
  }
  std::set<std::string> distinct;
  for (const auto& kv : doc.labels) distinct.insert(kv.second);
  ClassLabels out;
  out.names.assign(distinct.begin(), distinct.end());
  out.ids.resize(n);
  for (const auto& [node, cls] : doc.labels) {
    out.ids[node] = static_cast<std::uint32_t>(std::lower_bound(out.names.begin(), out.names.end(), cls) -
                                               out.names.begin());
  }
  return out;
}

}  // namespace mgnn
