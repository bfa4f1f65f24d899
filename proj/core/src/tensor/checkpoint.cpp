#include "mgnn/tensor/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mgnn {

namespace {

void write_u64(std::ostream& out, std::uint64_t v) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(bytes, 8);
}

std::uint64_t read_u64(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw std::runtime_error("checkpoint: truncated value block");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

}  // namespace

void write_checkpoint(std::ostream& out, const ParameterStore& store) {
  out << kCheckpointMagic << '\n';
  for (const Parameter& p : store.parameters()) {
    out << p.name << '\n';
    const Shape& shape = p.tensor.shape();
    out << shape.size();
    for (std::size_t d : shape) out << ' ' << d;
    out << '\n';
    auto values = p.tensor.values();
    write_u64(out, values.size());
    for (double v : values) write_u64(out, std::bit_cast<std::uint64_t>(v));
  }
  if (!out) throw std::runtime_error("checkpoint: write failed");
}

std::vector<CheckpointEntry> read_checkpoint(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCheckpointMagic) {
    throw std::runtime_error("checkpoint: missing '" + std::string(kCheckpointMagic) + "' header");
  }
  std::vector<CheckpointEntry> entries;
  while (std::getline(in, line)) {
    CheckpointEntry e;
    e.name = line;
    std::string shape_line;
    if (!std::getline(in, shape_line)) throw std::runtime_error("checkpoint: missing shape for " + e.name);
    std::istringstream ss(shape_line);
    std::size_t rank = 0;
    if (!(ss >> rank)) throw std::runtime_error("checkpoint: malformed shape for " + e.name);
    e.shape.resize(rank);
    for (std::size_t& d : e.shape) {
      if (!(ss >> d)) throw std::runtime_error("checkpoint: malformed shape for " + e.name);
    }
    const std::uint64_t count = read_u64(in);
    if (count != shape_numel(e.shape)) throw std::runtime_error("checkpoint: length prefix disagrees with shape for " + e.name);
    e.values.resize(count);
    for (double& v : e.values) v = std::bit_cast<double>(read_u64(in));
    entries.push_back(std::move(e));
  }
  return entries;
}

void load_checkpoint(std::istream& in, ParameterStore& store) {
  auto entries = read_checkpoint(in);
  if (entries.size() != store.size()) {
    throw std::runtime_error("checkpoint has " + std::to_string(entries.size()) + " parameters, model has " +
                             std::to_string(store.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Parameter& p = store.parameters()[i];
    if (entries[i].name != p.name || entries[i].shape != p.tensor.shape()) {
      throw std::runtime_error("checkpoint entry '" + entries[i].name + "' " + shape_string(entries[i].shape) +
                               " does not match parameter '" + p.name + "' " + shape_string(p.tensor.shape()));
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto dst = store.parameters()[i].tensor.mutable_values();
    std::copy(entries[i].values.begin(), entries[i].values.end(), dst.begin());
  }
}

void save_checkpoint_file(const std::string& path, const ParameterStore& store) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_checkpoint(out, store);
}

void load_checkpoint_file(const std::string& path, ParameterStore& store) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  load_checkpoint(in, store);
}

}  // namespace mgnn
