#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mgnn/tensor/parameter.hpp"

namespace mgnn {

/*
  MGNN-CKPT v1 layout:

    MGNN-CKPT v1\n
    then for each parameter, in store order:
      <name>\n
      <rank> <d0> ... <d{rank-1}>\n
      u64 little-endian element count, then that many little-endian
      IEEE-754 binary64 values in row-major order.
*/
inline constexpr const char* kCheckpointMagic = "MGNN-CKPT v1";

struct CheckpointEntry {
  std::string name;
  Shape shape;
  std::vector<double> values;
};

void write_checkpoint(std::ostream& out, const ParameterStore& store);
std::vector<CheckpointEntry> read_checkpoint(std::istream& in);

/// Copies checkpoint values into `store`; names, order and shapes must match.
void load_checkpoint(std::istream& in, ParameterStore& store);

void save_checkpoint_file(const std::string& path, const ParameterStore& store);
void load_checkpoint_file(const std::string& path, ParameterStore& store);

}  // namespace mgnn
