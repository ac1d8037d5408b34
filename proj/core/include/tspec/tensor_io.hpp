#pragma once

#include "tspec/error.hpp"
#include "tspec/tensor.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace tspec {

/// Raised for tensor files that do not follow the JSON tensor format.
class TensorFormatError : public ArgumentError {
public:
  using ArgumentError::ArgumentError;
};

// Tensor file format:
//   {"dims": [m1, ..., md], "values": [[re, im], ...]}         row-major
//   {"dims": [...], "real": true, "values": [v, ...]}           bare numbers
// With "real": true, [re, im] pairs are still accepted. Serialisation picks
// the real form iff every imaginary part is +0.0, so reading back what was
// written reproduces every bit.
nlohmann::ordered_json tensor_to_json(const DenseTensor& t);
DenseTensor tensor_from_json(const nlohmann::json& j);

DenseTensor read_tensor_file(const std::filesystem::path& path);
void write_tensor_file(const std::filesystem::path& path, const DenseTensor& t);

} // namespace tspec
