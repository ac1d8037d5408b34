#include "tspec/tensor_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace tspec {

nlohmann::ordered_json tensor_to_json(const DenseTensor& t) {
  const bool real = std::all_of(t.values().begin(), t.values().end(), [](const Complex& v) {
    return v.imag() == 0.0 && !std::signbit(v.imag());
  });
  nlohmann::ordered_json j;
  j["dims"] = t.dims();
  if (real) j["real"] = true;
  auto values = nlohmann::ordered_json::array();
  for (const auto& v : t.values()) {
    if (real) values.push_back(v.real());
    else values.push_back({v.real(), v.imag()});
  }
  j["values"] = std::move(values);
  return j;
}

DenseTensor tensor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw TensorFormatError("tensor file: top level must be an object");
  if (!j.contains("dims") || !j["dims"].is_array())
    throw TensorFormatError("tensor file: missing \"dims\" array");
  if (!j.contains("values") || !j["values"].is_array())
    throw TensorFormatError("tensor file: missing \"values\" array");
  bool real = false;
  if (j.contains("real")) {
    if (!j["real"].is_boolean()) throw TensorFormatError("tensor file: \"real\" must be a boolean");
    real = j["real"].get<bool>();
  }
  Dims dims;
  for (const auto& m : j["dims"]) {
    if (!m.is_number_integer() || m.get<long long>() < 1)
      throw TensorFormatError("tensor file: dims must be positive integers");
    dims.push_back(m.get<std::size_t>());
  }
  if (dims.empty()) throw TensorFormatError("tensor file: dims must be non-empty");

  std::vector<Complex> values;
  values.reserve(j["values"].size());
  for (const auto& v : j["values"]) {
    if (v.is_number()) {
      if (!real) throw TensorFormatError("tensor file: bare numbers require \"real\": true");
      values.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      values.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw TensorFormatError("tensor file: each value must be a number or an [re, im] pair");
    }
  }
  try {
    return DenseTensor(std::move(dims), std::move(values));
  } catch (const ArgumentError& e) {
    throw TensorFormatError(std::string("tensor file: ") + e.what());
  }
}

DenseTensor read_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TensorFormatError("cannot open tensor file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw TensorFormatError("tensor file " + path.string() + ": " + e.what());
  }
  return tensor_from_json(j);
}

void write_tensor_file(const std::filesystem::path& path, const DenseTensor& t) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write tensor file " + path.string());
  out << tensor_to_json(t).dump() << '\n';
}

} // namespace tspec
