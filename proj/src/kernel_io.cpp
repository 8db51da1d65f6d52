#include "wigner/kernel_io.hpp"

#include <fstream>
#include <sstream>

#include "wigner/presets.hpp"

namespace wigner {

nlohmann::ordered_json kernel_to_json(const Kernel& f) {
  nlohmann::ordered_json j;
  j["grid"] = {{"cells", f.cells()}, {"width", f.grid().width}};
  j["order"] = f.order();
  auto coeffs = nlohmann::ordered_json::array();
  for (Index i = 0; i < f.size(); ++i) coeffs.push_back({f.coeffs()(i).real(), f.coeffs()(i).imag()});
  j["coeffs"] = std::move(coeffs);
  return j;
}

Kernel kernel_from_json(const nlohmann::json& j) {
  try {
    const auto& g = j.at("grid");
    const GridSpec grid(g.at("cells").get<Index>(), g.at("width").get<double>());
    const int order = j.at("order").get<int>();
    if (order < 0) throw ShapeError("kernel file: negative order");
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array()) throw ShapeError("kernel file: coeffs must be an array");
    const Index expected = tensor_size(grid.cells, order);
    if (static_cast<Index>(coeffs.size()) != expected)
      throw ShapeError("kernel file: " + std::to_string(coeffs.size()) + " coefficients, expected m^n = " +
                       std::to_string(expected));
    Kernel::Coeffs c(expected);
    for (Index i = 0; i < expected; ++i) {
      const auto& entry = coeffs[static_cast<std::size_t>(i)];
      if (!entry.is_array() || entry.size() != 2) throw ShapeError("kernel file: coefficient must be [re, im]");
      c(i) = {entry[0].get<double>(), entry[1].get<double>()};
    }
    return Kernel(grid, order, std::move(c));
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("kernel file: ") + e.what());
  }
}

Kernel read_kernel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ShapeError("cannot open kernel file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError("kernel file " + path.string() + ": " + e.what());
  }
  return kernel_from_json(j);
}

void write_kernel(const std::filesystem::path& path, const Kernel& f) {
  std::ofstream out(path);
  if (!out) throw ShapeError("cannot write kernel file " + path.string());
  out << kernel_to_json(f).dump() << '\n';
}

namespace {

std::string canonical_preset_name(const std::string& name) {
  if (name == "diagonal" || name == "diagonal_family") return "diagonal_family";
  if (name == "basis" || name == "basis_power") return "basis_power";
  if (name == "random" || name == "random_mirror") return "random_mirror";
  throw ShapeError("unknown preset '" + name + "'");
}

}  // namespace

PresetSpec parse_preset(const std::string& text) {
  std::stringstream ss(text);
  std::string token;
  PresetSpec spec;
  bool first = true;
  while (std::getline(ss, token, ':')) {
    if (first) {
      spec.name = canonical_preset_name(token);
      first = false;
      continue;
    }
    try {
      std::size_t used = 0;
      spec.params.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw ShapeError("preset '" + text + "': bad parameter '" + token + "'");
    }
  }
  if (first) throw ShapeError("empty preset");
  const std::size_t want_min = 1, want_max = spec.name == "random_mirror" ? 2 : 1;
  if (spec.params.size() < want_min || spec.params.size() > want_max)
    throw ShapeError("preset '" + text + "': wrong number of parameters");
  return spec;
}

Index preset_default_cells(const PresetSpec& spec) {
  if (spec.name == "diagonal_family") return std::max<Index>(1, spec.params.at(0));
  if (spec.name == "basis_power") return 1;
  return 2;
}

Kernel preset_kernel(const PresetSpec& spec, const GridSpec& grid) {
  const auto p0 = spec.params.at(0);
  if (spec.name == "basis_power") return basis_power(grid, static_cast<int>(p0));
  if (spec.name == "diagonal_family") return diagonal_family(grid, p0);
  if (spec.name == "random_mirror") {
    const auto seed = spec.params.size() > 1 ? static_cast<std::uint64_t>(spec.params[1]) : 0u;
    return random_mirror(grid, static_cast<int>(p0), seed);
  }
  throw ShapeError("unknown preset '" + spec.name + "'");
}

}  // namespace wigner
