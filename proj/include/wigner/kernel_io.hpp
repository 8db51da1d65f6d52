#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wigner/kernel.hpp"

namespace wigner {

// {"grid":{"cells":m,"width":w},"order":n,"coeffs":[[re,im],...]}
// coeffs flattened row-major, last index fastest; readers check m^n entries.
nlohmann::ordered_json kernel_to_json(const Kernel& f);
Kernel kernel_from_json(const nlohmann::json& j);

Kernel read_kernel(const std::filesystem::path& path);
void write_kernel(const std::filesystem::path& path, const Kernel& f);

struct PresetSpec {
  std::string name;              // basis_power | diagonal_family | random_mirror
  std::vector<std::int64_t> params;
};

/// Parses "name:p1[:p2]". Accepted aliases: "diagonal" for diagonal_family,
/// "basis" for basis_power, "random" for random_mirror.
PresetSpec parse_preset(const std::string& text);

/// Smallest grid the preset needs when the caller does not fix one.
Index preset_default_cells(const PresetSpec& spec);

/// basis_power(n); diagonal_family(k); random_mirror(n, seed) (seed defaults to 0).
Kernel preset_kernel(const PresetSpec& spec, const GridSpec& grid);

}  // namespace wigner
