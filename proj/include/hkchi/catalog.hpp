#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkchi/chern.hpp"
#include "hkchi/hodge.hpp"

namespace hkchi {

struct ManifoldRecord {
  std::string name;
  HodgeDiamond diamond;
  std::optional<ChernData> chern;
  std::string provenance;

  friend bool operator==(const ManifoldRecord& a, const ManifoldRecord& b) {
    return a.name == b.name && a.diamond == b.diamond && a.diamond.name() == b.diamond.name() && a.chern == b.chern &&
           a.provenance == b.provenance;
  }
};

// The K3 diamond derived from irreducibility plus Noether's formula:
// chi(O) = h^{0,0} - h^{0,1} + h^{0,2} = 2 = c_2 / 12, so the Euler number
// is 24 and h^{1,1} = 24 - 4 = 20.
HodgeDiamond k3_seed();

// Hodge diamonds of the Hilbert schemes S^[1..n_max] of a surface S, read off
// the product
//   prod_{k>=1} prod_{p,q} (1 - (-1)^{p+q} x^{p+k-1} y^{q+k-1} z^k)^{-(-1)^{p+q} h^{p,q}(S)}
// at z^1, ..., z^{n_max}. Results are cached by (base table, n_max).
// Each emitted diamond is validated at the highest level the base passes;
// a failure is an InconsistencyError.
inline constexpr int kMaxHilbertOrder = 5;
std::vector<HodgeDiamond> goettsche_expand(const HodgeDiamond& base, int n_max);

// "K3", "K3[2]", ..., "K3[5]" in catalog order.
const std::vector<std::string>& builtin_names();
// Throws UnknownManifoldError.
const ManifoldRecord& builtin(std::string_view name);

// Canonical JSON:
//   {"chern": {...}, "hodge": [[...], ...], "n": int, "name": str, "provenance": str}
// "chern" and "provenance" are optional. Keys sorted, two-space indent.
std::string to_json(const ManifoldRecord& record);
// Throws ParseError, DimensionError or ValidationError (STRUCTURAL).
ManifoldRecord record_from_json(std::string_view text);

ManifoldRecord load(const std::filesystem::path& path);
void save(const ManifoldRecord& record, const std::filesystem::path& path);

// {"n": 2, "chern": {"c2^2": 828, "c4": 324}}
ChernData chern_from_json(std::string_view text);
std::string chern_to_json(const ChernData& cd);
ChernData load_chern(const std::filesystem::path& path);

}  // namespace hkchi
