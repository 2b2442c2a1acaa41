#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace atomcert {

enum class Passage { Over, Under };

inline Passage flipped(Passage p) {
  return p == Passage::Over ? Passage::Under : Passage::Over;
}

struct GaussEntry {
  int crossing_id = 0;  // >= 1
  Passage passage = Passage::Over;
  int sign = +1;  // +1 or -1

  bool operator==(const GaussEntry&) const = default;
};

// A signed Gauss code: one entry sequence per link component. A component
// with no entries is a crossingless circle.
struct GaussCode {
  std::vector<std::vector<GaussEntry>> components;

  bool operator==(const GaussCode&) const = default;
};

// Parses the `.gauss` format: `#` comments to end of line, components
// separated by `;` or blank lines, entries matching [OU][0-9]+[+-].
// A file with no entries at all denotes the 0-crossing unknot.
// Throws parse_error with a position on syntax errors, and on violated
// code invariants (each crossing id exactly once over and once under,
// consistent signs).
GaussCode parse_gauss(std::string_view text);

// Checks the GaussCode invariants; throws parse_error on violation.
void validate_code(const GaussCode& code);

// Canonical text form, components joined by " ; ". Inverse of parse_gauss.
std::string serialize(const GaussCode& code);

}  // namespace atomcert
