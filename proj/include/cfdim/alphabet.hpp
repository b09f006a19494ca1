#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfdim/gaussian.hpp"

namespace cfdim {

// Digit alphabets I inside the Gaussian integers with positive real part.
//
// Grammar accepted by parse_alphabet:
//   {n1,n2,...}            explicit list (entries may be complex, "a+bi")
//   {a..b}                 integer range
//   <a>N                   arithmetic progression a, 2a, 3a, ...   (infinite)
//   F<n>                   all integers >= n                       (infinite)
//   <set>x<set>i           complex rectangle, each side a {...} list or range
//
// Infinite kinds need a ceiling before materialization.  The ceiling bounds
// the digit value (its real part), not the index: "2N" with ceiling 10^6
// materializes {2, 4, ..., 10^6}.
enum class AlphabetKind {
  ExplicitList,
  IntegerRange,
  Progression,
  Cofinite,
  ComplexRectangle,
  DigitFile,
};

struct AlphabetSpec {
  AlphabetKind kind = AlphabetKind::ExplicitList;
  std::vector<GaussianInt> digits;      // ExplicitList, DigitFile
  long long lo = 0, hi = 0;             // IntegerRange
  long long stride = 0;                 // Progression
  long long cofinite_start = 0;         // Cofinite
  std::vector<long long> re_values;     // ComplexRectangle
  std::vector<long long> im_values;     // ComplexRectangle
  std::optional<long long> ceiling;     // bound on Re(digit)
  std::string text;                     // source form, for reporting

  bool infinite_kind() const {
    return kind == AlphabetKind::Progression || kind == AlphabetKind::Cofinite;
  }
};

AlphabetSpec parse_alphabet(std::string_view text);

// One digit per line ("a", "a+bi", "a-bi"); '#' starts a comment.
AlphabetSpec load_alphabet_file(const std::string& path);

// The exact finite digit list: validated (Re >= 1), duplicate-free,
// ordered lexicographically by (Re, Im).  Throws if an infinite kind has
// no ceiling or the result is empty.
std::vector<GaussianInt> materialize(const AlphabetSpec& spec);

}  // namespace cfdim
