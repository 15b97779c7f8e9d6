#pragma once
// Batch front end: algebra presentations in, one self-describing record per
// check out (key=value TSV or JSON lines).

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/degree_vector.hpp"
#include "sperner/field.hpp"
#include "sperner/polynomial.hpp"

namespace sperner::cli {

enum ExitCode : int { kPass = 0, kFalsified = 1, kInconclusive = 2, kUsageError = 3 };

struct AlgebraSpec {
  Field field = Field::default_field();
  bool field_given = false;
  std::size_t nvars = 0;
  /// From a `degrees` line, or the generator degrees when `gen` lines are present.
  DegreeVector degrees;
  /// Empty for the monomial complete intersection.
  std::vector<Polynomial> generators;
};

/// Parses `field q=<p>` | `field rational`, `vars <n>`, `degrees a1,a2,...`
/// and `gen <polynomial>` lines; `#` starts a comment. `field_override`
/// replaces any field line. Throws ParseError (with line and column) and
/// DimensionMismatch on arity or degree disagreement.
AlgebraSpec parse_input(std::string_view text, std::optional<Field> field_override = std::nullopt);

/// "q=7", "7" or "rational". Throws std::invalid_argument.
Field parse_field(std::string_view text);

/// Runs one job; argv-style args without the program name. Reports go to
/// `out`, diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sperner::cli
