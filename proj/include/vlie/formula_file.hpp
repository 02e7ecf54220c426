#ifndef VLIE_FORMULA_FILE_HPP
#define VLIE_FORMULA_FILE_HPP

// Formula files: a small TOML subset.
//
//   [meta]
//   name = "virasoro"
//
//   [[basis]]
//   name = "ω"
//   parity = "even"      # or "odd"
//   weight = "2"         # optional, "p" or "p/q"
//
//   [[constant]]         # u_n v = sum coef * D^k target
//   u = "ω"
//   n = 3
//   v = "ω"
//   terms = [[0, "c", "1/2"]]
//
//   [conformal]          # optional
//   omega = "ω"
//   c = "c"

#include "vlie/formula.hpp"

#include <string>
#include <string_view>

namespace vlie {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Throws ParseError with the offending line; the result passes validate_spec.
FormulaSpec parse_formula(std::string_view text);
FormulaSpec load_formula(const std::string& path);

/// Deterministic canonical text: basis in id order, constants sorted by (u, n, v),
/// terms by (k, target).
std::string export_formula(const FormulaSpec& spec);

}  // namespace vlie

#endif  // VLIE_FORMULA_FILE_HPP
