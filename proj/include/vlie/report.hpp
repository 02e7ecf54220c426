#ifndef VLIE_REPORT_HPP
#define VLIE_REPORT_HPP

// JSON and text rendering of library results. Rationals are serialized as
// "num/den" strings.

#include "vlie/local_lie.hpp"
#include "vlie/verma.hpp"
#include "vlie/vla_check.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vlie::report {

using Json = nlohmann::ordered_json;

std::string rational_json(const Rational& q);

Json spec_json(const FormulaSpec& spec);
Json element_json(const FormulaSpec& spec, const Element& a);
Json defect_json(const FormulaSpec& spec, const Defect& d);
Json verdict_json(const FormulaSpec& spec, const Verdict& v, std::size_t max_witnesses);
Json violations_json(const std::vector<SpecViolation>& violations);
Json conformal_json(const ConformalReport& r);
Json lie_json(const FormulaSpec& spec, const LieElement& x);
Json pbw_json(const FormulaSpec& spec, const PbwVector& v);
Json dims_json(const std::map<Rational, std::uint64_t>& dims);

/// {spec, verdict, defects, dims, result}, each null unless set.
Json envelope();

/// "1,0,1,1,2"
std::string dims_text(const std::map<Rational, std::uint64_t>& dims);

/// One defect per line, at most `limit` lines plus a "... n more" trailer.
std::string defects_text(const FormulaSpec& spec, const std::vector<Defect>& defects, std::size_t limit);

}  // namespace vlie::report

#endif  // VLIE_REPORT_HPP
