#include "vlie/report.hpp"

#include <sstream>

namespace vlie::report {

std::string rational_json(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Json spec_json(const FormulaSpec& spec) {
  Json j;
  j["name"] = spec.name;
  Json basis = Json::array();
  for (const auto& b : spec.basis()) {
    Json e;
    e["name"] = b.label;
    e["parity"] = b.parity == Parity::odd ? "odd" : "even";
    e["weight"] = b.weight ? Json(rational_json(*b.weight)) : Json(nullptr);
    basis.push_back(e);
  }
  j["basis"] = basis;
  Json constants = Json::array();
  for (const auto& [key, value] : spec.constants()) {
    Json e;
    e["u"] = spec.at(key.u).label;
    e["n"] = key.n;
    e["v"] = spec.at(key.v).label;
    e["terms"] = element_json(spec, value);
    constants.push_back(e);
  }
  j["constants"] = constants;
  j["omega"] = spec.omega ? Json(spec.at(*spec.omega).label) : Json(nullptr);
  j["c"] = spec.central ? Json(spec.at(*spec.central).label) : Json(nullptr);
  return j;
}

Json element_json(const FormulaSpec& spec, const Element& a) {
  Json terms = Json::array();
  for (const auto& [t, c] : a) terms.push_back(Json{{"k", t.dpow}, {"target", spec.at(t.id).label}, {"coef", rational_json(c)}});
  return terms;
}

Json defect_json(const FormulaSpec& spec, const Defect& d) {
  Json j;
  j["kind"] = d.kind == DefectKind::skew ? "skew" : (d.kind == DefectKind::commutator ? "commutator" : "jacobi");
  Json idx = Json::array();
  for (std::size_t i = 0; i < d.indices.size(); ++i) {
    const bool basis_slot = d.kind == DefectKind::skew ? i != 1 : i % 2 == 0;
    if (basis_slot) {
      idx.push_back(spec.at(BasisId{static_cast<std::size_t>(d.indices[i])}).label);
    } else {
      idx.push_back(d.indices[i]);
    }
  }
  j["indices"] = idx;
  j["value"] = element_json(spec, d.value);
  j["text"] = to_string(spec, d.value);
  return j;
}

Json verdict_json(const FormulaSpec& spec, const Verdict& v, std::size_t max_witnesses) {
  Json j;
  j["status"] = to_string(v.status);
  j["injective"] = v.injective();
  j["notes"] = v.notes;
  j["central"] = v.central ? Json(spec.at(*v.central).label) : Json(nullptr);
  j["witness_count"] = v.witnesses.size();
  Json w = Json::array();
  for (std::size_t i = 0; i < v.witnesses.size() && i < max_witnesses; ++i) w.push_back(defect_json(spec, v.witnesses[i]));
  j["witnesses"] = w;
  return j;
}

Json violations_json(const std::vector<SpecViolation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) out.push_back(v.message);
  return out;
}

Json conformal_json(const ConformalReport& r) {
  Json j;
  j["passed"] = r.passed();
  Json clauses = Json::array();
  for (const auto& c : r.clauses) clauses.push_back(Json{{"clause", c.clause}, {"passed", c.passed}, {"detail", c.detail}});
  j["clauses"] = clauses;
  return j;
}

Json lie_json(const FormulaSpec& spec, const LieElement& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x) terms.push_back(Json{{"basis", spec.at(g.b).label}, {"n", g.n}, {"coef", rational_json(c)}});
  return Json{{"text", to_string(spec, x)}, {"terms", terms}};
}

Json pbw_json(const FormulaSpec& spec, const PbwVector& v) {
  Json terms = Json::array();
  for (const auto& [m, c] : v.terms) {
    Json factors = Json::array();
    for (const auto& g : m.factors) factors.push_back(Json{{"basis", spec.at(g.b).label}, {"n", g.n}});
    terms.push_back(Json{{"factors", factors}, {"coef", rational_json(c)}});
  }
  Json j{{"text", to_string(spec, v)}, {"terms", terms}};
  j["level"] = v.level ? Json(rational_json(*v.level)) : Json(nullptr);
  return j;
}

Json dims_json(const std::map<Rational, std::uint64_t>& dims) {
  Json out = Json::array();
  for (const auto& [w, d] : dims) out.push_back(Json{{"weight", rational_json(w)}, {"dim", d}});
  return out;
}

Json envelope() {
  Json j;
  for (const char* key : {"spec", "verdict", "defects", "dims", "result"}) j[key] = nullptr;
  return j;
}

std::string dims_text(const std::map<Rational, std::uint64_t>& dims) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, d] : dims) {
    os << (first ? "" : ",") << d;
    first = false;
  }
  return os.str();
}

std::string defects_text(const FormulaSpec& spec, const std::vector<Defect>& defects, std::size_t limit) {
  std::ostringstream os;
  for (std::size_t i = 0; i < defects.size() && i < limit; ++i) os << "  " << to_string(spec, defects[i]) << "\n";
  if (defects.size() > limit) os << "  ... " << defects.size() - limit << " more (use --all)\n";
  return os.str();
}

}  // namespace vlie::report
