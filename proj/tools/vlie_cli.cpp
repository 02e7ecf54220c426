// vlie: command-line front end for formula checks, L(U) brackets and V(U) computations.

#include "vlie/formula_file.hpp"
#include "vlie/local_lie.hpp"
#include "vlie/presets.hpp"
#include "vlie/report.hpp"
#include "vlie/verma.hpp"
#include "vlie/vla_check.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace {

using namespace vlie;
using report::Json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

struct Options {
  bool json = false;
  bool all = false;
  int window = 3;
  std::string cutoff = "8";
  std::string level;
  std::string input;
  std::string preset;
  std::size_t dim = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

FormulaSpec load_input(const Options& o) {
  if (!o.input.empty() && !o.preset.empty()) throw UsageError("give either a formula file or --preset, not both");
  if (!o.preset.empty()) return make_preset(o.preset, o.dim);
  if (!o.input.empty()) return load_formula(o.input);
  throw UsageError("no input: give a formula file or --preset NAME");
}

std::string canonical_label(const FormulaSpec& spec, const std::string& label) {
  if (spec.find(label)) return label;
  if (label == "omega") return "ω";
  if (label == "tau") return "τ";
  return label;
}

BasisId basis(const FormulaSpec& spec, const std::string& label) { return spec.lookup(canonical_label(spec, label)); }

int parse_int(const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::logic_error&) {
    throw UsageError("expected an integer, got '" + text + "'");
  }
  if (used != text.size() || v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw UsageError("expected an integer, got '" + text + "'");
  return static_cast<int>(v);
}

/// "ω_-1" -> (ω, -1)
LieGenerator parse_generator(const FormulaSpec& spec, const std::string& token) {
  const auto cut = token.rfind('_');
  if (cut == std::string::npos || cut == 0) throw UsageError("generator '" + token + "' must look like name_n");
  return LieGenerator{basis(spec, token.substr(0, cut)), parse_int(token.substr(cut + 1))};
}

std::vector<LieGenerator> parse_generators(const FormulaSpec& spec, const std::string& text) {
  std::istringstream in(text);
  std::vector<LieGenerator> out;
  std::string token;
  while (in >> token)
    if (token != "1") out.push_back(parse_generator(spec, token));
  return out;
}

Rational parse_q(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_check(const Options& o) {
  const FormulaSpec spec = load_input(o);
  Json j = report::envelope();
  j["spec"] = report::spec_json(spec);
  std::ostringstream text;
  text << "formula: " << (spec.name.empty() ? "(unnamed)" : spec.name) << ", " << spec.dim() << " basis vectors, "
       << spec.constants().size() << " constants\n";

  const auto violations = validate_spec(spec);
  if (!violations.empty()) {
    text << "invalid formula:\n";
    for (const auto& v : violations) text << "  " << v.message << "\n";
    j["result"] = Json{{"violations", report::violations_json(violations)}};
    emit(o, j, text.str());
    return exit_usage;
  }
  text << "validation: ok\n";

  const auto defects = defect_sweep(spec);
  text << "defect sweep (bound " << default_sweep_bound(spec) << "): " << defects.size() << " nonzero\n";
  text << report::defects_text(spec, defects, o.all ? defects.size() : 10);
  Json dj = Json::array();
  for (std::size_t i = 0; i < defects.size() && (o.all || i < 10); ++i) dj.push_back(report::defect_json(spec, defects[i]));
  j["defects"] = dj;

  const Verdict verdict = injectivity_verdict(spec);
  j["verdict"] = report::verdict_json(spec, verdict, o.all ? verdict.witnesses.size() : 10);
  text << "verdict: " << to_string(verdict.status) << " (" << verdict.notes << ")\n";
  if (!verdict.injective() && !verdict.witnesses.empty()) {
    text << "witnesses:\n" << report::defects_text(spec, verdict.witnesses, o.all ? verdict.witnesses.size() : 10);
  }

  Json result;
  if (spec.omega && spec.central && spec.graded()) {
    const auto conformal = conformal_validate(spec, *spec.omega, *spec.central);
    result["conformal"] = report::conformal_json(conformal);
    text << "conformal vector " << spec.at(*spec.omega).label << ": " << (conformal.passed() ? "ok" : "FAILED") << "\n";
    for (const auto& c : conformal.clauses)
      text << "  " << (c.passed ? "ok    " : "FAILED") << " " << c.clause << (c.detail.empty() ? "" : ": " + c.detail)
           << "\n";
  }
  if (verdict.injective() && o.window > 0) {
    const auto lie = LocalLieAlgebra::for_verdict(spec, verdict);
    const auto bad = jacobi_window_verify(lie, o.window);
    result["lie_window"] = Json{{"window", o.window}, {"violations", bad}};
    text << "L(U) window " << o.window << ": " << (bad.empty() ? "Lie superalgebra axioms hold" : "VIOLATED") << "\n";
    for (std::size_t i = 0; i < bad.size() && (o.all || i < 10); ++i) text << "  " << bad[i] << "\n";
  }
  j["result"] = result.is_null() ? Json::object() : result;
  emit(o, j, text.str());
  return verdict.injective() ? exit_ok : exit_negative;
}

LocalLieAlgebra lie_for(const FormulaSpec& spec) {
  const Verdict verdict = injectivity_verdict(spec);
  if (!verdict.injective())
    throw Error("verdict not injective (" + to_string(verdict.status) + "); run 'vlie check' for the witnesses");
  return LocalLieAlgebra::for_verdict(spec, verdict);
}

/// A leading extra argument names the formula file.
std::vector<std::string> take_input(Options& o, std::vector<std::string> args, std::size_t expected) {
  if (args.size() == expected + 1) {
    o.input = args.front();
    args.erase(args.begin());
  }
  return args;
}

int cmd_bracket(Options o, std::vector<std::string> args) {
  args = take_input(o, std::move(args), 4);
  if (args.size() != 4) throw UsageError("bracket expects [FILE] U N V P");
  const FormulaSpec spec = load_input(o);
  const LocalLieAlgebra lie = lie_for(spec);
  const LieGenerator x{basis(spec, args[0]), parse_int(args[1])};
  const LieGenerator y{basis(spec, args[2]), parse_int(args[3])};
  const LieElement z = lie.bracket(x, y);
  Json j = report::envelope();
  j["spec"] = report::spec_json(spec);
  j["result"] = report::lie_json(spec, z);
  emit(o, j, to_string(spec, z) + "\n");
  return exit_ok;
}

PbwVector parse_vector(const VermaModule& module, const std::string& text) {
  return module.act_sequence(parse_generators(module.spec(), text), module.vacuum());
}

int cmd_verma(const Options& o, bool dims, const std::string& act, const std::vector<std::string>& field) {
  const FormulaSpec spec = load_input(o);
  const LocalLieAlgebra lie = lie_for(spec);
  const VermaModule module(lie, parse_q(o.cutoff, "--cutoff"));
  const std::optional<Rational> level = o.level.empty() ? std::nullopt : std::optional(parse_q(o.level, "--level"));
  auto finish = [&](PbwVector v) { return level ? module.specialize_level(v, *level) : v; };

  Json j = report::envelope();
  j["spec"] = report::spec_json(spec);
  const int modes = int(dims) + int(!act.empty()) + int(!field.empty());
  if (modes != 1) throw UsageError("verma expects exactly one of --dims, --act, --field");
  if (dims) {
    const auto table = module.graded_dimension();
    j["dims"] = report::dims_json(table);
    emit(o, j, report::dims_text(table) + "\n");
  } else if (!act.empty()) {
    const PbwVector v = finish(parse_vector(module, act));
    j["result"] = report::pbw_json(spec, v);
    emit(o, j, to_string(spec, v) + "\n");
  } else {
    const PbwVector a = parse_vector(module, field[0]);
    const PbwVector b = parse_vector(module, field[2]);
    const PbwVector v = finish(module.field_coefficient(a, parse_int(field[1]), b));
    j["result"] = report::pbw_json(spec, v);
    emit(o, j, to_string(spec, v) + "\n");
  }
  return exit_ok;
}

int cmd_defect(Options o, std::vector<std::string> args, const std::string& kind, int bound) {
  const std::size_t arity = kind == "skew" ? 3 : kind == "commutator" ? 5 : kind == "jacobi" ? 6 : 0;
  args = take_input(o, std::move(args), arity);
  const FormulaSpec spec = load_input(o);
  Json j = report::envelope();
  j["spec"] = report::spec_json(spec);
  if (kind.empty()) {
    const auto defects = defect_sweep(spec, bound >= 0 ? std::optional(bound) : std::nullopt);
    Json dj = Json::array();
    for (std::size_t i = 0; i < defects.size() && (o.all || i < 10); ++i) dj.push_back(report::defect_json(spec, defects[i]));
    j["defects"] = dj;
    j["result"] = Json{{"count", defects.size()}};
    std::ostringstream text;
    text << defects.size() << " nonzero defects\n" << report::defects_text(spec, defects, o.all ? defects.size() : 10);
    emit(o, j, text.str());
    return exit_ok;
  }
  Defect d;
  if (kind == "skew") {
    if (args.size() != 3) throw UsageError("--kind skew expects U N V");
    const BasisId u = basis(spec, args[0]), v = basis(spec, args[2]);
    const int n = parse_int(args[1]);
    d = Defect{DefectKind::skew, {long(u.value), n, long(v.value)}, skew_defect(spec, u, n, v)};
  } else if (kind == "commutator") {
    if (args.size() != 5) throw UsageError("--kind commutator expects U M V N W");
    const BasisId u = basis(spec, args[0]), v = basis(spec, args[2]), w = basis(spec, args[4]);
    const int m = parse_int(args[1]), n = parse_int(args[3]);
    d = Defect{DefectKind::commutator, {long(u.value), m, long(v.value), n, long(w.value)},
               commutator_defect(spec, u, m, v, n, w)};
  } else if (kind == "jacobi") {
    if (args.size() != 6) throw UsageError("--kind jacobi expects U K V M W N");
    const BasisId u = basis(spec, args[0]), v = basis(spec, args[2]), w = basis(spec, args[4]);
    const int k = parse_int(args[1]), m = parse_int(args[3]), n = parse_int(args[5]);
    d = Defect{DefectKind::jacobi_component, {long(u.value), k, long(v.value), m, long(w.value), n},
               jacobi_component_defect(spec, u, k, v, m, w, n)};
  } else {
    throw UsageError("--kind must be skew, commutator or jacobi");
  }
  for (long i : d.indices)
    if (i < 0) throw UsageError("indices must be nonnegative");
  j["defects"] = Json::array({report::defect_json(spec, d)});
  j["result"] = Json{{"text", to_string(spec, d.value)}};
  emit(o, j, to_string(spec, d.value) + "\n");
  return exit_ok;
}

int cmd_export(const Options& o, const std::string& name, const std::string& output) {
  const FormulaSpec spec = make_preset(name, o.dim);
  const std::string text = export_formula(spec);
  if (output.empty()) {
    if (o.json) {
      Json j = report::envelope();
      j["spec"] = report::spec_json(spec);
      j["result"] = Json{{"formula", text}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw Error("cannot write '" + output + "'");
    out << text;
  }
  return exit_ok;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--preset", o.preset, "built-in formula (see 'vlie presets')");
  cmd->add_option("--dim", o.dim, "dimension parameter of the preset");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"vlie: vertex Lie superalgebras from formulas, with exact arithmetic"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--all", o.all, "print every defect and witness");
  app.add_option("--window", o.window, "index window for L(U) axiom checks")->check(CLI::NonNegativeNumber);
  app.add_option("--cutoff", o.cutoff, "weight cutoff for V(U) computations (rational)");
  app.add_option("--level", o.level, "central charge substituted for c_-1 (rational)");

  auto* check = app.add_subcommand("check", "validate a formula and decide injectivity");
  check->add_option("input", o.input, "formula file");
  add_input(check, o);

  std::vector<std::string> bracket_args;
  auto* bracket = app.add_subcommand("bracket", "bracket [u_n, v_p] in L(U)");
  add_input(bracket, o);
  bracket->add_option("args", bracket_args, "[FILE] U N V P");

  bool dims = false;
  std::string act;
  std::vector<std::string> field;
  auto* verma = app.add_subcommand("verma", "computations in the Verma module V(U)");
  verma->add_option("input", o.input, "formula file");
  add_input(verma, o);
  verma->add_flag("--dims", dims, "graded dimensions up to --cutoff");
  verma->add_option("--act", act, "generators applied to the vacuum, e.g. \"ω_3 ω_-1\"");
  verma->add_option("--field", field, "A N B: the coefficient A_N B; A and B are generator lists or 1")->expected(3);

  std::vector<std::string> defect_args;
  std::string kind;
  int bound = -1;
  auto* defect = app.add_subcommand("defect", "single defect values or the full defect sweep");
  add_input(defect, o);
  defect->add_option("--kind", kind, "skew (U N V), commutator (U M V N W) or jacobi (U K V M W N)");
  defect->add_option("--bound", bound, "sweep bound (default: derived from the formula)");
  defect->add_option("args", defect_args, "[FILE] then basis names and indices");

  std::string preset_name, output;
  auto* exporter = app.add_subcommand("export-preset", "write a preset as a formula file");
  exporter->add_option("name", preset_name, "preset name")->required();
  exporter->add_option("--dim", o.dim, "dimension parameter of the preset");
  exporter->add_option("--output,-o", output, "output path (default: stdout)");

  auto* presets = app.add_subcommand("presets", "list the built-in presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*bracket) return cmd_bracket(o, bracket_args);
    if (*verma) return cmd_verma(o, dims, act, field);
    if (*defect) return cmd_defect(o, defect_args, kind, bound);
    if (*exporter) return cmd_export(o, preset_name, output);
    if (*presets) {
      for (const auto& p : preset_catalog()) std::cout << p.name << "  " << p.description << "\n";
      return exit_ok;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    const std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    const bool usage = msg.rfind("unknown", 0) == 0 || msg.rfind("cannot open", 0) == 0;
    return usage ? exit_usage : exit_negative;
  }
  return exit_usage;
}
