#include "vlie/formula_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace vlie {

ParseError::ParseError(int line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Value {
  enum class Type { string, integer, array } type = Type::string;
  std::string text;
  long integer = 0;
  std::vector<Value> items;
  int line = 0;
};

struct Entry {
  Value value;
  int line = 0;
};

struct Table {
  std::string name;
  int line = 0;
  std::map<std::string, Entry> entries;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Table> read() {
    std::vector<Table> tables;
    std::set<std::string> single_tables;
    for (;;) {
      skip_blank(true);
      if (at_end()) break;
      if (peek() == '[') {
        const int header_line = line_;
        const bool array_table = text_.substr(pos_, 2) == "[[";
        pos_ += array_table ? 2 : 1;
        std::string name = bare_key();
        if (name.empty()) fail("expected a table name");
        if (array_table ? !consume("]]") : !consume("]")) fail("unterminated table header");
        end_of_line();
        if (!array_table && !single_tables.insert(name).second) fail("table [" + name + "] defined twice", header_line);
        if (array_table && name != "basis" && name != "constant") fail("unknown table [[" + name + "]]", header_line);
        if (!array_table && name != "meta" && name != "conformal") fail("unknown table [" + name + "]", header_line);
        tables.push_back(Table{name, header_line, {}});
        continue;
      }
      const int key_line = line_;
      std::string key = bare_key();
      if (key.empty()) fail("expected a key or a table header");
      skip_blank(false);
      if (!consume("=")) fail("expected '=' after key '" + key + "'");
      skip_blank(false);
      Value v = value();
      end_of_line();
      if (tables.empty()) fail("key '" + key + "' outside any table", key_line);
      if (!tables.back().entries.emplace(key, Entry{std::move(v), key_line}).second)
        fail("duplicate key '" + key + "'", key_line);
    }
    return tables;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int line = 0) const { throw ParseError(line ? line : line_, msg); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  bool consume(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  void skip_blank(bool newlines) {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else if (c == '\n' && newlines) {
        ++pos_;
        ++line_;
      } else {
        break;
      }
    }
  }

  void end_of_line() {
    skip_blank(false);
    if (at_end()) return;
    if (peek() != '\n') fail("unexpected text after value");
    ++pos_;
    ++line_;
  }

  std::string bare_key() {
    const std::size_t start = pos_;
    while (!at_end()) {
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Value value() {
    if (at_end()) fail("missing value");
    Value v;
    v.line = line_;
    const char c = peek();
    if (c == '"') {
      ++pos_;
      v.type = Value::Type::string;
      for (;;) {
        if (at_end() || peek() == '\n') fail("unterminated string");
        char d = text_[pos_++];
        if (d == '"') break;
        if (d == '\\') {
          if (at_end()) fail("unterminated string");
          d = text_[pos_++];
          if (d != '"' && d != '\\') fail("unsupported escape");
        }
        v.text.push_back(d);
      }
      return v;
    }
    if (c == '[') {
      ++pos_;
      v.type = Value::Type::array;
      for (;;) {
        skip_blank(true);
        if (at_end()) fail("unterminated array", v.line);
        if (consume("]")) break;
        v.items.push_back(value());
        skip_blank(true);
        if (consume(",")) continue;
        if (consume("]")) break;
        fail("expected ',' or ']' in array");
      }
      return v;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string digits(text_.substr(start, pos_ - start));
      if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E' || peek() == '/'))
        fail("numbers must be integers; write rationals as strings like \"3/2\"");
      try {
        std::size_t used = 0;
        v.integer = std::stol(digits, &used);
        if (used != digits.size()) fail("malformed integer");
      } catch (const std::logic_error&) {
        fail("malformed integer '" + digits + "'");
      }
      v.type = Value::Type::integer;
      return v;
    }
    fail("unsupported value");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

const Value& require(const Table& t, const std::string& key) {
  auto it = t.entries.find(key);
  if (it == t.entries.end()) throw ParseError(t.line, "[" + t.name + "] is missing '" + key + "'");
  return it->second.value;
}

const std::string& as_string(const Value& v, const std::string& what) {
  if (v.type != Value::Type::string) throw ParseError(v.line, what + " must be a string");
  return v.text;
}

long as_integer(const Value& v, const std::string& what) {
  if (v.type != Value::Type::integer) throw ParseError(v.line, what + " must be an integer");
  return v.integer;
}

Rational as_rational(const Value& v, const std::string& what) {
  if (v.type == Value::Type::integer) return Rational(v.integer);
  try {
    return parse_rational(as_string(v, what));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(v.line, what + ": " + e.what());
  }
}

void check_keys(const Table& t, std::initializer_list<const char*> allowed) {
  for (const auto& [key, entry] : t.entries) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(entry.line, "unknown key '" + key + "' in [" + t.name + "]");
  }
}

BasisId resolve(const FormulaSpec& spec, const Value& v, const std::string& what) {
  const std::string& label = as_string(v, what);
  if (auto id = spec.find(label)) return *id;
  throw ParseError(v.line, "unknown basis name '" + label + "'");
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

FormulaSpec parse_formula(std::string_view text) {
  const std::vector<Table> tables = Reader(text).read();
  FormulaSpec spec;

  for (const auto& t : tables) {
    if (t.name == "meta") {
      check_keys(t, {"name"});
      if (auto it = t.entries.find("name"); it != t.entries.end()) spec.name = as_string(it->second.value, "name");
    } else if (t.name == "basis") {
      check_keys(t, {"name", "parity", "weight"});
      const std::string& label = as_string(require(t, "name"), "name");
      if (label.empty()) throw ParseError(t.line, "empty basis name");
      if (spec.find(label)) throw ParseError(t.entries.at("name").line, "duplicate basis name '" + label + "'");
      Parity parity = Parity::even;
      if (auto it = t.entries.find("parity"); it != t.entries.end()) {
        const std::string& p = as_string(it->second.value, "parity");
        if (p == "odd") {
          parity = Parity::odd;
        } else if (p != "even") {
          throw ParseError(it->second.line, "parity must be \"even\" or \"odd\"");
        }
      }
      std::optional<Rational> weight;
      if (auto it = t.entries.find("weight"); it != t.entries.end()) weight = as_rational(it->second.value, "weight");
      spec.add_basis(label, parity, weight);
    }
  }

  std::map<ProductKey, int> lines;
  for (const auto& t : tables) {
    if (t.name == "constant") {
      check_keys(t, {"u", "n", "v", "terms"});
      const BasisId u = resolve(spec, require(t, "u"), "u");
      const BasisId v = resolve(spec, require(t, "v"), "v");
      const Value& nv = require(t, "n");
      const long n = as_integer(nv, "n");
      if (n < 0 || n > 10000) throw ParseError(nv.line, "n must lie in [0, 10000]");
      const ProductKey key{u, static_cast<int>(n), v};
      if (!lines.emplace(key, t.line).second) throw ParseError(t.line, "duplicate constant for this (u, n, v)");
      const Value& terms = require(t, "terms");
      if (terms.type != Value::Type::array) throw ParseError(terms.line, "terms must be an array");
      Element value;
      for (const auto& term : terms.items) {
        if (term.type != Value::Type::array || term.items.size() != 3)
          throw ParseError(term.line, "each term must be [k, \"target\", \"coefficient\"]");
        const long k = as_integer(term.items[0], "k");
        if (k < 0 || k > 10000) throw ParseError(term.line, "k must lie in [0, 10000]");
        const BasisId target = resolve(spec, term.items[1], "target");
        value.add(DTerm{static_cast<int>(k), target}, as_rational(term.items[2], "coefficient"));
      }
      spec.set_product(u, key.n, v, std::move(value));
    } else if (t.name == "conformal") {
      check_keys(t, {"omega", "c"});
      if (auto it = t.entries.find("omega"); it != t.entries.end()) spec.omega = resolve(spec, it->second.value, "omega");
      if (auto it = t.entries.find("c"); it != t.entries.end()) spec.central = resolve(spec, it->second.value, "c");
    }
  }

  const auto violations = validate_spec(spec);
  if (!violations.empty()) {
    const auto& first = violations.front();
    auto it = lines.find(first.where);
    throw ParseError(it == lines.end() ? 1 : it->second, first.message);
  }
  return spec;
}

FormulaSpec load_formula(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_formula(ss.str());
}

std::string export_formula(const FormulaSpec& spec) {
  std::ostringstream os;
  os << "[meta]\nname = " << quote(spec.name) << "\n";
  for (const auto& b : spec.basis()) {
    os << "\n[[basis]]\nname = " << quote(b.label) << "\nparity = " << (b.parity == Parity::odd ? "\"odd\"" : "\"even\"")
       << "\n";
    if (b.weight) os << "weight = " << quote(to_string(*b.weight)) << "\n";
  }
  for (const auto& [key, value] : spec.constants()) {
    os << "\n[[constant]]\nu = " << quote(spec.at(key.u).label) << "\nn = " << key.n
       << "\nv = " << quote(spec.at(key.v).label) << "\nterms = [";
    bool first = true;
    for (const auto& [t, c] : value) {
      os << (first ? "" : ", ") << "[" << t.dpow << ", " << quote(spec.at(t.id).label) << ", " << quote(to_string(c))
         << "]";
      first = false;
    }
    os << "]\n";
  }
  if (spec.omega || spec.central) {
    os << "\n[conformal]\n";
    if (spec.omega) os << "omega = " << quote(spec.at(*spec.omega).label) << "\n";
    if (spec.central) os << "c = " << quote(spec.at(*spec.central).label) << "\n";
  }
  return os.str();
}

}  // namespace vlie
