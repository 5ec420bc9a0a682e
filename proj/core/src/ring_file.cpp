#include "curvlab/ring_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

struct Value {
  enum class Kind { kInt, kString, kArray } kind = Kind::kInt;
  std::int64_t i = 0;
  std::string s;
  std::vector<Value> items;
  std::size_t line = 0;
};

struct Table {
  std::string name;
  std::map<std::string, Value> entries;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Table parse() {
    Table t;
    bool have_header = false;
    for (;;) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        if (have_header) fail("only one table is allowed");
        ++pos_;
        t.name = bare_key();
        expect(']');
        end_of_line();
        have_header = true;
        continue;
      }
      if (!have_header) fail("key outside of a table");
      const std::size_t key_line = line_;
      std::string key = bare_key();
      skip_spaces();
      expect('=');
      skip_spaces();
      Value v = value();
      v.line = key_line;
      end_of_line();
      if (!t.entries.emplace(key, std::move(v)).second) fail("duplicate key '" + key + "'", key_line);
    }
    if (!have_header) fail("missing table header");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t line = 0) const {
    throw Error(Errc::kParse, "line " + std::to_string(line ? line : line_) + ": " + msg);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  void skip_spaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  void skip_comment() {
    if (peek() == '#') {
      while (!eof() && peek() != '\n') ++pos_;
    }
  }

  void skip_blank_lines() {
    for (;;) {
      skip_spaces();
      skip_comment();
      if (peek() != '\n') return;
      ++pos_;
      ++line_;
    }
  }

  // Whitespace, comments and newlines, as allowed inside arrays.
  void skip_all() {
    for (;;) {
      skip_blank_lines();
      if (peek() != '\n') return;
    }
  }

  void end_of_line() {
    skip_spaces();
    skip_comment();
    if (eof()) return;
    if (peek() != '\n') fail(std::string("unexpected '") + peek() + "'");
    ++pos_;
    ++line_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string bare_key() {
    skip_spaces();
    std::string out;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
      out += text_[pos_++];
    }
    if (out.empty()) fail("expected a key");
    skip_spaces();
    return out;
  }

  Value value() {
    Value v;
    v.line = line_;
    const char c = peek();
    if (c == '"') {
      v.kind = Value::Kind::kString;
      v.s = string();
    } else if (c == '[') {
      v.kind = Value::Kind::kArray;
      ++pos_;
      skip_all();
      while (peek() != ']') {
        if (eof()) fail("unterminated array");
        v.items.push_back(value());
        skip_all();
        if (peek() == ',') {
          ++pos_;
          skip_all();
        } else if (peek() != ']') {
          fail("expected ',' or ']'");
        }
      }
      ++pos_;
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      v.kind = Value::Kind::kInt;
      const std::size_t start = pos_;
      if (c == '-') ++pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string digits(text_.substr(start, pos_ - start));
      try {
        std::size_t used = 0;
        v.i = std::stoll(digits, &used);
        if (used != digits.size()) throw std::invalid_argument(digits);
      } catch (const std::exception&) {
        fail("bad integer '" + digits + "'");
      }
    } else {
      fail("expected a string, integer or array");
    }
    return v;
  }

  std::string string() {
    expect('"');
    std::string out;
    for (;;) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = text_[pos_++];
      if (c == '"') return out;
      if (c == '\\') {
        const char n = peek();
        if (n != '"' && n != '\\') fail("unsupported escape");
        out += n;
        ++pos_;
      } else {
        out += c;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

void check_keys(const Table& t, std::string_view table, const std::set<std::string>& allowed) {
  if (t.name != table) throw Error(Errc::kParse, "expected table [" + std::string(table) + "], found [" + t.name + "]");
  for (const auto& [k, v] : t.entries) {
    if (!allowed.count(k)) {
      throw Error(Errc::kParse, "line " + std::to_string(v.line) + ": unknown key '" + k + "' in [" + t.name + "]");
    }
  }
}

[[noreturn]] void type_error(const std::string& key, const Value& v, const char* want) {
  throw Error(Errc::kParse, "line " + std::to_string(v.line) + ": '" + key + "' must be " + want);
}

std::string as_string(const std::string& key, const Value& v) {
  if (v.kind != Value::Kind::kString) type_error(key, v, "a string");
  return v.s;
}

std::vector<std::string> as_strings(const std::string& key, const Value& v) {
  if (v.kind != Value::Kind::kArray) type_error(key, v, "an array of strings");
  std::vector<std::string> out;
  for (const Value& item : v.items) {
    if (item.kind != Value::Kind::kString) type_error(key, v, "an array of strings");
    out.push_back(item.s);
  }
  return out;
}

const Value& require(const Table& t, const std::string& key) {
  auto it = t.entries.find(key);
  if (it == t.entries.end()) throw Error(Errc::kParse, "missing key '" + key + "' in [" + t.name + "]");
  return it->second;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string string_array(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + quote(v[i]);
  return out + "]";
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  const Table t = Parser(text).parse();
  check_keys(t, "ring", {"char", "vars", "order", "ideal"});
  RingSpec spec;
  if (auto it = t.entries.find("char"); it != t.entries.end()) {
    if (it->second.kind != Value::Kind::kInt || it->second.i < 2 || it->second.i > INT32_MAX) {
      type_error("char", it->second, "an integer prime");
    }
    spec.characteristic = static_cast<std::uint32_t>(it->second.i);
  }
  spec.vars = as_strings("vars", require(t, "vars"));
  if (auto it = t.entries.find("order"); it != t.entries.end()) {
    spec.order = as_string("order", it->second);
    if (spec.order != "grevlex" && spec.order != "lex") {
      throw Error(Errc::kParse, "line " + std::to_string(it->second.line) + ": order must be \"grevlex\" or \"lex\"");
    }
  }
  spec.ideal = as_strings("ideal", require(t, "ideal"));
  return spec;
}

ModuleSpec parse_module_spec(std::string_view text) {
  const Table t = Parser(text).parse();
  check_keys(t, "module", {"kind", "ideal", "matrix"});
  ModuleSpec spec;
  const Value& kind = require(t, "kind");
  spec.kind = as_string("kind", kind);
  if (spec.kind == "cyclic") {
    if (t.entries.count("matrix")) throw Error(Errc::kParse, "a cyclic module takes 'ideal', not 'matrix'");
    spec.ideal = as_strings("ideal", require(t, "ideal"));
  } else if (spec.kind == "cokernel") {
    if (t.entries.count("ideal")) throw Error(Errc::kParse, "a cokernel module takes 'matrix', not 'ideal'");
    const Value& m = require(t, "matrix");
    if (m.kind != Value::Kind::kArray) type_error("matrix", m, "an array of rows");
    for (const Value& row : m.items) spec.matrix.push_back(as_strings("matrix", row));
    for (const auto& row : spec.matrix) {
      if (row.size() != spec.matrix.front().size()) {
        throw Error(Errc::kParse, "line " + std::to_string(m.line) + ": matrix rows differ in length");
      }
    }
  } else {
    throw Error(Errc::kParse, "line " + std::to_string(kind.line) + ": kind must be \"cyclic\" or \"cokernel\"");
  }
  return spec;
}

RingSpec read_ring_file(const std::filesystem::path& path) {
  try {
    return parse_ring_spec(read_all(path));
  } catch (const Error& e) {
    if (e.code() != Errc::kParse) throw;
    throw Error(Errc::kParse, path.string() + ": " + e.what());
  }
}

ModuleSpec read_module_file(const std::filesystem::path& path) {
  try {
    return parse_module_spec(read_all(path));
  } catch (const Error& e) {
    if (e.code() != Errc::kParse) throw;
    throw Error(Errc::kParse, path.string() + ": " + e.what());
  }
}

std::string format_ring_spec(const RingSpec& spec) {
  std::ostringstream os;
  os << "[ring]\n"
     << "char = " << spec.characteristic << "\n"
     << "vars = " << string_array(spec.vars) << "\n"
     << "order = " << quote(spec.order) << "\n"
     << "ideal = " << string_array(spec.ideal) << "\n";
  return os.str();
}

std::string format_module_spec(const ModuleSpec& spec) {
  std::ostringstream os;
  os << "[module]\n"
     << "kind = " << quote(spec.kind) << "\n";
  if (spec.kind == "cokernel") {
    os << "matrix = [\n";
    for (const auto& row : spec.matrix) os << "  " << string_array(row) << ",\n";
    os << "]\n";
  } else {
    os << "ideal = " << string_array(spec.ideal) << "\n";
  }
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write " + path.string());
  out << text;
}

AlgebraPtr build_ring(const RingSpec& spec) {
  return build_algebra(spec.characteristic, spec.vars, spec.ideal, parse_order(spec.order));
}

ModuleRep build_module(AlgebraPtr a, const ModuleSpec& spec) {
  if (spec.kind == "cokernel") {
    const PresentationMatrix pm = PresentationMatrix::from_strings(*a, spec.matrix);
    return cokernel_module(std::move(a), pm);
  }
  return cyclic_module(std::move(a), spec.ideal);
}

}  // namespace curvlab
