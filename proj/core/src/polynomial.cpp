#include "curvlab/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "curvlab/error.hpp"

namespace curvlab {

std::string_view order_name(MonomialOrder order) noexcept {
  return order == MonomialOrder::kLex ? "lex" : "grevlex";
}

MonomialOrder parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::kGrevlex;
  if (name == "lex") return MonomialOrder::kLex;
  throw Error(Errc::kParse, "unknown monomial order '" + std::string(name) + "'");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t v) {
  Monomial m(nvars);
  m.exp.at(v) = 1;
  return m;
}

std::uint32_t Monomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exp.begin(), exp.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (other.exp[i] > exp[i]) throw Error(Errc::kInvalidArgument, "monomial quotient is not exact");
    q.exp[i] = exp[i] - other.exp[i];
  }
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) l.exp[i] = std::max(exp[i], other.exp[i]);
  return l;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] != 0 && other.exp[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.exp.size());
  for (std::size_t i = 0; i < a.exp.size(); ++i) m.exp[i] = a.exp[i] + b.exp[i];
  return m;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
  const std::size_t n = a.exp.size();
  if (order == MonomialOrder::kGrevlex) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = n; i-- > 0;) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(std::size_t nvars, PrimeField field, MonomialOrder order)
    : nvars_(nvars), field_(field), order_(order) {}

Polynomial Polynomial::constant(std::size_t nvars, PrimeField field, MonomialOrder order, std::int64_t c) {
  Polynomial p(nvars, field, order);
  Residue r = field.reduce(c);
  if (r != 0) p.terms_.push_back({Monomial(nvars), r});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, Residue c, PrimeField field, MonomialOrder order) {
  Polynomial p(m.nvars(), field, order);
  c %= field.modulus();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, PrimeField field, MonomialOrder order, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) > 0; });
  Polynomial p(nvars, field, order);
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars) throw Error(Errc::kInvalidArgument, "term has the wrong number of variables");
    Residue c = t.coeff % field.modulus();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, c);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({std::move(t.mono), c});
    }
  }
  return p;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw Error(Errc::kInvalidArgument, "zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::low_degree() const noexcept {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept { return degree() == low_degree(); }

Residue Polynomial::coefficient(const Monomial& m) const noexcept {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  return from_terms(nvars_, field_, order, terms_);
}

Polynomial Polynomial::scaled(Residue c) const {
  Polynomial p(nvars_, field_, order_);
  c %= field_.modulus();
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff = field_.mul(t.coeff, c);
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, Residue c) const {
  Polynomial p(nvars_, field_, order_);
  c %= field_.modulus();
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(terms_.front().coeff));
}

void Polynomial::add_multiple(const Polynomial& other, const Monomial& m, Residue c) {
  check_compatible(other);
  c %= field_.modulus();
  if (c == 0 || other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      merged.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial om = other.terms_[j].mono * m;
    int cmp = i == terms_.size() ? -1 : compare(terms_[i].mono, om, order_);
    if (cmp > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      merged.push_back({std::move(om), field_.mul(other.terms_[j++].coeff, c)});
    } else {
      Residue s = field_.add(terms_[i].coeff, field_.mul(other.terms_[j].coeff, c));
      if (s != 0) merged.push_back({std::move(terms_[i].mono), s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_ || field_ != other.field_ || order_ != other.order_) {
    throw Error(Errc::kInvalidArgument, "polynomials live in different rings");
  }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.add_multiple(b, Monomial(a.nvars_), 1);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.add_multiple(b, Monomial(a.nvars_), a.field_.neg(1));
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) terms.push_back({s.mono * t.mono, a.field_.mul(s.coeff, t.coeff)});
  }
  return Polynomial::from_terms(a.nvars_, a.field_, a.order_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.field_ != b.field_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::int64_t c = field_.centered(t.coeff);
    bool neg = c < 0;
    std::uint64_t mag = neg ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += monomial_to_string(t.mono, vars);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, PrimeField field)
      : text_(text), vars_(vars), field_(field) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = term();
      if (neg) t.coeff = field_.neg(t.coeff);
      terms.push_back(std::move(t));
      skip();
    }
    return terms;
  }

 private:
  Term term() {
    Term t{Monomial(vars_.size()), 1 % field_.modulus()};
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = number_mod_p();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!is_ident_start(peek())) fail("expected a variable after '*'");
      }
    }
    if (!is_ident_start(peek())) {
      if (!have_coeff) fail("expected a coefficient or variable");
      return t;
    }
    while (true) {
      std::size_t v = variable();
      skip();
      std::uint64_t e = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent after '^'");
        e = small_number();
        skip();
      }
      t.mono.exp[v] += static_cast<std::uint32_t>(e);
      if (peek() != '*') break;
      ++pos_;
      skip();
    }
    return t;
  }

  std::size_t variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    pos_ = start;
    fail("unknown variable '" + std::string(name) + "'");
  }

  Residue number_mod_p() {
    std::uint64_t acc = 0;
    const std::uint64_t p = field_.modulus();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      acc = (acc * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
      ++pos_;
    }
    return static_cast<Residue>(acc);
  }

  std::uint64_t small_number() {
    std::uint64_t acc = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      acc = acc * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (acc > 1000000) fail("exponent too large");
      ++pos_;
    }
    return acc;
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::kParse, what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  PrimeField field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars, PrimeField field,
                            MonomialOrder order) {
  Parser parser(text, vars, field);
  return Polynomial::from_terms(vars.size(), field, order, parser.parse());
}

}  // namespace curvlab
