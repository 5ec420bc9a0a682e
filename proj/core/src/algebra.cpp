#include "curvlab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Dimensions of m^t as a subspace of an artinian A, t = 0, 1, ... until zero.
std::vector<std::size_t> power_dimensions(const QuotientAlgebra& a) {
  const std::size_t len = a.basis().size();
  std::vector<std::size_t> dims;
  std::vector<Vector> layer;
  for (std::size_t j = 0; j < len; ++j) {
    Vector e(len, 0);
    e[j] = 1;
    layer.push_back(std::move(e));
  }
  dims.push_back(len);
  while (!layer.empty()) {
    RowSpace next(len, a.field());
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      for (const auto& u : layer) next.insert(a.action(v).apply(u));
    }
    dims.push_back(next.dim());
    layer = next.basis();
    if (dims.size() > len + 2) throw Error(Errc::kNotLocal, "maximal ideal is not nilpotent");
  }
  return dims;
}

}  // namespace

std::uint32_t QuotientAlgebra::top_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& m : basis_) d = std::max(d, m.degree());
  return d;
}

std::optional<std::size_t> QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = index_.find(m.exp);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void QuotientAlgebra::require_artinian(const char* what) const {
  if (krull_dim_ != 0) {
    throw Error(Errc::kUnsupportedDimension,
                std::string(what) + " needs an artinian algebra (Krull dimension " + std::to_string(krull_dim_) + ")");
  }
}

std::size_t QuotientAlgebra::length() const {
  require_artinian("length");
  return basis_.size();
}

std::size_t QuotientAlgebra::loewy_length() const {
  require_artinian("Loewy length");
  auto dims = power_dimensions(*this);
  return dims.size() - 1;
}

Polynomial QuotientAlgebra::parse(std::string_view text) const {
  return parse_polynomial(text, vars_, field_, order_);
}

Vector QuotientAlgebra::coordinates(const Polynomial& f) const {
  if (f.nvars() != nvars()) throw Error(Errc::kInvalidArgument, "polynomial from another ring");
  Polynomial g = f.order() == order_ ? f : f.with_order(order_);
  Polynomial nf = reduce(g);
  Vector v(basis_.size(), 0);
  for (const auto& t : nf.terms()) {
    auto idx = index_of(t.mono);
    if (!idx) throw Error(Errc::kInvalidArgument, "element degree exceeds the truncated basis");
    v[*idx] = t.coeff;
  }
  return v;
}

Polynomial QuotientAlgebra::element(std::span<const Residue> coords) const {
  if (coords.size() != basis_.size()) throw Error(Errc::kInvalidArgument, "coordinate vector has wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] % field_.modulus() != 0) terms.push_back({basis_[i], coords[i] % field_.modulus()});
  }
  return Polynomial::from_terms(nvars(), field_, order_, std::move(terms));
}

const Matrix& QuotientAlgebra::action(std::size_t v) const {
  require_artinian("multiplication table");
  return actions_.at(v);
}

const SparseVec& QuotientAlgebra::product(std::size_t i, std::size_t j) const {
  require_artinian("product table");
  return products_.at(i * basis_.size() + j);
}

HilbertFunction QuotientAlgebra::hilbert_function(std::uint32_t cap) const {
  HilbertFunction hf;
  if (krull_dim_ == 0) {
    auto dims = power_dimensions(*this);
    for (std::size_t t = 0; t + 1 < dims.size(); ++t) hf.values.push_back(dims[t] - dims[t + 1]);
    while (hf.values.size() <= cap) hf.values.push_back(0);
    hf.stabilized = true;
    return hf;
  }
  std::vector<Monomial> mons = cap <= basis_cap_ ? basis_ : standard_monomials(gb_, cap);
  hf.values.assign(cap + 1, 0);
  for (const auto& m : mons) {
    if (m.degree() <= cap) ++hf.values[m.degree()];
  }
  if (hf.values.size() >= 3) {
    const auto n = hf.values.size();
    hf.stabilized = hf.values[n - 1] == hf.values[n - 2] && hf.values[n - 2] == hf.values[n - 3];
  }
  return hf;
}

AlgebraPtr build_algebra(PrimeField field, std::vector<std::string> vars, std::vector<Polynomial> ideal,
                         MonomialOrder order, std::uint32_t degree_guard) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) throw Error(Errc::kInvalidArgument, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(Errc::kInvalidArgument, "duplicate variable '" + v + "'");
  }
  if (vars.size() > 24) throw Error(Errc::kInvalidArgument, "at most 24 variables are supported");
  const std::size_t n = vars.size();

  std::shared_ptr<QuotientAlgebra> a(new QuotientAlgebra());
  a->field_ = field;
  a->vars_ = std::move(vars);
  a->order_ = order;
  for (auto& f : ideal) {
    if (f.nvars() != n || !(f.field() == field)) throw Error(Errc::kInvalidArgument, "generator from another ring");
    Polynomial g = f.order() == order ? f : f.with_order(order);
    if (g.is_zero()) continue;
    for (const auto& t : g.terms()) {
      if (t.mono.degree() < 2) {
        throw Error(Errc::kNotInMSquared, "generator " + g.to_string(a->vars_) + " has a term of degree below 2");
      }
    }
    a->ideal_.push_back(std::move(g));
  }

  if (!a->ideal_.empty()) {
    a->gb_ = buchberger(a->ideal_, degree_guard);
  }
  a->gb_.order = order;
  for (const auto& g : a->gb_.generators) {
    if (!g.is_homogeneous()) a->homogeneous_ = false;
  }
  const auto leading = a->gb_.leading_monomials();
  a->krull_dim_ = monomial_ideal_dimension(leading, n);

  std::uint32_t maxdeg = 0;
  for (const auto& g : a->ideal_) maxdeg = std::max(maxdeg, g.degree());

  if (a->krull_dim_ == 0) {
    // Every monomial of degree above the largest leading-term degree times n is non-standard.
    std::uint32_t bound = 1;
    for (const auto& l : leading) bound += l.degree();
    a->basis_ = standard_monomials(leading, n, order, bound);
    a->basis_cap_ = a->top_degree();
  } else {
    if (!a->homogeneous_) {
      throw Error(Errc::kInvalidArgument, "rings of positive dimension must be given by homogeneous generators");
    }
    a->basis_cap_ = 2 * maxdeg + 5;
    a->basis_ = standard_monomials(leading, n, order, a->basis_cap_);
  }
  for (std::size_t i = 0; i < a->basis_.size(); ++i) a->index_.emplace(a->basis_[i].exp, i);

  a->factor_.assign(a->basis_.size(), {0, 0});
  for (std::size_t i = 1; i < a->basis_.size(); ++i) {
    const Monomial& m = a->basis_[i];
    std::size_t v = 0;
    while (m.exp[v] == 0) ++v;
    Monomial q = m;
    --q.exp[v];
    a->factor_[i] = {v, *a->index_of(q)};
  }

  if (a->krull_dim_ == 0) {
    const std::size_t len = a->basis_.size();
    for (std::size_t v = 0; v < n; ++v) {
      Matrix act(len, len, field);
      for (std::size_t j = 0; j < len; ++j) {
        Vector col = a->coordinates(Polynomial::monomial(a->basis_[j] * Monomial::variable(n, v), 1, field, order));
        for (std::size_t r = 0; r < len; ++r) act.set(r, j, col[r]);
      }
      a->actions_.push_back(std::move(act));
    }
    // Local: the maximal ideal must be nilpotent.
    for (std::size_t v = 0; v < n; ++v) {
      Monomial pw(n);
      pw.exp[v] = static_cast<std::uint32_t>(len);
      if (!a->reduce(Polynomial::monomial(pw, 1, field, order)).is_zero()) {
        throw Error(Errc::kNotLocal, "variable " + a->vars_[v] + " is not nilpotent; the quotient is not local");
      }
    }
    a->products_.resize(len * len);
    for (std::size_t j = 0; j < len; ++j) {
      Vector e(len, 0);
      e[j] = 1;
      a->products_[j] = SparseVec::from_dense(e);
    }
    for (std::size_t i = 1; i < len; ++i) {
      auto [v, q] = a->factor_[i];
      for (std::size_t j = 0; j < len; ++j) {
        Vector prev = a->products_[q * len + j].dense(len);
        a->products_[i * len + j] = SparseVec::from_dense(a->actions_[v].apply(prev));
      }
    }
  }
  return a;
}

AlgebraPtr build_algebra(std::uint32_t p, const std::vector<std::string>& vars, const std::vector<std::string>& ideal,
                         MonomialOrder order, std::uint32_t degree_guard) {
  PrimeField field(p);
  std::vector<Polynomial> gens;
  for (const auto& s : ideal) gens.push_back(parse_polynomial(s, vars, field, order));
  return build_algebra(field, vars, std::move(gens), order, degree_guard);
}

std::size_t multiplicity(const QuotientAlgebra& a) {
  if (a.krull_dim() == 0) return a.length();
  if (a.krull_dim() >= 2) {
    throw Error(Errc::kUnsupportedDimension, "multiplicity is only computed for Krull dimension at most 1");
  }
  std::uint32_t cap = a.basis_cap();
  for (int tries = 0; tries < 4; ++tries, cap *= 2) {
    auto hf = a.hilbert_function(cap);
    if (hf.stabilized) return hf.values.back();
  }
  throw Error(Errc::kGuardExceeded, "Hilbert function did not stabilise");
}

std::size_t minimal_generator_count(const QuotientAlgebra& a) {
  if (a.ideal().empty()) return 0;
  const std::size_t n = a.nvars();
  std::uint32_t maxdeg = 0;
  for (const auto& g : a.ideal()) maxdeg = std::max(maxdeg, g.degree());
  std::uint32_t t_cap = maxdeg + 1;
  if (a.krull_dim() == 0) t_cap = std::max<std::uint32_t>(t_cap, static_cast<std::uint32_t>(a.loewy_length()) + 1);

  // All monomials of degree < t_cap, indexed.
  std::vector<Monomial> mons = standard_monomials({}, n, a.order(), t_cap - 1);
  std::map<std::vector<std::uint32_t>, std::size_t> idx;
  for (std::size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i].exp, i);

  RowSpace all(mons.size(), a.field());
  RowSpace deep(mons.size(), a.field());
  for (const auto& s : mons) {
    for (const auto& g : a.ideal()) {
      if (s.degree() + g.low_degree() >= t_cap) continue;
      Vector v(mons.size(), 0);
      for (const auto& t : g.terms()) {
        Monomial m = t.mono * s;
        if (m.degree() >= t_cap) continue;
        v[idx.at(m.exp)] = t.coeff;
      }
      all.insert(v);
      if (s.degree() >= 1) deep.insert(v);
    }
  }
  return all.dim() - deep.dim();
}

bool is_complete_intersection(const QuotientAlgebra& a) {
  return minimal_generator_count(a) == a.nvars() - a.krull_dim();
}

std::uint32_t default_degree_bound(const QuotientAlgebra& a) {
  std::uint32_t maxdeg = 0;
  for (const auto& g : a.ideal()) maxdeg = std::max(maxdeg, g.degree());
  return 2 * maxdeg + 4;
}

bool is_regular_up_to(const QuotientAlgebra& a, const Polynomial& x, std::uint32_t bound) {
  if (x.is_zero() || !x.is_homogeneous() || x.degree() != 1) {
    throw Error(Errc::kInvalidArgument, "expected a nonzero linear form");
  }
  auto mons = standard_monomials(a.groebner().generators.empty() ? std::vector<Monomial>{}
                                                                 : a.groebner().leading_monomials(),
                                 a.nvars(), a.order(), bound + 1);
  std::map<std::vector<std::uint32_t>, std::size_t> idx;
  for (std::size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i].exp, i);
  for (std::uint32_t t = 0; t <= bound; ++t) {
    std::vector<Vector> images;
    for (const auto& s : mons) {
      if (s.degree() != t) continue;
      Polynomial prod = a.reduce(x.times_monomial(s, 1));
      Vector v(mons.size(), 0);
      for (const auto& term : prod.terms()) v[idx.at(term.mono.exp)] = term.coeff;
      images.push_back(std::move(v));
    }
    RowSpace span(mons.size(), a.field());
    for (auto& v : images) {
      if (!span.insert(v)) return false;
    }
  }
  return true;
}

std::optional<Polynomial> find_linear_regular_element(const QuotientAlgebra& a, std::uint32_t degree_bound,
                                                      std::size_t attempts, std::uint64_t seed) {
  if (a.krull_dim() == 0) {
    throw Error(Errc::kZeroDimensional, "an artinian ring has no regular element in its maximal ideal");
  }
  std::mt19937_64 rng(seed);
  const std::uint32_t p = a.characteristic();
  for (std::size_t k = 0; k < attempts; ++k) {
    std::vector<Term> terms;
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      Residue c = static_cast<Residue>(rng() % p);
      if (c != 0) terms.push_back({Monomial::variable(a.nvars(), v), c});
    }
    if (terms.empty()) continue;
    Polynomial x = Polynomial::from_terms(a.nvars(), a.field(), a.order(), std::move(terms));
    if (is_regular_up_to(a, x, degree_bound)) return x;
  }
  return std::nullopt;
}

AlgebraPtr quotient_by_linear_form(const QuotientAlgebra& a, const Polynomial& x) {
  if (x.is_zero() || !x.is_homogeneous() || x.degree() != 1) {
    throw Error(Errc::kInvalidArgument, "expected a nonzero linear form");
  }
  const std::size_t n = a.nvars();
  const PrimeField& f = a.field();
  std::size_t piv = n;
  for (std::size_t v = 0; v < n && piv == n; ++v) {
    if (x.coefficient(Monomial::variable(n, v)) != 0) piv = v;
  }
  // x_piv = -(1/c) * sum_{v != piv} c_v x_v, written in the remaining variables.
  std::vector<std::string> rest;
  std::vector<std::size_t> new_index(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == piv) continue;
    new_index[v] = rest.size();
    rest.push_back(a.vars()[v]);
  }
  const std::size_t m = rest.size();
  const Residue scale = f.neg(f.inv(x.coefficient(Monomial::variable(n, piv))));
  std::vector<Term> sub_terms;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == piv) continue;
    Residue c = x.coefficient(Monomial::variable(n, v));
    if (c != 0) sub_terms.push_back({Monomial::variable(m, new_index[v]), f.mul(c, scale)});
  }
  const Polynomial image = Polynomial::from_terms(m, f, a.order(), std::move(sub_terms));

  std::vector<Polynomial> gens;
  for (const auto& g : a.ideal()) {
    Polynomial acc(m, f, a.order());
    for (const auto& t : g.terms()) {
      Monomial rest_mono(m);
      for (std::size_t v = 0; v < n; ++v) {
        if (v != piv) rest_mono.exp[new_index[v]] = t.mono.exp[v];
      }
      Polynomial term = Polynomial::monomial(rest_mono, t.coeff, f, a.order());
      for (std::uint32_t e = 0; e < t.mono.exp[piv]; ++e) term = term * image;
      acc = acc + term;
    }
    if (!acc.is_zero()) gens.push_back(std::move(acc));
  }
  return build_algebra(f, std::move(rest), std::move(gens), a.order());
}

}  // namespace curvlab
