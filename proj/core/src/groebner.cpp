#include "curvlab/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "curvlab/error.hpp"

namespace curvlab {

bool GroebnerBasis::is_unit() const noexcept {
  return generators.size() == 1 && generators.front().leading_monomial().is_one();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.leading_monomial());
  return out;
}

namespace {

// Full reduction of f by the polynomials in basis (indices into pool).
Polynomial reduce_by(Polynomial f, const std::vector<Polynomial>& pool, const std::vector<std::size_t>& basis) {
  const PrimeField field = f.field();
  Polynomial rem(f.nvars(), field, f.order());
  std::vector<Term> kept;
  while (!f.is_zero()) {
    const Term lead = f.leading();
    bool reduced = false;
    for (std::size_t idx : basis) {
      const Polynomial& g = pool[idx];
      const Term& gl = g.leading();
      if (gl.mono.divides(lead.mono)) {
        Residue c = field.neg(field.mul(lead.coeff, field.inv(gl.coeff)));
        f.add_multiple(g, lead.mono.quotient(gl.mono), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      kept.push_back(lead);
      f.add_multiple(Polynomial::monomial(lead.mono, lead.coeff, field, f.order()), Monomial(f.nvars()),
                     field.neg(1));
    }
  }
  return Polynomial::from_terms(rem.nvars(), field, rem.order(), std::move(kept));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const PrimeField field = f.field();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial s = f.times_monomial(l.quotient(f.leading_monomial()), field.inv(f.leading().coeff));
  s.add_multiple(g, l.quotient(g.leading_monomial()), field.neg(field.inv(g.leading().coeff)));
  return s;
}

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

void check_guard(std::uint32_t deg, std::uint32_t guard) {
  if (deg > guard) {
    throw Error(Errc::kGuardExceeded,
                "degree " + std::to_string(deg) + " exceeds the degree guard " + std::to_string(guard));
  }
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::uint32_t degree_guard) {
  if (gens.empty()) throw Error(Errc::kInvalidArgument, "buchberger needs at least one generator");
  const std::size_t n = gens.front().nvars();
  const PrimeField field = gens.front().field();
  const MonomialOrder order = gens.front().order();
  GroebnerBasis out;
  out.order = order;

  std::vector<Polynomial> pool;
  for (const auto& g : gens) {
    if (g.nvars() != n || !(g.field() == field) || g.order() != order) {
      throw Error(Errc::kInvalidArgument, "generators live in different rings");
    }
    if (g.is_zero()) continue;
    check_guard(g.degree(), degree_guard);
    if (g.leading_monomial().is_one()) {
      out.generators.push_back(Polynomial::constant(n, field, order, 1));
      return out;
    }
    pool.push_back(g.monic());
  }
  if (pool.empty()) return out;

  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  // Gebauer-Moeller update with new element h = pool[hi].
  auto update = [&](std::size_t hi) {
    const Monomial& lh = pool[hi].leading_monomial();
    std::vector<Pair> fresh;
    for (std::size_t g : active) {
      Monomial l = lh.lcm(pool[g].leading_monomial());
      check_guard(l.degree(), degree_guard);
      fresh.push_back({g, hi, std::move(l)});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& pa = fresh[a];
      bool coprime = lh.coprime(pool[pa.i].leading_monomial());
      bool redundant = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < fresh.size() && !redundant; ++b) {
          if (fresh[b].lcm.divides(pa.lcm)) redundant = true;
        }
        for (const auto& pk : kept) {
          if (redundant) break;
          if (pk.lcm.divides(pa.lcm)) redundant = true;
        }
      }
      if (!redundant) kept.push_back(pa);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      const Monomial li = pool[p.i].leading_monomial().lcm(lh);
      const Monomial lj = pool[p.j].leading_monomial().lcm(lh);
      if (lh.divides(p.lcm) && !(li == p.lcm) && !(lj == p.lcm)) continue;
      next.push_back(std::move(p));
    }
    for (auto& p : kept) {
      if (lh.coprime(pool[p.i].leading_monomial())) continue;
      next.push_back(std::move(p));
    }
    pairs = std::move(next);
    std::vector<std::size_t> still;
    for (std::size_t g : active) {
      if (!lh.divides(pool[g].leading_monomial())) still.push_back(g);
    }
    still.push_back(hi);
    active = std::move(still);
  };

  // Seed with the inputs one at a time, each reduced by those before it.
  std::vector<std::size_t> order_in(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) order_in[i] = i;
  std::stable_sort(order_in.begin(), order_in.end(), [&](std::size_t a, std::size_t b) {
    return compare(pool[a].leading_monomial(), pool[b].leading_monomial(), order) < 0;
  });
  const std::vector<Polynomial> inputs = pool;
  pool.clear();
  for (std::size_t idx : order_in) {
    Polynomial h = reduce_by(inputs[idx], pool, active);
    if (h.is_zero()) continue;
    if (h.leading_monomial().is_one()) {
      out.generators.push_back(Polynomial::constant(n, field, order, 1));
      return out;
    }
    pool.push_back(h.monic());
    update(pool.size() - 1);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      const auto da = a.lcm.degree(), db = b.lcm.degree();
      if (da != db) return da < db;
      int c = compare(a.lcm, b.lcm, order);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair p = *best;
    pairs.erase(best);
    Polynomial h = reduce_by(s_polynomial(pool[p.i], pool[p.j]), pool, active);
    if (h.is_zero()) continue;
    check_guard(h.degree(), degree_guard);
    if (h.leading_monomial().is_one()) {
      out.generators.clear();
      out.generators.push_back(Polynomial::constant(n, field, order, 1));
      return out;
    }
    pool.push_back(h.monic());
    update(pool.size() - 1);
  }

  // Minimal basis, then interreduce tails.
  std::vector<std::size_t> minimal;
  for (std::size_t a : active) {
    bool drop = false;
    for (std::size_t b : active) {
      if (a == b) continue;
      const Monomial& la = pool[a].leading_monomial();
      const Monomial& lb = pool[b].leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) {
        drop = true;
        break;
      }
    }
    if (!drop) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end(), [&](std::size_t a, std::size_t b) {
    return compare(pool[a].leading_monomial(), pool[b].leading_monomial(), order) < 0;
  });
  for (std::size_t a : minimal) {
    std::vector<std::size_t> others;
    for (std::size_t b : minimal) {
      if (b != a) others.push_back(b);
    }
    const Polynomial& g = pool[a];
    Polynomial tail = g - Polynomial::monomial(g.leading_monomial(), g.leading().coeff, field, order);
    Polynomial reduced_tail = reduce_by(tail, pool, others);
    out.generators.push_back(
        (reduced_tail + Polynomial::monomial(g.leading_monomial(), g.leading().coeff, field, order)).monic());
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  std::vector<std::size_t> all(g.generators.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (const auto& p : g.generators) {
    if (p.nvars() != f.nvars() || p.order() != f.order()) {
      throw Error(Errc::kInvalidArgument, "normal form across different rings or orders");
    }
  }
  return reduce_by(f, g.generators, all);
}

bool is_groebner_basis(const GroebnerBasis& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < g.generators.size(); ++j) {
      if (!normal_form(s_polynomial(g.generators[i], g.generators[j]), g).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading, std::size_t nvars,
                                         MonomialOrder order, std::uint32_t degree_cap) {
  auto standard = [&](const Monomial& m) {
    for (const auto& l : leading) {
      if (l.divides(m)) return false;
    }
    return true;
  };
  std::vector<Monomial> out;
  std::vector<Monomial> layer;
  Monomial one(nvars);
  if (!standard(one)) return out;
  layer.push_back(one);
  out.push_back(one);
  for (std::uint32_t d = 1; d <= degree_cap && !layer.empty(); ++d) {
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      for (std::size_t v = 0; v < nvars; ++v) {
        Monomial c = m;
        ++c.exp[v];
        if (standard(c)) next.push_back(std::move(c));
      }
    }
    std::sort(next.begin(), next.end(), [order](const Monomial& a, const Monomial& b) {
      return compare(a, b, order) > 0;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& g, std::uint32_t degree_cap) {
  if (g.generators.empty()) return {};
  return standard_monomials(g.leading_monomials(), g.generators.front().nvars(), g.order, degree_cap);
}

std::size_t monomial_ideal_dimension(const std::vector<Monomial>& leading, std::size_t nvars) {
  if (leading.empty()) return nvars;
  std::vector<std::uint64_t> supports;
  for (const auto& m : leading) {
    std::uint64_t s = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (m.exp[v] != 0) s |= std::uint64_t{1} << v;
    }
    if (s == 0) return 0;  // unit ideal
    supports.push_back(s);
  }
  if (nvars > 24) throw Error(Errc::kInvalidArgument, "too many variables for the dimension search");
  std::size_t best = nvars;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nvars); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool hits = std::all_of(supports.begin(), supports.end(), [mask](std::uint64_t s) { return (s & mask) != 0; });
    if (hits) best = size;
  }
  return nvars - best;
}

}  // namespace curvlab
