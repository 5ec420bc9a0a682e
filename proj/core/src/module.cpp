#include "curvlab/module.hpp"

#include <algorithm>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

bool degrees_consistent(const std::vector<Matrix>& actions, const std::vector<int>& degrees) {
  for (const auto& act : actions) {
    for (std::size_t r = 0; r < act.rows(); ++r) {
      for (std::size_t c = 0; c < act.cols(); ++c) {
        if (act.at(r, c) != 0 && degrees[r] != degrees[c] + 1) return false;
      }
    }
  }
  return true;
}

// Degree of a vector whose support is homogeneous, or nullopt.
std::optional<int> vector_degree(std::span<const Residue> v, const std::vector<int>& degrees) {
  std::optional<int> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!d) {
      d = degrees[i];
    } else if (*d != degrees[i]) {
      return std::nullopt;
    }
  }
  return d;
}

}  // namespace

ModuleRep::ModuleRep(AlgebraPtr algebra, std::vector<Matrix> actions, std::vector<int> degrees,
                     std::string provenance)
    : algebra_(std::move(algebra)), actions_(std::move(actions)), provenance_(std::move(provenance)) {
  if (!algebra_) throw Error(Errc::kInvalidArgument, "module without an algebra");
  if (!algebra_->is_artinian()) throw Error(Errc::kNotArtinian, "modules are only represented over artinian algebras");
  if (actions_.size() != algebra_->nvars()) throw Error(Errc::kInvalidArgument, "need one action matrix per variable");
  dim_ = actions_.empty() ? degrees.size() : actions_.front().rows();
  for (const auto& a : actions_) {
    if (a.rows() != dim_ || a.cols() != dim_ || !(a.field() == algebra_->field())) {
      throw Error(Errc::kInvalidArgument, "action matrices must be square of the module dimension");
    }
  }
  if (actions_.empty() && degrees.empty()) dim_ = 0;
  if (!degrees.empty()) {
    if (degrees.size() != dim_) throw Error(Errc::kInvalidArgument, "degree list has the wrong length");
    if (algebra_->is_homogeneous() && degrees_consistent(actions_, degrees)) {
      degrees_ = std::move(degrees);
      graded_ = true;
    }
  } else if (dim_ == 0) {
    graded_ = algebra_->is_homogeneous();
  }
}

ModuleRep ModuleRep::zero(AlgebraPtr algebra) {
  const std::size_t n = algebra->nvars();
  std::vector<Matrix> acts(n, Matrix(0, 0, algebra->field()));
  return ModuleRep(std::move(algebra), std::move(acts), {}, "zero");
}

ModuleRep ModuleRep::free(AlgebraPtr algebra, std::size_t rank) {
  if (!algebra->is_artinian()) throw Error(Errc::kNotArtinian, "free modules need an artinian algebra");
  const std::size_t len = algebra->length();
  const std::size_t dim = len * rank;
  std::vector<Matrix> acts;
  for (std::size_t v = 0; v < algebra->nvars(); ++v) {
    Matrix m(dim, dim, algebra->field());
    const Matrix& a = algebra->action(v);
    for (std::size_t g = 0; g < rank; ++g) {
      for (std::size_t r = 0; r < len; ++r) {
        for (std::size_t c = 0; c < len; ++c) m.row_mut(g * len + r)[g * len + c] = a.at(r, c);
      }
    }
    acts.push_back(std::move(m));
  }
  std::vector<int> degrees;
  for (std::size_t g = 0; g < rank; ++g) {
    for (std::size_t s = 0; s < len; ++s) degrees.push_back(static_cast<int>(algebra->basis_degree(s)));
  }
  if (dim == 0) {
    return ModuleRep(algebra, std::vector<Matrix>(algebra->nvars(), Matrix(0, 0, algebra->field())), {},
                     "free of rank 0");
  }
  auto alg = algebra;
  return ModuleRep(std::move(alg), std::move(acts), std::move(degrees), "free of rank " + std::to_string(rank));
}

std::vector<Matrix> ModuleRep::monomial_actions() const {
  const QuotientAlgebra& a = *algebra_;
  std::vector<Matrix> out;
  out.reserve(a.basis().size());
  out.push_back(Matrix::identity(dim_, a.field()));
  for (std::size_t i = 1; i < a.basis().size(); ++i) {
    auto [v, q] = a.factor(i);
    out.push_back(actions_[v] * out[q]);
  }
  return out;
}

ModuleRep ModuleRep::ungraded() const {
  ModuleRep m = *this;
  m.degrees_.clear();
  m.graded_ = false;
  return m;
}

ModuleRep ModuleRep::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != dim_) throw Error(Errc::kInvalidArgument, "permutation has the wrong length");
  std::vector<Matrix> acts;
  for (const auto& a : actions_) {
    Matrix m(dim_, dim_, a.field());
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) m.row_mut(perm[r])[perm[c]] = a.at(r, c);
    }
    acts.push_back(std::move(m));
  }
  std::vector<int> degs;
  if (graded_) {
    degs.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) degs[perm[i]] = degrees_[i];
  }
  if (dim_ == 0) return *this;
  return ModuleRep(algebra_, std::move(acts), std::move(degs), provenance_);
}

bool ModuleRep::satisfies_relations() const {
  for (std::size_t v = 0; v < actions_.size(); ++v) {
    for (std::size_t w = v + 1; w < actions_.size(); ++w) {
      if (!(actions_[v] * actions_[w] == actions_[w] * actions_[v])) return false;
    }
  }
  if (dim_ == 0) return true;
  const QuotientAlgebra& a = *algebra_;
  for (const auto& g : a.ideal()) {
    Matrix sum(dim_, dim_, a.field());
    for (const auto& t : g.terms()) {
      Matrix term = Matrix::identity(dim_, a.field());
      for (std::size_t v = 0; v < a.nvars(); ++v) {
        for (std::uint32_t e = 0; e < t.mono.exp[v]; ++e) term = actions_[v] * term;
      }
      for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
          sum.row_mut(r)[c] = a.field().add(sum.at(r, c), a.field().mul(t.coeff, term.at(r, c)));
        }
      }
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

PresentationMatrix PresentationMatrix::from_polynomials(const QuotientAlgebra& a,
                                                        const std::vector<std::vector<Polynomial>>& rows) {
  PresentationMatrix pm;
  pm.algebra_length = a.length();
  pm.target_rank = rows.size();
  pm.source_rank = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != pm.source_rank) throw Error(Errc::kInvalidArgument, "ragged presentation matrix");
  }
  const std::size_t len = pm.algebra_length;
  for (std::size_t c = 0; c < pm.source_rank; ++c) {
    SparseVec col;
    for (std::size_t r = 0; r < pm.target_rank; ++r) {
      Vector e = a.coordinates(rows[r][c]);
      for (std::size_t s = 0; s < len; ++s) {
        if (e[s] != 0) col.push(static_cast<std::uint32_t>(r * len + s), e[s]);
      }
    }
    pm.columns.push_back(std::move(col));
  }
  return pm;
}

PresentationMatrix PresentationMatrix::from_strings(const QuotientAlgebra& a,
                                                    const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& row : rows) {
    std::vector<Polynomial> pr;
    for (const auto& s : row) pr.push_back(a.parse(s));
    polys.push_back(std::move(pr));
  }
  return from_polynomials(a, polys);
}

Vector PresentationMatrix::entry(std::size_t r, std::size_t c) const {
  Vector e(algebra_length, 0);
  const SparseVec& col = columns.at(c);
  for (std::size_t k = 0; k < col.nnz(); ++k) {
    if (col.index[k] / algebra_length == r) e[col.index[k] % algebra_length] = col.value[k];
  }
  return e;
}

bool PresentationMatrix::is_minimal() const {
  for (const auto& col : columns) {
    for (auto idx : col.index) {
      if (idx % algebra_length == 0) return false;
    }
  }
  return true;
}

RowSpace submodule_closure(const ModuleRep& m, const std::vector<Vector>& gens) {
  RowSpace s(m.dim(), m.algebra().field());
  std::vector<Vector> pending;
  for (const auto& g : gens) {
    if (s.insert(g)) pending.push_back(g);
  }
  while (!pending.empty()) {
    std::vector<Vector> next;
    for (const auto& u : pending) {
      for (const auto& act : m.actions()) {
        Vector w = act.apply(u);
        if (s.insert(w)) next.push_back(std::move(w));
      }
    }
    pending = std::move(next);
  }
  return s;
}

ModuleRep quotient_module(const ModuleRep& m, const RowSpace& s) {
  const auto comp = s.complement();
  const std::size_t q = comp.size();
  const PrimeField& f = m.algebra().field();
  bool graded = m.graded();
  if (graded) {
    for (const auto& row : s.basis()) {
      if (!vector_degree(row, m.degrees())) {
        graded = false;
        break;
      }
    }
  }
  std::vector<Matrix> acts;
  for (const auto& act : m.actions()) {
    Matrix out(q, q, f);
    for (std::size_t j = 0; j < q; ++j) {
      Vector w = act.column(comp[j]);
      s.reduce(w);
      for (std::size_t k = 0; k < q; ++k) out.row_mut(k)[j] = w[comp[k]];
    }
    acts.push_back(std::move(out));
  }
  std::vector<int> degs;
  if (graded) {
    for (auto c : comp) degs.push_back(m.degrees()[c]);
  }
  if (q == 0) return ModuleRep::zero(m.algebra_ptr());
  return ModuleRep(m.algebra_ptr(), std::move(acts), std::move(degs));
}

ModuleRep submodule(const ModuleRep& m, const RowSpace& s) {
  const std::size_t k = s.dim();
  if (k == 0) return ModuleRep::zero(m.algebra_ptr());
  const PrimeField& f = m.algebra().field();
  std::vector<Matrix> acts;
  for (const auto& act : m.actions()) {
    Matrix out(k, k, f);
    for (std::size_t j = 0; j < k; ++j) {
      Vector w = act.apply(s.basis()[j]);
      for (std::size_t t = 0; t < k; ++t) out.row_mut(t)[j] = w[s.pivots()[t]];
    }
    acts.push_back(std::move(out));
  }
  std::vector<int> degs;
  if (m.graded()) {
    for (const auto& row : s.basis()) {
      auto d = vector_degree(row, m.degrees());
      if (!d) {
        degs.clear();
        break;
      }
      degs.push_back(*d);
    }
  }
  return ModuleRep(m.algebra_ptr(), std::move(acts), std::move(degs));
}

ModuleRep cyclic_module(AlgebraPtr a, const std::vector<Polynomial>& ideal_gens) {
  ModuleRep ambient = ModuleRep::free(a, 1);
  std::vector<Vector> gens;
  for (const auto& g : ideal_gens) gens.push_back(a->coordinates(g));
  RowSpace s = submodule_closure(ambient, gens);
  if (s.dim() == a->length()) throw Error(Errc::kUnitIdeal, "the ideal contains a unit; the quotient is zero");
  ModuleRep m = quotient_module(ambient, s);
  std::string prov = "A/(";
  for (std::size_t i = 0; i < ideal_gens.size(); ++i) {
    if (i) prov += ", ";
    prov += ideal_gens[i].to_string(a->vars());
  }
  m.set_provenance(prov + ")");
  return m;
}

ModuleRep cyclic_module(AlgebraPtr a, const std::vector<std::string>& ideal_gens) {
  std::vector<Polynomial> polys;
  for (const auto& s : ideal_gens) polys.push_back(a->parse(s));
  return cyclic_module(std::move(a), polys);
}

ModuleRep cokernel_module(AlgebraPtr a, const PresentationMatrix& pm) {
  if (pm.algebra_length != a->length()) throw Error(Errc::kInvalidArgument, "presentation over another algebra");
  ModuleRep ambient = ModuleRep::free(a, pm.target_rank);
  std::vector<Vector> gens;
  for (const auto& col : pm.columns) gens.push_back(col.dense(ambient.dim()));
  RowSpace s = submodule_closure(ambient, gens);
  ModuleRep m = quotient_module(ambient, s);
  m.set_provenance("cokernel of a " + std::to_string(pm.target_rank) + "x" + std::to_string(pm.source_rank) +
                   " matrix");
  return m;
}

ModuleRep residue_field(AlgebraPtr a) {
  const PrimeField f = a->field();
  std::vector<Matrix> acts(a->nvars(), Matrix(1, 1, f));
  return ModuleRep(std::move(a), std::move(acts), {0}, "k");
}

RowSpace maximal_ideal_image(const ModuleRep& m) {
  RowSpace s(m.dim(), m.algebra().field());
  for (const auto& act : m.actions()) {
    for (std::size_t c = 0; c < m.dim(); ++c) s.insert(act.column(c));
  }
  return s;
}

std::size_t min_gens(const ModuleRep& m) { return m.dim() - maximal_ideal_image(m).dim(); }

std::vector<std::size_t> minimal_generator_indices(const ModuleRep& m) {
  return maximal_ideal_image(m).complement();
}

std::size_t socle_dim(const ModuleRep& m) {
  const std::size_t d = m.dim();
  if (d == 0) return 0;
  const std::size_t n = m.actions().size();
  Matrix stacked(n * d, d, m.algebra().field());
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) stacked.row_mut(v * d + r)[c] = m.action(v).at(r, c);
    }
  }
  return d - rank(std::move(stacked));
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw Error(Errc::kInvalidArgument, "modules over different algebras");
  const std::size_t a = m.dim(), b = n.dim();
  if (a + b == 0) return ModuleRep::zero(m.algebra_ptr());
  std::vector<Matrix> acts;
  for (std::size_t v = 0; v < m.actions().size(); ++v) {
    Matrix s(a + b, a + b, m.algebra().field());
    for (std::size_t r = 0; r < a; ++r) {
      for (std::size_t c = 0; c < a; ++c) s.row_mut(r)[c] = m.action(v).at(r, c);
    }
    for (std::size_t r = 0; r < b; ++r) {
      for (std::size_t c = 0; c < b; ++c) s.row_mut(a + r)[a + c] = n.action(v).at(r, c);
    }
    acts.push_back(std::move(s));
  }
  std::vector<int> degs;
  if (m.graded() && n.graded()) {
    degs = m.degrees();
    degs.insert(degs.end(), n.degrees().begin(), n.degrees().end());
  }
  return ModuleRep(m.algebra_ptr(), std::move(acts), std::move(degs));
}

ModuleRep tensor(const ModuleRep& m, const ModuleRep& n) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw Error(Errc::kInvalidArgument, "modules over different algebras");
  const std::size_t a = m.dim(), b = n.dim();
  if (a == 0 || b == 0) return ModuleRep::zero(m.algebra_ptr());
  const PrimeField& f = m.algebra().field();
  const std::size_t d = a * b;
  std::vector<Matrix> acts;
  for (std::size_t v = 0; v < m.actions().size(); ++v) {
    Matrix s(d, d, f);
    const Matrix& x = m.action(v);
    for (std::size_t r = 0; r < a; ++r) {
      for (std::size_t c = 0; c < a; ++c) {
        const Residue val = x.at(r, c);
        if (val == 0) continue;
        for (std::size_t j = 0; j < b; ++j) s.row_mut(r * b + j)[c * b + j] = val;
      }
    }
    acts.push_back(std::move(s));
  }
  std::vector<int> degs;
  if (m.graded() && n.graded()) {
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) degs.push_back(m.degrees()[i] + n.degrees()[j]);
    }
  }
  ModuleRep big(m.algebra_ptr(), std::move(acts), std::move(degs));
  RowSpace rel(d, f);
  for (std::size_t v = 0; v < m.actions().size(); ++v) {
    const Matrix& xm = m.action(v);
    const Matrix& xn = n.action(v);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        Vector w(d, 0);
        for (std::size_t r = 0; r < a; ++r) w[r * b + j] = f.add(w[r * b + j], xm.at(r, i));
        for (std::size_t s = 0; s < b; ++s) w[i * b + s] = f.sub(w[i * b + s], xn.at(s, j));
        rel.insert(std::move(w));
      }
    }
  }
  ModuleRep out = quotient_module(big, rel);
  out.set_provenance("tensor product");
  return out;
}

ModuleRep hom_module(const ModuleRep& m, const ModuleRep& n) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw Error(Errc::kInvalidArgument, "modules over different algebras");
  const std::size_t a = m.dim(), b = n.dim();
  if (a == 0 || b == 0) return ModuleRep::zero(m.algebra_ptr());
  const PrimeField& f = m.algebra().field();
  const std::size_t d = a * b;  // F is b x a, entry (r, c) at r * a + c
  const std::size_t nv = m.actions().size();
  Matrix cons(nv * d, d, f);
  for (std::size_t v = 0; v < nv; ++v) {
    const Matrix& xm = m.action(v);
    const Matrix& xn = n.action(v);
    for (std::size_t r = 0; r < b; ++r) {
      for (std::size_t c = 0; c < a; ++c) {
        auto row = cons.row_mut(v * d + r * a + c);
        // (F xm)[r][c] = sum_k F[r][k] xm[k][c]
        for (std::size_t k = 0; k < a; ++k) row[r * a + k] = f.add(row[r * a + k], xm.at(k, c));
        // (xn F)[r][c] = sum_s xn[r][s] F[s][c]
        for (std::size_t s = 0; s < b; ++s) row[s * a + c] = f.sub(row[s * a + c], xn.at(r, s));
      }
    }
  }
  std::vector<Matrix> acts;
  for (std::size_t v = 0; v < nv; ++v) {
    Matrix s(d, d, f);
    const Matrix& xn = n.action(v);
    for (std::size_t r = 0; r < b; ++r) {
      for (std::size_t t = 0; t < b; ++t) {
        const Residue val = xn.at(r, t);
        if (val == 0) continue;
        for (std::size_t c = 0; c < a; ++c) s.row_mut(r * a + c)[t * a + c] = val;
      }
    }
    acts.push_back(std::move(s));
  }
  std::vector<int> degs;
  if (m.graded() && n.graded()) {
    for (std::size_t r = 0; r < b; ++r) {
      for (std::size_t c = 0; c < a; ++c) degs.push_back(n.degrees()[r] - m.degrees()[c]);
    }
  }
  ModuleRep big(m.algebra_ptr(), std::move(acts), std::move(degs));
  RowSpace homs(d, f);
  for (auto& k : kernel_basis(cons)) homs.insert(std::move(k));
  ModuleRep out = submodule(big, homs);
  out.set_provenance("Hom module");
  return out;
}

ModuleRep matlis_dual(const ModuleRep& m) {
  if (!m.algebra().is_artinian()) throw Error(Errc::kNotArtinian, "Matlis duality needs an artinian algebra");
  if (m.dim() == 0) return m;
  std::vector<Matrix> acts;
  for (const auto& a : m.actions()) acts.push_back(a.transposed());
  std::vector<int> degs;
  if (m.graded()) {
    for (int d : m.degrees()) degs.push_back(-d);
  }
  ModuleRep out(m.algebra_ptr(), std::move(acts), std::move(degs));
  out.set_provenance("dual of " + (m.provenance().empty() ? std::string("module") : m.provenance()));
  return out;
}

}  // namespace curvlab
