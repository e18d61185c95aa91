#include "torslat/module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace torslat {

Module::Module(std::shared_ptr<const Algebra> algebra, std::vector<int> dims, std::vector<Matrix> mats)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), mats_(std::move(mats)) {
  if (!algebra_) throw std::invalid_argument("module without algebra");
  if (static_cast<int>(dims_.size()) != algebra_->vertex_count())
    throw std::invalid_argument("module dimension vector has wrong length");
  if (static_cast<int>(mats_.size()) != algebra_->arrow_count())
    throw std::invalid_argument("module has wrong number of arrow matrices");
  for (int a = 0; a < algebra_->arrow_count(); ++a) {
    const Arrow& ar = algebra_->arrow(a);
    if (mats_[a].rows != dims_[ar.target] || mats_[a].cols != dims_[ar.source])
      throw std::invalid_argument("arrow matrix for '" + ar.name + "' has the wrong shape");
  }
}

Module Module::zero(std::shared_ptr<const Algebra> algebra) {
  const int n = algebra->vertex_count();
  std::vector<Matrix> mats(std::size_t(algebra->arrow_count()));
  return Module(std::move(algebra), std::vector<int>(std::size_t(n), 0), std::move(mats));
}

int Module::total_dim() const {
  int s = 0;
  for (int d : dims_) s += d;
  return s;
}

Matrix Module::path_action(const std::vector<int>& path) const {
  if (path.empty()) throw std::invalid_argument("path_action needs a nontrivial path");
  Matrix m = mats_[path.front()];
  for (std::size_t i = 1; i < path.size(); ++i) m = multiply(field(), mats_[path[i]], m);
  return m;
}

bool Module::satisfies_relations() const {
  for (const auto& rel : algebra_->relations())
    if (!path_action(rel).is_zero()) return false;
  return true;
}

bool Morphism::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

bool Morphism::is_injective() const {
  const PrimeField& f = source.field();
  for (std::size_t v = 0; v < comps.size(); ++v)
    if (rank(f, comps[v]) != source.dim(static_cast<int>(v))) return false;
  return true;
}

bool Morphism::is_surjective() const {
  const PrimeField& f = source.field();
  for (std::size_t v = 0; v < comps.size(); ++v)
    if (rank(f, comps[v]) != target.dim(static_cast<int>(v))) return false;
  return true;
}

bool Morphism::is_isomorphism() const { return source.dims() == target.dims() && is_injective(); }

bool Morphism::intertwines() const {
  const Algebra& alg = source.algebra();
  const PrimeField& f = alg.field();
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& ar = alg.arrow(a);
    if (multiply(f, target.mat(a), comps[ar.source]) != multiply(f, comps[ar.target], source.mat(a))) return false;
  }
  return true;
}

Morphism identity_morphism(const Module& x) {
  Morphism m{x, x, {}};
  for (int d : x.dims()) m.comps.push_back(Matrix::identity(d));
  return m;
}

Morphism zero_morphism(const Module& x, const Module& y) {
  Morphism m{x, y, {}};
  for (std::size_t v = 0; v < x.dims().size(); ++v) m.comps.emplace_back(y.dims()[v], x.dims()[v]);
  return m;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism m{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.comps.size(); ++v) m.comps.push_back(multiply(f.source.field(), g.comps[v], f.comps[v]));
  return m;
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<std::uint8_t>& coeffs, const Module& x,
                 const Module& y) {
  Morphism m = zero_morphism(x, y);
  const PrimeField& f = x.field();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t v = 0; v < m.comps.size(); ++v) m.comps[v] = add(f, m.comps[v], scale(f, coeffs[k], basis[k].comps[v]));
  }
  return m;
}

Module simple_module(std::shared_ptr<const Algebra> algebra, int vertex) {
  if (vertex < 0 || vertex >= algebra->vertex_count()) throw std::out_of_range("vertex out of range");
  std::vector<int> dims(std::size_t(algebra->vertex_count()), 0);
  dims[vertex] = 1;
  std::vector<Matrix> mats;
  for (int a = 0; a < algebra->arrow_count(); ++a)
    mats.emplace_back(dims[algebra->arrow(a).target], dims[algebra->arrow(a).source]);
  return Module(std::move(algebra), std::move(dims), std::move(mats));
}

Module projective_module(std::shared_ptr<const Algebra> algebra, int vertex) {
  if (vertex < 0 || vertex >= algebra->vertex_count()) throw std::out_of_range("vertex out of range");
  const Quiver& q = algebra->quiver();
  std::vector<int> dims(std::size_t(q.vertex_count), 0);
  std::map<std::vector<int>, int> position;  // path from `vertex` -> index within its end vertex
  for (const Path& p : algebra->path_basis()) {
    if (p.start != vertex) continue;
    position[p.arrows] = dims[p.end(q)]++;
  }
  std::vector<Matrix> mats;
  for (int a = 0; a < algebra->arrow_count(); ++a)
    mats.emplace_back(dims[q.arrows[a].target], dims[q.arrows[a].source]);
  for (const auto& [arrows, pos] : position) {
    const int end = arrows.empty() ? vertex : q.arrows[arrows.back()].target;
    for (int a = 0; a < algebra->arrow_count(); ++a) {
      if (q.arrows[a].source != end) continue;
      std::vector<int> ext = arrows;
      ext.push_back(a);
      if (auto it = position.find(ext); it != position.end()) mats[a](it->second, pos) = 1;
    }
  }
  return Module(std::move(algebra), std::move(dims), std::move(mats));
}

Module direct_sum(const Module& x, const Module& y) {
  const Algebra& alg = x.algebra();
  std::vector<int> dims;
  for (std::size_t v = 0; v < x.dims().size(); ++v) dims.push_back(x.dims()[v] + y.dims()[v]);
  std::vector<Matrix> mats;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& ar = alg.arrow(a);
    Matrix m(dims[ar.target], dims[ar.source]);
    m.set_block(0, 0, x.mat(a));
    m.set_block(x.dim(ar.target), x.dim(ar.source), y.mat(a));
    mats.push_back(std::move(m));
  }
  return Module(x.algebra_ptr(), std::move(dims), std::move(mats));
}

Module direct_sum(const std::vector<Module>& parts, std::shared_ptr<const Algebra> algebra) {
  Module sum = Module::zero(std::move(algebra));
  for (const auto& p : parts) sum = direct_sum(sum, p);
  return sum;
}

std::vector<Morphism> hom_basis(const Module& x, const Module& y) {
  const Algebra& alg = x.algebra();
  const PrimeField& f = alg.field();
  const int n = alg.vertex_count();
  std::vector<int> offset(std::size_t(n) + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + y.dim(v) * x.dim(v);
  const int unknowns = offset[n];
  if (unknowns == 0) return {};

  int equations = 0;
  for (int a = 0; a < alg.arrow_count(); ++a) equations += y.dim(alg.arrow(a).target) * x.dim(alg.arrow(a).source);
  Matrix sys(equations, unknowns);
  int row = 0;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const int s = alg.arrow(a).source;
    const int t = alg.arrow(a).target;
    const Matrix& ya = y.mat(a);
    const Matrix& xa = x.mat(a);
    for (int r = 0; r < y.dim(t); ++r)
      for (int c = 0; c < x.dim(s); ++c, ++row) {
        // (Y_a f_s)(r, c) - (f_t X_a)(r, c)
        for (int k = 0; k < y.dim(s); ++k) {
          const int idx = offset[s] + k * x.dim(s) + c;
          sys(row, idx) = f.add(sys(row, idx), ya(r, k));
        }
        for (int k = 0; k < x.dim(t); ++k) {
          const int idx = offset[t] + r * x.dim(t) + k;
          sys(row, idx) = f.sub(sys(row, idx), xa(k, c));
        }
      }
  }
  const Matrix ns = null_space(f, sys);
  std::vector<Morphism> basis;
  for (int k = 0; k < ns.cols; ++k) {
    Morphism m = zero_morphism(x, y);
    for (int v = 0; v < n; ++v)
      for (int r = 0; r < y.dim(v); ++r)
        for (int c = 0; c < x.dim(v); ++c) m.comps[v](r, c) = ns(offset[v] + r * x.dim(v) + c, k);
    basis.push_back(std::move(m));
  }
  return basis;
}

int hom_dim(const Module& x, const Module& y) { return static_cast<int>(hom_basis(x, y).size()); }

namespace {

std::uint64_t span_size(int p, std::size_t d, std::uint64_t budget) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > budget / static_cast<std::uint64_t>(p)) return budget + 1;
    n *= static_cast<std::uint64_t>(p);
  }
  return n;
}

}  // namespace

void for_each_in_span(const std::vector<Morphism>& basis, const Module& x, const Module& y, std::uint64_t budget,
                      ErrorKind kind, const std::function<bool(const Morphism&)>& visit) {
  const int p = x.field().order();
  if (span_size(p, basis.size(), budget) > budget)
    throw Error(kind, "span of dimension " + std::to_string(basis.size()) + " over F_" + std::to_string(p) +
                          " exceeds enumeration budget " + std::to_string(budget));
  std::vector<std::uint8_t> digits(basis.size(), 0);
  while (true) {
    if (!visit(combine(basis, digits, x, y))) return;
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
    if (pos == digits.size()) return;
  }
}

Submodule restrict_to(const Module& x, const std::vector<Matrix>& bases) {
  const Algebra& alg = x.algebra();
  const PrimeField& f = alg.field();
  std::vector<int> dims;
  for (const auto& b : bases) dims.push_back(b.cols);
  std::vector<Matrix> mats;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& ar = alg.arrow(a);
    const Matrix image = multiply(f, x.mat(a), bases[ar.source]);
    auto coords = coordinates(f, bases[ar.target], image);
    if (!coords) throw std::invalid_argument("subspace tuple is not stable under arrow '" + ar.name + "'");
    mats.push_back(std::move(*coords));
  }
  Module sub(x.algebra_ptr(), std::move(dims), std::move(mats));
  Morphism inc{sub, x, bases};
  return Submodule{bases, std::move(sub), std::move(inc)};
}

Quotient quotient_by(const Module& x, const std::vector<Matrix>& sub_bases) {
  const Algebra& alg = x.algebra();
  const PrimeField& f = alg.field();
  const int n = alg.vertex_count();
  std::vector<Matrix> complements, projections;
  std::vector<int> dims;
  for (int v = 0; v < n; ++v) {
    Matrix comp = complement_basis(f, sub_bases[v], x.dim(v));
    Matrix full = hstack(sub_bases[v], comp);
    auto inv = inverse(f, full);
    if (!inv) throw std::invalid_argument("quotient_by: submodule basis is not independent");
    projections.push_back(inv->block(sub_bases[v].cols, 0, comp.cols, x.dim(v)));
    dims.push_back(comp.cols);
    complements.push_back(std::move(comp));
  }
  std::vector<Matrix> mats;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& ar = alg.arrow(a);
    mats.push_back(multiply(f, projections[ar.target], multiply(f, x.mat(a), complements[ar.source])));
  }
  Module q(x.algebra_ptr(), std::move(dims), std::move(mats));
  Morphism proj{x, q, std::move(projections)};
  return Quotient{std::move(q), std::move(proj)};
}

KernelImageCokernel kernel_image_cokernel(const Morphism& fm) {
  const PrimeField& f = fm.source.field();
  std::vector<Matrix> ker, im;
  for (const auto& c : fm.comps) {
    ker.push_back(null_space(f, c));
    im.push_back(column_basis(f, c));
  }
  return KernelImageCokernel{restrict_to(fm.source, ker), restrict_to(fm.target, im), quotient_by(fm.target, im)};
}

namespace {

bool is_invertible_endo(const Morphism& e) {
  const PrimeField& f = e.source.field();
  for (const auto& c : e.comps)
    if (c.rows > 0 && !is_invertible(f, c)) return false;
  return true;
}

Morphism fitting_power(const Morphism& e) {
  Morphism g = e;
  const int n = e.source.total_dim();
  for (auto& c : g.comps) c = power(e.source.field(), c, n);
  return g;
}

// Returns some f^N, with f an endomorphism that is neither invertible nor
// nilpotent, or nullopt when End(X) is local.
std::optional<Morphism> find_fitting_splitter(const Module& x, const Limits& limits) {
  const std::vector<Morphism> basis = hom_basis(x, x);
  if (basis.size() <= 1) return std::nullopt;  // End(X) = F_p
  auto try_one = [&](const Morphism& e) -> std::optional<Morphism> {
    if (is_invertible_endo(e)) return std::nullopt;
    Morphism g = fitting_power(e);
    if (g.is_zero()) return std::nullopt;
    return g;
  };
  for (const auto& b : basis)
    if (auto g = try_one(b)) return g;
  std::optional<Morphism> found;
  for_each_in_span(basis, x, x, limits.enum_budget, ErrorKind::DecomposeBlowup, [&](const Morphism& e) {
    found = try_one(e);
    return !found.has_value();
  });
  return found;
}

bool module_less(const Module& a, const Module& b) {
  if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
  if (a.dims() != b.dims()) return a.dims() > b.dims();
  return a.mats() < b.mats();
}

}  // namespace

std::vector<Module> decompose(const Module& x, const Limits& limits) {
  std::vector<Module> out;
  std::vector<Module> pending{x};
  while (!pending.empty()) {
    Module m = std::move(pending.back());
    pending.pop_back();
    if (m.is_zero()) continue;
    auto g = find_fitting_splitter(m, limits);
    if (!g) {
      out.push_back(std::move(m));
      continue;
    }
    const PrimeField& f = m.field();
    std::vector<Matrix> im, ker;
    for (const auto& c : g->comps) {
      im.push_back(column_basis(f, c));
      ker.push_back(null_space(f, c));
    }
    pending.push_back(restrict_to(m, ker).module);
    pending.push_back(restrict_to(m, im).module);
  }
  std::stable_sort(out.begin(), out.end(), module_less);
  return out;
}

bool is_indecomposable(const Module& x, const Limits& limits) {
  return !x.is_zero() && !find_fitting_splitter(x, limits).has_value();
}

bool is_isomorphic(const Module& x, const Module& y, const Limits& limits) {
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  if (x == y) return true;
  const std::vector<Morphism> basis = hom_basis(x, y);
  if (basis.empty()) return false;
  if (hom_dim(x, x) != static_cast<int>(basis.size()) || hom_dim(y, x) != static_cast<int>(basis.size())) return false;
  for (const auto& b : basis)
    if (b.is_isomorphism()) return true;
  bool found = false;
  for_each_in_span(basis, x, y, limits.enum_budget, ErrorKind::IsoSearchBlowup, [&](const Morphism& f) {
    found = f.is_isomorphism();
    return !found;
  });
  return found;
}

bool is_brick(const Module& x, const Limits& limits) {
  if (x.is_zero()) return false;
  const std::vector<Morphism> basis = hom_basis(x, x);
  if (basis.size() == 1) return true;
  for (const auto& b : basis)
    if (!is_invertible_endo(b)) return false;
  bool brick = true;
  for_each_in_span(basis, x, x, limits.enum_budget, ErrorKind::IsoSearchBlowup, [&](const Morphism& f) {
    if (!f.is_zero() && !is_invertible_endo(f)) brick = false;
    return brick;
  });
  return brick;
}

std::vector<Submodule> submodules(const Module& x, const Limits& limits) {
  const Algebra& alg = x.algebra();
  const PrimeField& f = alg.field();
  const int n = alg.vertex_count();
  std::vector<std::vector<Matrix>> spaces;
  for (int v = 0; v < n; ++v) spaces.push_back(all_subspaces(f, x.dim(v)));

  // Arrows checked once both endpoints are assigned.
  std::vector<std::vector<int>> check_at(static_cast<std::size_t>(n));
  for (int a = 0; a < alg.arrow_count(); ++a)
    check_at[std::max(alg.arrow(a).source, alg.arrow(a).target)].push_back(a);

  std::vector<Submodule> out;
  std::vector<Matrix> chosen(static_cast<std::size_t>(n));
  std::uint64_t visited = 0;
  std::function<void(int)> recurse = [&](int v) {
    if (v == n) {
      out.push_back(restrict_to(x, chosen));
      return;
    }
    for (const auto& s : spaces[v]) {
      if (++visited > limits.subspace_budget)
        throw Error(ErrorKind::SubspaceBlowup, "submodule search exceeded budget " + std::to_string(limits.subspace_budget));
      chosen[v] = s;
      bool stable = true;
      for (int a : check_at[v]) {
        const Arrow& ar = alg.arrow(a);
        const Matrix img = multiply(f, x.mat(a), chosen[ar.source]);
        if (rank(f, hstack(chosen[ar.target], img)) != chosen[ar.target].cols) {
          stable = false;
          break;
        }
      }
      if (stable) recurse(v + 1);
    }
  };
  recurse(0);
  return out;
}

namespace {

struct Cocycles {
  std::vector<int> offset;  // per arrow, into the C-vector
  int unknowns = 0;
  Matrix reps;  // columns: cocycles representing a basis of Ext^1
};

Cocycles ext_representatives(const Module& q, const Module& u) {
  const Algebra& alg = q.algebra();
  const PrimeField& f = alg.field();
  Cocycles cc;
  cc.offset.resize(std::size_t(alg.arrow_count()) + 1, 0);
  for (int a = 0; a < alg.arrow_count(); ++a)
    cc.offset[a + 1] = cc.offset[a] + u.dim(alg.arrow(a).target) * q.dim(alg.arrow(a).source);
  const int nc = cc.offset[alg.arrow_count()];
  cc.unknowns = nc;
  if (nc == 0) {
    cc.reps = Matrix(0, 0);
    return cc;
  }

  // Relation constraints: the upper-right block of the path product
  // sum_j U_{ak..a(j+1)} C_{aj} Q_{a(j-1)..a1} vanishes.
  int eq_rows = 0;
  for (const auto& rel : alg.relations())
    eq_rows += u.dim(alg.arrow(rel.back()).target) * q.dim(alg.arrow(rel.front()).source);
  Matrix sys(eq_rows, nc);
  int row0 = 0;
  for (const auto& rel : alg.relations()) {
    const int out_dim = u.dim(alg.arrow(rel.back()).target);
    const int in_dim = q.dim(alg.arrow(rel.front()).source);
    for (std::size_t j = 0; j < rel.size(); ++j) {
      const int aj = rel[j];
      const int s = alg.arrow(aj).source;
      const int t = alg.arrow(aj).target;
      Matrix left = Matrix::identity(u.dim(t));
      for (std::size_t k = j + 1; k < rel.size(); ++k) left = multiply(f, u.mat(rel[k]), left);
      Matrix right = Matrix::identity(q.dim(alg.arrow(rel.front()).source));
      for (std::size_t k = 0; k < j; ++k) right = multiply(f, q.mat(rel[k]), right);
      for (int r = 0; r < out_dim; ++r)
        for (int c = 0; c < in_dim; ++c)
          for (int xr = 0; xr < u.dim(t); ++xr) {
            if (left(r, xr) == 0) continue;
            for (int yc = 0; yc < q.dim(s); ++yc) {
              if (right(yc, c) == 0) continue;
              const int idx = cc.offset[aj] + xr * q.dim(s) + yc;
              auto& e = sys(row0 + r * in_dim + c, idx);
              e = f.add(e, f.mul(left(r, xr), right(yc, c)));
            }
          }
    }
    row0 += out_dim * in_dim;
  }
  const Matrix z = null_space(f, sys);

  // Coboundaries: C_a = U_a h_s - h_t Q_a for h_v : Q_v -> U_v.
  std::vector<int> hoff(std::size_t(alg.vertex_count()) + 1, 0);
  for (int v = 0; v < alg.vertex_count(); ++v) hoff[v + 1] = hoff[v] + u.dim(v) * q.dim(v);
  Matrix delta(nc, hoff[alg.vertex_count()]);
  for (int v = 0; v < alg.vertex_count(); ++v)
    for (int r = 0; r < u.dim(v); ++r)
      for (int c = 0; c < q.dim(v); ++c) {
        const int col = hoff[v] + r * q.dim(v) + c;
        for (int a = 0; a < alg.arrow_count(); ++a) {
          const int s = alg.arrow(a).source;
          const int t = alg.arrow(a).target;
          // h = E_{rc} at vertex v.
          if (s == v)  // U_a E_{rc}: column c gets U_a[:, r]
            for (int rr = 0; rr < u.dim(t); ++rr) {
              auto& e = delta(cc.offset[a] + rr * q.dim(s) + c, col);
              e = f.add(e, u.mat(a)(rr, r));
            }
          if (t == v)  // E_{rc} Q_a: row r gets Q_a[c, :]
            for (int cc2 = 0; cc2 < q.dim(s); ++cc2) {
              auto& e = delta(cc.offset[a] + r * q.dim(s) + cc2, col);
              e = f.sub(e, q.mat(a)(c, cc2));
            }
        }
      }
  Matrix current = column_basis(f, delta);
  int r = current.cols;
  Matrix reps(nc, 0);
  for (int k = 0; k < z.cols; ++k) {
    Matrix trial = hstack(current, z.column(k));
    const int tr = rank(f, trial);
    if (tr > r) {
      current = std::move(trial);
      r = tr;
      reps = hstack(reps, z.column(k));
    }
  }
  cc.reps = std::move(reps);
  return cc;
}

}  // namespace

int ext1_dim(const Module& q, const Module& u) { return ext_representatives(q, u).reps.cols; }

std::vector<Module> all_extensions(const Module& q, const Module& u, const Limits& limits) {
  const Algebra& alg = q.algebra();
  const PrimeField& f = alg.field();
  const Cocycles cc = ext_representatives(q, u);
  const int e = cc.reps.cols;
  const int p = f.order();
  if (span_size(p, std::size_t(e), limits.enum_budget) > limits.enum_budget)
    throw Error(ErrorKind::SubspaceBlowup, "Ext^1 of dimension " + std::to_string(e) + " is too large to enumerate");

  auto middle_term = [&](const std::vector<std::uint8_t>& coeffs) {
    std::vector<int> dims;
    for (int v = 0; v < alg.vertex_count(); ++v) dims.push_back(u.dim(v) + q.dim(v));
    std::vector<Matrix> mats;
    for (int a = 0; a < alg.arrow_count(); ++a) {
      const int s = alg.arrow(a).source;
      const int t = alg.arrow(a).target;
      Matrix m(dims[t], dims[s]);
      m.set_block(0, 0, u.mat(a));
      m.set_block(u.dim(t), u.dim(s), q.mat(a));
      for (int rr = 0; rr < u.dim(t); ++rr)
        for (int c = 0; c < q.dim(s); ++c) {
          std::uint8_t val = 0;
          for (int k = 0; k < e; ++k) val = f.add(val, f.mul(coeffs[k], cc.reps(cc.offset[a] + rr * q.dim(s) + c, k)));
          m(rr, u.dim(s) + c) = val;
        }
      mats.push_back(std::move(m));
    }
    return Module(q.algebra_ptr(), std::move(dims), std::move(mats));
  };

  std::vector<Module> found;
  std::vector<std::uint8_t> digits(std::size_t(e), 0);
  while (true) {
    // Scalar multiples of a class give isomorphic middle terms, so only
    // classes whose last nonzero coordinate is 1 are visited.
    int lead = -1;
    for (int k = e - 1; k >= 0; --k)
      if (digits[k] != 0) {
        lead = k;
        break;
      }
    if (lead < 0 || digits[lead] == 1) {
      Module z = middle_term(digits);
      bool seen = false;
      for (const auto& m : found)
        if (is_isomorphic(m, z, limits)) {
          seen = true;
          break;
        }
      if (!seen) found.push_back(std::move(z));
    }
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return found;
}

}  // namespace torslat
