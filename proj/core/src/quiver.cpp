#include "wexlat/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wexlat {

Quiver::Quiver(int num_vertices, std::vector<Arrow> arrows)
    : n_(num_vertices), arrows_(std::move(arrows)) {
  if (n_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.id != static_cast<int>(i)) throw std::invalid_argument("arrow ids must be contiguous from 0");
    if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_)
      throw std::invalid_argument("arrow endpoint out of range");
  }
  // Kahn topological sort; rejects cycles.
  std::vector<int> indeg(n_ + 1, 0);
  for (const Arrow& a : arrows_) ++indeg[a.target];
  std::vector<int> stack;
  for (int v = 1; v <= n_; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    topo_.push_back(v);
    for (const Arrow& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  if (static_cast<int>(topo_.size()) != n_) throw std::invalid_argument("quiver has an oriented cycle");
}

bool Quiver::same_arrows(const Quiver& o) const {
  if (arrows_.size() != o.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source != o.arrows_[i].source || arrows_[i].target != o.arrows_[i].target)
      return false;
  return true;
}

std::size_t Representation::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

void Representation::check_shapes() const {
  if (static_cast<int>(dims.size()) != quiver->num_vertices())
    throw std::invalid_argument("dimension vector length mismatch");
  if (mats.size() != quiver->arrows().size())
    throw std::invalid_argument("arrow matrix count mismatch");
  for (const Arrow& a : quiver->arrows()) {
    const Matrix& m = mats[a.id];
    if (m.rows() != dims[a.target - 1] || m.cols() != dims[a.source - 1])
      throw std::invalid_argument("arrow matrix shape mismatch at arrow " + std::to_string(a.id));
  }
}

Representation Representation::zero(QuiverPtr q, PrimeField f) {
  Representation r;
  r.quiver = q;
  r.dims.assign(q->num_vertices(), 0);
  for (const Arrow& a : q->arrows()) {
    (void)a;
    r.mats.emplace_back(f, 0, 0);
  }
  return r;
}

Representation zero_representation(QuiverPtr q, PrimeField f) { return Representation::zero(q, f); }

static void require_same_quiver(const Representation& m, const Representation& n) {
  if (!(*m.quiver == *n.quiver)) throw std::invalid_argument("representations over different quivers");
}

void RepMorphism::check_intertwining() const {
  require_same_quiver(source, target);
  for (const Arrow& a : source.quiver->arrows()) {
    Matrix lhs = comps[a.target - 1] * source.mats[a.id];
    Matrix rhs = target.mats[a.id] * comps[a.source - 1];
    if (!(lhs == rhs)) throw std::invalid_argument("morphism fails intertwining at arrow " + std::to_string(a.id));
  }
}

RepMorphism identity_morphism(const Representation& m) {
  RepMorphism f{m, m, {}};
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    f.comps.push_back(Matrix::identity(m.field(), m.dims[v]));
  return f;
}

RepMorphism zero_morphism(const Representation& m, const Representation& n) {
  RepMorphism f{m, n, {}};
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    f.comps.emplace_back(m.field(), n.dims[v], m.dims[v]);
  return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  RepMorphism r{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.source.dims.size(); ++v) r.comps.push_back(g.comps[v] * f.comps[v]);
  return r;
}

RepMorphism morphism_sum(const RepMorphism& a, const RepMorphism& b) {
  RepMorphism r{a.source, a.target, {}};
  for (std::size_t v = 0; v < a.comps.size(); ++v) r.comps.push_back(a.comps[v] + b.comps[v]);
  return r;
}

RepMorphism morphism_scaled(const RepMorphism& a, Scalar s) {
  RepMorphism r{a.source, a.target, {}};
  for (std::size_t v = 0; v < a.comps.size(); ++v) r.comps.push_back(a.comps[v].scaled(s));
  return r;
}

bool is_injective(const RepMorphism& f) {
  for (std::size_t v = 0; v < f.comps.size(); ++v)
    if (rank(f.comps[v]) != f.source.dims[v]) return false;
  return true;
}

bool is_surjective(const RepMorphism& f) {
  for (std::size_t v = 0; v < f.comps.size(); ++v)
    if (rank(f.comps[v]) != f.target.dims[v]) return false;
  return true;
}

bool is_isomorphism(const RepMorphism& f) { return is_injective(f) && is_surjective(f); }

Vec flatten_morphism(const RepMorphism& f) {
  Vec out;
  for (const Matrix& c : f.comps)
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) out.push_back(c.at(i, j));
  return out;
}

RepMorphism unflatten_morphism(const Representation& source, const Representation& target,
                               const Vec& flat) {
  RepMorphism f{source, target, {}};
  std::size_t o = 0;
  for (std::size_t v = 0; v < source.dims.size(); ++v) {
    Matrix c(source.field(), target.dims[v], source.dims[v]);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) c.at(i, j) = flat[o++];
    f.comps.push_back(c);
  }
  return f;
}

HomSpace::HomSpace(Representation source, Representation target, Matrix flat_basis)
    : source_(std::move(source)), target_(std::move(target)), basis_(std::move(flat_basis)) {}

RepMorphism HomSpace::morphism(std::size_t i) const {
  return unflatten_morphism(source_, target_, basis_.row(i));
}

RepMorphism HomSpace::from_coords(const Vec& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("hom coords length mismatch");
  Vec flat(basis_.cols(), 0);
  const PrimeField& f = basis_.field();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j)
      flat[j] = f.add(flat[j], f.mul(coords[i], basis_.at(i, j)));
  return unflatten_morphism(source_, target_, flat);
}

Vec HomSpace::to_coords(const RepMorphism& m) const {
  Vec flat = flatten_morphism(m);
  auto x = solve(basis_.transpose(), flat);
  if (!x) throw std::logic_error("morphism is not in the hom space span");
  return *x;
}

HomSpace hom_space(const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  const PrimeField& f = m.field();
  const Quiver& q = *m.quiver;
  std::vector<std::size_t> off(q.num_vertices() + 1, 0);
  for (int v = 0; v < q.num_vertices(); ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  const std::size_t tot = off[q.num_vertices()];

  std::vector<Vec> rows;
  for (const Arrow& a : q.arrows()) {
    const int s = a.source - 1, t = a.target - 1;
    // comps[t] * m.mats[a] == n.mats[a] * comps[s], entrywise
    for (std::size_t r = 0; r < n.dims[t]; ++r)
      for (std::size_t c = 0; c < m.dims[s]; ++c) {
        Vec row(tot, 0);
        for (std::size_t k = 0; k < m.dims[t]; ++k) {
          std::size_t idx = off[t] + r * m.dims[t] + k;
          row[idx] = f.add(row[idx], m.mats[a.id].at(k, c));
        }
        for (std::size_t k = 0; k < n.dims[s]; ++k) {
          std::size_t idx = off[s] + k * m.dims[s] + c;
          row[idx] = f.sub(row[idx], n.mats[a.id].at(r, k));
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix sys = rows.empty() ? Matrix(f, 0, tot) : Matrix::from_rows(f, rows, tot);
  return HomSpace(m, n, kernel_basis(sys));
}

bool is_brick(const Representation& m) {
  if (m.is_zero()) return false;
  return hom_space(m, m).dim() == 1;
}

Biproduct direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of empty list");
  const Quiver& q = *parts[0].quiver;
  const PrimeField& f = parts[0].field();
  Representation sum;
  sum.quiver = parts[0].quiver;
  sum.dims.assign(q.num_vertices(), 0);
  for (const Representation& p : parts)
    for (int v = 0; v < q.num_vertices(); ++v) sum.dims[v] += p.dims[v];
  for (const Arrow& a : q.arrows()) {
    Matrix blk(f, sum.dims[a.target - 1], sum.dims[a.source - 1]);
    std::size_t ro = 0, co = 0;
    for (const Representation& p : parts) {
      const Matrix& pm = p.mats[a.id];
      for (std::size_t i = 0; i < pm.rows(); ++i)
        for (std::size_t j = 0; j < pm.cols(); ++j) blk.at(ro + i, co + j) = pm.at(i, j);
      ro += p.dims[a.target - 1];
      co += p.dims[a.source - 1];
    }
    sum.mats.push_back(blk);
  }
  Biproduct bp{sum, {}, {}};
  std::vector<std::size_t> offs(q.num_vertices(), 0);
  for (const Representation& p : parts) {
    RepMorphism inj{p, sum, {}}, prj{sum, p, {}};
    for (int v = 0; v < q.num_vertices(); ++v) {
      Matrix im(f, sum.dims[v], p.dims[v]);
      Matrix pm(f, p.dims[v], sum.dims[v]);
      for (std::size_t i = 0; i < p.dims[v]; ++i) {
        im.at(offs[v] + i, i) = 1;
        pm.at(i, offs[v] + i) = 1;
      }
      inj.comps.push_back(im);
      prj.comps.push_back(pm);
    }
    bp.injections.push_back(std::move(inj));
    bp.projections.push_back(std::move(prj));
    for (int v = 0; v < q.num_vertices(); ++v) offs[v] += p.dims[v];
  }
  return bp;
}

Biproduct direct_sum(const Representation& m, const Representation& n) {
  std::vector<Representation> parts{m, n};
  return direct_sum(std::span<const Representation>(parts));
}

SubRep subrepresentation(const Representation& ambient, const std::vector<Matrix>& vertex_spans) {
  const Quiver& q = *ambient.quiver;
  const PrimeField& f = ambient.field();
  std::vector<Matrix> spans;
  for (int v = 0; v < q.num_vertices(); ++v) spans.push_back(row_space(vertex_spans[v]));
  // close under the arrow maps
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Arrow& a : q.arrows()) {
      const int s = a.source - 1, t = a.target - 1;
      if (spans[s].rows() == 0) continue;
      Matrix img = spans[s] * ambient.mats[a.id].transpose();
      Matrix unified = subspace_sum(spans[t], img);
      if (unified.rows() != spans[t].rows()) {
        spans[t] = unified;
        changed = true;
      }
    }
  }
  Representation sub;
  sub.quiver = ambient.quiver;
  for (int v = 0; v < q.num_vertices(); ++v) sub.dims.push_back(spans[v].rows());
  for (const Arrow& a : q.arrows()) {
    const int s = a.source - 1, t = a.target - 1;
    Matrix m(f, sub.dims[t], sub.dims[s]);
    for (std::size_t c = 0; c < sub.dims[s]; ++c) {
      Vec img = ambient.mats[a.id].apply(spans[s].row(c));
      auto x = solve(spans[t].transpose(), img);
      if (!x) throw std::logic_error("subrepresentation closure failed");
      for (std::size_t r = 0; r < sub.dims[t]; ++r) m.at(r, c) = (*x)[r];
    }
    sub.mats.push_back(m);
  }
  RepMorphism incl{sub, ambient, {}};
  for (int v = 0; v < q.num_vertices(); ++v) incl.comps.push_back(spans[v].transpose());
  return {sub, incl};
}

QuotRep quotient(const Representation& ambient, const std::vector<Matrix>& invariant_subspace) {
  const Quiver& q = *ambient.quiver;
  const PrimeField& f = ambient.field();
  QuotRep out;
  out.quot.quiver = ambient.quiver;
  std::vector<RrefResult> rr;
  for (int v = 0; v < q.num_vertices(); ++v) {
    rr.push_back(rref(invariant_subspace[v]));
    const auto& R = rr.back();
    std::vector<bool> piv(ambient.dims[v], false);
    for (auto c : R.pivots) piv[c] = true;
    std::vector<std::size_t> sec;
    for (std::size_t c = 0; c < ambient.dims[v]; ++c)
      if (!piv[c]) sec.push_back(c);
    out.section_cols.push_back(sec);
    out.quot.dims.push_back(sec.size());
  }
  // proj(x) = non-pivot coordinates of x reduced modulo the subspace
  for (int v = 0; v < q.num_vertices(); ++v) {
    const auto& R = rr[v];
    const auto& sec = out.section_cols[v];
    Matrix p(f, sec.size(), ambient.dims[v]);
    for (std::size_t r = 0; r < sec.size(); ++r) {
      p.at(r, sec[r]) = 1;
      for (std::size_t i = 0; i < R.pivots.size(); ++i)
        p.at(r, R.pivots[i]) = f.neg(R.mat.at(i, sec[r]));
    }
    out.proj.comps.push_back(p);
  }
  out.proj.source = ambient;
  for (const Arrow& a : q.arrows()) {
    const int s = a.source - 1, t = a.target - 1;
    // induced arrow map: project after applying the ambient arrow to a section
    Matrix m(f, out.quot.dims[t], out.quot.dims[s]);
    for (std::size_t c = 0; c < out.quot.dims[s]; ++c) {
      Vec e(ambient.dims[s], 0);
      e[out.section_cols[s][c]] = 1;
      Vec img = out.proj.comps[t].apply(ambient.mats[a.id].apply(e));
      for (std::size_t r = 0; r < out.quot.dims[t]; ++r) m.at(r, c) = img[r];
    }
    out.quot.mats.push_back(m);
  }
  out.proj.target = out.quot;
  return out;
}

RepMorphism QuotRep::induced(const RepMorphism& f) const {
  RepMorphism r{quot, f.target, {}};
  const PrimeField& fld = f.source.field();
  for (std::size_t v = 0; v < quot.dims.size(); ++v) {
    Matrix m(fld, f.target.dims[v], quot.dims[v]);
    for (std::size_t c = 0; c < quot.dims[v]; ++c) {
      Vec e(f.source.dims[v], 0);
      e[section_cols[v][c]] = 1;
      Vec img = f.comps[v].apply(e);
      for (std::size_t rr = 0; rr < m.rows(); ++rr) m.at(rr, c) = img[rr];
    }
    r.comps.push_back(m);
  }
  return r;
}

SubRep kernel_subrep(const RepMorphism& f) {
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < f.comps.size(); ++v) spans.push_back(kernel_basis(f.comps[v]));
  return subrepresentation(f.source, spans);
}

SubRep image_subrep(const RepMorphism& f) {
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < f.comps.size(); ++v) spans.push_back(row_space(f.comps[v].transpose()));
  return subrepresentation(f.target, spans);
}

QuotRep cokernel(const RepMorphism& f) {
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < f.comps.size(); ++v) spans.push_back(row_space(f.comps[v].transpose()));
  return quotient(f.target, spans);
}

std::vector<Representation> type_a_category(int n, const std::string& orientation, PrimeField f,
                                            QuiverPtr* quiver_out) {
  if (n < 1) throw std::invalid_argument("type A rank must be >= 1");
  if (static_cast<int>(orientation.size()) != n - 1)
    throw std::invalid_argument("orientation string must have length n-1");
  std::vector<Arrow> arrows;
  for (int k = 0; k < n - 1; ++k) {
    char c = orientation[static_cast<std::size_t>(k)];
    if (c == 'R')
      arrows.push_back({k, k + 1, k + 2});
    else if (c == 'L')
      arrows.push_back({k, k + 2, k + 1});
    else
      throw std::invalid_argument("orientation characters must be 'L' or 'R'");
  }
  auto q = std::make_shared<const Quiver>(n, std::move(arrows));
  if (quiver_out) *quiver_out = q;

  std::vector<Representation> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Representation r;
      r.quiver = q;
      for (int v = 1; v <= n; ++v) r.dims.push_back(i <= v && v <= j ? 1 : 0);
      for (const Arrow& a : q->arrows()) {
        Matrix m(f, r.dims[a.target - 1], r.dims[a.source - 1]);
        if (m.rows() == 1 && m.cols() == 1) m.at(0, 0) = 1;
        r.mats.push_back(m);
      }
      out.push_back(std::move(r));
    }
  return out;
}

}  // namespace wexlat
