#include "wexlat/homalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wexlat {

namespace {

bool rep_equal(const Representation& a, const Representation& b) {
  if (a.dims != b.dims) return false;
  for (std::size_t i = 0; i < a.mats.size(); ++i)
    if (!(a.mats[i] == b.mats[i])) return false;
  return true;
}

using Path = std::vector<int>;  // arrow ids, applied left to right

/// All paths starting at v, grouped by endpoint. Depth-first in arrow-id
/// order, so the basis order is deterministic.
std::vector<std::vector<Path>> paths_from(const Quiver& q, int v) {
  std::vector<std::vector<Path>> out(static_cast<std::size_t>(q.num_vertices()));
  struct Walker {
    const Quiver& q;
    std::vector<std::vector<Path>>& out;
    void walk(int w, const Path& p) {
      out[static_cast<std::size_t>(w - 1)].push_back(p);
      for (const Arrow& a : q.arrows())
        if (a.source == w) {
          Path np = p;
          np.push_back(a.id);
          walk(a.target, np);
        }
    }
  } walker{q, out};
  walker.walk(v, {});
  return out;
}

Vec apply_path(const Representation& m, int start_vertex, const Path& p, Vec v) {
  int w = start_vertex;
  for (int aid : p) {
    const Arrow& a = m.quiver->arrows()[static_cast<std::size_t>(aid)];
    if (a.source != w) throw std::logic_error("path does not start where expected");
    v = m.mats[aid].apply(v);
    w = a.target;
  }
  return v;
}

/// Projective P(v): basis at vertex w = paths v -> w, arrows acting by
/// path extension.
Representation projective_at(const Quiver& q, QuiverPtr qp, PrimeField f, int v,
                             std::vector<std::vector<Path>>* paths_out) {
  auto paths = paths_from(q, v);
  Representation r;
  r.quiver = qp;
  for (int w = 0; w < q.num_vertices(); ++w) r.dims.push_back(paths[static_cast<std::size_t>(w)].size());
  for (const Arrow& a : q.arrows()) {
    const auto& src = paths[static_cast<std::size_t>(a.source - 1)];
    const auto& tgt = paths[static_cast<std::size_t>(a.target - 1)];
    Matrix m(f, tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      Path np = src[c];
      np.push_back(a.id);
      auto it = std::find(tgt.begin(), tgt.end(), np);
      if (it == tgt.end()) throw std::logic_error("extended path missing from projective basis");
      m.at(static_cast<std::size_t>(it - tgt.begin()), c) = 1;
    }
    r.mats.push_back(m);
  }
  if (paths_out) *paths_out = std::move(paths);
  return r;
}

/// Find f with g . f = target, f drawn from H = Hom(X, Y), g : Y -> Z.
std::optional<RepMorphism> factor_through(const HomSpace& H, const RepMorphism& g,
                                          const RepMorphism& target) {
  HomSpace T = hom_space(H.source(), g.target);
  const PrimeField& f = target.source.field();
  Matrix sys(f, T.dim(), H.dim());
  for (std::size_t k = 0; k < H.dim(); ++k) {
    Vec col = T.to_coords(compose(g, H.morphism(k)));
    for (std::size_t r = 0; r < T.dim(); ++r) sys.at(r, k) = col[r];
  }
  auto x = solve(sys, T.to_coords(target));
  if (!x) return std::nullopt;
  return H.from_coords(*x);
}

}  // namespace

bool ProjPresentation::is_exact() const {
  if (!is_injective(incl) || !is_surjective(proj)) return false;
  for (std::size_t v = 0; v < M.dims.size(); ++v)
    if (P0.dims[v] != P1.dims[v] + M.dims[v]) return false;
  for (std::size_t v = 0; v < M.dims.size(); ++v)
    if (!(proj.comps[v] * incl.comps[v]).is_zero()) return false;
  return true;
}

bool ShortExactSeq::is_exact() const {
  if (!is_injective(i) || !is_surjective(d)) return false;
  for (std::size_t v = 0; v < A.dims.size(); ++v)
    if (B.dims[v] != A.dims[v] + C.dims[v]) return false;
  for (std::size_t v = 0; v < A.dims.size(); ++v)
    if (!(d.comps[v] * i.comps[v]).is_zero()) return false;
  return true;
}

ProjPresentation presentation(const Representation& m) {
  const Quiver& q = *m.quiver;
  const PrimeField& f = m.field();

  struct P0Part {
    int v;
    std::size_t copy;
    std::vector<std::vector<Path>> paths;
  };
  struct P1Part {
    int arrow;
    std::size_t copy;  // basis index of M(source)
    std::vector<std::vector<Path>> paths;  // from the arrow target
  };
  std::vector<P0Part> p0parts;
  std::vector<Representation> p0reps;
  for (int v = 1; v <= q.num_vertices(); ++v)
    for (std::size_t c = 0; c < m.dims[static_cast<std::size_t>(v - 1)]; ++c) {
      std::vector<std::vector<Path>> paths;
      p0reps.push_back(projective_at(q, m.quiver, f, v, &paths));
      p0parts.push_back({v, c, std::move(paths)});
    }
  std::vector<P1Part> p1parts;
  std::vector<Representation> p1reps;
  for (const Arrow& a : q.arrows())
    for (std::size_t c = 0; c < m.dims[static_cast<std::size_t>(a.source - 1)]; ++c) {
      std::vector<std::vector<Path>> paths;
      p1reps.push_back(projective_at(q, m.quiver, f, a.target, &paths));
      p1parts.push_back({a.id, c, std::move(paths)});
    }

  ProjPresentation pres;
  pres.M = m;
  pres.P0 = p0reps.empty() ? Representation::zero(m.quiver, f)
                           : direct_sum(std::span<const Representation>(p0reps)).sum;
  pres.P1 = p1reps.empty() ? Representation::zero(m.quiver, f)
                           : direct_sum(std::span<const Representation>(p1reps)).sum;

  // proj : P0 -> M,  (path q : v -> x, copy c)  |->  M(q) e_c
  pres.proj.source = pres.P0;
  pres.proj.target = m;
  for (int x = 1; x <= q.num_vertices(); ++x) {
    const std::size_t dx = m.dims[static_cast<std::size_t>(x - 1)];
    std::vector<Vec> cols;
    for (const P0Part& part : p0parts)
      for (const Path& p : part.paths[static_cast<std::size_t>(x - 1)]) {
        Vec e(m.dims[static_cast<std::size_t>(part.v - 1)], 0);
        e[part.copy] = 1;
        cols.push_back(apply_path(m, part.v, p, e));
      }
    Matrix mat(f, dx, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < dx; ++r) mat.at(r, c) = cols[c][r];
    pres.proj.comps.push_back(mat);
  }

  // incl : P1 -> P0,  (path q : t -> x, arrow a : s -> t, copy c)  |->
  //   (q a : s -> x in the copy-c summand of P(s))  -  sum_k M(a)[k][c] (q in copy-k of P(t))
  auto p0_index = [&](int x) {
    std::vector<std::pair<std::size_t, const Path*>> idx;
    for (std::size_t pi = 0; pi < p0parts.size(); ++pi)
      for (const Path& p : p0parts[pi].paths[static_cast<std::size_t>(x - 1)]) idx.push_back({pi, &p});
    return idx;
  };
  pres.incl.source = pres.P1;
  pres.incl.target = pres.P0;
  for (int x = 1; x <= q.num_vertices(); ++x) {
    auto p0idx = p0_index(x);
    std::vector<std::pair<std::size_t, const Path*>> p1idx;
    for (std::size_t pi = 0; pi < p1parts.size(); ++pi)
      for (const Path& p : p1parts[pi].paths[static_cast<std::size_t>(x - 1)]) p1idx.push_back({pi, &p});
    Matrix mat(f, p0idx.size(), p1idx.size());
    for (std::size_t cc = 0; cc < p1idx.size(); ++cc) {
      const P1Part& part = p1parts[p1idx[cc].first];
      const Arrow& a = q.arrows()[static_cast<std::size_t>(part.arrow)];
      Path qa{part.arrow};
      qa.insert(qa.end(), p1idx[cc].second->begin(), p1idx[cc].second->end());
      for (std::size_t rr = 0; rr < p0idx.size(); ++rr) {
        const P0Part& p0p = p0parts[p0idx[rr].first];
        const Path& qp = *p0idx[rr].second;
        Scalar val = mat.at(rr, cc);
        if (p0p.v == a.source && p0p.copy == part.copy && qp == qa) val = f.add(val, 1);
        if (p0p.v == a.target && qp == *p1idx[cc].second)
          val = f.sub(val, m.mats[static_cast<std::size_t>(part.arrow)].at(p0p.copy, part.copy));
        mat.at(rr, cc) = val;
      }
    }
    pres.incl.comps.push_back(mat);
  }
  return pres;
}

ExtSpace::ExtSpace(std::shared_ptr<const ProjPresentation> pres, Representation A)
    : pres_(std::move(pres)),
      A_(std::move(A)),
      hom_p1a_(hom_space(pres_->P1, A_)),
      image_{Matrix(A_.field(), 0, 0), {}} {
  HomSpace hom_p0a = hom_space(pres_->P0, A_);
  const PrimeField& f = A_.field();
  Matrix img(f, hom_p0a.dim(), hom_p1a_.dim());
  for (std::size_t k = 0; k < hom_p0a.dim(); ++k) {
    Vec co = hom_p1a_.to_coords(compose(hom_p0a.morphism(k), pres_->incl));
    for (std::size_t j = 0; j < co.size(); ++j) img.at(k, j) = co[j];
  }
  image_ = rref(img);
  std::vector<bool> piv(hom_p1a_.dim(), false);
  for (auto c : image_.pivots) piv[c] = true;
  for (std::size_t c = 0; c < hom_p1a_.dim(); ++c)
    if (!piv[c]) nonpivots_.push_back(c);
}

Vec ExtSpace::reduce(Vec v) const {
  const PrimeField& f = A_.field();
  for (std::size_t i = 0; i < image_.pivots.size(); ++i) {
    Scalar c = v[image_.pivots[i]];
    if (!c) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, image_.mat.at(i, j)));
  }
  Vec out;
  for (auto c : nonpivots_) out.push_back(v[c]);
  return out;
}

Vec ExtSpace::cocycle(const Vec& quotient_coords) const {
  if (quotient_coords.size() != dim()) throw std::invalid_argument("ext class coordinate length mismatch");
  Vec v(hom_p1a_.dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) v[nonpivots_[i]] = quotient_coords[i];
  return v;
}

RepMorphism ExtSpace::cocycle_morphism(const Vec& quotient_coords) const {
  return hom_p1a_.from_coords(cocycle(quotient_coords));
}

Vec ExtSpace::class_of_cocycle(const RepMorphism& c) const {
  return reduce(hom_p1a_.to_coords(c));
}

ExtSpace ext_space(const Representation& C, const Representation& A) {
  return ExtSpace(std::make_shared<ProjPresentation>(presentation(C)), A);
}

Vec pushout_action(const ExtSpace& src, const ExtSpace& dst, const RepMorphism& a,
                   const Vec& coords) {
  if (dst.pres_ptr().get() != src.pres_ptr().get() && !rep_equal(dst.C(), src.C()))
    throw std::invalid_argument("pushout_action: target Ext space is over a different C");
  if (!rep_equal(a.source, src.A()) || !rep_equal(a.target, dst.A()))
    throw std::invalid_argument("pushout_action: morphism endpoints mismatch");
  RepMorphism h = src.cocycle_morphism(coords);
  RepMorphism comp = compose(a, h);
  if (dst.pres_ptr().get() != src.pres_ptr().get())
    comp = RepMorphism{dst.pres().P1, dst.A(), comp.comps};
  return dst.class_of_cocycle(comp);
}

Vec pullback_action(const ExtSpace& src, const ExtSpace& dst, const RepMorphism& c,
                    const Vec& coords) {
  if (!rep_equal(c.source, dst.C()) || !rep_equal(c.target, src.C()))
    throw std::invalid_argument("pullback_action: morphism endpoints mismatch");
  if (!rep_equal(dst.A(), src.A()))
    throw std::invalid_argument("pullback_action: Ext spaces have different A");
  const ProjPresentation& ps = src.pres();
  const ProjPresentation& pd = dst.pres();
  // chain map over c between the presentations
  auto phi0 = factor_through(hom_space(pd.P0, ps.P0), ps.proj, compose(c, pd.proj));
  if (!phi0) throw std::logic_error("pullback_action: presentation lift failed at P0");
  auto phi1 = factor_through(hom_space(pd.P1, ps.P1), ps.incl, compose(*phi0, pd.incl));
  if (!phi1) throw std::logic_error("pullback_action: presentation lift failed at P1");
  RepMorphism h = src.cocycle_morphism(coords);
  return dst.class_of_cocycle(compose(h, *phi1));
}

ShortExactSeq realize(const ExtSpace& es, const Vec& coords) {
  const ProjPresentation& pres = es.pres();
  const PrimeField& f = es.A().field();
  RepMorphism h = es.cocycle_morphism(coords);  // P1 -> A
  Biproduct bp = direct_sum(pres.P0, es.A());
  // graph of (incl, -h) on P1, vertexwise
  std::vector<Matrix> graph;
  for (std::size_t v = 0; v < pres.P1.dims.size(); ++v) {
    Matrix g(f, pres.P1.dims[v], pres.P0.dims[v] + es.A().dims[v]);
    for (std::size_t k = 0; k < pres.P1.dims[v]; ++k) {
      for (std::size_t r = 0; r < pres.P0.dims[v]; ++r) g.at(k, r) = pres.incl.comps[v].at(r, k);
      for (std::size_t r = 0; r < es.A().dims[v]; ++r)
        g.at(k, pres.P0.dims[v] + r) = f.neg(h.comps[v].at(r, k));
    }
    graph.push_back(row_space(g));
  }
  QuotRep qr = quotient(bp.sum, graph);
  ShortExactSeq s;
  s.A = es.A();
  s.C = es.C();
  s.B = qr.quot;
  s.i = compose(qr.proj, bp.injections[1]);
  // [proj, 0] : P0 + A -> C vanishes on the graph
  s.d = qr.induced(compose(pres.proj, bp.projections[0]));
  return s;
}

Vec yoneda_class(const ExtSpace& es, const ShortExactSeq& s) {
  if (!rep_equal(s.A, es.A()) || !rep_equal(s.C, es.C()))
    throw std::invalid_argument("yoneda_class: sequence ends do not match the Ext space");
  const ProjPresentation& pres = es.pres();
  auto l0 = factor_through(hom_space(pres.P0, s.B), s.d, pres.proj);
  if (!l0) throw std::logic_error("yoneda_class: lift through d failed");
  RepMorphism u = compose(*l0, pres.incl);  // P1 -> B, lands in the image of i
  auto h = factor_through(hom_space(pres.P1, s.A), s.i, u);
  if (!h) throw std::logic_error("yoneda_class: factoring through i failed");
  return es.class_of_cocycle(*h);
}

Vec baer_sum(const ExtSpace& es, const Vec& a, const Vec& b) {
  if (a.size() != es.dim() || b.size() != es.dim())
    throw std::invalid_argument("baer_sum: coordinate length mismatch");
  const PrimeField& f = es.A().field();
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec baer_sum_oracle(const ExtSpace& es, const Vec& a, const Vec& b) {
  ShortExactSeq s1 = realize(es, a), s2 = realize(es, b);
  Biproduct bpA = direct_sum(es.A(), es.A());
  Biproduct bpC = direct_sum(es.C(), es.C());
  Biproduct bpB = direct_sum(s1.B, s2.B);
  ShortExactSeq ds;
  ds.A = bpA.sum;
  ds.B = bpB.sum;
  ds.C = bpC.sum;
  ds.i = morphism_sum(compose(bpB.injections[0], compose(s1.i, bpA.projections[0])),
                      compose(bpB.injections[1], compose(s2.i, bpA.projections[1])));
  ds.d = morphism_sum(compose(bpC.injections[0], compose(s1.d, bpB.projections[0])),
                      compose(bpC.injections[1], compose(s2.d, bpB.projections[1])));
  ExtSpace es2 = ext_space(bpC.sum, bpA.sum);
  Vec cls = yoneda_class(es2, ds);
  // codiagonal then diagonal
  RepMorphism nabla = morphism_sum(bpA.projections[0], bpA.projections[1]);
  ExtSpace es2a(es2.pres_ptr(), es.A());
  Vec pushed = pushout_action(es2, es2a, nabla, cls);
  RepMorphism delta = morphism_sum(bpC.injections[0], bpC.injections[1]);
  return pullback_action(es2a, es, delta, pushed);
}

bool sequences_isomorphic_fixed_ends(const ShortExactSeq& s1, const ShortExactSeq& s2) {
  if (!rep_equal(s1.A, s2.A) || !rep_equal(s1.C, s2.C)) return false;
  if (s1.B.dims != s2.B.dims) return false;
  // phi : B1 -> B2 with phi i1 = i2 and d2 phi = d1; by the five lemma any
  // such phi is an isomorphism.
  HomSpace H = hom_space(s1.B, s2.B);
  HomSpace TA = hom_space(s1.A, s2.B);
  HomSpace TC = hom_space(s1.B, s2.C);
  const PrimeField& f = s1.B.field();
  Matrix sys(f, TA.dim() + TC.dim(), H.dim());
  for (std::size_t k = 0; k < H.dim(); ++k) {
    Vec ca = TA.to_coords(compose(H.morphism(k), s1.i));
    Vec cc = TC.to_coords(compose(s2.d, H.morphism(k)));
    for (std::size_t r = 0; r < TA.dim(); ++r) sys.at(r, k) = ca[r];
    for (std::size_t r = 0; r < TC.dim(); ++r) sys.at(TA.dim() + r, k) = cc[r];
  }
  Vec rhs = TA.to_coords(s2.i);
  Vec rhs2 = TC.to_coords(s1.d);
  rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());
  return solve(sys, rhs).has_value();
}

ShortExactSeq pushout_sequence(const ShortExactSeq& s, const RepMorphism& a) {
  Biproduct bp = direct_sum(s.B, a.target);
  // [i; -a] : A -> B + A'
  RepMorphism u = morphism_sum(compose(bp.injections[0], s.i),
                               morphism_scaled(compose(bp.injections[1], a),
                                               s.B.field().neg(1)));
  QuotRep qr = cokernel(u);
  ShortExactSeq out;
  out.A = a.target;
  out.B = qr.quot;
  out.C = s.C;
  out.i = compose(qr.proj, bp.injections[1]);
  out.d = qr.induced(compose(s.d, bp.projections[0]));
  return out;
}

}  // namespace wexlat
