#include "wexlat/exactness.hpp"

#include <random>
#include <unordered_map>

namespace wexlat {

namespace {

Matrix pushout_matrix(const ExtSpace& src, const ExtSpace& dst, const RepMorphism& a) {
  Matrix m(src.A().field(), dst.dim(), src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) {
    Vec unit(src.dim(), 0);
    unit[k] = 1;
    Vec out = pushout_action(src, dst, a, unit);
    for (std::size_t r = 0; r < out.size(); ++r) m.at(r, k) = out[r];
  }
  return m;
}

Matrix pullback_matrix(const ExtSpace& src, const ExtSpace& dst, const RepMorphism& c) {
  Matrix m(src.A().field(), dst.dim(), src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) {
    Vec unit(src.dim(), 0);
    unit[k] = 1;
    Vec out = pullback_action(src, dst, c, unit);
    for (std::size_t r = 0; r < out.size(); ++r) m.at(r, k) = out[r];
  }
  return m;
}

/// N cut down to block (c, a), in local Ext coordinates. Idempotent closure
/// makes N the direct sum of these components.
Matrix block_component(const ExtBimodule& bm, const Matrix& n_rref, std::size_t c, std::size_t a) {
  const PrimeField& f = bm.field();
  std::size_t bd = bm.block(c, a).dim();
  if (bd == 0) return Matrix(f, 0, 0);
  std::size_t start = bm.coord_index(c, a, 0);
  Matrix units(f, bd, bm.dim());
  for (std::size_t r = 0; r < bd; ++r) units.at(r, start + r) = 1;
  Matrix inter = subspace_intersection(n_rref, units);
  Matrix local(f, inter.rows(), bd);
  for (std::size_t r = 0; r < inter.rows(); ++r)
    for (std::size_t j = 0; j < bd; ++j) local.at(r, j) = inter.at(r, start + j);
  return row_space(local);
}

/// P with P v = 0 iff v lies in the row space of s_rref (d columns);
/// rows are the mod-S reductions read off at the non-pivot coordinates.
Matrix quotient_projector(const Matrix& s_rref, std::size_t d) {
  const PrimeField& f = s_rref.field();
  RrefResult r = rref(s_rref);
  std::vector<std::size_t> nonpivots;
  for (std::size_t j = 0; j < d; ++j)
    if (std::find(r.pivots.begin(), r.pivots.end(), j) == r.pivots.end()) nonpivots.push_back(j);
  Matrix p(f, nonpivots.size(), d);
  for (std::size_t t = 0; t < nonpivots.size(); ++t) {
    p.at(t, nonpivots[t]) = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      p.at(t, r.pivots[k]) = f.neg(r.mat.at(k, nonpivots[t]));
  }
  return p;
}

Matrix map_rows(const Matrix& m, const Matrix& rows) {
  // row space of { m v : v row of rows }
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(m.apply(rows.row(r)));
  return row_space(Matrix::from_rows(m.field(), out, m.rows()));
}

std::string class_key(std::size_t c, std::size_t a, const Vec& v) {
  std::string k = std::to_string(c) + "," + std::to_string(a) + ":";
  for (Scalar s : v) k += std::to_string(s) + ",";
  return k;
}

}  // namespace

std::vector<ClosednessVerdict> closed_flags(const SubmoduleLattice& lat) {
  std::vector<ClosednessVerdict> out(lat.size());
  std::unordered_map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out[i].node = i;
    groups[node_socle(lat, i).key()].push_back(i);
  }
  for (auto& [key, members] : groups) {
    std::size_t best = members[0];
    for (std::size_t m : members)
      if (lat.nodes()[m].dim() > lat.nodes()[best].dim()) best = m;
    for (std::size_t m : members)
      if (m != best && !lat.leq(m, best))
        throw StructuralError("socle class has no unique maximal element: nodes " +
                              std::to_string(m) + " and " + std::to_string(best) +
                              " are incomparable");
    for (std::size_t m : members) {
      out[m].maximal_with_socle = best;
      out[m].closed = (m == best);
    }
  }
  return out;
}

Matrix node_socle(const SubmoduleLattice& lat, std::size_t i) {
  const ExtBimodule& bm = lat.bimodule();
  if (lat.used_fast_path()) {
    // fast-path submodules are coordinate subsets, so the socle is spanned
    // by the member coordinates with no radical successors
    const auto& succ = bm.succ_masks();
    std::uint64_t mask = lat.masks()[i];
    std::vector<Vec> rows;
    for (std::size_t b = 0; b < bm.dim(); ++b)
      if ((mask >> b & 1) && succ[b] == 0) {
        Vec v(bm.dim(), 0);
        v[b] = 1;
        rows.push_back(v);
      }
    return Matrix::from_rows(bm.field(), rows, bm.dim());
  }
  return bm.socle(lat.nodes()[i].basis);
}

struct MiddleExactChecker::SeqData {
  struct CoSide {                // Ext(X, B) for one indecomposable X
    std::size_t ext_dim = 0;
    Matrix i_push, d_push;       // block(x,a) -> Ext(X,B) -> block(x,c)
    std::vector<std::pair<std::size_t, Matrix>> constraints;  // (j, Ext(X,B) -> block(x,j))
  };
  struct ContraSide {            // Ext(B, X)
    std::size_t ext_dim = 0;
    Matrix d_pull, i_pull;       // block(c,x) -> Ext(B,X) -> block(a,x)
    std::vector<std::pair<std::size_t, Matrix>> constraints;  // (j, Ext(B,X) -> block(j,x))
  };
  std::vector<CoSide> co;
  std::vector<ContraSide> contra;
};

const MiddleExactChecker::SeqData& MiddleExactChecker::seq_data(std::size_t c, std::size_t a,
                                                                const Vec& local_class) {
  std::string key = class_key(c, a, local_class);
  auto it = cache_.find(key);
  if (it != cache_.end()) return *it->second;

  const ExtBimodule& bm = *bm_;
  const std::size_t n = bm.algebra().num_indecs();
  ShortExactSeq seq = realize(bm.block(c, a), local_class);
  auto pres_b = std::make_shared<const ProjPresentation>(presentation(seq.B));

  // hom bases into and out of the middle term, shared across all X
  std::vector<HomSpace> from_b, to_b;
  for (std::size_t j = 0; j < n; ++j) {
    from_b.push_back(hom_space(seq.B, bm.algebra().indecs()[j]));
    to_b.push_back(hom_space(bm.algebra().indecs()[j], seq.B));
  }

  SeqData sd;
  for (std::size_t x = 0; x < n; ++x) {
    ExtSpace ext_xb(bm.block(x, 0).pres_ptr(), seq.B);
    SeqData::CoSide co;
    co.ext_dim = ext_xb.dim();
    co.i_push = pushout_matrix(bm.block(x, a), ext_xb, seq.i);
    co.d_push = pushout_matrix(ext_xb, bm.block(x, c), seq.d);
    for (std::size_t j = 0; j < n; ++j) {
      if (bm.block(x, j).dim() == 0) continue;
      for (std::size_t g = 0; g < from_b[j].dim(); ++g)
        co.constraints.emplace_back(j, pushout_matrix(ext_xb, bm.block(x, j), from_b[j].morphism(g)));
    }
    sd.co.push_back(std::move(co));

    ExtSpace ext_bx(pres_b, bm.algebra().indecs()[x]);
    SeqData::ContraSide ct;
    ct.ext_dim = ext_bx.dim();
    ct.d_pull = pullback_matrix(bm.block(c, x), ext_bx, seq.d);
    ct.i_pull = pullback_matrix(ext_bx, bm.block(a, x), seq.i);
    for (std::size_t j = 0; j < n; ++j) {
      if (bm.block(j, x).dim() == 0) continue;
      for (std::size_t g = 0; g < to_b[j].dim(); ++g)
        ct.constraints.emplace_back(j, pullback_matrix(ext_bx, bm.block(j, x), to_b[j].morphism(g)));
    }
    sd.contra.push_back(std::move(ct));
  }
  return *cache_.emplace(key, std::make_shared<SeqData>(std::move(sd))).first->second;
}

bool MiddleExactChecker::check(const Matrix& n_rref, MiddleExactWitness* witness) {
  const ExtBimodule& bm = *bm_;
  const PrimeField& f = bm.field();
  const std::size_t n = bm.algebra().num_indecs();

  // N's block components in local coordinates, once per call
  std::vector<Matrix> comp(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a) comp[c * n + a] = block_component(bm, n_rref, c, a);

  // subspace of the ambient Ext cut out by the stored constraint maps
  auto subfunctor = [&](std::size_t ext_dim, std::size_t fixed,
                        const std::vector<std::pair<std::size_t, Matrix>>& constraints,
                        bool fixed_is_c) {
    Matrix stack(f, 0, ext_dim);
    for (const auto& [j, m] : constraints) {
      const Matrix& s = fixed_is_c ? comp[fixed * n + j] : comp[j * n + fixed];
      Matrix p = quotient_projector(s, m.rows());
      if (p.rows() > 0) stack = Matrix::vstack(stack, p * m);
    }
    if (stack.rows() == 0) return Matrix::identity(f, ext_dim);
    return row_space(kernel_basis(stack));
  };

  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a) {
      const Matrix& s = comp[c * n + a];
      for (std::size_t r = 0; r < s.rows(); ++r) {
        Vec cls = s.row(r);
        const SeqData& sd = seq_data(c, a, cls);
        for (std::size_t x = 0; x < n; ++x) {
          const auto& co = sd.co[x];
          if (co.ext_dim > 0) {
            Matrix fsub = subfunctor(co.ext_dim, x, co.constraints, true);
            Matrix img = map_rows(co.i_push, comp[x * n + a]);
            Matrix ker = subspace_intersection(row_space(kernel_basis(co.d_push)), fsub);
            if (!subspace_leq(img, ker) || img.rows() != ker.rows()) {
              if (witness) *witness = {x, c, a, cls, "N(X,-) at middle term"};
              return false;
            }
          }
          const auto& ct = sd.contra[x];
          if (ct.ext_dim > 0) {
            Matrix fsub = subfunctor(ct.ext_dim, x, ct.constraints, false);
            Matrix img = map_rows(ct.d_pull, comp[c * n + x]);
            Matrix ker = subspace_intersection(row_space(kernel_basis(ct.i_pull)), fsub);
            if (!subspace_leq(img, ker) || img.rows() != ker.rows()) {
              if (witness) *witness = {x, c, a, cls, "N(-,X) at middle term"};
              return false;
            }
          }
        }
      }
    }
  return true;
}

bool middle_exact_check(const ExtBimodule& bm, const Matrix& n_rref,
                        MiddleExactWitness* witness) {
  MiddleExactChecker checker(bm);
  return checker.check(n_rref, witness);
}

std::optional<CompositionWitness> composition_counterexample(const ExtBimodule& bm,
                                                             const Matrix& n_rref,
                                                             std::size_t pair_budget) {
  const PrimeField& f = bm.field();
  const std::size_t n = bm.algebra().num_indecs();
  std::vector<Matrix> comp(n * n);
  std::vector<RrefResult> comp_rref(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a) {
      comp[c * n + a] = block_component(bm, n_rref, c, a);
      comp_rref[c * n + a] = rref(comp[c * n + a]);
    }

  std::size_t used = 0;
  for (std::size_t c1 = 0; c1 < n && used < pair_budget; ++c1)
    for (std::size_t a = 0; a < n && used < pair_budget; ++a) {
      const Matrix& s1 = comp[c1 * n + a];
      for (std::size_t r1 = 0; r1 < s1.rows() && used < pair_budget; ++r1) {
        Vec v1 = s1.row(r1);
        ShortExactSeq seq1 = realize(bm.block(c1, a), v1);
        auto pres_b = std::make_shared<const ProjPresentation>(presentation(seq1.B));
        std::vector<HomSpace> from_b;
        for (std::size_t j = 0; j < n; ++j)
          from_b.push_back(hom_space(seq1.B, bm.algebra().indecs()[j]));
        for (std::size_t c2 = 0; c2 < n && used < pair_budget; ++c2) {
          ExtSpace ext_c2b(bm.block(c2, 0).pres_ptr(), seq1.B);
          if (ext_c2b.dim() == 0) continue;
          // classes of N-inflations out of the middle term: push forward
          // along every map to an indecomposable must stay inside N
          Matrix stack(f, 0, ext_c2b.dim());
          for (std::size_t j = 0; j < n; ++j) {
            if (bm.block(c2, j).dim() == 0) continue;
            for (std::size_t g = 0; g < from_b[j].dim(); ++g) {
              Matrix m = pushout_matrix(ext_c2b, bm.block(c2, j), from_b[j].morphism(g));
              Matrix p = quotient_projector(comp[c2 * n + j], m.rows());
              if (p.rows() > 0) stack = Matrix::vstack(stack, p * m);
            }
          }
          Matrix fsub = stack.rows() == 0 ? Matrix::identity(f, ext_c2b.dim())
                                          : row_space(kernel_basis(stack));
          for (std::size_t r2 = 0; r2 < fsub.rows() && used < pair_budget; ++r2) {
            ++used;
            Vec v2 = fsub.row(r2);
            ShortExactSeq seq2 = realize(ext_c2b, v2);
            RepMorphism m = compose(seq2.i, seq1.i);  // A >-> E
            QuotRep q = cokernel(m);
            if (q.quot.total_dim() == 0) continue;
            ExtSpace ext_qa(std::make_shared<const ProjPresentation>(presentation(q.quot)),
                            seq1.A);
            Vec u = yoneda_class(ext_qa, {seq1.A, seq2.B, q.quot, m, q.proj});
            for (std::size_t j = 0; j < n; ++j) {
              if (bm.block(j, a).dim() == 0) continue;
              HomSpace probes = hom_space(bm.algebra().indecs()[j], q.quot);
              for (std::size_t p = 0; p < probes.dim(); ++p) {
                Vec t = pullback_action(ext_qa, bm.block(j, a), probes.morphism(p), u);
                if (!subspace_contains(comp_rref[j * n + a], t))
                  return CompositionWitness{c1, a, v1, c2, v2, j, t};
              }
            }
          }
        }
      }
    }
  return std::nullopt;
}

std::size_t closed_join_index(const SubmoduleLattice& lat,
                              const std::vector<ClosednessVerdict>& verdicts, std::size_t i,
                              std::size_t j) {
  if (!verdicts[i].closed || !verdicts[j].closed)
    throw std::invalid_argument("closed_join requires closed nodes");
  Matrix acc = lat.nodes()[lat.top()].basis;
  for (const auto& v : verdicts) {
    if (!v.closed) continue;
    if (lat.leq(i, v.node) && lat.leq(j, v.node))
      acc = subspace_intersection(acc, lat.nodes()[v.node].basis);
  }
  return lat.index_of(acc);
}

bool boolean_check(const SubmoduleLattice& lat, const std::vector<ClosednessVerdict>& verdicts) {
  const ExtBimodule& bm = lat.bimodule();
  Matrix soc = bm.socle_of_whole();
  const std::size_t s = soc.rows();
  if (s > 63) return false;
  std::vector<std::size_t> closed;
  for (const auto& v : verdicts)
    if (v.closed) closed.push_back(v.node);
  if (closed.size() != (std::size_t{1} << s)) return false;

  std::vector<RrefResult> node_rref;
  std::vector<std::uint64_t> support(closed.size(), 0);
  for (std::size_t k = 0; k < closed.size(); ++k) {
    RrefResult r = rref(lat.nodes()[closed[k]].basis);
    for (std::size_t line = 0; line < s; ++line)
      if (subspace_contains(r, soc.row(line))) support[k] |= std::uint64_t{1} << line;
  }
  std::vector<bool> seen(std::size_t{1} << s, false);
  for (std::uint64_t m : support) {
    if (seen[m]) return false;  // supports must be pairwise distinct
    seen[m] = true;
  }
  // order-compatibility in both directions
  for (std::size_t x = 0; x < closed.size(); ++x)
    for (std::size_t y = 0; y < closed.size(); ++y)
      if (lat.leq(closed[x], closed[y]) != ((support[x] & ~support[y]) == 0)) return false;
  return true;
}

bool obscure_axiom_spot_check(const ExtBimodule& bm, const Matrix& n_rref, std::uint32_t seed,
                              int samples_per_class) {
  const PrimeField& f = bm.field();
  const std::size_t n = bm.algebra().num_indecs();
  std::mt19937 rng(seed);
  std::vector<RrefResult> comp_rref(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a) comp_rref[c * n + a] = rref(block_component(bm, n_rref, c, a));

  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a) {
      const Matrix& s = comp_rref[c * n + a].mat;
      for (std::size_t r = 0; r < s.rows(); ++r) {
        ShortExactSeq seq = realize(bm.block(c, a), s.row(r));
        std::size_t nv = seq.B.dims.size();
        for (int trial = 0; trial < samples_per_class; ++trial) {
          // intermediate subrepresentation: image of i plus one random vector
          std::vector<Matrix> spans;
          for (std::size_t v = 0; v < nv; ++v) spans.push_back(seq.i.comps[v].transpose());
          std::vector<std::size_t> live;
          for (std::size_t v = 0; v < nv; ++v)
            if (seq.B.dims[v] > 0) live.push_back(v);
          if (live.empty()) continue;
          std::size_t vtx = live[rng() % live.size()];
          Vec extra(seq.B.dims[vtx]);
          bool nonzero = false;
          for (Scalar& x : extra) {
            x = static_cast<Scalar>(rng() % f.modulus());
            nonzero = nonzero || x != 0;
          }
          if (!nonzero) continue;
          spans[vtx] = Matrix::vstack(spans[vtx], Matrix::from_rows(f, {extra}, extra.size()));
          SubRep t = subrepresentation(seq.B, spans);
          if (t.sub.total_dim() == seq.B.total_dim()) continue;  // nothing new to test

          // corestrict i to T; the solve succeeds since im(i) lies in T
          RepMorphism i2{seq.A, t.sub, {}};
          bool ok = true;
          for (std::size_t v = 0; v < nv; ++v) {
            Matrix comp(f, t.sub.dims[v], seq.A.dims[v]);
            Matrix incl_t = t.incl.comps[v];
            for (std::size_t col = 0; col < seq.A.dims[v] && ok; ++col) {
              Vec target(seq.B.dims[v]);
              for (std::size_t row = 0; row < seq.B.dims[v]; ++row)
                target[row] = seq.i.comps[v].at(row, col);
              auto x = solve(incl_t, target);
              if (!x) {
                ok = false;
                break;
              }
              for (std::size_t row = 0; row < t.sub.dims[v]; ++row) comp.at(row, col) = (*x)[row];
            }
            i2.comps.push_back(std::move(comp));
          }
          if (!ok) return false;  // should be impossible
          QuotRep q = cokernel(i2);
          if (q.quot.total_dim() == 0) continue;  // corestriction is an iso
          ExtSpace ext_qa(std::make_shared<const ProjPresentation>(presentation(q.quot)), seq.A);
          Vec u = yoneda_class(ext_qa, {seq.A, t.sub, q.quot, i2, q.proj});
          for (std::size_t j = 0; j < n; ++j) {
            if (bm.block(j, a).dim() == 0) continue;
            HomSpace probes = hom_space(bm.algebra().indecs()[j], q.quot);
            for (std::size_t p = 0; p < probes.dim(); ++p) {
              Vec pulled = pullback_action(ext_qa, bm.block(j, a), probes.morphism(p), u);
              if (!subspace_contains(comp_rref[j * n + a], pulled)) return false;
            }
          }
        }
      }
    }
  return true;
}

}  // namespace wexlat
