#include "wexlat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_set>

namespace wexlat {

namespace {

// Closing under radical actions plus the idempotent block projections is
// enough: diagonal algebra elements act as scalar multiples of projections.
std::vector<Matrix> closure_actions(const ExtBimodule& bm) {
  std::vector<Matrix> acts;
  for (std::size_t k : bm.algebra().radical_indices()) {
    acts.push_back(bm.left_action(k));
    acts.push_back(bm.right_action(k));
  }
  for (std::size_t i = 0; i < bm.algebra().num_indecs(); ++i) {
    acts.push_back(bm.idempotent_left(i));
    acts.push_back(bm.idempotent_right(i));
  }
  return acts;
}

Matrix closed_span(const std::vector<Matrix>& acts, const Matrix& seed_rows) {
  Matrix cur = row_space(seed_rows);
  for (;;) {
    Matrix stack = cur;
    for (const Matrix& a : acts)
      for (std::size_t r = 0; r < cur.rows(); ++r) {
        Vec v = a.apply(cur.row(r));
        stack = Matrix::vstack(stack, Matrix::from_rows(cur.field(), {v}, v.size()));
      }
    Matrix next = row_space(stack);
    if (next.rows() == cur.rows()) return next;
    cur = next;
  }
}

std::uint64_t pow_saturating(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::uint64_t mask_closure(const std::vector<std::uint64_t>& succ, std::uint64_t m) {
  for (;;) {
    std::uint64_t next = m;
    std::uint64_t bits = m;
    while (bits) {
      std::size_t b = static_cast<std::size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      next |= succ[b];
    }
    if (next == m) return m;
    m = next;
  }
}

Matrix mask_basis(const PrimeField& f, std::size_t dim, std::uint64_t mask) {
  Matrix m(f, static_cast<std::size_t>(__builtin_popcountll(mask)), dim);
  std::size_t r = 0;
  for (std::size_t b = 0; b < dim; ++b)
    if (mask >> b & 1) m.at(r++, b) = 1;
  return m;
}

bool one_dimensional_blocks(const ExtBimodule& bm) {
  const std::size_t n = bm.algebra().num_indecs();
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      if (bm.block(c, a).dim() > 1) return false;
  return true;
}

}  // namespace

SubBimodule generated_submodule(const ExtBimodule& bm, const std::vector<Vec>& vectors) {
  Matrix seed = Matrix::from_rows(bm.field(), vectors, bm.dim());
  return {closed_span(closure_actions(bm), seed)};
}

bool is_action_closed(const ExtBimodule& bm, const Matrix& basis_rref) {
  RrefResult r = rref(basis_rref);
  for (const Matrix& a : closure_actions(bm))
    for (std::size_t i = 0; i < basis_rref.rows(); ++i)
      if (!subspace_contains(r, a.apply(basis_rref.row(i)))) return false;
  return true;
}

SubBimodule meet(const SubBimodule& a, const SubBimodule& b) {
  return {subspace_intersection(a.basis, b.basis)};
}

SubBimodule join(const SubBimodule& a, const SubBimodule& b) {
  return {subspace_sum(a.basis, b.basis)};
}

std::size_t SubmoduleLattice::index_of(const Matrix& basis_rref) const {
  auto it = index_.find(basis_rref.key());
  if (it == index_.end()) throw std::logic_error("subspace is not a node of the lattice");
  return it->second;
}

bool SubmoduleLattice::leq(std::size_t i, std::size_t j) const {
  if (fast_path_) return (masks_[i] & ~masks_[j]) == 0;
  return subspace_leq(nodes_[i].basis, nodes_[j].basis);
}

std::size_t SubmoduleLattice::meet_index(std::size_t i, std::size_t j) const {
  return index_of(subspace_intersection(nodes_[i].basis, nodes_[j].basis));
}

std::size_t SubmoduleLattice::join_index(std::size_t i, std::size_t j) const {
  return index_of(subspace_sum(nodes_[i].basis, nodes_[j].basis));
}

SubmoduleLattice enumerate_submodules(const ExtBimodule& bm, const EnumOptions& opts) {
  SubmoduleLattice lat;
  lat.bm_ = &bm;
  const PrimeField& f = bm.field();
  const std::size_t dim = bm.dim();

  const bool fast = !opts.force_general && bm.monomial_actions() && dim <= 64 &&
                    one_dimensional_blocks(bm);

  std::vector<Matrix> node_bases;
  std::vector<std::uint64_t> node_masks;

  if (fast) {
    const auto& succ = bm.succ_masks();
    std::unordered_set<std::uint64_t> seen = {0};
    std::deque<std::uint64_t> queue = {0};
    while (!queue.empty()) {
      std::uint64_t x = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < dim; ++b) {
        if (x >> b & 1) continue;
        std::uint64_t c = mask_closure(succ, x | std::uint64_t{1} << b);
        if (seen.insert(c).second) queue.push_back(c);
      }
    }
    for (std::uint64_t m : seen) {
      node_bases.push_back(mask_basis(f, dim, m));
      node_masks.push_back(m);
    }
    lat.fast_path_ = true;
  } else {
    std::uint64_t sweep = pow_saturating(f.modulus(), dim, opts.budget);
    if (sweep > opts.budget)
      throw BudgetExceeded("submodule sweep needs p^dim = " + std::to_string(f.modulus()) + "^" +
                           std::to_string(dim) + " vectors, over the budget of " +
                           std::to_string(opts.budget));

    // Cyclic submodules: closures of single vectors (scale-normalized).
    // closure(N + v) = N + closure(<v>), so these generate all BFS steps.
    std::vector<Matrix> acts = closure_actions(bm);
    auto sweep_range = [&](std::uint64_t lo, std::uint64_t hi,
                           std::vector<std::pair<std::string, Matrix>>& out) {
      for (std::uint64_t code = lo; code < hi; ++code) {
        Vec v(dim);
        std::uint64_t x = code;
        for (std::size_t i = 0; i < dim; ++i) {
          v[i] = static_cast<Scalar>(x % f.modulus());
          x /= f.modulus();
        }
        // normalize: leading coordinate 1 (drops zero and scalar multiples)
        std::size_t lead = 0;
        while (lead < dim && v[lead] == 0) ++lead;
        if (lead == dim || v[lead] != 1) continue;
        Matrix c = closed_span(acts, Matrix::from_rows(f, {v}, dim));
        out.emplace_back(c.key(), std::move(c));
      }
    };
    std::vector<std::pair<std::string, Matrix>> found;
    unsigned workers = std::max(1u, opts.workers);
    if (workers == 1 || sweep < 1024) {
      sweep_range(0, sweep, found);
    } else {
      std::vector<std::vector<std::pair<std::string, Matrix>>> parts(workers);
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
          sweep_range(sweep * w / workers, sweep * (w + 1) / workers, parts[w]);
        });
      for (auto& t : threads) t.join();
      for (auto& p : parts)
        for (auto& e : p) found.push_back(std::move(e));
    }
    std::vector<Matrix> cyclics;
    std::vector<std::string> cyclic_keys;
    {
      std::unordered_set<std::string> seen;
      for (auto& [key, mat] : found)
        if (seen.insert(key).second) {
          cyclic_keys.push_back(key);
          cyclics.push_back(std::move(mat));
        }
    }
    lat.cyclic_keys_ = std::move(cyclic_keys);

    std::unordered_map<std::string, Matrix> visited;
    std::deque<const Matrix*> queue;
    Matrix zero(f, 0, dim);
    queue.push_back(&visited.emplace(zero.key(), zero).first->second);
    while (!queue.empty()) {
      const Matrix& n = *queue.front();
      queue.pop_front();
      for (const Matrix& c : cyclics) {
        if (subspace_leq(c, n)) continue;
        Matrix child = subspace_sum(n, c);
        auto [it, inserted] = visited.emplace(child.key(), std::move(child));
        if (inserted) queue.push_back(&it->second);
      }
    }
    for (auto& [key, mat] : visited) node_bases.push_back(std::move(mat));
    node_masks.assign(node_bases.size(), 0);
  }

  // deterministic node order: (dim, canonical basis bytes)
  std::vector<std::size_t> order(node_bases.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::string> keys(node_bases.size());
  for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = node_bases[i].key();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (node_bases[a].rows() != node_bases[b].rows())
      return node_bases[a].rows() < node_bases[b].rows();
    return keys[a] < keys[b];
  });
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::size_t i = order[pos];
    lat.nodes_.push_back({std::move(node_bases[i])});
    if (lat.fast_path_) lat.masks_.push_back(node_masks[i]);
    lat.index_.emplace(keys[i], pos);
  }
  lat.bottom_ = 0;  // unique node of dim 0 sorts first
  lat.top_ = lat.nodes_.size() - 1;

  // atoms = minimal nonzero nodes; every one is a cyclic submodule, so it
  // suffices to take minimal elements among single-generator closures
  if (lat.fast_path_) {
    const auto& succ = bm.succ_masks();
    std::vector<std::uint64_t> singles;
    for (std::size_t b = 0; b < dim; ++b) {
      std::uint64_t c = mask_closure(succ, std::uint64_t{1} << b);
      if (std::find(singles.begin(), singles.end(), c) == singles.end()) singles.push_back(c);
    }
    for (std::uint64_t c : singles) {
      bool minimal = true;
      for (std::uint64_t o : singles)
        if (o != c && (o & ~c) == 0) minimal = false;
      if (minimal) lat.atoms_.push_back(lat.index_of(mask_basis(f, dim, c)));
    }
    for (std::uint64_t c : singles) lat.cyclic_.push_back(lat.index_of(mask_basis(f, dim, c)));
  } else {
    std::vector<std::size_t> cyc;
    for (const std::string& key : lat.cyclic_keys_) cyc.push_back(lat.index_.at(key));
    lat.cyclic_ = cyc;
    for (std::size_t c : cyc) {
      bool minimal = true;
      for (std::size_t o : cyc)
        if (o != c && lat.leq(o, c)) minimal = false;
      if (minimal) lat.atoms_.push_back(c);
    }
  }
  std::sort(lat.atoms_.begin(), lat.atoms_.end());
  std::sort(lat.cyclic_.begin(), lat.cyclic_.end());
  return lat;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const SubmoduleLattice& lat) {
  const ExtBimodule& bm = lat.bimodule();
  const std::size_t dim = bm.dim();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // covers of N sit among the one-step extensions closure(N + single
  // generator): a cover contains such an extension and equals it by
  // minimality; so take the minimal extensions
  if (lat.used_fast_path()) {
    const auto& succ = bm.succ_masks();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      std::uint64_t x = lat.masks()[i];
      std::vector<std::uint64_t> cands;
      for (std::size_t b = 0; b < dim; ++b) {
        if (x >> b & 1) continue;
        std::uint64_t c = mask_closure(succ, x | std::uint64_t{1} << b);
        if (std::find(cands.begin(), cands.end(), c) == cands.end()) cands.push_back(c);
      }
      for (std::uint64_t c : cands) {
        bool minimal = true;
        for (std::uint64_t o : cands)
          if (o != c && (o & ~c) == 0) minimal = false;
        if (minimal)
          edges.emplace_back(i, lat.index_of(mask_basis(bm.field(), dim, c)));
      }
    }
  } else {
    for (std::size_t i = 0; i < lat.size(); ++i) {
      std::vector<std::size_t> cands;
      for (std::size_t c : lat.cyclic_indices()) {
        if (lat.leq(c, i)) continue;
        std::size_t child = lat.join_index(i, c);
        if (std::find(cands.begin(), cands.end(), child) == cands.end()) cands.push_back(child);
      }
      for (std::size_t c : cands) {
        bool minimal = true;
        for (std::size_t o : cands)
          if (o != c && lat.leq(o, c)) minimal = false;
        if (minimal) edges.emplace_back(i, c);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

LatticeTables lattice_tables(const SubmoduleLattice& lat) {
  const std::size_t n = lat.size();
  if (n > 4096)
    throw std::invalid_argument("lattice too large for explicit meet/join tables (" +
                                std::to_string(n) + " nodes)");
  LatticeTables t;
  t.n = n;
  t.meet.resize(n * n);
  t.join.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::size_t m, v;
      if (lat.used_fast_path()) {
        m = lat.index_of(mask_basis(lat.bimodule().field(), lat.bimodule().dim(),
                                    lat.masks()[i] & lat.masks()[j]));
        v = lat.index_of(mask_basis(lat.bimodule().field(), lat.bimodule().dim(),
                                    lat.masks()[i] | lat.masks()[j]));
      } else {
        m = lat.meet_index(i, j);
        v = lat.join_index(i, j);
      }
      t.meet[i * n + j] = t.meet[j * n + i] = m;
      t.join[i * n + j] = t.join[j * n + i] = v;
    }
  return t;
}

std::optional<std::array<std::size_t, 3>> modularity_violation(const LatticeTables& t) {
  for (std::size_t r = 0; r < t.n; ++r)
    for (std::size_t s = 0; s < t.n; ++s) {
      if (!t.leq(r, s)) continue;
      for (std::size_t x = 0; x < t.n; ++x)
        if (t.join_of(r, t.meet_of(s, x)) != t.meet_of(s, t.join_of(r, x)))
          return std::array<std::size_t, 3>{r, s, x};
    }
  return std::nullopt;
}

bool is_modular(const SubmoduleLattice& lat) {
  return !modularity_violation(lattice_tables(lat)).has_value();
}

}  // namespace wexlat
