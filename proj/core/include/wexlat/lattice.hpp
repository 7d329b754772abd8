#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wexlat/auslander.hpp"

namespace wexlat {

/// Enumeration refused because the vector sweep would exceed the budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An action-closed subspace of B in canonical RREF over global coordinates.
struct SubBimodule {
  Matrix basis;

  std::size_t dim() const { return basis.rows(); }
};

/// Smallest action-closed subspace containing the given vectors.
SubBimodule generated_submodule(const ExtBimodule& bm, const std::vector<Vec>& vectors);

bool is_action_closed(const ExtBimodule& bm, const Matrix& basis_rref);

SubBimodule meet(const SubBimodule& a, const SubBimodule& b);
SubBimodule join(const SubBimodule& a, const SubBimodule& b);

struct EnumOptions {
  std::uint64_t budget = 10'000'000;  // refuse when p^dim exceeds this
  unsigned workers = 1;
  bool force_general = false;  // skip the monomial fast path
};

/// All sub-bimodules of B, sorted by (dim, canonical basis bytes).
/// When every action matrix is monomial and every Peirce block is at most
/// one-dimensional, submodules are exactly the action-closed coordinate
/// subsets and are enumerated as bit masks; otherwise a closure-BFS over
/// cyclic-submodule adjunctions runs, guarded by the budget.
class SubmoduleLattice {
 public:
  const ExtBimodule& bimodule() const { return *bm_; }
  const std::vector<SubBimodule>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  std::size_t index_of(const Matrix& basis_rref) const;  // throws when absent
  bool leq(std::size_t i, std::size_t j) const;
  std::size_t meet_index(std::size_t i, std::size_t j) const;
  std::size_t join_index(std::size_t i, std::size_t j) const;

  /// Nodes covering the bottom.
  const std::vector<std::size_t>& atom_indices() const { return atoms_; }

  bool used_fast_path() const { return fast_path_; }
  /// Coordinate masks per node (fast path only, empty otherwise).
  const std::vector<std::uint64_t>& masks() const { return masks_; }

  /// Distinct single-generator submodules, as node indices (general path;
  /// fast path derives them from succ masks on demand).
  const std::vector<std::size_t>& cyclic_indices() const { return cyclic_; }

  friend SubmoduleLattice enumerate_submodules(const ExtBimodule& bm, const EnumOptions& opts);

 private:
  const ExtBimodule* bm_ = nullptr;
  std::vector<SubBimodule> nodes_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> atoms_, cyclic_;
  std::vector<std::string> cyclic_keys_;  // general path, before node sort
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t bottom_ = 0, top_ = 0;
  bool fast_path_ = false;
};

SubmoduleLattice enumerate_submodules(const ExtBimodule& bm, const EnumOptions& opts = {});

/// Cover relations (i, j) with node i covered by node j, sorted.
std::vector<std::pair<std::size_t, std::size_t>> hasse(const SubmoduleLattice& lat);

/// Abstract finite lattice by meet/join tables; used for the modularity
/// check and for synthetic negative controls.
struct LatticeTables {
  std::size_t n = 0;
  std::vector<std::size_t> meet, join;  // n*n, row-major

  std::size_t meet_of(std::size_t i, std::size_t j) const { return meet[i * n + j]; }
  std::size_t join_of(std::size_t i, std::size_t j) const { return join[i * n + j]; }
  bool leq(std::size_t i, std::size_t j) const { return meet_of(i, j) == i; }
};

LatticeTables lattice_tables(const SubmoduleLattice& lat);

/// A triple (r, s, t) with r <= s but r v (s ^ t) != s ^ (r v t), or
/// nullopt when the lattice is modular. Exhaustive sweep.
std::optional<std::array<std::size_t, 3>> modularity_violation(const LatticeTables& t);

bool is_modular(const SubmoduleLattice& lat);

}  // namespace wexlat
