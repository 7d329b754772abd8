#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wexlat/homalg.hpp"

namespace wexlat {

/// A basis morphism X_src -> X_tgt of End(X), X = direct sum of the
/// indecomposables. `local` indexes into hom_space(X_src, X_tgt).
struct AlgebraBasisElt {
  std::size_t src, tgt, local;
};

/// End(X) for X the sum of pairwise non-isomorphic bricks, with hom-block
/// basis, structure constants, orthogonal idempotents and the radical
/// (= the off-diagonal blocks, since every End(X_i) is F_p).
class AuslanderAlgebra {
 public:
  explicit AuslanderAlgebra(std::vector<Representation> indecs);

  std::size_t num_indecs() const { return indecs_.size(); }
  const std::vector<Representation>& indecs() const { return indecs_; }
  const HomSpace& hom(std::size_t i, std::size_t j) const { return hom_[i * indecs_.size() + j]; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<AlgebraBasisElt>& basis() const { return basis_; }
  RepMorphism morphism_of(std::size_t k) const;

  /// Structure constants of basis_k . basis_l (composition, k after l);
  /// zero vector when not composable.
  const Vec& mult(std::size_t k, std::size_t l) const { return mult_[k * basis_.size() + l]; }

  /// Coordinates of id_{X_i} inside its diagonal block's hom basis.
  const Vec& idempotent_coords(std::size_t i) const { return idem_[i]; }

  const std::vector<std::size_t>& radical_indices() const { return radical_; }

  /// Smallest k with radical^k = 0.
  std::size_t radical_nilpotency_degree() const;

  const PrimeField& field() const { return indecs_[0].field(); }

 private:
  std::vector<Representation> indecs_;
  std::vector<HomSpace> hom_;
  std::vector<AlgebraBasisElt> basis_;
  std::vector<Vec> mult_;
  std::vector<Vec> idem_;
  std::vector<std::size_t> radical_;
};

AuslanderAlgebra build_algebra(std::vector<Representation> indecs);

struct GlobalCoord {
  std::size_t c, a, local;  // Ext^1(X_c, X_a), basis vector `local`
};

/// B = Ext^1(X, X) with Peirce-block structure over the Auslander algebra.
/// Global coordinates run over blocks sorted by (C index, A index), then
/// local Ext basis order. Left action = pushout, right action = pullback.
class ExtBimodule {
 public:
  explicit ExtBimodule(AuslanderAlgebra alg);

  const AuslanderAlgebra& algebra() const { return alg_; }
  const PrimeField& field() const { return alg_.field(); }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<GlobalCoord>& coords() const { return coords_; }
  std::size_t coord_index(std::size_t c, std::size_t a, std::size_t local) const;

  const ExtSpace& block(std::size_t c, std::size_t a) const {
    return blocks_[c * alg_.num_indecs() + a];
  }

  const Matrix& left_action(std::size_t k) const { return left_[k]; }
  const Matrix& right_action(std::size_t k) const { return right_[k]; }

  /// Projection onto the blocks selected by the idempotent e_i acting on
  /// the left (a-side) resp. right (c-side).
  Matrix idempotent_left(std::size_t i) const;
  Matrix idempotent_right(std::size_t i) const;

  /// All radical action matrices stacked; the socle is its kernel.
  const Matrix& radical_stack() const { return radical_stack_; }

  /// soc(N) = { x in N : rad x = 0 and x rad = 0 }, canonical RREF.
  Matrix socle(const Matrix& n_rref) const;
  Matrix socle_of_whole() const;

  /// Whole space as a canonical subspace basis (identity matrix).
  Matrix full_subspace() const;

  /// True when every action matrix sends basis vectors to scalar
  /// multiples of basis vectors; submodules are then coordinate subsets.
  bool monomial_actions() const { return monomial_; }
  /// For monomial actions with dim <= 64: bit mask of coordinates hit by
  /// radical actions applied to each basis vector.
  const std::vector<std::uint64_t>& succ_masks() const { return succ_; }

 private:
  AuslanderAlgebra alg_;
  std::vector<ExtSpace> blocks_;
  std::vector<GlobalCoord> coords_;
  std::vector<std::size_t> coord_start_;  // per block, first global index
  std::vector<Matrix> left_, right_;
  Matrix radical_stack_;
  bool monomial_ = false;
  std::vector<std::uint64_t> succ_;
};

ExtBimodule build_ext_bimodule(AuslanderAlgebra alg);

}  // namespace wexlat
