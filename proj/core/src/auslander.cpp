#include "wexlat/auslander.hpp"

#include <stdexcept>
#include <string>

namespace wexlat {

AuslanderAlgebra::AuslanderAlgebra(std::vector<Representation> indecs)
    : indecs_(std::move(indecs)) {
  if (indecs_.empty()) throw std::invalid_argument("algebra needs at least one indecomposable");
  const std::size_t n = indecs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_brick(indecs_[i]))
      throw std::invalid_argument("indecomposable " + std::to_string(i) +
                                  " is not a brick (dim End != 1)");
  }

  hom_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom_.push_back(hom_space(indecs_[i], indecs_[j]));

  // Isomorphic duplicates: for bricks, X_i = X_j iff some pair of hom basis
  // elements composes to a nonzero endomorphism (any nonzero endomorphism of
  // a brick is invertible).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const HomSpace& fwd = hom(i, j);
      const HomSpace& bwd = hom(j, i);
      for (std::size_t a = 0; a < fwd.dim(); ++a)
        for (std::size_t b = 0; b < bwd.dim(); ++b) {
          RepMorphism comp = compose(bwd.morphism(b), fwd.morphism(a));
          bool zero = true;
          for (const auto& m : comp.comps) zero = zero && m.is_zero();
          if (!zero)
            throw std::invalid_argument("indecomposables " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are isomorphic");
        }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < hom(i, j).dim(); ++l) basis_.push_back({i, j, l});

  const std::size_t d = basis_.size();
  mult_.assign(d * d, Vec(d, 0));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      if (basis_[l].tgt != basis_[k].src) continue;  // not composable, product 0
      RepMorphism comp = compose(morphism_of(k), morphism_of(l));
      Vec local = hom(basis_[l].src, basis_[k].tgt).to_coords(comp);
      Vec& out = mult_[k * d + l];
      for (std::size_t m = 0; m < d; ++m)
        if (basis_[m].src == basis_[l].src && basis_[m].tgt == basis_[k].tgt)
          out[m] = local[basis_[m].local];
    }

  idem_.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    idem_.push_back(hom(i, i).to_coords(identity_morphism(indecs_[i])));

  for (std::size_t k = 0; k < d; ++k)
    if (basis_[k].src != basis_[k].tgt) radical_.push_back(k);
}

RepMorphism AuslanderAlgebra::morphism_of(std::size_t k) const {
  const AlgebraBasisElt& e = basis_[k];
  return hom(e.src, e.tgt).morphism(e.local);
}

std::size_t AuslanderAlgebra::radical_nilpotency_degree() const {
  const std::size_t d = basis_.size();
  const PrimeField& f = field();
  Matrix power(f, radical_.size(), d);
  for (std::size_t r = 0; r < radical_.size(); ++r) power.at(r, radical_[r]) = 1;
  power = row_space(power);
  std::size_t deg = 1;
  while (power.rows() > 0) {
    // rad^{deg+1} = span of (rad^deg basis) * (radical generators)
    std::vector<Vec> products;
    for (std::size_t r = 0; r < power.rows(); ++r)
      for (std::size_t g : radical_) {
        Vec prod(d, 0);
        for (std::size_t k = 0; k < d; ++k) {
          if (power.at(r, k) == 0) continue;
          const Vec& m = mult(k, g);
          for (std::size_t x = 0; x < d; ++x)
            prod[x] = f.add(prod[x], f.mul(power.at(r, k), m[x]));
        }
        products.push_back(std::move(prod));
      }
    power = row_space(Matrix::from_rows(f, products, d));
    ++deg;
    if (deg > d + 1) throw std::logic_error("radical is not nilpotent");
  }
  return deg;
}

AuslanderAlgebra build_algebra(std::vector<Representation> indecs) {
  return AuslanderAlgebra(std::move(indecs));
}

ExtBimodule::ExtBimodule(AuslanderAlgebra alg) : alg_(std::move(alg)) {
  const std::size_t n = alg_.num_indecs();
  const PrimeField& f = alg_.field();

  // one shared presentation per C keeps pushout/pullback bases compatible
  std::vector<std::shared_ptr<const ProjPresentation>> pres;
  pres.reserve(n);
  for (std::size_t c = 0; c < n; ++c)
    pres.push_back(std::make_shared<const ProjPresentation>(presentation(alg_.indecs()[c])));

  blocks_.reserve(n * n);
  coord_start_.reserve(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a) {
      blocks_.emplace_back(pres[c], alg_.indecs()[a]);
      coord_start_.push_back(coords_.size());
      for (std::size_t l = 0; l < blocks_.back().dim(); ++l) coords_.push_back({c, a, l});
    }

  const std::size_t dim = coords_.size();
  left_.reserve(alg_.dim());
  right_.reserve(alg_.dim());
  for (std::size_t k = 0; k < alg_.dim(); ++k) {
    const AlgebraBasisElt& e = alg_.basis()[k];
    RepMorphism g = alg_.morphism_of(k);
    // g : X_i -> X_j acts on the left by pushout Ext(c, i) -> Ext(c, j)
    Matrix L(f, dim, dim);
    for (std::size_t c = 0; c < n; ++c) {
      const ExtSpace& src = block(c, e.src);
      const ExtSpace& dst = block(c, e.tgt);
      for (std::size_t l = 0; l < src.dim(); ++l) {
        Vec unit(src.dim(), 0);
        unit[l] = 1;
        Vec out = pushout_action(src, dst, g, unit);
        std::size_t col = coord_start_[c * n + e.src] + l;
        std::size_t row0 = coord_start_[c * n + e.tgt];
        for (std::size_t m = 0; m < out.size(); ++m) L.at(row0 + m, col) = out[m];
      }
    }
    left_.push_back(std::move(L));
    // and on the right by pullback Ext(j, a) -> Ext(i, a)
    Matrix R(f, dim, dim);
    for (std::size_t a = 0; a < n; ++a) {
      const ExtSpace& src = block(e.tgt, a);
      const ExtSpace& dst = block(e.src, a);
      for (std::size_t l = 0; l < src.dim(); ++l) {
        Vec unit(src.dim(), 0);
        unit[l] = 1;
        Vec out = pullback_action(src, dst, g, unit);
        std::size_t col = coord_start_[e.tgt * n + a] + l;
        std::size_t row0 = coord_start_[e.src * n + a];
        for (std::size_t m = 0; m < out.size(); ++m) R.at(row0 + m, col) = out[m];
      }
    }
    right_.push_back(std::move(R));
  }

  const auto& rad = alg_.radical_indices();
  radical_stack_ = Matrix(f, 0, dim);
  for (std::size_t k : rad) {
    radical_stack_ = Matrix::vstack(radical_stack_, left_[k]);
    radical_stack_ = Matrix::vstack(radical_stack_, right_[k]);
  }

  monomial_ = true;
  for (const auto& acts : {std::cref(left_), std::cref(right_)})
    for (const Matrix& m : acts.get())
      for (std::size_t col = 0; col < m.cols() && monomial_; ++col) {
        std::size_t nonzero = 0;
        for (std::size_t row = 0; row < m.rows(); ++row)
          if (m.at(row, col) != 0) ++nonzero;
        if (nonzero > 1) monomial_ = false;
      }
  if (monomial_ && dim <= 64) {
    succ_.assign(dim, 0);
    for (std::size_t k : rad)
      for (const Matrix* m : {&left_[k], &right_[k]})
        for (std::size_t col = 0; col < dim; ++col)
          for (std::size_t row = 0; row < dim; ++row)
            if (m->at(row, col) != 0) succ_[col] |= std::uint64_t{1} << row;
  }
}

std::size_t ExtBimodule::coord_index(std::size_t c, std::size_t a, std::size_t local) const {
  return coord_start_[c * alg_.num_indecs() + a] + local;
}

Matrix ExtBimodule::idempotent_left(std::size_t i) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    if (coords_[k].a == i) m.at(k, k) = 1;
  return m;
}

Matrix ExtBimodule::idempotent_right(std::size_t i) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    if (coords_[k].c == i) m.at(k, k) = 1;
  return m;
}

Matrix ExtBimodule::socle(const Matrix& n_rref) const {
  Matrix ann = row_space(kernel_basis(radical_stack_));
  return subspace_intersection(ann, n_rref);
}

Matrix ExtBimodule::socle_of_whole() const { return row_space(kernel_basis(radical_stack_)); }

Matrix ExtBimodule::full_subspace() const { return Matrix::identity(field(), dim()); }

ExtBimodule build_ext_bimodule(AuslanderAlgebra alg) { return ExtBimodule(std::move(alg)); }

}  // namespace wexlat
