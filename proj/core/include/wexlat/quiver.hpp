#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wexlat/field.hpp"

namespace wexlat {

struct Arrow {
  int id;      // contiguous from 0
  int source;  // vertices 1..n
  int target;
};

/// Finite acyclic quiver with vertices 1..n.
class Quiver {
 public:
  Quiver(int num_vertices, std::vector<Arrow> arrows);

  int num_vertices() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<int>& topological_order() const { return topo_; }

  bool operator==(const Quiver& o) const { return n_ == o.n_ && same_arrows(o); }

 private:
  bool same_arrows(const Quiver& o) const;
  int n_;
  std::vector<Arrow> arrows_;
  std::vector<int> topo_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// A representation of a quiver over F_p: one vector space dimension per
/// vertex and one matrix per arrow, of shape dim(target) x dim(source).
struct Representation {
  QuiverPtr quiver;
  std::vector<std::size_t> dims;  // indexed by vertex - 1
  std::vector<Matrix> mats;       // indexed by arrow id

  const PrimeField& field() const { return mats.empty() ? default_field_ : mats[0].field(); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  void check_shapes() const;  // throws when matrix shapes disagree with dims

  static Representation zero(QuiverPtr q, PrimeField f);

 private:
  inline static const PrimeField default_field_{2};
};

Representation zero_representation(QuiverPtr q, PrimeField f);

struct RepMorphism {
  Representation source, target;
  std::vector<Matrix> comps;  // per vertex, dim target(v) x dim source(v)

  void check_intertwining() const;  // throws when comps fail to commute with arrows
};

RepMorphism identity_morphism(const Representation& m);
RepMorphism zero_morphism(const Representation& m, const Representation& n);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
RepMorphism morphism_sum(const RepMorphism& a, const RepMorphism& b);
RepMorphism morphism_scaled(const RepMorphism& a, Scalar s);

bool is_injective(const RepMorphism& f);
bool is_surjective(const RepMorphism& f);
bool is_isomorphism(const RepMorphism& f);

/// Basis of Hom(source, target) in flattened coordinates (vertexwise
/// row-major entries of the component matrices, concatenated in vertex order).
class HomSpace {
 public:
  HomSpace(Representation source, Representation target, Matrix flat_basis);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& flat_basis() const { return basis_; }

  RepMorphism morphism(std::size_t i) const;        // i-th basis morphism
  RepMorphism from_coords(const Vec& coords) const;
  Vec to_coords(const RepMorphism& f) const;        // throws if f not in span

 private:
  Representation source_, target_;
  Matrix basis_;  // rows = basis vectors
};

Vec flatten_morphism(const RepMorphism& f);
RepMorphism unflatten_morphism(const Representation& source, const Representation& target,
                               const Vec& flat);

HomSpace hom_space(const Representation& m, const Representation& n);

/// dim End = 1 and no nontrivial idempotent endomorphism.
bool is_brick(const Representation& m);

struct Biproduct {
  Representation sum;
  std::vector<RepMorphism> injections;
  std::vector<RepMorphism> projections;
};

Biproduct direct_sum(std::span<const Representation> parts);
Biproduct direct_sum(const Representation& m, const Representation& n);

/// Subrepresentation generated by the given vertexwise row-spans, closed
/// under the arrow maps; `incl` is the inclusion into the ambient.
struct SubRep {
  Representation sub;
  RepMorphism incl;
};
SubRep subrepresentation(const Representation& ambient, const std::vector<Matrix>& vertex_spans);

/// Quotient of the ambient by an arrow-invariant vertexwise subspace.
/// Coordinates on the quotient are the non-pivot coordinates of the
/// subspace RREF; `induced` pushes a morphism vanishing on the subspace
/// down to the quotient.
struct QuotRep {
  Representation quot;
  RepMorphism proj;
  std::vector<std::vector<std::size_t>> section_cols;  // per vertex, complement coords

  RepMorphism induced(const RepMorphism& f) const;  // f : ambient -> Z, f|_sub = 0
};
QuotRep quotient(const Representation& ambient, const std::vector<Matrix>& invariant_subspace);

SubRep kernel_subrep(const RepMorphism& f);
SubRep image_subrep(const RepMorphism& f);
QuotRep cokernel(const RepMorphism& f);

/// The n(n+1)/2 interval representations of a type-A_n quiver. Character k
/// of `orientation` gives the direction of the arrow between vertices k+1
/// and k+2 ('R' means k+1 -> k+2). Order: lexicographic by (i, j).
std::vector<Representation> type_a_category(int n, const std::string& orientation, PrimeField f,
                                            QuiverPtr* quiver_out = nullptr);

}  // namespace wexlat
