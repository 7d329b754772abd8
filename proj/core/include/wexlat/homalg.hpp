#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wexlat/quiver.hpp"

namespace wexlat {

/// Standard projective presentation 0 -> P1 -> P0 -> M -> 0 over the path
/// algebra (P0 collects one P(v) per basis vector of M(v), P1 one P(target a)
/// per arrow a and basis vector of M(source a)).
struct ProjPresentation {
  Representation M, P0, P1;
  RepMorphism incl;  // P1 -> P0
  RepMorphism proj;  // P0 -> M

  bool is_exact() const;
};

ProjPresentation presentation(const Representation& m);

struct ShortExactSeq {
  Representation A, B, C;
  RepMorphism i;  // A -> B
  RepMorphism d;  // B -> C

  bool is_exact() const;  // i injective, d surjective, d i = 0, dims add up
};

/// Ext^1(C, A) presented as coker(Hom(P0(C), A) -> Hom(P1(C), A)).
/// Quotient coordinates are the non-pivot coordinates of the ambient
/// Hom(P1, A) basis after reducing modulo the image; the chosen cocycle
/// representatives are the corresponding unit vectors, so each basis
/// class has leading coordinate 1.
class ExtSpace {
 public:
  ExtSpace(std::shared_ptr<const ProjPresentation> pres, Representation A);

  const Representation& C() const { return pres_->M; }
  const Representation& A() const { return A_; }
  const ProjPresentation& pres() const { return *pres_; }
  std::shared_ptr<const ProjPresentation> pres_ptr() const { return pres_; }
  const HomSpace& ambient() const { return hom_p1a_; }
  const Matrix& image_basis() const { return image_.mat; }

  std::size_t dim() const { return nonpivots_.size(); }

  /// ambient Hom(P1,A) coordinates -> quotient coordinates
  Vec reduce(Vec ambient_coords) const;
  /// quotient coordinates -> representative cocycle (ambient coordinates)
  Vec cocycle(const Vec& quotient_coords) const;
  RepMorphism cocycle_morphism(const Vec& quotient_coords) const;  // P1 -> A

  Vec class_of_cocycle(const RepMorphism& cocycle) const;

 private:
  std::shared_ptr<const ProjPresentation> pres_;
  Representation A_;
  HomSpace hom_p1a_;
  RrefResult image_;
  std::vector<std::size_t> nonpivots_;
};

ExtSpace ext_space(const Representation& C, const Representation& A);

/// Pushout along a : A -> A'. `src` and `dst` must share the presentation
/// of C (dst = ExtSpace(src.pres_ptr(), A')).
Vec pushout_action(const ExtSpace& src, const ExtSpace& dst, const RepMorphism& a,
                   const Vec& coords);

/// Pullback along c : C' -> C; lifts c to a chain map between the two
/// presentations. The result is independent of the chosen lift.
Vec pullback_action(const ExtSpace& src, const ExtSpace& dst, const RepMorphism& c,
                    const Vec& coords);

/// Explicit short exact sequence with the given class: the middle term is
/// the pushout of P1 -> P0 along the representing cocycle.
ShortExactSeq realize(const ExtSpace& es, const Vec& coords);

/// Connecting class of a short exact sequence with ends (es.C(), es.A()):
/// lift the presentation's projection through d and read off the cocycle.
Vec yoneda_class(const ExtSpace& es, const ShortExactSeq& s);

Vec baer_sum(const ExtSpace& es, const Vec& a, const Vec& b);

/// Independent route for the Baer sum: realize both classes, form the
/// direct-sum sequence, push along the codiagonal, pull along the diagonal.
Vec baer_sum_oracle(const ExtSpace& es, const Vec& a, const Vec& b);

/// Do the sequences differ by an isomorphism of middle terms commuting
/// with identical end maps? Decided by a linear solve.
bool sequences_isomorphic_fixed_ends(const ShortExactSeq& s1, const ShortExactSeq& s2);

/// Pushout of the sequence s along a : A -> A', built directly as the
/// cokernel of [i; -a] : A -> B + A'.
ShortExactSeq pushout_sequence(const ShortExactSeq& s, const RepMorphism& a);

}  // namespace wexlat
