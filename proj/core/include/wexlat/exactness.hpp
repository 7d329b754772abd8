#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wexlat/lattice.hpp"

namespace wexlat {

/// An internal consistency guarantee failed (e.g. a socle class without a
/// unique maximal element). Surfaced, never silently resolved.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClosednessVerdict {
  std::size_t node = 0;
  bool closed = false;
  std::size_t maximal_with_socle = 0;  // node index of the socle-class maximum
};

/// Closedness by socle grouping: nodes sharing a socle form a class with a
/// unique maximal element (throws StructuralError otherwise), and exactly
/// that element is closed.
std::vector<ClosednessVerdict> closed_flags(const SubmoduleLattice& lat);

/// soc(node i), canonical RREF over global coordinates.
Matrix node_socle(const SubmoduleLattice& lat, std::size_t i);

struct MiddleExactWitness {
  std::size_t x = 0;     // indecomposable the test failed at
  std::size_t c = 0, a = 0;  // Peirce block of the tested sequence class
  Vec local_class;       // class inside that block
  std::string position;  // "N(X,-) at middle term" or "N(-,X) at middle term"
};

/// Middle-exactness oracle for the subfunctor cut out by N. Realizes one
/// sequence per basis class of every nonzero Peirce block of N and tests
/// exactness of the induced N-sequences at the middle positions, for every
/// indecomposable X on both sides. Quantifier truncation: X ranges over
/// indecomposables (enough by additivity), sequences over block basis
/// classes of N only.
///
/// Holds caches keyed by sequence class, shared across nodes; reuse one
/// checker when sweeping a lattice.
class MiddleExactChecker {
 public:
  explicit MiddleExactChecker(const ExtBimodule& bm) : bm_(&bm) {}

  bool check(const Matrix& n_rref, MiddleExactWitness* witness = nullptr);

 private:
  struct SeqData;
  const SeqData& seq_data(std::size_t c, std::size_t a, const Vec& local_class);

  const ExtBimodule* bm_;
  std::map<std::string, std::shared_ptr<SeqData>> cache_;
};

bool middle_exact_check(const ExtBimodule& bm, const Matrix& n_rref,
                        MiddleExactWitness* witness = nullptr);

struct CompositionWitness {
  std::size_t c1 = 0, a = 0;  // block of the first inflation's class
  Vec first_class;            // local coordinates in that block
  std::size_t c2 = 0;         // cokernel indecomposable of the second inflation
  Vec second_class;           // class of the second inflation in Ext(X_c2, B)
  std::size_t probe = 0;      // indecomposable whose pullback leaves N
  Vec escaped_class;          // pullback class in block (probe, a), not in N
};

/// Bounded search for a failure of axiom E1: compose two N-inflations and
/// test whether the induced class on the composite stays in N. First
/// inflations come from basis classes of N's blocks, second inflations from
/// the induced subfunctor N(C', B) at the first middle term (depth 2).
std::optional<CompositionWitness> composition_counterexample(const ExtBimodule& bm,
                                                             const Matrix& n_rref,
                                                             std::size_t pair_budget = 10000);

/// Join in the closed sublattice: intersection of all closed nodes
/// containing both. Throws when an input is not closed.
std::size_t closed_join_index(const SubmoduleLattice& lat,
                              const std::vector<ClosednessVerdict>& verdicts, std::size_t i,
                              std::size_t j);

/// |closed| = 2^(dim soc B) and the closed sublattice under (meet,
/// closed_join) is order-isomorphic to the powerset of the socle lines,
/// both ways.
bool boolean_check(const SubmoduleLattice& lat, const std::vector<ClosednessVerdict>& verdicts);

/// Spot-check of the cancellation axiom: when j i is an N-inflation
/// A >-> E and A >-> T is its corestriction to an intermediate
/// subrepresentation T, the induced class of A >-> T lies in N as well.
/// Samples random intermediates; true when no violation found.
bool obscure_axiom_spot_check(const ExtBimodule& bm, const Matrix& n_rref, std::uint32_t seed,
                              int samples_per_class = 5);

}  // namespace wexlat
