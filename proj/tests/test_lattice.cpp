#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "wexlat/lattice.hpp"

using namespace wexlat;

namespace {

// Global coordinates of the A_3 linear bimodule: beta, eps, gamma, delta,
// alpha (blocks sorted by (C idx, A idx); see test_auslander.cpp).
enum Coord : std::size_t { BETA = 0, EPS = 1, GAMMA = 2, DELTA = 3, ALPHA = 4 };

Vec unit(std::size_t dim, std::size_t i) {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

ExtBimodule a3_bimodule(Scalar p = 2) {
  return build_ext_bimodule(build_algebra(type_a_category(3, "RR", PrimeField(p))));
}

Matrix span_of(const PrimeField& f, std::size_t dim, std::vector<std::size_t> coords) {
  std::vector<Vec> rows;
  for (std::size_t c : coords) rows.push_back(unit(dim, c));
  return row_space(Matrix::from_rows(f, rows, dim));
}

std::multiset<std::size_t> dim_multiset(const SubmoduleLattice& lat) {
  std::multiset<std::size_t> out;
  for (const auto& n : lat.nodes()) out.insert(n.dim());
  return out;
}

}  // namespace

TEST_CASE("generated submodules in A_3") {
  auto bm = a3_bimodule();
  CHECK(generated_submodule(bm, {}).dim() == 0);
  SubBimodule d = generated_submodule(bm, {unit(5, DELTA)});
  CHECK(d.dim() == 3);
  CHECK(d.basis == span_of(bm.field(), 5, {GAMMA, DELTA, ALPHA}));
  SubBimodule a = generated_submodule(bm, {unit(5, ALPHA)});
  CHECK(a.dim() == 1);
  CHECK(a.basis.row(0) == unit(5, ALPHA));
  CHECK(is_action_closed(bm, d.basis));
  CHECK_FALSE(is_action_closed(bm, row_space(Matrix::from_rows(bm.field(), {unit(5, DELTA)}, 5))));
}

TEST_CASE("A_3 lattice has 13 nodes and 20 cover edges") {
  auto bm = a3_bimodule();
  SubmoduleLattice lat = enumerate_submodules(bm);
  CHECK(lat.used_fast_path());
  REQUIRE(lat.size() == 13);
  CHECK(lat.nodes()[lat.bottom()].dim() == 0);
  CHECK(lat.nodes()[lat.top()].dim() == 5);
  CHECK(hasse(lat).size() == 20);
  for (const auto& n : lat.nodes()) CHECK(is_action_closed(bm, n.basis));

  SUBCASE("atoms are the three socle lines") {
    REQUIRE(lat.atom_indices().size() == 3);
    std::vector<Matrix> expected = {span_of(bm.field(), 5, {BETA}), span_of(bm.field(), 5, {GAMMA}),
                                    span_of(bm.field(), 5, {ALPHA})};
    for (const Matrix& m : expected) {
      std::size_t i = lat.index_of(m);
      CHECK(std::find(lat.atom_indices().begin(), lat.atom_indices().end(), i) !=
            lat.atom_indices().end());
    }
  }
}

TEST_CASE("general enumerator agrees with the fast path") {
  for (Scalar p : {2u, 3u}) {
    auto bm = a3_bimodule(p);
    SubmoduleLattice fast = enumerate_submodules(bm);
    SubmoduleLattice gen = enumerate_submodules(bm, {.force_general = true});
    CHECK_FALSE(gen.used_fast_path());
    REQUIRE(gen.size() == fast.size());
    for (std::size_t i = 0; i < gen.size(); ++i)
      CHECK(gen.nodes()[i].basis == fast.nodes()[i].basis);
    CHECK(hasse(gen) == hasse(fast));
    CHECK(gen.atom_indices() == fast.atom_indices());
  }
}

TEST_CASE("node and edge counts are field-stable") {
  for (Scalar p : {2u, 3u, 5u}) {
    SubmoduleLattice lat = enumerate_submodules(a3_bimodule(p), {.force_general = true});
    CHECK(lat.size() == 13);
    CHECK(hasse(lat).size() == 20);
    CHECK(dim_multiset(lat) == dim_multiset(enumerate_submodules(a3_bimodule(2))));
  }
}

TEST_CASE("small cases") {
  SUBCASE("A_2 gives a 2-chain") {
    auto bm = build_ext_bimodule(build_algebra(type_a_category(2, "R", PrimeField(2))));
    REQUIRE(bm.dim() == 1);
    SubmoduleLattice lat = enumerate_submodules(bm);
    CHECK(lat.size() == 2);
    CHECK(hasse(lat).size() == 1);
    CHECK(lat.atom_indices() == std::vector<std::size_t>{1});
    CHECK(is_modular(lat));
  }
  SUBCASE("zero bimodule") {
    auto bm = build_ext_bimodule(build_algebra(type_a_category(1, "", PrimeField(3))));
    REQUIRE(bm.dim() == 0);
    SubmoduleLattice lat = enumerate_submodules(bm);
    CHECK(lat.size() == 1);
    CHECK(lat.bottom() == lat.top());
    CHECK(lat.atom_indices().empty());
    CHECK(hasse(lat).empty());
  }
}

TEST_CASE("meet and join") {
  auto bm = a3_bimodule();
  SubmoduleLattice lat = enumerate_submodules(bm);
  const PrimeField& f = bm.field();
  std::size_t alpha = lat.index_of(span_of(f, 5, {ALPHA}));
  std::size_t gamma = lat.index_of(span_of(f, 5, {GAMMA}));
  std::size_t agd = lat.index_of(span_of(f, 5, {ALPHA, GAMMA, DELTA}));
  std::size_t soc = lat.index_of(span_of(f, 5, {ALPHA, BETA, GAMMA}));
  std::size_t ag = lat.index_of(span_of(f, 5, {ALPHA, GAMMA}));
  CHECK(lat.join_index(alpha, gamma) == ag);
  CHECK(lat.meet_index(agd, soc) == ag);

  SUBCASE("lattice axioms hold on all pairs") {
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j) {
        std::size_t m = lat.meet_index(i, j), v = lat.join_index(i, j);
        CHECK(m == lat.meet_index(j, i));
        CHECK(v == lat.join_index(j, i));
        // absorption
        CHECK(lat.join_index(i, m) == i);
        CHECK(lat.meet_index(i, v) == i);
        // meet/join agree with the order
        CHECK(lat.leq(m, i));
        CHECK(lat.leq(i, v));
        // join is the least upper bound
        for (std::size_t k = 0; k < lat.size(); ++k)
          if (lat.leq(i, k) && lat.leq(j, k)) CHECK(lat.leq(v, k));
      }
    CHECK(lat.meet_index(lat.top(), alpha) == alpha);
    CHECK(lat.join_index(lat.bottom(), alpha) == alpha);
  }

  SUBCASE("joins and meets stay action-closed") {
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j) {
        CHECK(is_action_closed(bm, join(lat.nodes()[i], lat.nodes()[j]).basis));
        CHECK(is_action_closed(bm, meet(lat.nodes()[i], lat.nodes()[j]).basis));
      }
  }
}

TEST_CASE("the A_3 lattice is modular") {
  CHECK(is_modular(enumerate_submodules(a3_bimodule())));
}

TEST_CASE("pentagon fails the modularity check with a witness") {
  // N_5: bottom 0, top 4, chain 0 < 1 < 3 < 4, extra element 2 with
  // 0 < 2 < 4 incomparable to 1 and 3
  LatticeTables t;
  t.n = 5;
  t.meet.assign(25, 0);
  t.join.assign(25, 4);
  auto set = [&](std::size_t i, std::size_t j, std::size_t m, std::size_t v) {
    t.meet[i * 5 + j] = t.meet[j * 5 + i] = m;
    t.join[i * 5 + j] = t.join[j * 5 + i] = v;
  };
  for (std::size_t i = 0; i < 5; ++i) set(i, i, i, i);
  for (std::size_t i = 0; i < 5; ++i) {
    set(0, i, 0, i);
    set(4, i, i, 4);
  }
  set(1, 3, 1, 3);
  set(1, 2, 0, 4);
  set(2, 3, 0, 4);
  auto w = modularity_violation(t);
  REQUIRE(w.has_value());
  auto [r, s, x] = *w;
  CHECK(t.leq(r, s));
  CHECK(t.join_of(r, t.meet_of(s, x)) != t.meet_of(s, t.join_of(r, x)));
}

TEST_CASE("A_4 linear lattice") {
  auto bm = build_ext_bimodule(build_algebra(type_a_category(4, "RRR", PrimeField(2))));
  REQUIRE(bm.dim() == 15);
  SubmoduleLattice lat = enumerate_submodules(bm);
  CHECK(lat.used_fast_path());
  CHECK(lat.size() == 442);
  CHECK(lat.atom_indices().size() == 6);
  CHECK(hasse(lat).size() == 1475);
  for (const auto& n : lat.nodes()) CHECK(is_action_closed(bm, n.basis));
}

TEST_CASE("budget guard refuses oversized sweeps") {
  auto bm = a3_bimodule(5);
  CHECK_THROWS_AS(enumerate_submodules(bm, {.budget = 100, .force_general = true}),
                  BudgetExceeded);
  CHECK_NOTHROW(enumerate_submodules(bm, {.budget = 100}));  // fast path needs no sweep
}
