#include <doctest.h>

#include "weylkit/characters.hpp"

#include <random>

using namespace weylkit;

namespace {

Weight W(std::initializer_list<Int> c) {
  IVec v(Eigen::Index(c.size()));
  int i = 0;
  for (Int x : c) v[i++] = x;
  return Weight(v);
}

std::mt19937_64 rng(77013);

Weight random_dominant(const RootSystem& rs, Int hi) {
  IVec v(rs.rank);
  std::uniform_int_distribution<Int> dist(0, hi);
  for (int i = 0; i < rs.rank; ++i) v[i] = dist(rng);
  return Weight(v);
}

}  // namespace

TEST_CASE("freudenthal on two-end type A weights") {
  // lambda = a fw_1 + b fw_l, mu = lambda - (alpha_1 + ... + alpha_l) has
  // multiplicity l.
  for (int l = 2; l <= 4; ++l) {
    RootSystem rs = build_root_system(SimpleType::A, l);
    for (auto [a, b] : std::vector<std::pair<Int, Int>>{{1, 1}, {2, 3}}) {
      IVec c = IVec::Zero(l);
      c[0] = a;
      c[l - 1] = b;
      Weight lambda(c);
      IVec m = c;
      m[0] -= 1;
      m[l - 1] -= 1;
      FormalCharacter ch = freudenthal(rs, lambda);
      CHECK(ch.at(Weight(m)) == l);
      CHECK(ch.at(lambda) == 1);
    }
  }
}

TEST_CASE("freudenthal matches the A_3 triple-coefficient table entry") {
  RootSystem a3 = build_root_system(SimpleType::A, 3);
  for (auto [a, b, c] : std::vector<std::array<Int, 3>>{{1, 1, 1}, {2, 1, 3}}) {
    Weight lambda = W({a, b, c});
    // lambda - alpha_1 - alpha_2 - alpha_3
    Weight mu = W({a - 1, b, c - 1});
    CHECK(freudenthal(a3, lambda).at(mu) == 4);
  }
}

TEST_CASE("weyl_dim") {
  RootSystem d4 = build_root_system(SimpleType::D, 4);
  CHECK(weyl_dim(d4, Weight::zero(4)) == 1);
  CHECK(weyl_dim(d4, W({1, 0, 0, 0})) == 8);
  RootSystem b3 = build_root_system(SimpleType::B, 3);
  CHECK(weyl_dim(b3, W({0, 0, 1})) == 8);
  // spin module: exactly the eight weights (+-1/2, +-1/2, +-1/2)
  FormalCharacter spin = freudenthal(b3, W({0, 0, 1}));
  CHECK(spin.mult.size() == 1);
  CHECK(character_dimension(b3, spin) == 8);
}

TEST_CASE("weyl_dim equals orbit-weighted character dimension") {
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::A, 3}, {SimpleType::B, 3}, {SimpleType::C, 3}, {SimpleType::D, 4}}) {
    RootSystem rs = build_root_system(t, r);
    for (int trial = 0; trial < 5; ++trial) {
      Weight lambda = random_dominant(rs, 2);
      CHECK(character_dimension(rs, freudenthal(rs, lambda)) == weyl_dim(rs, lambda));
    }
  }
}

TEST_CASE("freudenthal support is exactly weights_under") {
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::B, 3}, {SimpleType::D, 4}, {SimpleType::F, 4}}) {
    RootSystem rs = build_root_system(t, r);
    Weight lambda = random_dominant(rs, 1);
    FormalCharacter ch = freudenthal(rs, lambda);
    auto under = weights_under(rs, lambda);
    REQUIRE(ch.mult.size() == under.size());
    for (const Weight& w : under) CHECK(ch.at(w) >= 1);
  }
}

TEST_CASE("mult_one exclusion") {
  RootSystem b3 = build_root_system(SimpleType::B, 3);
  // lambda = a fw_1 + b fw_2 + a fw_3 with a > 1: lambda - alpha_1 has
  // multiplicity one.
  CHECK(mult_one_excludes(b3, W({2, 1, 2}), W({0, 2, 2})));

  RootSystem b2 = build_root_system(SimpleType::B, 2);
  // lambda - 2 alpha_2 = (a+2, b-4) for b > 3
  CHECK(mult_one_excludes(b2, W({1, 4}), W({3, 0})));

  RootSystem a3 = build_root_system(SimpleType::A, 3);
  CHECK_FALSE(mult_one_excludes(a3, W({1, 1, 1}), W({0, 1, 0})));
  CHECK_THROWS_AS(mult_one_excludes(a3, W({1, 1, 1}), W({1, 1, 1})), precondition_error);
}

TEST_CASE("character arithmetic") {
  RootSystem a2 = build_root_system(SimpleType::A, 2);
  FormalCharacter ch = freudenthal(a2, W({1, 1}));
  CHECK(character_sum(ch, FormalCharacter{}) == ch);
  CHECK(character_sub(ch, ch).mult.empty());
  CHECK_THROWS_AS(character_sub(FormalCharacter{}, ch), arithmetic_error);

  ChiExpansion x;
  x.add(W({1, 1}), 1);
  CHECK(chi_sub(x, x).empty());
  ChiExpansion y = chi_sum(x, x);
  CHECK(y.at(W({1, 1})) == 2);
}

TEST_CASE("weight limit guards huge enumerations") {
  RootSystem e6 = build_root_system(SimpleType::E, 6);
  CHECK_THROWS_AS(freudenthal(e6, W({20, 0, 0, 0, 0, 20}), 500), resource_error);
}
