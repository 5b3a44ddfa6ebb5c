#pragma once

/*
  Formal characters and weight multiplicities of Weyl modules.

  A FormalCharacter is the dominant part of a W-invariant element of Z[X(T)]:
  a finite map from dominant weights to multiplicities.  freudenthal() fills
  it for the Weyl module V(lambda) by the usual recursion, evaluated over
  dominant weights only (every term m(mu + k alpha) is looked up at the
  dominant representative of its orbit).  All divisions are checked exact; a
  non-exact division means corrupted coordinates and aborts.

  ChiExpansion holds integer combinations of Weyl characters chi(nu); these
  can have negative coefficients and are the currency of the Jantzen sum
  formula layer.
*/

#include "weylkit/rootsys.hpp"

#include <map>

namespace weylkit {

struct FormalCharacter {
  std::map<Weight, Int, WeightLess> mult;

  Int at(const Weight& w) const {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  }
  bool operator==(const FormalCharacter& o) const { return mult == o.mult; }
};

struct ChiExpansion {
  std::map<Weight, Int, WeightLess> coeff;

  Int at(const Weight& w) const {
    auto it = coeff.find(w);
    return it == coeff.end() ? 0 : it->second;
  }
  void add(const Weight& w, Int c) {
    if (c == 0) return;
    auto [it, fresh] = coeff.emplace(w, c);
    if (!fresh && (it->second += c) == 0) coeff.erase(it);
  }
  bool empty() const { return coeff.empty(); }
  bool operator==(const ChiExpansion& o) const { return coeff == o.coeff; }
};

inline constexpr std::size_t default_weight_limit = 200000;

// Character of the Weyl module V(lambda): characteristic-zero multiplicities
// for every dominant weight under lambda.
FormalCharacter freudenthal(const RootSystem& rs, const Weight& lambda,
                            std::size_t weight_limit = default_weight_limit);

// dim V(lambda) by the Weyl dimension formula, exact.
ZInt weyl_dim(const RootSystem& rs, const Weight& lambda);

// Sum of orbit-size * multiplicity over the dominant support.
ZInt character_dimension(const RootSystem& rs, const FormalCharacter& ch);

// True iff mu has multiplicity 1 in V(lambda), which rules mu out as the
// highest weight of a composition factor (the weight-set of the irreducible
// quotient fills all of Lambda(lambda); valid for p-restricted lambda, and
// for two root lengths only when p > 2).
bool mult_one_excludes(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                       const FormalCharacter* precomputed = nullptr);

FormalCharacter character_sum(const FormalCharacter& a, const FormalCharacter& b);
// Throws arithmetic_error if any multiplicity would go negative.
FormalCharacter character_sub(const FormalCharacter& a, const FormalCharacter& b);
ChiExpansion chi_sum(const ChiExpansion& a, const ChiExpansion& b);
ChiExpansion chi_sub(const ChiExpansion& a, const ChiExpansion& b);

}  // namespace weylkit
