#include "weylkit/characters.hpp"

#include <algorithm>

namespace weylkit {

FormalCharacter freudenthal(const RootSystem& rs, const Weight& lambda, std::size_t weight_limit) {
  if (!lambda.is_dominant()) throw precondition_error("freudenthal needs a dominant weight");
  std::vector<Weight> support = weights_under(rs, lambda, weight_limit);

  // Process in increasing height distance from lambda, so that every term
  // mu + k alpha is already known when mu is reached.
  std::vector<std::pair<Int, Weight>> order;
  order.reserve(support.size());
  for (const Weight& w : support) order.emplace_back(height_between(rs, w, lambda), w);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return WeightLess{}(a.second, b.second);
  });

  std::map<Weight, Int, WeightLess> table;
  const IVec lam_eps = weight_to_eps(rs, lambda);
  for (const auto& [ht, mu] : order) {
    if (ht == 0) {
      table.emplace(mu, 1);
      continue;
    }
    const IVec mu_eps = lam_eps - root_lattice_eps(rs, Weight(lambda.coeffs - mu.coeffs));
    Int num = 0;
    for (const IVec& alpha : rs.positive_roots) {
      IVec v = mu_eps;
      for (;;) {
        v += alpha;
        Weight rep = eps_to_weight(rs, to_dominant(rs, v).vec);
        auto it = table.find(rep);
        if (it == table.end()) break;  // weight strings in modules are unbroken
        num += 2 * raw_dot(v, alpha) * it->second;
      }
    }
    // (lambda+rho,lambda+rho) - (mu+rho,mu+rho) = (lambda+mu+2rho, lambda-mu)
    const Int den = raw_dot(lam_eps + mu_eps + 2 * rs.rho, lam_eps - mu_eps);
    table.emplace(mu, checked_div(num, den, "freudenthal"));
  }
  FormalCharacter ch;
  ch.mult = std::move(table);
  return ch;
}

ZInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant()) throw precondition_error("weyl_dim needs a dominant weight");
  const IVec top = weight_to_eps(rs, lambda) + rs.rho;
  ZInt num = 1, den = 1;
  for (const IVec& alpha : rs.positive_roots) {
    num *= raw_dot(top, alpha);
    den *= raw_dot(rs.rho, alpha);
  }
  return checked_div(num, den, "weyl_dim");
}

ZInt character_dimension(const RootSystem& rs, const FormalCharacter& ch) {
  ZInt total = 0;
  for (const auto& [w, m] : ch.mult) total += orbit_size(rs, w) * m;
  return total;
}

bool mult_one_excludes(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                       const FormalCharacter* precomputed) {
  if (mu == lambda || !dominance_le(rs, mu, lambda))
    throw precondition_error("mult_one_excludes needs mu strictly under lambda");
  if (precomputed) return precomputed->at(mu) == 1;
  return freudenthal(rs, lambda).at(mu) == 1;
}

FormalCharacter character_sum(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out = a;
  for (const auto& [w, m] : b.mult) {
    auto [it, fresh] = out.mult.emplace(w, m);
    if (!fresh) it->second += m;
  }
  return out;
}

FormalCharacter character_sub(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out = a;
  for (const auto& [w, m] : b.mult) {
    auto it = out.mult.find(w);
    const Int have = it == out.mult.end() ? 0 : it->second;
    if (have < m)
      throw arithmetic_error("character_sub would go negative at " + to_string(w) +
                             " (inconsistent decomposition)");
    if (have == m) {
      if (it != out.mult.end()) out.mult.erase(it);
    } else {
      it->second = have - m;
    }
  }
  return out;
}

ChiExpansion chi_sum(const ChiExpansion& a, const ChiExpansion& b) {
  ChiExpansion out = a;
  for (const auto& [w, c] : b.coeff) out.add(w, c);
  return out;
}

ChiExpansion chi_sub(const ChiExpansion& a, const ChiExpansion& b) {
  ChiExpansion out = a;
  for (const auto& [w, c] : b.coeff) out.add(w, -c);
  return out;
}

}  // namespace weylkit
