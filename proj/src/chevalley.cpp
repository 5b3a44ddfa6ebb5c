#include "weylkit/chevalley.hpp"

#include <numeric>

namespace weylkit {

ChevalleyAlgebra::ChevalleyAlgebra(const RootSystem& rs) : rs_(&rs) {
  if (rs.rank > 6) throw precondition_error("Chevalley algebra supported up to rank 6");
  n_pos_ = rs.num_positive_roots();
  roots_.reserve(2 * n_pos_);
  for (const IVec& r : rs.positive_roots) roots_.push_back(r);
  for (const IVec& r : rs.positive_roots) roots_.push_back(-r);
  for (int i = 0; i < 2 * n_pos_; ++i) index_.emplace(roots_[i], i);

  extraspecial_.assign(n_pos_, {-1, -1});
  for (int k = 0; k < n_pos_; ++k) {
    if (rs.pos_root_height[k] == 1) continue;
    for (int a = 0; a < n_pos_; ++a) {
      auto b = index_of(IVec(roots_[k] - roots_[a]));
      if (b && positive(*b) && a < *b) {
        extraspecial_[k] = {a, *b};
        break;
      }
    }
    if (extraspecial_[k].first < 0) throw arithmetic_error("no extraspecial pair found");
  }

  coroot_coords_.reserve(2 * n_pos_);
  coroot_eps_.reserve(2 * n_pos_);
  for (int i = 0; i < 2 * n_pos_; ++i) {
    const Int norm = raw_dot(roots_[i], roots_[i]);
    IVec cr = roots_[i] * checked_div(Int(2) * eps_scale * eps_scale, norm, "coroot");
    // cr = scale * (2 alpha / (alpha,alpha)); integral for all supported types.
    coroot_eps_.push_back(cr);
    IVec coeffs(rs.rank);
    for (int j = 0; j < rs.rank; ++j)
      coeffs[j] = pairing_eps(rs.fundamental_weights[j], roots_[i]);
    // <fw_j, alpha^vee> are exactly the coordinates of alpha^vee over the
    // simple coroots.
    coroot_coords_.push_back(coeffs);
  }
}

std::optional<int> ChevalleyAlgebra::index_of(const IVec& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ChevalleyAlgebra::sum_index(int i, int j) const {
  return index_of(IVec(roots_[i] + roots_[j]));
}

Int ChevalleyAlgebra::string_down(int alpha, int beta) const {
  Int p = 0;
  IVec v = roots_[beta] - roots_[alpha];
  while (index_.count(v)) {
    ++p;
    v -= roots_[alpha];
  }
  return p;
}

Int ChevalleyAlgebra::npos(int i, int j) const {
  auto key = std::make_pair(i, j);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto s = sum_index(i, j);
  if (!s || !positive(*s)) throw arithmetic_error("npos called on a non-special pair");
  const int k = *s;
  Int value;
  if (extraspecial_[k] == std::make_pair(i, j)) {
    value = string_down(i, j) + 1;
  } else if (extraspecial_[k] == std::make_pair(j, i)) {
    value = -npos(j, i);
  } else if (i > j) {
    value = -npos(j, i);
  } else {
    // Jacobi identity against e_{-alpha1}, alpha1 the extraspecial head of
    // the sum: N(a,b) N(-a1,g) = N(-a1,a) N(a-a1,b) + N(-a1,b) N(a,b-a1).
    const auto [a1, b1] = extraspecial_[k];
    (void)b1;
    const Int denom = structure_constant(neg(a1), k);
    Int t = 0;
    if (auto d = index_of(IVec(roots_[i] - roots_[a1])); d && positive(*d))
      t += structure_constant(neg(a1), i) * npos(*d, j);
    if (auto d = index_of(IVec(roots_[j] - roots_[a1])); d && positive(*d))
      t += structure_constant(neg(a1), j) * npos(i, *d);
    value = checked_div(t, denom, "structure constant recursion");
  }
  memo_.emplace(key, value);
  return value;
}

Int ChevalleyAlgebra::structure_constant(int i, int j) const {
  auto s = sum_index(i, j);
  if (!s) return 0;
  const bool pi = positive(i), pj = positive(j);
  if (pi && pj) return npos(i, j);  // a sum of positive roots is positive
  if (!pi && !pj) return -structure_constant(neg(i), neg(j));
  // Mixed pair (x positive xor negative); reduce through the cyclic rule
  // N(x,y) (y,y)^-1-style rotations to a positive-positive base.
  const int x = i, y = j, z = neg(*s);
  const bool px = positive(x), py = positive(y), pz = positive(z);
  const int num_pos = int(px) + int(py) + int(pz);
  if (num_pos == 1) return -structure_constant(neg(x), neg(y));
  auto norm = [&](int a) { return raw_dot(roots_[a], roots_[a]); };
  if (!py) {
    // x, z positive: base pair (z, x), and N(x,y) = N(z,x) (z,z)/(y,y).
    return checked_div(structure_constant(z, x) * norm(z), norm(y), "cyclic rule");
  }
  // y, z positive: N(x,y) = N(y,z) (z,z)/(x,x).
  return checked_div(structure_constant(y, z) * norm(z), norm(x), "cyclic rule");
}

LieElement lie_bracket(const ChevalleyAlgebra& alg, const LieElement& a, const LieElement& b) {
  const RootSystem& rs = alg.root_system();
  const int nh = 2 * alg.num_pos();
  LieElement out;
  auto add = [&out](int idx, Int c) {
    if (c == 0) return;
    auto [it, fresh] = out.emplace(idx, c);
    if (!fresh && (it->second += c) == 0) out.erase(it);
  };
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      const Int c = ci * cj;
      const bool hi = i >= nh, hj = j >= nh;
      if (hi && hj) continue;
      if (hi) {
        add(j, c * pairing_eps(alg.root(j), rs.simple_roots[i - nh]));
      } else if (hj) {
        add(i, -c * pairing_eps(alg.root(i), rs.simple_roots[j - nh]));
      } else if (alg.neg(i) == j) {
        const IVec& cr = alg.coroot_coords(i);
        for (int r = 0; r < rs.rank; ++r) add(nh + r, c * cr[r]);
      } else {
        if (auto s = alg.sum_index(i, j)) add(*s, c * alg.structure_constant(i, j));
      }
    }
  }
  return out;
}

namespace {

void strip_content(LieElement& x) {
  Int g = 0;
  for (const auto& [k, v] : x) g = std::gcd(g, v);
  if (g > 1)
    for (auto& [k, v] : x) v /= g;
}

// Sparse forward elimination: rows keyed by pivot (their smallest index).
// Each elimination step strictly increases the leading index of x, so the
// loop terminates without back-substitution.
void reduce_against(std::map<int, LieElement>& rows, LieElement& x) {
  strip_content(x);
  while (!x.empty()) {
    const int p = x.begin()->first;
    auto it = rows.find(p);
    if (it == rows.end()) return;
    const LieElement& row = it->second;
    const Int a = row.at(p), b = x.at(p);
    LieElement nx;
    for (const auto& [k, v] : x) nx[k] = a * v;
    for (const auto& [k, v] : row) {
      auto [jt, fresh] = nx.emplace(k, -b * v);
      if (!fresh) jt->second -= b * v;
    }
    for (auto jt = nx.begin(); jt != nx.end();)
      jt = jt->second == 0 ? nx.erase(jt) : std::next(jt);
    x = std::move(nx);
    strip_content(x);
  }
}

}  // namespace

std::vector<LieElement> subalgebra_closure(const ChevalleyAlgebra& alg,
                                           std::vector<LieElement> generators) {
  std::map<int, LieElement> rows;
  std::vector<LieElement> clean;
  auto insert = [&](LieElement x) -> bool {
    reduce_against(rows, x);
    if (x.empty()) return false;
    rows.emplace(x.begin()->first, x);
    clean.push_back(std::move(x));
    return true;
  };
  std::vector<LieElement> fresh;
  for (auto& g : generators)
    if (insert(g)) fresh.push_back(clean.back());
  while (!fresh.empty()) {
    std::vector<LieElement> next;
    for (const auto& f : fresh)
      for (const auto& b : clean) {
        LieElement br = lie_bracket(alg, f, b);
        if (insert(std::move(br))) next.push_back(clean.back());
      }
    fresh = std::move(next);
  }
  return clean;
}

bool in_span(const ChevalleyAlgebra& alg, const std::vector<LieElement>& basis,
             const LieElement& x) {
  (void)alg;
  std::map<int, LieElement> rows;
  for (LieElement b : basis) {
    reduce_against(rows, b);
    if (!b.empty()) rows.emplace(b.begin()->first, std::move(b));
  }
  LieElement probe = x;
  reduce_against(rows, probe);
  return probe.empty();
}

}  // namespace weylkit
