#include "weylkit/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace weylkit {

std::string type_name(SimpleType t, int rank) {
  std::ostringstream os;
  os << char(t) << rank;
  return os.str();
}

SimpleType parse_type(const std::string& s) {
  if (s.empty()) throw precondition_error("empty type tag");
  switch (s[0]) {
    case 'A': case 'a': return SimpleType::A;
    case 'B': case 'b': return SimpleType::B;
    case 'C': case 'c': return SimpleType::C;
    case 'D': case 'd': return SimpleType::D;
    case 'E': case 'e': return SimpleType::E;
    case 'F': case 'f': return SimpleType::F;
  }
  throw precondition_error("unsupported type tag: " + s);
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

namespace {

IVec evec(int d, std::initializer_list<std::pair<int, Int>> entries) {
  IVec v = IVec::Zero(d);
  for (auto& [i, x] : entries) v[i] = x;
  return v;
}

// Simple roots and fundamental weights per Bourbaki planche, scaled by
// eps_scale.  Type A uses the GL-style lift fw_i = e_1+...+e_i; every
// quantity the library derives from epsilon coordinates is paired against
// root-lattice vectors, for which the lift is equivalent to the orthogonal
// realization.
void planche_data(SimpleType type, int rank, int& d, std::vector<IVec>& simples,
                  std::vector<IVec>& fws) {
  const Int s = eps_scale;
  const Int h = eps_scale / 2;
  simples.clear();
  fws.clear();
  switch (type) {
    case SimpleType::A: {
      if (rank < 1) throw precondition_error("A_l needs l >= 1");
      d = rank + 1;
      for (int i = 0; i < rank; ++i) simples.push_back(evec(d, {{i, s}, {i + 1, -s}}));
      for (int i = 0; i < rank; ++i) {
        IVec w = IVec::Zero(d);
        for (int j = 0; j <= i; ++j) w[j] = s;
        fws.push_back(w);
      }
      break;
    }
    case SimpleType::B: {
      if (rank < 2) throw precondition_error("B_l needs l >= 2");
      d = rank;
      for (int i = 0; i + 1 < rank; ++i) simples.push_back(evec(d, {{i, s}, {i + 1, -s}}));
      simples.push_back(evec(d, {{rank - 1, s}}));
      for (int i = 0; i + 1 < rank; ++i) {
        IVec w = IVec::Zero(d);
        for (int j = 0; j <= i; ++j) w[j] = s;
        fws.push_back(w);
      }
      fws.push_back(IVec::Constant(d, h));
      break;
    }
    case SimpleType::C: {
      if (rank < 2) throw precondition_error("C_l needs l >= 2");
      d = rank;
      for (int i = 0; i + 1 < rank; ++i) simples.push_back(evec(d, {{i, s}, {i + 1, -s}}));
      simples.push_back(evec(d, {{rank - 1, 2 * s}}));
      for (int i = 0; i < rank; ++i) {
        IVec w = IVec::Zero(d);
        for (int j = 0; j <= i; ++j) w[j] = s;
        fws.push_back(w);
      }
      break;
    }
    case SimpleType::D: {
      if (rank < 3) throw precondition_error("D_l needs l >= 3");
      d = rank;
      for (int i = 0; i + 1 < rank; ++i) simples.push_back(evec(d, {{i, s}, {i + 1, -s}}));
      simples.push_back(evec(d, {{rank - 2, s}, {rank - 1, s}}));
      for (int i = 0; i + 2 < rank; ++i) {
        IVec w = IVec::Zero(d);
        for (int j = 0; j <= i; ++j) w[j] = s;
        fws.push_back(w);
      }
      IVec wm = IVec::Constant(d, h);
      wm[rank - 1] = -h;
      fws.push_back(wm);
      fws.push_back(IVec::Constant(d, h));
      break;
    }
    case SimpleType::F: {
      if (rank != 4) throw precondition_error("type F has rank 4");
      d = 4;
      simples.push_back(evec(d, {{1, s}, {2, -s}}));
      simples.push_back(evec(d, {{2, s}, {3, -s}}));
      simples.push_back(evec(d, {{3, s}}));
      simples.push_back(evec(d, {{0, h}, {1, -h}, {2, -h}, {3, -h}}));
      fws.push_back(evec(d, {{0, s}, {1, s}}));
      fws.push_back(evec(d, {{0, 2 * s}, {1, s}, {2, s}}));
      fws.push_back(evec(d, {{0, 3 * h}, {1, h}, {2, h}, {3, h}}));
      fws.push_back(evec(d, {{0, s}}));
      break;
    }
    case SimpleType::E: {
      if (rank != 6) throw precondition_error("only E_6 is supported");
      d = 8;
      IVec a1 = IVec::Constant(d, -h);
      a1[0] = h;
      a1[7] = h;
      simples.push_back(a1);
      simples.push_back(evec(d, {{0, s}, {1, s}}));
      simples.push_back(evec(d, {{0, -s}, {1, s}}));
      simples.push_back(evec(d, {{1, -s}, {2, s}}));
      simples.push_back(evec(d, {{2, -s}, {3, s}}));
      simples.push_back(evec(d, {{3, -s}, {4, s}}));
      const Int t = eps_scale / 3;
      fws.push_back(evec(d, {{5, -2 * t}, {6, -2 * t}, {7, 2 * t}}));
      fws.push_back(evec(d, {{0, h}, {1, h}, {2, h}, {3, h}, {4, h}, {5, -h}, {6, -h}, {7, h}}));
      fws.push_back(evec(d, {{0, -h}, {1, h}, {2, h}, {3, h}, {4, h}, {5, -5}, {6, -5}, {7, 5}}));
      fws.push_back(evec(d, {{2, s}, {3, s}, {4, s}, {5, -s}, {6, -s}, {7, s}}));
      fws.push_back(evec(d, {{3, s}, {4, s}, {5, -2 * t}, {6, -2 * t}, {7, 2 * t}}));
      fws.push_back(evec(d, {{4, s}, {5, -t}, {6, -t}, {7, t}}));
      break;
    }
  }
}

Int parity_sign(std::vector<int> perm) {
  int sgn = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    while (perm[i] != int(i)) {
      std::swap(perm[i], perm[perm[i]]);
      sgn = -sgn;
    }
  }
  return sgn;
}

}  // namespace

Int pairing_eps(const IVec& v, const IVec& alpha) {
  if (alpha.isZero()) throw precondition_error("pairing against the zero root");
  return checked_div(2 * raw_dot(v, alpha), raw_dot(alpha, alpha), "pairing");
}

Int pairing(const RootSystem& rs, const Weight& w, int simple_index) {
  if (simple_index < 0 || simple_index >= rs.rank) throw precondition_error("simple root index out of range");
  return w[simple_index];
}

Int pairing(const RootSystem& rs, const Weight& w, const IVec& alpha) {
  return pairing_eps(weight_to_eps(rs, w), alpha);
}

IVec weight_to_eps(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank) throw precondition_error("weight rank mismatch");
  IVec v = IVec::Zero(rs.d_phi);
  for (int i = 0; i < rs.rank; ++i) v += w[i] * rs.fundamental_weights[i];
  return v;
}

Weight eps_to_weight(const RootSystem& rs, const IVec& v) {
  IVec c(rs.rank);
  for (int i = 0; i < rs.rank; ++i) c[i] = pairing_eps(v, rs.simple_roots[i]);
  return Weight(c);
}

IVec reflect(const IVec& v, const IVec& alpha) {
  return v - pairing_eps(v, alpha) * alpha;
}

IVec apply(const RootSystem& rs, const WeylElement& w, const IVec& v) {
  if (w.is_perm) {
    IVec out(v.size());
    for (int k = 0; k < int(v.size()); ++k) out[k] = w.sign[k] * v[w.perm[k]];
    return out;
  }
  IVec out = v;
  for (int i : w.word) out = reflect(out, rs.simple_roots[i]);
  return out;
}

std::optional<IVec> root_coords(const RootSystem& rs, const IVec& v) {
  // Solve C^T c = (<v, alpha_j^vee>)_j exactly, then confirm the residual.
  const int n = rs.rank;
  Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic> m(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Rat(rs.cartan(j, i));
    m(i, n) = Rat(pairing_eps(v, rs.simple_roots[i]));
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m(r, col) != Rat(0)) { pivot = r; break; }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) m.row(pivot).swap(m.row(col));
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col) == Rat(0)) continue;
      Rat f = m(r, col) / m(col, col);
      for (int c2 = col; c2 <= n; ++c2) m(r, c2) -= f * m(col, c2);
    }
  }
  IVec c(n);
  IVec residual = v;
  for (int i = 0; i < n; ++i) {
    Rat x = m(i, n) / m(i, i);
    if (x.denominator() != 1) return std::nullopt;
    if (x.numerator() > std::numeric_limits<Int>::max() || x.numerator() < std::numeric_limits<Int>::min())
      return std::nullopt;
    c[i] = static_cast<Int>(x.numerator());
    residual -= c[i] * rs.simple_roots[i];
  }
  if (!residual.isZero()) return std::nullopt;
  return c;
}

// Coordinates over the simple roots of a weight given by its coefficient
// vector, i.e. the exact solution c of C^T c = coeffs, when integral.
std::optional<IVec> simple_coords(const RootSystem& rs, const IVec& coeffs) {
  const int n = rs.rank;
  Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic> m(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Rat(rs.cartan(j, i));
    m(i, n) = Rat(coeffs[i]);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m(r, col) != Rat(0)) { pivot = r; break; }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) m.row(pivot).swap(m.row(col));
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col) == Rat(0)) continue;
      Rat f = m(r, col) / m(col, col);
      for (int c2 = col; c2 <= n; ++c2) m(r, c2) -= f * m(col, c2);
    }
  }
  IVec c(n);
  for (int i = 0; i < n; ++i) {
    Rat x = m(i, n) / m(i, i);
    if (x.denominator() != 1) return std::nullopt;
    c[i] = static_cast<Int>(x.numerator());
  }
  return c;
}

IVec root_lattice_eps(const RootSystem& rs, const Weight& diff) {
  auto c = simple_coords(rs, diff.coeffs);
  if (!c) throw precondition_error("weight " + to_string(diff) + " is not in the root lattice");
  IVec out = IVec::Zero(rs.d_phi);
  for (int i = 0; i < rs.rank; ++i) out += (*c)[i] * rs.simple_roots[i];
  return out;
}

RootSystem build_root_system(SimpleType type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  planche_data(type, rank, rs.d_phi, rs.simple_roots, rs.fundamental_weights);

  rs.cartan.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan(i, j) = pairing_eps(rs.simple_roots[i], rs.simple_roots[j]);

  // All roots arise as Weyl conjugates of simple roots; close under the
  // simple reflections.
  std::set<IVec, LexLess> all(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<IVec> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    IVec r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      IVec img = reflect(r, rs.simple_roots[i]);
      if (all.insert(img).second) queue.push_back(img);
    }
  }

  struct PosRoot {
    IVec eps, coords;
    Int height;
  };
  std::vector<PosRoot> pos;
  for (const IVec& r : all) {
    auto c = root_coords(rs, r);
    if (!c) throw arithmetic_error("non-integral root coordinates in " + rs.name());
    if ((c->array() >= 0).all()) pos.push_back({r, *c, c->sum()});
  }
  if (2 * pos.size() != all.size()) throw arithmetic_error("positive/negative root split failed");
  std::sort(pos.begin(), pos.end(), [](const PosRoot& a, const PosRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return LexLess{}(a.eps, b.eps);
  });
  rs.long_norm_sq = 0;
  IVec two_rho = IVec::Zero(rs.d_phi);
  for (auto& pr : pos) {
    rs.positive_roots.push_back(pr.eps);
    rs.pos_root_simple_coords.push_back(pr.coords);
    rs.pos_root_height.push_back(pr.height);
    rs.long_norm_sq = std::max(rs.long_norm_sq, raw_dot(pr.eps, pr.eps));
    two_rho += pr.eps;
  }
  for (Eigen::Index i = 0; i < two_rho.size(); ++i)
    if (two_rho[i] % 2 != 0) throw arithmetic_error("2*rho not divisible");
  rs.rho = two_rho / 2;

  // Construction invariants.
  const std::size_t expected = [&]() -> std::size_t {
    switch (type) {
      case SimpleType::A: return std::size_t(rank) * (rank + 1) / 2;
      case SimpleType::B:
      case SimpleType::C: return std::size_t(rank) * rank;
      case SimpleType::D: return std::size_t(rank) * (rank - 1);
      case SimpleType::E: return 36;
      case SimpleType::F: return 24;
    }
    return 0;
  }();
  if (rs.positive_roots.size() != expected)
    throw arithmetic_error("positive root count mismatch in " + rs.name());
  IVec fw_sum = IVec::Zero(rs.d_phi);
  for (int i = 0; i < rank; ++i) {
    fw_sum += rs.fundamental_weights[i];
    for (int j = 0; j < rank; ++j)
      if (pairing_eps(rs.fundamental_weights[i], rs.simple_roots[j]) != (i == j ? 1 : 0))
        throw arithmetic_error("fundamental weight pairing defect in " + rs.name());
  }
  if (type != SimpleType::A && fw_sum != rs.rho)
    throw arithmetic_error("rho != sum of fundamental weights in " + rs.name());
  return rs;
}

bool is_dominant_eps(const RootSystem& rs, const IVec& v) {
  for (int i = 0; i < rs.rank; ++i)
    if (pairing_eps(v, rs.simple_roots[i]) < 0) return false;
  return true;
}

bool is_regular(const RootSystem& rs, const IVec& v) {
  for (const IVec& a : rs.positive_roots)
    if (raw_dot(v, a) == 0) return false;
  return true;
}

namespace {

DominantResult dominant_by_sorting(const RootSystem& rs, const IVec& v) {
  const int d = rs.d_phi;
  const bool signed_group = rs.type != SimpleType::A;
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    Int xa = signed_group ? std::abs(v[a]) : v[a];
    Int xb = signed_group ? std::abs(v[b]) : v[b];
    return xa > xb;
  });
  WeylElement w;
  w.is_perm = true;
  w.perm = idx;
  w.sign.assign(d, 1);
  int flips = 0;
  if (signed_group) {
    for (int k = 0; k < d; ++k)
      if (v[idx[k]] < 0) { w.sign[k] = -1; ++flips; }
    if (rs.type == SimpleType::D && (flips & 1)) {
      // Stay inside W(D): flip one more coordinate, preferring a zero so the
      // vector is unchanged; otherwise the smallest entry goes negative.
      int k = d - 1;
      for (int j = d - 1; j >= 0; --j)
        if (v[idx[j]] == 0) { k = j; break; }
      w.sign[k] = -w.sign[k];
      flips += (w.sign[k] == -1) ? 1 : -1;
    }
  }
  w.det = static_cast<int>(parity_sign(idx) * ((flips & 1) ? -1 : 1));
  return {apply(rs, w, v), w};
}

DominantResult dominant_by_descent(const RootSystem& rs, const IVec& v) {
  WeylElement w;
  w.is_perm = false;
  IVec cur = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (pairing_eps(cur, rs.simple_roots[i]) < 0) {
        cur = reflect(cur, rs.simple_roots[i]);
        w.word.push_back(i);
        changed = true;
      }
    }
  }
  w.det = (w.word.size() & 1) ? -1 : 1;
  return {cur, w};
}

}  // namespace

DominantResult to_dominant(const RootSystem& rs, const IVec& v) {
  if (rs.type == SimpleType::E || rs.type == SimpleType::F) return dominant_by_descent(rs, v);
  return dominant_by_sorting(rs, v);
}

Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant()) throw precondition_error("dual_weight needs a dominant weight");
  return eps_to_weight(rs, to_dominant(rs, IVec(-weight_to_eps(rs, lambda))).vec);
}

bool dominance_le(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  if (mu.rank() != lambda.rank()) throw precondition_error("rank mismatch in dominance test");
  auto c = simple_coords(rs, IVec(lambda.coeffs - mu.coeffs));
  return c && (c->array() >= 0).all();
}

Int height_between(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  auto c = simple_coords(rs, IVec(lambda.coeffs - mu.coeffs));
  if (!c || (c->array() < 0).any()) throw precondition_error("height_between needs mu <= lambda");
  return c->sum();
}

std::vector<Weight> weights_under(const RootSystem& rs, const Weight& lambda, std::size_t limit) {
  if (!lambda.is_dominant()) throw precondition_error("weights_under needs a dominant weight");
  // Covers in the dominance order on dominant weights are single positive
  // roots, so closing downwards by positive-root steps is exhaustive.
  std::vector<IVec> pos_fw;
  for (const IVec& a : rs.positive_roots) pos_fw.push_back(eps_to_weight(rs, a).coeffs);
  std::set<IVec, LexLess> seen{lambda.coeffs};
  std::deque<IVec> queue{lambda.coeffs};
  std::vector<Weight> out;
  while (!queue.empty()) {
    IVec w = queue.front();
    queue.pop_front();
    out.emplace_back(w);
    if (limit && out.size() > limit)
      throw resource_error("weight enumeration exceeded the configured limit (" +
                           std::to_string(limit) + ") below " + to_string(lambda));
    for (const IVec& a : pos_fw) {
      IVec cand = w - a;
      if ((cand.array() >= 0).all() && seen.insert(cand).second) queue.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end(), WeightLess{});
  return out;
}

std::vector<Weight> dominant_interval(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  if (!dominance_le(rs, mu, lambda)) return {};
  std::vector<IVec> pos_fw;
  for (const IVec& a : rs.positive_roots) pos_fw.push_back(eps_to_weight(rs, a).coeffs);
  std::set<IVec, LexLess> seen{lambda.coeffs};
  std::deque<IVec> queue{lambda.coeffs};
  std::vector<Weight> out;
  while (!queue.empty()) {
    IVec w = queue.front();
    queue.pop_front();
    out.emplace_back(w);
    for (const IVec& a : pos_fw) {
      IVec cand = w - a;
      if ((cand.array() >= 0).all() && !seen.count(cand) && dominance_le(rs, mu, Weight(cand))) {
        seen.insert(cand);
        queue.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end(), WeightLess{});
  return out;
}

ZInt weyl_group_order(SimpleType type, int rank) {
  auto fact = [](int n) {
    ZInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (type) {
    case SimpleType::A: return fact(rank + 1);
    case SimpleType::B:
    case SimpleType::C: return fact(rank) << rank;
    case SimpleType::D: return fact(rank) << (rank - 1);
    case SimpleType::E: return ZInt(51840);
    case SimpleType::F: return ZInt(1152);
  }
  throw precondition_error("unknown type");
}

namespace {

// Order of the standard parabolic W_J, from the shape of the subdiagram.
ZInt subdiagram_order(const RootSystem& rs, const std::vector<int>& nodes) {
  if (nodes.empty()) return 1;
  std::map<int, std::vector<int>> adj;
  for (int a : nodes)
    for (int b : nodes)
      if (a != b && rs.cartan(a, b) != 0) adj[a].push_back(b);
  std::set<int> left(nodes.begin(), nodes.end());
  ZInt order = 1;
  auto fact = [](int n) {
    ZInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int nb : adj[comp[i]])
        if (left.erase(nb)) comp.push_back(nb);
    const int k = int(comp.size());
    int branch = -1, doubled = 0;
    bool double_interior = false;
    for (int a : comp) {
      if (int(adj[a].size()) >= 3) branch = a;
      for (int b : adj[a]) {
        int m = int(rs.cartan(a, b) * rs.cartan(b, a));
        if (m == 3) throw precondition_error("G_2 subdiagram not supported");
        if (m == 2 && a < b) {
          ++doubled;
          if (adj[a].size() > 1 && adj[b].size() > 1) double_interior = true;
        }
      }
    }
    if (branch >= 0) {
      // Arms of the fork: D_k for arms (1,1,k-3), E_6 for arms (1,2,2).
      std::vector<int> arms;
      for (int start : adj[branch]) {
        int len = 1, prev = branch, cur = start;
        while (true) {
          int next = -1;
          for (int nb : adj[cur])
            if (nb != prev) next = nb;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1)
        order *= fact(k) << (k - 1);
      else if (arms == std::vector<int>{1, 2, 2})
        order *= 51840;
      else
        throw precondition_error("unsupported forked subdiagram");
    } else if (doubled == 0) {
      order *= fact(k + 1);
    } else if (double_interior) {
      if (k != 4) throw precondition_error("unsupported doubled subdiagram");
      order *= 1152;
    } else {
      order *= fact(k) << k;
    }
  }
  return order;
}

}  // namespace

ZInt orbit_size(const RootSystem& rs, const Weight& v) {
  if (!v.is_dominant()) throw precondition_error("orbit_size needs a dominant weight");
  std::vector<int> fixed;
  for (int i = 0; i < rs.rank; ++i)
    if (v[i] == 0) fixed.push_back(i);
  ZInt total = weyl_group_order(rs.type, rs.rank);
  return checked_div(total, subdiagram_order(rs, fixed), "orbit_size");
}

std::vector<IVec> orbit_of(const RootSystem& rs, const IVec& v) {
  std::set<IVec, LexLess> seen{v};
  std::deque<IVec> queue{v};
  std::vector<IVec> out;
  while (!queue.empty()) {
    IVec w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (int i = 0; i < rs.rank; ++i) {
      IVec img = reflect(w, rs.simple_roots[i]);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return out;
}

std::vector<LeviComponent> levi_components(const RootSystem& rs, const std::vector<int>& nodes) {
  std::map<int, std::vector<int>> adj;
  for (int a : nodes)
    for (int b : nodes)
      if (a != b && rs.cartan(a, b) != 0) adj[a].push_back(b);
  std::set<int> left(nodes.begin(), nodes.end());
  std::vector<LeviComponent> out;
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int nb : adj[comp[i]])
        if (left.erase(nb)) comp.push_back(nb);
    std::sort(comp.begin(), comp.end());
    const int k = int(comp.size());

    const std::vector<std::pair<SimpleType, int>> candidates = [&]() {
      std::vector<std::pair<SimpleType, int>> c{{SimpleType::A, k}};
      if (k >= 2) c.push_back({SimpleType::B, k});
      if (k >= 2) c.push_back({SimpleType::C, k});
      if (k >= 3) c.push_back({SimpleType::D, k});
      if (k == 4) c.push_back({SimpleType::F, 4});
      if (k == 6) c.push_back({SimpleType::E, 6});
      return c;
    }();

    bool matched = false;
    for (auto [t, r] : candidates) {
      RootSystem sub = build_root_system(t, r);
      // Search for a node bijection matching the Cartan matrices.
      std::vector<int> assign(k, -1);
      std::vector<bool> used(k, false);
      auto consistent = [&](int i, int s) {
        for (int j = 0; j < i; ++j) {
          if (rs.cartan(comp[i], comp[j]) != sub.cartan(s, assign[j])) return false;
          if (rs.cartan(comp[j], comp[i]) != sub.cartan(assign[j], s)) return false;
        }
        return true;
      };
      std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == k) return true;
        for (int s = 0; s < k; ++s) {
          if (used[s] || !consistent(i, s)) continue;
          used[s] = true;
          assign[i] = s;
          if (rec(i + 1)) return true;
          used[s] = false;
        }
        return false;
      };
      if (!rec(0)) continue;
      LeviComponent lc;
      lc.sub = std::move(sub);
      lc.node_map.resize(k);
      for (int i = 0; i < k; ++i) lc.node_map[assign[i]] = comp[i];
      out.push_back(std::move(lc));
      matched = true;
      break;
    }
    if (!matched) throw precondition_error("could not identify Levi component type");
  }
  return out;
}

Weight restrict_to_component(const LeviComponent& c, const Weight& parent) {
  IVec v(c.sub.rank);
  for (int i = 0; i < c.sub.rank; ++i) v[i] = parent[c.node_map[i]];
  return Weight(v);
}

}  // namespace weylkit
