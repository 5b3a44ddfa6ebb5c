#include "weylkit/oracle.hpp"

#include <algorithm>

namespace weylkit {

namespace {

void accumulate(VermaElement& into, const Monomial& m, const ZInt& c) {
  if (c == 0) return;
  auto [it, fresh] = into.emplace(m, c);
  if (!fresh && (it->second += c) == 0) into.erase(it);
}

void accumulate(VermaElement& into, const VermaElement& x, const ZInt& scale = ZInt(1)) {
  for (const auto& [m, c] : x) accumulate(into, m, c * scale);
}

}  // namespace

VermaContext::VermaContext(const ChevalleyAlgebra& alg, Weight lambda)
    : alg_(&alg), lambda_(std::move(lambda)) {
  if (lambda_.rank() != alg.root_system().rank) throw precondition_error("weight rank mismatch");
  lambda_eps_ = weight_to_eps(alg.root_system(), lambda_);
}

int VermaContext::intern(const Monomial& m) const {
  auto [it, fresh] = ids_.emplace(m, int(ids_.size()));
  if (fresh) by_id_.push_back(&it->first);
  return it->second;
}

Weight VermaContext::weight_of(const Monomial& m) const {
  IVec c = lambda_.coeffs;
  for (int idx : m)
    for (int j = 0; j < alg_->root_system().rank; ++j)
      c[j] -= pairing_eps(alg_->root(idx), alg_->root_system().simple_roots[j]);
  return Weight(c);
}

VermaElement VermaContext::insert_f(int d, const Monomial& m) const {
  if (m.empty() || d >= m.front()) {
    Monomial out;
    out.reserve(m.size() + 1);
    out.push_back(d);
    out.insert(out.end(), m.begin(), m.end());
    return {{std::move(out), ZInt(1)}};
  }
  const auto key = std::make_pair(d, intern(m));
  if (auto it = f_memo_.find(key); it != f_memo_.end()) return it->second;

  const int head = m.front();
  const Monomial rest(m.begin() + 1, m.end());
  // f_d f_head = f_head f_d + [f_d, f_head]
  VermaElement out = apply_f(head, insert_f(d, rest));
  if (auto s = alg_->sum_index(alg_->neg(d), alg_->neg(head))) {
    const Int c = alg_->structure_constant(alg_->neg(d), alg_->neg(head));
    accumulate(out, insert_f(alg_->neg(*s), rest), ZInt(c));
  }
  f_memo_.emplace(key, out);
  return out;
}

VermaElement VermaContext::apply_f(int pos_root, const VermaElement& x) const {
  VermaElement out;
  for (const auto& [m, c] : x) accumulate(out, insert_f(pos_root, m), c);
  return out;
}

VermaElement VermaContext::expand_e(int h, const Monomial& m) const {
  if (m.empty()) return {};
  const auto key = std::make_pair(h, intern(m));
  if (auto it = e_memo_.find(key); it != e_memo_.end()) return it->second;

  const int d = m.front();
  const Monomial rest(m.begin() + 1, m.end());
  // e_h f_d = f_d e_h + [e_h, f_d]
  VermaElement out = apply_f(d, expand_e(h, rest));
  if (h == d) {
    const IVec w = lambda_eps_ - [&] {
      IVec acc = IVec::Zero(lambda_eps_.size());
      for (int idx : rest) acc += alg_->root(idx);
      return acc;
    }();
    accumulate(out, {{rest, ZInt(1)}}, ZInt(pairing_eps(w, alg_->root(h))));
  } else if (auto s = alg_->sum_index(h, alg_->neg(d))) {
    const Int c = alg_->structure_constant(h, alg_->neg(d));
    if (alg_->positive(*s)) {
      accumulate(out, expand_e(*s, rest), ZInt(c));
    } else {
      accumulate(out, insert_f(alg_->neg(*s), rest), ZInt(c));
    }
  }
  e_memo_.emplace(key, out);
  return out;
}

VermaElement VermaContext::apply_e(int pos_root, const VermaElement& x) const {
  VermaElement out;
  for (const auto& [m, c] : x) accumulate(out, expand_e(pos_root, m), c);
  return out;
}

ZInt VermaContext::form(const Monomial& a, const Monomial& b) const {
  if (a.empty()) return b.empty() ? ZInt(1) : ZInt(0);
  if (b.empty()) return 0;
  int ia = intern(a), ib = intern(b);
  if (ia > ib) std::swap(ia, ib);
  const auto key = std::make_pair(ia, ib);
  if (auto it = form_memo_.find(key); it != form_memo_.end()) return it->second;

  const Monomial& left = *by_id_[std::size_t(ia)];
  const Monomial& right = *by_id_[std::size_t(ib)];
  const Monomial rest(left.begin() + 1, left.end());
  ZInt value = 0;
  for (const auto& [m, c] : expand_e(left.front(), right)) value += c * form(rest, m);
  form_memo_.emplace(key, value);
  return value;
}

ZInt VermaContext::form(const VermaElement& a, const VermaElement& b) const {
  ZInt value = 0;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) value += ca * cb * form(ma, mb);
  return value;
}

std::vector<Monomial> VermaContext::monomials_at(const Weight& mu) const {
  auto target = simple_coords(alg_->root_system(), IVec(lambda_.coeffs - mu.coeffs));
  if (!target || (target->array() < 0).any()) return {};
  const auto& coords = alg_->root_system().pos_root_simple_coords;
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int idx, IVec rem) -> void {
    if (rem.isZero()) {
      out.push_back(cur);
      return;
    }
    if (idx < 0) return;
    self(self, idx - 1, rem);
    IVec next = rem - coords[idx];
    while ((next.array() >= 0).all()) {
      cur.push_back(idx);
      // copies of idx are contiguous and descend to smaller roots next
      self(self, idx - 1, next);
      next -= coords[idx];
    }
    cur.resize(cur.size() - std::size_t(std::count(cur.begin(), cur.end(), idx)));
  };
  rec(rec, alg_->num_pos() - 1, *target);
  for (auto& m : out) std::sort(m.begin(), m.end(), std::greater<>());
  return out;
}

WeylRealization::WeylRealization(const ChevalleyAlgebra& alg, Weight lambda, OracleOptions opts,
                                 bool full)
    : verma_(alg, std::move(lambda)), opts_(opts) {
  if (!verma_.highest_weight().is_dominant())
    throw precondition_error("realization needs a dominant highest weight");
  if (full) {
    ZInt dim = weyl_dim(alg.root_system(), verma_.highest_weight());
    if (dim > opts_.dim_bound)
      throw resource_error("Weyl module dimension " + dim.str() + " exceeds the bound " +
                           opts_.dim_bound.str() + " for " + to_string(verma_.highest_weight()));
  }
}

const FormalCharacter& WeylRealization::weyl_character() {
  if (!have_weyl_char_) {
    weyl_char_ = freudenthal(algebra().root_system(), highest_weight(), opts_.weight_limit);
    have_weyl_char_ = true;
  }
  return weyl_char_;
}

const WeightSpaceData& WeylRealization::weight_space(const Weight& mu) {
  const RootSystem& rs = algebra().root_system();
  Weight rep = mu.is_dominant() ? mu : eps_to_weight(rs, to_dominant(rs, weight_to_eps(rs, mu)).vec);
  if (auto it = spaces_.find(rep); it != spaces_.end()) return it->second;

  WeightSpaceData data;
  data.monomials = verma_.monomials_at(rep);
  const int n = int(data.monomials.size());
  if (n == 0 && !(rep == highest_weight()))
    throw precondition_error(to_string(mu) + " is not a weight of the realization of " +
                             to_string(highest_weight()));
  data.gram.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) data.gram(i, j) = data.gram(j, i) = verma_.form(data.monomials[i], data.monomials[j]);
  data.rank_q = rank_over_q(data.gram);
  const Int expected = weyl_character().at(rep);
  if (data.rank_q != expected)
    throw arithmetic_error("Gram rank over Q (" + std::to_string(data.rank_q) +
                           ") disagrees with Freudenthal (" + std::to_string(expected) + ") at " +
                           to_string(rep));
  return spaces_.emplace(rep, std::move(data)).first->second;
}

Int WeylRealization::irreducible_mult(const Weight& mu, Int p) {
  if (!is_prime(p)) throw precondition_error("p must be prime");
  const WeightSpaceData& ws = weight_space(mu);
  return rank_mod_p(ws.gram, p);
}

ZInt WeylRealization::irreducible_dim(Int p) {
  ZInt total = 0;
  for (const auto& [w, m] : irreducible_character(p).mult)
    total += orbit_size(algebra().root_system(), w) * m;
  return total;
}

FormalCharacter WeylRealization::irreducible_character(Int p) {
  const Weight& lambda = highest_weight();
  for (int i = 0; i < lambda.rank(); ++i)
    if (lambda[i] >= p)
      throw precondition_error("irreducible character needs a p-restricted highest weight");
  FormalCharacter out;
  for (const auto& [w, m] : weyl_character().mult) {
    Int r = irreducible_mult(w, p);
    if (r > 0) out.mult.emplace(w, r);
  }
  return out;
}

bool in_span_mod_radical(VermaContext& ctx, const std::vector<VermaElement>& span,
                         const VermaElement& target, const Weight& mu, Int p) {
  // x lies in span(S) + rad iff the form functional of x on the full weight
  // space is an F_p-combination of the functionals of S.
  const std::vector<Monomial> all = ctx.monomials_at(mu);
  const int cols = int(all.size());
  IMat rows(int(span.size()) + 1, cols);
  for (int i = 0; i < int(span.size()); ++i)
    for (int j = 0; j < cols; ++j)
      rows(i, j) = mod_reduce(ctx.form(span[std::size_t(i)], ctx.monomial_element(all[std::size_t(j)])), p);
  for (int j = 0; j < cols; ++j)
    rows(int(span.size()), j) = mod_reduce(ctx.form(target, ctx.monomial_element(all[std::size_t(j)])), p);

  IMat without = rows.topRows(int(span.size()));
  const int r0 = echelon_mod_p(without, p);
  const int r1 = echelon_mod_p(rows, p);
  return r0 == r1;
}

int segment_root_index(const ChevalleyAlgebra& alg, int i, int j) {
  const RootSystem& rs = alg.root_system();
  IVec v = IVec::Zero(rs.d_phi);
  for (int k = i; k <= j; ++k) v += rs.simple_roots[k];
  auto idx = alg.index_of(v);
  if (!idx) throw precondition_error("segment is not a root");
  return *idx;
}

VermaElement segment_product(VermaContext& ctx, int i, int j, const std::vector<int>& cuts) {
  std::vector<std::pair<int, int>> blocks;
  int start = i;
  for (int c : cuts) {
    blocks.emplace_back(start, c);
    start = c + 1;
  }
  blocks.emplace_back(start, j);
  VermaElement out = ctx.monomial_element({});
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
    out = ctx.apply_f(segment_root_index(ctx.algebra(), it->first, it->second), out);
  return out;
}

std::vector<std::vector<int>> proper_cut_sequences(int i, int j) {
  std::vector<std::vector<int>> out;
  const int n = j - i;  // candidate cut positions i, ..., j-1
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> cuts;
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) cuts.push_back(i + b);
    out.push_back(std::move(cuts));
  }
  return out;
}

bool dependence_test_two_end(const ChevalleyAlgebra& alg_a, Int a, Int b, Int p) {
  const RootSystem& rs = alg_a.root_system();
  if (rs.type != SimpleType::A || rs.rank < 2)
    throw precondition_error("dependence test lives in type A_l, l >= 2");
  if (a < 1 || b < 1 || a >= p || b >= p)
    throw precondition_error("need 1 <= a, b < p");
  const int l = rs.rank;
  IVec c = IVec::Zero(l);
  c[0] = a;
  c[l - 1] = b;
  VermaContext ctx(alg_a, Weight(c));
  std::vector<VermaElement> gens;
  for (int r = 0; r + 1 < l; ++r) gens.push_back(segment_product(ctx, 0, l - 1, {r}));
  gens.push_back(ctx.monomial_element({segment_root_index(alg_a, 0, l - 1)}));

  const Weight mu = ctx.weight_of({segment_root_index(alg_a, 0, l - 1)});
  const std::vector<Monomial> all = ctx.monomials_at(mu);
  IMat rows(int(gens.size()), int(all.size()));
  for (int i = 0; i < int(gens.size()); ++i)
    for (int j = 0; j < int(all.size()); ++j)
      rows(i, j) = mod_reduce(ctx.form(gens[std::size_t(i)], ctx.monomial_element(all[std::size_t(j)])), p);
  return echelon_mod_p(rows, p) < l;
}

bool frn_membership(const ChevalleyAlgebra& alg_d, const Weight& lambda, Int p, int r) {
  const RootSystem& rs = alg_d.root_system();
  if (rs.type != SimpleType::D) throw precondition_error("frn membership lives in type D");
  const int n = rs.rank - 1;
  if (lambda[n] != 0 || lambda[n - 1] == 0)
    throw precondition_error("frn membership needs a_n != 0 = a_{n+1}");
  for (int i = 0; i < lambda.rank(); ++i)
    if (lambda[i] < 0 || lambda[i] >= p) throw precondition_error("weight must be p-restricted");
  if (r < 1 || r > n - 1) throw precondition_error("need 1 <= r <= n-1");

  VermaContext ctx(alg_d, lambda);
  const int i0 = r - 1, j0 = n - 1;  // zero-based segment [r, n]
  std::vector<VermaElement> span;
  for (const auto& cuts : proper_cut_sequences(i0, j0)) span.push_back(segment_product(ctx, i0, j0, cuts));
  VermaElement target = ctx.monomial_element({segment_root_index(alg_d, i0, j0)});
  return in_span_mod_radical(ctx, span, target, ctx.weight_of({segment_root_index(alg_d, i0, j0)}), p);
}

namespace {

bool p_restricted(const Weight& w, Int p) {
  return (w.coeffs.array() >= 0).all() && (w.coeffs.array() < p).all();
}

}  // namespace

Int irreducible_weight_mult(const ChevalleyAlgebra& alg, const Weight& eta, const Weight& zeta,
                            Int p, const OracleOptions& opts) {
  const RootSystem& rs = alg.root_system();
  if (!eta.is_dominant()) throw precondition_error("highest weight must be dominant");
  Weight rep = zeta.is_dominant() ? zeta : eps_to_weight(rs, to_dominant(rs, weight_to_eps(rs, zeta)).vec);
  if (!dominance_le(rs, rep, eta)) return 0;
  if (p_restricted(eta, p)) {
    WeylRealization real(alg, eta, opts, /*full=*/false);
    if (real.weyl_character().at(rep) == 0) return 0;
    return real.irreducible_mult(rep, p);
  }
  // Steinberg: L(eta) = L(eta0) (x) L(eta1)^[p]
  IVec low(eta.rank()), high(eta.rank());
  for (int i = 0; i < eta.rank(); ++i) {
    low[i] = eta[i] % p;
    high[i] = eta[i] / p;
  }
  const Weight eta0(low), eta1(high);
  WeylRealization frob(alg, eta1, opts, /*full=*/false);
  Int total = 0;
  for (const auto& [kappa_dom, m1] : frob.irreducible_character(p).mult) {
    for (const IVec& kv : orbit_of(rs, weight_to_eps(rs, kappa_dom))) {
      Weight kappa = eps_to_weight(rs, kv);
      Weight inner(IVec(rep.coeffs - p * kappa.coeffs));
      total += m1 * irreducible_weight_mult(alg, eta0, inner, p, opts);
    }
  }
  return total;
}

Int weyl_composition_mult(const ChevalleyAlgebra& alg, const Weight& lambda, const Weight& xi,
                          Int p, const OracleOptions& opts) {
  const RootSystem& rs = alg.root_system();
  if (xi == lambda) return 1;
  if (!dominance_le(rs, xi, lambda)) return 0;
  std::vector<Weight> interval = dominant_interval(rs, xi, lambda);
  std::sort(interval.begin(), interval.end(), [&](const Weight& a, const Weight& b) {
    Int ha = height_between(rs, a, lambda), hb = height_between(rs, b, lambda);
    if (ha != hb) return ha < hb;
    return WeightLess{}(a, b);
  });
  FormalCharacter weyl = freudenthal(rs, lambda, opts.weight_limit);
  std::map<Weight, Int, WeightLess> mult;  // [V(lambda) : L(eta)]
  for (const Weight& eta : interval) {
    if (eta == lambda) {
      mult[eta] = 1;
      continue;
    }
    Int m = weyl.at(eta);
    for (const Weight& above : interval) {
      if (above == eta || !dominance_le(rs, eta, above)) continue;
      auto it = mult.find(above);
      if (it == mult.end() || it->second == 0) continue;
      m -= it->second * irreducible_weight_mult(alg, above, eta, p, opts);
    }
    if (m < 0) throw arithmetic_error("negative composition multiplicity computed");
    mult[eta] = m;
  }
  return mult.at(xi);
}

Int levi_irreducible_mult(const RootSystem& parent, const Weight& hw, const Weight& target,
                          Int p, const OracleOptions& opts) {
  auto coords = simple_coords(parent, IVec(hw.coeffs - target.coeffs));
  if (!coords || (coords->array() < 0).any())
    throw precondition_error("target must lie under the highest weight");
  std::vector<int> nodes;
  for (int i = 0; i < parent.rank; ++i)
    if ((*coords)[i] != 0) nodes.push_back(i);
  if (nodes.empty()) return 1;

  Int result = 1;
  for (const LeviComponent& comp : levi_components(parent, nodes)) {
    Weight sub_hw = restrict_to_component(comp, hw);
    IVec sub_drop(comp.sub.rank);
    for (int i = 0; i < comp.sub.rank; ++i) sub_drop[i] = (*coords)[comp.node_map[i]];
    // Subtract the dropped roots inside the component.
    IVec sub_target = sub_hw.coeffs;
    for (int i = 0; i < comp.sub.rank; ++i)
      for (int j = 0; j < comp.sub.rank; ++j) sub_target[j] -= sub_drop[i] * comp.sub.cartan(i, j);
    ChevalleyAlgebra alg(comp.sub);
    result *= irreducible_weight_mult(alg, sub_hw, Weight(sub_target), p, opts);
    if (result == 0) break;
  }
  return result;
}

}  // namespace weylkit
