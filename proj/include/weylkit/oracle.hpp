#pragma once

/*
  Brute-force ground truth for weight multiplicities in irreducible modules.

  The engine realizes vectors of the Verma module M(lambda) symbolically:
  an element is an exact integer combination of PBW monomials
  f_{g_1} ... f_{g_k} v+ (positive roots, non-increasing in the fixed
  height-lex order).  Applying e's and f's is straightening against the
  Chevalley structure constants; the contravariant (Shapovalov) form is
  <f_(m) v+, x v+> = coefficient of v+ in  e-reversal(m) . x v+.

  For a p-restricted highest weight the images of the PBW monomials span
  each weight space of L(lambda) over K, so

      dim L(lambda)_mu = rank over F_p of the monomial Gram matrix at mu,

  while the rank over Q recovers the Weyl-module multiplicity (the Gram
  matrices are computed over Z, so both ranks come from one matrix).
  Membership questions "x in span(S) inside L(lambda)" reduce to row-rank
  comparisons of the matrices of form functionals, since the radical of the
  form is exactly the maximal submodule.

  Weights that are not p-restricted are handled through the Steinberg
  factorization L(h0 + p h1) = L(h0) (x) L(h1)^[p] when a multiplicity in
  such an irreducible is required.
*/

#include "weylkit/characters.hpp"
#include "weylkit/chevalley.hpp"

#include <map>
#include <memory>
#include <vector>

namespace weylkit {

using Monomial = std::vector<int>;  // positive-root indices, non-increasing
using VermaElement = std::map<Monomial, ZInt>;

class VermaContext {
 public:
  VermaContext(const ChevalleyAlgebra& alg, Weight lambda);

  const ChevalleyAlgebra& algebra() const { return *alg_; }
  const Weight& highest_weight() const { return lambda_; }

  VermaElement monomial_element(const Monomial& m) const { return {{m, ZInt(1)}}; }
  VermaElement apply_f(int pos_root, const VermaElement& x) const;
  VermaElement apply_e(int pos_root, const VermaElement& x) const;

  ZInt form(const Monomial& a, const Monomial& b) const;
  ZInt form(const VermaElement& a, const VermaElement& b) const;

  Weight weight_of(const Monomial& m) const;
  // All PBW monomials of weight mu (empty when mu is not under lambda).
  std::vector<Monomial> monomials_at(const Weight& mu) const;

 private:
  VermaElement insert_f(int pos_root, const Monomial& m) const;
  VermaElement expand_e(int pos_root, const Monomial& m) const;
  int intern(const Monomial& m) const;

  const ChevalleyAlgebra* alg_;
  Weight lambda_;
  IVec lambda_eps_;
  mutable std::map<Monomial, int> ids_;
  mutable std::vector<const Monomial*> by_id_;
  mutable std::map<std::pair<int, int>, VermaElement> f_memo_, e_memo_;
  mutable std::map<std::pair<int, int>, ZInt> form_memo_;
};

struct WeightSpaceData {
  std::vector<Monomial> monomials;
  ZMat gram;   // symmetric, integer
  int rank_q;  // = Weyl-module multiplicity (checked against Freudenthal)
};

struct OracleOptions {
  ZInt dim_bound = 20000;             // Weyl-dimension ceiling for full realizations
  std::size_t weight_limit = default_weight_limit;
};

class WeylRealization {
 public:
  // full = true enforces the dimension bound up front (whole-module use);
  // full = false computes single weight spaces on demand with no bound.
  WeylRealization(const ChevalleyAlgebra& alg, Weight lambda, OracleOptions opts = {},
                  bool full = true);

  const ChevalleyAlgebra& algebra() const { return verma_.algebra(); }
  const Weight& highest_weight() const { return verma_.highest_weight(); }
  VermaContext& verma() { return verma_; }

  const FormalCharacter& weyl_character();
  // Weight-space data at the dominant representative of mu.
  const WeightSpaceData& weight_space(const Weight& mu);

  // dim L(lambda)_mu over F_p (lambda must be p-restricted).
  Int irreducible_mult(const Weight& mu, Int p);
  ZInt irreducible_dim(Int p);
  FormalCharacter irreducible_character(Int p);

 private:
  VermaContext verma_;
  OracleOptions opts_;
  std::map<Weight, WeightSpaceData, WeightLess> spaces_;
  std::map<Weight, Int, WeightLess> heights_;  // lazy: freudenthal support
  FormalCharacter weyl_char_;
  bool have_weyl_char_ = false;
};

// True iff target v+ lies in span(S) + rad(lambda) at its weight, i.e. its
// image in L(lambda) lies in the span of the images of S.
bool in_span_mod_radical(VermaContext& ctx, const std::vector<VermaElement>& span,
                         const VermaElement& target, const Weight& mu, Int p);

// Index of the root alpha_i + ... + alpha_j (consecutive simple roots).
int segment_root_index(const ChevalleyAlgebra& alg, int i, int j);

// The paper-ordered product f_{[i,m_1]} f_{[m_1+1,m_2]} ... f_{[m_s+1,j]} v+
// for a strictly increasing cut sequence i <= m_1 < ... < m_s < j.
VermaElement segment_product(VermaContext& ctx, int i, int j, const std::vector<int>& cuts);

// All cut sequences of [i, j] with at least one cut (the spanning family).
std::vector<std::vector<int>> proper_cut_sequences(int i, int j);

// Type A_l, lambda = a fw_1 + b fw_l: decides whether the l spanning vectors
// of the weight space at lambda - (alpha_1 + ... + alpha_l) are linearly
// dependent in L(lambda); equivalent to p | a + b + l - 1.
bool dependence_test_two_end(const ChevalleyAlgebra& alg_a, Int a, Int b, Int p);

// Type D_{n+1}, lambda supported on the first n nodes with a_n != 0:
// membership f_{r,n} v+ in V_{r,n} inside L(lambda), 1 <= r <= n-1.
bool frn_membership(const ChevalleyAlgebra& alg_d, const Weight& lambda, Int p, int r);

// Multiplicity of an arbitrary weight in L(eta) in characteristic p, with
// Steinberg factorization when eta is not p-restricted.
Int irreducible_weight_mult(const ChevalleyAlgebra& alg, const Weight& eta, const Weight& zeta,
                            Int p, const OracleOptions& opts = {});

// Composition multiplicity [V(lambda) : L(xi)] in characteristic p, by the
// unitriangular character solve on the dominance interval.
Int weyl_composition_mult(const ChevalleyAlgebra& alg, const Weight& lambda, const Weight& xi,
                          Int p, const OracleOptions& opts = {});

// Multiplicity of `target` in the parent irreducible L(hw), computed on the
// Levi subsystem supporting hw - target (classical components of rank <= 5).
Int levi_irreducible_mult(const RootSystem& parent, const Weight& hw, const Weight& target,
                          Int p, const OracleOptions& opts = {});

}  // namespace weylkit
