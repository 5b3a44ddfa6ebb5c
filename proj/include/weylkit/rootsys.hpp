#pragma once

/*
  Root-system combinatorics for the simple types A, B, C, D, E6, F4, following
  the Bourbaki planches.

  Coordinates.  Every root, weight and Weyl-vector is held in "epsilon
  coordinates": an integer vector in an ambient Euclidean space of dimension
  d_phi, scaled by the fixed factor eps_scale = 6.  The scaling makes all
  supported coordinates integral (halves occur for B/D spin weights and for
  F4/E6, thirds for E6 fundamental weights).  Type A is realized with the
  usual GL-style lift, fw_i = e_1 + ... + e_i, which keeps coordinates
  integral; only inner products against root-lattice vectors are ever used,
  and those are insensitive to the lift.

  A Weight is the vector of its coefficients over the fundamental weights
  (integers, possibly negative).  Dominance, pairings and the Weyl action are
  all evaluated exactly.

  The Weyl group never gets enumerated.  Classical types act by (signed)
  coordinate permutations, so dominant representatives come from a
  deterministic sort-and-sign-fix; for E6/F4 we descend by simple reflections
  and keep the word.  Orbit sizes use the parabolic stabilizer of a dominant
  weight: |W v| = |W| / |W_J| with J the set of simple roots orthogonal to v.
*/

#include "weylkit/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weylkit {

inline constexpr Int eps_scale = 6;

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F' };

std::string type_name(SimpleType t, int rank);
SimpleType parse_type(const std::string& s);

struct LexLess {
  bool operator()(const IVec& a, const IVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Coefficient vector over the fundamental weights.
struct Weight {
  IVec coeffs;

  Weight() = default;
  explicit Weight(IVec c) : coeffs(std::move(c)) {}
  static Weight zero(int rank) { return Weight(IVec::Zero(rank)); }

  Int operator[](int i) const { return coeffs[i]; }
  int rank() const { return int(coeffs.size()); }
  bool operator==(const Weight& o) const { return coeffs == o.coeffs; }
  bool operator!=(const Weight& o) const { return coeffs != o.coeffs; }
  bool is_zero() const { return coeffs.isZero(); }
  bool is_dominant() const { return (coeffs.array() >= 0).all(); }
  Weight operator+(const Weight& o) const { return Weight(coeffs + o.coeffs); }
  Weight operator-(const Weight& o) const { return Weight(coeffs - o.coeffs); }
};

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const { return LexLess{}(a.coeffs, b.coeffs); }
};

std::string to_string(const Weight& w);

// A Weyl group element, either as a signed permutation of the epsilon
// coordinates (classical types) or as a word in simple reflections (E6/F4).
struct WeylElement {
  // perm[k] = j, sign[k] = +-1  encodes  (w v)[k] = sign[k] * v[j].
  std::vector<int> perm;
  std::vector<int> sign;
  std::vector<int> word;  // simple-root indices, applied left to right
  bool is_perm = true;
  int det = 1;

  static WeylElement identity(int d) {
    WeylElement w;
    w.perm.resize(d);
    w.sign.assign(d, 1);
    for (int i = 0; i < d; ++i) w.perm[i] = i;
    return w;
  }
};

struct RootSystem {
  SimpleType type;
  int rank = 0;
  int d_phi = 0;

  std::vector<IVec> simple_roots;      // epsilon coordinates, scaled
  std::vector<IVec> positive_roots;    // sorted by height, then lex
  std::vector<IVec> fundamental_weights;
  IVec rho;                            // half-sum of positive roots, scaled
  IMat cartan;                         // cartan(i,j) = <alpha_i, alpha_j^vee>
  std::vector<IVec> pos_root_simple_coords;  // coordinates over simple roots
  std::vector<Int> pos_root_height;
  Int long_norm_sq = 0;  // raw scaled (alpha,alpha) of a long root

  std::string name() const { return type_name(type, rank); }
  int num_positive_roots() const { return int(positive_roots.size()); }
};

RootSystem build_root_system(SimpleType type, int rank);

// --- epsilon-space arithmetic ----------------------------------------------

// Raw inner product of scaled vectors (carries a factor eps_scale^2).
inline Int raw_dot(const IVec& a, const IVec& b) { return a.dot(b); }

// <v, alpha^vee> = 2(v,alpha)/(alpha,alpha); exact, throws if v is not in the
// weight lattice relative to alpha.
Int pairing_eps(const IVec& v, const IVec& alpha);

// Pairing of a Weight against the j-th simple root: just the coefficient.
Int pairing(const RootSystem& rs, const Weight& w, int simple_index);
// Pairing of a Weight against an arbitrary root in epsilon coordinates.
Int pairing(const RootSystem& rs, const Weight& w, const IVec& alpha);

IVec weight_to_eps(const RootSystem& rs, const Weight& w);
// Inverse of weight_to_eps on the weight lattice; throws if v is not a weight.
Weight eps_to_weight(const RootSystem& rs, const IVec& v);

// Reflection s_alpha(v) = v - <v,alpha^vee> alpha.
IVec reflect(const IVec& v, const IVec& alpha);

IVec apply(const RootSystem& rs, const WeylElement& w, const IVec& v);

// Coordinates of v over the simple roots, if they are all integers.
std::optional<IVec> root_coords(const RootSystem& rs, const IVec& v);

// Coordinates over the simple roots of a weight given by its fundamental
// weight coefficients, when integral.
std::optional<IVec> simple_coords(const RootSystem& rs, const IVec& coeffs);

// Epsilon realization of a weight known to lie in the root lattice.  For
// type A this is the canonical (sum-free) realization, which the GL-style
// lift of weight_to_eps does not give; use it whenever two epsilon vectors
// are compared across different weights.
IVec root_lattice_eps(const RootSystem& rs, const Weight& diff);

// --- order and orbits -------------------------------------------------------

// mu <= lambda in the dominance order: lambda - mu is a non-negative integer
// combination of simple roots.
bool dominance_le(const RootSystem& rs, const Weight& mu, const Weight& lambda);

bool is_dominant_eps(const RootSystem& rs, const IVec& v);

struct DominantResult {
  IVec vec;        // the dominant representative
  WeylElement w;   // maps the input to it
};

// Unique dominant representative of the W-orbit, with a Weyl element mapping
// the input onto it (unique element when the input is regular).
DominantResult to_dominant(const RootSystem& rs, const IVec& v);

// v is singular iff some reflection fixes it, iff its orbit meets a wall.
bool is_regular(const RootSystem& rs, const IVec& v);

// -w0 lambda; the highest weight of the dual module.
Weight dual_weight(const RootSystem& rs, const Weight& lambda);

// All dominant weights nu with nu <= lambda (lambda must be dominant).
std::vector<Weight> weights_under(const RootSystem& rs, const Weight& lambda,
                                  std::size_t limit = 0);

// Dominant xi with mu <= xi <= lambda.
std::vector<Weight> dominant_interval(const RootSystem& rs, const Weight& mu,
                                      const Weight& lambda);

ZInt weyl_group_order(SimpleType type, int rank);

// |W . v| for dominant v, via the parabolic stabilizer.
ZInt orbit_size(const RootSystem& rs, const Weight& v);

// Full W-orbit of an epsilon vector (breadth-first closure; small orbits only).
std::vector<IVec> orbit_of(const RootSystem& rs, const IVec& v);

// --- Levi subsystems ---------------------------------------------------------

// One irreducible component of the subdiagram spanned by `nodes`.
struct LeviComponent {
  RootSystem sub;
  std::vector<int> node_map;  // node_map[i] = parent simple-root index of sub node i
};

// Splits J into connected components and identifies each with a standard
// Bourbaki system (type, rank, node bijection).
std::vector<LeviComponent> levi_components(const RootSystem& rs, const std::vector<int>& nodes);

// Restriction of a parent weight to one Levi component.
Weight restrict_to_component(const LeviComponent& c, const Weight& parent);

// Height of lambda - mu (sum of root coordinates); requires mu <= lambda.
Int height_between(const RootSystem& rs, const Weight& mu, const Weight& lambda);

}  // namespace weylkit
