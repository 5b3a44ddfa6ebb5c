#pragma once

/*
  Chevalley basis of the simple Lie algebra attached to a RootSystem:
  root vectors e_alpha (alpha running over the whole root system; f_alpha is
  e_{-alpha}) and the simple coroots h_r = [e_r, f_r].

  The only non-trivial data is the family of structure constants N_{x,y} in
  [e_x, e_y] = N_{x,y} e_{x+y}.  Signs are fixed by the extraspecial-pair
  convention for the height-lex root order: for each non-simple positive
  gamma the pair (alpha, beta), alpha + beta = gamma with alpha minimal, gets
  N = p+1 > 0 (p the down-string length), and every other constant follows
  from antisymmetry, N_{-x,-y} = -N_{x,y}, the cyclic relation
  N_{x,y}/(z,z) = N_{y,z}/(x,x) for x+y+z = 0, and the Jacobi identity.

  Everything downstream treats the algebra through structure_constant() and
  the coroot pairings; no matrices of the adjoint representation are stored.
*/

#include "weylkit/rootsys.hpp"

#include <map>
#include <optional>

namespace weylkit {

class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  int num_pos() const { return n_pos_; }

  // Root indices: [0, n_pos) positive, [n_pos, 2 n_pos) their negatives.
  int neg(int i) const { return i < n_pos_ ? i + n_pos_ : i - n_pos_; }
  bool positive(int i) const { return i < n_pos_; }
  const IVec& root(int i) const { return roots_[i]; }
  std::optional<int> index_of(const IVec& r) const;
  std::optional<int> sum_index(int i, int j) const;

  // N_{x,y}; zero when x + y is not a root.  x + y = 0 is not a valid query.
  Int structure_constant(int i, int j) const;

  // Down-string length p = max{k : beta - k alpha is a root}.
  Int string_down(int alpha, int beta) const;

  // Coroot of root i over the simple coroots (integer coordinates).
  const IVec& coroot_coords(int i) const { return coroot_coords_[i]; }
  // Coroot of root i as a scaled epsilon vector.
  const IVec& coroot_eps(int i) const { return coroot_eps_[i]; }

 private:
  Int npos(int i, int j) const;  // both positive, sum a positive root

  const RootSystem* rs_;
  int n_pos_;
  std::vector<IVec> roots_;
  std::map<IVec, int, LexLess> index_;
  std::vector<std::pair<int, int>> extraspecial_;  // per positive root; (-1,-1) for simples
  std::vector<IVec> coroot_coords_, coroot_eps_;
  mutable std::map<std::pair<int, int>, Int> memo_;
};

// Elements of the algebra as sparse vectors over the Chevalley basis:
// indices [0, 2N) are root vectors, [2N, 2N + rank) the simple coroots.
using LieElement = std::map<int, Int>;

LieElement lie_bracket(const ChevalleyAlgebra& alg, const LieElement& a, const LieElement& b);

// Closure of a generating set under brackets; returns a basis (echelonized
// integer row space) of the spanned subalgebra.
std::vector<LieElement> subalgebra_closure(const ChevalleyAlgebra& alg,
                                           std::vector<LieElement> generators);

// Rational membership of x in the span of basis elements.
bool in_span(const ChevalleyAlgebra& alg, const std::vector<LieElement>& basis,
             const LieElement& x);

}  // namespace weylkit
