#pragma once

/*
  Exact-arithmetic primitives shared across the library.

  All weight and root coordinates are integers (a fixed global scaling makes
  every Bourbaki coordinate integral), so the linear algebra layer only ever
  needs exact integer kernels: fraction-free (Bareiss) elimination for ranks
  over Q, and plain Gaussian elimination over F_p.  Big integers come from
  boost::multiprecision; Eigen supplies the dense containers.
*/

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylkit {

using Int = std::int64_t;
using ZInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<ZInt>;

using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<ZInt, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<ZInt, Eigen::Dynamic, Eigen::Dynamic>;

// Error taxonomy; the CLI maps these onto its exit-code contract.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct arithmetic_error : std::logic_error {
  using std::logic_error::logic_error;
};
// Raised when a composition-factor multiplicity cannot be resolved exactly.
struct undetermined_error : std::runtime_error {
  std::string top, factor;
  undetermined_error(std::string msg, std::string top_, std::string factor_)
      : std::runtime_error(std::move(msg)), top(std::move(top_)), factor(std::move(factor_)) {}
};

inline Int checked_div(Int num, Int den, const char* what) {
  if (den == 0 || num % den != 0) throw arithmetic_error(std::string("non-exact division in ") + what);
  return num / den;
}

inline ZInt checked_div(const ZInt& num, const ZInt& den, const char* what) {
  if (den == 0 || num % den != 0) throw arithmetic_error(std::string("non-exact division in ") + what);
  return num / den;
}

// Rank over Q of an integer matrix, by fraction-free Bareiss elimination.
inline int rank_over_q(ZMat m) {
  const int rows = int(m.rows()), cols = int(m.cols());
  int rank = 0;
  ZInt prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / prev;
      m(r, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

inline Int mod_reduce(const ZInt& v, Int p) {
  ZInt r = v % p;
  if (r < 0) r += p;
  return static_cast<Int>(r);
}

inline IMat reduce_mod_p(const ZMat& m, Int p) {
  IMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = mod_reduce(m(i, j), p);
  return out;
}

inline Int inv_mod_p(Int a, Int p) {
  Int t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    Int q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += p;
  return t;
}

// In-place row echelon over F_p; returns the rank.
inline int echelon_mod_p(IMat& m, Int p) {
  const int rows = int(m.rows()), cols = int(m.cols());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m(r, col) % p != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const Int inv = inv_mod_p(((m(rank, col) % p) + p) % p, p);
    for (int c = col; c < cols; ++c) m(rank, c) = ((m(rank, c) % p) * inv % p + p) % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Int f = ((m(r, col) % p) + p) % p;
      if (f == 0) continue;
      for (int c = col; c < cols; ++c) m(r, c) = ((m(r, c) - f * m(rank, c)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline int rank_mod_p(const ZMat& m, Int p) {
  IMat r = reduce_mod_p(m, p);
  return echelon_mod_p(r, p);
}

// p-adic valuation nu_p(m); m must be non-zero.
inline Int nu_p(Int m, Int p) {
  if (m == 0) throw precondition_error("nu_p(0) undefined");
  if (m < 0) m = -m;
  Int v = 0;
  while (m % p == 0) { m /= p; ++v; }
  return v;
}

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace weylkit
