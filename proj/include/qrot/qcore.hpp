#ifndef QROT_QCORE_HPP
#define QROT_QCORE_HPP

#include <utility>
#include <vector>

#include "qrot/laurent.hpp"

namespace qrot {

// 2x2 matrix over Z[q, q^-1].
struct Mat2 {
  LaurentPoly a11, a12, a21, a22;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
  }

  LaurentPoly trace() const { return a11 + a22; }
  LaurentPoly det() const { return a11 * a22 - a12 * a21; }

  Mat2 shifted(int d) const {
    return Mat2{a11.shifted(d), a12.shifted(d), a21.shifted(d), a22.shifted(d)};
  }
};

using Seq = std::vector<long long>;

// [n]_q: 1 + q + ... + q^(n-1) for n > 0, 0 for n = 0, and
// -q^-1 - ... - q^-n for n < 0.
LaurentPoly q_integer(long long n);

// Substitution q -> q^-1 (all exponents negated).
LaurentPoly subst_q_inverse(const LaurentPoly& p);

// M+(a_1,...,a_2m)_q: the alternating elementary product with the q^(sum of
// even-indexed a_i) prefactor.  Entries are q K_2m, ~K_{2m-1}, q K_{2m-1},
// ~K_{2m-2}.  Requires even length >= 2 and a_i >= 1.
Mat2 mat_plus(const Seq& a);

// M(c_1,...,c_k)_q: product of [[ [c]_q, -q^(c-1) ], [1, 0]].  Requires k >= 1.
Mat2 mat_minus(const Seq& c);

// K_2m(a_1,...,a_2m)_q.  Extracted from mat_plus; K_0() = 1.
LaurentPoly continuant_K(const Seq& a);

// Same value through the tridiagonal determinant with mixed [a_i]_{q^+-1}
// entries.  Kept as an independent verification route.
LaurentPoly continuant_K_det(const Seq& a);

// E_k(c_1,...,c_k)_q by the last-row three-term recurrence; E_0() = 1.
LaurentPoly continuant_E(const Seq& c);

// Numerator / denominator of [a_1,...,a_2m]_q, i.e. (K_2m(a), K_2m-1(a_2..)).
std::pair<LaurentPoly, LaurentPoly> qcf_regular(const Seq& a);

// (E_k(c), E_k-1(c_2..c_k)).
std::pair<LaurentPoly, LaurentPoly> qcf_negative(const Seq& c);

// Tr M+(a)_q and Tr M(c)_q.
LaurentPoly rotundus_plus(const Seq& a);
LaurentPoly rotundus_minus(const Seq& c);

// Euler-Minding expansions: sum over sets of pairwise disjoint adjacent pairs
// {i,i+1}, each removed pair contributing -q^(c_i - 1) and surviving indices
// contributing [c_j]_q.  The R variant takes pairs cyclically, including
// {k,1} with factor -q^(c_k - 1), and needs k >= 3.  Both are verification
// ops and reject k > 20.
LaurentPoly euler_minding_E(const Seq& c);
LaurentPoly euler_minding_R(const Seq& c);

// The elementary factor R_q = [[q, 1], [0, 1]] with M+(a) = M(c) R_q.
Mat2 r_q_factor();

}  // namespace qrot

#endif  // QROT_QCORE_HPP
