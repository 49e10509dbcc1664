#include "qrot/qcore.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qrot {
namespace {

constexpr long long kMaxEntry = 100000;

void check_entry(long long v) {
  if (std::llabs(v) > kMaxEntry)
    throw std::invalid_argument("sequence entry out of supported range");
}

void check_regular(const Seq& a) {
  if (a.empty() || a.size() % 2 != 0)
    throw std::invalid_argument("regular sequence must have even length >= 2");
  for (long long v : a) {
    check_entry(v);
    if (v < 1) throw std::invalid_argument("regular sequence entries must be >= 1");
  }
}

void check_negative(const Seq& c) {
  if (c.empty()) throw std::invalid_argument("negative sequence must be nonempty");
  for (long long v : c) check_entry(v);
}

// [[ [a]_q, q^a ], [1, 0]] or its q^-1 twin for even positions.
Mat2 elementary_plus(long long a, bool inverse) {
  LaurentPoly qa = inverse ? subst_q_inverse(q_integer(a)) : q_integer(a);
  int e = static_cast<int>(inverse ? -a : a);
  return Mat2{qa, q_power(e), LaurentPoly(1), LaurentPoly()};
}

Mat2 elementary_minus(long long c) {
  return Mat2{q_integer(c), -q_power(static_cast<int>(c - 1)), LaurentPoly(1),
              LaurentPoly()};
}

}  // namespace

LaurentPoly q_integer(long long n) {
  check_entry(n);
  LaurentPoly p;
  for (long long i = 0; i < n; ++i) p += q_power(static_cast<int>(i));
  for (long long i = 1; i <= -n; ++i) p -= q_power(static_cast<int>(-i));
  return p;
}

LaurentPoly subst_q_inverse(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(c, -e);
  return r;
}

Mat2 mat_plus(const Seq& a) {
  check_regular(a);
  Mat2 m = elementary_plus(a[0], false);
  long long even_sum = 0;
  for (size_t i = 1; i < a.size(); ++i) {
    m = m * elementary_plus(a[i], i % 2 == 1);
    if (i % 2 == 1) even_sum += a[i];
  }
  return m.shifted(static_cast<int>(even_sum));
}

Mat2 mat_minus(const Seq& c) {
  check_negative(c);
  Mat2 m = elementary_minus(c[0]);
  for (size_t i = 1; i < c.size(); ++i) m = m * elementary_minus(c[i]);
  return m;
}

LaurentPoly continuant_K(const Seq& a) {
  if (a.empty()) return LaurentPoly(1);
  return mat_plus(a).a11.shifted(-1);
}

LaurentPoly continuant_K_det(const Seq& a) {
  if (a.size() % 2 != 0)
    throw std::invalid_argument("continuant_K_det: odd length");
  if (a.empty()) return LaurentPoly(1);
  // Leading principal minors of the tridiagonal matrix with diagonal
  // [a_j]_{q^(+-1)}, superdiagonal q^(+-a_j) and subdiagonal -1.
  LaurentPoly prev2(1), prev1;  // D_{-1} would be 0; D_0 = 1
  prev1 = LaurentPoly(1);
  LaurentPoly cur;
  std::vector<LaurentPoly> d(a.size() + 1);
  d[0] = LaurentPoly(1);
  long long even_sum = 0;
  for (size_t j = 1; j <= a.size(); ++j) {
    const bool inv = (j % 2 == 0);
    if (inv) even_sum += a[j - 1];
    LaurentPoly diag = inv ? subst_q_inverse(q_integer(a[j - 1])) : q_integer(a[j - 1]);
    LaurentPoly term = diag * d[j - 1];
    if (j >= 2) {
      const bool prev_inv = ((j - 1) % 2 == 0);
      int e = static_cast<int>(prev_inv ? -a[j - 2] : a[j - 2]);
      term += q_power(e) * d[j - 2];
    }
    d[j] = term;
  }
  return d[a.size()].shifted(static_cast<int>(even_sum - 1));
}

LaurentPoly continuant_E(const Seq& c) {
  LaurentPoly prev;  // E_{-1} = 0
  LaurentPoly cur(1);  // E_0 = 1
  for (size_t j = 0; j < c.size(); ++j) {
    check_entry(c[j]);
    LaurentPoly next = q_integer(c[j]) * cur;
    if (j >= 1) next -= q_power(static_cast<int>(c[j - 1] - 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::pair<LaurentPoly, LaurentPoly> qcf_regular(const Seq& a) {
  Mat2 m = mat_plus(a);
  return {m.a11.shifted(-1), m.a21.shifted(-1)};
}

std::pair<LaurentPoly, LaurentPoly> qcf_negative(const Seq& c) {
  check_negative(c);
  return {continuant_E(c), continuant_E(Seq(c.begin() + 1, c.end()))};
}

LaurentPoly rotundus_plus(const Seq& a) { return mat_plus(a).trace(); }

LaurentPoly rotundus_minus(const Seq& c) { return mat_minus(c).trace(); }

namespace {

constexpr size_t kMaxEulerMinding = 20;

LaurentPoly euler_minding(const Seq& c, bool cyclic) {
  const size_t k = c.size();
  if (k > kMaxEulerMinding)
    throw std::invalid_argument("euler_minding: k > 20 not supported");
  for (long long v : c) check_entry(v);
  const size_t npairs = cyclic ? k : (k > 0 ? k - 1 : 0);
  std::vector<LaurentPoly> qint(k);
  for (size_t i = 0; i < k; ++i) qint[i] = q_integer(c[i]);

  LaurentPoly total;
  for (unsigned long mask = 0; mask < (1ul << npairs); ++mask) {
    // pair i covers elements i and i+1 (mod k when cyclic)
    if (mask & (mask << 1)) continue;
    if (cyclic) {
      unsigned long rot = ((mask << 1) | (mask >> (k - 1))) & ((1ul << k) - 1);
      if (mask & rot) continue;
    }
    unsigned long covered = 0;
    LaurentPoly term(1);
    bool negative = false;
    for (size_t i = 0; i < npairs; ++i) {
      if (!(mask >> i & 1)) continue;
      covered |= 1ul << i;
      covered |= 1ul << ((i + 1) % k);
      term *= q_power(static_cast<int>(c[i] - 1));
      negative = !negative;
    }
    for (size_t j = 0; j < k; ++j)
      if (!(covered >> j & 1)) term *= qint[j];
    total += negative ? -term : term;
  }
  return total;
}

}  // namespace

LaurentPoly euler_minding_E(const Seq& c) { return euler_minding(c, false); }

LaurentPoly euler_minding_R(const Seq& c) {
  if (c.size() < 3)
    throw std::invalid_argument("euler_minding_R needs k >= 3");
  return euler_minding(c, true);
}

Mat2 r_q_factor() {
  return Mat2{q_var(), LaurentPoly(1), LaurentPoly(), LaurentPoly(1)};
}

}  // namespace qrot
