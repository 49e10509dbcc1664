#ifndef QROT_LAURENT_HPP
#define QROT_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qrot {

using Int = boost::multiprecision::cpp_int;

// Element of Z[q, q^-1].  Sparse map from exponent to coefficient; no zero
// coefficients are ever stored, so the zero polynomial is the empty map and
// equality is plain map equality.  Values are immutable in spirit: every
// operation returns a fresh polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant) {  // NOLINT: implicit on purpose
    if (constant != 0) coeffs_[0] = constant;
  }
  explicit LaurentPoly(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  // c * q^e
  static LaurentPoly monomial(const Int& c, int e) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[e] = c;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  int min_degree() const {
    require_nonzero("min_degree");
    return coeffs_.begin()->first;
  }
  int max_degree() const {
    require_nonzero("max_degree");
    return coeffs_.rbegin()->first;
  }

  Int coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  const std::map<int, Int>& terms() const { return coeffs_; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  // Multiplication by q^d.
  LaurentPoly shifted(int d) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + d] = c;
    return r;
  }

  // Coefficient sequence reversed over [min_degree, max_degree]; the degree
  // span is kept.  Undefined (rejected) for the zero polynomial.
  LaurentPoly mirrored() const {
    require_nonzero("mirror");
    const int lo = min_degree(), hi = max_degree();
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[lo + (hi - e)] = c;
    return r;
  }

  bool is_palindromic() const {
    if (is_zero()) return true;
    return *this == mirrored();
  }

  // Coefficients over the full span (zeros included) weakly rise then fall.
  bool is_unimodal() const {
    if (is_zero()) return true;
    const int lo = min_degree(), hi = max_degree();
    bool falling = false;
    Int prev = coeff(lo);
    for (int e = lo + 1; e <= hi; ++e) {
      Int cur = coeff(e);
      if (cur > prev && falling) return false;
      if (cur < prev) falling = true;
      prev = cur;
    }
    return true;
  }

  bool has_positive_coeffs() const {
    for (const auto& [e, c] : coeffs_)
      if (c <= 0) return false;
    return true;
  }

  // Evaluation at q = 1, i.e. the classical specialization.
  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  // gcd of all coefficients (0 for the zero polynomial).
  Int content() const;

  std::string to_string() const;

 private:
  void add_term(int e, const Int& c) {
    if (c == 0) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  void require_nonzero(const char* op) const {
    if (coeffs_.empty())
      throw std::domain_error(std::string(op) + ": zero polynomial");
  }

  std::map<int, Int> coeffs_;
};

// Convenience: the variable q.
inline LaurentPoly q_var() { return LaurentPoly::monomial(1, 1); }

// q^e
inline LaurentPoly q_power(int e) { return LaurentPoly::monomial(1, e); }

}  // namespace qrot

#endif  // QROT_LAURENT_HPP
