#ifndef QROT_FAREY_HPP
#define QROT_FAREY_HPP

#include <string>
#include <utility>

#include "qrot/laurent.hpp"
#include "qrot/qcore.hpp"

namespace qrot {

// Reduced positive rational; (1, 0) is the formal infinity point.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long r, long long s);  // reduces; rejects nonpositive values

  static Rational infinity() {
    Rational x;
    x.num = 1;
    x.den = 0;
    return x;
  }
  bool is_infinity() const { return den == 0; }

  // Parses "r/s" or a plain integer.  Non-coprime input is reduced silently.
  static Rational parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline bool less_than(const Rational& x, const Rational& y) {
  // valid for den >= 0 with (1,0) as +infinity
  return x.num * y.den < y.num * x.den;
}

// Even-length continued fraction [a_1,...,a_2m], all a_i >= 1.
class RegularCF {
 public:
  explicit RegularCF(Seq a);
  const Seq& terms() const { return a_; }

 private:
  Seq a_;
};

// Negative (Hirzebruch-Jung) continued fraction [[c_1,...,c_k]], all c_i >= 2.
class NegativeCF {
 public:
  explicit NegativeCF(Seq c);
  const Seq& terms() const { return c_; }

 private:
  Seq c_;
};

Rational evaluate(const RegularCF& a);
Rational evaluate(const NegativeCF& c);

// Canonical expansions of x > 1.
RegularCF regular_expansion(const Rational& x);
NegativeCF negative_expansion(const Rational& x);

// (a_1,...,a_2m) -> (a_1+1, 2...2, a_3+2, 2...2, ..., a_2m-1+2, 2...2) with
// a_2i - 1 twos after each odd-position term.  Both expand the same rational.
NegativeCF hirzebruch_convert(const RegularCF& a);
RegularCF hirzebruch_invert(const NegativeCF& c);

// The pair (R, S) with [x]_q = R/S, computed by descending the Stern-Brocot
// tree from the triangle (0/1, 1/1, 1/0) with the weighted mediant rule.
std::pair<LaurentPoly, LaurentPoly> q_rational_farey(const Rational& x);

}  // namespace qrot

#endif  // QROT_FAREY_HPP
