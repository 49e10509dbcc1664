#include "qrot/farey.hpp"

#include <numeric>
#include <stdexcept>

namespace qrot {
namespace {

constexpr long long kMaxMagnitude = 1000000000LL;
constexpr int kMaxDescentSteps = 100000;

}  // namespace

Rational::Rational(long long r, long long s) {
  if (r == 1 && s == 0) {
    num = 1;
    den = 0;
    return;
  }
  if (r <= 0 || s <= 0)
    throw std::invalid_argument("rational must be positive (or 1/0)");
  if (r > kMaxMagnitude || s > kMaxMagnitude)
    throw std::invalid_argument("rational out of supported range");
  long long g = std::gcd(r, s);
  num = r / g;
  den = s / g;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    long long r = std::stoll(text.substr(0, slash));
    long long s = std::stoll(text.substr(slash + 1));
    return Rational(r, s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational: " + text);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of supported range: " + text);
  }
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

RegularCF::RegularCF(Seq a) : a_(std::move(a)) {
  if (a_.empty() || a_.size() % 2 != 0)
    throw std::invalid_argument("regular CF needs even length >= 2");
  for (long long v : a_)
    if (v < 1) throw std::invalid_argument("regular CF entries must be >= 1");
}

NegativeCF::NegativeCF(Seq c) : c_(std::move(c)) {
  if (c_.empty())
    throw std::invalid_argument("negative CF needs length >= 1");
  for (long long v : c_)
    if (v < 2) throw std::invalid_argument("negative CF entries must be >= 2");
}

Rational evaluate(const RegularCF& a) {
  // back-to-front: x -> a_i + 1/x
  long long n = 1, d = 0;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    long long n2 = *it * n + d;
    d = n;
    n = n2;
  }
  return Rational(n, d);
}

Rational evaluate(const NegativeCF& c) {
  // back-to-front: x -> c_i - 1/x
  long long n = 1, d = 0;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    long long n2 = *it * n - d;
    d = n;
    n = n2;
  }
  return Rational(n, d);
}

RegularCF regular_expansion(const Rational& x) {
  if (x.is_infinity() || x.num <= x.den)
    throw std::invalid_argument("regular_expansion needs x > 1");
  Seq a;
  long long r = x.num, s = x.den;
  while (s != 0) {
    a.push_back(r / s);
    long long rem = r % s;
    r = s;
    s = rem;
  }
  if (a.size() % 2 != 0) {
    if (a.back() >= 2) {
      a.back() -= 1;
      a.push_back(1);
    } else {
      a.pop_back();
      a.back() += 1;
    }
  }
  return RegularCF(a);
}

NegativeCF negative_expansion(const Rational& x) {
  if (x.is_infinity() || x.num <= x.den)
    throw std::invalid_argument("negative_expansion needs x > 1");
  Seq c;
  long long r = x.num, s = x.den;
  while (true) {
    long long q = (r + s - 1) / s;  // ceil(r/s)
    c.push_back(q);
    long long rem = q * s - r;  // x = q - rem/s with 0 <= rem < s
    if (rem == 0) break;
    r = s;
    s = rem;
  }
  return NegativeCF(c);
}

NegativeCF hirzebruch_convert(const RegularCF& a) {
  const Seq& t = a.terms();
  Seq c;
  for (size_t i = 0; i < t.size(); i += 2) {
    c.push_back(t[i] + (i == 0 ? 1 : 2));
    for (long long j = 0; j < t[i + 1] - 1; ++j) c.push_back(2);
  }
  return NegativeCF(c);
}

RegularCF hirzebruch_invert(const NegativeCF& c) {
  const Seq& t = c.terms();
  Seq a;
  size_t i = 0;
  while (i < t.size()) {
    a.push_back(t[i] - (a.empty() ? 1 : 2));
    ++i;
    long long twos = 0;
    while (i < t.size() && t[i] == 2) {
      ++twos;
      ++i;
    }
    a.push_back(twos + 1);
  }
  return RegularCF(a);
}

std::pair<LaurentPoly, LaurentPoly> q_rational_farey(const Rational& x) {
  if (x.is_infinity()) return {LaurentPoly(1), LaurentPoly()};

  struct Pair {
    LaurentPoly num, den;
  };
  Pair left{LaurentPoly(), LaurentPoly(1)};    // [0/1]_q
  Pair mid{LaurentPoly(1), LaurentPoly(1)};    // [1/1]_q
  Pair right{LaurentPoly(1), LaurentPoly()};   // [1/0]_q
  long long ln = 0, ld = 1, mn = 1, md = 1, rn = 1, rd = 0;

  int e = 0;  // exponent carried by the edge mid--right
  int steps = 0;
  while (!(mn == x.num && md == x.den)) {
    if (++steps > kMaxDescentSteps)
      throw std::invalid_argument("rational too large for Farey descent");
    if (x.num * md < mn * x.den) {
      // left child: parents (left, mid), weight q^1 on the mid side
      Pair next{left.num + mid.num.shifted(1), left.den + mid.den.shifted(1)};
      right = mid;
      rn = mn;
      rd = md;
      mid = next;
      mn += ln;
      md += ld;
      e = 1;
    } else {
      // right child: parents (mid, right), weight q^(e+1) on the right side
      Pair next{mid.num + right.num.shifted(e + 1),
                mid.den + right.den.shifted(e + 1)};
      left = mid;
      ln = mn;
      ld = md;
      mid = next;
      mn += rn;
      md += rd;
      e += 1;
    }
  }
  return {mid.num, mid.den};
}

}  // namespace qrot
