#include "qrot/laurent.hpp"

#include <boost/multiprecision/integer.hpp>

namespace qrot {

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : coeffs_) {
    g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
    if (g == 1) break;
  }
  return g;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = (a == 1);
    if (e == 0) {
      out += a.str();
    } else {
      if (!unit) {
        out += a.str();
        out += "*";
      }
      out += "q";
      if (e != 1) {
        out += "^";
        out += std::to_string(e);
      }
    }
  }
  return out;
}

}  // namespace qrot
