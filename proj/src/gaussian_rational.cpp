#include "polylog/gaussian_rational.hpp"

#include <sstream>

namespace polylog {

namespace {

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r; // cpp_rational prints n or n/d in lowest terms
  return os.str();
}

} // namespace

// Matches the point literal grammar: RAT | RATi | RAT+RATi | RAT-RATi.
std::string GaussianRational::str() const {
  if (im == 0) return rat_str(re);
  std::string imag = rat_str(im < 0 ? Rational(-im) : im) + "i";
  if (re == 0) return (im < 0 ? "-" : "") + imag;
  return rat_str(re) + (im < 0 ? "-" : "+") + imag;
}

} // namespace polylog
