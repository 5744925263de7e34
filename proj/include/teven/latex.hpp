#pragma once

#include <string>

#include "teven/formula.hpp"

namespace teven {

std::string latex_rational(const Rational& q);
std::string latex_unipoly(const UniPoly& p, const std::string& var = "k");
std::string latex_multipoly(const MultiPoly& p);

// Full identity in the appendix layout, e.g.
//   \sum\nolimits^{(2)} k_1k_2\, t(2k_1,2k_2) = ... t(2k) + ... \zeta(2)t(2k-2)
std::string latex_formula(const Formula& f);

}  // namespace teven
