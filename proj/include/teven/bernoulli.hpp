#pragma once

#include "teven/rational.hpp"

namespace teven {

// Bernoulli numbers under the x/(e^x - 1) convention: B_0 = 1, B_1 = -1/2,
// B_i = 0 for odd i >= 3. Backed by a process-wide append-only cache;
// concurrent reads of computed entries are safe, extension is serialized
// internally.
Rational bernoulli(unsigned i);

// beta_i = (2^i - 1) * B_i.
Rational beta(unsigned i);

}  // namespace teven
