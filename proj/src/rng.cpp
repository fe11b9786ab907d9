#include "cellmend/rng.hpp"

#include <cmath>

namespace cellmend::rng {

double SplitMix64::next_gaussian() noexcept {
  const double u1 = next_unit();
  const double u2 = next_unit();
  // u1 is strictly positive, so the log is finite.
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace cellmend::rng
