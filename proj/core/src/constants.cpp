#include "gateway/constants.hpp"

namespace gateway {

bool constants_are_valid(const PhysicalConstants& constants) noexcept {
  return constants.hbar > 0.0 && constants.h > 0.0 && constants.k_boltzmann > 0.0 &&
         constants.epsilon0 > 0.0 && constants.c_light > 0.0 && constants.bohr_magneton > 0.0;
}

}  // namespace gateway
