#include "xasim/hadamard.hpp"

#include <algorithm>
#include <cmath>

namespace xasim {

double hadamard_test_p0(Complex expectation, HadamardBasis basis) {
  const double part = basis == HadamardBasis::real_part ? expectation.real()
                                                        : expectation.imag();
  if (std::abs(part) > 1.0 + 1e-9) {
    throw numerical_error("Hadamard-test expectation outside the unit disk");
  }
  return std::clamp(0.5 * (1.0 + part), 0.0, 1.0);
}

double hadamard_test_p0(const StateVector& psi,
                        const std::function<StateVector(const StateVector&)>& u,
                        HadamardBasis basis) {
  const StateVector evolved = u(psi);
  return hadamard_test_p0(overlap(psi, evolved), basis);
}

ShotOutcome hadamard_test_sample(double p0, CounterRng& rng) {
  const int bit = rng.bernoulli(p0) ? 0 : 1;
  return ShotOutcome{bit, 1 - 2 * bit};
}

ShotOutcome hadamard_test_sample(
    const StateVector& psi,
    const std::function<StateVector(const StateVector&)>& u,
    HadamardBasis basis, CounterRng& rng) {
  return hadamard_test_sample(hadamard_test_p0(psi, u, basis), rng);
}

}  // namespace xasim
