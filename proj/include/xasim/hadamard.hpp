#pragma once

#include <functional>

#include "xasim/rng.hpp"
#include "xasim/statevector.hpp"
#include "xasim/types.hpp"

namespace xasim {

/// Single Hadamard-test shot: measured ancilla bit and its +-1 encoding
/// (0 -> +1, 1 -> -1).
struct ShotOutcome {
  int bit = 0;
  int signed_value = 1;
};

/// W gate on the ancilla: identity reads out Re<U>, S-dagger reads out Im<U>.
enum class HadamardBasis { real_part, imag_part };

/// p0 from an already-computed overlap <psi|U|psi>.
double hadamard_test_p0(Complex expectation, HadamardBasis basis);

/// Analytic ancilla-0 probability of the Hadamard test for unitary action U.
double hadamard_test_p0(const StateVector& psi,
                        const std::function<StateVector(const StateVector&)>& u,
                        HadamardBasis basis);

ShotOutcome hadamard_test_sample(double p0, CounterRng& rng);
ShotOutcome hadamard_test_sample(
    const StateVector& psi,
    const std::function<StateVector(const StateVector&)>& u,
    HadamardBasis basis, CounterRng& rng);

}  // namespace xasim
