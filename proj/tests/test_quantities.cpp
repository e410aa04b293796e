#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "gws/quantities.hpp"
#include "test_common.hpp"

using namespace gws;
using testutil::rel;

TEST_CASE("physical constants carry the pinned values") {
  // hbar v_F to ten significant digits; hbar^2 / 2 m_e to six.
  CHECK(constants::hbar_vF_meV_nm == rel(658.2119569, 1e-10));
  CHECK(constants::hbar2_over_2me_meV_nm2 == rel(38.0998, 1e-6));
  CHECK(constants::v_F_m_per_s == 1.0e6);
  CHECK(constants::v_F_nm_per_s == 1.0e15);
  CHECK(constants::hbar_meV_s == rel(6.582119569e-13, 1e-10));
  // hbar v_F is the product of its stored factors.
  CHECK(constants::hbar_vF_meV_nm ==
        rel(constants::hbar_meV_s * constants::v_F_nm_per_s, 1e-14));
}

TEST_CASE("energy_from_wavevector reference points") {
  const double k1 = 4.96 * std::numbers::pi / 200.0;  // k1 d = 4.96 pi, d = 200 nm
  CHECK(k1 == rel(0.0779115, 1e-6));
  CHECK(energy_from_wavevector(k1, 450.0) == rel(501.28227943788966, 1e-15));
  CHECK(energy_from_wavevector(0.0, 450.0) == 450.0);
  CHECK(energy_from_wavevector(k1, 0.0) == rel(51.282279437889663, 1e-14));
}

TEST_CASE("energy is affine in the wavevector") {
  for (double V : {0.0, 450.0, -120.0}) {
    const double f0 = energy_from_wavevector(0.0, V);
    for (double k : {1e-4, 0.01, 0.0779115, 0.3}) {
      const double fk = energy_from_wavevector(k, V);
      for (double alpha : {0.0, 0.25, 1.0, 3.5}) {
        CHECK(energy_from_wavevector(alpha * k, V) - f0 ==
              doctest::Approx(alpha * (fk - f0)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("wavevector round trip") {
  for (double V : {0.0, 450.0, 500.0}) {
    for (double k : {1e-6, 1e-3, 0.0779115, 0.5}) {
      // the round trip cancels E - V, so the achievable accuracy shrinks
      // with the ratio of E to the kinetic term
      const double E = energy_from_wavevector(k, V);
      const double bound =
          std::max(1e-12, 8.0 * std::numeric_limits<double>::epsilon() * E /
                              (constants::hbar_vF_meV_nm * k));
      CHECK(wavevector_from_energy(E, V) == rel(k, bound));
    }
  }
}
