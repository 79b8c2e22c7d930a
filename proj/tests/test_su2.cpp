// Copyright 2026 The arbpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>
#include <vector>

#include "arbpulse/su2.hpp"
#include "oracles.hpp"

using namespace arbpulse;
using namespace arbpulse::testing;

TEST_CASE("ideal rotations match closed forms") {
  CHECK((ideal_rotation({0, 0}).matrix() - Mat2::Identity()).norm() < 1e-15);
  Mat2 minus_ix;
  minus_ix << 0.0, -kI, -kI, 0.0;
  CHECK((ideal_rotation({0, kPi}).matrix() - minus_ix).norm() < 1e-15);
  CHECK((ideal_rotation({kPi / 2, kPi}).matrix() + kI * pauli_y()).norm() < 1e-15);
  for (double phi : {0.0, 0.4, -2.0}) {
    for (double theta : {0.3, kPi, 5.0}) {
      CHECK((ideal_rotation({phi, theta}).matrix() - planar_rotation(phi, theta)).norm() <
            1e-14);
    }
  }
}

TEST_CASE("imperfect rotations") {
  CHECK((imperfect_rotation({0, 2 * kPi}, Amplitude{0}).matrix() + Mat2::Identity()).norm() <
        1e-15);
  CHECK((imperfect_rotation({0, 2 * kPi}, Amplitude{0.5}).matrix() - kI * pauli_x()).norm() <
        1e-15);
  CHECK(distance(imperfect_rotation({0, kPi}, Detuning{0}), ideal_rotation({0, kPi})) < 1e-15);

  SUBCASE("detuning generator") {
    const double theta = 1.3, phi = 0.7, delta = 0.2;
    const double h = std::hypot(theta / 2, std::abs(theta / 2) * delta);
    const double nx = std::cos(phi) * theta / 2 / h, ny = std::sin(phi) * theta / 2 / h,
                 nz = std::abs(theta / 2) * delta / h;
    const Mat2 expected = axis_rotation(nx, ny, nz, 2 * h);
    CHECK(sign_distance(imperfect_rotation({phi, theta}, Detuning{delta}).matrix(), expected) <
          1e-14);
  }
  SUBCASE("degenerate angle executes as identity") {
    const Unitary2 u = imperfect_rotation({0.3, 1e-310}, Detuning{0.4});
    CHECK(distance(u, Unitary2{}) == 0.0);
  }
}

TEST_CASE("distance and fidelity") {
  const Unitary2 r = ideal_rotation({0, kPi});
  CHECK(distance(r, r) == doctest::Approx(0.0));
  CHECK(distance(Unitary2{}, Unitary2::from_matrix(-Mat2::Identity())) < 1e-15);
  // Oracle: ||I - R_0(0.1 pi)||_F for the same-axis difference.
  const double oracle = (Mat2::Identity() - planar_rotation(0, 0.1 * kPi)).norm();
  CHECK(oracle == doctest::Approx(0.2219158345).epsilon(1e-9));
  CHECK(distance(r, ideal_rotation({0, kPi * 1.1})) == doctest::Approx(oracle).epsilon(1e-13));

  CHECK(fidelity(r, r) == doctest::Approx(1.0));
  CHECK(fidelity(Unitary2{}, Unitary2::from_matrix(kI * pauli_x())) < 1e-15);
  const double f_oracle = std::abs((planar_rotation(0, kPi).adjoint() *
                                    planar_rotation(0, 1.1 * kPi))
                                       .trace()) /
                          2;
  CHECK(f_oracle == doctest::Approx(0.9876883406).epsilon(1e-9));
  CHECK(fidelity(r, imperfect_rotation({0, kPi}, Amplitude{0.1})) ==
        doctest::Approx(f_oracle).epsilon(1e-13));
  CHECK(infidelity(r, imperfect_rotation({0, kPi}, Amplitude{0.1})) ==
        doctest::Approx(1 - f_oracle).epsilon(1e-10));
}

TEST_CASE("pauli decomposition") {
  const PauliVector x = pauli_decompose(pauli_x());
  CHECK(std::abs(x.x - 1.0) < 1e-15);
  CHECK(std::abs(x.i) + std::abs(x.y) + std::abs(x.z) < 1e-15);
  CHECK(std::abs(pauli_decompose(Mat2::Identity()).i - 1.0) < 1e-15);
  Mat2 z;
  z << 1.0, 0.0, 0.0, -1.0;
  CHECK(std::abs(pauli_decompose(z).z - 1.0) < 1e-15);

  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    Mat2 m;
    m << Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)),
        Complex(g(rng), g(rng));
    CHECK((pauli_decompose(m).matrix() - m).norm() < 1e-14);
  }
}

TEST_CASE("sequence execution order") {
  Mat2 minus_ix = -kI * pauli_x();
  CHECK((execute_sequence(std::vector<Pulse>{{0, kPi / 2}, {0, kPi / 2}}, Amplitude{0})
             .matrix() -
         minus_ix)
            .norm() < 1e-15);
  // First pulse acts first, i.e. sits rightmost.
  const std::vector<Pulse> two{{0, kPi / 2}, {kPi / 2, kPi / 2}};
  const Mat2 expected = planar_rotation(kPi / 2, kPi / 2) * planar_rotation(0, kPi / 2);
  CHECK(sign_distance(execute_sequence(two, Amplitude{0}).matrix(), expected) < 1e-15);

  for (double eps : {-0.3, 0.05, 0.4}) {
    const double phi = 1.1;
    const std::vector<Pulse> pair{{phi, 2 * kPi}, {-phi, 2 * kPi}};
    const Mat2 toggled =
        planar_rotation(-phi, 2 * kPi * eps) * planar_rotation(phi, 2 * kPi * eps);
    CHECK(sign_distance(execute_sequence(pair, Amplitude{eps}).matrix(), toggled) < 1e-12);
  }
  const Pulse p{0.2, 0.9};
  CHECK(distance(execute_sequence(std::vector<Pulse>{p}, Detuning{0.1}),
                 imperfect_rotation(p, Detuning{0.1})) == 0.0);
}

TEST_CASE("same-axis additivity") {
  for (double a : {0.1, 2.0, -3.0}) {
    for (double b : {0.7, -1.2, 6.0}) {
      const Mat2 prod = ideal_rotation({0.4, a}).matrix() * ideal_rotation({0.4, b}).matrix();
      CHECK((prod - ideal_rotation({0.4, a + b}).matrix()).norm() < 1e-13);
    }
  }
}
