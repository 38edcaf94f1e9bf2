// Copyright 2026 The gateprune authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "core/statevector.hpp"
#include "helpers.hpp"

using namespace gateprune;

TEST_CASE("hadamard creates the equal superposition") {
  StateVector s(1);
  s = apply_gate(s, GateOp::h(0));
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  CHECK(s.amplitudes()[0].real() == doctest::Approx(inv_sqrt2));
  CHECK(s.amplitudes()[1].real() == doctest::Approx(inv_sqrt2));
}

TEST_CASE("cnot on (|00>+|10>)/sqrt2 builds the Bell pair") {
  StateVector s(2);
  s = apply_gate(s, GateOp::h(0));
  s = apply_gate(s, GateOp::cnot(0, 1));
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  CHECK(std::abs(s.amplitudes()[0]) == doctest::Approx(inv_sqrt2));
  CHECK(std::abs(s.amplitudes()[3]) == doctest::Approx(inv_sqrt2));
  CHECK(std::abs(s.amplitudes()[1]) == doctest::Approx(0.0));
  CHECK(std::abs(s.amplitudes()[2]) == doctest::Approx(0.0));
}

TEST_CASE("phase gate leaves |0> untouched for any angle") {
  for (double theta : {0.0, 0.3, 1.7, -2.9}) {
    StateVector s(1);
    s = apply_gate(s, GateOp::p(0, theta));
    CHECK(s.amplitudes()[0] == cplx{1.0, 0.0});
  }
}

TEST_CASE("gate application rejects out-of-range qubits") {
  StateVector s(2);
  CHECK_THROWS_AS(apply_gate(s, GateOp::h(2)), std::invalid_argument);
  CHECK_THROWS_AS(apply_gate(s, GateOp::cnot(0, 0)), std::invalid_argument);
}

TEST_CASE("empty circuit is the identity") {
  const Circuit c(3);
  const StateVector s = run_statevector(c);
  CHECK(s.amplitudes()[0] == cplx{1.0, 0.0});
}

TEST_CASE("run then dagger returns to the ground state") {
  for (std::uint64_t seed : {11u, 22u, 33u}) {
    Circuit c = testutil::random_circuit(4, 20, seed);
    c.append(dagger(c));
    const StateVector s = run_statevector(c);
    CHECK(std::norm(s.amplitudes()[0]) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("norm is preserved across random circuits") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Circuit c = testutil::random_circuit(5, 40, 1000 + seed);
    CHECK(run_statevector(c).norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("gate unitaries satisfy U^dag U = I") {
  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = rng.uniform() * 2.0 * std::numbers::pi;
    for (const GateOp& g :
         {GateOp::h(0), GateOp::x(0), GateOp::p(0, theta), GateOp::rz(0, theta),
          GateOp::rx(0, theta), GateOp::cnot(0, 1)}) {
      const Eigen::MatrixXcd u = gate_unitary(g);
      const Eigen::MatrixXcd prod = u.adjoint() * u;
      const Eigen::MatrixXcd id =
          Eigen::MatrixXcd::Identity(u.rows(), u.cols());
      CHECK((prod - id).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("known unitaries: H, P(theta), CNOT permutation") {
  const Eigen::MatrixXcd h = gate_unitary(GateOp::h(0));
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  CHECK(h(0, 0).real() == doctest::Approx(inv_sqrt2));
  CHECK(h(1, 1).real() == doctest::Approx(-inv_sqrt2));

  const double theta = 0.7;
  const Eigen::MatrixXcd p = gate_unitary(GateOp::p(0, theta));
  CHECK(p(0, 0) == cplx{1.0, 0.0});
  CHECK(std::abs(p(1, 1) - std::exp(cplx{0.0, theta})) < 1e-15);
  CHECK(std::abs(p(0, 1)) == 0.0);

  // Column images under CNOT: |c=1,t=0> (index 1) <-> |c=1,t=1> (index 3).
  const Eigen::MatrixXcd cx = gate_unitary(GateOp::cnot(0, 1));
  CHECK(cx(0, 0) == cplx{1.0, 0.0});
  CHECK(cx(2, 2) == cplx{1.0, 0.0});
  CHECK(cx(3, 1) == cplx{1.0, 0.0});
  CHECK(cx(1, 3) == cplx{1.0, 0.0});
}

TEST_CASE("matrix path and kernel path agree on random circuits") {
  // Cross-check the fused kernels against explicit 2x2/4x4 multiplication.
  for (std::uint64_t seed : {5u, 6u}) {
    const Circuit c = testutil::random_circuit(3, 15, 900 + seed);
    StateVector fast(3);
    for (const GateOp& g : c.gates) fast = apply_gate(fast, g);

    Eigen::VectorXcd slow = Eigen::VectorXcd::Zero(8);
    slow[0] = 1.0;
    for (const GateOp& g : c.gates) {
      const Eigen::MatrixXcd u = gate_unitary(g);
      Eigen::VectorXcd next = Eigen::VectorXcd::Zero(8);
      for (int i = 0; i < 8; ++i) {
        if (slow[i] == cplx{0.0, 0.0}) continue;
        if (g.arity() == 1) {
          const int q = g.qubits[0];
          const int bit = (i >> q) & 1;
          for (int to = 0; to < 2; ++to) {
            const int j = (i & ~(1 << q)) | (to << q);
            next[j] += u(to, bit) * slow[i];
          }
        } else {
          const int cbit = (i >> g.qubits[0]) & 1;
          const int tbit = (i >> g.qubits[1]) & 1;
          const int in = cbit + 2 * tbit;
          for (int out = 0; out < 4; ++out) {
            if (u(out, in) == cplx{0.0, 0.0}) continue;
            int j = i & ~(1 << g.qubits[0]) & ~(1 << g.qubits[1]);
            j |= (out & 1) << g.qubits[0];
            j |= ((out >> 1) & 1) << g.qubits[1];
            next[j] += u(out, in) * slow[i];
          }
        }
      }
      slow = next;
    }
    for (int i = 0; i < 8; ++i) {
      CHECK(std::abs(fast.amplitudes()[i] - slow[i]) < 1e-12);
    }
  }
}
