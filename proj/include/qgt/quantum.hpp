// Copyright 2026 The qgt Authors
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

#ifndef QGT_QUANTUM_HPP_
#define QGT_QUANTUM_HPP_

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qgt {

// Exact state-vector simulation for small systems, dense matrices only.
//
// Conventions used throughout:
//   - qubit i is the i-th tensor factor; qubit 0 is the most significant
//     bit of a basis index, so basis index b of an n-qubit state spells the
//     moves of players 0..n-1 left to right;
//   - bit value 0 means "cooperate" (label C), 1 means "defect" (label D);
//   - no global-phase normalisation is ever applied; comparisons are made
//     on outcome distributions or with equal_up_to_phase().

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 8;
inline constexpr double kNormTol = 1e-9;      // runtime invariant checks
inline constexpr double kUnitaryTol = 1e-9;   // Frobenius ||U*U - I||

// Normalised pure state over n qubits.
struct StateVector {
  int n_qubits = 0;
  CVector amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
};

// Validates dimension (2^n) and normalisation; throws std::invalid_argument.
StateVector make_state(int n_qubits, CVector amplitudes);

// |b> for the given basis index.
StateVector basis_state(int n_qubits, int basis_index);

// Basis label in move letters, e.g. basis_label(3, 5) == "DCD".
std::string basis_label(int n_qubits, int basis_index);

bool is_unitary(const CMatrix& u, double tol = kUnitaryTol);

// Two-parameter strategy of the quantised dilemma; psi extends it to the
// three-angle space. theta in [0, pi]; phi in [0, pi/2] for the
// two-parameter space (up to pi in the three-angle space); psi in [0, pi].
struct EWLStrategy {
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
};

// U(theta, phi, psi) = [[ e^{i phi} cos(t/2),  e^{i psi} sin(t/2)],
//                       [-e^{-i psi} sin(t/2), e^{-i phi} cos(t/2)]].
// C = U(0,0,0), D = U(pi,0,0) = [[0,1],[-1,0]], Q = U(0,pi/2,0) = diag(i,-i).
CMatrix strategy_unitary(const EWLStrategy& s);

CMatrix cooperate_op();  // C
CMatrix defect_op();     // D
CMatrix quantum_op();    // Q

// Entangling operator J(gamma) = exp(i gamma/2 * sum_{i<j} D_i D_j), built
// in closed form as the product of the commuting pairwise factors
// cos(gamma/2) I + i sin(gamma/2) D_i D_j. J(0) = I; gamma = pi/2 is maximal
// entanglement. J commutes with every tensor product of C and D factors,
// which is what embeds the classical game. gamma in [0, pi/2], n >= 2.
CMatrix entangler(double gamma, int n_qubits);

// Applies u to the given target qubits (u has dimension 2^|targets|).
// Targets must be distinct; norm is preserved.
StateVector apply(const CMatrix& u, const StateVector& psi,
                  const std::vector<int>& targets);

// p_b = |amplitude_b|^2. Throws if the state is not normalised.
Eigen::VectorXd outcome_distribution(const StateVector& psi);

// True iff a == c * b for some unit-modulus scalar c, entrywise within tol.
bool equal_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol = 1e-9);

}  // namespace qgt

#endif  // QGT_QUANTUM_HPP_
