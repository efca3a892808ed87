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

#include "qgt/quantum.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qgt {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n));
  }
}

}  // namespace

StateVector make_state(int n_qubits, CVector amplitudes) {
  check_qubit_count(n_qubits);
  if (amplitudes.size() != (1LL << n_qubits)) {
    throw std::invalid_argument("amplitude vector has wrong length");
  }
  if (std::abs(amplitudes.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("state is not normalised");
  }
  return StateVector{n_qubits, std::move(amplitudes)};
}

StateVector basis_state(int n_qubits, int basis_index) {
  check_qubit_count(n_qubits);
  const int dim = 1 << n_qubits;
  if (basis_index < 0 || basis_index >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  CVector amps = CVector::Zero(dim);
  amps[basis_index] = 1.0;
  return StateVector{n_qubits, std::move(amps)};
}

std::string basis_label(int n_qubits, int basis_index) {
  std::string label(n_qubits, 'C');
  for (int q = 0; q < n_qubits; ++q) {
    if ((basis_index >> (n_qubits - 1 - q)) & 1) label[q] = 'D';
  }
  return label;
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

CMatrix strategy_unitary(const EWLStrategy& s) {
  constexpr double pi = std::numbers::pi;
  if (s.theta < 0 || s.theta > pi || s.phi < 0 || s.phi > pi || s.psi < 0 ||
      s.psi > pi) {
    throw std::invalid_argument("strategy angles out of range");
  }
  const double c = std::cos(s.theta / 2), sn = std::sin(s.theta / 2);
  CMatrix u(2, 2);
  u << std::exp(kI * s.phi) * c, std::exp(kI * s.psi) * sn,
      -std::exp(-kI * s.psi) * sn, std::exp(-kI * s.phi) * c;
  return u;
}

CMatrix cooperate_op() { return CMatrix::Identity(2, 2); }

CMatrix defect_op() {
  CMatrix d(2, 2);
  d << 0, 1, -1, 0;
  return d;
}

CMatrix quantum_op() {
  CMatrix q(2, 2);
  q << kI, 0, 0, -kI;
  return q;
}

CMatrix entangler(double gamma, int n_qubits) {
  constexpr double pi = std::numbers::pi;
  if (gamma < 0 || gamma > pi / 2) {
    throw std::invalid_argument("gamma must lie in [0, pi/2]");
  }
  if (n_qubits < 2) {
    throw std::invalid_argument("entangler needs at least 2 qubits");
  }
  check_qubit_count(n_qubits);
  const int dim = 1 << n_qubits;
  const double c = std::cos(gamma / 2), s = std::sin(gamma / 2);
  const CMatrix d = defect_op();

  CMatrix j = CMatrix::Identity(dim, dim);
  for (int a = 0; a < n_qubits; ++a) {
    for (int b = a + 1; b < n_qubits; ++b) {
      // D_a D_b as a full 2^n matrix via Kronecker products.
      CMatrix pair = CMatrix::Identity(1, 1);
      for (int q = 0; q < n_qubits; ++q) {
        const CMatrix& factor = (q == a || q == b) ? d : cooperate_op();
        CMatrix next(pair.rows() * 2, pair.cols() * 2);
        for (int r = 0; r < 2; ++r) {
          for (int cc = 0; cc < 2; ++cc) {
            next.block(r * pair.rows(), cc * pair.cols(), pair.rows(),
                       pair.cols()) = factor(r, cc) * pair;
          }
        }
        pair = std::move(next);
      }
      j = (c * CMatrix::Identity(dim, dim) + kI * s * pair) * j;
    }
  }
  return j;
}

StateVector apply(const CMatrix& u, const StateVector& psi,
                  const std::vector<int>& targets) {
  const int n = psi.n_qubits;
  const int k = static_cast<int>(targets.size());
  if (u.rows() != (1LL << k) || u.cols() != (1LL << k)) {
    throw std::invalid_argument("operator dimension does not match targets");
  }
  std::set<int> unique(targets.begin(), targets.end());
  if (static_cast<int>(unique.size()) != k) {
    throw std::invalid_argument("repeated target qubits");
  }
  for (int t : targets) {
    if (t < 0 || t >= n) throw std::invalid_argument("target qubit out of range");
  }

  // Bit position of qubit q inside a basis index (qubit 0 is the MSB).
  auto bit_of = [n](int q) { return n - 1 - q; };

  const int dim = psi.dim();
  const int subdim = 1 << k;
  CVector out = CVector::Zero(dim);
  for (int base = 0; base < dim; ++base) {
    // Only visit indices whose target bits are all zero; they enumerate
    // each orbit of the targeted subspace once.
    bool skip = false;
    for (int t : targets) {
      if ((base >> bit_of(t)) & 1) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    // Gather the 2^k amplitudes of this orbit, multiply, scatter back.
    for (int row = 0; row < subdim; ++row) {
      int row_index = base;
      for (int tb = 0; tb < k; ++tb) {
        if ((row >> (k - 1 - tb)) & 1) row_index |= 1 << bit_of(targets[tb]);
      }
      Complex acc = 0.0;
      for (int col = 0; col < subdim; ++col) {
        int col_index = base;
        for (int tb = 0; tb < k; ++tb) {
          if ((col >> (k - 1 - tb)) & 1) col_index |= 1 << bit_of(targets[tb]);
        }
        acc += u(row, col) * psi.amplitudes[col_index];
      }
      out[row_index] = acc;
    }
  }
  return StateVector{n, std::move(out)};
}

Eigen::VectorXd outcome_distribution(const StateVector& psi) {
  if (std::abs(psi.amplitudes.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("state is not normalised");
  }
  return psi.amplitudes.cwiseAbs2();
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.n_qubits != b.n_qubits) return false;
  // Align phases on the largest amplitude of a.
  int ref = 0;
  a.amplitudes.cwiseAbs().maxCoeff(&ref);
  if (std::abs(b.amplitudes[ref]) < tol && std::abs(a.amplitudes[ref]) < tol) {
    return (a.amplitudes - b.amplitudes).norm() <= tol;
  }
  if (std::abs(b.amplitudes[ref]) == 0.0) return false;
  const Complex phase = a.amplitudes[ref] / b.amplitudes[ref];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (a.amplitudes - phase * b.amplitudes).norm() <= tol;
}

}  // namespace qgt
