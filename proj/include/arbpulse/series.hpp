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

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "arbpulse/su2.hpp"

namespace arbpulse {

inline constexpr std::size_t kMaxSeriesDegree = 64;
inline constexpr double kDefaultDefectTol = 1e-9;

/// U(x) = sum_k C_k x^k + O(x^{N+1}) with 2x2 complex coefficients.
///
/// Coefficients are stored and multiplied in quadruple precision and rounded
/// to double on the way out.
class MatrixSeries {
 public:
  /// Zero series of the given degree.
  explicit MatrixSeries(std::size_t degree);
  static MatrixSeries identity(std::size_t degree);
  static MatrixSeries from_coefficients(std::span<const Mat2> coeffs);

  MatrixSeries(const MatrixSeries& other);
  MatrixSeries(MatrixSeries&& other) noexcept;
  MatrixSeries& operator=(const MatrixSeries& other);
  MatrixSeries& operator=(MatrixSeries&& other) noexcept;
  ~MatrixSeries();

  std::size_t degree() const;
  /// C_k rounded to double.
  Mat2 coefficient(std::size_t k) const;
  /// Frobenius norm of C_k, computed before rounding.
  double coefficient_norm(std::size_t k) const;
  Mat2 evaluate(double x) const;
  /// Term-wise adjoint, which is the inverse series of a unitary family.
  MatrixSeries adjoint() const;
  /// max_k || sum_{i+j=k} C_i^dagger C_j - [k == 0] I ||.
  double unitarity_defect() const;

  /// Quadruple-precision coefficients; defined in series.cpp only.
  struct Storage;
  const Storage& storage() const { return *storage_; }
  Storage& storage() { return *storage_; }

 private:
  std::unique_ptr<Storage> storage_;
};

/// Truncated Cauchy product; throws PreconditionError on a degree mismatch.
MatrixSeries series_multiply(const MatrixSeries& a, const MatrixSeries& b);
MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);

/// Exact expansion of imperfect_rotation(p) in the error parameter.
MatrixSeries pulse_series(const Pulse& p, ErrorKind kind, std::size_t degree);

/// Ordered product with the same convention as execute_sequence.
MatrixSeries sequence_series(std::span<const Pulse> pulses, ErrorKind kind,
                             std::size_t degree);

/// Leading left defect: U = (I - i G x^n + ...) C_0, with A = 2G.
struct DefectTerm {
  /// First order with a coefficient above tolerance; 0 when defect-free.
  int order = 0;
  Mat2 generator = Mat2::Zero();
  Mat2 a_matrix = Mat2::Zero();
  PauliVector pauli;  // of a_matrix
  double norm = 0.0;  // Euclidean length of pauli's (x, y, z)

  bool defect_free() const { return order == 0; }
};

/// Throws PreconditionError when C_0 is not +-target, ConstructionError when
/// the extracted generator is not Hermitian and traceless.
DefectTerm leading_defect(const MatrixSeries& series, const Unitary2& target,
                          double tol = kDefaultDefectTol);

struct OrderReport {
  enum class Status { exact, exceeds_claimed, failed };

  Status status = Status::failed;
  int claimed = 0;
  /// First coefficient above tolerance (0 if none up to the series degree).
  int first_surviving = 0;
  double tolerance = kDefaultDefectTol;
  /// Norms of C_1 .. C_{claimed+1}.
  std::vector<double> coefficient_norms;
  /// Distance of C_0 from the target.
  double constant_mismatch = 0.0;

  bool passed() const { return status != Status::failed; }
  std::string describe() const;
};

/// Coefficients 1..claimed must vanish; coefficient claimed+1 is expected to
/// survive, and a cancellation there is reported as exceeds_claimed.
OrderReport verify_order(std::span<const Pulse> pulses, ErrorKind kind,
                         const Unitary2& target, int claimed,
                         double tol = kDefaultDefectTol);

}  // namespace arbpulse
