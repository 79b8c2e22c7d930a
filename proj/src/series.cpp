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

#include "arbpulse/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>
#include <Eigen/Core>

#include "arbpulse/errors.hpp"

namespace arbpulse {

using Real = boost::multiprecision::float128;
using Scalar = boost::multiprecision::complex128;
using QMat = Eigen::Matrix<Scalar, 2, 2>;

struct MatrixSeries::Storage {
  std::vector<QMat> coeffs;
};

namespace {

using Taylor = std::vector<Real>;  // truncated scalar power series

const Scalar kI{0, 1};

Real frobenius(const QMat& m) {
  Real sum = 0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) sum += norm(m(r, c));
  }
  return sqrt(sum);
}

Mat2 to_double(const QMat& q) {
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m(r, c) = Complex(q(r, c).real().convert_to<double>(),
                        q(r, c).imag().convert_to<double>());
    }
  }
  return m;
}

QMat to_quad(const Mat2& m) {
  QMat q;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) q(r, c) = Scalar(m(r, c).real(), m(r, c).imag());
  }
  return q;
}

QMat adjoint_of(const QMat& m) {
  QMat out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out(r, c) = conj(m(c, r));
  }
  return out;
}

Taylor taylor_mul(const Taylor& a, const Taylor& b) {
  Taylor out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// (1 + x^2)^alpha
Taylor binomial_in_square(Real alpha, std::size_t degree) {
  Taylor out(degree + 1, 0);
  Real b = 1;
  for (std::size_t m = 0; 2 * m <= degree; ++m) {
    out[2 * m] = b;
    b *= (alpha - static_cast<Real>(m)) / static_cast<Real>(m + 1);
  }
  return out;
}

// cos(u) and sin(u) for a series u with zero constant term.
void cos_sin_nilpotent(const Taylor& u, Taylor& c, Taylor& s) {
  const std::size_t n = u.size();
  c.assign(n, 0);
  s.assign(n, 0);
  c[0] = 1;
  Taylor power(n, 0);
  power[0] = 1;
  Real factorial = 1;
  for (std::size_t j = 1; j < n; ++j) {
    power = taylor_mul(power, u);
    factorial *= static_cast<Real>(j);
    const Real sign = ((j / 2) % 2 == 0) ? Real(1) : Real(-1);
    Taylor& target = (j % 2 == 0) ? c : s;
    for (std::size_t k = 0; k < n; ++k) target[k] += sign * power[k] / factorial;
  }
}

QMat sigma_phi_q(Real phi) {
  QMat m;
  m << Scalar(0), Scalar(cos(phi), -sin(phi)), Scalar(cos(phi), sin(phi)), Scalar(0);
  return m;
}

QMat pauli_z_q() {
  QMat m;
  m << Scalar(1), Scalar(0), Scalar(0), Scalar(-1);
  return m;
}

std::vector<QMat>& coeffs(MatrixSeries& s) { return s.storage().coeffs; }
const std::vector<QMat>& coeffs(const MatrixSeries& s) { return s.storage().coeffs; }

MatrixSeries amplitude_series(const Pulse& p, std::size_t degree) {
  const Real half = Real(p.theta) / 2;
  const QMat sigma = sigma_phi_q(Real(p.phi));
  const QMat id = QMat::Identity();
  MatrixSeries out(degree);
  auto& c = coeffs(out);
  c[0] = Scalar(cos(half)) * id - kI * Scalar(sin(half)) * sigma;
  // C_k = R (-i theta sigma / 2)^k / k!
  const QMat step = -kI * Scalar(half) * sigma;
  for (std::size_t k = 1; k <= degree; ++k) {
    c[k] = c[k - 1] * step / Scalar(static_cast<double>(k));
  }
  return out;
}

MatrixSeries detuning_series(const Pulse& p, std::size_t degree) {
  MatrixSeries out(degree);
  auto& c = coeffs(out);
  if (std::abs(p.theta) < 1e-300) {
    c[0] = QMat::Identity();
    return out;
  }
  // exp(-i v.sigma), v = (theta/2 sigma_phi, h delta Z), |v| = h sqrt(1 + delta^2)
  const Real half = Real(p.theta) / 2;
  const Real h = abs(half);
  const Taylor s = binomial_in_square(Real(0.5), degree);
  const Taylor inv_s = binomial_in_square(Real(-0.5), degree);
  Taylor u = s;
  u[0] = 0;
  for (Real& v : u) v *= h;
  Taylor cu, su;
  cos_sin_nilpotent(u, cu, su);
  const Real ch = cos(h);
  const Real sh = sin(h);
  Taylor cos_r(degree + 1), sin_r(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) {
    cos_r[k] = ch * cu[k] - sh * su[k];
    sin_r[k] = sh * cu[k] + ch * su[k];
  }
  Taylor sinc = taylor_mul(sin_r, inv_s);
  for (Real& v : sinc) v /= h;

  const QMat id = QMat::Identity();
  const QMat planar = Scalar(half) * sigma_phi_q(Real(p.phi));
  const QMat z = Scalar(h) * pauli_z_q();
  for (std::size_t k = 0; k <= degree; ++k) {
    c[k] = Scalar(cos_r[k]) * id - kI * Scalar(sinc[k]) * planar;
    if (k > 0) c[k] -= kI * Scalar(sinc[k - 1]) * z;
  }
  return out;
}

void check_degree(std::size_t degree) {
  if (degree > kMaxSeriesDegree) {
    throw PreconditionError("series degree overflow: " + std::to_string(degree) +
                            " > " + std::to_string(kMaxSeriesDegree));
  }
}

void multiply_into(const std::vector<QMat>& a, const std::vector<QMat>& b,
                   std::vector<QMat>& out) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    QMat sum = QMat::Zero();
    for (std::size_t i = 0; i <= k; ++i) sum.noalias() += a[i] * b[k - i];
    out[k] = sum;
  }
}

}  // namespace

MatrixSeries::MatrixSeries(std::size_t degree) : storage_(std::make_unique<Storage>()) {
  check_degree(degree);
  storage_->coeffs.assign(degree + 1, QMat::Zero());
}

MatrixSeries::MatrixSeries(const MatrixSeries& other)
    : storage_(std::make_unique<Storage>(*other.storage_)) {}
MatrixSeries::MatrixSeries(MatrixSeries&& other) noexcept = default;
MatrixSeries& MatrixSeries::operator=(const MatrixSeries& other) {
  if (this != &other) storage_ = std::make_unique<Storage>(*other.storage_);
  return *this;
}
MatrixSeries& MatrixSeries::operator=(MatrixSeries&& other) noexcept = default;
MatrixSeries::~MatrixSeries() = default;

MatrixSeries MatrixSeries::identity(std::size_t degree) {
  MatrixSeries out(degree);
  coeffs(out)[0] = QMat::Identity();
  return out;
}

MatrixSeries MatrixSeries::from_coefficients(std::span<const Mat2> c) {
  if (c.empty()) throw PreconditionError("series needs at least one coefficient");
  MatrixSeries out(c.size() - 1);
  for (std::size_t k = 0; k < c.size(); ++k) coeffs(out)[k] = to_quad(c[k]);
  return out;
}

std::size_t MatrixSeries::degree() const { return storage_->coeffs.size() - 1; }

Mat2 MatrixSeries::coefficient(std::size_t k) const { return to_double(storage_->coeffs.at(k)); }

double MatrixSeries::coefficient_norm(std::size_t k) const {
  return frobenius(storage_->coeffs.at(k)).convert_to<double>();
}

Mat2 MatrixSeries::evaluate(double x) const {
  QMat acc = QMat::Zero();
  const Scalar q(x);
  for (std::size_t k = storage_->coeffs.size(); k-- > 0;) acc = acc * q + storage_->coeffs[k];
  return to_double(acc);
}

MatrixSeries MatrixSeries::adjoint() const {
  MatrixSeries out(degree());
  for (std::size_t k = 0; k <= degree(); ++k) coeffs(out)[k] = adjoint_of(storage_->coeffs[k]);
  return out;
}

double MatrixSeries::unitarity_defect() const {
  const MatrixSeries product = series_multiply(adjoint(), *this);
  const auto& c = coeffs(product);
  Real worst = frobenius(c[0] - QMat::Identity());
  for (std::size_t k = 1; k < c.size(); ++k) worst = std::max(worst, frobenius(c[k]));
  return worst.convert_to<double>();
}

MatrixSeries series_multiply(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.degree() != b.degree()) {
    throw PreconditionError("series degree mismatch: " + std::to_string(a.degree()) +
                            " vs " + std::to_string(b.degree()));
  }
  MatrixSeries out(a.degree());
  multiply_into(coeffs(a), coeffs(b), coeffs(out));
  return out;
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  return series_multiply(a, b);
}

MatrixSeries pulse_series(const Pulse& p, ErrorKind kind, std::size_t degree) {
  check_degree(degree);
  return kind == ErrorKind::amplitude ? amplitude_series(p, degree)
                                      : detuning_series(p, degree);
}

MatrixSeries sequence_series(std::span<const Pulse> pulses, ErrorKind kind,
                             std::size_t degree) {
  if (pulses.empty()) throw PreconditionError("sequence_series: empty pulse list");
  MatrixSeries acc = pulse_series(pulses.front(), kind, degree);
  MatrixSeries next(degree);
  for (std::size_t i = 1; i < pulses.size(); ++i) {
    const MatrixSeries p = pulse_series(pulses[i], kind, degree);
    multiply_into(coeffs(p), coeffs(acc), coeffs(next));
    std::swap(acc, next);
  }
  return acc;
}

DefectTerm leading_defect(const MatrixSeries& series, const Unitary2& target,
                          double tol) {
  const Mat2 c0 = series.coefficient(0);
  const double mismatch =
      std::min((c0 - target.matrix()).norm(), (c0 + target.matrix()).norm());
  if (mismatch > 1e-12) {
    std::ostringstream msg;
    msg << "leading_defect: series does not start at the target (distance " << mismatch
        << ")";
    throw PreconditionError(msg.str());
  }
  const auto& c = coeffs(series);
  DefectTerm out;
  for (std::size_t n = 1; n < c.size(); ++n) {
    if (series.coefficient_norm(n) <= tol) continue;
    const QMat g = kI * c[n] * adjoint_of(c[0]);
    const QMat herm = (g + adjoint_of(g)) / Scalar(2);
    const Real scale = std::max(Real(1), frobenius(herm));
    const Real anti = frobenius((g - adjoint_of(g)) / Scalar(2));
    const Real trace = abs(herm.trace());
    if (anti > Real(1e-9) * scale || trace > Real(1e-9) * scale) {
      std::ostringstream msg;
      msg << "leading_defect: generator at order " << n
          << " is not Hermitian traceless (anti-Hermitian " << anti.convert_to<double>()
          << ", trace " << trace.convert_to<double>() << ")";
      throw ConstructionError(msg.str());
    }
    out.order = static_cast<int>(n);
    out.generator = to_double(herm - (herm.trace() / Scalar(2)) * QMat::Identity());
    out.a_matrix = 2.0 * out.generator;
    out.pauli = pauli_decompose(out.a_matrix);
    out.norm = out.pauli.norm3();
    return out;
  }
  return out;
}

OrderReport verify_order(std::span<const Pulse> pulses, ErrorKind kind,
                         const Unitary2& target, int claimed, double tol) {
  OrderReport report;
  report.claimed = claimed;
  report.tolerance = tol;
  if (claimed < 0 || pulses.empty()) return report;
  const auto degree = static_cast<std::size_t>(claimed + 1);
  const MatrixSeries series = sequence_series(pulses, kind, degree);
  const Mat2 c0 = series.coefficient(0);
  report.constant_mismatch =
      std::min((c0 - target.matrix()).norm(), (c0 + target.matrix()).norm());
  for (std::size_t k = 1; k <= degree; ++k) {
    report.coefficient_norms.push_back(series.coefficient_norm(k));
    if (report.first_surviving == 0 && series.coefficient_norm(k) > tol) {
      report.first_surviving = static_cast<int>(k);
    }
  }
  if (report.constant_mismatch > 1e-12) return report;
  if (report.first_surviving == 0) {
    report.status = OrderReport::Status::exceeds_claimed;
  } else if (report.first_surviving == claimed + 1) {
    report.status = OrderReport::Status::exact;
  }
  return report;
}

std::string OrderReport::describe() const {
  std::ostringstream out;
  out << "claimed order " << claimed << ": ";
  switch (status) {
    case Status::exact: out << "verified"; break;
    case Status::exceeds_claimed: out << "verified (exceeds claimed order)"; break;
    case Status::failed: out << "FAILED"; break;
  }
  out << "\n  |C_0 -+ target| = " << constant_mismatch << "\n";
  for (std::size_t k = 0; k < coefficient_norms.size(); ++k) {
    out << "  |C_" << k + 1 << "| = " << coefficient_norms[k]
        << (coefficient_norms[k] > tolerance ? "" : "  (cancelled)") << "\n";
  }
  return out.str();
}

}  // namespace arbpulse
