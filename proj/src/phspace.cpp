#include "ccr/phspace.hpp"

#include "ccr/contract.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ccr {

double det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Mat2 multiply(const Mat2& a, const Mat2& b) {
  Mat2 out{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
  return out;
}

Mat2 transpose(const Mat2& m) { return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}; }

Mat2 rotation(double theta) {
  return {{{std::cos(theta), -std::sin(theta)}, {std::sin(theta), std::cos(theta)}}};
}

Mat2 squeeze(double eta) { return {{{std::exp(eta), 0.0}, {0.0, std::exp(-eta)}}}; }

void GaussianState::validate() const {
  if (covariance[0][1] != covariance[1][0]) throw std::invalid_argument("GaussianState: covariance not symmetric");
  if (!(covariance[0][0] > 0.0) || !(det(covariance) > 0.0)) {
    throw std::invalid_argument("GaussianState: covariance not positive definite");
  }
}

double wigner_eval(const GaussianState& state, double x, double p) {
  const Mat2& s = state.covariance;
  const double d = det(s);
  const double dx = x - state.mean[0];
  const double dp = p - state.mean[1];
  // d^T S^-1 d with S^-1 = adj(S)/det(S)
  const double quad = (s[1][1] * dx * dx - (s[0][1] + s[1][0]) * dx * dp + s[0][0] * dp * dp) / d;
  return std::exp(-0.5 * quad) / (2.0 * std::numbers::pi * std::sqrt(d));
}

GaussianState apply_sp2(const GaussianState& state, const Mat2& m) {
  const double dm = det(m);
  const double scale = std::abs(m[0][0]) + std::abs(m[0][1]) + std::abs(m[1][0]) + std::abs(m[1][1]);
  if (!(std::abs(dm) > 1e-14 * scale * scale)) throw std::invalid_argument("apply_sp2: singular transformation");
  GaussianState out;
  out.mean = {m[0][0] * state.mean[0] + m[0][1] * state.mean[1], m[1][0] * state.mean[0] + m[1][1] * state.mean[1]};
  out.covariance = multiply(multiply(m, state.covariance), transpose(m));
  // Symmetrize the rounding in the off-diagonal.
  const double off = 0.5 * (out.covariance[0][1] + out.covariance[1][0]);
  out.covariance[0][1] = out.covariance[1][0] = off;
  return out;
}

std::vector<WignerSample> wigner_grid(const GaussianState& state, std::span<const double> xs,
                                      std::span<const double> ps, Execution exec) {
  std::vector<WignerSample> out(xs.size() * ps.size());
  const auto nx = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (long i = 0; i < nx; ++i) {
    const double x = xs[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < ps.size(); ++j) {
      out[static_cast<std::size_t>(i) * ps.size() + j] = {x, ps[j], wigner_eval(state, x, ps[j])};
    }
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t k = 0; k < count; ++k) out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  return out;
}

CMatrix flow(const ExactMatrix& generator, double t) {
  return expm(CMatrix::from_exact(generator) * Complex(0.0, -t));
}

double symplectic_residual(const CMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("symplectic_residual: 4x4 matrix required");
  const CMatrix j = CMatrix::from_exact(symplectic_form());
  return max_abs_diff(kernels::matmul_serial(kernels::matmul_serial(m, j), m.transpose()), j);
}

double o32_residual(const CMatrix& g) {
  if (g.rows() != 5 || g.cols() != 5) throw std::invalid_argument("o32_residual: 5x5 matrix required");
  const CMatrix eta = CMatrix::from_exact(o32_metric());
  return max_abs_diff(kernels::matmul_serial(kernels::matmul_serial(g.transpose(), eta), g), eta);
}

CMatrix translate(double a, double b, double c, double d) {
  CMatrix m = CMatrix::identity(5);
  m(0, 4) = a;
  m(1, 4) = b;
  m(2, 4) = c;
  m(3, 4) = -d;
  return m;
}

Affine5Vector apply(const CMatrix& m, const Affine5Vector& v) {
  if (m.rows() != 5 || m.cols() != 5) throw std::invalid_argument("apply: 5x5 matrix required");
  const std::array<double, 5> in{v.xyzt[0], v.xyzt[1], v.xyzt[2], v.xyzt[3], 1.0};
  Affine5Vector out;
  for (std::size_t r = 0; r < 4; ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < 5; ++c) s += m(r, c) * in[c];
    out.xyzt[r] = s.real();
  }
  Complex last = 0.0;
  for (std::size_t c = 0; c < 5; ++c) last += m(4, c) * in[c];
  if (last != Complex(1.0, 0.0)) throw std::invalid_argument("apply: matrix does not preserve the affine component");
  return out;
}

ExactMatrix exp_nilpotent(const ExactMatrix& m) {
  const std::size_t n = m.n();
  ExactMatrix result = ExactMatrix::identity(n);
  ExactMatrix term = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * m * ExactScalar::fraction(1, static_cast<long>(k));
    if (term.is_zero()) return result;
    result += term;
  }
  throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

ExactMatrix translation_exponent(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c,
                                 const ExactScalar& d) {
  const GeneratorFamily p = translation_matrices();
  const ExactMatrix sum = p.matrix("P1") * a + p.matrix("P2") * b + p.matrix("P3") * c + p.matrix("P0") * d;
  return sum * (-ExactScalar::i());
}

double mass_shell(const FourMomentum& p) { return p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3 - p.p0 * p.p0; }

namespace {

const GeneratorFamily& poincare_family() {
  static const GeneratorFamily family = contract_o32();
  return family;
}

FourMomentum lorentz_apply(const std::string& label, const FourMomentum& p, double parameter) {
  const CMatrix g = flow(poincare_family().matrix(label), parameter);
  const std::array<double, 4> in{p.p1, p.p2, p.p3, p.p0};
  std::array<double, 4> out{};
  for (std::size_t r = 0; r < 4; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < 4; ++c) s += g(r, c).real() * in[c];
    out[r] = s;
  }
  return {out[0], out[1], out[2], out[3]};
}

void check_axis(int axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
}

}  // namespace

FourMomentum boost_momentum(const FourMomentum& p, int axis, double rapidity) {
  check_axis(axis);
  return lorentz_apply("K" + std::to_string(axis), p, rapidity);
}

FourMomentum rotate_momentum(const FourMomentum& p, int axis, double angle) {
  check_axis(axis);
  return lorentz_apply("J" + std::to_string(axis), p, angle);
}

}  // namespace ccr
