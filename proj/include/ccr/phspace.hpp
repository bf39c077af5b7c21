#pragma once

#include "ccr/catalog.hpp"
#include "ccr/dense.hpp"
#include "ccr/execution.hpp"

#include <array>
#include <span>
#include <vector>

namespace ccr {

using Mat2 = std::array<std::array<double, 2>, 2>;

double det(const Mat2& m);
Mat2 multiply(const Mat2& a, const Mat2& b);
Mat2 transpose(const Mat2& m);

/// Phase-space rotation by theta.
Mat2 rotation(double theta);
/// diag(e^eta, e^-eta).
Mat2 squeeze(double eta);

/// Gaussian Wigner function with mean (x, p) and covariance matrix.
struct GaussianState {
  std::array<double, 2> mean{0.0, 0.0};
  Mat2 covariance{{{0.5, 0.0}, {0.0, 0.5}}};

  /// Oscillator ground state: mean 0, covariance I/2, W = exp(-(x^2 + p^2))/pi.
  static GaussianState ground() { return {}; }
  /// Throws std::invalid_argument unless the covariance is symmetric positive definite.
  void validate() const;
};

double wigner_eval(const GaussianState& state, double x, double p);

/// mean -> M mean, covariance -> M covariance M^T. Throws std::invalid_argument for singular M.
GaussianState apply_sp2(const GaussianState& state, const Mat2& m);

struct WignerSample {
  double x, p, w;
};

/// Evaluates W on the tensor grid xs x ps, row-major in x.
std::vector<WignerSample> wigner_grid(const GaussianState& state, std::span<const double> xs,
                                      std::span<const double> ps, Execution exec = Execution::parallel);

/// Evenly spaced points [lo, hi] inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// exp(-i t G): the real one-parameter flow of a generator in the exp(-i theta G) convention.
CMatrix flow(const ExactMatrix& generator, double t);

/// max |M J M^T - J| for the phase-space symplectic form J on (x1, p1, x2, p2).
double symplectic_residual(const CMatrix& m);
/// max |g^T eta g - eta| for eta = diag(1, 1, 1, -1, -1).
double o32_residual(const CMatrix& g);

/// (x, y, z, t) with the fixed affine fifth component 1.
struct Affine5Vector {
  std::array<double, 4> xyzt{};
};

/// The 5x5 translation matrix: (x, y, z, t, 1) -> (x + a, y + b, z + c, t - d, 1).
CMatrix translate(double a, double b, double c, double d);
Affine5Vector apply(const CMatrix& m, const Affine5Vector& v);

/// Exponential of a nilpotent exact matrix as a terminating series. Throws
/// std::invalid_argument if M^n != 0.
ExactMatrix exp_nilpotent(const ExactMatrix& m);
/// -i (a P1 + b P2 + c P3 + d P0) with the catalog translation generators.
ExactMatrix translation_exponent(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c,
                                 const ExactScalar& d);

struct FourMomentum {
  double p1 = 0.0, p2 = 0.0, p3 = 0.0, p0 = 0.0;
};

/// p1^2 + p2^2 + p3^2 - p0^2.
double mass_shell(const FourMomentum& p);
/// Applies the Lorentz block of exp(-i rapidity K_axis) from the contracted family.
FourMomentum boost_momentum(const FourMomentum& p, int axis, double rapidity);
/// Applies the Lorentz block of exp(-i angle J_axis) from the contracted family.
FourMomentum rotate_momentum(const FourMomentum& p, int axis, double angle);

}  // namespace ccr
