#pragma once

// Special-function and quadrature kernel shared by every numerical module.
// All routines are pure and safe for concurrent use.

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>

#include "adelic/errors.hpp"

namespace adelic::numkernel {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLog2Pi = 1.83787706640934548356065947281123527;
inline constexpr double kLogPi = 1.14472988584940017414342735135305871;

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

// Principal branch of log Gamma, branch-continuous on vertical lines.
// Valid away from the poles at z = 0, -1, -2, ...
Complex log_gamma(Complex z);

// Gamma itself, via exp(log_gamma).
Complex gamma(Complex z);

// Digamma psi(z) = Gamma'(z)/Gamma(z).
Complex digamma(Complex z);

// Hurwitz zeta(s, a) for a in (0,1], Re s >= -2, |Im s| <= 500, s != 1.
// Euler-Maclaurin with the summation shift chosen from |Im s|.
Complex hurwitz_zeta(Complex s, double a);

// Riemann zeta on the same domain (hurwitz_zeta at a = 1).
Complex riemann_zeta(Complex s);

// Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) log pi.
double riemann_siegel_theta(double t);

// Hardy Z(t) = exp(i theta(t)) zeta(1/2 + it); real for real t.
double hardy_z(double t);

using RealFunction = std::function<Complex(double)>;

// Adaptive Gauss-Kronrod 15(7) on [a, b].
QuadratureResult integrate_gk(const RealFunction& f, double a, double b,
                              double tol, int max_intervals = 4000);

// tanh-sinh rule on (a, b); tolerates integrable endpoint singularities.
QuadratureResult integrate_tanh_sinh(const RealFunction& f, double a, double b,
                                     double tol, int max_level = 12);

// exp-sinh rule on (0, infinity); nodes are double-exponential in the
// logarithmic variable, so endpoint singularities like u^{-1/2} and slow
// algebraic tails are both handled.
QuadratureResult integrate_exp_sinh(const RealFunction& f, double tol,
                                    int max_level = 13);

// Double-exponential rule on the whole real line for integrands with
// (at least) exponential decay.
QuadratureResult integrate_line(const RealFunction& f, double tol,
                                int max_level = 13);

enum class Domain { Interval, HalfLine };

// Generic entry point: interval integrals dispatch to Gauss-Kronrod with a
// tanh-sinh fallback, half-line integrals to the exp-sinh rule.
QuadratureResult integrate_adaptive(const RealFunction& f, Domain domain,
                                    double a, double b, double tol);

bool is_finite(Complex z);

}  // namespace adelic::numkernel
