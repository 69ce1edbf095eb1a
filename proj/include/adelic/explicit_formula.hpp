#pragma once

// Riemann-Weil explicit formula over Q: the zero-side sum, the geometric
// side (poles, prime powers, archimedean principal value), convolution and
// adjoint on idele-class test functions, the positivity functional, degrees,
// and the vanishing of E-range functions at the zeros.

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adelic/archfactors.hpp"
#include "adelic/characters.hpp"
#include "adelic/spectral.hpp"

namespace adelic::explicit_formula {

using Complex = std::complex<double>;
using characters::DirichletCharacter;
using spectral::ZeroTable;

struct IdeleTestFunction {
    // h on the idele class module group, as a function of x = log|u|
    std::function<Complex(double)> hlog;
    double decay_a = 2.0;   // |h(u)| <= C min(u, 1/u)^A
    double bound_c = 1.0;
    double support_radius = std::numeric_limits<double>::infinity();  // log-support half width
    std::optional<DirichletCharacter> twist;  // even primitive character

    Complex eval_log(double x) const;
    void spot_check_decay() const;

    static IdeleTestFunction gaussian(double sigma, double center);
    // smooth bump exp(-s/(1 - (x/a)^2)) on |x| < a, zero outside
    static IdeleTestFunction log_bump(double a, double sharpness);
};

// hat h(rho) = int h(u) |u|^rho d*u
Complex fourier_hat(const IdeleTestFunction& h, Complex rho, double tol = 1e-11);

struct ExplicitFormulaReport {
    double spectral_side = 0.0;
    double spectral_tail = 0.0;
    double hhat0 = 0.0;
    double hhat1 = 0.0;
    double delta_term = 0.0;      // -log|discriminant|, zero over Q
    double conductor_term = 0.0;  // log(N) h(1) for a twisted formula
    double prime_sum = 0.0;
    double prime_tail = 0.0;
    double arch_term = 0.0;
    std::map<long, double> per_prime;  // leading local contributions
    double geometric_side = 0.0;
    double residual = 0.0;
};

// general discriminant term -log|D| (unit-tested on Q(i) metadata)
double discriminant_term(double abs_discriminant);

// everything on the geometric side of the trace identity
ExplicitFormulaReport geometric_side(const IdeleTestFunction& h);

struct SpectralSum {
    double value = 0.0;
    double tail_bound = 0.0;
};

// sum over tabulated zeros rho = 1/2 +- i gamma of hat h(rho), with a decay
// tail estimate past the table height
SpectralSum spectral_side(const IdeleTestFunction& h, const ZeroTable& zeros,
                          double tail_tol = 1e-3);

// full balance: residual = |spectral - geometric|
ExplicitFormulaReport balance(const IdeleTestFunction& h, const ZeroTable& zeros);

// (f * g)(u) = int f(k) g(k^{-1} u) d*k
IdeleTestFunction convolve(const IdeleTestFunction& f, const IdeleTestFunction& g,
                           double tol = 1e-10);

// f^#(u) = |u|^{-1} conj(f(u^{-1}))
IdeleTestFunction adjoint(const IdeleTestFunction& f);

// spectral side of f * f^#: sum over tabulated zeros of |hat f|^2
double positivity_form(const IdeleTestFunction& f, const ZeroTable& zeros);

struct Degrees {
    Complex degree;    // hat h(1)
    Complex codegree;  // hat h(0)
};

Degrees degrees(const IdeleTestFunction& h);

// E-range data vanish on the zero side: max |F h| over the first k zeros,
// relative to the critical-line scale
struct RadicalReport {
    double max_value = 0.0;
    double line_scale = 0.0;
    double max_relative = 0.0;
};

RadicalReport radical_check(const spectral::TestFunction& xi, const ZeroTable& zeros, int k_max);

}  // namespace adelic::explicit_formula
