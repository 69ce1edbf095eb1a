#pragma once

// The distillation pipeline made numerical: lattice summation over n u mod N,
// Mellin transforms in the logarithmic variable, Poisson-type decay residuals,
// factorization of the summed transform through Dirichlet L-functions, the
// vanishing of the distilled transform at the zeros, and the internal
// critical-line zero locator.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adelic/characters.hpp"
#include "adelic/numkernel.hpp"

namespace adelic::spectral {

using Complex = std::complex<double>;
using characters::DirichletCharacter;

// Decay declaration of a radial profile, one bound per end:
//   |f(v)| <= C v^{a0}                         for v <= 1,
//   |f(v)| <= C v^{-a_inf} * extra(v)          for v >= 1,
// where extra is 1 (Polynomial), exp(-rate log^2 v) (LogQuadratic) or
// exp(-rate v) (Exponential). The class drives rigorous truncation bounds
// for the lattice sums.
enum class DecayClass { Polynomial, LogQuadratic, Exponential };

struct RadialEnvelope {
    DecayClass cls = DecayClass::Polynomial;
    double a0 = 1.0;
    double a_inf = 2.0;
    double rate = 0.0;
    double c = 2.0;

    double at(double v) const;
    // bound on sum_{m > n} at(m lambda), valid once n lambda >= 1
    double sum_tail(long n, double lambda) const;
    // log-window [x_min, x_max] outside of which |f(e^x) e^{s x}| < e^{-budget}
    std::pair<double, double> mellin_window(double sigma, double budget) const;
};

// test data on (residue mod level) x R_+^*, in product form f_0 (x) f_infty
struct TestFunction {
    int level = 1;
    std::vector<Complex> residue_weights;        // f_0 on Z/level; {1} at level 1
    std::function<Complex(double)> radial;       // f_infty(lambda), lambda > 0
    RadialEnvelope envelope;
    double strip_beta = 2.0;                     // declared holomorphy strip of the transform

    Complex eval(long residue, double lambda) const;
    // samples the declared decay bound on a log grid; throws on violation
    void spot_check_decay() const;
    // mean of f_0 over all residues (the density of the lattice sum)
    Complex residue_mean() const;

    static TestFunction radial_only(std::function<Complex(double)> f, RadialEnvelope env);
};

struct SumResult {
    Complex value{0.0, 0.0};
    double tail_bound = 0.0;
    long terms = 0;
};

// E(xi)(u, lambda) = sum_{n >= 1} xi(n u mod N, n lambda), adaptively cut
SumResult summation_E(const TestFunction& xi, long u, double lambda, double tol = 1e-14);

// int_0^infty h(lambda) lambda^s d*lambda computed in x = log lambda
numkernel::QuadratureResult mellin_log(const std::function<Complex(double)>& hlog, Complex s,
                                       double x_min, double x_max, double tol = 1e-11);

// Mellin of a radial test function with automatic windowing from the decay
Complex mellin(const TestFunction& h, Complex s, double tol = 1e-11);

struct PoissonRow {
    double lambda = 0.0;
    double residual = 0.0;
};

struct PoissonReport {
    std::vector<PoissonRow> rows;
    double fitted_exponent = 0.0;  // slope of log|r| against log|log lambda|
};

// r(lambda) = E(xi)(u, lambda) - lambda^{-1} mean(f_0) int xi dv
PoissonReport poisson_residual(const TestFunction& xi, long u,
                               const std::vector<double>& lambda_grid);

struct FactorizationResult {
    Complex lhs{0.0, 0.0};  // Mellin of the E-sum
    Complex rhs{0.0, 0.0};  // L(chi_0, s) * finite factor * Mellin(f_infty)
    double diff = 0.0;
};

// Dirichlet L(chi, s) through Hurwitz zeta
Complex dirichlet_l(const DirichletCharacter& chi, Complex s);

// both sides of the homogeneous-distribution factorization at Re s > 1;
// xi must be covariant: f_0(m a) = chi(m) f_0(a) for units m
FactorizationResult l_factorization(const TestFunction& xi, const DirichletCharacter& chi,
                                    Complex s);

struct ZeroTable {
    int modulus = 1;
    int char_index = 0;  // 0 = principal / zeta
    std::vector<double> ordinates;
    std::string source = "internal";
    double accuracy = 1e-8;

    void validate() const;  // strictly increasing, positive
};

// ordinates of zeta zeros with 0 < gamma <= e_max (e_max <= 500), located by
// sign changes of the rotated completed function and refined by bisection
ZeroTable zeta_zeros(double e_max);

// same for a primitive Dirichlet character, via the root-number rotation
ZeroTable dirichlet_zeros(const DirichletCharacter& chi, double e_max);

// completed zeta xi(1/2 + i t) modulus at an ordinate (validation helper)
double completed_zeta_on_line(double t);

ZeroTable zero_table_load(const std::string& path);
void zero_table_save(const ZeroTable& table, const std::string& path);

struct VanishingRow {
    double gamma = 0.0;
    double value = 0.0;  // |F h (s)| at s = 1/2 + i gamma
};

struct VanishingReport {
    std::vector<VanishingRow> rows;
    double line_scale = 0.0;  // max |F h| sampled on the critical line
    double max_relative = 0.0;
};

// options for the distilled transform
struct VanishingOptions {
    bool subtract_pole = true;      // subtract c / lambda (trivial character)
    double extra_halfline = 0.0;    // adds extra * 1_{lambda > 1} / lambda (control)
    double lambda_min = 1e-3;
    double tol = 1e-9;
};

// F h at s = 1/2 + i gamma for the distilled h built from xi; requires the
// vanishing conditions unless a control violation is requested
VanishingReport vanishing_check(const TestFunction& xi, const ZeroTable& zeros, int k_max,
                                const VanishingOptions& opts = {});

// the distilled transform at one point of the critical line
Complex distilled_transform(const TestFunction& xi, Complex s, const VanishingOptions& opts = {});

}  // namespace adelic::spectral
