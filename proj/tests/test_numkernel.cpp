#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "adelic/numkernel.hpp"

using namespace adelic::numkernel;

namespace {

constexpr double kGamma = 0.57721566490153286;

// independent check value for zeta(s, a): direct series with the two leading
// tail terms (integral plus half-step); error below |s| (N+a)^{-Re s - 1}
Complex zeta_series_oracle(Complex s, double a, long n_terms = 100000) {
    Complex sum(0.0, 0.0);
    for (long n = n_terms - 1; n >= 0; --n) sum += std::exp(-s * std::log(n + a));
    double w = n_terms + a;
    sum += std::exp((1.0 - s) * std::log(w)) / (s - 1.0);
    sum += 0.5 * std::exp(-s * std::log(w));
    return sum;
}

}  // namespace

TEST_CASE("log_gamma at classical points") {
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-13);
    CHECK(log_gamma({0.5, 0.0}).real() == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
    CHECK(log_gamma({5.0, 0.0}).real() == doctest::Approx(std::log(24.0)).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma({0.0, 0.0}), adelic::PoleError);
    CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), adelic::PoleError);
}

TEST_CASE("log_gamma recurrence in the strip") {
    std::mt19937 rng(20260810);
    std::uniform_real_distribution<double> re(0.1, 10.0), im(-50.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        Complex z(re(rng), im(rng));
        Complex lhs = std::exp(log_gamma(z + 1.0));
        Complex rhs = z * std::exp(log_gamma(z));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    }
}

TEST_CASE("log_gamma branch continuity along a vertical line") {
    // Im log Gamma(1/4 + i t/2) must vary continuously, no 2 pi jumps
    double prev = log_gamma({0.25, 0.0}).imag();
    for (double t = 0.25; t <= 120.0; t += 0.25) {
        double cur = log_gamma({0.25, 0.5 * t}).imag();
        CHECK(std::abs(cur - prev) < 3.0);
        prev = cur;
    }
}

TEST_CASE("digamma special values") {
    CHECK(digamma({1.0, 0.0}).real() == doctest::Approx(-kGamma).epsilon(1e-13));
    // duplication: psi(1/2) = psi(1) - 2 log 2
    CHECK(digamma({0.5, 0.0}).real() ==
          doctest::Approx(-kGamma - 2.0 * std::log(2.0)).epsilon(1e-13));
    // reflection: psi(3/4) - psi(1/4) = pi
    double refl = digamma({0.75, 0.0}).real() - digamma({0.25, 0.0}).real();
    CHECK(refl == doctest::Approx(M_PI).epsilon(1e-13));
    // psi(10) = H_9 - gamma
    double h9 = 7129.0 / 2520.0;
    CHECK(digamma({10.0, 0.0}).real() == doctest::Approx(h9 - kGamma).epsilon(1e-13));
    CHECK_THROWS_AS(digamma({-2.0, 0.0}), adelic::PoleError);
}

TEST_CASE("digamma matches central differences of log_gamma") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(0.3, 20.0), im(-40.0, 40.0);
    double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
        Complex z(re(rng), im(rng));
        Complex fd = (log_gamma(z + h) - log_gamma(z - h)) / (2.0 * h);
        CHECK(std::abs(fd - digamma(z)) < 1e-6);
    }
}

TEST_CASE("digamma on a large-argument grid") {
    // recurrence consistency psi(z+1) = psi(z) + 1/z at |z| close to 100
    for (double im = -90.0; im <= 90.0; im += 30.0) {
        Complex z(40.0, im);
        CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-12);
    }
}

TEST_CASE("hurwitz_zeta examples") {
    CHECK(hurwitz_zeta({2.0, 0.0}, 1.0).real() ==
          doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-12));
    CHECK(hurwitz_zeta({2.0, 0.0}, 0.5).real() ==
          doctest::Approx(M_PI * M_PI / 2.0).epsilon(1e-12));
    // continuation value zeta(0, a) = 1/2 - a
    CHECK(hurwitz_zeta({0.0, 0.0}, 1.0 / 3.0).real() ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    CHECK_THROWS_AS(hurwitz_zeta({1.0, 0.0}, 1.0), adelic::PoleError);
}

TEST_CASE("hurwitz_zeta against the direct series") {
    for (double a : {1.0, 0.5, 0.25, 1.0 / 3.0, 0.9}) {
        for (Complex s : {Complex(2.0, 0.0), Complex(3.0, 5.0), Complex(2.5, -40.0)}) {
            Complex impl = hurwitz_zeta(s, a);
            Complex oracle = zeta_series_oracle(s, a);
            CHECK(std::abs(impl - oracle) <= 1e-10 * (1.0 + std::abs(oracle)));
        }
    }
}

TEST_CASE("hurwitz_zeta high in the critical strip") {
    // functional sanity at s = 1/2 + 400 i through the oracle
    Complex s(0.5, 400.0);
    Complex impl = hurwitz_zeta(s, 1.0);
    long n_terms = 2000000;
    Complex oracle = zeta_series_oracle(s, 1.0, n_terms);
    double oracle_err = std::abs(s) * std::pow(static_cast<double>(n_terms), -1.5);
    CHECK(std::abs(impl - oracle) <= 1e-9 * (1.0 + std::abs(oracle)) + oracle_err);
}

TEST_CASE("quadrature basic integrals") {
    auto expdecay = [](double u) { return Complex(std::exp(-u), 0.0); };
    auto r1 = integrate_adaptive(expdecay, Domain::HalfLine, 0.0, 0.0, 1e-12);
    CHECK(r1.value.real() == doctest::Approx(1.0).epsilon(1e-11));

    auto invsqrt = [](double u) { return Complex(1.0 / std::sqrt(u), 0.0); };
    auto r2 = integrate_tanh_sinh(invsqrt, 0.0, 1.0, 1e-12);
    CHECK(r2.value.real() == doctest::Approx(2.0).epsilon(1e-9));

    // Beta(1/2, 1/2) = pi on the half line
    auto beta = [](double u) { return Complex(1.0 / (std::sqrt(u) * (1.0 + u)), 0.0); };
    auto r3 = integrate_exp_sinh(beta, 1e-12);
    CHECK(r3.value.real() == doctest::Approx(M_PI).epsilon(1e-10));

    auto gauss = [](double x) { return Complex(std::exp(-x * x), 0.0); };
    auto r4 = integrate_line(gauss, 1e-12);
    CHECK(r4.value.real() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));

    auto smooth = [](double x) { return Complex(std::sin(3.0 * x), 0.0); };
    auto r5 = integrate_gk(smooth, 0.0, 2.0, 1e-12);
    CHECK(r5.value.real() == doctest::Approx((1.0 - std::cos(6.0)) / 3.0).epsilon(1e-12));
}

TEST_CASE("quadrature error reporting") {
    auto f = [](double u) { return Complex(1.0 / u, 0.0); };  // not integrable
    CHECK_THROWS_AS(integrate_gk(f, 0.0, 1.0, 1e-10), adelic::ConvergenceError);
}

TEST_CASE("riemann zeta and hardy Z") {
    CHECK(riemann_zeta({2.0, 0.0}).real() == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-12));
    // Z is the rotated zeta: same modulus on the critical line
    for (double t : {5.0, 14.0, 25.0, 100.0}) {
        double z = hardy_z(t);
        double mod = std::abs(riemann_zeta(Complex(0.5, t)));
        CHECK(std::abs(std::abs(z) - mod) < 1e-9 * (1.0 + mod));
    }
}
