#include "adelic/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "adelic/errors.hpp"
#include "adelic/numkernel.hpp"

namespace adelic::explicit_formula {

namespace nk = adelic::numkernel;
using nk::kPi;

Complex IdeleTestFunction::eval_log(double x) const {
    if (std::abs(x) >= support_radius) return {0.0, 0.0};
    return hlog(x);
}

void IdeleTestFunction::spot_check_decay() const {
    for (double x = -10.0; x <= 10.0; x += 0.5) {
        double bound = bound_c * std::exp(-decay_a * std::abs(x));
        if (std::abs(eval_log(x)) > bound * (1.0 + 1e-9))
            throw Error("IdeleTestFunction: declared decay violated at log u = " +
                        std::to_string(x));
    }
}

IdeleTestFunction IdeleTestFunction::gaussian(double sigma, double center) {
    IdeleTestFunction f;
    f.hlog = [sigma, center](double x) {
        double z = (x - center) / sigma;
        return Complex(std::exp(-0.5 * z * z), 0.0);
    };
    f.decay_a = std::max(2.0, 1.5 / sigma);
    f.bound_c =
        std::exp(0.5 * f.decay_a * f.decay_a * sigma * sigma + f.decay_a * std::abs(center));
    return f;
}

IdeleTestFunction IdeleTestFunction::log_bump(double a, double sharpness) {
    IdeleTestFunction f;
    f.hlog = [a, sharpness](double x) {
        double y = x / a;
        if (std::abs(y) >= 1.0) return Complex(0.0, 0.0);
        return Complex(std::exp(-sharpness / (1.0 - y * y) + sharpness), 0.0);
    };
    f.support_radius = a;
    f.decay_a = 2.0;
    f.bound_c = std::exp(2.0 * a);
    return f;
}

namespace {

double window_radius(const IdeleTestFunction& h, double sigma_abs) {
    if (std::isfinite(h.support_radius)) return h.support_radius;
    // |integrand| <= C e^{-(A - |Re rho|) |x|}
    double margin = h.decay_a - sigma_abs;
    if (margin <= 0.05)
        throw ConvergenceError("fourier_hat: Re rho outside the declared decay range");
    return (std::log(h.bound_c + 1.0) + 42.0) / margin;
}

}  // namespace

Complex fourier_hat(const IdeleTestFunction& h, Complex rho, double tol) {
    double r = window_radius(h, std::abs(rho.real()));
    auto f = [&](double x) -> Complex { return h.eval_log(x) * std::exp(rho * x); };
    return nk::integrate_gk(f, -r, r, tol, 20000).value;
}

double discriminant_term(double abs_discriminant) {
    if (!(abs_discriminant >= 1.0)) throw Error("discriminant_term: |D| >= 1 required");
    return -std::log(abs_discriminant);
}

namespace {

std::vector<long> primes_up_to(long n) {
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    std::vector<long> out;
    for (long p = 2; p <= n; ++p) {
        if (!sieve[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (long q = p * p; q <= n; q += p) sieve[static_cast<std::size_t>(q)] = false;
    }
    return out;
}

// cutoff radius for the prime-power sum: log-support or sampled decay
double prime_cutoff(const IdeleTestFunction& h) {
    if (std::isfinite(h.support_radius)) return h.support_radius;
    double x = 1.0;
    int quiet = 0;
    while (x < 16.5) {
        if (std::abs(h.eval_log(x)) + std::abs(h.eval_log(-x)) * std::exp(-x) < 1e-19)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 4) break;
        x += 0.5;
    }
    return x;
}

}  // namespace

ExplicitFormulaReport geometric_side(const IdeleTestFunction& h) {
    ExplicitFormulaReport rep;
    bool twisted = h.twist.has_value() && !h.twist->is_principal();
    const DirichletCharacter* chi = twisted ? &*h.twist : nullptr;
    if (twisted && (chi->conductor() != chi->modulus() || chi->parity() != 1))
        throw Error("geometric_side: twists must be even primitive characters");

    if (!twisted) {
        rep.hhat0 = fourier_hat(h, Complex(0.0, 0.0)).real();
        rep.hhat1 = fourier_hat(h, Complex(1.0, 0.0)).real();
    }
    rep.delta_term = 0.0;  // -log|D| = 0 over Q

    // finite places:
    // sum_p sum_k log p (chi(p^k) h(p^k) + conj chi(p^k) p^{-k} h(p^{-k}))
    double cutoff = prime_cutoff(h);
    long pmax = static_cast<long>(std::exp(std::min(cutoff, 17.0))) + 1;
    double prime_sum = 0.0;
    for (long p : primes_up_to(pmax)) {
        double lp = std::log(static_cast<double>(p));
        double local = 0.0;
        for (int k = 1; k * lp <= cutoff + 1e-9; ++k) {
            double x = k * lp;
            Complex cpk(1.0, 0.0);
            if (twisted) {
                long pk = 1;
                for (int j = 0; j < k; ++j) pk = (pk * (p % chi->modulus())) % chi->modulus();
                cpk = chi->value(pk);
            }
            Complex term = cpk * h.eval_log(x) + std::conj(cpk) * std::exp(-x) * h.eval_log(-x);
            local += lp * term.real();
        }
        if (local != 0.0) rep.per_prime[p] = local;
        prime_sum += local;
    }
    rep.prime_sum = prime_sum;
    // tail over prime powers beyond the cutoff, via psi(x) <= 2x
    double a = h.decay_a;
    rep.prime_tail =
        4.0 * h.bound_c * a / std::max(a - 1.0, 0.5) * std::exp(-(a - 1.0) * cutoff);
    if (std::isfinite(h.support_radius)) rep.prime_tail = 0.0;

    // archimedean term
    if (!twisted) {
        auto hl = [&](double x) { return h.eval_log(x); };
        rep.arch_term = archfactors::real_place_principal_value(hl).real();
        rep.conductor_term = 0.0;
    } else {
        // Mellin-route kernel of the even completed character:
        // (1/2 pi) int hat h(1/2+it) [log pi - Re psi(1/4 + it/2)] dt
        auto kernel = [&](double t) -> Complex {
            Complex phi = fourier_hat(h, Complex(0.5, t), 1e-10);
            double k = nk::kLogPi - nk::digamma(Complex(0.25, 0.5 * t)).real();
            return phi * k;
        };
        double tmax = 40.0;
        while (tmax < 300.0 && std::abs(kernel(tmax)) > 1e-14) tmax += 20.0;
        rep.arch_term =
            nk::integrate_gk(kernel, -tmax, tmax, 1e-10, 20000).value.real() / (2.0 * kPi);
        rep.conductor_term =
            std::log(static_cast<double>(chi->modulus())) * h.eval_log(0.0).real();
    }

    rep.geometric_side = rep.hhat0 + rep.hhat1 - rep.delta_term * h.eval_log(0.0).real() -
                         rep.prime_sum - rep.arch_term + rep.conductor_term;
    return rep;
}

SpectralSum spectral_side(const IdeleTestFunction& h, const ZeroTable& zeros, double tail_tol) {
    zeros.validate();
    if (zeros.ordinates.empty()) throw InsufficientZeros("spectral_side: empty zero table");
    SpectralSum out;
    for (double g : zeros.ordinates) {
        Complex up = fourier_hat(h, Complex(0.5, g));
        Complex dn = fourier_hat(h, Complex(0.5, -g));
        out.value += (up + dn).real();
    }
    double top = zeros.ordinates.back();
    double env = std::abs(fourier_hat(h, Complex(0.5, top))) +
                 std::abs(fourier_hat(h, Complex(0.5, top + 3.0)));
    double density = std::log(std::max(top, 10.0)) / kPi;
    out.tail_bound = 2.0 * env * density * 40.0;
    if (out.tail_bound > tail_tol)
        throw InsufficientZeros("spectral_side: tail bound exceeds the tolerance");
    return out;
}

ExplicitFormulaReport balance(const IdeleTestFunction& h, const ZeroTable& zeros) {
    ExplicitFormulaReport rep = geometric_side(h);
    SpectralSum s = spectral_side(h, zeros);
    rep.spectral_side = s.value;
    rep.spectral_tail = s.tail_bound;
    rep.residual = std::abs(rep.spectral_side - rep.geometric_side);
    return rep;
}

IdeleTestFunction convolve(const IdeleTestFunction& f, const IdeleTestFunction& g, double tol) {
    double rf = std::isfinite(f.support_radius)
                    ? f.support_radius
                    : (std::log(f.bound_c + 1.0) + 42.0) / f.decay_a;
    IdeleTestFunction out;
    auto fl = f, gl = g;
    out.hlog = [fl, gl, rf, tol](double x) -> Complex {
        auto integrand = [&](double y) -> Complex { return fl.eval_log(y) * gl.eval_log(x - y); };
        return nk::integrate_gk(integrand, -rf, rf, tol, 4000).value;
    };
    out.decay_a = std::max(1.0, std::min(f.decay_a, g.decay_a) - 0.1);
    out.bound_c = 4.0 * f.bound_c * g.bound_c * rf;
    if (std::isfinite(f.support_radius) && std::isfinite(g.support_radius))
        out.support_radius = f.support_radius + g.support_radius;
    out.twist = f.twist;
    return out;
}

IdeleTestFunction adjoint(const IdeleTestFunction& f) {
    IdeleTestFunction out;
    auto fl = f;
    out.hlog = [fl](double x) -> Complex { return std::exp(-x) * std::conj(fl.eval_log(-x)); };
    out.decay_a = std::max(1.0, f.decay_a - 1.0);
    out.bound_c = f.bound_c;
    out.support_radius = f.support_radius;
    out.twist = f.twist;
    return out;
}

double positivity_form(const IdeleTestFunction& f, const ZeroTable& zeros) {
    zeros.validate();
    double acc = 0.0;
    for (double g : zeros.ordinates) {
        acc += std::norm(fourier_hat(f, Complex(0.5, g)));
        acc += std::norm(fourier_hat(f, Complex(0.5, -g)));
    }
    return acc;
}

Degrees degrees(const IdeleTestFunction& h) {
    return {fourier_hat(h, Complex(1.0, 0.0)), fourier_hat(h, Complex(0.0, 0.0))};
}

RadicalReport radical_check(const spectral::TestFunction& xi, const ZeroTable& zeros, int k_max) {
    auto rep = spectral::vanishing_check(xi, zeros, k_max);
    RadicalReport out;
    out.line_scale = rep.line_scale;
    for (const auto& row : rep.rows) out.max_value = std::max(out.max_value, row.value);
    out.max_relative = rep.max_relative;
    return out;
}

}  // namespace adelic::explicit_formula
