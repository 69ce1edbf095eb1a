#include "adelic/archfactors.hpp"

#include <algorithm>
#include <cmath>

#include "adelic/errors.hpp"

namespace adelic::archfactors {

namespace nk = adelic::numkernel;
using nk::kEulerGamma;
using nk::kLog2Pi;
using nk::kLogPi;
using nk::kPi;

void HodgeStructure::validate() const {
    for (const auto& [pq, mult] : hpq) {
        auto [p, q] = pq;
        if (p + q != weight) throw Error("HodgeStructure: p + q must equal the weight");
        if (mult < 0) throw Error("HodgeStructure: negative multiplicity");
        if (h(q, p) != mult) throw Error("HodgeStructure: table not symmetric");
    }
    for (const auto& [p, pm] : hpm) {
        if (2 * p != weight) throw Error("HodgeStructure: h^{p,+-} requires p = q");
        if (pm.first < 0 || pm.second < 0 || pm.first + pm.second != h(p, p))
            throw Error("HodgeStructure: h^{p,+} + h^{p,-} must equal h^{p,p}");
    }
}

int HodgeStructure::betti() const {
    int b = 0;
    for (const auto& [pq, mult] : hpq) b += mult;
    return b;
}

int HodgeStructure::h(int p, int q) const {
    auto it = hpq.find({p, q});
    return it == hpq.end() ? 0 : it->second;
}

HodgeStructure HodgeStructure::point() {
    HodgeStructure h;
    h.weight = 0;
    h.hpq[{0, 0}] = 1;
    h.hpm[0] = {1, 0};
    return h;
}

HodgeStructure HodgeStructure::elliptic_h1() {
    HodgeStructure h;
    h.weight = 1;
    h.hpq[{1, 0}] = 1;
    h.hpq[{0, 1}] = 1;
    return h;
}

HodgeStructure HodgeStructure::middle_h2(int hplus, int hminus) {
    HodgeStructure h;
    h.weight = 2;
    h.hpq[{1, 1}] = hplus + hminus;
    h.hpm[1] = {hplus, hminus};
    return h;
}

Complex log_gamma_factor(Place kind, Complex z) {
    if (kind == Place::Complex) return -z * kLog2Pi + nk::log_gamma(z);
    return -0.5 * std::log(2.0) - 0.5 * z * kLogPi + nk::log_gamma(0.5 * z);
}

Complex gamma_factor(Place kind, Complex z) { return std::exp(log_gamma_factor(kind, z)); }

Complex log_local_factor(const HodgeStructure& h, Place place, Complex z) {
    h.validate();
    Complex acc(0.0, 0.0);
    if (place == Place::Complex) {
        for (const auto& [pq, mult] : h.hpq) {
            auto [p, q] = pq;
            if (mult == 0) continue;
            acc += static_cast<double>(mult) *
                   log_gamma_factor(Place::Complex, z - static_cast<double>(std::min(p, q)));
        }
        return acc;
    }
    for (const auto& [pq, mult] : h.hpq) {
        auto [p, q] = pq;
        if (mult == 0 || p >= q) continue;
        acc += static_cast<double>(mult) *
               log_gamma_factor(Place::Complex, z - static_cast<double>(p));
    }
    for (const auto& [p, pm] : h.hpm) {
        auto [hp, hm] = pm;
        Complex zp = z - static_cast<double>(p);
        if (hp) acc += static_cast<double>(hp) * log_gamma_factor(Place::Real, zp);
        if (hm) acc += static_cast<double>(hm) * log_gamma_factor(Place::Real, zp + 1.0);
    }
    return acc;
}

Complex local_factor(const HodgeStructure& h, Place place, Complex z) {
    return std::exp(log_local_factor(h, place, z));
}

Complex rep_trace(const HodgeStructure& h, const WeilGroupElement& u) {
    if (std::abs(u.w) == 0.0) throw Error("rep_trace: w must be nonzero");
    Complex acc(0.0, 0.0);
    if (u.eps == 0) {
        for (const auto& [pq, mult] : h.hpq) {
            auto [p, q] = pq;
            if (mult == 0) continue;
            acc += static_cast<double>(mult) * std::pow(u.w, -p) * std::pow(std::conj(u.w), -q);
        }
        return acc;
    }
    // w j: off-diagonal on h^{p,q} + h^{q,p} (p != q); on h^{p,p} the trace of
    // i^{2p} (w wbar)^{-p} F_infty is (h^{p,+} - h^{p,-}) (w wbar)^{-p}
    double ww = std::norm(u.w);
    for (const auto& [p, pm] : h.hpm) {
        auto [hp, hm] = pm;
        acc += static_cast<double>(hp - hm) * std::pow(ww, -p);
    }
    return acc;
}

double fiber_integral(int n, double nu) {
    if (!(nu > 0.0)) throw Error("fiber_integral: nu must be positive");
    if (nu == 1.0) throw SingularityError("fiber_integral: pole at nu = 1");
    double f0 = std::min(std::sqrt(nu), 1.0 / std::sqrt(nu));
    return std::pow(f0, std::abs(n)) / std::abs(1.0 - nu);
}

namespace {

// integrand of the cutoff integral in the symmetric log variable:
// (1 - e^{-t x}) cos(s x) e^{-|n| x / 2} / sinh(x / 2), integrated over x > 0
double cutoff_integral(int n, double s, double t) {
    auto f = [&](double x) -> Complex {
        double damp = -std::expm1(-t * x);  // 1 - e^{-t x}
        double val = damp * std::cos(s * x) * std::exp(-0.5 * std::abs(n) * x) /
                     (2.0 * std::sinh(0.5 * x));
        return Complex(val, 0.0);
    };
    double total = 0.0;
    double breaks[] = {0.0, 1.0 / t, 1.0, 8.0, 80.0};
    for (int i = 0; i < 4; ++i)
        total += nk::integrate_gk(f, breaks[i], breaks[i + 1], 1e-12).value.real();
    return 2.0 * total;
}

}  // namespace

PvResult weil_pv(const PrincipalValueSpec& spec) {
    double a = 0.5 + 0.5 * std::abs(spec.n);
    if (spec.scheme == PvScheme::MinimalSubtraction) {
        // finite parts of int_0^1 and int_1^inf under |1-nu|^{-1+eps}
        Complex psi1 = nk::digamma(Complex(a, spec.s));
        Complex psi2 = nk::digamma(Complex(a, -spec.s));
        PvResult out;
        out.value = 2.0 * kLog2Pi - (psi1 + psi2).real();
        out.error = 1e-12 * (1.0 + std::abs(out.value));
        out.c_estimate = 1.0;
        return out;
    }

    // Weil cutoff: PF_0 = 2 log(2 pi) c + lim_t ( I(t) - 2 c log t ), c = 1
    std::vector<double> ts, cs;
    for (int k = spec.ladder_k_min; k <= spec.ladder_k_max; ++k) {
        double t = std::pow(2.0, k);
        ts.push_back(t);
        cs.push_back(cutoff_integral(spec.n, spec.s, t) - 2.0 * std::log(t));
    }
    if (cs.size() < 4) throw ConvergenceError("weil_pv: ladder too short");

    // the subtracted values converge like a/t; two Richardson stages in 1/t
    std::vector<double> r1(cs.size() - 1), r2;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) r1[i] = 2.0 * cs[i + 1] - cs[i];
    r2.resize(r1.size() - 1);
    for (std::size_t i = 0; i + 1 < r1.size(); ++i) r2[i] = (4.0 * r1[i + 1] - r1[i]) / 3.0;

    PvResult out;
    out.value = 2.0 * kLog2Pi + r2.back();
    out.error = std::abs(r2.back() - r2[r2.size() - 2]) + 1e-10;
    // slope of the raw integrals against 2 log t recovers c
    double i_last = cs.back() + 2.0 * std::log(ts.back());
    double i_prev = cs[cs.size() - 2] + 2.0 * std::log(ts[ts.size() - 2]);
    out.c_estimate = (i_last - i_prev) / (2.0 * (std::log(ts.back()) - std::log(ts[ts.size() - 2])));
    if (out.error > 1e-5) throw ConvergenceError("weil_pv: ladder extrapolation unstable");
    return out;
}

double relative_integral(double s, double tol) {
    auto f = [&](double v) -> Complex {
        // v^{1/2 + i s} / (1 + v) d*v; the imaginary part cancels by v <-> 1/v
        return std::pow(v, Complex(-0.5, s)) / (1.0 + v);
    };
    auto q = nk::integrate_exp_sinh(f, tol);
    return q.value.real();
}

LefschetzResult lefschetzComplexImpl(const HodgeStructure& h, double s, bool halve) {
    h.validate();
    Complex z(0.5 * (1.0 + h.weight), s);
    double lhs = 0.0, rhs = 0.0;
    for (const auto& [pq, mult] : h.hpq) {
        auto [p, q] = pq;
        if (mult == 0) continue;
        PrincipalValueSpec spec;
        spec.n = p - q;
        spec.s = s;
        lhs += mult * weil_pv(spec).value;
        double m = std::min(p, q);
        Complex psi1 = nk::digamma(z - m);
        Complex psi2 = nk::digamma(std::conj(z) - m);
        rhs += mult * (2.0 * kLog2Pi - (psi1 + psi2).real());
    }
    if (halve) {
        lhs *= 0.5;
        rhs *= 0.5;
    }
    return {lhs, rhs, lhs - rhs};
}

LefschetzResult lefschetz_complex(const HodgeStructure& h, double s) {
    return lefschetzComplexImpl(h, s, false);
}

LefschetzResult lefschetz_real(const HodgeStructure& h, double s) {
    h.validate();
    Complex z(0.5 * (1.0 + h.weight), s);
    // C^*-part: half of the complex-place trace integral
    double lhs = 0.5 * lefschetzComplexImpl(h, s, false).lhs;
    // j-part: (k/2) int v^{z-p} / (1+v) d*v over the h^{p,p} eigenvalue split
    double jpart = relative_integral(s);
    for (const auto& [p, pm] : h.hpm) {
        int k = pm.first - pm.second;
        if (k != 0) lhs += 0.5 * k * jpart;
        (void)p;
    }
    double rhs = 0.0;
    for (const auto& [pq, mult] : h.hpq) {
        auto [p, q] = pq;
        if (mult == 0 || p >= q) continue;
        Complex psi1 = nk::digamma(z - static_cast<double>(p));
        rhs += mult * (2.0 * kLog2Pi - 2.0 * psi1.real());
    }
    for (const auto& [p, pm] : h.hpm) {
        auto [hp, hm] = pm;
        Complex zp = z - static_cast<double>(p);
        if (hp) rhs += hp * (kLogPi - nk::digamma(0.5 * zp).real());
        if (hm) rhs += hm * (kLogPi - nk::digamma(0.5 * (zp + 1.0)).real());
    }
    return {lhs, rhs, lhs - rhs};
}

double imlog_derivative(const HodgeStructure& h, Place place, double s) {
    Complex z(0.5 * (1.0 + h.weight), s);
    double acc = 0.0;
    if (place == Place::Complex) {
        for (const auto& [pq, mult] : h.hpq) {
            auto [p, q] = pq;
            if (mult == 0) continue;
            acc += mult * (-kLog2Pi + nk::digamma(z - static_cast<double>(std::min(p, q))).real());
        }
        return acc;
    }
    for (const auto& [pq, mult] : h.hpq) {
        auto [p, q] = pq;
        if (mult == 0 || p >= q) continue;
        acc += mult * (-kLog2Pi + nk::digamma(z - static_cast<double>(p)).real());
    }
    for (const auto& [p, pm] : h.hpm) {
        auto [hp, hm] = pm;
        Complex zp = z - static_cast<double>(p);
        if (hp) acc += hp * (-0.5 * kLogPi + 0.5 * nk::digamma(0.5 * zp).real());
        if (hm) acc += hm * (-0.5 * kLogPi + 0.5 * nk::digamma(0.5 * (zp + 1.0)).real());
    }
    return acc;
}

double zero_count_average(const HodgeStructure& h, const std::vector<Place>& places, double E,
                          int pole_order) {
    if (!(E >= 0.0)) throw Error("zero_count_average: E must be nonnegative");
    h.validate();
    if (E == 0.0) return 0.0;
    double acc = 0.0;
    for (Place v : places) {
        auto kernel = [&](double s) -> Complex { return Complex(imlog_derivative(h, v, s), 0.0); };
        // the integrand is even in s, so the two-sided integral over [-E, E]
        // is twice the one-sided value; one conjugate pair of zeros per unit
        // of (1/pi) int_0^E
        acc += nk::integrate_gk(kernel, 0.0, E, 1e-10).value.real();
    }
    return acc / kPi + pole_order;
}

Complex real_place_principal_value(const std::function<Complex(double)>& hlog, double tol) {
    // <rho_{e_R}, g>, g(lambda) = h(|1+lambda|^{-1}) |1+lambda|^{-1}, with the
    // multiplicative measure du/(2|u|) on R^* and the delta-term fixed by the
    // vanishing of the Fourier transform at 1 relative to e_R(x) = e^{-2 pi i x}
    Complex h1 = hlog(0.0);
    auto hbar_inv_u = [&](double u) -> Complex { return hlog(-std::log(u)); };

    // |1 - u| <= 1, u in (0, 2]: (h(1/u)/u - h(1)) / |1 - u|, bounded at u = 1
    auto near = [&](double u) -> Complex {
        return (hbar_inv_u(u) / u - h1) / std::abs(1.0 - u);
    };
    Complex a = nk::integrate_gk(near, 0.0, 1.0, tol).value +
                nk::integrate_gk(near, 1.0, 2.0, tol).value;
    // u > 2, in module coordinates w = 1/u in (0, 1/2)
    auto far_pos = [&](double w) -> Complex { return hlog(std::log(w)) / (1.0 - w); };
    Complex b = nk::integrate_gk(far_pos, 0.0, 0.5, tol).value;
    // u < 0 in module coordinates w = 1/|u|
    auto neg = [&](double w) -> Complex { return hlog(std::log(w)) / (1.0 + w); };
    Complex c = nk::integrate_exp_sinh(neg, tol).value;

    return 0.5 * (a + b + c) + (kEulerGamma + kLog2Pi) * h1;
}

}  // namespace adelic::archfactors
