#include "adelic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "adelic/errors.hpp"

namespace adelic::spectral {

namespace nk = adelic::numkernel;
using nk::kPi;

double RadialEnvelope::at(double v) const {
    if (v <= 1.0) return c * std::pow(v, a0);
    double extra = 1.0;
    if (cls == DecayClass::LogQuadratic) {
        double w = std::log(v);
        extra = std::exp(-rate * w * w);
    } else if (cls == DecayClass::Exponential) {
        extra = std::exp(-rate * v);
    }
    return c * std::pow(v, -a_inf) * extra;
}

double RadialEnvelope::sum_tail(long n, double lambda) const {
    double u = n * lambda;
    if (u < 1.0) return std::numeric_limits<double>::infinity();
    switch (cls) {
        case DecayClass::Polynomial: {
            if (!(a_inf > 1.0)) return std::numeric_limits<double>::infinity();
            // integral comparison of C (m lambda)^{-a}
            return c * std::pow(static_cast<double>(n), 1.0 - a_inf) * std::pow(lambda, -a_inf) /
                   (a_inf - 1.0);
        }
        case DecayClass::LogQuadratic: {
            // (C/lambda) int_W^infty e^{-rate w^2 - (a-1) w} dw with W = log(n lambda)
            double w = std::log(u);
            double qp = 2.0 * rate * w + (a_inf - 1.0);
            if (!(qp > 0.0)) return std::numeric_limits<double>::infinity();
            return c / lambda * std::exp(-rate * w * w - (a_inf - 1.0) * w) / qp;
        }
        case DecayClass::Exponential: {
            // geometric comparison of C e^{-rate m lambda} (m lambda)^{-a}
            double q = std::exp(-rate * lambda);
            return c * std::exp(-rate * (n + 1) * lambda) * std::pow(u, -a_inf) / (1.0 - q);
        }
    }
    return std::numeric_limits<double>::infinity();
}

std::pair<double, double> RadialEnvelope::mellin_window(double sigma, double budget) const {
    double b = budget + std::log(c + 1.0);
    if (!(sigma + a0 > 0.05))
        throw ConvergenceError("mellin: Re s at or below the small-lambda decay edge");
    double x_min = -b / (a0 + sigma);
    double x_max;
    switch (cls) {
        case DecayClass::Polynomial:
            if (!(a_inf - sigma > 0.05))
                throw ConvergenceError("mellin: Re s at or above the decay at infinity");
            x_max = b / (a_inf - sigma);
            break;
        case DecayClass::LogQuadratic: {
            double lin = a_inf - sigma;
            x_max = (-lin + std::sqrt(lin * lin + 4.0 * rate * b)) / (2.0 * rate);
            break;
        }
        case DecayClass::Exponential: {
            double v = (b + std::abs(sigma)) / rate + 2.0;
            for (int i = 0; i < 3; ++i) v = (b + std::abs(sigma) * std::log(v)) / rate + 2.0;
            x_max = std::log(v);
            break;
        }
        default:
            x_max = b;
    }
    return {x_min, x_max};
}

Complex TestFunction::eval(long residue, double lambda) const {
    Complex w(1.0, 0.0);
    if (level > 1 || !residue_weights.empty()) {
        long r = ((residue % level) + level) % level;
        w = residue_weights.at(static_cast<std::size_t>(r));
    }
    if (w == Complex(0.0, 0.0)) return w;
    return w * radial(lambda);
}

void TestFunction::spot_check_decay() const {
    for (double x = -12.0; x <= 12.0; x += 0.4) {
        double lambda = std::exp(x);
        double bound = envelope.at(lambda);
        if (std::abs(radial(lambda)) > bound * (1.0 + 1e-9))
            throw Error("TestFunction: declared decay bound violated at lambda = " +
                        std::to_string(lambda));
    }
}

Complex TestFunction::residue_mean() const {
    if (level <= 1) return residue_weights.empty() ? Complex(1.0, 0.0) : residue_weights[0];
    Complex acc(0.0, 0.0);
    for (const auto& w : residue_weights) acc += w;
    return acc / static_cast<double>(level);
}

TestFunction TestFunction::radial_only(std::function<Complex(double)> f, RadialEnvelope env) {
    TestFunction t;
    t.level = 1;
    t.residue_weights = {Complex(1.0, 0.0)};
    t.radial = std::move(f);
    t.envelope = env;
    t.strip_beta = env.a0;
    return t;
}

SumResult summation_E(const TestFunction& xi, long u, double lambda, double tol) {
    if (!(lambda > 0.0)) throw Error("summation_E: lambda must be positive");
    SumResult out;
    for (long n = 1;; ++n) {
        out.value += xi.eval(n * u, n * lambda);
        out.terms = n;
        if (n * lambda >= 1.0) {
            double tail = xi.envelope.sum_tail(n, lambda);
            out.tail_bound = tail;
            if (tail < tol) break;
        }
        if (n > 200000000L) throw ConvergenceError("summation_E: truncation did not converge");
    }
    return out;
}

nk::QuadratureResult mellin_log(const std::function<Complex(double)>& hlog, Complex s,
                                double x_min, double x_max, double tol) {
    auto f = [&](double x) -> Complex { return hlog(x) * std::exp(s * x); };
    return nk::integrate_gk(f, x_min, x_max, tol, 20000);
}

Complex mellin(const TestFunction& h, Complex s, double tol) {
    auto [x_min, x_max] = h.envelope.mellin_window(s.real(), 40.0);
    auto hlog = [&](double x) { return h.radial(std::exp(x)); };
    return mellin_log(hlog, s, x_min, x_max, tol).value;
}

PoissonReport poisson_residual(const TestFunction& xi, long u,
                               const std::vector<double>& lambda_grid) {
    auto radial_only = [&](double v) { return xi.radial(v); };
    Complex integral = nk::integrate_exp_sinh(radial_only, 1e-13).value;
    Complex density = xi.residue_mean() * integral;

    PoissonReport report;
    std::vector<double> xs, ys;
    for (double lambda : lambda_grid) {
        Complex e = summation_E(xi, u, lambda, 1e-15).value;
        double r = std::abs(e - density / lambda);
        report.rows.push_back({lambda, r});
        if (r > 1e-300 && lambda < 1.0) {
            xs.push_back(std::log(std::abs(std::log(lambda))));
            ys.push_back(std::log(r));
        }
    }
    // least-squares slope of log r against log |log lambda|; a decay like
    // |log lambda|^{-N} shows up as slope -N
    if (xs.size() >= 2) {
        double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
        double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            num += (xs[i] - mx) * (ys[i] - my);
            den += (xs[i] - mx) * (xs[i] - mx);
        }
        report.fitted_exponent = den > 0 ? -num / den : 0.0;
    }
    return report;
}

Complex dirichlet_l(const DirichletCharacter& chi, Complex s) {
    int n = chi.modulus();
    if (n == 1) return nk::riemann_zeta(s);
    Complex acc(0.0, 0.0);
    for (long a = 1; a <= n; ++a) {
        Complex c = chi.value(a);
        if (c == Complex(0.0, 0.0)) continue;
        acc += c * nk::hurwitz_zeta(s, static_cast<double>(a) / n);
    }
    return acc * std::exp(-s * std::log(static_cast<double>(n)));
}

namespace {

// finite-place factor of a covariant residue profile: either an indicator of
// d Z/N (principal character) or a unit-supported chi-covariant profile
Complex finite_place_factor(const TestFunction& xi, const DirichletCharacter& chi, Complex s) {
    int n = xi.level;
    if (n == 1) return xi.residue_weights.empty() ? Complex(1.0, 0.0) : xi.residue_weights[0];

    const auto& w = xi.residue_weights;
    const auto& g = characters::UnitGroup::of(n);

    // covariance f_0(m a) = chi(m) f_0(a)
    for (long m : g.units)
        for (long a = 0; a < n; ++a) {
            Complex lhs = w[static_cast<std::size_t>((m * a) % n)];
            Complex rhs = chi.value(m) * w[static_cast<std::size_t>(a)];
            if (std::abs(lhs - rhs) > 1e-12)
                throw NotCovariant("l_factorization: residue profile is not chi-covariant");
        }

    bool unit_supported = true;
    for (long a = 0; a < n; ++a) {
        if (std::gcd(a == 0 ? static_cast<long>(n) : a, static_cast<long>(n)) == 1) continue;
        if (std::abs(w[static_cast<std::size_t>(a)]) > 1e-14) unit_supported = false;
    }
    if (unit_supported) return w[1];

    if (chi.is_principal()) {
        // indicator profile v * [d | a]
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            Complex v = w[static_cast<std::size_t>(d % n)];
            bool match = std::abs(v) > 1e-14;
            for (long a = 0; a < n && match; ++a) {
                Complex want = (a % d == 0) ? v : Complex(0.0, 0.0);
                if (std::abs(w[static_cast<std::size_t>(a)] - want) > 1e-12) match = false;
            }
            if (match) return v * std::exp(-s * std::log(static_cast<double>(d)));
        }
    }
    throw NotCovariant("l_factorization: unsupported residue profile shape");
}

}  // namespace

FactorizationResult l_factorization(const TestFunction& xi, const DirichletCharacter& chi,
                                    Complex s) {
    if (!(s.real() > 1.0)) throw ConvergenceError("l_factorization: Re s > 1 required");
    if (xi.level % chi.modulus() != 0 && chi.modulus() % xi.level != 0)
        throw LevelMismatch("l_factorization: character modulus incompatible with level");

    Complex finite = finite_place_factor(xi, chi, s);

    // rhs: L(chi, s) * finite factor * archimedean Mellin of the radial part
    Complex rhs = dirichlet_l(chi, s) * finite * mellin(xi, s);

    // lhs: Mellin of the lattice sum; below lambda_min the sum equals the
    // density term up to an O(lambda) remainder, integrated in closed form
    double lambda_min = 2e-3;
    Complex integral = nk::integrate_exp_sinh([&](double v) { return xi.radial(v); }, 1e-13).value;
    Complex density = xi.residue_mean() * integral;

    double x_lo = std::log(lambda_min);
    double x_hi = xi.envelope.mellin_window(s.real(), 40.0).second + 2.0;
    auto hlog = [&](double x) -> Complex {
        return summation_E(xi, 1, std::exp(x), 1e-15).value;
    };
    Complex lhs = mellin_log(hlog, s, x_lo, x_hi, 1e-10).value;
    lhs += density * std::exp((s - 1.0) * std::log(lambda_min)) / (s - 1.0);

    FactorizationResult out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.diff = std::abs(lhs - rhs);
    return out;
}

void ZeroTable::validate() const {
    double prev = 0.0;
    for (double g : ordinates) {
        if (!(g > prev)) throw Error("ZeroTable: ordinates must be positive and increasing");
        prev = g;
    }
}

namespace {

double bisect_zero(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a);
    for (int i = 0; i < 80 && b - a > 1e-12; ++i) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

ZeroTable scan_zeros(const std::function<double(double)>& z, double t_start, double e_max,
                     double step) {
    ZeroTable table;
    double prev_t = t_start;
    double prev_z = z(prev_t);
    for (double t = t_start + step; t <= e_max + 1e-12; t += step) {
        double cur = z(t);
        if ((prev_z < 0.0) != (cur < 0.0)) {
            double gamma = bisect_zero(z, prev_t, t);
            if (gamma <= e_max) table.ordinates.push_back(gamma);
        }
        prev_t = t;
        prev_z = cur;
    }
    table.validate();
    return table;
}

}  // namespace

ZeroTable zeta_zeros(double e_max) {
    if (!(e_max > 0.0) || e_max > 500.0) throw Error("zeta_zeros: E must be in (0, 500]");
    ZeroTable table = scan_zeros([](double t) { return nk::hardy_z(t); }, 1.0, e_max, 0.05);
    table.modulus = 1;
    table.char_index = 0;
    table.source = "internal";
    table.accuracy = 1e-10;
    for (double g : table.ordinates)
        if (std::abs(nk::riemann_zeta(Complex(0.5, g))) > 1e-7)
            throw ConvergenceError("zeta_zeros: located ordinate fails the line check");
    return table;
}

ZeroTable dirichlet_zeros(const DirichletCharacter& chi, double e_max) {
    if (chi.is_principal()) return zeta_zeros(e_max);
    if (chi.conductor() != chi.modulus())
        throw Error("dirichlet_zeros: primitive character required");
    int n = chi.modulus();
    int a = chi.parity() < 0 ? 1 : 0;
    Complex tau = chi.gauss_sum();
    if (std::abs(std::abs(tau) - std::sqrt(static_cast<double>(n))) > 1e-8)
        throw Error("dirichlet_zeros: Gauss sum modulus check failed");
    Complex eps = tau / (std::pow(Complex(0.0, 1.0), a) * std::sqrt(static_cast<double>(n)));
    Complex rot = std::exp(Complex(0.0, -0.5 * std::arg(eps)));

    auto zfun = [&, a, n](double t) {
        Complex s(0.5, t);
        Complex lam = std::exp(0.5 * (s + static_cast<double>(a)) *
                                   std::log(static_cast<double>(n) / kPi) +
                               nk::log_gamma(0.5 * (s + static_cast<double>(a)))) *
                      dirichlet_l(chi, s);
        return (rot * lam).real();
    };
    ZeroTable table = scan_zeros(zfun, 0.05, e_max, 0.05);
    table.modulus = n;
    table.char_index = 1;
    table.source = "internal";
    table.accuracy = 1e-10;
    return table;
}

double completed_zeta_on_line(double t) {
    Complex s(0.5, t);
    Complex xi = 0.5 * s * (s - 1.0) *
                 std::exp(-0.5 * s * nk::kLogPi + nk::log_gamma(0.5 * s)) * nk::riemann_zeta(s);
    return std::abs(xi);
}

ZeroTable zero_table_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("zero_table_load: cannot open " + path);
    ZeroTable table;
    table.source = "file";
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream is(line);
        double v;
        if (is >> v) table.ordinates.push_back(v);
    }
    table.validate();
    return table;
}

void zero_table_save(const ZeroTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("zero_table_save: cannot open " + path);
    out << "# zero ordinates, modulus " << table.modulus << ", source " << table.source << "\n";
    out.precision(12);
    out << std::fixed;
    for (double g : table.ordinates) out << g << "\n";
}

Complex distilled_transform(const TestFunction& xi, Complex s, const VanishingOptions& opts) {
    Complex integral = nk::integrate_exp_sinh([&](double v) { return xi.radial(v); }, 1e-13).value;
    Complex density = xi.residue_mean() * integral;
    Complex c = opts.subtract_pole ? density : Complex(0.0, 0.0);
    if (!opts.subtract_pole && std::abs(density) > 1e-12)
        throw ConditionsViolated("distilled_transform: nonzero density requires the subtraction");

    double x_hi = xi.envelope.mellin_window(0.5, 40.0).second + 2.0;
    double x_lo = std::log(opts.lambda_min);
    auto hlog = [&](double x) -> Complex {
        double lambda = std::exp(x);
        Complex h = summation_E(xi, 1, lambda, 1e-15).value - c / lambda;
        if (opts.extra_halfline != 0.0 && lambda > 1.0) h += opts.extra_halfline / lambda;
        return h;
    };
    Complex value = mellin_log(hlog, s, x_lo, x_hi, opts.tol).value;
    // tails: above X only the subtracted (and control) 1/lambda piece
    // survives; below lambda_min the sum cancels the density to O(lambda)
    double big_x = std::exp(x_hi);
    Complex tail_coeff = -c + Complex(opts.extra_halfline, 0.0);
    value += -tail_coeff * std::exp((s - 1.0) * std::log(big_x)) / (s - 1.0);
    return value;
}

VanishingReport vanishing_check(const TestFunction& xi, const ZeroTable& zeros, int k_max,
                                const VanishingOptions& opts) {
    zeros.validate();
    if (static_cast<int>(zeros.ordinates.size()) < k_max)
        throw InsufficientZeros("vanishing_check: zero table too short");

    VanishingReport report;
    for (double t : {0.5, 1.0, 2.0, 3.0, 5.0, 8.0}) {
        double v = std::abs(distilled_transform(xi, Complex(0.5, t), opts));
        report.line_scale = std::max(report.line_scale, v);
    }
    for (int k = 0; k < k_max; ++k) {
        double gamma = zeros.ordinates[static_cast<std::size_t>(k)];
        double v = std::abs(distilled_transform(xi, Complex(0.5, gamma), opts));
        report.rows.push_back({gamma, v});
        if (report.line_scale > 0.0)
            report.max_relative = std::max(report.max_relative, v / report.line_scale);
    }
    return report;
}

}  // namespace adelic::spectral
