#include "adelic/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace adelic::numkernel {

namespace {

// B_2, B_4, ..., B_30
constexpr double kBernoulli2n[] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

bool near_nonpositive_integer(Complex z) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-14 && std::abs(z.imag()) < 1e-14;
}

// log sin(pi z), branch-continuous on vertical lines (standard unwinding).
Complex log_sin_pi(Complex z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i), |e^{2 i pi z}| <= 1
    Complex q = std::exp(Complex(0.0, 2.0 * kPi) * z);
    return Complex(0.0, -kPi) * z + std::log(Complex(1.0, 0.0) - q) +
           Complex(-std::log(2.0), kPi / 2.0);
}

Complex stirling_log_gamma(Complex z) {
    // requires |z| large and Re z > 0
    Complex lz = std::log(z);
    Complex acc = (z - 0.5) * lz - z + 0.5 * kLog2Pi;
    Complex zinv = 1.0 / z;
    Complex zpow = zinv;
    Complex z2 = zinv * zinv;
    for (int n = 1; n <= 10; ++n) {
        acc += kBernoulli2n[n - 1] / (2.0 * n * (2.0 * n - 1.0)) * zpow;
        zpow *= z2;
    }
    return acc;
}

}  // namespace

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z)) throw PoleError("log_gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return Complex(kLogPi, 0.0) - log_sin_pi(z) - log_gamma(Complex(1.0, 0.0) - z);
    }
    Complex shift(0.0, 0.0);
    Complex w = z;
    while (std::abs(w) < 32.0) {
        shift -= std::log(w);
        w += 1.0;
    }
    Complex out = stirling_log_gamma(w) + shift;
    if (!is_finite(out)) throw PoleError("log_gamma: non-finite result");
    return out;
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

namespace {

Complex digamma_asymptotic(Complex z) {
    // psi(z) ~ log z - 1/(2z) - sum B_2n / (2n z^{2n})
    Complex acc = std::log(z) - 0.5 / z;
    Complex z2inv = 1.0 / (z * z);
    Complex zpow = z2inv;
    for (int n = 1; n <= 9; ++n) {
        acc -= kBernoulli2n[n - 1] / (2.0 * n) * zpow;
        zpow *= z2inv;
    }
    return acc;
}

Complex cot_pi(Complex z) {
    // pi cot(pi z) in an exponentially stable form
    if (z.imag() < 0.0) return std::conj(cot_pi(std::conj(z)));
    if (z.imag() > 20.0) return Complex(0.0, -kPi);
    Complex q = std::exp(Complex(0.0, 2.0 * kPi) * z);
    return Complex(0.0, kPi) * (q + 1.0) / (q - 1.0);
}

}  // namespace

Complex digamma(Complex z) {
    if (near_nonpositive_integer(z)) throw PoleError("digamma: pole at nonpositive integer");
    if (z.real() < 0.0) {
        // psi(z) = psi(1 - z) - pi cot(pi z)
        return digamma(Complex(1.0, 0.0) - z) - cot_pi(z);
    }
    Complex shift(0.0, 0.0);
    Complex w = z;
    while (std::abs(w) < 24.0) {
        shift -= 1.0 / w;
        w += 1.0;
    }
    Complex out = digamma_asymptotic(w) + shift;
    if (!is_finite(out)) throw PoleError("digamma: non-finite result");
    return out;
}

Complex hurwitz_zeta(Complex s, double a) {
    if (!(a > 0.0)) throw Error("hurwitz_zeta: requires a > 0");
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-14) throw PoleError("hurwitz_zeta: pole at s = 1");
    if (s.real() < -2.0 - 1e-12) throw ConvergenceError("hurwitz_zeta: Re s < -2 unsupported");
    if (std::abs(s.imag()) > 500.0 + 1e-9)
        throw ConvergenceError("hurwitz_zeta: |Im s| > 500 unsupported");

    // shift a by integer steps until the Euler-Maclaurin pivot w = M + a
    // satisfies w >= max(10, |Im s|/2)
    double target = std::max(10.0, 0.5 * std::abs(s.imag()));
    int M = static_cast<int>(std::ceil(target - a));
    if (M < 0) M = 0;
    double w = M + a;

    Complex sum(0.0, 0.0);
    for (int n = M - 1; n >= 0; --n) sum += std::exp(-s * std::log(n + a));

    Complex lw = std::log(w);
    Complex tail = std::exp((1.0 - s) * lw) / (s - 1.0) + 0.5 * std::exp(-s * lw);

    // Bernoulli correction: sum_k B_2k/(2k)! (s)_{2k-1} w^{-s-2k+1}
    Complex poch = s;                              // (s)_1
    Complex wpow = std::exp((-s - 1.0) * lw);      // w^{-s-1}
    double winv2 = 1.0 / (w * w);
    double factorial_ratio = 0.5;                  // 1/(2k)! built incrementally
    Complex em(0.0, 0.0);
    double last_mag = std::numeric_limits<double>::max();
    double err_bound = 0.0;
    for (int k = 1; k <= 15; ++k) {
        Complex term = kBernoulli2n[std::min(k, 15) - 1] * factorial_ratio * poch * wpow;
        double mag = std::abs(term);
        if (k > 1 && mag > last_mag) {
            // asymptotic series started diverging; stop at the smallest term
            err_bound = mag;
            break;
        }
        em += term;
        err_bound = mag;
        last_mag = mag;
        if (mag < 1e-17 * (std::abs(sum + tail + em) + 1e-300)) {
            err_bound = mag;
            break;
        }
        if (k == 15) break;
        // advance (s)_{2k-1} -> (s)_{2k+1}, w^{-s-2k+1} -> w^{-s-2k-1}, 1/(2k)! -> 1/(2k+2)!
        poch *= (s + Complex(2.0 * k - 1.0, 0.0)) * (s + Complex(2.0 * k, 0.0));
        wpow *= winv2;
        factorial_ratio /= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }

    Complex value = sum + tail + em;
    if (!is_finite(value)) throw ConvergenceError("hurwitz_zeta: non-finite result");
    // the error budget is measured against the working scale of the
    // Euler-Maclaurin pieces; the value itself may cancel to zero on the line
    double scale = std::abs(value) + std::abs(tail) + 1e-300;
    if (err_bound > 1e-10 * scale)
        throw ConvergenceError("hurwitz_zeta: error budget unattainable");
    return value;
}

Complex riemann_zeta(Complex s) { return hurwitz_zeta(s, 1.0); }

double riemann_siegel_theta(double t) {
    Complex lg = log_gamma(Complex(0.25, 0.5 * t));
    return lg.imag() - 0.5 * t * kLogPi;
}

double hardy_z(double t) {
    Complex zeta = riemann_zeta(Complex(0.5, t));
    Complex rot = std::exp(Complex(0.0, riemann_siegel_theta(t)));
    return (rot * zeta).real();
}

// ---------------------------------------------------------------------------
// Quadrature

namespace {

// QUADPACK dqk15 abscissae/weights on [-1, 1]
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkCell {
    double a, b;
    Complex integral;
    double error;
};

GkCell gk15(const RealFunction& f, double a, double b, std::int64_t& evals) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex resg(0.0, 0.0), resk(0.0, 0.0);
    Complex fc = f(c);
    ++evals;
    resk += kWgk[7] * fc;
    resg += kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        Complex f1 = f(c - h * kXgk[j]);
        Complex f2 = f(c + h * kXgk[j]);
        evals += 2;
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    GkCell cell;
    cell.a = a;
    cell.b = b;
    cell.integral = resk * h;
    cell.error = std::abs(resk - resg) * std::abs(h);
    return cell;
}

}  // namespace

QuadratureResult integrate_gk(const RealFunction& f, double a, double b, double tol,
                              int max_intervals) {
    QuadratureResult out;
    auto cmp = [](const GkCell& x, const GkCell& y) { return x.error < y.error; };
    std::priority_queue<GkCell, std::vector<GkCell>, decltype(cmp)> heap(cmp);
    GkCell first = gk15(f, a, b, out.evaluations);
    if (!is_finite(first.integral))
        throw ConvergenceError("integrate_gk: non-finite integrand");
    heap.push(first);
    Complex total = first.integral;
    double err = first.error;
    int cells = 1;
    while (err > tol && cells < max_intervals) {
        GkCell worst = heap.top();
        heap.pop();
        total -= worst.integral;
        err -= worst.error;
        double mid = 0.5 * (worst.a + worst.b);
        GkCell left = gk15(f, worst.a, mid, out.evaluations);
        GkCell right = gk15(f, mid, worst.b, out.evaluations);
        if (!is_finite(left.integral) || !is_finite(right.integral))
            throw ConvergenceError("integrate_gk: non-finite integrand");
        total += left.integral + right.integral;
        err += left.error + right.error;
        heap.push(left);
        heap.push(right);
        ++cells;
        if (err < 0) err = 0;
    }
    out.value = total;
    out.abs_error_estimate = std::max(err, 0.0);
    if (out.abs_error_estimate > std::max(tol, 1e-8 * (1.0 + std::abs(total))) &&
        cells >= max_intervals)
        throw ConvergenceError("integrate_gk: error estimate exceeds tolerance");
    return out;
}

namespace {

// generic level-doubling trapezoid driver for DE-transformed integrands
template <typename Node>
QuadratureResult de_trapezoid(const Node& node, double tmax, double tol, int max_level) {
    QuadratureResult out;
    double h = 1.0;
    Complex sum(0.0, 0.0);
    {
        Complex v = node(0.0);
        ++out.evaluations;
        if (is_finite(v)) sum = v;
        for (double t = h; t <= tmax; t += h) {
            Complex v1 = node(t), v2 = node(-t);
            out.evaluations += 2;
            if (is_finite(v1)) sum += v1;
            if (is_finite(v2)) sum += v2;
        }
    }
    Complex prev = sum * h;
    double err = std::numeric_limits<double>::max();
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        Complex add(0.0, 0.0);
        for (double t = h; t <= tmax; t += 2.0 * h) {
            Complex v1 = node(t), v2 = node(-t);
            out.evaluations += 2;
            if (is_finite(v1)) add += v1;
            if (is_finite(v2)) add += v2;
        }
        Complex cur = prev * 0.5 + add * h;
        err = std::abs(cur - prev);
        prev = cur;
        if (level >= 4 && err <= tol * 0.25) break;
    }
    out.value = prev;
    out.abs_error_estimate = err;
    if (!is_finite(prev)) throw ConvergenceError("quadrature: non-finite result");
    return out;
}

}  // namespace

QuadratureResult integrate_tanh_sinh(const RealFunction& f, double a, double b, double tol,
                                     int max_level) {
    double h = 0.5 * (b - a);
    auto node = [&](double t) -> Complex {
        double sh = 0.5 * kPi * std::sinh(t);
        double ash = std::abs(sh);
        // distance of the node from the nearer endpoint, cancellation-free:
        // 1 -|tanh(sh)| = 2 / (1 + e^{2|sh|})
        double edge = 2.0 / (1.0 + std::exp(2.0 * ash));
        double q = std::exp(-2.0 * ash);
        double w = 0.5 * kPi * std::cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q));
        if (!(w > 1e-300) || edge <= 0.0) return Complex(0.0, 0.0);
        double u = (t <= 0.0) ? a + h * edge : b - h * edge;
        if (u <= a || u >= b) return Complex(0.0, 0.0);
        return f(u) * (h * w);
    };
    auto out = de_trapezoid(node, 4.3, tol, max_level);
    if (out.abs_error_estimate > std::max(tol, 1e-8 * (1.0 + std::abs(out.value))))
        throw ConvergenceError("integrate_tanh_sinh: did not converge");
    return out;
}

QuadratureResult integrate_exp_sinh(const RealFunction& f, double tol, int max_level) {
    auto node = [&](double t) -> Complex {
        double sh = 0.5 * kPi * std::sinh(t);
        if (sh > 690.0 || sh < -690.0) return Complex(0.0, 0.0);
        double u = std::exp(sh);
        double w = u * 0.5 * kPi * std::cosh(t);
        if (!(w > 1e-300) || !std::isfinite(w)) return Complex(0.0, 0.0);
        return f(u) * w;
    };
    auto out = de_trapezoid(node, 6.0, tol, max_level);
    if (out.abs_error_estimate > std::max(tol, 1e-8 * (1.0 + std::abs(out.value))))
        throw ConvergenceError("integrate_exp_sinh: did not converge");
    return out;
}

QuadratureResult integrate_line(const RealFunction& f, double tol, int max_level) {
    auto node = [&](double t) -> Complex {
        double x = std::sinh(t);
        double w = std::cosh(t);
        if (std::abs(x) > 1e8) return Complex(0.0, 0.0);
        return f(x) * w;
    };
    auto out = de_trapezoid(node, 7.0, tol, max_level);
    if (out.abs_error_estimate > std::max(tol, 1e-8 * (1.0 + std::abs(out.value))))
        throw ConvergenceError("integrate_line: did not converge");
    return out;
}

QuadratureResult integrate_adaptive(const RealFunction& f, Domain domain, double a, double b,
                                    double tol) {
    if (!(tol > 0.0)) throw Error("integrate_adaptive: tol must be positive");
    if (domain == Domain::HalfLine) return integrate_exp_sinh(f, tol);
    try {
        return integrate_gk(f, a, b, tol);
    } catch (const ConvergenceError&) {
        return integrate_tanh_sinh(f, a, b, tol);
    }
}

}  // namespace adelic::numkernel
