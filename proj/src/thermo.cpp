#include "adelic/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace adelic::thermo {

using endomotive::GroupRingElement;
using exact::Cyclotomic;
using exact::Rational;

void GnsTruncation::validate() const {
    if (n_max < 1) throw Error("GnsTruncation: n_max >= 1 required");
    long uu = ((u % modulus) + modulus) % modulus;
    if (std::gcd(uu == 0 ? static_cast<long>(modulus) : uu, static_cast<long>(modulus)) != 1)
        throw NotAUnit("GnsTruncation: u must be invertible mod modulus");
}

GibbsState GibbsState::make(double beta, const GnsTruncation& t) {
    if (!(beta > 1.0)) throw DivergenceError("GibbsState: beta > 1 required");
    t.validate();
    GibbsState s;
    s.beta = beta;
    s.truncation = t;
    s.tail_bound = std::pow(static_cast<double>(t.n_max), 1.0 - beta) / (beta - 1.0);
    return s;
}

namespace {

double l1_norm(const GroupRingElement& a) {
    double s = 0.0;
    for (const auto& c : a.coeffs()) s += std::abs(c.get_d());
    return s;
}

}  // namespace

std::vector<std::vector<Complex>> represent(const CrossedElement& x, const GnsTruncation& t) {
    t.validate();
    if (t.modulus % x.max_level() != 0)
        throw LevelMismatch("represent: element level must divide the truncation modulus");
    std::vector<std::vector<Complex>> m(t.n_max, std::vector<Complex>(t.n_max, Complex(0, 0)));
    for (const auto& mono : x.monomials()) {
        // (pi(U*_{n1} a U_{n2}) xi)(n) = a^(n n1 u) xi(n n1 / n2) when n2 | n n1
        for (long n = 1; n <= t.n_max; ++n) {
            long nn1 = n * mono.n1;
            if (nn1 % mono.n2 != 0) continue;
            long col = nn1 / mono.n2;
            if (col < 1 || col > t.n_max) continue;
            m[n - 1][col - 1] += mono.a.evaluate(nn1 % mono.a.level() * (t.u % mono.a.level()));
        }
    }
    return m;
}

CycMatrix represent_exact(const CrossedElement& x, long u, int modulus, int n_max) {
    if (modulus % x.max_level() != 0)
        throw LevelMismatch("represent_exact: element level must divide the modulus");
    CycMatrix m(n_max, n_max);
    for (const auto& mono : x.monomials()) {
        GroupRingElement a = mono.a.at_level(modulus);
        for (long n = 1; n <= n_max; ++n) {
            long nn1 = n * mono.n1;
            if (nn1 % mono.n2 != 0) continue;
            long col = nn1 / mono.n2;
            if (col < 1 || col > n_max) continue;
            m.at(static_cast<int>(n - 1), static_cast<int>(col - 1)) =
                m.at(static_cast<int>(n - 1), static_cast<int>(col - 1)) +
                a.evaluate_exact(nn1 * u);
        }
    }
    return m;
}

std::pair<double, double> partition_function(double beta, long n_max) {
    if (!(beta > 1.0)) throw DivergenceError("partition_function: beta > 1 required");
    // descending summation keeps the rounding error of the 10^6-term sums
    // far below the zeta tail
    double s = 0.0;
    for (long n = n_max; n >= 1; --n) s += std::pow(static_cast<double>(n), -beta);
    double tail = std::pow(static_cast<double>(n_max), 1.0 - beta) / (beta - 1.0);
    return {s, tail};
}

BoundedValue gibbs_expect(const CrossedElement& x, const GibbsState& state) {
    const GnsTruncation& t = state.truncation;
    if (t.modulus % x.max_level() != 0)
        throw LevelMismatch("gibbs_expect: element level must divide the truncation modulus");
    double beta = state.beta;
    auto [z, ztail] = partition_function(beta, t.n_max);

    Complex numer(0.0, 0.0);
    double mass = 0.0;
    for (const auto& mono : x.monomials()) {
        mass += l1_norm(mono.a);
        if (mono.n1 != mono.n2) continue;  // off-diagonal monomials have zero trace
        long r = mono.n1;
        int lev = mono.a.level();
        // a^(n r u) is periodic in n mod lev
        std::vector<Complex> vals(lev);
        for (int cls = 0; cls < lev; ++cls)
            vals[cls] = mono.a.evaluate((static_cast<long>(cls) * r % lev) * (t.u % lev));
        for (long n = t.n_max; n >= 1; --n)
            numer += vals[n % lev] * std::pow(static_cast<double>(n), -beta);
    }
    BoundedValue out;
    out.value = numer / z;
    out.bound = 2.0 * mass * ztail / z;
    return out;
}

Complex gibbs_expect_zeta(const CrossedElement& x, long u, int modulus, double beta) {
    if (!(beta > 1.0)) throw DivergenceError("gibbs_expect_zeta: beta > 1 required");
    if (modulus % x.max_level() != 0)
        throw LevelMismatch("gibbs_expect_zeta: element level must divide the modulus");
    Complex numer(0.0, 0.0);
    double zeta_beta = numkernel::riemann_zeta(Complex(beta, 0.0)).real();
    for (const auto& mono : x.monomials()) {
        if (mono.n1 != mono.n2) continue;
        long r = mono.n1;
        int lev = mono.a.level();
        // sum_{n == cls (lev)} n^{-beta} = lev^{-beta} zeta_H(beta, cls/lev), cls in 1..lev
        for (int cls = 1; cls <= lev; ++cls) {
            Complex v = mono.a.evaluate((static_cast<long>(cls) * r % lev) * (u % lev));
            if (std::abs(v) == 0.0) continue;
            double partial =
                std::pow(static_cast<double>(lev), -beta) *
                numkernel::hurwitz_zeta(Complex(beta, 0.0), static_cast<double>(cls) / lev).real();
            numer += v * partial;
        }
    }
    return numer / zeta_beta;
}

EvolvedElement time_evolve(const CrossedElement& x, double t) {
    EvolvedElement out;
    for (const auto& m : x.monomials()) {
        double k = static_cast<double>(m.n2) / static_cast<double>(m.n1);
        Complex scale = std::exp(Complex(0.0, t * std::log(k)));
        out.monomials.push_back({m.n1, m.n2, m.a, scale});
    }
    return out;
}

EvolvedElement time_evolve(const EvolvedElement& x, double t) {
    EvolvedElement out = x;
    for (auto& m : out.monomials) {
        double k = static_cast<double>(m.n2) / static_cast<double>(m.n1);
        m.scale *= std::exp(Complex(0.0, t * std::log(k)));
    }
    return out;
}

namespace {

struct StateEval {
    std::function<Complex(const CrossedElement&)> phi;
    std::function<double(const CrossedElement&)> bound;
};

StateEval make_state(double beta, const GnsTruncation& t, StateBackend backend) {
    if (backend == StateBackend::Zeta) {
        return {[=](const CrossedElement& w) { return gibbs_expect_zeta(w, t.u, t.modulus, beta); },
                [](const CrossedElement&) { return 1e-12; }};
    }
    GibbsState state = GibbsState::make(beta, t);
    return {[=](const CrossedElement& w) { return gibbs_expect(w, state).value; },
            [=](const CrossedElement& w) { return gibbs_expect(w, state).bound; }};
}

}  // namespace

KmsReport kms_verify(const CrossedElement& x, const CrossedElement& y, double beta,
                     const std::vector<double>& t_samples, const GnsTruncation& trunc,
                     StateBackend backend) {
    if (!(beta > 1.0)) throw DivergenceError("kms_verify: beta > 1 required");

    // products raise the finite level; widen the truncation modulus and lift
    // the state point u to a compatible unit (u mod M, 1 mod the rest)
    GnsTruncation t = trunc;
    {
        long need = std::lcm(static_cast<long>(t.modulus),
                             static_cast<long>((x * y).max_level()));
        need = std::lcm(need, static_cast<long>((y * x).max_level()));
        if (need != t.modulus) {
            long m = t.modulus, u = ((t.u % m) + m) % m;
            long lifted = 0;
            for (long cand = u == 0 ? m : u; cand < need * 2; cand += m)
                if (std::gcd(cand % need == 0 ? need : cand % need, need) == 1) {
                    lifted = cand % need;
                    break;
                }
            if (lifted == 0) throw NotAUnit("kms_verify: cannot lift u to the product level");
            t.modulus = static_cast<int>(need);
            t.u = lifted;
        }
    }
    StateEval state = make_state(beta, t, backend);

    // y split into monomials, each an eigenvector of sigma with phase k^{it}
    struct Part {
        CrossedElement mono;
        double k;  // n2/n1
    };
    std::vector<Part> parts;
    for (const auto& m : y.monomials())
        parts.push_back({CrossedElement::monomial(m.n1, m.a, m.n2),
                         static_cast<double>(m.n2) / static_cast<double>(m.n1)});

    // F(z) = sum_j k_j^{iz} phi(x y_j) continues F(t) = phi(x sigma_t(y));
    // at z = t + i beta the phase splits as k^{it} k^{-beta}. The boundary
    // value is compared against phi(sigma_t(y) x) = sum_j k_j^{it} phi(y_j x).
    struct Prepared {
        double k;
        Complex pxy, pyx;
        double bnd;
    };
    std::vector<Prepared> prepared;
    for (const auto& part : parts) {
        CrossedElement xy = x * part.mono;
        CrossedElement yx = part.mono * x;
        double amp = std::pow(part.k, -beta);
        prepared.push_back({part.k, state.phi(xy), state.phi(yx),
                            amp * state.bound(xy) + state.bound(yx)});
    }

    KmsReport report;
    for (double t : t_samples) {
        Complex f_boundary(0.0, 0.0);
        Complex rhs(0.0, 0.0);
        double bound = 0.0;
        for (const auto& p : prepared) {
            Complex phase_it = std::exp(Complex(0.0, t * std::log(p.k)));
            double amp = std::pow(p.k, -beta);
            f_boundary += phase_it * amp * p.pxy;
            rhs += phase_it * p.pyx;
            bound += p.bnd;
        }
        double residual = std::abs(f_boundary - rhs);
        report.rows.push_back({t, residual, bound});
        report.max_residual = std::max(report.max_residual, residual);
        report.max_bound = std::max(report.max_bound, bound);
    }
    return report;
}

DualElement dual_action(const DualElement& x, double mu) {
    DualElement out = x;
    for (auto& comp : out.components) {
        auto f = comp.f;
        comp.f = [f, mu](long rho, double lambda) { return f(rho, lambda / mu); };
    }
    return out;
}

Complex dual_trace(const DualElement& x, long u, double lambda, int n_max) {
    Complex acc(0.0, 0.0);
    for (const auto& comp : x.components) {
        if (comp.k_num != comp.k_den) continue;  // only k = 1 meets the diagonal
        for (long n = 1; n <= n_max; ++n)
            acc += comp.f((n * u) % x.level, n * lambda);
    }
    return acc;
}

}  // namespace adelic::thermo
