#pragma once

// Thermodynamics of the BC system: truncated type-I representations on
// l^2(N^*), partition function with rigorous zeta tails, Gibbs states,
// KMS boundary verification, time evolution, and the dual scaling action.

#include <complex>
#include <functional>
#include <vector>

#include "adelic/endomotive.hpp"
#include "adelic/exact.hpp"
#include "adelic/numkernel.hpp"

namespace adelic::thermo {

using Complex = std::complex<double>;
using endomotive::CrossedElement;
using exact::CycMatrix;

struct GnsTruncation {
    int n_max = 256;       // Hilbert basis 1..n_max
    long u = 1;            // invertible residue mod `modulus`
    int modulus = 1;
    double lambda = 1.0;   // only enters through H = log n + log lambda

    void validate() const;
};

struct GibbsState {
    double beta = 2.0;
    GnsTruncation truncation;
    double tail_bound = 0.0;  // >= n_max^{1-beta}/(beta-1)

    static GibbsState make(double beta, const GnsTruncation& t);
};

struct BoundedValue {
    Complex value{0.0, 0.0};
    double bound = 0.0;
};

// dense matrix of pi_{(u,lambda)}(x) on the first n_max basis vectors
std::vector<std::vector<Complex>> represent(const CrossedElement& x, const GnsTruncation& t);

// exact variant over Q(zeta_modulus), used for faithfulness arguments
CycMatrix represent_exact(const CrossedElement& x, long u, int modulus, int n_max);

// (sum_{n <= n_max} n^{-beta}, tail bound n_max^{1-beta}/(beta-1))
std::pair<double, double> partition_function(double beta, long n_max);

// truncated Gibbs expectation with propagated tail bound
BoundedValue gibbs_expect(const CrossedElement& x, const GibbsState& state);

// Gibbs expectation through Hurwitz-zeta partial L-sums; exact up to the
// special-function tolerance (~1e-12), no truncation tail
Complex gibbs_expect_zeta(const CrossedElement& x, long u, int modulus, double beta);

// crossed element with a complex scalar attached per monomial
struct EvolvedMonomial {
    long n1 = 1, n2 = 1;
    endomotive::GroupRingElement a;
    Complex scale{1.0, 0.0};
};

struct EvolvedElement {
    std::vector<EvolvedMonomial> monomials;
};

// sigma_t scales U*_{n1} a U_{n2} by (n2/n1)^{it}
EvolvedElement time_evolve(const CrossedElement& x, double t);
EvolvedElement time_evolve(const EvolvedElement& x, double t);

struct KmsRow {
    double t = 0.0;
    double residual = 0.0;
    double bound = 0.0;
};

struct KmsReport {
    std::vector<KmsRow> rows;
    double max_residual = 0.0;
    double max_bound = 0.0;
};

enum class StateBackend { Truncated, Zeta };

// residuals |F_{x,y}(t + i beta) - phi(sigma_t(y) x)| with F built
// analytically from the monomial phases
KmsReport kms_verify(const CrossedElement& x, const CrossedElement& y, double beta,
                     const std::vector<double>& t_samples, const GnsTruncation& t,
                     StateBackend backend = StateBackend::Truncated);

// dual-system element: finite support in k, finite level in rho, a function
// of lambda per component
struct DualComponent {
    long k_num = 1, k_den = 1;
    std::function<Complex(long, double)> f;  // (residue mod level, lambda)
};

struct DualElement {
    int level = 1;
    double strip_beta = 2.0;
    std::vector<DualComponent> components;
};

// theta_mu: f_{k,rho}(lambda) -> f_{k,rho}(lambda / mu)
DualElement dual_action(const DualElement& x, double mu);

// Trace(pi_{(u,lambda)}(x)) = sum_{n <= n_max} f_{k=1}(n u, n lambda)
Complex dual_trace(const DualElement& x, long u, double lambda, int n_max);

}  // namespace adelic::thermo
