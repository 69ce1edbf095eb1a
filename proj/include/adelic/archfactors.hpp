#pragma once

// Archimedean local factors from Hodge data and the Lefschetz identities on
// the critical line: Gamma_R / Gamma_C factors, Weil principal values (the
// logarithmic cutoff and the minimal-subtraction digamma route), fiber
// integrals over |u| = const circles, Weil-group traces, and the average
// part of the zero-counting function.

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "adelic/numkernel.hpp"

namespace adelic::archfactors {

using Complex = std::complex<double>;

enum class Place { Real, Complex };

struct HodgeStructure {
    int weight = 0;
    std::map<std::pair<int, int>, int> hpq;       // (p,q) -> h^{p,q}, p+q = weight
    std::map<int, std::pair<int, int>> hpm;       // p -> (h^{p,+}, h^{p,-})

    void validate() const;
    int betti() const;
    int h(int p, int q) const;

    static HodgeStructure point();                // H^0, h^{0,0} = h^{0,+} = 1
    static HodgeStructure elliptic_h1();          // h^{1,0} = h^{0,1} = 1
    static HodgeStructure middle_h2(int hplus, int hminus);  // h^{1,1} split
};

struct WeilGroupElement {
    Complex w{1.0, 0.0};
    int eps = 0;  // element w j^eps, eps in {0, 1}
};

// Gamma_C(z) = (2 pi)^{-z} Gamma(z), Gamma_R(z) = 2^{-1/2} pi^{-z/2} Gamma(z/2)
Complex gamma_factor(Place kind, Complex z);
Complex log_gamma_factor(Place kind, Complex z);

// archimedean L-factor of the Hodge structure at a real or complex place
Complex local_factor(const HodgeStructure& h, Place place, Complex z);
Complex log_local_factor(const HodgeStructure& h, Place place, Complex z);

// trace of the canonical Weil-group representation on H^m
Complex rep_trace(const HodgeStructure& h, const WeilGroupElement& u);

// (1/2 pi) int_0^{2 pi} e^{i n theta} / |1 - e^{i theta} rho|^2 dtheta with
// nu = rho^2, in closed form f_0(nu)^{|n|} / |1 - nu|
double fiber_integral(int n, double nu);

enum class PvScheme { WeilCutoff, MinimalSubtraction };

struct PrincipalValueSpec {
    int n = 0;
    double s = 0.0;
    PvScheme scheme = PvScheme::WeilCutoff;
    int ladder_k_min = 4;
    int ladder_k_max = 12;
};

struct PvResult {
    double value = 0.0;
    double error = 0.0;
    double c_estimate = 1.0;  // re-derived coefficient of the log divergence
};

// PF_0 of nu^{1/2 + i s} f_0(nu)^{|n|} / |1 - nu| against d*nu
PvResult weil_pv(const PrincipalValueSpec& spec);

struct LefschetzResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double diff = 0.0;
};

// principal-value side vs digamma side of the local trace identity at
// z = (1+m)/2 + i s
LefschetzResult lefschetz_complex(const HodgeStructure& h, double s);
LefschetzResult lefschetz_real(const HodgeStructure& h, double s);

// j-part integral int_{R_+^*} v^{1/2 + i s} / (1 + v) d*v by quadrature
double relative_integral(double s, double tol = 1e-11);

// d/ds Im log L_v(H^m, (1+m)/2 + i s), assembled from digamma values
double imlog_derivative(const HodgeStructure& h, Place place, double s);

// average part of the one-sided zero count up to ordinate E:
// (1/2 pi) sum_v int_{-E}^{E} d/ds Im log L_v ds + pole_order
double zero_count_average(const HodgeStructure& h, const std::vector<Place>& places, double E,
                          int pole_order);

// principal value int'_{R^*} h(|u|^{-1}) / |1 - u| d*u for the preferred
// character of the real place; hlog(x) = h(e^x) on log-modules
Complex real_place_principal_value(const std::function<Complex(double)>& hlog, double tol = 1e-10);

}  // namespace adelic::archfactors
