#pragma once

// The algebraic Bost-Connes endomotive: the group ring Q[Q/Z] at finite
// level, the semigroup maps rho_n, crossed-product monomials in normal form,
// the (G_m, 1) self-map system, the cyclotomic Galois action, and the
// fabulous-state intertwining check. Exact rational / cyclotomic arithmetic.

#include <complex>
#include <vector>

#include "adelic/characters.hpp"
#include "adelic/exact.hpp"

namespace adelic::endomotive {

using exact::Cyclotomic;
using exact::Rational;

// element of Q[Q/Z] supported on (1/level) Z / Z; canonical form uses the
// minimal level
class GroupRingElement {
  public:
    GroupRingElement() : level_(1), coeffs_(1, Rational(0)) {}
    GroupRingElement(int level, std::vector<Rational> coeffs);

    // coeff * e_{num/den}
    static GroupRingElement basis(long num, long den, const Rational& coeff = Rational(1));
    static GroupRingElement one();
    static GroupRingElement zero();

    int level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff_at(long num, long den) const;

    GroupRingElement at_level(int new_level) const;  // lift, new_level multiple of level
    GroupRingElement operator+(const GroupRingElement& rhs) const;
    GroupRingElement operator-(const GroupRingElement& rhs) const;
    GroupRingElement operator*(const GroupRingElement& rhs) const;  // convolution
    GroupRingElement scaled(const Rational& c) const;
    bool operator==(const GroupRingElement& rhs) const;
    bool is_zero() const;

    // value at the character rho (mod level): e_{j/N} -> exp(2 pi i j rho / N)
    std::complex<double> evaluate(long rho) const;
    Cyclotomic evaluate_exact(long rho) const;

  private:
    void canonicalize();
    int level_;
    std::vector<Rational> coeffs_;
};

// rho_n(e_r) = (1/n) sum_{ns = r} e_s, extended linearly
GroupRingElement rho(long n, const GroupRingElement& a);

// partial inverse on the range of rho_n: solves rho_n(y) = compressed x
GroupRingElement rho_inverse(long n, const GroupRingElement& x);

// e_r -> e_{alpha r}; alpha must be a unit mod level
GroupRingElement galois_act(long alpha, const GroupRingElement& x);

// monomial coeff-folded form  U*_{n1} a U_{n2}
struct Monomial {
    long n1 = 1;
    long n2 = 1;
    GroupRingElement a;
};

class CrossedElement {
  public:
    CrossedElement() = default;
    explicit CrossedElement(const GroupRingElement& a);
    static CrossedElement one();
    static CrossedElement u(long n);        // U_n
    static CrossedElement u_star(long n);   // U*_n
    static CrossedElement monomial(long n1, const GroupRingElement& a, long n2);

    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool is_zero() const;
    int max_level() const;
    long max_shift() const;  // max over monomials of max(n1, n2)

    CrossedElement operator+(const CrossedElement& rhs) const;
    CrossedElement operator-(const CrossedElement& rhs) const;
    CrossedElement operator*(const CrossedElement& rhs) const;
    CrossedElement scaled(const Rational& c) const;
    // structural (normal-form) equality; algebra equality is tested through
    // the faithful representations in the thermo module
    bool same_normal_form(const CrossedElement& rhs) const;

    CrossedElement adjoint() const;  // (U*_{n1} a U_{n2})* = U*_{n2} a* U_{n1}

  private:
    void normalize();
    std::vector<Monomial> monomials_;
};

CrossedElement galois_act(long alpha, const CrossedElement& x);

// the (G_m, 1) self-map system at the given levels: X_s = mu_s with
// xi_{s,sr}(y) = y^r, i.e. reduction of indices mod s
struct SelfMapSystem {
    std::vector<long> levels;  // closed under divisors, ascending
    // projection maps: proj[{s, s'}]: index mod s' -> index mod s  (s | s')
    // stored as explicit tables so corrupted variants can be tested
    std::vector<std::vector<std::vector<int>>> projections;  // [i][j] for levels[i] | levels[j]
    std::vector<std::vector<bool>> has_projection;

    const std::vector<int>& projection(long s, long s_prime) const;
    int level_index(long s) const;
};

// builds the system, verifies #X_s = s, the projection compatibility, and
// the intertwining of rho_n with the character-space maps at each level pair
SelfMapSystem selfmap_bc(const std::vector<long>& levels);

// pushforward of the uniform measure on X_{s'} equals uniform on X_s
bool measure_pushforward_check(const SelfMapSystem& system, long s, long s_prime);
bool measure_pushforward_check_map(const std::vector<int>& map, long s, long s_prime);

// evaluation state at the point chi_c of X_N extended by the zero-temperature
// limit: phi(U*_n a U_m) = [n = m = 1] * chi_c(a)
Cyclotomic fabulous_state(long c, int modulus, const CrossedElement& a);

// alpha phi(a) = phi(alpha^{-1}(a)) as exact cyclotomic numbers
bool fabulous_check(long c, int modulus, long alpha, const CrossedElement& a);

}  // namespace adelic::endomotive
