#pragma once

// Structure of (Z/NZ)^* and its Dirichlet characters, with exact
// root-of-unity values in Q(zeta_M) for M the group exponent.

#include <complex>
#include <vector>

#include "adelic/errors.hpp"
#include "adelic/exact.hpp"

namespace adelic::characters {

struct UnitGroup {
    int modulus = 1;
    std::vector<long> units;               // units mod N, ascending
    std::vector<long> generators;          // independent generators (CRT built)
    std::vector<long> orders;              // orders of the generators
    std::vector<std::vector<int>> dlogs;   // discrete logs of each unit wrt generators

    static const UnitGroup& of(int modulus);

    long size() const { return static_cast<long>(units.size()); }
    int unit_index(long u) const;          // -1 if not a unit
    long exponent() const;                 // lcm of the generator orders
};

class DirichletCharacter {
  public:
    DirichletCharacter() = default;

    int modulus() const { return modulus_; }
    int zeta_level() const { return zeta_level_; }
    bool is_principal() const;
    bool is_real() const;
    int order() const;
    int parity() const;                    // chi(-1), +1 or -1
    int conductor() const;

    // chi(n): 0 for gcd(n, N) > 1
    std::complex<double> value(long n) const;
    exact::Cyclotomic value_exact(long n) const;
    // exponent e with chi(n) = zeta_M^e, or -1 for non-units
    int zeta_exponent(long n) const;

    DirichletCharacter conjugate() const;

    // numeric Gauss sum  sum_a chi(a) e^{2 pi i a / N}
    std::complex<double> gauss_sum() const;

    static std::vector<DirichletCharacter> all(int modulus);
    static DirichletCharacter principal(int modulus);
    // real nontrivial character mod N when unique (N = 3, 4); throws otherwise
    static DirichletCharacter quadratic(int modulus);

  private:
    int modulus_ = 1;
    int zeta_level_ = 1;
    std::vector<int> exponent_by_residue_;  // index n mod N -> e(n), -1 for non-units
};

long mod_pow(long base, long exp, long mod);
long mod_inverse(long a, long n);

}  // namespace adelic::characters
