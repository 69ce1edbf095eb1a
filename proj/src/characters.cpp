#include "adelic/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace adelic::characters {

long mod_pow(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return r;
}

long mod_inverse(long a, long n) {
    long t = 0, newt = 1, r = n, newr = ((a % n) + n) % n;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t, newt);
        newt -= q * t;
        std::swap(r, newr);
        newr -= q * r;
    }
    if (r != 1) throw NotAUnit("mod_inverse: not invertible");
    return ((t % n) + n) % n;
}

namespace {

long primitive_root(long q, long phi) {
    // q an odd prime power; search small candidates
    std::vector<long> prime_factors;
    long m = phi;
    for (long p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            prime_factors.push_back(p);
            while (m % p == 0) m /= p;
            break;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool ok = true;
        for (long p : prime_factors)
            if (mod_pow(g, phi / p, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("primitive_root: none found");
}

long crt_lift(long residue, long q, long N) {
    // x = residue mod q, x = 1 mod N/q
    long rest = N / q;
    if (rest == 1) return residue % N;
    long inv = mod_inverse(q % rest, rest);
    // x = residue + q * k, need residue + q k = 1 mod rest
    long k = ((1 - residue) % rest + rest) % rest;
    k = (k * inv) % rest;
    return (residue + q * k) % N;
}

UnitGroup build_unit_group(int N) {
    UnitGroup g;
    g.modulus = N;
    for (long u = 1; u <= std::max(1L, static_cast<long>(N) - 1); ++u)
        if (std::gcd(u, static_cast<long>(N)) == 1) g.units.push_back(u % N);
    if (N == 1) g.units = {0};  // the trivial group on the one-point ring

    // generators per prime-power factor, lifted by CRT
    long n = N;
    std::vector<std::pair<long, long>> factor_pows;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            long q = 1;
            while (n % p == 0) {
                n /= p;
                q *= p;
            }
            factor_pows.push_back({p, q});
        }
    if (n > 1) factor_pows.push_back({n, n});

    for (auto [p, q] : factor_pows) {
        if (p == 2) {
            if (q == 2) continue;  // trivial
            if (q == 4) {
                g.generators.push_back(crt_lift(3, q, N));
                g.orders.push_back(2);
            } else {
                g.generators.push_back(crt_lift(q - 1, q, N));  // -1 mod 2^e
                g.orders.push_back(2);
                g.generators.push_back(crt_lift(5, q, N));
                g.orders.push_back(q / 4);
            }
        } else {
            long phi = q - q / p;
            long root = primitive_root(q, phi);
            g.generators.push_back(crt_lift(root, q, N));
            g.orders.push_back(phi);
        }
    }

    // discrete logs by full enumeration of exponent tuples
    std::map<long, std::vector<int>> table;
    std::vector<int> tuple(g.generators.size(), 0);
    long count = 1;
    for (long o : g.orders) count *= o;
    long value_accum = 1 % std::max(N, 1);
    // iterate tuples in mixed radix, maintaining the product incrementally is
    // fussy; enumeration is cheap at desk scale, recompute each time
    for (long idx = 0; idx < count; ++idx) {
        long rem = idx;
        long v = 1 % std::max(N, 1);
        for (std::size_t i = 0; i < g.generators.size(); ++i) {
            tuple[i] = static_cast<int>(rem % g.orders[i]);
            rem /= g.orders[i];
            v = (v * mod_pow(g.generators[i], tuple[i], N)) % N;
        }
        table[v] = tuple;
    }
    (void)value_accum;
    if (static_cast<long>(table.size()) != static_cast<long>(g.units.size()))
        throw Error("UnitGroup: generator enumeration does not cover the units");

    g.dlogs.resize(g.units.size());
    for (std::size_t i = 0; i < g.units.size(); ++i) g.dlogs[i] = table.at(g.units[i]);
    return g;
}

}  // namespace

const UnitGroup& UnitGroup::of(int modulus) {
    static std::map<int, UnitGroup> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(modulus);
    if (it == cache.end()) it = cache.emplace(modulus, build_unit_group(modulus)).first;
    return it->second;
}

int UnitGroup::unit_index(long u) const {
    u %= modulus;
    if (u < 0) u += modulus;
    auto it = std::lower_bound(units.begin(), units.end(), u);
    if (it == units.end() || *it != u) return -1;
    return static_cast<int>(it - units.begin());
}

long UnitGroup::exponent() const {
    long m = 1;
    for (long o : orders) m = std::lcm(m, o);
    return m;
}

bool DirichletCharacter::is_principal() const {
    for (int e : exponent_by_residue_)
        if (e > 0) return false;
    return true;
}

int DirichletCharacter::order() const {
    int ord = 1;
    for (int e : exponent_by_residue_) {
        if (e < 0) continue;
        int d = zeta_level_ / std::gcd(e, zeta_level_);
        ord = std::lcm(ord, d);
    }
    return ord;
}

bool DirichletCharacter::is_real() const { return order() <= 2; }

int DirichletCharacter::parity() const {
    if (modulus_ <= 2) return 1;
    int e = zeta_exponent(modulus_ - 1);
    return (2 * e) % zeta_level_ == 0 && e != 0 ? -1 : (e == 0 ? 1 : 0);
}

int DirichletCharacter::conductor() const {
    for (int d = 1; d <= modulus_; ++d) {
        if (modulus_ % d != 0) continue;
        // chi factors through (Z/d)* iff it is trivial on units = 1 mod d
        bool ok = true;
        for (long u = 1; u < modulus_ && ok; ++u) {
            if (std::gcd(u, static_cast<long>(modulus_)) != 1) continue;
            if (u % d == 1 % d && zeta_exponent(u) != 0) ok = false;
        }
        if (ok) return d;
    }
    return modulus_;
}

int DirichletCharacter::zeta_exponent(long n) const {
    long r = n % modulus_;
    if (r < 0) r += modulus_;
    return exponent_by_residue_[static_cast<std::size_t>(r)];
}

std::complex<double> DirichletCharacter::value(long n) const {
    int e = zeta_exponent(n);
    if (e < 0) return {0.0, 0.0};
    double ang = 2.0 * 3.14159265358979323846 * e / zeta_level_;
    return {std::cos(ang), std::sin(ang)};
}

exact::Cyclotomic DirichletCharacter::value_exact(long n) const {
    int e = zeta_exponent(n);
    if (e < 0) return exact::Cyclotomic(exact::Rational(0));
    return exact::Cyclotomic::root_of_unity(zeta_level_, e);
}

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter out = *this;
    for (auto& e : out.exponent_by_residue_)
        if (e > 0) e = zeta_level_ - e;
    return out;
}

std::complex<double> DirichletCharacter::gauss_sum() const {
    std::complex<double> acc(0.0, 0.0);
    for (long a = 1; a < modulus_; ++a) {
        std::complex<double> chi = value(a);
        double ang = 2.0 * 3.14159265358979323846 * a / modulus_;
        acc += chi * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::vector<DirichletCharacter> DirichletCharacter::all(int modulus) {
    const UnitGroup& g = UnitGroup::of(modulus);
    long M = g.exponent();
    long count = 1;
    for (long o : g.orders) count *= o;
    if (g.orders.empty()) count = 1;

    std::vector<DirichletCharacter> out;
    for (long idx = 0; idx < count; ++idx) {
        std::vector<long> a(g.orders.size());
        long rem = idx;
        for (std::size_t i = 0; i < g.orders.size(); ++i) {
            a[i] = rem % g.orders[i];
            rem /= g.orders[i];
        }
        DirichletCharacter chi;
        chi.modulus_ = modulus;
        chi.zeta_level_ = static_cast<int>(M);
        chi.exponent_by_residue_.assign(std::max(modulus, 1), -1);
        for (std::size_t ui = 0; ui < g.units.size(); ++ui) {
            long e = 0;
            for (std::size_t i = 0; i < g.orders.size(); ++i)
                e = (e + a[i] * g.dlogs[ui][i] % M * (M / g.orders[i])) % M;
            chi.exponent_by_residue_[static_cast<std::size_t>(g.units[ui] % std::max(modulus, 1))] =
                static_cast<int>(((e % M) + M) % M);
        }
        if (modulus == 1) chi.exponent_by_residue_.assign(1, 0);
        out.push_back(std::move(chi));
    }
    return out;
}

DirichletCharacter DirichletCharacter::principal(int modulus) {
    for (auto& chi : all(modulus))
        if (chi.is_principal()) return chi;
    throw Error("principal character not found");
}

DirichletCharacter DirichletCharacter::quadratic(int modulus) {
    DirichletCharacter found;
    int hits = 0;
    for (auto& chi : all(modulus))
        if (!chi.is_principal() && chi.is_real()) {
            found = chi;
            ++hits;
        }
    if (hits != 1) throw Error("quadratic character not unique at this modulus");
    return found;
}

}  // namespace adelic::characters
