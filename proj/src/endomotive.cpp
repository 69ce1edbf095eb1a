#include "adelic/endomotive.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace adelic::endomotive {

GroupRingElement::GroupRingElement(int level, std::vector<Rational> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    if (level_ < 1 || static_cast<int>(coeffs_.size()) != level_)
        throw DimensionMismatch("GroupRingElement: coefficient vector must have `level` entries");
    canonicalize();
}

void GroupRingElement::canonicalize() {
    // minimal level d | level with support contained in multiples of level/d
    for (int d = 1; d <= level_; ++d) {
        if (level_ % d != 0) continue;
        int stride = level_ / d;
        bool ok = true;
        for (int j = 0; j < level_ && ok; ++j)
            if (coeffs_[j] != 0 && j % stride != 0) ok = false;
        if (ok) {
            if (d == level_) return;
            std::vector<Rational> reduced(d);
            for (int k = 0; k < d; ++k) reduced[k] = coeffs_[k * stride];
            level_ = d;
            coeffs_ = std::move(reduced);
            return;
        }
    }
}

GroupRingElement GroupRingElement::basis(long num, long den, const Rational& coeff) {
    if (den < 1) throw Error("GroupRingElement: denominator must be positive");
    long j = ((num % den) + den) % den;
    std::vector<Rational> c(den, Rational(0));
    c[j] = coeff;
    return GroupRingElement(static_cast<int>(den), std::move(c));
}

GroupRingElement GroupRingElement::one() { return basis(0, 1); }

GroupRingElement GroupRingElement::zero() {
    return GroupRingElement(1, std::vector<Rational>(1, Rational(0)));
}

Rational GroupRingElement::coeff_at(long num, long den) const {
    // coefficient of e_{num/den} in canonical coordinates
    long j = ((num % den) + den) % den;
    long g = std::gcd(j == 0 ? den : j, den);
    long rn = j / g, rd = den / g;
    if (level_ % rd != 0) return Rational(0);
    return coeffs_[static_cast<std::size_t>(rn * (level_ / rd))];
}

GroupRingElement GroupRingElement::at_level(int new_level) const {
    if (new_level % level_ != 0) throw LevelMismatch("GroupRingElement: invalid level lift");
    int stride = new_level / level_;
    std::vector<Rational> c(new_level, Rational(0));
    for (int j = 0; j < level_; ++j) c[j * stride] = coeffs_[j];
    GroupRingElement out;
    out.level_ = new_level;
    out.coeffs_ = std::move(c);
    return out;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
    int L = std::lcm(level_, rhs.level_);
    GroupRingElement a = at_level(L), b = rhs.at_level(L);
    for (int j = 0; j < L; ++j) a.coeffs_[j] += b.coeffs_[j];
    a.canonicalize();
    return a;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
    return *this + rhs.scaled(Rational(-1));
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
    int L = std::lcm(level_, rhs.level_);
    GroupRingElement a = at_level(L), b = rhs.at_level(L);
    std::vector<Rational> c(L, Rational(0));
    for (int i = 0; i < L; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j < L; ++j) {
            if (b.coeffs_[j] == 0) continue;
            c[(i + j) % L] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    GroupRingElement out;
    out.level_ = L;
    out.coeffs_ = std::move(c);
    out.canonicalize();
    return out;
}

GroupRingElement GroupRingElement::scaled(const Rational& c) const {
    GroupRingElement out = *this;
    for (auto& x : out.coeffs_) x *= c;
    out.canonicalize();
    return out;
}

bool GroupRingElement::operator==(const GroupRingElement& rhs) const {
    return level_ == rhs.level_ && coeffs_ == rhs.coeffs_;
}

bool GroupRingElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == 0; });
}

std::complex<double> GroupRingElement::evaluate(long rho) const {
    std::complex<double> acc(0.0, 0.0);
    long r = ((rho % level_) + level_) % level_;
    for (int j = 0; j < level_; ++j) {
        if (coeffs_[j] == 0) continue;
        double ang = 2.0 * 3.14159265358979323846 * ((static_cast<long>(j) * r) % level_) / level_;
        acc += coeffs_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

Cyclotomic GroupRingElement::evaluate_exact(long rho) const {
    Cyclotomic acc = Cyclotomic::zero(level_);
    long r = ((rho % level_) + level_) % level_;
    for (int j = 0; j < level_; ++j) {
        if (coeffs_[j] == 0) continue;
        acc = acc + Cyclotomic::root_of_unity(level_, j * r).scaled(coeffs_[j]);
    }
    return acc;
}

GroupRingElement rho(long n, const GroupRingElement& a) {
    if (n < 1) throw Error("rho: n must be a positive integer");
    int L = a.level();
    long newL = n * L;
    if (newL > 10000) throw Error("rho: level cap 10^4 exceeded");
    std::vector<Rational> c(newL, Rational(0));
    Rational inv = Rational(1) / Rational(n);
    for (int j = 0; j < L; ++j) {
        const Rational& v = a.coeffs()[j];
        if (v == 0) continue;
        // ns = j/L: s = (j + kL)/(nL), k = 0..n-1
        for (long k = 0; k < n; ++k) c[static_cast<std::size_t>(j + k * L)] += v * inv;
    }
    return GroupRingElement(static_cast<int>(newL), std::move(c));
}

GroupRingElement rho_inverse(long n, const GroupRingElement& x) {
    // y with rho_n(y) = e x e where e = rho_n(1); on the canonical basis
    // rho_n(e_{j/L}) has support {(j + kL)/(nL)}, so y_{j/L} = n * x_{(j)/(nL)}
    GroupRingElement e = rho(n, GroupRingElement::one());
    GroupRingElement compressed = e * x * e;
    long nl = compressed.level();
    long L = std::lcm(nl, n) / n;
    GroupRingElement lifted = compressed.at_level(static_cast<int>(n * L));
    std::vector<Rational> c(L, Rational(0));
    for (long j = 0; j < L; ++j)
        c[j] = lifted.coeffs()[static_cast<std::size_t>(j)] * Rational(n);
    GroupRingElement y(static_cast<int>(L), std::move(c));
    if (!(rho(n, y) == compressed)) throw Error("rho_inverse: element not in the range");
    return y;
}

GroupRingElement galois_act(long alpha, const GroupRingElement& x) {
    int L = x.level();
    long a = ((alpha % L) + L) % L;
    if (std::gcd(a == 0 ? static_cast<long>(L) : a, static_cast<long>(L)) != 1)
        throw NotAUnit("galois_act: alpha not invertible mod level");
    std::vector<Rational> c(L, Rational(0));
    for (int j = 0; j < L; ++j) c[static_cast<std::size_t>((j * a) % L)] = x.coeffs()[j];
    return GroupRingElement(L, std::move(c));
}

CrossedElement::CrossedElement(const GroupRingElement& a) {
    monomials_.push_back({1, 1, a});
    normalize();
}

CrossedElement CrossedElement::one() { return CrossedElement(GroupRingElement::one()); }

CrossedElement CrossedElement::u(long n) {
    CrossedElement x;
    x.monomials_.push_back({1, n, GroupRingElement::one()});
    x.normalize();
    return x;
}

CrossedElement CrossedElement::u_star(long n) {
    CrossedElement x;
    x.monomials_.push_back({n, 1, GroupRingElement::one()});
    x.normalize();
    return x;
}

CrossedElement CrossedElement::monomial(long n1, const GroupRingElement& a, long n2) {
    CrossedElement x;
    x.monomials_.push_back({n1, n2, a});
    x.normalize();
    return x;
}

void CrossedElement::normalize() {
    std::map<std::pair<long, long>, GroupRingElement> merged;
    for (const auto& m : monomials_) {
        if (m.n1 < 1 || m.n2 < 1) throw Error("CrossedElement: invalid monomial indices");
        auto key = std::make_pair(m.n1, m.n2);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, m.a);
        else
            it->second = it->second + m.a;
    }
    monomials_.clear();
    for (auto& [key, a] : merged) {
        if (a.is_zero()) continue;
        monomials_.push_back({key.first, key.second, a});
    }
}

bool CrossedElement::is_zero() const { return monomials_.empty(); }

int CrossedElement::max_level() const {
    int L = 1;
    for (const auto& m : monomials_) L = std::lcm(L, m.a.level());
    return L;
}

long CrossedElement::max_shift() const {
    long s = 1;
    for (const auto& m : monomials_) s = std::max({s, m.n1, m.n2});
    return s;
}

CrossedElement CrossedElement::operator+(const CrossedElement& rhs) const {
    CrossedElement out = *this;
    out.monomials_.insert(out.monomials_.end(), rhs.monomials_.begin(), rhs.monomials_.end());
    out.normalize();
    return out;
}

CrossedElement CrossedElement::operator-(const CrossedElement& rhs) const {
    return *this + rhs.scaled(Rational(-1));
}

CrossedElement CrossedElement::operator*(const CrossedElement& rhs) const {
    // U*_{r1} a U_{r2} U*_{r3} b U_{r4} = U*_{r1 r3} rho_{r3}(a) rho_{r2 r3}(1) rho_{r2}(b) U_{r2 r4}
    CrossedElement out;
    for (const auto& x : monomials_)
        for (const auto& y : rhs.monomials_) {
            GroupRingElement mid =
                rho(y.n1, x.a) * rho(x.n2 * y.n1, GroupRingElement::one()) * rho(x.n2, y.a);
            out.monomials_.push_back({x.n1 * y.n1, x.n2 * y.n2, mid});
        }
    out.normalize();
    return out;
}

CrossedElement CrossedElement::scaled(const Rational& c) const {
    CrossedElement out = *this;
    for (auto& m : out.monomials_) m.a = m.a.scaled(c);
    out.normalize();
    return out;
}

bool CrossedElement::same_normal_form(const CrossedElement& rhs) const {
    if (monomials_.size() != rhs.monomials_.size()) return false;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        if (monomials_[i].n1 != rhs.monomials_[i].n1) return false;
        if (monomials_[i].n2 != rhs.monomials_[i].n2) return false;
        if (!(monomials_[i].a == rhs.monomials_[i].a)) return false;
    }
    return true;
}

CrossedElement CrossedElement::adjoint() const {
    CrossedElement out;
    for (const auto& m : monomials_) out.monomials_.push_back({m.n2, m.n1, m.a});
    out.normalize();
    return out;
}

CrossedElement galois_act(long alpha, const CrossedElement& x) {
    CrossedElement out;
    for (const auto& m : x.monomials()) {
        CrossedElement term;
        term = CrossedElement::monomial(m.n1, galois_act(alpha, m.a), m.n2);
        out = out + term;
    }
    return out;
}

const std::vector<int>& SelfMapSystem::projection(long s, long s_prime) const {
    int i = level_index(s), j = level_index(s_prime);
    if (!has_projection[i][j]) throw DivisibilityError("SelfMapSystem: s does not divide s'");
    return projections[i][j];
}

int SelfMapSystem::level_index(long s) const {
    auto it = std::find(levels.begin(), levels.end(), s);
    if (it == levels.end()) throw Error("SelfMapSystem: level not present");
    return static_cast<int>(it - levels.begin());
}

SelfMapSystem selfmap_bc(const std::vector<long>& levels_in) {
    SelfMapSystem sys;
    sys.levels = levels_in;
    std::sort(sys.levels.begin(), sys.levels.end());
    for (long s : sys.levels)
        for (long d = 1; d <= s; ++d)
            if (s % d == 0 &&
                std::find(sys.levels.begin(), sys.levels.end(), d) == sys.levels.end())
                throw ClosureError("selfmap_bc: level set not closed under divisors");

    int n = static_cast<int>(sys.levels.size());
    sys.projections.assign(n, std::vector<std::vector<int>>(n));
    sys.has_projection.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long s = sys.levels[i], sp = sys.levels[j];
            if (sp % s != 0) continue;
            // xi_{s, s r}(y) = y^r on mu_{s'}: index k mod s' -> k mod s
            std::vector<int> map(sp);
            for (long k = 0; k < sp; ++k) map[k] = static_cast<int>(k % s);
            sys.projections[i][j] = std::move(map);
            sys.has_projection[i][j] = true;
        }

    // projection compatibility xi_{s,s'} o xi_{s',s''} = xi_{s,s''}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (!sys.has_projection[i][j] || !sys.has_projection[j][k]) continue;
                const auto& pij = sys.projections[i][j];
                const auto& pjk = sys.projections[j][k];
                const auto& pik = sys.projections[i][k];
                for (std::size_t y = 0; y < pjk.size(); ++y)
                    if (pij[pjk[y]] != pik[y])
                        throw Error("selfmap_bc: projection maps not compatible");
            }

    // intertwining with rho_n on character spaces: for k and nk in the system,
    // x a character mod nk trivial on the n-part, x(rho_n(e_{j/k})) = x(e_{j/(nk)})
    for (long k : sys.levels)
        for (long nk : sys.levels) {
            if (nk % k != 0) continue;
            long nn = nk / k;
            if (nn == 1) continue;
            for (long c = 0; c < nk; c += nn) {  // characters trivial on the n-part
                for (long j = 0; j < k; ++j) {
                    GroupRingElement e = GroupRingElement::basis(j, k);
                    Cyclotomic lhs = rho(nn, e).evaluate_exact(c);
                    Cyclotomic rhs = GroupRingElement::basis(j, nk).evaluate_exact(c);
                    if (!(lhs == rhs))
                        throw Error("selfmap_bc: rho does not intertwine the projections");
                }
            }
        }
    return sys;
}

bool measure_pushforward_check_map(const std::vector<int>& map, long s, long s_prime) {
    if (s_prime % s != 0) throw DivisibilityError("measure_pushforward_check: s must divide s'");
    // mass pushed onto each point of X_s must be (1/s') * fiber = 1/s, exactly
    std::vector<Rational> mass(s, Rational(0));
    Rational unit = Rational(1) / Rational(s_prime);
    for (int image : map) {
        if (image < 0 || image >= s) return false;
        mass[image] += unit;
    }
    Rational want = Rational(1) / Rational(s);
    return std::all_of(mass.begin(), mass.end(), [&](const Rational& m) { return m == want; });
}

bool measure_pushforward_check(const SelfMapSystem& system, long s, long s_prime) {
    return measure_pushforward_check_map(system.projection(s, s_prime), s, s_prime);
}

Cyclotomic fabulous_state(long c, int modulus, const CrossedElement& a) {
    Cyclotomic acc = Cyclotomic::zero(modulus);
    for (const auto& m : a.monomials()) {
        if (m.n1 != 1 || m.n2 != 1) continue;  // zero-temperature limit kills shifts
        if (modulus % m.a.level() != 0)
            throw LevelMismatch("fabulous_state: element level incompatible with modulus");
        acc = acc + m.a.at_level(modulus).evaluate_exact(c);
    }
    return acc;
}

bool fabulous_check(long c, int modulus, long alpha, const CrossedElement& a) {
    long al = ((alpha % modulus) + modulus) % modulus;
    if (std::gcd(al == 0 ? static_cast<long>(modulus) : al, static_cast<long>(modulus)) != 1)
        throw NotAUnit("fabulous_check: alpha not a unit");
    Cyclotomic value = fabulous_state(c, modulus, a);
    // Galois action on the value: zeta -> zeta^alpha
    Cyclotomic lhs = Cyclotomic::zero(modulus);
    {
        const auto& coeffs = value.coeffs();
        for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
            if (coeffs[j] == 0) continue;
            lhs = lhs + Cyclotomic::root_of_unity(modulus, j * al).scaled(coeffs[j]);
        }
    }
    CrossedElement moved;
    bool have = false;
    for (const auto& m : a.monomials()) {
        CrossedElement term = CrossedElement::monomial(
            m.n1, galois_act(al, m.a.at_level(modulus)), m.n2);
        moved = have ? moved + term : term;
        have = true;
    }
    Cyclotomic rhs = have ? fabulous_state(c, modulus, moved) : Cyclotomic::zero(modulus);
    return lhs == rhs;
}

}  // namespace adelic::endomotive
