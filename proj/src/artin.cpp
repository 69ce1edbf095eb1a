#include "adelic/artin.hpp"

#include <algorithm>
#include <numeric>

namespace adelic::artin {

void ArtinObject::validate() const {
    const UnitGroup& g = UnitGroup::of(level);
    if (static_cast<long>(action.size()) != g.size())
        throw DimensionMismatch("ArtinObject: one permutation per unit required");
    for (const auto& perm : action) {
        if (static_cast<int>(perm.size()) != points)
            throw DimensionMismatch("ArtinObject: permutation size mismatch");
        std::vector<bool> seen(points, false);
        for (int p : perm) {
            if (p < 0 || p >= points || seen[p])
                throw Error("ArtinObject: action entry is not a permutation");
            seen[p] = true;
        }
    }
    // homomorphism on all products
    for (std::size_t i = 0; i < g.units.size(); ++i)
        for (std::size_t j = 0; j < g.units.size(); ++j) {
            long prod = (g.units[i] * g.units[j]) % level;
            int pi = g.unit_index(prod);
            for (int p = 0; p < points; ++p)
                if (action[pi][p] != action[i][action[j][p]])
                    throw Error("ArtinObject: action is not a homomorphism");
        }
}

bool ArtinObject::operator==(const ArtinObject& o) const {
    return points == o.points && level == o.level && action == o.action;
}

ArtinObject ArtinObject::lifted_to(int new_level) const {
    if (new_level == level) return *this;
    if (new_level % level != 0) throw LevelMismatch("ArtinObject: invalid level lift");
    const UnitGroup& big = UnitGroup::of(new_level);
    const UnitGroup& small = UnitGroup::of(level);
    ArtinObject out;
    out.points = points;
    out.level = new_level;
    out.action.resize(big.units.size());
    for (std::size_t i = 0; i < big.units.size(); ++i) {
        int si = small.unit_index(big.units[i] % level);
        out.action[i] = action[si];
    }
    return out;
}

ArtinObject ArtinObject::one_point(int level) { return trivial(1, level); }

ArtinObject ArtinObject::trivial(int k, int level) {
    ArtinObject x;
    x.points = k;
    x.level = level;
    const UnitGroup& g = UnitGroup::of(level);
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    x.action.assign(g.units.size(), id);
    return x;
}

ArtinObject ArtinObject::two_point(const DirichletCharacter& chi) {
    if (!chi.is_real()) throw Error("two_point: quadratic character required");
    ArtinObject x;
    x.points = 2;
    x.level = chi.modulus();
    const UnitGroup& g = UnitGroup::of(x.level);
    for (long u : g.units) {
        if (chi.value(u).real() < 0.0)
            x.action.push_back({1, 0});
        else
            x.action.push_back({0, 1});
    }
    return x;
}

ArtinObject ArtinObject::roots_of_unity(int N) {
    const UnitGroup& g = UnitGroup::of(N);
    ArtinObject x;
    x.points = static_cast<int>(g.units.size());
    x.level = N;
    for (long u : g.units) {
        std::vector<int> perm(x.points);
        for (int p = 0; p < x.points; ++p)
            perm[p] = g.unit_index((u * g.units[p]) % N);
        x.action.push_back(std::move(perm));
    }
    return x;
}

ArtinObject ArtinObject::regular(int N) { return roots_of_unity(N); }

QMatrix permutation_matrix(const ArtinObject& x, int unit_index) {
    QMatrix m(x.points, x.points);
    for (int p = 0; p < x.points; ++p) m.at(x.action[unit_index][p], p) = 1;
    return m;
}

void Correspondence::validate() const {
    if (source.level != target.level)
        throw LevelMismatch("Correspondence: source/target level mismatch");
    if (matrix.rows() != target.points || matrix.cols() != source.points)
        throw ShapeMismatch("Correspondence: matrix shape mismatch");
    const UnitGroup& g = UnitGroup::of(source.level);
    for (std::size_t i = 0; i < g.units.size(); ++i) {
        QMatrix pt = permutation_matrix(target, static_cast<int>(i));
        QMatrix ps = permutation_matrix(source, static_cast<int>(i));
        if (!(pt * matrix == matrix * ps))
            throw Error("Correspondence: matrix is not G-invariant");
    }
}

namespace {

std::pair<Correspondence, Correspondence> to_common_level(const Correspondence& a,
                                                          const Correspondence& b) {
    int L = std::lcm(a.source.level, b.source.level);
    Correspondence a2{a.source.lifted_to(L), a.target.lifted_to(L), a.matrix};
    Correspondence b2{b.source.lifted_to(L), b.target.lifted_to(L), b.matrix};
    return {a2, b2};
}

}  // namespace

Correspondence compose(const Correspondence& u, const Correspondence& v) {
    auto [u2, v2] = to_common_level(u, v);
    if (!(u2.target == v2.source))
        throw ShapeMismatch("compose: middle objects differ after level lift");
    Correspondence out{u2.source, v2.target, v2.matrix * u2.matrix};
    return out;
}

Correspondence identity_correspondence(const ArtinObject& x) {
    return Correspondence{x, x, QMatrix::identity(x.points)};
}

std::vector<Correspondence> invariant_basis(const ArtinObject& x, const ArtinObject& y) {
    int L = std::lcm(x.level, y.level);
    ArtinObject xl = x.lifted_to(L), yl = y.lifted_to(L);
    const UnitGroup& g = UnitGroup::of(L);
    // orbits of the diagonal action on X x Y
    std::vector<int> orbit(xl.points * yl.points, -1);
    int orbits = 0;
    for (int start = 0; start < xl.points * yl.points; ++start) {
        if (orbit[start] >= 0) continue;
        std::vector<int> stack = {start};
        orbit[start] = orbits;
        while (!stack.empty()) {
            int cell = stack.back();
            stack.pop_back();
            int px = cell / yl.points, py = cell % yl.points;
            for (std::size_t i = 0; i < g.units.size(); ++i) {
                int nxt = xl.action[i][px] * yl.points + yl.action[i][py];
                if (orbit[nxt] < 0) {
                    orbit[nxt] = orbits;
                    stack.push_back(nxt);
                }
            }
        }
        ++orbits;
    }
    std::vector<Correspondence> basis;
    for (int o = 0; o < orbits; ++o) {
        QMatrix m(yl.points, xl.points);
        for (int cell = 0; cell < xl.points * yl.points; ++cell)
            if (orbit[cell] == o) m.at(cell % yl.points, cell / yl.points) = 1;
        basis.push_back(Correspondence{xl, yl, m});
    }
    return basis;
}

VirtualObject idempotent_range(const Correspondence& p) {
    if (!(p.source == p.target)) throw ShapeMismatch("idempotent_range: endomorphism required");
    if (!(p.matrix * p.matrix == p.matrix))
        throw NotIdempotent("idempotent_range: matrix is not idempotent");
    std::vector<std::vector<Rational>> cols;
    for (int j = 0; j < p.matrix.cols(); ++j) {
        std::vector<Rational> col(p.matrix.rows());
        for (int i = 0; i < p.matrix.rows(); ++i) col[i] = p.matrix.at(i, j);
        cols.push_back(std::move(col));
    }
    VirtualObject out;
    out.range_basis = exact::row_space_basis(cols);
    out.rank = static_cast<int>(out.range_basis.size());
    out.projector = p.matrix;
    return out;
}

std::vector<QMatrix> fiber_functor(const ArtinObject& x) {
    const UnitGroup& g = UnitGroup::of(x.level);
    std::vector<QMatrix> rep;
    for (std::size_t i = 0; i < g.units.size(); ++i)
        rep.push_back(permutation_matrix(x, static_cast<int>(i)));
    return rep;
}

CharacterIdempotent character_idempotent(const DirichletCharacter& chi, const ArtinObject& x) {
    if (x.level % chi.modulus() != 0)
        throw LevelMismatch("character_idempotent: character modulus incompatible with level");
    const UnitGroup& g = UnitGroup::of(x.level);
    CycMatrix acc(x.points, x.points);
    for (std::size_t i = 0; i < g.units.size(); ++i) {
        Cyclotomic c = chi.value_exact(g.units[i]);
        if (c.is_zero()) continue;
        QMatrix p = permutation_matrix(x, static_cast<int>(i));
        for (int r = 0; r < x.points; ++r)
            for (int s = 0; s < x.points; ++s)
                if (p.at(r, s) != 0) acc.at(r, s) = acc.at(r, s) + c.scaled(p.at(r, s));
    }
    Rational inv = Rational(1) / Rational(static_cast<long>(g.units.size()));
    for (auto& c : acc.data) c = c.scaled(inv);
    return CharacterIdempotent{x, chi, acc};
}

}  // namespace adelic::artin
