#include "adelic/cyclic.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace adelic::cyclic {

std::vector<Rational> FiniteAlgebra::multiply(const std::vector<Rational>& a,
                                              const std::vector<Rational>& b) const {
    if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
        throw DimensionMismatch("FiniteAlgebra: element dimension mismatch");
    std::vector<Rational> out(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            Rational c = a[i] * b[j];
            for (int k = 0; k < dim; ++k) out[k] += c * mul[i][j][k];
        }
    }
    return out;
}

void FiniteAlgebra::validate() const {
    for (int i = 0; i < dim; ++i) {
        std::vector<Rational> ei(dim, Rational(0));
        ei[i] = 1;
        if (multiply(unit, ei) != ei || multiply(ei, unit) != ei)
            throw Error("FiniteAlgebra: unit is not a two-sided identity");
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                std::vector<Rational> ei(dim, Rational(0)), ej(dim, Rational(0)),
                    ek(dim, Rational(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek)))
                    throw Error("FiniteAlgebra: structure constants not associative");
            }
}

FiniteAlgebra FiniteAlgebra::q_square() {
    FiniteAlgebra a;
    a.dim = 2;
    a.unit = {Rational(1), Rational(1)};
    a.mul.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
    a.mul[0][0][0] = 1;
    a.mul[1][1][1] = 1;
    return a;
}

FiniteAlgebra FiniteAlgebra::rational_matrices2() {
    // basis e11, e12, e21, e22; e_ab e_cd = [b == c] e_ad
    FiniteAlgebra a;
    a.dim = 4;
    a.unit = {Rational(1), Rational(0), Rational(0), Rational(1)};
    a.mul.assign(4, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4, Rational(0))));
    auto idx = [](int r, int c) { return 2 * r + c; };
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int r2 = 0; r2 < 2; ++r2)
                for (int c2 = 0; c2 < 2; ++c2)
                    if (c == r2) a.mul[idx(r, c)][idx(r2, c2)][idx(r, c2)] = 1;
    return a;
}

FiniteAlgebra FiniteAlgebra::truncated_polynomials3() {
    FiniteAlgebra a;
    a.dim = 3;
    a.unit = {Rational(1), Rational(0), Rational(0)};
    a.mul.assign(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3) a.mul[i][j][i + j] = 1;
    return a;
}

CyclicChain basis_chain(const FiniteAlgebra& alg, const std::vector<int>& basis_indices) {
    CyclicChain chain;
    chain.degree = static_cast<int>(basis_indices.size()) - 1;
    ChainTerm term;
    term.coeff = 1;
    for (int b : basis_indices) {
        std::vector<Rational> e(alg.dim, Rational(0));
        e.at(b) = 1;
        term.factors.push_back(std::move(e));
    }
    chain.terms.push_back(std::move(term));
    return chain;
}

CyclicChain face(const FiniteAlgebra& alg, int i, const CyclicChain& chain) {
    int n = chain.degree;
    if (n < 1) throw IndexError("face: degree must be >= 1");
    if (i < 0 || i > n) throw IndexError("face: index out of range");
    CyclicChain out;
    out.degree = n - 1;
    for (const auto& term : chain.terms) {
        ChainTerm t;
        t.coeff = term.coeff;
        if (i < n) {
            for (int j = 0; j < i; ++j) t.factors.push_back(term.factors[j]);
            t.factors.push_back(alg.multiply(term.factors[i], term.factors[i + 1]));
            for (int j = i + 2; j <= n; ++j) t.factors.push_back(term.factors[j]);
        } else {
            // d_n: x_n x_0 (x) x_1 (x) ... (x) x_{n-1}
            t.factors.push_back(alg.multiply(term.factors[n], term.factors[0]));
            for (int j = 1; j < n; ++j) t.factors.push_back(term.factors[j]);
        }
        out.terms.push_back(std::move(t));
    }
    return out;
}

CyclicChain degeneracy(const FiniteAlgebra& alg, int j, const CyclicChain& chain) {
    int n = chain.degree;
    if (j < 0 || j > n) throw IndexError("degeneracy: index out of range");
    CyclicChain out;
    out.degree = n + 1;
    for (const auto& term : chain.terms) {
        ChainTerm t;
        t.coeff = term.coeff;
        for (int p = 0; p <= j; ++p) t.factors.push_back(term.factors[p]);
        t.factors.push_back(alg.unit);
        for (int p = j + 1; p <= n; ++p) t.factors.push_back(term.factors[p]);
        out.terms.push_back(std::move(t));
    }
    return out;
}

CyclicChain cyclic(const CyclicChain& chain) {
    CyclicChain out;
    out.degree = chain.degree;
    for (const auto& term : chain.terms) {
        ChainTerm t;
        t.coeff = term.coeff;
        t.factors.push_back(term.factors.back());
        for (int p = 0; p < chain.degree; ++p) t.factors.push_back(term.factors[p]);
        out.terms.push_back(std::move(t));
    }
    return out;
}

CyclicChain add(const CyclicChain& a, const CyclicChain& b) {
    if (a.degree != b.degree) throw DimensionMismatch("add: chain degrees differ");
    CyclicChain out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

CyclicChain scale(const CyclicChain& a, const Rational& c) {
    CyclicChain out = a;
    for (auto& t : out.terms) t.coeff *= c;
    return out;
}

namespace {

// dense coordinates in the basis of the (degree+1) tensor power
std::map<std::vector<int>, Rational> coordinates(const FiniteAlgebra& alg,
                                                 const CyclicChain& chain) {
    std::map<std::vector<int>, Rational> coords;
    int slots = chain.degree + 1;
    std::vector<int> idx(slots, 0);
    for (const auto& term : chain.terms) {
        std::fill(idx.begin(), idx.end(), 0);
        // iterate the support of the pure tensor expansion
        std::function<void(int, Rational)> rec = [&](int slot, Rational c) {
            if (slot == slots) {
                Rational& v = coords[idx];
                v += c;
                if (v == 0) coords.erase(idx);
                return;
            }
            for (int b = 0; b < alg.dim; ++b) {
                const Rational& f = term.factors[slot][b];
                if (f == 0) continue;
                idx[slot] = b;
                rec(slot + 1, c * f);
            }
        };
        rec(0, term.coeff);
    }
    return coords;
}

}  // namespace

bool chains_equal(const FiniteAlgebra& alg, const CyclicChain& a, const CyclicChain& b) {
    if (a.degree != b.degree) return false;
    return coordinates(alg, a) == coordinates(alg, b);
}

bool RelationReport::all_passed() const {
    return std::all_of(instances.begin(), instances.end(),
                       [](const RelationInstance& r) { return r.passed; });
}

namespace {

using ChainOp = std::function<CyclicChain(const CyclicChain&)>;

RelationReport run_relations(const FiniteAlgebra& alg, int n_max, const ChainOp& rotate) {
    RelationReport report;
    auto d = [&](int i, const CyclicChain& c) { return face(alg, i, c); };
    auto s = [&](int j, const CyclicChain& c) { return degeneracy(alg, j, c); };

    auto record = [&](const std::string& family, int degree, bool ok) {
        report.instances.push_back({family, degree, ok});
    };

    // enumerate all basis chains of each degree
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::vector<int>> basis_tuples;
        std::vector<int> tuple(n + 1, 0);
        std::function<void(int)> gen = [&](int pos) {
            if (pos == n + 1) {
                basis_tuples.push_back(tuple);
                return;
            }
            for (int b = 0; b < alg.dim; ++b) {
                tuple[pos] = b;
                gen(pos + 1);
            }
        };
        gen(0);

        auto all_equal = [&](const std::function<CyclicChain(const CyclicChain&)>& lhs,
                             const std::function<CyclicChain(const CyclicChain&)>& rhs) {
            for (const auto& bt : basis_tuples) {
                CyclicChain c = basis_chain(alg, bt);
                if (!chains_equal(alg, lhs(c), rhs(c))) return false;
            }
            return true;
        };

        if (n >= 2) {
            bool ok = true;
            for (int j = 1; j <= n && ok; ++j)
                for (int i = 0; i < j && ok; ++i)
                    ok = all_equal([&](const CyclicChain& c) { return d(i, d(j, c)); },
                                   [&](const CyclicChain& c) { return d(j - 1, d(i, c)); });
            record("face-face", n, ok);
        }
        {
            bool ok = true;
            for (int j = 0; j <= n && ok; ++j)
                for (int i = 0; i <= j && ok; ++i)
                    ok = all_equal([&](const CyclicChain& c) { return s(i, s(j, c)); },
                                   [&](const CyclicChain& c) { return s(j + 1, s(i, c)); });
            record("degeneracy-degeneracy", n, ok);
        }
        {
            bool ok_lt = true, ok_eq = true, ok_eq2 = true, ok_gt = true;
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    auto both = [&](const CyclicChain& c) { return d(i, s(j, c)); };
                    if (i < j) {
                        ok_lt = ok_lt &&
                                all_equal(both, [&](const CyclicChain& c) {
                                    return s(j - 1, d(i, c));
                                });
                    } else if (i == j) {
                        ok_eq = ok_eq && all_equal(both, [](const CyclicChain& c) { return c; });
                    } else if (i == j + 1) {
                        ok_eq2 = ok_eq2 && all_equal(both, [](const CyclicChain& c) { return c; });
                    } else if (n >= 1) {
                        ok_gt = ok_gt &&
                                all_equal(both, [&](const CyclicChain& c) {
                                    return s(j, d(i - 1, c));
                                });
                    }
                }
            record("face-degeneracy (i<j)", n, ok_lt);
            record("face-degeneracy (i=j)", n, ok_eq);
            record("face-degeneracy (i=j+1)", n, ok_eq2);
            record("face-degeneracy (i>j+1)", n, ok_gt);
        }
        if (n >= 1) {
            bool ok_mid = true;
            for (int i = 1; i <= n && ok_mid; ++i)
                ok_mid = all_equal([&](const CyclicChain& c) { return d(i, rotate(c)); },
                                   [&](const CyclicChain& c) { return rotate(d(i - 1, c)); });
            record("face-cyclic (1<=i<=n)", n, ok_mid);
            bool ok0 = all_equal([&](const CyclicChain& c) { return d(0, rotate(c)); },
                                 [&](const CyclicChain& c) { return d(n, c); });
            record("face-cyclic (i=0)", n, ok0);
        }
        {
            bool ok_mid = true;
            for (int i = 1; i <= n && ok_mid; ++i)
                ok_mid = all_equal([&](const CyclicChain& c) { return s(i, rotate(c)); },
                                   [&](const CyclicChain& c) { return rotate(s(i - 1, c)); });
            record("degeneracy-cyclic (1<=i<=n)", n, ok_mid);
            bool ok0 = all_equal(
                [&](const CyclicChain& c) { return s(0, rotate(c)); },
                [&](const CyclicChain& c) { return rotate(rotate(s(n, c))); });
            record("degeneracy-cyclic (i=0)", n, ok0);
        }
        {
            bool ok = all_equal(
                [&](const CyclicChain& c) {
                    CyclicChain r = c;
                    for (int k = 0; k <= n; ++k) r = rotate(r);
                    return r;
                },
                [](const CyclicChain& c) { return c; });
            record("cyclic order n+1", n, ok);
        }
    }
    return report;
}

}  // namespace

RelationReport check_relations(const FiniteAlgebra& alg, int n_max) {
    if (n_max > 5) throw Error("check_relations: n_max capped at 5");
    return run_relations(alg, n_max, [](const CyclicChain& c) { return cyclic(c); });
}

RelationReport check_relations_corrupted(const FiniteAlgebra& alg, int n_max) {
    if (n_max > 5) throw Error("check_relations: n_max capped at 5");
    return run_relations(alg, n_max,
                         [](const CyclicChain& c) { return cyclic(cyclic(c)); });
}

Rational trace_morphism(const FiniteAlgebra& alg, const std::vector<Rational>& phi,
                        const CyclicChain& chain) {
    if (static_cast<int>(phi.size()) != alg.dim)
        throw DimensionMismatch("trace_morphism: functional dimension mismatch");
    auto apply = [&](const std::vector<Rational>& x) {
        Rational acc(0);
        for (int i = 0; i < alg.dim; ++i) acc += phi[i] * x[i];
        return acc;
    };
    // phi must be tracial on basis pairs
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) {
            std::vector<Rational> ei(alg.dim, Rational(0)), ej(alg.dim, Rational(0));
            ei[i] = 1;
            ej[j] = 1;
            if (apply(alg.multiply(ei, ej)) != apply(alg.multiply(ej, ei)))
                throw NotATrace("trace_morphism: phi(ab) != phi(ba) on basis pair");
        }
    Rational acc(0);
    for (const auto& term : chain.terms) {
        std::vector<Rational> prod = term.factors[0];
        for (std::size_t p = 1; p < term.factors.size(); ++p)
            prod = alg.multiply(prod, term.factors[p]);
        acc += term.coeff * apply(prod);
    }
    return acc;
}

namespace {

MatFactor mat_multiply(const FiniteAlgebra& B, const MatFactor& x, const MatFactor& y) {
    MatFactor out;
    out.b = B.multiply(x.b, y.b);
    out.t = x.t * y.t;
    return out;
}

}  // namespace

MatChain mat_face(const FiniteAlgebra& B, int i, const MatChain& chain) {
    int n = chain.degree;
    if (n < 1 || i < 0 || i > n) throw IndexError("mat_face: index out of range");
    MatChain out;
    out.degree = n - 1;
    out.k = chain.k;
    for (const auto& term : chain.terms) {
        MatChainTerm t;
        t.coeff = term.coeff;
        if (i < n) {
            for (int j = 0; j < i; ++j) t.factors.push_back(term.factors[j]);
            t.factors.push_back(mat_multiply(B, term.factors[i], term.factors[i + 1]));
            for (int j = i + 2; j <= n; ++j) t.factors.push_back(term.factors[j]);
        } else {
            t.factors.push_back(mat_multiply(B, term.factors[n], term.factors[0]));
            for (int j = 1; j < n; ++j) t.factors.push_back(term.factors[j]);
        }
        out.terms.push_back(std::move(t));
    }
    return out;
}

MatChain mat_degeneracy(const FiniteAlgebra& B, int j, const MatChain& chain) {
    int n = chain.degree;
    if (j < 0 || j > n) throw IndexError("mat_degeneracy: index out of range");
    MatChain out;
    out.degree = n + 1;
    out.k = chain.k;
    MatFactor unit;
    unit.b = B.unit;
    unit.t = QMatrix::identity(chain.k);
    for (const auto& term : chain.terms) {
        MatChainTerm t;
        t.coeff = term.coeff;
        for (int p = 0; p <= j; ++p) t.factors.push_back(term.factors[p]);
        t.factors.push_back(unit);
        for (int p = j + 1; p <= n; ++p) t.factors.push_back(term.factors[p]);
        out.terms.push_back(std::move(t));
    }
    return out;
}

MatChain mat_cyclic(const MatChain& chain) {
    MatChain out;
    out.degree = chain.degree;
    out.k = chain.k;
    for (const auto& term : chain.terms) {
        MatChainTerm t;
        t.coeff = term.coeff;
        t.factors.push_back(term.factors.back());
        for (int p = 0; p < chain.degree; ++p) t.factors.push_back(term.factors[p]);
        out.terms.push_back(std::move(t));
    }
    return out;
}

CyclicChain partial_trace(const FiniteAlgebra& B, const MatChain& chain) {
    CyclicChain out;
    out.degree = chain.degree;
    for (const auto& term : chain.terms) {
        for (const auto& f : term.factors)
            if (f.t.rows() != chain.k || f.t.cols() != chain.k ||
                static_cast<int>(f.b.size()) != B.dim)
                throw DimensionMismatch("partial_trace: factor shape mismatch");
        QMatrix prod = term.factors[0].t;
        for (std::size_t p = 1; p < term.factors.size(); ++p) prod = prod * term.factors[p].t;
        Rational tr(0);
        for (int i = 0; i < chain.k; ++i) tr += prod.at(i, i);
        if (tr == 0) continue;
        ChainTerm t;
        t.coeff = term.coeff * tr;
        for (const auto& f : term.factors) t.factors.push_back(f.b);
        out.terms.push_back(std::move(t));
    }
    return out;
}

std::vector<std::vector<Rational>> hc0(const FiniteAlgebra& alg) {
    if (alg.dim > 64) throw Error("hc0: dimension capped at 64");
    std::vector<std::vector<Rational>> commutators;
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) {
            std::vector<Rational> ei(alg.dim, Rational(0)), ej(alg.dim, Rational(0));
            ei[i] = 1;
            ej[j] = 1;
            auto ab = alg.multiply(ei, ej);
            auto ba = alg.multiply(ej, ei);
            std::vector<Rational> comm(alg.dim);
            bool nonzero = false;
            for (int k = 0; k < alg.dim; ++k) {
                comm[k] = ab[k] - ba[k];
                if (comm[k] != 0) nonzero = true;
            }
            if (nonzero) commutators.push_back(std::move(comm));
        }
    return exact::quotient_basis(commutators, alg.dim);
}

}  // namespace adelic::cyclic
