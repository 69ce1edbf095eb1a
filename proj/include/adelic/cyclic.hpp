#pragma once

// Cyclic-category operators on tensor powers of a finite-dimensional unital
// algebra, realized on chains: faces multiply consecutive factors (the top
// face wraps), degeneracies insert the unit, the cyclic operator rotates.
// Everything is exact rational arithmetic.

#include <string>
#include <vector>

#include "adelic/exact.hpp"

namespace adelic::cyclic {

using exact::QMatrix;
using exact::Rational;

struct FiniteAlgebra {
    int dim = 0;
    std::vector<Rational> unit;
    // e_i e_j = sum_k mul[i][j][k] e_k
    std::vector<std::vector<std::vector<Rational>>> mul;

    std::vector<Rational> multiply(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) const;
    // checks associativity on the basis and that `unit` is a two-sided identity
    void validate() const;

    static FiniteAlgebra q_square();          // Q x Q
    static FiniteAlgebra rational_matrices2();  // M_2(Q)
    static FiniteAlgebra truncated_polynomials3();  // Q[t]/(t^3)
};

struct ChainTerm {
    Rational coeff;
    std::vector<std::vector<Rational>> factors;  // (degree+1) algebra elements
};

struct CyclicChain {
    int degree = 0;
    std::vector<ChainTerm> terms;
};

CyclicChain basis_chain(const FiniteAlgebra& alg, const std::vector<int>& basis_indices);

CyclicChain face(const FiniteAlgebra& alg, int i, const CyclicChain& chain);
CyclicChain degeneracy(const FiniteAlgebra& alg, int j, const CyclicChain& chain);
CyclicChain cyclic(const CyclicChain& chain);
CyclicChain add(const CyclicChain& a, const CyclicChain& b);
CyclicChain scale(const CyclicChain& a, const Rational& c);

// exact comparison through coordinates in the tensor-power basis
bool chains_equal(const FiniteAlgebra& alg, const CyclicChain& a, const CyclicChain& b);

struct RelationInstance {
    std::string family;
    int degree;
    bool passed;
};

struct RelationReport {
    std::vector<RelationInstance> instances;
    bool all_passed() const;
};

// Tests every relation family of the cyclic category, realized on chains,
// on all basis chains up to degree n_max. Multilinearity makes the basis
// chains a spanning check.
RelationReport check_relations(const FiniteAlgebra& alg, int n_max);

// Same report with the cyclic operator replaced by rotation by two; the
// cyclic relation families must then fail (negative control).
RelationReport check_relations_corrupted(const FiniteAlgebra& alg, int n_max);

// phi given by its values on the basis; must satisfy phi(ab) = phi(ba).
Rational trace_morphism(const FiniteAlgebra& alg, const std::vector<Rational>& phi,
                        const CyclicChain& chain);

// chains over B (x) M_k with pure-tensor factors
struct MatFactor {
    std::vector<Rational> b;
    QMatrix t;
};

struct MatChainTerm {
    Rational coeff;
    std::vector<MatFactor> factors;
};

struct MatChain {
    int degree = 0;
    int k = 0;  // matrix size
    std::vector<MatChainTerm> terms;
};

MatChain mat_face(const FiniteAlgebra& B, int i, const MatChain& chain);
MatChain mat_degeneracy(const FiniteAlgebra& B, int j, const MatChain& chain);
MatChain mat_cyclic(const MatChain& chain);

// Trace((x_0 (x) t_0) (x) ... (x) (x_n (x) t_n))
//   = x_0 (x) ... (x) x_n * Trace(t_0 t_1 ... t_n)
CyclicChain partial_trace(const FiniteAlgebra& B, const MatChain& chain);

// basis of alg/[alg, alg]
std::vector<std::vector<Rational>> hc0(const FiniteAlgebra& alg);

}  // namespace adelic::cyclic
