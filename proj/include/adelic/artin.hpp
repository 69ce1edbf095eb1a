#pragma once

// Artin motives with abelian (cyclotomic) Galois action at finite level:
// objects are finite sets with an action of (Z/NZ)^*, morphisms are
// G-invariant rational matrices, plus the pseudo-abelian completion data
// and the character idempotents.

#include <vector>

#include "adelic/characters.hpp"
#include "adelic/exact.hpp"

namespace adelic::artin {

using characters::DirichletCharacter;
using characters::UnitGroup;
using exact::Cyclotomic;
using exact::CycMatrix;
using exact::QMatrix;
using exact::Rational;

struct ArtinObject {
    int points = 0;
    int level = 1;
    // action[i][p] = image of point p under the i-th unit of (Z/level)^*
    std::vector<std::vector<int>> action;

    void validate() const;  // group homomorphism check over all unit products
    bool operator==(const ArtinObject& o) const;

    ArtinObject lifted_to(int new_level) const;

    static ArtinObject one_point(int level);
    static ArtinObject trivial(int k, int level);
    // two points swapped exactly by the units where chi = -1 (chi quadratic)
    static ArtinObject two_point(const DirichletCharacter& chi);
    // primitive N-th roots of unity with the cyclotomic action a -> u a
    static ArtinObject roots_of_unity(int N);
    // points = (Z/NZ)^* with the multiplication action
    static ArtinObject regular(int N);
};

struct Correspondence {
    ArtinObject source;
    ArtinObject target;
    QMatrix matrix;  // target.points x source.points

    void validate() const;  // P_target(g) M = M P_source(g) for every unit g
};

QMatrix permutation_matrix(const ArtinObject& x, int unit_index);

// matrix product V * U after lifting to the common level
Correspondence compose(const Correspondence& u, const Correspondence& v);

Correspondence identity_correspondence(const ArtinObject& x);

// basis of G-invariant matrices: indicator matrices of the orbits of the
// diagonal action on X x Y
std::vector<Correspondence> invariant_basis(const ArtinObject& x, const ArtinObject& y);

struct VirtualObject {
    int rank = 0;
    QMatrix projector;
    std::vector<std::vector<Rational>> range_basis;
};

VirtualObject idempotent_range(const Correspondence& p);

// permutation representation of (Z/NZ)^* on Q^{points}, one matrix per unit
std::vector<QMatrix> fiber_functor(const ArtinObject& x);

struct CharacterIdempotent {
    ArtinObject object;
    DirichletCharacter chi;
    CycMatrix matrix;
};

// p_chi = (1/|G|) sum_g chi(g) P(g), exact cyclotomic coefficients
CharacterIdempotent character_idempotent(const DirichletCharacter& chi, const ArtinObject& x);

}  // namespace adelic::artin
