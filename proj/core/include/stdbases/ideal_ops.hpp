#pragma once

#include "stdbases/groebner.hpp"
#include "stdbases/ideal.hpp"

namespace stdbases {

/// f lies in I. Order-independent (uses the cached degrevlex basis).
bool ideal_member(const Polynomial& f, const Ideal& I);

/// Mutual membership of the generator lists.
bool ideal_equal(const Ideal& I, const Ideal& J);

bool ideal_contains(const Ideal& outer, const Ideal& inner);

/// Generators of I ∩ J via the auxiliary-variable elimination
/// t*I + (1-t)*J, eliminating t.
Ideal intersect(const Ideal& I, const Ideal& J);

/// I : J = { f : f*J ⊆ I }, as the intersection over the generators g of J
/// of (1/g)(I ∩ (g)). J must be nonzero.
Ideal colon(const Ideal& I, const Ideal& J);

struct SaturationResult {
    Ideal ideal;
    /// First index at which the chain I ⊆ I:J ⊆ I:J^2 ⊆ ... is stable;
    /// verified stable by one extra colon.
    int exponent;
};

/// I : J^∞ as the stable value of the colon chain.
SaturationResult saturate(const Ideal& I, const Ideal& J);

/// I : M^∞ for the irrelevant ideal M = (y_0,...,y_n), computed by iterated
/// colon with the full ideal M so the stabilization exponent doubles as a
/// certificate. Requires I homogeneous.
SaturationResult saturate_irrelevant(const Ideal& I);

/// (I : L) == I, i.e. multiplication by L is injective on S/I.
bool is_regular_for_quotient(const Polynomial& L, const Ideal& I);

// --- fast saturation routes -------------------------------------------------
//
// For homogeneous ideals the saturation with respect to a single variable
// falls out of one degrevlex basis with that variable smallest: dividing
// every basis element by its power of the variable generates I : y^∞.
// These are used internally where no chain exponent is needed; the
// elimination-based operations above stay the reference implementations and
// the two routes are cross-checked in the test suite.

/// I : y_var^∞ for homogeneous I.
Ideal saturation_by_variable(const Ideal& I, int var);

/// I^sat = ∩_i (I : y_i^∞); no exponent certificate. Requires I homogeneous.
Ideal fast_saturation(const Ideal& I);

/// f ∈ I^sat, decided variable by variable (f must clear every single
/// variable saturation). Requires I homogeneous.
bool in_saturation(const Polynomial& f, const Ideal& I);

/// Smallest t with f * M^t ⊆ I, or -1 if there is none. When `known_member`
/// is true the caller asserts f ∈ I^sat and the search does not bail out.
int membership_exponent(const Polynomial& f, const Ideal& I, bool known_member = false);

/// Smallest n with f * y_var^n ∈ I, or -1 if there is none.
int variable_membership_exponent(const Polynomial& f, const Ideal& I, int var);

}  // namespace stdbases
