#pragma once

#include "stdbases/ideal.hpp"

namespace stdbases {

struct BuchbergerOptions {
    /// Orders the pair queue by sugar degree instead of lcm degree.
    bool sugar_strategy = false;
};

/// Buchberger with the coprimality and chain criteria, degree-graded pair
/// queue and content normalization after every reduction. Returns the unique
/// reduced basis (primitive integer coefficients, positive leading one),
/// sorted ascending by leading monomial.
std::vector<Polynomial> reduced_groebner(const RingDescriptor& ring,
                                         const std::vector<Polynomial>& generators,
                                         const MonomialOrder& order,
                                         const BuchbergerOptions& options = {});

/// Full remainder of f on division by `basis`: no term of the result is
/// divisible by a leading term of the basis. Exact; independent of the
/// scaling of the basis elements.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Remainder against the cached reduced basis of I. normal_form(f) == 0 iff
/// f lies in I.
Polynomial normal_form(const Polynomial& f, const Ideal& I,
                       const MonomialOrder& order = MonomialOrder::degrevlex());

}  // namespace stdbases
