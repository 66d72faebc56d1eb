#pragma once

#include "stdbases/ideal.hpp"

#include <map>

namespace stdbases {

/// Hilbert data of S/I for a homogeneous ideal I.
struct HilbertData {
    /// h(d) = dim_K (S/I)_d for 0 <= d <= table horizon (at least the
    /// stabilization degree).
    std::map<int, Integer> hilbert_function;
    /// Coefficients of the Hilbert polynomial in d, ascending; empty means
    /// the zero polynomial.
    std::vector<Rational> hilbert_polynomial;
    /// Smallest degree from which the function agrees with the polynomial.
    int stabilization_degree = 0;

    /// Function value at any degree (recomputed outside the table).
    Integer function(int d) const;
    Rational polynomial_at(int d) const;

    bool same_polynomial(const HilbertData& other) const {
        return hilbert_polynomial == other.hilbert_polynomial;
    }

    // kept for the function() evaluation
    std::vector<Integer> numerator;  // Hilbert series numerator over (1-t)^arity
    int arity = 0;
};

/// Hilbert function/polynomial of S/I from the leading-term ideal of the
/// reduced degrevlex basis, via the monomial-ideal splitting recursion.
HilbertData hilbert_data(const Ideal& I);

}  // namespace stdbases
