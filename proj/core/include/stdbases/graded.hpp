#pragma once

#include "stdbases/ideal.hpp"

#include <map>

namespace stdbases {

struct GradedPieceBasis {
    int degree = 0;
    std::vector<Polynomial> basis;  // row-reduced, linearly independent
    int dimension = 0;
};

/// Row-reduced K-basis of I_d (the span of all monomial multiples of the
/// generators landing in degree d).
GradedPieceBasis graded_piece(const Ideal& I, int degree);

/// Ordered standard basis: the degree-d elements map to a K-basis of
/// I_d/(I_{d-1} S_1). Weakly increasing degrees.
struct StandardBasis {
    std::vector<Polynomial> elements;
    Ideal ideal;  // the ideal the elements generate

    int size() const { return static_cast<int>(elements.size()); }
    const Polynomial& element(int i) const { return elements.at(static_cast<std::size_t>(i)); }
    int degree(int i) const { return element(i).degree(); }
    int min_degree() const { return elements.empty() ? -1 : elements.front().degree(); }
    int max_degree() const { return elements.empty() ? -1 : elements.back().degree(); }
    std::map<int, int> degree_histogram() const;

    /// The ideal generated by the basis minus element i.
    Ideal deleted_ideal(int i) const;
    /// Basis with element i replaced (same degree); keeps the origin ideal.
    StandardBasis with_element(int i, Polynomial replacement) const;
};

/// Extracts a standard basis from any homogeneous generating set,
/// degree by degree, preferring the given generators as pivots.
StandardBasis extract_standard_basis(const std::vector<Polynomial>& generators);

/// First-level graded Betti numbers: degree -> dim I_d - dim (I_{d-1}S_1)_d,
/// zero entries omitted. Equal to the per-degree sizes of every standard
/// basis of I.
std::map<int, int> first_betti(const Ideal& I);

/// Re-checks the defining property of a standard basis (generates the ideal,
/// per-degree counts match the Betti numbers, per-degree elements are
/// independent modulo I_{d-1}S_1).
bool verify_standard_basis(const StandardBasis& basis);

}  // namespace stdbases
