#pragma once

#include "stdbases/monomial.hpp"
#include "stdbases/rational.hpp"
#include "stdbases/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stdbases {

struct Term {
    Monomial monomial;
    Rational coefficient;
};

/// Immutable sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted descending in degrevlex and never store zeros, so
/// two polynomials are equal iff their term lists are equal.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingDescriptor ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingDescriptor& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingDescriptor& ring, const Rational& c);
    static Polynomial from_term(const RingDescriptor& ring, Monomial m, Rational c);
    static Polynomial variable(const RingDescriptor& ring, int index, unsigned power = 1);
    /// Builds from an unsorted term list (combines duplicates, drops zeros).
    static Polynomial from_terms(const RingDescriptor& ring, std::vector<Term> terms);

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    /// Nonzero homogeneous of degree 1.
    bool is_linear_form() const { return !is_zero() && is_homogeneous() && degree() == 1; }

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial multiplied_by_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& g) const {
        if (ring_ != g.ring_) return false;
        if (terms_.size() != g.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].monomial != g.terms_[i].monomial ||
                terms_[i].coefficient != g.terms_[i].coefficient)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    /// Largest term under the given order. Throws on the zero polynomial.
    const Term& leading_term(const MonomialOrder& order) const;

    /// Substitute 1 for the chosen variable; the result lives in the ring
    /// with that variable removed.
    Polynomial dehomogenized(int var_index) const;

    /// Inverse of dehomogenization: pads each term with a power of a fresh
    /// variable inserted at var_index so the result is homogeneous of the
    /// original total degree.
    Polynomial homogenized(int var_index, const std::string& var_name) const;

    /// Substitutes variable i by the linear form sum_j matrix[i][j] * y_j.
    /// The matrix must be square of ring arity and invertible.
    Polynomial linear_change(const std::vector<std::vector<Rational>>& matrix) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Divides the coefficients by their rational content so the result has
    /// coprime integer coefficients with a positive leading one. Zero stays
    /// zero. Generates the same ideal; printing and comparisons get stable.
    Polynomial primitive_normalized() const;

    /// Largest monomial dividing every term (the monomial content).
    Monomial monomial_content() const;
    /// Exact division by a monomial that divides every term.
    Polynomial divided_by_monomial(const Monomial& m) const;

    std::string to_string() const;

private:
    RingDescriptor ring_;
    std::vector<Term> terms_;
};

bool depends_on_variable(const Polynomial& f, int var);

}  // namespace stdbases
