#include "stdbases/graded.hpp"

#include "stdbases/errors.hpp"
#include "stdbases/ideal_ops.hpp"
#include "stdbases/linalg.hpp"

#include <algorithm>

namespace stdbases {

namespace {

// Column indices follow the descending degrevlex listing of the degree-d
// monomials, so pivots land on the largest monomials.
std::map<std::vector<unsigned>, int> column_index(const std::vector<Monomial>& monomials) {
    std::map<std::vector<unsigned>, int> index;
    for (int i = 0; i < static_cast<int>(monomials.size()); ++i)
        index.emplace(monomials[static_cast<std::size_t>(i)].exponents(), i);
    return index;
}

RowSpace::Row to_row(const Polynomial& f, const std::map<std::vector<unsigned>, int>& index) {
    RowSpace::Row row;
    for (const auto& t : f.terms())
        row.emplace(index.at(t.monomial.exponents()), t.coefficient);
    return row;
}

Polynomial from_row(const RowSpace::Row& row, const std::vector<Monomial>& monomials,
                    const RingDescriptor& ring) {
    std::vector<Term> terms;
    terms.reserve(row.size());
    for (const auto& [col, c] : row)
        terms.push_back(Term{monomials[static_cast<std::size_t>(col)], c});
    return Polynomial::from_terms(ring, std::move(terms));
}

struct GradedScan {
    // basis rows of I_d for the previous degree, as polynomials
    std::vector<Polynomial> previous;
    std::map<int, int> betti;
    std::vector<Polynomial> chosen;  // standard basis elements
};

// Walks degrees alpha..limit once; feeds I_{d-1}S_1 into degree d.
GradedScan scan_degrees(const Ideal& I, const std::vector<Polynomial>& preferred, int limit) {
    GradedScan scan;
    if (I.is_zero()) return scan;
    const RingDescriptor& ring = I.ring();

    int alpha = limit + 1;
    for (const auto& g : I.generators()) alpha = std::min(alpha, g.degree());

    for (int d = alpha; d <= limit; ++d) {
        auto monomials = monomials_of_degree(ring.arity(), d);
        auto index = column_index(monomials);
        RowSpace space;
        // (I_{d-1} S_1)_d
        for (const auto& b : scan.previous) {
            for (int v = 0; v < ring.arity(); ++v) {
                std::vector<unsigned> e(static_cast<std::size_t>(ring.arity()), 0u);
                e[static_cast<std::size_t>(v)] = 1;
                space.insert(to_row(b.multiplied_by_term(Monomial(std::move(e)), 1), index));
            }
        }
        int lower = space.rank();

        // preferred pivots first (the user's generators, in order) ...
        for (const auto& g : preferred)
            if (g.degree() == d && space.insert(to_row(g, index)))
                scan.chosen.push_back(g);
        // ... then the remaining generators close the span of I_d
        for (const auto& g : I.generators())
            if (g.degree() == d) space.insert(to_row(g, index));

        int count = space.rank() - lower;
        if (count > 0) scan.betti[d] = count;

        scan.previous.clear();
        for (const auto& [pivot, row] : space.rows())
            scan.previous.push_back(from_row(row, monomials, ring));
    }
    return scan;
}

int degree_limit(const Ideal& I) {
    int limit = I.max_generator_degree();
    for (const auto& g : I.groebner()) limit = std::max(limit, g.degree());
    return limit;
}

}  // namespace

GradedPieceBasis graded_piece(const Ideal& I, int degree) {
    if (!I.is_homogeneous())
        throw UnsupportedInputError("graded pieces require a homogeneous ideal");
    if (degree < 0) throw Error("degree must be non-negative");

    GradedPieceBasis piece;
    piece.degree = degree;
    if (I.is_zero()) return piece;

    const RingDescriptor& ring = I.ring();
    auto monomials = monomials_of_degree(ring.arity(), degree);
    auto index = column_index(monomials);
    RowSpace space;
    for (const auto& g : I.generators()) {
        int gap = degree - g.degree();
        if (gap < 0) continue;
        for (const auto& m : monomials_of_degree(ring.arity(), gap))
            space.insert(to_row(g.multiplied_by_term(m, 1), index));
    }
    for (const auto& [pivot, row] : space.rows())
        piece.basis.push_back(from_row(row, monomials, ring));
    piece.dimension = space.rank();
    return piece;
}

std::map<int, int> StandardBasis::degree_histogram() const {
    std::map<int, int> h;
    for (const auto& e : elements) ++h[e.degree()];
    return h;
}

Ideal StandardBasis::deleted_ideal(int i) const {
    std::vector<Polynomial> gens;
    gens.reserve(elements.size());
    for (int j = 0; j < size(); ++j)
        if (j != i) gens.push_back(elements[static_cast<std::size_t>(j)]);
    return Ideal(ideal.ring(), std::move(gens));
}

StandardBasis StandardBasis::with_element(int i, Polynomial replacement) const {
    StandardBasis out = *this;
    out.elements.at(static_cast<std::size_t>(i)) = std::move(replacement);
    return out;
}

StandardBasis extract_standard_basis(const std::vector<Polynomial>& generators) {
    std::vector<Polynomial> gens;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw UnsupportedInputError("standard bases require homogeneous generators");
        gens.push_back(g);
    }
    if (gens.empty()) throw Error("cannot extract a basis from the zero ideal");
    // stable degree sort keeps the user's order inside each degree
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });

    Ideal I(gens.front().ring(), gens);
    auto scan = scan_degrees(I, gens, degree_limit(I));
    return StandardBasis{std::move(scan.chosen), std::move(I)};
}

std::map<int, int> first_betti(const Ideal& I) {
    if (!I.is_homogeneous())
        throw UnsupportedInputError("Betti numbers require a homogeneous ideal");
    if (I.is_zero()) return {};
    return scan_degrees(I, {}, degree_limit(I)).betti;
}

bool verify_standard_basis(const StandardBasis& basis) {
    if (basis.elements.empty()) return false;
    for (int i = 1; i < basis.size(); ++i)
        if (basis.degree(i - 1) > basis.degree(i)) return false;

    Ideal from_elements(basis.ideal.ring(), basis.elements);
    if (!ideal_equal(from_elements, basis.ideal)) return false;

    if (basis.degree_histogram() != first_betti(basis.ideal)) return false;

    // per-degree independence modulo I_{d-1}S_1
    auto scan = scan_degrees(basis.ideal, basis.elements, basis.max_degree());
    if (static_cast<int>(scan.chosen.size()) != basis.size()) return false;
    for (int i = 0; i < basis.size(); ++i)
        if (scan.chosen[static_cast<std::size_t>(i)] != basis.elements[static_cast<std::size_t>(i)])
            return false;
    return true;
}

}  // namespace stdbases
