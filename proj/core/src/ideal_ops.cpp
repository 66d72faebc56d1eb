#include "stdbases/ideal_ops.hpp"

#include "stdbases/errors.hpp"

#include <algorithm>

namespace stdbases {

namespace {

// Exact quotient h / g for h ∈ (g).
Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
    MonomialOrder order = MonomialOrder::degrevlex();
    Polynomial quotient(h.ring());
    Polynomial rest = h;
    const Term& gl = g.leading_term(order);
    while (!rest.is_zero()) {
        const Term& rl = rest.leading_term(order);
        if (!gl.monomial.divides(rl.monomial))
            throw InternalCheckError("claimed multiple is not divisible");
        Monomial m = rl.monomial / gl.monomial;
        Rational c = rl.coefficient / gl.coefficient;
        quotient = quotient + Polynomial::from_term(h.ring(), m, c);
        rest = rest - g.multiplied_by_term(m, c);
    }
    return quotient;
}

std::string fresh_variable_name(const RingDescriptor& ring) {
    std::string name = "@t";
    while (ring.index_of(name) >= 0) name += "@";
    return name;
}

Polynomial permute_polynomial(const Polynomial& f, const std::vector<int>& perm,
                              const RingDescriptor& target) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<unsigned> e(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            e[i] = t.monomial.exponent(perm[i]);
        terms.push_back(Term{Monomial(std::move(e)), t.coefficient});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace

bool ideal_member(const Polynomial& f, const Ideal& I) {
    require_same_ring(f.ring(), I.ring());
    return normal_form(f, I).is_zero();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
    require_same_ring(outer.ring(), inner.ring());
    for (const auto& g : inner.generators())
        if (!ideal_member(g, outer)) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    return ideal_contains(I, J) && ideal_contains(J, I);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());

    const RingDescriptor& ring = I.ring();
    RingDescriptor extended = ring.inserted(0, fresh_variable_name(ring));
    Polynomial t = Polynomial::variable(extended, 0);
    Polynomial one_minus_t = Polynomial::constant(extended, 1) - t;

    auto lift = [&](const Polynomial& g) {
        std::vector<Term> terms;
        for (const auto& tm : g.terms()) {
            std::vector<unsigned> e = tm.monomial.exponents();
            e.insert(e.begin(), 0u);
            terms.push_back(Term{Monomial(std::move(e)), tm.coefficient});
        }
        return Polynomial::from_terms(extended, std::move(terms));
    };
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * lift(g));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * lift(g));

    Ideal extended_ideal(extended, std::move(gens));
    const auto& basis = extended_ideal.groebner(MonomialOrder::block_elimination(1));

    std::vector<Polynomial> result;
    for (const auto& b : basis) {
        if (depends_on_variable(b, 0)) continue;
        result.push_back(b.dehomogenized(0));
    }
    return Ideal(ring, std::move(result));
}

Ideal colon(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    if (J.is_zero()) throw Error("colon by the zero ideal");
    if (I.is_zero()) return Ideal::zero(I.ring());

    bool first = true;
    Ideal result = Ideal::zero(I.ring());
    for (const auto& g : J.generators()) {
        Ideal meet = intersect(I, Ideal::principal(g));
        std::vector<Polynomial> quotients;
        quotients.reserve(meet.generators().size());
        for (const auto& h : meet.generators()) quotients.push_back(exact_divide(h, g));
        Ideal part(I.ring(), std::move(quotients));
        result = first ? part : intersect(result, part);
        first = false;
    }
    return result;
}

SaturationResult saturate(const Ideal& I, const Ideal& J) {
    if (J.is_zero()) throw Error("saturation by the zero ideal");
    Ideal current = I;
    for (int k = 0;; ++k) {
        Ideal next = colon(current, J);
        if (ideal_equal(next, current)) return SaturationResult{current, k};
        current = next;
    }
}

SaturationResult saturate_irrelevant(const Ideal& I) {
    if (!I.is_homogeneous())
        throw UnsupportedInputError("saturation certificate requires a homogeneous ideal");
    return saturate(I, Ideal::irrelevant(I.ring()));
}

bool is_regular_for_quotient(const Polynomial& L, const Ideal& I) {
    if (L.is_zero()) throw Error("regularity of the zero form is undefined");
    if (ideal_member(Polynomial::constant(I.ring(), 1), I))
        throw Error("regularity is undefined on the zero ring");
    return ideal_equal(colon(I, Ideal::principal(L)), I);
}

Ideal saturation_by_variable(const Ideal& I, int var) {
    const RingDescriptor& ring = I.ring();
    if (var < 0 || var >= ring.arity()) throw Error("variable index out of range");
    if (!I.is_homogeneous())
        throw UnsupportedInputError("variable saturation shortcut requires a homogeneous ideal");
    if (I.is_zero()) return I;
    if (const auto* cached = I.cached_variable_saturation(var))
        return Ideal(ring, *cached);

    int n = ring.arity();
    std::vector<int> perm;  // position i of permuted ring holds old variable perm[i]
    for (int i = 0; i < n; ++i)
        if (i != var) perm.push_back(i);
    perm.push_back(var);
    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;

    RingDescriptor permuted = ring.permuted(perm);
    std::vector<Polynomial> moved;
    moved.reserve(I.generators().size());
    for (const auto& g : I.generators()) moved.push_back(permute_polynomial(g, perm, permuted));

    // With the saturating variable smallest in degrevlex, stripping its
    // powers from a reduced basis of a homogeneous ideal generates I : y^∞.
    Ideal shuffled(permuted, std::move(moved));
    std::vector<Polynomial> stripped;
    for (const auto& b : shuffled.groebner()) {
        unsigned power = b.monomial_content().exponent(n - 1);
        if (power == 0) {
            stripped.push_back(b);
            continue;
        }
        std::vector<unsigned> e(static_cast<std::size_t>(n), 0u);
        e[static_cast<std::size_t>(n - 1)] = power;
        stripped.push_back(b.divided_by_monomial(Monomial(std::move(e))));
    }

    std::vector<Polynomial> back;
    back.reserve(stripped.size());
    for (const auto& b : stripped) back.push_back(permute_polynomial(b, inverse, ring));
    I.store_variable_saturation(var, back);
    return Ideal(ring, std::move(back));
}

Ideal fast_saturation(const Ideal& I) {
    if (I.is_zero()) return I;
    Ideal result = saturation_by_variable(I, 0);
    for (int v = 1; v < I.ring().arity(); ++v)
        result = intersect(result, saturation_by_variable(I, v));
    return result;
}

bool in_saturation(const Polynomial& f, const Ideal& I) {
    for (int v = 0; v < I.ring().arity(); ++v)
        if (!ideal_member(f, saturation_by_variable(I, v))) return false;
    return true;
}

int variable_membership_exponent(const Polynomial& f, const Ideal& I, int var) {
    if (!ideal_member(f, saturation_by_variable(I, var))) return -1;
    Polynomial y = Polynomial::variable(I.ring(), var);
    Polynomial power = f;
    for (int n = 0;; ++n) {
        if (ideal_member(power, I)) return n;
        power = power * y;
    }
}

int membership_exponent(const Polynomial& f, const Ideal& I, bool known_member) {
    int n = I.ring().arity();
    long long bound = 1;
    if (!known_member) {
        for (int v = 0; v < n; ++v) {
            int e = variable_membership_exponent(f, I, v);
            if (e < 0) return -1;
            if (e > 0) bound += e - 1;
        }
    }
    for (int t = 0;; ++t) {
        bool all_in = true;
        for (const auto& m : monomials_of_degree(n, t)) {
            if (!ideal_member(f.multiplied_by_term(m, 1), I)) {
                all_in = false;
                break;
            }
        }
        if (all_in) return t;
        if (!known_member && t > bound)
            throw InternalCheckError("membership exponent exceeded its pigeonhole bound");
    }
}

}  // namespace stdbases
