#include "stdbases/hilbert.hpp"

#include "stdbases/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stdbases {

namespace {

using Numerator = std::vector<Integer>;  // coefficients of t^0, t^1, ...

Numerator add(const Numerator& a, const Numerator& b) {
    Numerator out(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Numerator shift(const Numerator& a, unsigned k) {
    if (a.empty()) return a;
    Numerator out(a.size() + k, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
    return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), degrevlex_less);
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    return out;
}

struct Memo {
    std::map<std::string, Numerator> table;
    static std::string key(const std::vector<Monomial>& gens) {
        std::ostringstream os;
        for (const auto& m : gens) {
            for (unsigned e : m.exponents()) os << e << ',';
            os << ';';
        }
        return os.str();
    }
};

// Numerator of the Hilbert series of S/(gens) over (1-t)^arity.
Numerator numerator_of(std::vector<Monomial> gens, int arity, Memo& memo) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return Numerator{Integer(1)};
    if (gens.front().is_one()) return Numerator{};

    std::string key = Memo::key(gens);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

    // pure variable powers split multiplicatively
    bool all_pure = true;
    for (const auto& m : gens) {
        int support = 0;
        for (int v = 0; v < arity; ++v)
            if (m.exponent(v)) ++support;
        if (support > 1) { all_pure = false; break; }
    }
    Numerator result;
    if (all_pure) {
        result = Numerator{Integer(1)};
        for (const auto& m : gens) {
            Numerator factor(m.degree() + 1, Integer(0));
            factor[0] = 1;
            factor[m.degree()] = -1;
            Numerator prod(result.size() + factor.size() - 1, Integer(0));
            for (std::size_t i = 0; i < result.size(); ++i)
                for (std::size_t j = 0; j < factor.size(); ++j)
                    prod[i + j] += result[i] * factor[j];
            while (!prod.empty() && prod.back() == 0) prod.pop_back();
            result = std::move(prod);
        }
    } else {
        // Split on the variable occurring most often among the mixed
        // generators; picking it from a support >= 2 generator guarantees
        // both branches strictly shrink.
        std::vector<int> counts(static_cast<std::size_t>(arity), 0);
        for (const auto& m : gens) {
            int support = 0;
            for (int v = 0; v < arity; ++v)
                if (m.exponent(v)) ++support;
            if (support < 2) continue;
            for (int v = 0; v < arity; ++v)
                if (m.exponent(v)) ++counts[static_cast<std::size_t>(v)];
        }
        int pivot = 0;
        for (int v = 1; v < arity; ++v)
            if (counts[static_cast<std::size_t>(v)] > counts[static_cast<std::size_t>(pivot)]) pivot = v;

        std::vector<unsigned> e(static_cast<std::size_t>(arity), 0u);
        e[static_cast<std::size_t>(pivot)] = 1;
        Monomial p(std::move(e));

        // N(I) = N(I + (p)) + t * N(I : p)
        std::vector<Monomial> plus;
        plus.push_back(p);
        for (const auto& m : gens)
            if (!m.exponent(pivot)) plus.push_back(m);
        std::vector<Monomial> quot;
        quot.reserve(gens.size());
        for (const auto& m : gens) quot.push_back(m / gcd(m, p));
        result = add(numerator_of(std::move(plus), arity, memo),
                     shift(numerator_of(std::move(quot), arity, memo), 1));
    }

    memo.table.emplace(std::move(key), result);
    return result;
}

// binomial(d - k + D - 1, D - 1) expanded as a polynomial in d
std::vector<Rational> binomial_polynomial(long long k, int D) {
    // product over s = 1..D-1 of (d - k + s) / (D-1)!
    std::vector<Rational> poly{Rational(1)};
    for (int s = 1; s <= D - 1; ++s) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        Rational constant = Rational(Integer(s) - Integer(k));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i] * constant;
            next[i + 1] += poly[i];
        }
        poly = std::move(next);
    }
    Integer fact = 1;
    for (int s = 2; s <= D - 1; ++s) fact *= s;
    for (auto& c : poly) c /= Rational(fact);
    return poly;
}

}  // namespace

Integer HilbertData::function(int d) const {
    if (d < 0) return 0;
    if (auto it = hilbert_function.find(d); it != hilbert_function.end()) return it->second;
    Integer value = 0;
    for (std::size_t k = 0; k < numerator.size(); ++k)
        value += numerator[k] * binomial(d - static_cast<long long>(k) + arity - 1, arity - 1);
    return value;
}

Rational HilbertData::polynomial_at(int d) const {
    Rational value = 0;
    Rational power = 1;
    for (const auto& c : hilbert_polynomial) {
        value += c * power;
        power *= d;
    }
    return value;
}

HilbertData hilbert_data(const Ideal& I) {
    if (!I.is_homogeneous())
        throw UnsupportedInputError("Hilbert data requires a homogeneous ideal");

    int arity = I.ring().arity();
    std::vector<Monomial> lt;
    for (const auto& g : I.groebner())
        lt.push_back(g.leading_term(MonomialOrder::degrevlex()).monomial);

    Memo memo;
    Numerator numerator = numerator_of(std::move(lt), arity, memo);

    HilbertData data;
    data.arity = arity;
    data.numerator = numerator;

    // reduce by the (1-t) factors to read off dimension and polynomial
    Numerator reduced = numerator;
    int dimension = arity;  // Krull dimension of S/I
    auto value_at_one = [](const Numerator& q) {
        Integer v = 0;
        for (const auto& c : q) v += c;
        return v;
    };
    while (!reduced.empty() && value_at_one(reduced) == 0 && dimension > 0) {
        // divide by (1 - t): the quotient coefficients are the prefix sums
        Numerator quotient(reduced.size() - 1, Integer(0));
        Integer acc = 0;
        for (std::size_t i = 0; i < quotient.size(); ++i) {
            acc += reduced[i];
            quotient[i] = acc;
        }
        while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
        reduced = std::move(quotient);
        --dimension;
    }
    if (reduced.empty()) dimension = 0;

    if (dimension == 0) {
        data.hilbert_polynomial.clear();
    } else {
        std::vector<Rational> poly;
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            auto part = binomial_polynomial(static_cast<long long>(k), dimension);
            if (poly.size() < part.size()) poly.resize(part.size(), Rational(0));
            for (std::size_t i = 0; i < part.size(); ++i)
                poly[i] += part[i] * Rational(reduced[k]);
        }
        while (!poly.empty() && poly.back() == 0) poly.pop_back();
        data.hilbert_polynomial = std::move(poly);
    }

    // exact stabilization degree: provably equal from this bound upward
    int reduced_degree = reduced.empty() ? 0 : static_cast<int>(reduced.size()) - 1;
    int bound = dimension == 0 ? reduced_degree + 1
                               : std::max(0, reduced_degree - dimension + 1);
    int stab = bound;
    while (stab > 0 && Rational(data.function(stab - 1)) == data.polynomial_at(stab - 1)) --stab;
    data.stabilization_degree = stab;

    int horizon = std::max(bound, stab) + 2;
    for (int d = 0; d <= horizon; ++d) data.hilbert_function[d] = data.function(d);

    return data;
}

}  // namespace stdbases
