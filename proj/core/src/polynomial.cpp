#include "stdbases/polynomial.hpp"

#include "stdbases/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stdbases {

namespace {

// descending degrevlex
bool term_before(const Term& a, const Term& b) {
    return degrevlex_less(b.monomial, a.monomial);
}

std::vector<Term> normalize_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial)
            out.back().coefficient += t.coefficient;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.coefficient == 0; }),
              out.end());
    return out;
}

}  // namespace

Polynomial Polynomial::constant(const RingDescriptor& ring, const Rational& c) {
    return from_term(ring, Monomial::one(ring.arity()), c);
}

Polynomial Polynomial::from_term(const RingDescriptor& ring, Monomial m, Rational c) {
    if (m.arity() != ring.arity()) throw Error("monomial arity does not match ring");
    Polynomial f(ring);
    if (c != 0) f.terms_.push_back(Term{std::move(m), std::move(c)});
    return f;
}

Polynomial Polynomial::variable(const RingDescriptor& ring, int index, unsigned power) {
    if (index < 0 || index >= ring.arity()) throw Error("variable index out of range");
    std::vector<unsigned> exps(static_cast<std::size_t>(ring.arity()), 0u);
    exps[static_cast<std::size_t>(index)] = power;
    return from_term(ring, Monomial(std::move(exps)), 1);
}

Polynomial Polynomial::from_terms(const RingDescriptor& ring, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.monomial.arity() != ring.arity())
            throw Error("term arity does not match ring");
    Polynomial f(ring);
    f.terms_ = normalize_terms(std::move(terms));
    return f;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.front().monomial.degree();
    for (const auto& t : terms_)
        if (t.monomial.degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_ring(ring_, g.ring_);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        if (terms_[i].monomial == g.terms_[j].monomial) {
            Rational c = terms_[i].coefficient + g.terms_[j].coefficient;
            if (c != 0) out.terms_.push_back(Term{terms_[i].monomial, std::move(c)});
            ++i, ++j;
        } else if (term_before(terms_[i], g.terms_[j])) {
            out.terms_.push_back(terms_[i++]);
        } else {
            out.terms_.push_back(g.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) out.terms_.push_back(g.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::multiplied_by_term(const Monomial& m, const Rational& c) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
    // multiplying by a fixed monomial preserves the degrevlex ordering
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_ring(ring_, g.ring_);
    std::vector<Term> products;
    products.reserve(terms_.size() * g.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : g.terms_)
            products.push_back(Term{a.monomial * b.monomial, a.coefficient * b.coefficient});
    return from_terms(ring_, std::move(products));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coefficient *= c;
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = Polynomial::constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    if (order.kind() == MonomialOrder::Kind::Degrevlex) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.less(best->monomial, t.monomial)) best = &t;
    return *best;
}

Polynomial Polynomial::dehomogenized(int var_index) const {
    if (var_index < 0 || var_index >= ring_.arity())
        throw Error("dehomogenization index out of range");
    RingDescriptor target = ring_.without(var_index);
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<unsigned> e = t.monomial.exponents();
        e.erase(e.begin() + var_index);
        terms.push_back(Term{Monomial(std::move(e)), t.coefficient});
    }
    return from_terms(target, std::move(terms));
}

Polynomial Polynomial::homogenized(int var_index, const std::string& var_name) const {
    RingDescriptor target = ring_.inserted(var_index, var_name);
    int d = degree();
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<unsigned> e = t.monomial.exponents();
        unsigned pad = static_cast<unsigned>(d) - t.monomial.degree();
        e.insert(e.begin() + var_index, pad);
        terms.push_back(Term{Monomial(std::move(e)), t.coefficient});
    }
    return from_terms(target, std::move(terms));
}

Polynomial Polynomial::linear_change(const std::vector<std::vector<Rational>>& matrix) const {
    int n = ring_.arity();
    if (static_cast<int>(matrix.size()) != n)
        throw Error("substitution matrix must be square of ring arity");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n)
            throw Error("substitution matrix must be square of ring arity");

    // rank check by fraction-free elimination
    {
        auto m = matrix;
        int rank = 0;
        for (int col = 0; col < n && rank < n; ++col) {
            int pivot = -1;
            for (int r = rank; r < n; ++r)
                if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { pivot = r; break; }
            if (pivot < 0) continue;
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
            for (int r = rank + 1; r < n; ++r) {
                Rational factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                                  m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
                for (int c = col; c < n; ++c)
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                        factor * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
            }
            ++rank;
        }
        if (rank != n) throw Error("substitution matrix is singular");
    }

    // images of the variables
    std::vector<Polynomial> image;
    image.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<Term> lin;
        for (int j = 0; j < n; ++j) {
            const Rational& c = matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c == 0) continue;
            std::vector<unsigned> e(static_cast<std::size_t>(n), 0u);
            e[static_cast<std::size_t>(j)] = 1;
            lin.push_back(Term{Monomial(std::move(e)), c});
        }
        image.push_back(from_terms(ring_, std::move(lin)));
    }

    // memoized variable powers
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(n));
    auto power_of = [&](int var, unsigned e) -> const Polynomial& {
        auto& cache = powers[static_cast<std::size_t>(var)];
        if (cache.empty()) cache.push_back(Polynomial::constant(ring_, 1));
        while (cache.size() <= e)
            cache.push_back(cache.back() * image[static_cast<std::size_t>(var)]);
        return cache[e];
    };

    Polynomial out(ring_);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(ring_, t.coefficient);
        for (int v = 0; v < n; ++v) {
            unsigned e = t.monomial.exponent(v);
            if (e) prod = prod * power_of(v, e);
        }
        out = out + prod;
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_.arity())
        throw Error("evaluation point length does not match ring arity");
    Rational total = 0;
    for (const auto& t : terms_) {
        Rational v = t.coefficient;
        for (int i = 0; i < ring_.arity(); ++i) {
            unsigned e = t.monomial.exponent(i);
            for (unsigned k = 0; k < e; ++k) v *= point[static_cast<std::size_t>(i)];
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::primitive_normalized() const {
    if (terms_.empty()) return *this;
    Integer den = 1;
    for (const auto& t : terms_) den = lcm(den, denominator(t.coefficient));
    Integer num = 0;
    for (const auto& t : terms_) num = gcd(num, Integer(numerator(t.coefficient) * (den / denominator(t.coefficient))));
    Rational scale(den, num);
    if (terms_.front().coefficient < 0) scale = -scale;
    return scaled(scale);
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial();
    Monomial g = terms_.front().monomial;
    for (const auto& t : terms_) g = gcd(g, t.monomial);
    return g;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!m.divides(t.monomial)) throw Error("monomial does not divide every term");
        out.terms_.push_back(Term{t.monomial / m, t.coefficient});
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coefficient;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            if (c < 0) { os << " - "; c = -c; }
            else os << " + ";
        }
        bool has_vars = !t.monomial.is_one();
        if (c != 1 || !has_vars) {
            os << rational_to_string(c);
            if (has_vars) os << "*";
        }
        bool first_factor = true;
        for (int i = 0; i < ring_.arity(); ++i) {
            unsigned e = t.monomial.exponent(i);
            if (!e) continue;
            if (!first_factor) os << "*";
            first_factor = false;
            os << ring_.name(i);
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

bool depends_on_variable(const Polynomial& f, int var) {
    for (const auto& t : f.terms())
        if (t.monomial.exponent(var)) return true;
    return false;
}

}  // namespace stdbases
