#include "stdbases/monomial.hpp"

#include "stdbases/errors.hpp"
#include "stdbases/rational.hpp"

#include <algorithm>

namespace stdbases {

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<unsigned> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<unsigned> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exponents().size(); ++i)
        if (a.exponents()[i] && b.exponents()[i]) return false;
    return true;
}

bool degrevlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Tie: the monomial with the larger exponent in the latest differing
    // variable is the smaller one.
    for (int i = a.arity() - 1; i >= 0; --i) {
        unsigned ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea > eb;
    }
    return false;
}

namespace {

bool lex_less(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.arity(); ++i) {
        unsigned ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea < eb;
    }
    return false;
}

// degrevlex restricted to positions [lo, hi)
bool degrevlex_less_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    unsigned da = 0, db = 0;
    for (int i = lo; i < hi; ++i) { da += a.exponent(i); db += b.exponent(i); }
    if (da != db) return da < db;
    for (int i = hi - 1; i >= lo; --i) {
        unsigned ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea > eb;
    }
    return false;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Degrevlex:
            return degrevlex_less(a, b);
        case Kind::Lex:
            return lex_less(a, b);
        case Kind::BlockElimination: {
            int n = a.arity();
            int k = std::min(block_, n);
            if (degrevlex_less_range(a, b, 0, k)) return true;
            if (degrevlex_less_range(b, a, 0, k)) return false;
            return degrevlex_less_range(a, b, k, n);
        }
    }
    return false;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Degrevlex: return "degrevlex";
        case Kind::Lex: return "lex";
        case Kind::BlockElimination: return "elim:" + std::to_string(block_);
    }
    return "?";
}

MonomialOrder MonomialOrder::from_name(const std::string& name) {
    if (name == "degrevlex") return degrevlex();
    if (name == "lex") return lex();
    if (name.rfind("elim:", 0) == 0) {
        int k = std::stoi(name.substr(5));
        if (k < 1) throw Error("elimination block must be positive");
        return block_elimination(k);
    }
    throw Error("unknown monomial order '" + name + "'");
}

std::vector<Monomial> monomials_of_degree(int arity, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<unsigned> exps(static_cast<std::size_t>(arity), 0u);
    // Enumerate recursively, then sort into descending degrevlex.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == arity - 1) {
            exps[static_cast<std::size_t>(pos)] = static_cast<unsigned>(remaining);
            out.emplace_back(exps);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[static_cast<std::size_t>(pos)] = static_cast<unsigned>(e);
            self(self, pos + 1, remaining - e);
        }
        exps[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return degrevlex_less(b, a); });
    return out;
}

}  // namespace stdbases
