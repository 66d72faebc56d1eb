#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stdbases {

/// Exponent vector. Length always equals the arity of the ambient ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
    static Monomial one(int arity) { return Monomial(std::vector<unsigned>(arity, 0u)); }

    int arity() const { return static_cast<int>(exps_.size()); }
    unsigned exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned e : exps_) d += e;
        return d;
    }

    bool is_one() const {
        for (unsigned e : exps_) if (e) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        std::vector<unsigned> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.exps_[i];
        return Monomial(std::move(e));
    }

    /// Exact quotient; caller guarantees m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        std::vector<unsigned> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= m.exps_[i];
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
    bool operator!=(const Monomial& m) const { return exps_ != m.exps_; }

private:
    std::vector<unsigned> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Global monomial order. Earlier ring positions are the larger variables.
class MonomialOrder {
public:
    enum class Kind { Degrevlex, Lex, BlockElimination };

    static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    /// Eliminates the first `block` variables: any monomial involving them is
    /// larger than any monomial in the remaining ones (degrevlex inside each
    /// block).
    static MonomialOrder block_elimination(int block) {
        return MonomialOrder(Kind::BlockElimination, block);
    }

    Kind kind() const { return kind_; }
    int block() const { return block_; }

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && block_ == o.block_;
    }
    bool operator<(const MonomialOrder& o) const {
        return kind_ != o.kind_ ? kind_ < o.kind_ : block_ < o.block_;
    }

    std::string name() const;
    /// Parses "degrevlex", "lex" or "elim:<k>".
    static MonomialOrder from_name(const std::string& name);

private:
    MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}
    Kind kind_;
    int block_;
};

/// Canonical structural order used for the sorted term storage (degrevlex).
bool degrevlex_less(const Monomial& a, const Monomial& b);

/// All monomials of the given total degree, descending in degrevlex.
std::vector<Monomial> monomials_of_degree(int arity, int degree);

}  // namespace stdbases
