#include "stdbases/groebner.hpp"

#include "stdbases/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

namespace stdbases {

namespace {

// Working form: terms sorted descending by the active order.
struct Entry {
    std::vector<Term> terms;
    const Term& lt() const { return terms.front(); }
};

std::vector<Term> sorted_by(const std::vector<Term>& terms, const MonomialOrder& order) {
    std::vector<Term> out = terms;
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
        return order.greater(a.monomial, b.monomial);
    });
    return out;
}

// h -= c * m * g, both sorted descending; classic sorted merge.
std::vector<Term> axpy(const std::vector<Term>& h, const Rational& c, const Monomial& m,
                       const std::vector<Term>& g, const MonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() && j < g.size()) {
        Monomial gm = g[j].monomial * m;
        if (h[i].monomial == gm) {
            Rational v = h[i].coefficient - c * g[j].coefficient;
            if (v != 0) out.push_back(Term{h[i].monomial, std::move(v)});
            ++i, ++j;
        } else if (order.greater(h[i].monomial, gm)) {
            out.push_back(h[i++]);
        } else {
            out.push_back(Term{std::move(gm), -c * g[j].coefficient});
            ++j;
        }
    }
    for (; i < h.size(); ++i) out.push_back(h[i]);
    for (; j < g.size(); ++j) out.push_back(Term{g[j].monomial * m, -c * g[j].coefficient});
    return out;
}

// Content normalization keeps coefficient growth in check.
void make_primitive(std::vector<Term>& terms) {
    if (terms.empty()) return;
    Integer den = 1;
    for (const auto& t : terms) den = lcm(den, denominator(t.coefficient));
    Integer num = 0;
    for (const auto& t : terms)
        num = gcd(num, Integer(numerator(t.coefficient) * (den / denominator(t.coefficient))));
    Rational scale(den, num);
    if (terms.front().coefficient < 0) scale = -scale;
    for (auto& t : terms) t.coefficient *= scale;
}

// Full division remainder of h by basis.
std::vector<Term> reduce_full(std::vector<Term> h, const std::vector<Entry>& basis,
                              const MonomialOrder& order) {
    std::vector<Term> remainder;
    while (!h.empty()) {
        bool divided = false;
        for (const auto& g : basis) {
            if (g.lt().monomial.divides(h.front().monomial)) {
                Rational c = h.front().coefficient / g.lt().coefficient;
                Monomial m = h.front().monomial / g.lt().monomial;
                h = axpy(h, c, m, g.terms, order);
                divided = true;
                break;
            }
        }
        if (!divided) {
            remainder.push_back(std::move(h.front()));
            h.erase(h.begin());
        }
    }
    return remainder;
}

struct PairKey {
    unsigned weight;  // lcm degree, or sugar degree
    int j, i;
    bool operator>(const PairKey& o) const {
        return std::tie(weight, j, i) > std::tie(o.weight, o.j, o.i);
    }
};

struct QueuedPair {
    PairKey key;
    int i, j;
    bool operator>(const QueuedPair& o) const { return key > o.key; }
};

}  // namespace

std::vector<Polynomial> reduced_groebner(const RingDescriptor& ring,
                                         const std::vector<Polynomial>& generators,
                                         const MonomialOrder& order,
                                         const BuchbergerOptions& options) {
    std::vector<Entry> basis;
    std::vector<unsigned> sugar;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (g.ring() != ring) throw RingMismatchError("generator lives in a different ring");
        Entry e{sorted_by(g.primitive_normalized().terms(), order)};
        basis.push_back(std::move(e));
        sugar.push_back(static_cast<unsigned>(g.degree()));
    }

    std::priority_queue<QueuedPair, std::vector<QueuedPair>, std::greater<QueuedPair>> queue;
    std::set<std::pair<int, int>> pending;
    auto push_pair = [&](int i, int j) {
        Monomial l = lcm(basis[static_cast<std::size_t>(i)].lt().monomial,
                         basis[static_cast<std::size_t>(j)].lt().monomial);
        unsigned weight = l.degree();
        if (options.sugar_strategy) {
            unsigned si = sugar[static_cast<std::size_t>(i)] + (l / basis[static_cast<std::size_t>(i)].lt().monomial).degree();
            unsigned sj = sugar[static_cast<std::size_t>(j)] + (l / basis[static_cast<std::size_t>(j)].lt().monomial).degree();
            weight = std::max(si, sj);
        }
        queue.push(QueuedPair{PairKey{weight, j, i}, i, j});
        pending.emplace(i, j);
    };

    for (int j = 1; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < j; ++i) push_pair(i, j);

    while (!queue.empty()) {
        auto [key, i, j] = queue.top();
        queue.pop();
        pending.erase({i, j});

        const Monomial& li = basis[static_cast<std::size_t>(i)].lt().monomial;
        const Monomial& lj = basis[static_cast<std::size_t>(j)].lt().monomial;
        if (coprime(li, lj)) continue;  // product criterion

        // chain criterion: some k with lt_k | lcm(i,j) and both pairs done
        Monomial l = lcm(li, lj);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!basis[static_cast<std::size_t>(k)].lt().monomial.divides(l)) continue;
            auto mk = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(mk(i, k)) && !pending.count(mk(j, k))) skip = true;
        }
        if (skip) continue;

        // S-polynomial, fully reduced
        const Entry& fi = basis[static_cast<std::size_t>(i)];
        const Entry& fj = basis[static_cast<std::size_t>(j)];
        std::vector<Term> s = axpy(
            /*h=*/std::vector<Term>{}, Rational(-1) / fi.lt().coefficient, l / fi.lt().monomial,
            fi.terms, order);
        s = axpy(s, Rational(1) / fj.lt().coefficient, l / fj.lt().monomial, fj.terms, order);
        s = reduce_full(std::move(s), basis, order);
        if (s.empty()) continue;
        make_primitive(s);

        unsigned s_sugar = 0;
        if (options.sugar_strategy) {
            s_sugar = std::max(sugar[static_cast<std::size_t>(i)] + (l / li).degree(),
                               sugar[static_cast<std::size_t>(j)] + (l / lj).degree());
        }
        basis.push_back(Entry{std::move(s)});
        sugar.push_back(s_sugar);
        int n = static_cast<int>(basis.size()) - 1;
        for (int k = 0; k < n; ++k) push_pair(k, n);
    }

    // minimalize: drop entries whose leading monomial is divisible by another's
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            const Monomial& la = basis[a].lt().monomial;
            const Monomial& lb = basis[b].lt().monomial;
            if (lb.divides(la) && !(la == lb && b > a)) keep[a] = false;
        }
    }
    std::vector<Entry> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (keep[a]) minimal.push_back(std::move(basis[a]));

    // inter-reduce tails
    std::vector<Polynomial> out;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Entry> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        std::vector<Term> r = reduce_full(minimal[a].terms, others, order);
        make_primitive(r);
        if (!r.empty()) out.push_back(Polynomial::from_terms(ring, std::move(r)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).monomial, b.leading_term(order).monomial);
    });
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    std::vector<Entry> entries;
    entries.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        entries.push_back(Entry{sorted_by(g.terms(), order)});
    }
    std::vector<Term> r = reduce_full(sorted_by(f.terms(), order), entries, order);
    return Polynomial::from_terms(f.ring(), std::move(r));
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& order) {
    require_same_ring(f.ring(), I.ring());
    return normal_form(f, I.groebner(order), order);
}

}  // namespace stdbases
