#pragma once

#include "stdbases/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace stdbases {

/// Generator list plus a cache of reduced Groebner bases, one per monomial
/// order. Ideal values are cheap to copy and share their cache; the cache is
/// filled under a lock, queries afterwards are read-only.
class Ideal {
public:
    explicit Ideal(RingDescriptor ring) : ring_(std::move(ring)), state_(std::make_shared<State>()) {}
    Ideal(RingDescriptor ring, std::vector<Polynomial> generators);

    static Ideal zero(const RingDescriptor& ring) { return Ideal(ring); }
    static Ideal unit(const RingDescriptor& ring);
    /// The irrelevant ideal (y_0, ..., y_n).
    static Ideal irrelevant(const RingDescriptor& ring);
    static Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_homogeneous() const;
    int max_generator_degree() const;

    /// Unique reduced Groebner basis, primitive-integer normalized, sorted
    /// ascending by leading monomial. Cached per order.
    const std::vector<Polynomial>& groebner(
        const MonomialOrder& order = MonomialOrder::degrevlex()) const;

    /// Cache-invariant check: every cached basis and the generator list
    /// reduce mutually to zero. Used by tests.
    bool verify_cache() const;

    /// Memo slots for the single-variable saturations (filled by
    /// saturation_by_variable, shared across copies of the value).
    const std::vector<Polynomial>* cached_variable_saturation(int var) const;
    void store_variable_saturation(int var, std::vector<Polynomial> generators) const;

private:
    struct State {
        std::map<MonomialOrder, std::vector<Polynomial>> cache;
        std::map<int, std::vector<Polynomial>> variable_saturations;
        std::mutex mutex;
    };
    RingDescriptor ring_;
    std::vector<Polynomial> gens_;  // nonzero, in user order
    std::shared_ptr<State> state_;
};

}  // namespace stdbases
