#include "stdbases/ideal.hpp"

#include "stdbases/groebner.hpp"

namespace stdbases {

Ideal::Ideal(RingDescriptor ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), state_(std::make_shared<State>()) {
    gens_.reserve(generators.size());
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        require_same_ring(g.ring(), ring_);
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(const RingDescriptor& ring) {
    return Ideal(ring, {Polynomial::constant(ring, 1)});
}

Ideal Ideal::irrelevant(const RingDescriptor& ring) {
    std::vector<Polynomial> vars;
    vars.reserve(static_cast<std::size_t>(ring.arity()));
    for (int i = 0; i < ring.arity(); ++i) vars.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(vars));
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

int Ideal::max_generator_degree() const {
    int d = -1;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& order) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->cache.find(order);
    if (it != state_->cache.end()) return it->second;
    auto basis = reduced_groebner(ring_, gens_, order);
    return state_->cache.emplace(order, std::move(basis)).first->second;
}

const std::vector<Polynomial>* Ideal::cached_variable_saturation(int var) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->variable_saturations.find(var);
    return it == state_->variable_saturations.end() ? nullptr : &it->second;
}

void Ideal::store_variable_saturation(int var, std::vector<Polynomial> generators) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    state_->variable_saturations.emplace(var, std::move(generators));
}

bool Ideal::verify_cache() const {
    std::map<MonomialOrder, std::vector<Polynomial>> snapshot;
    {
        std::lock_guard<std::mutex> lock(state_->mutex);
        snapshot = state_->cache;
    }
    for (const auto& [order, basis] : snapshot) {
        for (const auto& g : gens_)
            if (!normal_form(g, basis, order).is_zero()) return false;
        for (const auto& b : basis) {
            Ideal fresh(ring_, gens_);
            if (!normal_form(b, fresh.groebner(order), order).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace stdbases
