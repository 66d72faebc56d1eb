#pragma once

#include "stdbases/errors.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace stdbases {

/// Ordered list of variable names. Position 0 is the designated
/// dehomogenization variable unless a caller picks another index.
class RingDescriptor {
public:
    RingDescriptor() = default;

    explicit RingDescriptor(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw Error("ring needs at least one variable");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw Error("empty variable name");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw Error("duplicate variable name '" + names_[i] + "'");
        }
    }

    int arity() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

    int index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
    }

    /// Ring with the variable at `index` removed (used by dehomogenization).
    RingDescriptor without(int index) const {
        auto copy = names_;
        copy.erase(copy.begin() + index);
        return RingDescriptor(std::move(copy));
    }

    /// Ring with a fresh variable inserted at `index` (used by homogenization).
    RingDescriptor inserted(int index, const std::string& name) const {
        auto copy = names_;
        copy.insert(copy.begin() + index, name);
        return RingDescriptor(std::move(copy));
    }

    /// Ring with variables rearranged: position i of the result holds the
    /// variable previously at perm[i].
    RingDescriptor permuted(const std::vector<int>& perm) const {
        std::vector<std::string> copy;
        copy.reserve(names_.size());
        for (int p : perm) copy.push_back(names_.at(static_cast<std::size_t>(p)));
        return RingDescriptor(std::move(copy));
    }

    bool operator==(const RingDescriptor& other) const { return names_ == other.names_; }
    bool operator!=(const RingDescriptor& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

inline void require_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
    if (a != b) throw RingMismatchError("operands live in different rings");
}

}  // namespace stdbases
