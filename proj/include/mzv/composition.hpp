#pragma once

#include <vector>

namespace mzv {

// Exponent vector (s_1, ..., s_k).  Plain data; invariants are checked by
// the operations that consume it.
struct Composition {
    std::vector<long long> parts;

    Composition() = default;
    explicit Composition(std::vector<long long> p) : parts(std::move(p)) {}

    std::size_t depth() const { return parts.size(); }

    long long weight() const {
        long long w = 0;
        for (long long s : parts) {
            w += s < 0 ? -s : s;
        }
        return w;
    }

    bool all_nonpositive() const {
        for (long long s : parts) {
            if (s > 0) return false;
        }
        return true;
    }

    bool all_positive() const {
        for (long long s : parts) {
            if (s < 1) return false;
        }
        return true;
    }

    // Convergent as a nested sum: all parts >= 1 and the leading part >= 2.
    bool convergent() const {
        return !parts.empty() && all_positive() && parts.front() >= 2;
    }

    friend bool operator==(const Composition& a, const Composition& b) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) = default;
};

} // namespace mzv
