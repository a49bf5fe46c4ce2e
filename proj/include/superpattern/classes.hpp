#pragma once

/**
 * @file classes.hpp
 * @brief The four permutation classes searched over, their membership tests
 *        and lexicographic enumeration.
 */

#include "superpattern/layered.hpp"
#include "superpattern/permutation.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superpattern {

enum class ClassTag { layered, av231, av321, all };

inline constexpr std::array<ClassTag, 4> kAllClassTags{ClassTag::layered, ClassTag::av231,
                                                       ClassTag::av321, ClassTag::all};

inline std::string_view to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::layered: return "layered";
        case ClassTag::av231: return "av231";
        case ClassTag::av321: return "av321";
        case ClassTag::all: return "all";
    }
    return "?";
}

inline ClassTag parse_class_tag(std::string_view name) {
    for (auto tag : kAllClassTags) {
        if (to_string(tag) == name) return tag;
    }
    throw std::invalid_argument("unknown class '" + std::string(name) +
                                "' (expected layered, av231, av321 or all)");
}

inline const Permutation& pattern_231() {
    static const Permutation p{2, 3, 1};
    return p;
}

inline const Permutation& pattern_321() {
    static const Permutation p{3, 2, 1};
    return p;
}

inline bool is_member(ClassTag tag, const Permutation& perm) {
    switch (tag) {
        case ClassTag::layered: return is_layered(perm);
        case ClassTag::av231: return avoids(perm, pattern_231());
        case ClassTag::av321: return avoids(perm, pattern_321());
        case ClassTag::all: return true;
    }
    return false;
}

/// Largest length enumerate_class accepts for the class.
inline constexpr std::size_t class_enumeration_cap(ClassTag tag) {
    return tag == ClassTag::layered ? 20 : 12;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return b > std::numeric_limits<std::uint64_t>::max() - a
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
}

inline std::uint64_t catalan(std::size_t n) {
    // C(k+1) = C(k) * 2(2k+1) / (k+2) stays exact in 64 bits up to n = 35.
    if (n > 35) return std::numeric_limits<std::uint64_t>::max();
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f = saturating_mul(f, k);
    return f;
}

/// Number of class members of length n (saturating).
inline std::uint64_t class_size(ClassTag tag, std::size_t n) {
    switch (tag) {
        case ClassTag::layered:
            return n > 64 ? std::numeric_limits<std::uint64_t>::max() : composition_count(n);
        case ClassTag::av231:
        case ClassTag::av321: return catalan(n);
        case ClassTag::all: return factorial(n);
    }
    return 0;
}

enum class Enumeration {
    generate,  ///< prefix-pruned depth-first generation
    filter     ///< every permutation of length n, kept if it passes is_member
};

namespace detail {

// True if appending x to prefix creates an occurrence of the length-3 pattern
// whose last entry is x.
inline bool completes_pattern3(std::span<const Value> prefix, Value x,
                               const Permutation& pattern) {
    const Value p0 = pattern[0], p1 = pattern[1], p2 = pattern[2];
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if ((prefix[i] < x) != (p0 < p2)) continue;
        for (std::size_t j = i + 1; j < prefix.size(); ++j) {
            if ((prefix[j] < x) != (p1 < p2)) continue;
            if ((prefix[i] < prefix[j]) == (p0 < p1)) return true;
        }
    }
    return false;
}

inline void generate_avoiders(std::size_t n, const Permutation& forbidden,
                              std::vector<Value>& prefix, std::vector<bool>& used,
                              const std::function<void(const Permutation&)>& emit) {
    if (prefix.size() == n) {
        emit(Permutation::from_trusted(prefix));
        return;
    }
    for (Value v = 1; v <= static_cast<Value>(n); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (completes_pattern3(prefix, v, forbidden)) continue;
        used[static_cast<std::size_t>(v)] = true;
        prefix.push_back(v);
        generate_avoiders(n, forbidden, prefix, used, emit);
        prefix.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
}

}  // namespace detail

/// Visits every class member of length n in lexicographic order.
inline void for_each_in_class(ClassTag tag, std::size_t n,
                              const std::function<void(const Permutation&)>& visit,
                              Enumeration how = Enumeration::generate) {
    if (n > class_enumeration_cap(tag)) {
        throw std::length_error("enumerate " + std::string(to_string(tag)) + ": n = " +
                                std::to_string(n) + " exceeds cap " +
                                std::to_string(class_enumeration_cap(tag)));
    }
    if (tag == ClassTag::layered && how == Enumeration::generate) {
        for (const auto& profile : CompositionRange(n)) visit(realize(profile));
        return;
    }
    if ((tag == ClassTag::av231 || tag == ClassTag::av321) && how == Enumeration::generate) {
        std::vector<Value> prefix;
        prefix.reserve(n);
        std::vector<bool> used(n + 1, false);
        detail::generate_avoiders(n, tag == ClassTag::av231 ? pattern_231() : pattern_321(),
                                  prefix, used, visit);
        return;
    }
    std::vector<Value> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        auto p = Permutation::from_trusted(v);
        if (is_member(tag, p)) visit(p);
    } while (std::next_permutation(v.begin(), v.end()));
}

inline std::vector<Permutation> enumerate_class(ClassTag tag, std::size_t n,
                                                Enumeration how = Enumeration::generate) {
    std::vector<Permutation> out;
    for_each_in_class(tag, n, [&](const Permutation& p) { out.push_back(p); }, how);
    return out;
}

}  // namespace superpattern
