#pragma once

/**
 * @file universal.hpp
 * @brief Universal permutations for the layered class: the recursive
 *        construction, universality verification and the layerization
 *        transform.
 */

#include "superpattern/classes.hpp"
#include "superpattern/layered.hpp"
#include "superpattern/permutation.hpp"
#include "superpattern/sequence.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superpattern {

// ---------------------------------------------------------------------------
// Construction

/// Layer profile of U(n) = U(k) + decreasing(n) + U(n-k-1), recursing with
/// the default split floor(m/2) below the top level.
inline LayerProfile universal_profile(std::size_t n, std::optional<std::size_t> split = {}) {
    if (split && n > 0 && *split > n - 1) {
        throw std::out_of_range("split " + std::to_string(*split) + " outside 0.." +
                                std::to_string(n - 1));
    }
    if (split && n == 0) throw std::out_of_range("split given for n = 0");

    LayerProfile out;
    // Explicit stack of pending pieces, last one on top.
    struct Item {
        std::size_t length;
        bool is_layer;
    };
    std::vector<Item> stack;
    auto expand = [&](std::size_t m, std::size_t k) {
        stack.push_back({m - k - 1, false});
        stack.push_back({m, true});
        stack.push_back({k, false});
    };
    if (n > 0) expand(n, split.value_or(n / 2));
    while (!stack.empty()) {
        const Item item = stack.back();
        stack.pop_back();
        if (item.is_layer) {
            out.sizes.push_back(static_cast<LayerSize>(item.length));
        } else if (item.length > 0) {
            expand(item.length, item.length / 2);
        }
    }
    return out;
}

inline Permutation build_universal(std::size_t n, std::optional<std::size_t> split = {}) {
    return realize(universal_profile(n, split));
}

// ---------------------------------------------------------------------------
// Verification

struct UniversalityReport {
    Permutation candidate;
    std::size_t n = 0;
    ClassTag class_name = ClassTag::layered;
    bool ok = false;
    std::optional<Permutation> missing;
    std::uint64_t patterns_checked = 0;
};

/// Largest n verify_universal enumerates for the class.
inline constexpr std::size_t verification_cap(ClassTag tag) {
    return tag == ClassTag::layered ? 16 : 8;
}

/// Checks that `candidate` contains every member of `tag` of length n,
/// stopping at the first (lexicographically smallest) one it misses.
inline UniversalityReport verify_universal(const Permutation& candidate, std::size_t n,
                                           ClassTag tag) {
    if (n > verification_cap(tag)) {
        throw std::length_error("verify " + std::string(to_string(tag)) + ": n = " +
                                std::to_string(n) + " exceeds cap " +
                                std::to_string(verification_cap(tag)));
    }
    UniversalityReport report{candidate, n, tag, true, std::nullopt, 0};

    if (tag == ClassTag::layered) {
        const auto host_profile = layer_profile(candidate);
        for (const auto& pattern : CompositionRange(n)) {
            ++report.patterns_checked;
            const bool found = host_profile ? layered_contains(pattern, *host_profile)
                                            : is_contained(realize(pattern), candidate);
            if (!found) {
                report.ok = false;
                report.missing = realize(pattern);
                return report;
            }
        }
        return report;
    }

    for (const auto& pattern : enumerate_class(tag, n)) {
        ++report.patterns_checked;
        if (!is_contained(pattern, candidate)) {
            report.ok = false;
            report.missing = pattern;
            return report;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Layerization

/// A longest decreasing subsequence; among those, the one with the
/// lexicographically smallest positions.
inline Embedding max_decreasing_subsequence(const Permutation& perm) {
    const std::size_t m = perm.size();
    if (m == 0) throw std::invalid_argument("max_decreasing_subsequence of empty permutation");

    // run[i]: length of the longest decreasing subsequence starting at i.
    std::vector<std::size_t> run(m, 1);
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (perm[j] < perm[i] && run[j] + 1 > run[i]) run[i] = run[j] + 1;
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 0; i < m; ++i) best = std::max(best, run[i]);

    // Leftmost choice at every step yields the lexicographically smallest chain.
    Embedding e;
    e.positions.reserve(best);
    std::size_t need = best;
    std::size_t i = 0;
    while (run[i] != need) ++i;
    e.positions.push_back(i + 1);
    while (--need > 0) {
        std::size_t j = i + 1;
        while (!(perm[j] < perm[i] && run[j] == need)) ++j;
        e.positions.push_back(j + 1);
        i = j;
    }
    return e;
}

/// Raised when layerize meets an entry that is neither or both southwest and
/// northeast of the chosen decreasing subsequence.
class LayerizeDefect : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Profile of the layered permutation obtained by repeatedly splitting around
/// a maximum decreasing subsequence D: the entries southwest of D, then D as
/// one layer, then the entries northeast of D.
inline LayerProfile layerize_profile(const Permutation& perm) {
    LayerProfile out;
    // Pending work in reverse order: a permutation to split, or a layer size.
    struct Item {
        Permutation sub;
        std::size_t layer = 0;
    };
    std::vector<Item> stack;
    stack.push_back({perm, 0});
    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        if (item.sub.empty()) {
            if (item.layer) out.sizes.push_back(static_cast<LayerSize>(item.layer));
            continue;
        }
        const Permutation& p = item.sub;
        const Embedding d = max_decreasing_subsequence(p);
        std::vector<bool> in_d(p.size() + 1, false);
        for (auto pos : d.positions) in_d[pos] = true;

        Embedding south_west, north_east;
        for (std::size_t x = 1; x <= p.size(); ++x) {
            if (in_d[x]) continue;
            bool sw = false, ne = false;
            for (auto pos : d.positions) {
                if (x < pos && p.at(x) < p.at(pos)) sw = true;
                if (x > pos && p.at(x) > p.at(pos)) ne = true;
            }
            if (sw == ne) {
                throw LayerizeDefect("layerize: entry at position " + std::to_string(x) +
                                     (sw ? " is both southwest and northeast"
                                         : " is neither southwest nor northeast") +
                                     " of the decreasing subsequence in " + format(p));
            }
            (sw ? south_west : north_east).positions.push_back(x);
        }
        const std::size_t layer = d.size();
        stack.push_back({pattern_of(p, north_east), 0});
        stack.push_back({Permutation{}, layer});
        stack.push_back({pattern_of(p, south_west), 0});
    }
    return out;
}

inline Permutation layerize(const Permutation& perm) { return realize(layerize_profile(perm)); }

}  // namespace superpattern
