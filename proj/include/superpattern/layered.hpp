#pragma once

/**
 * @file layered.hpp
 * @brief Layered permutations as compositions of their length.
 *
 * A layered permutation is a direct sum of decreasing runs. It is stored as
 * its LayerProfile, the ordered list of run lengths; compositions of n and
 * layered permutations of length n are in bijection.
 *
 * Compositions of n are enumerated in lexicographic order via bitmasks: bit
 * (n - 1 - i) of an (n - 1)-bit mask marks a cut after the i-th entry, so the
 * lexicographic rank r corresponds to the mask 2^(n-1) - 1 - r.
 */

#include "superpattern/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superpattern {

using LayerSize = std::uint32_t;

struct LayerProfile {
    std::vector<LayerSize> sizes;

    std::size_t layers() const noexcept { return sizes.size(); }
    std::size_t total() const noexcept {
        std::size_t t = 0;
        for (auto s : sizes) t += s;
        return t;
    }

    friend bool operator==(const LayerProfile&, const LayerProfile&) = default;
    friend auto operator<=>(const LayerProfile& a, const LayerProfile& b) {
        return a.sizes <=> b.sizes;
    }
};

inline Permutation realize(const LayerProfile& profile) {
    std::vector<Value> v;
    v.reserve(profile.total());
    Value base = 0;
    for (LayerSize s : profile.sizes) {
        if (s == 0) throw std::invalid_argument("layer sizes must be positive");
        for (LayerSize k = s; k >= 1; --k) v.push_back(base + static_cast<Value>(k));
        base += static_cast<Value>(s);
    }
    return Permutation::from_trusted(std::move(v));
}

/// The unique profile of a layered permutation, or nullopt if it is not layered.
inline std::optional<LayerProfile> layer_profile(const Permutation& perm) {
    LayerProfile profile;
    const std::size_t n = perm.size();
    std::size_t i = 0;  // 0-based; the next unused value is i + 1
    while (i < n) {
        const auto top = static_cast<std::size_t>(perm[i]);
        if (top < i + 1) return std::nullopt;
        for (std::size_t j = i; j < top; ++j) {
            if (static_cast<std::size_t>(perm[j]) != top - (j - i)) return std::nullopt;
        }
        profile.sizes.push_back(static_cast<LayerSize>(top - i));
        i = top;
    }
    return profile;
}

inline bool is_layered(const Permutation& perm) { return layer_profile(perm).has_value(); }

/// "[3,1,2,1]"; the empty profile is "[]".
inline std::string format(const LayerProfile& profile) {
    std::string out = "[";
    for (std::size_t i = 0; i < profile.sizes.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(profile.sizes[i]);
    }
    out.push_back(']');
    return out;
}

inline LayerProfile parse_profile(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw ParseError(ParseErrorKind::BadToken,
                         "layer profile must look like [3,1,2,1]: '" + std::string(text) + "'");
    }
    text = trim(text.substr(1, text.size() - 2));
    LayerProfile profile;
    if (text.empty()) return profile;
    while (true) {
        const auto comma = text.find(',');
        const auto token = trim(text.substr(0, comma));
        LayerSize s = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), s);
        if (ec != std::errc{} || ptr != token.data() + token.size() || s == 0) {
            throw ParseError(ParseErrorKind::BadToken,
                             "bad layer size '" + std::string(token) + "'");
        }
        profile.sizes.push_back(s);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Composition enumeration

/// Number of compositions of n: 2^(n-1), and 1 for n = 0.
inline std::uint64_t composition_count(std::size_t n) {
    if (n > 64) throw std::out_of_range("composition count overflows for n > 64");
    return n == 0 ? 1 : std::uint64_t{1} << (n - 1);
}

/// Unranks the composition of n at lexicographic rank `rank`.
inline LayerProfile composition_at(std::size_t n, std::uint64_t rank) {
    LayerProfile p;
    if (n == 0) return p;
    const std::uint64_t mask = composition_count(n) - 1 - rank;
    LayerSize run = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (mask >> (n - 1 - i) & 1) {
            p.sizes.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    p.sizes.push_back(run);
    return p;
}

/// Lazy, restartable view over compositions of n in lexicographic order,
/// optionally restricted to the rank range [first, last).
class CompositionRange {
public:
    class iterator {
    public:
        using value_type = LayerProfile;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(std::size_t n, std::uint64_t rank) : n_(n), rank_(rank) {}

        LayerProfile operator*() const { return composition_at(n_, rank_); }
        std::uint64_t rank() const noexcept { return rank_; }
        iterator& operator++() {
            ++rank_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++rank_;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.rank_ == b.rank_;
        }

    private:
        std::size_t n_ = 0;
        std::uint64_t rank_ = 0;
    };

    explicit CompositionRange(std::size_t n)
        : n_(n), first_(0), last_(composition_count(n)) {}
    CompositionRange(std::size_t n, std::uint64_t first, std::uint64_t last)
        : n_(n), first_(first), last_(std::min(last, composition_count(n))) {
        if (first_ > last_) first_ = last_;
    }

    iterator begin() const { return {n_, first_}; }
    iterator end() const { return {n_, last_}; }
    std::uint64_t size() const noexcept { return last_ - first_; }

private:
    std::size_t n_;
    std::uint64_t first_;
    std::uint64_t last_;
};

inline constexpr std::size_t kDefaultLayeredCap = 20;

/// All compositions of n in lexicographic order, materialized.
inline std::vector<LayerProfile> enumerate_layered(std::size_t n,
                                                   std::size_t cap = kDefaultLayeredCap) {
    if (n > cap) {
        throw std::length_error("enumerate_layered: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    }
    std::vector<LayerProfile> out;
    out.reserve(composition_count(n));
    for (auto p : CompositionRange(n)) out.push_back(std::move(p));
    return out;
}

// ---------------------------------------------------------------------------
// Greedy containment

/// Greedy placement of pattern layers into host layers: each pattern layer
/// takes the first host layer after the previous one that is large enough.
/// Returns the chosen 1-based host layer indices, or nullopt if some layer
/// cannot be placed.
inline std::optional<std::vector<std::size_t>> layered_embedding(
    std::span<const LayerSize> pattern, std::span<const LayerSize> host) {
    std::vector<std::size_t> chosen;
    chosen.reserve(pattern.size());
    std::size_t h = 0;
    for (LayerSize s : pattern) {
        while (h < host.size() && host[h] < s) ++h;
        if (h == host.size()) return std::nullopt;
        chosen.push_back(h + 1);
        ++h;
    }
    return chosen;
}

inline std::optional<std::vector<std::size_t>> layered_embedding(const LayerProfile& pattern,
                                                                 const LayerProfile& host) {
    return layered_embedding(std::span<const LayerSize>(pattern.sizes),
                             std::span<const LayerSize>(host.sizes));
}

inline bool layered_contains(std::span<const LayerSize> pattern,
                             std::span<const LayerSize> host) noexcept {
    std::size_t h = 0;
    for (LayerSize s : pattern) {
        while (h < host.size() && host[h] < s) ++h;
        if (h == host.size()) return false;
        ++h;
    }
    return true;
}

inline bool layered_contains(const LayerProfile& pattern, const LayerProfile& host) noexcept {
    return layered_contains(std::span<const LayerSize>(pattern.sizes),
                            std::span<const LayerSize>(host.sizes));
}

}  // namespace superpattern
