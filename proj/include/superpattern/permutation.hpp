#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation, direct sums and pattern containment.
 *
 * Values are 1-based (a permutation of length n uses each of 1..n exactly
 * once). Embedding positions are 1-based as well. The empty permutation is a
 * valid value and is contained in every permutation.
 */

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superpattern {

using Value = std::int32_t;

enum class ParseErrorKind { DuplicateValue, ValueOutOfRange, BadToken };

class ParseError : public std::invalid_argument {
public:
    ParseError(ParseErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

/// A permutation of {1..n} in one-line notation. Immutable once built.
class Permutation {
public:
    Permutation() = default;

    /// Throws ParseError unless `values` is a bijection on 1..size.
    explicit Permutation(std::vector<Value> values) : values_(std::move(values)) {
        validate(values_);
    }

    Permutation(std::initializer_list<Value> values)
        : Permutation(std::vector<Value>(values)) {}

    /// Skips validation; the caller guarantees a bijection.
    static Permutation from_trusted(std::vector<Value> values) {
        Permutation p;
        p.values_ = std::move(values);
        return p;
    }

    static Permutation identity(std::size_t n) {
        std::vector<Value> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Value>(i + 1);
        return from_trusted(std::move(v));
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// 1-based access: at(i) = π(i).
    Value at(std::size_t position) const { return values_.at(position - 1); }
    Value operator[](std::size_t index) const noexcept { return values_[index]; }

    std::span<const Value> values() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.values_ <=> b.values_;
    }

private:
    static void validate(const std::vector<Value>& values) {
        const auto n = static_cast<Value>(values.size());
        std::vector<bool> seen(values.size() + 1, false);
        for (Value v : values) {
            if (v < 1 || v > n) {
                throw ParseError(ParseErrorKind::ValueOutOfRange,
                                 "value " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(n));
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw ParseError(ParseErrorKind::DuplicateValue,
                                 "duplicate value " + std::to_string(v));
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    std::vector<Value> values_;
};

/// Strictly increasing 1-based host positions witnessing one occurrence.
struct Embedding {
    std::vector<std::size_t> positions;

    std::size_t size() const noexcept { return positions.size(); }
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Parses whitespace- or comma-separated positive integers.
inline Permutation parse(std::string_view text) {
    std::vector<Value> values;
    std::size_t i = 0;
    auto is_sep = [](char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
    };
    while (i < text.size()) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        const std::string_view token = text.substr(i, j - i);
        Value v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError(ParseErrorKind::BadToken,
                             "not an integer: '" + std::string(token) + "'");
        }
        values.push_back(v);
        i = j;
    }
    return Permutation(std::move(values));
}

/// Reduces distinct integers to the permutation of 1..n in the same relative
/// order, e.g. 3 4 9 1 8 6 7 2 -> 3 4 8 1 7 5 6 2.
inline Permutation standardize(std::span<const Value> values) {
    std::vector<std::size_t> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Value> v(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && values[order[r]] == values[order[r - 1]]) {
            throw ParseError(ParseErrorKind::DuplicateValue,
                             "duplicate value " + std::to_string(values[order[r]]));
        }
        v[order[r]] = static_cast<Value>(r + 1);
    }
    return Permutation::from_trusted(std::move(v));
}

/// Canonical text form: single-space-separated values.
inline std::string format(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(p[i]);
    }
    return out;
}

/// n, n-1, ..., 1.
inline Permutation decreasing(std::size_t n) {
    std::vector<Value> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Value>(n - i);
    return Permutation::from_trusted(std::move(v));
}

/// Left-to-right fold of the two-argument direct sum.
inline Permutation direct_sum(std::span<const Permutation> parts) {
    std::vector<Value> v;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    v.reserve(total);
    Value offset = 0;
    for (const auto& p : parts) {
        for (Value x : p) v.push_back(x + offset);
        offset += static_cast<Value>(p.size());
    }
    return Permutation::from_trusted(std::move(v));
}

inline Permutation direct_sum(std::initializer_list<Permutation> parts) {
    return direct_sum(std::span<const Permutation>(parts.begin(), parts.size()));
}

/// Rank-reduces the entries of `host` at the given 1-based positions.
inline Permutation pattern_of(const Permutation& host, const Embedding& embedding) {
    const auto& pos = embedding.positions;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] < 1 || pos[i] > host.size()) {
            throw std::out_of_range("position " + std::to_string(pos[i]) +
                                    " outside host of length " +
                                    std::to_string(host.size()));
        }
        if (i > 0 && pos[i] <= pos[i - 1]) {
            throw std::invalid_argument("embedding positions must be strictly increasing");
        }
    }
    std::vector<std::size_t> order(pos.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return host.at(pos[a]) < host.at(pos[b]);
    });
    std::vector<Value> v(pos.size());
    for (std::size_t r = 0; r < order.size(); ++r) v[order[r]] = static_cast<Value>(r + 1);
    return Permutation::from_trusted(std::move(v));
}

namespace detail {

// Depth-first matcher. Pattern entries are placed left to right; each entry
// is bounded below by the largest already-matched pattern value under it and
// above by the smallest one over it, so candidates outside that window are
// skipped without recursion.
class ContainmentMatcher {
public:
    ContainmentMatcher(std::span<const Value> pattern, std::span<const Value> host)
        : pattern_(pattern), host_(host), chosen_(pattern.size()), lower_(pattern.size()),
          upper_(pattern.size()) {
        // For pattern index i, the nearest earlier indices whose values bracket
        // pattern[i]: lower_[i] has the largest smaller value, upper_[i] the
        // smallest larger value (npos when none).
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            std::size_t lo = npos, hi = npos;
            for (std::size_t j = 0; j < i; ++j) {
                if (pattern[j] < pattern[i] && (lo == npos || pattern[j] > pattern[lo])) lo = j;
                if (pattern[j] > pattern[i] && (hi == npos || pattern[j] < pattern[hi])) hi = j;
            }
            lower_[i] = lo;
            upper_[i] = hi;
        }
    }

    bool run() { return pattern_.empty() || place(0, 0); }

    Embedding embedding() const {
        Embedding e;
        e.positions.reserve(chosen_.size());
        for (std::size_t p : chosen_) e.positions.push_back(p + 1);
        return e;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool place(std::size_t index, std::size_t from) {
        if (index == pattern_.size()) return true;
        const std::size_t remaining = pattern_.size() - index;
        const Value lo = lower_[index] == npos ? 0 : host_[chosen_[lower_[index]]];
        const Value hi = upper_[index] == npos ? static_cast<Value>(host_.size()) + 1
                                               : host_[chosen_[upper_[index]]];
        if (hi - lo - 1 < 1) return false;
        for (std::size_t h = from; h + remaining <= host_.size(); ++h) {
            const Value v = host_[h];
            if (v <= lo || v >= hi) continue;
            chosen_[index] = h;
            if (place(index + 1, h + 1)) return true;
        }
        return false;
    }

    std::span<const Value> pattern_;
    std::span<const Value> host_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> lower_;
    std::vector<std::size_t> upper_;
};

}  // namespace detail

/// The lexicographically smallest embedding of `pattern` into `host`, if any.
inline std::optional<Embedding> contains(const Permutation& pattern, const Permutation& host) {
    if (pattern.size() > host.size()) return std::nullopt;
    detail::ContainmentMatcher m(pattern.values(), host.values());
    if (!m.run()) return std::nullopt;
    return m.embedding();
}

/// Same as contains() without materializing the witness.
inline bool is_contained(const Permutation& pattern, const Permutation& host) {
    if (pattern.size() > host.size()) return false;
    detail::ContainmentMatcher m(pattern.values(), host.values());
    return m.run();
}

inline bool avoids(const Permutation& host, const Permutation& pattern) {
    return !is_contained(pattern, host);
}

}  // namespace superpattern
