#pragma once

/**
 * @file sequence.hpp
 * @brief Length of the shortest permutation containing every layered
 *        permutation of length n.
 *
 *     a(0) = 0,  a(n) = n + min_{0 <= k <= n-1} ( a(k) + a(n-k-1) )
 *
 * and the closed form (n+1)*ceil(log2(n+1)) - 2^ceil(log2(n+1)) + 1.
 */

#include <bit>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace superpattern {

/// ceil(log2(x)) for x >= 1, on integers.
constexpr unsigned ceil_log2(std::uint64_t x) {
    return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

/// floor(log2(x)) for x >= 1.
constexpr unsigned floor_log2(std::uint64_t x) {
    return x == 0 ? 0u : static_cast<unsigned>(std::bit_width(x) - 1);
}

constexpr std::uint64_t a_closed(std::uint64_t n) {
    const unsigned c = ceil_log2(n + 1);
    return (n + 1) * c - (std::uint64_t{1} << c) + 1;
}

/// Memoized table of the recurrence together with the smallest minimizing
/// split for each n.
///
/// Growing the table is single-writer; once extended to the largest index
/// needed it may be read concurrently.
///
/// While the computed prefix is convex (non-decreasing first differences),
/// k -> a(k) + a(n-1-k) is convex and symmetric, so its minimum sits at
/// k = floor((n-1)/2) and the smallest minimizer is found by binary search.
/// Convexity is checked on every extension; if it ever failed the table
/// would fall back to scanning every k.
class SequenceTable {
public:
    SequenceTable() : values_{0}, argmin_{std::nullopt} {}

    explicit SequenceTable(std::size_t up_to) : SequenceTable() { extend_to(up_to); }

    std::size_t size() const noexcept { return values_.size(); }
    std::size_t max_index() const noexcept { return values_.size() - 1; }

    std::uint64_t operator[](std::size_t n) const { return values_.at(n); }

    /// Smallest k attaining the minimum; empty for n = 0.
    std::optional<std::size_t> argmin(std::size_t n) const { return argmin_.at(n); }

    bool convex_prefix() const noexcept { return convex_; }

    std::uint64_t value(std::size_t n) {
        extend_to(n);
        return values_[n];
    }

    void extend_to(std::size_t n) {
        values_.reserve(n + 1);
        argmin_.reserve(n + 1);
        while (values_.size() <= n) append_next();
    }

    /// min over all splits of a(k) + a(m-1-k) by scanning every k, with the
    /// smallest minimizer. Requires m >= 1 and m - 1 <= max_index().
    std::pair<std::uint64_t, std::size_t> scan_min(std::size_t m) const {
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        std::size_t best_k = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const std::uint64_t s = values_.at(k) + values_.at(m - 1 - k);
            if (s < best) {
                best = s;
                best_k = k;
            }
        }
        return {best, best_k};
    }

    const std::vector<std::uint64_t>& values() const noexcept { return values_; }

    /// Builds a table from stored values, checking each against the recurrence.
    static SequenceTable from_values(const std::vector<std::uint64_t>& stored) {
        if (stored.empty() || stored[0] != 0) {
            throw std::runtime_error("sequence table must start with a(0) = 0");
        }
        SequenceTable t;
        t.extend_to(stored.size() - 1);
        for (std::size_t i = 0; i < stored.size(); ++i) {
            if (t.values_[i] != stored[i]) {
                throw std::runtime_error("sequence table entry " + std::to_string(i) + " is " +
                                         std::to_string(stored[i]) + ", expected " +
                                         std::to_string(t.values_[i]));
            }
        }
        return t;
    }

private:
    void append_next() {
        const std::size_t m = values_.size();
        std::uint64_t best = 0;
        std::size_t best_k = 0;
        if (convex_) {
            const auto f = [&](std::size_t k) { return values_[k] + values_[m - 1 - k]; };
            const std::size_t mid = (m - 1) / 2;
            best = f(mid);
            // f is non-increasing on [0, mid]; find the first k with f(k) == best.
            std::size_t lo = 0, hi = mid;
            while (lo < hi) {
                const std::size_t k = lo + (hi - lo) / 2;
                if (f(k) == best) hi = k;
                else lo = k + 1;
            }
            best_k = lo;
        } else {
            std::tie(best, best_k) = scan_min(m);
        }
        values_.push_back(m + best);
        argmin_.push_back(best_k);
        if (m >= 2 && values_[m] - values_[m - 1] < values_[m - 1] - values_[m - 2]) {
            convex_ = false;
        }
    }

    std::vector<std::uint64_t> values_;
    std::vector<std::optional<std::size_t>> argmin_;
    bool convex_ = true;
};

inline std::uint64_t a_recurrence(std::size_t n) { return SequenceTable(n)[n]; }

/// Newline-separated values, line i holding a(i).
inline void write_table(const std::string& path, const SequenceTable& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (auto v : table.values()) out << v << '\n';
    if (!out) throw std::runtime_error("error writing " + path);
}

inline SequenceTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<std::uint64_t> stored;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(line, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != line.size()) {
            throw std::runtime_error(path + ": malformed line '" + line + "'");
        }
        stored.push_back(v);
    }
    return SequenceTable::from_values(stored);
}

}  // namespace superpattern
