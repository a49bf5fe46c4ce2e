#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive search for shortest superpatterns.
 *
 * Candidates of each length are scanned in lexicographic order. With more
 * than one job the rank range of a length is cut into chunks handed out to
 * worker threads; the reduction keeps the smallest successful rank, so the
 * result is the same as the serial scan.
 */

#include "superpattern/classes.hpp"
#include "superpattern/layered.hpp"
#include "superpattern/permutation.hpp"
#include "superpattern/universal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace superpattern {

/// Default cap on candidates x patterns for one search.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// SUPERPATTERN_BUDGET if set and valid, else nullopt.
inline std::optional<std::uint64_t> budget_from_env() {
    const char* raw = std::getenv("SUPERPATTERN_BUDGET");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0') {
        throw std::invalid_argument(std::string("SUPERPATTERN_BUDGET is not an integer: ") + raw);
    }
    return static_cast<std::uint64_t>(v);
}

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget;
    /// Set when the caller chose the budget; lifts the default size guards.
    bool explicit_budget = false;
    unsigned jobs = 1;
    /// Candidate ranks per work unit in parallel mode.
    std::uint64_t chunk = 4096;
};

struct SearchReport {
    std::size_t n = 0;
    ClassTag pattern_class = ClassTag::layered;
    ClassTag candidate_class = ClassTag::layered;
    std::size_t min_length = 0;
    Permutation witness;
    std::uint64_t candidates_examined = 0;
    std::vector<std::pair<std::size_t, std::uint64_t>> lengths_exhausted;
    std::int64_t elapsed_ms = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, SearchReport partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}

    /// Lengths fully enumerated before the search stopped.
    const SearchReport& partial() const noexcept { return partial_; }

private:
    SearchReport partial_;
};

/// Largest n searched by default for the candidate class.
inline constexpr std::size_t default_search_n_limit(ClassTag candidates) {
    switch (candidates) {
        case ClassTag::all: return 4;
        case ClassTag::layered: return 10;
        case ClassTag::av231:
        case ClassTag::av321: return 12;
    }
    return 0;
}

/// Longest candidate the search will enumerate.
inline constexpr std::size_t max_candidate_length(ClassTag candidates) {
    return candidates == ClassTag::layered ? 63 : class_enumeration_cap(candidates);
}

/// The permutation of {1..m} with lexicographic rank `rank`.
inline std::vector<Value> permutation_at(std::size_t m, std::uint64_t rank) {
    std::vector<Value> pool(m);
    for (std::size_t i = 0; i < m; ++i) pool[i] = static_cast<Value>(i + 1);
    std::vector<Value> out;
    out.reserve(m);
    for (std::size_t i = m; i > 0; --i) {
        const std::uint64_t block = factorial(i - 1);
        const auto idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

namespace detail {

/// Runs scan(begin, end) -> optional<rank> over [0, count) and returns the
/// smallest rank any call reported.
template <class MakeScanner>
std::optional<std::uint64_t> first_success(std::uint64_t count, const SearchOptions& opts,
                                           MakeScanner make_scanner) {
    if (opts.jobs <= 1 || count <= opts.chunk) {
        auto scan = make_scanner();
        return scan(std::uint64_t{0}, count);
    }
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{none};
    auto worker = [&] {
        auto scan = make_scanner();
        while (true) {
            const std::uint64_t begin = next.fetch_add(opts.chunk);
            if (begin >= count || begin >= best.load()) return;
            const std::uint64_t end = std::min(count, begin + opts.chunk);
            if (auto hit = scan(begin, end)) {
                std::uint64_t cur = best.load();
                while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
                }
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(opts.jobs);
    for (unsigned j = 0; j < opts.jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (best.load() == none) return std::nullopt;
    return best.load();
}

/// Pattern list in check order. Patterns are tried in the given order, but a
/// pattern that rejects a candidate is moved one slot forward so frequent
/// rejectors drift to the front. Only the speed depends on the order.
template <class Pattern>
class PatternOrder {
public:
    explicit PatternOrder(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {}

    template <class Contains>
    bool all_contained(Contains&& contains) {
        for (std::size_t i = 0; i < patterns_.size(); ++i) {
            if (!contains(patterns_[i])) {
                if (i > 0) std::swap(patterns_[i], patterns_[i - 1]);
                return false;
            }
        }
        return true;
    }

private:
    std::vector<Pattern> patterns_;
};

/// Class members of length n with the decreasing permutation first when it
/// belongs to the class; the rest in lexicographic order.
inline std::vector<Permutation> ordered_patterns(ClassTag tag, std::size_t n) {
    auto patterns = enumerate_class(tag, n);
    const auto dec = decreasing(n);
    auto it = std::find(patterns.begin(), patterns.end(), dec);
    if (it != patterns.end()) std::rotate(patterns.begin(), it, it + 1);
    return patterns;
}

}  // namespace detail

/// Shortest member of `candidate_class` containing every member of
/// `pattern_class` of length n, together with counts proving no shorter
/// candidate works. Throws BudgetExceeded (with the lengths finished so far)
/// when the next length would push candidates x patterns over the budget.
inline SearchReport minimal_superpattern(std::size_t n, ClassTag pattern_class,
                                         ClassTag candidate_class,
                                         const SearchOptions& opts = {}) {
    const auto started = std::chrono::steady_clock::now();
    SearchReport report;
    report.n = n;
    report.pattern_class = pattern_class;
    report.candidate_class = candidate_class;
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };

    if (!opts.explicit_budget && n > default_search_n_limit(candidate_class)) {
        throw BudgetExceeded("search over " + std::string(to_string(candidate_class)) +
                                 " candidates is limited to n <= " +
                                 std::to_string(default_search_n_limit(candidate_class)) +
                                 " unless a budget is given",
                             report);
    }
    if (n > class_enumeration_cap(pattern_class)) {
        throw std::length_error("pattern class " + std::string(to_string(pattern_class)) +
                                " cannot be enumerated at n = " + std::to_string(n));
    }

    const auto patterns = detail::ordered_patterns(pattern_class, n);
    for (const auto& p : patterns) {
        // Candidate classes are closed under containment, so no member can
        // contain a pattern outside the class.
        if (!is_member(candidate_class, p)) {
            throw std::invalid_argument("no " + std::string(to_string(candidate_class)) +
                                        " permutation contains the pattern " + format(p));
        }
    }

    const bool profile_mode =
        pattern_class == ClassTag::layered && candidate_class == ClassTag::layered;
    std::vector<LayerProfile> pattern_profiles;
    if (profile_mode) {
        for (const auto& p : patterns) pattern_profiles.push_back(*layer_profile(p));
    }

    std::uint64_t spent = 0;
    for (std::size_t m = n;; ++m) {
        if (m > max_candidate_length(candidate_class)) {
            report.elapsed_ms = elapsed();
            throw BudgetExceeded("no superpattern up to length " +
                                     std::to_string(max_candidate_length(candidate_class)),
                                 report);
        }
        const std::uint64_t count = class_size(candidate_class, m);
        const std::uint64_t cost =
            saturating_mul(count, std::max<std::uint64_t>(1, patterns.size()));
        if (saturating_add(spent, cost) > opts.budget) {
            report.elapsed_ms = elapsed();
            throw BudgetExceeded("budget of " + std::to_string(opts.budget) +
                                     " exceeded at length " + std::to_string(m) + " (needs " +
                                     std::to_string(saturating_add(spent, cost)) + ")",
                                 report);
        }
        spent += cost;

        std::optional<std::uint64_t> hit;
        std::vector<Permutation> materialized;  // av-class candidates

        if (profile_mode) {
            hit = detail::first_success(count, opts, [&] {
                return [&, order = detail::PatternOrder<LayerProfile>(pattern_profiles),
                        sizes = std::vector<LayerSize>()](
                           std::uint64_t begin,
                           std::uint64_t end) mutable -> std::optional<std::uint64_t> {
                    const std::uint64_t top = composition_count(m) - 1;
                    for (std::uint64_t r = begin; r < end; ++r) {
                        const std::uint64_t mask = top - r;
                        sizes.clear();
                        LayerSize run = 1;
                        for (std::size_t i = 1; i < m; ++i) {
                            if (mask >> (m - 1 - i) & 1) {
                                sizes.push_back(run);
                                run = 1;
                            } else {
                                ++run;
                            }
                        }
                        if (m > 0) sizes.push_back(run);
                        if (order.all_contained([&](const LayerProfile& p) {
                                return layered_contains(std::span<const LayerSize>(p.sizes),
                                                        std::span<const LayerSize>(sizes));
                            })) {
                            return r;
                        }
                    }
                    return std::nullopt;
                };
            });
        } else {
            auto contains_all = [](detail::PatternOrder<Permutation>& order,
                                   const Permutation& host) {
                return order.all_contained(
                    [&](const Permutation& p) { return is_contained(p, host); });
            };
            if (candidate_class == ClassTag::all) {
                hit = detail::first_success(count, opts, [&] {
                    return [&, order = detail::PatternOrder<Permutation>(patterns)](
                               std::uint64_t begin,
                               std::uint64_t end) mutable -> std::optional<std::uint64_t> {
                        if (begin >= end) return std::nullopt;
                        auto v = permutation_at(m, begin);
                        for (std::uint64_t r = begin; r < end; ++r) {
                            if (contains_all(order, Permutation::from_trusted(v))) return r;
                            std::next_permutation(v.begin(), v.end());
                        }
                        return std::nullopt;
                    };
                });
            } else {
                if (candidate_class == ClassTag::layered) {
                    for (const auto& p : CompositionRange(m)) materialized.push_back(realize(p));
                } else {
                    materialized = enumerate_class(candidate_class, m);
                }
                hit = detail::first_success(
                    materialized.size(), opts, [&] {
                        return [&, order = detail::PatternOrder<Permutation>(patterns)](
                                   std::uint64_t begin, std::uint64_t end) mutable
                               -> std::optional<std::uint64_t> {
                            for (std::uint64_t r = begin; r < end; ++r) {
                                if (contains_all(order, materialized[r])) return r;
                            }
                            return std::nullopt;
                        };
                    });
            }
        }

        if (!hit) {
            report.lengths_exhausted.emplace_back(m, count);
            report.candidates_examined += count;
            continue;
        }

        report.min_length = m;
        report.candidates_examined += *hit + 1;
        if (profile_mode || candidate_class == ClassTag::layered) {
            report.witness = realize(composition_at(m, *hit));
        } else if (candidate_class == ClassTag::all) {
            report.witness = Permutation::from_trusted(permutation_at(m, *hit));
        } else {
            report.witness = materialized[*hit];
        }
        break;
    }

    // Re-check the witness against the full pattern list.
    if (!is_member(candidate_class, report.witness)) {
        throw std::logic_error("search witness " + format(report.witness) + " is not in class " +
                               std::string(to_string(candidate_class)));
    }
    for (const auto& p : patterns) {
        if (!is_contained(p, report.witness)) {
            throw std::logic_error("search witness " + format(report.witness) + " misses " +
                                   format(p));
        }
    }
    report.elapsed_ms = elapsed();
    return report;
}

// ---------------------------------------------------------------------------
// Reproduced computations on Av(231) and Av(321)

struct ClaimResult {
    int id = 0;
    std::string statement;
    bool passed = false;
    bool skipped = false;
    std::string detail;
    std::optional<Embedding> witness;
};

inline ClaimResult make_claim(int id, std::string statement) {
    ClaimResult c;
    c.id = id;
    c.statement = std::move(statement);
    return c;
}

struct Claims231Report {
    std::vector<ClaimResult> claims;

    bool all_passed() const {
        return std::all_of(claims.begin(), claims.end(),
                           [](const ClaimResult& c) { return c.passed || c.skipped; });
    }
};

inline const Permutation& av231_minimum_witness() {
    static const Permutation p{1, 5, 11, 9, 3, 2, 8, 4, 7, 6, 10};
    return p;
}

inline const Permutation& av231_avoiding_witness() {
    static const Permutation p{1, 11, 3, 2, 10, 7, 5, 4, 6, 9, 8, 12};
    return p;
}

/// Checks the four facts about 5-universal permutations for Av(231). With
/// `verify_minimality`, also checks that no permutation of length 10 at all is
/// 5-universal for Av(231) (about 3.6 million candidates).
inline Claims231Report check_claims_231(bool verify_minimality = false) {
    constexpr std::size_t n = 5;
    Claims231Report report;
    const auto& w11 = av231_minimum_witness();
    const auto& w12 = av231_avoiding_witness();
    const auto patterns = detail::ordered_patterns(ClassTag::av231, n);

    auto universal = [&](const Permutation& host) {
        return std::all_of(patterns.begin(), patterns.end(),
                           [&](const Permutation& p) { return is_contained(p, host); });
    };

    {
        auto c = make_claim(1, format(w11) + " is 5-universal for av231");
        const auto r = verify_universal(w11, n, ClassTag::av231);
        c.passed = r.ok;
        c.detail = r.ok ? "contains all " + std::to_string(r.patterns_checked) + " patterns"
                        : "misses " + format(*r.missing);
        report.claims.push_back(std::move(c));
    }
    {
        auto c = make_claim(2, format(w11) + " contains 231");
        c.witness = contains(pattern_231(), w11);
        c.passed = c.witness.has_value();
        if (c.witness) {
            std::string pos;
            for (auto p : c.witness->positions) pos += (pos.empty() ? "" : " ") + std::to_string(p);
            c.detail = "231 at positions " + pos;
        } else {
            c.detail = "avoids 231";
        }
        report.claims.push_back(std::move(c));
    }
    {
        auto c = make_claim(3, "no 231-avoiding permutation of length 11 is 5-universal for av231");
        std::uint64_t examined = 0;
        std::optional<Permutation> counterexample;
        for_each_in_class(ClassTag::av231, 11, [&](const Permutation& p) {
            ++examined;
            if (!counterexample && universal(p)) counterexample = p;
        });
        const std::uint64_t expected = catalan(11);
        c.passed = !counterexample && examined == expected;
        c.detail = "examined " + std::to_string(examined) + " of " + std::to_string(expected) +
                   (counterexample ? ", found " + format(*counterexample) : ", none universal");
        report.claims.push_back(std::move(c));
    }
    {
        auto c = make_claim(4, format(w12) + " avoids 231 and is 5-universal for av231");
        const bool avoid = avoids(w12, pattern_231());
        const auto r = verify_universal(w12, n, ClassTag::av231);
        c.passed = avoid && r.ok;
        c.detail = std::string(avoid ? "avoids 231" : "contains 231") + ", " +
                   (r.ok ? "contains all " + std::to_string(r.patterns_checked) + " patterns"
                         : "misses " + format(*r.missing));
        report.claims.push_back(std::move(c));
    }
    {
        auto c = make_claim(5, "no permutation of length 10 is 5-universal for av231");
        if (!verify_minimality) {
            c.skipped = true;
            c.detail = "not run (enable minimality verification)";
        } else {
            std::vector<Value> v(10);
            std::iota(v.begin(), v.end(), 1);
            std::uint64_t examined = 0;
            std::optional<Permutation> counterexample;
            detail::PatternOrder<Permutation> order(patterns);
            do {
                ++examined;
                const auto host = Permutation::from_trusted(v);
                if (order.all_contained([&](const Permutation& p) { return is_contained(p, host); })) {
                    counterexample = host;
                    break;
                }
            } while (std::next_permutation(v.begin(), v.end()));
            c.passed = !counterexample;
            c.detail = "examined " + std::to_string(examined) +
                       (counterexample ? ", found " + format(*counterexample) : ", none universal");
        }
        report.claims.push_back(std::move(c));
    }
    return report;
}

struct Conjecture321Report {
    std::size_t n = 0;
    /// Shortest length of any n-universal permutation for Av(321).
    std::size_t min_length = 0;
    /// Lexicographically first such permutation over all candidates.
    Permutation witness_any;
    /// Lexicographically first 321-avoiding one of the same length, if any.
    std::optional<Permutation> witness_avoiding;
    std::uint64_t avoiding_candidates_examined = 0;
    bool holds = false;
    SearchReport search;
};

/// Whether some shortest n-universal permutation for Av(321) avoids 321.
inline Conjecture321Report check_conjecture_321(std::size_t n, const SearchOptions& opts = {}) {
    Conjecture321Report report;
    report.n = n;
    report.search = minimal_superpattern(n, ClassTag::av321, ClassTag::all, opts);
    report.min_length = report.search.min_length;
    report.witness_any = report.search.witness;

    const auto patterns = detail::ordered_patterns(ClassTag::av321, n);
    detail::PatternOrder<Permutation> order(patterns);
    for (const auto& candidate : enumerate_class(ClassTag::av321, report.min_length)) {
        ++report.avoiding_candidates_examined;
        if (order.all_contained([&](const Permutation& p) { return is_contained(p, candidate); })) {
            report.witness_avoiding = candidate;
            break;
        }
    }
    report.holds = report.witness_avoiding.has_value();
    return report;
}

}  // namespace superpattern
