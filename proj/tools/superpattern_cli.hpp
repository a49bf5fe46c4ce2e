#pragma once

/**
 * @file superpattern_cli.hpp
 * @brief Command-line front end, callable in-process for testing.
 *
 * Exit codes: 0 true/success, 1 false/negative result, 2 usage or budget
 * error (one-line diagnostic on the error stream).
 */

#include "superpattern/json.hpp"
#include "superpattern/superpattern.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace superpattern::cli {

inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kError = 2;

/// A permutation argument; "layers:[3,1,2,1]" names a layered permutation.
inline Permutation parse_permutation_arg(const std::string& text) {
    constexpr std::string_view prefix = "layers:";
    if (text.rfind(prefix, 0) == 0) return realize(parse_profile(text.substr(prefix.size())));
    return parse(text);
}

inline std::string format_positions(const Embedding& e) {
    std::string out;
    for (auto p : e.positions) {
        if (!out.empty()) out.push_back(' ');
        out += std::to_string(p);
    }
    return out;
}

/// Budget precedence: --budget, then SUPERPATTERN_BUDGET, then the default.
inline SearchOptions search_options(std::optional<std::uint64_t> flag, unsigned jobs) {
    SearchOptions opts;
    opts.jobs = std::max(1u, jobs);
    if (flag) {
        opts.budget = *flag;
        opts.explicit_budget = true;
    } else if (auto env = budget_from_env()) {
        opts.budget = *env;
        opts.explicit_budget = true;
    }
    return opts;
}

/// Loads the table at `path` if it exists, extends it to n, and writes it back
/// when it grew.
inline SequenceTable seeded_table(const std::string& path, std::size_t n) {
    SequenceTable table;
    if (!path.empty() && std::filesystem::exists(path)) table = read_table(path);
    const std::size_t before = table.size();
    table.extend_to(n);
    if (!path.empty() && (table.size() != before || !std::filesystem::exists(path))) {
        write_table(path, table);
    }
    return table;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Superpatterns for the layered permutations and related classes",
                 "superpattern"};
    app.require_subcommand(1);
    bool json = false;
    std::string seed_table;
    app.add_flag("--json", json, "Machine-readable output");
    app.add_option("--seed-table", seed_table,
                   "Cache file for the a(n) table (one value per line, line i = a(i))");

    std::function<int()> action;
    auto emit = [&](const nlohmann::json& j) { out << j.dump() << '\n'; };

    // perm ------------------------------------------------------------------
    auto* perm = app.add_subcommand("perm", "Permutation operations");
    perm->require_subcommand(1);

    std::string pattern_text, host_text;
    auto* contains_cmd = perm->add_subcommand("contains", "Does <host> contain <pattern>?");
    contains_cmd->add_option("pattern", pattern_text)->required();
    contains_cmd->add_option("host", host_text)->required();
    contains_cmd->callback([&] {
        action = [&] {
            const auto pattern = parse_permutation_arg(pattern_text);
            const auto host = parse_permutation_arg(host_text);
            const auto e = contains(pattern, host);
            if (json) {
                emit({{"pattern", format(pattern)},
                      {"host", format(host)},
                      {"present", e.has_value()},
                      {"positions", e ? positions_json(*e) : nlohmann::json(nullptr)}});
            } else if (e) {
                out << "present at " << format_positions(*e) << '\n';
            } else {
                out << "absent\n";
            }
            return e ? kTrue : kFalse;
        };
    });

    std::vector<std::string> parts_text;
    auto* sum_cmd = perm->add_subcommand("sum", "Direct sum of the given permutations");
    sum_cmd->add_option("parts", parts_text);
    sum_cmd->callback([&] {
        action = [&] {
            std::vector<Permutation> parts;
            for (const auto& t : parts_text) parts.push_back(parse_permutation_arg(t));
            const auto s = direct_sum(parts);
            if (json) emit({{"permutation", format(s)}});
            else out << format(s) << '\n';
            return kTrue;
        };
    });

    // layerize / layers -----------------------------------------------------
    std::string perm_text;
    auto* layerize_cmd = app.add_subcommand("layerize", "Layered permutation of the same length "
                                                        "containing every layered pattern of "
                                                        "<perm>");
    layerize_cmd->add_option("perm", perm_text)->required();
    layerize_cmd->callback([&] {
        action = [&] {
            const auto p = parse_permutation_arg(perm_text);
            const auto profile = layerize_profile(p);
            const auto result = realize(profile);
            if (json) {
                emit({{"input", format(p)},
                      {"layerized", format(result)},
                      {"profile", format(profile)}});
            } else {
                out << format(result) << '\n';
            }
            return kTrue;
        };
    });

    auto* layers_cmd = app.add_subcommand("layers", "Layer profile of <perm>, if layered");
    layers_cmd->add_option("perm", perm_text)->required();
    layers_cmd->callback([&] {
        action = [&] {
            const auto p = parse_permutation_arg(perm_text);
            const auto profile = layer_profile(p);
            if (json) {
                emit({{"permutation", format(p)},
                      {"layered", profile.has_value()},
                      {"profile", profile ? nlohmann::json(profile->sizes)
                                          : nlohmann::json(nullptr)}});
            } else {
                out << (profile ? format(*profile) : std::string("not layered")) << '\n';
            }
            return profile ? kTrue : kFalse;
        };
    });

    // sequence ----------------------------------------------------------------
    auto* sequence = app.add_subcommand("sequence", "Shortest layered-universal lengths");
    sequence->require_subcommand(1);
    std::size_t seq_n = 0;
    bool closed = false;
    auto* seq_a = sequence->add_subcommand("a", "a(n) by the recurrence (or --closed)");
    seq_a->add_option("n", seq_n)->required();
    seq_a->add_flag("--closed", closed, "Use the closed form");
    seq_a->callback([&] {
        action = [&] {
            const auto table = seeded_table(seed_table, seq_n);
            const std::uint64_t value = closed ? a_closed(seq_n) : table[seq_n];
            if (json) {
                const auto k = table.argmin(seq_n);
                emit({{"n", seq_n},
                      {"a", value},
                      {"argmin_k", k ? nlohmann::json(*k) : nlohmann::json(nullptr)}});
            } else {
                out << value << '\n';
            }
            return kTrue;
        };
    });

    // universal ---------------------------------------------------------------
    auto* universal = app.add_subcommand("universal", "Layered-universal permutations");
    universal->require_subcommand(1);
    std::size_t build_n = 0;
    std::optional<std::size_t> split;
    auto* build_cmd = universal->add_subcommand("build", "Recursive construction U(n)");
    build_cmd->add_option("n", build_n)->required();
    build_cmd->add_option("--split", split, "Top-level split k (default floor(n/2))");
    build_cmd->callback([&] {
        action = [&] {
            const auto u = build_universal(build_n, split);
            if (json) {
                emit({{"n", build_n},
                      {"split", split ? nlohmann::json(*split)
                                      : (build_n ? nlohmann::json(build_n / 2)
                                                 : nlohmann::json(nullptr))},
                      {"permutation", format(u)},
                      {"length", u.size()}});
            } else {
                out << format(u) << '\n';
            }
            return kTrue;
        };
    });

    std::size_t verify_n = 0;
    std::string class_text;
    auto* verify_cmd = universal->add_subcommand("verify", "Is <perm> n-universal for a class?");
    verify_cmd->add_option("perm", perm_text)->required();
    verify_cmd->add_option("n", verify_n)->required();
    verify_cmd->add_option("--class", class_text, "layered | av231 | av321 | all")->required();
    verify_cmd->callback([&] {
        action = [&] {
            const auto report = verify_universal(parse_permutation_arg(perm_text), verify_n,
                                                 parse_class_tag(class_text));
            if (json) {
                emit(to_json(report));
            } else if (report.ok) {
                out << "ok patterns_checked=" << report.patterns_checked << '\n';
            } else {
                out << "missing " << format(*report.missing)
                    << " patterns_checked=" << report.patterns_checked << '\n';
            }
            return report.ok ? kTrue : kFalse;
        };
    });

    // search ------------------------------------------------------------------
    auto* search = app.add_subcommand("search", "Exhaustive superpattern search");
    search->require_subcommand(1);
    std::size_t search_n = 0;
    std::string patterns_text = "layered", candidates_text = "layered";
    std::optional<std::uint64_t> budget;
    unsigned jobs = 1;
    auto* minimal_cmd = search->add_subcommand("minimal", "Shortest n-universal candidate");
    minimal_cmd->add_option("n", search_n)->required();
    minimal_cmd->add_option("--patterns", patterns_text, "Pattern class")->required();
    minimal_cmd->add_option("--candidates", candidates_text, "Candidate class")->required();
    minimal_cmd->add_option("--budget", budget, "Node budget (candidates x patterns)");
    minimal_cmd->add_option("--jobs", jobs, "Worker threads");

    auto report_budget = [&](const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        if (json) emit({{"error", e.what()}, {"partial", to_json(e.partial())}});
        return kError;
    };

    minimal_cmd->callback([&] {
        action = [&] {
            try {
                const auto report =
                    minimal_superpattern(search_n, parse_class_tag(patterns_text),
                                         parse_class_tag(candidates_text),
                                         search_options(budget, jobs));
                if (json) {
                    emit(to_json(report));
                } else {
                    out << "min_length " << report.min_length << " witness "
                        << format(report.witness) << " candidates_examined "
                        << report.candidates_examined << '\n';
                }
                return kTrue;
            } catch (const BudgetExceeded& e) {
                return report_budget(e);
            }
        };
    });

    // check -------------------------------------------------------------------
    auto* check = app.add_subcommand("check", "Reproduce the Av(231) / Av(321) computations");
    check->require_subcommand(1);
    bool verify_minimality = false;
    auto* claims_cmd = check->add_subcommand("claims231", "Four facts about Av(231) at n = 5");
    claims_cmd->add_flag("--verify-minimality", verify_minimality,
                         "Also rule out every permutation of length 10 (slow)");
    claims_cmd->callback([&] {
        action = [&] {
            const auto report = check_claims_231(verify_minimality);
            if (json) {
                emit(to_json(report));
            } else {
                for (const auto& c : report.claims) {
                    out << "claim " << c.id << ": "
                        << (c.skipped ? "skipped" : c.passed ? "pass" : "FAIL") << " - "
                        << c.statement << " (" << c.detail << ")\n";
                }
            }
            return report.all_passed() ? kTrue : kFalse;
        };
    });

    std::size_t conj_n = 0;
    auto* conj_cmd = check->add_subcommand(
        "conjecture321", "Does some shortest n-universal permutation for Av(321) avoid 321?");
    conj_cmd->add_option("n", conj_n)->required();
    conj_cmd->add_option("--budget", budget, "Node budget (candidates x patterns)");
    conj_cmd->add_option("--jobs", jobs, "Worker threads");
    conj_cmd->callback([&] {
        action = [&] {
            try {
                const auto report = check_conjecture_321(conj_n, search_options(budget, jobs));
                if (json) {
                    emit(to_json(report));
                } else {
                    out << (report.holds ? "holds" : "fails") << " n=" << report.n
                        << " min_length=" << report.min_length << " witness_any="
                        << format(report.witness_any) << " witness_avoiding="
                        << (report.witness_avoiding ? format(*report.witness_avoiding)
                                                    : std::string("none"))
                        << '\n';
                }
                return report.holds ? kTrue : kFalse;
            } catch (const BudgetExceeded& e) {
                return report_budget(e);
            }
        };
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kTrue;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kTrue;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }

    if (!action) {
        err << "error: no command given\n";
        return kError;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
}

}  // namespace superpattern::cli
