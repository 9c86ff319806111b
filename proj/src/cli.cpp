#include "tourney/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tourney/counting.hpp"
#include "tourney/oracle.hpp"
#include "tourney/score_sequence.hpp"
#include "tourney/tournament.hpp"
#include "tourney/uniqueness.hpp"

namespace tourney::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<int> parse_scores(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::size_t lo = pos, hi = comma;
        while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
        while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
        int value = 0;
        const auto [end, ec] = std::from_chars(text.data() + lo, text.data() + hi, value);
        if (ec != std::errc{} || end != text.data() + hi)
            throw std::invalid_argument("scores must be comma-separated integers; bad token '" +
                                        text.substr(pos, comma - pos) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

std::string csv(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

const char* violation_kind(Violation v) {
    switch (v) {
        case Violation::EmptySequence: return "empty";
        case Violation::NotNondecreasing: return "not_nondecreasing";
        case Violation::WrongTotal: return "wrong_total";
        case Violation::PrefixDeficit: return "prefix_deficit";
        case Violation::None: break;
    }
    return "none";
}

json multiset_json(const std::vector<std::pair<int, int>>& entries) {
    json arr = json::array();
    for (const auto& [index, mult] : entries) arr.push_back({index, mult});
    return arr;
}

std::string multiset_text(const std::vector<std::pair<int, int>>& entries) {
    if (entries.empty()) return "none";
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) s += ' ';
        s += std::to_string(entries[i].first) + '*' + std::to_string(entries[i].second);
    }
    return s;
}

json tuple_json(const FeasibleTuple& t) {
    json arr = json::array();
    for (const auto& [i, j] : t.pairs) arr.push_back({i, j});
    return arr;
}

std::string tuple_text(const FeasibleTuple& t) {
    if (t.pairs.empty()) return "(empty)";
    std::string s;
    for (std::size_t k = 0; k < t.pairs.size(); ++k) {
        if (k > 0) s += ' ';
        s += '(' + std::to_string(t.pairs[k].first) + ',' +
             std::to_string(t.pairs[k].second) + ')';
    }
    return s;
}

std::string decomposition_text(const Decomposition& d) {
    std::string s;
    for (std::size_t i = 0; i < d.items.size(); ++i) {
        if (i > 0) s += ' ';
        if (const auto* z = std::get_if<ZeroRun>(&d.items[i]))
            s += "zeros(" + std::to_string(z->length) + ')';
        else {
            const auto& seg = std::get<Segment>(d.items[i]);
            s += "seg(" + std::to_string(seg.peak) + ',' +
                 std::to_string(seg.middle_zeros) + ')';
        }
    }
    return s;
}

json decomposition_json(const Decomposition& d) {
    json arr = json::array();
    for (const auto& item : d.items) {
        if (const auto* z = std::get_if<ZeroRun>(&item))
            arr.push_back({{"kind", "zero_run"}, {"length", z->length}});
        else {
            const auto& seg = std::get<Segment>(item);
            arr.push_back({{"kind", "segment"},
                           {"peak", seg.peak},
                           {"zeros", seg.middle_zeros}});
        }
    }
    return arr;
}

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

CliResult cmd_analyze(const std::vector<int>& scores, bool as_json) {
    const ScoreSequence seq((std::vector<int>(scores)));
    const FeasibilityReport report = validate_feasible(seq);
    const NormalizedVector h = normalize(seq);

    std::optional<UpsetMultisets> multisets;
    std::optional<DecomposeResult> parsed;
    if (report.feasible()) {
        multisets = upset_multisets(seq);
        parsed = decompose(h);
    }

    CliResult out;
    if (as_json) {
        json result;
        result["n"] = seq.size();
        result["feasible"] = report.feasible();
        if (report.feasible())
            result["violation"] = nullptr;
        else
            result["violation"] = {{"kind", violation_kind(report.violation)},
                                   {"index", report.index},
                                   {"expected", report.expected},
                                   {"actual", report.actual},
                                   {"message", report.describe()}};
        result["normalized"] = h.values();
        result["min_upsets"] = nullptr;
        result["x_multiset"] = nullptr;
        result["y_multiset"] = nullptr;
        result["unique_minimizer"] = nullptr;
        result["decomposition"] = nullptr;
        result["not_decomposable_at"] = nullptr;
        if (multisets) {
            result["min_upsets"] = multisets->ell;
            result["x_multiset"] = multiset_json(multisets->x_indices);
            result["y_multiset"] = multiset_json(multisets->y_indices);
            if (const auto* d = std::get_if<Decomposition>(&*parsed)) {
                result["unique_minimizer"] = true;
                result["decomposition"] = decomposition_json(*d);
            } else {
                result["unique_minimizer"] = false;
                result["not_decomposable_at"] =
                    std::get<NotDecomposable>(*parsed).position;
            }
        }
        out.output = finish({{"command", "analyze"},
                             {"input", {{"scores", scores}}},
                             {"result", result}});
        return out;
    }

    std::ostringstream os;
    os << "command: analyze\n";
    os << "scores: " << csv(scores) << "\n";
    os << "n: " << seq.size() << "\n";
    os << "feasible: " << (report.feasible() ? "yes" : "no") << "\n";
    if (!report.feasible()) os << "violation: " << report.describe() << "\n";
    os << "normalized: " << csv(h.values()) << "\n";
    if (multisets) {
        os << "min_upsets: " << multisets->ell << "\n";
        os << "x_multiset: " << multiset_text(multisets->x_indices) << "\n";
        os << "y_multiset: " << multiset_text(multisets->y_indices) << "\n";
        if (const auto* d = std::get_if<Decomposition>(&*parsed)) {
            os << "unique_minimizer: yes\n";
            os << "decomposition: " << decomposition_text(*d) << "\n";
        } else {
            os << "unique_minimizer: no\n";
            os << "not_decomposable_at: "
               << std::get<NotDecomposable>(*parsed).position << "\n";
        }
    }
    out.output = os.str();
    return out;
}

CliResult cmd_matrices(const std::vector<int>& scores, std::optional<long long> limit,
                       bool as_json) {
    const ScoreSequence seq((std::vector<int>(scores)));
    if (const FeasibilityReport report = validate_feasible(seq); !report.feasible())
        return {kExitInfeasible, "", "infeasible: " + report.describe() + "\n"};

    const auto tuples = enumerate_feasible_tuples(seq);
    const long long count = static_cast<long long>(tuples.size());
    const long long shown = limit ? std::min(*limit, count) : count;
    const int ell = min_upsets(seq);

    CliResult out;
    if (as_json) {
        json mats = json::array();
        for (long long k = 0; k < shown; ++k)
            mats.push_back({{"tuple", tuple_json(tuples[k])},
                            {"rows", apply_tuple(seq.size(), tuples[k]).to_rows()}});
        json result = {{"n", seq.size()},       {"min_upsets", ell},
                       {"count", count},        {"shown", shown},
                       {"truncated", shown < count}, {"matrices", std::move(mats)}};
        json input = {{"scores", scores}};
        input["limit"] = limit ? json(*limit) : json(nullptr);
        out.output = finish(
            {{"command", "matrices"}, {"input", input}, {"result", result}});
        return out;
    }

    std::ostringstream os;
    os << "command: matrices\n";
    os << "scores: " << csv(scores) << "\n";
    os << "n: " << seq.size() << "\n";
    os << "min_upsets: " << ell << "\n";
    os << "count: " << count << "\n";
    for (long long k = 0; k < shown; ++k) {
        os << "matrix " << k + 1 << " of " << count << "\n";
        os << "tuple: " << tuple_text(tuples[k]) << "\n";
        for (const auto& row : apply_tuple(seq.size(), tuples[k]).to_rows())
            os << row << "\n";
    }
    if (shown < count)
        os << "truncated: showing " << shown << " of " << count << "\n";
    out.output = os.str();
    return out;
}

CliResult cmd_count(int n, const std::string& method, bool list, bool as_json) {
    constexpr double kTolerance = 1e-6;
    std::optional<BigInt> recurrence, linear;
    std::optional<ClosedFormCount> closed;
    if (method == "recurrence" || method == "all")
        recurrence = count_unique_recurrence(n);
    if (method == "linear" || method == "all") linear = count_unique_linear(n);
    if (method == "closed" || method == "all")
        closed = count_unique_closed(n, kTolerance);

    // Exact paths must agree exactly; the floating path must land within
    // relative tolerance of the exact value (of itself when run alone).
    bool agreement = true;
    if (recurrence && linear && *recurrence != *linear) agreement = false;
    if (closed && !closed->within_tolerance) agreement = false;
    if (closed && recurrence) {
        const double exact = static_cast<double>(*recurrence);
        if (std::abs(closed->real_part - exact) >
            kTolerance * std::max(1.0, std::abs(exact)))
            agreement = false;
    }

    std::optional<std::vector<std::vector<int>>> sequences;
    if (list) {
        sequences.emplace();
        for (const auto& h : enumerate_unique_normvecs(n))
            sequences->push_back(denormalize(h).values());
    }

    CliResult out;
    out.exit_code = agreement ? kExitOk : kExitDisagreement;
    if (!agreement) out.error = "counting methods disagree\n";

    if (as_json) {
        json result;
        result["n"] = n;
        result["recurrence"] = recurrence ? json(recurrence->str()) : json(nullptr);
        result["linear"] = linear ? json(linear->str()) : json(nullptr);
        if (closed)
            result["closed"] = {{"value", closed->rounded.str()},
                                {"real_part", closed->real_part},
                                {"residual", closed->residual},
                                {"imag_magnitude", closed->imag_magnitude},
                                {"within_tolerance", closed->within_tolerance}};
        else
            result["closed"] = nullptr;
        result["agreement"] = agreement;
        result["sequences"] = sequences ? json(*sequences) : json(nullptr);
        out.output = finish({{"command", "count"},
                             {"input", {{"n", n}, {"method", method}, {"list", list}}},
                             {"result", result}});
        return out;
    }

    std::ostringstream os;
    os << "command: count\n";
    os << "n: " << n << "\n";
    os << "method: " << method << "\n";
    if (recurrence) os << "recurrence: " << recurrence->str() << "\n";
    if (linear) os << "linear: " << linear->str() << "\n";
    if (closed)
        os << "closed: " << closed->rounded.str() << " (residual "
           << sci(closed->residual) << ", imag " << sci(closed->imag_magnitude)
           << ")\n";
    os << "agreement: " << (agreement ? "yes" : "no") << "\n";
    if (sequences) {
        os << "sequences: " << sequences->size() << "\n";
        for (const auto& seq : *sequences) os << csv(seq) << "\n";
    }
    out.output = os.str();
    return out;
}

struct SuiteRun {
    std::string suite;
    VerificationReport report;
};

CliResult cmd_verify(const std::string& suite, std::optional<int> max_n, bool as_json) {
    const bool all = suite == "all";
    std::vector<SuiteRun> runs;

    if (all || suite == "census") {
        // Exhaustive cross-checks get slow fast; the library itself stops at 10.
        const int top = std::min(max_n.value_or(6), 10);
        for (int n = 1; n <= top; ++n) {
            VerificationReport r = verify_theorems(n);
            for (auto& check : r.checks)
                check.name = "n=" + std::to_string(n) + " " + check.name;
            runs.push_back({"census", std::move(r)});
        }
    }
    if (all || suite == "count")
        runs.push_back({"count", verify_count(std::min(max_n.value_or(12), 12))});
    if (all || suite == "families")
        runs.push_back({"families", verify_families(max_n.value_or(20))});

    bool all_passed = true;
    for (const auto& run : runs) all_passed = all_passed && run.report.all_passed();

    CliResult out;
    out.exit_code = all_passed ? kExitOk : kExitVerifyFailed;

    if (as_json) {
        json checks = json::array();
        for (const auto& run : runs)
            for (const auto& check : run.report.checks)
                checks.push_back({{"suite", run.suite},
                                  {"name", check.name},
                                  {"passed", check.passed},
                                  {"counterexample", check.counterexample}});
        json input = {{"suite", suite}};
        input["max_n"] = max_n ? json(*max_n) : json(nullptr);
        out.output = finish({{"command", "verify"},
                             {"input", input},
                             {"result", {{"checks", std::move(checks)},
                                         {"all_passed", all_passed}}}});
        return out;
    }

    std::ostringstream os;
    os << "command: verify\n";
    os << "suite: " << suite << "\n";
    for (const auto& run : runs)
        for (const auto& check : run.report.checks) {
            if (check.passed)
                os << "[pass] " << run.suite << " " << check.name << "\n";
            else
                os << "[FAIL] " << run.suite << " " << check.name << ": "
                   << check.counterexample << "\n";
        }
    os << "result: " << (all_passed ? "pass" : "FAIL") << "\n";
    out.output = os.str();
    return out;
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
    CLI::App app{"tournament score sequences: feasibility, minimum-upset "
                 "matrices, uniqueness, and exact counts"};
    app.name("tourney");

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand(
        "analyze", "feasibility, normalized vector, upset multisets, uniqueness");
    std::string analyze_scores;
    analyze->add_option("scores", analyze_scores, "comma-separated score sequence")
        ->required();
    analyze->fallthrough();

    auto* matrices = app.add_subcommand(
        "matrices", "every minimum-upset tournament matrix with its tuple");
    std::string matrices_scores;
    matrices->add_option("scores", matrices_scores, "comma-separated score sequence")
        ->required();
    long long limit = 0;
    auto* limit_opt = matrices->add_option("--limit", limit, "print at most K matrices")
                          ->check(CLI::PositiveNumber);
    matrices->fallthrough();

    auto* count = app.add_subcommand(
        "count", "number of length-n sequences with a unique minimizer");
    int count_n = 0;
    count->add_option("n", count_n, "sequence length")
        ->required()
        ->check(CLI::PositiveNumber);
    std::string method = "all";
    count->add_option("--method", method, "counting path")
        ->check(CLI::IsMember({"recurrence", "linear", "closed", "all"}));
    bool list = false;
    count->add_flag("--list", list, "also list the sequences (n <= 18)");
    count->fallthrough();

    auto* verify = app.add_subcommand("verify", "run the self-check suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "which suite")
        ->check(CLI::IsMember({"census", "count", "families", "all"}));
    int max_n = 0;
    auto* max_n_opt = verify->add_option("--max-n", max_n, "suite size bound")
                          ->check(CLI::PositiveNumber);
    verify->fallthrough();

    try {
        std::vector<std::string> storage;
        storage.reserve(args.size() + 1);
        storage.emplace_back("tourney");
        storage.insert(storage.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        argv.reserve(storage.size());
        for (const auto& s : storage) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {kExitOk, app.help(), ""};
    } catch (const CLI::CallForAllHelp&) {
        return {kExitOk, app.help("", CLI::AppFormatMode::All), ""};
    } catch (const CLI::ParseError& e) {
        return {kExitUsage, "", std::string(e.what()) + "\n"};
    }

    const bool as_json = format == "json";
    try {
        if (*analyze) return cmd_analyze(parse_scores(analyze_scores), as_json);
        if (*matrices)
            return cmd_matrices(parse_scores(matrices_scores),
                                limit_opt->count() ? std::optional<long long>(limit)
                                                   : std::nullopt,
                                as_json);
        if (*count) {
            if (list && count_n > 18)
                return {kExitUsage, "", "--list supports n <= 18\n"};
            return cmd_count(count_n, method, list, as_json);
        }
        if (*verify)
            return cmd_verify(suite,
                              max_n_opt->count() ? std::optional<int>(max_n)
                                                 : std::nullopt,
                              as_json);
    } catch (const std::invalid_argument& e) {
        return {kExitUsage, "", std::string(e.what()) + "\n"};
    }
    return {kExitUsage, "", "no command selected\n"};
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const CliResult result = run(args);
    if (!result.output.empty()) std::cout << result.output;
    if (!result.error.empty()) std::cerr << result.error;
    return result.exit_code;
}

}  // namespace tourney::cli
