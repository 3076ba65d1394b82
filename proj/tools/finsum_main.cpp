// finsum: exact finite-sums / partition-regularity toolkit, CLI front end.
// One subcommand per library operation, JSON in and out, BigInt as decimal
// strings. Exit codes: 0 = result produced (including "none" results and
// counterexample verdicts), 64 = usage error, 65 = malformed input or a
// violated precondition, 70 = internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "finsum/constructors.hpp"
#include "finsum/json_io.hpp"
#include "finsum/search.hpp"

using finsum::BigInt;
using finsum::Error;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;
constexpr int kExitInternal = 70;

// value starting with '{' or '[' is inline JSON, anything else is a file path
json load_json(const std::string& text) {
    std::string payload = text;
    if (payload.empty()) throw Error("malformed-input", "empty JSON argument");
    if (payload[0] != '{' && payload[0] != '[') {
        std::ifstream in(payload);
        if (!in) throw Error("malformed-input", "cannot read file: " + payload);
        std::stringstream buffer;
        buffer << in.rdbuf();
        payload = buffer.str();
    }
    json parsed = json::parse(payload, nullptr, false);
    if (parsed.is_discarded()) throw Error("malformed-input", "invalid JSON: " + text);
    return parsed;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream stream(text);
    while (std::getline(stream, item, ',')) out.push_back(item);
    return out;
}

std::vector<BigInt> parse_big_csv(const std::string& text) {
    std::vector<BigInt> out;
    for (const auto& item : split_csv(text)) out.push_back(finsum::parse_decimal(item));
    return out;
}

std::vector<int> parse_int_csv(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_csv(text))
        out.push_back(static_cast<int>(finsum::parse_decimal(item).get_si()));
    return out;
}

struct SpecArgs {
    std::string spec_json;
    std::string gens;
    int k = 0;
    std::string shift = "0";

    finsum::FsSpec resolve() const {
        if (!spec_json.empty()) return finsum::io::spec_from_json(load_json(spec_json));
        if (gens.empty()) throw Error("malformed-input", "need --spec or --gens/--k");
        finsum::FsSpec spec;
        spec.generators = parse_big_csv(gens);
        spec.k = k;
        spec.shift = finsum::parse_decimal(shift);
        finsum::validate_spec(spec);
        return spec;
    }
};

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
    cmd->add_option("--spec", args.spec_json, "FsSpec as inline JSON or a file path");
    cmd->add_option("--gens", args.gens, "generators as a comma-separated list");
    cmd->add_option("--k", args.k, "digit bound k");
    cmd->add_option("--shift", args.shift, "additive shift (default 0)");
}

finsum::ParametricWord parse_word_csv(const std::string& text, int k) {
    finsum::ParametricWord word;
    word.k = k;
    int max_var = 0;
    for (const auto& cell : split_csv(text)) {
        if (cell == "*") {
            word.cells.push_back(-1);
            max_var = std::max(max_var, 1);
        } else if (!cell.empty() && cell[0] == '*') {
            int var = static_cast<int>(finsum::parse_decimal(cell.substr(1)).get_si());
            word.cells.push_back(-var);
            max_var = std::max(max_var, var);
        } else {
            word.cells.push_back(static_cast<int>(finsum::parse_decimal(cell).get_si()));
        }
    }
    word.dim = std::max(1, max_var);
    finsum::validate_word(word);
    return word;
}

// Every library operation is reachable from exactly one subcommand; the
// coverage test enumerates both sides of this table.
const std::vector<std::pair<std::string, std::vector<std::string>>> kOpTable = {
    {"fs-enum", {"fs_enumerate", "has_distinct_sums"}},
    {"fs-sparse", {"sparse_generators"}},
    {"ipbar-enum", {"ip_bar_enumerate"}},
    {"word2sum", {"word_to_sum"}},
    {"sum2word", {"sum_to_word", "signed_digit_decompose"}},
    {"line2ap", {"line_to_ap"}},
    {"ap2line", {"ap_to_line"}},
    {"max-ap", {"max_ap_length"}},
    {"zero-sum-subsets", {"zero_sum_subsets"}},
    {"check-ip-cover", {"check_ip_cover"}},
    {"check-separation", {"check_separation"}},
    {"check-columns", {"check_columns_condition"}},
    {"cover2blocks", {"cover_to_blocks"}},
    {"shift-invariant", {"is_shift_invariant"}},
    {"signature", {"signature_bound"}},
    {"basecase-threshold", {"basecase_threshold"}},
    {"solve-from-cover", {"solution_from_cover"}},
    {"basecase-solve", {"basecase_solution", "shift_solution"}},
    {"epsilon-solve", {"solution_from_epsilon", "epsilon_matrix"}},
    {"example19", {"example19_solution"}},
    {"find-mono", {"find_mono"}},
    {"forall", {"forall_colorings"}},
    {"vdw", {"vdw_number"}},
    {"brauer", {"brauer_number"}},
    {"hj", {"hj_number"}},
    {"shifted-fs", {"find_shifted_fs"}},
    {"pseudo-neat", {"check_pseudo_neat"}},
};

struct CliState {
    finsum::SearchOptions search;
    finsum::EnumLimits limits;
    std::string batch_file;
    bool list_ops = false;
    std::function<json()> action;
    bool produced = false;
};

void build_app(CLI::App& app, CliState& state);

int run_line(const std::string& line);

int run_argv(std::vector<std::string> args) {
    CLI::App app{"exact finite-sums sets, partition-regularity criteria, "
                 "constructive solutions, and exhaustive coloring search"};
    CliState state;
    build_app(app, state);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            std::cout << app.help();
            return kExitOk;
        }
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return kExitUsage;
    }

    if (state.list_ops) {
        json table = json::object();
        for (const auto& [cmd, ops] : kOpTable) {
            table[cmd] = json{{"primary", ops.front()}, {"ops", ops}};
        }
        std::cout << table.dump() << "\n";
        return kExitOk;
    }
    if (!state.batch_file.empty()) {
        std::ifstream in(state.batch_file);
        std::istream& stream = state.batch_file == "-" ? std::cin : in;
        if (state.batch_file != "-" && !in) {
            std::cerr << json{{"error", "malformed-input"},
                              {"message", "cannot read batch file"}}
                             .dump()
                      << "\n";
            return kExitBadInput;
        }
        std::string line;
        while (std::getline(stream, line)) {
            if (line.empty()) continue;
            run_line(line);
        }
        return kExitOk;
    }
    if (!state.action) {
        std::cerr << json{{"error", "usage"}, {"message", "missing subcommand"}}.dump() << "\n";
        return kExitUsage;
    }
    try {
        std::cout << state.action().dump() << "\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return e.code() == "internal" ? kExitInternal : kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return kExitInternal;
    }
}

// batch line: {"cmd": "vdw", "args": {"r": 2, "k": 3, "cap": 12}}; args become
// --key value pairs (arrays/objects pass through as JSON text)
int run_line(const std::string& line) {
    json parsed = json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("cmd")) {
        std::cout << json{{"error", "malformed-input"}, {"message", "bad batch line"}}.dump()
                  << "\n";
        return kExitBadInput;
    }
    std::vector<std::string> args{parsed.at("cmd").get<std::string>()};
    if (parsed.contains("args")) {
        for (const auto& [key, value] : parsed.at("args").items()) {
            if (value.is_boolean()) {
                if (value.get<bool>()) args.push_back("--" + key);
                continue;
            }
            args.push_back("--" + key);
            if (value.is_string())
                args.push_back(value.get<std::string>());
            else
                args.push_back(value.dump());
        }
    }
    return run_argv(std::move(args));
}

void build_app(CLI::App& app, CliState& state) {
    app.require_subcommand(0, 1);
    app.add_option("--budget", state.search.budget, "node-expansion budget")
        ->envname("RAMSEY_BUDGET");
    app.add_option("--seed", state.search.seed, "seed echoed into verdicts")
        ->envname("RAMSEY_SEED");
    app.add_option("--workers", state.search.workers, "parallel workers for the search");
    app.add_option("--enum-cap", state.limits.max_words, "word-enumeration cap");
    app.add_option("--batch", state.batch_file,
                   "run newline-delimited JSON commands from a file ('-' for stdin)");
    app.add_flag("--list-ops", state.list_ops, "print the subcommand/operation table")
        ->group("");

    // ---- fs-core ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("fs-enum", "enumerate a finite-sums set");
        auto args = std::make_shared<SpecArgs>();
        add_spec_options(cmd, *args);
        cmd->callback([&state, args] {
            state.action = [&state, args]() -> json {
                auto spec = args->resolve();
                auto values = finsum::fs_enumerate(spec, state.limits);
                bool distinct = finsum::has_distinct_sums(spec, state.limits);
                return json{{"count", values.size()},
                            {"distinct_sums", distinct},
                            {"values", finsum::to_decimal_list(values)}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("fs-sparse", "minimal sparse generator system");
        auto k = std::make_shared<int>(2);
        auto n = std::make_shared<int>(1);
        auto seed = std::make_shared<std::string>("1");
        cmd->add_option("--k", *k, "digit bound")->required();
        cmd->add_option("--n", *n, "generator count")->required();
        cmd->add_option("--seed-value", *seed, "first generator (default 1)");
        cmd->callback([&state, k, n, seed] {
            state.action = [k, n, seed]() -> json {
                return finsum::io::spec_to_json(
                    finsum::sparse_generators(*k, *n, finsum::parse_decimal(*seed)));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("ipbar-enum", "index-graded digit sums");
        auto gens = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto wide = std::make_shared<bool>(false);
        cmd->add_option("--gens", *gens, "generators")->required();
        cmd->add_option("--n", *n, "how many generators to use")->required();
        cmd->add_flag("--wide-digits", *wide, "use digits in [0, i+1) instead of [0, i)");
        cmd->callback([&state, gens, n, wide] {
            state.action = [gens, n, wide]() -> json {
                auto values = finsum::ip_bar_enumerate(
                    parse_big_csv(*gens), *n,
                    *wide ? finsum::IpBarDigits::Widened : finsum::IpBarDigits::Literal);
                return json{{"values", finsum::to_decimal_list(values)}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("word2sum", "evaluate a digit word");
        auto args = std::make_shared<SpecArgs>();
        auto word = std::make_shared<std::string>();
        add_spec_options(cmd, *args);
        cmd->add_option("--word", *word, "digits, comma separated")->required();
        cmd->callback([&state, args, word] {
            state.action = [args, word]() -> json {
                auto spec = args->resolve();
                finsum::EpsilonWord w;
                w.k = spec.k;
                w.digits = parse_int_csv(*word);
                BigInt sum = finsum::word_to_sum(w, spec);
                return json{{"sum", finsum::to_decimal(sum)}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("sum2word", "invert a sum to its digit word");
        auto args = std::make_shared<SpecArgs>();
        auto sum = std::make_shared<std::string>();
        auto signed_mode = std::make_shared<bool>(false);
        auto value = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        auto length = std::make_shared<int>(0);
        auto bound = std::make_shared<std::string>();
        add_spec_options(cmd, *args);
        cmd->add_option("--sum", *sum, "sum to invert");
        cmd->add_flag("--signed", *signed_mode, "signed digit decomposition mode");
        cmd->add_option("--value", *value, "signed mode: value to decompose");
        cmd->add_option("--base", *base, "signed mode: base B");
        cmd->add_option("--length", *length, "signed mode: digit count m");
        cmd->add_option("--bound", *bound, "signed mode: |digit| bound, below B/2");
        cmd->callback([&state, args, sum, signed_mode, value, base, length, bound] {
            state.action = [&state, args, sum, signed_mode, value, base, length, bound]() -> json {
                if (*signed_mode) {
                    auto digits = finsum::signed_digit_decompose(
                        finsum::parse_decimal(*value), finsum::parse_decimal(*base), *length,
                        finsum::parse_decimal(*bound));
                    if (!digits) return json{{"representable", false}, {"digits", nullptr}};
                    return json{{"representable", true},
                                {"digits", finsum::to_decimal_list(*digits)}};
                }
                auto spec = args->resolve();
                auto word =
                    finsum::sum_to_word(finsum::parse_decimal(*sum), spec, state.limits);
                return json{{"word", word.digits}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("line2ap", "progression described by a line");
        auto args = std::make_shared<SpecArgs>();
        auto word = std::make_shared<std::string>();
        add_spec_options(cmd, *args);
        cmd->add_option("--word", *word, "cells, e.g. '*,0' or '1,*'")->required();
        cmd->callback([&state, args, word] {
            state.action = [args, word]() -> json {
                auto spec = args->resolve();
                auto result = finsum::line_to_ap(parse_word_csv(*word, spec.k), spec);
                return json{{"a", finsum::to_decimal(result.ap.a)},
                            {"d", finsum::to_decimal(result.ap.d)},
                            {"len", result.ap.len},
                            {"includes_zero", result.includes_zero}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("ap2line", "line describing a progression, if any");
        auto args = std::make_shared<SpecArgs>();
        auto a = std::make_shared<std::string>();
        auto d = std::make_shared<std::string>();
        auto len = std::make_shared<int>(0);
        add_spec_options(cmd, *args);
        cmd->add_option("--a", *a, "first term")->required();
        cmd->add_option("--d", *d, "difference")->required();
        cmd->add_option("--len", *len, "length")->required();
        cmd->callback([&state, args, a, d, len] {
            state.action = [&state, args, a, d, len]() -> json {
                auto spec = args->resolve();
                finsum::ArithProgression ap{finsum::parse_decimal(*a), finsum::parse_decimal(*d),
                                            *len};
                auto word = finsum::ap_to_line(ap, spec, state.limits);
                if (!word) return json{{"word", nullptr}};
                return json{{"word", finsum::io::word_to_json(*word)}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("max-ap", "longest progression in a value list");
        auto values = std::make_shared<std::string>();
        cmd->add_option("--values", *values, "sorted distinct values")->required();
        cmd->callback([&state, values] {
            state.action = [values]() -> json {
                auto result = finsum::max_ap_length(parse_big_csv(*values));
                json out{{"length", result.length}};
                if (result.witness)
                    out["witness"] = json{{"a", finsum::to_decimal(result.witness->a)},
                                          {"d", finsum::to_decimal(result.witness->d)},
                                          {"len", result.witness->len}};
                else
                    out["witness"] = nullptr;
                return out;
            };
        });
    }

    // ---- criteria ----------------------------------------------------------
    auto add_matrix_cmd = [&](const std::string& name, const std::string& desc,
                              std::function<json(const finsum::LinearSystem&)> fn) {
        auto* cmd = app.add_subcommand(name, desc);
        auto matrix = std::make_shared<std::string>();
        cmd->add_option("--matrix", *matrix, "rows as JSON, e.g. '[[1,1,-1]]'")->required();
        cmd->callback([&state, matrix, fn] {
            state.action = [matrix, fn]() -> json {
                return fn(finsum::io::system_from_json(load_json(*matrix)));
            };
        });
    };
    add_matrix_cmd("zero-sum-subsets", "all zero-sum column subsets",
                   [](const finsum::LinearSystem& sys) {
                       json subsets = json::array();
                       for (const auto& subset : finsum::zero_sum_subsets(sys))
                           subsets.push_back(subset);
                       return json{{"subsets", subsets}};
                   });
    add_matrix_cmd("check-ip-cover", "zero-sum subset cover criterion",
                   [](const finsum::LinearSystem& sys) {
                       auto cover = finsum::check_ip_cover(sys);
                       if (!cover) return json{{"cover", nullptr}};
                       return json{{"cover", finsum::io::cover_to_json(*cover)}};
                   });
    add_matrix_cmd("check-separation", "cover that also separates every index pair",
                   [](const finsum::LinearSystem& sys) {
                       auto cover = finsum::check_separation(sys);
                       if (!cover) return json{{"cover", nullptr}};
                       return json{{"cover", finsum::io::cover_to_json(*cover)}};
                   });
    add_matrix_cmd("check-columns", "Rado columns condition with certificate",
                   [](const finsum::LinearSystem& sys) {
                       auto blocks = finsum::check_columns_condition(sys);
                       if (!blocks) return json{{"blocks", nullptr}};
                       return finsum::io::blocks_to_json(*blocks);
                   });
    {
        auto* cmd = app.add_subcommand("cover2blocks", "turn a cover into a block ordering");
        auto matrix = std::make_shared<std::string>();
        auto cover = std::make_shared<std::string>();
        cmd->add_option("--matrix", *matrix, "rows as JSON")->required();
        cmd->add_option("--cover", *cover, "cover as JSON, e.g. '[[1,3],[2,3]]'")->required();
        cmd->callback([&state, matrix, cover] {
            state.action = [matrix, cover]() -> json {
                auto sys = finsum::io::system_from_json(load_json(*matrix));
                auto parsed = finsum::io::cover_from_json(load_json(*cover));
                return finsum::io::blocks_to_json(finsum::cover_to_blocks(sys, parsed));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("shift-invariant", "does the coefficient sum vanish");
        auto coeffs = std::make_shared<std::string>();
        cmd->add_option("--coeffs", *coeffs, "nonzero coefficients")->required();
        cmd->callback([&state, coeffs] {
            state.action = [coeffs]() -> json {
                auto parsed = parse_big_csv(*coeffs);
                bool invariant = finsum::is_shift_invariant(parsed);
                return json{{"shift_invariant", invariant}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("signature", "distinct-solution bound for an equation");
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        cmd->add_option("--left", *left, "left coefficients")->required();
        cmd->add_option("--right", *right, "right coefficients")->required();
        cmd->callback([&state, left, right] {
            state.action = [left, right]() -> json {
                auto eq =
                    finsum::ShiftInvariantEq::make(parse_big_csv(*left), parse_big_csv(*right));
                auto bound = finsum::signature_bound(eq);
                return json{{"bound", finsum::to_decimal(bound.bound)},
                            {"tightness", bound.tightness == finsum::BoundTightness::Iff3Var
                                              ? "iff-3var"
                                              : "sufficient-only"}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("basecase-threshold", "exact threshold for ax+by=(a+b)z");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("--a", *a)->required();
        cmd->add_option("--b", *b)->required();
        cmd->callback([&state, a, b] {
            state.action = [a, b]() -> json {
                BigInt threshold = finsum::basecase_threshold(finsum::parse_decimal(*a),
                                                              finsum::parse_decimal(*b));
                return json{{"threshold", finsum::to_decimal(threshold)}};
            };
        });
    }

    // ---- constructors ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("solve-from-cover", "explicit solution from a cover");
        auto matrix = std::make_shared<std::string>();
        auto cover = std::make_shared<std::string>();
        auto ys = std::make_shared<std::string>();
        cmd->add_option("--matrix", *matrix)->required();
        cmd->add_option("--cover", *cover)->required();
        cmd->add_option("--ys", *ys, "one positive y per subset")->required();
        cmd->callback([&state, matrix, cover, ys] {
            state.action = [matrix, cover, ys]() -> json {
                auto sys = finsum::io::system_from_json(load_json(*matrix));
                auto parsed = finsum::io::cover_from_json(load_json(*cover));
                return finsum::io::solution_to_json(
                    finsum::solution_from_cover(sys, parsed, parse_big_csv(*ys)));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("basecase-solve", "solution of ax+by=(a+b)z");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto y1 = std::make_shared<std::string>();
        auto y2 = std::make_shared<std::string>();
        auto shift = std::make_shared<std::string>("0");
        cmd->add_option("--a", *a)->required();
        cmd->add_option("--b", *b)->required();
        cmd->add_option("--y1", *y1)->required();
        cmd->add_option("--y2", *y2)->required();
        cmd->add_option("--shift", *shift, "add m to every entry (default 0)");
        cmd->callback([&state, a, b, y1, y2, shift] {
            state.action = [a, b, y1, y2, shift]() -> json {
                BigInt av = finsum::parse_decimal(*a);
                BigInt bv = finsum::parse_decimal(*b);
                auto sol = finsum::basecase_solution(av, bv, finsum::parse_decimal(*y1),
                                                     finsum::parse_decimal(*y2));
                BigInt m = finsum::parse_decimal(*shift);
                if (m != 0) {
                    std::vector<BigInt> coeffs{av, bv, -(av + bv)};
                    sol = finsum::shift_solution(sol, m, coeffs);
                }
                return finsum::io::solution_to_json(sol);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("epsilon-solve", "digit-family solution for an equation");
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto ys = std::make_shared<std::string>();
        cmd->add_option("--left", *left)->required();
        cmd->add_option("--right", *right)->required();
        cmd->add_option("--ys", *ys, "n-1 positive values")->required();
        cmd->callback([&state, left, right, ys] {
            state.action = [left, right, ys]() -> json {
                auto eq =
                    finsum::ShiftInvariantEq::make(parse_big_csv(*left), parse_big_csv(*right));
                auto em = finsum::epsilon_matrix(eq);
                auto sol = finsum::solution_from_epsilon(eq, em, parse_big_csv(*ys));
                return json{{"solution", finsum::io::solution_to_json(sol)},
                            {"epsilon_matrix", finsum::io::epsilon_matrix_to_json(em)}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("example19", "family solving 3x1+5x2+11x3=19x4");
        auto y1 = std::make_shared<std::string>();
        auto y2 = std::make_shared<std::string>();
        cmd->add_option("--y1", *y1)->required();
        cmd->add_option("--y2", *y2)->required();
        cmd->callback([&state, y1, y2] {
            state.action = [y1, y2]() -> json {
                auto sol = finsum::example19_solution(finsum::parse_decimal(*y1),
                                                      finsum::parse_decimal(*y2));
                json out = finsum::io::solution_to_json(sol);
                out["y1_digits"] = std::vector<int>{1, 7, 0, 2};
                out["y2_digits"] = std::vector<int>{1, 1, 1, 1};
                return out;
            };
        });
    }

    // ---- search ------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("find-mono", "first monochromatic target instance");
        auto ground = std::make_shared<std::string>();
        auto colors = std::make_shared<std::string>();
        auto r = std::make_shared<int>(2);
        auto target = std::make_shared<std::string>();
        cmd->add_option("--ground", *ground, "ground set JSON")->required();
        cmd->add_option("--colors", *colors, "color per element, comma separated")->required();
        cmd->add_option("--r", *r, "number of colors");
        cmd->add_option("--target", *target, "target JSON")->required();
        cmd->callback([&state, ground, colors, r, target] {
            state.action = [ground, colors, r, target]() -> json {
                auto g = finsum::io::ground_from_json(load_json(*ground));
                finsum::Coloring coloring{parse_int_csv(*colors), *r};
                auto witness =
                    finsum::find_mono(g, coloring, finsum::io::target_from_json(load_json(*target)));
                if (!witness) return json{{"witness", nullptr}};
                return json{{"witness", finsum::io::witness_to_json(*witness)}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("forall", "does every r-coloring contain the target");
        auto ground = std::make_shared<std::string>();
        auto r = std::make_shared<int>(2);
        auto target = std::make_shared<std::string>();
        cmd->add_option("--ground", *ground, "ground set JSON")->required();
        cmd->add_option("--r", *r, "number of colors")->required();
        cmd->add_option("--target", *target, "target JSON")->required();
        cmd->callback([&state, ground, r, target] {
            state.action = [&state, ground, r, target]() -> json {
                auto g = finsum::io::ground_from_json(load_json(*ground));
                auto verdict = finsum::forall_colorings(
                    g, *r, finsum::io::target_from_json(load_json(*target)), state.search);
                return finsum::io::verdict_to_json(verdict);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("vdw", "least n forcing a monochromatic k-progression");
        auto r = std::make_shared<int>(2);
        auto k = std::make_shared<int>(3);
        auto cap = std::make_shared<int>(1);
        cmd->add_option("-r,--r", *r, "colors")->required();
        cmd->add_option("-k,--k", *k, "progression length")->required();
        cmd->add_option("--cap", *cap, "largest n to try")->required();
        cmd->callback([&state, r, k, cap] {
            state.action = [&state, r, k, cap]() -> json {
                return finsum::io::number_result_to_json(
                    finsum::vdw_number(*r, *k, *cap, state.search), *cap);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("brauer", "progression plus s*d variant");
        auto r = std::make_shared<int>(2);
        auto k = std::make_shared<int>(2);
        auto s = std::make_shared<std::string>("1");
        auto cap = std::make_shared<int>(1);
        cmd->add_option("-r,--r", *r, "colors")->required();
        cmd->add_option("-k,--k", *k, "progression length")->required();
        cmd->add_option("-s,--s", *s, "multiplier for the extra element");
        cmd->add_option("--cap", *cap, "largest n to try")->required();
        cmd->callback([&state, r, k, s, cap] {
            state.action = [&state, r, k, s, cap]() -> json {
                return finsum::io::number_result_to_json(
                    finsum::brauer_number(*r, *k, finsum::parse_decimal(*s), *cap, state.search),
                    *cap);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("hj", "least cube dimension forcing a mono line");
        auto r = std::make_shared<int>(2);
        auto t = std::make_shared<int>(2);
        auto cap = std::make_shared<int>(1);
        cmd->add_option("-r,--r", *r, "colors")->required();
        cmd->add_option("-t,--t", *t, "alphabet size")->required();
        cmd->add_option("--cap", *cap, "largest n to try")->required();
        cmd->callback([&state, r, t, cap] {
            state.action = [&state, r, t, cap]() -> json {
                return finsum::io::number_result_to_json(
                    finsum::hj_number(*r, *t, *cap, state.search), *cap);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("shifted-fs", "monochromatic shifted truncation");
        auto args = std::make_shared<SpecArgs>();
        auto colors = std::make_shared<std::string>();
        auto r = std::make_shared<int>(2);
        auto t = std::make_shared<int>(1);
        add_spec_options(cmd, *args);
        cmd->add_option("--colors", *colors, "color per FS element, ascending order")->required();
        cmd->add_option("--r", *r, "number of colors");
        cmd->add_option("--t", *t, "generator count of the inner set")->required();
        cmd->callback([&state, args, colors, r, t] {
            state.action = [&state, args, colors, r, t]() -> json {
                auto spec = args->resolve();
                finsum::Coloring coloring{parse_int_csv(*colors), *r};
                auto witness = finsum::find_shifted_fs(spec, coloring, *t, state.limits);
                if (!witness) return json{{"witness", nullptr}};
                return json{{"witness",
                             json{{"m", finsum::to_decimal(witness->m)},
                                  {"ys", finsum::to_decimal_list(witness->ys)},
                                  {"elements", finsum::to_decimal_list(witness->elements)},
                                  {"color", witness->color}}}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("pseudo-neat", "distinct solutions in power-base sets");
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto k = std::make_shared<int>(2);
        auto t = std::make_shared<int>(1);
        cmd->add_option("--left", *left)->required();
        cmd->add_option("--right", *right)->required();
        cmd->add_option("--k", *k, "digit bound")->required();
        cmd->add_option("--t", *t, "generator count")->required();
        cmd->callback([&state, left, right, k, t] {
            state.action = [&state, left, right, k, t]() -> json {
                auto eq =
                    finsum::ShiftInvariantEq::make(parse_big_csv(*left), parse_big_csv(*right));
                auto result = finsum::check_pseudo_neat(eq, *k, *t, state.search);
                json out{{"B", finsum::to_decimal(result.base)}, {"explored", result.explored}};
                switch (result.status) {
                    case finsum::Verdict::Status::Holds: {
                        out["holds"] = true;
                        out["solution"] = finsum::to_decimal_list(*result.solution);
                        json digits = json::array();
                        for (const auto& drow : *result.digit_matrix)
                            digits.push_back(finsum::to_decimal_list(drow));
                        out["digits"] = std::move(digits);
                        break;
                    }
                    case finsum::Verdict::Status::Fails:
                        out["holds"] = false;
                        break;
                    case finsum::Verdict::Status::Inconclusive:
                        out["holds"] = nullptr;
                        out["inconclusive"] = "budget";
                        break;
                }
                return out;
            };
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_argv(std::move(args));
}
