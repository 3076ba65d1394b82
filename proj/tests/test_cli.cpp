#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(FINSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(FINSUM_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("CLI golden outputs are byte stable") {
    const std::pair<const char*, const char*> cases[] = {
        {"check-ip-cover --matrix [[1,1,-1]]", "check_ip_cover_schur.golden"},
        {"check-ip-cover --matrix [[2,-1]]", "check_ip_cover_none.golden"},
        {"vdw -r 2 -k 3 --cap 12", "vdw_2_3.golden"},
        {"signature --left 1,1 --right 2", "signature_schur_ap.golden"},
        {"fs-enum --gens 1,5 --k 3", "fs_enum_1_5.golden"},
        {"fs-sparse --k 3 --n 4", "fs_sparse_3_4.golden"},
        {"ipbar-enum --gens 1,2,4 --n 3", "ipbar_1_2_4.golden"},
        {"sum2word --gens 1,5 --k 3 --sum 11", "sum2word_11.golden"},
        {"sum2word --signed --value -170 --base 10 --length 2 --bound 4", "signed_170.golden"},
        {"line2ap --gens 1,5 --k 3 --word *,0", "line2ap_star0.golden"},
        {"ap2line --gens 1,5 --k 3 --a 1 --d 5 --len 3", "ap2line_1_5.golden"},
        {"max-ap --values 1,2,3,5", "max_ap_1235.golden"},
        {"zero-sum-subsets --matrix [[1,1,-1]]", "zero_sum_schur.golden"},
        {"check-separation --matrix [[1,-1]]", "separation_none.golden"},
        {"check-columns --matrix [[1,1,-1]]", "columns_schur.golden"},
        {"cover2blocks --matrix [[1,1,-1]] --cover [[1,3],[2,3]]", "cover2blocks_schur.golden"},
        {"shift-invariant --coeffs 3,5,11,-19", "shift_invariant_19.golden"},
        {"basecase-threshold --a 2 --b 3", "threshold_2_3.golden"},
        {"solve-from-cover --matrix [[1,1,-1]] --cover [[1,3],[2,3]] --ys 1,5",
         "solve_cover_schur.golden"},
        {"basecase-solve --a 1 --b 1 --y1 1 --y2 1", "basecase_1_1.golden"},
        {"basecase-solve --a 1 --b 1 --y1 1 --y2 1 --shift 10", "basecase_shifted.golden"},
        {"epsilon-solve --left 1,1 --right 2 --ys 1,5", "epsilon_schur_ap.golden"},
        {"example19 --y1 1 --y2 1", "example19.golden"},
        {"word2sum --gens 1,5 --k 3 --word 1,2", "word2sum_11.golden"},
        {"hj -r 2 -t 2 --cap 4", "hj_2_2.golden"},
        {"brauer -r 1 -k 2 -s 1 --cap 5", "brauer_1_2_1.golden"},
        {"pseudo-neat --left 1,1 --right 2 --k 2 --t 2", "pseudo_neat_k2.golden"},
        {"forall --ground '{\"interval\":[1,9]}' --r 2 --target '{\"kind\":\"ap\",\"len\":3}'",
         "forall_vdw9.golden"},
        {"find-mono --ground '{\"interval\":[1,9]}' --colors 0,1,0,1,0,1,0,1,0 --r 2 "
         "--target '{\"kind\":\"ap\",\"len\":3}'",
         "find_mono_ap.golden"},
        {"shifted-fs --gens 1,5 --k 3 --colors 0,0,0,0,0,0,0,0 --r 1 --t 1",
         "shifted_fs_mono.golden"},
    };
    for (const auto& [args, file] : cases) {
        CAPTURE(args);
        auto result = run_cli(args);
        CHECK(result.exit_code == 0);
        CHECK(result.out == golden(file));
    }
}

TEST_CASE("CLI exit codes") {
    CHECK(run_cli("no-such-subcommand").exit_code == 64);
    CHECK(run_cli("check-ip-cover --matrix not-json").exit_code == 65);
    CHECK(run_cli("basecase-threshold --a 2 --b 4").exit_code == 65);  // gcd 2
    CHECK(run_cli("sum2word --gens 1,5 --k 3 --sum 4").exit_code == 65);  // not a member
    // "none" answers still exit 0
    CHECK(run_cli("check-ip-cover --matrix [[2,-1]]").exit_code == 0);
}

TEST_CASE("CLI budget exhaustion stays inside the JSON result") {
    auto result = run_cli(
        "--budget 10 forall --ground '{\"interval\":[1,12]}' --r 2 "
        "--target '{\"kind\":\"ap\",\"len\":3}'");
    CHECK(result.exit_code == 0);
    json parsed = json::parse(result.out);
    CHECK(parsed.at("holds").is_null());
    CHECK(parsed.at("inconclusive") == "budget");
}

TEST_CASE("CLI batch mode emits one JSON document per line") {
    std::string path = "/tmp/finsum_batch_test.ndjson";
    {
        std::ofstream out(path);
        out << R"({"cmd": "basecase-threshold", "args": {"a": 2, "b": 3}})" << "\n";
        out << R"({"cmd": "check-ip-cover", "args": {"matrix": [[1,1,-1]]}})" << "\n";
        out << R"({"cmd": "nope"})" << "\n";
    }
    auto result = run_cli("--batch " + path);
    CHECK(result.exit_code == 0);
    std::stringstream lines(result.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(json::parse(line).at("threshold") == "5");
    REQUIRE(std::getline(lines, line));
    CHECK(json::parse(line).at("cover").dump() == "[[1,3],[2,3]]");
    std::remove(path.c_str());
}

TEST_CASE("environment overrides feed the search budget") {
    std::string cmd = std::string("RAMSEY_BUDGET=10 RAMSEY_SEED=99 ") + FINSUM_CLI_PATH +
                      " forall --ground '{\"interval\":[1,12]}' --r 2 "
                      "--target '{\"kind\":\"ap\",\"len\":3}' 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::string out;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
    pclose(pipe);
    json parsed = json::parse(out);
    CHECK(parsed.at("budget") == 10);
    CHECK(parsed.at("seed") == 99);
    CHECK(parsed.at("inconclusive") == "budget");
}

TEST_CASE("every library operation is reachable from exactly one subcommand") {
    const std::set<std::string> all_ops = {
        // fs-core
        "fs_enumerate", "has_distinct_sums", "sparse_generators", "ip_bar_enumerate",
        "word_to_sum", "sum_to_word", "signed_digit_decompose", "line_to_ap", "ap_to_line",
        "max_ap_length",
        // criteria
        "zero_sum_subsets", "check_ip_cover", "check_separation", "check_columns_condition",
        "cover_to_blocks", "is_shift_invariant", "signature_bound", "basecase_threshold",
        // constructors
        "solution_from_cover", "basecase_solution", "epsilon_matrix", "solution_from_epsilon",
        "example19_solution", "shift_solution",
        // search
        "find_mono", "forall_colorings", "vdw_number", "brauer_number", "hj_number",
        "find_shifted_fs", "check_pseudo_neat"};

    auto result = run_cli("--list-ops");
    REQUIRE(result.exit_code == 0);
    json table = json::parse(result.out);
    CHECK(table.size() == 27);  // the full subcommand list

    std::set<std::string> covered;
    std::set<std::string> primaries;
    for (const auto& [cmd, entry] : table.items()) {
        std::string primary = entry.at("primary").get<std::string>();
        CHECK(primaries.insert(primary).second);  // primary op unique per subcommand
        for (const auto& op : entry.at("ops")) {
            CHECK(covered.insert(op.get<std::string>()).second);  // exactly one subcommand
        }
    }
    CHECK(covered == all_ops);
}
