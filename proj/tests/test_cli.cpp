#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cli_support.hpp"

namespace {

using nlohmann::json;

std::string temp_sequence_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

}  // namespace

TEST_CASE("cli binary path is configured") {
    REQUIRE_MESSAGE(!g_cli_path.empty(),
                    "pass --cli=<path> to the test runner (or set FNOM_CLI)");
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("fnomial --help").exit_code == 0);
}

TEST_CASE("single coefficients print as bare decimals") {
    CHECK(run_cli("fnomial --seq fibonacci 5 2").out == "15\n");
    CHECK(run_cli("fnomial --seq natural 4 2").out == "6\n");
    CHECK(run_cli("multinomial --seq natural 4 2 1 1").out == "12\n");
    CHECK(run_cli("multinomial --seq fibonacci 3 1 1 1").out == "2\n");

    const auto as_json = run_cli("fnomial --seq fibonacci 5 2 --format json");
    CHECK(as_json.exit_code == 0);
    const json parsed = json::parse(as_json.out);
    CHECK(parsed["sequence"] == "fibonacci");
    CHECK(parsed["n"] == 5);
    CHECK(parsed["k"] == 2);
    CHECK(parsed["value"] == "15");

    const json multi =
        json::parse(run_cli("multinomial --seq natural 4 2 1 1 --format json").out);
    CHECK(multi["parts"] == json::array({2, 1, 1}));
    CHECK(multi["value"] == "12");
}

TEST_CASE("non-admissible sequences stop with exit code 3") {
    const auto path = temp_sequence_file("fnom_cli_bad.txt", "0\n2\n3\n");
    const auto result = run_cli("fnomial --seq file:" + path + " 2 1");
    CHECK(result.exit_code == 3);
    CHECK(result.out.empty());
}

TEST_CASE("inverse matrices render in all three formats") {
    const auto both = run_cli("invert --seq natural -N 4 --method both");
    CHECK(both.exit_code == 0);
    CHECK(both.out ==
          "1\n-1 1\n1 -2 1\n-1 3 -3 1\n1 -4 6 -4 1\ndirect and oracle agree\n");

    CHECK(run_cli("invert --seq natural -N 0").out == "1\n");
    CHECK(run_cli("invert --seq natural -N 2 --format csv").out == "1,,\n-1,1,\n1,-2,1\n");

    const auto as_json = run_cli("invert --seq fibonacci -N 8 --format json");
    CHECK(as_json.exit_code == 0);
    const json parsed = json::parse(as_json.out);
    CHECK(parsed["sequence"] == "fibonacci");
    CHECK(parsed["order"] == 9);
    CHECK(parsed["method"] == "oracle");
    CHECK(parsed["rows"].size() == 9);
    CHECK(parsed["rows"][8] ==
          json::array({"-6056", "3801", "9555", "-6552", "-1820", "1092", "0", "-21", "1"}));

    const json agreed =
        json::parse(run_cli("invert --seq fibonacci -N 6 --method both --format json").out);
    CHECK(agreed["method"] == "both");
    CHECK(agreed["agree"] == true);

    CHECK(run_cli("invert --seq natural -N 3 --method both --format csv").exit_code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::string command = "invert --seq fibonacci -N 8 --format json";
    const auto first = run_cli(command);
    const auto second = run_cli(command);
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK_FALSE(first.out.empty());
    CHECK(first.out == second.out);
}

TEST_CASE("basis polynomials render descending and as coefficient arrays") {
    CHECK(run_cli("phi --seq fibonacci 6").out == "x^6 - 8x^5 + 60x^3 - 40x^2 - 48x + 35\n");
    CHECK(run_cli("phi --seq fibonacci 0").out == "1\n");
    CHECK(run_cli("phi --seq gaussian:2 2").out == "x^2 - 3x + 2\n");
    CHECK(run_cli("phi --seq fibonacci 4 --method direct").out ==
          run_cli("phi --seq fibonacci 4 --method oracle").out);
    const json coeffs = json::parse(run_cli("phi --seq fibonacci 8 --format json").out);
    CHECK(coeffs == json::array({"-6056", "3801", "9555", "-6552", "-1820", "1092", "0",
                                 "-21", "1"}));
}

TEST_CASE("verification command reports per-check lines and exit codes") {
    const auto good = run_cli("check --seq fibonacci -N 8");
    CHECK(good.exit_code == 0);
    CHECK(good.out ==
          "admissible: pass\ndelta: pass\nroundtrip: pass\nrecurrence: pass\n");

    const json parsed = json::parse(run_cli("check --seq gaussian:2 -N 6 --format json").out);
    CHECK(parsed["passed"] == true);
    CHECK(parsed["checks"].size() == 4);
    CHECK(parsed["checks"][3]["name"] == "recurrence");
    CHECK(parsed["checks"][3]["status"] == "skipped");

    const auto path = temp_sequence_file("fnom_cli_check_bad.txt", "0\n2\n3\n");
    const auto bad = run_cli("check --seq file:" + path + " -N 2");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("admissible: FAIL") != std::string::npos);
    CHECK(bad.out.find("delta: skipped") != std::string::npos);

    CHECK(run_cli("check --seq gaussian:2 -N 5 --what recurrence").exit_code == 2);
    CHECK(run_cli("check --seq fibonacci -N 6 --what delta").out == "delta: pass\n");
}

TEST_CASE("weight decomposition command") {
    const auto text = run_cli("lambda --seq fibonacci 2 3 4 --recurrence");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("parts: 2 3 4\n") != std::string::npos);
    CHECK(text.out.find("lambdas: 8 4 6\n") != std::string::npos);
    CHECK(text.out.find("identity: pass\n") != std::string::npos);
    CHECK(text.out.find("recurrence: pass") != std::string::npos);

    const json parsed = json::parse(run_cli("lambda --seq fibonacci 2 3 4 --format json").out);
    CHECK(parsed["parts"] == json::array({2, 3, 4}));
    CHECK(parsed["lambdas"] == json::array({"8", "4", "6"}));
    CHECK(parsed["identity"] == true);
    CHECK_FALSE(parsed.contains("recurrence"));

    CHECK(run_cli("lambda --seq gaussian:2 1 2").exit_code == 2);
}

TEST_CASE("bench prints a table and a trailing machine-readable line") {
    const auto result = run_cli("bench --seq fibonacci -N 1,4");
    CHECK(result.exit_code == 0);
    CHECK(result.out.rfind("sequence: fibonacci\n", 0) == 0);
    // The machine-readable line is the only line that starts with '{'.
    const auto json_start = result.out.find("\n{");
    REQUIRE(json_start != std::string::npos);
    const json parsed = json::parse(result.out.substr(json_start + 1));
    CHECK(parsed["sequence"] == "fibonacci");
    CHECK(parsed["runs"].size() == 2);
    CHECK(parsed["runs"][0]["N"] == 1);
    CHECK(parsed["runs"][0]["compositions"] == "1");
    CHECK(parsed["runs"][1]["compositions"] == "8");
    CHECK(parsed["runs"][1]["entries"] == 10);
}

TEST_CASE("configuration errors exit with code 2 before any computation") {
    CHECK(run_cli("fnomial --seq martian 3 1").exit_code == 2);
    CHECK(run_cli("fnomial --seq gaussian:x 3 1").exit_code == 2);
    CHECK(run_cli("fnomial --seq gaussian:1 3 1").exit_code == 2);
    CHECK(run_cli("fnomial --seq fibonacci").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("phi --seq fibonacci 3 --format csv").exit_code == 2);
    CHECK(run_cli("invert --seq fibonacci -N 4 --method sideways").exit_code == 2);

    const auto path = temp_sequence_file("fnom_cli_short.txt", "0\n1\n3\n12\n");
    const auto result = run_cli("invert --seq file:" + path + " -N 5");
    CHECK(result.exit_code == 2);
    CHECK(result.out.empty());
    CHECK(run_cli("invert --seq file:" + path + " -N 3").exit_code == 0);
    CHECK(run_cli("fnomial --seq file:no_such_sequence_file.txt 3 1").exit_code == 2);
}
