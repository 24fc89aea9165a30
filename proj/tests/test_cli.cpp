#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

using ordered_json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CTRACE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, k);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string strip_timing_text(const std::string& text) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        if (line.rfind("time:", 0) != 0) out += line + "\n";
        pos = eol + 1;
    }
    return out;
}

ordered_json parse_without_timing(const std::string& text) {
    ordered_json doc = ordered_json::parse(text);
    doc.erase("timing_ms");
    return doc;
}

std::string temp_matrix_file(const std::string& contents) {
    std::string path = "/tmp/ctrace_cli_test_matrix.txt";
    std::ofstream out(path);
    out << contents;
    return path;
}

}  // namespace

TEST_CASE("identical invocations are byte-identical modulo timing") {
    for (const char* args : {"tree 1-2,2-3,3-4,3-5 --alias --json", "semigroup 3 4 5 --json",
                             "trace-generic 2 3 1 --mu --json", "verify lasagna 2 3 1 --json"}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        REQUIRE(a.exit_code == 0);
        REQUIRE(b.exit_code == 0);
        CHECK(parse_without_timing(a.output) == parse_without_timing(b.output));
    }
    RunResult a = run_cli("tree 1-2,2-3 --alias");
    RunResult b = run_cli("tree 1-2,2-3 --alias");
    CHECK(strip_timing_text(a.output) == strip_timing_text(b.output));
}

TEST_CASE("validation failures exit with code 2") {
    CHECK(run_cli("trace-generic 2 4 2").exit_code == 2);  // r > m-1
    CHECK(run_cli("teter 3 3 2").exit_code == 2);          // m = n
    CHECK(run_cli("semigroup 2 4 5").exit_code == 2);      // non-minimal
    CHECK(run_cli("tree 1-2,3-4").exit_code == 2);         // not a tree
    CHECK(run_cli("verify pq 9").exit_code == 2);          // missing arguments
    CHECK(run_cli("no-such-command").exit_code == 2);

    std::string square = temp_matrix_file("x; y\ny; z\n");
    CHECK(run_cli("hb " + square).exit_code == 2);
    CHECK(run_cli("hb /no/such/file.txt").exit_code == 2);
}

TEST_CASE("resource exhaustion exits with code 3") {
    std::string saved_cmd = "env CTRACE_MAX_TERMS=4 " + std::string(CTRACE_CLI_PATH) +
                            " verify pq 3 4 2 2>&1";
    FILE* pipe = popen(saved_cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("json documents carry the schema and the expected keys") {
    ordered_json tree = ordered_json::parse(run_cli("tree 1-2,2-3 --json").output);
    CHECK(tree["schema"] == 1);
    for (const char* key : {"command", "inputs", "matrix", "ideal", "trace_minors",
                            "trace_divided", "trace_localized", "verified",
                            "localizations_cover_trace", "counts", "assumptions", "timing_ms"})
        CHECK(tree.contains(key));
    CHECK(tree["verified"] == true);

    ordered_json teter = ordered_json::parse(run_cli("teter 2 4 1 --verify --json").output);
    CHECK(teter["formula"] == "10");
    CHECK(teter["oracle"] == "10");
    CHECK(teter["agree"] == true);

    ordered_json tg = ordered_json::parse(run_cli("trace-generic 2 4 1 --mu --json").output);
    CHECK(tg["count"] == 36);
    CHECK(tg["mu"] == 30);
    CHECK(tg["gorenstein"] == false);

    ordered_json sg = ordered_json::parse(run_cli("semigroup 4 5 6 --json").output);
    CHECK(sg["symmetric"] == true);
    CHECK(sg["complete_intersection"] == true);
    CHECK(sg["trace"] == std::vector<std::string>{"1"});
}

TEST_CASE("hb modes") {
    std::string path = temp_matrix_file("w: x=3 y=4 z=5\nx; y; z\ny; z; x^2\n");
    ordered_json check = ordered_json::parse(run_cli("hb " + path + " --json").output);
    CHECK(check["n"] == 3);
    CHECK(check["violations"].empty());

    ordered_json ideal = ordered_json::parse(run_cli("hb " + path + " --ideal --json").output);
    CHECK(ideal["count"] == 3);

    ordered_json trace = ordered_json::parse(run_cli("hb " + path + " --trace --assert-gg --json").output);
    CHECK(trace["count"] == 4);  // entries x, y, z and x^2 before pruning, as polynomials
    bool found = false;
    for (const auto& a : trace["assumptions"])
        if (a.get<std::string>().find("asserted by user") != std::string::npos) found = true;
    CHECK(found);

    CHECK(run_cli("hb " + path + " --trace --ideal").exit_code == 2);
}

TEST_CASE("transposed generic input is reported") {
    ordered_json doc = ordered_json::parse(run_cli("trace-generic 4 3 2 --json").output);
    CHECK(doc["transposed"] == true);
    ordered_json doc2 = ordered_json::parse(run_cli("trace-generic 3 4 2 --json").output);
    CHECK(doc2["transposed"] == false);
    CHECK(doc["count"] == doc2["count"]);
}
