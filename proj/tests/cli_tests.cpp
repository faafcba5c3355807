#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(FLAGBETTI_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

} // namespace

TEST_CASE("construct") {
    CHECK(trimmed(run("construct cycle 5").out) == "Dhc");
    const Run k = run("construct complete 3 --copies 2");
    CHECK(k.status == 0);
    CHECK(trimmed(k.out).size() > 0);
    CHECK(run("construct complete 65").status == 3);
    CHECK(run("construct no-such-family").status == 2);
}

TEST_CASE("betti") {
    const Run c5 = run("betti --g6 Dhc --setting clique");
    CHECK(c5.status == 0);
    CHECK(c5.out.find("total 1") != std::string::npos);

    const Run heawood = run("betti --g6 \"$(" FLAGBETTI_CLI " construct plane 2)\" --setting clique");
    CHECK(heawood.out.find("total 8") != std::string::npos);

    const auto j = nlohmann::json::parse(run("betti --g6 Dhc --field q --json").out);
    CHECK(j["field"] == "q");
    CHECK(j["graphs"][0]["total"] == 1);

    const Run corpus = run("betti --in " FLAGBETTI_TEST_DATA "/sample.g6");
    CHECK(corpus.status == 0);

    CHECK(run("betti --g6 '~~~'").status == 2);
    CHECK(run("betti --g6 Dhc --field gf4").status == 2);
}

TEST_CASE("roots") {
    const Run r = run("roots --tuple 3,3");
    CHECK(r.status == 0);
    CHECK(r.out.find("1.2599210499") != std::string::npos);
    const auto j = nlohmann::json::parse(run("roots --table theta --json").out);
    CHECK(j.dump().find("1.3195") != std::string::npos);
    CHECK(run("roots --tuple 0,3").status == 2);
}

TEST_CASE("certify") {
    const Run tc9 = run("certify --g6 \"$(" FLAGBETTI_CLI " construct tc 9)\"");
    CHECK(tc9.status == 0);
    CHECK(tc9.out.find("bound 7") != std::string::npos);
    CHECK(tc9.out.find("replay ok") != std::string::npos);

    const auto j = nlohmann::json::parse(run("certify --g6 Dhc --base 4 --json").out);
    CHECK(j["bound"] == 1);
    CHECK(j["nodes"].size() >= 1);
}

TEST_CASE("search") {
    const auto j = nlohmann::json::parse(run("search --forbid K3 --n 5 --json").out);
    CHECK(j["monotone"] == true);
    CHECK(j["levels"][5]["exact_max"] == 4);
    CHECK(j["levels"][5]["witnesses"][0] == "D??");

    const Run all = run("search --forbid none --n 5 --all-fields --json");
    CHECK(nlohmann::json::parse(all.out)["fields_agree"] == true);

    CHECK(run("search --forbid none --n 10").status == 3);
    CHECK(run("search --forbid Z9 --n 4").status == 2);
    CHECK(run("search --n 4 --bogus").status == 2);
    const Run corpus = run("search --forbid C4 --n 5 --from-file " FLAGBETTI_TEST_DATA "/sample.g6 --json");
    CHECK(corpus.status == 0);
    const auto c = nlohmann::json::parse(corpus.out);
    CHECK(c["from_file"] == true);
    CHECK(c["levels"][0]["n"] == 4);
    CHECK(c["levels"][0]["graphs_pruned"] == 1);
}

TEST_CASE("verify-paper") {
    const Run ok = run("verify-paper --scope graphs");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const auto j = nlohmann::json::parse(run("verify-paper --scope search --json").out);
    CHECK(j["passed"] == true);
    for (const auto& c : j["claims"]) {
        CHECK(c.contains("anchor"));
        CHECK(c.contains("origin"));
        CHECK(c["status"] == "PASS");
    }
}
