#include <set>

#include "doctest.h"
#include "flagbetti/bounds.hpp"
#include "flagbetti/constructions.hpp"
#include "flagbetti/verify.hpp"
#include "json.hpp"

using namespace flagbetti;

namespace {

VerifyReport run_scope(const std::string& scope) {
    VerifyOptions o;
    o.scope = scope;
    return run_verify_paper(o);
}

void check_all_pass(const VerifyReport& r) {
    CHECK_FALSE(r.claims.empty());
    for (const auto& c : r.claims) {
        INFO(c.id << ": computed " << c.computed << ", expected " << c.expected);
        CHECK(c.passed);
    }
}

} // namespace

TEST_CASE("catalogue scopes") {
    for (const char* scope : {"graphs", "search", "properties", "certifier", "bounds"}) {
        INFO(scope);
        const VerifyReport r = run_scope(scope);
        check_all_pass(r);
        CHECK(r.all_passed());
        std::set<std::string> ids;
        for (const auto& c : r.claims) {
            CHECK(c.id.rfind(scope, 0) == 0);
            CHECK(c.group >= 1);
            CHECK(c.group <= 8);
            CHECK_FALSE(c.anchor.empty());
            ids.insert(c.id);
        }
        CHECK(ids.size() == r.claims.size());
        CHECK(std::is_sorted(r.claims.begin(), r.claims.end(),
                             [](const ClaimRecord& a, const ClaimRecord& b) { return a.id < b.id; }));
    }
}

TEST_CASE("table claims") {
    const VerifyReport r = run_scope("tables");
    int checked = 0;
    for (const auto& c : r.claims) {
        INFO(c.id << ": computed " << c.computed << ", expected " << c.expected);
        if (c.id == "tables.gamma.d4") {
            // The printed 1.2434 sits 5.3e-5 above the root, outside the table
            // tolerance; the acceptance run reports this claim as failing.
            CHECK(solve_root({gamma_tuple(4)}).value == doctest::Approx(1.2433474577677095).epsilon(1e-12));
            CHECK_FALSE(c.passed);
            continue;
        }
        CHECK(c.passed);
        if (c.mode == ClaimRecord::Mode::RealTolerance) CHECK(c.tolerance == kTableTolerance);
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("scope filtering") {
    const VerifyReport theta = run_scope("tables.theta");
    CHECK(theta.claims.size() == 5);
    CHECK(run_scope("no-such-claim").claims.empty());
    const VerifyReport one = run_scope("graphs.betti.K5.gf2");
    REQUIRE(one.claims.size() == 1);
    CHECK(one.claims[0].computed == "4");
    CHECK(one.claims[0].origin == Origin::Paper);
}

TEST_CASE("report rendering") {
    const VerifyReport r = run_scope("graphs.turan");
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["schema"] == 1);
    CHECK(j["scope"] == "graphs.turan");
    CHECK(j["passed"] == true);
    REQUIRE(j["claims"].size() == r.claims.size());
    for (const auto& c : j["claims"]) {
        for (const char* key : {"id", "group", "anchor", "computed", "expected", "origin", "mode", "status"})
            CHECK(c.contains(key));
        CHECK(c["status"] == "PASS");
    }
    const std::string table = report_table(r);
    CHECK(table.find("PASS  graphs.turan") != std::string::npos);
    CHECK(table.find(std::to_string(r.claims.size()) + "/" + std::to_string(r.claims.size()) + " claims passed") !=
          std::string::npos);
}

TEST_CASE("certificate rendering") {
    const BoundCertificate cert = certify(construct(family::TriangularCycle{9}));
    const auto j = nlohmann::json::parse(certificate_json(cert));
    CHECK(j["bound"] == cert.bound());
    CHECK(j["nodes"].size() == cert.nodes.size());
    CHECK(j["nodes"][cert.root]["bound"] == cert.bound());
}
