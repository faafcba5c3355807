#pragma once

// The regression catalogue: every desk-scale claim as a pass/fail record,
// plus the JSON renderings shared by the command-line tool.

#include <string>
#include <vector>

#include "flagbetti/certifier.hpp"
#include "flagbetti/search.hpp"

namespace flagbetti {

enum class Origin { Paper, Derived, Trivial };
std::string origin_name(Origin o);

struct ClaimRecord {
    enum class Mode { Exact, RealTolerance };

    std::string id;
    /// Acceptance group 1..8.
    int group = 0;
    std::string anchor;
    std::string computed;
    std::string expected;
    Origin origin = Origin::Paper;
    Mode mode = Mode::Exact;
    double tolerance = 0.0;
    bool passed = false;
};

inline constexpr double kTableTolerance = 5e-5;

struct VerifyOptions {
    /// "all", a scope name (tables, graphs, bounds, search, properties,
    /// certifier) or any claim-id prefix. A filter matching nothing gives an
    /// empty report.
    std::string scope = "all";
    unsigned workers = 0;
    /// Seeded cases per randomized property.
    int property_cases = 1000;
    /// Random graphs for the certifier soundness sweep.
    int certifier_random_cases = 10000;
    unsigned long long seed = 20261016;
};

struct VerifyReport {
    std::string scope;
    std::vector<ClaimRecord> claims;  // ordered by id
    bool all_passed() const;
};

/// Claim failures are recorded, not thrown.
VerifyReport run_verify_paper(const VerifyOptions& opts = {});

std::vector<std::string> verify_scopes();

std::string report_json(const VerifyReport& r);
std::string report_table(const VerifyReport& r);
std::string search_json(const SearchReport& r);
std::string certificate_json(const BoundCertificate& c);

} // namespace flagbetti
