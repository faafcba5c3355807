#include <cstdio>

#include "flagbetti/verify.hpp"
#include "json.hpp"

namespace flagbetti {

using nlohmann::ordered_json;

std::string report_json(const VerifyReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["scope"] = r.scope;
    j["passed"] = r.all_passed();
    j["claims"] = ordered_json::array();
    for (const auto& c : r.claims) {
        ordered_json x;
        x["id"] = c.id;
        x["group"] = c.group;
        x["anchor"] = c.anchor;
        x["computed"] = c.computed;
        x["expected"] = c.expected;
        x["origin"] = origin_name(c.origin);
        x["mode"] = c.mode == ClaimRecord::Mode::Exact ? "exact" : "real-tolerance";
        if (c.mode == ClaimRecord::Mode::RealTolerance) x["tolerance"] = c.tolerance;
        x["status"] = c.passed ? "PASS" : "FAIL";
        j["claims"].push_back(std::move(x));
    }
    return j.dump(2);
}

std::string report_table(const VerifyReport& r) {
    std::size_t width = 8;
    for (const auto& c : r.claims) width = std::max(width, c.id.size());
    std::string out;
    std::size_t passed = 0;
    for (const auto& c : r.claims) {
        std::string line = c.passed ? "PASS  " : "FAIL  ";
        line += c.id + std::string(width - c.id.size() + 2, ' ');
        line += c.computed + "  [expected " + c.expected + ", " + origin_name(c.origin) + "]\n";
        out += line;
        passed += c.passed ? 1 : 0;
    }
    out += std::to_string(passed) + "/" + std::to_string(r.claims.size()) + " claims passed\n";
    return out;
}

std::string search_json(const SearchReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["pattern"] = r.pattern;
    j["setting"] = setting_name(r.setting);
    j["field"] = r.field.name();
    j["from_file"] = r.from_file;
    const auto mono = check_monotonicity(r);
    j["monotone"] = mono.ok;
    if (!mono.ok) j["monotonicity_violation"] = mono.detail;
    bool any_fields = false;
    for (const auto& l : r.levels) any_fields = any_fields || !l.field_maxima.empty();
    if (any_fields) j["fields_agree"] = r.fields_agree();
    j["levels"] = ordered_json::array();
    for (const auto& l : r.levels) {
        ordered_json x;
        x["n"] = l.n;
        x["exact_max"] = l.exact_max ? ordered_json(*l.exact_max) : ordered_json(nullptr);
        x["cumulative_max"] = l.cumulative_max ? ordered_json(*l.cumulative_max) : ordered_json(nullptr);
        x["witnesses"] = l.witnesses;
        x["graphs_enumerated"] = l.graphs_enumerated;
        x["graphs_pruned"] = l.graphs_pruned;
        if (!l.field_maxima.empty()) x["field_maxima"] = l.field_maxima;
        j["levels"].push_back(std::move(x));
    }
    return j.dump(2);
}

std::string certificate_json(const BoundCertificate& c) {
    ordered_json j;
    j["schema"] = 1;
    j["graph"] = emit_graph6(c.graph);
    j["base_size"] = c.base_size;
    j["bound"] = c.bound();
    j["root"] = c.root;
    j["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const CertNode& n = c.nodes[i];
        ordered_json x;
        x["id"] = i;
        x["kind"] = kind_name(n.kind);
        x["vertices"] = n.vertices.to_vector();
        x["bound"] = n.bound;
        if (n.kind == CertNode::Kind::Leaf) x["leaf_reason"] = n.leaf_reason;
        if (n.pivot >= 0) x["pivot"] = n.pivot;
        if (!n.order.empty()) x["order"] = n.order;
        if (!n.removed_sizes.empty()) x["removed_sizes"] = n.removed_sizes;
        x["children"] = n.children;
        j["nodes"].push_back(std::move(x));
    }
    return j.dump(2);
}

} // namespace flagbetti
