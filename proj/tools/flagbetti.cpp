// flagbetti: command-line front end.
//
//   construct <family> [params...] [--copies m]
//   betti     (--in file | --g6 word) [--field gf2] [--setting independence] [--json [path]]
//   roots     (--tuple 5,6,7,7 | --table theta|gamma|appendix) [--json [path]]
//   certify   (--in file | --g6 word) [--base 6] [--strategy default|try-all-orders] [--json [path]]
//   search    --forbid K3 --n 8 [--field gf2] [--setting clique] [--all-fields] [--from-file f] [--json [path]]
//   verify-paper [--scope all] [--json [path]]
//
// Exit codes: 0 success, 1 failed claim or computation error, 2 usage error,
// 3 resource guard.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flagbetti/bounds.hpp"
#include "flagbetti/certifier.hpp"
#include "flagbetti/constructions.hpp"
#include "flagbetti/error.hpp"
#include "flagbetti/homology.hpp"
#include "flagbetti/search.hpp"
#include "flagbetti/verify.hpp"
#include "json.hpp"

using namespace flagbetti;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct JsonTarget {
    CLI::Option* option = nullptr;
    std::string path;

    bool wanted() const { return option && option->count() > 0; }
    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text << "\n";
            return;
        }
        std::ofstream out(path);
        if (!out) throw Error("cannot write " + path);
        out << text << "\n";
    }
};

void add_json(CLI::App* app, JsonTarget& t) {
    t.option = app->add_option("--json", t.path, "Write a JSON report (stdout when no path is given)")
                   ->expected(0, 1);
}

int to_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw ArgumentError(what + ": expected an integer, got '" + s + "'");
    return v;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_int(item, "part list"));
    return out;
}

Graph build_family(const std::string& family, const std::vector<std::string>& params, int copies_count) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw ArgumentError(family + " takes " + std::to_string(k) + " parameter(s), got " +
                                std::to_string(params.size()));
    };
    auto p = [&](std::size_t i) { return to_int(params[i], family); };
    if (family == "plane" || family == "projective-plane") {
        need(1);
        if (copies_count != 1) throw ArgumentError("--copies is not supported for plane");
        return projective_plane_incidence(p(0));
    }
    FamilySpec spec = family::Icosahedron{};
    if (family == "multipartite") {
        need(1);
        spec = family::CompleteMultipartite{int_list(params[0])};
    } else if (family == "independent") {
        need(1);
        spec = family::Independent{p(0)};
    } else if (family == "complete") {
        need(1);
        spec = family::Complete{p(0)};
    } else if (family == "cycle") {
        need(1);
        spec = family::Cycle{p(0)};
    } else if (family == "path") {
        need(1);
        spec = family::Path{p(0)};
    } else if (family == "turan") {
        need(2);
        spec = family::Turan{p(0), p(1)};
    } else if (family == "tp") {
        need(1);
        spec = family::TriangularPath{p(0)};
    } else if (family == "tc") {
        need(1);
        spec = family::TriangularCycle{p(0)};
    } else if (family == "icosahedron") {
        need(0);
    } else if (family == "c5-star-i3") {
        need(0);
        spec = family::C5StarI3{};
    } else if (family == "wheel5") {
        need(0);
        spec = family::Wheel5{};
    } else {
        throw ArgumentError("unknown family '" + family +
                            "' (multipartite, independent, complete, cycle, path, turan, tp, tc, icosahedron, "
                            "c5-star-i3, wheel5, plane)");
    }
    if (copies_count != 1) spec = copies(std::move(spec), copies_count);
    return construct(spec);
}

std::vector<Graph> load_graphs(const std::string& file, const std::string& word) {
    if (!file.empty() && !word.empty()) throw ArgumentError("give either --in or --g6, not both");
    if (!word.empty()) return {parse_graph6(word)};
    if (file.empty()) throw ArgumentError("an input graph is required (--in or --g6)");
    return read_graph6_file(file);
}

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

int run_roots(const std::string& tuple, const std::string& table, int digits, const JsonTarget& json) {
    if (tuple.empty() == table.empty()) throw ArgumentError("give exactly one of --tuple or --table");
    ordered_json rows = ordered_json::array();
    std::vector<std::string> lines;
    auto emit = [&](const std::string& label, const std::vector<int>& exps, double value) {
        ordered_json r;
        r["label"] = label;
        r["tuple"] = exps;
        r["value"] = value;
        rows.push_back(r);
        lines.push_back(label + "  " + format_tuple(exps) + "  " + fixed(value, digits));
    };
    if (!tuple.empty()) {
        const RootQuery q = parse_tuple(tuple);
        const RootResult r = solve_root(q);
        emit("r", q.exponents, r.value);
    } else if (table == "theta") {
        for (int d = 1; d <= 5; ++d) emit("Theta_" + std::to_string(d), theta_tuple(d), theta(d));
    } else if (table == "gamma") {
        for (int d = 1; d <= 5; ++d) emit("Gamma_" + std::to_string(d), gamma_tuple(d), gamma(d));
    } else if (table == "appendix") {
        const double t2 = theta(2);
        for (const auto& t : appendix_tuples()) {
            const double v = solve_root({t}).value;
            emit("r", t, v);
            rows.back()["theta2_sum"] = root_equation_rhs(t, t2);
            lines.back() += "  " + fixed(root_equation_rhs(t, t2), 4);
        }
    } else {
        throw ArgumentError("unknown table '" + table + "' (theta, gamma, appendix)");
    }
    if (json.wanted()) {
        ordered_json j;
        j["schema"] = 1;
        j["roots"] = rows;
        json.write(j.dump(2));
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
    }
    return 0;
}

int run_betti(const std::vector<Graph>& graphs, const FieldSpec& field, Setting setting, const JsonTarget& json) {
    ordered_json records = ordered_json::array();
    for (const Graph& g : graphs) {
        const BettiVector b = betti_of(g, field, setting);
        if (json.wanted()) {
            ordered_json r;
            r["graph6"] = emit_graph6(g);
            r["n"] = g.order();
            r["reduced_from_dim"] = -1;
            r["reduced"] = b.reduced;
            r["total"] = b.total();
            records.push_back(r);
        } else {
            std::cout << emit_graph6(g) << "  total " << b.total() << "  reduced";
            for (std::size_t d = 0; d < b.reduced.size(); ++d) std::cout << (d ? "," : " ") << b.reduced[d];
            std::cout << "\n";
        }
    }
    if (json.wanted()) {
        ordered_json j;
        j["schema"] = 1;
        j["field"] = field.name();
        j["setting"] = setting_name(setting);
        j["graphs"] = records;
        json.write(j.dump(2));
    }
    return 0;
}

int run_certify(const std::vector<Graph>& graphs, const CertifyConfig& cfg, const JsonTarget& json) {
    std::vector<std::string> docs;
    int status = 0;
    for (const Graph& g : graphs) {
        const BoundCertificate cert = certify(g, cfg);
        const std::string defect = replay_certificate(cert);
        if (!defect.empty()) status = kExitFailed;
        if (json.wanted()) {
            docs.push_back(certificate_json(cert));
        } else {
            std::cout << emit_graph6(g) << "  bound " << cert.bound() << "  nodes " << cert.nodes.size() << "  "
                      << (defect.empty() ? "replay ok" : "replay FAILED: " + defect) << "\n";
        }
    }
    if (json.wanted()) {
        if (docs.size() == 1) {
            json.write(docs.front());
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& d : docs) arr.push_back(ordered_json::parse(d));
            json.write(arr.dump(2));
        }
    }
    return status;
}

void print_search(const SearchReport& r) {
    std::cout << "pattern " << r.pattern << ", setting " << setting_name(r.setting) << ", field " << r.field.name()
              << (r.from_file ? ", corpus" : "") << "\n";
    std::cout << "n  graphs  pruned  b=(n)  b(n)  witnesses\n";
    for (const auto& l : r.levels) {
        std::cout << l.n << "  " << l.graphs_enumerated << "  " << l.graphs_pruned << "  "
                  << (l.exact_max ? std::to_string(*l.exact_max) : "-") << "  "
                  << (l.cumulative_max ? std::to_string(*l.cumulative_max) : "-") << " ";
        for (std::size_t i = 0; i < l.witnesses.size() && i < 3; ++i) std::cout << " " << l.witnesses[i];
        if (l.witnesses.size() > 3) std::cout << " ...";
        for (const auto& [name, v] : l.field_maxima) std::cout << "  " << name << "=" << v;
        std::cout << "\n";
    }
    const auto mono = check_monotonicity(r);
    std::cout << "monotone: " << (mono.ok ? "yes" : "no (" + mono.detail + ")") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti numbers of flag complexes: homology, bounds, certificates and extremal search"};
    app.require_subcommand(1);

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Emit a named graph as one graph6 line");
    std::string family;
    std::vector<std::string> family_params;
    int copies_count = 1;
    std::string out_format = "graph6";
    construct_cmd->add_option("family", family, "Family name")->required();
    construct_cmd->add_option("params", family_params, "Family parameters");
    construct_cmd->add_option("--copies", copies_count, "Disjoint copies")->check(CLI::NonNegativeNumber);
    construct_cmd->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"graph6"}));

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "Reduced Betti numbers of flag complexes");
    std::string in_file, g6_word, field_name = "gf2", setting_text = "independence";
    JsonTarget betti_json;
    betti_cmd->add_option("--in", in_file, "graph6 file");
    betti_cmd->add_option("--g6", g6_word, "Single graph6 word");
    betti_cmd->add_option("--field", field_name, "gf<p> or q");
    betti_cmd->add_option("--setting", setting_text, "clique or independence");
    add_json(betti_cmd, betti_json);

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "Roots r of 1 = sum x^-a_i");
    std::string tuple, table;
    int digits = 10;
    JsonTarget roots_json;
    roots_cmd->add_option("--tuple", tuple, "Exponents, e.g. 5,6,7,7");
    roots_cmd->add_option("--table", table, "theta, gamma or appendix");
    roots_cmd->add_option("--digits", digits, "Printed decimals")->check(CLI::Range(1, 15));
    add_json(roots_cmd, roots_json);

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "Certified upper bound on the independence Betti total");
    std::string cert_in, cert_g6, strategy = "default";
    int base = 6;
    JsonTarget cert_json;
    certify_cmd->add_option("--in", cert_in, "graph6 file");
    certify_cmd->add_option("--g6", cert_g6, "Single graph6 word");
    certify_cmd->add_option("--base", base, "Exact homology at or below this order")->check(CLI::Range(0, 12));
    certify_cmd->add_option("--strategy", strategy, "default or try-all-orders")
        ->check(CLI::IsMember({"default", "try-all-orders"}));
    add_json(certify_cmd, cert_json);

    // search
    auto* search_cmd = app.add_subcommand("search", "Extremal Betti numbers over H-free graphs");
    std::string forbid = "none", search_field = "gf2", search_setting = "clique", from_file;
    int max_n = 6;
    bool all_fields = false, allow_large = false;
    int max_degeneracy = -1;
    unsigned workers = 0;
    JsonTarget search_json_target;
    search_cmd->add_option("--forbid", forbid, "none, K<d>, I<k>, C<n>, P<n> or graph6:<word>");
    search_cmd->add_option("--n", max_n, "Largest order")->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--field", search_field, "gf<p> or q");
    search_cmd->add_option("--setting", search_setting, "clique or independence");
    search_cmd->add_flag("--all-fields", all_fields, "Also score over GF(2), GF(3), GF(5) and Q");
    search_cmd->add_option("--from-file", from_file, "Score a graph6 corpus instead of enumerating");
    search_cmd->add_flag("--allow-large", allow_large, "Permit n above 9");
    search_cmd->add_option("--max-degeneracy", max_degeneracy, "Only graphs of degeneracy at most this");
    search_cmd->add_option("--workers", workers, "Threads (0 = all cores)");
    add_json(search_cmd, search_json_target);

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the claim catalogue");
    VerifyOptions vopts;
    JsonTarget verify_json;
    verify_cmd->add_option("--scope", vopts.scope, "all, tables, graphs, bounds, search, properties, certifier or an id prefix");
    verify_cmd->add_option("--workers", vopts.workers, "Threads (0 = all cores)");
    add_json(verify_cmd, verify_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*construct_cmd) {
            std::cout << emit_graph6(build_family(family, family_params, copies_count)) << "\n";
            return 0;
        }
        if (*betti_cmd)
            return run_betti(load_graphs(in_file, g6_word), FieldSpec::parse(field_name), parse_setting(setting_text),
                             betti_json);
        if (*roots_cmd) return run_roots(tuple, table, digits, roots_json);
        if (*certify_cmd) {
            CertifyConfig cfg;
            cfg.base_size = base;
            cfg.strategy = strategy == "default" ? CertifyConfig::Strategy::Default
                                                 : CertifyConfig::Strategy::TryAllOrders;
            return run_certify(load_graphs(cert_in, cert_g6), cfg, cert_json);
        }
        if (*search_cmd) {
            SearchOptions o;
            o.max_n = max_n;
            o.forbid = HPattern::parse(forbid);
            o.field = FieldSpec::parse(search_field);
            o.setting = parse_setting(search_setting);
            o.all_fields = all_fields;
            o.enumeration.allow_large = allow_large;
            o.enumeration.workers = workers;
            if (max_degeneracy >= 0) o.enumeration.max_degeneracy = max_degeneracy;
            const SearchReport r = from_file.empty() ? extremal_betti(o) : score_corpus(read_graph6_file(from_file), o);
            if (search_json_target.wanted())
                search_json_target.write(search_json(r));
            else
                print_search(r);
            return 0;
        }
        if (*verify_cmd) {
            const VerifyReport r = run_verify_paper(vopts);
            if (verify_json.wanted())
                verify_json.write(report_json(r));
            else
                std::cout << report_table(r);
            return r.all_passed() ? 0 : kExitFailed;
        }
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArgumentError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
