#include "nfactor/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nfactor/classifier.hpp"
#include "nfactor/graph.hpp"
#include "nfactor/oracle.hpp"

namespace nfactor {

namespace {

using nlohmann::json;

std::string content_text(const ExponentVector& content, int var_count) {
    SparsePoly mono = SparsePoly::monomial(content);
    (void)var_count;
    return format_poly(mono);
}

std::string factorization_line(const Factorization& f) {
    std::ostringstream out;
    bool first = true;
    if (!f.content.is_zero()) {
        out << content_text(f.content, f.content.size());
        first = false;
    }
    for (const SparsePoly& factor : f.factors) {
        if (!first) out << " * ";
        out << "(" << format_poly(factor) << ")";
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

int cmd_factor(const std::string& text, bool as_json, std::size_t max_terms, std::ostream& out) {
    SparsePoly p = parse_poly(text);
    FactorizerOptions options;
    options.max_terms = max_terms;
    auto facs = all_factorizations(p, options);
    if (as_json) {
        json doc;
        doc["input"] = text;
        doc["canonical"] = format_poly(p);
        doc["count"] = facs.size();
        doc["factorizations"] = json::array();
        for (const auto& f : facs) {
            json jf;
            jf["content"] = f.content.is_zero() ? "" : content_text(f.content, f.content.size());
            jf["factors"] = json::array();
            for (const auto& factor : f.factors) jf["factors"].push_back(format_poly(factor));
            doc["factorizations"].push_back(jf);
        }
        out << doc.dump() << "\n";
    } else {
        for (const auto& f : facs) out << factorization_line(f) << "\n";
        out << "factorizations: " << facs.size() << "\n";
    }
    return 0;
}

void print_bijection_row(std::ostream& out, int index, const GridBijection& b) {
    out << index;
    for (const GridCell& cell : b.cells()) out << " & (" << cell.i << "," << cell.j << ")";
    out << "\n";
}

int cmd_bijections(int r, int s, bool symmetric, bool as_json, std::ostream& out) {
    auto bijections = enumerate_bijections(GridShape{r, s}, symmetric);
    if (as_json) {
        json doc;
        doc["r"] = r;
        doc["s"] = s;
        doc["symmetric"] = symmetric;
        doc["count"] = bijections.size();
        doc["bijections"] = json::array();
        for (const auto& b : bijections) {
            json cells = json::array();
            for (const GridCell& cell : b.cells()) cells.push_back({cell.i, cell.j});
            doc["bijections"].push_back(cells);
        }
        out << doc.dump() << "\n";
    } else {
        for (std::size_t k = 0; k < bijections.size(); ++k) {
            print_bijection_row(out, static_cast<int>(k + 1), bijections[k]);
        }
        out << "count: " << bijections.size() << "\n";
    }
    return 0;
}

json pair_json(const PairVerdict& v) {
    json jp;
    jp["type"] = "pair";
    jp["r"] = v.shape.r;
    jp["s"] = v.shape.s;
    jp["case1"] = v.case1;
    jp["case2"] = v.case2;
    jp["pre_equivalent"] = v.pre_equivalent;
    jp["post_equivalent"] = v.post_equivalent;
    jp["free_parameters"] = v.free_params;
    jp["generic"] = v.generic_values;
    jp["forced_zero_steps"] = v.forced.size();
    return jp;
}

int cmd_classify(int t, bool as_json, bool with_scan, long long max_exp, long long budget,
                 int cap, std::size_t threads, std::ostream& out) {
    ClassifyOptions options;
    options.cap = cap;
    options.threads = threads;
    ClassificationReport report = classify(t, options);

    std::vector<ScanHit> hits;
    bool hits_known = true;
    if (with_scan) {
        ScanOptions scan_options;
        scan_options.budget = budget;
        scan_options.threads = threads;
        hits = exhaustive_scan(t, max_exp, scan_options);
        auto known = known_nonunique_instances(t, max_exp);
        for (const auto& hit : hits) {
            if (known.count(hit.exponents) == 0) hits_known = false;
        }
    }

    if (as_json) {
        json summary;
        summary["type"] = "summary";
        summary["t"] = report.t;
        summary["unique"] = report.unique;
        summary["note"] = report.note;
        summary["pre_inequivalent"] = report.pre_inequivalent_count;
        summary["post_inequivalent"] = report.post_inequivalent_count;
        out << summary.dump() << "\n";
        for (const auto& shape : report.shapes) {
            json js;
            js["type"] = "shape";
            js["r"] = shape.shape.r;
            js["s"] = shape.shape.s;
            js["symmetric"] = shape.symmetric;
            js["bijections"] = shape.bijection_count;
            out << js.dump() << "\n";
        }
        for (const auto& pair : report.pairs) out << pair_json(pair).dump() << "\n";
        for (const auto& family : report.families) {
            json jf;
            jf["type"] = "family";
            jf["kind"] = family.kind == FamilyGroup::Kind::ScaledIdentity ? "scaled-identity"
                                                                          : "two-parameter";
            jf["identity"] = family.identity;
            jf["factor_pair_1"] = family.factor_pair_1;
            jf["factor_pair_2"] = family.factor_pair_2;
            jf["members"] = family.members;
            out << jf.dump() << "\n";
        }
        for (const auto& spec : report.specializations) {
            json js;
            js["type"] = "specialization";
            js["case1"] = spec.case1;
            js["case2"] = spec.case2;
            js["identity"] = spec.identity;
            js["family"] = spec.family_index;
            out << js.dump() << "\n";
        }
        if (with_scan) {
            json jscan;
            jscan["type"] = "scan";
            jscan["max_exp"] = max_exp;
            jscan["hits"] = hits.size();
            jscan["all_hits_in_known_families"] = hits_known;
            out << jscan.dump() << "\n";
        }
        return 0;
    }

    out << "t: " << report.t << "\n";
    out << "verdict: " << (report.unique ? "unique" : "non-unique") << "\n";
    if (!report.note.empty()) out << "note: " << report.note << "\n";
    for (const auto& shape : report.shapes) {
        out << "shape " << shape.shape.r << "x" << shape.shape.s
            << (shape.symmetric ? " [symmetric]" : "") << ": " << shape.bijection_count
            << " bijections\n";
        auto bijections = enumerate_bijections(shape.shape, shape.symmetric);
        for (std::size_t k = 0; k < bijections.size(); ++k) {
            out << "  ";
            print_bijection_row(out, static_cast<int>(k + 1), bijections[k]);
        }
    }
    if (!report.pairs.empty()) {
        out << "pair verdicts: " << report.pairs.size() << " combinations, "
            << report.pre_inequivalent_count << " inequivalent before refinement, "
            << report.post_inequivalent_count << " after\n";
        for (const auto& shape : report.shapes) {
            std::size_t n = shape.bijection_count;
            out << "matrix " << shape.shape.r << "x" << shape.shape.s
                << " ('.' diagonal, '=' equivalent, 'x' refines equivalent, 'X' inequivalent):\n";
            std::vector<std::string> rows(n, std::string(n, '.'));
            for (const auto& pair : report.pairs) {
                if (pair.shape.r != shape.shape.r || pair.shape.s != shape.shape.s) continue;
                char mark = pair.post_equivalent ? (pair.pre_equivalent ? '=' : 'x') : 'X';
                rows[static_cast<std::size_t>(pair.case1 - 1)][static_cast<std::size_t>(pair.case2 - 1)] = mark;
                rows[static_cast<std::size_t>(pair.case2 - 1)][static_cast<std::size_t>(pair.case1 - 1)] = mark;
            }
            for (std::size_t i = 0; i < n; ++i) out << "  " << rows[i] << "\n";
        }
    }
    out << "families: " << report.families.size() << "\n";
    for (std::size_t i = 0; i < report.families.size(); ++i) {
        const auto& family = report.families[i];
        out << "  family " << (i + 1) << " ";
        if (family.kind == FamilyGroup::Kind::ScaledIdentity) {
            out << "(scaled identity) exponents";
        } else {
            out << "(two-parameter) sample";
        }
        for (long long e : family.identity) out << " " << e;
        out << "; members";
        for (auto [a, b] : family.members) out << " (" << a << "," << b << ")";
        out << "\n";
    }
    for (const auto& spec : report.specializations) {
        out << "  specialization (" << spec.case1 << "," << spec.case2 << ") of family "
            << (spec.family_index + 1) << "\n";
    }
    if (with_scan) {
        out << "scan: max_exp=" << max_exp << ", hits=" << hits.size()
            << ", all hits in known families: " << (hits_known ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_scan(int t, long long max_exp, long long budget, bool as_json, std::size_t threads,
             std::ostream& out) {
    ScanOptions options;
    options.budget = budget;
    options.threads = threads;
    auto hits = exhaustive_scan(t, max_exp, options);
    if (as_json) {
        for (const auto& hit : hits) {
            json jh;
            jh["type"] = "hit";
            jh["exponents"] = hit.exponents;
            jh["factorizations"] = hit.factorization_count;
            out << jh.dump() << "\n";
        }
        json summary;
        summary["type"] = "summary";
        summary["t"] = t;
        summary["max_exp"] = max_exp;
        summary["hits"] = hits.size();
        out << summary.dump() << "\n";
    } else {
        for (const auto& hit : hits) {
            out << "hit:";
            for (long long e : hit.exponents) out << " " << e;
            out << " (" << hit.factorization_count << " factorizations)\n";
        }
        out << "hits: " << hits.size() << "\n";
    }
    return 0;
}

int cmd_graph_factor(const std::string& path, const std::string& product_text, bool as_json,
                     int vertex_cap, int factor_cap, std::ostream& out) {
    auto kind = product_from_name(product_text);
    if (!kind) throw std::invalid_argument("unknown product: " + product_text);
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open graph file: " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    GraphSum sum = parse_graph_sum(buffer.str());

    GraphCaps caps;
    caps.product_vertex_cap = vertex_cap;
    caps.factor_enum_cap = factor_cap;

    VariableDictionary dict;
    SparsePoly p = graph_to_poly(sum, *kind, dict, caps);
    auto facs = all_factorizations(p);

    std::vector<std::string> names;
    for (int i = 1; i <= dict.size(); ++i) names.push_back("G" + std::to_string(i));

    auto monomial_text = [&](const ExponentVector& content) {
        return format_poly_with_names(SparsePoly::monomial(content), names);
    };

    if (as_json) {
        for (const auto& f : facs) {
            json jf;
            jf["type"] = "factorization";
            jf["content"] = f.content.is_zero() ? "" : monomial_text(f.content);
            jf["factors"] = json::array();
            for (const auto& factor : f.factors) {
                jf["factors"].push_back(format_poly_with_names(factor, names));
            }
            out << jf.dump() << "\n";
        }
        for (int i = 0; i < dict.size(); ++i) {
            json jd;
            jd["type"] = "dictionary";
            jd["name"] = names[static_cast<std::size_t>(i)];
            jd["n"] = dict.graph(i).vertex_count();
            jd["edges"] = json::array();
            for (auto [u, v] : dict.graph(i).edges()) jd["edges"].push_back({u, v});
            out << jd.dump() << "\n";
        }
        json summary;
        summary["type"] = "summary";
        summary["product"] = product_text;
        summary["factorizations"] = facs.size();
        out << summary.dump() << "\n";
    } else {
        for (std::size_t k = 0; k < facs.size(); ++k) {
            const auto& f = facs[k];
            out << "factorization " << (k + 1) << ": ";
            bool first = true;
            if (!f.content.is_zero()) {
                out << monomial_text(f.content);
                first = false;
            }
            for (const auto& factor : f.factors) {
                if (!first) out << " * ";
                out << "(" << format_poly_with_names(factor, names) << ")";
                first = false;
            }
            if (first) out << "1";
            out << "\n";
        }
        out << "factorizations: " << facs.size() << "\n";
        out << "dictionary:\n";
        for (int i = 0; i < dict.size(); ++i) {
            std::istringstream lines(format_graph(dict.graph(i)));
            std::string line;
            bool first_line = true;
            while (std::getline(lines, line)) {
                if (first_line) {
                    out << names[static_cast<std::size_t>(i)] << ": " << line << "\n";
                    first_line = false;
                } else {
                    out << "  " << line << "\n";
                }
            }
        }
    }
    return 0;
}

int cmd_verify(bool as_json, std::size_t threads, std::ostream& out) {
    bool all_ok = true;
    std::vector<std::pair<std::string, bool>> lines;

    VerifyReport witness = verify_known_cases();
    for (const auto& check : witness.checks) {
        lines.emplace_back("check " + check.name, check.pass);
        all_ok = all_ok && check.pass;
    }

    ClassifyOptions options;
    options.threads = threads;
    for (int t = 1; t <= 10; ++t) {
        ClassificationReport report = classify(t, options);
        bool expect_unique = (t != 6 && t != 10);
        bool ok = (report.unique == expect_unique);
        std::string name = "classify t=" + std::to_string(t) + ": " +
                           (report.unique ? "unique" : "non-unique");
        if (t == 6) {
            ok = ok && report.post_inequivalent_count == 1 && report.families.size() == 1;
            name += " (1 family)";
        }
        if (t == 10) {
            std::size_t sporadic = 0, two_param = 0;
            for (const auto& family : report.families) {
                if (family.kind == FamilyGroup::Kind::ScaledIdentity) ++sporadic;
                else ++two_param;
            }
            ok = ok && report.pre_inequivalent_count == 102 && sporadic == 3 && two_param == 2;
            name += " (" + std::to_string(report.pre_inequivalent_count) +
                    " inequivalent pairs, " + std::to_string(report.post_inequivalent_count) +
                    " after sign analysis, " + std::to_string(sporadic) + " sporadic + " +
                    std::to_string(two_param) + " two-parameter families)";
        }
        lines.emplace_back(name, ok);
        all_ok = all_ok && ok;
    }

    if (as_json) {
        for (const auto& [name, ok] : lines) {
            json jc;
            jc["type"] = "check";
            jc["name"] = name;
            jc["pass"] = ok;
            out << jc.dump() << "\n";
        }
        json summary;
        summary["type"] = "summary";
        summary["all_pass"] = all_ok;
        out << summary.dump() << "\n";
    } else {
        for (const auto& [name, ok] : lines) {
            out << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        }
        out << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factorization of polynomials over the nonnegative-integer semiring, "
                 "with the graph-product correspondence"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // factor
    std::string poly_text;
    std::size_t max_terms = 20;
    auto* factor_cmd = app.add_subcommand("factor", "all factorizations of a polynomial");
    factor_cmd->add_option("poly", poly_text, "polynomial, e.g. \"1+X+X^2\"")->required();
    factor_cmd->add_option("--max-terms", max_terms, "term count cap");

    // bijections
    int rows = 0, cols = 0;
    bool symmetric = false;
    auto* bij_cmd = app.add_subcommand("bijections", "grid bijections compatible with dominance");
    bij_cmd->add_option("r", rows, "row count")->required();
    bij_cmd->add_option("s", cols, "column count")->required();
    bij_cmd->add_flag("--symmetric", symmetric, "fix factor order (square shapes)");

    // classify
    int classify_t = 0;
    long long max_exp = 10;
    long long budget = 2'000'000;
    int cap = 10;
    std::size_t threads = 1;
    bool with_scan = false;
    auto* classify_cmd = app.add_subcommand("classify", "classify factorizations for a term count");
    classify_cmd->add_option("t", classify_t, "term count")->required();
    classify_cmd->add_option("--max-exp", max_exp, "exponent bound for --scan");
    classify_cmd->add_option("--budget", budget, "scan tuple budget");
    classify_cmd->add_option("--cap", cap, "composite term-count cap");
    classify_cmd->add_option("--threads", threads, "worker threads");
    classify_cmd->add_flag("--scan", with_scan, "cross-check with an exhaustive scan");

    // scan
    int scan_t = 0;
    long long scan_max_exp = 10;
    long long scan_budget = 2'000'000;
    std::size_t scan_threads = 1;
    auto* scan_cmd = app.add_subcommand("scan", "exhaustively scan primitive polynomials");
    scan_cmd->add_option("t", scan_t, "term count")->required();
    scan_cmd->add_option("--max-exp", scan_max_exp, "exponent bound");
    scan_cmd->add_option("--budget", scan_budget, "tuple budget");
    scan_cmd->add_option("--threads", scan_threads, "worker threads");

    // graph-factor
    std::string graph_path;
    std::string product_text = "cartesian";
    int vertex_cap = 64;
    int factor_cap = 6;
    auto* graph_cmd = app.add_subcommand("graph-factor", "factor a disconnected graph");
    graph_cmd->add_option("file", graph_path, "graph file")->required();
    graph_cmd->add_option("--product", product_text, "cartesian | strong | direct");
    graph_cmd->add_option("--vertex-cap", vertex_cap, "product vertex cap");
    graph_cmd->add_option("--factor-cap", factor_cap, "factor enumeration cap");

    // verify
    std::size_t verify_threads = 1;
    auto* verify_cmd = app.add_subcommand("verify", "check the published identities and verdicts");
    verify_cmd->add_option("--threads", verify_threads, "worker threads");

    std::vector<std::string> argv_storage = args;
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>("nfactor"));
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (factor_cmd->parsed()) return cmd_factor(poly_text, as_json, max_terms, out);
        if (bij_cmd->parsed()) return cmd_bijections(rows, cols, symmetric, as_json, out);
        if (classify_cmd->parsed()) {
            return cmd_classify(classify_t, as_json, with_scan, max_exp, budget, cap, threads, out);
        }
        if (scan_cmd->parsed()) {
            return cmd_scan(scan_t, scan_max_exp, scan_budget, as_json, scan_threads, out);
        }
        if (graph_cmd->parsed()) {
            return cmd_graph_factor(graph_path, product_text, as_json, vertex_cap, factor_cap, out);
        }
        if (verify_cmd->parsed()) return cmd_verify(as_json, verify_threads, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nfactor
