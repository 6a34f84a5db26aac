// Command-line front end: build curve catalogs, emit monodromy
// factorizations, run the chi-based separation machinery, recheck
// certificates offline, and compute Alexander data.
//
// Exit codes: 0 success / distinct / valid; 2 inconclusive; 3 recheck
// failed; 4 usage or malformed input; 5 internal consistency failure.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <monofact/monofact.hpp>

namespace fs = std::filesystem;
using namespace monofact;

namespace {

// ---- option parsing ----------------------------------------------------

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + item + "' in '" + text + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("bad integer '" + item + "' in '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list '" + text + "'");
    return out;
}

// 2n integers -> one (p, q) pair per twist region
TwistParams params_from_list(const std::vector<long long>& v, int n) {
    if (static_cast<int>(v.size()) != 2 * n)
        throw std::invalid_argument("expected " + std::to_string(2 * n) +
                                    " comma-separated integers (one p,q pair per "
                                    "twist region), got " +
                                    std::to_string(v.size()));
    TwistParams params;
    for (int j = 0; j < n; ++j) params.emplace_back(v[2 * j], v[2 * j + 1]);
    return params;
}

std::string pairs_text(const std::vector<std::pair<long long, long long>>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += " ";
        s += "(" + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + ")";
    }
    return s;
}

std::string parity_text(const ParityVector& pv) {
    std::vector<std::pair<long long, long long>> ps;
    for (int j = 1; j <= pv.n; ++j) ps.emplace_back(pv.block_p(j), pv.block_q(j));
    return pairs_text(ps);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

// ---- catalog cache -----------------------------------------------------

// MONODROMY_CATALOG_DIR selects a directory of reusable catalog files;
// without it every run rebuilds in memory.  A stale or unreadable cache
// entry is ignored and rewritten, never trusted.
CurveCatalog load_or_build_catalog(int n) {
    const char* dir = std::getenv("MONODROMY_CATALOG_DIR");
    if (dir == nullptr || *dir == '\0') return build_catalog(n);
    const fs::path path = fs::path(dir) / ("catalog-n" + std::to_string(n) + ".json");
    if (fs::exists(path)) {
        try {
            CurveCatalog cat = catalog_from_json(load_json_file(path.string()));
            if (cat.summands == n) return cat;
            std::cerr << "warning: " << path.string() << " is for " << cat.summands
                      << " twist regions; rebuilding\n";
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring catalog cache " << path.string() << ": "
                      << e.what() << "\n";
        }
    }
    CurveCatalog cat = build_catalog(n);
    std::error_code ec;
    fs::create_directories(fs::path(dir), ec);
    try {
        save_json_file(path.string(), catalog_to_json(cat));
    } catch (const std::exception& e) {
        std::cerr << "warning: cannot write catalog cache " << path.string() << ": "
                  << e.what() << "\n";
    }
    return cat;
}

// ---- output ------------------------------------------------------------

int emit(const json& j, const std::string& text, const std::string& format,
         const std::string& out) {
    if (!out.empty()) save_json_file(out, j);
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    return 0;
}

// ---- subcommands -------------------------------------------------------

int run_catalog(int n, const std::string& format, const std::string& out) {
    const CurveCatalog cat = load_or_build_catalog(n);
    json j = catalog_to_json(cat);
    j["fingerprint"] = catalog_fingerprint(cat);

    std::vector<std::string> order;
    const int N = cat.ambient_genus, g = cat.knot_genus;
    for (int i = 1; i <= N; ++i) order.push_back(label_a(i));
    for (int i = 1; i <= N; ++i) order.push_back(label_b(i));
    for (int k = 0; k <= 2 * g + 1; ++k) order.push_back(label_B(k));
    for (int i = 1; i <= g; ++i) order.push_back(label_e(i));
    for (int i = 1; i <= g; ++i) order.push_back(label_f(i));
    order.push_back("bprime");
    for (int b = 1; b <= cat.summands; ++b) {
        order.push_back(label_c(b));
        order.push_back(label_d(b));
    }
    for (const auto& [label, cls] : cat.classes)
        if (std::find(order.begin(), order.end(), label) == order.end())
            order.push_back(label);

    std::ostringstream text;
    text << "summands: " << cat.summands << "\n"
         << "knot genus: " << cat.knot_genus << "\n"
         << "ambient genus: " << cat.ambient_genus << "\n"
         << "classes: " << cat.classes.size() << "\n"
         << "fingerprint: " << catalog_fingerprint(cat) << "\n";
    for (const auto& label : order) {
        const auto p = cat.provenance.find(label);
        text << label << " = " << class_to_labels(cat.cls(label)) << "  ["
             << provenance_name(p == cat.provenance.end() ? Provenance::relation
                                                          : p->second)
             << "]\n";
    }
    return emit(j, text.str(), format, out);
}

int run_word(int n, const std::string& kind, const std::string& params_str,
             const std::string& format, const std::string& out) {
    const CurveCatalog cat = load_or_build_catalog(n);
    if (kind == "base" && !params_str.empty())
        throw std::invalid_argument("the base word takes no twist parameters");
    TwistParams params(n, {0, 0});
    if (!params_str.empty()) params = params_from_list(parse_int_list(params_str), n);

    TwistWord w;
    if (kind == "base")
        w = base_word(cat);
    else if (kind == "surgery")
        w = surgery_word(cat, params);
    else if (kind == "knot")
        w = knot_monodromy_word(cat, params);
    else
        throw std::invalid_argument("unknown word kind '" + kind + "'");

    json j = word_to_json(w);
    j["kind"] = kind;
    if (kind != "base") {
        j["params"] = json::array();
        for (const auto& [p, q] : params) j["params"].push_back(json::array({p, q}));
        j["parity"] = ParityVector::from_params(params).to_vector();
    }

    std::ostringstream text;
    text << "kind: " << kind << "\n"
         << "fiber genus: " << w.genus << "\n"
         << "letters: " << w.size() << "\n";
    if (kind != "base")
        text << "params: " << pairs_text(params) << "\n"
             << "parity: " << parity_text(ParityVector::from_params(params)) << "\n";
    for (int i = 0; i < w.size(); ++i) {
        const auto& l = w.letters[i];
        char head[32];
        std::snprintf(head, sizeof head, "%4d  %+d  ", i + 1, l.exponent);
        text << head << l.label;
        for (std::size_t pad = l.label.size(); pad < 10; ++pad) text << ' ';
        text << class_to_labels(l.cls) << "\n";
    }
    return emit(j, text.str(), format, out);
}

int run_chi(int n, const std::string& params_str, const std::string& parity_str,
            const std::vector<std::string>& class_exprs, const std::string& format,
            const std::string& out) {
    if (!params_str.empty() && !parity_str.empty())
        throw std::invalid_argument("give either --params or --parity, not both");
    const CurveCatalog cat = load_or_build_catalog(n);

    TwistParams params(n, {0, 0});
    if (!params_str.empty()) params = params_from_list(parse_int_list(params_str), n);
    ParityVector pv = ParityVector::from_params(params);
    if (!parity_str.empty()) {
        const auto v = parse_int_list(parity_str);
        if (static_cast<int>(v.size()) != 2 * n)
            throw std::invalid_argument("--parity needs " + std::to_string(2 * n) +
                                        " entries");
        pv = ParityVector{};
        pv.n = n;
        for (int k = 1; k <= 2 * n; ++k) {
            if (v[k - 1] != 0 && v[k - 1] != 1)
                throw std::invalid_argument("--parity entries must be 0 or 1");
            if (v[k - 1]) pv.bits |= std::uint32_t{1} << (k - 1);
        }
    }

    const HumphriesGraph graph = parity_basis_graph(cat, pv);
    std::vector<std::pair<std::string, HomologyClass>> queries;
    for (int k = 0; k <= 2 * cat.knot_genus + 1; ++k)
        queries.emplace_back(label_B(k), cat.cls(label_B(k)));
    for (int b = 1; b <= n; ++b) {
        queries.emplace_back(label_c(b), cat.cls(label_c(b)));
        queries.emplace_back(label_d(b), cat.cls(label_d(b)));
    }
    for (const auto& expr : class_exprs) {
        std::string full = expr;
        if (expr.find('@') == std::string::npos &&
            !(expr.size() >= 2 && expr[0] == 'g' && expr.find(':') != std::string::npos))
            full += "@" + std::to_string(cat.ambient_genus);
        const HomologyClass cls = parse_class(full);
        if (cls.dim() != 2 * cat.ambient_genus)
            throw std::invalid_argument("class '" + expr +
                                        "' does not live on the fiber surface");
        queries.emplace_back(expr, cls);
    }

    json j = graph_report(graph, queries);
    j["summands"] = n;
    j["parity"] = pv.to_vector();

    std::ostringstream text;
    text << "summands: " << n << "\n"
         << "parity: " << parity_text(pv) << "\n"
         << "basis: " << join(graph.labels(), " ") << "\n"
         << "edges: " << graph.edges().size() << "\n";
    for (const auto& [a, b] : graph.edges())
        text << "  " << graph.labels()[a] << " - " << graph.labels()[b] << "\n";
    for (const auto& [label, cls] : queries)
        text << "chi(" << label << ") = " << graph.chi(cls) << "\n";
    return emit(j, text.str(), format, out);
}

int run_distinguish(int n, const std::string& left_str, const std::string& right_str,
                    std::uint64_t seed, const std::string& format,
                    const std::string& out) {
    const CurveCatalog cat = load_or_build_catalog(n);
    const TwistParams left = params_from_list(parse_int_list(left_str), n);
    const TwistParams right = params_from_list(parse_int_list(right_str), n);
    const Certificate cert = distinguish(cat, left, right, seed);
    const json j = certificate_to_json(cert);

    std::ostringstream text;
    text << "left:  params " << pairs_text(left) << "  parity "
         << parity_text(cert.left_parity) << "\n"
         << "right: params " << pairs_text(right) << "  parity "
         << parity_text(cert.right_parity) << "\n"
         << "basis: " << join(cert.basis_labels, " ") << "\n"
         << "verdict: " << verdict_name(cert.verdict) << "\n";
    if (cert.witness)
        text << "witness: letter " << cert.witness->position << " ("
             << cert.witness->letter_label << ", class "
             << class_to_labels(cert.witness->letter_class) << ") meets "
             << cert.witness->vertex_label << "\n";
    if (!cert.note.empty()) text << "note: " << cert.note << "\n";
    emit(j, text.str(), format, out);
    return cert.verdict == Verdict::distinct_groups ? 0 : 2;
}

int run_family(const std::string& m_str, std::uint64_t seed, const std::string& format,
               const std::string& out) {
    const std::vector<long long> m = parse_int_list(m_str);
    const FamilyReport rep = family_report(m, seed);
    const json j = family_report_to_json(rep);

    std::ostringstream text;
    text << "twist counts:";
    for (const long long v : m) text << " " << v;
    text << "\nmembers: " << rep.members.size() << "\n";
    for (std::size_t i = 0; i < rep.members.size(); ++i)
        text << "  " << i << ": params " << pairs_text(rep.members[i].params)
             << "  parity " << parity_text(rep.members[i].parity) << "\n";
    text << "pairs: " << rep.pairs.size() << "\n";
    for (const auto& pr : rep.pairs) {
        text << "  " << pr.left << " vs " << pr.right << ": "
             << verdict_name(pr.cert.verdict);
        if (pr.cert.witness)
            text << "  (witness " << pr.cert.witness->letter_label << " at letter "
                 << pr.cert.witness->position << ")";
        text << "\n";
    }
    text << "classes: " << rep.classes << "\n"
         << "all distinct: " << (rep.all_distinct ? "yes" : "no") << "\n";
    emit(j, text.str(), format, out);
    return rep.all_distinct ? 0 : 2;
}

int run_recheck(const std::vector<std::string>& paths) {
    bool any_fail = false;
    for (const auto& path : paths) {
        const json j = load_json_file(path);
        const std::string kind = j.is_object() ? j.value("kind", std::string{}) : "";
        RecheckResult r;
        if (kind == "monodromy-separation-certificate")
            r = recheck_certificate(j);
        else if (kind == "family-report")
            r = recheck_family_report(j);
        else
            throw std::invalid_argument("'" + path + "' is not a recognized artifact");
        if (r.ok) {
            std::cout << "ok: " << path << "\n";
        } else {
            any_fail = true;
            std::cout << "FAIL: " << path;
            for (const auto& why : r.failures) std::cout << "\n  - " << why;
            std::cout << "\n";
        }
    }
    return any_fail ? 3 : 0;
}

int run_alexander(const std::string& n_str, const std::string& m_str,
                  bool second_module, const std::string& format,
                  const std::string& out) {
    if (n_str.empty() == m_str.empty())
        throw std::invalid_argument("give exactly one of --n or --m");

    json j;
    j["format_version"] = 1;
    j["kind"] = "alexander";
    std::ostringstream text;

    if (!m_str.empty()) {
        if (second_module)
            throw std::invalid_argument("--second-module applies to a single knot (--n)");
        const std::vector<long long> m = parse_int_list(m_str);
        std::vector<IntMatrix> parts;
        for (const long long v : m) parts.push_back(stallings_knot_seifert(v));
        const LaurentPoly p = alexander(connected_sum(parts));
        j["m"] = m;
        j["poly"] = poly_to_json(p);
        j["poly_text"] = p.to_text();
        text << p.to_text() << "\n";
    } else {
        const long long nv = parse_int_list(n_str).at(0);
        const LaurentPoly p = alexander(stallings_knot_seifert(nv));
        j["n"] = nv;
        j["poly"] = poly_to_json(p);
        j["poly_text"] = p.to_text();
        text << p.to_text() << "\n";
        if (second_module) {
            const auto pres = second_module_presentation(nv);
            json rows = json::array();
            for (const auto& row : pres) {
                json jr = json::array();
                for (const auto& entry : row) jr.push_back(poly_to_json(entry));
                rows.push_back(jr);
            }
            j["second_module"] = rows;
            text << "second module presentation:\n"
                 << "  [ " << pres[0][0].to_text() << ", " << pres[0][1].to_text()
                 << " ]\n"
                 << "  [ " << pres[1][0].to_text() << ", " << pres[1][1].to_text()
                 << " ]\n";
        }
    }
    return emit(j, text.str(), format, out);
}

int run_verify(std::uint64_t seed) {
    const auto results = run_verify_suite(seed);
    int passed = 0;
    for (const auto& r : results) {
        if (r.pass) {
            ++passed;
            std::cout << "ok: " << r.name << "\n";
        } else {
            std::cout << "FAIL: " << r.name << " - " << r.detail << "\n";
        }
    }
    std::cout << "checks passed: " << passed << "/" << results.size() << "\n";
    return passed == static_cast<int>(results.size()) ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monodromy factorization toolkit for knot-surgery fibrations"};
    app.require_subcommand(1);

    int n = 1;
    std::uint64_t seed = default_seed;
    std::string format = "text", out, params_str, parity_str, kind = "surgery";
    std::string left_str, right_str, m_str, alex_n_str;
    std::vector<std::string> class_exprs, paths;
    bool second_module = false;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out, "also write the JSON artifact to this file");
    };

    auto* cat_cmd = app.add_subcommand("catalog", "print the curve catalog");
    cat_cmd->add_option("--n,-n", n, "number of twist regions")->required();
    add_format(cat_cmd);

    auto* word_cmd = app.add_subcommand("word", "print a monodromy factorization");
    word_cmd->add_option("--n,-n", n, "number of twist regions")->required();
    word_cmd->add_option("--kind", kind, "base | surgery | knot")
        ->check(CLI::IsMember({"base", "surgery", "knot"}));
    word_cmd->add_option("--params", params_str,
                         "comma-separated twist counts p1,q1,...,pn,qn");
    add_format(word_cmd);

    auto* chi_cmd =
        app.add_subcommand("chi", "print a parity basis, its graph and chi values");
    chi_cmd->add_option("--n,-n", n, "number of twist regions")->required();
    chi_cmd->add_option("--params", params_str,
                        "twist counts p1,q1,...,pn,qn; reduced mod 2");
    chi_cmd->add_option("--parity", parity_str, "explicit parity bits e1,...,e2n");
    chi_cmd->add_option("--class", class_exprs,
                        "extra class to evaluate, e.g. a1+b2 (repeatable)");
    add_format(chi_cmd);

    auto* dist_cmd = app.add_subcommand(
        "distinguish", "compare two factorizations and emit a certificate");
    dist_cmd->add_option("--n,-n", n, "number of twist regions")->required();
    dist_cmd->add_option("--left", left_str, "left twist counts p1,q1,...,pn,qn")
        ->required();
    dist_cmd->add_option("--right", right_str, "right twist counts p1,q1,...,pn,qn")
        ->required();
    dist_cmd->add_option("--seed", seed, "seed recorded in the certificate");
    add_format(dist_cmd);

    auto* fam_cmd = app.add_subcommand(
        "family", "compare the 2^n parity representatives for fixed twist counts");
    fam_cmd->add_option("--m", m_str, "comma-separated twist counts m1,...,mn")
        ->required();
    fam_cmd->add_option("--seed", seed, "seed recorded in the certificates");
    add_format(fam_cmd);

    auto* re_cmd =
        app.add_subcommand("recheck", "revalidate certificate or report files");
    re_cmd->add_option("paths", paths, "JSON artifact files")->required();

    auto* alex_cmd =
        app.add_subcommand("alexander", "symmetrized Alexander polynomial");
    alex_cmd->add_option("--n,-n", alex_n_str, "single twisted knot");
    alex_cmd->add_option("--m", m_str, "connected sum over twist counts m1,...,mk");
    alex_cmd->add_flag("--second-module", second_module,
                       "also print the second-module presentation");
    add_format(alex_cmd);

    auto* verify_cmd =
        app.add_subcommand("verify", "run the internal consistency suite");
    verify_cmd->add_option("--seed", seed, "seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        if (cat_cmd->parsed()) return run_catalog(n, format, out);
        if (word_cmd->parsed()) return run_word(n, kind, params_str, format, out);
        if (chi_cmd->parsed())
            return run_chi(n, params_str, parity_str, class_exprs, format, out);
        if (dist_cmd->parsed())
            return run_distinguish(n, left_str, right_str, seed, format, out);
        if (fam_cmd->parsed()) return run_family(m_str, seed, format, out);
        if (re_cmd->parsed()) return run_recheck(paths);
        if (alex_cmd->parsed())
            return run_alexander(alex_n_str, m_str, second_module, format, out);
        if (verify_cmd->parsed()) return run_verify(seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 4;
}
