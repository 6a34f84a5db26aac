#pragma once
// JSON forms of catalogs, words, graphs, certificates and family reports,
// plus the offline certificate recheck.  Output field order is fixed and
// label maps are sorted, so serialization is byte-deterministic.

#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "monofact/alexinv.hpp"
#include "monofact/curves.hpp"
#include "monofact/distinguish.hpp"
#include "monofact/f2.hpp"
#include "monofact/humphries.hpp"
#include "monofact/version.hpp"
#include "monofact/words.hpp"

namespace monofact {

using json = nlohmann::ordered_json;

// ---- catalogs ----------------------------------------------------------

inline json catalog_to_json(const CurveCatalog& cat) {
    json j;
    j["format_version"] = 1;
    j["summands"] = cat.summands;
    j["knot_genus"] = cat.knot_genus;
    j["ambient_genus"] = cat.ambient_genus;
    json classes = json::object();
    json provenance = json::object();
    for (const auto& [label, h] : cat.classes) {
        classes[label] = class_to_string(h);
        const auto p = cat.provenance.find(label);
        provenance[label] =
            p == cat.provenance.end() ? "relation" : provenance_name(p->second);
    }
    j["classes"] = classes;
    j["provenance"] = provenance;
    return j;
}

inline CurveCatalog catalog_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("catalog: not a JSON object");
    if (j.value("format_version", 0) != 1)
        throw std::invalid_argument("catalog: unsupported format_version");
    CurveCatalog cat;
    try {
    cat.summands = j.at("summands").get<int>();
    cat.knot_genus = 2 * cat.summands;
    cat.ambient_genus = 4 * cat.summands + 1;
    if (j.contains("knot_genus") && j.at("knot_genus").get<int>() != cat.knot_genus)
        throw std::invalid_argument("catalog: knot_genus inconsistent with summands");
    if (j.contains("ambient_genus") &&
        j.at("ambient_genus").get<int>() != cat.ambient_genus)
        throw std::invalid_argument("catalog: ambient_genus inconsistent with summands");
    const auto& classes = j.at("classes");
    if (!classes.is_object()) throw std::invalid_argument("catalog: classes not an object");
    for (const auto& [label, v] : classes.items())
        cat.classes[label] = parse_class(v.get<std::string>());
    if (j.contains("provenance"))
        for (const auto& [label, v] : j.at("provenance").items())
            cat.provenance[label] = provenance_from_name(v.get<std::string>());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("catalog: malformed field: ") + e.what());
    }
    const auto bad = validate_catalog(cat);
    if (!bad.empty())
        throw std::invalid_argument("catalog: validation failed: " + bad.front());
    return cat;
}

// ---- words -------------------------------------------------------------

inline json word_to_json(const TwistWord& w) {
    json j;
    j["format_version"] = 1;
    j["genus"] = w.genus;
    j["order"] = "application";
    json letters = json::array();
    for (const auto& l : w.letters) {
        json jl;
        jl["label"] = l.label;
        jl["class"] = class_to_string(l.cls);
        jl["exp"] = l.exponent;
        letters.push_back(jl);
    }
    j["letters"] = letters;
    return j;
}

inline TwistWord word_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("word: not a JSON object");
    if (j.value("format_version", 0) != 1)
        throw std::invalid_argument("word: unsupported format_version");
    if (j.value("order", "application") != std::string("application"))
        throw std::invalid_argument("word: unsupported letter order");
    TwistWord w;
    try {
    w.genus = j.at("genus").get<int>();
    if (w.genus < 1 || w.genus > HomologyClass::max_bits / 2)
        throw std::invalid_argument("word: genus out of range");
    for (const auto& jl : j.at("letters")) {
        const int exp = jl.at("exp").get<int>();
        if (exp == 0) throw std::invalid_argument("word: zero exponent");
        const HomologyClass cls = parse_class(jl.at("class").get<std::string>());
        if (cls.dim() != 2 * w.genus)
            throw std::invalid_argument("word: letter genus mismatch");
        w.letters.push_back({jl.at("label").get<std::string>(), cls, exp});
    }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("word: malformed field: ") + e.what());
    }
    return w;
}

// ---- graphs ------------------------------------------------------------

inline json graph_report(const HumphriesGraph& g,
                         const std::vector<std::pair<std::string, HomologyClass>>& queries) {
    json j;
    j["format_version"] = 1;
    j["genus"] = g.genus();
    j["vertices"] = g.labels();
    json classes = json::array();
    for (const auto& b : g.basis()) classes.push_back(class_to_string(b));
    j["classes"] = classes;
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    json chi = json::object();
    for (const auto& [label, cls] : queries) chi[label] = g.chi(cls);
    j["chi"] = chi;
    return j;
}

// ---- polynomials -------------------------------------------------------

// exponent -> coefficient map; coefficients must fit a 64-bit integer
inline json poly_to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, v] : p.coeffs()) {
        if (v > BigInt(std::numeric_limits<long long>::max()) ||
            v < BigInt(std::numeric_limits<long long>::min()))
            throw std::domain_error("poly_to_json: coefficient exceeds 64 bits");
        j[std::to_string(e)] = v.convert_to<long long>();
    }
    return j;
}

// ---- certificates ------------------------------------------------------

namespace detail {
inline json params_to_json(const TwistParams& params) {
    json a = json::array();
    for (const auto& [p, q] : params) a.push_back(json::array({p, q}));
    return a;
}

inline TwistParams params_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("params: not an array");
    TwistParams out;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("params: entries must be [p, q]");
        out.emplace_back(pair[0].get<long long>(), pair[1].get<long long>());
    }
    return out;
}
}  // namespace detail

inline json certificate_to_json(const Certificate& c) {
    json j;
    j["format_version"] = c.format_version;
    j["kind"] = "monodromy-separation-certificate";
    j["tool"] = c.tool.empty() ? std::string(tool_name) + " " + version_string : c.tool;
    j["seed"] = c.seed;
    j["catalog_hash"] = c.catalog_hash;
    j["summands"] = c.summands;
    j["left"] = {{"params", detail::params_to_json(c.left_params)},
                 {"parity", c.left_parity.to_vector()}};
    j["right"] = {{"params", detail::params_to_json(c.right_params)},
                  {"parity", c.right_parity.to_vector()}};
    json basis;
    basis["labels"] = c.basis_labels;
    json cls = json::array();
    for (const auto& h : c.basis_classes) cls.push_back(class_to_string(h));
    basis["classes"] = cls;
    j["basis"] = basis;
    json edges = json::array();
    for (const auto& [a, b] : c.edges) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    json table = json::array();
    for (const auto& e : c.left_table.entries) {
        json je;
        je["position"] = e.position;
        je["label"] = e.label;
        je["class"] = class_to_string(e.cls);
        je["chi"] = e.chi;
        table.push_back(je);
    }
    j["left_chi"] = table;
    if (c.witness) {
        json w;
        w["position"] = c.witness->position;
        w["label"] = c.witness->letter_label;
        w["class"] = class_to_string(c.witness->letter_class);
        w["vertex_label"] = c.witness->vertex_label;
        w["vertex_class"] = class_to_string(c.witness->vertex_class);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["verdict"] = verdict_name(c.verdict);
    j["note"] = c.note;
    return j;
}

inline Certificate certificate_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("certificate: not a JSON object");
    if (j.value("format_version", 0) != 1)
        throw std::invalid_argument("certificate: unsupported format_version");
    if (j.value("kind", "") != std::string("monodromy-separation-certificate"))
        throw std::invalid_argument("certificate: unknown kind");
    Certificate c;
    try {
    c.tool = j.value("tool", "");
    c.seed = j.at("seed").get<std::uint64_t>();
    c.catalog_hash = j.at("catalog_hash").get<std::string>();
    c.summands = j.at("summands").get<int>();
    if (c.summands < 1) throw std::invalid_argument("certificate: bad summand count");
    c.left_params = detail::params_from_json(j.at("left").at("params"));
    c.right_params = detail::params_from_json(j.at("right").at("params"));
    const auto parse_parity = [&](const json& arr, int n) {
        if (!arr.is_array() || static_cast<int>(arr.size()) != 2 * n)
            throw std::invalid_argument("certificate: parity length mismatch");
        ParityVector pv;
        pv.n = n;
        for (int k = 0; k < 2 * n; ++k) {
            const int bit = arr[k].get<int>();
            if (bit != 0 && bit != 1)
                throw std::invalid_argument("certificate: parity bits must be 0/1");
            if (bit) pv.bits |= std::uint32_t{1} << k;
        }
        return pv;
    };
    c.left_parity = parse_parity(j.at("left").at("parity"), c.summands);
    c.right_parity = parse_parity(j.at("right").at("parity"), c.summands);
    c.basis_labels = j.at("basis").at("labels").get<std::vector<std::string>>();
    for (const auto& s : j.at("basis").at("classes"))
        c.basis_classes.push_back(parse_class(s.get<std::string>()));
    if (c.basis_labels.size() != c.basis_classes.size())
        throw std::invalid_argument("certificate: basis label/class count mismatch");
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("certificate: malformed edge");
        c.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    for (const auto& je : j.at("left_chi")) {
        ChiEntry e;
        e.position = je.at("position").get<int>();
        e.label = je.at("label").get<std::string>();
        e.cls = parse_class(je.at("class").get<std::string>());
        e.chi = je.at("chi").get<int>();
        if (e.chi != 0 && e.chi != 1)
            throw std::invalid_argument("certificate: chi values must be 0/1");
        c.left_table.entries.push_back(e);
        if (e.chi != 1) c.left_table.all_one = false;
    }
    if (j.contains("witness") && !j.at("witness").is_null()) {
        const auto& w = j.at("witness");
        Witness wit;
        wit.position = w.at("position").get<int>();
        wit.letter_label = w.at("label").get<std::string>();
        wit.letter_class = parse_class(w.at("class").get<std::string>());
        wit.vertex_label = w.at("vertex_label").get<std::string>();
        wit.vertex_class = parse_class(w.at("vertex_class").get<std::string>());
        c.witness = wit;
    }
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "distinct_groups")
        c.verdict = Verdict::distinct_groups;
    else if (verdict == "inconclusive")
        c.verdict = Verdict::inconclusive;
    else
        throw std::invalid_argument("certificate: unknown verdict");
    c.note = j.value("note", "");
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("certificate: malformed field: ") + e.what());
    }
    return c;
}

struct RecheckResult {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string why) {
        ok = false;
        failures.push_back(std::move(why));
    }
};

// Full offline revalidation.  First the certificate's own data is checked
// for coherence (basis rank, adjacency, chi values, witness pairing); then
// the catalog and both words are rebuilt from the stored parameters and the
// certificate is compared against that regeneration.
inline RecheckResult recheck_certificate(const json& j) {
    const Certificate c = certificate_from_json(j);  // throws when malformed
    RecheckResult r;

    const int n = c.summands;
    const int N = 4 * n + 1;
    if (static_cast<int>(c.left_params.size()) != n ||
        static_cast<int>(c.right_params.size()) != n)
        r.fail("parameter lists do not match the summand count");
    if (c.left_parity != ParityVector::from_params(c.left_params))
        r.fail("left parity vector does not match the left parameters");
    if (c.right_parity != ParityVector::from_params(c.right_params))
        r.fail("right parity vector does not match the right parameters");

    if (static_cast<int>(c.basis_classes.size()) != 2 * N) {
        r.fail("basis size is not 2N");
        return r;
    }
    for (const auto& h : c.basis_classes)
        if (h.dim() != 2 * N) {
            r.fail("basis class dimension mismatch");
            return r;
        }
    if (!is_basis(N, c.basis_classes)) {
        r.fail("stored classes do not form a basis");
        return r;
    }

    HumphriesGraph graph(c.basis_labels, c.basis_classes);
    if (graph.edges() != c.edges)
        r.fail("stored edge list does not match the recomputed Humphries graph");

    for (const auto& e : c.left_table.entries)
        if (graph.chi(e.cls) != e.chi)
            r.fail("chi mismatch at left letter " + std::to_string(e.position));

    if (c.verdict == Verdict::distinct_groups) {
        if (!c.left_table.all_one)
            r.fail("verdict distinct_groups but a left letter has chi != 1");
        if (!c.witness) {
            r.fail("verdict distinct_groups without witness");
        } else {
            if (c.witness->letter_class.zero())
                r.fail("witness class is zero");
            else if (graph.chi(c.witness->letter_class) != 0)
                r.fail("witness class does not have chi = 0");
            if (pairing(c.witness->letter_class, c.witness->vertex_class) != 1)
                r.fail("witness does not meet the named basis class");
            bool vertex_found = false;
            for (std::size_t i = 0; i < c.basis_classes.size(); ++i)
                if (c.basis_labels[i] == c.witness->vertex_label &&
                    c.basis_classes[i] == c.witness->vertex_class)
                    vertex_found = true;
            if (!vertex_found) r.fail("witness vertex is not a stored basis class");
        }
        if (c.left_parity == c.right_parity)
            r.fail("verdict distinct_groups with equal parities");
    }

    // regeneration: the certificate must agree with a fresh computation
    try {
        const CurveCatalog cat = build_catalog(n);
        if (catalog_fingerprint(cat) != c.catalog_hash)
            r.fail("catalog hash does not match the canonical catalog");
        const HumphriesGraph fresh = parity_basis_graph(cat, c.left_parity);
        if (fresh.basis() != c.basis_classes || fresh.labels() != c.basis_labels)
            r.fail("stored basis differs from the parity basis");
        const TwistWord left = surgery_word(cat, c.left_params);
        if (static_cast<int>(c.left_table.entries.size()) != left.size())
            r.fail("chi table does not cover the left word");
        else
            for (int i = 0; i < left.size(); ++i)
                if (c.left_table.entries[i].cls != left.letters[i].cls) {
                    r.fail("chi table class differs from the left word at letter " +
                           std::to_string(i + 1));
                    break;
                }
        if (c.verdict == Verdict::distinct_groups && c.witness) {
            const TwistWord right = surgery_word(cat, c.right_params);
            const auto expect = find_witness(right, fresh);
            if (!expect)
                r.fail("no chi = 0 letter in the regenerated right word");
            else if (expect->position != c.witness->position ||
                     expect->letter_class != c.witness->letter_class)
                r.fail("witness differs from the first chi = 0 letter of the right word");
        }
    } catch (const std::exception& e) {
        r.fail(std::string("regeneration failed: ") + e.what());
    }
    return r;
}

// ---- family reports ----------------------------------------------------

inline json family_report_to_json(const FamilyReport& rep) {
    json j;
    j["format_version"] = 1;
    j["kind"] = "family-report";
    j["m"] = rep.m;
    j["summands"] = rep.summands;
    json members = json::array();
    for (const auto& mem : rep.members) {
        json jm;
        jm["params"] = detail::params_to_json(mem.params);
        jm["parity"] = mem.parity.to_vector();
        members.push_back(jm);
    }
    j["members"] = members;
    json pairs = json::array();
    for (const auto& pr : rep.pairs) {
        json jp;
        jp["left"] = pr.left;
        jp["right"] = pr.right;
        jp["verdict"] = verdict_name(pr.cert.verdict);
        if (pr.cert.witness) {
            jp["witness"] = {{"position", pr.cert.witness->position},
                             {"label", pr.cert.witness->letter_label},
                             {"class", class_to_string(pr.cert.witness->letter_class)},
                             {"vertex_label", pr.cert.witness->vertex_label}};
        } else {
            jp["witness"] = nullptr;
        }
        pairs.push_back(jp);
    }
    j["pairs"] = pairs;
    j["classes"] = rep.classes;
    j["all_distinct"] = rep.all_distinct;
    return j;
}

// Family reports carry only inputs and conclusions, so the strongest
// offline check is to regenerate the whole report and compare every
// recorded field.  Structural problems throw; content mismatches are
// collected as failures.
inline RecheckResult recheck_family_report(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("family report: not a JSON object");
    if (j.value("format_version", 0) != 1)
        throw std::invalid_argument("family report: unsupported format_version");
    if (j.value("kind", std::string{}) != "family-report")
        throw std::invalid_argument("family report: wrong kind");
    std::vector<long long> m;
    int summands = 0;
    try {
        m = j.at("m").get<std::vector<long long>>();
        summands = j.at("summands").get<int>();
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("family report: ") + e.what());
    }

    RecheckResult r;
    if (summands != static_cast<int>(m.size())) {
        r.fail("summand count does not match the twist-count vector");
        return r;
    }
    json fresh;
    try {
        fresh = family_report_to_json(family_report(m));
    } catch (const std::exception& e) {
        r.fail(std::string("cannot recompute the report: ") + e.what());
        return r;
    }
    for (const char* key : {"members", "pairs", "classes", "all_distinct"}) {
        if (!j.contains(key)) {
            r.fail(std::string("missing field '") + key + "'");
            continue;
        }
        if (j.at(key) != fresh.at(key))
            r.fail(std::string("field '") + key + "' differs from recomputation");
    }
    return r;
}

// ---- file helpers ------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace monofact
