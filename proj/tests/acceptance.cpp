// Acceptance gate.  Nine independent checks, one pass/fail line each,
// with wall-clock limits enforced where the contract states them.  Runs
// the library exactly as a user would; the certificate check also drives
// the installed command-line tool as a subprocess.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <monofact/monofact.hpp>

using namespace monofact;

namespace {

int cli_exit(const std::string& args) {
    const std::string cmd =
        std::string(MONOFACT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// t - 1 + t^-1; every knot in the twist family has its square
LaurentPoly sym_unit() {
    LaurentPoly p;
    p.add_term(-1, 1);
    p.add_term(0, -1);
    p.add_term(1, 1);
    return p;
}

bool alexander_reproduction(std::string& why) {
    for (long long n = -10; n <= 10; ++n)
        if (alexander(stallings_knot_seifert(n)) != sym_unit().pow(2)) {
            why = "single knot failed at twist count " + std::to_string(n);
            return false;
        }
    const std::vector<std::vector<long long>> sums = {
        {5}, {3, -2}, {1, 1, 1}, {2, -1, 3, 5}};
    for (const auto& m : sums) {
        std::vector<IntMatrix> parts;
        for (const long long v : m) parts.push_back(stallings_knot_seifert(v));
        if (alexander(connected_sum(parts)) !=
            sym_unit().pow(2 * static_cast<int>(m.size()))) {
            why = "connected sum of " + std::to_string(m.size()) + " summands failed";
            return false;
        }
    }
    return true;
}

bool base_word_squares(std::string& why) {
    for (int n : {1, 2, 3}) {  // knot genus 2, 4, 6
        const CurveCatalog cat = build_catalog(n);
        if (!product_map(word_power(base_word(cat), 2)).is_identity()) {
            why = "square not trivial at knot genus " + std::to_string(2 * n);
            return false;
        }
    }
    return true;
}

bool displacement_equations(std::string& why) {
    const CheckResult r = checks::displacement_regression(3);
    why = r.detail;
    return r.pass;
}

bool four_bases_table(std::string& why) {
    const CurveCatalog cat = build_catalog(1);
    for (std::uint32_t bits = 0; bits < 4; ++bits) {
        ParityVector pv;
        pv.n = 1;
        pv.bits = bits;
        const int ep = pv.block_p(1), eq = pv.block_q(1);
        const HumphriesGraph g = parity_basis_graph(cat, pv);
        const int chi_a = 1 ^ ep ^ eq, chi_b = 1 ^ ep;
        for (int i : {1, 2}) {
            if (g.chi(cat.cls(label_a(i))) != chi_a ||
                g.chi(cat.cls(label_b(i))) != chi_b) {
                why = "handle membership wrong at parity (" + std::to_string(ep) +
                      "," + std::to_string(eq) + ")";
                return false;
            }
        }
        if (g.chi(cat.cls("B0")) != 1 || g.chi(cat.cls("c2")) != 0 ||
            g.chi(cat.cls("d1")) != 0) {
            why = "B0/c2/d1 values wrong at parity (" + std::to_string(ep) + "," +
                  std::to_string(eq) + ")";
            return false;
        }
    }
    const std::vector<TwistParams> reps = {{{0, 0}}, {{1, 0}}, {{0, 1}}, {{1, 1}}};
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            if (distinguish(cat, reps[i], reps[j]).verdict !=
                Verdict::distinct_groups) {
                why = "pair " + std::to_string(i) + "," + std::to_string(j) +
                      " not separated";
                return false;
            }
    return true;
}

bool family_separation(std::string& why) {
    for (const auto& m :
         std::vector<std::vector<long long>>{{3, -2}, {1, 1, 1}}) {
        const FamilyReport rep = family_report(m);
        const std::size_t expected = std::size_t{1} << m.size();
        if (rep.members.size() != expected) {
            why = "member count wrong";
            return false;
        }
        if (!rep.all_distinct ||
            rep.classes != static_cast<int>(expected) ||
            rep.pairs.size() != expected * (expected - 1) / 2) {
            why = "representatives not pairwise separated";
            return false;
        }
        for (const auto& pr : rep.pairs)
            if (pr.cert.verdict != Verdict::distinct_groups) {
                why = "pair " + std::to_string(pr.left) + "," +
                      std::to_string(pr.right) + " inconclusive";
                return false;
            }
    }
    return true;
}

// every basis exercised by the two criteria above
std::vector<HumphriesGraph> criteria_bases() {
    std::vector<HumphriesGraph> out;
    const CurveCatalog one = build_catalog(1);
    for (std::uint32_t bits = 0; bits < 4; ++bits) {
        ParityVector pv;
        pv.n = 1;
        pv.bits = bits;
        out.push_back(parity_basis_graph(one, pv));
    }
    for (const auto& m : std::vector<std::vector<long long>>{{3, -2}, {1, 1, 1}}) {
        const CurveCatalog cat = build_catalog(static_cast<int>(m.size()));
        for (const auto& mem : family_report(m).members)
            out.push_back(parity_basis_graph(cat, mem.parity));
    }
    return out;
}

bool quadratic_suite(std::string& why) {
    for (const HumphriesGraph& g : criteria_bases()) {
        const QuadCheck quad = check_quadratic_refinement(g);
        if (!quad.ok) {
            why = "refinement: " + quad.detail;
            return false;
        }
        const QuadCheck transport = check_transvection_transport(g);
        if (!transport.ok) {
            why = "transport: " + transport.detail;
            return false;
        }
    }
    return true;
}

bool hurwitz_robustness(std::string& why) {
    const CurveCatalog cat = build_catalog(1);
    const std::vector<TwistParams> reps = {{{0, 0}}, {{1, 0}}, {{0, 1}}, {{1, 1}}};

    std::vector<TwistWord> words;
    std::vector<HumphriesGraph> graphs;
    for (const auto& r : reps) {
        words.push_back(surgery_word(cat, r));
        graphs.push_back(parity_basis_graph(cat, ParityVector::from_params(r)));
    }
    std::vector<const HumphriesGraph*> graph_ptrs;
    for (const auto& g : graphs) graph_ptrs.push_back(&g);

    std::vector<SymplecticMap> products;
    std::vector<GroupSignature> signatures;
    for (const auto& w : words) {
        products.push_back(product_map(w));
        signatures.push_back(group_signature(w, graph_ptrs));
    }

    std::mt19937_64 rng(default_seed);
    for (int seq = 0; seq < 100; ++seq) {
        const int r = seq % 4;
        TwistWord w = words[r];
        const int length = 1 + static_cast<int>(rng() % 50);
        for (int step = 0; step < length; ++step) {
            const int i = 1 + static_cast<int>(rng() % (w.size() - 1));
            w = (rng() & 1) ? hurwitz_move(w, i) : inverse_hurwitz_move(w, i);
        }
        if (!(product_map(w) == products[r])) {
            why = "product map moved in sequence " + std::to_string(seq);
            return false;
        }
        if (!(group_signature(w, graph_ptrs) == signatures[r])) {
            why = "orbit signature moved in sequence " + std::to_string(seq);
            return false;
        }
        // every verdict against the moved word must be what it was: the word
        // stays subordinate to its own basis and keeps a chi = 0 letter in
        // the basis of every other parity
        for (int other = 0; other < 4; ++other) {
            const bool witness = find_witness(w, graphs[other]).has_value();
            if (witness != (other != r)) {
                why = "verdict changed in sequence " + std::to_string(seq) +
                      " against parity " + std::to_string(other);
                return false;
            }
        }
    }
    return true;
}

bool count_consistency(std::string& why) {
    for (int n = 1; n <= 4; ++n) {
        const CurveCatalog cat = build_catalog(n);
        const TwistWord w = surgery_word(cat, TwistParams(n, {0, 0}));
        const FibrationData fd = fibration_data(n);
        if (w.size() != 16 * n + 24 || fd.critical_points != w.size() ||
            fd.fiber_genus != w.genus || fd.knot_genus != 2 * n) {
            why = "counts wrong at " + std::to_string(n) + " regions";
            return false;
        }
    }
    if (!(fibration_data(1) == FibrationData{2, 5, 40}) ||
        !(fibration_data(2) == FibrationData{4, 9, 56})) {
        why = "frozen fibration data mismatch";
        return false;
    }
    return true;
}

bool certificate_round_trip(std::string& why) {
    // every certificate the library emits passes the offline recheck
    const CurveCatalog cat = build_catalog(1);
    const std::vector<TwistParams> reps = {{{0, 0}}, {{1, 0}}, {{0, 1}}, {{1, 1}}};
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (i == j) continue;
            const json c = certificate_to_json(distinguish(cat, reps[i], reps[j]));
            if (!recheck_certificate(c).ok) {
                why = "fresh certificate failed recheck";
                return false;
            }
        }
    for (const auto& m : std::vector<std::vector<long long>>{{3, -2}, {1, 1, 1}})
        for (const auto& pr : family_report(m).pairs)
            if (!recheck_certificate(certificate_to_json(pr.cert)).ok) {
                why = "family certificate failed recheck";
                return false;
            }

    // three injected single-bit corruptions, each caught by the tool
    if (cli_exit("distinguish --n 1 --left 1,0 --right 0,1 --out acc_cert.json") !=
        0) {
        why = "tool could not emit a certificate";
        return false;
    }
    if (cli_exit("recheck acc_cert.json") != 0) {
        why = "tool rejected its own certificate";
        return false;
    }
    const json base = load_json_file("acc_cert.json");

    json flip = base;
    flip["left_chi"][7]["chi"] = 1 - flip["left_chi"][7]["chi"].get<int>();
    json zeroed = base;
    zeroed["witness"]["class"] = "g5:0000000000";
    json bent = base;
    {
        std::string cls = bent["basis"]["classes"][2].get<std::string>();
        cls.back() = cls.back() == '0' ? '1' : '0';
        bent["basis"]["classes"][2] = cls;
    }
    int k = 0;
    for (const json& bad : {flip, zeroed, bent}) {
        ++k;
        save_json_file("acc_cert_bad.json", bad);
        if (cli_exit("recheck acc_cert_bad.json") != 3) {
            why = "corruption " + std::to_string(k) + " not detected";
            return false;
        }
    }
    std::remove("acc_cert.json");
    std::remove("acc_cert_bad.json");
    return true;
}

struct Criterion {
    int id;
    const char* summary;
    double limit_s;  // 0 = no stated bound
    std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Alexander polynomials of the twist family and connected sums", 1.0,
         alexander_reproduction},
        {2, "squared base word is trivial on homology at knot genus 2, 4, 6", 1.0,
         base_word_squares},
        {3, "displacement equations hold for all parities at up to 3 regions", 5.0,
         displacement_equations},
        {4, "four one-region bases: membership table and pairwise separation", 1.0,
         four_bases_table},
        {5, "family reports separate all 2^n representatives", 30.0,
         family_separation},
        {6, "chi is a quadratic refinement with transport on every basis used", 0.0,
         quadratic_suite},
        {7, "product, orbit signature and verdicts survive 100 Hurwitz sequences",
         30.0, hurwitz_robustness},
        {8, "letter counts and fibration data agree up to 4 regions", 0.0,
         count_consistency},
        {9, "certificates recheck, and injected corruptions are caught", 0.0,
         certificate_round_trip},
    };

    bool all = true;
    for (const auto& c : criteria) {
        std::string why;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(why);
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ok && c.limit_s > 0 && secs > c.limit_s) {
            ok = false;
            why = "time limit exceeded";
        }
        std::printf("criterion %d %s (%.3fs) %s%s%s\n", c.id, ok ? "PASS" : "FAIL",
                    secs, c.summary, why.empty() ? "" : " - ", why.c_str());
        all = all && ok;
    }
    return all ? 0 : 1;
}
