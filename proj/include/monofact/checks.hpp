#pragma once
// Internal consistency suite behind the `verify` subcommand: catalog
// validation, base-word identities, displacement-equation regression over
// all twist parities, the membership/witness table at one twist region,
// chi-constraint uniqueness, and the quadratic-refinement laws.

#include <cstdint>
#include <string>
#include <vector>

#include "monofact/curves.hpp"
#include "monofact/distinguish.hpp"
#include "monofact/f2.hpp"
#include "monofact/humphries.hpp"
#include "monofact/words.hpp"

namespace monofact {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace checks {

inline ParityVector parity_from_bits(int n, std::uint32_t bits) {
    ParityVector pv;
    pv.n = n;
    pv.bits = bits;
    return pv;
}

// representative twist parameters realizing a parity vector
inline TwistParams params_for_parity(const ParityVector& pv) {
    TwistParams params;
    for (int j = 1; j <= pv.n; ++j)
        params.emplace_back(pv.block_p(j), pv.block_q(j));
    return params;
}

// label of the image letter forced to chi = 0 by the first parity difference
inline std::string expected_witness_label(const ParityVector& left,
                                          const ParityVector& right) {
    for (int j = 1; j <= left.n; ++j) {
        const int dp = left.block_p(j) ^ right.block_p(j);
        const int dq = left.block_q(j) ^ right.block_q(j);
        if (dp == 0 && dq == 0) continue;
        if (dp == 1 && dq == 1) return "Phi(" + label_B(4 * (j - 1) + 2) + ")";
        return "Phi(" + label_B(4 * (j - 1) + 1) + ")";
    }
    return "";
}

inline CheckResult catalog_integrity(int max_n = 3) {
    CheckResult res{"catalog integrity and unique twisting classes", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        const CurveCatalog cat = build_catalog(n);
        const auto bad = validate_catalog(cat);
        if (!bad.empty()) {
            res.pass = false;
            res.detail = "n=" + std::to_string(n) + ": " + bad.front();
            return res;
        }
        for (int j = 1; j <= n; ++j) {
            const auto cands = stallings_candidates(cat, j);
            if (cands.size() != 1) {
                res.pass = false;
                res.detail = "n=" + std::to_string(n) + " block " + std::to_string(j) +
                             ": " + std::to_string(cands.size()) + " admissible classes";
                return res;
            }
        }
    }
    return res;
}

inline CheckResult base_word_identity(int max_n = 3) {
    CheckResult res{"squared base word acts trivially on homology", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        const CurveCatalog cat = build_catalog(n);
        const TwistWord eta = base_word(cat);
        if (eta.size() != 2 * cat.knot_genus + 6) {
            res.pass = false;
            res.detail = "n=" + std::to_string(n) + ": base word has " +
                         std::to_string(eta.size()) + " letters";
            return res;
        }
        if (!product_map(word_power(eta, 2)).is_identity()) {
            res.pass = false;
            res.detail = "n=" + std::to_string(n) + ": squared base word is not the identity";
            return res;
        }
    }
    return res;
}

// The knot monodromy assembled from transvections must displace each chain
// class by exactly the catalogued pattern, for every parity vector.
inline CheckResult displacement_regression(int max_n = 3) {
    CheckResult res{"displacement equations hold at every parity", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        const CurveCatalog cat = build_catalog(n);
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << (2 * n)); ++bits) {
            const ParityVector pv = parity_from_bits(n, bits);
            const SymplecticMap phi = knot_monodromy(cat, params_for_parity(pv));
            // B_0 accumulates every region's handle displacement
            HomologyClass want0 = cat.cls(label_B(0));
            for (int j = 1; j <= n; ++j)
                want0 ^= cat.cls(label_a(2 * j - 1)) + cat.cls(label_a(2 * j)) +
                         cat.cls(label_b(2 * j - 1)) + cat.cls(label_b(2 * j));
            if (phi.apply(cat.cls(label_B(0))) != want0) {
                res.pass = false;
                res.detail = "n=" + std::to_string(n) + " parity " + std::to_string(bits) +
                             ": B0 displacement wrong";
                return res;
            }
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= 4; ++k) {
                    const std::string lbl = label_B(4 * (j - 1) + k);
                    HomologyClass want =
                        cat.cls(lbl) +
                        detail::block_displacement(cat, j, k, cat.cls(label_c(j)),
                                                   cat.cls(label_d(j)), pv.block_p(j),
                                                   pv.block_q(j));
                    // later regions move these chain classes by their handle
                    // curves as well, with no c/d contribution
                    for (int i = j + 1; i <= n; ++i)
                        want ^= cat.cls(label_a(2 * i - 1)) + cat.cls(label_a(2 * i)) +
                                cat.cls(label_b(2 * i - 1)) + cat.cls(label_b(2 * i));
                    if (phi.apply(cat.cls(lbl)) != want) {
                        res.pass = false;
                        res.detail = "n=" + std::to_string(n) + " parity " +
                                     std::to_string(bits) + ": " + lbl +
                                     " displacement wrong";
                        return res;
                    }
                }
            // the top chain class is the middle handle curve and must be fixed
            const std::string top = label_B(2 * cat.knot_genus + 1);
            if (phi.apply(cat.cls(top)) != cat.cls(top)) {
                res.pass = false;
                res.detail = "n=" + std::to_string(n) + " parity " + std::to_string(bits) +
                             ": " + top + " moved";
                return res;
            }
        }
    }
    return res;
}

// subordination of the matching word plus the forced chi values of the
// handle curves, for every parity vector
inline CheckResult parity_basis_suite(int max_n = 3) {
    CheckResult res{"parity bases: subordination and forced chi pattern", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        const CurveCatalog cat = build_catalog(n);
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << (2 * n)); ++bits) {
            const ParityVector pv = parity_from_bits(n, bits);
            const HumphriesGraph graph = parity_basis_graph(cat, pv);
            const TwistWord w = surgery_word(cat, params_for_parity(pv));
            if (!subordinate_table(w, graph).all_one) {
                res.pass = false;
                res.detail = "n=" + std::to_string(n) + " parity " + std::to_string(bits) +
                             ": word not subordinate to its own basis";
                return res;
            }
            const F2Vec pattern = expected_chi_pattern(pv);
            for (int i = 1; i <= cat.knot_genus; ++i) {
                const int want_a = pattern.bit(2 * (i - 1)) ? 1 : 0;
                const int want_b = pattern.bit(2 * (i - 1) + 1) ? 1 : 0;
                if (graph.chi(cat.cls(label_a(i))) != want_a ||
                    graph.chi(cat.cls(label_b(i))) != want_b) {
                    res.pass = false;
                    res.detail = "n=" + std::to_string(n) + " parity " +
                                 std::to_string(bits) + ": handle curve chi differs from pattern";
                    return res;
                }
            }
            const auto sol = solve_affine(chi_constraint_system(n, pv));
            if (!sol.unique() || *sol.least != pattern) {
                res.pass = false;
                res.detail = "n=" + std::to_string(n) + " parity " + std::to_string(bits) +
                             ": chi constraint system not uniquely solved by the pattern";
                return res;
            }
        }
    }
    return res;
}

// single-region membership table: chi of B_0, c, d in all four bases, and
// the witness letter forced by each parity difference
inline CheckResult membership_table() {
    CheckResult res{"single-region table: chi values and witness selection", true, ""};
    const CurveCatalog cat = build_catalog(1);
    std::vector<HumphriesGraph> graphs;
    for (std::uint32_t bits = 0; bits < 4; ++bits)
        graphs.push_back(parity_basis_graph(cat, parity_from_bits(1, bits)));
    for (std::uint32_t bits = 0; bits < 4; ++bits) {
        const auto& g = graphs[bits];
        if (g.chi(cat.cls("B0")) != 1) {
            res.pass = false;
            res.detail = "chi(B0) != 1 in basis " + std::to_string(bits);
            return res;
        }
        if (g.chi(cat.cls("c2")) != 0 || g.chi(cat.cls("d1")) != 0) {
            res.pass = false;
            res.detail = "twisting class has chi != 0 in basis " + std::to_string(bits);
            return res;
        }
    }
    for (std::uint32_t lb = 0; lb < 4; ++lb)
        for (std::uint32_t rb = 0; rb < 4; ++rb) {
            if (lb == rb) continue;
            const ParityVector lpv = parity_from_bits(1, lb), rpv = parity_from_bits(1, rb);
            const auto wit =
                find_witness(surgery_word(cat, params_for_parity(rpv)), graphs[lb]);
            const std::string want = expected_witness_label(lpv, rpv);
            if (!wit || wit->letter_label != want) {
                res.pass = false;
                res.detail = "bases " + std::to_string(lb) + "/" + std::to_string(rb) +
                             ": witness is " + (wit ? wit->letter_label : "absent") +
                             ", expected " + want;
                return res;
            }
        }
    return res;
}

// conjugate parameter pairs give the same homology monodromy up to the
// stored twist conjugation
inline CheckResult conjugacy_identities() {
    CheckResult res{"monodromy conjugation identity for split twist counts", true, ""};
    const CurveCatalog cat = build_catalog(1);
    for (long long n = -3; n <= 3; ++n)
        for (long long q = -3; q <= 3; ++q)
            if (!conjugacy_check(cat, n, n - q, q)) {
                res.pass = false;
                res.detail = "failed at n=" + std::to_string(n) + " q=" + std::to_string(q);
                return res;
            }
    return res;
}

// quadratic refinement and transvection transport over the parity bases
inline CheckResult quadratic_suite(int max_n = 2, std::uint64_t seed = default_seed) {
    CheckResult res{"chi is a quadratic refinement with the transport law", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        const CurveCatalog cat = build_catalog(n);
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << (2 * n)); ++bits) {
            const HumphriesGraph g = parity_basis_graph(cat, parity_from_bits(n, bits));
            const auto quad = check_quadratic_refinement(g, 20000, seed);
            if (!quad.ok) {
                res.pass = false;
                res.detail = "n=" + std::to_string(n) + " parity " + std::to_string(bits) +
                             ": " + quad.detail;
                return res;
            }
            const auto trans = check_transvection_transport(g, 20000, seed);
            if (!trans.ok) {
                res.pass = false;
                res.detail = "n=" + std::to_string(n) + " parity " + std::to_string(bits) +
                             ": " + trans.detail;
                return res;
            }
        }
    }
    return res;
}

}  // namespace checks

// the full internal suite, in a fixed order
inline std::vector<CheckResult> run_verify_suite(std::uint64_t seed = default_seed) {
    std::vector<CheckResult> out;
    out.push_back(checks::catalog_integrity());
    out.push_back(checks::base_word_identity());
    out.push_back(checks::displacement_regression());
    out.push_back(checks::parity_basis_suite());
    out.push_back(checks::membership_table());
    out.push_back(checks::conjugacy_identities());
    out.push_back(checks::quadratic_suite(2, seed));
    return out;
}

}  // namespace monofact
