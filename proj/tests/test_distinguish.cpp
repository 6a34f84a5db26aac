// Parity vectors, parity-adapted bases, chi tables of factorizations,
// witness search and the separation verdicts.  Frozen facts, all checked
// by hand on the one-region genus-5 fiber: the basis adapted to parity
// (0,0) is (B_1..B_4, b_3, a_3, a_1, a_2, b_1, b_2); examined in that
// basis, the word with parity (1,0) first fails chi at its 22nd letter,
// the image of B_1.

#include <catch_amalgamated.hpp>

#include <monofact/checks.hpp>
#include <monofact/distinguish.hpp>

using namespace monofact;

TEST_CASE("parity vectors reduce full twist counts mod 2") {
    const ParityVector pv = ParityVector::from_params({{3, -2}, {-1, 4}});
    REQUIRE(pv.n == 2);
    REQUIRE(pv.block_p(1) == 1);
    REQUIRE(pv.block_q(1) == 0);
    REQUIRE(pv.block_p(2) == 1);  // negative odd counts still reduce to 1
    REQUIRE(pv.block_q(2) == 0);
    REQUIRE(pv.to_vector() == std::vector<int>{1, 0, 1, 0});
    REQUIRE(pv == ParityVector::from_params({{1, 0}, {1, 0}}));
    REQUIRE_THROWS_AS(pv.eps(5), std::out_of_range);
}

TEST_CASE("parity bases swap handle curves for their e/f companions") {
    const CurveCatalog cat = build_catalog(1);
    const auto labels_of = [&](std::uint32_t bits) {
        ParityVector pv;
        pv.n = 1;
        pv.bits = bits;
        std::vector<std::string> out;
        for (const auto& [label, cls] : parity_basis(cat, pv)) out.push_back(label);
        return out;
    };
    using V = std::vector<std::string>;
    REQUIRE(labels_of(0b00) ==
            V{"B1", "B2", "B3", "B4", "b3", "a3", "a1", "a2", "b1", "b2"});
    REQUIRE(labels_of(0b01) ==
            V{"B1", "B2", "B3", "B4", "b3", "a3", "e1", "e2", "f1", "f2"});
    REQUIRE(labels_of(0b10) ==
            V{"B1", "B2", "B3", "B4", "b3", "a3", "e1", "e2", "b1", "b2"});
    REQUIRE(labels_of(0b11) ==
            V{"B1", "B2", "B3", "B4", "b3", "a3", "a1", "a2", "f1", "f2"});

    for (std::uint32_t bits = 0; bits < 4; ++bits) {
        ParityVector pv;
        pv.n = 1;
        pv.bits = bits;
        const HumphriesGraph g = parity_basis_graph(cat, pv);
        REQUIRE(g.order() == 10);
        REQUIRE(g.genus() == 5);
    }
}

TEST_CASE("every factorization is subordinate to its own parity basis") {
    for (int n : {1, 2}) {
        const CurveCatalog cat = build_catalog(n);
        for (std::uint32_t bits = 0; bits < (1u << (2 * n)); ++bits) {
            ParityVector pv;
            pv.n = n;
            pv.bits = bits;
            TwistParams params;
            for (int j = 1; j <= n; ++j)
                params.emplace_back(pv.block_p(j), pv.block_q(j));
            const HumphriesGraph g = parity_basis_graph(cat, pv);
            const ChiTable t = subordinate_table(surgery_word(cat, params), g);
            REQUIRE(t.all_one);
            REQUIRE(t.entries.size() == std::size_t(16 * n + 24));
        }
    }
}

TEST_CASE("witness search lands on the first parity difference") {
    const CurveCatalog cat = build_catalog(1);
    ParityVector left;
    left.n = 1;  // (0,0)
    const HumphriesGraph g = parity_basis_graph(cat, left);

    const auto w = find_witness(surgery_word(cat, {{1, 0}}), g);
    REQUIRE(w.has_value());
    REQUIRE(w->position == 22);
    REQUIRE(w->letter_label == "Phi(B1)");
    REQUIRE(pairing(w->letter_class, w->vertex_class) == 1);
    REQUIRE(g.chi(w->letter_class) == 0);

    // same parity on both sides: no chi = 0 letter exists
    REQUIRE_FALSE(find_witness(surgery_word(cat, {{2, 0}}), g).has_value());
}

TEST_CASE("verdicts separate different parities and nothing else") {
    const CurveCatalog cat = build_catalog(1);

    const Certificate yes = distinguish(cat, {{1, 0}}, {{0, 1}});
    REQUIRE(yes.verdict == Verdict::distinct_groups);
    REQUIRE(yes.witness.has_value());
    REQUIRE(yes.summands == 1);
    REQUIRE(yes.catalog_hash == "489cb0985b3a7700");
    REQUIRE(yes.basis_labels.size() == 10);
    REQUIRE(yes.left_table.all_one);

    const Certificate no = distinguish(cat, {{2, 0}}, {{0, 0}});
    REQUIRE(no.verdict == Verdict::inconclusive);
    REQUIRE_FALSE(no.witness.has_value());
    REQUIRE_FALSE(no.note.empty());

    REQUIRE_THROWS_AS(distinguish(cat, {{1, 0}, {0, 0}}, {{0, 1}}),
                      std::invalid_argument);
}

TEST_CASE("all six one-region parity pairs separate") {
    const CurveCatalog cat = build_catalog(1);
    const std::vector<TwistParams> reps = {
        {{0, 0}}, {{1, 0}}, {{0, 1}}, {{1, 1}}};
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const Certificate c = distinguish(cat, reps[i], reps[j]);
            REQUIRE(c.verdict == Verdict::distinct_groups);
        }
}

TEST_CASE("family reports cover all parity representatives") {
    const FamilyReport rep = family_report({3, -2});
    REQUIRE(rep.summands == 2);
    REQUIRE(rep.members.size() == 4);
    REQUIRE(rep.members[0].params == TwistParams{{3, 0}, {-2, 0}});
    REQUIRE(rep.members[1].params == TwistParams{{2, 1}, {-2, 0}});
    REQUIRE(rep.members[2].params == TwistParams{{3, 0}, {-3, 1}});
    REQUIRE(rep.members[3].params == TwistParams{{2, 1}, {-3, 1}});
    REQUIRE(rep.pairs.size() == 6);
    for (const auto& pr : rep.pairs)
        REQUIRE(pr.cert.verdict == Verdict::distinct_groups);
    REQUIRE(rep.classes == 4);
    REQUIRE(rep.all_distinct);

    REQUIRE_THROWS_AS(family_report({}), std::invalid_argument);
}

TEST_CASE("chi conditions force a unique basis-dependent pattern") {
    for (int n : {1, 2}) {
        for (std::uint32_t bits = 0; bits < (1u << (2 * n)); ++bits) {
            ParityVector pv;
            pv.n = n;
            pv.bits = bits;
            const AffineSolution sol = solve_affine(chi_constraint_system(n, pv));
            REQUIRE(sol.unique());
            REQUIRE(*sol.least == expected_chi_pattern(pv));
        }
    }
}

TEST_CASE("witness labels follow the first differing region") {
    ParityVector a, b;
    a.n = b.n = 2;
    auto set = [](ParityVector& pv, int e1, int e2, int e3, int e4) {
        pv.bits = std::uint32_t(e1) | (e2 << 1) | (e3 << 2) | (e4 << 3);
    };
    set(a, 0, 0, 0, 0);
    set(b, 1, 1, 0, 0);  // both parities differ in region 1
    REQUIRE(checks::expected_witness_label(a, b) == "Phi(B2)");
    set(b, 0, 1, 0, 0);  // only the second twist differs
    REQUIRE(checks::expected_witness_label(a, b) == "Phi(B1)");
    set(b, 0, 0, 1, 0);  // first difference in region 2
    REQUIRE(checks::expected_witness_label(a, b) == "Phi(B5)");
    REQUIRE(checks::expected_witness_label(a, a).empty());
}
