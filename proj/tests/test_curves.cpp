// Curve catalog: standard handle classes, the chain classes of the base
// factorization, and the solved twisting classes c/d of each region.
// Frozen values were computed by hand on the genus-5 fiber (one twist
// region): chains B_1..B_4 span handles 1..4 symmetrically around the
// middle handle a_3, and the solver must recover c_2 = b_1 + b_2 and
// d_1 = a_1 + a_2 as the only admissible pair.

#include <catch_amalgamated.hpp>

#include <monofact/curves.hpp>

using namespace monofact;

namespace {
HomologyClass from_labels(const std::string& body, int genus) {
    return parse_class(body + "@" + std::to_string(genus));
}
}  // namespace

TEST_CASE("single-region catalog matches the hand computation") {
    const CurveCatalog cat = build_catalog(1);
    REQUIRE(cat.summands == 1);
    REQUIRE(cat.knot_genus == 2);
    REQUIRE(cat.ambient_genus == 5);
    REQUIRE(cat.classes.size() == 23);

    REQUIRE(cat.cls("B0") == from_labels("a1+a2+a3+a4+a5", 5));
    REQUIRE(cat.cls("B1") == from_labels("a1+b1+a2+a3+a4+a5+b5", 5));
    REQUIRE(cat.cls("B2") == from_labels("b1+a2+a3+a4+b5", 5));
    REQUIRE(cat.cls("B3") == from_labels("a2+b2+a3+a4+b4", 5));
    REQUIRE(cat.cls("B4") == from_labels("b2+a3+b4", 5));
    REQUIRE(cat.cls("B5") == from_labels("a3", 5));
    REQUIRE(cat.cls("e1") == from_labels("a1+a3", 5));
    REQUIRE(cat.cls("e2") == from_labels("a2+a3", 5));
    REQUIRE(cat.cls("f1") == from_labels("b1+b3", 5));
    REQUIRE(cat.cls("f2") == from_labels("b2+b3", 5));
    REQUIRE(cat.cls("bprime") == from_labels("b3", 5));
    REQUIRE(cat.cls("c2") == from_labels("b1+b2", 5));
    REQUIRE(cat.cls("d1") == from_labels("a1+a2", 5));

    REQUIRE(cat.provenance.at("a1") == Provenance::standard);
    REQUIRE(cat.provenance.at("B1") == Provenance::relation);
    REQUIRE(cat.provenance.at("c2") == Provenance::solved);
    REQUIRE(cat.provenance.at("bprime") == Provenance::configured);
}

TEST_CASE("chain classes satisfy the defining relations at any size") {
    for (int n = 1; n <= 3; ++n) {
        const CurveCatalog cat = build_catalog(n);
        const int g = cat.knot_genus, N = cat.ambient_genus;

        // odd chain: all of a_i..a_{2g+2-i} plus the two boundary b's
        for (int i = 1; i <= g; ++i) {
            HomologyClass want = zero_class(N);
            for (int k = i; k <= 2 * g + 2 - i; ++k) want ^= unit_a(N, k);
            want ^= unit_b(N, i) + unit_b(N, 2 * g + 2 - i);
            REQUIRE(cat.cls(label_B(2 * i - 1)) == want);
            REQUIRE(cat.cls(label_B(2 * i)) ==
                    want + unit_a(N, i) + unit_a(N, 2 * g + 2 - i));
        }
        REQUIRE(cat.cls(label_B(2 * g + 1)) == unit_a(N, g + 1));

        // B_0 closes the chain sum
        HomologyClass b0 = unit_a(N, g + 1);
        for (int j = 1; j <= 2 * g; ++j) b0 ^= cat.cls(label_B(j));
        REQUIRE(cat.cls(label_B(0)) == b0);

        REQUIRE(validate_catalog(cat).empty());
    }
}

TEST_CASE("each region has exactly one admissible twisting pair") {
    for (int n = 1; n <= 3; ++n) {
        const CurveCatalog cat = build_catalog(n);
        const int N = cat.ambient_genus;
        for (int j = 1; j <= n; ++j) {
            const auto cands = stallings_candidates(cat, j);
            REQUIRE(cands.size() == 1);
            REQUIRE(cands.front() ==
                    unit_b(N, 2 * j - 1) + unit_b(N, 2 * j));  // c = b + b
            REQUIRE(cat.cls(label_c(j)) == cands.front());
            REQUIRE(cat.cls(label_d(j)) ==
                    unit_a(N, 2 * j - 1) + unit_a(N, 2 * j));  // d = a + a
            // the partner is the image of c under the region's handle twists
            REQUIRE(block_twist_partner(cat, j, cands.front()) ==
                    cat.cls(label_d(j)));
            // c and d meet evenly, as disjoint surgery curves must
            REQUIRE(pairing(cat.cls(label_c(j)), cat.cls(label_d(j))) == 0);
        }
    }
}

TEST_CASE("catalog fingerprint is stable") {
    REQUIRE(catalog_fingerprint(build_catalog(1)) == "489cb0985b3a7700");
    REQUIRE(catalog_fingerprint(build_catalog(1)) ==
            catalog_fingerprint(build_catalog(1)));
    REQUIRE(catalog_fingerprint(build_catalog(2)) !=
            catalog_fingerprint(build_catalog(1)));
}

TEST_CASE("validation reports tampering") {
    CurveCatalog cat = build_catalog(1);
    REQUIRE(validate_catalog(cat).empty());
    cat.classes["c2"] = cat.cls("c2") + unit_a(5, 5);
    REQUIRE_FALSE(validate_catalog(cat).empty());
}

TEST_CASE("catalog bounds and label lookup") {
    REQUIRE_THROWS_AS(build_catalog(0), std::invalid_argument);
    REQUIRE_THROWS_AS(build_catalog(16), std::invalid_argument);
    const CurveCatalog cat = build_catalog(1);
    REQUIRE(cat.has("B0"));
    REQUIRE_FALSE(cat.has("B99"));
    REQUIRE_THROWS_AS(cat.cls("B99"), std::invalid_argument);
    REQUIRE(label_c(2) == "c4");
    REQUIRE(label_d(2) == "d3");
}
