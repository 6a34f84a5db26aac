// Humphries graphs and the mod-2 invariant chi: adjacency from odd
// intersection, chi = |support| + internal edges (mod 2), its quadratic-
// refinement law, and the transvection transport law.  Small cases are
// frozen by hand: on the torus basis (a_1, b_1) every nonzero class has
// chi = 1; on the standard genus-2 basis a_1 + a_2 is the first chi = 0
// class.

#include <catch_amalgamated.hpp>

#include <monofact/humphries.hpp>

using namespace monofact;

namespace {
HumphriesGraph torus_graph() {
    return build_graph({"a1", "b1"}, {unit_a(1, 1), unit_b(1, 1)});
}

HumphriesGraph standard_graph(int genus) {
    std::vector<std::string> labels;
    std::vector<HomologyClass> basis;
    for (int i = 1; i <= genus; ++i) {
        labels.push_back("a" + std::to_string(i));
        basis.push_back(unit_a(genus, i));
        labels.push_back("b" + std::to_string(i));
        basis.push_back(unit_b(genus, i));
    }
    return build_graph(std::move(labels), std::move(basis));
}
}  // namespace

TEST_CASE("torus graph: one edge, all nonzero classes have chi = 1") {
    const HumphriesGraph g = torus_graph();
    REQUIRE(g.order() == 2);
    REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    REQUIRE(g.chi(zero_class(1)) == 0);
    REQUIRE(g.chi(unit_a(1, 1)) == 1);
    REQUIRE(g.chi(unit_b(1, 1)) == 1);
    REQUIRE(g.chi(unit_a(1, 1) + unit_b(1, 1)) == 1);  // 2 vertices + 1 edge
}

TEST_CASE("standard genus-2 graph separates handle sums") {
    const HumphriesGraph g = standard_graph(2);
    REQUIRE(g.edges().size() == 2);  // a_i - b_i only
    REQUIRE(g.chi(unit_a(2, 1)) == 1);
    REQUIRE(g.chi(unit_a(2, 1) + unit_a(2, 2)) == 0);       // 2 vertices, no edge
    REQUIRE(g.chi(unit_a(2, 1) + unit_b(2, 1)) == 1);       // 2 vertices + edge
    REQUIRE(g.chi(unit_a(2, 1) + unit_b(2, 1) + unit_a(2, 2) + unit_b(2, 2)) == 0);
}

TEST_CASE("chi is basis-dependent data, computed in graph coordinates") {
    // non-standard basis on genus 2; b_1 = a_1 + (a_1 + b_1) in it
    const HumphriesGraph g =
        build_graph({"u", "v", "w", "x"},
                    {unit_a(2, 1), unit_a(2, 1) + unit_b(2, 1), unit_b(2, 2),
                     unit_a(2, 2) + unit_b(2, 2)});
    REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    const F2Vec support = g.coordinates(unit_b(2, 1));
    REQUIRE(support.bit(0));
    REQUIRE(support.bit(1));
    REQUIRE(support.popcount() == 2);
    REQUIRE(g.chi(unit_b(2, 1)) == 1);  // 2 vertices + 1 edge

    const auto quad = check_quadratic_refinement(g);
    REQUIRE(quad.ok);
    const auto transport = check_transvection_transport(g);
    REQUIRE(transport.ok);
}

TEST_CASE("graph construction rejects dependent classes") {
    REQUIRE_THROWS_AS(build_graph({"x", "y"}, {unit_a(1, 1), unit_a(1, 1)}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(build_graph({"x"}, {unit_a(1, 1)}), std::invalid_argument);
}

TEST_CASE("chi table enumerates the small cases exactly") {
    const HumphriesGraph g = standard_graph(2);
    const auto table = chi_table(g);
    REQUIRE(table.size() == 16);
    REQUIRE(table[0] == 0);
    REQUIRE(table[1] == 1);          // a_1
    REQUIRE(table[0b0101] == 0);     // a_1 + a_2
    REQUIRE(table[0b0011] == 1);     // a_1 + b_1
}

TEST_CASE("twists along chi = 1 classes preserve chi, chi = 0 classes break it") {
    const HumphriesGraph g = standard_graph(2);
    REQUIRE(preserves_chi(g, transvection_map(unit_a(2, 1))));
    REQUIRE(preserves_chi(g, transvection_map(unit_a(2, 1) + unit_b(2, 1))));
    REQUIRE(preserves_chi(g, SymplecticMap::identity(2)));

    const HomologyClass bad = unit_a(2, 1) + unit_a(2, 2);  // chi = 0
    const auto violation = chi_violation(g, transvection_map(bad));
    REQUIRE(violation.has_value());
    // transport law: chi flips exactly on classes meeting the chi = 0 core
    REQUIRE(pairing(*violation, bad) == 1);
}

TEST_CASE("membership obstruction follows chi") {
    const HumphriesGraph g = standard_graph(2);
    REQUIRE(twist_in_group_obstruction(g, unit_a(2, 1)) ==
            TwistMembership::member_possible);
    REQUIRE(twist_in_group_obstruction(g, unit_a(2, 1) + unit_a(2, 2)) ==
            TwistMembership::excluded);
    REQUIRE_THROWS_AS(twist_in_group_obstruction(g, zero_class(2)),
                      std::invalid_argument);
}

TEST_CASE("quadratic refinement holds exhaustively on small graphs") {
    for (int genus : {1, 2, 3}) {
        const HumphriesGraph g = standard_graph(genus);
        const auto quad = check_quadratic_refinement(g);
        REQUIRE(quad.ok);
        REQUIRE(quad.checked ==
                (std::uint64_t{1} << (2 * genus)) * (2 * genus));
        const auto transport = check_transvection_transport(g);
        REQUIRE(transport.ok);
    }
}

TEST_CASE("sampled checks agree on a large graph") {
    // genus 11 forces the sampled paths (dimension 22 > 20)
    const HumphriesGraph g = standard_graph(11);
    const auto quad = check_quadratic_refinement(g, 2000, default_seed);
    REQUIRE(quad.ok);
    REQUIRE(quad.checked == 2000);
    const auto transport = check_transvection_transport(g, 2000, default_seed);
    REQUIRE(transport.ok);
    REQUIRE(preserves_chi(g, transvection_map(unit_a(11, 4)), 2000));
    REQUIRE(chi_violation(g, transvection_map(unit_a(11, 4) + unit_a(11, 7)), 2000)
                .has_value());
}

TEST_CASE("seeded sampling is reproducible") {
    std::mt19937_64 r1(default_seed), r2(default_seed);
    for (int i = 0; i < 50; ++i)
        REQUIRE(detail::random_class(22, r1) == detail::random_class(22, r2));
    REQUIRE(detail::class_from_counter(4, 0b1010).bit(1));
    REQUIRE_FALSE(detail::class_from_counter(4, 0b1010).bit(0));
}
