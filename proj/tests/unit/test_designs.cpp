#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "pavemat/designs.hpp"
#include "pavemat/oracle.hpp"

using namespace pavemat;

TEST_CASE("steiner block counts") {
    CHECK(steiner_block_count(2, 3, 7) == 7);
    CHECK(steiner_block_count(3, 4, 8) == 14);
    CHECK(steiner_block_count(2, 3, 9) == 12);
    CHECK_THROWS_AS(steiner_block_count(2, 3, 8), std::invalid_argument);  // 28/3
    CHECK_THROWS_AS(steiner_block_count(4, 3, 8), std::invalid_argument);
}

TEST_CASE("steiner validation") {
    CHECK(validate_steiner(fano_plane()));

    SteinerSystem repeated = fano_plane();
    (*repeated.blocks)[1] = {1, 2, 5};  // pair {1,2} now appears twice
    CHECK_FALSE(validate_steiner(repeated));

    SteinerSystem empty;
    empty.t = 2;
    empty.k = 3;
    empty.n = 7;
    empty.blocks = std::vector<std::vector<int>>{};
    CHECK_FALSE(validate_steiner(empty));

    SteinerSystem absent;
    absent.t = 2;
    absent.k = 3;
    absent.n = 7;
    CHECK_THROWS_AS(validate_steiner(absent), std::invalid_argument);
}

TEST_CASE("steiner profiles") {
    auto p = steiner_to_profile(2, 3, 7);
    CHECK(p.r == 3);
    CHECK(p.n == 7);
    CHECK(p.hyperplanes_by_size == std::map<int, Int>{{3, 7}});

    auto p8 = steiner_to_profile(3, 4, 8);
    CHECK(p8.r == 4);
    CHECK(p8.hyperplanes_by_size == std::map<int, Int>{{4, 14}});

    for (int q = 2; q <= 4; ++q) {
        auto plane = steiner_to_profile(2, q + 1, q * q + q + 1);
        CHECK(plane.r == 3);
        CHECK(plane.hyperplanes_by_size == std::map<int, Int>{{q + 1, Int(q) * q + q + 1}});
    }
}

TEST_CASE("steiner and plane ehrhart polynomials") {
    const Polynomial fano_poly(std::vector<Rat>{Rat(1), Rat(21, 5), Rat(343, 45), Rat(63, 8), Rat(91, 18),
                                                Rat(77, 40), Rat(29, 90)});
    CHECK(ehrhart_projective_plane(2) == fano_poly);
    CHECK(ehrhart_projective_plane(2) == ehrhart_steiner(2, 3, 7));
    CHECK(ehrhart_steiner(2, 3, 7).evaluate_integer(1) == 28);  // C(7,3) - 7 bases
    CHECK(ehrhart_steiner(3, 4, 8) == ehrhart_paving(steiner_to_profile(3, 4, 8)));
    CHECK_THROWS_AS(ehrhart_projective_plane(1), std::invalid_argument);
}

TEST_CASE("steiner and plane volumes") {
    CHECK(volume_projective_plane(2) == 232);
    for (int q = 2; q <= 4; ++q) {
        int n = q * q + q + 1;
        Rat lead = ehrhart_projective_plane(q).coefficient(n - 1) * Rat(factorial(n - 1));
        REQUIRE(denominator(lead) == 1);
        CHECK(numerator(lead) == volume_projective_plane(q));
    }
    Rat lead8 = ehrhart_steiner(3, 4, 8).coefficient(7) * Rat(factorial(7));
    CHECK(numerator(lead8) == volume_steiner(3, 4, 8));
    // Degenerate empty correction: S(t,t,n) blocks are the t-sets themselves,
    // the matroid is uniform, and the volume is Eulerian.
    CHECK(volume_steiner(2, 2, 6) == eulerian(5, 2));
}

TEST_CASE("fano plane object") {
    auto fano = fano_plane();
    CHECK(fano.blocks->size() == 7);
    CHECK(validate_steiner(fano));
    auto m = steiner_matroid(fano);
    CHECK(m.is_paving());
    int stressed = 0;
    for (std::uint32_t h : m.hyperplanes())
        if (m.is_stressed_hyperplane(h)) ++stressed;
    CHECK(stressed == 7);
    CHECK(interpolate_matroid_ehrhart(m) == ehrhart_projective_plane(2));
    Rat lead = interpolate_matroid_ehrhart(m).leading_coefficient() * Rat(factorial(6));
    CHECK(numerator(lead) == 232);
}

TEST_CASE("ehrhart data depends only on the design parameters") {
    auto fano = fano_plane();
    // Relabel the points by an arbitrary permutation and re-interpolate.
    std::vector<int> perm = {3, 7, 1, 5, 2, 6, 4};  // image of 1..7
    SteinerSystem relabeled = fano;
    for (auto& block : *relabeled.blocks) {
        for (int& x : block) x = perm[static_cast<std::size_t>(x - 1)];
        std::sort(block.begin(), block.end());
    }
    CHECK(validate_steiner(relabeled));
    auto m1 = steiner_matroid(fano);
    auto m2 = steiner_matroid(relabeled);
    CHECK(interpolate_matroid_ehrhart(m1) == interpolate_matroid_ehrhart(m2));
}

TEST_CASE("explicit S(3,4,8) matches the parameter formula") {
    // Doubling construction: Fano lines extended by the new point, plus the
    // complements of the Fano lines inside [7].
    SteinerSystem sqs;
    sqs.t = 3;
    sqs.k = 4;
    sqs.n = 8;
    std::vector<std::vector<int>> blocks;
    auto plane = fano_plane();
    for (const auto& line : *plane.blocks) {
        std::vector<int> extended = line;
        extended.push_back(8);
        blocks.push_back(extended);
        std::vector<int> complement;
        for (int x = 1; x <= 7; ++x)
            if (std::find(line.begin(), line.end(), x) == line.end()) complement.push_back(x);
        blocks.push_back(complement);
    }
    sqs.blocks = blocks;
    REQUIRE(validate_steiner(sqs));
    REQUIRE(Int(blocks.size()) == steiner_block_count(3, 4, 8));

    auto m = steiner_matroid(sqs);
    CHECK(m.is_paving());
    CHECK(paving_profile(m) == steiner_to_profile(3, 4, 8));

    // The interpolation needs dilations up to dim = 7; raise the guards for it.
    auto saved = oracle_guards();
    oracle_guards().matroid_max_t = 7;
    CHECK(interpolate_matroid_ehrhart(m) == ehrhart_steiner(3, 4, 8));
    oracle_guards() = saved;
}

TEST_CASE("steiner json round-trip") {
    auto fano = fano_plane();
    auto j = fano.to_json();
    auto back = SteinerSystem::from_json(j);
    CHECK(back.t == 2);
    CHECK(back.k == 3);
    CHECK(back.n == 7);
    CHECK(back.blocks == fano.blocks);
    CHECK_THROWS_AS(SteinerSystem::from_json(nlohmann::json::parse(R"({"t":2,"k":3})")), std::invalid_argument);
}
