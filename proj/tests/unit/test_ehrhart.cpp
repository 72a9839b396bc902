#include <catch2/catch_amalgamated.hpp>

#include "pavemat/ehrhart.hpp"
#include "pavemat/oracle.hpp"
#include "support/oracles.hpp"

using namespace pavemat;

namespace {

// Relaxation increment of Thm-5.5 shape: the same box-solution sum but with m
// running to t-1 only.  Test-local evaluator, independent of tilde_phi.
Int relaxation_delta_eval(const PanhandleParams& p, int t) {
    Int total = 0;
    for (int m = 0; m <= t - 1; ++m)
        total += count_box_solutions(t, p.r, m, p.s) * binomial(m + p.n - p.s - 1, m);
    return total;
}

const Polynomial kFanoPolynomial = Polynomial(std::vector<Rat>{
    Rat(1), Rat(21, 5), Rat(343, 45), Rat(63, 8), Rat(91, 18), Rat(77, 40), Rat(29, 90)});

}  // namespace

TEST_CASE("hypersimplex ehrhart polynomial") {
    for (int n = 2; n <= 8; ++n) CHECK(ehrhart_hypersimplex(1, n) == binom_affine_poly(1, n - 1, n - 1));
    CHECK(ehrhart_hypersimplex(2, 4).evaluate_integer(1) == 6);
    CHECK(ehrhart_hypersimplex(3, 7).leading_coefficient() == Rat(302, 720));
    CHECK(ehrhart_hypersimplex(0, 5) == Polynomial(Rat(1)));
    CHECK(ehrhart_hypersimplex(5, 5) == Polynomial(Rat(1)));
    for (int n = 2; n <= 9; ++n)
        for (int r = 1; r < n; ++r) {
            auto p = ehrhart_hypersimplex(r, n);
            CHECK(p.degree() == n - 1);
            CHECK(p.coefficient(0) == 1);
            CHECK(p.evaluate_integer(1) == binomial(n, r));
        }
    CHECK_THROWS_AS(ehrhart_hypersimplex(-1, 4), std::invalid_argument);
    CHECK_THROWS_AS(ehrhart_hypersimplex(5, 4), std::invalid_argument);
}

TEST_CASE("count_box_solutions") {
    CHECK(count_box_solutions(2, 1, 0, 2) == 3);  // x1+x2 = 2 in [0,2]^2
    CHECK(count_box_solutions(1, 3, 0, 3) == 1);
    for (int t = 0; t <= 4; ++t)
        for (int s = 1; s <= 5; ++s)
            for (int r = 1; r <= s; ++r)
                for (int m = 0; m <= t; ++m) {
                    if (static_cast<long long>(t) * r - m > static_cast<long long>(t) * s) {
                        CHECK(count_box_solutions(t, r, m, s) == 0);
                    } else {
                        CHECK(count_box_solutions(t, r, m, s) ==
                              testsupport::bounded_compositions(s, static_cast<long long>(t) * r - m, t));
                    }
                }
    CHECK_THROWS_AS(count_box_solutions(2, 1, 3, 2), std::invalid_argument);
}

TEST_CASE("panhandle evaluator") {
    PanhandleParams p224(2, 2, 4);
    CHECK(panhandle_ehrhart_eval(p224, 1) == 5);
    for (int n = 3; n <= 7; ++n)
        for (int s = 1; s < n; ++s)
            for (int r = 1; r <= s; ++r) CHECK(panhandle_ehrhart_eval(PanhandleParams(r, s, n), 0) == 1);
    // Pan_{r,n-1,n} is uniform: the evaluator must reproduce the hypersimplex values.
    for (int n = 3; n <= 7; ++n)
        for (int r = 1; r < n; ++r) {
            auto katzman = ehrhart_hypersimplex(r, n);
            for (int t = 0; t <= n; ++t)
                CHECK(panhandle_ehrhart_eval(PanhandleParams(r, n - 1, n), t) == katzman.evaluate_integer(t));
        }
}

TEST_CASE("panhandle ehrhart polynomial") {
    PanhandleParams p224(2, 2, 4);
    CHECK(ehrhart_panhandle(p224) ==
          Polynomial(std::vector<Rat>{Rat(1), Rat(13, 6), Rat(3, 2), Rat(1, 3)}));
    for (int n = 3; n <= 8; ++n) {
        for (int s = 1; s < n; ++s) CHECK(ehrhart_panhandle(PanhandleParams(1, s, n)) == ehrhart_hypersimplex(1, n));
    }
    for (int n = 3; n <= 8; ++n)
        for (int s = 1; s < n; ++s)
            for (int r = 1; r <= s; ++r) {
                PanhandleParams p(r, s, n);
                auto ehr = ehrhart_panhandle(p);
                CHECK(ehr.degree() == n - 1);
                CHECK(ehr.coefficient(0) == 1);
                CHECK(ehr.evaluate_integer(1) == binomial(s, r) + binomial(s, r - 1) * (n - s));
                for (int t = 0; t <= n; ++t) CHECK(ehr.evaluate_integer(t) == panhandle_ehrhart_eval(p, t));
            }
}

TEST_CASE("the two closed panhandle forms agree symbolically up to n = 12") {
    for (int n = 3; n <= 12; ++n)
        for (int s = 1; s < n; ++s)
            for (int r = 1; r <= s; ++r) {
                PanhandleParams p(r, s, n);
                REQUIRE(ehrhart_panhandle(p) == ehrhart_panhandle_via_phi(p));
            }
}

TEST_CASE("minimal matroids match Ferroni's closed form") {
    // ehr_{Pan_{r,r,n}}(t) = C(t+n-r, n-r)/C(n-1, r-1) * sum_l C(n-r-1+l, l) C(l+t, l),
    // a third independent route for the s = r case.
    for (int n = 3; n <= 10; ++n)
        for (int r = 1; r < n; ++r) {
            Polynomial sum;
            for (int l = 0; l <= r - 1; ++l)
                sum += binom_affine_poly(1, l, l) * Rat(binomial(n - r - 1 + l, l));
            Polynomial expected =
                binom_affine_poly(1, n - r, n - r) * sum * Rat(Int(1), binomial(n - 1, r - 1));
            REQUIRE(ehrhart_panhandle(PanhandleParams(r, r, n)) == expected);
        }
}

TEST_CASE("phi reduces to the minimal-matroid form when s = r") {
    for (int n = 4; n <= 9; ++n)
        for (int r = 1; r < n; ++r) {
            PanhandleParams p(r, r, n);
            Polynomial expected;
            for (int l = 0; l <= r - 1; ++l)
                expected += binom_affine_poly(1, r - 1 - l, r - 1 - l) *
                            Rat(factorial(n - 2 - l) * factorial(l) * binomial(r - 1, l));
            CHECK(phi(p) == expected);
        }
    CHECK(phi(PanhandleParams(2, 2, 4)).has_positive_coefficients());
}

TEST_CASE("tilde_phi and the relaxation increment") {
    for (int n = 3; n <= 7; ++n)
        for (int s = 1; s < n; ++s)
            for (int r = 1; r <= s; ++r) {
                PanhandleParams p(r, s, n);
                auto delta = relaxation_delta(p);
                CHECK(delta.evaluate(Rat(0)) == 0);
                for (int t = 0; t <= n; ++t) REQUIRE(delta.evaluate_integer(t) == relaxation_delta_eval(p, t));
            }
    // s = r: the increment is the minimal-matroid polynomial shifted by t -> t-1.
    for (int n = 3; n <= 8; ++n)
        for (int r = 1; r < n; ++r) {
            PanhandleParams p(r, r, n);
            CHECK(relaxation_delta(p) == ehrhart_panhandle(p).shift_argument(Rat(-1)));
        }
}

TEST_CASE("relaxation formula against the lattice oracle on explicit pairs") {
    // Relaxing the stressed hyperplane [s] of U_{r-1,s} + U_{1,n-s} yields
    // Pan_{r,s,n}; the oracle counts must move by exactly the increment.
    for (auto [r, s, n] : {std::array<int, 3>{3, 3, 4}, {2, 2, 4}, {2, 3, 5}}) {
        std::uint32_t head = (std::uint32_t{1} << s) - 1;
        std::vector<std::uint32_t> bases;
        for_each_ksubset_of(head, r - 1, [&](std::uint32_t part) {
            for (int x = s; x < n; ++x) bases.push_back(part | (std::uint32_t{1} << x));
        });
        Matroid before(n, r, bases);
        REQUIRE(before.is_stressed_hyperplane(head));
        Matroid after = before.relaxed(head);
        auto delta = relaxation_delta(PanhandleParams(r, s, n));
        for (int t = 0; t <= 4; ++t)
            CHECK(count_matroid_points(after, t) - count_matroid_points(before, t) == delta.evaluate_integer(t));
    }

    // The generalized relaxation at the *non-stressed* hyperplane {1,3,4}
    // (bases {123,124} -> add {134}) is outside the increment formula's
    // hypothesis, and the oracle shows the increment really differs.
    auto before = Matroid::from_basis_sets(4, {{1, 2, 3}, {1, 2, 4}});
    auto after = before.relaxed(elements_to_mask({1, 3, 4}, 4));
    auto delta = relaxation_delta(PanhandleParams(3, 3, 4));
    bool all_equal = true;
    for (int t = 0; t <= 4; ++t)
        if (count_matroid_points(after, t) - count_matroid_points(before, t) != delta.evaluate_integer(t))
            all_equal = false;
    CHECK_FALSE(all_equal);
}

TEST_CASE("fano identities") {
    PavingProfile fano;
    fano.r = 3;
    fano.n = 7;
    fano.hyperplanes_by_size[3] = 7;
    auto ehr = ehrhart_paving(fano);
    CHECK(ehr == kFanoPolynomial);
    // Adding the seven relaxation increments back recovers the hypersimplex.
    auto rebuilt = ehr;
    for (int i = 0; i < 7; ++i) rebuilt = ehrhart_relaxation(rebuilt, PanhandleParams(3, 3, 7));
    CHECK(rebuilt == ehrhart_hypersimplex(3, 7));
}

TEST_CASE("paving formula basics") {
    PavingProfile empty;
    empty.r = 3;
    empty.n = 7;
    CHECK(ehrhart_paving(empty) == ehrhart_hypersimplex(3, 7));
    for (int n = 4; n <= 8; ++n)
        for (int r = 2; r < n; ++r)
            for (int lambda = 0; lambda <= 3; ++lambda) {
                PavingProfile profile;
                profile.r = r;
                profile.n = n;
                if (lambda > 0) profile.hyperplanes_by_size[r] = lambda;
                auto viaProfile = ehrhart_paving(profile);
                CHECK(viaProfile == ehrhart_sparse_paving(r, n, lambda));
                CHECK(viaProfile == ehrhart_hypersimplex(r, n) -
                                        ehrhart_panhandle(PanhandleParams(r, r, n)).shift_argument(Rat(-1)) *
                                            Rat(lambda));
            }
    PavingProfile bad;
    bad.r = 3;
    bad.n = 7;
    bad.hyperplanes_by_size[2] = 1;
    CHECK_THROWS_AS(ehrhart_paving(bad), std::invalid_argument);
}

TEST_CASE("sparse paving with one circuit-hyperplane matches the oracle") {
    // U_{2,4} with {1,2} demoted to a circuit-hyperplane; the matroid is Pan_{2,2,4}.
    auto m = Matroid::from_basis_sets(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(interpolate_matroid_ehrhart(m) == ehrhart_sparse_paving(2, 4, 1));
    CHECK(ehrhart_sparse_paving(2, 4, 0) == ehrhart_hypersimplex(2, 4));
    CHECK(ehrhart_sparse_paving(3, 7, 7) == kFanoPolynomial);
}
