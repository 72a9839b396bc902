#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pavemat/polynomial.hpp"

using namespace pavemat;

namespace {
Polynomial poly(std::initializer_list<int> coeffs) {
    std::vector<Rat> c;
    for (int v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}
}  // namespace

TEST_CASE("degree and trimming") {
    CHECK_FALSE(Polynomial().degree().has_value());
    CHECK(Polynomial(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).degree() == 0);
    CHECK(poly({0, 0, 1}).degree() == 2);
    CHECK(poly({1, -1}) - poly({1, -1}) == Polynomial());
}

TEST_CASE("ring operations") {
    Polynomial t = Polynomial::variable();
    CHECK((t + Polynomial(Rat(1))) * (t - Polynomial(Rat(1))) == poly({-1, 0, 1}));
    CHECK((t * t).shift_argument(Rat(-1)) == poly({1, -2, 1}));
    CHECK(poly({1, 0, 1}).evaluate(Rat(3, 2)) == Rat(13, 4));
    CHECK(poly({1, 2}).evaluate_integer(3) == 7);
    CHECK_THROWS_AS((poly({1, 1}) * Rat(1, 2)).evaluate_integer(0), std::domain_error);
}

TEST_CASE("binom_affine_poly") {
    CHECK(binom_affine_poly(1, 0, 2) == Polynomial(std::vector<Rat>{Rat(0), Rat(-1, 2), Rat(1, 2)}));
    CHECK(binom_affine_poly(2, 1, 2) == poly({0, 1, 2}));
    CHECK(binom_affine_poly(5, -3, 0) == Polynomial(Rat(1)));
    CHECK(binom_affine_poly(0, 4, 2) == Polynomial(Rat(6)));  // constant C(4,2)
}

TEST_CASE("binom_affine_poly agrees with binomial at integer points") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        int a = static_cast<int>(rng() % 7);
        int b = static_cast<int>(rng() % 13) - 6;
        int k = static_cast<int>(rng() % 7);
        int t0 = static_cast<int>(rng() % 11) - 5;
        Rat value = binom_affine_poly(a, b, k).evaluate(Rat(t0));
        CHECK(denominator(value) == 1);
        CHECK(numerator(value) == binomial(static_cast<long long>(a) * t0 + b, k));
    }
}

TEST_CASE("lagrange interpolation") {
    CHECK(lagrange_interpolate({{0, Int(1)}, {1, Int(3)}}) == poly({1, 2}));
    CHECK(lagrange_interpolate({{0, Int(1)}, {1, Int(2)}, {2, Int(5)}}) == poly({1, 0, 1}));
    // Lattice counts 1, 3, 6 of the dilated triangle Delta_{1,3}: C(t+2, 2).
    CHECK(lagrange_interpolate({{0, Int(1)}, {1, Int(3)}, {2, Int(6)}}) == binom_affine_poly(1, 2, 2));
    CHECK_THROWS_AS(lagrange_interpolate({{1, Int(1)}, {1, Int(2)}}), std::invalid_argument);
}

TEST_CASE("interpolation round-trip on random integer polynomials") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        int deg = static_cast<int>(rng() % 9);
        std::vector<Rat> coeffs;
        for (int i = 0; i <= deg; ++i) coeffs.emplace_back(static_cast<int>(rng() % 21) - 10);
        Polynomial p(coeffs);
        std::vector<std::pair<long long, Int>> pts;
        for (int x = 0; x <= deg; ++x) pts.emplace_back(x, numerator(p.evaluate(Rat(x))));
        CHECK(lagrange_interpolate(pts) == p);
    }
}

TEST_CASE("coefficient positivity checks") {
    CHECK(poly({1, 0, 1}).has_nonnegative_coefficients());
    CHECK_FALSE(poly({1, 0, 1}).has_positive_coefficients());
    CHECK(poly({1, 1, 1}).has_positive_coefficients());
    CHECK_FALSE(poly({0, -1, 1}).has_nonnegative_coefficients());
    CHECK_FALSE(poly({0, -1, 1}).has_positive_coefficients());
    CHECK_FALSE(Polynomial().has_positive_coefficients());
    CHECK(Polynomial().has_nonnegative_coefficients());
}

TEST_CASE("json round-trip") {
    Polynomial p(std::vector<Rat>{Rat(1), Rat(13, 6), Rat(3, 2), Rat(1, 3)});
    auto j = p.to_json();
    CHECK(j.dump() == R"({"coeffs":["1","13/6","3/2","1/3"],"var":"t"})");
    CHECK(Polynomial::from_json(j) == p);
    CHECK(Polynomial::from_json(nlohmann::json::parse(R"({"coeffs":["2/4"],"var":"t"})")) ==
          Polynomial(Rat(1, 2)));
    CHECK_THROWS_AS(Polynomial::from_json(nlohmann::json::parse(R"({"var":"t"})")), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::from_json(nlohmann::json::parse(R"({"coeffs":["x"],"var":"t"})")),
                    std::invalid_argument);
}
