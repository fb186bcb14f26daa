#include <doctest.h>

#include "oracles.hpp"
#include "purecross/series.hpp"
#include "purecross/verify.hpp"

#include <random>

using namespace purecross;

namespace {

Series ints(int order, std::initializer_list<long> values)
{
    std::vector<Rational> c;
    for (long v : values) c.emplace_back(v);
    return Series(order, std::move(c));
}

Series random_series(std::mt19937_64& rng, int order, bool zero_constant)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int k = zero_constant ? 1 : 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = random_rational(rng);
    return Series(order, std::move(c));
}

}  // namespace

TEST_CASE("add and mul")
{
    CHECK(mul(Series::x(5), Series::x(5)) == ints(5, {0, 0, 1}));
    // (1 + x)(x^4 + 5x^6 + 14x^7)
    const auto a = ints(7, {0, 0, 0, 0, 1, 0, 5, 14});
    CHECK(mul(ints(7, {1, 1}), a) == ints(7, {0, 0, 0, 0, 1, 1, 5, 19}));
    CHECK(add(a, Series::zero(7)) == a);
}

TEST_CASE("mismatched orders truncate to the smaller")
{
    const auto f = ints(6, {1, 2, 3, 4, 5, 6, 7});
    const auto g = ints(3, {1, 1, 1, 1});
    CHECK((f + g).order() == 3);
    CHECK((f * g).order() == 3);
    CHECK((f + g) == ints(3, {2, 3, 4, 5}));
    CHECK_THROWS_AS(g.truncated(5), SeriesError);
    CHECK_THROWS_AS(g[4], SeriesError);
}

TEST_CASE("shifts change the order")
{
    const auto f = ints(4, {0, 1, 2, 3, 4});
    CHECK(f.shift_up() == ints(5, {0, 0, 1, 2, 3, 4}));
    CHECK(f.shift_down() == ints(3, {1, 2, 3, 4}));
    CHECK_THROWS_AS(ints(3, {1, 1}).shift_down(), SeriesError);
    CHECK(f.derivative() == ints(3, {1, 4, 9, 16}));
}

TEST_CASE("reciprocal and division")
{
    CHECK(ints(6, {1, -1}).reciprocal() == ints(6, {1, 1, 1, 1, 1, 1, 1}));
    CHECK(ints(6, {1, 1}).reciprocal() == Series::inverse_one_plus_x(6));
    const auto f = ints(6, {2, 3, 0, 1});
    CHECK(f / f == Series::constant(6, 1));
    CHECK_THROWS_AS(Series::x(4).reciprocal(), SeriesError);
    CHECK(ints(4, {1, 1}).pow(3) == ints(4, {1, 3, 3, 1}));
}

TEST_CASE("compose")
{
    const auto f = ints(8, {3, 1, 4, 1, 5, 9, 2, 6, 5});
    CHECK(compose(f, Series::x(8)) == f);
    CHECK(compose(Series::x_over_one_minus_x(10), Series::x_over_one_plus_x(10)) == Series::x(10));
    // |PC+| column in, |CO| column out.
    const auto b = ints(10, {0, 1, 0, 0, 1, 1, 5, 19, 76, 360, 1792});
    CHECK(compose(b, Series::x_over_one_minus_x(10)) == ints(10, {0, 1, 1, 1, 2, 6, 21, 85, 385, 1907, 10205}));
    CHECK_THROWS_AS(compose(f, ints(8, {1, 1})), SeriesError);
    CHECK(compose(f, ints(4, {0, 1, 1})).order() == 4);
}

TEST_CASE("reversion")
{
    CHECK(reversion(Series::x_over_one_minus_x(12)) == Series::x_over_one_plus_x(12));

    const auto f = ints(8, {0, 1, 1});
    // Frozen from oracle::lagrange: signed Catalan numbers.
    const auto expected = ints(8, {0, 1, -1, 2, -5, 14, -42, 132, -429});
    std::vector<Rational> fc(f.coeffs());
    CHECK(Series(8, oracle::lagrange(fc)) == expected);
    CHECK(reversion(f) == expected);

    CHECK(reversion(ints(5, {0, 2})) == Series(5, {0, Rational(1, 2)}));
    CHECK_THROWS_AS(reversion(ints(5, {1, 1})), SeriesError);
    CHECK_THROWS_AS(reversion(ints(5, {0, 0, 1})), SeriesError);
}

TEST_CASE("property: reversion inverts composition and is an involution")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 8; ++t) {
        const auto f = random_unit_series(rng, 20);
        const auto g = reversion(f);
        CHECK(compose(f, g) == Series::x(20));
        CHECK(compose(g, f) == Series::x(20));
        CHECK(reversion(g) == f);
        CHECK(g == Series(20, oracle::lagrange(f.coeffs())));
    }
    // Non-unit rational linear coefficient.
    auto f = random_series(rng, 12, true);
    f = f + Series::x(12) * Rational(3, 7);
    if (f[1] != 0) CHECK(compose(f, reversion(f)) == Series::x(12));
}

TEST_CASE("lagrange_inversion agrees with the test oracle")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 4; ++t) {
        const auto f = random_unit_series(rng, 15);
        CHECK(lagrange_inversion(f) == Series(15, oracle::lagrange(f.coeffs())));
    }
}

TEST_CASE("solve_D")
{
    const auto catalan = oracle::catalan(12);
    const auto d = solve_D(Series::x_over_one_minus_x(12));
    for (int n = 0; n <= 12; ++n) CHECK(d[n] == static_cast<long>(catalan[static_cast<std::size_t>(n)]));

    const auto co = ints(10, {0, 1, 1, 1, 2, 6, 21, 85, 385, 1907, 10205});
    CHECK(solve_D(co) == ints(10, {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975}));
    CHECK(solve_D(Series::zero(6)) == Series::constant(6, 1));
    CHECK_THROWS_AS(solve_D(Series::constant(3, 1)), SeriesError);
}

TEST_CASE("property: ring laws and compose associativity")
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 6; ++t) {
        const auto f = random_series(rng, 10, false);
        const auto g = random_series(rng, 10, true);
        const auto h = random_series(rng, 10, true);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("rendering")
{
    CHECK(ints(3, {1, 0, -2, 5}).to_string() == "1 - 2*x^2 + 5*x^3");
    CHECK(Series(2, {0, Rational(-1, 2), 1}).to_string() == "-1/2*x + 1*x^2");
    CHECK(Series::zero(3).to_string() == "0");
    CHECK(Series(2, {1, Rational(7, 2)}).to_json().dump() == R"(["1","7/2","0"])");
    CHECK(ints(2, {1, 2, 3}).is_integral());
    CHECK_FALSE(Series(2, {1, Rational(1, 2)}).is_integral());
}
