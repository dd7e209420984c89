#include <catch2/catch_amalgamated.hpp>

#include "totpos/randomgen.hpp"
#include "totpos/ratfunc.hpp"
#include "totpos/semifield.hpp"

using namespace totpos;

namespace {

PosRatFunc prf(std::string_view s) { return PosRatFunc::parse_literal(s); }

template <Semifield K>
void check_axioms(Rng& rng) {
    for (int it = 0; it < 50; ++it) {
        K a = sample_value<K>(rng), b = sample_value<K>(rng), c = sample_value<K>(rng);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE((a + b) * c == a * c + b * c);
        REQUIRE(a * K::one() == a);
        REQUIRE(inv(inv(a)) == a);
        REQUIRE(a * inv(a) == K::one());
        REQUIRE(pow(a, 3) * pow(a, -3) == K::one());
    }
}

}  // namespace

TEST_CASE("semifield axioms hold on randomized values") {
    Rng rng(42);
    check_axioms<PosRat>(rng);
    check_axioms<TropInt>(rng);
    check_axioms<PosRatFunc>(rng);
    check_axioms<Unit>(rng);
}

TEST_CASE("posrat arithmetic") {
    REQUIRE(PosRat(1, 2) + PosRat(1, 3) == PosRat(5, 6));
    REQUIRE(inv(PosRat(2, 3)) == PosRat(3, 2));
    REQUIRE(pow(PosRat(2, 1), -1) == PosRat(1, 2));
    REQUIRE(pow(PosRat(3, 2), 0) == PosRat::one());
}

TEST_CASE("tropical arithmetic is (min, +)") {
    REQUIRE(TropInt(3) + TropInt(5) == TropInt(3));
    REQUIRE(TropInt(3) * TropInt(5) == TropInt(8));
    REQUIRE(TropInt::one() == TropInt(0));
    REQUIRE(pow(TropInt(5), 3) == TropInt(15));
}

TEST_CASE("posratfunc addition aligns shifts") {
    // t^1*(1)/(1) + t^0*(2)/(1) = t^0*(2+t)/(1)
    PosRatFunc x = prf("t^1*(1)");
    PosRatFunc y = prf("t^0*(2)");
    REQUIRE(x + y == prf("t^0*(2+1*t)"));
}

TEST_CASE("valuation is the shift and a semifield homomorphism") {
    REQUIRE(valuation(prf("t^2*(1+1*t)/(2+1*t)")) == TropInt(2));
    Rng rng(7);
    for (int it = 0; it < 100; ++it) {
        PosRatFunc x = sample_value<PosRatFunc>(rng), y = sample_value<PosRatFunc>(rng);
        REQUIRE(valuation(x * y) == valuation(x) * valuation(y));
        REQUIRE(valuation(x + y) == valuation(x) + valuation(y));
        REQUIRE(valuation(inv(x)) == inv(valuation(x)));
    }
}

TEST_CASE("collapse maps everything to the unit") {
    REQUIRE(collapse(PosRat(1, 2)) == Unit{});
    REQUIRE(collapse(TropInt(7)) == Unit{});
    REQUIRE(collapse(Unit{}) == Unit{});
}

TEST_CASE("evaluate computes exact rational values") {
    REQUIRE(evaluate(prf("t^1*(1)"), Rat(2)) == Rat(2));
    REQUIRE(evaluate(prf("t^0*(1+1*t)"), Rat(-1, 2)) == Rat(1, 2));
    REQUIRE(evaluate(prf("t^-1*(1)"), Rat(1, 4)) == Rat(4));
    REQUIRE_THROWS_AS(evaluate(prf("t^-1*(1)"), Rat(0)), EvaluationAtPole);
}

TEST_CASE("posratfunc equality is decided by cross-multiplication") {
    REQUIRE(prf("t^0*(1+1*t)/(1)") * prf("t^0*(2)/(1+1*t)") == prf("t^0*(2)"));
    REQUIRE(prf("t^0*(2+2*t)/(2)") == prf("t^0*(1+1*t)"));
    REQUIRE(!(prf("t^1*(1)") == prf("t^0*(1)")));
}

TEST_CASE("literal round trips") {
    Rng rng(3);
    for (int it = 0; it < 30; ++it) {
        PosRatFunc x = sample_value<PosRatFunc>(rng);
        REQUIRE(PosRatFunc::parse_literal(x.to_literal()) == x);
        PosRat q = sample_value<PosRat>(rng);
        REQUIRE(PosRat::parse_literal(q.to_literal()) == q);
        TropInt z = sample_value<TropInt>(rng);
        REQUIRE(TropInt::parse_literal(z.to_literal()) == z);
    }
    REQUIRE(Unit::parse_literal("1") == Unit{});
}

TEST_CASE("ratfunc field bridge agrees with posratfunc arithmetic") {
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        PosRatFunc x = sample_value<PosRatFunc>(rng), y = sample_value<PosRatFunc>(rng);
        REQUIRE(to_field(x) + to_field(y) == to_field(x + y));
        REQUIRE(to_field(x) * to_field(y) == to_field(x * y));
        REQUIRE(RatFunc(1) / to_field(x) == to_field(inv(x)));
        REQUIRE(to_field(x).valuation_at_zero() == to_ll(valuation(x).v));
    }
}
