#include <catch2/catch_amalgamated.hpp>

#include "totpos/braid.hpp"
#include "totpos/randomgen.hpp"

using namespace totpos;

namespace {

template <Semifield K>
std::vector<K> sample_vec(Rng& rng, size_t n) {
    std::vector<K> v;
    for (size_t i = 0; i < n; ++i) v.push_back(sample_value<K>(rng));
    return v;
}

PosRat q(long long p, long long d = 1) { return PosRat(p, d); }

}  // namespace

TEST_CASE("order 2 and 3 moves") {
    auto a2 = CartanDatum::from_type("A2");
    std::vector<PosRat> in{q(1), q(2), q(3)};
    auto out = rank2_move(a2, 0, 1, in);
    REQUIRE(out == std::vector<PosRat>{q(3, 2), q(4), q(1, 2)});

    std::vector<TropInt> tin{TropInt(1), TropInt(0), TropInt(2)};
    auto tout = rank2_move(a2, 0, 1, tin);
    REQUIRE(tout == std::vector<TropInt>{TropInt(1), TropInt(1), TropInt(0)});

    auto d4 = CartanDatum::from_type("D4");
    std::vector<PosRat> comm{q(5), q(7)};
    REQUIRE(rank2_move(d4, 0, 2, comm) == std::vector<PosRat>{q(7), q(5)});
}

TEST_CASE("order 4 explicit formula") {
    auto b2 = CartanDatum::from_type("B2");
    int i = b2->pairing(0, 1) == -2 ? 0 : 1;  // letter with <i,j*> = -2
    int j = 1 - i;
    std::vector<PosRat> in{q(1), q(1), q(1), q(1)};
    auto out = rank2_move(b2, i, j, in);
    REQUIRE(out == std::vector<PosRat>{q(1, 5), q(5, 3), q(9, 5), q(1, 3)});
}

TEST_CASE("rank-2 moves are inverse in the opposite orientation") {
    Rng rng(5);
    for (const char* t : {"A2", "B2", "G2"}) {
        auto datum = CartanDatum::from_type(t);
        size_t m = static_cast<size_t>(datum->bond_order(0, 1));
        for (int it = 0; it < 25; ++it) {
            auto v = sample_vec<PosRat>(rng, m);
            REQUIRE(rank2_move(datum, 1, 0, rank2_move(datum, 0, 1, v)) == v);
            auto tv = sample_vec<TropInt>(rng, m);
            REQUIRE(rank2_move(datum, 1, 0, rank2_move(datum, 0, 1, tv)) == tv);
        }
    }
}

TEST_CASE("order-4 folding cross-validates the closed formula") {
    auto b2 = CartanDatum::from_type("B2");
    Rng rng(17);
    for (int it = 0; it < 40; ++it) {
        for (int i : {0, 1}) {
            auto v = sample_vec<PosRat>(rng, 4);
            REQUIRE(fold_rank2_order4(b2, i, 1 - i, v) == rank2_move(b2, i, 1 - i, v));
            auto tv = sample_vec<TropInt>(rng, 4);
            REQUIRE(fold_rank2_order4(b2, i, 1 - i, tv) == rank2_move(b2, i, 1 - i, tv));
        }
    }
}

TEST_CASE("order-6 folding is a bijection and preserves N^6 over TropInt") {
    auto g2 = CartanDatum::from_type("G2");
    Rng rng(23);
    for (int it = 0; it < 25; ++it) {
        auto v = sample_vec<PosRat>(rng, 6);
        REQUIRE(fold_rank2(g2, 1, 0, fold_rank2(g2, 0, 1, v)) == v);
    }
    // property scan over a small box: nonnegative coords stay nonnegative
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<TropInt> v;
        for (int k = 0; k < 6; ++k) v.push_back(TropInt((mask >> k) & 1 ? 2 : 0));
        for (const TropInt& c : fold_rank2(g2, 0, 1, v)) REQUIRE(c.v >= 0);
    }
}

TEST_CASE("order-4 identities 2.4(f)") {
    auto b2 = CartanDatum::from_type("B2");
    int i = b2->pairing(0, 1) == -2 ? 0 : 1;
    Rng rng(31);
    for (int it = 0; it < 50; ++it) {
        auto v = sample_vec<PosRat>(rng, 4);
        auto w = rank2_move(b2, i, 1 - i, v);
        PosRat a = v[0], b = v[1], c = v[2], d = v[3];
        PosRat ap = w[0], bp = w[1], cp = w[2], dp = w[3];
        REQUIRE(a * b * c == bp * cp * dp);
        REQUIRE(b * c * c * d == ap * bp * bp * cp);
        REQUIRE(a + c == bp + dp);
        REQUIRE(b + d == ap + cp);
    }
}

TEST_CASE("chart transition on A2 and identity transitions") {
    auto a2 = CartanDatum::from_type("A2");
    std::vector<PosRat> v{q(1), q(2), q(3)};
    REQUIRE(chart_transition(a2, {0, 1, 0}, {1, 0, 1}, v) ==
            std::vector<PosRat>{q(3, 2), q(4), q(1, 2)});
    REQUIRE(chart_transition(a2, {0, 1, 0}, {0, 1, 0}, v) == v);
}

TEST_CASE("chart transitions are bijective and satisfy the cocycle rule") {
    Rng rng(13);
    for (const char* t : {"A2", "B2", "A3"}) {
        auto datum = CartanDatum::from_type(t);
        Weyl wI = longest_element(datum);
        auto words = reduced_words(wI);
        size_t m = static_cast<size_t>(wI.length());
        for (int it = 0; it < 6; ++it) {
            for (const Word& ii : words)
                for (const Word& jj : words) {
                    auto v = sample_vec<PosRat>(rng, m);
                    auto once = chart_transition(datum, ii, jj, v);
                    REQUIRE(chart_transition(datum, jj, ii, once) == v);
                    // cocycle through a third word
                    const Word& kk = words[(it * 7) % words.size()];
                    REQUIRE(chart_transition(datum, jj, kk, once) ==
                            chart_transition(datum, ii, kk, v));
                }
        }
    }
}

TEST_CASE("tropicalization commutes with chart transitions on monomials") {
    Rng rng(47);
    for (const char* t : {"A2", "B2", "A3", "G2"}) {
        auto datum = CartanDatum::from_type(t);
        Weyl wI = longest_element(datum);
        auto words = reduced_words(wI);
        size_t m = static_cast<size_t>(wI.length());
        for (int it = 0; it < 20; ++it) {
            std::vector<PosRatFunc> v;
            std::vector<TropInt> tv;
            for (size_t k = 0; k < m; ++k) {
                v.push_back(sample_monomial(rng));
                tv.push_back(valuation(v.back()));
            }
            const Word& jj = words[static_cast<size_t>(it) % words.size()];
            auto out = chart_transition(datum, words[0], jj, v);
            auto tout = chart_transition(datum, words[0], jj, tv);
            for (size_t k = 0; k < m; ++k) REQUIRE(valuation(out[k]) == tout[k]);
        }
    }
}
