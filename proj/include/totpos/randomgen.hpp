#pragma once

#include <random>

#include "semifield.hpp"

namespace totpos {

using Rng = std::mt19937_64;

template <Semifield K>
K sample_value(Rng& rng);

template <>
inline PosRat sample_value<PosRat>(Rng& rng) {
    std::uniform_int_distribution<int> d(1, 6);
    return PosRat(Rat(d(rng), d(rng)));
}

template <>
inline TropInt sample_value<TropInt>(Rng& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    return TropInt(Int(d(rng)));
}

template <>
inline Unit sample_value<Unit>(Rng&) {
    return {};
}

template <>
inline PosRatFunc sample_value<PosRatFunc>(Rng& rng) {
    std::uniform_int_distribution<int> shift(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> coeff(0, 3);
    auto poly = [&] {
        std::vector<Rat> c(static_cast<size_t>(deg(rng)) + 1);
        c[0] = Rat(coeff(rng) + 1);
        for (size_t k = 1; k < c.size(); ++k) c[k] = Rat(coeff(rng));
        return NonnegPoly(std::move(c));
    };
    return PosRatFunc(shift(rng), poly(), poly());
}

/// A pure monomial t^n with n uniform in [-bound, bound].
inline PosRatFunc sample_monomial(Rng& rng, int bound = 4) {
    std::uniform_int_distribution<int> d(-bound, bound);
    return PosRatFunc::monomial(d(rng));
}

}  // namespace totpos
