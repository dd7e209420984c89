#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "semifield.hpp"

namespace totpos {

// ---------------------------------------------------------------------------
// QPoly / RatFunc: univariate rational-function field Q(t) with subtraction.
// Used only by the matrix model as the exact field behind PosRatFunc.
// ---------------------------------------------------------------------------

struct QPoly {
    std::vector<Rat> c;  // c[0] constant term; empty means zero

    QPoly() = default;
    explicit QPoly(Rat constant) {
        if (constant != 0) c.push_back(std::move(constant));
    }
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    static QPoly t() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return QPoly(std::move(r));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return QPoly(std::move(r));
    }
    friend QPoly operator-(const QPoly& a) { return QPoly(Rat(0)) - a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return QPoly(std::move(r));
    }
    friend bool operator==(const QPoly&, const QPoly&) = default;

    QPoly monic() const {
        if (is_zero()) return {};
        std::vector<Rat> r = c;
        Rat lead = c.back();
        for (Rat& x : r) x /= lead;
        return QPoly(std::move(r));
    }
    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
    /// Degree of the lowest nonzero term; -1 for the zero polynomial.
    long long low_degree() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) return static_cast<long long>(i);
        return -1;
    }
};

inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    QPoly rem = a;
    std::vector<Rat> q;
    int db = b.degree();
    if (rem.degree() >= db) q.assign(rem.degree() - db + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        int k = rem.degree() - db;
        Rat f = rem.c.back() / b.c.back();
        q[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= db; ++i) rem.c[static_cast<size_t>(i + k)] -= f * b.c[static_cast<size_t>(i)];
        rem.trim();
    }
    return {QPoly(std::move(q)), rem};
}

inline QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r).monic();
    }
    return a.monic();
}

/// Element of Q(t), normalized: gcd(num, den) = 1 and den monic.
struct RatFunc {
    QPoly num;
    QPoly den{Rat(1)};

    RatFunc() = default;
    explicit RatFunc(Rat constant) : num(std::move(constant)) {}
    RatFunc(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw Error("RatFunc with zero denominator");
        normalize();
    }
    explicit RatFunc(long long n) : num(Rat(n)) {}
    static RatFunc t() { return RatFunc(QPoly::t(), QPoly(Rat(1))); }

    void normalize() {
        if (num.is_zero()) {
            den = QPoly(Rat(1));
            return;
        }
        QPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        Rat lead = den.c.back();
        if (lead != 1) {
            for (Rat& x : num.c) x /= lead;
            for (Rat& x : den.c) x /= lead;
        }
    }

    bool is_zero() const { return num.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num, a.den); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw Error("RatFunc division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num * b.den == b.num * a.den;
    }

    /// Valuation at t = 0 (lowest-degree exponent); only valid for nonzero.
    long long valuation_at_zero() const {
        if (is_zero()) throw Error("valuation of zero");
        return num.low_degree() - den.low_degree();
    }
};

// ---------------------------------------------------------------------------
// ExactField concept, satisfied by Rat and RatFunc.
// ---------------------------------------------------------------------------

template <class F>
concept ExactField = requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a* b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    F(1);
};

template <ExactField F>
bool field_is_zero(const F& x) {
    return x == F(0);
}

// --- bridges between the semifields and their ambient fields ---------------

inline Rat to_field(const PosRat& x) { return x.v; }

inline RatFunc to_field(const PosRatFunc& x) {
    QPoly n(std::vector<Rat>(x.num.c));
    QPoly d(std::vector<Rat>(x.den.c));
    if (x.e >= 0) {
        std::vector<Rat> sh(static_cast<size_t>(x.e), Rat(0));
        sh.insert(sh.end(), n.c.begin(), n.c.end());
        n = QPoly(std::move(sh));
    } else {
        std::vector<Rat> sh(static_cast<size_t>(-x.e), Rat(0));
        sh.insert(sh.end(), d.c.begin(), d.c.end());
        d = QPoly(std::move(sh));
    }
    return RatFunc(std::move(n), std::move(d));
}

/// Field type matching a semifield (PosRat -> Rat, PosRatFunc -> RatFunc).
template <Semifield K>
struct FieldOf;
template <>
struct FieldOf<PosRat> {
    using type = Rat;
};
template <>
struct FieldOf<PosRatFunc> {
    using type = RatFunc;
};
template <Semifield K>
using field_of_t = typename FieldOf<K>::type;

}  // namespace totpos
