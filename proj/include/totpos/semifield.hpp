#pragma once

#include <concepts>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace totpos {

// ---------------------------------------------------------------------------
// Semifield concept: commutative +, invertible commutative *, distributivity.
// There is no subtraction anywhere in this interface.
// ---------------------------------------------------------------------------

template <class K>
concept Semifield = requires(const K& a, const K& b) {
    { K::one() } -> std::convertible_to<K>;
    { a + b } -> std::convertible_to<K>;
    { a* b } -> std::convertible_to<K>;
    { inv(a) } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { K::name() } -> std::convertible_to<std::string_view>;
};

template <Semifield K>
K sdiv(const K& a, const K& b) {
    return a * inv(b);
}

/// c-fold product; negative exponents go through inv.
template <Semifield K>
K pow(const K& x, Int c) {
    if (c < 0) return pow(inv(x), Int(-c));
    K acc = K::one();
    K base = x;
    while (c > 0) {
        if ((c & 1) != 0) acc = acc * base;
        base = base * base;
        c >>= 1;
    }
    return acc;
}

template <Semifield K>
K pow(const K& x, long long c) {
    return pow(x, Int(c));
}

// ---------------------------------------------------------------------------
// PosRat: positive rationals, exact.
// ---------------------------------------------------------------------------

struct PosRat {
    Rat v{1};

    PosRat() = default;
    explicit PosRat(Rat q) : v(std::move(q)) {
        if (v <= 0) throw ParseError("PosRat value must be positive");
    }
    PosRat(long long p, long long q) : PosRat(Rat(p, q)) {}

    static PosRat one() { return PosRat(Rat(1)); }
    static constexpr std::string_view name() { return "posrat"; }

    friend PosRat operator+(const PosRat& a, const PosRat& b) { return PosRat(a.v + b.v); }
    friend PosRat operator*(const PosRat& a, const PosRat& b) { return PosRat(a.v * b.v); }
    friend PosRat inv(const PosRat& a) { return PosRat(1 / a.v); }
    friend bool operator==(const PosRat&, const PosRat&) = default;

    static PosRat parse_literal(std::string_view s) {
        Rat q = parse_rat(s);
        if (q <= 0) throw ParseError("PosRat literal must be positive: " + std::string(s));
        return PosRat(q);
    }
    std::string to_literal() const { return rat_to_string(v); }
};

// ---------------------------------------------------------------------------
// TropInt: the tropical semiring Z with min as sum and + as product.
// ---------------------------------------------------------------------------

struct TropInt {
    Int v{0};

    TropInt() = default;
    explicit TropInt(Int n) : v(std::move(n)) {}
    explicit TropInt(long long n) : v(n) {}

    static TropInt one() { return TropInt(Int(0)); }
    static constexpr std::string_view name() { return "tropint"; }

    friend TropInt operator+(const TropInt& a, const TropInt& b) {
        return TropInt(a.v < b.v ? a.v : b.v);
    }
    friend TropInt operator*(const TropInt& a, const TropInt& b) { return TropInt(a.v + b.v); }
    friend TropInt inv(const TropInt& a) { return TropInt(-a.v); }
    friend bool operator==(const TropInt&, const TropInt&) = default;

    static TropInt parse_literal(std::string_view s) { return TropInt(parse_int(s)); }
    std::string to_literal() const { return v.str(); }
};

inline TropInt pow(const TropInt& x, const Int& c) { return TropInt(x.v * c); }
inline TropInt pow(const TropInt& x, long long c) { return TropInt(x.v * c); }

// ---------------------------------------------------------------------------
// Unit: the one-element semifield {1}.
// ---------------------------------------------------------------------------

struct Unit {
    static Unit one() { return {}; }
    static constexpr std::string_view name() { return "unit"; }

    friend Unit operator+(const Unit&, const Unit&) { return {}; }
    friend Unit operator*(const Unit&, const Unit&) { return {}; }
    friend Unit inv(const Unit&) { return {}; }
    friend bool operator==(const Unit&, const Unit&) { return true; }

    static Unit parse_literal(std::string_view s) {
        if (s != "1") throw ParseError("the unit semifield has the single literal `1`");
        return {};
    }
    std::string to_literal() const { return "1"; }
};

// ---------------------------------------------------------------------------
// PosRatFunc: t^e * f0/f1 with f0, f1 having nonnegative rational coefficients
// and strictly positive constant terms. Closed under +, *, inv, so positivity
// is a representation invariant.
// ---------------------------------------------------------------------------

/// Dense polynomial with nonnegative coefficients; coefficient 0 is the
/// constant term. Normalized: no trailing zeros, never empty.
struct NonnegPoly {
    std::vector<Rat> c{Rat(1)};

    NonnegPoly() = default;
    explicit NonnegPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) c.push_back(Rat(0));
        for (const Rat& x : c)
            if (x < 0) throw ParseError("NonnegPoly coefficient must be nonnegative");
        trim();
    }
    explicit NonnegPoly(Rat constant) : NonnegPoly(std::vector<Rat>{std::move(constant)}) {}

    void trim() {
        while (c.size() > 1 && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.size() == 1 && c[0] == 0; }

    friend NonnegPoly operator+(const NonnegPoly& a, const NonnegPoly& b) {
        std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return NonnegPoly(std::move(r));
    }
    friend NonnegPoly operator*(const NonnegPoly& a, const NonnegPoly& b) {
        std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return NonnegPoly(std::move(r));
    }
    /// Multiply by t^k.
    NonnegPoly shifted(long long k) const {
        std::vector<Rat> r(c.size() + static_cast<size_t>(k), Rat(0));
        for (size_t i = 0; i < c.size(); ++i) r[i + static_cast<size_t>(k)] = c[i];
        return NonnegPoly(std::move(r));
    }
    friend bool operator==(const NonnegPoly&, const NonnegPoly&) = default;

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
};

namespace detail {

// Plain polynomial arithmetic over Q used to shrink PosRatFunc
// representations. Vectors may be any sign here; empty means zero.
inline std::vector<Rat> poly_divmod_exact(const std::vector<Rat>& a, const std::vector<Rat>& b,
                                          bool& exact) {
    std::vector<Rat> rem = a, q;
    exact = true;
    if (b.empty()) {
        exact = false;
        return {};
    }
    int db = static_cast<int>(b.size()) - 1;
    auto deg = [](const std::vector<Rat>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
        return d;
    };
    int dr = deg(rem);
    if (dr >= db) q.assign(static_cast<size_t>(dr - db) + 1, Rat(0));
    while ((dr = deg(rem)) >= db) {
        Rat f = rem[static_cast<size_t>(dr)] / b[static_cast<size_t>(db)];
        q[static_cast<size_t>(dr - db)] = f;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(dr - db + i)] -= f * b[static_cast<size_t>(i)];
    }
    for (const Rat& x : rem)
        if (x != 0) exact = false;
    return q;
}

inline std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    auto deg = [](const std::vector<Rat>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
        return d;
    };
    while (deg(b) >= 0) {
        int db = deg(b);
        std::vector<Rat> rem = a;
        int dr;
        while ((dr = deg(rem)) >= db) {
            Rat f = rem[static_cast<size_t>(dr)] / b[static_cast<size_t>(db)];
            for (int i = 0; i <= db; ++i)
                rem[static_cast<size_t>(dr - db + i)] -= f * b[static_cast<size_t>(i)];
        }
        a = std::move(b);
        b = std::move(rem);
        int d = deg(b);
        if (d >= 0) {  // make monic to keep coefficients small
            Rat lead = b[static_cast<size_t>(d)];
            b.resize(static_cast<size_t>(d) + 1);
            for (Rat& x : b) x /= lead;
        }
    }
    int d = deg(a);
    a.resize(static_cast<size_t>(std::max(d, 0)) + 1);
    if (d >= 0) {
        Rat lead = a[static_cast<size_t>(d)];
        for (Rat& x : a) x /= lead;
    }
    return a;
}

}  // namespace detail

struct PosRatFunc {
    long long e{0};
    NonnegPoly num{Rat(1)};
    NonnegPoly den{Rat(1)};

    PosRatFunc() = default;
    PosRatFunc(long long shift, NonnegPoly n, NonnegPoly d)
        : e(shift), num(std::move(n)), den(std::move(d)) {
        if (num.c[0] <= 0 || den.c[0] <= 0)
            throw ParseError("PosRatFunc requires strictly positive constant terms");
        reduce();
    }

    /// Shrinks the representation: cancels the polynomial gcd when both
    /// cofactors stay manifestly nonnegative, then scales so the denominator
    /// has constant term 1. The value never changes (equality is by
    /// cross-multiplication) and the nonnegativity invariant is preserved.
    void reduce() {
        if (num.degree() > 0 && den.degree() > 0) {
            std::vector<Rat> g = detail::poly_gcd(num.c, den.c);
            if (g.size() > 1 && g[0] != 0) {
                // normalize so g(0) = 1; then both quotients keep positive
                // constant terms whenever they are nonnegative at all
                Rat g0 = g[0];
                for (Rat& x : g) x /= g0;
            }
            if (g.size() > 1) {
                bool e1 = false, e2 = false;
                std::vector<Rat> qn = detail::poly_divmod_exact(num.c, g, e1);
                std::vector<Rat> qd = detail::poly_divmod_exact(den.c, g, e2);
                auto nonneg = [](const std::vector<Rat>& p) {
                    if (p.empty() || p[0] <= 0) return false;
                    for (const Rat& x : p)
                        if (x < 0) return false;
                    return true;
                };
                if (e1 && e2 && nonneg(qn) && nonneg(qd)) {
                    num = NonnegPoly(std::move(qn));
                    den = NonnegPoly(std::move(qd));
                }
            }
        }
        if (den.c[0] != 1) {
            Rat scale = den.c[0];
            for (Rat& x : num.c) x /= scale;
            for (Rat& x : den.c) x /= scale;
        }
    }
    /// The monomial t^n.
    static PosRatFunc monomial(long long n) {
        return PosRatFunc(n, NonnegPoly(Rat(1)), NonnegPoly(Rat(1)));
    }
    static PosRatFunc constant(const Rat& q) {
        if (q <= 0) throw ParseError("PosRatFunc constant must be positive");
        return PosRatFunc(0, NonnegPoly(q), NonnegPoly(Rat(1)));
    }

    static PosRatFunc one() { return PosRatFunc(); }
    static constexpr std::string_view name() { return "posratfunc"; }

    friend PosRatFunc operator+(const PosRatFunc& a, const PosRatFunc& b) {
        long long e = std::min(a.e, b.e);
        NonnegPoly n =
            (a.num * b.den).shifted(a.e - e) + (b.num * a.den).shifted(b.e - e);
        return PosRatFunc(e, std::move(n), a.den * b.den);
    }
    friend PosRatFunc operator*(const PosRatFunc& a, const PosRatFunc& b) {
        return PosRatFunc(a.e + b.e, a.num * b.num, a.den * b.den);
    }
    friend PosRatFunc inv(const PosRatFunc& a) { return PosRatFunc(-a.e, a.den, a.num); }

    /// Equality by cross-multiplication; no gcd canonicalization is kept.
    friend bool operator==(const PosRatFunc& a, const PosRatFunc& b) {
        return a.e == b.e && a.num * b.den == b.num * a.den;
    }

    static PosRatFunc parse_literal(std::string_view s);
    std::string to_literal() const;
};

/// The valuation homomorphism of 1.4: t^e f0/f1 -> e.
inline TropInt valuation(const PosRatFunc& x) { return TropInt(Int(x.e)); }

/// Exact value of the rational function at a rational point.
inline Rat evaluate(const PosRatFunc& x, const Rat& point) {
    Rat d = x.den.eval(point);
    if (d == 0) throw EvaluationAtPole("denominator vanishes at evaluation point");
    if (point == 0 && x.e < 0) throw EvaluationAtPole("pole at t = 0");
    Rat r = x.num.eval(point) / d;
    if (x.e >= 0) {
        for (long long k = 0; k < x.e; ++k) r *= point;
    } else {
        for (long long k = 0; k < -x.e; ++k) r /= point;
    }
    return r;
}

template <Semifield K>
Unit collapse(const K&) {
    return {};
}

// --- PosRatFunc literal grammar: t^e*(c0+c1*t+...)/(d0+d1*t+...) -----------

namespace detail {

inline NonnegPoly parse_nonneg_poly(std::string_view s) {
    // terms separated by '+'; each term is r, r*t, r*t^k, t, or t^k
    std::vector<Rat> coeffs;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find('+', pos);
        std::string_view term =
            s.substr(pos, next == std::string_view::npos ? next : next - pos);
        if (term.empty()) throw ParseError("empty polynomial term");
        Rat coeff(1);
        long long deg = 0;
        auto star = term.find('*');
        std::string_view tpart;
        if (star != std::string_view::npos) {
            coeff = parse_rat(term.substr(0, star));
            tpart = term.substr(star + 1);
        } else if (term.front() == 't') {
            tpart = term;
        } else {
            coeff = parse_rat(term);
        }
        if (!tpart.empty()) {
            if (tpart == "t") {
                deg = 1;
            } else if (tpart.substr(0, 2) == "t^") {
                deg = std::stoll(std::string(tpart.substr(2)));
            } else {
                throw ParseError("bad polynomial term: " + std::string(term));
            }
        }
        if (coeff < 0 || deg < 0) throw ParseError("polynomial terms must be nonnegative");
        if (coeffs.size() <= static_cast<size_t>(deg)) coeffs.resize(deg + 1, Rat(0));
        coeffs[static_cast<size_t>(deg)] += coeff;
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return NonnegPoly(std::move(coeffs));
}

inline std::string nonneg_poly_to_string(const NonnegPoly& p) {
    std::string out;
    bool first = true;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0 && !(p.c.size() == 1)) continue;
        if (!first) out += "+";
        first = false;
        if (i == 0) {
            out += rat_to_string(p.c[i]);
        } else {
            out += rat_to_string(p.c[i]);
            out += "*t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace detail

inline PosRatFunc PosRatFunc::parse_literal(std::string_view s) {
    long long shift = 0;
    if (s.substr(0, 2) == "t^") {
        auto star = s.find('*');
        if (star == std::string_view::npos)
            throw ParseError("expected `t^e*(...)` in PosRatFunc literal");
        shift = std::stoll(std::string(s.substr(2, star - 2)));
        s = s.substr(star + 1);
    }
    if (s.empty() || s.front() != '(')
        // plain positive rational constant is accepted as a convenience
        return PosRatFunc(shift, NonnegPoly(parse_rat(s)), NonnegPoly(Rat(1)));
    auto close = s.find(')');
    if (close == std::string_view::npos) throw ParseError("unbalanced ( in PosRatFunc literal");
    NonnegPoly num = detail::parse_nonneg_poly(s.substr(1, close - 1));
    NonnegPoly den{Rat(1)};
    std::string_view rest = s.substr(close + 1);
    if (!rest.empty()) {
        if (rest.front() != '/' || rest.size() < 3 || rest[1] != '(' || rest.back() != ')')
            throw ParseError("expected `/(...)` in PosRatFunc literal");
        den = detail::parse_nonneg_poly(rest.substr(2, rest.size() - 3));
    }
    return PosRatFunc(shift, std::move(num), std::move(den));
}

inline std::string PosRatFunc::to_literal() const {
    return "t^" + std::to_string(e) + "*(" + detail::nonneg_poly_to_string(num) + ")/(" +
           detail::nonneg_poly_to_string(den) + ")";
}

}  // namespace totpos
