#pragma once

#include <utility>
#include <vector>

#include "chartmoves.hpp"
#include "umonoid.hpp"

namespace totpos {

// ---------------------------------------------------------------------------
// The monoid G(K) of 2.10 in canonical triple form u+ t u- (2.5(a)).
// `uminus` stores the y side: its letters mean (-i).
// ---------------------------------------------------------------------------

template <Semifield K>
struct GElem {
    DatumPtr datum;
    UElem<K> uplus;
    std::vector<K> torus;  // exponent of ui per i in I
    UElem<K> uminus;

    friend bool operator==(const GElem& a, const GElem& b) {
        return a.uplus == b.uplus && a.torus == b.torus && a.uminus == b.uminus;
    }
};

enum class GenKind { X, Y, Cochar };

template <Semifield K>
GElem<K> g_identity(const DatumPtr& datum) {
    return GElem<K>{datum, u_identity<K>(datum),
                    std::vector<K>(static_cast<size_t>(datum->rank()), K::one()),
                    u_identity<K>(datum)};
}

template <Semifield K>
GElem<K> g_from_triple(UElem<K> uplus, std::vector<K> torus, UElem<K> uminus) {
    DatumPtr datum = uplus.datum;
    check_same_datum(datum, uminus.datum);
    if (torus.size() != static_cast<size_t>(datum->rank()))
        throw InvalidChart("torus coordinate count must equal the rank");
    return GElem<K>{datum, std::move(uplus), std::move(torus), std::move(uminus)};
}

/// The antiautomorphism of G(K) with i^a <-> (-i)^a and ui^a fixed
/// (transpose in the matrix model).
template <Semifield K>
GElem<K> g_psi(const GElem<K>& x) {
    return GElem<K>{x.datum, u_psi(x.uminus), x.torus, u_psi(x.uplus)};
}

namespace gdetail {

/// u- . i^a  =  i^{a_out} . torus(tor) . u-_out   (relations (iii),(vi),(vii)).
template <Semifield K>
struct CrossResult {
    K a_out;
    std::vector<K> tor;
    UElem<K> rest;
};

template <Semifield K>
CrossResult<K> cross_uminus(const UElem<K>& uminus, int i, const K& a) {
    const DatumPtr& datum = uminus.datum;
    const int r = datum->rank();
    if (uminus.w.is_identity())
        return {a, std::vector<K>(static_cast<size_t>(r), K::one()), uminus};

    Word word = uminus.word();
    int j = word[0];
    K c = uminus.coords[0];
    Word tail(word.begin() + 1, word.end());
    std::vector<K> tail_coords(uminus.coords.begin() + 1, uminus.coords.end());
    UElem<K> v = u_from_word(datum, tail, std::move(tail_coords));

    CrossResult<K> rec = cross_uminus(v, i, a);
    if (j != i) {
        // (-j)^c commutes with i^{a'} by (vii), then slides right through the
        // emitted torus by (vi).
        K cp = c;
        for (int k = 0; k < r; ++k) cp = cp * pow(rec.tor[k], Int(datum->pairing(k, j)));
        return {rec.a_out, rec.tor, u_left_gen_mul(rec.rest, j, cp)};
    }
    // (-i)^c i^{a'} = i^{a'/D} ui^{1/D} (-i)^{c/D}, D = 1 + a'c  (2.10(iii)).
    K D = K::one() + rec.a_out * c;
    K emitted = inv(D);
    K cp = sdiv(c, D);
    for (int k = 0; k < r; ++k) cp = cp * pow(rec.tor[k], Int(datum->pairing(k, i)));
    rec.tor[i] = rec.tor[i] * emitted;
    return {sdiv(rec.a_out, D), rec.tor, u_left_gen_mul(rec.rest, i, cp)};
}

}  // namespace gdetail

/// Right multiplication by one generator.
template <Semifield K>
GElem<K> g_right_gen_mul(const GElem<K>& x, GenKind kind, int i, const K& a) {
    const DatumPtr& datum = x.datum;
    const int r = datum->rank();
    GElem<K> out = x;
    switch (kind) {
        case GenKind::Y:
            out.uminus = u_right_gen_mul(out.uminus, i, a);
            break;
        case GenKind::Cochar: {
            // slide ui^a left across u-: each (-j) coordinate scales by
            // a^{<i,j*>} (2.10(vi)), then merge into the torus slot by (iv).
            Word word = out.uminus.word();
            for (size_t k = 0; k < word.size(); ++k)
                out.uminus.coords[k] =
                    out.uminus.coords[k] * pow(a, Int(datum->pairing(i, word[k])));
            out.torus[i] = out.torus[i] * a;
            break;
        }
        case GenKind::X: {
            auto crossed = gdetail::cross_uminus(out.uminus, i, a);
            K a2 = crossed.a_out;
            for (int k = 0; k < r; ++k) a2 = a2 * pow(out.torus[k], Int(datum->pairing(k, i)));
            out.uplus = u_right_gen_mul(out.uplus, i, a2);
            for (int k = 0; k < r; ++k) out.torus[k] = out.torus[k] * crossed.tor[k];
            out.uminus = crossed.rest;
            break;
        }
    }
    return out;
}

/// Left multiplication, via the mirror: g.x = Psi(Psi(x) . Psi(g)).
template <Semifield K>
GElem<K> g_left_gen_mul(const GElem<K>& x, GenKind kind, int i, const K& a) {
    GenKind mirrored = kind == GenKind::X   ? GenKind::Y
                       : kind == GenKind::Y ? GenKind::X
                                            : GenKind::Cochar;
    return g_psi(g_right_gen_mul(g_psi(x), mirrored, i, a));
}

template <Semifield K>
GElem<K> g_mul(const GElem<K>& x, const GElem<K>& y) {
    check_same_datum(x.datum, y.datum);
    GElem<K> acc = x;
    Word pw = y.uplus.word();
    for (size_t k = 0; k < pw.size(); ++k)
        acc = g_right_gen_mul(acc, GenKind::X, pw[k], y.uplus.coords[k]);
    for (int k = 0; k < x.datum->rank(); ++k)
        if (!(y.torus[k] == K::one()))
            acc = g_right_gen_mul(acc, GenKind::Cochar, k, y.torus[k]);
    Word mw = y.uminus.word();
    for (size_t k = 0; k < mw.size(); ++k)
        acc = g_right_gen_mul(acc, GenKind::Y, mw[k], y.uminus.coords[k]);
    return acc;
}

// ---------------------------------------------------------------------------
// Charts of G_{w,-w'}(K): theta_h of 2.10(a)/2.13(b).
// ---------------------------------------------------------------------------

/// theta_h: assemble the canonical triple by folding generators.
template <Semifield K>
GElem<K> g_from_chart(const DatumPtr& datum, const GChart& chart, const std::vector<K>& coords) {
    if (coords.size() != chart.size())
        throw InvalidChart("coordinate count must match chart length");
    validate_gchart(datum, chart);
    GElem<K> acc = g_identity<K>(datum);
    for (size_t s = 0; s < chart.size(); ++s) {
        GenKind kind = chart[s].kind == +1  ? GenKind::X
                       : chart[s].kind == -1 ? GenKind::Y
                                             : GenKind::Cochar;
        acc = g_right_gen_mul(acc, kind, chart[s].idx, coords[s]);
    }
    return acc;
}

/// theta_h^{-1}: the unique coordinates of x in the chart h, computed by
/// replaying the sort path of h backwards from the canonical arrangement.
template <Semifield K>
std::vector<K> g_to_chart(const GElem<K>& x, const GChart& chart) {
    const DatumPtr& datum = x.datum;
    GChartInfo info = validate_gchart(datum, chart);
    if (!(info.wx == x.uplus.w) || !(info.wy == x.uminus.w))
        throw InvalidChart("chart piece does not match the element");
    GChart work = chart;
    std::vector<GMove> moves = sort_chart_canonical(datum, work);
    std::vector<K> v;
    v.reserve(chart.size());
    for (const K& a : x.uplus.coords) v.push_back(a);
    for (const K& a : x.torus) v.push_back(a);
    for (const K& a : x.uminus.coords) v.push_back(a);
    apply_gmoves_inverted(datum, moves, v);
    return v;
}

// --- the submonoid G(N) of 2.15 --------------------------------------------

inline bool g_is_nonneg(const GElem<TropInt>& x) {
    for (const TropInt& t : x.torus)
        if (!(t == TropInt::one())) return false;
    return u_is_nonneg(x.uplus) && u_is_nonneg(x.uminus);
}

/// The monoid isomorphism U(N) x U(N) -> G(N) of 2.15, inverted.
inline std::pair<UElem<TropInt>, UElem<TropInt>> g_split_nonneg(const GElem<TropInt>& x) {
    if (!g_is_nonneg(x)) throw NotInN("element is not in G(N)");
    return {x.uplus, x.uminus};
}

inline GElem<TropInt> g_join_nonneg(const UElem<TropInt>& u, const UElem<TropInt>& v) {
    if (!u_is_nonneg(u) || !u_is_nonneg(v)) throw NotInN("factors must lie in U(N)");
    check_same_datum(u.datum, v.datum);
    return GElem<TropInt>{u.datum, u,
                          std::vector<TropInt>(static_cast<size_t>(u.datum->rank()),
                                               TropInt::one()),
                          v};
}

}  // namespace totpos
