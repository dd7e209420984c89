#pragma once

#include <utility>
#include <vector>

#include "braid.hpp"
#include "rootdata.hpp"
#include "semifield.hpp"

namespace totpos {

// ---------------------------------------------------------------------------
// The monoid U(K) of 2.9 in canonical form: a Weyl piece w together with
// coordinates along the canonical (lex-smallest) reduced word of w.
// ---------------------------------------------------------------------------

template <Semifield K>
struct UElem {
    DatumPtr datum;
    Weyl w;
    std::vector<K> coords;  // along canonical_word(w)

    Word word() const { return canonical_word(w); }

    friend bool operator==(const UElem& x, const UElem& y) {
        return x.w == y.w && x.coords == y.coords;
    }
};

template <Semifield K>
UElem<K> u_identity(const DatumPtr& datum) {
    return UElem<K>{datum, Weyl::identity(datum), {}};
}

/// e_ii: coordinates along an arbitrary reduced word, stored canonically.
template <Semifield K>
UElem<K> u_from_word(const DatumPtr& datum, const Word& ii, std::vector<K> coords) {
    if (coords.size() != ii.size()) throw NotReduced("coordinate count must match word length");
    Weyl w = weyl_from_word(datum, ii);
    if (w.length() != static_cast<int>(ii.size()))
        throw NotReduced("u_from_word requires a reduced word");
    Word target = canonical_word(w);
    if (ii != target) coords = chart_transition(datum, ii, target, std::move(coords));
    return UElem<K>{datum, w, std::move(coords)};
}

/// Coordinates of x in the chart ii (which must be a reduced word of x.w).
template <Semifield K>
std::vector<K> u_to_word(const UElem<K>& x, const Word& ii) {
    Word from = x.word();
    if (ii == from) return x.coords;
    return chart_transition(x.datum, from, ii, x.coords);
}

/// Right multiplication by the generator i^a.
template <Semifield K>
UElem<K> u_right_gen_mul(const UElem<K>& x, int i, const K& a) {
    if (!x.w.has_right_descent(i)) {
        Word word = x.word();
        word.push_back(i);
        std::vector<K> coords = x.coords;
        coords.push_back(a);
        return u_from_word(x.datum, word, std::move(coords));
    }
    Word tail = canonical_word(x.w * Weyl::simple(x.datum, i));  // ii_{w s_i}
    tail.push_back(i);                                           // reduced word of w ending in i
    std::vector<K> coords = u_to_word(x, tail);
    coords.back() = coords.back() + a;
    return u_from_word(x.datum, tail, std::move(coords));
}

/// Left multiplication by the generator i^a.
template <Semifield K>
UElem<K> u_left_gen_mul(const UElem<K>& x, int i, const K& a) {
    Word word{i};
    if (!x.w.has_left_descent(i)) {
        Word rest = x.word();
        word.insert(word.end(), rest.begin(), rest.end());
        std::vector<K> coords{a};
        coords.insert(coords.end(), x.coords.begin(), x.coords.end());
        return u_from_word(x.datum, word, std::move(coords));
    }
    Word rest = canonical_word(Weyl::simple(x.datum, i) * x.w);  // ii_{s_i w}
    word.insert(word.end(), rest.begin(), rest.end());
    std::vector<K> coords = u_to_word(x, word);
    coords[0] = coords[0] + a;
    return u_from_word(x.datum, word, std::move(coords));
}

/// Monoid multiplication; the resulting piece is the Demazure product (2.11(c)).
template <Semifield K>
UElem<K> u_mul(const UElem<K>& x, const UElem<K>& y) {
    check_same_datum(x.datum, y.datum);
    UElem<K> acc = x;
    Word yw = y.word();
    for (size_t k = 0; k < yw.size(); ++k) acc = u_right_gen_mul(acc, yw[k], y.coords[k]);
    return acc;
}

/// The antiautomorphism Psi~ of 2.9(f): word and coordinate reversal.
template <Semifield K>
UElem<K> u_psi(const UElem<K>& x) {
    Word word = x.word();
    std::vector<K> coords = x.coords;
    std::reverse(word.begin(), word.end());
    std::reverse(coords.begin(), coords.end());
    return u_from_word(x.datum, word, std::move(coords));
}

/// T_{i,a} of 2.16: scale the leading coordinate in a chart starting with i.
template <Semifield K>
UElem<K> u_t_scale(const UElem<K>& x, int i, const K& a) {
    if (!x.w.has_left_descent(i)) throw NotADescent("T_{i,a} needs i to be a left descent");
    Word word{i};
    Word rest = canonical_word(Weyl::simple(x.datum, i) * x.w);
    word.insert(word.end(), rest.begin(), rest.end());
    std::vector<K> coords = u_to_word(x, word);
    coords[0] = coords[0] * a;
    return u_from_word(x.datum, word, std::move(coords));
}

/// theta_lambda of 2.17: product of pow(a_k, c_k) with
/// c_k = <s_{i_1}...s_{i_{k-1}}(coroot i_k), lambda>.
template <Semifield K>
K u_theta(const UElem<K>& x, const WeightVector& lam) {
    Word word = x.word();
    Weyl prefix = Weyl::identity(x.datum);
    K out = K::one();
    int r = x.datum->rank();
    for (size_t k = 0; k < word.size(); ++k) {
        std::vector<long long> e(r, 0);
        e[word[k]] = 1;
        auto beta = prefix.act_coroot(e);
        Int c(0);
        for (int l = 0; l < r; ++l) c += Int(beta[l]) * lam[l];
        out = out * pow(x.coords[k], c);
        prefix = prefix * Weyl::simple(x.datum, word[k]);
    }
    return out;
}

/// z_i of 8.1: the last coordinate in any chart of w_I ending with i.
template <Semifield K>
K u_z_coord(const UElem<K>& x, int i) {
    if (x.w != longest_element(x.datum)) throw Error("z_i is defined on the w_I piece only");
    Word word = canonical_word(x.w * Weyl::simple(x.datum, i));
    word.push_back(i);
    return u_to_word(x, word).back();
}

// --- the nonnegative submonoid U_w(N) and the section-10 partition ---------

inline bool u_is_nonneg(const UElem<TropInt>& x) {
    for (const TropInt& a : x.coords)
        if (a.v < 0) return false;
    return true;
}

/// chi_w of 10.1: Demazure product of the reflections at the zero coordinates
/// of the canonical chart. Chart-independent by 10.1(c).
inline Weyl u_chi(const UElem<TropInt>& x) {
    if (!u_is_nonneg(x)) throw NotInN("chi is defined on U_w(N) only");
    Word word = x.word();
    Weyl z = Weyl::identity(x.datum);
    for (size_t k = 0; k < word.size(); ++k)
        if (x.coords[k].v == 0 && !z.has_right_descent(word[k]))
            z = z * Weyl::simple(x.datum, word[k]);
    return z;
}

/// chi computed in an arbitrary chart of x.w (used by the invariance tests).
inline Weyl u_chi_in_chart(const UElem<TropInt>& x, const Word& ii) {
    std::vector<TropInt> coords = u_to_word(x, ii);
    Weyl z = Weyl::identity(x.datum);
    for (size_t k = 0; k < ii.size(); ++k)
        if (coords[k].v == 0 && !z.has_right_descent(ii[k]))
            z = z * Weyl::simple(x.datum, ii[k]);
    return z;
}

}  // namespace totpos
