#pragma once

#include <vector>

#include "rootdata.hpp"
#include "semifield.hpp"

namespace totpos {

// ---------------------------------------------------------------------------
// R(i,j): the subtraction-free coordinate change between the two alternating
// rank-2 words (2.4). R(i,j) maps FROM the word starting with i.
// ---------------------------------------------------------------------------

namespace detail {

template <Semifield K>
void rank2_order3(std::vector<K>& v, size_t t) {
    // (a,b,c) -> (bc/(a+c), a+c, ab/(a+c))
    K a = v[t], b = v[t + 1], c = v[t + 2];
    K s = a + c;
    v[t] = sdiv(b * c, s);
    v[t + 1] = s;
    v[t + 2] = sdiv(a * b, s);
}

template <Semifield K>
void rank2_order4_minus2(std::vector<K>& v, size_t t) {
    // <i,j*> = -2 orientation, 2.4(d):
    // (a,b,c,d) -> (bc^2d/E, E/A, A^2/E, abc/A),
    // A = ab+ad+cd, E = a^2b+a^2d+c^2d+2acd
    K a = v[t], b = v[t + 1], c = v[t + 2], d = v[t + 3];
    K A = a * b + a * d + c * d;
    K E = a * a * b + a * a * d + c * c * d + (K::one() + K::one()) * a * c * d;
    v[t] = sdiv(b * c * c * d, E);
    v[t + 1] = sdiv(E, A);
    v[t + 2] = sdiv(A * A, E);
    v[t + 3] = sdiv(a * b * c, A);
}

template <Semifield K>
void rank2_order4_minus1(std::vector<K>& v, size_t t) {
    // <i,j*> = -1 orientation: the inverse map 2.4(e), read as a map from the
    // word starting with i.
    K a = v[t], b = v[t + 1], c = v[t + 2], d = v[t + 3];
    K A = c * d + a * d + a * b;
    K E = d * d * c + a * d * d + a * b * b + (K::one() + K::one()) * a * b * d;
    v[t] = sdiv(b * c * d, A);
    v[t + 1] = sdiv(A * A, E);
    v[t + 2] = sdiv(E, A);
    v[t + 3] = sdiv(a * b * b * c, E);
}

}  // namespace detail

template <Semifield K>
void fold_rank2_inplace(const DatumPtr& datum, int i, int j, std::vector<K>& v, size_t t);

/// Applies R(i,j) to coords[t .. t+m) in place, m = order of s_i s_j.
template <Semifield K>
void rank2_move_inplace(const DatumPtr& datum, int i, int j, std::vector<K>& v, size_t t) {
    int m = datum->bond_order(i, j);
    if (t + static_cast<size_t>(m) > v.size()) throw InvalidWordPair("rank-2 move out of range");
    switch (m) {
        case 2: std::swap(v[t], v[t + 1]); break;
        case 3: detail::rank2_order3(v, t); break;
        case 4:
            if (datum->pairing(i, j) == -2)
                detail::rank2_order4_minus2(v, t);
            else
                detail::rank2_order4_minus1(v, t);
            break;
        case 6: fold_rank2_inplace(datum, i, j, v, t); break;
        default: throw Error("unexpected bond order");
    }
}

template <Semifield K>
std::vector<K> rank2_move(const DatumPtr& datum, int i, int j, std::vector<K> coords) {
    if (static_cast<int>(coords.size()) != datum->bond_order(i, j))
        throw InvalidWordPair("rank2_move: coordinate count must equal the bond order");
    rank2_move_inplace(datum, i, j, coords, 0);
    return coords;
}

// ---------------------------------------------------------------------------
// Folding (2.3): computes R(i,j) for bond order 4 or 6 through the longest
// chart transition of a simply-laced group of type A3 (e'=2) or D4 (e'=3)
// with an automorphism folding onto the rank-2 group.
// ---------------------------------------------------------------------------

namespace detail {

struct FoldData {
    DatumPtr dot;               // A3 or D4; sigma_1..sigma_e' at 0..e'-1, sigma_0 at e'
    std::vector<BraidMove> path_case_i;   // E1 -> E2
    std::vector<BraidMove> path_case_ii;  // E2 -> E1
};

inline const FoldData& fold_data(int eprime) {
    static const FoldData a3 = [] {
        FoldData f;
        f.dot = CartanDatum::from_matrix({{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}}, "A3-fold");
        Word e1, e2;
        for (int rep = 0; rep < 2; ++rep) {
            for (int c = 0; c <= 2; ++c) e1.push_back(c);
            e2.push_back(2);
            for (int c = 0; c <= 1; ++c) e2.push_back(c);
        }
        f.path_case_i = braid_path(f.dot, e1, e2);
        f.path_case_ii = braid_path(f.dot, e2, e1);
        return f;
    }();
    static const FoldData d4 = [] {
        FoldData f;
        f.dot = CartanDatum::from_matrix(
            {{2, 0, 0, -1}, {0, 2, 0, -1}, {0, 0, 2, -1}, {-1, -1, -1, 2}}, "D4-fold");
        Word e1, e2;
        for (int rep = 0; rep < 3; ++rep) {
            for (int c = 0; c <= 3; ++c) e1.push_back(c);
            e2.push_back(3);
            for (int c = 0; c <= 2; ++c) e2.push_back(c);
        }
        f.path_case_i = braid_path(f.dot, e1, e2);
        f.path_case_ii = braid_path(f.dot, e2, e1);
        return f;
    }();
    return eprime == 2 ? a3 : d4;
}

}  // namespace detail

template <Semifield K>
void fold_rank2_inplace(const DatumPtr& datum, int i, int j, std::vector<K>& v, size_t t) {
    int e = datum->bond_order(i, j);
    if (e != 4 && e != 6) throw InvalidWordPair("fold_rank2 needs a bond of order 4 or 6");
    int eprime = e / 2;
    bool case_i = datum->pairing(i, j) == -eprime;  // otherwise <i,j*> = -1
    const detail::FoldData& fd = detail::fold_data(eprime);

    // lambda: spread the 2e' folded coordinates over the e'(e'+1) chart
    size_t big = static_cast<size_t>(eprime * (eprime + 1));
    std::vector<K> w;
    w.reserve(big);
    for (int blockpair = 0; blockpair < eprime; ++blockpair) {
        K first = v[t + 2 * blockpair];
        K second = v[t + 2 * blockpair + 1];
        if (case_i) {
            for (int c = 0; c < eprime; ++c) w.push_back(first);  // sigma-block
            w.push_back(second);                                  // sigma_0
        } else {
            w.push_back(first);                                    // sigma_0
            for (int c = 0; c < eprime; ++c) w.push_back(second);  // sigma-block
        }
    }

    for (const BraidMove& mv : case_i ? fd.path_case_i : fd.path_case_ii)
        rank2_move_inplace(fd.dot, mv.i, mv.j, w, static_cast<size_t>(mv.pos));

    // mu: read the folded coordinates back off the target chart
    for (int blockpair = 0; blockpair < eprime; ++blockpair) {
        size_t base = static_cast<size_t>(blockpair * (eprime + 1));
        if (case_i) {
            v[t + 2 * blockpair] = w[base];          // sigma_0 coordinate
            v[t + 2 * blockpair + 1] = w[base + 1];  // first of sigma-block
        } else {
            v[t + 2 * blockpair] = w[base];                                  // block start
            v[t + 2 * blockpair + 1] = w[base + static_cast<size_t>(eprime)];  // sigma_0
        }
    }
}

template <Semifield K>
std::vector<K> fold_rank2(const DatumPtr& datum, int i, int j, std::vector<K> coords) {
    if (static_cast<int>(coords.size()) != datum->bond_order(i, j))
        throw InvalidWordPair("fold_rank2: coordinate count must equal the bond order");
    fold_rank2_inplace(datum, i, j, coords, 0);
    return coords;
}

/// Order-4 cross-check path: the same folding construction, bypassing the
/// closed formula 2.4(d).
template <Semifield K>
std::vector<K> fold_rank2_order4(const DatumPtr& datum, int i, int j, std::vector<K> coords) {
    if (datum->bond_order(i, j) != 4) throw InvalidWordPair("bond order is not 4");
    fold_rank2_inplace(datum, i, j, coords, 0);
    return coords;
}

// ---------------------------------------------------------------------------
// General chart transition R_ii^ii' (2.3(b)) by composing braid moves.
// ---------------------------------------------------------------------------

template <Semifield K>
std::vector<K> chart_transition(const DatumPtr& datum, const Word& ii, const Word& iip,
                                std::vector<K> coords) {
    if (coords.size() != ii.size())
        throw InvalidWordPair("chart_transition: coordinate count must equal word length");
    for (const BraidMove& mv : braid_path(datum, ii, iip))
        rank2_move_inplace(datum, mv.i, mv.j, coords, static_cast<size_t>(mv.pos));
    return coords;
}

/// Replay a precomputed braid path (used where the path is cached).
template <Semifield K>
void apply_braid_path(const DatumPtr& datum, const std::vector<BraidMove>& path,
                      std::vector<K>& coords) {
    for (const BraidMove& mv : path)
        rank2_move_inplace(datum, mv.i, mv.j, coords, static_cast<size_t>(mv.pos));
}

}  // namespace totpos
