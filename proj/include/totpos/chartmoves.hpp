#pragma once

#include <vector>

#include "braid.hpp"
#include "rootdata.hpp"
#include "semifield.hpp"

namespace totpos {

// ---------------------------------------------------------------------------
// Charts over the alphabet I ⊔ (-I) ⊔ uI and the elementary subtraction-free
// moves of 2.8 (plus the mixed-sign commutation implied by 2.10(vii) and the
// external edge 3.1(a) of the flag graph). Letter kinds: +1 = i (x side),
// -1 = -i (y side), 0 = ui (torus).
// ---------------------------------------------------------------------------

struct GLetter {
    int kind;  // +1, -1, 0
    int idx;   // 0-based index into I
    friend bool operator==(const GLetter&, const GLetter&) = default;
};

using GChart = std::vector<GLetter>;

struct GMove {
    enum Type {
        Braid,      // R(i,j) on [pos, pos+order), same-sign run
        TorusSwap,  // (uj, uk) <-> (uk, uj)
        TorusRight, // (uj, eps i) -> (eps i, uj):       (b,c) -> (b^{eps<j,i*>} c, b)
        TorusLeft,  // (eps i, uj) -> (uj, eps i):       (x,y) -> (y, y^{-eps<j,i*>} x)
        XYDown,     // (i, ui, -i) -> (-i, ui, i):       2.8(iv)
        XYUp,       // (-i, ui, i) -> (i, ui, -i):       inverse of 2.8(iv)
        MixedSwap,  // (eps i, -eps j) <-> swapped, i != j
        Extern,     // (i, ui) -> (-i, ui) at the chart end: (a,b) -> (a^{-1}, a b^{-1})
        ExternInv,  // (-i, ui) -> (i, ui):               (p,q) -> (p^{-1}, p^{-1} q^{-1})
    };
    Type type;
    int pos;
    int i = -1;      // Braid: first letter; Torus*: crossed letter; XY*: the index i
    int j = -1;      // Braid: second letter; Torus*: torus index
    int order = 0;   // Braid only
    int eps = 0;     // Torus* only
};

inline GMove invert_gmove(const GMove& m) {
    GMove r = m;
    switch (m.type) {
        case GMove::Braid: std::swap(r.i, r.j); break;
        case GMove::TorusSwap:
        case GMove::MixedSwap: break;
        case GMove::TorusRight: r.type = GMove::TorusLeft; break;
        case GMove::TorusLeft: r.type = GMove::TorusRight; break;
        case GMove::XYDown: r.type = GMove::XYUp; break;
        case GMove::XYUp: r.type = GMove::XYDown; break;
        case GMove::Extern: r.type = GMove::ExternInv; break;
        case GMove::ExternInv: r.type = GMove::Extern; break;
    }
    return r;
}

template <Semifield K>
void apply_gmove(const DatumPtr& datum, const GMove& m, std::vector<K>& v) {
    size_t t = static_cast<size_t>(m.pos);
    switch (m.type) {
        case GMove::Braid: rank2_move_inplace(datum, m.i, m.j, v, t); break;
        case GMove::TorusSwap:
        case GMove::MixedSwap: std::swap(v[t], v[t + 1]); break;
        case GMove::TorusRight: {
            K b = v[t];
            v[t] = pow(b, Int(m.eps * datum->pairing(m.j, m.i))) * v[t + 1];
            v[t + 1] = b;
            break;
        }
        case GMove::TorusLeft: {
            K y = v[t + 1];
            v[t + 1] = pow(y, Int(-m.eps * datum->pairing(m.j, m.i))) * v[t];
            v[t] = y;
            break;
        }
        case GMove::XYDown: {
            K a = v[t], b = v[t + 1], c = v[t + 2];
            K d = a * c + b * b;
            v[t] = sdiv(c, d);
            v[t + 1] = sdiv(d, b);
            v[t + 2] = sdiv(a, d);
            break;
        }
        case GMove::XYUp: {
            K p = v[t], q = v[t + 1], r = v[t + 2];
            K n = p * r * q * q + K::one();
            v[t] = sdiv(r * q * q, n);
            v[t + 1] = sdiv(q, n);
            v[t + 2] = sdiv(p * q * q, n);
            break;
        }
        case GMove::Extern: {
            K a = v[t];
            v[t] = inv(a);
            v[t + 1] = a * inv(v[t + 1]);
            break;
        }
        case GMove::ExternInv: {
            K pinv = inv(v[t]);
            v[t + 1] = pinv * inv(v[t + 1]);
            v[t] = pinv;
            break;
        }
    }
}

template <Semifield K>
void apply_gmoves(const DatumPtr& datum, const std::vector<GMove>& moves, std::vector<K>& v) {
    for (const GMove& m : moves) apply_gmove(datum, m, v);
}

template <Semifield K>
void apply_gmoves_inverted(const DatumPtr& datum, const std::vector<GMove>& moves,
                           std::vector<K>& v) {
    for (auto it = moves.rbegin(); it != moves.rend(); ++it)
        apply_gmove(datum, invert_gmove(*it), v);
}

// ---------------------------------------------------------------------------
// Chart validation
// ---------------------------------------------------------------------------

struct GChartInfo {
    Weyl wx, wy;  // pieces of the x and y subwords
    Word xword, yword;
};

inline GChartInfo validate_gchart(const DatumPtr& datum, const GChart& chart) {
    GChartInfo info;
    std::vector<int> seen(datum->rank(), 0);
    for (const GLetter& l : chart) {
        if (l.idx < 0 || l.idx >= datum->rank()) throw InvalidChart("letter index out of range");
        if (l.kind == +1)
            info.xword.push_back(l.idx);
        else if (l.kind == -1)
            info.yword.push_back(l.idx);
        else
            ++seen[l.idx];
    }
    for (int i = 0; i < datum->rank(); ++i)
        if (seen[i] != 1) throw InvalidChart("each torus letter must appear exactly once");
    info.wx = weyl_from_word(datum, info.xword);
    info.wy = weyl_from_word(datum, info.yword);
    if (info.wx.length() != static_cast<int>(info.xword.size()))
        throw InvalidChart("x subword is not reduced");
    if (info.wy.length() != static_cast<int>(info.yword.size()))
        throw InvalidChart("y subword is not reduced");
    return info;
}

// ---------------------------------------------------------------------------
// Recorded-move helpers. Each mutates the working chart and appends the moves
// it performed; replaying the moves on a coordinate vector tracks the point.
// ---------------------------------------------------------------------------

namespace chartdetail {

/// Swap the letters at pos, pos+1, recording the right move for the pair.
/// Same-sign pairs are not handled here (those need braid moves).
inline void swap_adjacent(const DatumPtr&, GChart& chart, std::vector<GMove>& moves, int pos) {
    const GLetter a = chart[pos], b = chart[pos + 1];
    GMove m;
    m.pos = pos;
    if (a.kind == 0 && b.kind == 0) {
        m.type = GMove::TorusSwap;
    } else if (a.kind == 0) {
        m.type = GMove::TorusRight;
        m.j = a.idx;
        m.i = b.idx;
        m.eps = b.kind;
    } else if (b.kind == 0) {
        m.type = GMove::TorusLeft;
        m.j = b.idx;
        m.i = a.idx;
        m.eps = a.kind;
    } else if (a.kind != b.kind && a.idx != b.idx) {
        m.type = GMove::MixedSwap;
    } else {
        throw Error("swap_adjacent: pair needs a braid or torus-mediated move");
    }
    moves.push_back(m);
    std::swap(chart[pos], chart[pos + 1]);
}

/// Move the torus letter at `from` to `to` by adjacent swaps.
inline void march_torus(const DatumPtr& datum, GChart& chart, std::vector<GMove>& moves,
                        int from, int to) {
    while (from < to) {
        swap_adjacent(datum, chart, moves, from);
        ++from;
    }
    while (from > to) {
        swap_adjacent(datum, chart, moves, from - 1);
        --from;
    }
}

inline int find_torus(const GChart& chart, int idx) {
    for (size_t p = 0; p < chart.size(); ++p)
        if (chart[p].kind == 0 && chart[p].idx == idx) return static_cast<int>(p);
    throw InvalidChart("missing torus letter");
}

/// Exchange adjacent (-i, i) at (pos, pos+1) into (i, -i), routing the torus
/// letter ui through the pair (2.8(iv) read backwards).
inline void exchange_yx_same_index(const DatumPtr& datum, GChart& chart,
                                   std::vector<GMove>& moves, int pos) {
    int i = chart[pos].idx;
    int q = find_torus(chart, i);
    int home = q;
    if (q < pos) {
        march_torus(datum, chart, moves, q, pos);  // lands between -i and i
        GMove m;
        m.type = GMove::XYUp;
        m.pos = pos - 1;
        m.i = i;
        moves.push_back(m);
        chart[pos - 1] = {+1, i};
        chart[pos + 1] = {-1, i};
        march_torus(datum, chart, moves, pos, home);
    } else {
        march_torus(datum, chart, moves, q, pos + 1);
        GMove m;
        m.type = GMove::XYUp;
        m.pos = pos;
        m.i = i;
        moves.push_back(m);
        chart[pos] = {+1, i};
        chart[pos + 2] = {-1, i};
        march_torus(datum, chart, moves, pos + 1, home);
    }
}

/// Braid-transition the run [base, base+word.size()) of same-sign letters to
/// the target word.
inline void braid_run(const DatumPtr& datum, GChart& chart, std::vector<GMove>& moves, int base,
                      const Word& from, const Word& to, int kind) {
    if (from == to) return;
    for (const BraidMove& bm : braid_path(datum, from, to)) {
        GMove m;
        m.type = GMove::Braid;
        m.pos = base + bm.pos;
        m.i = bm.i;
        m.j = bm.j;
        m.order = bm.order;
        moves.push_back(m);
        for (int k = 0; k < bm.order; ++k)
            chart[base + bm.pos + k] = {kind, (k % 2 == 0) ? bm.j : bm.i};
    }
}

}  // namespace chartdetail

/// Sorts a chart to the canonical arrangement of its piece:
/// x-run (canonical word) | torus letters ascending | y-run (canonical word).
/// Returns the moves; `chart` is left in the canonical arrangement.
inline std::vector<GMove> sort_chart_canonical(const DatumPtr& datum, GChart& chart) {
    using namespace chartdetail;
    std::vector<GMove> moves;
    const int r = datum->rank();
    const int M = static_cast<int>(chart.size());

    // Phase A: torus letters to the front, ascending by index.
    for (int slot = 0; slot < r; ++slot) {
        int best = -1;
        for (int p = slot; p < M; ++p)
            if (chart[p].kind == 0 && (best < 0 || chart[p].idx < chart[best].idx)) best = p;
        if (best < 0) throw InvalidChart("chart is missing torus letters");
        march_torus(datum, chart, moves, best, slot);
    }

    // Phase B: bubble x letters before y letters in the suffix.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p = r; p + 1 < M; ++p) {
            if (chart[p].kind == -1 && chart[p + 1].kind == +1) {
                if (chart[p].idx != chart[p + 1].idx)
                    swap_adjacent(datum, chart, moves, p);
                else
                    exchange_yx_same_index(datum, chart, moves, p);
                changed = true;
            }
        }
    }

    // Phase D: torus block to the middle (largest index first keeps it sorted).
    int mx = 0;
    for (const GLetter& l : chart)
        if (l.kind == +1) ++mx;
    for (int k = r - 1; k >= 0; --k) march_torus(datum, chart, moves, k, k + mx);

    // Phase C: braid both runs to their canonical words.
    Word xw, yw;
    for (const GLetter& l : chart) {
        if (l.kind == +1) xw.push_back(l.idx);
        if (l.kind == -1) yw.push_back(l.idx);
    }
    chartdetail::braid_run(datum, chart, moves, 0, xw,
                           canonical_word(weyl_from_word(datum, xw)), +1);
    chartdetail::braid_run(datum, chart, moves, mx + r, yw,
                           canonical_word(weyl_from_word(datum, yw)), -1);
    return moves;
}

/// Canonical arrangement of the piece (w, w') as a chart.
inline GChart canonical_gchart(const DatumPtr& datum, const Weyl& wx, const Weyl& wy) {
    GChart chart;
    for (int i : canonical_word(wx)) chart.push_back({+1, i});
    for (int i = 0; i < datum->rank(); ++i) chart.push_back({0, i});
    for (int i : canonical_word(wy)) chart.push_back({-1, i});
    return chart;
}

}  // namespace totpos
