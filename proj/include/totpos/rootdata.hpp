#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace totpos {

using Word = std::vector<int>;  // letters are 0-based indices into I

/// One braid move: positions [pos, pos+order) hold (i,j,i,...) before the
/// move and (j,i,j,...) after it.
struct BraidMove {
    int pos;
    int i;
    int j;
    int order;
};

// ---------------------------------------------------------------------------
// CartanDatum: Cartan matrix of finite type plus derived combinatorics.
// a[i][j] = <i, j*> (pairing of coroot i with simple root j).
// ---------------------------------------------------------------------------

class CartanDatum {
  public:
    static std::shared_ptr<const CartanDatum> from_matrix(std::vector<std::vector<int>> a,
                                                          std::string label = "");
    static std::shared_ptr<const CartanDatum> from_type(std::string_view type);

    int rank() const { return r_; }
    const std::string& label() const { return label_; }
    int pairing(int i, int j) const { return a_[i][j]; }  // <i, j*>
    int bond_order(int i, int j) const { return bond_[i][j]; }
    int num_positive_coroots() const { return static_cast<int>(pos_coroots_.size()); }
    const std::vector<std::vector<long long>>& positive_coroots() const { return pos_coroots_; }

    bool same(const CartanDatum& other) const { return a_ == other.a_; }

    bool simply_laced() const {
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j)
                if (i != j && bond_[i][j] > 3) return false;
        return true;
    }

    /// True when the matrix is the standard A_n chain 0-1-2-...  The matrix
    /// model only ships for this shape.
    bool is_type_a() const {
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j) {
                int want = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
                if (a_[i][j] != want) return false;
            }
        return true;
    }

  private:
    CartanDatum() = default;
    void validate_and_derive();

    int r_ = 0;
    std::string label_;
    std::vector<std::vector<int>> a_;
    std::vector<std::vector<int>> bond_;
    std::vector<std::vector<long long>> pos_coroots_;
};

using DatumPtr = std::shared_ptr<const CartanDatum>;

inline void check_same_datum(const DatumPtr& x, const DatumPtr& y) {
    if (x.get() == y.get()) return;
    if (!x || !y || !x->same(*y)) throw DatumMismatch("operands belong to different Cartan data");
}

// ---------------------------------------------------------------------------
// Weyl group elements, represented by their integer matrix acting on the
// coroot lattice Y (and the inverse matrix, kept to make descents cheap).
// ---------------------------------------------------------------------------

class Weyl {
  public:
    Weyl() = default;
    static Weyl identity(DatumPtr datum) {
        Weyl w;
        w.datum_ = std::move(datum);
        int r = w.datum_->rank();
        w.mat_.assign(r * r, 0);
        w.inv_.assign(r * r, 0);
        for (int i = 0; i < r; ++i) w.mat_[i * r + i] = w.inv_[i * r + i] = 1;
        return w;
    }
    static Weyl simple(const DatumPtr& datum, int i) {
        Weyl w = identity(datum);
        int r = datum->rank();
        for (int k = 0; k < r; ++k) w.mat_[i * r + k] -= datum->pairing(k, i);
        w.inv_ = w.mat_;
        return w;
    }

    const DatumPtr& datum() const { return datum_; }
    int rank() const { return datum_->rank(); }

    friend Weyl operator*(const Weyl& x, const Weyl& y) {
        check_same_datum(x.datum_, y.datum_);
        int r = x.rank();
        Weyl z;
        z.datum_ = x.datum_;
        z.mat_.assign(r * r, 0);
        z.inv_.assign(r * r, 0);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) {
                long long m = x.mat_[i * r + k];
                long long n = y.inv_[i * r + k];
                if (m != 0)
                    for (int j = 0; j < r; ++j) z.mat_[i * r + j] += m * y.mat_[k * r + j];
                if (n != 0)
                    for (int j = 0; j < r; ++j) z.inv_[i * r + j] += n * x.inv_[k * r + j];
            }
        return z;
    }
    friend bool operator==(const Weyl& x, const Weyl& y) { return x.mat_ == y.mat_; }
    friend bool operator!=(const Weyl& x, const Weyl& y) { return !(x == y); }
    bool operator<(const Weyl& o) const { return mat_ < o.mat_; }

    bool is_identity() const {
        int r = rank();
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (mat_[i * r + j] != (i == j)) return false;
        return true;
    }

    Weyl inverse() const {
        Weyl w = *this;
        std::swap(w.mat_, w.inv_);
        return w;
    }

    /// Image of coroot ζ (coordinates in the simple-coroot basis).
    std::vector<long long> act_coroot(const std::vector<long long>& zeta) const {
        int r = rank();
        std::vector<long long> out(r, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) out[i] += mat_[i * r + j] * zeta[j];
        return out;
    }

    int length() const {
        int len = 0;
        for (const auto& beta : datum_->positive_coroots())
            if (is_negative(act_coroot(beta))) ++len;
        return len;
    }

    /// |w s_i| < |w|  <=>  w(coroot i) < 0.
    bool has_right_descent(int i) const { return column_negative(mat_, i); }
    /// |s_i w| < |w|  <=>  w^{-1}(coroot i) < 0.
    bool has_left_descent(int i) const { return column_negative(inv_, i); }

    std::vector<int> right_descents() const {
        std::vector<int> d;
        for (int i = 0; i < rank(); ++i)
            if (has_right_descent(i)) d.push_back(i);
        return d;
    }
    std::vector<int> left_descents() const {
        std::vector<int> d;
        for (int i = 0; i < rank(); ++i)
            if (has_left_descent(i)) d.push_back(i);
        return d;
    }

    const std::vector<long long>& raw() const { return mat_; }

  private:
    static bool is_negative(const std::vector<long long>& v) {
        bool nonzero = false;
        for (long long x : v) {
            if (x > 0) return false;
            if (x < 0) nonzero = true;
        }
        return nonzero;
    }
    bool column_negative(const std::vector<long long>& m, int col) const {
        int r = rank();
        bool nonzero = false;
        for (int i = 0; i < r; ++i) {
            long long x = m[i * r + col];
            if (x > 0) return false;
            if (x < 0) nonzero = true;
        }
        return nonzero;
    }

    DatumPtr datum_;
    std::vector<long long> mat_;
    std::vector<long long> inv_;
};

inline Weyl weyl_from_word(const DatumPtr& datum, const Word& word) {
    Weyl w = Weyl::identity(datum);
    for (int i : word) w = w * Weyl::simple(datum, i);
    return w;
}

inline bool is_reduced(const DatumPtr& datum, const Word& word) {
    return weyl_from_word(datum, word).length() == static_cast<int>(word.size());
}

/// Lexicographically smallest reduced word (the module-wide canonical chart).
inline Word canonical_word(const Weyl& w) {
    Word out;
    Weyl v = w;
    while (!v.is_identity()) {
        int i = 0;
        while (!v.has_left_descent(i)) ++i;
        out.push_back(i);
        v = Weyl::simple(v.datum(), i) * v;
    }
    return out;
}

inline Weyl longest_element(const DatumPtr& datum) {
    Weyl w = Weyl::identity(datum);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < datum->rank(); ++i)
            if (!w.has_right_descent(i)) {
                w = w * Weyl::simple(datum, i);
                moved = true;
                break;
            }
    }
    return w;
}

/// The involution i -> i^! with w_I s_i w_I = s_{i^!}.
inline int bang(const DatumPtr& datum, int i) {
    Weyl wI = longest_element(datum);
    Weyl conj = wI * Weyl::simple(datum, i) * wI;
    for (int j = 0; j < datum->rank(); ++j)
        if (conj == Weyl::simple(datum, j)) return j;
    throw Error("bang: conjugate of a simple reflection is not simple");
}

/// Demazure (monoid) product: fold w' one generator at a time.
inline Weyl demazure_mul(const Weyl& w, const Weyl& wp) {
    check_same_datum(w.datum(), wp.datum());
    Weyl v = w;
    for (int i : canonical_word(wp))
        if (!v.has_right_descent(i)) v = v * Weyl::simple(v.datum(), i);
    return v;
}

/// Streams every reduced word of w exactly once (DFS over left descents,
/// lexicographic order). Return false from fn to stop early.
inline void for_each_reduced_word(const Weyl& w, const std::function<bool(const Word&)>& fn) {
    Word prefix;
    std::function<bool(const Weyl&)> go = [&](const Weyl& v) -> bool {
        if (v.is_identity()) return fn(prefix);
        for (int i = 0; i < v.rank(); ++i)
            if (v.has_left_descent(i)) {
                prefix.push_back(i);
                bool cont = go(Weyl::simple(v.datum(), i) * v);
                prefix.pop_back();
                if (!cont) return false;
            }
        return true;
    };
    go(w);
}

inline std::vector<Word> reduced_words(const Weyl& w, size_t cap = SIZE_MAX) {
    std::vector<Word> out;
    for_each_reduced_word(w, [&](const Word& word) {
        out.push_back(word);
        return out.size() < cap;
    });
    return out;
}

/// Single braid moves applicable to a reduced word.
inline std::vector<BraidMove> applicable_moves(const DatumPtr& datum, const Word& word) {
    std::vector<BraidMove> moves;
    int m = static_cast<int>(word.size());
    for (int t = 0; t < m - 1; ++t) {
        int i = word[t], j = word[t + 1];
        if (i == j) continue;
        int order = datum->bond_order(i, j);
        if (t + order > m) continue;
        bool ok = true;
        for (int k = 0; k < order; ++k)
            if (word[t + k] != (k % 2 == 0 ? i : j)) {
                ok = false;
                break;
            }
        if (ok) moves.push_back({t, i, j, order});
    }
    return moves;
}

inline Word apply_braid_move(const Word& word, const BraidMove& mv) {
    Word out = word;
    for (int k = 0; k < mv.order; ++k) out[mv.pos + k] = (k % 2 == 0) ? mv.j : mv.i;
    return out;
}

/// Shortest sequence of braid moves from ii to ii' (Iwahori's lemma; BFS over
/// the reduced-word graph).
inline std::vector<BraidMove> braid_path(const DatumPtr& datum, const Word& ii, const Word& iip) {
    if (ii.size() != iip.size()) throw InvalidWordPair("words have different lengths");
    Weyl w = weyl_from_word(datum, ii);
    if (w.length() != static_cast<int>(ii.size())) throw InvalidWordPair("first word not reduced");
    Weyl wp = weyl_from_word(datum, iip);
    if (wp.length() != static_cast<int>(iip.size()))
        throw InvalidWordPair("second word not reduced");
    if (w != wp) throw InvalidWordPair("words describe different Weyl elements");
    if (ii == iip) return {};

    std::map<Word, std::pair<Word, BraidMove>> parent;  // word -> (previous, move)
    std::deque<Word> queue{ii};
    parent[ii] = {ii, BraidMove{-1, -1, -1, -1}};
    while (!queue.empty()) {
        Word cur = queue.front();
        queue.pop_front();
        for (const BraidMove& mv : applicable_moves(datum, cur)) {
            Word nxt = apply_braid_move(cur, mv);
            if (parent.count(nxt)) continue;
            parent[nxt] = {cur, mv};
            if (nxt == iip) {
                std::vector<BraidMove> path;
                Word at = nxt;
                while (at != ii) {
                    auto& [prev, step] = parent[at];
                    path.push_back(step);
                    at = prev;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(nxt);
        }
    }
    throw InvalidWordPair("reduced-word graph is not connected (should not happen)");
}

// ---------------------------------------------------------------------------
// Weight and coweight vectors. Weights are stored by their pairing values
// lambda(i) = <i, lambda> (fundamental-weight coordinates), which is the only
// data every operation here consumes.
// ---------------------------------------------------------------------------

using WeightVector = std::vector<Int>;    // lambda(i) for i in I
using CoweightVector = std::vector<Int>;  // coordinates in the coroot basis

inline WeightVector weyl_act_weight(const Weyl& w, const WeightVector& lam) {
    int r = w.rank();
    const Weyl winv = w.inverse();
    WeightVector out(r, Int(0));
    // (w lambda)(i) = <w^{-1}(coroot i), lambda>
    for (int i = 0; i < r; ++i) {
        std::vector<long long> e(r, 0);
        e[i] = 1;
        auto img = winv.act_coroot(e);
        for (int k = 0; k < r; ++k) out[i] += Int(img[k]) * lam[k];
    }
    return out;
}

inline CoweightVector weyl_act_coweight(const Weyl& w, const CoweightVector& zeta) {
    int r = w.rank();
    CoweightVector out(r, Int(0));
    for (int i = 0; i < r; ++i) {
        std::vector<long long> e(r, 0);
        e[i] = 1;
        auto img = w.act_coroot(e);
        for (int k = 0; k < r; ++k) out[k] += Int(img[k]) * zeta[i];
    }
    return out;
}

inline WeightVector bang_weight(const DatumPtr& datum, const WeightVector& lam) {
    WeightVector out(datum->rank());
    for (int i = 0; i < datum->rank(); ++i) out[i] = lam[bang(datum, i)];
    return out;
}

/// Products of subwords of a reduced word for w = the Bruhat interval [1, w].
inline std::set<Weyl> bruhat_interval(const Weyl& w) {
    std::set<Weyl> interval{Weyl::identity(w.datum())};
    for (int i : canonical_word(w)) {
        std::set<Weyl> next = interval;
        for (const Weyl& u : interval) next.insert(u * Weyl::simple(w.datum(), i));
        interval = std::move(next);
    }
    return interval;
}

inline bool bruhat_leq(const Weyl& u, const Weyl& w) { return bruhat_interval(w).count(u) > 0; }

// ---------------------------------------------------------------------------
// CartanDatum implementation
// ---------------------------------------------------------------------------

inline void CartanDatum::validate_and_derive() {
    r_ = static_cast<int>(a_.size());
    if (r_ == 0) throw ParseError("empty Cartan matrix");
    for (const auto& row : a_)
        if (static_cast<int>(row.size()) != r_) throw ParseError("Cartan matrix is not square");
    bond_.assign(r_, std::vector<int>(r_, 0));
    for (int i = 0; i < r_; ++i) {
        if (a_[i][i] != 2) throw ParseError("Cartan matrix diagonal must be 2");
        for (int j = 0; j < r_; ++j) {
            if (i == j) continue;
            if (a_[i][j] > 0) throw ParseError("off-diagonal Cartan entries must be <= 0");
            if ((a_[i][j] == 0) != (a_[j][i] == 0))
                throw ParseError("Cartan matrix zero pattern must be symmetric");
            int p = a_[i][j] * a_[j][i];
            int m;
            switch (p) {
                case 0: m = 2; break;
                case 1: m = 3; break;
                case 2: m = 4; break;
                case 3: m = 6; break;
                default: throw ParseError("bond <i,j*><j,i*> must be in {0,1,2,3} (finite type)");
            }
            bond_[i][j] = m;
        }
    }

    // Symmetrize and check positive definiteness (finite type, so W is finite
    // and w_I exists).
    std::vector<Rat> d(r_, Rat(0));
    for (int start = 0; start < r_; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < r_; ++j) {
                if (a_[i][j] == 0 || i == j) continue;
                Rat need = d[i] * Rat(a_[i][j]) / Rat(a_[j][i]);
                if (d[j] == 0) {
                    d[j] = need;
                    queue.push_back(j);
                } else if (d[j] != need) {
                    throw ParseError("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    std::vector<std::vector<Rat>> s(r_, std::vector<Rat>(r_));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) s[i][j] = d[i] * Rat(a_[i][j]);
    for (int k = 1; k <= r_; ++k) {  // leading principal minors via Gauss
        std::vector<std::vector<Rat>> m(s.begin(), s.begin() + k);
        for (auto& row : m) row.resize(k);
        Rat det(1);
        for (int c = 0; c < k; ++c) {
            int pivot = -1;
            for (int rr = c; rr < k; ++rr)
                if (m[rr][c] != 0) {
                    pivot = rr;
                    break;
                }
            if (pivot < 0) {
                det = 0;
                break;
            }
            if (pivot != c) {
                std::swap(m[pivot], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (int rr = c + 1; rr < k; ++rr) {
                Rat f = m[rr][c] / m[c][c];
                for (int cc = c; cc < k; ++cc) m[rr][cc] -= f * m[c][cc];
            }
        }
        if (det <= 0) throw ParseError("Cartan matrix is not of finite type");
    }

    // Positive coroots by closure under simple reflections.
    std::set<std::vector<long long>> pos;
    std::deque<std::vector<long long>> queue;
    for (int i = 0; i < r_; ++i) {
        std::vector<long long> e(r_, 0);
        e[i] = 1;
        pos.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < r_; ++i) {
            // s_i(beta) = beta - <beta, i*> coroot_i
            long long pair = 0;
            for (int k = 0; k < r_; ++k) pair += beta[k] * a_[k][i];
            auto img = beta;
            img[i] -= pair;
            bool nonneg = true;
            for (long long x : img) nonneg = nonneg && x >= 0;
            if (nonneg && !pos.count(img)) {
                pos.insert(img);
                queue.push_back(img);
            }
        }
    }
    pos_coroots_.assign(pos.begin(), pos.end());
}

inline std::shared_ptr<const CartanDatum> CartanDatum::from_matrix(
    std::vector<std::vector<int>> a, std::string label) {
    auto d = std::shared_ptr<CartanDatum>(new CartanDatum());
    d->a_ = std::move(a);
    d->label_ = std::move(label);
    d->validate_and_derive();
    return d;
}

inline std::shared_ptr<const CartanDatum> CartanDatum::from_type(std::string_view type) {
    if (type.size() < 2) throw ParseError("bad Cartan type literal: " + std::string(type));
    char family = type[0];
    int n = 0;
    try {
        n = std::stoi(std::string(type.substr(1)));
    } catch (const std::exception&) {
        throw ParseError("bad Cartan type literal: " + std::string(type));
    }
    auto chain = [&](int len) {
        std::vector<std::vector<int>> a(len, std::vector<int>(len, 0));
        for (int i = 0; i < len; ++i) {
            a[i][i] = 2;
            if (i + 1 < len) a[i][i + 1] = a[i + 1][i] = -1;
        }
        return a;
    };
    std::vector<std::vector<int>> a;
    switch (family) {
        case 'A':
            if (n < 1) throw ParseError("A<n> needs n >= 1");
            a = chain(n);
            break;
        case 'B':
            if (n < 2) throw ParseError("B<n> needs n >= 2");
            a = chain(n);
            a[n - 2][n - 1] = -2;  // alpha_n short
            break;
        case 'C':
            if (n < 2) throw ParseError("C<n> needs n >= 2");
            a = chain(n);
            a[n - 1][n - 2] = -2;
            break;
        case 'D':
            if (n < 3) throw ParseError("D<n> needs n >= 3");
            a = chain(n - 1);
            for (auto& row : a) row.push_back(0);
            a.emplace_back(n, 0);
            a[n - 1][n - 1] = 2;
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
            break;
        case 'E': {
            if (n < 6 || n > 8) throw ParseError("E<n> needs n in {6,7,8}");
            a = chain(n - 1);  // chain 0-1-...-(n-2), extra node attached to node 2
            for (auto& row : a) row.push_back(0);
            a.emplace_back(n, 0);
            a[n - 1][n - 1] = 2;
            a[2][n - 1] = a[n - 1][2] = -1;
            break;
        }
        case 'F':
            if (n != 4) throw ParseError("only F4 exists");
            a = chain(4);
            a[1][2] = -2;
            a[2][1] = -1;
            break;
        case 'G':
            if (n != 2) throw ParseError("only G2 exists");
            a = {{2, -1}, {-3, 2}};
            break;
        default: throw ParseError("unknown Cartan family: " + std::string(type));
    }
    return from_matrix(std::move(a), std::string(type));
}

}  // namespace totpos
