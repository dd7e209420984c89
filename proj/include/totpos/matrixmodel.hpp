#pragma once

#include <utility>
#include <vector>

#include "gmonoid.hpp"
#include "ratfunc.hpp"
#include "umonoid.hpp"

namespace totpos {

// ---------------------------------------------------------------------------
// Type-A oracle: SL_{n+1} over an exact field (Rat or RatFunc). Letter i
// (0-based) acts on rows/columns i, i+1.
// ---------------------------------------------------------------------------

template <ExactField F>
struct Mat {
    int n = 0;  // dimension
    std::vector<F> a;

    static Mat identity(int n) {
        Mat m;
        m.n = n;
        m.a.assign(static_cast<size_t>(n) * n, F(0));
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }
    F& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const F& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat z = Mat::identity(x.n);
        for (int i = 0; i < x.n; ++i)
            for (int j = 0; j < x.n; ++j) {
                F s(0);
                for (int k = 0; k < x.n; ++k) s = s + x.at(i, k) * y.at(k, j);
                z.at(i, j) = s;
            }
        return z;
    }
    friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }
};

enum class GenMatKind { X, Y, Cochar, Sdot };

template <ExactField F>
Mat<F> gen_matrix(int n, GenMatKind kind, int i, const F& value = F(1)) {
    if (i < 0 || i + 1 >= n) throw TypeNotSupported("generator index out of range");
    Mat<F> m = Mat<F>::identity(n);
    switch (kind) {
        case GenMatKind::X: m.at(i, i + 1) = value; break;
        case GenMatKind::Y: m.at(i + 1, i) = value; break;
        case GenMatKind::Cochar:
            m.at(i, i) = value;
            m.at(i + 1, i + 1) = F(1) / value;
            break;
        case GenMatKind::Sdot:
            m.at(i, i) = F(0);
            m.at(i + 1, i + 1) = F(0);
            m.at(i, i + 1) = F(1);
            m.at(i + 1, i) = F(0) - F(1);
            break;
    }
    return m;
}

inline void require_type_a(const DatumPtr& datum) {
    if (!datum->is_type_a())
        throw TypeNotSupported("the matrix model ships for type A only");
}

template <ExactField F>
Mat<F> sdot_of(const DatumPtr& datum, const Weyl& w) {
    require_type_a(datum);
    int n = datum->rank() + 1;
    Mat<F> m = Mat<F>::identity(n);
    for (int i : canonical_word(w)) m = m * gen_matrix<F>(n, GenMatKind::Sdot, i);
    return m;
}

/// zeta of 2.9(d): evaluate a U(K) element as a unitriangular matrix.
template <Semifield K>
Mat<field_of_t<K>> eval_u(const UElem<K>& x) {
    using F = field_of_t<K>;
    require_type_a(x.datum);
    int n = x.datum->rank() + 1;
    Mat<F> m = Mat<F>::identity(n);
    Word word = x.word();
    for (size_t k = 0; k < word.size(); ++k)
        m = m * gen_matrix<F>(n, GenMatKind::X, word[k], to_field(x.coords[k]));
    return m;
}

/// Mirror of eval_u for coordinates meant as a product of y generators.
template <Semifield K>
Mat<field_of_t<K>> eval_u_minus(const UElem<K>& x) {
    using F = field_of_t<K>;
    require_type_a(x.datum);
    int n = x.datum->rank() + 1;
    Mat<F> m = Mat<F>::identity(n);
    Word word = x.word();
    for (size_t k = 0; k < word.size(); ++k)
        m = m * gen_matrix<F>(n, GenMatKind::Y, word[k], to_field(x.coords[k]));
    return m;
}

/// beta of 2.10(f): evaluate a G(K) element through its canonical triple.
template <Semifield K>
Mat<field_of_t<K>> eval_g(const GElem<K>& x) {
    using F = field_of_t<K>;
    require_type_a(x.datum);
    int n = x.datum->rank() + 1;
    Mat<F> m = eval_u(x.uplus);
    for (int i = 0; i < x.datum->rank(); ++i)
        m = m * gen_matrix<F>(n, GenMatKind::Cochar, i, to_field(x.torus[i]));
    return m * eval_u_minus(x.uminus);
}

template <Semifield K>
Mat<field_of_t<K>> eval_letters(const DatumPtr& datum, const GChart& chart,
                                const std::vector<K>& coords) {
    using F = field_of_t<K>;
    require_type_a(datum);
    int n = datum->rank() + 1;
    Mat<F> m = Mat<F>::identity(n);
    for (size_t s = 0; s < chart.size(); ++s) {
        GenMatKind kind = chart[s].kind == +1  ? GenMatKind::X
                          : chart[s].kind == -1 ? GenMatKind::Y
                                                : GenMatKind::Cochar;
        m = m * gen_matrix<F>(n, kind, chart[s].idx, to_field(coords[s]));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Factorizations for phi and phi' (4.1).
// ---------------------------------------------------------------------------

namespace matdetail {

/// g = B * M with B upper triangular and M lower unitriangular (via the
/// antidiagonal flip of a Crout LU). Returns M; throws on zero pivots.
template <ExactField F>
Mat<F> factor_upper_times_lower_uni(const Mat<F>& g) {
    int n = g.n;
    Mat<F> A = Mat<F>::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A.at(i, j) = g.at(n - 1 - i, n - 1 - j);
    // Crout: A = L * U, U unit upper triangular.
    Mat<F> L = Mat<F>::identity(n), U = Mat<F>::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            L.at(i, j) = F(0);
            U.at(i, j) = F(i == j ? 1 : 0);
        }
    for (int k = 0; k < n; ++k) {
        for (int i = k; i < n; ++i) {
            F s = A.at(i, k);
            for (int t = 0; t < k; ++t) s = s - L.at(i, t) * U.at(t, k);
            L.at(i, k) = s;
        }
        if (field_is_zero(L.at(k, k)))
            throw NotTotallyPositive("zero pivot in the Bruhat-type factorization");
        for (int j = k + 1; j < n; ++j) {
            F s = A.at(k, j);
            for (int t = 0; t < k; ++t) s = s - L.at(k, t) * U.at(t, j);
            U.at(k, j) = s / L.at(k, k);
        }
    }
    Mat<F> M = Mat<F>::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = U.at(n - 1 - i, n - 1 - j);
    return M;
}

/// g = M * B with M lower unitriangular and B upper triangular (Doolittle).
template <ExactField F>
Mat<F> factor_lower_uni_times_upper(const Mat<F>& g) {
    int n = g.n;
    Mat<F> L = Mat<F>::identity(n);
    Mat<F> U = g;
    for (int k = 0; k < n; ++k) {
        if (field_is_zero(U.at(k, k)))
            throw NotTotallyPositive("zero pivot in the Bruhat-type factorization");
        for (int i = k + 1; i < n; ++i) {
            F f = U.at(i, k) / U.at(k, k);
            L.at(i, k) = f;
            for (int j = k; j < n; ++j) U.at(i, j) = U.at(i, j) - f * U.at(k, j);
        }
    }
    return L;
}

}  // namespace matdetail

/// The staircase word (n-1,...,1,0 | n-1,...,1 | ... | n-1) used to read off
/// coordinates of a totally positive lower unitriangular matrix.
inline Word peel_word(int rank) {
    Word w;
    for (int c = 0; c < rank; ++c)
        for (int j = rank - 1; j >= c; --j) w.push_back(j);
    return w;
}

/// Column-wise Neville peeling: M = prod over peel_word(rank) of y-generators.
/// Coordinates come out as ratios of consecutive column entries.
template <ExactField F>
std::vector<F> peel_lower_unitriangular(Mat<F> M) {
    int n = M.n;
    std::vector<F> out;
    for (int c = 0; c < n - 1; ++c) {
        std::vector<F> z(static_cast<size_t>(n - 1 - c));
        for (int j = c; j < n - 1; ++j) {
            if (field_is_zero(M.at(j, c)))
                throw NotTotallyPositive("zero pivot while peeling a unitriangular factor");
            z[static_cast<size_t>(j - c)] = M.at(j + 1, c) / M.at(j, c);
        }
        for (int j = n - 2; j >= c; --j) out.push_back(z[static_cast<size_t>(j - c)]);
        // strip the chain: M := y_c(-z_c) ... y_{n-2}(-z_{n-2}) M
        for (int j = n - 2; j >= c; --j) {
            const F& f = z[static_cast<size_t>(j - c)];
            for (int col = 0; col < n; ++col)
                M.at(j + 1, col) = M.at(j + 1, col) - f * M.at(j, col);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(M.at(i, j) == F(i == j ? 1 : 0)))
                throw NotTotallyPositive("residue after peeling is not the identity");
    return out;
}

/// phi (4.1): phi(u) = b w_I. u with b in B+; computed as the lower
/// unitriangular factor of w_I. zeta(u). Returns y-side coordinates along
/// peel_word.
template <ExactField F, Semifield K>
std::vector<F> phi_matrix_coords(const UElem<K>& u) {
    require_type_a(u.datum);
    if (!(u.w == longest_element(u.datum))) throw Error("phi is defined on the w_I piece only");
    Mat<F> g = sdot_of<F>(u.datum, u.w) * eval_u(u);
    return peel_lower_unitriangular(matdetail::factor_upper_times_lower_uni(g));
}

/// phi' (4.1): u = phi'(u) w_I. b with b in B-; the lower unitriangular factor
/// of zeta(u) . w_I.^{-1}.
template <ExactField F, Semifield K>
std::vector<F> phiprime_matrix_coords(const UElem<K>& u) {
    require_type_a(u.datum);
    if (!(u.w == longest_element(u.datum))) throw Error("phi' is defined on the w_I piece only");
    Mat<F> wdot = sdot_of<F>(u.datum, u.w);
    // inverse of w_I. : transpose of a signed permutation
    int n = wdot.n;
    Mat<F> winv = Mat<F>::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) winv.at(i, j) = wdot.at(j, i);
    Mat<F> g = eval_u(u) * winv;
    return peel_lower_unitriangular(matdetail::factor_lower_uni_times_upper(g));
}

/// phi over PosRat: re-expressed through e' as a canonical U element (4.1(d)).
inline UElem<PosRat> phi_matrix(const UElem<PosRat>& u) {
    std::vector<Rat> raw = phi_matrix_coords<Rat>(u);
    std::vector<PosRat> coords;
    coords.reserve(raw.size());
    for (const Rat& q : raw) {
        if (q <= 0) throw NotTotallyPositive("phi produced a nonpositive coordinate");
        coords.emplace_back(q);
    }
    return u_from_word(u.datum, peel_word(u.datum->rank()), std::move(coords));
}

inline UElem<PosRat> phiprime_matrix(const UElem<PosRat>& u) {
    std::vector<Rat> raw = phiprime_matrix_coords<Rat>(u);
    std::vector<PosRat> coords;
    coords.reserve(raw.size());
    for (const Rat& q : raw) {
        if (q <= 0) throw NotTotallyPositive("phi' produced a nonpositive coordinate");
        coords.emplace_back(q);
    }
    return u_from_word(u.datum, peel_word(u.datum->rank()), std::move(coords));
}

// ---------------------------------------------------------------------------
// theta~ of 2.17(b): minors against the canonical-basis normalization.
// ---------------------------------------------------------------------------

template <ExactField F>
F minor(const Mat<F>& g, const std::vector<int>& rows, const std::vector<int>& cols) {
    int k = static_cast<int>(rows.size());
    std::vector<F> m(static_cast<size_t>(k) * k, F(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[static_cast<size_t>(i) * k + j] = g.at(rows[i], cols[j]);
    F det(1);
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = c; r < k; ++r)
            if (!field_is_zero(m[static_cast<size_t>(r) * k + c])) {
                pivot = r;
                break;
            }
        if (pivot < 0) return F(0);
        if (pivot != c) {
            for (int j = 0; j < k; ++j)
                std::swap(m[static_cast<size_t>(pivot) * k + j], m[static_cast<size_t>(c) * k + j]);
            det = F(0) - det;
        }
        const F& p = m[static_cast<size_t>(c) * k + c];
        det = det * p;
        for (int r = c + 1; r < k; ++r) {
            F f = m[static_cast<size_t>(r) * k + c] / p;
            for (int j = c; j < k; ++j)
                m[static_cast<size_t>(r) * k + j] = m[static_cast<size_t>(r) * k + j] -
                                                    f * m[static_cast<size_t>(c) * k + j];
        }
    }
    return det;
}

/// theta~_lambda(g): product over fundamental weights of the k x k minor on
/// rows {0..k-1} and columns {n+1-k..n}, raised to lambda(k-1).
template <ExactField F>
F theta_tilde(const Mat<F>& g, const WeightVector& lam) {
    int n = g.n;
    F out(1);
    for (int k = 1; k < n; ++k) {
        const Int& e = lam[static_cast<size_t>(k - 1)];
        if (e == 0) continue;
        std::vector<int> rows, cols;
        for (int i = 0; i < k; ++i) rows.push_back(i);
        for (int j = n - k; j < n; ++j) cols.push_back(j);
        F m = minor(g, rows, cols);
        if (e > 0) {
            for (Int t = 0; t < e; ++t) out = out * m;
        } else {
            if (field_is_zero(m)) throw Error("theta~ with negative exponent at a zero minor");
            for (Int t = 0; t < -e; ++t) out = out / m;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coset helpers for the flag tests: g1 U- = g2 U- iff the spans of the last k
// columns agree for every k.
// ---------------------------------------------------------------------------

template <ExactField F>
int rank_of(std::vector<std::vector<F>> cols) {
    if (cols.empty()) return 0;
    size_t n = cols[0].size();
    int rank = 0;
    size_t row = 0;
    for (; row < n && rank < static_cast<int>(cols.size()); ++row) {
        int pivot = -1;
        for (size_t c = rank; c < cols.size(); ++c)
            if (!field_is_zero(cols[c][row])) {
                pivot = static_cast<int>(c);
                break;
            }
        if (pivot < 0) continue;
        std::swap(cols[static_cast<size_t>(rank)], cols[static_cast<size_t>(pivot)]);
        for (size_t c = 0; c < cols.size(); ++c) {
            if (c == static_cast<size_t>(rank) || field_is_zero(cols[c][row])) continue;
            F f = cols[c][row] / cols[static_cast<size_t>(rank)][row];
            for (size_t rr = 0; rr < n; ++rr)
                cols[c][rr] = cols[c][rr] - f * cols[static_cast<size_t>(rank)][rr];
        }
        ++rank;
    }
    return rank;
}

template <ExactField F>
bool coset_equal_mod_lower_uni(const Mat<F>& g1, const Mat<F>& g2) {
    int n = g1.n;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<F>> cols;
        for (int j = n - k; j < n; ++j) {
            std::vector<F> c1(n), c2(n);
            for (int i = 0; i < n; ++i) {
                c1[static_cast<size_t>(i)] = g1.at(i, j);
                c2[static_cast<size_t>(i)] = g2.at(i, j);
            }
            cols.push_back(std::move(c1));
            cols.push_back(std::move(c2));
        }
        if (rank_of(cols) != k) return false;
    }
    return true;
}

}  // namespace totpos
