#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "lieco/matrix.hpp"

namespace lieco {

namespace detail {

// Scale every row by the lcm of its denominators so entries become Gaussian integers.
inline void clear_denominators(ExactMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& x = m(i, j);
            if (x.is_zero()) continue;
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
        }
        if (l == 1) continue;
        Scalar s{mpq_class(l)};
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) m(i, j) *= s;
    }
}

// Fraction-free (Bareiss) forward elimination in place. Returns the pivot columns.
// Every intermediate entry is a minor of the integralized input, so the
// divisions by the previous pivot are exact in Z[i].
inline std::vector<std::size_t> bareiss(ExactMatrix& m, Scalar* det_sign_scale = nullptr) {
    std::vector<std::size_t> pivots;
    Scalar prev(1);
    std::size_t r = 0;
    bool neg = false;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
            neg = !neg;
        }
        const Scalar piv = m(r, c);
        const Scalar prev_inv = prev.inv();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            Scalar f = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Scalar& x = m(i, j);
                const Scalar& y = m(r, j);
                if (f.is_zero()) {
                    if (x.is_zero()) continue;
                    x *= piv;
                } else {
                    if (x.is_zero() && y.is_zero()) continue;
                    x *= piv;
                    if (!y.is_zero()) x -= f * y;
                }
                if (!prev.is_one() && !x.is_zero()) x *= prev_inv;
            }
            m(i, c) = Scalar();
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    if (det_sign_scale) *det_sign_scale = neg ? Scalar(-1) : Scalar(1);
    return pivots;
}

}  // namespace detail

inline std::size_t rank(ExactMatrix m) {
    detail::clear_denominators(m);
    return detail::bareiss(m).size();
}

inline Scalar determinant(const ExactMatrix& a) {
    if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
    if (a.rows() == 0) return Scalar(1);
    ExactMatrix m = a;
    Scalar sign;
    auto piv = detail::bareiss(m, &sign);
    if (piv.size() < m.rows()) return Scalar();
    // Bareiss leaves det in the last pivot (no denominator clearing here, the
    // divisions stay exact over the field).
    return sign * m(m.rows() - 1, m.cols() - 1);
}

// Reduced row echelon form over Q(i); returns pivot columns.
inline std::vector<std::size_t> rref(ExactMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of {v : m v = 0}, one vector per free column (free entry 1).
inline std::vector<Vec> nullspace(ExactMatrix m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!m(r, f).is_zero()) v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<ExactMatrix> inverse(const ExactMatrix& a) {
    if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = a.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Scalar(1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    ExactMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t width) {
    ExactMatrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
    return m;
}

inline ExactMatrix from_cols(const std::vector<Vec>& cols, std::size_t height) {
    ExactMatrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    return m;
}

// Incrementally maintained reduced echelon basis of a subspace of Q(i)^d.
class Echelon {
public:
    explicit Echelon(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return dim_; }

    Vec reduce(Vec v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Scalar f = v[piv_[k]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
        }
        return v;
    }
    bool contains(const Vec& v) const {
        Vec r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x.is_zero(); });
    }
    // true if v was independent of the current span
    bool add(const Vec& v) {
        Vec r = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && r[p].is_zero()) ++p;
        if (p == dim_) return false;
        Scalar inv = r[p].inv();
        for (auto& x : r)
            if (!x.is_zero()) x *= inv;
        for (auto& row : rows_) {
            const Scalar f = row[p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!r[j].is_zero()) row[j] -= f * r[j];
        }
        rows_.push_back(std::move(r));
        piv_.push_back(p);
        return true;
    }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> piv_;
};

inline std::size_t span_dim(const std::vector<Vec>& vs, std::size_t d) {
    Echelon e(d);
    for (const auto& v : vs) e.add(v);
    return e.dim();
}

inline bool span_contains(const std::vector<Vec>& big, const std::vector<Vec>& small, std::size_t d) {
    Echelon e(d);
    for (const auto& v : big) e.add(v);
    return std::all_of(small.begin(), small.end(), [&](const Vec& v) { return e.contains(v); });
}

inline bool span_equal(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t d) {
    return span_contains(a, b, d) && span_contains(b, a, d);
}

// dim(A ∩ B) = dim A + dim B - dim(A + B)
inline std::size_t intersection_dim(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t d) {
    std::vector<Vec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_dim(a, d) + span_dim(b, d) - span_dim(both, d);
}

// Basis of span(A) ∩ span(B), from the nullspace of [A | -B].
inline std::vector<Vec> intersection_basis(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t d) {
    std::vector<Vec> cols = a;
    for (const auto& v : b) {
        Vec w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = -v[i];
        cols.push_back(std::move(w));
    }
    Echelon e(d);
    for (const auto& ns : nullspace(from_cols(cols, d))) {
        Vec w(d);
        for (std::size_t k = 0; k < a.size(); ++k)
            if (!ns[k].is_zero())
                for (std::size_t i = 0; i < d; ++i)
                    if (!a[k][i].is_zero()) w[i] += ns[k] * a[k][i];
        e.add(w);
    }
    return e.rows();
}

}  // namespace lieco
