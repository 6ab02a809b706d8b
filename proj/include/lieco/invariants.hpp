#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lieco/algebra.hpp"
#include "lieco/jet.hpp"
#include "lieco/poly.hpp"

namespace lieco {

// det(λI − A), coefficients highest degree first (leading 1), by Berkowitz's
// division-free recurrence so it also runs over the jet ring.
template <class T>
std::vector<T> charpoly_desc(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    std::vector<T> vect{T(1)};
    if (n == 0) return vect;
    vect.push_back(-a(0, 0));
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<T> t(r + 2);
        t[0] = T(1);
        t[1] = -a(r, r);
        std::vector<T> w(r);
        for (std::size_t i = 0; i < r; ++i) w[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            T s{};
            for (std::size_t i = 0; i < r; ++i)
                if (!a(r, i).is_zero() && !w[i].is_zero()) s += a(r, i) * w[i];
            t[k + 2] = -s;
            if (k + 1 < r) {
                std::vector<T> nw(r);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (!a(i, j).is_zero() && !w[j].is_zero()) nw[i] += a(i, j) * w[j];
                w = std::move(nw);
            }
        }
        std::vector<T> nv(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (!t[i - j].is_zero() && !vect[j].is_zero()) nv[i] += t[i - j] * vect[j];
        vect = std::move(nv);
    }
    return vect;
}

inline Poly char_poly(const ExactMatrix& x) {
    auto d = charpoly_desc(x);
    return Poly(std::vector<Scalar>(d.rbegin(), d.rend()));
}

// Pfaffian of an antisymmetric matrix by expansion along the first remaining
// row, memoized on the set of remaining indices.
template <class T>
T pfaffian_antisymmetric(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n % 2 == 1) return T{};
    if (n > 30) throw UsageError("pfaffian size too large");
    std::unordered_map<std::uint32_t, T> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> T {
        if (mask == 0) return T(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t i = static_cast<std::size_t>(__builtin_ctz(mask));
        std::uint32_t rest = mask & ~(1u << i);
        T acc{};
        int k = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(rest >> j & 1u)) continue;
            if (!a(i, j).is_zero()) {
                T term = a(i, j) * self(self, rest & ~(1u << j));
                if (k % 2 == 0) acc += term;
                else acc -= term;
            }
            ++k;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, n == 0 ? 0u : ((n == 32) ? ~0u : ((1u << n) - 1)));
}

// Pf(S x) for x in so(2l) in the standard realization.
template <class T>
T pfaffian(const Matrix<T>& x) {
    const std::size_t n = x.rows();
    if (n % 2 == 1) throw UsageError("pfaffian requires even size");
    Matrix<T> sx(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sx(i, j) = x(n - 1 - i, j);
    return pfaffian_antisymmetric(sx);
}

namespace detail {

// f_{m,j} from the restriction A of x_m (an m×m matrix in the adapted basis).
template <class T>
std::vector<T> generators_of_block(const AlgebraContext& c, const Matrix<T>& a, std::size_t m) {
    auto cp = charpoly_desc(a);
    std::vector<T> f;
    if (!c.is_so()) {
        for (std::size_t j = 1; j <= m; ++j) f.push_back(j % 2 ? -cp[j] : cp[j]);
        return f;
    }
    std::size_t k = m / 2;
    std::size_t proper = m % 2 ? k : k - 1;
    for (std::size_t j = 1; j <= proper; ++j) f.push_back(j % 2 ? -cp[2 * j] : cp[2 * j]);
    if (m % 2 == 0) f.push_back(pfaffian(a));
    return f;
}

}  // namespace detail

template <class T>
std::vector<T> evaluate_generators(const AlgebraContext& c, const Matrix<T>& x, std::size_t m) {
    Matrix<T> xm = project_to_level(c, x, m);
    return detail::generators_of_block(c, restrict_to_level(c, xm, m), m);
}

struct InvariantVector {
    Kind kind;
    std::size_t n;
    bool partial;
    std::vector<Scalar> values;
};

template <class T>
std::vector<T> partial_kw_values(const AlgebraContext& c, const Matrix<T>& x) {
    std::vector<T> v = evaluate_generators(c, x, c.n - 1);
    auto top = evaluate_generators(c, x, c.n);
    v.insert(v.end(), top.begin(), top.end());
    return v;
}

template <class T>
std::vector<T> full_kw_values(const AlgebraContext& c, const Matrix<T>& x) {
    std::vector<T> v;
    for (std::size_t m = c.first_level(); m <= c.n; ++m) {
        auto g = evaluate_generators(c, x, m);
        v.insert(v.end(), g.begin(), g.end());
    }
    return v;
}

inline InvariantVector partial_kw(const AlgebraContext& c, const ExactMatrix& x) {
    return {c.kind, c.n, true, partial_kw_values(c, x)};
}

inline InvariantVector full_kw(const AlgebraContext& c, const ExactMatrix& x) {
    return {c.kind, c.n, false, full_kw_values(c, x)};
}

inline std::size_t partial_length(const AlgebraContext& c) { return c.rank_at(c.n - 1) + c.rank_at(c.n); }

inline std::size_t full_length(const AlgebraContext& c) {
    std::size_t s = 0;
    for (std::size_t m = c.first_level(); m <= c.n; ++m) s += c.rank_at(m);
    return s;
}

// q with char = q (GL), q(λ²) (so(2k)), λ·q(λ²) (so(2k+1)), from the
// characteristic polynomial of the m×m block.
inline Poly reduced_from_charpoly(const AlgebraContext& c, const std::vector<Scalar>& cp, std::size_t m) {
    if (!c.is_so()) return Poly(std::vector<Scalar>(cp.rbegin(), cp.rend()));
    for (std::size_t j = 1; j <= m; j += 2)
        if (!cp[j].is_zero()) throw std::logic_error("characteristic polynomial of an so element is not even/odd");
    std::size_t k = m / 2;
    std::vector<Scalar> q(k + 1);
    for (std::size_t j = 0; j <= k; ++j) q[k - j] = cp[2 * j];
    return Poly(std::move(q));
}

inline Poly reduced_char_poly(const AlgebraContext& c, const ExactMatrix& x, std::size_t m) {
    ExactMatrix a = restrict_to_level(c, project_to_level(c, x, m), m);
    return reduced_from_charpoly(c, charpoly_desc(a), m);
}

inline std::size_t coincidence_count(const AlgebraContext& c, const ExactMatrix& x) {
    Poly top = reduced_char_poly(c, x, c.n);
    Poly sub = reduced_char_poly(c, x, c.n - 1);
    return static_cast<std::size_t>(gcd(top, sub).degree());
}

// Coincidence count between consecutive chain levels m and m + 1.
inline std::size_t chain_coincidence(const AlgebraContext& c, const ExactMatrix& x, std::size_t m) {
    Poly a = reduced_char_poly(c, x, m + 1);
    Poly b = reduced_char_poly(c, x, m);
    return static_cast<std::size_t>(gcd(a, b).degree());
}

namespace detail {

inline Poly reduced_from_generators(const AlgebraContext& c, const std::vector<Scalar>& f, std::size_t m) {
    std::size_t deg = c.is_so() ? m / 2 : m;
    std::vector<Scalar> q(deg + 1);
    q[deg] = Scalar(1);
    for (std::size_t j = 1; j <= deg; ++j) {
        Scalar v = f[j - 1];
        if (c.is_so() && m % 2 == 0 && j == deg) v = v * v;
        q[deg - j] = j % 2 ? -v : v;
    }
    return Poly(std::move(q));
}

}  // namespace detail

inline std::size_t stratum_of_value(const AlgebraContext& c, const std::vector<Scalar>& values) {
    std::size_t rk = c.rank_at(c.n - 1), rn = c.rank_at(c.n);
    if (values.size() != rk + rn) throw UsageError("invariant vector has length " + std::to_string(values.size()) + ", expected " + std::to_string(rk + rn));
    std::vector<Scalar> fk(values.begin(), values.begin() + static_cast<long>(rk));
    std::vector<Scalar> fn(values.begin() + static_cast<long>(rk), values.end());
    Poly a = detail::reduced_from_generators(c, fk, c.n - 1);
    Poly b = detail::reduced_from_generators(c, fn, c.n);
    return static_cast<std::size_t>(gcd(a, b).degree());
}

}  // namespace lieco
