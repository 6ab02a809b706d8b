#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieco/linalg.hpp"

namespace lieco {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Kind { GL, SO };

inline std::string kind_name(Kind k) { return k == Kind::GL ? "gl" : "so"; }

// R e_q = sign[q] e_{to[q]}; conjugation by R is a coordinate shuffle.
struct SignedPerm {
    std::vector<std::size_t> to;
    std::vector<int> sign;

    static SignedPerm identity(std::size_t n) {
        SignedPerm p;
        for (std::size_t i = 0; i < n; ++i) {
            p.to.push_back(i);
            p.sign.push_back(1);
        }
        return p;
    }
    std::size_t size() const { return to.size(); }

    template <class T>
    Matrix<T> conjugate(const Matrix<T>& x) const {
        Matrix<T> y(x.rows(), x.cols());
        for (std::size_t p = 0; p < x.rows(); ++p)
            for (std::size_t q = 0; q < x.cols(); ++q) {
                const T& v = x(p, q);
                if (v.is_zero()) continue;
                y(to[p], to[q]) = sign[p] * sign[q] > 0 ? v : -v;
            }
        return y;
    }
    ExactMatrix matrix() const {
        ExactMatrix m(size(), size());
        for (std::size_t q = 0; q < size(); ++q) m(to[q], q) = Scalar(sign[q]);
        return m;
    }
};

struct Root {
    std::vector<int> coords;         // epsilon-basis
    std::vector<int> simple_coords;  // in the basis of simple roots
    bool positive = false;
    int simple_index = -1;  // 0-based position among the simple roots, -1 if not simple
    bool simple() const { return simple_index >= 0; }
};

// One level g_m of the subalgebra chain, realized inside gl(n).
struct ChainLevel {
    std::size_t m = 0;
    std::size_t rank = 0;
    SignedPerm down;                  // involution of g_m whose fixed points are g_{m-1}
    std::vector<std::size_t> lo, hi;  // standard positions of W_m (before and after the merged slot)
    int merged = -1;                  // position j: basis vector e_j + e_{n-1-j}; -1 if none
    std::vector<ExactMatrix> basis;
};

class AlgebraContext {
public:
    Kind kind = Kind::GL;
    std::size_t n = 0;
    std::size_t rank = 0;  // r_n
    std::size_t l = 0;     // rank of the root system in epsilon-coordinates
    ExactMatrix form;
    std::vector<ExactMatrix> basis;
    std::vector<std::pair<std::size_t, std::size_t>> lead;  // entry holding coefficient 1
    std::size_t cartan_dim = 0;                             // basis[0..cartan_dim) spans h
    std::vector<Root> roots;                                // roots[k] has root vector basis[cartan_dim + k]
    std::vector<std::size_t> simple;                        // indices into roots, ordered alpha_1..alpha_l
    SignedPerm theta;
    std::vector<ExactMatrix> k_basis;
    std::vector<ChainLevel> chain;  // chain[m - first_level()]

    bool is_so() const { return kind == Kind::SO; }
    bool type_b() const { return is_so() && n % 2 == 1; }
    bool type_d() const { return is_so() && n % 2 == 0; }
    std::size_t dim() const { return basis.size(); }
    std::size_t first_level() const { return is_so() ? 2 : 1; }
    std::size_t middle() const { return n / 2; }  // e_0 position for type B
    std::string name() const { return kind_name(kind) + "(" + std::to_string(n) + ")"; }

    const ChainLevel& level(std::size_t m) const {
        if (m < first_level() || m > n) throw UsageError("chain level " + std::to_string(m) + " out of range for " + name());
        return chain[m - first_level()];
    }
    std::size_t rank_at(std::size_t m) const {
        if (m == 0) return 0;
        if (is_so() && m < 2) return 0;
        return is_so() ? m / 2 : m;
    }
    std::size_t k_rank() const { return rank_at(n - 1); }

    std::size_t root_index(const std::vector<int>& coords) const {
        auto it = root_lookup_.find(coords);
        if (it == root_lookup_.end()) throw UsageError("not a root of " + name());
        return it->second;
    }
    bool is_root(const std::vector<int>& coords) const { return root_lookup_.count(coords) > 0; }
    const ExactMatrix& root_vector(std::size_t root) const { return basis.at(cartan_dim + root); }
    std::size_t positive_root_count() const {
        std::size_t c = 0;
        for (const auto& r : roots) c += r.positive;
        return c;
    }

    // epsilon-coordinate of position p: +j+1 for e_j, -(j+1) for e_{-j}, 0 for e_0
    int weight_slot(std::size_t p) const {
        if (!is_so()) return static_cast<int>(p) + 1;
        if (p < l) return static_cast<int>(p) + 1;
        if (type_b() && p == l) return 0;
        return -static_cast<int>(n - p);
    }

    std::map<std::vector<int>, std::size_t> root_lookup_;
};

using Ctx = std::shared_ptr<const AlgebraContext>;

namespace detail {

inline std::vector<int> position_weight(const AlgebraContext& c, std::size_t p) {
    std::vector<int> w(c.l, 0);
    int s = c.weight_slot(p);
    if (s > 0) w[s - 1] = 1;
    if (s < 0) w[-s - 1] = -1;
    return w;
}

inline bool first_nonzero_positive(const std::vector<int>& v) {
    for (int x : v)
        if (x != 0) return x > 0;
    return false;
}

}  // namespace detail

// ---- chain projection ----------------------------------------------------

// x_m obtained by applying (x + θ_j x)/2 for the chain involutions above level m.
template <class T>
Matrix<T> project_to_level(const AlgebraContext& c, const Matrix<T>& x, std::size_t m) {
    c.level(m);
    if (!c.is_so()) {
        Matrix<T> y(c.n, c.n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) y(i, j) = x(i, j);
        return y;
    }
    Matrix<T> y = x;
    const T half(Scalar(1, 2));
    for (std::size_t lev = c.n; lev > m; --lev) {
        y += c.level(lev).down.conjugate(y);
        y *= half;
    }
    return y;
}

// x_m written as an m×m matrix in the adapted basis of W_m.
template <class T>
Matrix<T> restrict_to_level(const AlgebraContext& c, const Matrix<T>& xm, std::size_t m) {
    const ChainLevel& L = c.level(m);
    if (!c.is_so()) {
        Matrix<T> a(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) a(i, j) = xm(i, j);
        return a;
    }
    // slots: lo..., merged?, hi...
    std::vector<int> slot;
    for (auto p : L.lo) slot.push_back(static_cast<int>(p));
    if (L.merged >= 0) slot.push_back(-1);
    for (auto p : L.hi) slot.push_back(static_cast<int>(p));
    const std::size_t j = static_cast<std::size_t>(L.merged < 0 ? 0 : L.merged);
    const std::size_t jp = c.n - 1 - j;
    Matrix<T> a(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) {
            std::size_t row = slot[r] < 0 ? j : static_cast<std::size_t>(slot[r]);
            if (slot[s] < 0) {
                a(r, s) = xm(row, j) + xm(row, jp);
            } else {
                a(r, s) = xm(row, static_cast<std::size_t>(slot[s]));
            }
        }
    return a;
}

// ---- construction ---------------------------------------------------------

namespace detail {

inline void build_chain(AlgebraContext& c) {
    const std::size_t n = c.n;
    for (std::size_t m = c.first_level(); m <= n; ++m) {
        ChainLevel L;
        L.m = m;
        L.rank = c.rank_at(m);
        if (!c.is_so()) {
            L.down = SignedPerm::identity(n);
            if (m >= 1) L.down.sign[m - 1] = -1;
            for (std::size_t p = 0; p < m; ++p) L.lo.push_back(p);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < m; ++k) L.basis.push_back(ExactMatrix::unit(n, i, k));
        } else {
            std::size_t j = m / 2;
            for (std::size_t p = 0; p < j; ++p) L.lo.push_back(p);
            for (std::size_t p = n - j; p < n; ++p) L.hi.push_back(p);
            if (m % 2 == 1) {
                if (m == n) L.lo.push_back(c.middle());
                else L.merged = static_cast<int>(j);
            }
            L.down = SignedPerm::identity(n);
            if (m == n) {
                L.down = c.theta;
            } else if (m % 2 == 0) {
                std::swap(L.down.to[j - 1], L.down.to[n - j]);
            } else {
                L.down.to[j] = n - 1 - j;
                L.down.to[n - 1 - j] = j;
                L.down.sign[j] = L.down.sign[n - 1 - j] = -1;
            }
        }
        c.chain.push_back(std::move(L));
    }
    if (!c.is_so()) return;
    // g_m = image of the g-basis under the chain projection
    for (std::size_t m = 2; m < n; ++m) {
        Echelon e(c.dim());
        auto& L = c.chain[m - 2];
        for (const auto& b : c.basis) {
            ExactMatrix p = project_to_level(c, b, m);
            Vec v(c.dim());
            for (std::size_t k = 0; k < c.dim(); ++k) v[k] = p(c.lead[k].first, c.lead[k].second);
            if (e.add(v)) L.basis.push_back(std::move(p));
        }
    }
    c.chain.back().basis = c.basis;
}

inline void finish_roots(AlgebraContext& c, const std::vector<std::vector<int>>& simple_coords) {
    const std::size_t l = c.l;
    // GL has n epsilon-coordinates and n-1 simple roots, so solve through rref
    std::size_t ns = simple_coords.size();
    for (std::size_t k = 0; k < c.roots.size(); ++k) {
        Root& r = c.roots[k];
        ExactMatrix aug(l, ns + 1);
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t i = 0; i < l; ++i) aug(i, s) = Scalar(simple_coords[s][i]);
        for (std::size_t i = 0; i < l; ++i) aug(i, ns) = Scalar(r.coords[i]);
        auto piv = rref(aug);
        r.simple_coords.assign(ns, 0);
        for (std::size_t t = 0; t < piv.size(); ++t) {
            if (piv[t] == ns) throw std::logic_error("root outside the simple-root lattice");
            r.simple_coords[piv[t]] = static_cast<int>(aug(t, ns).re().get_num().get_si());
        }
        for (std::size_t s = 0; s < ns; ++s)
            if (r.coords == simple_coords[s]) r.simple_index = static_cast<int>(s);
        c.root_lookup_[r.coords] = k;
    }
    c.simple.resize(ns);
    for (std::size_t k = 0; k < c.roots.size(); ++k)
        if (c.roots[k].simple()) c.simple[c.roots[k].simple_index] = k;
}

}  // namespace detail

inline Ctx make_algebra(Kind kind, std::size_t n) {
    if (kind == Kind::GL && n < 2) throw UsageError("gl(n) requires n >= 2");
    if (kind == Kind::SO && n < 3) throw UsageError("so(n) requires n >= 3");
    if (n > 64) throw UsageError("size too large");
    auto c = std::make_shared<AlgebraContext>();
    c->kind = kind;
    c->n = n;
    if (kind == Kind::GL) {
        c->rank = n;
        c->l = n;
        c->form = ExactMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            c->basis.push_back(ExactMatrix::unit(n, i, i));
            c->lead.push_back({i, i});
        }
        c->cartan_dim = n;
        // positive roots (leads above the diagonal) first, then negative, each row-major
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || (i < j) != (pass == 0)) continue;
                    Root r;
                    r.coords.assign(n, 0);
                    r.coords[i] += 1;
                    r.coords[j] -= 1;
                    r.positive = i < j;
                    c->roots.push_back(r);
                    c->basis.push_back(ExactMatrix::unit(n, i, j));
                    c->lead.push_back({i, j});
                }
        std::vector<std::vector<int>> simple;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::vector<int> s(n, 0);
            s[i] = 1;
            s[i + 1] = -1;
            simple.push_back(s);
        }
        detail::finish_roots(*c, simple);
        c->theta = SignedPerm::identity(n);
        c->theta.sign[n - 1] = -1;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j) c->k_basis.push_back(ExactMatrix::unit(n, i, j));
        detail::build_chain(*c);
        return c;
    }

    const std::size_t l = n / 2;
    c->rank = l;
    c->l = l;
    c->form = ExactMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) c->form(i, n - 1 - i) = Scalar(1);
    for (std::size_t i = 0; i < l; ++i) {
        ExactMatrix h(n, n);
        h(i, i) = Scalar(1);
        h(n - 1 - i, n - 1 - i) = Scalar(-1);
        c->basis.push_back(std::move(h));
        c->lead.push_back({i, i});
    }
    c->cartan_dim = l;
    // E_pq - E_q'p' for p + q != n - 1, p != q; lead = row-major first of the two entries
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                if (p == q || p + q == n - 1) continue;
                std::size_t pp = n - 1 - q, qq = n - 1 - p;  // partner entry (q', p')
                if (std::make_pair(pp, qq) < std::make_pair(p, q)) continue;
                std::vector<int> w = detail::position_weight(*c, p);
                std::vector<int> wq = detail::position_weight(*c, q);
                for (std::size_t i = 0; i < l; ++i) w[i] -= wq[i];
                bool pos = detail::first_nonzero_positive(w);
                if (pos != (pass == 0)) continue;
                Root r;
                r.coords = w;
                r.positive = pos;
                c->roots.push_back(r);
                ExactMatrix e(n, n);
                e(p, q) = Scalar(1);
                e(pp, qq) = Scalar(-1);
                c->basis.push_back(std::move(e));
                c->lead.push_back({p, q});
            }
    std::vector<std::vector<int>> simple;
    for (std::size_t i = 0; i + 1 < l; ++i) {
        std::vector<int> s(l, 0);
        s[i] = 1;
        s[i + 1] = -1;
        simple.push_back(s);
    }
    std::vector<int> last(l, 0);
    if (n % 2 == 1) {
        last[l - 1] = 1;
    } else {
        last[l - 2] = 1;
        last[l - 1] = 1;
    }
    simple.push_back(last);
    detail::finish_roots(*c, simple);

    c->theta = SignedPerm::identity(n);
    if (n % 2 == 1) {
        for (std::size_t i = 0; i < n; ++i) c->theta.sign[i] = i == l ? 1 : -1;
    } else {
        std::swap(c->theta.to[l - 1], c->theta.to[l]);
    }
    detail::build_chain(*c);
    c->k_basis = c->chain[n - 1 - 2].basis;
    return c;
}

// ---- elements -------------------------------------------------------------

inline bool membership_check(const AlgebraContext& c, const ExactMatrix& m) {
    if (m.rows() != c.n || m.cols() != c.n) throw UsageError("matrix size does not match " + c.name());
    if (!c.is_so()) return true;
    return (m.transpose() * c.form + c.form * m).is_zero();
}

// Coordinates in the ordered basis; valid for elements of g.
template <class T>
std::vector<T> coords(const AlgebraContext& c, const Matrix<T>& x) {
    std::vector<T> v(c.dim());
    for (std::size_t k = 0; k < c.dim(); ++k) v[k] = x(c.lead[k].first, c.lead[k].second);
    return v;
}

inline ExactMatrix from_coords(const AlgebraContext& c, const Vec& v) {
    ExactMatrix x(c.n, c.n);
    for (std::size_t k = 0; k < c.dim(); ++k)
        if (!v[k].is_zero()) x += c.basis[k] * v[k];
    return x;
}

inline std::vector<Vec> coords_of(const AlgebraContext& c, const std::vector<ExactMatrix>& xs) {
    std::vector<Vec> out;
    for (const auto& x : xs) out.push_back(coords(c, x));
    return out;
}

// Element of g with its context; construction enforces membership.
struct LieElement {
    Ctx ctx;
    ExactMatrix mat;

    LieElement(Ctx c, ExactMatrix m) : ctx(std::move(c)), mat(std::move(m)) {
        if (!membership_check(*ctx, mat)) throw UsageError("matrix is not an element of " + ctx->name());
    }
};

inline ExactMatrix theta_apply(const AlgebraContext& c, const ExactMatrix& x) { return c.theta.conjugate(x); }

struct ThetaParts {
    ExactMatrix k, p;
};

inline ThetaParts theta_decompose(const AlgebraContext& c, const ExactMatrix& x) {
    if (!c.is_so()) {
        ExactMatrix k = project_to_level(c, x, c.n - 1);
        return {k, x - k};
    }
    ExactMatrix k = (x + theta_apply(c, x)) * Scalar(1, 2);
    return {k, x - k};
}

inline ExactMatrix project_to_subalgebra(const AlgebraContext& c, const ExactMatrix& x, std::size_t m) {
    return project_to_level(c, x, m);
}

// values a_i = ε_i(h) for h in the Cartan
inline Vec cartan_coordinates(const AlgebraContext& c, const ExactMatrix& h) {
    Vec a;
    for (std::size_t i = 0; i < c.l; ++i) a.push_back(h(i, i));
    return a;
}

inline ExactMatrix cartan_element(const AlgebraContext& c, const Vec& a) {
    ExactMatrix h(c.n, c.n);
    for (std::size_t i = 0; i < c.l; ++i) {
        h(i, i) = a[i];
        if (c.is_so()) h(c.n - 1 - i, c.n - 1 - i) = -a[i];
    }
    return h;
}

inline int root_pairing(const Root& r, const std::vector<int>& h) {
    int s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) s += r.coords[i] * h[i];
    return s;
}

// ---- group elements ------------------------------------------------------

inline ExactMatrix conjugate(const ExactMatrix& g, const ExactMatrix& x, const ExactMatrix& g_inv) { return g * x * g_inv; }

// Inverse of an element of O(n) for the form S: S g^T S.
inline ExactMatrix orthogonal_inverse(const AlgebraContext& c, const ExactMatrix& g) {
    if (!c.is_so()) {
        auto inv = inverse(g);
        if (!inv) throw std::domain_error("singular group element");
        return *inv;
    }
    return c.form * g.transpose() * c.form;
}

inline bool in_group(const AlgebraContext& c, const ExactMatrix& g) {
    if (!c.is_so()) return !determinant(g).is_zero();
    return g.transpose() * c.form * g == c.form && determinant(g) == Scalar(1);
}

// Representative of s_α normalizing the diagonal Cartan.
inline ExactMatrix weyl_representative(const AlgebraContext& c, const std::vector<int>& alpha) {
    c.root_index(alpha);
    const std::size_t n = c.n;
    SignedPerm p = SignedPerm::identity(n);
    auto swap = [&](std::size_t a, std::size_t b) { std::swap(p.to[a], p.to[b]); };
    std::vector<std::size_t> plus, minus;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] > 0) plus.push_back(i);
        if (alpha[i] < 0) minus.push_back(i);
    }
    if (!c.is_so()) {
        swap(plus[0], minus[0]);
        return p.matrix();
    }
    auto neg = [&](std::size_t j) { return n - 1 - j; };
    std::vector<std::size_t> idx = plus;
    idx.insert(idx.end(), minus.begin(), minus.end());
    if (idx.size() == 1) {
        // ±ε_k: swap e_k and e_{-k}, negate e_0
        std::size_t k = idx[0];
        swap(k, neg(k));
        p.sign[c.middle()] = -1;
    } else if (plus.size() == 1 && minus.size() == 1) {
        swap(plus[0], minus[0]);
        swap(neg(plus[0]), neg(minus[0]));
    } else {
        // ±(ε_i + ε_j)
        std::size_t i = idx[0], j = idx[1];
        swap(i, neg(j));
        swap(j, neg(i));
    }
    return p.matrix();
}

// Image of (1/√2)[[1,i],[i,1]] under the sl(2)-homomorphism of a short root of type B.
inline ExactMatrix cayley_element(const AlgebraContext& c, const std::vector<int>& alpha) {
    if (!c.type_b()) throw UsageError("Cayley element is defined here only for so(2l+1)");
    int nz = 0;
    for (int a : alpha) nz += a != 0;
    if (nz != 1) throw UsageError("Cayley element requires a short root ε_k");
    const ExactMatrix& e = c.root_vector(c.root_index(alpha));
    std::vector<int> neg_alpha = alpha;
    for (auto& a : neg_alpha) a = -a;
    ExactMatrix f = c.root_vector(c.root_index(neg_alpha));
    ExactMatrix h = bracket(e, f);
    // scale f so that [h', e] = 2e with h' = [e, f']
    ExactMatrix he = bracket(h, e);
    Scalar lambda;
    for (std::size_t i = 0; i < c.n && lambda.is_zero(); ++i)
        for (std::size_t j = 0; j < c.n; ++j)
            if (!e(i, j).is_zero()) {
                lambda = he(i, j) / e(i, j);
                break;
            }
    f *= Scalar(2) / lambda;
    ExactMatrix m = e + f;
    ExactMatrix m2 = m * m;
    if (m2 * m != m * Scalar(4)) throw std::logic_error("sl(2) image does not satisfy M^3 = 4M");
    ExactMatrix u = ExactMatrix::identity(c.n) + m * Scalar(mpq_class(0), mpq_class(1, 2)) - m2 * Scalar(1, 4);
    return u;
}

}  // namespace lieco
