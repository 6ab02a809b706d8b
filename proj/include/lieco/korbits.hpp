#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieco/random.hpp"
#include "lieco/regularity.hpp"

namespace lieco {

enum class RootType { Real, CompactImaginary, NoncompactImaginary, ComplexStable, ComplexUnstable };

inline std::string root_type_name(RootType t) {
    switch (t) {
        case RootType::Real: return "real";
        case RootType::CompactImaginary: return "compact-imaginary";
        case RootType::NoncompactImaginary: return "noncompact-imaginary";
        case RootType::ComplexStable: return "complex-stable";
        case RootType::ComplexUnstable: return "complex-unstable";
    }
    return "?";
}

using IntMatrix = std::vector<std::vector<int>>;

// θ_Q on the standard root data: its action on ε-coordinates (a symmetric
// signed permutation) and, per root, +1 compact / -1 noncompact / 0 non-imaginary.
struct ThetaRecord {
    IntMatrix action;
    std::vector<int> compact;
    friend bool operator==(const ThetaRecord& a, const ThetaRecord& b) {
        return a.action == b.action && a.compact == b.compact;
    }
};

struct OrbitDescriptor {
    std::string id;
    std::string base;       // "Q+" or "Q-"
    std::vector<int> word;  // simple roots applied, 1-based
    std::size_t codim = 0;
    bool closed = false;
    ThetaRecord theta_Q;
    ExactMatrix conj, conj_inv;  // v, v^{-1}; b = Ad(v) b_+
    ExactMatrix gq, gq_inv;      // θ_Q = Ad(gq)
    std::vector<ExactMatrix> rep_borel;
};

struct OrbitEdge {
    std::size_t from, to;
    int simple;  // 1-based
};

struct OrbitGraph {
    std::vector<OrbitDescriptor> orbits;
    std::vector<OrbitEdge> edges;
    const OrbitDescriptor& by_id(const std::string& id) const {
        for (const auto& o : orbits)
            if (o.id == id) return o;
        throw UsageError("no orbit with id '" + id + "'");
    }
};

namespace detail {

inline IntMatrix identity_int(std::size_t l) {
    IntMatrix m(l, std::vector<int>(l, 0));
    for (std::size_t i = 0; i < l; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t l = a.size();
    IntMatrix m(l, std::vector<int>(l, 0));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < l; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < l; ++j) m[i][j] += a[i][k] * b[k][j];
    return m;
}

inline std::vector<int> int_apply(const IntMatrix& p, const std::vector<int>& v) {
    std::vector<int> w(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) w[i] += p[i][j] * v[j];
    return w;
}

// reflection s_α on ε-coordinates: x − 2(x,α)/(α,α) α
inline IntMatrix reflection_int(const std::vector<int>& alpha) {
    std::size_t l = alpha.size();
    int aa = 0;
    for (int a : alpha) aa += a * a;
    IntMatrix m = identity_int(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) m[i][j] -= 2 * alpha[i] * alpha[j] / aa;
    return m;
}

// action of Ad(g) on the Cartan in ε-coordinates, if g normalizes it
inline std::optional<IntMatrix> cartan_action(const AlgebraContext& c, const ExactMatrix& g, const ExactMatrix& g_inv) {
    IntMatrix p(c.l, std::vector<int>(c.l, 0));
    for (std::size_t i = 0; i < c.l; ++i) {
        ExactMatrix img = g * c.basis[i] * g_inv;
        for (std::size_t r = 0; r < c.n; ++r)
            for (std::size_t s = 0; s < c.n; ++s)
                if (r != s && !img(r, s).is_zero()) return std::nullopt;
        for (std::size_t j = 0; j < c.l; ++j) {
            const Scalar& v = img(j, j);
            if (!v.is_real() || v.re().get_den() != 1) return std::nullopt;
            p[j][i] = static_cast<int>(v.re().get_num().get_si());
        }
        if (img != cartan_element(c, cartan_coordinates(c, img))) return std::nullopt;
    }
    return p;
}

// scalar c with y = c·x, if any
inline std::optional<Scalar> proportional(const ExactMatrix& y, const ExactMatrix& x) {
    std::optional<Scalar> f;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (x(i, j).is_zero()) {
                if (!y(i, j).is_zero()) return std::nullopt;
                continue;
            }
            Scalar r = y(i, j) / x(i, j);
            if (!f) f = r;
            else if (*f != r) return std::nullopt;
        }
    return f;
}

inline std::vector<int> neg(std::vector<int> v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace detail

// Matrix route: θ_Q = Ad(v^{-1} R v) realized on the Cartan and on every root vector.
inline ThetaRecord theta_record_from_matrix(const AlgebraContext& c, const ExactMatrix& gq, const ExactMatrix& gq_inv) {
    auto act = detail::cartan_action(c, gq, gq_inv);
    if (!act) throw std::logic_error("θ_Q does not preserve the Cartan subalgebra");
    ThetaRecord rec{*act, std::vector<int>(c.roots.size(), 0)};
    if (detail::int_mul(rec.action, rec.action) != detail::identity_int(c.l)) throw std::logic_error("θ_Q is not an involution on h");
    for (std::size_t k = 0; k < c.roots.size(); ++k) {
        std::vector<int> img = detail::int_apply(rec.action, c.roots[k].coords);
        ExactMatrix y = gq * c.root_vector(k) * gq_inv;
        auto f = detail::proportional(y, c.root_vector(c.root_index(img)));
        if (!f) throw std::logic_error("θ_Q does not map root spaces to root spaces");
        if (img == c.roots[k].coords) {
            if (*f == Scalar(1)) rec.compact[k] = 1;
            else if (*f == Scalar(-1)) rec.compact[k] = -1;
            else throw std::logic_error("imaginary root vector not an eigenvector of θ_Q with eigenvalue ±1");
        }
    }
    return rec;
}

inline RootType classify_root_type(const AlgebraContext& c, const ThetaRecord& rec, const std::vector<int>& alpha) {
    std::size_t k = c.root_index(alpha);
    std::vector<int> img = detail::int_apply(rec.action, alpha);
    if (img == detail::neg(alpha)) return RootType::Real;
    if (img == alpha) return rec.compact[k] > 0 ? RootType::CompactImaginary : RootType::NoncompactImaginary;
    return c.roots[c.root_index(img)].positive ? RootType::ComplexStable : RootType::ComplexUnstable;
}

namespace detail {

// dim(k ∩ b) = dim b − rank{y − θy : y ∈ b}
inline std::size_t k_intersection_dim(const AlgebraContext& c, const std::vector<ExactMatrix>& span) {
    std::vector<Vec> p;
    for (const auto& y : span) p.push_back(coords(c, y - theta_apply(c, y)));
    return span.size() - span_dim(p, c.dim());
}

inline std::size_t k_dim(const AlgebraContext& c) { return c.k_basis.size(); }

inline OrbitDescriptor describe(const AlgebraContext& c, const ExactMatrix& v) {
    OrbitDescriptor o;
    o.conj = v;
    o.conj_inv = orthogonal_inverse(c, v);
    ExactMatrix R = c.theta.matrix();
    o.gq = o.conj_inv * R * v;
    o.gq_inv = o.conj_inv * R.transpose() * v;
    o.theta_Q = theta_record_from_matrix(c, o.gq, o.gq_inv);
    for (std::size_t i = 0; i < c.cartan_dim; ++i) o.rep_borel.push_back(v * c.basis[i] * o.conj_inv);
    for (std::size_t k = 0; k < c.roots.size(); ++k)
        if (c.roots[k].positive) o.rep_borel.push_back(v * c.root_vector(k) * o.conj_inv);
    std::size_t orbit_dim = k_dim(c) - k_intersection_dim(c, o.rep_borel);
    o.codim = c.positive_root_count() - orbit_dim;
    return o;
}

inline void require_so(const AlgebraContext& c) {
    if (!c.is_so()) throw UsageError("K-orbit machinery is implemented for so(n) only");
}

}  // namespace detail

// Matrix route for θ itself (closed-orbit seeds) and for the identity conjugator.
inline std::vector<OrbitDescriptor> closed_orbits(const AlgebraContext& c) {
    detail::require_so(c);
    std::vector<OrbitDescriptor> out;
    OrbitDescriptor plus = detail::describe(c, ExactMatrix::identity(c.n));
    plus.base = plus.id = "Q+";
    plus.closed = true;
    out.push_back(plus);
    if (c.type_b()) {
        OrbitDescriptor minus = detail::describe(c, weyl_representative(c, c.roots[c.simple.back()].coords));
        minus.base = minus.id = "Q-";
        minus.closed = true;
        out.push_back(minus);
    }
    return out;
}

// |W^θ| / |W_K|, with W^θ enumerated as signed permutations commuting with θ|_h.
inline std::size_t closed_orbit_count(const AlgebraContext& c) {
    detail::require_so(c);
    const std::size_t l = c.l;
    IntMatrix th = *detail::cartan_action(c, c.theta.matrix(), c.theta.matrix().transpose());
    std::vector<std::size_t> perm(l);
    for (std::size_t i = 0; i < l; ++i) perm[i] = i;
    std::size_t fixed = 0;
    do {
        for (std::size_t signs = 0; signs < (1u << l); ++signs) {
            if (c.type_d() && __builtin_popcount(static_cast<unsigned>(signs)) % 2) continue;
            IntMatrix w(l, std::vector<int>(l, 0));
            for (std::size_t i = 0; i < l; ++i) w[perm[i]][i] = (signs >> i & 1u) ? -1 : 1;
            if (detail::int_mul(w, th) == detail::int_mul(th, w)) ++fixed;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // K = SO(2l) (type D_l) for so(2l+1); K = SO(2l-1) (type B_{l-1}) for so(2l)
    std::size_t wk = 1;
    if (c.type_b()) {
        for (std::size_t i = 2; i <= l; ++i) wk *= i;
        wk <<= (l - 1);
    } else {
        for (std::size_t i = 2; i + 1 <= l; ++i) wk *= i;
        wk <<= (l - 1);
    }
    return fixed / wk;
}

// m(s_α)·Q for the simple root α_s (1-based s).
inline OrbitDescriptor monoid_action(const AlgebraContext& c, const OrbitDescriptor& q, int s) {
    detail::require_so(c);
    if (s < 1 || static_cast<std::size_t>(s) > c.simple.size()) throw UsageError("not a simple root index");
    const Root& alpha = c.roots[c.simple[s - 1]];
    RootType t = classify_root_type(c, q.theta_Q, alpha.coords);
    IntMatrix sa = detail::reflection_int(alpha.coords);
    IntMatrix expect;
    ExactMatrix v;
    if (t == RootType::ComplexStable) {
        v = q.conj * weyl_representative(c, alpha.coords);
        expect = detail::int_mul(detail::int_mul(sa, q.theta_Q.action), sa);
    } else if (t == RootType::NoncompactImaginary) {
        v = q.conj * cayley_element(c, alpha.coords);
        expect = detail::int_mul(q.theta_Q.action, sa);
    } else {
        return q;
    }
    OrbitDescriptor o = detail::describe(c, v);
    if (o.theta_Q.action != expect) throw std::logic_error("combinatorial and matrix θ_Q disagree after m(s_" + std::to_string(s) + ")");
    if (o.codim + 1 != q.codim) throw std::logic_error("monoidal action did not raise the orbit dimension by one");
    o.base = q.base;
    o.word = q.word;
    o.word.push_back(s);
    return o;
}

inline OrbitGraph enumerate_orbits(const AlgebraContext& c) {
    detail::require_so(c);
    OrbitGraph g;
    g.orbits = closed_orbits(c);
    for (std::size_t at = 0; at < g.orbits.size(); ++at) {
        for (int s = 1; s <= static_cast<int>(c.simple.size()); ++s) {
            OrbitDescriptor src = g.orbits[at];
            OrbitDescriptor o = monoid_action(c, src, s);
            if (o.word.size() == src.word.size()) continue;
            std::size_t found = g.orbits.size();
            for (std::size_t j = 0; j < g.orbits.size(); ++j)
                if (!g.orbits[j].closed && g.orbits[j].codim == o.codim && g.orbits[j].theta_Q == o.theta_Q) found = j;
            if (found == g.orbits.size()) {
                std::size_t label = c.type_b() ? o.codim : o.codim + 1;
                o.id = "Q" + std::to_string(label);
                g.orbits.push_back(o);
            }
            g.edges.push_back({at, found, s});
        }
    }
    return g;
}

// ---- parabolics -----------------------------------------------------------

struct ParabolicData {
    std::vector<std::size_t> simple_set;  // 0-based simple-root indices whose negatives are adjoined
    std::vector<bool> root_in_r, root_in_levi;
    std::vector<ExactMatrix> r_basis, z_basis, lss_basis, u_basis;
    std::string levi_iso;  // "so(m)"
    std::size_t lss_size = 0;

    bool contains_coords(const AlgebraContext& c, const Vec& v) const {
        for (std::size_t k = 0; k < c.roots.size(); ++k)
            if (!root_in_r[k] && !v[c.cartan_dim + k].is_zero()) return false;
        return true;
    }
};

inline ParabolicData parabolic_for_simple_set(const AlgebraContext& c, const std::vector<std::size_t>& J) {
    ParabolicData P;
    P.simple_set = J;
    std::vector<bool> inJ(c.simple.size(), false);
    for (auto j : J) inJ[j] = true;
    P.root_in_r.assign(c.roots.size(), false);
    P.root_in_levi.assign(c.roots.size(), false);
    for (std::size_t k = 0; k < c.roots.size(); ++k) {
        bool supp = true;
        for (std::size_t s = 0; s < c.simple.size(); ++s)
            if (c.roots[k].simple_coords[s] != 0 && !inJ[s]) supp = false;
        P.root_in_levi[k] = supp;
        P.root_in_r[k] = c.roots[k].positive || supp;
    }
    for (std::size_t i = 0; i < c.cartan_dim; ++i) P.r_basis.push_back(c.basis[i]);
    for (std::size_t k = 0; k < c.roots.size(); ++k) {
        if (P.root_in_r[k]) P.r_basis.push_back(c.root_vector(k));
        if (P.root_in_levi[k]) P.lss_basis.push_back(c.root_vector(k));
        else if (c.roots[k].positive) P.u_basis.push_back(c.root_vector(k));
    }
    for (auto j : J) {
        const Root& a = c.roots[c.simple[j]];
        P.lss_basis.push_back(bracket(c.root_vector(c.simple[j]), c.root_vector(c.root_index(detail::neg(a.coords)))));
    }
    // z = {h : α(h) = 0 for α ∈ J}
    ExactMatrix eq(J.size(), c.l);
    for (std::size_t r = 0; r < J.size(); ++r)
        for (std::size_t i = 0; i < c.l; ++i) eq(r, i) = Scalar(c.roots[c.simple[J[r]]].coords[i]);
    for (const auto& h : nullspace(eq)) P.z_basis.push_back(cartan_element(c, h));
    std::size_t d = P.lss_basis.size();
    std::size_t m = 0;
    while (m * (m - 1) / 2 < d || m < 2) ++m;
    if (d == 0) m = 1;
    if (m * (m - 1) / 2 != d) m = 0;
    P.lss_size = m;
    P.levi_iso = "so(" + std::to_string(m) + ")";
    return P;
}

// B: 0 ≤ i < l, adjoin −α_{i+1..l}. D: 1 ≤ i ≤ l−1, adjoin −α_{i..l}.
inline ParabolicData stable_parabolic(const AlgebraContext& c, std::size_t i) {
    detail::require_so(c);
    std::vector<std::size_t> J;
    if (c.type_b()) {
        if (i >= c.l) throw UsageError("stable_parabolic index out of range");
        for (std::size_t s = i; s < c.l; ++s) J.push_back(s);
    } else {
        if (i < 1 || i > c.l - 1) throw UsageError("stable_parabolic index out of range");
        for (std::size_t s = i - 1; s < c.l; ++s) J.push_back(s);
    }
    return parabolic_for_simple_set(c, J);
}

// The parabolic carrying the coincidence-i stratum: stable_parabolic for i below
// the top, b_+ for i = r_{n−1}.
inline ParabolicData coincidence_parabolic(const AlgebraContext& c, std::size_t i) {
    detail::require_so(c);
    std::size_t top = c.k_rank();
    if (i > top) throw UsageError("coincidence index out of range");
    if (i == top) return parabolic_for_simple_set(c, {});
    return stable_parabolic(c, c.type_b() ? i : i + 1);
}

inline bool theta_stable(const AlgebraContext& c, const std::vector<ExactMatrix>& span) {
    std::vector<ExactMatrix> img;
    for (const auto& y : span) img.push_back(theta_apply(c, y));
    return span_equal(coords_of(c, span), coords_of(c, img), c.dim());
}

// l-component of x ∈ r under r = l ⊕ u.
inline ExactMatrix degenerate_to_levi(const AlgebraContext& c, const ExactMatrix& x, const ParabolicData& P) {
    Vec v = coords(c, x);
    if (!P.contains_coords(c, v)) throw UsageError("element does not lie in the parabolic");
    for (std::size_t k = 0; k < c.roots.size(); ++k)
        if (!P.root_in_levi[k]) v[c.cartan_dim + k] = Scalar();
    return from_coords(c, v);
}

struct LeviParts {
    ExactMatrix z, ss;
};

// x_l = x_z + x_ss with x_z in the centre and x_ss in [l, l]
inline LeviParts levi_decompose(const AlgebraContext& c, const ExactMatrix& xl, const ParabolicData& P) {
    std::vector<Vec> cols;
    for (const auto& z : P.z_basis) cols.push_back(cartan_coordinates(c, z));
    std::vector<ExactMatrix> coroots(P.lss_basis.end() - static_cast<long>(P.simple_set.size()), P.lss_basis.end());
    for (const auto& h : coroots) cols.push_back(cartan_coordinates(c, h));
    ExactMatrix a = from_cols(cols, c.l);
    auto inv = inverse(a);
    if (!inv) throw std::logic_error("centre and coroots do not span the Cartan");
    Vec h = cartan_coordinates(c, xl);
    ExactMatrix sol = *inv * from_cols({h}, c.l);
    ExactMatrix z(c.n, c.n);
    for (std::size_t k = 0; k < P.z_basis.size(); ++k) z += P.z_basis[k] * sol(k, 0);
    return {z, xl - z};
}

// ---- sampling ---------------------------------------------------------------

inline std::optional<ExactMatrix> cayley_group_element(const AlgebraContext& c, const ExactMatrix& a) {
    ExactMatrix id = ExactMatrix::identity(c.n);
    auto inv = inverse(id + a);
    if (!inv) return std::nullopt;
    return (id - a) * *inv;
}

inline ExactMatrix sample_K(const AlgebraContext& c, std::uint64_t seed, const SampleBounds& b = {}) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        ExactMatrix a(c.n, c.n);
        for (const auto& kb : c.k_basis) a += kb * rng.rational(b);
        auto k = cayley_group_element(c, a);
        if (!k || determinant(*k).is_zero()) continue;  // gl: I - A may be singular
        if (c.is_so() && !(k->transpose() * c.form * *k == c.form && determinant(*k) == Scalar(1)))
            throw std::logic_error("Cayley transform left the group");
        return *k;
    }
    throw std::runtime_error("sample_K: I + A singular in every attempt");
}

inline ExactMatrix group_inverse(const AlgebraContext& c, const ExactMatrix& k) { return orthogonal_inverse(c, k); }

inline ExactMatrix adjoint(const AlgebraContext& c, const ExactMatrix& k, const ExactMatrix& x) {
    return k * x * group_inverse(c, k);
}

inline ExactMatrix random_combination(const std::vector<ExactMatrix>& span, Rng& rng, const SampleBounds& b) {
    ExactMatrix x(span.at(0).rows(), span.at(0).cols());
    for (const auto& y : span) x += y * rng.rational(b);
    return x;
}

inline ExactMatrix sample_YQ(const AlgebraContext& c, const OrbitDescriptor& q, std::uint64_t seed, const SampleBounds& b = {}) {
    Rng rng(seed);
    ExactMatrix y = random_combination(q.rep_borel, rng, b);
    return adjoint(c, sample_K(c, rng.next(), b), y);
}

inline std::vector<ExactMatrix> nilradical(const AlgebraContext& c, const OrbitDescriptor& q) {
    if (!q.closed) throw UsageError("nilradical requested for a non-closed orbit");
    std::vector<ExactMatrix> out;
    for (std::size_t k = 0; k < c.roots.size(); ++k)
        if (c.roots[k].positive) out.push_back(q.conj * c.root_vector(k) * q.conj_inv);
    return out;
}

inline ExactMatrix sample_nilfibre(const AlgebraContext& c, const OrbitDescriptor& q, std::uint64_t seed, const SampleBounds& b = {}) {
    Rng rng(seed);
    ExactMatrix y = random_combination(nilradical(c, q), rng, b);
    return adjoint(c, sample_K(c, rng.next(), b), y);
}

// ---- Ξ families ---------------------------------------------------------------

enum class Slot { U, L };

struct XiSample {
    ExactMatrix x;
    Vec a, u, v;
};

namespace detail {

// root vectors spanning the u- and v-directions of slot j (0-based)
inline std::pair<ExactMatrix, ExactMatrix> xi_directions(const AlgebraContext& c, std::size_t j) {
    std::vector<int> e(c.l, 0);
    if (c.type_b()) {
        e[j] = 1;
        return {c.root_vector(c.root_index(e)), c.root_vector(c.root_index(neg(e)))};
    }
    e[j] = 1;
    e[c.l - 1] = -1;
    const ExactMatrix& up = c.root_vector(c.root_index(e));
    const ExactMatrix& dn = c.root_vector(c.root_index(neg(e)));
    return {up - theta_apply(c, up), dn - theta_apply(c, dn)};
}

inline std::size_t xi_slots(const AlgebraContext& c) { return c.type_b() ? c.l : c.l - 1; }

}  // namespace detail

inline ExactMatrix xi_matrix(const AlgebraContext& c, const Vec& a, const Vec& u, const Vec& v) {
    ExactMatrix x = cartan_element(c, a);
    for (std::size_t j = 0; j < detail::xi_slots(c); ++j) {
        auto [eu, ev] = detail::xi_directions(c, j);
        if (!u[j].is_zero()) x += eu * u[j];
        if (!v[j].is_zero()) x += ev * v[j];
    }
    return x;
}

inline XiSample sample_xi(const AlgebraContext& c, std::size_t i, const std::vector<Slot>& pattern, std::uint64_t seed,
                          const SampleBounds& b = {}) {
    detail::require_so(c);
    if (pattern.size() != i) throw UsageError("Ξ pattern length must equal i");
    if (i > detail::xi_slots(c)) throw UsageError("Ξ index out of range");
    Rng rng(seed);
    XiSample s;
    // a_j nonzero, a_j ≠ ±a_k
    while (s.a.size() < c.l) {
        Scalar t = rng.nonzero_rational(b);
        bool ok = true;
        for (const auto& x : s.a) ok = ok && x != t && x != -t;
        if (ok) s.a.push_back(t);
    }
    std::size_t slots = detail::xi_slots(c);
    for (std::size_t j = 0; j < slots; ++j) {
        s.u.push_back(rng.nonzero_rational(b));
        s.v.push_back(rng.nonzero_rational(b));
        if (j < i) {
            if (pattern[j] == Slot::U) s.v[j] = Scalar();
            else s.u[j] = Scalar();
        }
    }
    s.x = xi_matrix(c, s.a, s.u, s.v);
    return s;
}

// Inverse of xi_matrix; nullopt if x is not of Ξ shape.
inline std::optional<XiSample> xi_decompose(const AlgebraContext& c, const ExactMatrix& x) {
    XiSample s;
    s.x = x;
    s.a = cartan_coordinates(c, x);
    for (std::size_t j = 0; j < detail::xi_slots(c); ++j) {
        auto [eu, ev] = detail::xi_directions(c, j);
        auto lead = [&](const ExactMatrix& e) {
            for (std::size_t r = 0; r < c.n; ++r)
                for (std::size_t q = 0; q < c.n; ++q)
                    if (!e(r, q).is_zero()) return x(r, q) / e(r, q);
            return Scalar();
        };
        s.u.push_back(lead(eu));
        s.v.push_back(lead(ev));
    }
    if (xi_matrix(c, s.a, s.u, s.v) != x) return std::nullopt;
    return s;
}

// B: ṡ_{ε_j}. D: ẇ_j for w_j = s_{ε_j−ε_{l−1}} s_{α_{l−1}} s_{α_l} s_{ε_j−ε_{l−1}}.
inline ExactMatrix xi_flip_element(const AlgebraContext& c, std::size_t j) {
    std::vector<int> e(c.l, 0);
    if (c.type_b()) {
        e[j] = 1;
        return weyl_representative(c, e);
    }
    ExactMatrix s1 = weyl_representative(c, c.roots[c.simple[c.l - 2]].coords);
    ExactMatrix s2 = weyl_representative(c, c.roots[c.simple[c.l - 1]].coords);
    ExactMatrix mid = s1 * s2;
    if (j == c.l - 2) return mid;
    e[j] = 1;
    e[c.l - 2] = -1;
    ExactMatrix t = weyl_representative(c, e);
    return t * mid * t;
}

}  // namespace lieco
