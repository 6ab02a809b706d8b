#include <catch_amalgamated.hpp>

#include <algorithm>

#include "lieco/korbits.hpp"

using namespace lieco;

namespace {

Ctx so(std::size_t n) { return make_algebra(Kind::SO, n); }
Ctx gl(std::size_t n) { return make_algebra(Kind::GL, n); }

ExactMatrix random_element(const AlgebraContext& c, Rng& rng, const SampleBounds& b = {}) {
    Vec v(c.dim());
    for (auto& s : v) s = rng.rational(b);
    return from_coords(c, v);
}

Scalar cofactor_det(const ExactMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    Scalar acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Scalar t = m(0, j) * cofactor_det(minor);
        acc += (j % 2 == 0) ? t : -t;
    }
    return acc;
}

ExactMatrix diag(std::vector<long> d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Scalar(d[i]);
    return m;
}

Poly lam() { return Poly::monomial(1); }

}  // namespace

TEST_CASE("characteristic polynomial examples", "[invariants]") {
    CHECK(char_poly(ExactMatrix(3, 3)) == Poly::monomial(3));
    CHECK(char_poly(diag({2, 0, -2})) == Poly::monomial(3) - lam() * Poly({Scalar(4)}));
    ExactMatrix m(2, 2, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
    CHECK(char_poly(m) == Poly({Scalar(-2), Scalar(-5), Scalar(1)}));
}

TEST_CASE("characteristic polynomial agrees with cofactor evaluation", "[invariants][property]") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = rng.uniform(1, 6);
        ExactMatrix x = rng.matrix(n, n, {6, 4});
        if (t % 3 == 0) x(0, n - 1) += Scalar::i();
        Poly p = char_poly(x);
        CHECK(p.degree() == static_cast<long>(n));
        for (long v = -3; v <= 3; ++v) {
            ExactMatrix a = ExactMatrix::identity(n) * Scalar(v) - x;
            CHECK(p(Scalar(v)) == cofactor_det(a));
        }
    }
}

TEST_CASE("Pfaffian", "[invariants][property]") {
    CHECK(pfaffian(ExactMatrix(4, 4)).is_zero());
    CHECK_THROWS_AS(pfaffian(ExactMatrix(3, 3)), UsageError);
    for (std::size_t n : {4, 6, 8}) {
        auto c = so(n);
        Rng rng(n);
        for (int t = 0; t < 10; ++t) {
            ExactMatrix x = random_element(*c, rng);
            Scalar pf = pfaffian(x);
            CHECK(pf * pf == determinant(c->form * x));
            CHECK(pf * pf == determinant(x) * determinant(c->form));
        }
    }
    // so(4): constant coefficient of the characteristic polynomial is Pf²
    auto c = so(4);
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        ExactMatrix x = random_element(*c, rng);
        Scalar pf = pfaffian(x);
        CHECK(char_poly(x).coeffs()[0] == pf * pf);
    }
}

TEST_CASE("generator evaluation examples", "[invariants]") {
    for (auto c : {so(4), so(5), so(6), gl(3)}) {
        for (std::size_t m = c->first_level(); m <= c->n; ++m) {
            auto f = evaluate_generators(*c, ExactMatrix(c->n, c->n), m);
            CHECK(f.size() == c->rank_at(m));
            for (const auto& v : f) CHECK(v.is_zero());
        }
    }
    CHECK(evaluate_generators(*so(4), ExactMatrix(4, 4), 4).size() == 2);
    auto g = gl(3);
    auto f = evaluate_generators(*g, diag({1, 2, 3}), 3);
    CHECK(f == std::vector<Scalar>{Scalar(6), Scalar(11), Scalar(6)});
    CHECK_THROWS_AS(evaluate_generators(*g, diag({1, 2, 3}), 4), UsageError);
    CHECK_THROWS_AS(evaluate_generators(*so(5), ExactMatrix(5, 5), 1), UsageError);
}

TEST_CASE("Kostant-Wallach maps", "[invariants]") {
    for (std::size_t n = 3; n <= 8; ++n) {
        auto c = so(n);
        CHECK(full_kw(*c, ExactMatrix(n, n)).values.size() == full_length(*c));
        Rng rng(n);
        ExactMatrix x = random_element(*c, rng);
        auto full = full_kw(*c, x).values;
        auto part = partial_kw(*c, x).values;
        REQUIRE(part.size() == partial_length(*c));
        CHECK(std::equal(part.begin(), part.end(), full.end() - static_cast<long>(part.size())));
        // strictly upper triangular part
        Vec v = coords(*c, x);
        for (std::size_t k = 0; k < c->roots.size(); ++k)
            if (!c->roots[k].positive) v[c->cartan_dim + k] = Scalar();
        for (std::size_t i = 0; i < c->cartan_dim; ++i) v[i] = Scalar();
        for (const auto& s : partial_kw(*c, from_coords(*c, v)).values) CHECK(s.is_zero());
    }
    auto g = gl(3);
    ExactMatrix u(3, 3);
    u(0, 1) = Scalar(2);
    u(0, 2) = Scalar(-1);
    u(1, 2) = Scalar(5);
    auto fv = full_kw(*g, u).values;
    CHECK(fv.size() == 6);
    for (const auto& s : fv) CHECK(s.is_zero());
    // type B Cartan: the k-part uses the same coordinates
    auto b = so(5);
    auto pv = partial_kw(*b, cartan_element(*b, {Scalar(1), Scalar(2)})).values;
    REQUIRE(pv.size() == 4);
    CHECK(pv[0] == pv[2]);
    CHECK(pv[1] * pv[1] == pv[3]);
}

TEST_CASE("K-invariance of the partial map", "[invariants][property]") {
    for (std::size_t n : {3, 4, 5, 6, 7}) {
        auto c = so(n);
        Rng rng(10 + n);
        for (int t = 0; t < 5; ++t) {
            ExactMatrix x = random_element(*c, rng);
            ExactMatrix k = sample_K(*c, rng.next(), {3, 2});
            CHECK(partial_kw(*c, adjoint(*c, k, x)).values == partial_kw(*c, x).values);
        }
    }
    for (std::size_t n : {2, 3, 4}) {
        auto c = gl(n);
        Rng rng(n);
        for (int t = 0; t < 5; ++t) {
            ExactMatrix x = rng.matrix(n, n);
            ExactMatrix k = ExactMatrix::identity(n);
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (std::size_t j = 0; j + 1 < n; ++j) k(i, j) = rng.rational({4, 3}) + (i == j ? Scalar(5) : Scalar());
            auto ki = inverse(k);
            if (!ki) continue;
            CHECK(partial_kw(*c, k * x * *ki).values == partial_kw(*c, x).values);
        }
    }
}

TEST_CASE("chain-level invariance under G_m", "[invariants][property]") {
    for (std::size_t n : {5, 6, 7}) {
        auto c = so(n);
        Rng rng(n);
        ExactMatrix x = random_element(*c, rng);
        for (std::size_t m = 2; m <= n; ++m) {
            ExactMatrix a(n, n);
            for (const auto& b : c->level(m).basis) a += b * rng.rational({3, 2});
            auto g = cayley_group_element(*c, a);
            if (!g) continue;
            CHECK(in_group(*c, *g));
            ExactMatrix y = adjoint(*c, *g, x);
            CHECK(evaluate_generators(*c, y, m) == evaluate_generators(*c, x, m));
        }
    }
}

TEST_CASE("coincidence count examples", "[invariants]") {
    auto g = gl(3);
    ExactMatrix t = diag({1, 2, 5});
    t(0, 1) = Scalar(7);
    t(1, 2) = Scalar(-3);
    CHECK(coincidence_count(*g, t) == 2);
    auto c = so(5);
    ExactMatrix x = xi_matrix(*c, {Scalar(1), Scalar(2)}, {Scalar(), Scalar()}, {Scalar(3), Scalar(4)});
    CHECK(coincidence_count(*c, x) == 2);
    auto d = so(4);
    Rng rng(8);
    for (int k = 0; k < 10; ++k) CHECK(coincidence_count(*d, random_element(*d, rng)) == 0);
}

TEST_CASE("coincidence count matches spectrum matching", "[invariants][property]") {
    // gl: triangular, then conjugated by K; spectra are the diagonals
    Rng rng(77);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = rng.uniform(2, 5);
        auto c = gl(n);
        std::vector<long> d;
        ExactMatrix x(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            d.push_back(rng.uniform(-2, 2));
            x(i, i) = Scalar(d.back());
            for (std::size_t j = i + 1; j < n; ++j) x(i, j) = rng.rational({4, 2});
        }
        std::vector<long> a = d, b(d.begin(), d.end() - 1), common;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        ExactMatrix k = ExactMatrix::identity(n);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j) k(i, j) += rng.rational({2, 2});
        if (auto ki = inverse(k)) x = k * x * *ki;
        CHECK(coincidence_count(*c, x) == common.size());
    }
    // so: Ξ elements have x_k in the Cartan of k, so σ(x_k) is read off; count the
    // listed μ = a_j² that are roots of q_x
    for (std::size_t n : {5, 6, 7, 8}) {
        auto c = so(n);
        std::size_t slots = c->type_b() ? c->l : c->l - 1;
        for (int t = 0; t < 20; ++t) {
            std::vector<Slot> pat;
            for (std::size_t j = 0; j < slots; ++j) pat.push_back(rng.coin() ? Slot::U : Slot::L);
            auto s = sample_xi(*c, slots, pat, rng.next(), {5, 2});
            // release some slots: both coordinates nonzero
            for (std::size_t j = 0; j < slots; ++j)
                if (rng.coin()) {
                    s.u[j] = rng.nonzero_rational({5, 2});
                    s.v[j] = rng.nonzero_rational({5, 2});
                }
            ExactMatrix x = xi_matrix(*c, s.a, s.u, s.v);
            Poly q = reduced_char_poly(*c, x, n);
            std::size_t listed = c->type_b() ? c->l : c->l - 1;
            std::size_t matches = 0;
            for (std::size_t j = 0; j < listed; ++j) matches += q(s.a[j] * s.a[j]).is_zero();
            CHECK(coincidence_count(*c, x) == matches);
            std::size_t closed_slots = 0;
            for (std::size_t j = 0; j < slots; ++j) closed_slots += s.u[j].is_zero() || s.v[j].is_zero();
            CHECK(matches >= closed_slots);
        }
    }
}

TEST_CASE("characteristic polynomials of so elements are even or odd", "[invariants][property]") {
    for (std::size_t n = 3; n <= 9; ++n) {
        auto c = so(n);
        Rng rng(n);
        ExactMatrix x = random_element(*c, rng);
        auto cp = charpoly_desc(x);
        for (std::size_t j = 1; j <= n; j += 2) CHECK(cp[j].is_zero());
        for (std::size_t m = 2; m <= n; ++m) CHECK_NOTHROW(reduced_char_poly(*c, x, m));
    }
}

TEST_CASE("stratum of value round trip", "[invariants][property]") {
    for (auto c : {so(3), so(4), so(5), so(6), so(7), gl(2), gl(3), gl(4)}) {
        CHECK(stratum_of_value(*c, std::vector<Scalar>(partial_length(*c))) == c->k_rank());
        Rng rng(c->n * 3 + c->is_so());
        for (int t = 0; t < 100; ++t) {
            ExactMatrix x;
            // mix generic and structured elements so that nonzero strata occur
            if (c->is_so() && c->n >= 5 && t % 2) {
                std::size_t slots = c->type_b() ? c->l : c->l - 1;
                std::size_t i = rng.uniform(0, static_cast<long>(slots));
                x = sample_xi(*c, i, std::vector<Slot>(i, Slot::U), rng.next(), {4, 2}).x;
            } else {
                x = random_element(*c, rng, {3, 2});
            }
            CHECK(stratum_of_value(*c, partial_kw(*c, x).values) == coincidence_count(*c, x));
        }
        CHECK_THROWS_AS(stratum_of_value(*c, {}), UsageError);
    }
}
