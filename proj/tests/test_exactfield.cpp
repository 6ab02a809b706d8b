#include <catch_amalgamated.hpp>

#include "lieco/jet.hpp"
#include "lieco/linalg.hpp"
#include "lieco/poly.hpp"
#include "lieco/random.hpp"

using namespace lieco;

namespace {

Scalar q(long a, long b = 1) { return Scalar(a, b); }
Scalar cx(long a, long b, long c, long d) { return Scalar(mpq_class(a, b), mpq_class(c, d)); }
const Scalar I = Scalar::i();

ExactMatrix mat(std::size_t r, std::size_t c, std::vector<Scalar> v) { return ExactMatrix(r, c, std::move(v)); }

Poly from_roots(const std::vector<long>& roots) {
    Poly p({Scalar(1)});
    for (long r : roots) p = p * Poly({Scalar(-r), Scalar(1)});
    return p;
}

// Cofactor expansion, used only as an oracle.
Scalar cofactor_det(const ExactMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return m(0, 0);
    Scalar acc;
    for (std::size_t j = 0; j < n; ++j) {
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Scalar t = m(0, j) * cofactor_det(minor);
        acc += (j % 2 == 0) ? t : -t;
    }
    return acc;
}

}  // namespace

TEST_CASE("field operations", "[exactfield]") {
    CHECK((q(1, 2) + I) * (q(1, 2) - I) == q(5, 4));
    CHECK(I.inv() == -I);
    CHECK(cx(2, 3, 1, 3) + cx(1, 3, 2, 3) == Scalar(1) + I);
    CHECK((I * I) == q(-1));
    CHECK(cx(3, 4, -1, 2).conj() == cx(3, 4, 1, 2));
    CHECK(q(6, 4).re() == mpq_class(3, 2));
    CHECK(q(3, -6).re().get_den() == 2);
    CHECK_THROWS_AS(q(1) / Scalar(), DivisionByZero);
    CHECK_FALSE(checked_div(q(1), Scalar()).has_value());
    CHECK(*checked_div(q(1), I) == -I);
}

TEST_CASE("scalar text format", "[exactfield]") {
    CHECK(Scalar::parse("3") == q(3));
    CHECK(Scalar::parse("-1/2*i") == cx(0, 1, -1, 2));
    CHECK(Scalar::parse("0").is_zero());
    CHECK(Scalar::parse("2/4+6/8*i") == cx(1, 2, 3, 4));
    CHECK(Scalar::parse("1-i") == Scalar(1) - I);
    CHECK(Scalar::parse(" -7 / 3 ") == q(-7, 3));
    CHECK(q(3).str() == "3");
    CHECK(cx(0, 1, -1, 2).str() == "-1/2*i");
    CHECK(Scalar().str() == "0");
    CHECK(cx(1, 2, 3, 4).str() == "1/2+3/4*i");
    CHECK(cx(1, 2, -1, 1).str() == "1/2-i");
    CHECK_THROWS_AS(Scalar::parse("1/0"), DivisionByZero);
    for (const char* bad : {"", "abc", "1/", "i*2", "1+2", "1/2/3", "3*i+2"}) CHECK_THROWS_AS(Scalar::parse(bad), ParseError);

    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Scalar s(rng.rational().re(), rng.rational().re());
        CHECK(Scalar::parse(s.str()) == s);
    }
}

TEST_CASE("matrix rank examples", "[exactfield]") {
    CHECK(rank(ExactMatrix(3, 3)) == 0);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(rank(ExactMatrix::identity(n)) == n);
    CHECK(rank(mat(2, 2, {q(1), I, I, q(-1)})) == 1);
    CHECK(rank(mat(2, 3, {q(1, 2), q(1, 3), q(1, 5), q(1, 4), q(1, 6), q(1, 10)})) == 1);
}

TEST_CASE("nullspace examples", "[exactfield]") {
    CHECK(nullspace(ExactMatrix::identity(4)).empty());
    CHECK(nullspace(ExactMatrix(3, 3)).size() == 3);
    auto ns = nullspace(mat(1, 2, {q(1), q(1)}));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == Vec{q(-1), q(1)});
}

TEST_CASE("rank-nullity and pivot-order independence", "[exactfield][property]") {
    Rng rng(2024);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = rng.uniform(1, 6), c = rng.uniform(1, 6);
        // low-rank products exercise the dependent case
        std::size_t k = rng.uniform(0, std::min(r, c));
        ExactMatrix m = rng.matrix(r, k) * rng.matrix(k, c);
        if (k == 0) m = ExactMatrix(r, c);
        // row scaling by i keeps the rank and brings in imaginary parts
        for (std::size_t i = 0; i < r; ++i)
            if (rng.coin()) {
                Scalar s = I + Scalar(rng.uniform(0, 2));
                for (std::size_t j = 0; j < c; ++j) m(i, j) *= s;
            }
        std::size_t rk = rank(m);
        CHECK(rk <= k);
        ExactMatrix e = m;
        CHECK(rref(e).size() == rk);
        auto ns = nullspace(m);
        CHECK(rk + ns.size() == c);
        for (const auto& v : ns) CHECK((m * from_cols({v}, c)).is_zero());

        std::vector<std::size_t> rp(r), cp(c);
        for (std::size_t i = 0; i < r; ++i) rp[i] = i;
        for (std::size_t j = 0; j < c; ++j) cp[j] = j;
        std::shuffle(rp.begin(), rp.end(), rng.engine());
        std::shuffle(cp.begin(), cp.end(), rng.engine());
        ExactMatrix pm(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) pm(i, j) = m(rp[i], cp[j]);
        CHECK(rank(pm) == rk);
        CHECK(rank(m.transpose()) == rk);
    }
}

TEST_CASE("determinant and inverse agree with cofactor oracle", "[exactfield][property]") {
    Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = rng.uniform(1, 5);
        ExactMatrix m = rng.matrix(n, n, {5, 3});
        if (t % 5 == 0) m(0, 0) = m(0, 0) + I;
        Scalar d = cofactor_det(m);
        CHECK(determinant(m) == d);
        auto inv = inverse(m);
        CHECK(inv.has_value() == !d.is_zero());
        if (inv) CHECK(m * *inv == ExactMatrix::identity(n));
    }
    ExactMatrix sing = mat(2, 2, {q(1), q(2), q(2), q(4)});
    CHECK(determinant(sing).is_zero());
    CHECK_FALSE(inverse(sing).has_value());
}

TEST_CASE("polynomial gcd examples", "[exactfield]") {
    Poly lam = Poly::monomial(1);
    Poly one({Scalar(1)});
    CHECK(gcd(lam * lam - one, lam - one) == lam - one);
    CHECK(gcd(Poly::monomial(2), Poly::monomial(3)) == Poly::monomial(2));
    CHECK(gcd(from_roots({1, 1, 2}), from_roots({1, 3})) == from_roots({1}));
    Poly p({q(2), q(4)});
    CHECK(gcd(p, Poly()) == p.monic());
    CHECK(gcd(Poly(), Poly()).is_zero());
    CHECK(Poly({Scalar(), Scalar()}).coeffs().empty());
}

TEST_CASE("gcd divides both and counts common roots", "[exactfield][property]") {
    Rng rng(99);
    for (int t = 0; t < 120; ++t) {
        std::vector<long> a, b;
        for (long k = rng.uniform(0, 5); k > 0; --k) a.push_back(rng.uniform(-3, 3));
        for (long k = rng.uniform(0, 5); k > 0; --k) b.push_back(rng.uniform(-3, 3));
        // multiset intersection size
        std::vector<long> sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        std::vector<long> common;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
        Poly pa = from_roots(a) * Poly({Scalar(rng.uniform(1, 4))});
        Poly pb = from_roots(b) * Poly({Scalar(0, 1) + I});
        Poly g = gcd(pa, pb);
        CHECK(g.degree() == static_cast<long>(common.size()));
        CHECK(g.lead() == Scalar(1));
        CHECK(divmod(pa, g).second.is_zero());
        CHECK(divmod(pb, g).second.is_zero());
    }
}

TEST_CASE("jet arithmetic", "[exactfield]") {
    using J = Jet<Scalar>;
    J a(q(2), q(3)), b(q(5), I);
    J p = a * b;
    CHECK(p.v == q(10));
    CHECK(p.d == q(2) * I + q(15));
    CHECK((a + b).d == q(3) + I);

    // directional derivative of det on 2×2, symbolic expansion as oracle
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        ExactMatrix x = rng.matrix(2, 2), v = rng.matrix(2, 2);
        J d = J(x(0, 0), v(0, 0)) * J(x(1, 1), v(1, 1)) - J(x(0, 1), v(0, 1)) * J(x(1, 0), v(1, 0));
        Scalar expect = x(0, 0) * v(1, 1) + v(0, 0) * x(1, 1) - x(0, 1) * v(1, 0) - v(0, 1) * x(1, 0);
        CHECK(d.v == x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0));
        CHECK(d.d == expect);
    }
}

TEST_CASE("echelon span utilities", "[exactfield]") {
    std::vector<Vec> a = {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}};
    std::vector<Vec> b = {{q(0), q(1), q(1)}, {q(1), q(1), q(0)}};
    CHECK(span_dim(a, 3) == 2);
    CHECK(intersection_dim(a, b, 3) == 1);
    auto ib = intersection_basis(a, b, 3);
    REQUIRE(ib.size() == 1);
    CHECK(ib[0] == Vec{q(1), q(1), q(0)});
    CHECK(span_contains(a, {{q(2), q(3), q(0)}}, 3));
    CHECK_FALSE(span_contains(a, b, 3));
}
