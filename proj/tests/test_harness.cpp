#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "lieco/lieco.hpp"

using namespace lieco;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(LIECO_FIXTURES) + "/" + name);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SuiteConfig config(const std::string& suite, std::size_t trials, std::uint64_t seed = 7) {
    SuiteConfig c;
    c.suite = suite;
    c.trials = trials;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("analyze examples", "[harness]") {
    auto z = parse_matrix_document(fixture("so5_zero.json"));
    Analysis a = analyze(*z.ctx, z.mat);
    CHECK(a.coincidence == 2);
    CHECK(a.stratum_from_value == 2);
    CHECK_FALSE(a.nsreg);
    CHECK(a.jacobian_rank == 0);

    auto d = parse_matrix_document(fixture("gl3_diag.json"));
    CHECK(analyze(*d.ctx, d.mat).coincidence == 2);

    for (auto c : {make_algebra(Kind::SO, 5), make_algebra(Kind::SO, 6)}) {
        std::size_t slots = c->type_b() ? c->l : c->l - 1;
        for (std::size_t i = 0; i <= slots; ++i) {
            auto s = sample_xi(*c, i, std::vector<Slot>(i, Slot::U), 11 + i);
            auto doc = parse_matrix_document(matrix_json(*c, s.x));
            CHECK(analyze(*doc.ctx, doc.mat).coincidence == i);
        }
    }
}

TEST_CASE("document diagnostics", "[harness]") {
    try {
        parse_matrix_document(fixture("bad_membership.json"));
        FAIL("accepted a non-member");
    } catch (const MembershipError& e) {
        CHECK(e.row == 0);
        CHECK(e.col == 2);
    }
    try {
        parse_matrix_document(fixture("bad_scalar.json"));
        FAIL("accepted a bad scalar");
    } catch (const DocumentError& e) {
        CHECK(e.where == "entries[1][1]");
    }
    CHECK_THROWS_AS(parse_matrix_document(std::string("{\"algebra\": \"so\", \"n\": 3}")), DocumentError);
    CHECK_THROWS_AS(parse_matrix_document(std::string("{\"algebra\": \"sp\", \"n\": 4, \"entries\": []}")), DocumentError);
    CHECK_THROWS_AS(parse_matrix_document(std::string("{not json")), DocumentError);
    CHECK_THROWS_AS(parse_matrix_document(std::string("{\"algebra\": \"so\", \"n\": 3, \"entries\": [[0,0],[0,0]]}")), DocumentError);
}

TEST_CASE("JSON round trips", "[harness][property]") {
    for (auto c : {make_algebra(Kind::SO, 5), make_algebra(Kind::SO, 6), make_algebra(Kind::GL, 4)}) {
        Rng rng(c->n);
        for (int t = 0; t < 5; ++t) {
            ExactMatrix x = random_element(*c, rng, SampleBounds{});
            if (t == 0) x = x * Scalar::parse("2-3*i");
            auto doc = parse_matrix_document(matrix_json(*c, x).dump());
            CHECK(doc.mat == x);
            for (const auto& v : {partial_kw(*c, x), full_kw(*c, x)}) {
                InvariantVector back = parse_invariant(json::parse(invariant_json(v).dump()));
                CHECK(back.values == v.values);
                CHECK(back.partial == v.partial);
                CHECK(back.n == v.n);
            }
        }
    }
}

TEST_CASE("orbit graph emission", "[harness]") {
    auto b = make_algebra(Kind::SO, 5);
    auto gb = orbit_graph_json(*b, enumerate_orbits(*b));
    CHECK(gb["nodes"].size() == 4);
    CHECK(gb["edges"].size() == 3);
    auto d = make_algebra(Kind::SO, 4);
    auto gd = orbit_graph_json(*d, enumerate_orbits(*d));
    CHECK(gd["nodes"].size() == 2);
    for (auto c : {b, d, make_algebra(Kind::SO, 8)}) {
        CHECK(orbit_graph_text(*c, enumerate_orbits(*c)) == orbit_graph_text(*c, enumerate_orbits(*c)));
        CHECK(orbit_graph_json(*c, enumerate_orbits(*c)).dump() == orbit_graph_json(*c, enumerate_orbits(*c)).dump());
    }
    CHECK(orbit_graph_text(*b, enumerate_orbits(*b)) ==
          "graph so(5)\nnode Q+ codim=2 closed=yes word=-\nnode Q- codim=2 closed=yes word=-\nnode Q1 codim=1 closed=no word=s2\n"
          "node Q0 codim=0 closed=no word=s2.s1\nedge Q+ -> Q1 s2\nedge Q- -> Q1 s2\nedge Q1 -> Q0 s1\n");
}

TEST_CASE("suite runs are reproducible", "[harness]") {
    for (const char* s : {"xi-families", "kostant-equivalence", "lowdim"}) {
        SuiteConfig cfg = config(s, 3);
        cfg.n_max = 5;
        Report a = run_suite(cfg), b = run_suite(cfg);
        CHECK(report_json(a, false).dump() == report_json(b, false).dump());
        CHECK(a.passed());
    }
}

TEST_CASE("zero trials give an empty passing report", "[harness]") {
    Report r = run_suite(config("kostant-equivalence", 0));
    CHECK(r.passed());
    for (const auto& c : r.claims) CHECK(c.trials == 0);
}

TEST_CASE("unknown suite is a usage error", "[harness]") { CHECK_THROWS_AS(run_suite(config("no-such-suite", 1)), UsageError); }

TEST_CASE("witness replay reproduces the predicate", "[harness]") {
    auto c = make_algebra(Kind::SO, 6);
    ExactMatrix y = sample_nilfibre(*c, closed_orbits(*c)[0], 99);
    Claim cl{"not-nsreg", "probe"};
    record(cl, is_nsreg(*c, y), [&] { return make_witness(*c, y, 0, 99, "nilfibre element"); });
    REQUIRE(cl.failures.size() == 1);
    auto doc = parse_matrix_document(cl.failures[0].element.dump());
    CHECK(doc.mat == y);
    CHECK_FALSE(analyze(*doc.ctx, doc.mat).nsreg);
    CHECK(cl.failures[0].seed == 99);
}

TEST_CASE("so(3) nilfibre witness is strongly regular", "[harness]") {
    auto doc = parse_matrix_document(fixture("so3_sreg_witness.json"));
    Analysis a = analyze(*doc.ctx, doc.mat);
    CHECK(a.sreg);
    CHECK(a.full_jacobian_rank == a.full_jacobian_target);
    for (const auto& v : a.partial.values) CHECK(v.is_zero());
    // the search is deterministic and still finds the frozen element
    auto w = suites::so3_sreg_search(1, 200);
    REQUIRE(w.found);
    CHECK(w.x == doc.mat);
    CHECK(json::parse(fixture("so3_sreg_witness.json"))["seed"].get<std::uint64_t>() == w.seed);
}

// With det in place of the Pfaffian the differentials drop rank along Pf = 0.
TEST_CASE("Pfaffian is needed as the top so(4) generator", "[harness]") {
    auto c = make_algebra(Kind::SO, 4);
    auto det_variant = [&](const Matrix<Jet<Scalar>>& X) {
        auto v = evaluate_generators(*c, X, 3);
        auto cp = charpoly_desc(restrict_to_level(*c, X, 4));
        v.push_back(cp[2]);
        v.push_back(cp[4]);
        return v;
    };
    std::size_t witnesses = 0, pf_zero = 0;
    std::optional<Vec> first;
    for (int code = 0; code < 729; ++code) {
        Vec v(6);
        int r = code;
        for (auto& s : v) {
            s = Scalar(static_cast<long>(r % 3) - 1);
            r /= 3;
        }
        ExactMatrix x = from_coords(*c, v);
        if (!pfaffian(restrict_to_level(*c, x, 4)).is_zero()) continue;
        ++pf_zero;
        std::size_t with_det = rank(jacobian(*c, x, det_variant));
        CHECK(with_det < 3);
        if (kostant_jacobian_rank(*c, x) == 3) {
            ++witnesses;
            if (!first) first = v;
        }
    }
    CHECK(pf_zero > 0);
    CHECK(witnesses > 0);
    REQUIRE(first);
    auto frozen = parse_matrix_document(fixture("so4_pfaffian_witness.json"));
    CHECK(frozen.mat == from_coords(*c, *first));
    CHECK(is_nsreg(*c, frozen.mat));
    CHECK(pfaffian(restrict_to_level(*c, frozen.mat, 4)).is_zero());
    CHECK(rank(jacobian(*c, frozen.mat, det_variant)) == 2);
}
