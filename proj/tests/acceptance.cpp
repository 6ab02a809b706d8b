// One line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lieco/lieco.hpp"

using namespace lieco;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kKostantTrials = 200;
constexpr std::size_t kGzeroTrials = 100;
constexpr std::size_t kYqTrials = 50;
constexpr std::size_t kXiTrials = 10;
constexpr std::size_t kNilfibreTrials = 50;
constexpr std::size_t kLowdimBudget = 200;
constexpr std::size_t kChainTrials = 100;

constexpr double kOrbitTablesSeconds = 1.0;
constexpr double kKostantSeconds = 120.0;
constexpr double kTotalSeconds = 600.0;

struct Run {
    Report report;
    double seconds;
};

Run run(const std::string& suite, std::optional<std::size_t> trials) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.seed = kSeed;
    cfg.trials = trials;
    Report r = run_suite(cfg);
    return {r, r.wall_time_s};
}

const Claim* find(const Report& r, const std::string& id) {
    for (const auto& c : r.claims)
        if (c.id == id) return &c;
    return nullptr;
}

// all named claims present, nonvacuous, and passing
bool claims_pass(const Report& r, const std::vector<std::string>& ids, std::ostringstream& why) {
    bool ok = true;
    for (const auto& id : ids) {
        const Claim* c = find(r, id);
        if (!c) {
            why << " missing " << id << ";";
            ok = false;
        } else {
            why << " " << id << " " << c->passes << "/" << c->trials << ";";
            ok = ok && c->trials > 0 && c->passed();
        }
    }
    return ok;
}

bool min_trials(const Report& r, const std::string& id, std::size_t n, std::size_t groups) {
    const Claim* c = find(r, id);
    return c && c->trials >= n * groups;
}

int failures = 0;

void line(int k, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << k << ": " << title << " |" << detail << std::endl;
    failures += !ok;
}

}  // namespace

int main() {
    double total = 0;

    {
        Run r = run("orbit-tables", std::nullopt);
        total += r.seconds;
        std::ostringstream why;
        bool ok = claims_pass(r.report, {"orbit-count", "codimensions", "closed-orbits", "closed-orbit-dimension", "representatives",
                                         "monoidal-graph", "yq-dimension"},
                              why) &&
                  r.report.passed() && find(r.report, "orbit-count")->trials == 10;
        auto t0 = std::chrono::steady_clock::now();
        for (std::size_t n = 3; n <= 12; ++n) enumerate_orbits(*make_algebra(Kind::SO, n));
        double enumeration = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && enumeration < kOrbitTablesSeconds;
        why << " enumeration " << enumeration << " s (limit " << kOrbitTablesSeconds << "), suite " << r.seconds << " s";
        line(1, "orbit tables for B l=1..5 and D l=2..6", ok, why.str());
    }

    Run kostant = run("kostant-equivalence", kKostantTrials);
    total += kostant.seconds;
    {
        std::ostringstream why;
        // 7 algebras: gl(3..5), so(4..7)
        bool ok = claims_pass(kostant.report, {"kostant-criterion", "regular-subsumption"}, why) &&
                  min_trials(kostant.report, "kostant-criterion", kKostantTrials, 7) && kostant.seconds < kKostantSeconds;
        why << " " << kostant.seconds << " s (limit " << kKostantSeconds << ")";
        line(2, "n-strong regularity iff full rank partial Jacobian", ok, why.str());
    }

    {
        Run r = run("gzero-nsreg", kGzeroTrials);
        total += r.seconds;
        std::ostringstream why;
        bool ok = claims_pass(r.report, {"gzero-nsreg", "orbit-dimension", "regular-pair"}, why) &&
                  min_trials(r.report, "gzero-nsreg", kGzeroTrials, 7);
        line(3, "g(0) is n-strongly regular with trivial stabilizer", ok, why.str());
    }

    {
        Run r = run("yq-strata", kYqTrials);
        total += r.seconds;
        std::ostringstream why;
        // 12 orbits over so(5), so(6), so(7); generic fraction threshold 1/2 is applied per orbit inside the suite
        bool ok = claims_pass(r.report, {"stratum-bound", "membership", "exact-coincidence-generic"}, why) &&
                  min_trials(r.report, "stratum-bound", kYqTrials, 12) && find(r.report, "exact-coincidence-generic")->trials == 12;
        line(4, "Y_Q lies in g(>= codim Q), generically exactly (fraction > 0.5)", ok, why.str());
    }

    {
        Run r = run("xi-families", kXiTrials);
        total += r.seconds;
        std::ostringstream why;
        bool ok = claims_pass(r.report, {"all-U-in-parabolic", "L-to-U", "stratum-bound"}, why);
        if (const Claim* e = find(r.report, "stratum-exact")) why << " generic exactness " << e->passes << "/" << e->trials << ";";
        line(5, "Xi families: parabolic membership, L-to-U conjugation, stratum bound", ok, why.str());
    }

    {
        Run r = run("nilfibre", kNilfibreTrials), o = run("overlaps", std::nullopt);
        total += r.seconds + o.seconds;
        std::ostringstream why;
        // closed orbits over so(5..8): 2 + 1 + 2 + 1
        bool ok = claims_pass(r.report, {"partial-kw-zero", "not-nsreg", "not-sreg", "top-stratum"}, why) &&
                  min_trials(r.report, "partial-kw-zero", kNilfibreTrials, 6) &&
                  claims_pass(o.report, {"joint-centralizer-nonzero", "highest-root-line"}, why);
        line(6, "nilfibre of the partial map and nilradical overlaps", ok, why.str());
    }

    {
        Run r = run("lowdim", kLowdimBudget);
        total += r.seconds;
        std::ostringstream why;
        bool ok = claims_pass(r.report, {"so3-sreg-witness", "witness-in-nilfibre"}, why);
        std::ifstream in(std::string(LIECO_FIXTURES) + "/so3_sreg_witness.json");
        std::ostringstream text;
        text << in.rdbuf();
        try {
            auto doc = parse_matrix_document(text.str());
            auto found = suites::so3_sreg_search(kSeed, kLowdimBudget);
            bool frozen = is_sreg(*doc.ctx, doc.mat);
            for (const auto& v : partial_kw(*doc.ctx, doc.mat).values) frozen = frozen && v.is_zero();
            why << " fixture strongly regular in nilfibre: " << (frozen ? "yes" : "no") << ";";
            ok = ok && frozen && found.found;
        } catch (const std::exception& e) {
            why << " fixture: " << e.what();
            ok = false;
        }
        line(7, "so(3) nilfibre contains a strongly regular element", ok, why.str());
    }

    {
        Run r = run("sreg-chain", kChainTrials);
        total += r.seconds;
        std::ostringstream why;
        // 9 algebras: gl(2..6), so(3..6)
        bool ok = claims_pass(r.report, {"theta-set-sreg", "chain-implication", "full-jacobian"}, why) &&
                  min_trials(r.report, "theta-set-sreg", kChainTrials, 9);
        line(8, "Theta sets are strongly regular; chain condition implies regularity", ok, why.str());
    }

    {
        Run r = run("dimension-identities", std::nullopt);
        total += r.seconds;
        std::ostringstream why;
        bool ok = claims_pass(r.report, {"flag-dimension", "quotient-dimension"}, why) && claims_pass(kostant.report, {"fibre-dimension"}, why) &&
                  find(r.report, "quotient-dimension")->trials == 21;
        line(9, "dimension identities for n <= 12 and fibre dimension at n-strongly regular points", ok, why.str());
    }

    bool in_time = total < kTotalSeconds;
    std::cout << (in_time ? "PASS" : "FAIL") << "  total runtime " << total << " s (limit " << kTotalSeconds << ")" << std::endl;
    failures += !in_time;
    return failures == 0 ? 0 : 1;
}
