#pragma once

#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lieco/io.hpp"

namespace lieco {

// ---- analysis of a single element ------------------------------------------------

struct Analysis {
    std::size_t coincidence = 0, stratum_from_value = 0;
    bool regular = false, regular_k = false, nsreg = false, sreg = false;
    std::size_t jacobian_rank = 0, jacobian_target = 0;
    std::size_t full_jacobian_rank = 0, full_jacobian_target = 0;
    std::size_t z_g = 0, z_k_of_xk = 0, nsreg_intersection = 0, k_stabilizer = 0;
    InvariantVector partial, full;
};

inline Analysis analyze(const AlgebraContext& c, const ExactMatrix& x) {
    Analysis a;
    a.coincidence = coincidence_count(c, x);
    a.partial = partial_kw(c, x);
    a.full = full_kw(c, x);
    a.stratum_from_value = stratum_of_value(c, a.partial.values);
    a.regular = is_regular(c, x, c.n);
    a.regular_k = is_regular(c, x, c.n - 1);
    a.nsreg = is_nsreg(c, x);
    a.sreg = is_sreg(c, x);
    a.jacobian_rank = kostant_jacobian_rank(c, x);
    a.jacobian_target = partial_length(c);
    a.full_jacobian_rank = full_jacobian_rank(c, x);
    a.full_jacobian_target = full_length(c);
    a.z_g = centralizer(c, x, ambient_g(c)).dim();
    a.z_k_of_xk = centralizer(c, project_to_level(c, x, c.n - 1), ambient_k(c)).dim();
    a.nsreg_intersection = nsreg_intersection(c, x).dim();
    a.k_stabilizer = k_stabilizer(c, x).dim();
    return a;
}

inline json analysis_json(const AlgebraContext& c, const Analysis& a) {
    return json{{"algebra", kind_name(c.kind)},
                {"n", c.n},
                {"coincidence", a.coincidence},
                {"stratum_from_value", a.stratum_from_value},
                {"regular", a.regular},
                {"regular_k", a.regular_k},
                {"nsreg", a.nsreg},
                {"sreg", a.sreg},
                {"jacobian_rank", a.jacobian_rank},
                {"jacobian_target", a.jacobian_target},
                {"full_jacobian_rank", a.full_jacobian_rank},
                {"full_jacobian_target", a.full_jacobian_target},
                {"centralizer_dims",
                 {{"z_g(x)", a.z_g}, {"z_k(x_k)", a.z_k_of_xk}, {"z_k(x_k)∩z_g(x)", a.nsreg_intersection}, {"z_k(x)", a.k_stabilizer}}},
                {"partial_kw", scalar_list(a.partial.values)},
                {"full_kw", scalar_list(a.full.values)}};
}

// ---- reports ------------------------------------------------------------------------

struct SuiteConfig {
    std::string suite;
    std::optional<std::size_t> trials;
    std::uint64_t seed = 1;
    std::optional<std::size_t> n_min, n_max;
    std::optional<Kind> kind;
    SampleBounds bounds{};
    SampleBounds group_bounds{3, 2};  // coefficients of A in the Cayley parametrization of K
};

struct Witness {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string note;
    json element;  // matrix document, replayable through analyze
};

struct Claim {
    std::string id, anchor;
    std::size_t trials = 0, passes = 0;
    std::vector<Witness> failures;
    json metrics = json::object();
    bool passed() const { return passes == trials; }
};

struct Report {
    std::string suite;
    json config;
    std::deque<Claim> claims;  // stable references while claims are added
    json metrics = json::object();
    double wall_time_s = 0;

    bool passed() const {
        for (const auto& c : claims)
            if (!c.passed()) return false;
        return true;
    }
    Claim& claim(const std::string& id, const std::string& anchor) {
        for (auto& c : claims)
            if (c.id == id) return c;
        claims.push_back(Claim{id, anchor, 0, 0, {}, json::object()});
        return claims.back();
    }
};

constexpr std::size_t kMaxStoredFailures = 5;

inline Witness make_witness(const AlgebraContext& c, const ExactMatrix& x, std::size_t trial, std::uint64_t seed, std::string note) {
    return {trial, seed, std::move(note), matrix_json(c, x)};
}

inline void record(Claim& cl, bool ok, const std::function<Witness()>& witness) {
    ++cl.trials;
    if (ok) {
        ++cl.passes;
    } else if (cl.failures.size() < kMaxStoredFailures) {
        cl.failures.push_back(witness());
    }
}

inline json config_json(const SuiteConfig& cfg) {
    json j{{"suite", cfg.suite}, {"seed", cfg.seed}, {"bounds", {{"num", cfg.bounds.num}, {"den", cfg.bounds.den}}}};
    j["trials"] = cfg.trials ? json(*cfg.trials) : json(nullptr);
    j["n_min"] = cfg.n_min ? json(*cfg.n_min) : json(nullptr);
    j["n_max"] = cfg.n_max ? json(*cfg.n_max) : json(nullptr);
    j["kind"] = cfg.kind ? json(kind_name(*cfg.kind)) : json(nullptr);
    return j;
}

inline json report_json(const Report& r, bool with_timing = true) {
    json claims = json::array();
    for (const auto& c : r.claims) {
        json f = json::array();
        for (const auto& w : c.failures) f.push_back({{"trial", w.trial}, {"seed", w.seed}, {"note", w.note}, {"element", w.element}});
        json cj{{"id", c.id}, {"anchor", c.anchor}, {"trials", c.trials}, {"passes", c.passes}, {"passed", c.passed()}, {"failures", f}};
        if (!c.metrics.empty()) cj["metrics"] = c.metrics;
        claims.push_back(cj);
    }
    json j{{"suite", r.suite}, {"config", r.config}, {"passed", r.passed()}, {"claims", claims}};
    if (!r.metrics.empty()) j["metrics"] = r.metrics;
    if (with_timing) j["wall_time_s"] = r.wall_time_s;
    return j;
}

inline std::string report_text(const Report& r) {
    std::ostringstream out;
    out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.claims) {
        out << "  [" << (c.passed() ? "pass" : "FAIL") << "] " << c.id << " " << c.passes << "/" << c.trials << "  (" << c.anchor << ")";
        if (!c.metrics.empty()) out << " " << c.metrics.dump();
        out << "\n";
        for (const auto& w : c.failures) out << "      witness trial=" << w.trial << " seed=" << w.seed << " " << w.note << "\n";
    }
    return out.str();
}

// ---- samplers for mixed generator families -------------------------------------------------

enum class Generator { Generic, Borel, Parabolic, Xi, Nilfibre };

inline const char* generator_name(Generator g) {
    switch (g) {
        case Generator::Generic: return "generic";
        case Generator::Borel: return "borel";
        case Generator::Parabolic: return "parabolic";
        case Generator::Xi: return "xi";
        case Generator::Nilfibre: return "nilfibre";
    }
    return "?";
}

// Per-algebra data reused across samples.
struct SamplerCache {
    Ctx ctx;
    std::optional<OrbitGraph> orbits;
    std::vector<ParabolicData> parabolics;

    explicit SamplerCache(Ctx c) : ctx(std::move(c)) {
        const AlgebraContext& a = *ctx;
        if (!a.is_so()) return;
        orbits = enumerate_orbits(a);
        for (std::size_t i = a.type_b() ? 0 : 1; i < a.l; ++i) parabolics.push_back(stable_parabolic(a, i));
    }
};

inline ExactMatrix random_element(const AlgebraContext& c, Rng& rng, const SampleBounds& b) {
    Vec v(c.dim());
    for (auto& s : v) s = rng.rational(b);
    return from_coords(c, v);
}

namespace detail {

// gl: entries (i, j) allowed when block(i) <= block(j)
inline ExactMatrix gl_block_upper(const AlgebraContext& c, Rng& rng, const SampleBounds& b, const std::vector<std::size_t>& block,
                                  bool strict) {
    ExactMatrix x(c.n, c.n);
    for (std::size_t i = 0; i < c.n; ++i)
        for (std::size_t j = 0; j < c.n; ++j)
            if (strict ? i < j : block[i] <= block[j]) x(i, j) = rng.rational(b);
    return x;
}

}  // namespace detail

inline ExactMatrix sample_generator(const SamplerCache& cache, Generator g, Rng& rng, const SuiteConfig& cfg) {
    const AlgebraContext& c = *cache.ctx;
    const SampleBounds& b = cfg.bounds;
    ExactMatrix y;
    if (c.is_so()) {
        switch (g) {
            case Generator::Generic: return random_element(c, rng, b);
            case Generator::Borel: {
                const auto& os = cache.orbits->orbits;
                y = random_combination(os[rng.uniform(0, static_cast<long>(os.size()) - 1)].rep_borel, rng, b);
                break;
            }
            case Generator::Parabolic: {
                const auto& P = cache.parabolics[rng.uniform(0, static_cast<long>(cache.parabolics.size()) - 1)];
                y = random_combination(P.r_basis, rng, b);
                break;
            }
            case Generator::Xi: {
                std::size_t slots = c.type_b() ? c.l : c.l - 1;
                std::size_t i = rng.uniform(0, static_cast<long>(slots));
                std::vector<Slot> pat;
                for (std::size_t j = 0; j < i; ++j) pat.push_back(rng.coin() ? Slot::U : Slot::L);
                y = sample_xi(c, i, pat, rng.next(), b).x;
                break;
            }
            case Generator::Nilfibre: {
                auto closed = closed_orbits(c);
                y = random_combination(nilradical(c, closed[rng.uniform(0, static_cast<long>(closed.size()) - 1)]), rng, b);
                break;
            }
        }
    } else {
        std::vector<std::size_t> block(c.n);
        switch (g) {
            case Generator::Generic: return rng.matrix(c.n, c.n, b);
            case Generator::Borel:
                for (std::size_t i = 0; i < c.n; ++i) block[i] = i;
                y = detail::gl_block_upper(c, rng, b, block, false);
                break;
            case Generator::Parabolic: {
                std::size_t cut = rng.uniform(1, static_cast<long>(c.n) - 1);
                for (std::size_t i = 0; i < c.n; ++i) block[i] = i < cut ? 0 : 1;
                y = detail::gl_block_upper(c, rng, b, block, false);
                break;
            }
            case Generator::Xi:  // Hessenberg: unit subdiagonal, free on and above the diagonal
                for (std::size_t i = 0; i < c.n; ++i) block[i] = i;
                y = detail::gl_block_upper(c, rng, b, block, false);
                for (std::size_t i = 1; i < c.n; ++i) y(i, i - 1) = Scalar(1);
                break;
            case Generator::Nilfibre: y = detail::gl_block_upper(c, rng, b, block, true); break;
        }
    }
    return adjoint(c, sample_K(c, rng.next(), cfg.group_bounds), y);
}

// ---- suites ------------------------------------------------------------------------------------

struct AlgebraRange {
    Kind kind;
    std::size_t lo, hi;
};

inline std::vector<Ctx> algebras_for(const SuiteConfig& cfg, const std::vector<AlgebraRange>& defaults) {
    std::vector<Ctx> out;
    for (const auto& r : defaults) {
        if (cfg.kind && *cfg.kind != r.kind) continue;
        std::size_t floor = r.kind == Kind::SO ? 3 : 2;
        std::size_t lo = cfg.n_min ? std::max(*cfg.n_min, floor) : r.lo;
        std::size_t hi = cfg.n_max ? *cfg.n_max : r.hi;
        if (cfg.n_min && !cfg.n_max) hi = std::max(hi, lo);
        if (cfg.n_max && !cfg.n_min) lo = std::min(lo, hi);
        for (std::size_t n = lo; n <= hi; ++n) out.push_back(make_algebra(r.kind, n));
    }
    return out;
}

inline std::uint64_t trial_seed(const SuiteConfig& cfg, const AlgebraContext& c, std::uint64_t stream, std::uint64_t trial) {
    std::uint64_t tag = (c.is_so() ? 1000u : 2000u) + c.n;
    return derive_seed(derive_seed(derive_seed(cfg.seed, tag), stream), trial);
}

inline std::size_t trials_or(const SuiteConfig& cfg, std::size_t d) { return cfg.trials ? *cfg.trials : d; }

namespace suites {

inline void orbit_tables(const SuiteConfig& cfg, Report& rep) {
    for (const auto& cp : algebras_for(cfg, {{Kind::SO, 3, 12}})) {
        const AlgebraContext& c = *cp;
        if (!c.is_so()) continue;
        OrbitGraph g = enumerate_orbits(c);
        const std::size_t l = c.l;
        auto w = [&](const std::string& note) { return [&, note] { return make_witness(c, ExactMatrix(c.n, c.n), 0, 0, c.name() + ": " + note); }; };

        std::size_t want = c.type_b() ? l + 2 : l;
        record(rep.claim("orbit-count", "so(2l+1)/so(2l) has l+2 K-orbits on the flag variety; so(2l)/so(2l-1) has l"),
               g.orbits.size() == want, w("found " + std::to_string(g.orbits.size()) + " orbits"));

        std::multiset<std::size_t> cod, expect;
        for (const auto& o : g.orbits) cod.insert(o.codim);
        for (std::size_t k = 0; k < l; ++k) expect.insert(k);
        if (c.type_b()) expect.insert({l, l});
        record(rep.claim("codimensions", "orbit codimensions are {l,l,l-1,...,0} (B) and {l-1,...,0} (D)"), cod == expect, w("codimension multiset differs"));

        std::size_t closed = 0;
        for (const auto& o : g.orbits) closed += o.closed;
        std::size_t wcount = closed_orbit_count(c);
        record(rep.claim("closed-orbits", "closed K-orbits correspond to W_K-cosets in W^theta: 2 (B), 1 (D)"),
               closed == wcount && wcount == (c.type_b() ? 2u : 1u), w("closed " + std::to_string(closed) + ", W-count " + std::to_string(wcount)));

        // dim B_k from the rank of k: (dim k - rank k) / 2
        std::size_t bk = (c.k_basis.size() - c.k_rank()) / 2;
        bool cd = true;
        for (const auto& o : g.orbits)
            if (o.closed) cd = cd && o.codim == c.positive_root_count() - bk;
        record(rep.claim("closed-orbit-dimension", "closed orbits have the dimension of the flag variety of k"), cd, w("closed orbit codimension"));

        // representatives and monoidal-action graph
        bool reps = true;
        std::set<std::tuple<std::string, std::string, int>> edges, want_edges;
        for (const auto& e : g.edges) edges.insert({g.orbits[e.from].id, g.orbits[e.to].id, e.simple});
        auto simple_rep = [&](std::size_t s) { return weyl_representative(c, c.roots[c.simple[s - 1]].coords); };
        auto same_borel = [&](const OrbitDescriptor& o, const ExactMatrix& v) {
            ExactMatrix vi = orthogonal_inverse(c, v);
            std::vector<ExactMatrix> b;
            for (std::size_t i = 0; i < c.cartan_dim; ++i) b.push_back(v * c.basis[i] * vi);
            for (std::size_t k = 0; k < c.roots.size(); ++k)
                if (c.roots[k].positive) b.push_back(v * c.root_vector(k) * vi);
            return span_equal(coords_of(c, o.rep_borel), coords_of(c, b), c.dim());
        };
        try {
            if (c.type_b()) {
                ExactMatrix v = cayley_element(c, c.roots[c.simple[l - 1]].coords);
                for (std::size_t i = l; i-- > 0;) {
                    if (i < l - 1) v = v * simple_rep(i + 1);
                    reps = reps && same_borel(g.by_id("Q" + std::to_string(i)), v);
                }
                std::string top = "Q" + std::to_string(l - 1);
                want_edges.insert({"Q+", top, static_cast<int>(l)});
                want_edges.insert({"Q-", top, static_cast<int>(l)});
                for (std::size_t i = l - 1; i >= 1; --i) want_edges.insert({"Q" + std::to_string(i), "Q" + std::to_string(i - 1), static_cast<int>(i)});
            } else {
                ExactMatrix v = ExactMatrix::identity(c.n);
                for (std::size_t i = l - 1; i >= 1; --i) {
                    v = v * simple_rep(i);
                    reps = reps && same_borel(g.by_id("Q" + std::to_string(i)), v);
                }
                std::string top = "Q" + std::to_string(l - 1);
                want_edges.insert({"Q+", top, static_cast<int>(l - 1)});
                want_edges.insert({"Q+", top, static_cast<int>(l)});
                for (std::size_t i = l - 1; i >= 2; --i) want_edges.insert({"Q" + std::to_string(i), "Q" + std::to_string(i - 1), static_cast<int>(i - 1)});
            }
        } catch (const UsageError&) {
            reps = false;
        }
        record(rep.claim("representatives", "b_i = Ad(u_{alpha_l}) s_{alpha_{l-1}}...s_{alpha_{i+1}} b_+ (B) and s_{alpha_{l-1}}...s_{alpha_i} b_+ (D)"), reps,
               w("representative Borel differs from the product formula"));
        record(rep.claim("monoidal-graph", "the monoidal action graph is a path, with a two-closed-orbit fork in type B"), edges == want_edges,
               w("edge set differs"));

        bool yq = true;
        for (const auto& o : g.orbits) {
            std::size_t orbit = c.k_basis.size() - detail::k_intersection_dim(c, o.rep_borel);
            yq = yq && o.rep_borel.size() + orbit == c.dim() - o.codim;
        }
        record(rep.claim("yq-dimension", "dim Y_Q = dim b + dim K.b = dim g - codim Q"), yq, w("dimension identity"));

        if (c.type_d()) {
            ExactMatrix a = simple_rep(l - 1), b = simple_rep(l), R = c.theta.matrix();
            record(rep.claim("theta-equivariant-representatives", "theta maps the representative of s_{alpha_{l-1}} to that of s_{alpha_l}, and they commute"),
                   R * a * R.transpose() == b && a * b == b * a, w("representatives not theta-equivariant"));
        }

        bool types = true;
        const auto& qp = g.by_id("Q+");
        for (std::size_t k = 0; k < c.roots.size(); ++k) {
            const Root& r = c.roots[k];
            if (!r.positive) continue;
            std::size_t nz = 0;
            for (int x : r.coords) nz += x != 0;
            RootType t = classify_root_type(c, qp.theta_Q, r.coords);
            RootType e;
            if (c.type_b()) e = nz == 1 ? RootType::NoncompactImaginary : RootType::CompactImaginary;
            else e = r.coords[l - 1] != 0 ? RootType::ComplexStable : RootType::CompactImaginary;
            types = types && t == e;
        }
        record(rep.claim("root-types", "standard theta: eps_k noncompact, eps_i+-eps_j compact (B); eps_i+-eps_l complex stable (D)"), types,
               w("root type table"));

        std::size_t lo = c.type_b() ? 0 : 1;
        for (std::size_t i = lo; i < l; ++i) {
            auto P = stable_parabolic(c, i);
            std::size_t m = c.type_b() ? 2 * (l - i) + 1 : 2 * (l - i) + 2;
            std::size_t codim = c.type_b() ? i : i - 1;
            bool zk = true;
            for (const auto& z : P.z_basis) zk = zk && theta_apply(c, z) == z;
            bool ok = theta_stable(c, P.r_basis) && zk && P.lss_size == m && P.z_basis.size() == (c.type_b() ? i : i - 1) &&
                      P.r_basis.size() == P.z_basis.size() + P.lss_basis.size() + P.u_basis.size() &&
                      span_contains(coords_of(c, P.r_basis), coords_of(c, g.by_id("Q" + std::to_string(i)).rep_borel), c.dim()) &&
                      P.r_basis.size() + c.k_basis.size() - detail::k_intersection_dim(c, P.r_basis) == c.dim() - codim;
            record(rep.claim("stable-parabolics", "theta-stable parabolic r contains b_i, z in k, l_ss = so(2(l-i)+1) resp. so(2(l-i)+2)"), ok,
                   w("parabolic i=" + std::to_string(i)));
        }
    }
}

inline std::vector<AlgebraRange> kostant_ranges() { return {{Kind::GL, 3, 5}, {Kind::SO, 4, 7}}; }

inline void kostant_equivalence(const SuiteConfig& cfg, Report& rep) {
    std::size_t trials = trials_or(cfg, 200);
    auto& eq = rep.claim("kostant-criterion", "x is n-strongly regular iff the differentials of the partial Kostant-Wallach generators are independent at x");
    auto& sub = rep.claim("regular-subsumption", "n-strongly regular x has x and x_k regular");
    auto& fib = rep.claim("fibre-dimension", "at n-strongly regular x the partial map has fibre dimension dim g - r_n - r_{n-1} = dim K");
    for (const auto& cp : algebras_for(cfg, kostant_ranges())) {
        const AlgebraContext& c = *cp;
        SamplerCache cache(cp);
        std::map<std::string, std::pair<std::size_t, std::size_t>> mix;
        for (std::size_t t = 0; t < trials; ++t) {
            std::uint64_t seed = trial_seed(cfg, c, 1, t);
            Rng rng(seed);
            Generator gen = static_cast<Generator>(t % 5);
            ExactMatrix x = sample_generator(cache, gen, rng, cfg);
            bool ns = is_nsreg(c, x);
            std::size_t r = kostant_jacobian_rank(c, x);
            auto wit = [&](std::string what) { return [&, what] { return make_witness(c, x, t, seed, c.name() + " " + generator_name(gen) + ": " + what); }; };
            record(eq, ns == (r == partial_length(c)), wit("nsreg=" + std::to_string(ns) + " jacobian_rank=" + std::to_string(r)));
            if (ns) {
                record(sub, is_regular(c, x, c.n) && is_regular(c, x, c.n - 1), wit("not regular"));
                record(fib, c.dim() - r == c.k_basis.size(), wit("fibre dimension"));
            }
            auto& m = mix[generator_name(gen)];
            ++m.first;
            m.second += ns;
        }
        json mj = json::object();
        for (const auto& [k, v] : mix) mj[k] = std::to_string(v.second) + "/" + std::to_string(v.first) + " nsreg";
        eq.metrics[c.name()] = mj;
    }
}

inline void gzero_nsreg(const SuiteConfig& cfg, Report& rep) {
    std::size_t trials = trials_or(cfg, 100);
    auto& ns = rep.claim("gzero-nsreg", "every x in g(0) is n-strongly regular");
    auto& od = rep.claim("orbit-dimension", "x in g(0) has trivial stabilizer z_k(x_k) ∩ z_k(x), so dim K.x = dim K");
    auto& rg = rep.claim("regular-pair", "x in g(0) has x and x_k regular");
    for (const auto& cp : algebras_for(cfg, kostant_ranges())) {
        const AlgebraContext& c = *cp;
        SamplerCache cache(cp);
        std::size_t got = 0, attempts = 0;
        while (got < trials && attempts < 20 * trials + 20) {
            std::uint64_t seed = trial_seed(cfg, c, 2, attempts);
            Rng rng(seed);
            Generator gen = static_cast<Generator>(attempts % 4);
            ++attempts;
            ExactMatrix x = sample_generator(cache, gen, rng, cfg);
            if (coincidence_count(c, x) != 0) continue;
            std::size_t t = got++;
            auto wit = [&](std::string what) { return [&, what] { return make_witness(c, x, t, seed, c.name() + ": " + what); }; };
            record(ns, is_nsreg(c, x), wit("not nsreg"));
            // z_k(x_k) ∩ z_k(x) = z_k(x) for a symmetric pair; computed here as a single centralizer in k
            record(od, k_stabilizer(c, x).empty(), wit("nonzero stabilizer"));
            record(rg, is_regular(c, x, c.n) && is_regular(c, x, c.n - 1), wit("not regular"));
        }
        ns.metrics[c.name()] = std::to_string(got) + " g(0) samples from " + std::to_string(attempts) + " draws";
        if (got < trials) record(ns, false, [&] { return make_witness(c, ExactMatrix(c.n, c.n), got, 0, c.name() + ": too few g(0) samples"); });
    }
}

inline void yq_strata(const SuiteConfig& cfg, Report& rep) {
    std::size_t trials = trials_or(cfg, 50);
    auto& lb = rep.claim("stratum-bound", "Y_Q lies in g(>= codim Q)");
    auto& mem = rep.claim("membership", "Y_Q samples lie in g");
    auto& gen = rep.claim("exact-coincidence-generic", "generic points of Y_Q lie in g(codim Q): observed fraction > 1/2");
    for (const auto& cp : algebras_for(cfg, {{Kind::SO, 5, 7}})) {
        const AlgebraContext& c = *cp;
        if (!c.is_so()) continue;
        for (const auto& o : enumerate_orbits(c).orbits) {
            std::size_t exact = 0;
            for (std::size_t t = 0; t < trials; ++t) {
                std::uint64_t seed = trial_seed(cfg, c, 3 + 100 * (o.codim + 1) + (o.id == "Q-"), t);
                ExactMatrix y = sample_YQ(c, o, seed, cfg.bounds);
                std::size_t k = coincidence_count(c, y);
                exact += k == o.codim;
                auto wit = [&](std::string what) { return [&, what] { return make_witness(c, y, t, seed, c.name() + " " + o.id + ": " + what); }; };
                record(lb, k >= o.codim, wit("coincidence " + std::to_string(k)));
                record(mem, membership_check(c, y), wit("not in g"));
            }
            double frac = trials ? static_cast<double>(exact) / static_cast<double>(trials) : 1.0;
            gen.metrics[c.name() + " " + o.id] = std::to_string(exact) + "/" + std::to_string(trials);
            if (trials) record(gen, 2 * exact > trials, [&] { return make_witness(c, ExactMatrix(c.n, c.n), 0, 0, c.name() + " " + o.id + ": fraction " + std::to_string(frac)); });
        }
    }
}

inline void xi_families(const SuiteConfig& cfg, Report& rep) {
    std::size_t trials = trials_or(cfg, 10);
    auto& inr = rep.claim("all-U-in-parabolic", "Xi_{U,...,U} lies in the theta-stable parabolic of its stratum");
    auto& flip = rep.claim("L-to-U", "Ad of the Weyl representative in W_K turns an L slot into a U slot, flipping the signs of the matching a-coordinates");
    auto& lb = rep.claim("stratum-bound", "Xi_{j_1..j_i} lies in g(>= i)");
    auto& ex = rep.claim("stratum-exact", "generic Xi_{j_1..j_i} lies in g(i): observed fraction > 1/2");
    for (const auto& cp : algebras_for(cfg, {{Kind::SO, 5, 6}})) {
        const AlgebraContext& c = *cp;
        if (!c.is_so() || c.n < 5) continue;
        std::size_t slots = c.type_b() ? c.l : c.l - 1;
        for (std::size_t i = 0; i <= slots; ++i) {
            auto P = coincidence_parabolic(c, i);
            for (std::size_t mask = 0; mask < (1u << i); ++mask) {
                std::vector<Slot> pat;
                std::string pname;
                for (std::size_t j = 0; j < i; ++j) {
                    pat.push_back(mask >> j & 1u ? Slot::L : Slot::U);
                    pname += mask >> j & 1u ? "L" : "U";
                }
                std::size_t exact = 0;
                for (std::size_t t = 0; t < trials; ++t) {
                    std::uint64_t seed = trial_seed(cfg, c, 4 + 1000 * i + mask, t);
                    auto s = sample_xi(c, i, pat, seed, cfg.bounds);
                    auto wit = [&](std::string what) {
                        return [&, what] { return make_witness(c, s.x, t, seed, c.name() + " Xi_" + (pname.empty() ? "-" : pname) + ": " + what); };
                    };
                    std::size_t k = coincidence_count(c, s.x);
                    exact += k == i;
                    record(lb, k >= i, wit("coincidence " + std::to_string(k)));
                    if (mask == 0) record(inr, P.contains_coords(c, coords(c, s.x)), wit("not in r"));
                    for (std::size_t j = 0; j < i; ++j) {
                        if (pat[j] != Slot::L) continue;
                        ExactMatrix w = xi_flip_element(c, j);
                        auto f = xi_decompose(c, adjoint(c, w, s.x));
                        bool ok = theta_apply(c, w) == w && in_group(c, w) && f.has_value();
                        if (ok) {
                            for (std::size_t q = 0; q < slots; ++q) {
                                bool zu = f->u[q].is_zero(), zv = f->v[q].is_zero();
                                if (q == j) ok = ok && zv && !zu;
                                else ok = ok && zu == s.u[q].is_zero() && zv == s.v[q].is_zero();
                            }
                            Vec a = s.a;
                            a[j] = -a[j];
                            if (c.type_d()) a[c.l - 1] = -a[c.l - 1];
                            ok = ok && f->a == a;
                        }
                        record(flip, ok, wit("slot " + std::to_string(j + 1) + " did not flip to U"));
                    }
                }
                if (trials) {
                    ex.metrics[c.name() + " Xi_" + (pname.empty() ? "-" : pname)] = std::to_string(exact) + "/" + std::to_string(trials);
                    record(ex, 2 * exact > trials, [&] { return make_witness(c, ExactMatrix(c.n, c.n), 0, 0, c.name() + " Xi_" + pname + ": fraction"); });
                }
            }
        }
    }
}

inline void nilfibre(const SuiteConfig& cfg, Report& rep) {
    std::size_t trials = trials_or(cfg, 50);
    auto& zero = rep.claim("partial-kw-zero", "Ad(K)n_+ (and Ad(K)n_- in type B) lies in the nilfibre of the partial map");
    auto& top = rep.claim("top-stratum", "the nilfibre lies in g(r_{n-1})");
    auto& nns = rep.claim("not-nsreg", "for n > 3 the nilfibre contains no n-strongly regular elements");
    auto& nsr = rep.claim("not-sreg", "for n > 3 the nilfibre contains no strongly regular elements");
    for (const auto& cp : algebras_for(cfg, {{Kind::SO, 5, 8}})) {
        const AlgebraContext& c = *cp;
        if (!c.is_so()) continue;
        for (const auto& q : closed_orbits(c)) {
            for (std::size_t t = 0; t < trials; ++t) {
                std::uint64_t seed = trial_seed(cfg, c, 5 + (q.id == "Q-"), t);
                ExactMatrix y = sample_nilfibre(c, q, seed, cfg.bounds);
                auto wit = [&](std::string what) { return [&, what] { return make_witness(c, y, t, seed, c.name() + " " + q.id + ": " + what); }; };
                bool z = true;
                for (const auto& v : partial_kw(c, y).values) z = z && v.is_zero();
                record(zero, z, wit("nonzero invariants"));
                record(top, coincidence_count(c, y) == c.k_rank(), wit("coincidence below r_{n-1}"));
                if (c.n > 3) {
                    record(nns, !is_nsreg(c, y), wit("n-strongly regular"));
                    record(nsr, !is_sreg(c, y), wit("strongly regular"));
                }
            }
        }
    }
}

inline void overlaps(const SuiteConfig& cfg, Report& rep) {
    auto& nz = rep.claim("joint-centralizer-nonzero", "z_k(n ∩ k) ∩ z_g(n) ≠ 0 for the nilradical of a closed orbit, n > 3");
    auto& hr = rep.claim("highest-root-line", "z_k(n ∩ k) ∩ z_g(n) contains g_phi, resp. (g_phi + g_theta(phi))^theta for so(4)");
    for (const auto& cp : algebras_for(cfg, {{Kind::SO, 4, 8}})) {
        const AlgebraContext& c = *cp;
        if (!c.is_so() || c.n <= 3) continue;
        for (const auto& q : closed_orbits(c)) {
            auto nil = nilradical(c, q);
            std::vector<ExactMatrix> nk;
            for (const auto& v : intersection_basis(coords_of(c, nil), coords_of(c, c.k_basis), c.dim())) nk.push_back(from_coords(c, v));
            auto zk = joint_centralizer(c, nk, ambient_k(c));
            auto zg = joint_centralizer(c, nil, ambient_g(c));
            auto both = intersection_basis(coords_of(c, zk.vectors), coords_of(c, zg.vectors), c.dim());
            auto w = [&](std::string what) { return [&, what] { return make_witness(c, ExactMatrix(c.n, c.n), 0, 0, c.name() + " " + q.id + ": " + what); }; };
            record(nz, !both.empty(), w("empty intersection"));
            std::vector<int> phi(c.l, 0);
            phi[0] = phi[1] = 1;
            ExactMatrix e = q.conj * c.root_vector(c.root_index(phi)) * q.conj_inv;
            if (c.n == 4) e = e + theta_apply(c, e);
            record(hr, span_contains(both, {coords(c, e)}, c.dim()), w("highest root vector missing"));
            nz.metrics[c.name() + " " + q.id] = both.size();
        }
    }
}

struct LowdimWitness {
    bool found = false;
    ExactMatrix x;
    std::uint64_t seed = 0;
    std::size_t trial = 0;
};

// Bounded search for a strongly regular element of the so(3) nilfibre.
inline LowdimWitness so3_sreg_search(std::uint64_t seed, std::size_t budget, const SampleBounds& bounds = {3, 2}) {
    auto cp = make_algebra(Kind::SO, 3);
    const AlgebraContext& c = *cp;
    auto closed = closed_orbits(c);
    for (std::size_t t = 0; t < budget; ++t) {
        std::uint64_t s = derive_seed(seed, t);
        const auto& q = closed[t % closed.size()];
        ExactMatrix y = sample_nilfibre(c, q, s, bounds);
        if (!y.is_zero() && is_sreg(c, y)) return {true, y, s, t};
    }
    return {};
}

inline void lowdim(const SuiteConfig& cfg, Report& rep) {
    std::size_t budget = trials_or(cfg, 200);
    auto& found = rep.claim("so3-sreg-witness", "the nilfibre of so(3) contains strongly regular elements");
    auto& nil = rep.claim("witness-in-nilfibre", "the so(3) witness has vanishing partial Kostant-Wallach invariants");
    auto cp = make_algebra(Kind::SO, 3);
    auto w = so3_sreg_search(cfg.seed, budget);
    if (budget == 0) return;
    record(found, w.found, [&] { return make_witness(*cp, ExactMatrix(3, 3), budget, cfg.seed, "no witness within budget"); });
    if (!w.found) return;
    bool z = true;
    for (const auto& v : partial_kw(*cp, w.x).values) z = z && v.is_zero();
    record(nil, z, [&] { return make_witness(*cp, w.x, w.trial, w.seed, "nonzero invariants"); });
    found.metrics["witness"] = matrix_json(*cp, w.x);
    found.metrics["trial"] = w.trial;
    found.metrics["seed"] = w.seed;
}

inline bool in_theta_set(const AlgebraContext& c, const ExactMatrix& x) {
    for (std::size_t m = c.first_level(); m < c.n; ++m)
        if (chain_coincidence(c, x, m) != 0) return false;
    return true;
}

inline void sreg_chain(const SuiteConfig& cfg, Report& rep) {
    std::size_t trials = trials_or(cfg, 100);
    auto& th = rep.claim("theta-set-sreg", "elements of so(n)_Theta and gl(n)_Theta are strongly regular");
    auto& jac = rep.claim("full-jacobian", "strong regularity is equivalent to independence of the differentials of the full Kostant-Wallach map");
    auto& imp = rep.claim("chain-implication", "if z_{g_i}(x_i) ∩ z_{g_{i+1}}(x_{i+1}) = 0 for all i then every x_i is regular");
    for (const auto& cp : algebras_for(cfg, {{Kind::GL, 2, 6}, {Kind::SO, 3, 6}})) {
        const AlgebraContext& c = *cp;
        SamplerCache cache(cp);
        std::size_t got = 0, attempts = 0;
        while (got < trials && attempts < 20 * trials + 20) {
            std::uint64_t seed = trial_seed(cfg, c, 6, attempts);
            Rng rng(seed);
            Generator gen = static_cast<Generator>(attempts % 4);
            ++attempts;
            ExactMatrix x = sample_generator(cache, gen, rng, cfg);
            if (!in_theta_set(c, x)) continue;
            std::size_t t = got++;
            bool s = is_sreg(c, x);
            record(th, s, [&] { return make_witness(c, x, t, seed, c.name() + ": not strongly regular"); });
            record(jac, s == (full_jacobian_rank(c, x) == full_length(c)), [&] { return make_witness(c, x, t, seed, c.name() + ": Jacobian mismatch"); });
        }
        th.metrics[c.name()] = std::to_string(got) + " accepted of " + std::to_string(attempts);
        if (got < trials) record(th, false, [&] { return make_witness(c, ExactMatrix(c.n, c.n), got, 0, c.name() + ": too few accepted samples"); });
        // general samples, including nilpotent and structured ones
        for (std::size_t t = 0; t < trials; ++t) {
            std::uint64_t seed = trial_seed(cfg, c, 7, t);
            Rng rng(seed);
            Generator gen = static_cast<Generator>(t % 5);
            ExactMatrix x = sample_generator(cache, gen, rng, cfg);
            bool s = is_sreg(c, x);
            record(imp, !s || chain_regular(c, x), [&] { return make_witness(c, x, t, seed, c.name() + ": chain condition without regularity"); });
            record(jac, s == (full_jacobian_rank(c, x) == full_length(c)), [&] { return make_witness(c, x, t, seed, c.name() + ": Jacobian mismatch"); });
        }
    }
}

inline void dimension_identities(const SuiteConfig& cfg, Report& rep) {
    auto& fl = rep.claim("flag-dimension", "dim B_g + dim B_k = dim g - r_n - r_{n-1}");
    auto& qd = rep.claim("quotient-dimension", "dim g - r_n - r_{n-1} = dim K");
    for (const auto& cp : algebras_for(cfg, {{Kind::GL, 2, 12}, {Kind::SO, 3, 12}})) {
        const AlgebraContext& c = *cp;
        // rank of k as the centralizer dimension of a generic element of k
        Rng rng(trial_seed(cfg, c, 8, 0));
        ExactMatrix y(c.n, c.n);
        for (const auto& b : c.k_basis) y += b * rng.rational(cfg.bounds);
        std::size_t rk = centralizer(c, y, ambient_k(c)).dim();
        std::size_t bk = (c.k_basis.size() - rk) / 2;
        std::size_t rhs = c.dim() - c.rank_at(c.n) - c.rank_at(c.n - 1);
        auto w = [&](std::string what) { return [&, what] { return make_witness(c, y, 0, 0, c.name() + ": " + what); }; };
        record(fl, c.positive_root_count() + bk == rhs && rk == c.k_rank(), w("flag dimension"));
        record(qd, rhs == c.k_basis.size(), w("quotient dimension"));
    }
}

}  // namespace suites

inline const std::vector<std::pair<std::string, void (*)(const SuiteConfig&, Report&)>>& suite_table() {
    static const std::vector<std::pair<std::string, void (*)(const SuiteConfig&, Report&)>> t = {
        {"orbit-tables", suites::orbit_tables},
        {"kostant-equivalence", suites::kostant_equivalence},
        {"gzero-nsreg", suites::gzero_nsreg},
        {"yq-strata", suites::yq_strata},
        {"xi-families", suites::xi_families},
        {"nilfibre", suites::nilfibre},
        {"overlaps", suites::overlaps},
        {"lowdim", suites::lowdim},
        {"sreg-chain", suites::sreg_chain},
        {"dimension-identities", suites::dimension_identities},
    };
    return t;
}

inline Report run_suite(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = cfg.suite;
    rep.config = config_json(cfg);
    bool known = false;
    for (const auto& [name, fn] : suite_table()) {
        if (cfg.suite != "all" && cfg.suite != name) continue;
        known = true;
        if (cfg.suite == "all") {
            auto t0 = std::chrono::steady_clock::now();
            Report sub;
            fn(cfg, sub);
            for (auto& c : sub.claims) {
                c.id = name + "/" + c.id;
                rep.claims.push_back(std::move(c));
            }
            rep.metrics[name + " seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        } else {
            fn(cfg, rep);
        }
    }
    if (!known) throw UsageError("unknown suite '" + cfg.suite + "'");
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace lieco
