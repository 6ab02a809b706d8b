#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lieco/lieco.hpp"

using namespace lieco;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void print_matrix(std::ostream& out, const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).str();
        out << "]\n";
    }
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const std::string& input, bool as_json) {
    auto doc = parse_matrix_document(read_file(input));
    const AlgebraContext& c = *doc.ctx;
    Analysis a = analyze(c, doc.mat);
    if (as_json) {
        std::cout << analysis_json(c, a).dump(2) << "\n";
        return kPass;
    }
    std::cout << c.name() << "\n"
              << "coincidence     " << a.coincidence << "  (stratum g(" << a.coincidence << "); from invariant values: " << a.stratum_from_value << ")\n"
              << "regular         x: " << yes(a.regular) << "  x_k: " << yes(a.regular_k) << "\n"
              << "n-strongly reg  " << yes(a.nsreg) << "  (Jacobian rank " << a.jacobian_rank << "/" << a.jacobian_target << ")\n"
              << "strongly reg    " << yes(a.sreg) << "  (full Jacobian rank " << a.full_jacobian_rank << "/" << a.full_jacobian_target << ")\n"
              << "centralizers    z_g(x)=" << a.z_g << " z_k(x_k)=" << a.z_k_of_xk << " z_k(x_k)∩z_g(x)=" << a.nsreg_intersection
              << " z_k(x)=" << a.k_stabilizer << "\n"
              << "partial KW      " << scalar_list(a.partial.values).dump() << "\n"
              << "full KW         " << scalar_list(a.full.values).dump() << "\n";
    return kPass;
}

int cmd_orbits(const std::string& kind, std::size_t n, const std::string& format, bool as_json) {
    Ctx cp = make_algebra(parse_kind(kind, "--kind"), n);
    if (!cp->is_so()) throw UsageError("orbit enumeration is implemented for so(n) only");
    OrbitGraph g = enumerate_orbits(*cp);
    if (as_json || format == "structured") std::cout << orbit_graph_json(*cp, g).dump(2) << "\n";
    else std::cout << orbit_graph_text(*cp, g);
    return kPass;
}

std::vector<Slot> parse_pattern(const std::string& p) {
    std::vector<Slot> out;
    for (char ch : p) {
        if (ch == 'U' || ch == 'u') out.push_back(Slot::U);
        else if (ch == 'L' || ch == 'l') out.push_back(Slot::L);
        else throw UsageError("pattern letters must be U or L");
    }
    return out;
}

int cmd_sample(const std::string& what, const std::string& kind, std::size_t n, const std::string& orbit, const std::string& pattern,
               std::uint64_t seed, bool as_json) {
    Ctx cp = make_algebra(parse_kind(kind, "--kind"), n);
    const AlgebraContext& c = *cp;
    ExactMatrix x;
    json extra = json::object();
    if (what == "g0") {
        Rng rng(seed);
        std::size_t tries = 0;
        do {
            if (++tries > 1000) throw std::runtime_error("no g(0) element found");
            x = random_element(c, rng, SampleBounds{});
        } while (coincidence_count(c, x) != 0);
    } else {
        if (!c.is_so()) throw UsageError("--what " + what + " requires --kind so");
        if (what == "yq" || what == "nilfibre") {
            OrbitGraph g = enumerate_orbits(c);
            std::string id = orbit.empty() ? g.orbits.front().id : orbit;
            const OrbitDescriptor* q = nullptr;
            for (const auto& o : g.orbits)
                if (o.id == id) q = &o;
            if (!q) throw UsageError("unknown orbit '" + id + "'");
            x = what == "yq" ? sample_YQ(c, *q, seed) : sample_nilfibre(c, *q, seed);
            extra["orbit"] = id;
            extra["codim"] = q->codim;
        } else if (what == "xi") {
            auto pat = parse_pattern(pattern);
            auto s = sample_xi(c, pat.size(), pat, seed);
            x = s.x;
            extra["i"] = pat.size();
            extra["a"] = scalar_list(s.a);
        } else {
            throw UsageError("--what must be one of yq, xi, nilfibre, g0");
        }
    }
    json doc = matrix_json(c, x);
    if (as_json) {
        doc["seed"] = seed;
        doc["what"] = what;
        for (auto& [k, v] : extra.items()) doc[k] = v;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << what << " sample in " << c.name() << " (seed " << seed << ")";
        for (auto& [k, v] : extra.items()) std::cout << " " << k << "=" << v.dump();
        std::cout << "\n";
        print_matrix(std::cout, x);
    }
    return kPass;
}

int cmd_verify(const SuiteConfig& cfg, bool as_json) {
    Report r = run_suite(cfg);
    if (as_json) std::cout << report_json(r).dump(2) << "\n";
    else std::cout << report_text(r) << "wall time " << r.wall_time_s << " s\n";
    return r.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of partial Kostant-Wallach and K-orbit structure for gl(n) and so(n)"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string input;
    auto* an = app.add_subcommand("analyze", "analyze a matrix document");
    an->add_option("--input", input, "matrix document (JSON), '-' for stdin")->required();
    an->add_flag("--json", as_json);

    std::string kind = "so", format = "graph-text";
    std::size_t n = 5;
    auto* orb = app.add_subcommand("orbits", "K-orbits on the flag variety of so(n)");
    orb->add_option("--kind", kind)->check(CLI::IsMember({"so", "gl"}));
    orb->add_option("--n", n)->required();
    orb->add_option("--format", format)->check(CLI::IsMember({"graph-text", "structured"}));
    orb->add_flag("--json", as_json);

    std::string what, orbit, pattern;
    std::uint64_t seed = 1;
    auto* smp = app.add_subcommand("sample", "draw a seeded sample");
    smp->add_option("--what", what)->required()->check(CLI::IsMember({"yq", "xi", "nilfibre", "g0"}));
    smp->add_option("--kind", kind)->check(CLI::IsMember({"so", "gl"}));
    smp->add_option("--n", n);
    smp->add_option("--orbit", orbit, "orbit id as printed by 'orbits' (default: first orbit)");
    smp->add_option("--pattern", pattern, "Xi slot pattern, e.g. ULU");
    smp->add_option("--seed", seed);
    smp->add_flag("--json", as_json);

    SuiteConfig cfg;
    std::size_t trials = 0, n_min = 0, n_max = 0;
    std::string vkind;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", cfg.suite)->required();
    auto* o_trials = ver->add_option("--trials", trials);
    ver->add_option("--seed", cfg.seed);
    auto* o_min = ver->add_option("--n-min", n_min);
    auto* o_max = ver->add_option("--n-max", n_max);
    auto* o_kind = ver->add_option("--kind", vkind)->check(CLI::IsMember({"so", "gl"}));
    ver->add_option("--bound-num", cfg.bounds.num, "numerator bound of sampled rationals");
    ver->add_option("--bound-den", cfg.bounds.den, "denominator bound of sampled rationals");
    ver->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*an) return cmd_analyze(input, as_json);
        if (*orb) return cmd_orbits(kind, n, format, as_json);
        if (*smp) return cmd_sample(what, kind, n, orbit, pattern, seed, as_json);
        if (*ver) {
            if (*o_trials) cfg.trials = trials;
            if (*o_min) cfg.n_min = n_min;
            if (*o_max) cfg.n_max = n_max;
            if (*o_kind) cfg.kind = parse_kind(vkind, "--kind");
            return cmd_verify(cfg, as_json);
        }
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MembershipError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
