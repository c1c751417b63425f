#include "indhom/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "indhom/chain_complex.hpp"
#include "indhom/echelon.hpp"
#include "indhom/error.hpp"
#include "indhom/graph_io.hpp"
#include "indhom/reports.hpp"
#include "indhom/spectral.hpp"
#include "indhom/theorem_lab.hpp"

namespace indhom {

namespace {

enum class Format { text, json, csv };

struct RunConfig {
    std::string source;
    int r = 1;
    Format format = Format::text;
    int jobs = 0;
    std::uint64_t seed = 42;
    bool seed_given = false;
    bool build_checks = true;
    // search
    std::string family;
    int max_n = 0;
    std::vector<std::string> random;
    bool random_given = false;
};

void add_common(CLI::App* sub, RunConfig& cfg, bool graph) {
    sub->add_option("--r", cfg.r, "independence parameter r >= 1")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}}));
    sub->add_option("--jobs", cfg.jobs, "worker threads (1 selects the serial kernels)")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "seed for randomized modes");
    sub->add_flag("--no-build-checks", "skip the assembly-time identity checks");
    if (graph) sub->add_option("graph", cfg.source, "graph file or family:<spec>")->required();
}

int family_default_max_n(const std::string& f) {
    if (f == "ladders") return 6;
    if (f == "disjoint-k1-cycles") return 8;
    return 12;
}

SearchSpec search_spec(const RunConfig& cfg) {
    SearchSpec s;
    s.r = cfg.r;
    s.seed = cfg.seed;
    s.family = cfg.random_given ? "random" : (cfg.family.empty() ? "paths" : cfg.family);
    if (cfg.random_given && !cfg.family.empty() && cfg.family != "random")
        throw InputError("--random and --family " + cfg.family + " are exclusive");
    s.max_n = cfg.max_n > 0 ? cfg.max_n : family_default_max_n(s.family);
    for (const std::string& kv : cfg.random) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("--random expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        try {
            std::size_t used = 0;
            if (key == "n") {
                s.n = std::stoi(val, &used);
            } else if (key == "p") {
                s.p = std::stod(val, &used);
            } else if (key == "seed") {
                s.seed = std::stoull(val, &used);
            } else if (key == "budget") {
                s.budget = std::stoi(val, &used);
            } else {
                throw InputError("--random: unknown key '" + key + "' (n, p, seed, budget)");
            }
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("--random: bad value for " + key + ": '" + val + "'");
        }
    }
    if (!(s.p >= 0 && s.p <= 1)) throw InputError("--random: p must lie in [0, 1]");
    return s;
}

template <class Report>
void emit(std::ostream& out, Format f, const Report& rep, std::string (*text)(const Report&),
          std::string (*csv)(const Report&)) {
    switch (f) {
        case Format::text: out << text(rep); break;
        case Format::json: out << nlohmann::json(rep).dump(2) << "\n"; break;
        case Format::csv: out << csv(rep); break;
    }
}

std::string lab_text(const LabReport& r) {
    std::ostringstream os;
    os << "column vanishing for " << r.graph << ": " << r.checks.size() << " checks, " << r.violations.size()
       << " violations\n";
    for (const auto& [p, n] : r.census) os << "n_" << p << " = " << n << "\n";
    for (const auto& c : r.violations) {
        os << "violation p = " << c.p << ", q = " << c.q << ", U = {";
        for (std::size_t i = 0; i < c.U.size(); ++i) os << (i ? "," : "") << c.U[i];
        os << "}: " << group_unicode(c.group) << " in reduced degree " << c.reduced_degree << "\n";
    }
    return os.str();
}

std::string lab_csv(const LabReport& r) {
    std::ostringstream os;
    os << "p,q,U,reduced_degree,rank,torsion,zero\n";
    for (const auto& c : r.checks) {
        os << c.p << "," << c.q << ",\"{";
        for (std::size_t i = 0; i < c.U.size(); ++i) os << (i ? "," : "") << c.U[i];
        os << "}\"," << c.reduced_degree << "," << c.group.rank << ",";
        for (std::size_t i = 0; i < c.group.torsion.size(); ++i) os << (i ? ";" : "") << c.group.torsion[i];
        os << "," << (c.zero ? 1 : 0) << "\n";
    }
    return os.str();
}

class ExecScope {
public:
    explicit ExecScope(int jobs) : exec_(default_exec()), threads_(omp_get_max_threads()) {
        if (jobs > 0) omp_set_num_threads(jobs);
        if (jobs == 1) set_default_exec(Exec::serial);
    }
    ~ExecScope() {
        set_default_exec(exec_);
        omp_set_num_threads(threads_);
    }

private:
    Exec exec_;
    int threads_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"integer homology of r-independence complexes and the marking spectral sequence", "indhom"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* homology_cmd = app.add_subcommand("homology", "reduced homology of Ind_r(G)");
    auto* pages_cmd = app.add_subcommand("pages", "spectral sequence pages up to collapse");
    auto* verify_cmd = app.add_subcommand("verify", "run every structural check; exit 1 on a failure");
    auto* lab_cmd = app.add_subcommand("lab", "column-vanishing predicate for one graph");
    auto* search_cmd = app.add_subcommand("search", "sweep a family for column-vanishing violations");
    for (auto* sub : {homology_cmd, pages_cmd, verify_cmd, lab_cmd}) add_common(sub, cfg, true);
    add_common(search_cmd, cfg, false);
    search_cmd->add_option("--family", cfg.family, "paths, cycles, disjoint-k1-cycles, ladders, cubic, random");
    search_cmd->add_option("--max-n", cfg.max_n, "largest family parameter")->check(CLI::PositiveNumber);
    search_cmd->add_option("--random", cfg.random, "random mode: n=<int> p=<real> seed=<int> budget=<int>")
        ->expected(0, 4);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.build_checks = sub->count("--no-build-checks") == 0;
    cfg.seed_given = sub->count("--seed") > 0;
    cfg.random_given = sub == search_cmd && search_cmd->count("--random") > 0;
    ExecScope scope(cfg.jobs);

    try {
        if (sub == search_cmd) {
            SearchSpec spec = search_spec(cfg);
            SearchReport rep = make_search_report(search_counterexamples(spec));
            emit(out, cfg.format, rep, render_search_text, render_search_csv);
            return rep.violations.empty() ? kExitOk : kExitFailure;
        }

        Graph g = load_graph(cfg.source);
        if (g.name().empty()) g.set_name(cfg.source);

        if (sub == homology_cmd) {
            HomologyReport rep = make_homology_report(g, cfg.r, homology_groups(independence_chain_complex(g, cfg.r)));
            emit(out, cfg.format, rep, render_homology_text, render_homology_csv);
            return kExitOk;
        }
        if (sub == pages_cmd) {
            CollapseOptions co;
            co.build_checks = cfg.build_checks;
            ConvergenceReport run = run_to_collapse(g, cfg.r, co);
            emit(out, cfg.format, make_pages_report(run), render_pages_text, render_pages_csv);
            return run.all_pass() ? kExitOk : kExitFailure;
        }
        if (sub == lab_cmd) {
            LabReport rep = make_lab_report(vanishing_report(g, cfg.r));
            emit(out, cfg.format, rep, lab_text, lab_csv);
            return rep.violations.empty() ? kExitOk : kExitFailure;
        }
        // verify
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<Verdict> verdicts = verification_suite(g, cfg.r, VerifyOptions{cfg.build_checks});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        VerifyReport rep = make_verify_report(g, cfg.r, verdicts, secs);
        emit(out, cfg.format, rep, render_verify_text, render_verify_csv);
        return rep.all_pass ? kExitOk : kExitFailure;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ContractViolation& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace indhom
