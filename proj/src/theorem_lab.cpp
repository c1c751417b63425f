#include "indhom/theorem_lab.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>

#include "indhom/chain_complex.hpp"
#include "indhom/error.hpp"
#include "indhom/families.hpp"

namespace indhom {

namespace {

constexpr int kMaxFamilyVertices = 16;
constexpr int kMaxRandomVertices = 10;

std::string at_str(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

template <class F>
Verdict guarded(std::string name, F&& body) {
    try {
        return body();
    } catch (const ContractViolation& e) {
        return Verdict{std::move(name), false, e.what()};
    }
}

// H_{k}(augmented Ind(G - N[U])) for every k, memoized by U.
class RemainderHomology {
public:
    explicit RemainderHomology(const Graph& g) : g_(g) {}
    const GradedHomology& of(const VertexSet& u) {
        auto it = cache_.find(u.mask());
        if (it != cache_.end()) return it->second;
        InducedSubgraph rest = delete_vertices(g_, closed_neighborhood(g_, u));
        return cache_.emplace(u.mask(), homology_groups(independence_chain_complex(rest.graph, 1))).first->second;
    }

private:
    const Graph& g_;
    std::map<VertexMask, GradedHomology> cache_;
};

std::vector<VanishingCheck> column_checks(const Graph& g, int p, RemainderHomology& cache) {
    std::vector<VanishingCheck> out;
    for (int q = 1; q <= p; ++q)
        for (const VertexSet& u : enumerate_r_independent_sets(g, 1, q)) {
            VanishingCheck c;
            c.p = p;
            c.q = q;
            c.U = u;
            c.reduced_degree = p - q - 1;
            c.group = cache.of(u).at(p - q);
            c.zero = c.group.is_zero();
            out.push_back(std::move(c));
        }
    return out;
}

}  // namespace

Verdict diagonal_census_check(const BigradedComplex& b) {
    return guarded("diagonal census", [&] {
        Verdict v{"diagonal census", true, ""};
        IndependenceCensus census = maximal_r_independent_census(b.graph(), b.r());
        std::ostringstream os;
        for (int p = 0; p <= b.top(); ++p) {
            const AbelianGroup e = homology_groups(column_complex(b, p)).at(p);
            const std::size_t np = census.count(p);
            if (np) os << (os.tellp() ? ", " : "") << "n_" << p << " = " << np;
            if (e.free_rank != np || !e.torsion.empty()) {
                v.pass = false;
                v.detail = "E1 at " + at_str(p, p) + " is " + e.to_string() + " but n_" + std::to_string(p) + " = " +
                           std::to_string(np);
                return v;
            }
        }
        v.detail = os.str();
        return v;
    });
}

Verdict diagonal_census_check(const Graph& g, int r) { return diagonal_census_check(BigradedComplex(g, r)); }

std::optional<DiagonalWitness> diagonal_witness(const BigradedComplex& b, const VertexSet& maximal_set) {
    const Graph& g = b.graph();
    const int n = g.vertex_count();
    const int p = static_cast<int>(maximal_set.size());
    if (p == 0) return std::nullopt;
    for (Vertex z : maximal_set) {
        const VertexMask rest = maximal_set.mask() & ~bit(z);
        const VertexMask blocked = closed_neighborhood(g, VertexSet::from_mask(rest)).mask() | bit(z);
        const VertexMask avail = g.all_vertices() & ~blocked;
        for (VertexMask xs = avail; xs; xs &= xs - 1) {
            const Vertex x = std::countr_zero(xs);
            const VertexMask ys = avail & ~g.neighbors(x) & ~((bit(x) << 1) - 1);
            if (!ys) continue;
            const Vertex y = std::countr_zero(ys);
            DiagonalWitness w;
            w.I = maximal_set;
            w.z = z;
            w.x = x;
            w.y = y;
            w.m0 = Marking(n, 0, maximal_set.mask());
            w.mz = Marking(n, bit(z), rest);
            w.mx = Marking(n, bit(x), rest);
            w.mxy = Marking(n, bit(y), rest | bit(x));

            const IntVector diff = sub(b.unit(w.mz), b.unit(w.mx));
            w.d_closed = is_zero(b.d(p, p - 1) * std::span<const Integer>(diff));
            Subquotient h = homology_at(column_complex(b, p - 1), p);
            w.class_nonzero = w.d_closed && !h.is_trivial_class(diff);
            const IntVector dx = b.delta(p, p - 1) * std::span<const Integer>(b.unit(w.mx));
            const IntVector dxy = b.d(p + 1, p) * std::span<const Integer>(b.unit(w.mxy));
            w.delta_m_x = dx == dxy;
            const IntVector lhs = sub(b.delta(p, p - 1) * std::span<const Integer>(diff), b.unit(w.m0));
            w.hits_m0 = Lattice::from_columns(b.d(p + 1, p)).contains(lhs);
            return w;
        }
    }
    return std::nullopt;
}

DiagonalE2Report e2_diagonal_check(const ConvergenceReport& run) {
    DiagonalE2Report rep;
    rep.verdict.name = "E2 diagonal vanishes below alpha";
    if (run.r_ind != 1) {
        rep.verdict.skipped = true;
        rep.verdict.detail = "skipped (r≥2)";
        return rep;
    }
    const BigradedComplex& b = *run.pages.front().complex;
    IndependenceCensus census = maximal_r_independent_census(run.graph, 1);
    std::vector<std::string> bad;
    for (const VertexSet& I : census.maximal_sets) {
        if (static_cast<int>(I.size()) >= census.independence_number) continue;
        auto w = diagonal_witness(b, I);
        if (!w) {
            rep.no_witness.push_back(I);
            continue;
        }
        if (!w->ok()) bad.push_back(I.to_string());
        rep.witnesses.push_back(std::move(*w));
    }
    const SpectralPage& e2 = run.pages.size() >= 2 ? run.pages[1] : run.pages[0];
    for (int p = 0; p < run.alpha; ++p)
        if (e2.nonzero(p, p)) rep.nonzero.push_back(p);

    std::string missing;
    for (const VertexSet& I : rep.no_witness) missing += " " + I.to_string();
    rep.verdict.pass = rep.nonzero.empty() && bad.empty();
    if (!bad.empty()) {
        rep.verdict.detail = "witness identities fail for";
        for (const auto& s : bad) rep.verdict.detail += " " + s;
    } else if (!rep.nonzero.empty()) {
        const int p = rep.nonzero.front();
        rep.verdict.detail = "E2 at " + at_str(p, p) + " is " + e2.at(p, p).to_string();
        if (!missing.empty()) rep.verdict.detail += "; discrepancy: no swap witness for" + missing;
    } else {
        rep.verdict.detail = std::to_string(rep.witnesses.size()) + " witnesses verified";
        if (!missing.empty()) rep.verdict.detail += "; no swap witness for" + missing;
    }
    return rep;
}

DiagonalE2Report e2_diagonal_check(const Graph& g) { return e2_diagonal_check(run_to_collapse(g, 1)); }

ColumnCheck column_vanishing_check(const Graph& g, int p) {
    ColumnCheck out;
    IndependenceCensus census = maximal_r_independent_census(g, 1);
    out.applicable = p >= 1 && census.count(p) == 0;
    if (!out.applicable) return out;
    RemainderHomology cache(g);
    out.checks = column_checks(g, p, cache);
    for (const auto& c : out.checks)
        if (!c.zero) out.violations.push_back(c);
    return out;
}

VanishingReport vanishing_report(const Graph& g, int r) {
    VanishingReport rep;
    rep.graph = g.name();
    rep.r = r;
    IndependenceCensus census = maximal_r_independent_census(g, r);
    for (int p = 1; p <= census.independence_number; ++p) {
        rep.census[p] = census.count(p);
        if (census.count(p) == 0) rep.empty_sizes.push_back(p);
    }
    if (r == 1) {
        RemainderHomology cache(g);
        for (int p : rep.empty_sizes)
            for (auto& c : column_checks(g, p, cache)) rep.checks.push_back(std::move(c));
    } else {
        BigradedComplex b(g, r);
        std::vector<GradedHomology> cols;
        for (int q = 0; q <= b.top(); ++q) cols.push_back(homology_groups(column_complex(b, q)));
        for (int p : rep.empty_sizes)
            for (int q = 1; q <= p; ++q) {
                VanishingCheck c;
                c.p = p;
                c.q = q;
                c.reduced_degree = p - q - 1;
                c.group = cols[static_cast<std::size_t>(q)].at(p);
                c.zero = c.group.is_zero();
                rep.checks.push_back(std::move(c));
            }
    }
    for (const auto& c : rep.checks)
        if (!c.zero) rep.violations.push_back(c);
    return rep;
}

std::vector<Graph> search_candidates(const SearchSpec& spec) {
    std::vector<Graph> out;
    const std::string& f = spec.family;
    if (f == "paths") {
        for (int n = 1; n <= spec.max_n; ++n) out.push_back(families::path(n));
    } else if (f == "cycles") {
        for (int n = 3; n <= spec.max_n; ++n) out.push_back(families::cycle(n));
    } else if (f == "disjoint-k1-cycles") {
        for (int n = 4; n <= spec.max_n; ++n) out.push_back(families::from_spec("complete:1+cycle:" + std::to_string(n)));
    } else if (f == "ladders") {
        for (int k = 1; k <= spec.max_n; ++k) out.push_back(families::ladder(k));
    } else if (f == "cubic") {
        out = families::cubic_catalogue();
    } else if (f == "random") {
        if (spec.n < 1 || spec.n > kMaxRandomVertices)
            throw InputError("random search needs 1 <= n <= " + std::to_string(kMaxRandomVertices));
        if (spec.budget < 0) throw InputError("budget must be non-negative");
        std::mt19937_64 rng(spec.seed);
        for (int k = 0; k < spec.budget; ++k) {
            Graph g = families::erdos_renyi(spec.n, spec.p, rng);
            std::ostringstream name;
            name << "random:n=" << spec.n << ",p=" << spec.p << ",seed=" << spec.seed << ",#" << k;
            g.set_name(name.str());
            out.push_back(std::move(g));
        }
    } else {
        throw InputError("unknown search family '" + f + "' (paths, cycles, disjoint-k1-cycles, ladders, cubic, random)");
    }
    for (const auto& g : out)
        if (g.vertex_count() > kMaxFamilyVertices)
            throw InputError("search candidate " + g.name() + " exceeds " + std::to_string(kMaxFamilyVertices) + " vertices");
    return out;
}

namespace {

bool reverify(const Violation& v, int r) {
    if (r == 1) {
        InducedSubgraph rest = delete_vertices(v.graph, closed_neighborhood(v.graph, v.U));
        const AbelianGroup direct = homology(independence_chain_complex(rest.graph, 1)).at(v.p - v.q);
        BigradedComplex b(v.graph, 1);
        const AbelianGroup e1 = homology_at(column_complex(b, v.q), v.p).group();
        return direct.isomorphic(v.group) && !direct.is_zero() && !e1.is_zero();
    }
    BigradedComplex b(v.graph, r);
    return homology_at(column_complex(b, v.q), v.p).group().isomorphic(v.group) && !v.group.is_zero();
}

}  // namespace

SearchResult search_counterexamples(const SearchSpec& spec) {
    if (spec.r < 1) throw InputError("r must be at least 1");
    SearchResult res;
    res.spec = spec;
    std::vector<Graph> cands = search_candidates(spec);
    res.candidates = cands.size();
    for (const auto& g : cands) res.names.push_back(g.name());
    std::vector<std::vector<Violation>> found(cands.size());
    std::exception_ptr err;
    std::mutex mu;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < cands.size(); ++k) {
        try {
            VanishingReport rep = vanishing_report(cands[k], spec.r);
            for (const auto& c : rep.violations) {
                Violation v{cands[k], c.p, c.q, c.U, c.group, false};
                v.reverified = reverify(v, spec.r);
                if (!v.reverified)
                    throw ContractViolation("violation on " + cands[k].name() + " at " + at_str(c.p, c.q) +
                                            " does not re-verify");
                found[k].push_back(std::move(v));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    for (auto& list : found)
        for (auto& v : list) res.violations.push_back(std::move(v));
    return res;
}

std::map<int, AbelianGroup> path_closed_form(int n) {
    std::map<int, AbelianGroup> out;
    for (int k = 1; 3 * k - 1 <= n; ++k)
        if (n == 3 * k || n == 3 * k - 1) {
            AbelianGroup z;
            z.free_rank = 1;
            out[k - 1] = z;
        }
    return out;
}

std::vector<TableRow> path_cycle_table(int n_max) {
    if (n_max > 15) throw InputError("path/cycle table supports n <= 15");
    std::vector<TableRow> rows;
    auto fill = [](TableRow& row, const Graph& g) {
        GradedHomology h = homology_groups(independence_chain_complex(g, 1));
        for (int k : h.support()) row.reduced[k - 1] = h.at(k);
    };
    for (int n = 1; n <= n_max; ++n) {
        TableRow row{"path", n, {}, std::nullopt};
        fill(row, families::path(n));
        const auto want = path_closed_form(n);
        bool ok = want.size() == row.reduced.size();
        for (const auto& [k, g] : want)
            ok = ok && row.reduced.count(k) && row.reduced.at(k).isomorphic(g);
        row.closed_form_ok = ok;
        if (!ok) throw ContractViolation("Ind(P_" + std::to_string(n) + ") disagrees with the closed form");
        rows.push_back(std::move(row));
    }
    for (int n = 3; n <= n_max; ++n) {
        TableRow row{"cycle", n, {}, std::nullopt};
        fill(row, families::cycle(n));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Verdict> verification_suite(const Graph& g, int r, VerifyOptions) {
    std::vector<Verdict> out;
    BuildOptions bo;
    bo.verify_identities = false;
    auto bp = std::make_shared<const BigradedComplex>(g, r, bo);
    const BigradedComplex& b = *bp;

    {
        Verdict v{"bicomplex identities", true, ""};
        if (auto f = b.identity_failure()) {
            v.pass = false;
            v.detail = *f;
        }
        out.push_back(v);
    }
    out.push_back(guarded("delta rows are acyclic", [&] {
        Verdict v{"delta rows are acyclic", true, ""};
        for (int i = 0; i <= b.top() && v.pass; ++i) {
            RowCheck rc = delta_column_check(b, i);
            if (!rc.pass) {
                v.pass = false;
                v.detail = rc.detail;
            }
        }
        return v;
    }));
    out.push_back(guarded("total complex is acyclic", [&] { return acyclicity_check(b); }));

    CollapseOptions co;
    co.splitting_cross_check = false;
    std::optional<ConvergenceReport> run;
    try {
        run = run_to_collapse(bp, co);
    } catch (const ContractViolation& e) {
        out.push_back(Verdict{"spectral sequence", false, e.what()});
    }

    if (r == 1 && run) {
        out.push_back(guarded("E1 splitting", [&] {
            Verdict v{"E1 splitting", true, ""};
            for (int j = 0; j <= b.top(); ++j) splitting_decomposition(b, j);
            auto split = splitting_E1(g);
            for (int q = 0; q <= b.top() && v.pass; ++q)
                for (int p = q; p <= b.top(); ++p) {
                    auto it = split.find({p, q});
                    const AbelianGroup want = it == split.end() ? AbelianGroup{} : it->second;
                    const AbelianGroup got = run->pages.front().at(p, q);
                    if (!got.isomorphic(want)) {
                        v.pass = false;
                        v.detail = "E1 at " + at_str(p, q) + " is " + got.to_string() + ", splitting gives " + want.to_string();
                        break;
                    }
                }
            return v;
        }));
    } else {
        out.push_back(Verdict{"E1 splitting", true, "skipped (r≥2)", true});
    }
    out.push_back(diagonal_census_check(b));
    if (run) {
        out.push_back(guarded("E2 diagonal vanishes below alpha", [&] { return e2_diagonal_check(*run).verdict; }));
        for (const auto& v : run->verdicts) out.push_back(v);
    }
    return out;
}

}  // namespace indhom
