#include "indhom/reports.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "indhom/error.hpp"
#include "indhom/graph_io.hpp"

namespace indhom {

using nlohmann::json;

namespace {

json integers_to_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) {
        if (x.is_small())
            a.push_back(x.small_value());
        else
            a.push_back(x.to_string());
    }
    return a;
}

std::vector<Integer> integers_from_json(const json& a) {
    std::vector<Integer> out;
    for (const auto& x : a) {
        if (x.is_string())
            out.emplace_back(x.get<std::string>());
        else
            out.emplace_back(x.get<std::int64_t>());
    }
    return out;
}

std::vector<int> vertex_list(const VertexSet& s) { return {s.begin(), s.end()}; }

CheckData check_data(const VanishingCheck& c) {
    return CheckData{c.p, c.q, vertex_list(c.U), c.reduced_degree, GroupData::of(c.group), c.zero};
}

std::string subscript(int n) {
    static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out = n < 0 ? "₋" : "";
    for (char c : std::to_string(n < 0 ? -n : n)) out += sub[c - '0'];
    return out;
}

// Display columns of a UTF-8 string (every code point counts as one).
std::size_t width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); }

std::string torsion_list(const std::vector<Integer>& t) {
    std::string out;
    for (const auto& x : t) out += (out.empty() ? "" : ";") + x.to_string();
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string set_string(const std::vector<int>& u) {
    std::string out = "{";
    for (std::size_t i = 0; i < u.size(); ++i) out += (i ? "," : "") + std::to_string(u[i]);
    return out + "}";
}

const PageCell* find_cell(const PageData& page, int p, int q) {
    for (const auto& c : page.entries)
        if (c.p == p && c.q == q) return &c;
    return nullptr;
}

}  // namespace

AbelianGroup GroupData::group() const {
    AbelianGroup g;
    g.free_rank = rank;
    g.torsion = torsion;
    return g;
}

HomologyReport make_homology_report(const Graph& g, int r, const GradedHomology& h) {
    HomologyReport rep{g.name(), r, g.vertex_count(), {}};
    for (int n = h.min_degree; n <= h.max_degree(); ++n)
        rep.degrees.push_back(HomologyDegree{n, n - 1, GroupData::of(h.at(n))});
    return rep;
}

PagesReport make_pages_report(const ConvergenceReport& run) {
    PagesReport rep;
    rep.graph = run.graph.name();
    rep.r_ind = run.r_ind;
    rep.alpha = run.alpha;
    for (std::size_t k = 0; k < run.pages.size(); ++k) {
        const SpectralPage& page = run.pages[k];
        PageData pd;
        pd.r = page.r;
        std::vector<PageCell> cells;
        for (const auto& [pq, e] : page.entries)
            cells.push_back(PageCell{pq.first, pq.second, e.group.group().free_rank, e.group.group().torsion});
        std::sort(cells.begin(), cells.end(),
                  [](const PageCell& a, const PageCell& b) { return std::pair(a.q, a.p) < std::pair(b.q, b.p); });
        pd.entries = std::move(cells);
        if (k < run.differentials.size())
            for (const auto& d : run.differentials[k]) pd.differentials.push_back(DifferentialData{d.p, d.q, d.rank});
        rep.pages.push_back(std::move(pd));
    }
    if (run.e_infinity.size() == 1) rep.e_infinity = EInfinityData{run.e_infinity[0].p, run.e_infinity[0].q};
    return rep;
}

VerifyReport make_verify_report(const Graph& g, int r, const std::vector<Verdict>& verdicts, double seconds) {
    VerifyReport rep{g.name(), r, true, seconds, {}};
    for (const auto& v : verdicts) {
        rep.verdicts.push_back(VerdictData{v.name, v.pass, v.skipped, v.detail});
        rep.all_pass = rep.all_pass && v.pass;
    }
    return rep;
}

LabReport make_lab_report(const VanishingReport& rep) {
    LabReport out;
    out.graph = rep.graph;
    out.census = rep.census;
    for (const auto& c : rep.checks) out.checks.push_back(check_data(c));
    for (const auto& c : rep.violations) out.violations.push_back(check_data(c));
    return out;
}

SearchReport make_search_report(const SearchResult& res) {
    SearchReport rep;
    rep.family = res.spec.family;
    rep.r_ind = res.spec.r;
    rep.max_n = res.spec.max_n;
    rep.n = res.spec.n;
    rep.p = res.spec.p;
    rep.seed = res.spec.seed;
    rep.budget = res.spec.budget;
    rep.candidates = res.candidates;
    for (const auto& v : res.violations) {
        CheckData c{v.p, v.q, vertex_list(v.U), v.p - v.q - 1, GroupData::of(v.group), false};
        rep.violations.push_back(ViolationData{v.graph.name(), graph_to_text(v.graph), c, v.reverified});
    }
    return rep;
}

// ---- JSON

void to_json(json& j, const GroupData& v) { j = json{{"rank", v.rank}, {"torsion", integers_to_json(v.torsion)}}; }
void from_json(const json& j, GroupData& v) {
    v.rank = j.at("rank").get<std::size_t>();
    v.torsion = integers_from_json(j.at("torsion"));
}

void to_json(json& j, const HomologyDegree& v) {
    j = json{{"marking_degree", v.marking_degree}, {"reduced_degree", v.reduced_degree}, {"group", v.group}};
}
void from_json(const json& j, HomologyDegree& v) {
    j.at("marking_degree").get_to(v.marking_degree);
    j.at("reduced_degree").get_to(v.reduced_degree);
    j.at("group").get_to(v.group);
}

void to_json(json& j, const HomologyReport& v) {
    j = json{{"graph", v.graph}, {"r_ind", v.r_ind}, {"vertices", v.vertices}, {"degrees", v.degrees}};
}
void from_json(const json& j, HomologyReport& v) {
    j.at("graph").get_to(v.graph);
    j.at("r_ind").get_to(v.r_ind);
    j.at("vertices").get_to(v.vertices);
    j.at("degrees").get_to(v.degrees);
}

void to_json(json& j, const PageCell& v) {
    j = json{{"p", v.p}, {"q", v.q}, {"free_rank", v.free_rank}, {"torsion", integers_to_json(v.torsion)}};
}
void from_json(const json& j, PageCell& v) {
    j.at("p").get_to(v.p);
    j.at("q").get_to(v.q);
    j.at("free_rank").get_to(v.free_rank);
    v.torsion = integers_from_json(j.at("torsion"));
}

void to_json(json& j, const DifferentialData& v) { j = json{{"p", v.p}, {"q", v.q}, {"rank", v.rank}}; }
void from_json(const json& j, DifferentialData& v) {
    j.at("p").get_to(v.p);
    j.at("q").get_to(v.q);
    j.at("rank").get_to(v.rank);
}

void to_json(json& j, const PageData& v) {
    j = json{{"r", v.r}, {"entries", v.entries}, {"differentials", v.differentials}};
}
void from_json(const json& j, PageData& v) {
    j.at("r").get_to(v.r);
    j.at("entries").get_to(v.entries);
    j.at("differentials").get_to(v.differentials);
}

void to_json(json& j, const EInfinityData& v) { j = json{{"p", v.p}, {"q", v.q}}; }
void from_json(const json& j, EInfinityData& v) {
    j.at("p").get_to(v.p);
    j.at("q").get_to(v.q);
}

void to_json(json& j, const PagesReport& v) {
    j = json{{"graph", v.graph}, {"r_ind", v.r_ind}, {"alpha", v.alpha}, {"pages", v.pages}, {"e_infinity", v.e_infinity}};
}
void from_json(const json& j, PagesReport& v) {
    j.at("graph").get_to(v.graph);
    j.at("r_ind").get_to(v.r_ind);
    j.at("alpha").get_to(v.alpha);
    j.at("pages").get_to(v.pages);
    j.at("e_infinity").get_to(v.e_infinity);
}

void to_json(json& j, const VerdictData& v) {
    j = json{{"name", v.name}, {"pass", v.pass}, {"skipped", v.skipped}, {"detail", v.detail}};
}
void from_json(const json& j, VerdictData& v) {
    j.at("name").get_to(v.name);
    j.at("pass").get_to(v.pass);
    j.at("skipped").get_to(v.skipped);
    j.at("detail").get_to(v.detail);
}

void to_json(json& j, const VerifyReport& v) {
    j = json{{"graph", v.graph}, {"r_ind", v.r_ind}, {"all_pass", v.all_pass}, {"seconds", v.seconds}, {"verdicts", v.verdicts}};
}
void from_json(const json& j, VerifyReport& v) {
    j.at("graph").get_to(v.graph);
    j.at("r_ind").get_to(v.r_ind);
    j.at("all_pass").get_to(v.all_pass);
    j.at("seconds").get_to(v.seconds);
    j.at("verdicts").get_to(v.verdicts);
}

void to_json(json& j, const CheckData& v) {
    j = json{{"p", v.p}, {"q", v.q}, {"U", v.U}, {"reduced_degree", v.reduced_degree}, {"group", v.group}, {"zero", v.zero}};
}
void from_json(const json& j, CheckData& v) {
    j.at("p").get_to(v.p);
    j.at("q").get_to(v.q);
    j.at("U").get_to(v.U);
    j.at("reduced_degree").get_to(v.reduced_degree);
    j.at("group").get_to(v.group);
    j.at("zero").get_to(v.zero);
}

void to_json(json& j, const LabReport& v) {
    json census = json::object();
    for (const auto& [p, n] : v.census) census[std::to_string(p)] = n;
    j = json{{"graph", v.graph}, {"census", census}, {"checks", v.checks}, {"violations", v.violations}};
}
void from_json(const json& j, LabReport& v) {
    j.at("graph").get_to(v.graph);
    v.census.clear();
    for (const auto& [k, n] : j.at("census").items()) v.census[std::stoi(k)] = n.get<std::size_t>();
    j.at("checks").get_to(v.checks);
    j.at("violations").get_to(v.violations);
}

void to_json(json& j, const ViolationData& v) {
    j = json{{"graph", v.graph}, {"graph_file", v.graph_file}, {"check", v.check}, {"reverified", v.reverified}};
}
void from_json(const json& j, ViolationData& v) {
    j.at("graph").get_to(v.graph);
    j.at("graph_file").get_to(v.graph_file);
    j.at("check").get_to(v.check);
    j.at("reverified").get_to(v.reverified);
}

void to_json(json& j, const SearchReport& v) {
    j = json{{"family", v.family}, {"r_ind", v.r_ind},           {"max_n", v.max_n},
             {"n", v.n},           {"p", v.p},                   {"seed", v.seed},
             {"budget", v.budget}, {"candidates", v.candidates}, {"violations", v.violations}};
}
void from_json(const json& j, SearchReport& v) {
    j.at("family").get_to(v.family);
    j.at("r_ind").get_to(v.r_ind);
    j.at("max_n").get_to(v.max_n);
    j.at("n").get_to(v.n);
    j.at("p").get_to(v.p);
    j.at("seed").get_to(v.seed);
    j.at("budget").get_to(v.budget);
    j.at("candidates").get_to(v.candidates);
    j.at("violations").get_to(v.violations);
}

// ---- text

std::string group_unicode(const GroupData& g) { return g.group().to_unicode(); }

std::string render_homology_text(const HomologyReport& r) {
    std::ostringstream os;
    os << "Ind_" << r.r_ind << "(" << (r.graph.empty() ? "G" : r.graph) << "), " << r.vertices << " vertices\n";
    std::size_t w = 0;
    for (const auto& d : r.degrees) w = std::max(w, width("H̃" + subscript(d.reduced_degree) + " ≅ " + group_unicode(d.group)));
    for (const auto& d : r.degrees)
        os << pad("H̃" + subscript(d.reduced_degree) + " ≅ " + group_unicode(d.group), w + 3) << "reduced degree "
           << d.reduced_degree << ", marking degree " << d.marking_degree << "\n";
    return os.str();
}

std::string render_page_grid(const PageData& page, int alpha) {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(alpha + 2));
    cells[0].push_back("q\\p");
    for (int p = 0; p <= alpha; ++p) cells[0].push_back(std::to_string(p));
    for (int q = 0; q <= alpha; ++q) {
        auto& row = cells[static_cast<std::size_t>(q + 1)];
        row.push_back(std::to_string(q));
        for (int p = 0; p <= alpha; ++p) {
            const PageCell* c = find_cell(page, p, q);
            row.push_back(c ? group_unicode(GroupData{c->free_rank, c->torsion}) : "0");
        }
    }
    std::vector<std::size_t> w(static_cast<std::size_t>(alpha + 2), 0);
    for (const auto& row : cells)
        for (std::size_t k = 0; k < row.size(); ++k) w[k] = std::max(w[k], width(row[k]));
    std::ostringstream os;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t k = 0; k < row.size(); ++k) line += pad(row[k], w[k] + 2);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

std::string render_pages_text(const PagesReport& r) {
    std::ostringstream os;
    os << "spectral sequence of " << (r.graph.empty() ? "G" : r.graph) << ", r = " << r.r_ind << ", alpha = " << r.alpha
       << "\n";
    os << "entry (p,q) = E^r_{p,q}; marking degree n = p - q, reduced degree n - 1\n";
    for (const auto& page : r.pages) {
        os << "\nE^" << page.r << "\n" << render_page_grid(page, r.alpha);
        for (const auto& d : page.differentials)
            if (d.rank)
                os << "d^" << page.r << ": (" << d.p << "," << d.q << ") -> (" << d.p + page.r - 1 << "," << d.q + page.r
                   << ") has rank " << d.rank << "\n";
    }
    const int n = r.e_infinity.p - r.e_infinity.q;
    os << "\ncollapse at E^" << (r.pages.empty() ? 1 : r.pages.back().r) << "; E^∞ = ℤ at (" << r.e_infinity.p << ","
       << r.e_infinity.q << "), marking degree " << n << ", reduced degree " << n - 1 << "\n";
    return os.str();
}

std::string render_verify_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "verify " << (r.graph.empty() ? "G" : r.graph) << ", r = " << r.r_ind << "\n";
    for (const auto& v : r.verdicts) {
        os << (v.skipped ? "SKIP " : v.pass ? "PASS " : "FAIL ") << v.name;
        if (!v.detail.empty()) os << ": " << v.detail;
        os << "\n";
    }
    os << (r.all_pass ? "all checks pass" : "verification FAILED") << " (" << std::fixed << std::setprecision(3)
       << r.seconds << " s)\n";
    return os.str();
}

std::string render_search_text(const SearchReport& r) {
    std::ostringstream os;
    os << "search " << r.family;
    if (r.family == "random")
        os << " n=" << r.n << " p=" << r.p << " seed=" << r.seed << " budget=" << r.budget;
    else if (r.family != "cubic")
        os << " max-n=" << r.max_n;
    os << ", r = " << r.r_ind << ": " << r.candidates << " candidates, ";
    if (r.violations.empty()) {
        os << "no violations\n";
        return os.str();
    }
    os << r.violations.size() << " violation" << (r.violations.size() == 1 ? "" : "s") << "\n";
    for (const auto& v : r.violations) {
        const CheckData& c = v.check;
        os << "\nviolation in " << v.graph << ": p = " << c.p << ", q = " << c.q;
        if (r.r_ind == 1)
            os << ", U = " << set_string(c.U) << ", H̃" << subscript(c.reduced_degree) << "(Ind(G - N[U])) ≅ ";
        else
            os << ", E¹_{" << c.p << "," << c.q << "} ≅ ";
        os << group_unicode(c.group) << (v.reverified ? " (re-verified)" : "") << "\n" << v.graph_file;
    }
    return os.str();
}

std::string render_pages_csv(const PagesReport& r) {
    std::ostringstream os;
    os << "graph,r_ind,page,p,q,free_rank,torsion\n";
    for (const auto& page : r.pages)
        for (int q = 0; q <= r.alpha; ++q)
            for (int p = 0; p <= r.alpha; ++p) {
                const PageCell* c = find_cell(page, p, q);
                os << csv_field(r.graph) << "," << r.r_ind << "," << page.r << "," << p << "," << q << ","
                   << (c ? c->free_rank : 0) << "," << (c ? torsion_list(c->torsion) : "") << "\n";
            }
    return os.str();
}

std::string render_homology_csv(const HomologyReport& r) {
    std::ostringstream os;
    os << "graph,r_ind,marking_degree,reduced_degree,rank,torsion\n";
    for (const auto& d : r.degrees)
        os << csv_field(r.graph) << "," << r.r_ind << "," << d.marking_degree << "," << d.reduced_degree << ","
           << d.group.rank << "," << torsion_list(d.group.torsion) << "\n";
    return os.str();
}

std::string render_verify_csv(const VerifyReport& r) {
    std::ostringstream os;
    os << "graph,r_ind,check,pass,skipped,detail\n";
    for (const auto& v : r.verdicts)
        os << csv_field(r.graph) << "," << r.r_ind << "," << csv_field(v.name) << "," << (v.pass ? 1 : 0) << ","
           << (v.skipped ? 1 : 0) << "," << csv_field(v.detail) << "\n";
    return os.str();
}

std::string render_search_csv(const SearchReport& r) {
    std::ostringstream os;
    os << "graph,r_ind,p,q,U,reduced_degree,rank,torsion,reverified\n";
    for (const auto& v : r.violations)
        os << csv_field(v.graph) << "," << r.r_ind << "," << v.check.p << "," << v.check.q << ","
           << csv_field(set_string(v.check.U)) << "," << v.check.reduced_degree << "," << v.check.group.rank << ","
           << torsion_list(v.check.group.torsion) << "," << (v.reverified ? 1 : 0) << "\n";
    return os.str();
}

}  // namespace indhom
