#include <doctest.h>

#include <sstream>

#include "indhom/chain_complex.hpp"
#include "indhom/families.hpp"
#include "indhom/reports.hpp"

using namespace indhom;
using nlohmann::json;

namespace {

template <class T>
T round_trip(const T& x) {
    return json::parse(json(x).dump()).get<T>();
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("JSON round trips") {
    const Graph c6 = families::cycle(6);
    HomologyReport h = make_homology_report(c6, 1, homology_groups(independence_chain_complex(c6, 1)));
    CHECK(round_trip(h) == h);

    ConvergenceReport run = run_to_collapse(families::petersen(), 1);
    PagesReport pages = make_pages_report(run);
    CHECK(round_trip(pages) == pages);
    json j = pages;
    CHECK(j["e_infinity"]["p"] == 4);
    CHECK(j["e_infinity"]["q"] == 4);

    VerifyReport v = make_verify_report(c6, 1, verification_suite(c6, 1), 0.123456789);
    CHECK(round_trip(v) == v);

    LabReport lab = make_lab_report(vanishing_report(families::from_spec("complete:1+cycle:4"), 1));
    CHECK(round_trip(lab) == lab);
    CHECK(json(lab)["census"]["3"] == 2);
    CHECK(json(lab)["violations"].size() == 1);

    SearchSpec spec;
    spec.family = "disjoint-k1-cycles";
    spec.max_n = 8;
    SearchReport s = make_search_report(search_counterexamples(spec));
    CHECK(round_trip(s) == s);

    // torsion beyond 64 bits survives
    GroupData big{2, {Integer(2), Integer(std::string("340282366920938463463374607431768211456"))}};
    CHECK(round_trip(big) == big);
    PageCell cell{1, 0, 0, {Integer(3)}};
    CHECK(round_trip(cell) == cell);
}

TEST_CASE("text grids agree with the JSON entries") {
    for (const Graph& g : {families::cycle(6), families::petersen(), families::cube_skeleton(), families::complete(4)}) {
        PagesReport rep = make_pages_report(run_to_collapse(g, 1));
        const PagesReport parsed = round_trip(rep);
        for (const PageData& page : parsed.pages) {
            auto lines = split_lines(render_page_grid(page, parsed.alpha));
            REQUIRE(lines.size() == static_cast<std::size_t>(parsed.alpha + 2));
            for (int q = 0; q <= parsed.alpha; ++q) {
                auto cells = split_ws(lines[static_cast<std::size_t>(q + 1)]);
                REQUIRE(cells.size() == static_cast<std::size_t>(parsed.alpha + 2));
                CHECK(cells[0] == std::to_string(q));
                for (int p = 0; p <= parsed.alpha; ++p) {
                    std::string want = "0";
                    for (const auto& c : page.entries)
                        if (c.p == p && c.q == q) want = group_unicode(GroupData{c.free_rank, c.torsion});
                    CHECK(cells[static_cast<std::size_t>(p + 1)] == want);
                }
            }
        }
    }
}

TEST_CASE("renderers") {
    const Graph c6 = families::cycle(6);
    HomologyReport h = make_homology_report(c6, 1, homology_groups(independence_chain_complex(c6, 1)));
    const std::string text = render_homology_text(h);
    CHECK(text.find("H̃₁ ≅ ℤ²") != std::string::npos);
    CHECK(text.find("reduced degree 1, marking degree 2") != std::string::npos);
    CHECK(split_lines(render_homology_csv(h)).size() == h.degrees.size() + 1);

    PagesReport pages = make_pages_report(run_to_collapse(c6, 1));
    const auto csv = split_lines(render_pages_csv(pages));
    CHECK(csv.size() == 1 + pages.pages.size() * 16);
    CHECK(csv[1].rfind("cycle:6,1,1,0,0,0,", 0) == 0);
    CHECK(render_pages_text(pages).find("marking degree") != std::string::npos);
    CHECK(render_pages_text(pages).find("reduced degree") != std::string::npos);
}
