#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "indhom/cli.hpp"
#include "indhom/echelon.hpp"

using namespace indhom;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("homology command") {
    Run c6 = run({"homology", "family:cycle:6"});
    CHECK(c6.code == kExitOk);
    CHECK(has(c6.out, "H̃₁ ≅ ℤ²"));
    CHECK(has(run({"homology", "family:petersen"}).out, "H̃₂ ≅ ℤ⁴"));
    Run c5 = run({"homology", "--r", "2", "family:cycle:5"});
    CHECK(has(c5.out, "H̃₁ ≅ ℤ "));
    Run js = run({"homology", "--format", "json", "family:cycle:6"});
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["degrees"][2]["group"]["rank"] == 2);
    CHECK(j["degrees"][2]["reduced_degree"] == 1);
    CHECK(j["degrees"][2]["marking_degree"] == 2);
}

TEST_CASE("pages command") {
    Run c6 = run({"pages", "family:cycle:6"});
    CHECK(c6.code == kExitOk);
    CHECK(has(c6.out, "ℤ⁶"));
    CHECK(has(c6.out, "ℤ³"));
    CHECK(has(c6.out, "ℤ²"));
    Run k4 = run({"pages", "family:complete:4"});
    CHECK(has(k4.out, "1    0  ℤ⁴"));
    auto j = nlohmann::json::parse(run({"pages", "--format", "json", "family:petersen"}).out);
    CHECK(j["e_infinity"]["p"] == 4);
    CHECK(j["e_infinity"]["q"] == 4);
    Run csv = run({"pages", "--format", "csv", "family:path:3"});
    CHECK(csv.out.rfind("graph,r_ind,page,p,q,free_rank,torsion\n", 0) == 0);
    Run serial = run({"pages", "--jobs", "1", "--no-build-checks", "family:cycle:6"});
    CHECK(serial.out == c6.out);
    CHECK(default_exec() == Exec::parallel);
}

TEST_CASE("verify command") {
    Run p6 = run({"verify", "family:path:6"});
    CHECK(p6.code == kExitOk);
    CHECK(has(p6.out, "all checks pass"));
    Run c4 = run({"verify", "--r", "2", "family:cycle:4"});
    CHECK(c4.code == kExitOk);
    CHECK(has(c4.out, "SKIP E1 splitting: skipped (r≥2)"));
    Run pet = run({"verify", "family:petersen"});
    CHECK(pet.code == kExitOk);
    CHECK(has(pet.out, " s)"));
}

TEST_CASE("search command") {
    Run k1 = run({"search", "--family", "disjoint-k1-cycles", "--max-n", "8"});
    CHECK(k1.code == kExitFailure);
    CHECK(has(k1.out, "violation in complete:1+cycle:4: p = 2, q = 1, U = {0}"));
    Run paths = run({"search", "--family", "paths", "--max-n", "12"});
    CHECK(paths.code == kExitOk);
    CHECK(has(paths.out, "no violations"));
    Run r1 = run({"search", "--random", "n=8", "p=0.3", "seed=42", "budget=50"});
    Run r2 = run({"search", "--random", "n=8", "p=0.3", "seed=42", "budget=50"});
    CHECK(r1.out == r2.out);
    CHECK(has(r1.out, "50 candidates"));

    // a printed witness is a graph file that verify accepts
    const auto start = k1.out.find("# complete:1+cycle:4");
    REQUIRE(start != std::string::npos);
    const auto end = k1.out.find("\n\n", start);
    const std::string path = "test_cli_witness.txt";
    {
        std::ofstream f(path);
        f << k1.out.substr(start, end == std::string::npos ? std::string::npos : end - start);
    }
    Run lab = run({"lab", path});
    CHECK(lab.code == kExitFailure);
    CHECK(run({"verify", path}).code == kExitOk);
    std::remove(path.c_str());
}

TEST_CASE("exit codes for bad input") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"homology"}).code == kExitUsage);
    CHECK(run({"homology", "--r", "0", "family:cycle:4"}).code == kExitUsage);
    CHECK(run({"homology", "--format", "xml", "family:cycle:4"}).code == kExitUsage);
    CHECK(run({"homology", "family:wheel:5"}).code == kExitUsage);
    CHECK(run({"search", "--random", "n=12"}).code == kExitUsage);
    CHECK(run({"search", "--random", "q=1"}).code == kExitUsage);
    const std::string path = "test_cli_bad.txt";
    {
        std::ofstream f(path);
        f << "4 2\n0 1\n2 9\n";
    }
    Run bad = run({"homology", path});
    CHECK(bad.code == kExitUsage);
    CHECK(has(bad.err, "line 3"));
    std::remove(path.c_str());
    CHECK(run({"--help"}).code == kExitOk);
}
