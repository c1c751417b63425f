#pragma once

// Serializable snapshots of engine results. Each report is a plain value
// with JSON conversion (nlohmann) such that from_json(to_json(x)) == x.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "indhom/lattice.hpp"
#include "indhom/spectral.hpp"
#include "indhom/theorem_lab.hpp"

namespace indhom {

struct GroupData {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    static GroupData of(const AbelianGroup& g) { return {g.free_rank, g.torsion}; }
    AbelianGroup group() const;
    bool is_zero() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const GroupData&, const GroupData&) = default;
};

// Homology of the augmented Ind_r complex. marking_degree n is the number
// of vertices in a face; reduced_degree is n - 1.
struct HomologyDegree {
    int marking_degree = 0;
    int reduced_degree = -1;
    GroupData group;
    friend bool operator==(const HomologyDegree&, const HomologyDegree&) = default;
};

struct HomologyReport {
    std::string graph;
    int r_ind = 1;
    int vertices = 0;
    std::vector<HomologyDegree> degrees;  // every degree of the complex
    friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

HomologyReport make_homology_report(const Graph& g, int r, const GradedHomology& h);

struct PageCell {
    int p = 0, q = 0;
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    friend bool operator==(const PageCell&, const PageCell&) = default;
};

struct DifferentialData {
    int p = 0, q = 0;
    std::size_t rank = 0;
    friend bool operator==(const DifferentialData&, const DifferentialData&) = default;
};

struct PageData {
    int r = 1;
    std::vector<PageCell> entries;  // nonzero entries, (q, p) ascending
    std::vector<DifferentialData> differentials;
    friend bool operator==(const PageData&, const PageData&) = default;
};

struct EInfinityData {
    int p = 0, q = 0;
    friend bool operator==(const EInfinityData&, const EInfinityData&) = default;
};

struct PagesReport {
    std::string graph;
    int r_ind = 1;
    int alpha = 0;
    std::vector<PageData> pages;
    EInfinityData e_infinity;
    friend bool operator==(const PagesReport&, const PagesReport&) = default;
};

PagesReport make_pages_report(const ConvergenceReport& run);

struct VerdictData {
    std::string name;
    bool pass = true;
    bool skipped = false;
    std::string detail;
    friend bool operator==(const VerdictData&, const VerdictData&) = default;
};

struct VerifyReport {
    std::string graph;
    int r_ind = 1;
    bool all_pass = true;
    double seconds = 0;
    std::vector<VerdictData> verdicts;
    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

VerifyReport make_verify_report(const Graph& g, int r, const std::vector<Verdict>& verdicts, double seconds);

struct CheckData {
    int p = 0, q = 0;
    std::vector<int> U;
    int reduced_degree = 0;
    GroupData group;
    bool zero = true;
    friend bool operator==(const CheckData&, const CheckData&) = default;
};

struct LabReport {
    std::string graph;
    std::map<int, std::size_t> census;
    std::vector<CheckData> checks;
    std::vector<CheckData> violations;
    friend bool operator==(const LabReport&, const LabReport&) = default;
};

LabReport make_lab_report(const VanishingReport& rep);

struct ViolationData {
    std::string graph;       // name
    std::string graph_file;  // text accepted by read_graph
    CheckData check;
    bool reverified = false;
    friend bool operator==(const ViolationData&, const ViolationData&) = default;
};

struct SearchReport {
    std::string family;
    int r_ind = 1;
    int max_n = 0;
    int n = 0;
    double p = 0;
    std::uint64_t seed = 0;
    int budget = 0;
    std::size_t candidates = 0;
    std::vector<ViolationData> violations;
    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

SearchReport make_search_report(const SearchResult& res);

void to_json(nlohmann::json& j, const GroupData& v);
void from_json(const nlohmann::json& j, GroupData& v);
void to_json(nlohmann::json& j, const HomologyDegree& v);
void from_json(const nlohmann::json& j, HomologyDegree& v);
void to_json(nlohmann::json& j, const HomologyReport& v);
void from_json(const nlohmann::json& j, HomologyReport& v);
void to_json(nlohmann::json& j, const PageCell& v);
void from_json(const nlohmann::json& j, PageCell& v);
void to_json(nlohmann::json& j, const DifferentialData& v);
void from_json(const nlohmann::json& j, DifferentialData& v);
void to_json(nlohmann::json& j, const PageData& v);
void from_json(const nlohmann::json& j, PageData& v);
void to_json(nlohmann::json& j, const EInfinityData& v);
void from_json(const nlohmann::json& j, EInfinityData& v);
void to_json(nlohmann::json& j, const PagesReport& v);
void from_json(const nlohmann::json& j, PagesReport& v);
void to_json(nlohmann::json& j, const VerdictData& v);
void from_json(const nlohmann::json& j, VerdictData& v);
void to_json(nlohmann::json& j, const VerifyReport& v);
void from_json(const nlohmann::json& j, VerifyReport& v);
void to_json(nlohmann::json& j, const CheckData& v);
void from_json(const nlohmann::json& j, CheckData& v);
void to_json(nlohmann::json& j, const LabReport& v);
void from_json(const nlohmann::json& j, LabReport& v);
void to_json(nlohmann::json& j, const ViolationData& v);
void from_json(const nlohmann::json& j, ViolationData& v);
void to_json(nlohmann::json& j, const SearchReport& v);
void from_json(const nlohmann::json& j, SearchReport& v);

// Text views. Grids list q rows ascending and p columns 0..alpha; a zero
// cell prints as "0".
std::string group_unicode(const GroupData& g);
std::string render_homology_text(const HomologyReport& r);
std::string render_page_grid(const PageData& page, int alpha);
std::string render_pages_text(const PagesReport& r);
std::string render_verify_text(const VerifyReport& r);
std::string render_search_text(const SearchReport& r);
// One row per (page, p, q) over the full alpha x alpha grid, zero cells
// included, plus a header line.
std::string render_pages_csv(const PagesReport& r);
std::string render_homology_csv(const HomologyReport& r);
std::string render_verify_csv(const VerifyReport& r);
std::string render_search_csv(const SearchReport& r);

}  // namespace indhom
