#include "indhom/echelon.hpp"

#include <atomic>

namespace indhom {

namespace {

std::atomic<Exec> g_default_exec{Exec::parallel};

// Rows below this amount of update work are not worth a parallel region.
constexpr std::size_t kParallelWork = 4096;

void eliminate_rows(IntMatrix& m, std::size_t pivot_row, std::size_t col, const std::vector<std::size_t>& targets,
                    const std::vector<std::size_t>& support, bool parallel) {
    const Integer pivot = m(pivot_row, col);
    const auto n = static_cast<std::ptrdiff_t>(targets.size());
    const bool go_wide = parallel && targets.size() * support.size() >= kParallelWork;
#pragma omp parallel for schedule(dynamic, 8) if (go_wide)
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        const std::size_t r = targets[static_cast<std::size_t>(t)];
        const Integer q = floor_div(m(r, col), pivot);
        auto target = m.row(r);
        auto source = m.row(pivot_row);
        for (std::size_t j : support) target[j].submul(q, source[j]);
    }
}

}  // namespace

void set_default_exec(Exec exec) { g_default_exec.store(exec); }
Exec default_exec() { return g_default_exec.load(); }

EchelonResult echelon_reduce(IntMatrix& m, std::size_t key_cols, Exec exec) {
    EchelonResult result;
    const std::size_t rows = m.rows();
    const bool parallel = exec == Exec::parallel;
    std::size_t pr = 0;
    std::vector<std::size_t> targets;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < key_cols && pr < rows; ++c) {
        for (;;) {
            std::size_t best = rows;
            for (std::size_t r = pr; r < rows; ++r) {
                const Integer& v = m(r, c);
                if (v.is_zero()) continue;
                if (best == rows || compare_abs(v, m(best, c)) < 0) best = r;
                if (m(best, c).is_unit()) break;
            }
            if (best == rows) break;
            m.swap_rows(pr, best);
            auto prow = m.row(pr);
            if (prow[c].sign() < 0)
                for (std::size_t j = c; j < m.cols(); ++j)
                    if (!prow[j].is_zero()) prow[j] = -prow[j];

            targets.clear();
            for (std::size_t r = pr + 1; r < rows; ++r)
                if (!m(r, c).is_zero()) targets.push_back(r);
            if (targets.empty()) {
                result.pivot_cols.push_back(c);
                ++pr;
                break;
            }
            support.clear();
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!prow[j].is_zero()) support.push_back(j);
            eliminate_rows(m, pr, c, targets, support, parallel);
        }
    }
    result.rank = pr;
    return result;
}

}  // namespace indhom
