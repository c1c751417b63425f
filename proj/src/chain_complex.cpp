#include "indhom/chain_complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "indhom/error.hpp"
#include "indhom/smith.hpp"

namespace indhom {

ChainComplex::ChainComplex(int min_degree, std::vector<std::vector<std::string>> labels,
                           std::vector<IntMatrix> boundaries, bool check)
    : min_(min_degree), labels_(std::move(labels)), boundaries_(std::move(boundaries)) {
    const std::size_t want = labels_.empty() ? 0 : labels_.size() - 1;
    if (boundaries_.size() != want) throw ContractViolation("chain complex: one boundary per adjacent degree pair expected");
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
        const auto& b = boundaries_[k];
        if (b.rows() != labels_[k].size() || b.cols() != labels_[k + 1].size())
            throw ContractViolation("chain complex: boundary into degree " + std::to_string(min_ + static_cast<int>(k)) +
                                    " has wrong shape");
    }
    if (check) verify();
}

std::size_t ChainComplex::rank(int n) const {
    if (n < min_ || n > max_degree()) return 0;
    return labels_[static_cast<std::size_t>(n - min_)].size();
}

const std::vector<std::string>& ChainComplex::labels(int n) const {
    static const std::vector<std::string> none;
    if (n < min_ || n > max_degree()) return none;
    return labels_[static_cast<std::size_t>(n - min_)];
}

const IntMatrix& ChainComplex::stored_boundary(int n) const {
    if (n <= min_ || n > max_degree()) throw std::out_of_range("no stored boundary out of degree " + std::to_string(n));
    return boundaries_[static_cast<std::size_t>(n - min_ - 1)];
}

IntMatrix ChainComplex::boundary(int n) const {
    if (n > min_ && n <= max_degree()) return stored_boundary(n);
    return IntMatrix(rank(n - 1), rank(n));
}

void ChainComplex::verify() const {
    for (int n = min_ + 2; n <= max_degree(); ++n) {
        IntMatrix dd = stored_boundary(n - 1) * stored_boundary(n);
        for (std::size_t i = 0; i < dd.rows(); ++i)
            for (std::size_t j = 0; j < dd.cols(); ++j)
                if (!dd(i, j).is_zero())
                    throw ContractViolation("boundary squared is nonzero from degree " + std::to_string(n) + ": basis " +
                                            labels(n)[j] + " hits " + labels(n - 2)[i]);
    }
}

AbelianGroup GradedHomology::at(int n) const {
    if (n < min_degree || n > max_degree()) return {};
    return groups[static_cast<std::size_t>(n - min_degree)];
}

const Subquotient& GradedHomology::quotient(int n) const {
    if (!has_representatives()) throw std::logic_error("homology computed without representatives");
    if (n < min_degree || n > max_degree()) throw std::out_of_range("homology degree out of range");
    return quotients[static_cast<std::size_t>(n - min_degree)];
}

std::vector<int> GradedHomology::support() const {
    std::vector<int> out;
    for (int n = min_degree; n <= max_degree(); ++n)
        if (!at(n).is_zero()) out.push_back(n);
    return out;
}

Subquotient homology_at(const ChainComplex& c, int n) {
    Lattice cycles = Lattice::from_columns(kernel_basis(c.boundary(n)));
    return Subquotient(std::move(cycles), c.boundary(n + 1).columns());
}

GradedHomology homology(const ChainComplex& c) {
    GradedHomology h;
    h.min_degree = c.min_degree();
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        h.quotients.push_back(homology_at(c, n));
        h.groups.push_back(h.quotients.back().group());
    }
    return h;
}

GradedHomology homology_groups(const ChainComplex& c) {
    GradedHomology h;
    h.min_degree = c.min_degree();
    if (c.empty()) return h;
    // divisors[n] belong to the boundary out of degree n
    const int lo = c.min_degree(), hi = c.max_degree();
    std::vector<std::vector<Integer>> divisors(static_cast<std::size_t>(hi - lo + 2));
    for (int n = lo + 1; n <= hi; ++n) divisors[static_cast<std::size_t>(n - lo)] = elementary_divisors(c.stored_boundary(n));
    for (int n = lo; n <= hi; ++n) {
        const auto& out = divisors[static_cast<std::size_t>(n - lo)];
        const auto& in = divisors[static_cast<std::size_t>(n - lo + 1)];
        AbelianGroup g;
        g.ambient_dim = c.rank(n);
        g.free_rank = c.rank(n) - out.size() - in.size();
        for (const auto& d : in)
            if (!d.is_one()) g.torsion.push_back(d);
        h.groups.push_back(std::move(g));
    }
    return h;
}

ChainComplex independence_chain_complex(const Graph& g, int r) {
    auto sets = enumerate_r_independent_masks(g, r);
    int top = 0;
    for (auto s : sets) top = std::max(top, std::popcount(s));
    std::vector<std::vector<VertexMask>> by_size(static_cast<std::size_t>(top + 1));
    for (auto s : sets) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);  // stays lexicographic

    std::vector<std::vector<std::string>> labels(by_size.size());
    std::vector<std::unordered_map<VertexMask, std::size_t>> index(by_size.size());
    for (std::size_t k = 0; k < by_size.size(); ++k)
        for (std::size_t a = 0; a < by_size[k].size(); ++a) {
            labels[k].push_back(VertexSet::from_mask(by_size[k][a]).to_string());
            index[k][by_size[k][a]] = a;
        }
    std::vector<IntMatrix> boundaries;
    for (std::size_t k = 1; k < by_size.size(); ++k) {
        IntMatrix b(by_size[k - 1].size(), by_size[k].size());
        for (std::size_t a = 0; a < by_size[k].size(); ++a) {
            const VertexMask s = by_size[k][a];
            VertexMask rest = s;
            int below = 0;
            while (rest) {
                const Vertex v = std::countr_zero(rest);
                rest &= rest - 1;
                b(index[k - 1].at(s & ~(VertexMask{1} << v)), a) = below % 2 ? -1 : 1;
                ++below;
            }
        }
        boundaries.push_back(std::move(b));
    }
    return ChainComplex(0, std::move(labels), std::move(boundaries));
}

IntMatrix induced_map_on_homology(const IntMatrix& f, const Subquotient& source, const Subquotient& target) {
    IntMatrix out(target.generator_count(), source.generator_count());
    for (std::size_t g = 0; g < source.generator_count(); ++g) {
        IntVector image = f * std::span<const Integer>(source.generator(g));
        IntVector coords = target.project(image);
        for (std::size_t i = 0; i < coords.size(); ++i) out(i, g) = coords[i];
    }
    return out;
}

IntMatrix induced_map_on_homology(const IntMatrix& f, const GradedHomology& source, const GradedHomology& target,
                                  int degree, int target_degree) {
    return induced_map_on_homology(f, source.quotient(degree), target.quotient(target_degree));
}

ChainComplex direct_sum(const std::vector<ChainComplex>& parts, const std::vector<std::string>& names) {
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& c : parts) {
        if (c.empty()) continue;
        lo = any ? std::min(lo, c.min_degree()) : c.min_degree();
        hi = any ? std::max(hi, c.max_degree()) : c.max_degree();
        any = true;
    }
    if (!any) return ChainComplex();
    const std::size_t span = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<std::string>> labels(span);
    std::vector<ChainBlock> blocks;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& c = parts[p];
        ChainBlock b;
        b.name = p < names.size() ? names[p] : "summand " + std::to_string(p);
        b.min_degree = c.min_degree();
        for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
            auto& l = labels[static_cast<std::size_t>(n - lo)];
            b.offsets.push_back(l.size());
            b.sizes.push_back(c.rank(n));
            for (const auto& s : c.labels(n)) l.push_back(b.name + ":" + s);
        }
        blocks.push_back(std::move(b));
    }
    std::vector<IntMatrix> boundaries;
    for (int n = lo + 1; n <= hi; ++n) {
        IntMatrix m(labels[static_cast<std::size_t>(n - 1 - lo)].size(), labels[static_cast<std::size_t>(n - lo)].size());
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const auto& c = parts[p];
            if (c.empty() || n <= c.min_degree() || n > c.max_degree()) continue;
            const auto& b = blocks[p];
            const std::size_t row0 = b.offsets[static_cast<std::size_t>(n - 1 - c.min_degree())];
            const std::size_t col0 = b.offsets[static_cast<std::size_t>(n - c.min_degree())];
            const IntMatrix& src = c.stored_boundary(n);
            for (std::size_t i = 0; i < src.rows(); ++i)
                for (std::size_t j = 0; j < src.cols(); ++j)
                    if (!src(i, j).is_zero()) m(row0 + i, col0 + j) = src(i, j);
        }
        boundaries.push_back(std::move(m));
    }
    ChainComplex out(lo, std::move(labels), std::move(boundaries), false);
    out.set_blocks(std::move(blocks));
    return out;
}

long long euler_characteristic(const ChainComplex& c) {
    long long chi = 0;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) chi += (n % 2 ? -1 : 1) * static_cast<long long>(c.rank(n));
    return chi;
}

long long euler_characteristic(const GradedHomology& h) {
    long long chi = 0;
    for (int n = h.min_degree; n <= h.max_degree(); ++n)
        chi += (n % 2 ? -1 : 1) * static_cast<long long>(h.at(n).free_rank);
    return chi;
}

}  // namespace indhom
