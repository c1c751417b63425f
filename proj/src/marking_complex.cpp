#include "indhom/marking_complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "indhom/error.hpp"

namespace indhom {

namespace {

constexpr int kMaxMarkingVertices = 32;

std::uint64_t key(VertexMask ones, VertexMask twos) { return ones | (twos << 32); }

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

std::vector<Vertex> to_list(VertexMask m) { return VertexSet::from_mask(m).vertices(); }

}  // namespace

Marking::Marking(int n, VertexMask ones, VertexMask twos)
    : codes_(static_cast<std::size_t>(n), 0), ones_(ones), twos_(twos) {
    if (ones & twos) throw InputError("marking: a vertex cannot be both 1- and 2-marked");
    for (Vertex v = 0; v < n; ++v) codes_[static_cast<std::size_t>(v)] = (ones & bit(v)) ? 1 : (twos & bit(v)) ? 2 : 0;
    if (n < 64 && ((ones | twos) >> n)) throw InputError("marking: marked vertex out of range");
}

Marking::Marking(const std::vector<int>& codes) : codes_(codes.size(), 0) {
    if (codes.size() > 64) throw InputError("marking: too many vertices");
    for (std::size_t v = 0; v < codes.size(); ++v) {
        const int c = codes[v];
        if (c < 0 || c > 2) throw InputError("marking values must be 0, 1 or 2");
        codes_[v] = static_cast<std::uint8_t>(c);
        if (c == 1) ones_ |= bit(static_cast<Vertex>(v));
        if (c == 2) twos_ |= bit(static_cast<Vertex>(v));
    }
}

int Marking::i() const noexcept { return std::popcount(ones_ | twos_); }
int Marking::j() const noexcept { return std::popcount(twos_); }

std::string Marking::to_string() const {
    std::string s = "(";
    for (std::size_t v = 0; v < codes_.size(); ++v) {
        if (v) s += ",";
        s += static_cast<char>('0' + codes_[v]);
    }
    return s + ")";
}

std::vector<std::pair<Marking, int>> apply_d(const Marking& m) {
    std::vector<std::pair<Marking, int>> out;
    for (VertexMask rest = m.ones(); rest; rest &= rest - 1) {
        const Vertex v = std::countr_zero(rest);
        out.emplace_back(Marking(m.vertex_count(), m.ones() & ~bit(v), m.twos()), marking_sign(m.ones(), v));
    }
    return out;
}

std::vector<std::pair<Marking, int>> apply_delta(const Marking& m) {
    std::vector<std::pair<Marking, int>> out;
    for (VertexMask rest = m.ones(); rest; rest &= rest - 1) {
        const Vertex v = std::countr_zero(rest);
        out.emplace_back(Marking(m.vertex_count(), m.ones() & ~bit(v), m.twos() | bit(v)), marking_sign(m.ones(), v));
    }
    return out;
}

BigradedComplex::BigradedComplex(const Graph& g, int r, BuildOptions opts) : g_(g), r_(r) {
    if (r < 1) throw InputError("r must be at least 1");
    if (g.vertex_count() > kMaxMarkingVertices)
        throw InputError("marking complexes support at most " + std::to_string(kMaxMarkingVertices) + " vertices");
    const int n = g.vertex_count();
    auto supports = enumerate_r_independent_masks(g, r);
    for (auto s : supports) top_ = std::max(top_, std::popcount(s));
    const std::size_t side = static_cast<std::size_t>(top_ + 2);
    cells_.assign(side, std::vector<Cell>(side));

    // Every subset of the support can carry the 2-marks.
    for (VertexMask s : supports) {
        const int i = std::popcount(s);
        for (VertexMask twos = s;; twos = (twos - 1) & s) {
            cells_[static_cast<std::size_t>(i)][static_cast<std::size_t>(std::popcount(twos))].basis.emplace_back(
                n, s & ~twos, twos);
            if (twos == 0) break;
        }
    }
    for (auto& row : cells_)
        for (auto& c : row) {
            std::vector<std::pair<std::pair<std::vector<Vertex>, std::vector<Vertex>>, std::size_t>> keyed;
            keyed.reserve(c.basis.size());
            for (std::size_t a = 0; a < c.basis.size(); ++a)
                keyed.push_back({{to_list(c.basis[a].twos()), to_list(c.basis[a].ones())}, a});
            std::sort(keyed.begin(), keyed.end());
            std::vector<Marking> sorted;
            sorted.reserve(c.basis.size());
            for (auto& k : keyed) sorted.push_back(std::move(c.basis[k.second]));
            c.basis = std::move(sorted);
            for (std::size_t a = 0; a < c.basis.size(); ++a) c.index[key(c.basis[a].ones(), c.basis[a].twos())] = a;
        }

    auto fill = [&](int i, int j, int ti, int tj, bool is_delta) {
        const std::size_t rows = dim(ti, tj), cols = dim(i, j);
        IntMatrix m(rows, cols);
        if (rows && cols) {
            const Cell& target = cells_[static_cast<std::size_t>(ti)][static_cast<std::size_t>(tj)];
            const auto& src = basis(i, j);
            for (std::size_t a = 0; a < src.size(); ++a)
                for (auto& [image, sign] : is_delta ? apply_delta(src[a]) : apply_d(src[a]))
                    m(target.index.at(key(image.ones(), image.twos())), a) = sign;
        }
        return m;
    };
    const int last = top_ + 1;
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int i = 0; i <= last; ++i)
        for (int j = 0; j <= last; ++j) {
            Cell& c = cells_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            c.d = i > 0 ? fill(i, j, i - 1, j, false) : IntMatrix(0, dim(i, j));
            c.delta = j < last ? fill(i, j, i, j + 1, true) : IntMatrix(0, dim(i, j));
        }

    if (opts.verify_identities)
        if (auto failure = identity_failure()) throw ContractViolation(*failure);
}

const BigradedComplex::Cell* BigradedComplex::cell(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(cells_.size()) || j >= static_cast<int>(cells_.size())) return nullptr;
    return &cells_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::size_t BigradedComplex::dim(int i, int j) const {
    const Cell* c = cell(i, j);
    return c ? c->basis.size() : 0;
}

const std::vector<Marking>& BigradedComplex::basis(int i, int j) const {
    static const std::vector<Marking> none;
    const Cell* c = cell(i, j);
    return c ? c->basis : none;
}

std::optional<std::size_t> BigradedComplex::index_of(int i, int j, const Marking& m) const {
    const Cell* c = cell(i, j);
    if (!c) return std::nullopt;
    auto it = c->index.find(key(m.ones(), m.twos()));
    if (it == c->index.end()) return std::nullopt;
    return it->second;
}

IntVector BigradedComplex::unit(const Marking& m) const {
    auto idx = index_of(m.i(), m.j(), m);
    if (!idx) throw InputError("marking " + m.to_string() + " is not a basis element of this complex");
    IntVector v(dim(m.i(), m.j()));
    v[*idx] = 1;
    return v;
}

const IntMatrix& BigradedComplex::d(int i, int j) const {
    static const IntMatrix none;
    const Cell* c = cell(i, j);
    return c ? c->d : none;
}

const IntMatrix& BigradedComplex::delta(int i, int j) const {
    static const IntMatrix none;
    const Cell* c = cell(i, j);
    return c ? c->delta : none;
}

std::optional<std::string> BigradedComplex::identity_failure() const {
    auto first_nonzero = [&](const IntMatrix& m, int i, int j, int ti, int tj, const char* what) -> std::optional<std::string> {
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b)
                if (!m(a, b).is_zero()) {
                    std::ostringstream os;
                    os << what << " fails at T(" << i << "," << j << "): " << basis(i, j)[b].to_string() << " -> "
                       << basis(ti, tj)[a].to_string() << " with coefficient " << m(a, b);
                    return os.str();
                }
        return std::nullopt;
    };
    for (int i = 0; i <= top_; ++i)
        for (int j = 0; j <= i; ++j) {
            if (i >= 2)
                if (auto f = first_nonzero(d(i - 1, j) * d(i, j), i, j, i - 2, j, "d^2 = 0")) return f;
            if (j + 2 <= i)
                if (auto f = first_nonzero(delta(i, j + 1) * delta(i, j), i, j, i, j + 2, "delta^2 = 0")) return f;
            if (i >= 1 && j + 1 <= i - 1)
                if (auto f = first_nonzero(d(i, j + 1) * delta(i, j) + delta(i - 1, j) * d(i, j), i, j, i - 1, j + 1,
                                           "d delta + delta d = 0"))
                    return f;
        }
    return std::nullopt;
}

std::size_t total_offset(const BigradedComplex& b, int i, int j) {
    std::size_t off = 0;
    for (int jj = 0; jj < j; ++jj) off += b.dim(i - j + jj, jj);
    return off;
}

ChainComplex total_complex(const BigradedComplex& b) {
    const int top = b.top();
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
    std::vector<ChainBlock> blocks;
    for (int n = 0; n <= top; ++n)
        for (int j = 0; n + j <= top; ++j) {
            auto& l = labels[static_cast<std::size_t>(n)];
            ChainBlock blk;
            blk.name = "T(" + std::to_string(n + j) + "," + std::to_string(j) + ")";
            blk.min_degree = n;
            blk.offsets.push_back(l.size());
            blk.sizes.push_back(b.dim(n + j, j));
            for (const auto& m : b.basis(n + j, j)) l.push_back(m.to_string());
            blocks.push_back(std::move(blk));
        }
    std::vector<IntMatrix> boundaries;
    for (int n = 1; n <= top; ++n) {
        IntMatrix D(labels[static_cast<std::size_t>(n - 1)].size(), labels[static_cast<std::size_t>(n)].size());
        auto place = [&](const IntMatrix& m, std::size_t r0, std::size_t c0) {
            for (std::size_t a = 0; a < m.rows(); ++a)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (!m(a, c).is_zero()) D(r0 + a, c0 + c) = m(a, c);
        };
        for (int j = 0; n + j <= top; ++j) {
            const int i = n + j;
            const std::size_t col0 = total_offset(b, i, j);
            place(b.d(i, j), total_offset(b, i - 1, j), col0);
            if (b.dim(i, j + 1)) place(b.delta(i, j), total_offset(b, i, j + 1), col0);
        }
        boundaries.push_back(std::move(D));
    }
    ChainComplex out(0, std::move(labels), std::move(boundaries), false);
    out.set_blocks(std::move(blocks));
    return out;
}

ChainComplex column_complex(const BigradedComplex& b, int j) {
    if (j < 0 || j > b.top()) return ChainComplex();
    std::vector<std::vector<std::string>> labels;
    std::vector<IntMatrix> boundaries;
    for (int i = j; i <= b.top(); ++i) {
        labels.emplace_back();
        for (const auto& m : b.basis(i, j)) labels.back().push_back(m.to_string());
        if (i > j) boundaries.push_back(b.d(i, j));
    }
    return ChainComplex(j, std::move(labels), std::move(boundaries), false);
}

ChainComplex row_complex(const BigradedComplex& b, int i) {
    if (i < 0 || i > b.top()) return ChainComplex();
    std::vector<std::vector<std::string>> labels;
    std::vector<IntMatrix> boundaries;
    // degree n = i - j runs 0..i, i.e. j runs i..0
    for (int n = 0; n <= i; ++n) {
        const int j = i - n;
        labels.emplace_back();
        for (const auto& m : b.basis(i, j)) labels.back().push_back(m.to_string());
        if (n > 0) boundaries.push_back(b.delta(i, j));
    }
    return ChainComplex(0, std::move(labels), std::move(boundaries), false);
}

std::vector<SplittingSummand> splitting_decomposition(const BigradedComplex& b, int j) {
    if (b.r() != 1) throw InputError("the splitting is only available for r = 1");
    const Graph& g = b.graph();
    std::vector<SplittingSummand> out;
    if (j < 0 || j > b.top()) return out;
    std::vector<std::size_t> cursor(static_cast<std::size_t>(b.top() + 1), 0);
    for (const VertexSet& u : enumerate_r_independent_sets(g, 1, j)) {
        SplittingSummand s;
        s.U = u;
        s.remainder = delete_vertices(g, closed_neighborhood(g, u));
        s.complex = independence_chain_complex(s.remainder.graph, 1);
        const VertexMask twos = u.mask();
        for (int k = 0; k <= s.complex.max_degree(); ++k) {
            const int i = j + k;
            const std::size_t off = cursor[static_cast<std::size_t>(i)];
            s.offset_in_column.push_back(off);
            // Bijection: the k-set I of the remainder <-> 1-marks at original(I), 2-marks at U.
            const auto& col = b.basis(i, j);
            const auto& sets = s.complex.labels(k);
            if (off + sets.size() > col.size()) throw ContractViolation("splitting: column basis exhausted at U = " + u.to_string());
            for (std::size_t a = 0; a < sets.size(); ++a) {
                const Marking& m = col[off + a];
                VertexMask image = 0;
                for (Vertex v : VertexSet::from_mask(m.ones())) {
                    const Vertex nv = s.remainder.relabel[static_cast<std::size_t>(v)];
                    if (nv < 0) throw ContractViolation("splitting: marking " + m.to_string() + " meets N[U]");
                    image |= bit(nv);
                }
                if (m.twos() != twos || VertexSet::from_mask(image).to_string() != sets[a])
                    throw ContractViolation("splitting: basis bijection broken at " + m.to_string() + " for U = " + u.to_string());
            }
            cursor[static_cast<std::size_t>(i)] += sets.size();
        }
        out.push_back(std::move(s));
    }
    for (int i = j; i <= b.top(); ++i)
        if (cursor[static_cast<std::size_t>(i)] != b.dim(i, j))
            throw ContractViolation("splitting: summand sizes do not add up at T(" + std::to_string(i) + "," + std::to_string(j) + ")");

    // d is block diagonal and each block is the remainder's boundary.
    for (int i = j + 1; i <= b.top(); ++i) {
        const IntMatrix& dm = b.d(i, j);
        IntMatrix assembled(dm.rows(), dm.cols());
        for (const auto& s : out) {
            const int k = i - j;
            if (k > s.complex.max_degree()) continue;
            const IntMatrix& blk = s.complex.stored_boundary(k);
            const std::size_t r0 = s.offset_in_column[static_cast<std::size_t>(k - 1)];
            const std::size_t c0 = s.offset_in_column[static_cast<std::size_t>(k)];
            for (std::size_t a = 0; a < blk.rows(); ++a)
                for (std::size_t c = 0; c < blk.cols(); ++c) assembled(r0 + a, c0 + c) = blk(a, c);
        }
        if (!(assembled == dm))
            throw ContractViolation("splitting: column differential differs from the block sum at T(" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    }
    return out;
}

RowCheck delta_column_check(const BigradedComplex& b, int i) {
    RowCheck rc;
    rc.i = i;
    const ChainComplex row = row_complex(b, i);
    const GradedHomology h = homology_groups(row);
    for (int n = h.min_degree; n <= h.max_degree(); ++n) {
        AbelianGroup grp = h.at(n);
        if (grp.is_zero()) continue;
        const int j = i - n;
        rc.groups.emplace_back(j, grp);
        const bool expected = i == 0 && j == 0 && grp.free_rank == 1 && grp.torsion.empty();
        if (!expected) {
            rc.pass = false;
            if (rc.detail.empty())
                rc.detail = "H(T(" + std::to_string(i) + ",*), delta) at j = " + std::to_string(j) + " is " + grp.to_string();
        }
    }
    if (i == 0 && rc.groups.empty()) {
        rc.pass = false;
        rc.detail = "H(T(0,*), delta) should be Z at j = 0";
    }
    return rc;
}

}  // namespace indhom
