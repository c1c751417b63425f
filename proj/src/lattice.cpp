#include "indhom/lattice.hpp"

#include <sstream>

#include "indhom/echelon.hpp"
#include "indhom/error.hpp"
#include "indhom/smith.hpp"

namespace indhom {

Lattice Lattice::from_rows(const IntMatrix& generators, std::size_t ambient_dim) {
    if (generators.cols() < ambient_dim) throw std::invalid_argument("lattice generators narrower than ambient space");
    Lattice l(ambient_dim);
    l.payload_dim_ = generators.cols() - ambient_dim;
    IntMatrix work = generators;
    EchelonResult ech = echelon_reduce(work, ambient_dim, default_exec());
    l.rows_ = work.row_block(0, ech.rank);
    l.pivots_ = std::move(ech.pivot_cols);
    return l;
}

Lattice Lattice::from_columns(const IntMatrix& generators) { return from_rows(generators.transpose(), generators.rows()); }

IntVector Lattice::basis_vector(std::size_t i) const {
    auto r = rows_.row(i);
    return IntVector(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(ambient_dim_));
}

IntVector Lattice::basis_payload(std::size_t i) const {
    auto r = rows_.row(i);
    return IntVector(r.begin() + static_cast<std::ptrdiff_t>(ambient_dim_), r.end());
}

IntMatrix Lattice::basis_matrix() const { return rows_.col_block(0, ambient_dim_); }

std::optional<IntVector> Lattice::coordinates(std::span<const Integer> x) const {
    if (x.size() != ambient_dim_) throw std::invalid_argument("lattice coordinates: vector has wrong length");
    IntVector residual(x.begin(), x.end());
    IntVector coords(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::size_t p = pivots_[i];
        if (residual[p].is_zero()) continue;
        const Integer& lead = rows_(i, p);
        if (!divides(lead, residual[p])) return std::nullopt;
        coords[i] = exact_div(residual[p], lead);
        auto row = rows_.row(i);
        for (std::size_t j = p; j < ambient_dim_; ++j)
            if (!row[j].is_zero()) residual[j].submul(coords[i], row[j]);
    }
    if (!is_zero(residual)) return std::nullopt;
    return coords;
}

bool Lattice::contains(const Lattice& other) const {
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

IntVector Lattice::combine(std::span<const Integer> coords) const {
    IntVector out(ambient_dim_);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        auto row = rows_.row(i);
        for (std::size_t j = 0; j < ambient_dim_; ++j)
            if (!row[j].is_zero()) out[j].addmul(coords[i], row[j]);
    }
    return out;
}

IntVector Lattice::combine_payload(std::span<const Integer> coords) const {
    IntVector out(payload_dim_);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        auto row = rows_.row(i);
        for (std::size_t j = 0; j < payload_dim_; ++j)
            if (!row[ambient_dim_ + j].is_zero()) out[j].addmul(coords[i], row[ambient_dim_ + j]);
    }
    return out;
}

Lattice Lattice::sum(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim_ != b.ambient_dim_) throw std::invalid_argument("lattice sum: ambient dimensions differ");
    IntMatrix gens(a.rank() + b.rank(), a.ambient_dim_);
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim_; ++j) gens(i, j) = a.rows_(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim_; ++j) gens(a.rank() + i, j) = b.rows_(i, j);
    return from_rows(gens, a.ambient_dim_);
}

namespace {

std::string group_string(const AbelianGroup& g, const char* zed, bool unicode) {
    if (g.is_zero()) return "0";
    static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::ostringstream os;
    bool first = true;
    for (const auto& t : g.torsion) {
        os << (first ? "" : (unicode ? " ⊕ " : " + ")) << zed << "/" << t;
        first = false;
    }
    if (g.free_rank > 0) {
        os << (first ? "" : (unicode ? " ⊕ " : " + ")) << zed;
        if (g.free_rank > 1) {
            std::string digits = std::to_string(g.free_rank);
            if (unicode)
                for (char c : digits) os << sup[c - '0'];
            else
                os << "^" << digits;
        }
    }
    return os.str();
}

}  // namespace

std::string AbelianGroup::to_string() const { return group_string(*this, "Z", false); }
std::string AbelianGroup::to_unicode() const { return group_string(*this, "ℤ", true); }

Subquotient::Subquotient(Lattice numerator, const std::vector<IntVector>& denominator_generators)
    : numerator_(std::move(numerator)) {
    const std::size_t k = numerator_.rank();
    // Denominator in numerator coordinates, reduced to a basis first.
    IntMatrix coord_rows(denominator_generators.size(), k);
    for (std::size_t g = 0; g < denominator_generators.size(); ++g) {
        auto c = numerator_.coordinates(denominator_generators[g]);
        if (!c) throw ContractViolation("subquotient: denominator generator outside numerator lattice");
        for (std::size_t i = 0; i < k; ++i) coord_rows(g, i) = (*c)[i];
    }
    EchelonResult ech = echelon_reduce(coord_rows, default_exec());
    IntMatrix rel = coord_rows.row_block(0, ech.rank).transpose();  // k x rank_B

    SmithForm snf = smith_normal_form_left(rel);
    std::vector<std::size_t> torsion_idx, free_idx;
    for (std::size_t i = 0; i < k; ++i) {
        if (i < snf.rank) {
            if (!snf.diagonal[i].is_one()) torsion_idx.push_back(i);
        } else {
            free_idx.push_back(i);
        }
    }
    std::vector<std::size_t> order = torsion_idx;
    order.insert(order.end(), free_idx.begin(), free_idx.end());

    group_.ambient_dim = numerator_.ambient_dim();
    group_.free_rank = free_idx.size();
    projector_ = IntMatrix(order.size(), k);
    for (std::size_t g = 0; g < order.size(); ++g) {
        const std::size_t i = order[g];
        moduli_.push_back(i < snf.rank ? snf.diagonal[i] : Integer(0));
        if (i < snf.rank) group_.torsion.push_back(snf.diagonal[i]);
        for (std::size_t j = 0; j < k; ++j) projector_(g, j) = snf.U(i, j);
        IntVector lc(k);
        for (std::size_t j = 0; j < k; ++j) lc[j] = k ? snf.U_inv(j, i) : Integer(0);
        group_.generators.push_back(numerator_.combine(lc));
        payloads_.push_back(numerator_.combine_payload(lc));
        lift_coords_.push_back(std::move(lc));
    }
}

IntVector Subquotient::normalize(IntVector coords) const {
    for (std::size_t g = 0; g < coords.size(); ++g)
        if (!moduli_[g].is_zero()) coords[g] = mod(coords[g], moduli_[g]);
    return coords;
}

IntVector Subquotient::project(std::span<const Integer> x) const {
    auto c = numerator_.coordinates(x);
    if (!c) throw ContractViolation("subquotient projection: vector outside numerator lattice");
    return normalize(projector_ * std::span<const Integer>(*c));
}

bool Subquotient::is_trivial_class(std::span<const Integer> x) const {
    auto c = numerator_.coordinates(x);
    if (!c) return false;
    return is_zero(normalize(projector_ * std::span<const Integer>(*c)));
}

IntVector Subquotient::lift(std::span<const Integer> coords) const {
    IntVector out(numerator_.ambient_dim());
    for (std::size_t g = 0; g < coords.size(); ++g) {
        if (coords[g].is_zero()) continue;
        const auto& v = group_.generators[g];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) out[j].addmul(coords[g], v[j]);
    }
    return out;
}

IntVector Subquotient::lift_payload(std::span<const Integer> coords) const {
    IntVector out(numerator_.payload_dim());
    for (std::size_t g = 0; g < coords.size(); ++g) {
        if (coords[g].is_zero()) continue;
        const auto& v = payloads_[g];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) out[j].addmul(coords[g], v[j]);
    }
    return out;
}

AbelianGroup direct_sum(const std::vector<AbelianGroup>& parts) {
    AbelianGroup out;
    std::vector<Integer> t;
    for (const auto& g : parts) {
        out.free_rank += g.free_rank;
        out.ambient_dim += g.ambient_dim;
        t.insert(t.end(), g.torsion.begin(), g.torsion.end());
    }
    if (t.empty()) return out;
    IntMatrix diag(t.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i) diag(i, i) = t[i];
    for (const auto& d : elementary_divisors(diag))
        if (!d.is_one()) out.torsion.push_back(d);
    return out;
}

Subquotient subquotient(const IntMatrix& numerator_columns, const IntMatrix& denominator_columns) {
    if (numerator_columns.rows() != denominator_columns.rows() && denominator_columns.cols() > 0)
        throw std::invalid_argument("subquotient: ambient dimensions differ");
    return Subquotient(Lattice::from_columns(numerator_columns), denominator_columns.columns());
}

}  // namespace indhom
