#include "indhom/smith.hpp"

#include <stdexcept>

namespace indhom {

namespace {

// Dense SNF engine. Row operations are mirrored on U, and inversely on U_inv
// (as column operations); column operations likewise on V and V_inv.
class SmithEngine {
public:
    SmithEngine(const IntMatrix& m, bool track_left, bool track_right)
        : d_(m), left_(track_left), right_(track_right) {
        if (left_) {
            u_ = IntMatrix::identity(m.rows());
            u_inv_ = IntMatrix::identity(m.rows());
        }
        if (right_) {
            v_ = IntMatrix::identity(m.cols());
            v_inv_ = IntMatrix::identity(m.cols());
        }
    }

    std::size_t run() {
        const std::size_t limit = std::min(d_.rows(), d_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!select_pivot(t)) break;
            for (;;) {
                bool clean = clear_column(t);
                clean = clear_row(t) && clean;
                if (!clean) {
                    reselect_in_cross(t);
                    continue;
                }
                if (fix_divisibility(t)) continue;
                break;
            }
            if (d_(t, t).sign() < 0) negate_row(t);
        }
        return t;
    }

    IntMatrix d_, u_, u_inv_, v_, v_inv_;

private:
    bool select_pivot(std::size_t t) {
        std::size_t br = d_.rows(), bc = d_.cols();
        for (std::size_t r = t; r < d_.rows(); ++r) {
            for (std::size_t c = t; c < d_.cols(); ++c) {
                const Integer& v = d_(r, c);
                if (v.is_zero()) continue;
                if (br == d_.rows() || compare_abs(v, d_(br, bc)) < 0) {
                    br = r;
                    bc = c;
                    if (v.is_unit()) break;
                }
            }
            if (br != d_.rows() && d_(br, bc).is_unit()) break;
        }
        if (br == d_.rows()) return false;
        swap_rows(t, br);
        swap_cols(t, bc);
        return true;
    }

    // Brings the smallest nonzero entry of row t / column t (beyond t) to (t,t).
    void reselect_in_cross(std::size_t t) {
        std::size_t br = t, bc = t;
        for (std::size_t r = t + 1; r < d_.rows(); ++r)
            if (!d_(r, t).is_zero() && compare_abs(d_(r, t), d_(br, bc)) < 0) {
                br = r;
                bc = t;
            }
        for (std::size_t c = t + 1; c < d_.cols(); ++c)
            if (!d_(t, c).is_zero() && compare_abs(d_(t, c), d_(br, bc)) < 0) {
                br = t;
                bc = c;
            }
        swap_rows(t, br);
        swap_cols(t, bc);
    }

    bool clear_column(std::size_t t) {
        bool clean = true;
        for (std::size_t r = t + 1; r < d_.rows(); ++r) {
            if (d_(r, t).is_zero()) continue;
            Integer q = floor_div(d_(r, t), d_(t, t));
            row_submul(r, t, q);
            if (!d_(r, t).is_zero()) clean = false;
        }
        return clean;
    }

    bool clear_row(std::size_t t) {
        bool clean = true;
        for (std::size_t c = t + 1; c < d_.cols(); ++c) {
            if (d_(t, c).is_zero()) continue;
            Integer q = floor_div(d_(t, c), d_(t, t));
            col_submul(c, t, q);
            if (!d_(t, c).is_zero()) clean = false;
        }
        return clean;
    }

    // If some entry of the trailing block is not divisible by the pivot, adds
    // its row to row t so the next clearing round shrinks the pivot.
    bool fix_divisibility(std::size_t t) {
        const Integer& p = d_(t, t);
        if (p.is_unit()) return false;
        for (std::size_t r = t + 1; r < d_.rows(); ++r)
            for (std::size_t c = t + 1; c < d_.cols(); ++c)
                if (!d_(r, c).is_zero() && !divides(p, d_(r, c))) {
                    row_submul(t, r, Integer(-1));
                    return true;
                }
        return false;
    }

    // row_a -= q * row_b
    void row_submul(std::size_t a, std::size_t b, const Integer& q) {
        auto ra = d_.row(a);
        auto rb = d_.row(b);
        for (std::size_t j = 0; j < d_.cols(); ++j)
            if (!rb[j].is_zero()) ra[j].submul(q, rb[j]);
        if (!left_) return;
        auto ua = u_.row(a);
        auto ub = u_.row(b);
        for (std::size_t j = 0; j < u_.cols(); ++j)
            if (!ub[j].is_zero()) ua[j].submul(q, ub[j]);
        // inverse: col_b += q * col_a on U_inv
        for (std::size_t i = 0; i < u_inv_.rows(); ++i)
            if (!u_inv_(i, a).is_zero()) u_inv_(i, b).addmul(q, u_inv_(i, a));
    }

    // col_a -= q * col_b
    void col_submul(std::size_t a, std::size_t b, const Integer& q) {
        for (std::size_t i = 0; i < d_.rows(); ++i)
            if (!d_(i, b).is_zero()) d_(i, a).submul(q, d_(i, b));
        if (!right_) return;
        for (std::size_t i = 0; i < v_.rows(); ++i)
            if (!v_(i, b).is_zero()) v_(i, a).submul(q, v_(i, b));
        // inverse: row_b += q * row_a on V_inv
        auto ra = v_inv_.row(a);
        auto rb = v_inv_.row(b);
        for (std::size_t j = 0; j < v_inv_.cols(); ++j)
            if (!ra[j].is_zero()) rb[j].addmul(q, ra[j]);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        d_.swap_rows(a, b);
        if (!left_) return;
        u_.swap_rows(a, b);
        for (std::size_t i = 0; i < u_inv_.rows(); ++i) std::swap(u_inv_(i, a), u_inv_(i, b));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
        if (!right_) return;
        for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
        v_inv_.swap_rows(a, b);
    }

    void negate_row(std::size_t a) {
        for (auto& x : d_.row(a))
            if (!x.is_zero()) x = -x;
        if (!left_) return;
        for (auto& x : u_.row(a))
            if (!x.is_zero()) x = -x;
        for (std::size_t i = 0; i < u_inv_.rows(); ++i)
            if (!u_inv_(i, a).is_zero()) u_inv_(i, a) = -u_inv_(i, a);
    }

    bool left_;
    bool right_;
};

}  // namespace

SmithForm smith_normal_form_left(const IntMatrix& m) {
    SmithEngine engine(m, true, false);
    SmithForm out;
    out.rank = engine.run();
    for (std::size_t i = 0; i < out.rank; ++i) out.diagonal.push_back(engine.d_(i, i));
    out.D = std::move(engine.d_);
    out.U = std::move(engine.u_);
    out.U_inv = std::move(engine.u_inv_);
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithEngine engine(m, true, true);
    SmithForm out;
    out.rank = engine.run();
    for (std::size_t i = 0; i < out.rank; ++i) out.diagonal.push_back(engine.d_(i, i));
    out.D = std::move(engine.d_);
    out.U = std::move(engine.u_);
    out.U_inv = std::move(engine.u_inv_);
    out.V = std::move(engine.v_);
    out.V_inv = std::move(engine.v_inv_);
    return out;
}

std::vector<Integer> elementary_divisors(const IntMatrix& m) {
    // Work on whichever orientation has fewer rows to eliminate.
    IntMatrix work = m.rows() <= m.cols() ? m : m.transpose();
    EchelonResult ech = echelon_reduce(work, default_exec());
    bool unit_pivots = true;
    for (std::size_t i = 0; i < ech.rank; ++i)
        if (!work(i, ech.pivot_cols[i]).is_one()) unit_pivots = false;
    if (unit_pivots) return std::vector<Integer>(ech.rank, Integer(1));
    SmithEngine engine(work.row_block(0, ech.rank), false, false);
    std::size_t r = engine.run();
    std::vector<Integer> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(engine.d_(i, i));
    return out;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix work = m.rows() <= m.cols() ? m : m.transpose();
    return echelon_reduce(work, default_exec()).rank;
}

std::optional<IntVector> solve(const SmithForm& snf, std::span<const Integer> b) {
    if (b.size() != snf.U.cols()) throw std::invalid_argument("solve: right-hand side has wrong length");
    IntVector y = snf.U * b;
    IntVector z(snf.V.rows());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < snf.rank) {
            if (!divides(snf.diagonal[i], y[i])) return std::nullopt;
            z[i] = exact_div(y[i], snf.diagonal[i]);
        } else if (!y[i].is_zero()) {
            return std::nullopt;
        }
    }
    return snf.V * std::span<const Integer>(z);
}

std::optional<IntVector> solve(const IntMatrix& a, std::span<const Integer> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    return solve(smith_normal_form(a), b);
}

IntMatrix kernel_rows(const IntMatrix& a) {
    const std::size_t n = a.cols();
    IntMatrix work = IntMatrix::hcat(a.transpose(), IntMatrix::identity(n));
    EchelonResult ech = echelon_reduce(work, a.rows(), default_exec());
    IntMatrix basis(n - ech.rank, n);
    for (std::size_t k = ech.rank; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) basis(k - ech.rank, i) = work(k, a.rows() + i);
    return basis;
}

IntMatrix kernel_basis(const IntMatrix& a) { return kernel_rows(a).transpose(); }

IntMatrix image_basis(const IntMatrix& a) {
    IntMatrix work = a.transpose();
    EchelonResult ech = echelon_reduce(work, default_exec());
    return work.row_block(0, ech.rank).transpose();
}

}  // namespace indhom
