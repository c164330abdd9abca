#pragma once

#include "facelab/int_matrix.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace facelab {

struct Pivot {
    std::size_t row = 0;
    std::size_t col = 0;
    Integer value;  // positive over Z, one over Z/p
};

namespace detail {
class RowStore;
}

/// Sparse elimination of an integer (or Z/p) matrix to diagonal form.
///
/// Pivots are taken in two phases: first every unit entry reachable in a
/// column sweep (smallest row wins), then the remaining block by global
/// smallest norm with a Markowitz tiebreak. Row and column operations are
/// unimodular; when tracking is on, U, U^{-1}, V, V^{-1} are maintained so
/// that U*A*V has exactly the recorded pivots as nonzero entries.
class SmithReduction {
public:
    SmithReduction(const IntMatrix& a, Domain domain, bool track_transforms);
    ~SmithReduction();
    SmithReduction(SmithReduction&&) noexcept;
    SmithReduction& operator=(SmithReduction&&) noexcept;

    const std::vector<Pivot>& pivots() const { return pivots_; }
    std::size_t rank() const { return pivots_.size(); }
    const Domain& domain() const { return domain_; }
    bool tracking() const { return static_cast<bool>(u_); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Combines pivots pairwise (gcd/lcm) until each value divides the
    /// next one, keeping transforms consistent.
    void make_divisibility_chain();

    IntMatrix u() const;
    IntMatrix u_inverse() const;
    IntMatrix v() const;
    IntMatrix v_inverse() const;

    std::vector<Integer> apply_u(const std::vector<Integer>& x) const;
    std::vector<Integer> u_inverse_column(std::size_t i) const;
    std::vector<Integer> apply_u_inverse(const std::vector<Integer>& y) const;
    std::vector<Integer> v_column(std::size_t c) const;
    std::vector<Integer> apply_v_inverse(const std::vector<Integer>& w) const;

private:
    void eliminate_at(std::size_t r, std::size_t c);
    void row_axpy(std::size_t dst, const Integer& q, std::size_t src);
    void col_axpy(std::size_t dst, const Integer& q, std::size_t src);
    void require_tracking() const;

    Domain domain_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::unique_ptr<detail::RowStore> a_;
    std::unique_ptr<detail::RowStore> u_;       // U by rows
    std::unique_ptr<detail::RowStore> u_inv_t_; // U^{-1} by columns
    std::unique_ptr<detail::RowStore> v_t_;     // V by columns
    std::unique_ptr<detail::RowStore> v_inv_;   // V^{-1} by rows
    std::vector<char> active_row_;
    std::vector<char> active_col_;
    std::vector<Pivot> pivots_;
};

struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

/// U*A*V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...),
/// d_i > 0 and d_i | d_{i+1}. Deterministic for identical input.
SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero diagonal of the Smith form (over Z/p: all ones, i.e. the rank).
std::vector<Integer> invariant_factors(const IntMatrix& a, Domain domain = Domain::integers());

/// Rewrites nonzero diagonal entries into an invariant-factor chain
/// (same abelian group), sorted ascending.
std::vector<Integer> to_invariant_factors(std::vector<Integer> diagonal);

}  // namespace facelab
