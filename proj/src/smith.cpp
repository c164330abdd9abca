#include "facelab/smith.hpp"

#include "facelab/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace facelab {
namespace detail {

struct Entry {
    std::uint32_t col;
    Integer value;
};

/// Row-major sparse store with an optional lazily-cleaned column index.
/// Column lists may hold stale rows; readers filter through find().
class RowStore {
public:
    RowStore(std::size_t rows, std::size_t cols, bool column_index)
        : rows_(rows), cols_(column_index ? cols : 0), indexed_(column_index) {}

    static RowStore identity(std::size_t n) {
        RowStore s(n, n, false);
        for (std::size_t i = 0; i < n; ++i) {
            s.rows_[i].push_back({static_cast<std::uint32_t>(i), Integer(1)});
        }
        return s;
    }

    std::vector<Entry>& row(std::size_t r) { return rows_[r]; }
    const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
    std::size_t row_count() const { return rows_.size(); }

    const Integer* find(std::size_t r, std::size_t c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::size_t col) { return e.col < col; });
        if (it == row.end() || it->col != c) {
            return nullptr;
        }
        return &it->value;
    }

    void set(std::size_t r, std::size_t c, Integer v) {
        auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::size_t col) { return e.col < col; });
        if (it != row.end() && it->col == c) {
            if (v == 0) {
                row.erase(it);
            } else {
                it->value = std::move(v);
            }
        } else if (v != 0) {
            row.insert(it, Entry{static_cast<std::uint32_t>(c), std::move(v)});
            if (indexed_) {
                cols_[c].push_back(static_cast<std::uint32_t>(r));
            }
        }
    }

    /// row[dst] += q * row[src]
    void axpy(std::size_t dst, const Integer& q, std::size_t src, const Domain& dom) {
        if (q == 0) {
            return;
        }
        const auto& a = rows_[dst];
        const auto& b = rows_[src];
        std::vector<Entry> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].col < a[i].col) {
                Integer v = dom.reduce(q * b[j].value);
                if (v != 0) {
                    if (indexed_) {
                        cols_[b[j].col].push_back(static_cast<std::uint32_t>(dst));
                    }
                    out.push_back(Entry{b[j].col, std::move(v)});
                }
                ++j;
            } else {
                Integer v = dom.reduce(a[i].value + q * b[j].value);
                if (v != 0) {
                    out.push_back(Entry{a[i].col, std::move(v)});
                }
                ++i;
                ++j;
            }
        }
        rows_[dst] = std::move(out);
    }

    void scale(std::size_t r, const Integer& s, const Domain& dom) {
        for (auto& e : rows_[r]) {
            e.value = dom.reduce(e.value * s);
        }
    }

    /// (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
    void combine(std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c,
                 const Integer& d, const Domain& dom) {
        std::vector<std::uint32_t> cols;
        for (const auto& e : rows_[i]) cols.push_back(e.col);
        for (const auto& e : rows_[j]) cols.push_back(e.col);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        std::vector<Entry> ni, nj;
        for (auto col : cols) {
            const Integer* x = find(i, col);
            const Integer* y = find(j, col);
            Integer xv = x ? *x : Integer(0);
            Integer yv = y ? *y : Integer(0);
            Integer u = dom.reduce(a * xv + b * yv);
            Integer w = dom.reduce(c * xv + d * yv);
            if (u != 0) ni.push_back(Entry{col, std::move(u)});
            if (w != 0) nj.push_back(Entry{col, std::move(w)});
        }
        if (indexed_) {
            for (const auto& e : ni) cols_[e.col].push_back(static_cast<std::uint32_t>(i));
            for (const auto& e : nj) cols_[e.col].push_back(static_cast<std::uint32_t>(j));
        }
        rows_[i] = std::move(ni);
        rows_[j] = std::move(nj);
    }

    /// Rows currently holding a nonzero in column c (deduplicated, ascending).
    std::vector<std::uint32_t> column(std::size_t c) {
        auto& list = cols_[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](std::uint32_t r) { return find(r, c) == nullptr; }),
                   list.end());
        return list;
    }

    std::size_t column_size_hint(std::size_t c) const { return cols_[c].size(); }

    IntMatrix to_matrix(std::size_t rows, std::size_t cols, bool transpose) const {
        std::vector<Triplet> t;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (const auto& e : rows_[r]) {
                if (transpose) {
                    t.push_back({e.col, r, e.value});
                } else {
                    t.push_back({r, e.col, e.value});
                }
            }
        }
        return IntMatrix::from_triplets(rows, cols, std::move(t));
    }

    std::vector<Integer> dense_row(std::size_t r, std::size_t width) const {
        std::vector<Integer> out(width);
        for (const auto& e : rows_[r]) out[e.col] = e.value;
        return out;
    }

    /// sum_r x[r] * row[r]
    std::vector<Integer> left_multiply(const std::vector<Integer>& x, std::size_t width,
                                       const Domain& dom) const {
        std::vector<Integer> out(width);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (x[r] == 0) continue;
            for (const auto& e : rows_[r]) out[e.col] += x[r] * e.value;
        }
        for (auto& v : out) v = dom.reduce(v);
        return out;
    }

    /// (row . x) for every row
    std::vector<Integer> right_multiply(const std::vector<Integer>& x, const Domain& dom) const {
        std::vector<Integer> out(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Integer acc = 0;
            for (const auto& e : rows_[r]) {
                if (x[e.col] != 0) acc += e.value * x[e.col];
            }
            out[r] = dom.reduce(acc);
        }
        return out;
    }

private:
    std::vector<std::vector<Entry>> rows_;
    std::vector<std::vector<std::uint32_t>> cols_;
    bool indexed_;
};

}  // namespace detail

using detail::RowStore;

SmithReduction::~SmithReduction() = default;
SmithReduction::SmithReduction(SmithReduction&&) noexcept = default;
SmithReduction& SmithReduction::operator=(SmithReduction&&) noexcept = default;

SmithReduction::SmithReduction(const IntMatrix& a, Domain domain, bool track_transforms)
    : domain_(domain), rows_(a.rows()), cols_(a.cols()) {
    a_ = std::make_unique<RowStore>(rows_, cols_, true);
    for (const auto& t : a.entries()) {
        a_->set(t.row, t.col, domain_.reduce(t.value));
    }
    if (track_transforms) {
        u_ = std::make_unique<RowStore>(RowStore::identity(rows_));
        u_inv_t_ = std::make_unique<RowStore>(RowStore::identity(rows_));
        v_t_ = std::make_unique<RowStore>(RowStore::identity(cols_));
        v_inv_ = std::make_unique<RowStore>(RowStore::identity(cols_));
    }
    active_row_.assign(rows_, 1);
    active_col_.assign(cols_, 1);

    // Phase 1: unit pivots, sparsest row first, sweeping columns until stable.
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!active_col_[c]) continue;
            std::size_t best = rows_;
            std::size_t best_len = std::numeric_limits<std::size_t>::max();
            for (auto r : a_->column(c)) {
                if (!active_row_[r]) continue;
                if (!domain_.is_unit(*a_->find(r, c))) continue;
                std::size_t len = a_->row(r).size();
                if (len < best_len) {
                    best_len = len;
                    best = r;
                }
            }
            if (best != rows_) {
                eliminate_at(best, c);
                progress = true;
            }
        }
    }

    // Phase 2: smallest norm overall, Markowitz tiebreak.
    for (;;) {
        std::size_t br = rows_, bc = cols_;
        Integer best_norm = 0;
        std::size_t best_cost = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!active_row_[r]) continue;
            const auto& row = a_->row(r);
            for (const auto& e : row) {
                Integer n = domain_.norm(e.value);
                if (br != rows_ && n > best_norm) continue;
                std::size_t col_len = std::max<std::size_t>(a_->column_size_hint(e.col), 1);
                std::size_t cost = (row.size() - 1) * (col_len - 1);
                if (br == rows_ || n < best_norm || cost < best_cost) {
                    br = r;
                    bc = e.col;
                    best_norm = n;
                    best_cost = cost;
                }
            }
        }
        if (br == rows_) break;
        eliminate_at(br, bc);
    }
}

void SmithReduction::row_axpy(std::size_t dst, const Integer& q, std::size_t src) {
    a_->axpy(dst, q, src, domain_);
    if (u_) {
        u_->axpy(dst, q, src, domain_);
        u_inv_t_->axpy(src, domain_.reduce(-q), dst, domain_);
    }
}

void SmithReduction::col_axpy(std::size_t dst, const Integer& q, std::size_t src) {
    // Only called when column src is zero outside the pivot row (see eliminate_at),
    // so the update on A touches a single entry and is done by the caller.
    if (v_t_) {
        v_t_->axpy(dst, q, src, domain_);
        v_inv_->axpy(src, domain_.reduce(-q), dst, domain_);
    }
}

void SmithReduction::eliminate_at(std::size_t r, std::size_t c) {
    for (;;) {
        // Column pass: clear column c below/above the pivot.
        Integer p = *a_->find(r, c);
        bool restart = false;
        for (auto i : a_->column(c)) {
            if (i == r || !active_row_[i]) continue;
            const Integer* ai = a_->find(i, c);
            if (!ai) continue;
            Integer q = domain_.quotient(*ai, p);
            if (q != 0) {
                row_axpy(i, domain_.reduce(-q), r);
            }
        }
        std::size_t nr = r;
        Integer nn = domain_.norm(p);
        for (auto i : a_->column(c)) {
            if (i == r || !active_row_[i]) continue;
            Integer n = domain_.norm(*a_->find(i, c));
            if (n < nn) {
                nn = n;
                nr = i;
            }
        }
        if (nr != r) {
            r = nr;
            continue;
        }
        // Column c is now zero outside row r: clear row r with column operations.
        std::vector<std::pair<std::size_t, Integer>> updates;
        for (const auto& e : a_->row(r)) {
            if (e.col == c) continue;
            Integer q = domain_.quotient(e.value, p);
            updates.emplace_back(e.col, std::move(q));
        }
        std::size_t nc = c;
        for (auto& [j, q] : updates) {
            Integer rem = *a_->find(r, j);
            if (q != 0) {
                rem = domain_.reduce(rem - q * p);
                col_axpy(j, domain_.reduce(-q), c);
                a_->set(r, j, rem);
            }
            if (rem != 0 && domain_.norm(rem) < nn) {
                nn = domain_.norm(rem);
                nc = j;
            }
        }
        if (nc != c) {
            c = nc;
            restart = true;
        }
        if (!restart) {
            bool clean = a_->row(r).size() == 1;
            if (!clean) {
                // Remainders no smaller than the pivot cannot occur, but keep going
                // defensively by re-pivoting on the smallest entry left.
                for (const auto& e : a_->row(r)) {
                    if (e.col != c) {
                        c = e.col;
                        break;
                    }
                }
                continue;
            }
            break;
        }
    }
    Integer p = *a_->find(r, c);
    Integer s = domain_.normalizer(p);
    if (s != 1) {
        a_->scale(r, s, domain_);
        if (u_) {
            u_->scale(r, s, domain_);
            u_inv_t_->scale(r, domain_.unit_inverse(s), domain_);
        }
        p = *a_->find(r, c);
    }
    active_row_[r] = 0;
    active_col_[c] = 0;
    pivots_.push_back(Pivot{r, c, p});
}

void SmithReduction::make_divisibility_chain() {
    if (domain_.is_field() || pivots_.size() < 2) {
        return;
    }
    std::stable_sort(pivots_.begin(), pivots_.end(),
                     [](const Pivot& x, const Pivot& y) { return x.value < y.value; });
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        for (std::size_t j = i + 1; j < pivots_.size(); ++j) {
            Integer a = pivots_[i].value;
            Integer b = pivots_[j].value;
            if (b % a == 0) continue;
            Integer s, t;
            Integer g = extended_gcd(a, b, s, t);
            std::size_t ri = pivots_[i].row, rj = pivots_[j].row;
            std::size_t ci = pivots_[i].col, cj = pivots_[j].col;
            if (u_) {
                v_t_->axpy(ci, 1, cj, domain_);
                v_inv_->axpy(cj, -1, ci, domain_);
                Integer bg = b / g, ag = a / g;
                u_->combine(ri, rj, s, t, -bg, ag, domain_);
                u_inv_t_->combine(ri, rj, ag, bg, -t, s, domain_);
                Integer lambda = -t * bg;
                v_t_->axpy(cj, lambda, ci, domain_);
                v_inv_->axpy(ci, -lambda, cj, domain_);
            }
            Integer l = a / g * b;
            a_->set(ri, ci, g);
            a_->set(rj, cj, l);
            pivots_[i].value = g;
            pivots_[j].value = l;
        }
    }
}

void SmithReduction::require_tracking() const {
    if (!u_) {
        throw InternalError("Smith transforms requested but not tracked");
    }
}

IntMatrix SmithReduction::u() const {
    require_tracking();
    return u_->to_matrix(rows_, rows_, false);
}

IntMatrix SmithReduction::u_inverse() const {
    require_tracking();
    return u_inv_t_->to_matrix(rows_, rows_, true);
}

IntMatrix SmithReduction::v() const {
    require_tracking();
    return v_t_->to_matrix(cols_, cols_, true);
}

IntMatrix SmithReduction::v_inverse() const {
    require_tracking();
    return v_inv_->to_matrix(cols_, cols_, false);
}

std::vector<Integer> SmithReduction::apply_u(const std::vector<Integer>& x) const {
    require_tracking();
    return u_->right_multiply(x, domain_);
}

std::vector<Integer> SmithReduction::u_inverse_column(std::size_t i) const {
    require_tracking();
    return u_inv_t_->dense_row(i, rows_);
}

std::vector<Integer> SmithReduction::apply_u_inverse(const std::vector<Integer>& y) const {
    require_tracking();
    return u_inv_t_->left_multiply(y, rows_, domain_);
}

std::vector<Integer> SmithReduction::v_column(std::size_t c) const {
    require_tracking();
    return v_t_->dense_row(c, cols_);
}

std::vector<Integer> SmithReduction::apply_v_inverse(const std::vector<Integer>& w) const {
    require_tracking();
    return v_inv_->right_multiply(w, domain_);
}

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithReduction red(a, Domain::integers(), true);
    red.make_divisibility_chain();
    const auto& piv = red.pivots();
    std::vector<std::size_t> row_perm, col_perm;
    std::vector<char> used_r(a.rows(), 0), used_c(a.cols(), 0);
    for (const auto& p : piv) {
        row_perm.push_back(p.row);
        col_perm.push_back(p.col);
        used_r[p.row] = 1;
        used_c[p.col] = 1;
    }
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (!used_r[r]) row_perm.push_back(r);
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!used_c[c]) col_perm.push_back(c);

    std::vector<std::size_t> row_pos(a.rows()), col_pos(a.cols());
    for (std::size_t k = 0; k < row_perm.size(); ++k) row_pos[row_perm[k]] = k;
    for (std::size_t k = 0; k < col_perm.size(); ++k) col_pos[col_perm[k]] = k;

    std::vector<Triplet> ut, vt, dt;
    const IntMatrix u = red.u();
    const IntMatrix v = red.v();
    for (const auto& t : u.entries()) ut.push_back({row_pos[t.row], t.col, t.value});
    for (const auto& t : v.entries()) vt.push_back({t.row, col_pos[t.col], t.value});
    for (std::size_t k = 0; k < piv.size(); ++k) dt.push_back({k, k, piv[k].value});
    return SmithForm{IntMatrix::from_triplets(a.rows(), a.rows(), std::move(ut)),
                     IntMatrix::from_triplets(a.rows(), a.cols(), std::move(dt)),
                     IntMatrix::from_triplets(a.cols(), a.cols(), std::move(vt))};
}

std::vector<Integer> to_invariant_factors(std::vector<Integer> diagonal) {
    for (auto& d : diagonal) {
        if (d < 0) d = -d;
    }
    std::sort(diagonal.begin(), diagonal.end());
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
            if (diagonal[j] % diagonal[i] == 0) continue;
            Integer g = gcd(diagonal[i], diagonal[j]);
            Integer l = diagonal[i] / g * diagonal[j];
            diagonal[i] = g;
            diagonal[j] = l;
        }
    }
    return diagonal;
}

std::vector<Integer> invariant_factors(const IntMatrix& a, Domain domain) {
    SmithReduction red(a, domain, false);
    std::vector<Integer> diag;
    for (const auto& p : red.pivots()) diag.push_back(p.value);
    if (domain.is_field()) {
        return diag;
    }
    return to_invariant_factors(std::move(diag));
}

}  // namespace facelab
