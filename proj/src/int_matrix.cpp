#include "facelab/int_matrix.hpp"

#include "facelab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace facelab {

IntMatrix IntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries) {
    IntMatrix m(rows, cols);
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (auto& t : entries) {
        if (t.row >= rows || t.col >= cols) {
            throw InternalError("matrix entry out of range");
        }
        if (!m.entries_.empty() && m.entries_.back().row == t.row && m.entries_.back().col == t.col) {
            m.entries_.back().value += t.value;
            if (m.entries_.back().value == 0) {
                m.entries_.pop_back();
            }
        } else if (t.value != 0) {
            m.entries_.push_back(std::move(t));
        }
    }
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
    const std::size_t rows = dense.size();
    const std::size_t cols = rows == 0 ? 0 : dense.front().size();
    std::vector<Triplet> entries;
    for (std::size_t i = 0; i < rows; ++i) {
        if (dense[i].size() != cols) {
            throw InternalError("ragged dense matrix");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (dense[i][j] != 0) {
                entries.push_back({i, j, dense[i][j]});
            }
        }
    }
    return from_triplets(rows, cols, std::move(entries));
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.entries_.push_back({i, i, Integer(1)});
    }
    return m;
}

Integer IntMatrix::at(std::size_t r, std::size_t c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                               [](const Triplet& t, const std::pair<std::size_t, std::size_t>& key) {
                                   return t.row != key.first ? t.row < key.first : t.col < key.second;
                               });
    if (it != entries_.end() && it->row == r && it->col == c) {
        return it->value;
    }
    return 0;
}

IntMatrix IntMatrix::transposed() const {
    std::vector<Triplet> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) {
        t.push_back({e.col, e.row, e.value});
    }
    return from_triplets(cols_, rows_, std::move(t));
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw InternalError("matrix product shape mismatch");
    }
    // rhs rows are contiguous in sorted triplet order.
    std::vector<std::size_t> row_start(rhs.rows_ + 1, 0);
    for (const auto& e : rhs.entries_) {
        ++row_start[e.row + 1];
    }
    for (std::size_t i = 0; i < rhs.rows_; ++i) {
        row_start[i + 1] += row_start[i];
    }
    std::vector<Triplet> out;
    for (const auto& a : entries_) {
        for (std::size_t k = row_start[a.col]; k < row_start[a.col + 1]; ++k) {
            const auto& b = rhs.entries_[k];
            out.push_back({a.row, b.col, a.value * b.value});
        }
    }
    return from_triplets(rows_, rhs.cols_, std::move(out));
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer>& x) const {
    if (x.size() != cols_) {
        throw InternalError("matrix-vector shape mismatch");
    }
    std::vector<Integer> y(rows_);
    for (const auto& e : entries_) {
        if (x[e.col] != 0) {
            y[e.row] += e.value * x[e.col];
        }
    }
    return y;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || entries_.size() != other.entries_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& a = entries_[i];
        const auto& b = other.entries_[i];
        if (a.row != b.row || a.col != b.col || a.value != b.value) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
    std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
    for (const auto& e : entries_) {
        d[e.row][e.col] = e.value;
    }
    return d;
}

std::string IntMatrix::to_json() const {
    std::ostringstream os;
    os << "{\"rows\":" << rows_ << ",\"cols\":" << cols_ << ",\"entries\":[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        os << (i ? "," : "") << '[' << e.row << ',' << e.col << ",\"" << e.value.str() << "\"]";
    }
    os << "]}";
    return os.str();
}

// ---------------------------------------------------------------------------

Domain Domain::modulo(std::uint32_t p) {
    if (p < 2) {
        throw ValidationError("coefficient modulus must be a prime >= 2");
    }
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            throw ValidationError("coefficient modulus " + std::to_string(p) + " is not prime");
        }
    }
    return Domain(p);
}

Integer Domain::reduce(const Integer& a) const {
    if (p_ == 0) {
        return a;
    }
    return mod_floor(a, Integer(p_));
}

bool Domain::is_unit(const Integer& a) const {
    if (p_ == 0) {
        return a == 1 || a == -1;
    }
    return reduce(a) != 0;
}

Integer Domain::norm(const Integer& a) const {
    if (p_ == 0) {
        return a < 0 ? Integer(-a) : a;
    }
    return reduce(a) == 0 ? Integer(0) : Integer(1);
}

Integer Domain::quotient(const Integer& a, const Integer& pivot) const {
    if (p_ != 0) {
        return reduce(a * unit_inverse(pivot));
    }
    Integer q = floor_div(a, pivot);
    Integer r = a - q * pivot;
    // Nearest-integer quotient keeps |r| <= |pivot|/2.
    const Integer ap = pivot < 0 ? Integer(-pivot) : pivot;
    if (2 * (r < 0 ? Integer(-r) : r) > ap) {
        q += 1;  // r has the sign of pivot; r - pivot is the smaller remainder
    }
    return q;
}

Integer Domain::unit_inverse(const Integer& u) const {
    if (p_ == 0) {
        if (u != 1 && u != -1) {
            throw InternalError("inverse of a non-unit integer");
        }
        return u;
    }
    Integer s, t;
    const Integer g = extended_gcd(reduce(u), Integer(p_), s, t);
    if (g != 1) {
        throw InternalError("inverse of zero modulo p");
    }
    return reduce(s);
}

Integer Domain::normalizer(const Integer& a) const {
    if (p_ == 0) {
        return a < 0 ? Integer(-1) : Integer(1);
    }
    return unit_inverse(a);
}

}  // namespace facelab
