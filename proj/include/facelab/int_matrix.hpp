#pragma once

#include "facelab/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace facelab {

struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    Integer value;
};

/// Sparse integer matrix in sorted triplet form: entries ordered by
/// (row, col), no duplicate coordinates, no stored zeros.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    /// Duplicate coordinates are summed; resulting zeros are dropped.
    static IntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
    static IntMatrix from_dense(const std::vector<std::vector<Integer>>& dense);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Triplet>& entries() const { return entries_; }

    Integer at(std::size_t r, std::size_t c) const;
    bool is_zero() const { return entries_.empty(); }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Integer> operator*(const std::vector<Integer>& x) const;
    bool operator==(const IntMatrix& other) const;

    std::vector<std::vector<Integer>> to_dense() const;
    /// {"rows":r,"cols":c,"entries":[[i,j,"v"],...]} with values as decimal strings.
    std::string to_json() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Triplet> entries_;
};

/// Coefficient ring for elimination: the integers, or Z/p for a prime p.
class Domain {
public:
    static Domain integers() { return Domain(0); }
    static Domain modulo(std::uint32_t p);

    bool is_field() const { return p_ != 0; }
    std::uint32_t characteristic() const { return p_; }

    Integer reduce(const Integer& a) const;
    bool is_unit(const Integer& a) const;
    /// Euclidean size used for pivot selection (|a| over Z, 1 for nonzero in Z/p).
    Integer norm(const Integer& a) const;
    /// q with a - q*pivot of minimal size (exact quotient in a field).
    Integer quotient(const Integer& a, const Integer& pivot) const;
    Integer unit_inverse(const Integer& u) const;
    /// Canonical associate: multiplier s (a unit) such that s*a is positive / one.
    Integer normalizer(const Integer& a) const;

private:
    explicit Domain(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

}  // namespace facelab
