#pragma once

#include "facelab/integer.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace facelab {

/// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k with
/// d_i >= 2 and d_i | d_{i+1}.
struct GroupPiece {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool operator==(const GroupPiece&) const = default;
    /// "0", "Z", "Z^2 + Z/2", ...
    std::string describe() const;
    std::string torsion_string() const;  // "2;2;4" style, empty when free
};

/// Direct sum of two pieces, renormalized to invariant factors.
GroupPiece direct_sum(const GroupPiece& a, const GroupPiece& b);

/// Graded abelian group, stored sparsely (zero degrees omitted).
class GradedGroup {
public:
    const GroupPiece& at(int degree) const;
    void add(int degree, const GroupPiece& piece);
    GradedGroup shifted(int by) const;
    GradedGroup& operator+=(const GradedGroup& other);

    bool is_zero() const { return pieces_.empty(); }
    const std::map<int, GroupPiece>& pieces() const { return pieces_; }
    std::vector<std::size_t> betti(int from, int to) const;
    std::size_t total_rank() const;
    bool operator==(const GradedGroup&) const = default;
    /// "H^0=Z, H^3=Z^2" style summary; prefix is written before each degree.
    std::string describe(const std::string& prefix = "H^") const;

private:
    std::map<int, GroupPiece> pieces_;
};

}  // namespace facelab
