#include "facelab/graded_group.hpp"

#include "facelab/smith.hpp"

#include <sstream>

namespace facelab {

std::string GroupPiece::describe() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

std::string GroupPiece::torsion_string() const {
    std::string out;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) out += ";";
        out += torsion[i].str();
    }
    return out;
}

GroupPiece direct_sum(const GroupPiece& a, const GroupPiece& b) {
    GroupPiece out;
    out.rank = a.rank + b.rank;
    std::vector<Integer> all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    for (auto& d : to_invariant_factors(std::move(all))) {
        if (d > 1) out.torsion.push_back(d);
    }
    return out;
}

const GroupPiece& GradedGroup::at(int degree) const {
    static const GroupPiece zero;
    auto it = pieces_.find(degree);
    return it == pieces_.end() ? zero : it->second;
}

void GradedGroup::add(int degree, const GroupPiece& piece) {
    if (piece.is_zero()) {
        return;
    }
    auto it = pieces_.find(degree);
    if (it == pieces_.end()) {
        pieces_.emplace(degree, direct_sum(GroupPiece{}, piece));
    } else {
        it->second = direct_sum(it->second, piece);
    }
}

GradedGroup GradedGroup::shifted(int by) const {
    GradedGroup out;
    for (const auto& [d, p] : pieces_) out.pieces_.emplace(d + by, p);
    return out;
}

GradedGroup& GradedGroup::operator+=(const GradedGroup& other) {
    for (const auto& [d, p] : other.pieces_) add(d, p);
    return *this;
}

std::vector<std::size_t> GradedGroup::betti(int from, int to) const {
    std::vector<std::size_t> out;
    for (int d = from; d <= to; ++d) out.push_back(at(d).rank);
    return out;
}

std::size_t GradedGroup::total_rank() const {
    std::size_t n = 0;
    for (const auto& [d, p] : pieces_) n += p.rank;
    return n;
}

std::string GradedGroup::describe(const std::string& prefix) const {
    if (pieces_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, p] : pieces_) {
        if (!first) os << ", ";
        os << prefix << d << "=" << p.describe();
        first = false;
    }
    return os.str();
}

}  // namespace facelab
