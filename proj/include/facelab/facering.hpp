#pragma once

#include "facelab/cupring.hpp"
#include "facelab/panel_complex.hpp"
#include "facelab/simplicial_poset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

namespace facelab {

/// Degreewise free rank and torsion of a graded ring, degrees 0..bound.
struct HilbertSeries {
    std::vector<std::size_t> rank;
    std::vector<std::vector<Integer>> torsion;

    bool operator==(const HilbertSeries&) const = default;
    /// "1,0,4,0,8" (ranks only).
    std::string ranks_string() const;
};

using Exponents = std::vector<int>;

/// Basis element of a block ring: coefficient generator `gen` of block J
/// times the monomial x^e, where e is supported exactly on J.
struct BlockTerm {
    VertexMask j = 0;
    std::size_t gen = 0;
    Exponents e;

    auto operator<=>(const BlockTerm&) const = default;
};

using BlockElement = std::map<BlockTerm, Integer>;

/// ⊕_J M_J ⊗ R^J where M_J is a finitely generated graded coefficient module
/// and R^J the monomials with support exactly J. Products multiply
/// coefficients through a table and monomials as usual.
class MonomialBlockRing {
public:
    struct Generator {
        int q = 0;
        Integer order = 0;           // 0 = free
        std::vector<int> vertices;   // for degree-0 component classes: vertex labels of Y in the component
    };

    int variables() const { return m_; }
    int variable_degree() const { return deg_x_; }
    const Domain& domain() const { return domain_; }

    /// Blocks present (nonzero coefficient module), subsets_by_size order.
    std::vector<VertexMask> blocks() const;
    const std::vector<Generator>& generators(VertexMask j) const;

    /// Coefficient product of generator a of block ja with generator b of jb,
    /// as a combination of generators of block ja|jb.
    const std::vector<std::pair<std::size_t, Integer>>& coefficient_product(VertexMask ja, std::size_t a,
                                                                          VertexMask jb, std::size_t b) const;

    int degree(const BlockTerm& t) const;
    BlockElement multiply(const BlockElement& x, const BlockElement& y) const;
    BlockElement normalize(BlockElement x) const;

    /// All basis terms of degree <= bound.
    std::vector<BlockTerm> basis(int bound) const;
    HilbertSeries hilbert(int bound) const;
    /// Series of the single block J.
    HilbertSeries block_hilbert(VertexMask j, int bound) const;

    std::string description;

private:
    friend MonomialBlockRing stanley_reisner(const SimplicialComplex&, int, Domain);
    friend MonomialBlockRing topological_face_ring(const PanelComplex&, int, Domain, Parallelism);

    int m_ = 0;
    int deg_x_ = 2;
    Domain domain_ = Domain::integers();
    std::map<VertexMask, std::vector<Generator>> blocks_;
    std::map<std::tuple<VertexMask, std::size_t, VertexMask, std::size_t>, std::vector<std::pair<std::size_t, Integer>>>
        table_;
};

/// Z[K] (or k[K]) with deg v_j = deg_x. K must be minimal.
MonomialBlockRing stanley_reisner(const SimplicialComplex& k, int deg_x = 2, Domain domain = Domain::integers());

/// k(Y,P) = ⊕_J H^*(P_∩J) ⊗ R^J with the product of restricted cup products.
MonomialBlockRing topological_face_ring(const PanelComplex& p, int deg_x = 2, Domain domain = Domain::integers(),
                                        Parallelism par = {});

/// Number of monomials with support exactly J (|J| = size) of x-degree d,
/// every variable of degree deg_x.
Integer exact_support_monomials(int size, int d, int deg_x);

enum class RewriteStrategy { leftmost, rightmost, random };

/// Z[S]: generators v_σ, v_0̂ = 1, v_σ v_τ = v_{σ∧τ} Σ_{η∈σ∨τ} v_η. Elements
/// are kept in the chain-monomial normal form.
class PosetFaceRing {
public:
    /// (element, exponent) sorted by (rank, element); a normal word is a chain.
    using Word = std::vector<std::pair<int, int>>;
    using Element = std::map<Word, Integer>;

    explicit PosetFaceRing(const SimplicialPoset& s, int deg_x = 2, Domain domain = Domain::integers());

    const SimplicialPoset& poset() const { return s_; }
    int variable_degree() const { return deg_x_; }

    Element generator(int sigma) const;
    Element one() const { return {{Word{}, Integer(1)}}; }
    bool is_chain(const Word& w) const;
    int degree(const Word& w) const;

    Element multiply(const Element& a, const Element& b, RewriteStrategy strategy = RewriteStrategy::leftmost,
                     std::uint64_t seed = 0) const;
    /// Rewrites an arbitrary word; InternalError after step_limit rewrites.
    Element normal_form(const Word& w, RewriteStrategy strategy = RewriteStrategy::leftmost,
                        std::uint64_t seed = 0) const;

    std::vector<Word> basis(int bound) const;
    HilbertSeries hilbert(int bound) const;
    std::string format(const Element& e) const;

    std::size_t step_limit = 1000000;

private:
    Word canonical(std::vector<std::pair<int, int>> w) const;

    SimplicialPoset s_;
    int deg_x_ = 2;
    Domain domain_;
};

/// The correspondence v_σ1^l1 ⋯ v_σq^lq ↦ [face of σq] ⊗ Π_i (Π_{j∈V(σi)} x_j)^li
/// into a block ring. The face of σ is the degree-0 generator of block V(σ)
/// whose component contains the Y-vertex `vertex_of(σ)`; blocks with a single
/// degree-0 generator need no vertex.
struct PosetCorrespondence {
    std::vector<int> vertex_of;  // by element; 0 when unused
};
PosetCorrespondence poset_correspondence(const SimplicialPoset& s, bool via_panels);
std::optional<BlockTerm> correspond(const PosetFaceRing& r, const PosetCorrespondence& c,
                                    const MonomialBlockRing& target, const PosetFaceRing::Word& w);

struct IsoVerdict {
    bool ok = true;
    std::string stage;  // "hilbert", "blocks", "basis", "products"
    int degree = -1;
    std::string detail;
    HilbertSeries left, right;
};

/// Certificate comparison: Hilbert series up to the bound, then block
/// dimensions, then structure constants on all basis pairs of total degree
/// <= bound, under the identity on (J, generator, monomial).
IsoVerdict iso_check(const MonomialBlockRing& a, const MonomialBlockRing& b, int bound);
/// Same for Z[S] against a block ring through the poset correspondence.
IsoVerdict iso_check(const PosetFaceRing& a, const MonomialBlockRing& b, const PosetCorrespondence& c, int bound);

}  // namespace facelab
