#include "facelab/facering.hpp"

#include "facelab/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace facelab {

std::string HilbertSeries::ranks_string() const {
    std::string out;
    for (std::size_t d = 0; d < rank.size(); ++d) {
        if (d) out += ",";
        out += std::to_string(rank[d]);
    }
    return out;
}

Integer exact_support_monomials(int size, int d, int deg_x) {
    if (d < 0 || deg_x <= 0 || d % deg_x != 0) return 0;
    const int n = d / deg_x;
    if (size == 0) return n == 0 ? 1 : 0;
    if (n < size) return 0;
    // C(n-1, size-1)
    Integer c = 1;
    for (int i = 1; i <= size - 1; ++i) c = c * (n - size + i) / i;
    return c;
}

namespace {

// Monomials x^e with support exactly J and x-degree deg_x * |e| <= budget.
void exact_support_exponents(int m, VertexMask j, int budget, int deg_x, const std::function<void(const Exponents&)>& visit) {
    const auto labels = labels_of(j);
    Exponents e(static_cast<std::size_t>(m), 0);
    const int total = deg_x > 0 ? budget / deg_x : 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == labels.size()) {
            visit(e);
            return;
        }
        const int rest = static_cast<int>(labels.size() - i - 1);
        for (int k = 1; k <= left - rest; ++k) {
            e[static_cast<std::size_t>(labels[i] - 1)] = k;
            rec(i + 1, left - k);
        }
        e[static_cast<std::size_t>(labels[i] - 1)] = 0;
    };
    if (static_cast<int>(labels.size()) <= total || labels.empty()) rec(0, total);
}

Integer reduce_mod(const Domain& d, const Integer& c, const Integer& order) {
    Integer r = d.reduce(c);
    if (order != 0) {
        r %= order;
        if (r < 0) r += order;
    }
    return r;
}

std::vector<int> support_vertices(const SimplicialComplex& y, const Cochain& c) {
    std::vector<int> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out.push_back(y.simplex(0, i).front());
    return out;
}

}  // namespace

std::vector<VertexMask> MonomialBlockRing::blocks() const {
    std::vector<VertexMask> out;
    for (VertexMask j : subsets_by_size(m_))
        if (blocks_.count(j)) out.push_back(j);
    return out;
}

const std::vector<MonomialBlockRing::Generator>& MonomialBlockRing::generators(VertexMask j) const {
    static const std::vector<Generator> none;
    const auto it = blocks_.find(j);
    return it == blocks_.end() ? none : it->second;
}

const std::vector<std::pair<std::size_t, Integer>>& MonomialBlockRing::coefficient_product(VertexMask ja, std::size_t a,
                                                                                         VertexMask jb,
                                                                                         std::size_t b) const {
    static const std::vector<std::pair<std::size_t, Integer>> zero;
    const auto it = table_.find({ja, a, jb, b});
    return it == table_.end() ? zero : it->second;
}

int MonomialBlockRing::degree(const BlockTerm& t) const {
    return generators(t.j).at(t.gen).q + deg_x_ * std::accumulate(t.e.begin(), t.e.end(), 0);
}

BlockElement MonomialBlockRing::normalize(BlockElement x) const {
    BlockElement out;
    for (auto& [t, c] : x) {
        Integer r = reduce_mod(domain_, c, generators(t.j).at(t.gen).order);
        if (r != 0) out.emplace(t, std::move(r));
    }
    return out;
}

BlockElement MonomialBlockRing::multiply(const BlockElement& x, const BlockElement& y) const {
    BlockElement acc;
    for (const auto& [s, cs] : x)
        for (const auto& [t, ct] : y) {
            const auto& prod = coefficient_product(s.j, s.gen, t.j, t.gen);
            if (prod.empty()) continue;
            Exponents e(s.e.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.e[i] + t.e[i];
            for (const auto& [g, c] : prod) acc[BlockTerm{s.j | t.j, g, e}] += cs * ct * c;
        }
    return normalize(std::move(acc));
}

std::vector<BlockTerm> MonomialBlockRing::basis(int bound) const {
    std::vector<BlockTerm> out;
    for (VertexMask j : blocks()) {
        const auto& gens = generators(j);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].q > bound) continue;
            exact_support_exponents(m_, j, bound - gens[g].q, deg_x_,
                                    [&](const Exponents& e) { out.push_back(BlockTerm{j, g, e}); });
        }
    }
    return out;
}

HilbertSeries MonomialBlockRing::block_hilbert(VertexMask j, int bound) const {
    HilbertSeries h;
    h.rank.assign(static_cast<std::size_t>(bound + 1), 0);
    h.torsion.assign(static_cast<std::size_t>(bound + 1), {});
    const int size = std::popcount(j);
    for (const auto& g : generators(j)) {
        for (int d = g.q; d <= bound; ++d) {
            const Integer count = exact_support_monomials(size, d - g.q, deg_x_);
            if (count == 0) continue;
            if (g.order == 0) {
                h.rank[static_cast<std::size_t>(d)] += static_cast<std::size_t>(count);
            } else {
                for (Integer i = 0; i < count; ++i) h.torsion[static_cast<std::size_t>(d)].push_back(g.order);
            }
        }
    }
    for (auto& t : h.torsion) std::sort(t.begin(), t.end());
    return h;
}

HilbertSeries MonomialBlockRing::hilbert(int bound) const {
    HilbertSeries h;
    h.rank.assign(static_cast<std::size_t>(bound + 1), 0);
    h.torsion.assign(static_cast<std::size_t>(bound + 1), {});
    for (VertexMask j : blocks()) {
        const auto b = block_hilbert(j, bound);
        for (std::size_t d = 0; d < h.rank.size(); ++d) {
            h.rank[d] += b.rank[d];
            h.torsion[d].insert(h.torsion[d].end(), b.torsion[d].begin(), b.torsion[d].end());
        }
    }
    for (auto& t : h.torsion) std::sort(t.begin(), t.end());
    return h;
}

MonomialBlockRing stanley_reisner(const SimplicialComplex& k, int deg_x, Domain domain) {
    if (!k.is_minimal()) throw ValidationError("K has ghost vertices; the face ring needs a minimal complex");
    if (deg_x < 1) throw ValidationError("variable degree must be positive");
    MonomialBlockRing r;
    r.m_ = k.vertex_count();
    r.deg_x_ = deg_x;
    r.domain_ = domain;
    r.description = "Stanley-Reisner ring, deg x_j = " + std::to_string(deg_x);
    std::set<VertexMask> faces;
    for (int d = -1; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d)) faces.insert(mask_of(s));
    for (VertexMask j : faces) r.blocks_[j] = {MonomialBlockRing::Generator{0, 0, {}}};
    for (VertexMask a : faces)
        for (VertexMask b : faces)
            if (faces.count(a | b)) r.table_[{a, 0, b, 0}] = {{0, Integer(1)}};
    return r;
}

MonomialBlockRing topological_face_ring(const PanelComplex& p, int deg_x, Domain domain, Parallelism par) {
    if (deg_x < 1) throw ValidationError("variable degree must be positive");
    const SimplicialComplex& y = p.space();
    const int m = p.panel_count();
    MonomialBlockRing r;
    r.m_ = m;
    r.deg_x_ = deg_x;
    r.domain_ = domain;
    r.description = "topological face ring, deg x_j = " + std::to_string(deg_x);

    const auto order = subsets_by_size(m);
    std::vector<std::unique_ptr<SimplicialCohomology>> coh(std::size_t{1} << m);
    std::vector<Subcomplex> caps(std::size_t{1} << m);
    parallel_for(order.size(), par, [&](std::size_t i) {
        const VertexMask j = order[i];
        caps[j] = p.intersection(j);
        if (!caps[j].is_empty())
            coh[j] = std::make_unique<SimplicialCohomology>(p.space_ptr(), caps[j], Subcomplex::none(y), domain);
    });
    // generator index of (j, q, i) inside block j: degrees in ascending order
    std::vector<std::vector<std::size_t>> first(coh.size());
    for (VertexMask j : order) {
        if (!coh[j]) continue;
        std::vector<MonomialBlockRing::Generator> gens;
        for (int q = 0; q <= y.dimension(); ++q) {
            first[j].push_back(gens.size());
            for (std::size_t i = 0; i < coh[j]->size(q); ++i) {
                MonomialBlockRing::Generator g{q, coh[j]->order(q, i), {}};
                if (q == 0) g.vertices = support_vertices(y, coh[j]->generator(0, i));
                gens.push_back(std::move(g));
            }
        }
        if (!gens.empty()) r.blocks_[j] = std::move(gens);
    }

    auto restrict_to = [&](const Cochain& c, const Subcomplex& s, int dim) {
        Cochain out = c;
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!s.contains(dim, i)) out[i] = 0;
        return out;
    };

    std::vector<std::pair<VertexMask, VertexMask>> pairs;
    for (VertexMask a : order)
        for (VertexMask b : order)
            if (r.blocks_.count(a) && r.blocks_.count(b) && r.blocks_.count(a | b)) pairs.emplace_back(a, b);
    using Key = std::tuple<VertexMask, std::size_t, VertexMask, std::size_t>;
    std::vector<std::vector<std::pair<Key, std::vector<std::pair<std::size_t, Integer>>>>> slots(pairs.size());
    parallel_for(pairs.size(), par, [&](std::size_t idx) {
        const auto [ja, jb] = pairs[idx];
        const VertexMask t = ja | jb;
        const auto& ha = *coh[ja];
        const auto& hb = *coh[jb];
        const auto& ht = *coh[t];
        for (int qa = 0; qa <= y.dimension(); ++qa)
            for (int qb = 0; qa + qb <= y.dimension(); ++qb)
                for (std::size_t ga = 0; ga < ha.size(qa); ++ga)
                    for (std::size_t gb = 0; gb < hb.size(qb); ++gb) {
                        const Cochain u = restrict_to(ha.generator(qa, ga), caps[t], qa);
                        const Cochain v = restrict_to(hb.generator(qb, gb), caps[t], qb);
                        const Cochain c = restrict_to(alexander_whitney(y, u, qa, v, qb), caps[t], qa + qb);
                        const auto coords = ht.coordinates(qa + qb, c);
                        std::vector<std::pair<std::size_t, Integer>> out;
                        for (std::size_t i = 0; i < coords.size(); ++i)
                            if (coords[i] != 0) out.emplace_back(first[t][static_cast<std::size_t>(qa + qb)] + i, coords[i]);
                        if (!out.empty())
                            slots[idx].push_back({Key{ja, first[ja][static_cast<std::size_t>(qa)] + ga, jb,
                                                      first[jb][static_cast<std::size_t>(qb)] + gb},
                                                  std::move(out)});
                    }
    });
    for (auto& s : slots)
        for (auto& [key, value] : s) r.table_.emplace(key, std::move(value));
    return r;
}

PosetFaceRing::PosetFaceRing(const SimplicialPoset& s, int deg_x, Domain domain)
    : s_(s), deg_x_(deg_x), domain_(domain) {
    if (deg_x < 1) throw ValidationError("variable degree must be positive");
}

PosetFaceRing::Word PosetFaceRing::canonical(std::vector<std::pair<int, int>> w) const {
    std::sort(w.begin(), w.end(), [&](const auto& a, const auto& b) {
        const int ra = s_.rank(a.first), rb = s_.rank(b.first);
        return ra != rb ? ra < rb : a.first < b.first;
    });
    Word out;
    for (const auto& [e, k] : w) {
        if (e == s_.bottom() || k == 0) continue;
        if (!out.empty() && out.back().first == e) out.back().second += k;
        else out.emplace_back(e, k);
    }
    return out;
}

PosetFaceRing::Element PosetFaceRing::generator(int sigma) const {
    if (sigma < 0 || static_cast<std::size_t>(sigma) >= s_.size()) throw ValidationError("no such poset element");
    return {{canonical({{sigma, 1}}), Integer(1)}};
}

bool PosetFaceRing::is_chain(const Word& w) const {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!s_.less(w[i - 1].first, w[i].first)) return false;
    return true;
}

int PosetFaceRing::degree(const Word& w) const {
    int d = 0;
    for (const auto& [e, k] : w) d += k * deg_x_ * s_.rank(e);
    return d;
}

PosetFaceRing::Element PosetFaceRing::normal_form(const Word& start, RewriteStrategy strategy,
                                                  std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Word, Integer>> work = {{canonical(start), Integer(1)}};
    Element acc;
    std::size_t steps = 0;
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (is_chain(w)) {
            acc[w] += c;
            continue;
        }
        if (++steps > step_limit) {
            std::ostringstream os;
            os << "face ring rewriting exceeded " << step_limit << " steps at " << format({{w, c}});
            throw InternalError(os.str());
        }
        std::vector<std::pair<std::size_t, std::size_t>> bad;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t k = i + 1; k < w.size(); ++k)
                if (!s_.leq(w[i].first, w[k].first) && !s_.leq(w[k].first, w[i].first)) bad.emplace_back(i, k);
        std::pair<std::size_t, std::size_t> pick;
        switch (strategy) {
            case RewriteStrategy::leftmost: pick = bad.front(); break;
            case RewriteStrategy::rightmost: pick = bad.back(); break;
            case RewriteStrategy::random: pick = bad[rng() % bad.size()]; break;
        }
        const int sigma = w[pick.first].first, tau = w[pick.second].first;
        const auto& join = s_.join(sigma, tau);
        if (join.empty()) continue;
        const auto meet = s_.meet(sigma, tau);
        if (!meet) throw InternalError("elements with a common upper bound lack a unique meet");
        std::vector<std::pair<int, int>> base(w.begin(), w.end());
        base[pick.first].second -= 1;
        base[pick.second].second -= 1;
        base.emplace_back(*meet, 1);
        for (int eta : join) {
            auto next = base;
            next.emplace_back(eta, 1);
            work.emplace_back(canonical(std::move(next)), c);
        }
    }
    Element out;
    for (auto& [w, c] : acc) {
        Integer r = domain_.reduce(c);
        if (r != 0) out.emplace(w, std::move(r));
    }
    return out;
}

PosetFaceRing::Element PosetFaceRing::multiply(const Element& a, const Element& b, RewriteStrategy strategy,
                                               std::uint64_t seed) const {
    Element acc;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::vector<std::pair<int, int>> w(wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            for (const auto& [nw, c] : normal_form(canonical(std::move(w)), strategy, seed)) acc[nw] += ca * cb * c;
        }
    Element out;
    for (auto& [w, c] : acc) {
        Integer r = domain_.reduce(c);
        if (r != 0) out.emplace(w, std::move(r));
    }
    return out;
}

std::vector<PosetFaceRing::Word> PosetFaceRing::basis(int bound) const {
    std::vector<Word> out;
    Word cur;
    std::vector<int> elements;
    for (int e : s_.linear_order())
        if (e != s_.bottom()) elements.push_back(e);
    std::function<void(int, int)> rec = [&](int last, int used) {
        out.push_back(cur);
        for (int e : elements) {
            if (last >= 0 && !s_.less(last, e)) continue;
            const int step = deg_x_ * s_.rank(e);
            for (int k = 1; used + k * step <= bound; ++k) {
                cur.emplace_back(e, k);
                rec(e, used + k * step);
                cur.pop_back();
            }
        }
    };
    rec(-1, 0);
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
        const int da = degree(a), db = degree(b);
        return da != db ? da < db : a < b;
    });
    return out;
}

HilbertSeries PosetFaceRing::hilbert(int bound) const {
    HilbertSeries h;
    h.rank.assign(static_cast<std::size_t>(bound + 1), 0);
    h.torsion.assign(static_cast<std::size_t>(bound + 1), {});
    for (const auto& w : basis(bound)) h.rank[static_cast<std::size_t>(degree(w))] += 1;
    return h;
}

std::string PosetFaceRing::format(const Element& e) const {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool firstterm = true;
    for (const auto& [w, c] : e) {
        if (!firstterm) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        firstterm = false;
        const Integer a = c < 0 ? Integer(-c) : c;
        if (a != 1 || w.empty()) os << a;
        for (const auto& [el, k] : w) {
            os << "v[" << s_.name(el) << "]";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

PosetCorrespondence poset_correspondence(const SimplicialPoset& s, bool via_panels) {
    PosetCorrespondence c;
    c.vertex_of.assign(s.size(), 0);
    if (via_panels)
        for (std::size_t e = 0; e < s.size(); ++e)
            if (static_cast<int>(e) != s.bottom()) c.vertex_of[e] = poset_vertex_label(s, static_cast<int>(e));
    return c;
}

std::optional<BlockTerm> correspond(const PosetFaceRing& r, const PosetCorrespondence& c,
                                    const MonomialBlockRing& target, const PosetFaceRing::Word& w) {
    const auto& s = r.poset();
    BlockTerm t;
    t.e.assign(static_cast<std::size_t>(s.vertex_count()), 0);
    for (const auto& [el, k] : w)
        for (int j : labels_of(s.vertex_set(el))) t.e[static_cast<std::size_t>(j - 1)] += k;
    const int top = w.empty() ? s.bottom() : w.back().first;
    t.j = s.vertex_set(top);
    const auto& gens = target.generators(t.j);
    std::vector<std::size_t> zero;
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (gens[g].q == 0) zero.push_back(g);
    if (zero.size() == 1) {
        t.gen = zero.front();
        return t;
    }
    const int v = c.vertex_of.at(static_cast<std::size_t>(top));
    for (std::size_t g : zero) {
        const auto& vs = gens[g].vertices;
        if (std::find(vs.begin(), vs.end(), v) != vs.end()) {
            t.gen = g;
            return t;
        }
    }
    return std::nullopt;
}

namespace {

std::string format_term(const BlockTerm& t) {
    std::ostringstream os;
    os << format_set(t.j) << "#" << t.gen << " x^(";
    for (std::size_t i = 0; i < t.e.size(); ++i) os << (i ? "," : "") << t.e[i];
    os << ")";
    return os.str();
}

bool compare_series(const HilbertSeries& a, const HilbertSeries& b, IsoVerdict& v, const std::string& stage,
                    const std::string& what) {
    for (std::size_t d = 0; d < a.rank.size(); ++d) {
        if (a.rank[d] != b.rank[d] || a.torsion[d] != b.torsion[d]) {
            v.ok = false;
            v.stage = stage;
            v.degree = static_cast<int>(d);
            v.detail = what + "rank " + std::to_string(a.rank[d]) + " vs " + std::to_string(b.rank[d]) + " in degree " +
                       std::to_string(d);
            return false;
        }
    }
    return true;
}

}  // namespace

IsoVerdict iso_check(const MonomialBlockRing& a, const MonomialBlockRing& b, int bound) {
    IsoVerdict v;
    v.left = a.hilbert(bound);
    v.right = b.hilbert(bound);
    if (!compare_series(v.left, v.right, v, "hilbert", "")) return v;
    if (a.variables() != b.variables()) {
        v.ok = false;
        v.stage = "blocks";
        v.detail = "different numbers of variables";
        return v;
    }
    std::set<VertexMask> blocks;
    for (VertexMask j : a.blocks()) blocks.insert(j);
    for (VertexMask j : b.blocks()) blocks.insert(j);
    for (VertexMask j : blocks) {
        if (!compare_series(a.block_hilbert(j, bound), b.block_hilbert(j, bound), v, "blocks",
                            "block " + format_set(j) + ": "))
            return v;
        const auto& ga = a.generators(j);
        const auto& gb = b.generators(j);
        for (std::size_t g = 0; g < std::min(ga.size(), gb.size()); ++g) {
            if (ga[g].q != gb[g].q || ga[g].order != gb[g].order) {
                v.ok = false;
                v.stage = "basis";
                v.degree = ga[g].q;
                v.detail = "generator " + std::to_string(g) + " of block " + format_set(j) + " differs";
                return v;
            }
        }
    }
    const auto basis = a.basis(bound);
    for (const auto& s : basis)
        for (const auto& t : basis) {
            if (a.degree(s) + a.degree(t) > bound) continue;
            const BlockElement x{{s, Integer(1)}}, y{{t, Integer(1)}};
            if (a.multiply(x, y) != b.multiply(x, y)) {
                v.ok = false;
                v.stage = "products";
                v.degree = a.degree(s) + a.degree(t);
                v.detail = format_term(s) + " * " + format_term(t);
                return v;
            }
        }
    return v;
}

IsoVerdict iso_check(const PosetFaceRing& a, const MonomialBlockRing& b, const PosetCorrespondence& c, int bound) {
    IsoVerdict v;
    v.left = a.hilbert(bound);
    v.right = b.hilbert(bound);
    if (!compare_series(v.left, v.right, v, "hilbert", "")) return v;
    if (a.variable_degree() != b.variable_degree() || a.poset().vertex_count() != b.variables()) {
        v.ok = false;
        v.stage = "blocks";
        v.detail = "gradings differ";
        return v;
    }
    const auto words = a.basis(bound);
    std::map<PosetFaceRing::Word, BlockTerm> image;
    std::set<BlockTerm> hit;
    for (const auto& w : words) {
        const auto t = correspond(a, c, b, w);
        if (!t || b.generators(t->j).empty() || !hit.insert(*t).second) {
            v.ok = false;
            v.stage = "basis";
            v.degree = a.degree(w);
            v.detail = "chain monomial " + a.format({{w, Integer(1)}}) + (t ? " is not sent to a new basis element" : " has no image");
            return v;
        }
        image.emplace(w, *t);
    }
    for (const auto& t : b.basis(bound)) {
        if (!hit.count(t)) {
            v.ok = false;
            v.stage = "basis";
            v.degree = b.degree(t);
            v.detail = format_term(t) + " is not hit";
            return v;
        }
    }
    for (const auto& w1 : words)
        for (const auto& w2 : words) {
            if (a.degree(w1) + a.degree(w2) > bound) continue;
            const auto prod = a.multiply({{w1, Integer(1)}}, {{w2, Integer(1)}});
            BlockElement mapped;
            for (const auto& [w, coeff] : prod) mapped[image.at(w)] += coeff;
            mapped = b.normalize(std::move(mapped));
            const BlockElement expect = b.multiply({{image.at(w1), Integer(1)}}, {{image.at(w2), Integer(1)}});
            if (mapped != expect) {
                v.ok = false;
                v.stage = "products";
                v.degree = a.degree(w1) + a.degree(w2);
                v.detail = a.format({{w1, Integer(1)}}) + " * " + a.format({{w2, Integer(1)}});
                return v;
            }
        }
    return v;
}

}  // namespace facelab
