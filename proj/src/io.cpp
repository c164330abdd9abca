#include "facelab/io.hpp"

#include "facelab/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace facelab {

using nlohmann::json;

std::string InputDocument::kind_name() const {
    switch (kind) {
        case Kind::complex: return "complex";
        case Kind::poset: return "poset";
        case Kind::panels: return "panels";
        case Kind::simplicial: return "K";
        case Kind::poset_panels: return "S";
        case Kind::partition: return "partition";
    }
    return "?";
}

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
    return j.at(key);
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    const auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000) throw ValidationError(where + ": integer out of range");
    return static_cast<int>(v);
}

Simplex as_simplex(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of vertex labels");
    Simplex s;
    for (const auto& v : j) s.push_back(as_int(v, where));
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<Simplex> as_simplices(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of simplices");
    std::vector<Simplex> out;
    for (const auto& s : j) out.push_back(as_simplex(s, where));
    return out;
}

SimplicialComplex parse_complex(const json& j, const std::string& where, std::vector<std::string>& warnings) {
    const int m = as_int(field(j, "m", where), where + ".m");
    if (m < 0) throw ValidationError(where + ".m must be >= 0");
    if (m > 62) throw ValidationError(where + ".m exceeds the supported 62 vertices");
    const auto maximal = as_simplices(field(j, "maximal_simplices", where), where + ".maximal_simplices");
    return build_complex(m, maximal, &warnings);
}

std::string element_name(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError(where + ": poset elements are strings or integers");
}

SimplicialPoset parse_poset(const json& j, const std::string& where) {
    const json& elements = field(j, "elements", where);
    if (!elements.is_array()) throw ParseError(where + ".elements: expected a list");
    std::vector<std::string> names;
    std::map<std::string, int> index;
    for (const auto& e : elements) {
        names.push_back(element_name(e, where + ".elements"));
        if (!index.emplace(names.back(), static_cast<int>(names.size()) - 1).second)
            throw ValidationError(where + ": duplicate element " + names.back());
    }
    auto lookup = [&](const json& e, const std::string& w) {
        const std::string name = element_name(e, w);
        const auto it = index.find(name);
        if (it == index.end()) throw ValidationError(w + ": unknown element " + name);
        return it->second;
    };
    const json& covers = field(j, "covers", where);
    if (!covers.is_array()) throw ParseError(where + ".covers: expected a list of pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& c : covers) {
        if (!c.is_array() || c.size() != 2) throw ParseError(where + ".covers: each entry is a pair [a, b]");
        pairs.emplace_back(lookup(c[0], where + ".covers"), lookup(c[1], where + ".covers"));
    }
    std::map<int, int> labels;
    if (j.contains("vertex_labels")) {
        const json& vl = j.at("vertex_labels");
        if (!vl.is_object()) throw ParseError(where + ".vertex_labels: expected an object");
        for (const auto& [name, label] : vl.items())
            labels[lookup(json(name), where + ".vertex_labels")] = as_int(label, where + ".vertex_labels");
    }
    return SimplicialPoset::build(std::move(names), pairs, labels);
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be a JSON object");
    InputDocument in;
    if (j.contains("m")) {
        in.kind = InputDocument::Kind::complex;
        in.complex = parse_complex(j, "input", in.warnings);
    } else if (j.contains("elements")) {
        in.kind = InputDocument::Kind::poset;
        in.poset = parse_poset(j, "input");
    } else if (j.contains("complex")) {
        in.kind = InputDocument::Kind::panels;
        in.complex = parse_complex(j.at("complex"), "complex", in.warnings);
        const json& panels = field(j, "panels", "input");
        if (!panels.is_array()) throw ParseError("panels: expected a list of panels");
        for (const auto& p : panels) in.panels.push_back(as_simplices(p, "panels"));
        if (in.panels.empty()) throw ValidationError("panels: at least one panel is required");
    } else if (j.contains("K")) {
        in.complex = parse_complex(j.at("K"), "K", in.warnings);
        if (j.contains("partition")) {
            in.kind = InputDocument::Kind::partition;
            const json& blocks = j.at("partition");
            if (!blocks.is_array()) throw ParseError("partition: expected a list of blocks");
            for (const auto& b : blocks) in.partition.push_back(as_simplex(b, "partition"));
        } else {
            in.kind = InputDocument::Kind::simplicial;
        }
    } else if (j.contains("S")) {
        in.kind = InputDocument::Kind::poset_panels;
        in.poset = parse_poset(j.at("S"), "S");
    } else {
        throw ParseError("unrecognized input: expected one of m, elements, complex, K, S at top level");
    }
    return in;
}

InputDocument read_input(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return parse_input(os.str());
}

PanelComplex panel_complex_of(const InputDocument& in, Parallelism par) {
    switch (in.kind) {
        case InputDocument::Kind::complex:
        case InputDocument::Kind::simplicial: return panelize_simplicial(*in.complex, par);
        case InputDocument::Kind::poset:
        case InputDocument::Kind::poset_panels: return panelize_poset(*in.poset, par);
        case InputDocument::Kind::panels: return panelize_generic(*in.complex, in.panels, par);
        case InputDocument::Kind::partition: return panelize_partition(*in.complex, in.partition, par);
    }
    throw InternalError("unknown input kind");
}

SimplicialComplex complex_of(const InputDocument& in) {
    if (in.poset) return poset_order_complex(*in.poset);
    return *in.complex;
}

std::string decomposition_csv(const Decomposition& d) {
    std::ostringstream os;
    os << "J,degree,rank,torsion\n";
    for (const auto* s : d.nonzero())
        for (const auto& [deg, piece] : s->group.pieces())
            os << '"' << format_set(s->j) << "\"," << deg << ',' << piece.rank << ',' << piece.torsion_string() << '\n';
    for (const auto& [deg, piece] : d.total.pieces())
        os << "total," << deg << ',' << piece.rank << ',' << piece.torsion_string() << '\n';
    return os.str();
}

namespace {

json group_json(const GradedGroup& g) {
    json out = json::array();
    for (const auto& [deg, piece] : g.pieces()) {
        json t = json::array();
        for (const auto& x : piece.torsion) t.push_back(x.str());
        out.push_back({{"degree", deg}, {"rank", piece.rank}, {"torsion", t}});
    }
    return out;
}

json labels_json(VertexMask j) { return labels_of(j); }

}  // namespace

std::string decomposition_json(const Decomposition& d) {
    json out;
    out["formula"] = d.formula;
    out["summands"] = json::array();
    for (const auto& s : d.summands)
        out["summands"].push_back({{"J", labels_json(s.j)}, {"source", s.source}, {"groups", group_json(s.group)}});
    out["skipped"] = json::array();
    for (VertexMask j : d.skipped) out["skipped"].push_back(labels_json(j));
    out["total"] = group_json(d.total);
    return out.dump(2) + "\n";
}

std::string group_markdown(const GradedGroup& g, const std::string& prefix) {
    std::ostringstream os;
    os << "| degree | group |\n|---|---|\n";
    if (g.is_zero()) os << "| - | 0 |\n";
    for (const auto& [deg, piece] : g.pieces()) os << "| " << prefix << deg << " | " << piece.describe() << " |\n";
    return os.str();
}

std::string decomposition_markdown(const Decomposition& d) {
    std::ostringstream os;
    os << "Summand formula: " << d.formula << "\n\n";
    os << "| J | summand | groups |\n|---|---|---|\n";
    for (const auto* s : d.nonzero())
        os << "| " << format_set(s->j) << " | " << s->source << " | " << s->group.describe() << " |\n";
    os << "\nTotal:\n\n" << group_markdown(d.total);
    if (!d.skipped.empty()) {
        os << "\nSkipped (simplices of K, zero summand):";
        for (VertexMask j : d.skipped) os << ' ' << format_set(j);
        os << "\n";
    }
    return os.str();
}

std::string ring_json(const RingModel& r) {
    json out;
    out["spec"] = r.spec().to_string();
    out["coefficients"] = r.domain().is_field() ? "Z/" + std::to_string(r.domain().characteristic()) : "Z";
    out["basis"] = json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
        const auto& e = r.basis()[i];
        out["basis"].push_back({{"index", i},
                                {"J", labels_json(e.j)},
                                {"q", e.q},
                                {"degree", e.degree},
                                {"order", e.order.str()},
                                {"label", e.label}});
    }
    out["products"] = json::array();
    for (const auto& [key, value] : r.table()) {
        json terms = json::array();
        for (const auto& [c, coeff] : value) terms.push_back({c, coeff.str()});
        out["products"].push_back({key.first, key.second, terms});
    }
    return out.dump(2) + "\n";
}

namespace {

json hilbert_json(const HilbertSeries& h) {
    json t = json::array();
    for (const auto& list : h.torsion) {
        json l = json::array();
        for (const auto& x : list) l.push_back(x.str());
        t.push_back(l);
    }
    return {{"rank", h.rank}, {"torsion", t}};
}

}  // namespace

std::string block_ring_json(const MonomialBlockRing& r, int bound) {
    json out;
    out["description"] = r.description;
    out["variable_degree"] = r.variable_degree();
    out["coefficients"] = r.domain().is_field() ? "Z/" + std::to_string(r.domain().characteristic()) : "Z";
    out["blocks"] = json::array();
    for (VertexMask j : r.blocks()) {
        json gens = json::array();
        for (const auto& g : r.generators(j)) gens.push_back({{"q", g.q}, {"order", g.order.str()}});
        out["blocks"].push_back({{"J", labels_json(j)}, {"generators", gens}});
    }
    json products = json::array();
    for (VertexMask a : r.blocks())
        for (VertexMask b : r.blocks())
            for (std::size_t ga = 0; ga < r.generators(a).size(); ++ga)
                for (std::size_t gb = 0; gb < r.generators(b).size(); ++gb) {
                    const auto& p = r.coefficient_product(a, ga, b, gb);
                    if (p.empty()) continue;
                    json terms = json::array();
                    for (const auto& [g, c] : p) terms.push_back({g, c.str()});
                    products.push_back({{"left", {labels_json(a), ga}}, {"right", {labels_json(b), gb}}, {"product", terms}});
                }
    out["coefficient_products"] = products;
    out["hilbert"] = hilbert_json(r.hilbert(bound));
    return out.dump(2) + "\n";
}

std::string poset_ring_json(const PosetFaceRing& r, int bound) {
    const auto& s = r.poset();
    json out;
    out["variable_degree"] = r.variable_degree();
    json generators = json::array();
    for (std::size_t e = 0; e < s.size(); ++e)
        generators.push_back({{"element", s.name(static_cast<int>(e))},
                              {"vertex_set", labels_json(s.vertex_set(static_cast<int>(e)))}});
    out["generators"] = generators;
    json relations = json::array();
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            const int x = static_cast<int>(a), y = static_cast<int>(b);
            if (x == s.bottom() || y == s.bottom() || s.leq(x, y) || s.leq(y, x)) continue;
            relations.push_back({{"left", s.name(x)},
                                 {"right", s.name(y)},
                                 {"product", r.format(r.multiply(r.generator(x), r.generator(y)))}});
        }
    out["relations"] = relations;
    out["hilbert"] = hilbert_json(r.hilbert(bound));
    return out.dump(2) + "\n";
}

std::string hilbert_csv(const HilbertSeries& h) {
    std::ostringstream os;
    os << "degree,rank,torsion\n";
    for (std::size_t d = 0; d < h.rank.size(); ++d) {
        os << d << ',' << h.rank[d] << ',';
        for (std::size_t i = 0; i < h.torsion[d].size(); ++i) os << (i ? ";" : "") << h.torsion[d][i];
        os << '\n';
    }
    return os.str();
}

void write_text(const std::string& dir, const std::string& name, const std::string& text) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + path.string());
    f << text;
}

}  // namespace facelab
