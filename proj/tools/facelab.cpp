// Command-line front end. Exit codes: 0 ok, 1 internal inconsistency or
// verify mismatch, 2 malformed input, 3 validation failure.

#include "facelab/cupring.hpp"
#include "facelab/decomp.hpp"
#include "facelab/errors.hpp"
#include "facelab/facering.hpp"
#include "facelab/io.hpp"
#include "facelab/simplicial_chains.hpp"
#include "facelab/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace facelab;

namespace {

struct Options {
    std::string input;
    std::string out_dir = ".";
    unsigned parallel = 0;
    std::string spec;
    std::string mode = "X";
    bool poset = false;
    bool no_skip = false;
    std::string variant = "sr";
    int degree_bound = 10;
    int variable_degree = 2;
    unsigned modulus = 0;
    bool iso = false;
    int max_vertices = 4;
    std::string ns = "0,1";
    std::string panel_mode = "auto";
};

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

Domain coefficients(const Options& o) { return o.modulus ? Domain::modulo(o.modulus) : Domain::integers(); }

std::string coefficient_name(const Options& o) { return o.modulus ? "Z/" + std::to_string(o.modulus) : "Z"; }

std::string f_vector_string(const SimplicialComplex& k) {
    std::string s;
    for (auto f : k.f_vector()) s += (s.empty() ? "" : ",") + std::to_string(f);
    return "(" + s + ")";
}

std::string betti_string(const GradedGroup& g) {
    if (g.is_zero()) return "0";
    const int top = g.pieces().rbegin()->first;
    const int low = std::min(0, g.pieces().begin()->first);
    std::string s;
    for (auto b : g.betti(low, top)) s += (s.empty() ? "" : ",") + std::to_string(b);
    return "(" + s + ")";
}

std::string input_section(const InputDocument& in) {
    std::ostringstream os;
    os << "Input kind: " << in.kind_name() << "\n\n";
    if (in.complex) {
        os << "Complex on " << in.complex->vertex_count() << " labels, f-vector " << f_vector_string(*in.complex)
           << (in.complex->is_minimal() ? "" : " (has ghost vertices)") << "\n\n";
    }
    if (in.poset) {
        os << "Poset with " << in.poset->size() << " elements on " << in.poset->vertex_count() << " vertices\n\n";
    }
    for (const auto& w : in.warnings) os << "Warning: " << w << "\n\n";
    return os.str();
}

SpherePairSpec spec_for(const Options& o, int m) {
    if (o.spec.empty()) return SpherePairSpec::uniform(m, 1);
    auto s = SpherePairSpec::parse(o.spec);
    if (s.size() != m) {
        throw ValidationError("--spec has " + std::to_string(s.size()) + " entries but the input has " +
                              std::to_string(m) + " panels");
    }
    return s;
}

DecompMode mode_of(const Options& o) {
    if (o.mode == "X" || o.mode == "x") return DecompMode::x_contractible;
    if (o.mode == "A" || o.mode == "a") return DecompMode::a_contractible;
    throw ValidationError("--mode must be X or A");
}

std::string panel_summary(const PanelComplex& p) {
    std::ostringstream os;
    const auto& y = p.space();
    os << "Y: " << y.vertex_count() << " vertices, f-vector " << f_vector_string(y) << "\n\n";
    if (!p.description.empty()) os << "Construction: " << p.description << "\n\n";
    os << "| panel | simplices |\n|---|---|\n";
    for (int j = 1; j <= p.panel_count(); ++j) os << "| P_" << j << " | " << p.panel(j).cell_count() << " |\n";
    os << "\n| J | c_J |\n|---|---|\n";
    for (VertexMask j : subsets_by_size(p.panel_count()))
        os << "| " << format_set(j) << " | " << p.component_count(j) << " |\n";
    os << "\n| face | I_f | anchor vertex | simplices |\n|---|---|---|---|\n";
    for (std::size_t f = 0; f < p.faces().size(); ++f) {
        const auto& face = p.faces()[f];
        os << "| " << f << " | " << format_set(face.index) << " | " << face.anchor << " | " << face.cells.cell_count()
           << " |\n";
    }
    return os.str();
}

int cmd_homology(const Options& o) {
    const auto in = read_input(o.input);
    const auto k = complex_of(in);
    const auto h = simplicial_homology(k, ChainFlavor::absolute, nullptr, coefficients(o));
    const auto c = simplicial_cohomology(k, ChainFlavor::absolute, nullptr, coefficients(o));
    std::ostringstream os;
    os << "# homology " << stem(o.input) << "\n\n" << input_section(in);
    os << "Coefficients: " << coefficient_name(o) << "\n\n";
    os << "Homology, Betti " << betti_string(h) << ":\n\n" << group_markdown(h, "H_");
    os << "\nCohomology:\n\n" << group_markdown(c);
    write_text(o.out_dir, stem(o.input) + ".report.md", os.str());
    std::cout << "Betti " << betti_string(h) << "  " << h.describe("H_") << "\n";
    return 0;
}

int cmd_panelize(const Options& o) {
    const auto in = read_input(o.input);
    using K = InputDocument::Kind;
    const std::map<std::string, std::vector<K>> accepted = {
        {"generic", {K::panels}},
        {"simplicial", {K::complex, K::simplicial}},
        {"poset", {K::poset, K::poset_panels}},
        {"partition", {K::partition}},
    };
    if (o.panel_mode != "auto") {
        const auto it = accepted.find(o.panel_mode);
        if (it == accepted.end()) throw ValidationError("mode must be one of auto, generic, simplicial, poset, partition");
        if (std::find(it->second.begin(), it->second.end(), in.kind) == it->second.end())
            throw ValidationError("input of kind " + in.kind_name() + " does not fit mode " + o.panel_mode);
    }
    const auto p = panel_complex_of(in, Parallelism{o.parallel});
    std::ostringstream os;
    os << "# panelize " << stem(o.input) << "\n\n" << input_section(in) << panel_summary(p);
    write_text(o.out_dir, stem(o.input) + ".report.md", os.str());
    std::cout << p.panel_count() << " panels, " << p.faces().size() << " faces, Y f-vector "
              << f_vector_string(p.space()) << "\n";
    return 0;
}

void write_decomposition(const Options& o, const std::string& command, const InputDocument& in,
                         const std::string& extra, const Decomposition& d) {
    std::ostringstream os;
    os << "# " << command << " " << stem(o.input) << "\n\n" << input_section(in) << extra;
    os << decomposition_markdown(d);
    os << "\nBetti " << betti_string(d.total) << "\n";
    write_text(o.out_dir, stem(o.input) + ".report.md", os.str());
    write_text(o.out_dir, stem(o.input) + ".summands.csv", decomposition_csv(d));
    write_text(o.out_dir, stem(o.input) + ".summands.json", decomposition_json(d));
}

int cmd_decomp(const Options& o) {
    const auto in = read_input(o.input);
    const auto p = panel_complex_of(in, Parallelism{o.parallel});
    const auto spec = spec_for(o, p.panel_count());
    const auto mode = mode_of(o);
    const auto d = mode == DecompMode::x_contractible ? summands_X_contractible(p, spec, Parallelism{o.parallel})
                                                      : summands_A_contractible(p, spec, Parallelism{o.parallel});
    write_decomposition(o, "decomp", in,
                        "Spec: " + spec.to_string() + ", mode " + (mode == DecompMode::x_contractible ? "X" : "A") +
                            "\n\n",
                        d);
    std::cout << d.total.describe() << "\n";
    return 0;
}

int cmd_hochster(const Options& o) {
    const auto in = read_input(o.input);
    HochsterOptions opt{!o.no_skip, Parallelism{o.parallel}};
    Decomposition d;
    std::string what;
    if (o.poset || in.poset) {
        const SimplicialPoset s = in.poset ? *in.poset : face_poset(*in.complex);
        d = hochster_table(s, spec_for(o, s.vertex_count()), opt);
        what = "Poset table, spec " + spec_for(o, s.vertex_count()).to_string() + "\n\n";
    } else {
        if (in.kind != InputDocument::Kind::complex && in.kind != InputDocument::Kind::simplicial)
            throw ValidationError("hochster needs a complex or a poset");
        d = hochster_table(*in.complex, spec_for(o, in.complex->vertex_count()), opt);
        what = "Complex table, spec " + spec_for(o, in.complex->vertex_count()).to_string() + "\n\n";
    }
    write_decomposition(o, "hochster", in, what, d);
    std::cout << d.total.describe() << "\n";
    return 0;
}

int cmd_ring(const Options& o) {
    const auto in = read_input(o.input);
    const auto p = panel_complex_of(in, Parallelism{o.parallel});
    const auto spec = spec_for(o, p.panel_count());
    const auto r = ds_ring(p, spec, coefficients(o), Parallelism{o.parallel});
    std::ostringstream os;
    os << "# ring " << stem(o.input) << "\n\n" << input_section(in);
    os << "Spec: " << spec.to_string() << ", coefficients " << coefficient_name(o) << "\n\n";
    os << "Basis elements: " << r.size() << ", nonzero structure constants: " << r.table().size() << "\n\n";
    os << "Additive structure:\n\n" << group_markdown(r.additive());
    os << "\n| a | b | a*b |\n|---|---|---|\n";
    for (const auto& [key, value] : r.table()) {
        std::string rhs;
        for (const auto& [c, coeff] : value)
            rhs += (rhs.empty() ? "" : " + ") + coeff.str() + "*" + r.basis()[c].label;
        os << "| " << r.basis()[key.first].label << " | " << r.basis()[key.second].label << " | " << rhs << " |\n";
    }
    write_text(o.out_dir, stem(o.input) + ".report.md", os.str());
    write_text(o.out_dir, stem(o.input) + ".ring.json", ring_json(r));
    std::cout << r.size() << " basis elements, " << r.table().size() << " nonzero products\n";
    return 0;
}

int cmd_facering(const Options& o) {
    const auto in = read_input(o.input);
    if (o.degree_bound < 0) throw ValidationError("--degree-bound must be >= 0");
    const Domain dom = coefficients(o);
    const Parallelism par{o.parallel};
    std::ostringstream os;
    os << "# facering " << stem(o.input) << "\n\n" << input_section(in);
    os << "Variant: " << o.variant << ", deg x_j = " << o.variable_degree << ", coefficients " << coefficient_name(o)
       << ", degree bound " << o.degree_bound << "\n\n";
    HilbertSeries h;
    std::string json_text;
    std::optional<IsoVerdict> verdict;
    if (o.variant == "sr") {
        if (!in.complex || in.kind == InputDocument::Kind::panels) throw ValidationError("variant sr needs a complex");
        const auto r = stanley_reisner(*in.complex, o.variable_degree, dom);
        h = r.hilbert(o.degree_bound);
        json_text = block_ring_json(r, o.degree_bound);
        if (o.iso)
            verdict = iso_check(topological_face_ring(panelize_simplicial(*in.complex, par), o.variable_degree, dom, par),
                                r, o.degree_bound);
    } else if (o.variant == "poset") {
        const SimplicialPoset s = in.poset ? *in.poset : (in.complex ? face_poset(*in.complex) : throw ValidationError("variant poset needs a poset or complex"));
        const PosetFaceRing r(s, o.variable_degree, dom);
        h = r.hilbert(o.degree_bound);
        json_text = poset_ring_json(r, o.degree_bound);
        if (o.iso)
            verdict = iso_check(r, topological_face_ring(panelize_poset(s, par), o.variable_degree, dom, par),
                                poset_correspondence(s, true), o.degree_bound);
    } else if (o.variant == "topological") {
        const auto p = panel_complex_of(in, par);
        const auto r = topological_face_ring(p, o.variable_degree, dom, par);
        h = r.hilbert(o.degree_bound);
        json_text = block_ring_json(r, o.degree_bound);
        if (o.iso) {
            if (in.kind == InputDocument::Kind::complex || in.kind == InputDocument::Kind::simplicial)
                verdict = iso_check(r, stanley_reisner(*in.complex, o.variable_degree, dom), o.degree_bound);
            else if (in.poset)
                verdict = iso_check(PosetFaceRing(*in.poset, o.variable_degree, dom), r,
                                    poset_correspondence(*in.poset, true), o.degree_bound);
            else
                throw ValidationError("--iso needs a complex or poset input");
        }
    } else {
        throw ValidationError("--variant must be sr, poset or topological");
    }
    os << "Hilbert series (rank by degree): " << h.ranks_string() << "\n\n";
    os << "| degree | rank | torsion |\n|---|---|---|\n";
    for (std::size_t d = 0; d < h.rank.size(); ++d) {
        std::string t;
        for (const auto& x : h.torsion[d]) t += (t.empty() ? "" : ";") + x.str();
        os << "| " << d << " | " << h.rank[d] << " | " << t << " |\n";
    }
    int code = 0;
    if (verdict) {
        os << "\nIsomorphism check: " << (verdict->ok ? "match" : "MISMATCH");
        if (!verdict->ok) os << " at stage " << verdict->stage << ", degree " << verdict->degree << ": " << verdict->detail;
        os << "\n";
        if (!verdict->ok) code = 1;
    }
    write_text(o.out_dir, stem(o.input) + ".report.md", os.str());
    write_text(o.out_dir, stem(o.input) + ".ring.json", json_text);
    write_text(o.out_dir, stem(o.input) + ".hilbert.csv", hilbert_csv(h));
    std::cout << "Hilbert " << h.ranks_string() << "\n";
    if (verdict) {
        std::cout << "iso_check: " << (verdict->ok ? "match" : "mismatch (" + verdict->stage + ", degree " +
                                                                   std::to_string(verdict->degree) + ")")
                  << "\n";
    }
    return code;
}

int cmd_verify(const Options& o) {
    const auto in = read_input(o.input);
    const Parallelism par{o.parallel};
    const auto p = panel_complex_of(in, par);
    const auto spec = spec_for(o, p.panel_count());
    const SimplicialComplex* k =
        (in.kind == InputDocument::Kind::complex || in.kind == InputDocument::Kind::simplicial) ? &*in.complex : nullptr;
    const auto v = verify_decomposition(p, spec, mode_of(o), k, par);
    std::ostringstream os;
    os << "# verify " << stem(o.input) << "\n\n" << input_section(in);
    os << "Spec: " << spec.to_string() << ", mode " << o.mode << "\n\n";
    os << "Verdict: " << (v.ok ? "MATCH" : "MISMATCH") << "\n\n";
    if (!v.ok) os << "Diagnostic: " << v.diagnostic << "\n\n";
    os << "Betti (formula): " << betti_string(v.formula.total) << "\n\n";
    os << "Betti (panel oracle, " << v.oracle_cells << " cells): " << betti_string(v.oracle) << "\n\n";
    if (v.classical) os << "Betti (classical oracle): " << betti_string(*v.classical) << "\n\n";
    os << "Formula total:\n\n" << group_markdown(v.formula.total) << "\nPanel oracle:\n\n" << group_markdown(v.oracle);
    if (v.classical) os << "\nClassical oracle:\n\n" << group_markdown(*v.classical);
    os << "\n" << decomposition_markdown(v.formula);
    write_text(o.out_dir, stem(o.input) + ".report.md", os.str());
    write_text(o.out_dir, stem(o.input) + ".summands.csv", decomposition_csv(v.formula));
    std::cout << (v.ok ? "MATCH" : "MISMATCH") << " formula " << betti_string(v.formula.total) << " oracle "
              << betti_string(v.oracle) << "\n";
    if (!v.ok) {
        std::cerr << v.diagnostic << "\n";
        return 1;
    }
    return 0;
}

int cmd_selftest(const Options& o) {
    if (o.max_vertices < 0 || o.max_vertices > 5) throw ValidationError("--max-vertices must be in 0..5");
    std::vector<int> ns;
    for (int n : SpherePairSpec::parse(o.ns).dims) ns.push_back(n);
    const auto r = oracle_sweep(o.max_vertices, ns, Parallelism{o.parallel});
    std::ostringstream os;
    os << "# selftest\n\nComplexes on at most " << o.max_vertices << " labels: " << r.complexes
       << "\n\nUniform specs n in {" << o.ns << "}, checks: " << r.checks << ", failures: " << r.failures.size() << "\n";
    for (const auto& f : r.failures) os << "\n- " << f;
    write_text(o.out_dir, "selftest.report.md", os.str() + "\n");
    std::cout << r.complexes << " complexes, " << r.checks << " checks, " << r.failures.size() << " failures\n";
    for (const auto& f : r.failures) std::cerr << f << "\n";
    return r.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polyhedral products over spaces with faces: homology, decompositions, rings, face rings"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--parallel", o.parallel, "worker threads (0 = all cores)");
    app.add_option("--out-dir", o.out_dir, "directory for report files");

    auto with_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "input JSON file")->required(); };
    auto* homology = app.add_subcommand("homology", "homology and cohomology of the input complex");
    with_input(homology);
    homology->add_option("--mod", o.modulus, "coefficients Z/p instead of Z");

    auto* panelize = app.add_subcommand("panelize", "panel structure summary: faces, I_f, c_J");
    panelize->add_option("mode", o.panel_mode, "auto | generic | simplicial | poset | partition")->required();
    with_input(panelize);

    auto* decomp = app.add_subcommand("decomp", "per-J summands of the additive decomposition");
    with_input(decomp);
    decomp->add_option("--spec", o.spec, "n_1,...,n_m (default all 1)");
    decomp->add_option("--mode", o.mode, "X (X_j contractible) or A (A_j contractible)");

    auto* hochster = app.add_subcommand("hochster", "full-subcomplex table of the moment-angle type complex");
    with_input(hochster);
    hochster->add_flag("--poset", o.poset, "use the poset formula (face poset for a complex)");
    hochster->add_option("--spec", o.spec, "n_1,...,n_m (default all 1)");
    hochster->add_flag("--no-skip", o.no_skip, "also compute summands of simplices J");

    auto* ring = app.add_subcommand("ring", "cohomology ring of the (D,S) polyhedral product as a block ring");
    with_input(ring);
    ring->add_option("--spec", o.spec, "n_1,...,n_m (default all 1)");
    ring->add_option("--mod", o.modulus, "coefficients Z/p instead of Z");

    auto* facering = app.add_subcommand("facering", "face rings and their Hilbert series");
    with_input(facering);
    facering->add_option("--variant", o.variant, "sr | poset | topological");
    facering->add_option("--degree-bound", o.degree_bound, "highest degree of the Hilbert series");
    facering->add_option("--variable-degree", o.variable_degree, "degree of each x_j (2, or 1 for the real case)");
    facering->add_option("--mod", o.modulus, "coefficients Z/p instead of Z");
    facering->add_flag("--iso", o.iso, "compare with the canonical partner ring");

    auto* verify = app.add_subcommand("verify", "formula against the brute-force product complex");
    with_input(verify);
    verify->add_option("--spec", o.spec, "n_1,...,n_m (default all 1)");
    verify->add_option("--mode", o.mode, "X or A");

    auto* selftest = app.add_subcommand("selftest", "exhaustive small-case oracle sweep");
    selftest->add_option("--max-vertices", o.max_vertices, "largest label count (0..5)");
    selftest->add_option("--n", o.ns, "uniform spec values to sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*homology) return cmd_homology(o);
        if (*panelize) return cmd_panelize(o);
        if (*decomp) return cmd_decomp(o);
        if (*hochster) return cmd_hochster(o);
        if (*ring) return cmd_ring(o);
        if (*facering) return cmd_facering(o);
        if (*verify) return cmd_verify(o);
        if (*selftest) return cmd_selftest(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
