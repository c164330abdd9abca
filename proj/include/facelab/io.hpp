#pragma once

#include "facelab/cupring.hpp"
#include "facelab/decomp.hpp"
#include "facelab/facering.hpp"
#include "facelab/panel_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace facelab {

/// A parsed input file. Accepted top-level shapes:
///   {"m": int, "maximal_simplices": [[...], ...]}                 complex
///   {"elements": [...], "covers": [[a, b], ...], "vertex_labels": {...}}  poset
///   {"complex": <complex>, "panels": [[simplex, ...], ...]}       generic panels
///   {"K": <complex>}, {"S": <poset>}, {"K": <complex>, "partition": [[...], ...]}
/// Structural problems (bad JSON, wrong types, missing keys) raise
/// ParseError; mathematical ones (labels out of range, invalid posets)
/// raise ValidationError.
struct InputDocument {
    enum class Kind { complex, poset, panels, simplicial, poset_panels, partition };

    Kind kind = Kind::complex;
    std::optional<SimplicialComplex> complex;  // K, or Y for generic panels
    std::optional<SimplicialPoset> poset;
    std::vector<std::vector<Simplex>> panels;
    std::vector<std::vector<int>> partition;
    std::vector<std::string> warnings;

    std::string kind_name() const;
};

InputDocument parse_input(const std::string& text);
InputDocument read_input(const std::string& path);

/// The panel structure an input stands for: Y^K for complexes, Y^S for
/// posets, the given panels, or the partition coarsening of Y^K.
PanelComplex panel_complex_of(const InputDocument& in, Parallelism par = {});

/// The simplicial complex an input is "about": K, Sd(Δ^S), or Y.
SimplicialComplex complex_of(const InputDocument& in);

/// "J,degree,rank,torsion" rows for every nonzero summand piece, then the
/// total with J = "total".
std::string decomposition_csv(const Decomposition& d);
std::string decomposition_json(const Decomposition& d);
/// Markdown table of the nonzero summands and the total.
std::string decomposition_markdown(const Decomposition& d);

/// Markdown table "| degree | group |" of a graded group.
std::string group_markdown(const GradedGroup& g, const std::string& prefix = "H^");

std::string ring_json(const RingModel& r);
std::string block_ring_json(const MonomialBlockRing& r, int bound);
std::string poset_ring_json(const PosetFaceRing& r, int bound);
/// "degree,rank,torsion" rows.
std::string hilbert_csv(const HilbertSeries& h);

/// Writes text to dir/name, creating dir if needed. ValidationError on failure.
void write_text(const std::string& dir, const std::string& name, const std::string& text);

}  // namespace facelab
