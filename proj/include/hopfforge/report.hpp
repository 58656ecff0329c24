#pragma once

/*
 * JSON rendering of verdict structures.  Keys are emitted sorted and scalars
 * go through the canonical printer, so equal mathematical content produces
 * byte-identical reports; runtime_ms is forced to 0 unless timings are
 * explicitly requested.
 */

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "hopfforge/cocycles.hpp"
#include "hopfforge/datum_io.hpp"
#include "hopfforge/deform.hpp"
#include "hopfforge/nichols.hpp"

namespace hopfforge {

nlohmann::json axioms_json(const AxiomReport& r);
nlohmann::json cocycle_json(const MultiplicativeReport& r);
nlohmann::json graded_json(const GradedDecomposition& g);
nlohmann::json lifting_json(const LiftingMatch& m);
nlohmann::json hilbert_json(const HilbertReport& h);

nlohmann::json deformation_report(const PointedDatum& datum, const MultiplicativeReport& cocycle,
                                  const DeformationResult& result, const LiftingMatch& match,
                                  const GradedDecomposition& graded, uint64_t runtime_ms);

// sorted keys, two-space indent, trailing newline
std::string render_json(const nlohmann::json& j);

}  // namespace hopfforge
