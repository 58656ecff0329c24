#include "hopfforge/report.hpp"

namespace hopfforge {

nlohmann::json axioms_json(const AxiomReport& r) {
  nlohmann::json j;
  j["associativity"] = r.associativity;
  j["unit"] = r.unit;
  j["coassociativity"] = r.coassociativity;
  j["counit"] = r.counit;
  j["bialgebra_compat"] = r.bialgebra_compat;
  j["antipode"] = r.antipode;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

nlohmann::json cocycle_json(const MultiplicativeReport& r) {
  nlohmann::json j;
  j["normalized"] = r.normalized;
  j["multiplicative"] = r.cocycle_identity;
  j["invertible"] = r.invertible;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

nlohmann::json graded_json(const GradedDecomposition& g) {
  nlohmann::json j;
  j["s"] = g.s;
  j["unital_degree_zero"] = g.unital_degree_zero;
  j["infinitesimal_is_hochschild"] = g.infinitesimal_hochschild;
  if (!g.witness.empty()) j["witness"] = g.witness;
  return j;
}

nlohmann::json lifting_json(const LiftingMatch& m) {
  nlohmann::json j;
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : m.relations) {
    nlohmann::json e;
    e["name"] = r.name;
    e["residual_zero"] = r.residual_zero;
    rels.push_back(e);
  }
  j["relations"] = rels;
  j["dimension"] = m.dimension_ok;
  if (!m.witness.empty()) j["witness"] = m.witness;
  return j;
}

nlohmann::json hilbert_json(const HilbertReport& h) {
  nlohmann::json j;
  j["ranks"] = h.ranks;
  j["expected"] = h.expected;
  j["match"] = h.match;
  if (!h.witness.empty()) j["witness"] = h.witness;
  return j;
}

nlohmann::json deformation_report(const PointedDatum& datum, const MultiplicativeReport& cocycle,
                                  const DeformationResult& result, const LiftingMatch& match,
                                  const GradedDecomposition& graded, uint64_t runtime_ms) {
  nlohmann::json j;
  j["datum_hash"] = datum_hash(datum);
  j["cocycle"] = cocycle_json(cocycle);
  j["hopf_axioms"] = axioms_json(result.axioms);
  j["antipode_route"] = result.antipode_route;
  j["lifting_match"] = lifting_json(match);
  j["graded"] = graded_json(graded);
  j["runtime_ms"] = runtime_ms;
  return j;
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace hopfforge
