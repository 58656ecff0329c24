#pragma once

#include <iosfwd>
#include <string>

#include "hopfforge/abelian_group.hpp"

namespace hopfforge {

/*
 * Datum files are line-oriented with four sections:
 *
 *   [group]       invariant_factors = m1,m2,...
 *   [scalars]     conductor = L
 *   [vertices]    theta = t ; g.i = e1,...,ek ; chi.i = c1,...,ck ; optional N.i
 *   [parameters]  mu.i = <scalar-expr> ; lambda.i.j = <scalar-expr> (i < j)
 *
 * Unknown keys are errors.  Missing mu/lambda entries default to 0.  N.i is
 * recomputed from the pairing; a declared mismatch is an error.
 */
PointedDatum parse_datum(std::istream& in);
PointedDatum parse_datum_file(const std::string& path);
PointedDatum parse_datum_text(const std::string& text);

std::string write_datum_text(const PointedDatum& d);

// FNV-1a over the canonical serialization, hex string
std::string datum_hash(const PointedDatum& d);

}  // namespace hopfforge
