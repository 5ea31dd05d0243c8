#pragma once

#include <string>

#include "qma/relations.hpp"
#include "qma/tensorop.hpp"

namespace qma {

/// JSON form of a presentation (schema_version, N, n, generators,
/// relations with stringified Q(q) coefficients). Coefficient strings
/// round-trip bit-exactly through RatFunc::parse.
std::string presentation_to_json(const QuadraticPresentation& pres);
QuadraticPresentation presentation_from_json(const std::string& text);

std::string presentation_to_latex(const QuadraticPresentation& pres);

/// Operator as {schema_version, N, strands, entries:[{out, in, coeff}]},
/// entries sorted for reproducible diffs.
std::string tensorop_to_json(const TensorOp& op);

/// Pattern summary: {schema_version, n, pattern, classifications, genus,
/// boundary, tau}.
std::string pattern_info_json(const GluingPattern& P);

} // namespace qma
