#pragma once

#include <string>

#include "dedekind/presentation.hpp"

namespace dedekind {

/* Basis-representation JSON: {"m": m, "d": [..], "l": [[[..]]]} with the
 * structure constants fully reduced. Integer values are emitted as decimal
 * strings (they routinely exceed 64 bits) and accepted back as either JSON
 * integers or strings. */
std::string presentation_to_json(const FiniteRingPresentation& R);
FiniteRingPresentation presentation_from_json(const std::string& text);

}  // namespace dedekind
