#pragma once

#include <string>

#include "qcorr/states.hpp"

namespace qcorr {

// JSON object with keys rho11, rho22, rho33, rho44, rho14_re, rho14_im,
// rho23_re, rho23_im. Doubles are written with enough digits to round-trip
// exactly.
std::string to_json_string(const XState& state);

// Parses the representation produced by to_json_string. Throws ConfigInvalid
// on malformed input and StateInvalid when the entries violate X-state
// constraints.
XState xstate_from_json_string(const std::string& text);

} // namespace qcorr
