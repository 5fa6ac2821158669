#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddwheel/numeric.hpp"
#include "oddwheel/search.hpp"
#include "oddwheel/wheel.hpp"

namespace oddwheel {

// Wheel input document, as accepted by parse_wheel_document:
//   {"n": 3, "spokes": [4, 5, 3], "rims": [3, 4, 5], "signs": [1, 1, -1]}
// "signs" is optional; lengths may be JSON integers or decimal strings
// (strings carry values beyond the double-safe range).  All parse errors
// are ValidationError with the offending field named.
struct WheelDocument {
    WheelLengths wheel;
    std::optional<SignVector> signs;
};

WheelDocument parse_wheel_document(const std::string& text);

// Serializes a wheel back to the document format above; includes "signs"
// when given.
std::string wheel_to_json(const WheelLengths& w, const SignVector* signs = nullptr);

// Point set document: {"points": [[xnum, xden, ynum, yden], ...]}.
std::vector<RationalPoint> parse_points_document(const std::string& text);

// {"kind": ..., "detail": {...}, "input": {wheel document}}; the detail
// layout depends on the kind (parity data, sign counts, witness signs with
// exact and approximate coordinates, or the offending residual).
std::string certificate_to_json(const Certificate& cert);

// {"n": ..., "spoke_products_mod4": [...], "crossing_step_count": ...,
//  "conclusion": "contradiction" | "inconclusive"}
std::string parity_certificate_to_json(const ParityCertificate& cert);

// One stream line per event: results are the wheel document plus a
// "witness_signs" field; parity certificates and checkpoints carry
// distinguishing keys ("certificate", "checkpoint").
std::string search_event_to_json(const SearchEvent& event);

}  // namespace oddwheel
