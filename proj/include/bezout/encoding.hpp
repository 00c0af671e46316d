#pragma once

// Text and JSON encodings shared by the CLI and the report writers.
//
// Ring grammar:  Z | Q[x] | F<p>[x] | Z/<n> | F<p>[x]/<poly> | Q[x]/<poly>
// Polynomials are coefficient lists, low degree first: [1,0,1] = 1 + x^2.
// Integers that do not fit in 64 bits are written as JSON strings, and so are
// non-integral rational coefficients ("3/2").

#include "bezout/ring.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace bezout {

Ring parse_ring(std::string_view text);

/// Accepts an integer literal, a coefficient list, or any JSON value that
/// element_from_json understands.
Element parse_element(const Ring& ring, std::string_view text);

nlohmann::json element_to_json(const Element& a);
Element element_from_json(const Ring& ring, const nlohmann::json& value);

} // namespace bezout
