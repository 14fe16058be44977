#pragma once

#include "starring/element.hpp"

#include <json.hpp>

#include <string>

namespace starring {

/**
 * Ring descriptors travel as JSON:
 *   {"kind":"ZMod","n":12}
 *   {"kind":"MatZp","p":3,"k":2}
 *   {"kind":"MatQi","k":2}
 * Unknown kinds, missing fields and invariant violations raise ParseError /
 * DescriptorError with the offending key in the message.
 */
RingDescriptor parse_ring(const nlohmann::json& j);
RingDescriptor parse_ring_text(const std::string& text);
nlohmann::json ring_to_json(const RingDescriptor& r);

/**
 * Element values:
 *   ZMod:  integer (negative values are reduced), e.g. 7
 *   MatZp: k x k integer rows, e.g. [[1,2],[0,5]]
 *   MatQi: k x k strings "a/b+c/di", e.g. [["3/2-1/2i","0"],["1","i"]]
 * Both the bare value and a {"value": ...} wrapper are accepted.
 */
Element parse_element(const RingDescriptor& r, const nlohmann::json& j);
Element parse_element_text(const RingDescriptor& r, const std::string& text);
nlohmann::json element_to_json(const Element& a);

/** Canonical display form; parse_element_text(r, format_element(a)) == a. */
std::string format_element(const Element& a);

} // namespace starring
