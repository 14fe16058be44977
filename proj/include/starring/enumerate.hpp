#pragma once

#include "starring/element.hpp"

#include <cstdint>

namespace starring {

/** Default ceiling on carrier sizes for exhaustive work (see STARRING_CAP). */
constexpr std::uint64_t kDefaultElementCap = 10000;

/** Active enumeration cap: the STARRING_CAP environment variable when set to
 *  a positive integer, kDefaultElementCap otherwise. */
std::uint64_t element_cap();

/**
 * Canonical enumeration of a finite carrier by index:
 *   - ZMod:  index == residue;
 *   - MatZp: index written in base p, the first row-major entry (top left)
 *     being the least significant digit.
 *
 * The index <-> element bijection makes subset arithmetic and deterministic
 * parallel partitioning cheap. Throws UnsupportedError for MatQi and
 * ResourceError when the carrier exceeds element_cap().
 */
class ElementStream {
  public:
    explicit ElementStream(const RingDescriptor& r, std::uint64_t cap = element_cap());

    const RingDescriptor& ring() const { return ring_; }
    std::uint64_t size() const { return size_; }

    Element at(std::uint64_t index) const;
    std::uint64_t index_of(const Element& a) const;

  private:
    RingDescriptor ring_;
    std::uint64_t size_ = 0;
};

} // namespace starring
