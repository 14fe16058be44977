#pragma once

#include "starring/descriptor.hpp"
#include "starring/qi.hpp"

#include <cstdint>
#include <vector>

namespace starring {

/**
 * Immutable ring element in canonical form.
 *
 * Payload by kind:
 *   - ZMod:  a residue in [0, n);
 *   - MatZp: k*k entries in [0, p), row-major;
 *   - MatQi: k*k Gaussian rationals, row-major, components in lowest terms.
 *
 * Construction canonicalizes, so operator== is plain payload comparison.
 * Every element carries its descriptor; mixing rings throws RingMismatchError.
 */
class Element {
  public:
    static Element zmod(const RingDescriptor& r, std::uint64_t residue);
    static Element mat_zp(const RingDescriptor& r, std::vector<std::uint64_t> entries);
    static Element mat_qi(const RingDescriptor& r, std::vector<Qi> entries);

    const RingDescriptor& ring() const { return ring_; }

    std::uint64_t residue() const;
    const std::vector<std::uint32_t>& zp_entries() const;
    const std::vector<Qi>& qi_entries() const;

    std::uint32_t zp_at(std::uint32_t row, std::uint32_t col) const;
    const Qi& qi_at(std::uint32_t row, std::uint32_t col) const;

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /** Strict total order on canonical payloads within one ring; used to make
     *  scans and reports deterministic. Throws on ring mismatch. */
    friend bool element_less(const Element& a, const Element& b);

  private:
    explicit Element(RingDescriptor r) : ring_(r) {}

    RingDescriptor ring_;
    std::uint64_t residue_ = 0;
    std::vector<std::uint32_t> zp_;
    std::vector<Qi> qi_;
};

/** Throws RingMismatchError unless both elements live in the same ring. */
void require_same_ring(const Element& a, const Element& b);

} // namespace starring
