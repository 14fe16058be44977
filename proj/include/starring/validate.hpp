#pragma once

#include "starring/element.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace starring {

/** Outcome of the axiom check run by validate_ring. */
struct ValidationReport {
    bool ok = false;
    bool exhaustive_pairs = false;   // every pair checked
    bool exhaustive_triples = false; // every triple checked (associativity laws)
    std::uint64_t pairs_checked = 0;
    std::uint64_t triples_checked = 0;
    std::uint64_t sample_seed = 0; // only meaningful when sampling
    std::string first_violation;   // empty when ok
};

/**
 * Checks the *-ring axioms on the carrier: additive group laws, both
 * distributive laws, associativity of both operations, the unit laws and the
 * involution laws star(star(a)) == a, star(a + b) == star(a) + star(b),
 * star(a * b) == star(b) * star(a).
 *
 * Pairwise laws run over all |R|^2 pairs when that fits the budget, triple
 * laws over all |R|^3 triples when those fit; MatQi (and oversized finite
 * carriers) fall back to at least a thousand seeded pseudo-random tuples with
 * the seed recorded in the report.
 */
ValidationReport validate_ring(const RingDescriptor& r, std::uint64_t budget = 1000000);

} // namespace starring
