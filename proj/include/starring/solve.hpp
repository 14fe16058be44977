#pragma once

#include "starring/element.hpp"

#include <optional>

namespace starring {

/**
 * One-sided linear equation over the ring:
 *   RightMul: find x with c * x = t;
 *   LeftMul:  find x with x * c = t.
 */
enum class MulSide { RightMul, LeftMul };

struct LinearProblem {
    MulSide side;
    Element c;
    Element t;
};

/**
 * Deterministic exact solver. ZMod scans residues in canonical order and
 * returns the first solution; the matrix backends run Gaussian elimination
 * (entrywise the equation splits into one field system per column or row of
 * x, which is how the k^2-unknown system is handled blockwise), with free
 * variables pinned to zero. Every result is verified against the equation
 * before it is returned. nullopt means no solution exists.
 */
std::optional<Element> solve(const LinearProblem& problem);

std::optional<Element> solve(MulSide side, const Element& c, const Element& t);

/** Convenience membership tests: is t in c*R, respectively R*c? */
bool in_right_ideal(const Element& c, const Element& t);
bool in_left_ideal(const Element& c, const Element& t);

} // namespace starring
