#pragma once

#include "starring/element.hpp"

namespace starring {

Element zero(const RingDescriptor& r);
Element one(const RingDescriptor& r);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element neg(const Element& a);

/** The ring involution: identity on ZMod, transpose on MatZp, conjugate
 *  transpose on MatQi. Satisfies star(star(a)) == a and
 *  star(mul(a, b)) == mul(star(b), star(a)). */
Element star(const Element& a);

/** a^e by repeated squaring; power(a, 0) is the identity. */
Element power(const Element& a, unsigned e);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element operator-(const Element& a) { return neg(a); }

bool is_zero(const Element& a);
bool is_one(const Element& a);

/** Structural predicates of one element, all decided exactly. */
struct ElementFlags {
    bool idempotent = false;       // a^2 == a
    bool hermitian = false;        // star(a) == a
    bool projection = false;       // idempotent and hermitian
    bool normal = false;           // a * star(a) == star(a) * a
    bool unit = false;             // two-sided inverse exists
    bool left_invertible = false;  // some x with x * a == 1
    bool right_invertible = false; // some x with a * x == 1
};

/**
 * Computes every flag. Invertibility is decided by witness search on the
 * finite carriers and by rank on MatQi (where left, right and two-sided
 * invertibility coincide).
 */
ElementFlags classify(const Element& a);

} // namespace starring
