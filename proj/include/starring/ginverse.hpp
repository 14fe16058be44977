#pragma once

#include "starring/element.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starring {

/** The four defining equations of the Moore-Penrose inverse, individually. */
struct PenroseCheck {
    bool eq1 = false; // a * b * a == a
    bool eq2 = false; // b * a * b == b
    bool eq3 = false; // star(a * b) == a * b
    bool eq4 = false; // star(b * a) == b * a
    bool all() const { return eq1 && eq2 && eq3 && eq4; }
};

PenroseCheck penrose_check(const Element& a, const Element& b);

enum class InverseKind { Inner, OneThree, OneFour, Group, MoorePenrose };

/**
 * Result of an inverse computation. When the inverse exists, certificate
 * holds the named intermediate witnesses that prove it (each verified); when
 * it does not, reason says which obstruction was met.
 */
struct InverseResult {
    InverseKind kind;
    std::optional<Element> value;
    std::vector<std::pair<std::string, Element>> certificate;
    std::string reason; // set when value is empty
};

/**
 * {1,3}-inverse: x with a*x*a == a and star(a*x) == a*x. Found by solving
 * w * (star(a) * a) = a and taking x = star(w); that equation characterizes
 * the {1,3} property exactly, so solver failure certifies nonexistence.
 */
InverseResult find_13(const Element& a);

/** {1,4}-inverse, the mirror image: solve (a * star(a)) * w = a, y = star(w). */
InverseResult find_14(const Element& a);

/** Composes a verified {1,3}-inverse x and {1,4}-inverse y into the
 *  Moore-Penrose inverse y * a * x. Preconditions are checked. */
Element mp_from_13_14(const Element& a, const Element& x, const Element& y);

/**
 * Moore-Penrose inverse via the {1,3}/{1,4} composition. Exact in every
 * backend; nonexistence is definite and carries the failing side in reason.
 */
InverseResult moore_penrose(const Element& a);

/**
 * Ground-truth oracle. Finite carriers: scan every b and keep those passing
 * all four defining equations (at most one can, which is asserted). MatQi:
 * full-rank factorization a = F*G with explicit inversion of G*adj(G) and
 * adj(F)*F, an independent construction from the solver pipeline.
 */
InverseResult mp_oracle(const Element& a);

/** Group inverse: b with a*b*a == a, b*a*b == b, a*b == b*a. Finite carriers
 *  scan; MatQi uses the factorization route, which exists exactly when
 *  rank(a^2) == rank(a). */
InverseResult group_inverse(const Element& a);

/** Every g with a * g * a == a, in canonical order (finite carriers only). */
std::vector<Element> inner_inverses(const Element& a);

/** EP means the Moore-Penrose and group inverses both exist and coincide. */
bool is_EP(const Element& a);

/** star-cancellable: star(a)*a*x == 0 implies a*x == 0, and
 *  y*a*star(a) == 0 implies y*a == 0. Finite carriers check all x and y;
 *  MatQi reduces to rank(star(a)*a) == rank(a) and rank(a*star(a)) == rank(a). */
bool is_star_cancellable(const Element& a);

/** From a == a * star(a) * a * x, returns star(a*x) * a * x * star(a), which
 *  is the Moore-Penrose inverse. The factorization is checked. */
Element mp_from_left_star_regular(const Element& a, const Element& x);

/** From a == y * a * star(a) * a, returns star(a) * y * a * star(y*a). */
Element mp_from_right_star_regular(const Element& a, const Element& y);

} // namespace starring
