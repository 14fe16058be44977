#pragma once

#include "starring/element.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starring {

/**
 * Named elements certifying that a condition holds, tagged with the condition
 * id (e.g. "T3.1(3)") and the exponents it was decided at. Witness names are
 * stable strings like "x2", "q", "g"; order is the construction order.
 */
struct Witness {
    std::string condition_id;
    unsigned n = 1, m = 1;
    std::vector<std::pair<std::string, Element>> elements;

    const Element* find(const std::string& name) const;
};

struct ConditionResult {
    bool holds = false;
    std::optional<Witness> witness; // present when holds and a witness applies
};

/**
 * The thirteen-way existence criterion for the Moore-Penrose inverse, decided
 * for one element at exponents n, m >= 1 (m is only read by conditions 2 and
 * 7). The conditions, with h = a*star(a) and g = star(a)*a:
 *    1  the inverse exists (library pipeline);
 *    2  a in R*g^m  and  a in h^n*R;
 *    3  a in a*g^n*R;
 *    4  a in R*h^n*a;
 *    5  h^n has a Moore-Penrose inverse and h^n*(h^n)^+ *a == a;
 *    6  g^n has one and a*(g^n)^+ *g^n == a;
 *    7  star-cancellable, h^m and g^n regular;
 *    8  star-cancellable, g^n*star(a) regular;
 *    9  star-cancellable, star(a)*h^n regular;
 *   10  star-cancellable, h^n has a group inverse;
 *   11  star-cancellable, g^n has a group inverse;
 *   12  star-cancellable, h^n has a Moore-Penrose inverse;
 *   13  star-cancellable, g^n has a Moore-Penrose inverse.
 * All thirteen agree with plain existence for every n, m; the sweep harness
 * verifies exactly that.
 */
ConditionResult t31_condition(const Element& a, int condition, unsigned n, unsigned m);

/**
 * Closed-form Moore-Penrose inverse from a witness of T3.1 condition 2, 3 or
 * 4. With the witness names used by t31_condition:
 *   2: a == x1*g^m, a == h^n*y1  ->  star(y1) * h^(m+n-2) * a * star(x1)
 *   3: a == a*g^n*x2             ->  star(x2) * g^(2n-1) * x2 * star(a)
 *   4: a == y2*h^n*a             ->  star(a) * y2 * h^(2n-1) * star(y2)
 * (an exponent of zero means the factor is the identity). The result is
 * verified against the four defining equations before being returned.
 */
Element t31_formula(const Element& a, const Witness& w);

/**
 * Moore-Penrose inverse from a witness of any T3.1 condition. Conditions
 * 2-4 use t31_formula; 5-13 reduce to those routes (for example, condition 5
 * feeds y2 = (h^n)^+ into route 4, condition 7 composes a {1,3}- and a
 * {1,4}-inverse built from the regularity witnesses). Throws
 * PreconditionError when the witness does not certify its condition.
 */
Element mp_from_witness(const Element& a, const Witness& w);

/**
 * Left-sided existence criterion at exponent n, with h = a*star(a):
 *   1  the inverse exists;
 *   2  a projection p with p*a == a, p in R*h^n and p in h^n*R;
 *   3  a Hermitian q with q*a == a and q in R*h^n;
 *   4  a Hermitian r with r*a == a and r in h^n*R;
 *   5  any b with b*a == a and b in R*h^n.
 * Finite carriers only (the witness search is an unbounded existential).
 */
ConditionResult t32_condition(const Element& a, int condition, unsigned n);

/** Right-sided mirror of t32_condition, with g = star(a)*a:
 *   2: projection w, a*w == a, w in R*g^n and g^n*R; 3: Hermitian u,
 *   a*u == a, u in g^n*R; 4: Hermitian v, a*v == a, v in R*g^n;
 *   5: any c, a*c == a, c in g^n*R. */
ConditionResult t33_condition(const Element& a, int condition, unsigned n);

/**
 * Perturbed-invertibility criterion at exponent n, h = a*star(a):
 *   1  the inverse exists;
 *   2  a projection q with q*a == 0 and h^n + q invertible;
 *   3  a projection q with q*a == 0 and h^n + q left invertible;
 *   4  an idempotent f with f*a == 0 and h^n + f invertible;
 *   5  an idempotent f with f*a == 0 and h^n + f left invertible;
 *   6  any c with c*a == 0 and h^n + c invertible;
 *   7  any c with c*a == 0 and h^n + c left invertible.
 */
ConditionResult t34_condition(const Element& a, int condition, unsigned n);

/** Mirror of t34_condition with g = star(a)*a: a projection p (conditions
 *  2-3), idempotent e (4-5) or arbitrary b (6-7) with a*p == 0 and g^n + p
 *  invertible, respectively right invertible. */
ConditionResult t35_condition(const Element& a, int condition, unsigned n);

/**
 * Closed form from a t34 witness: with y a left inverse of h^n + c,
 *   a^+ = star(a) * y * h^(2n-1) * star(y).
 * The t35 version uses x with x a right inverse of g^n + c and returns
 *   a^+ = star(x) * g^(2n-1) * x * star(a).
 */
Element t34_formula(const Element& a, const Witness& w);
Element t35_formula(const Element& a, const Witness& w);

/**
 * Re-checks that a witness certifies its condition, independently of how it
 * was produced: every defining equation (shape constraints, annihilation,
 * multiple membership, invertibility products) is re-evaluated from scratch.
 * Unknown condition ids throw Error.
 */
bool verify_witness(const Element& a, const Witness& w);

/** Well-supported: a projection p with a*p == a and star(a)*a + 1 - p
 *  invertible. Equivalent to Moore-Penrose existence. */
ConditionResult is_well_supported(const Element& a);

/** Co-supported: a projection q with q*a == a and a*star(a) + 1 - q
 *  invertible. */
ConditionResult is_co_supported(const Element& a);

enum class Side { Left, Right, TwoSided };

/** Whether 1 - a*b is invertible on the given side (exactly decided). */
bool one_minus_invertible(const Element& a, const Element& b, Side side);

/**
 * Exchange trick: from u with (1 - a*b) * u == 1 (Side::Left reads u as a
 * left inverse, mirrored accordingly) produces 1 + b*u*a, an inverse of
 * 1 - b*a on the same side. The output is verified; a bad u throws
 * PreconditionError.
 */
Element jacobson_transfer(const Element& a, const Element& b, const Element& u, Side side);

enum class T38Variant { VInvertible, VRightInvertible, UInvertible, ULeftInvertible };

/**
 * For regular a with inner inverse a_inner (checked), decides the variant:
 *   v = (star(a)*a)^n + 1 - a_inner*a   (invertible / right invertible)
 *   u = (a*star(a))^n + 1 - a*a_inner   (invertible / left invertible)
 * Each is equivalent to Moore-Penrose existence, independent of which inner
 * inverse is supplied.
 */
bool t38_condition(const Element& a, const Element& a_inner, unsigned n, T38Variant variant);

/**
 * Subset of a finite carrier stored as sorted canonical indices, so set
 * algebra and equality are index operations.
 */
struct Subset {
    RingDescriptor ring;
    std::vector<std::uint64_t> indices; // strictly increasing

    bool contains(std::uint64_t index) const;
    std::uint64_t size() const { return indices.size(); }

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.ring == b.ring && a.indices == b.indices;
    }
};

/** {x : a*x == 0} (Side::Right) or {x : x*a == 0} (Side::Left). */
Subset annihilator(const Element& a, Side side);

/** c*R (Side::Right) or R*c (Side::Left). */
Subset multiples(const Element& c, Side side);

Subset subset_sum(const Subset& x, const Subset& y);          // {u + v}
Subset subset_intersection(const Subset& x, const Subset& y);
bool subset_is_whole_ring(const Subset& x);
bool subset_is_zero_only(const Subset& x);

/**
 * Decomposition criterion, variants 1..8 with h = a*star(a), g = star(a)*a,
 * ann(y, side) the one-sided annihilator and b^o shorthand for ann(b, Right):
 *   1: R == a^o (+) g^n*R (direct sum)     2: R == a^o + g^n*R
 *   3: R == star(a)^o (+) h^n*R            4: R == star(a)^o + h^n*R
 *   5: R == ann(a, Left) (+) R*h^n         6: R == ann(a, Left) + R*h^n
 *   7: R == ann(star(a), Left) (+) R*g^n   8: R == ann(star(a), Left) + R*g^n
 * Every variant is equivalent to Moore-Penrose existence. Finite carriers
 * only.
 */
struct DecompositionCheck {
    bool holds = false;
    bool sum_is_ring = false;
    bool intersection_trivial = true; // always true for the plain-sum variants
    Subset annihilator_part;
    Subset multiple_part;
};

DecompositionCheck t39_decomposition(const Element& a, unsigned n, int variant);

} // namespace starring
