#include "starring/ginverse.hpp"

#include "starring/detail/fields.hpp"
#include "starring/enumerate.hpp"
#include "starring/errors.hpp"
#include "starring/ring.hpp"
#include "starring/solve.hpp"

namespace starring {

namespace {

using detail::QiOps;

InverseResult missing(InverseKind kind, std::string reason) {
    InverseResult r{kind, std::nullopt, {}, std::move(reason)};
    return r;
}

bool is_13_inverse(const Element& a, const Element& x) {
    Element ax = mul(a, x);
    return mul(ax, a) == a && star(ax) == ax;
}

bool is_14_inverse(const Element& a, const Element& y) {
    Element ya = mul(y, a);
    return mul(a, ya) == a && star(ya) == ya;
}

bool group_equations(const Element& a, const Element& b) {
    Element ab = mul(a, b);
    return mul(ab, a) == a && mul(b, ab) == b && ab == mul(b, a);
}

/** Moore-Penrose inverse of a Q(i) matrix through the full-rank factorization
 *  a = F*G: pinv = adj(G) * inv(G*adj(G)) * inv(adj(F)*F) * adj(F). */
Element qi_rank_factor_mp(const Element& a) {
    const auto& r = a.ring();
    QiOps f;
    auto m = detail::to_qi_mat(a);
    auto fact = linalg::rank_factorize(f, m);
    if (fact.rank == 0) return zero(r);
    auto gs = linalg::conj_transpose(f, fact.right); // cols x rank
    auto fs = linalg::conj_transpose(f, fact.left);  // rank x rows
    auto ggs = linalg::mat_mul(f, fact.right, gs);   // rank x rank
    auto fsf = linalg::mat_mul(f, fs, fact.left);    // rank x rank
    auto ggs_inv = linalg::inverse(f, ggs);
    auto fsf_inv = linalg::inverse(f, fsf);
    if (!ggs_inv || !fsf_inv) throw Error("full-rank factor failed to invert");
    auto out = linalg::mat_mul(f, gs, linalg::mat_mul(f, *ggs_inv, linalg::mat_mul(f, *fsf_inv, fs)));
    return detail::from_qi_mat(r, out);
}

std::optional<Element> qi_group_inverse(const Element& a) {
    const auto& r = a.ring();
    QiOps f;
    auto m = detail::to_qi_mat(a);
    auto fact = linalg::rank_factorize(f, m);
    if (fact.rank == 0) return zero(r);
    auto gf = linalg::mat_mul(f, fact.right, fact.left); // rank x rank
    auto gf_inv = linalg::inverse(f, gf);
    if (!gf_inv) return std::nullopt; // happens exactly when rank(a^2) < rank(a)
    auto gf_inv2 = linalg::mat_mul(f, *gf_inv, *gf_inv);
    auto out = linalg::mat_mul(f, fact.left, linalg::mat_mul(f, gf_inv2, fact.right));
    return detail::from_qi_mat(r, out);
}

std::uint32_t qi_rank(const Element& a) {
    return linalg::rank(QiOps{}, detail::to_qi_mat(a));
}

} // namespace

PenroseCheck penrose_check(const Element& a, const Element& b) {
    require_same_ring(a, b);
    Element ab = mul(a, b), ba = mul(b, a);
    PenroseCheck c;
    c.eq1 = mul(ab, a) == a;
    c.eq2 = mul(ba, b) == b;
    c.eq3 = star(ab) == ab;
    c.eq4 = star(ba) == ba;
    return c;
}

InverseResult find_13(const Element& a) {
    // x is a {1,3}-inverse exactly when star(x) * star(a) * a == a
    auto w = solve(MulSide::LeftMul, mul(star(a), a), a);
    if (!w) return missing(InverseKind::OneThree, "no w solves w * (star(a)*a) == a");
    Element x = star(*w);
    if (!is_13_inverse(a, x)) throw Error("{1,3} witness failed its defining equations");
    InverseResult r{InverseKind::OneThree, x, {{"w", *w}}, ""};
    return r;
}

InverseResult find_14(const Element& a) {
    // y is a {1,4}-inverse exactly when a * star(a) * star(y) == a
    auto w = solve(MulSide::RightMul, mul(a, star(a)), a);
    if (!w) return missing(InverseKind::OneFour, "no w solves (a*star(a)) * w == a");
    Element y = star(*w);
    if (!is_14_inverse(a, y)) throw Error("{1,4} witness failed its defining equations");
    InverseResult r{InverseKind::OneFour, y, {{"w", *w}}, ""};
    return r;
}

Element mp_from_13_14(const Element& a, const Element& x, const Element& y) {
    require_same_ring(a, x);
    require_same_ring(a, y);
    if (!is_13_inverse(a, x)) throw PreconditionError("x is not a {1,3}-inverse of a");
    if (!is_14_inverse(a, y)) throw PreconditionError("y is not a {1,4}-inverse of a");
    Element b = mul(mul(y, a), x);
    if (!penrose_check(a, b).all()) throw Error("composition y*a*x failed the defining equations");
    return b;
}

InverseResult moore_penrose(const Element& a) {
    InverseResult x = find_13(a);
    InverseResult y = find_14(a);
    if (!x.value || !y.value) {
        std::string reason;
        if (!x.value) reason = "no {1,3}-inverse: " + x.reason;
        if (!y.value) {
            if (!reason.empty()) reason += "; ";
            reason += "no {1,4}-inverse: " + y.reason;
        }
        return missing(InverseKind::MoorePenrose, std::move(reason));
    }
    Element b = mp_from_13_14(a, *x.value, *y.value);
    InverseResult r{InverseKind::MoorePenrose, b, {}, ""};
    r.certificate.emplace_back("one_three_witness", *x.value);
    r.certificate.emplace_back("one_four_witness", *y.value);
    return r;
}

InverseResult mp_oracle(const Element& a) {
    const auto& ring = a.ring();
    if (ring.kind == RingKind::MatQi) {
        Element b = qi_rank_factor_mp(a);
        if (!penrose_check(a, b).all()) throw Error("factorization inverse failed the defining equations");
        InverseResult r{InverseKind::MoorePenrose, b, {}, ""};
        return r;
    }
    ElementStream stream(ring);
    std::optional<Element> found;
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element b = stream.at(i);
        if (!penrose_check(a, b).all()) continue;
        if (found) throw Error("two distinct candidates passed all four defining equations");
        found = b;
    }
    if (!found) return missing(InverseKind::MoorePenrose, "no element passes all four defining equations");
    InverseResult r{InverseKind::MoorePenrose, *found, {}, ""};
    return r;
}

InverseResult group_inverse(const Element& a) {
    const auto& ring = a.ring();
    if (ring.kind == RingKind::MatQi) {
        auto b = qi_group_inverse(a);
        if (!b) return missing(InverseKind::Group, "rank(a^2) < rank(a), no group inverse");
        if (!group_equations(a, *b)) throw Error("factorization group inverse failed its equations");
        InverseResult r{InverseKind::Group, *b, {}, ""};
        return r;
    }
    ElementStream stream(ring);
    std::optional<Element> found;
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element b = stream.at(i);
        if (!group_equations(a, b)) continue;
        if (found) throw Error("two distinct group inverses found");
        found = b;
    }
    if (!found) return missing(InverseKind::Group, "no element satisfies the group-inverse equations");
    InverseResult r{InverseKind::Group, *found, {}, ""};
    return r;
}

std::vector<Element> inner_inverses(const Element& a) {
    const auto& ring = a.ring();
    if (!ring.finite()) throw UnsupportedError("inner-inverse enumeration needs a finite carrier");
    ElementStream stream(ring);
    std::vector<Element> out;
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element g = stream.at(i);
        if (mul(mul(a, g), a) == a) out.push_back(g);
    }
    return out;
}

bool is_EP(const Element& a) {
    InverseResult mp = moore_penrose(a);
    if (!mp.value) return false;
    InverseResult gi = group_inverse(a);
    return gi.value && *gi.value == *mp.value;
}

bool is_star_cancellable(const Element& a) {
    const auto& ring = a.ring();
    if (ring.kind == RingKind::MatQi) {
        std::uint32_t r = qi_rank(a);
        return qi_rank(mul(star(a), a)) == r && qi_rank(mul(a, star(a))) == r;
    }
    ElementStream stream(ring);
    Element z = zero(ring);
    Element sa = mul(star(a), a), as = mul(a, star(a));
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element x = stream.at(i);
        if (mul(sa, x) == z && mul(a, x) != z) return false;
        if (mul(x, as) == z && mul(x, a) != z) return false;
    }
    return true;
}

Element mp_from_left_star_regular(const Element& a, const Element& x) {
    require_same_ring(a, x);
    Element ax = mul(a, x);
    if (mul(mul(a, star(a)), ax) != a)
        throw PreconditionError("x does not satisfy a == a * star(a) * a * x");
    Element b = mul(mul(mul(star(ax), a), x), star(a));
    if (!penrose_check(a, b).all()) throw Error("left-sided formula failed the defining equations");
    return b;
}

Element mp_from_right_star_regular(const Element& a, const Element& y) {
    require_same_ring(a, y);
    Element ya = mul(y, a);
    if (mul(ya, mul(star(a), a)) != a)
        throw PreconditionError("y does not satisfy a == y * a * star(a) * a");
    Element b = mul(mul(star(a), ya), star(ya));
    if (!penrose_check(a, b).all()) throw Error("right-sided formula failed the defining equations");
    return b;
}

} // namespace starring
