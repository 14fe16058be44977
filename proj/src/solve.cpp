#include "starring/solve.hpp"

#include "starring/detail/fields.hpp"
#include "starring/enumerate.hpp"
#include "starring/errors.hpp"
#include "starring/ring.hpp"

#include <type_traits>

namespace starring {

namespace {

Element apply(MulSide side, const Element& c, const Element& x) {
    return side == MulSide::RightMul ? mul(c, x) : mul(x, c);
}

std::optional<Element> solve_zmod(MulSide side, const Element& c, const Element& t) {
    ElementStream stream(c.ring());
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element x = stream.at(i);
        if (apply(side, c, x) == t) return x;
    }
    return std::nullopt;
}

template <class F>
std::optional<Element> solve_mat(const F& f, MulSide side, const Element& c, const Element& t) {
    const auto& r = c.ring();
    auto lift = [&](const Element& e) {
        if constexpr (std::is_same_v<F, detail::FpOps>)
            return detail::to_mat(e);
        else
            return detail::to_qi_mat(e);
    };
    auto solved = side == MulSide::RightMul ? linalg::solve_right(f, lift(c), lift(t))
                                            : linalg::solve_left(f, lift(c), lift(t));
    if (!solved) return std::nullopt;
    if constexpr (std::is_same_v<F, detail::FpOps>)
        return detail::from_mat(r, *solved);
    else
        return detail::from_qi_mat(r, *solved);
}

} // namespace

std::optional<Element> solve(MulSide side, const Element& c, const Element& t) {
    require_same_ring(c, t);
    std::optional<Element> x;
    switch (c.ring().kind) {
        case RingKind::ZMod: x = solve_zmod(side, c, t); break;
        case RingKind::MatZp: x = solve_mat(detail::FpOps{c.ring().p}, side, c, t); break;
        case RingKind::MatQi: x = solve_mat(detail::QiOps{}, side, c, t); break;
    }
    if (x && apply(side, c, *x) != t) throw Error("solver produced a non-solution");
    return x;
}

std::optional<Element> solve(const LinearProblem& problem) {
    return solve(problem.side, problem.c, problem.t);
}

bool in_right_ideal(const Element& c, const Element& t) {
    return solve(MulSide::RightMul, c, t).has_value();
}

bool in_left_ideal(const Element& c, const Element& t) {
    return solve(MulSide::LeftMul, c, t).has_value();
}

} // namespace starring
