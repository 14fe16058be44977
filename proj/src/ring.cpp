#include "starring/ring.hpp"

#include "starring/detail/fields.hpp"
#include "starring/errors.hpp"
#include "starring/linalg.hpp"
#include "starring/solve.hpp"

namespace starring {

namespace {

using detail::FpOps;
using detail::QiOps;

Element binary_mat_op(const Element& a, const Element& b, bool multiply, bool subtract) {
    const auto& r = a.ring();
    std::uint32_t k = r.k;
    if (r.kind == RingKind::MatZp) {
        auto x = detail::to_mat(a);
        auto y = detail::to_mat(b);
        FpOps fp{r.p};
        if (multiply) return detail::from_mat(r, linalg::mat_mul(fp, x, y));
        linalg::Mat<std::uint32_t> out(k, k, 0);
        for (std::size_t i = 0; i < out.a.size(); ++i)
            out.a[i] = subtract ? fp.sub(x.a[i], y.a[i]) : fp.add(x.a[i], y.a[i]);
        return detail::from_mat(r, out);
    }
    auto x = detail::to_qi_mat(a);
    auto y = detail::to_qi_mat(b);
    QiOps qf;
    if (multiply) return detail::from_qi_mat(r, linalg::mat_mul(qf, x, y));
    linalg::Mat<Qi> out(k, k, Qi());
    for (std::size_t i = 0; i < out.a.size(); ++i)
        out.a[i] = subtract ? (x.a[i] - y.a[i]) : (x.a[i] + y.a[i]);
    return detail::from_qi_mat(r, out);
}

} // namespace

Element zero(const RingDescriptor& r) {
    switch (r.kind) {
        case RingKind::ZMod: return Element::zmod(r, 0);
        case RingKind::MatZp: return Element::mat_zp(r, std::vector<std::uint64_t>(std::size_t(r.k) * r.k, 0));
        case RingKind::MatQi: return Element::mat_qi(r, std::vector<Qi>(std::size_t(r.k) * r.k, Qi()));
    }
    throw DescriptorError("unknown ring kind");
}

Element one(const RingDescriptor& r) {
    switch (r.kind) {
        case RingKind::ZMod: return Element::zmod(r, 1);
        case RingKind::MatZp: {
            std::vector<std::uint64_t> e(std::size_t(r.k) * r.k, 0);
            for (std::uint32_t i = 0; i < r.k; ++i) e[std::size_t(i) * r.k + i] = 1;
            return Element::mat_zp(r, std::move(e));
        }
        case RingKind::MatQi: {
            std::vector<Qi> e(std::size_t(r.k) * r.k, Qi());
            for (std::uint32_t i = 0; i < r.k; ++i) e[std::size_t(i) * r.k + i] = Qi(1);
            return Element::mat_qi(r, std::move(e));
        }
    }
    throw DescriptorError("unknown ring kind");
}

Element add(const Element& a, const Element& b) {
    require_same_ring(a, b);
    const auto& r = a.ring();
    if (r.kind == RingKind::ZMod) {
        std::uint64_t lhs = a.residue(), rhs = b.residue();
        // n can approach 2^64, so reduce without forming lhs + rhs
        std::uint64_t room = r.n - lhs;
        return Element::zmod(r, rhs >= room ? rhs - room : lhs + rhs);
    }
    return binary_mat_op(a, b, false, false);
}

Element sub(const Element& a, const Element& b) {
    require_same_ring(a, b);
    const auto& r = a.ring();
    if (r.kind == RingKind::ZMod) {
        std::uint64_t lhs = a.residue(), rhs = b.residue();
        return Element::zmod(r, lhs >= rhs ? lhs - rhs : r.n - (rhs - lhs));
    }
    return binary_mat_op(a, b, false, true);
}

Element mul(const Element& a, const Element& b) {
    require_same_ring(a, b);
    const auto& r = a.ring();
    if (r.kind == RingKind::ZMod) {
        if (r.n > UINT32_MAX)
            throw UnsupportedError("ZMod multiplication needs n <= 2^32");
        return Element::zmod(r, a.residue() * b.residue() % r.n);
    }
    return binary_mat_op(a, b, true, false);
}

Element neg(const Element& a) { return sub(zero(a.ring()), a); }

Element star(const Element& a) {
    const auto& r = a.ring();
    switch (r.kind) {
        case RingKind::ZMod: return a;
        case RingKind::MatZp: return detail::from_mat(r, linalg::transpose(detail::to_mat(a)));
        case RingKind::MatQi:
            return detail::from_qi_mat(r, linalg::conj_transpose(QiOps{}, detail::to_qi_mat(a)));
    }
    throw DescriptorError("unknown ring kind");
}

Element power(const Element& a, unsigned e) {
    Element result = one(a.ring());
    Element base = a;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

bool is_zero(const Element& a) { return a == zero(a.ring()); }
bool is_one(const Element& a) { return a == one(a.ring()); }

ElementFlags classify(const Element& a) {
    ElementFlags f;
    Element s = star(a);
    f.idempotent = mul(a, a) == a;
    f.hermitian = s == a;
    f.projection = f.idempotent && f.hermitian;
    f.normal = mul(a, s) == mul(s, a);
    const auto& r = a.ring();
    if (r.kind == RingKind::MatQi) {
        std::uint32_t rk = linalg::rank(QiOps{}, detail::to_qi_mat(a));
        f.left_invertible = f.right_invertible = f.unit = (rk == r.k);
        return f;
    }
    Element id = one(r);
    f.left_invertible = solve(MulSide::LeftMul, a, id).has_value();
    f.right_invertible = solve(MulSide::RightMul, a, id).has_value();
    f.unit = f.left_invertible && f.right_invertible;
    return f;
}

} // namespace starring
