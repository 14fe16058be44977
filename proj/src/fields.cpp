#include "starring/detail/fields.hpp"

namespace starring::detail {

linalg::Mat<std::uint32_t> to_mat(const Element& a) {
    const auto& r = a.ring();
    linalg::Mat<std::uint32_t> m(r.k, r.k, 0);
    m.a.assign(a.zp_entries().begin(), a.zp_entries().end());
    return m;
}

linalg::Mat<Qi> to_qi_mat(const Element& a) {
    const auto& r = a.ring();
    linalg::Mat<Qi> m(r.k, r.k, Qi());
    m.a = a.qi_entries();
    return m;
}

Element from_mat(const RingDescriptor& r, const linalg::Mat<std::uint32_t>& m) {
    std::vector<std::uint64_t> entries(m.a.begin(), m.a.end());
    return Element::mat_zp(r, std::move(entries));
}

Element from_qi_mat(const RingDescriptor& r, const linalg::Mat<Qi>& m) {
    return Element::mat_qi(r, m.a);
}

} // namespace starring::detail
