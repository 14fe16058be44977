#pragma once

#include "starring/element.hpp"
#include "starring/errors.hpp"
#include "starring/linalg.hpp"

#include <cstdint>

namespace starring::detail {

/** Prime field Z_p with entries stored as uint32 residues. */
struct FpOps {
    using value_type = std::uint32_t;
    std::uint32_t p;

    value_type zero() const { return 0; }
    value_type one() const { return p == 1 ? 0 : 1; }
    bool is_zero(value_type v) const { return v == 0; }
    value_type add(value_type a, value_type b) const { return std::uint32_t((std::uint64_t(a) + b) % p); }
    value_type sub(value_type a, value_type b) const { return std::uint32_t((std::uint64_t(a) + p - b) % p); }
    value_type mul(value_type a, value_type b) const { return std::uint32_t(std::uint64_t(a) * b % p); }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type conj(value_type a) const { return a; }
    value_type inv(value_type a) const {
        if (a == 0) throw Error("division by zero in Z_p");
        // extended Euclid; p is prime so every nonzero residue is a unit
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p;
        return std::uint32_t(t);
    }
};

/** The Gaussian rational field. */
struct QiOps {
    using value_type = Qi;

    value_type zero() const { return Qi(); }
    value_type one() const { return Qi(1); }
    bool is_zero(const value_type& v) const { return v.is_zero(); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type conj(const value_type& a) const { return a.conj(); }
    value_type inv(const value_type& a) const { return a.inv(); }
};

linalg::Mat<std::uint32_t> to_mat(const Element& a);   // MatZp payload
linalg::Mat<Qi> to_qi_mat(const Element& a);           // MatQi payload
Element from_mat(const RingDescriptor& r, const linalg::Mat<std::uint32_t>& m);
Element from_qi_mat(const RingDescriptor& r, const linalg::Mat<Qi>& m);

} // namespace starring::detail
