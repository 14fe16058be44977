#include "starring/descriptor.hpp"

#include "starring/errors.hpp"

namespace starring {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

RingDescriptor RingDescriptor::zmod(std::uint64_t n) {
    RingDescriptor r;
    r.kind = RingKind::ZMod;
    r.involution = Involution::Identity;
    r.n = n;
    r.check();
    return r;
}

RingDescriptor RingDescriptor::mat_zp(std::uint32_t p, std::uint32_t k) {
    RingDescriptor r;
    r.kind = RingKind::MatZp;
    r.involution = Involution::Transpose;
    r.p = p;
    r.k = k;
    r.check();
    return r;
}

RingDescriptor RingDescriptor::mat_qi(std::uint32_t k) {
    RingDescriptor r;
    r.kind = RingKind::MatQi;
    r.involution = Involution::ConjugateTranspose;
    r.k = k;
    r.check();
    return r;
}

void RingDescriptor::check() const {
    switch (kind) {
        case RingKind::ZMod:
            if (involution != Involution::Identity)
                throw DescriptorError("ZMod requires the identity involution");
            if (n < 2) throw DescriptorError("ZMod needs n >= 2, got n=" + std::to_string(n));
            return;
        case RingKind::MatZp:
            if (involution != Involution::Transpose)
                throw DescriptorError("MatZp requires the transpose involution");
            if (!is_prime(p)) throw DescriptorError("MatZp needs a prime p, got p=" + std::to_string(p));
            if (k < 1) throw DescriptorError("MatZp needs k >= 1");
            return;
        case RingKind::MatQi:
            if (involution != Involution::ConjugateTranspose)
                throw DescriptorError("MatQi requires the conjugate-transpose involution");
            if (k < 1) throw DescriptorError("MatQi needs k >= 1");
            return;
    }
    throw DescriptorError("unknown ring kind");
}

std::optional<std::uint64_t> RingDescriptor::order() const {
    switch (kind) {
        case RingKind::ZMod: return n;
        case RingKind::MatZp: {
            std::uint64_t total = 1;
            for (std::uint32_t i = 0; i < k * k; ++i) {
                if (total > UINT64_MAX / p) return std::nullopt;
                total *= p;
            }
            return total;
        }
        case RingKind::MatQi: return std::nullopt;
    }
    return std::nullopt;
}

std::string RingDescriptor::name() const {
    switch (kind) {
        case RingKind::ZMod: return "ZMod(" + std::to_string(n) + ")";
        case RingKind::MatZp: return "MatZp(" + std::to_string(p) + "," + std::to_string(k) + ")";
        case RingKind::MatQi: return "MatQi(" + std::to_string(k) + ")";
    }
    return "?";
}

} // namespace starring
