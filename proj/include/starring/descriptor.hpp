#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace starring {

enum class RingKind { ZMod, MatZp, MatQi };

enum class Involution { Identity, Transpose, ConjugateTranspose };

/**
 * Description of a concrete *-ring.
 *
 * Supported carriers:
 *   - ZMod:  integers modulo n (n >= 2), identity involution;
 *   - MatZp: k x k matrices over the prime field Z_p, transpose;
 *   - MatQi: k x k matrices over the Gaussian rationals, conjugate transpose.
 *
 * Each kind pairs with exactly one involution; check() enforces the pairing
 * along with the arithmetic invariants (n >= 2, p prime, k >= 1).
 */
struct RingDescriptor {
    RingKind kind = RingKind::ZMod;
    Involution involution = Involution::Identity;
    std::uint64_t n = 2; // ZMod modulus
    std::uint32_t p = 2; // MatZp characteristic
    std::uint32_t k = 1; // matrix dimension for MatZp / MatQi

    static RingDescriptor zmod(std::uint64_t n);
    static RingDescriptor mat_zp(std::uint32_t p, std::uint32_t k);
    static RingDescriptor mat_qi(std::uint32_t k);

    /** Throws DescriptorError if the descriptor is malformed. */
    void check() const;

    bool finite() const { return kind != RingKind::MatQi; }

    /** Carrier size for finite kinds; nullopt for MatQi or on overflow. */
    std::optional<std::uint64_t> order() const;

    /** Short display name: "ZMod(6)", "MatZp(3,2)", "MatQi(2)". */
    std::string name() const;

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        if (a.kind != b.kind || a.involution != b.involution) return false;
        switch (a.kind) {
            case RingKind::ZMod: return a.n == b.n;
            case RingKind::MatZp: return a.p == b.p && a.k == b.k;
            case RingKind::MatQi: return a.k == b.k;
        }
        return false;
    }
    friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }
};

bool is_prime(std::uint64_t v);

} // namespace starring
