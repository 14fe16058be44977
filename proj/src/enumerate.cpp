#include "starring/enumerate.hpp"

#include "starring/errors.hpp"

#include <cstdlib>
#include <string>

namespace starring {

std::uint64_t element_cap() {
    if (const char* env = std::getenv("STARRING_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultElementCap;
}

ElementStream::ElementStream(const RingDescriptor& r, std::uint64_t cap) : ring_(r) {
    r.check();
    auto n = r.order();
    if (!n) throw UnsupportedError("cannot enumerate the infinite carrier " + r.name());
    if (*n > cap)
        throw ResourceError("carrier " + r.name() + " has " + std::to_string(*n) +
                            " elements, above the cap of " + std::to_string(cap));
    size_ = *n;
}

Element ElementStream::at(std::uint64_t index) const {
    if (index >= size_) throw Error("element index " + std::to_string(index) + " out of range");
    if (ring_.kind == RingKind::ZMod) return Element::zmod(ring_, index);
    std::vector<std::uint64_t> entries(std::size_t(ring_.k) * ring_.k, 0);
    for (auto& digit : entries) {
        digit = index % ring_.p;
        index /= ring_.p;
    }
    return Element::mat_zp(ring_, std::move(entries));
}

std::uint64_t ElementStream::index_of(const Element& a) const {
    if (a.ring() != ring_) throw RingMismatchError("element of " + a.ring().name() + " indexed in " + ring_.name());
    if (ring_.kind == RingKind::ZMod) return a.residue();
    const auto& entries = a.zp_entries();
    std::uint64_t index = 0;
    for (std::size_t i = entries.size(); i-- > 0;) index = index * ring_.p + entries[i];
    return index;
}

} // namespace starring
