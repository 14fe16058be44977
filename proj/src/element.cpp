#include "starring/element.hpp"

#include "starring/errors.hpp"

#include <string>

namespace starring {

namespace {

void require_kind(const RingDescriptor& r, RingKind kind, const char* what) {
    if (r.kind != kind) throw RingMismatchError(std::string(what) + " payload for " + r.name());
}

} // namespace

Element Element::zmod(const RingDescriptor& r, std::uint64_t residue) {
    r.check();
    require_kind(r, RingKind::ZMod, "residue");
    Element e(r);
    e.residue_ = residue % r.n;
    return e;
}

Element Element::mat_zp(const RingDescriptor& r, std::vector<std::uint64_t> entries) {
    r.check();
    require_kind(r, RingKind::MatZp, "matrix");
    std::size_t want = std::size_t(r.k) * r.k;
    if (entries.size() != want)
        throw RingMismatchError("expected " + std::to_string(want) + " entries for " + r.name());
    Element e(r);
    e.zp_.reserve(want);
    for (auto v : entries) e.zp_.push_back(std::uint32_t(v % r.p));
    return e;
}

Element Element::mat_qi(const RingDescriptor& r, std::vector<Qi> entries) {
    r.check();
    require_kind(r, RingKind::MatQi, "matrix");
    std::size_t want = std::size_t(r.k) * r.k;
    if (entries.size() != want)
        throw RingMismatchError("expected " + std::to_string(want) + " entries for " + r.name());
    Element e(r);
    e.qi_ = std::move(entries);
    return e;
}

std::uint64_t Element::residue() const {
    require_kind(ring_, RingKind::ZMod, "residue");
    return residue_;
}

const std::vector<std::uint32_t>& Element::zp_entries() const {
    require_kind(ring_, RingKind::MatZp, "matrix");
    return zp_;
}

const std::vector<Qi>& Element::qi_entries() const {
    require_kind(ring_, RingKind::MatQi, "matrix");
    return qi_;
}

std::uint32_t Element::zp_at(std::uint32_t row, std::uint32_t col) const {
    return zp_entries()[std::size_t(row) * ring_.k + col];
}

const Qi& Element::qi_at(std::uint32_t row, std::uint32_t col) const {
    return qi_entries()[std::size_t(row) * ring_.k + col];
}

void require_same_ring(const Element& a, const Element& b) {
    if (a.ring() != b.ring())
        throw RingMismatchError("elements of " + a.ring().name() + " and " + b.ring().name() +
                                " cannot be combined");
}

bool operator==(const Element& a, const Element& b) {
    require_same_ring(a, b);
    switch (a.ring_.kind) {
        case RingKind::ZMod: return a.residue_ == b.residue_;
        case RingKind::MatZp: return a.zp_ == b.zp_;
        case RingKind::MatQi: return a.qi_ == b.qi_;
    }
    return false;
}

bool element_less(const Element& a, const Element& b) {
    require_same_ring(a, b);
    switch (a.ring_.kind) {
        case RingKind::ZMod: return a.residue_ < b.residue_;
        case RingKind::MatZp:
            // mirror of the enumeration index: later row-major entries are the
            // more significant digits
            for (std::size_t i = a.zp_.size(); i-- > 0;)
                if (a.zp_[i] != b.zp_[i]) return a.zp_[i] < b.zp_[i];
            return false;
        case RingKind::MatQi:
            for (std::size_t i = 0; i < a.qi_.size(); ++i) {
                const Qi &x = a.qi_[i], &y = b.qi_[i];
                if (x.re() != y.re()) return x.re() < y.re();
                if (x.im() != y.im()) return x.im() < y.im();
            }
            return false;
    }
    return false;
}

} // namespace starring
