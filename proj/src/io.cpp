#include "starring/io.hpp"

#include "starring/errors.hpp"

#include <cstdint>

namespace starring {

namespace {

using nlohmann::json;

std::uint64_t get_uint(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("ring descriptor is missing \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<long long>() < 0))
        throw ParseError(std::string("ring field \"") + key + "\" must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::uint64_t reduce_signed(long long v, std::uint64_t n) {
    long long m = v % static_cast<long long>(n);
    if (m < 0) m += static_cast<long long>(n);
    return static_cast<std::uint64_t>(m);
}

json matrix_rows(const Element& a) {
    const auto& r = a.ring();
    json rows = json::array();
    for (std::uint32_t i = 0; i < r.k; ++i) {
        json row = json::array();
        for (std::uint32_t j = 0; j < r.k; ++j) {
            if (r.kind == RingKind::MatZp)
                row.push_back(a.zp_at(i, j));
            else
                row.push_back(a.qi_at(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const json& unwrap_value(const json& j) {
    if (j.is_object()) {
        if (!j.contains("value")) throw ParseError("element object needs a \"value\" key");
        return j.at("value");
    }
    return j;
}

} // namespace

RingDescriptor parse_ring(const json& j) {
    if (!j.is_object()) throw ParseError("ring descriptor must be a JSON object");
    if (!j.contains("kind")) throw ParseError("ring descriptor is missing \"kind\"");
    const auto& kind = j.at("kind");
    if (!kind.is_string()) throw ParseError("ring field \"kind\" must be a string");
    std::string k = kind.get<std::string>();
    if (k == "ZMod") return RingDescriptor::zmod(get_uint(j, "n"));
    if (k == "MatZp") {
        std::uint64_t p = get_uint(j, "p"), dim = get_uint(j, "k");
        if (p > UINT32_MAX || dim > UINT32_MAX) throw ParseError("ring parameters out of range");
        return RingDescriptor::mat_zp(std::uint32_t(p), std::uint32_t(dim));
    }
    if (k == "MatQi") {
        std::uint64_t dim = get_uint(j, "k");
        if (dim > UINT32_MAX) throw ParseError("ring parameters out of range");
        return RingDescriptor::mat_qi(std::uint32_t(dim));
    }
    throw ParseError("unknown ring kind \"" + k + "\"");
}

RingDescriptor parse_ring_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("ring descriptor is not valid JSON: " + text);
    return parse_ring(j);
}

json ring_to_json(const RingDescriptor& r) {
    switch (r.kind) {
        case RingKind::ZMod: return {{"kind", "ZMod"}, {"n", r.n}};
        case RingKind::MatZp: return {{"kind", "MatZp"}, {"p", r.p}, {"k", r.k}};
        case RingKind::MatQi: return {{"kind", "MatQi"}, {"k", r.k}};
    }
    throw DescriptorError("unknown ring kind");
}

Element parse_element(const RingDescriptor& r, const json& wrapped) {
    r.check();
    const json& j = unwrap_value(wrapped);
    if (r.kind == RingKind::ZMod) {
        if (!j.is_number_integer()) throw ParseError("ZMod element must be an integer");
        return Element::zmod(r, reduce_signed(j.get<long long>(), r.n));
    }
    if (!j.is_array() || j.size() != r.k)
        throw ParseError("matrix element must be " + std::to_string(r.k) + " rows");
    std::vector<std::uint64_t> ints;
    std::vector<Qi> rationals;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || row.size() != r.k)
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(r.k) +
                             " entries");
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto& cell = row.at(c);
            if (r.kind == RingKind::MatZp) {
                if (!cell.is_number_integer())
                    throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(c) +
                                     ") must be an integer");
                ints.push_back(reduce_signed(cell.get<long long>(), r.p));
            } else {
                if (cell.is_number_integer()) {
                    rationals.push_back(Qi(cell.get<long>()));
                } else if (cell.is_string()) {
                    rationals.push_back(parse_qi(cell.get<std::string>()));
                } else {
                    throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(c) +
                                     ") must be an integer or a string like \"3/2-1/2i\"");
                }
            }
        }
    }
    if (r.kind == RingKind::MatZp) return Element::mat_zp(r, std::move(ints));
    return Element::mat_qi(r, std::move(rationals));
}

Element parse_element_text(const RingDescriptor& r, const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("element is not valid JSON: " + text);
    return parse_element(r, j);
}

json element_to_json(const Element& a) {
    if (a.ring().kind == RingKind::ZMod) return json(a.residue());
    return matrix_rows(a);
}

std::string format_element(const Element& a) { return element_to_json(a).dump(); }

} // namespace starring
