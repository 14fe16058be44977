#include "starring/validate.hpp"

#include "starring/enumerate.hpp"
#include "starring/errors.hpp"
#include "starring/io.hpp"
#include "starring/ring.hpp"

#include <random>
#include <vector>

namespace starring {

namespace {

constexpr std::uint64_t kSampleSeed = 20250821;
constexpr std::uint64_t kSampleTuples = 1000;

Element random_element(const RingDescriptor& r, std::mt19937_64& rng) {
    switch (r.kind) {
        case RingKind::ZMod: return Element::zmod(r, rng() % r.n);
        case RingKind::MatZp: {
            std::vector<std::uint64_t> e(std::size_t(r.k) * r.k);
            for (auto& v : e) v = rng() % r.p;
            return Element::mat_zp(r, std::move(e));
        }
        case RingKind::MatQi: {
            std::vector<Qi> e(std::size_t(r.k) * r.k);
            for (auto& v : e) {
                long rn = long(rng() % 19) - 9, rd = long(rng() % 9) + 1;
                long in = long(rng() % 19) - 9, id = long(rng() % 9) + 1;
                v = Qi::from_parts(rn, rd, in, id);
            }
            return Element::mat_qi(r, std::move(e));
        }
    }
    throw Error("unknown ring kind");
}

struct Checker {
    ValidationReport& report;
    bool failed = false;

    void check(bool ok, const Element& a, const char* law) {
        if (ok || failed) return;
        failed = true;
        report.first_violation = std::string(law) + " at a=" + format_element(a);
    }
    void check(bool ok, const Element& a, const Element& b, const char* law) {
        if (ok || failed) return;
        failed = true;
        report.first_violation = std::string(law) + " at a=" + format_element(a) + ", b=" + format_element(b);
    }
    void check(bool ok, const Element& a, const Element& b, const Element& c, const char* law) {
        if (ok || failed) return;
        failed = true;
        report.first_violation = std::string(law) + " at a=" + format_element(a) +
                                 ", b=" + format_element(b) + ", c=" + format_element(c);
    }
};

void unary_laws(Checker& ck, const Element& a, const Element& z, const Element& id) {
    ck.check(add(a, z) == a, a, "a + 0 == a");
    ck.check(add(a, neg(a)) == z, a, "a + (-a) == 0");
    ck.check(mul(a, id) == a, a, "a * 1 == a");
    ck.check(mul(id, a) == a, a, "1 * a == a");
    ck.check(mul(a, z) == z, a, "a * 0 == 0");
    ck.check(mul(z, a) == z, a, "0 * a == 0");
    ck.check(star(star(a)) == a, a, "star(star(a)) == a");
}

void pair_laws(Checker& ck, const Element& a, const Element& b) {
    ck.check(add(a, b) == add(b, a), a, b, "a + b == b + a");
    ck.check(star(add(a, b)) == add(star(a), star(b)), a, b, "star(a + b) == star(a) + star(b)");
    ck.check(star(mul(a, b)) == mul(star(b), star(a)), a, b, "star(a * b) == star(b) * star(a)");
}

void triple_laws(Checker& ck, const Element& a, const Element& b, const Element& c) {
    ck.check(add(add(a, b), c) == add(a, add(b, c)), a, b, c, "(a + b) + c == a + (b + c)");
    ck.check(mul(mul(a, b), c) == mul(a, mul(b, c)), a, b, c, "(a * b) * c == a * (b * c)");
    ck.check(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), a, b, c, "a * (b + c) == a*b + a*c");
    ck.check(mul(add(a, b), c) == add(mul(a, c), mul(b, c)), a, b, c, "(a + b) * c == a*c + b*c");
}

} // namespace

ValidationReport validate_ring(const RingDescriptor& r, std::uint64_t budget) {
    r.check();
    ValidationReport report;
    Checker ck{report};
    Element z = zero(r), id = one(r);

    auto order = r.order();
    bool pairs_fit = order && *order <= element_cap() && *order <= budget / *order;
    if (pairs_fit) {
        ElementStream stream(r);
        std::uint64_t count = stream.size();
        report.exhaustive_pairs = true;
        std::vector<Element> all;
        all.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) all.push_back(stream.at(i));
        for (const auto& a : all) unary_laws(ck, a, z, id);
        for (const auto& a : all)
            for (const auto& b : all) {
                pair_laws(ck, a, b);
                ++report.pairs_checked;
            }
        if (budget / count / count >= count) {
            report.exhaustive_triples = true;
            for (const auto& a : all)
                for (const auto& b : all)
                    for (const auto& c : all) {
                        triple_laws(ck, a, b, c);
                        ++report.triples_checked;
                    }
        }
    }
    if (!pairs_fit || !report.exhaustive_triples) {
        std::mt19937_64 rng(kSampleSeed);
        report.sample_seed = kSampleSeed;
        for (std::uint64_t i = 0; i < kSampleTuples; ++i) {
            Element a = random_element(r, rng);
            Element b = random_element(r, rng);
            Element c = random_element(r, rng);
            if (!pairs_fit) {
                unary_laws(ck, a, z, id);
                pair_laws(ck, a, b);
                ++report.pairs_checked;
            }
            triple_laws(ck, a, b, c);
            ++report.triples_checked;
        }
    }
    report.ok = !ck.failed;
    return report;
}

} // namespace starring
