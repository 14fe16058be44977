#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starring/enumerate.hpp"
#include "starring/errors.hpp"
#include "starring/io.hpp"
#include "starring/ring.hpp"
#include "starring/validate.hpp"

#include <random>

using namespace starring;

namespace {

Element zmod6(std::uint64_t v) { return Element::zmod(RingDescriptor::zmod(6), v); }

Element m22(std::initializer_list<std::uint64_t> entries) {
    return Element::mat_zp(RingDescriptor::mat_zp(2, 2), std::vector<std::uint64_t>(entries));
}

Element random_qi_matrix(const RingDescriptor& r, std::mt19937_64& rng) {
    std::vector<Qi> entries;
    for (std::uint32_t i = 0; i < r.k * r.k; ++i) {
        auto num = [&] { return static_cast<long>(rng() % 19) - 9; };
        auto den = [&] { return static_cast<long>(rng() % 9) + 1; };
        entries.push_back(Qi::from_parts(num(), den(), num(), den()));
    }
    return Element::mat_qi(r, entries);
}

} // namespace

TEST_CASE("modular arithmetic hits the pinned values") {
    CHECK(mul(zmod6(4), zmod6(2)) == zmod6(2));
    CHECK(mul(zmod6(5), one(RingDescriptor::zmod(6))) == zmod6(5));
    CHECK(add(zmod6(5), zmod6(4)) == zmod6(3));
    CHECK(sub(zmod6(1), zmod6(5)) == zmod6(2));
    CHECK(neg(zmod6(2)) == zmod6(4));
    CHECK(star(zmod6(2)) == zmod6(2));
}

TEST_CASE("matrix arithmetic over Z_2") {
    Element a = m22({1, 1, 0, 0});
    Element b = m22({1, 0, 1, 0});
    CHECK(mul(a, b) == m22({0, 0, 0, 0}));
    CHECK(star(a) == m22({1, 0, 1, 0}));
    CHECK(power(a, 2) == a);
}

TEST_CASE("conjugate transpose on Gaussian rationals") {
    RingDescriptor r = RingDescriptor::mat_qi(1);
    Element i_mat = Element::mat_qi(r, {Qi::from_parts(0, 1, 1, 1)});
    Element minus_i = Element::mat_qi(r, {Qi::from_parts(0, 1, -1, 1)});
    CHECK(star(i_mat) == minus_i);
    CHECK(star(star(i_mat)) == i_mat);
}

TEST_CASE("powers use the empty-product convention") {
    CHECK(power(zmod6(4), 0) == one(RingDescriptor::zmod(6)));
    CHECK(power(zmod6(4), 2) == zmod6(4));
    Element z = zero(RingDescriptor::zmod(6));
    CHECK(power(z, 0) == one(RingDescriptor::zmod(6)));
}

TEST_CASE("power is additive in the exponent") {
    for (const RingDescriptor& r :
         {RingDescriptor::zmod(6), RingDescriptor::zmod(8), RingDescriptor::mat_zp(2, 2)}) {
        ElementStream stream(r);
        for (std::uint64_t i = 0; i < stream.size(); ++i) {
            Element a = stream.at(i);
            for (unsigned e1 = 0; e1 <= 6; ++e1)
                for (unsigned e2 = 0; e1 + e2 <= 6; ++e2)
                    CHECK(power(a, e1 + e2) == mul(power(a, e1), power(a, e2)));
        }
    }
}

TEST_CASE("involution laws hold exhaustively on finite carriers") {
    for (const RingDescriptor& r :
         {RingDescriptor::zmod(9), RingDescriptor::mat_zp(2, 2), RingDescriptor::mat_zp(3, 2)}) {
        ElementStream stream(r);
        for (std::uint64_t i = 0; i < stream.size(); ++i) {
            Element a = stream.at(i);
            CHECK(star(star(a)) == a);
            for (std::uint64_t j = 0; j < stream.size(); ++j) {
                Element b = stream.at(j);
                CHECK(star(mul(a, b)) == mul(star(b), star(a)));
                CHECK(star(add(a, b)) == add(star(a), star(b)));
            }
        }
    }
}

TEST_CASE("involution laws hold on sampled Gaussian-rational matrices") {
    RingDescriptor r = RingDescriptor::mat_qi(2);
    std::mt19937_64 rng(20250821);
    for (int trial = 0; trial < 1000; ++trial) {
        Element a = random_qi_matrix(r, rng);
        Element b = random_qi_matrix(r, rng);
        CHECK(star(star(a)) == a);
        CHECK(star(mul(a, b)) == mul(star(b), star(a)));
        CHECK(star(add(a, b)) == add(star(a), star(b)));
    }
}

TEST_CASE("classify hits the pinned examples") {
    ElementFlags id_flags = classify(one(RingDescriptor::zmod(6)));
    CHECK(id_flags.idempotent);
    CHECK(id_flags.hermitian);
    CHECK(id_flags.projection);
    CHECK(id_flags.normal);
    CHECK(id_flags.unit);
    CHECK(id_flags.left_invertible);
    CHECK(id_flags.right_invertible);

    ElementFlags three = classify(zmod6(3));
    CHECK(three.idempotent);
    CHECK(three.projection);
    CHECK(three.hermitian);
    CHECK(three.normal);
    CHECK_FALSE(three.unit);

    RingDescriptor qi2 = RingDescriptor::mat_qi(2);
    Element nilpotent = Element::mat_qi(qi2, {Qi(0), Qi(1), Qi(0), Qi(0)});
    ElementFlags nil = classify(nilpotent);
    CHECK_FALSE(nil.idempotent);
    CHECK_FALSE(nil.hermitian);
    CHECK_FALSE(nil.projection);
    CHECK_FALSE(nil.normal);
    CHECK_FALSE(nil.unit);
    CHECK_FALSE(nil.left_invertible);
    CHECK_FALSE(nil.right_invertible);
}

TEST_CASE("classify agrees with the defining equations everywhere") {
    for (const RingDescriptor& r : {RingDescriptor::zmod(12), RingDescriptor::mat_zp(2, 2)}) {
        ElementStream stream(r);
        Element id = one(r);
        for (std::uint64_t i = 0; i < stream.size(); ++i) {
            Element a = stream.at(i);
            ElementFlags f = classify(a);
            CHECK(f.idempotent == (mul(a, a) == a));
            CHECK(f.hermitian == (star(a) == a));
            CHECK(f.projection == (f.idempotent && f.hermitian));
            CHECK(f.normal == (mul(a, star(a)) == mul(star(a), a)));
            bool left = false, right = false;
            for (std::uint64_t j = 0; j < stream.size(); ++j) {
                Element b = stream.at(j);
                left = left || mul(b, a) == id;
                right = right || mul(a, b) == id;
            }
            CHECK(f.left_invertible == left);
            CHECK(f.right_invertible == right);
            CHECK(f.unit == (left && right));
        }
    }
}

TEST_CASE("projection implies idempotent and hermitian; unit implies one-sided") {
    for (const RingDescriptor& r : {RingDescriptor::zmod(10), RingDescriptor::mat_zp(3, 2)}) {
        ElementStream stream(r);
        for (std::uint64_t i = 0; i < stream.size(); ++i) {
            ElementFlags f = classify(stream.at(i));
            if (f.projection) {
                CHECK(f.idempotent);
                CHECK(f.hermitian);
            }
            if (f.unit) {
                CHECK(f.left_invertible);
                CHECK(f.right_invertible);
            }
        }
    }
}

TEST_CASE("ring mismatch is rejected") {
    Element a = zmod6(1);
    Element b = Element::zmod(RingDescriptor::zmod(8), 1);
    CHECK_THROWS_AS((void)add(a, b), RingMismatchError);
    CHECK_THROWS_AS((void)mul(a, b), RingMismatchError);
}

TEST_CASE("validate_ring checks the axioms") {
    ValidationReport z6 = validate_ring(RingDescriptor::zmod(6));
    CHECK(z6.ok);
    CHECK(z6.exhaustive_pairs);
    CHECK(z6.pairs_checked == 36);

    ValidationReport m2 = validate_ring(RingDescriptor::mat_zp(2, 2));
    CHECK(m2.ok);
    CHECK(m2.exhaustive_pairs);
    CHECK(m2.pairs_checked == 256);

    CHECK_THROWS_AS((void)RingDescriptor::mat_zp(4, 2), DescriptorError);

    ValidationReport qi = validate_ring(RingDescriptor::mat_qi(2));
    CHECK(qi.ok);
    CHECK_FALSE(qi.exhaustive_pairs);
    CHECK(qi.pairs_checked >= 1000);
}

TEST_CASE("descriptor invariants are enforced") {
    CHECK_THROWS_AS((void)RingDescriptor::zmod(0), DescriptorError);
    CHECK_THROWS_AS((void)RingDescriptor::zmod(1), DescriptorError);
    CHECK_THROWS_AS((void)RingDescriptor::mat_zp(1, 2), DescriptorError);
    CHECK_THROWS_AS((void)RingDescriptor::mat_zp(6, 1), DescriptorError);
    CHECK_THROWS_AS((void)RingDescriptor::mat_zp(2, 0), DescriptorError);
    CHECK_THROWS_AS((void)RingDescriptor::mat_qi(0), DescriptorError);
    CHECK(RingDescriptor::zmod(2).order() == 2);
    CHECK(RingDescriptor::mat_zp(3, 2).order() == 81);
    CHECK_FALSE(RingDescriptor::mat_qi(2).order().has_value());
    CHECK(RingDescriptor::zmod(12).name() == "ZMod(12)");
    CHECK(RingDescriptor::mat_zp(3, 2).name() == "MatZp(3,2)");
    CHECK(RingDescriptor::mat_qi(2).name() == "MatQi(2)");
}
