#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starring/enumerate.hpp"
#include "starring/errors.hpp"
#include "starring/ginverse.hpp"
#include "starring/ring.hpp"

using namespace starring;

namespace {

Element z(unsigned n, std::uint64_t v) { return Element::zmod(RingDescriptor::zmod(n), v); }

Element m22(std::initializer_list<std::uint64_t> entries) {
    return Element::mat_zp(RingDescriptor::mat_zp(2, 2), std::vector<std::uint64_t>(entries));
}

Element qi2(std::initializer_list<Qi> entries) {
    return Element::mat_qi(RingDescriptor::mat_qi(2), std::vector<Qi>(entries));
}

Qi half() { return Qi::from_parts(1, 2, 0, 1); }

} // namespace

TEST_CASE("penrose_check evaluates each defining equation") {
    PenroseCheck zeros = penrose_check(z(6, 0), z(6, 0));
    CHECK(zeros.all());

    PenroseCheck ones = penrose_check(z(6, 1), z(6, 1));
    CHECK(ones.all());

    PenroseCheck two = penrose_check(z(6, 2), z(6, 2));
    CHECK(two.all());

    PenroseCheck wrong = penrose_check(z(6, 2), z(6, 3));
    CHECK_FALSE(wrong.all());
    CHECK_FALSE(wrong.eq1);

    PenroseCheck partial = penrose_check(m22({1, 1, 0, 0}), m22({1, 0, 0, 0}));
    CHECK(partial.eq1);
    CHECK(partial.eq3);
    CHECK_FALSE(partial.all());
}

TEST_CASE("one-sided star inverses on residue rings") {
    InverseResult r13 = find_13(z(6, 2));
    REQUIRE(r13.value.has_value());
    CHECK(r13.kind == InverseKind::OneThree);
    PenroseCheck pc = penrose_check(z(6, 2), *r13.value);
    CHECK(pc.eq1);
    CHECK(pc.eq3);

    InverseResult r14 = find_14(z(6, 2));
    REQUIRE(r14.value.has_value());
    PenroseCheck pc4 = penrose_check(z(6, 2), *r14.value);
    CHECK(pc4.eq1);
    CHECK(pc4.eq4);

    CHECK_FALSE(find_13(z(8, 2)).value.has_value());
    CHECK_FALSE(find_13(z(8, 2)).reason.empty());
    CHECK_FALSE(find_14(z(8, 2)).value.has_value());
}

TEST_CASE("a row matrix over Z_2 has a {1,3}-inverse but no {1,4}-inverse") {
    Element a = m22({1, 1, 0, 0});

    InverseResult r13 = find_13(a);
    REQUIRE(r13.value.has_value());
    PenroseCheck pc = penrose_check(a, *r13.value);
    CHECK(pc.eq1);
    CHECK(pc.eq3);

    InverseResult r14 = find_14(a);
    CHECK_FALSE(r14.value.has_value());

    InverseResult mp = moore_penrose(a);
    CHECK_FALSE(mp.value.has_value());
    CHECK(mp.reason.find("{1,4}") != std::string::npos);
}

TEST_CASE("combining one-sided inverses yields the Moore-Penrose inverse") {
    CHECK(mp_from_13_14(z(6, 1), z(6, 1), z(6, 1)) == z(6, 1));
    CHECK(mp_from_13_14(z(6, 2), z(6, 2), z(6, 2)) == z(6, 2));

    Element a = qi2({Qi(2), Qi(0), Qi(0), Qi(0)});
    Element w = qi2({half(), Qi(0), Qi(0), Qi(0)});
    CHECK(mp_from_13_14(a, w, w) == w);

    CHECK_THROWS_AS((void)mp_from_13_14(z(6, 2), z(6, 3), z(6, 2)), PreconditionError);
}

TEST_CASE("moore_penrose pipeline hits the pinned answers") {
    InverseResult zero_mp = moore_penrose(z(6, 0));
    REQUIRE(zero_mp.value.has_value());
    CHECK(*zero_mp.value == z(6, 0));

    InverseResult five = moore_penrose(z(6, 5));
    REQUIRE(five.value.has_value());
    CHECK(*five.value == z(6, 5));

    InverseResult none = moore_penrose(z(8, 2));
    CHECK_FALSE(none.value.has_value());
    CHECK_FALSE(none.reason.empty());

    Element a = qi2({Qi(1), Qi(1), Qi(0), Qi(0)});
    InverseResult mp = moore_penrose(a);
    REQUIRE(mp.value.has_value());
    CHECK(*mp.value == qi2({half(), Qi(0), half(), Qi(0)}));
    CHECK(penrose_check(a, *mp.value).all());
    CHECK(mp.certificate.size() == 2);
    CHECK(mp.certificate[0].first == "one_three_witness");
    CHECK(mp.certificate[1].first == "one_four_witness");
}

TEST_CASE("moore_penrose agrees with the exhaustive oracle on finite rings") {
    for (const RingDescriptor& r :
         {RingDescriptor::zmod(6), RingDescriptor::zmod(8), RingDescriptor::zmod(9),
          RingDescriptor::zmod(12), RingDescriptor::mat_zp(2, 2)}) {
        ElementStream stream(r);
        for (std::uint64_t i = 0; i < stream.size(); ++i) {
            Element a = stream.at(i);
            InverseResult fast = moore_penrose(a);
            InverseResult slow = mp_oracle(a);
            CHECK(fast.value.has_value() == slow.value.has_value());
            if (fast.value && slow.value)
                CHECK(*fast.value == *slow.value);
        }
    }
}

TEST_CASE("the Moore-Penrose inverse is unique when it exists") {
    RingDescriptor r = RingDescriptor::zmod(12);
    ElementStream stream(r);
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element a = stream.at(i);
        std::vector<Element> satisfying;
        for (std::uint64_t j = 0; j < stream.size(); ++j) {
            Element b = stream.at(j);
            if (penrose_check(a, b).all())
                satisfying.push_back(b);
        }
        CHECK(satisfying.size() <= 1);
        InverseResult mp = moore_penrose(a);
        CHECK(mp.value.has_value() == (satisfying.size() == 1));
        if (mp.value)
            CHECK(*mp.value == satisfying[0]);
    }
}

TEST_CASE("star commutes with the Moore-Penrose inverse") {
    for (const RingDescriptor& r : {RingDescriptor::zmod(6), RingDescriptor::mat_zp(2, 2)}) {
        ElementStream stream(r);
        for (std::uint64_t i = 0; i < stream.size(); ++i) {
            Element a = stream.at(i);
            InverseResult mp_a = moore_penrose(a);
            InverseResult mp_sa = moore_penrose(star(a));
            CHECK(mp_a.value.has_value() == mp_sa.value.has_value());
            if (mp_a.value)
                CHECK(*mp_sa.value == star(*mp_a.value));
        }
    }

    Element a = qi2({Qi(1), Qi::from_parts(0, 1, 1, 1), Qi(0), Qi(0)});
    InverseResult mp_a = moore_penrose(a);
    InverseResult mp_sa = moore_penrose(star(a));
    REQUIRE(mp_a.value.has_value());
    REQUIRE(mp_sa.value.has_value());
    CHECK(*mp_sa.value == star(*mp_a.value));
}

TEST_CASE("group inverses") {
    InverseResult g1 = group_inverse(z(6, 1));
    REQUIRE(g1.value.has_value());
    CHECK(*g1.value == z(6, 1));

    InverseResult g2 = group_inverse(z(6, 2));
    REQUIRE(g2.value.has_value());
    CHECK(*g2.value == z(6, 2));
    Element a = z(6, 2), b = *g2.value;
    CHECK(mul(mul(a, b), a) == a);
    CHECK(mul(mul(b, a), b) == b);
    CHECK(mul(a, b) == mul(b, a));

    CHECK_FALSE(group_inverse(z(8, 2)).value.has_value());
    CHECK_FALSE(group_inverse(z(8, 2)).reason.empty());

    Element nil = qi2({Qi(0), Qi(1), Qi(0), Qi(0)});
    CHECK_FALSE(group_inverse(nil).value.has_value());

    Element proj = qi2({Qi(1), Qi(0), Qi(0), Qi(0)});
    InverseResult gp = group_inverse(proj);
    REQUIRE(gp.value.has_value());
    CHECK(*gp.value == proj);
}

TEST_CASE("inner inverses come back in canonical order") {
    std::vector<Element> inners = inner_inverses(z(6, 2));
    REQUIRE(!inners.empty());
    for (const Element& x : inners)
        CHECK(mul(mul(z(6, 2), x), z(6, 2)) == z(6, 2));
    for (std::size_t i = 1; i < inners.size(); ++i)
        CHECK(element_less(inners[i - 1], inners[i]));

    CHECK(inner_inverses(z(8, 2)).empty());

    std::vector<Element> row = inner_inverses(m22({1, 1, 0, 0}));
    CHECK(!row.empty());

    CHECK_THROWS_AS((void)inner_inverses(qi2({Qi(1), Qi(0), Qi(0), Qi(0)})), UnsupportedError);
}

TEST_CASE("EP classification") {
    CHECK(is_EP(z(6, 1)));
    CHECK(is_EP(z(6, 2)));
    CHECK_FALSE(is_EP(z(8, 2)));
    CHECK_FALSE(is_EP(qi2({Qi(1), Qi(1), Qi(0), Qi(0)})));
    CHECK(is_EP(qi2({Qi(1), Qi(0), Qi(0), Qi(0)})));
}

TEST_CASE("star-cancellation") {
    CHECK(is_star_cancellable(z(4, 0)));
    CHECK(is_star_cancellable(z(4, 1)));
    CHECK_FALSE(is_star_cancellable(z(4, 2)));
    CHECK(is_star_cancellable(z(6, 2)));
    CHECK(is_star_cancellable(qi2({Qi(0), Qi(1), Qi(0), Qi(0)})));
    CHECK(is_star_cancellable(qi2({Qi(1), Qi(1), Qi(0), Qi(0)})));
}

TEST_CASE("star-regular factorizations recover the Moore-Penrose inverse") {
    Element a = z(6, 2);
    Element x = z(6, 1);
    REQUIRE(mul(mul(mul(a, star(a)), a), x) == a);
    CHECK(mp_from_left_star_regular(a, x) == z(6, 2));
    CHECK(mp_from_right_star_regular(a, x) == z(6, 2));

    RingDescriptor q1 = RingDescriptor::mat_qi(1);
    Element a2 = Element::mat_qi(q1, {Qi(2)});
    Element quarter = Element::mat_qi(q1, {Qi::from_parts(1, 4, 0, 1)});
    CHECK(mp_from_left_star_regular(a2, quarter) == Element::mat_qi(q1, {half()}));
    CHECK(mp_from_right_star_regular(a2, quarter) == Element::mat_qi(q1, {half()}));

    CHECK_THROWS_AS((void)mp_from_left_star_regular(z(6, 2), z(6, 2)), PreconditionError);
}

TEST_CASE("star-regular routes agree with the oracle wherever they apply") {
    for (const RingDescriptor& r : {RingDescriptor::zmod(9), RingDescriptor::mat_zp(2, 2)}) {
        ElementStream stream(r);
        for (std::uint64_t i = 0; i < stream.size(); ++i) {
            Element a = stream.at(i);
            Element asa = mul(mul(a, star(a)), a);
            InverseResult expected = mp_oracle(a);
            for (std::uint64_t j = 0; j < stream.size(); ++j) {
                Element w = stream.at(j);
                if (mul(asa, w) == a) {
                    REQUIRE(expected.value.has_value());
                    CHECK(mp_from_left_star_regular(a, w) == *expected.value);
                }
                if (mul(w, asa) == a) {
                    REQUIRE(expected.value.has_value());
                    CHECK(mp_from_right_star_regular(a, w) == *expected.value);
                }
            }
        }
    }
}
