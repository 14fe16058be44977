#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starring/enumerate.hpp"
#include "starring/errors.hpp"
#include "starring/io.hpp"
#include "starring/ring.hpp"
#include "starring/solve.hpp"

#include <cstdlib>
#include <random>
#include <set>

using namespace starring;

namespace {

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

struct ElementLess {
    bool operator()(const Element& a, const Element& b) const { return element_less(a, b); }
};

TEST_CASE("enumeration covers every element exactly once") {
    for (const RingDescriptor& r :
         {RingDescriptor::zmod(6), RingDescriptor::mat_zp(2, 2), RingDescriptor::mat_zp(3, 2)}) {
        ElementStream stream(r);
        CHECK(stream.size() == r.order().value());
        std::set<Element, ElementLess> seen;
        for (std::uint64_t i = 0; i < stream.size(); ++i) {
            Element a = stream.at(i);
            CHECK(seen.insert(a).second);
            CHECK(stream.index_of(a) == i);
        }
    }
}

TEST_CASE("enumeration indexing follows the documented conventions") {
    ElementStream z6(RingDescriptor::zmod(6));
    CHECK(z6.at(0) == zero(RingDescriptor::zmod(6)));
    CHECK(z6.at(4).residue() == 4);

    RingDescriptor m = RingDescriptor::mat_zp(2, 2);
    ElementStream ms(m);
    CHECK(ms.at(0) == zero(m));
    CHECK(ms.at(1) == Element::mat_zp(m, {1, 0, 0, 0}));
    CHECK(ms.at(2) == Element::mat_zp(m, {0, 1, 0, 0}));
    CHECK(ms.at(8) == Element::mat_zp(m, {0, 0, 0, 1}));
}

TEST_CASE("infinite carriers refuse enumeration") {
    CHECK_THROWS_AS(ElementStream(RingDescriptor::mat_qi(1)), UnsupportedError);
}

TEST_CASE("the element cap guards large carriers") {
    CHECK_THROWS_AS(ElementStream(RingDescriptor::mat_zp(5, 3), 10000), ResourceError);
    ElementStream ok(RingDescriptor::mat_zp(5, 3), 5000000);
    CHECK(ok.size() == 1953125);
    CHECK(element_cap() >= 1);
}

TEST_CASE("solve finds one-sided multiples on residue rings") {
    RingDescriptor r6 = RingDescriptor::zmod(6);
    auto x = solve({MulSide::RightMul, Element::zmod(r6, 2), Element::zmod(r6, 2)});
    REQUIRE(x.has_value());
    CHECK(mul(Element::zmod(r6, 2), *x) == Element::zmod(r6, 2));
    CHECK(*x == Element::zmod(r6, 1));

    RingDescriptor r8 = RingDescriptor::zmod(8);
    auto none = solve({MulSide::RightMul, Element::zmod(r8, 4), Element::zmod(r8, 2)});
    CHECK_FALSE(none.has_value());

    auto left = solve({MulSide::LeftMul, Element::zmod(r6, 3), Element::zmod(r6, 3)});
    REQUIRE(left.has_value());
    CHECK(mul(*left, Element::zmod(r6, 3)) == Element::zmod(r6, 3));
}

TEST_CASE("solve over matrix rings returns verified solutions") {
    RingDescriptor m = RingDescriptor::mat_zp(2, 2);
    Element c = Element::mat_zp(m, {1, 1, 0, 0});
    Element t = Element::mat_zp(m, {1, 1, 0, 0});
    auto x = solve({MulSide::RightMul, c, t});
    REQUIRE(x.has_value());
    CHECK(mul(c, *x) == t);

    Element unreachable = Element::mat_zp(m, {0, 0, 1, 0});
    auto none = solve({MulSide::RightMul, c, unreachable});
    CHECK_FALSE(none.has_value());

    auto y = solve({MulSide::LeftMul, c, t});
    REQUIRE(y.has_value());
    CHECK(mul(*y, c) == t);
}

TEST_CASE("solve agrees with exhaustive search on small matrix rings") {
    RingDescriptor m = RingDescriptor::mat_zp(2, 2);
    ElementStream stream(m);
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        Element c = stream.at(i);
        for (std::uint64_t j = 0; j < stream.size(); ++j) {
            Element t = stream.at(j);
            for (MulSide side : {MulSide::RightMul, MulSide::LeftMul}) {
                bool reachable = false;
                for (std::uint64_t w = 0; w < stream.size() && !reachable; ++w) {
                    Element cand = stream.at(w);
                    Element prod = side == MulSide::RightMul ? mul(c, cand) : mul(cand, c);
                    reachable = prod == t;
                }
                auto got = solve({side, c, t});
                CHECK(got.has_value() == reachable);
                if (got) {
                    Element prod = side == MulSide::RightMul ? mul(c, *got) : mul(*got, c);
                    CHECK(prod == t);
                }
            }
        }
    }
}

TEST_CASE("solve handles Gaussian-rational systems") {
    RingDescriptor r = RingDescriptor::mat_qi(2);
    Element c = Element::mat_qi(r, {Qi(2), Qi(0), Qi(0), Qi(0)});
    Element t = Element::mat_qi(r, {Qi(1), Qi(0), Qi(0), Qi(0)});
    auto x = solve({MulSide::RightMul, c, t});
    REQUIRE(x.has_value());
    CHECK(mul(c, *x) == t);

    Element off = Element::mat_qi(r, {Qi(0), Qi(0), Qi(1), Qi(0)});
    CHECK_FALSE(solve({MulSide::RightMul, c, off}).has_value());
    auto xl = solve({MulSide::LeftMul, c, off});
    REQUIRE(xl.has_value());
    CHECK(mul(*xl, c) == off);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Element a = random_qi_matrix(r, rng);
        Element b = random_qi_matrix(r, rng);
        Element target = mul(a, b);
        auto w = solve({MulSide::RightMul, a, target});
        REQUIRE(w.has_value());
        CHECK(mul(a, *w) == target);
    }
}

TEST_CASE("ideal membership matches solve") {
    RingDescriptor r8 = RingDescriptor::zmod(8);
    CHECK(in_right_ideal(Element::zmod(r8, 2), Element::zmod(r8, 4)));
    CHECK_FALSE(in_right_ideal(Element::zmod(r8, 4), Element::zmod(r8, 2)));
    CHECK(in_left_ideal(Element::zmod(r8, 2), Element::zmod(r8, 6)));
}

TEST_CASE("ring descriptors round-trip through JSON") {
    for (const RingDescriptor& r :
         {RingDescriptor::zmod(12), RingDescriptor::mat_zp(3, 2), RingDescriptor::mat_qi(2)}) {
        CHECK(parse_ring(ring_to_json(r)) == r);
    }
    CHECK(parse_ring_text(R"({"kind":"ZMod","n":12})") == RingDescriptor::zmod(12));
    CHECK(parse_ring_text(R"({"kind":"MatZp","p":3,"k":2})") == RingDescriptor::mat_zp(3, 2));
    CHECK(parse_ring_text(R"({"kind":"MatQi","k":2})") == RingDescriptor::mat_qi(2));
    CHECK_THROWS_AS((void)parse_ring_text(R"({"kind":"Nope"})"), ParseError);
    CHECK_THROWS_AS((void)parse_ring_text("{"), ParseError);
}

TEST_CASE("element parsing canonicalizes and round-trips") {
    RingDescriptor r6 = RingDescriptor::zmod(6);
    CHECK(parse_element_text(r6, "8") == Element::zmod(r6, 2));
    CHECK(parse_element_text(r6, R"({"value": 8})") == Element::zmod(r6, 2));

    RingDescriptor m = RingDescriptor::mat_zp(3, 2);
    Element parsed = parse_element_text(m, "[[1,2],[0,5]]");
    CHECK(parsed == Element::mat_zp(m, {1, 2, 0, 2}));

    RingDescriptor qi = RingDescriptor::mat_qi(1);
    Element half = parse_element_text(qi, R"([["1/2+1/2i"]])");
    CHECK(half == Element::mat_qi(qi, {Qi::from_parts(1, 2, 1, 2)}));
    Element negi = parse_element_text(qi, R"([["-i"]])");
    CHECK(negi == Element::mat_qi(qi, {Qi::from_parts(0, 1, -1, 1)}));
    Element five = parse_element_text(qi, "[[5]]");
    CHECK(five == Element::mat_qi(qi, {Qi(5)}));
}

TEST_CASE("every finite element round-trips through its JSON form") {
    for (const RingDescriptor& r : {RingDescriptor::zmod(9), RingDescriptor::mat_zp(2, 2)}) {
        ElementStream stream(r);
        for (std::uint64_t i = 0; i < stream.size(); ++i) {
            Element a = stream.at(i);
            CHECK(parse_element(r, element_to_json(a)) == a);
            CHECK(parse_element_text(r, format_element(a)) == a);
        }
    }
}

TEST_CASE("sampled Gaussian-rational matrices round-trip") {
    RingDescriptor r = RingDescriptor::mat_qi(2);
    std::mt19937_64 rng(20250821);
    for (int trial = 0; trial < 1000; ++trial) {
        Element a = random_qi_matrix(r, rng);
        CHECK(parse_element(r, element_to_json(a)) == a);
        CHECK(parse_element_text(r, format_element(a)) == a);
    }
}

TEST_CASE("parse errors carry positions and reasons") {
    RingDescriptor qi = RingDescriptor::mat_qi(1);
    CHECK_THROWS_AS((void)parse_element_text(qi, R"([["1/0"]])"), ParseError);
    CHECK_THROWS_AS((void)parse_element_text(qi, R"([["2+"]])"), ParseError);
    CHECK_THROWS_AS((void)parse_element_text(qi, "[[1,2]]"), ParseError);
    RingDescriptor m = RingDescriptor::mat_zp(2, 2);
    CHECK_THROWS_AS((void)parse_element_text(m, "[[1,0]]"), ParseError);
    CHECK_THROWS_AS((void)parse_element_text(m, "[]"), ParseError);
}

TEST_CASE("qi scalars print canonically") {
    CHECK(Qi(5).str() == "5");
    CHECK(Qi::from_parts(0, 1, 1, 1).str() == "i");
    CHECK(Qi::from_parts(3, 2, -1, 2).str() == "3/2-1/2i");
    CHECK(Qi().str() == "0");
    CHECK(parse_qi("3/2-1/2i") == Qi::from_parts(3, 2, -1, 2));
    CHECK(parse_qi("-i") == Qi::from_parts(0, 1, -1, 1));
}
