#include "starring/qi.hpp"

#include "starring/errors.hpp"

#include <cctype>
#include <cstddef>

namespace starring {

Qi Qi::from_parts(long re_num, long re_den, long im_num, long im_den) {
    if (re_den == 0 || im_den == 0) throw Error("zero denominator");
    return Qi(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}

Qi Qi::inv() const {
    if (is_zero()) throw Error("division by zero in Q(i)");
    mpq_class n = norm();
    return Qi(re_ / n, -im_ / n);
}

namespace {

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// appends the imaginary component with its sign; |coefficient| 1 prints bare i
void append_imaginary(std::string& out, const mpq_class& im, bool leading) {
    mpq_class mag = abs(im);
    if (im < 0)
        out += '-';
    else if (!leading)
        out += '+';
    if (mag != 1) out += rational_str(mag);
    out += 'i';
}

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("bad Gaussian rational \"" + s + "\" at position " + std::to_string(pos) +
                         ": " + what);
    }
};

mpz_class parse_digits(Cursor& c) {
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) c.fail("expected digits");
    return mpz_class(c.s.substr(start, c.pos - start));
}

// one signed term: either a rational optionally tagged i, or a bare i
struct Term {
    mpq_class value;
    bool imaginary = false;
};

Term parse_term(Cursor& c, bool leading) {
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        if (c.peek() == '-') sign = -1;
        ++c.pos;
    } else if (!leading) {
        c.fail("expected '+' or '-'");
    }
    Term t;
    if (c.peek() == 'i') {
        ++c.pos;
        t.value = sign;
        t.imaginary = true;
        return t;
    }
    mpz_class num = parse_digits(c);
    mpz_class den = 1;
    if (c.peek() == '/') {
        ++c.pos;
        den = parse_digits(c);
        if (den == 0) c.fail("zero denominator");
    }
    t.value = mpq_class(sign * num, den);
    t.value.canonicalize();
    if (c.peek() == 'i') {
        ++c.pos;
        t.imaginary = true;
    }
    return t;
}

} // namespace

std::string Qi::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string out;
    if (re_ != 0) out = rational_str(re_);
    append_imaginary(out, im_, re_ == 0);
    return out;
}

Qi parse_qi(const std::string& text) {
    Cursor c{text};
    if (c.done()) c.fail("empty input");
    Term first = parse_term(c, true);
    mpq_class re = 0, im = 0;
    (first.imaginary ? im : re) = first.value;
    if (!c.done()) {
        Term second = parse_term(c, false);
        if (second.imaginary == first.imaginary) c.fail("duplicate component");
        (second.imaginary ? im : re) = second.value;
    }
    if (!c.done()) c.fail("trailing characters");
    return Qi(re, im);
}

} // namespace starring
