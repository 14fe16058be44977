#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace starring {

/**
 * Gaussian rational: re + im*i with exact rational components.
 *
 * Components are GMP rationals kept canonical (lowest terms, positive
 * denominator), so equality is plain component comparison. The type forms a
 * field; conj() is the ring involution used by the complex matrix backend.
 */
class Qi {
  public:
    Qi() : re_(0), im_(0) {}
    Qi(long value) : re_(value), im_(0) {}
    Qi(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /** Builds (re_num/re_den) + (im_num/im_den)i. Denominators must be nonzero. */
    static Qi from_parts(long re_num, long re_den, long im_num, long im_den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    Qi conj() const { return Qi(re_, -im_); }

    /** re^2 + im^2; zero exactly when the value is zero. */
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    /** Multiplicative inverse. Throws Error on zero. */
    Qi inv() const;

    friend Qi operator+(const Qi& a, const Qi& b) { return Qi(a.re_ + b.re_, a.im_ + b.im_); }
    friend Qi operator-(const Qi& a, const Qi& b) { return Qi(a.re_ - b.re_, a.im_ - b.im_); }
    friend Qi operator-(const Qi& a) { return Qi(-a.re_, -a.im_); }
    friend Qi operator*(const Qi& a, const Qi& b) {
        return Qi(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend bool operator==(const Qi& a, const Qi& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Qi& a, const Qi& b) { return !(a == b); }

    /**
     * Canonical text form: "3/2-1/2i", "5", "i", "-2/3i", "0". Integral
     * components drop the denominator; a unit imaginary part drops the 1.
     */
    std::string str() const;

  private:
    mpq_class re_, im_;
};

/** Parses the canonical text form produced by Qi::str plus obvious variants
 *  ("1/2 + 3i" without spaces only). Throws ParseError with a position. */
Qi parse_qi(const std::string& text);

} // namespace starring
