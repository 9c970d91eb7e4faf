#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nilcx {

// Exact Gaussian rational a + b*i with unbounded-magnitude components.
// A value with zero imaginary part behaves exactly like the rational a,
// including equality comparisons.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    Scalar(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    Scalar(long num, long den) : re_(num, den), im_(0) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        re_.canonicalize();
    }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool isRational() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    Scalar inverse() const {
        if (isZero()) throw std::domain_error("division by zero");
        mpq_class n = re_ * re_ + im_ * im_;
        return Scalar(re_ / n, -im_ / n);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order (lexicographic); used only for deterministic container keys.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    // Canonical text form: "0", "3", "-1/2", "i", "-i", "2i", "1/2i",
    // "(1+i)", "(3/2-2i)".
    std::string toString() const {
        auto rat = [](const mpq_class& q) { return q.get_str(); };
        if (sgn(im_) == 0) return rat(re_);
        std::string imPart;
        if (im_ == 1)
            imPart = "i";
        else if (im_ == -1)
            imPart = "-i";
        else
            imPart = rat(im_) + "i";
        if (sgn(re_) == 0) return imPart;
        std::string s = "(" + rat(re_);
        if (imPart[0] != '-') s += "+";
        return s + imPart + ")";
    }

private:
    mpq_class re_, im_;
};

}  // namespace nilcx
