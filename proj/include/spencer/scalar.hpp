#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <iosfwd>
#include <string>

namespace spencer {

using Rational = boost::multiprecision::mpq_rational;

/// Exact scalar a + b*i with arbitrary-precision rational parts.
/// This is the coefficient field for everything in the workbench; no
/// floating point appears anywhere on the computation path.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}                         // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}        // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 = a^2 + b^2, a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    /// Throws std::domain_error on division by zero.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    /// Lexicographic on (re, im); used only for canonical orderings, not as
    /// a field order.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Serializes as "a/b+c/d*i" with zero parts omitted, e.g. "2",
    /// "-1/3*i", "1/2+1*i". Zero prints as "0".
    std::string str() const;

    /// Parses the str() format. Throws std::invalid_argument naming the
    /// offending token on malformed input.
    static GaussianRational parse(const std::string& text);

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace spencer
