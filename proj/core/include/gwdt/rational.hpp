#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace gwdt {

/// Arbitrary-precision rational, always in canonical form (reduced,
/// denominator > 0). Thin value wrapper over GMP's mpq.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: integers embed in Q
    Rat(long num, long den)
    {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rat operator-() const { return Rat(canonical_tag{}, mpq_class(-v_)); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o)
    {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    Rat inverse() const
    {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(canonical_tag{}, 1 / v_);
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// "p" or "p/q", sign leading.
    std::string str() const { return v_.get_str(); }

private:
    struct canonical_tag {};
    Rat(canonical_tag, mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// re + im*i with i^2 = -1. The coefficient field for all symbolic data.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long n) : re_(n) {}  // NOLINT
    GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    /// i^m for any sign of m.
    static GaussRat i_pow(long long m)
    {
        switch (((m % 4) + 4) % 4) {
            case 0: return GaussRat(1);
            case 1: return i();
            case 2: return GaussRat(-1);
            default: return GaussRat(Rat(0), Rat(-1));
        }
    }

    /// (-i)^m for any sign of m; equals i^(-m).
    static GaussRat minus_i_pow(long long m) { return i_pow(-m); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o)
    {
        Rat r = re_ * o.re_ - im_ * o.im_;
        Rat i2 = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i2);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }

    GaussRat inverse() const
    {
        if (is_zero()) throw std::domain_error("GaussRat: inverse of zero");
        Rat n = re_ * re_ + im_ * im_;
        return GaussRat(re_ / n, -im_ / n);
    }
    GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// "a", "bi", or "a+bi"; unit imaginary parts render as "i"/"-i".
    std::string str() const;

private:
    Rat re_, im_;
};

}  // namespace gwdt
