#ifndef ORBICURVE_RATIONAL_HPP
#define ORBICURVE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbicurve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always reduced, denominator > 0.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}            // NOLINT: implicit by design
    Rat(int n) : v_(n) {}             // NOLINT
    Rat(long num, long den) {
        if (den == 0) throw Error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw Error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p", or "p/q".
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(mpz_class(s));
            return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw Error("Rat: cannot parse '" + s + "'");
        }
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw Error("Rat: 0^negative");
            return Rat(1) / pow(-e);
        }
        Rat r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// "p" if integral, else "p/q".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

    const mpq_class& mpq() const { return v_; }

  private:
    mpq_class v_;
};

inline Rat rat_inv(const Rat& r) { return Rat(1) / r; }

/// Gaussian rational a + b*i; field operations over Q(i).
class GaussRat {
  public:
    GaussRat() = default;
    GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT
    GaussRat(long n) : re_(n) {}              // NOLINT
    GaussRat(int n) : re_(n) {}               // NOLINT
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re_ * o.re_ - im_ * o.im_;
        Rat i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        Rat n = o.norm();
        if (n.is_zero()) throw Error("GaussRat: division by zero");
        GaussRat t = *this;
        t *= o.conj();
        re_ = t.re_ / n;
        im_ = t.im_ / n;
        return *this;
    }
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string s = re_.is_zero() ? "" : re_.str();
        if (im_.sign() >= 0 && !s.empty()) s += "+";
        s += im_.str() + "*i";
        return s;
    }

  private:
    Rat re_{0};
    Rat im_{0};
};

}  // namespace orbicurve

#endif
