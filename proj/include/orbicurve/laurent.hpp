#ifndef ORBICURVE_LAURENT_HPP
#define ORBICURVE_LAURENT_HPP

#include <limits>
#include <optional>
#include <vector>

#include "orbicurve/poly.hpp"
#include "orbicurve/rational.hpp"

namespace orbicurve {

/// Default truncation order for series computations; configurable per call.
inline constexpr long kDefaultTruncation = 24;

/// Marker for exactly-known Laurent polynomials (no truncation in force).
inline constexpr long kExactOrder = std::numeric_limits<long>::max() / 4;

struct TruncationError : Error {
    using Error::Error;
};

/// Truncated Laurent series over Rat: coefficients of x^val .. x^trunc are
/// known; everything in that window not stored is zero. A series whose known
/// window is all zero is "zero to truncation".
class Laurent {
  public:
    Laurent() : val_(0), trunc_(kExactOrder) {}

    static Laurent zero() { return Laurent(); }

    static Laurent from_poly(const Poly<Rat>& p, long trunc = kExactOrder) {
        Laurent s;
        s.val_ = 0;
        s.trunc_ = trunc;
        s.c_ = p.coeffs();
        s.normalize();
        return s;
    }

    /// c * x^e.
    static Laurent monomial(Rat c, long e, long trunc = kExactOrder) {
        Laurent s;
        s.val_ = e;
        s.trunc_ = trunc;
        s.c_ = {std::move(c)};
        s.normalize();
        return s;
    }

    bool known_zero() const { return c_.empty(); }
    bool is_exact() const { return trunc_ >= kExactOrder; }
    long truncation() const { return trunc_; }

    /// Index of the first nonzero coefficient; nullopt when zero to truncation.
    std::optional<long> valuation() const {
        if (c_.empty()) return std::nullopt;
        return val_;
    }

    Rat coeff(long e) const {
        if (c_.empty() || e < val_ || e >= val_ + long(c_.size())) return Rat(0);
        return c_[size_t(e - val_)];
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r;
        r.trunc_ = std::min(a.trunc_, b.trunc_);
        if (a.c_.empty() && b.c_.empty()) return r;
        long lo = a.c_.empty() ? b.val_ : (b.c_.empty() ? a.val_ : std::min(a.val_, b.val_));
        long hi = std::min(r.trunc_, std::max(a.top(), b.top()));
        r.val_ = lo;
        if (hi >= lo) {
            r.c_.assign(size_t(hi - lo + 1), Rat(0));
            for (long e = lo; e <= hi; ++e) r.c_[size_t(e - lo)] = a.coeff(e) + b.coeff(e);
        }
        r.normalize();
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        if (a.c_.empty() || b.c_.empty()) {
            // product is zero to (best) truncation
            r.trunc_ = std::min(a.c_.empty() ? a.trunc_ + b.min_val() : kExactOrder,
                                b.c_.empty() ? b.trunc_ + a.min_val() : kExactOrder);
            return r;
        }
        long t1 = a.is_exact() ? kExactOrder : a.trunc_ + b.val_;
        long t2 = b.is_exact() ? kExactOrder : b.trunc_ + a.val_;
        r.trunc_ = std::min(t1, t2);
        long lo = a.val_ + b.val_;
        long hi = std::min(r.trunc_, a.top() + b.top());
        r.val_ = lo;
        r.c_.assign(size_t(hi - lo + 1), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                long e = a.val_ + long(i) + b.val_ + long(j);
                if (e > hi) break;
                r.c_[size_t(e - lo)] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }

    Laurent pow(int e) const {
        Laurent r = monomial(Rat(1), 0);
        Laurent b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Series division. The divisor must not be zero to truncation. The
    /// quotient valuation is exact whenever the dividend's is; coefficients
    /// are produced up to `cap`.
    static Laurent divide(const Laurent& a, const Laurent& b, long cap = kDefaultTruncation) {
        if (b.c_.empty()) {
            if (b.is_exact()) throw Error("Laurent: division by zero series");
            throw TruncationError("Laurent: divisor is zero to truncation");
        }
        Laurent r;
        if (a.c_.empty()) {
            if (a.is_exact()) {
                r.trunc_ = kExactOrder;
                return r;
            }
            r.trunc_ = a.trunc_ - b.val_;
            return r;
        }
        if (b.c_.size() == 1) {
            // monomial divisor: an exact shift and scale
            r = a;
            r.val_ -= b.val_;
            if (!r.is_exact()) r.trunc_ -= b.val_;
            Rat inv = Rat(1) / b.c_.front();
            for (auto& v : r.c_) v *= inv;
            return r;
        }
        long vq = a.val_ - b.val_;
        long hi = std::min({cap, a.is_exact() ? kExactOrder : a.trunc_ - b.val_,
                            b.is_exact() ? kExactOrder : vq + (b.trunc_ - b.val_)});
        // for exact inputs the valuation is known exactly, so a small cap can
        // always still report the leading coefficient
        if (hi < vq && a.is_exact() && b.is_exact()) hi = vq;
        if (hi < vq) throw TruncationError("Laurent: truncation exhausted in division");
        r.val_ = vq;
        r.trunc_ = hi;
        size_t n = size_t(hi - vq + 1);
        r.c_.assign(n, Rat(0));
        Rat binv = Rat(1) / b.c_.front();
        for (size_t k = 0; k < n; ++k) {
            Rat acc = a.coeff(a.val_ + long(k));
            for (size_t j = 1; j <= k && j < b.c_.size(); ++j)
                acc -= b.c_[j] * r.c_[k - j];
            r.c_[k] = acc * binv;
        }
        r.normalize();
        return r;
    }

    /// Substitute into a polynomial: p(s(x)).
    static Laurent eval_poly(const Poly<Rat>& p, const Laurent& s) {
        Laurent acc;  // exact zero
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            acc = acc * s + monomial(*it, 0);
        return acc;
    }

    /// Formal derivative.
    Laurent derivative() const {
        Laurent r;
        r.trunc_ = is_exact() ? kExactOrder : trunc_ - 1;
        if (c_.empty()) return r;
        r.val_ = val_ - 1;
        r.c_.assign(c_.size(), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = Rat(val_ + long(i)) * c_[i];
        r.normalize();
        return r;
    }

    std::vector<std::pair<long, Rat>> terms() const {
        std::vector<std::pair<long, Rat>> t;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) t.emplace_back(val_ + long(i), c_[i]);
        return t;
    }

  private:
    long top() const { return c_.empty() ? val_ : val_ + long(c_.size()) - 1; }
    long min_val() const { return c_.empty() ? 0 : val_; }
    void normalize() {
        if (!c_.empty() && val_ + long(c_.size()) - 1 > trunc_) {
            long keep = trunc_ - val_ + 1;
            c_.resize(keep > 0 ? size_t(keep) : 0);
        }
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + long(lead));
            val_ += long(lead);
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) val_ = 0;
    }

    long val_;
    long trunc_;
    std::vector<Rat> c_;  // c_[i] is the coefficient of x^(val_ + i)
};

}  // namespace orbicurve

#endif
