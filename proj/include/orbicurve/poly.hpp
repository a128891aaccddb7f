#ifndef ORBICURVE_POLY_HPP
#define ORBICURVE_POLY_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "orbicurve/rational.hpp"

namespace orbicurve {

/// Dense univariate polynomial over a field R, lowest degree first.
/// The zero polynomial has an empty coefficient list and degree -1.
template <class R>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<R> c) : c_(std::move(c)) { normalize(); }
    explicit Poly(R v) : c_{std::move(v)} { normalize(); }
    Poly(std::initializer_list<R> c) : c_(c) { normalize(); }
    static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
    static Poly monomial(R v, int deg) {
        std::vector<R> c(deg + 1);
        c[deg] = std::move(v);
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(R(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return R(0);
        return c_[i];
    }
    const R& lead() const {
        if (is_zero()) throw Error("Poly: leading coefficient of zero");
        return c_.back();
    }

    R operator()(const R& v) const {
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    /// Evaluation into any ring A that supports A*A, A+A and construction from R.
    template <class A>
    A eval_in(const A& v, const A& zero) const {
        A acc = zero;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + A(*it);
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const R& s, Poly p) {
        for (auto& v : p.c_) v = s * v;
        p.normalize();
        return p;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = R(static_cast<long>(i)) * c_[i];
        return Poly(std::move(c));
    }

    Poly pow(int e) const {
        Poly r = constant(R(1));
        Poly b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& d) const {
        if (d.is_zero()) throw Error("Poly: division by zero polynomial");
        Poly rem = *this;
        if (rem.degree() < d.degree()) return {Poly{}, rem};
        std::vector<R> q(rem.degree() - d.degree() + 1, R(0));
        R inv_lead = R(1) / d.lead();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            R f = rem.lead() * inv_lead;
            q[k] = f;
            for (int i = 0; i <= d.degree(); ++i) rem.c_[k + i] -= f * d.c_[i];
            rem.normalize();
        }
        return {Poly(std::move(q)), rem};
    }

    Poly monic() const {
        if (is_zero()) return {};
        R inv = R(1) / lead();
        return inv * *this;
    }

    /// p(x + a), via repeated synthetic division by (x - a).
    Poly shift(const R& a) const {
        Poly p = *this;
        std::vector<R> out;
        Poly d{-a, R(1)};
        while (!p.is_zero()) {
            auto [q, r] = p.divrem(d);
            out.push_back(r.coeff(0));
            p = q;
        }
        return Poly(std::move(out));
    }

    /// Order of vanishing at a point; nullopt for the zero polynomial.
    std::optional<int> ord_at(const R& b) const {
        if (is_zero()) return std::nullopt;
        Poly p = *this;
        Poly d{-b, R(1)};
        int o = 0;
        while (p(b) == R(0)) {
            auto [q, r] = p.divrem(d);
            p = q;
            ++o;
        }
        return o;
    }

    /// Coefficient reversal with respect to a degree bound d >= degree().
    Poly reversed(int d) const {
        if (d < degree()) throw Error("Poly: reversal bound below degree");
        std::vector<R> c(d + 1, R(0));
        for (int i = 0; i <= degree(); ++i) c[d - i] = c_[i];
        return Poly(std::move(c));
    }

    /// Valuation at 0: index of lowest nonzero coefficient (nullopt for zero).
    std::optional<int> val_at_zero() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == R(0))) return static_cast<int>(i);
        return std::nullopt;
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// Yun squarefree decomposition (characteristic 0): p = lc * prod f_i^i,
/// returned as (f_i, i) with f_i monic squarefree, nonconstant entries only.
template <class R>
std::vector<std::pair<Poly<R>, int>> squarefree_decomposition(const Poly<R>& p) {
    std::vector<std::pair<Poly<R>, int>> out;
    if (p.degree() <= 0) return out;
    Poly<R> a = p.monic();
    Poly<R> d = a.derivative();
    Poly<R> g = gcd(a, d);
    Poly<R> w = a.divrem(g).first;
    Poly<R> y = d.divrem(g).first;
    Poly<R> z = y - w.derivative();
    int i = 1;
    while (!(w.degree() <= 0)) {
        Poly<R> f = gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f.monic(), i);
        w = w.divrem(f).first;
        y = z.divrem(f).first;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
    // Euclidean resultant with standard scaling bookkeeping.
    if (f.is_zero() || g.is_zero()) return R(0);
    Poly<R> a = f, b = g;
    R res(1);
    while (b.degree() > 0) {
        auto [q, r] = a.divrem(b);
        int da = a.degree(), db = b.degree(), dr = r.degree();
        // res(a,b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r)
        R sign = ((static_cast<long>(da) * db) % 2 == 0) ? R(1) : R(-1);
        if (r.is_zero()) return R(0);
        res = res * sign * b.lead().pow(da - dr);
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant
    return res * b.coeff(0).pow(a.degree());
}

/// All rational roots of p with multiplicities, plus the root-free cofactor
/// split into squarefree "packets" (factor, multiplicity).
struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;
    // squarefree factors of degree >= 2 with no rational root, and their multiplicity
    std::vector<std::pair<Poly<Rat>, int>> packets;
};

inline std::vector<mpz_class> divisors_of(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> ds;
    if (n == 0) return ds;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d * d != n) ds.push_back(n / d);
        }
    }
    return ds;
}

/// Rational roots of one squarefree polynomial (each with multiplicity 1).
inline std::vector<Rat> rational_roots_squarefree(Poly<Rat> f, Poly<Rat>* cofactor) {
    std::vector<Rat> roots;
    if (f.degree() <= 0) {
        if (cofactor) *cofactor = f;
        return roots;
    }
    // strip root at 0
    if (f.coeff(0).is_zero()) {
        roots.emplace_back(0);
        f = f.divrem(Poly<Rat>::x()).first;
    }
    // clear denominators to primitive integer coefficients
    mpz_class den(1);
    for (const auto& c : f.coeffs()) den = lcm(den, c.den());
    std::vector<mpz_class> ic;
    for (const auto& c : f.coeffs()) ic.push_back(c.num() * (den / c.den()));
    mpz_class g(0);
    for (const auto& c : ic) g = gcd(g, c);
    if (g > 1)
        for (auto& c : ic) c /= g;
    if (!ic.empty()) {
        auto p_divs = divisors_of(ic.front());
        auto q_divs = divisors_of(ic.back());
        for (const auto& p : p_divs) {
            for (const auto& q : q_divs) {
                for (int s : {1, -1}) {
                    Rat cand(s * p, q);
                    if (f.degree() >= 1 && f(cand).is_zero()) {
                        roots.push_back(cand);
                        f = f.divrem(Poly<Rat>{-cand, Rat(1)}).first;
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (cofactor) *cofactor = f;
    return roots;
}

inline RationalRoots rational_roots(const Poly<Rat>& p) {
    RationalRoots rr;
    for (const auto& [f, m] : squarefree_decomposition(p)) {
        Poly<Rat> cof;
        for (const auto& r : rational_roots_squarefree(f, &cof)) rr.roots.emplace_back(r, m);
        if (cof.degree() >= 1) rr.packets.emplace_back(cof.monic(), m);
    }
    std::sort(rr.roots.begin(), rr.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rr;
}

}  // namespace orbicurve

#endif
