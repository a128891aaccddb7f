#ifndef ORBICURVE_BIPOLY_HPP
#define ORBICURVE_BIPOLY_HPP

#include <utility>
#include <vector>

#include "orbicurve/poly.hpp"
#include "orbicurve/rational.hpp"

namespace orbicurve {

/// Dense bivariate polynomial over a field; coefficient grid indexed by
/// (i, j) for u^i v^j with a stored bound >= the actual total degree.
template <class R>
class BiPoly {
  public:
    BiPoly() : n_(0), c_(1, R(0)) {}
    explicit BiPoly(int bound) : n_(bound), c_(size_t(bound + 1) * (bound + 1), R(0)) {}

    static BiPoly constant(R v, int bound = 0) {
        BiPoly p(bound);
        p.set(0, 0, std::move(v));
        return p;
    }
    static BiPoly monomial(R v, int i, int j) {
        BiPoly p(i + j);
        p.set(i, j, std::move(v));
        return p;
    }

    int bound() const { return n_; }
    R coeff(int i, int j) const {
        if (i < 0 || j < 0 || i > n_ || j > n_) return R(0);
        return c_[size_t(i) * (n_ + 1) + j];
    }
    void set(int i, int j, R v) {
        if (i + j > n_) throw Error("BiPoly: monomial above degree bound");
        c_[size_t(i) * (n_ + 1) + j] = std::move(v);
    }

    int total_degree() const {
        int d = -1;
        for (int i = 0; i <= n_; ++i)
            for (int j = 0; j <= n_ - i; ++j)
                if (!(coeff(i, j) == R(0))) d = std::max(d, i + j);
        return d;
    }
    bool is_zero() const { return total_degree() < 0; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r(std::max(a.n_, b.n_));
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; j <= r.n_ - i; ++j) r.set(i, j, a.coeff(i, j) + b.coeff(i, j));
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r(std::max(a.n_, b.n_));
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; j <= r.n_ - i; ++j) r.set(i, j, a.coeff(i, j) - b.coeff(i, j));
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.n_ + b.n_);
        for (int i = 0; i <= a.n_; ++i)
            for (int j = 0; j <= a.n_ - i; ++j) {
                if (a.coeff(i, j) == R(0)) continue;
                for (int k = 0; k <= b.n_; ++k)
                    for (int l = 0; l <= b.n_ - k; ++l) {
                        if (b.coeff(k, l) == R(0)) continue;
                        r.set(i + k, j + l, r.coeff(i + k, j + l) + a.coeff(i, j) * b.coeff(k, l));
                    }
            }
        return r;
    }
    friend BiPoly operator*(const R& s, const BiPoly& p) {
        BiPoly r(p.n_);
        for (int i = 0; i <= p.n_; ++i)
            for (int j = 0; j <= p.n_ - i; ++j) r.set(i, j, s * p.coeff(i, j));
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        int n = std::max(a.n_, b.n_);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n - i; ++j)
                if (!(a.coeff(i, j) == b.coeff(i, j))) return false;
        return true;
    }

    R operator()(const R& u, const R& v) const {
        // Horner in u of Horner-in-v rows
        R acc(0);
        for (int i = n_; i >= 0; --i) {
            R row(0);
            for (int j = n_ - i; j >= 0; --j) row = row * v + coeff(i, j);
            acc = acc * u + row;
        }
        return acc;
    }

    /// Restriction along a parametrized curve (u(t), v(t)).
    Poly<R> restrict(const Poly<R>& ut, const Poly<R>& vt) const {
        Poly<R> acc;
        for (int i = n_; i >= 0; --i) {
            Poly<R> row;
            for (int j = n_ - i; j >= 0; --j) row = row * vt + Poly<R>::constant(coeff(i, j));
            acc = acc * ut + row;
        }
        return acc;
    }

    /// Substitution of bivariate arguments: p(U(x,y), V(x,y)).
    BiPoly subst(const BiPoly& U, const BiPoly& V) const {
        BiPoly acc = BiPoly::constant(R(0));
        for (int i = n_; i >= 0; --i) {
            BiPoly row = BiPoly::constant(R(0));
            for (int j = n_ - i; j >= 0; --j) {
                row = row * V + BiPoly::constant(coeff(i, j));
            }
            acc = acc * U + row;
        }
        return acc;
    }

    BiPoly pow(int e) const {
        BiPoly r = BiPoly::constant(R(1));
        BiPoly b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
            e >>= 1;
        }
        return r;
    }

    BiPoly deriv_u() const {
        BiPoly r(std::max(0, n_ - 1));
        for (int i = 1; i <= n_; ++i)
            for (int j = 0; j <= n_ - i; ++j) r.set(i - 1, j, R(long(i)) * coeff(i, j));
        return r;
    }
    BiPoly deriv_v() const {
        BiPoly r(std::max(0, n_ - 1));
        for (int i = 0; i <= n_; ++i)
            for (int j = 1; j <= n_ - i; ++j) r.set(i, j - 1, R(long(j)) * coeff(i, j));
        return r;
    }

    /// p(u + a, v + b).
    BiPoly taylor_shift(const R& a, const R& b) const {
        // shift u by a: treat as polynomial in u with Poly-in-v coefficients
        std::vector<Poly<R>> rows(n_ + 1);
        for (int i = 0; i <= n_; ++i) {
            std::vector<R> cs(n_ - i + 1);
            for (int j = 0; j <= n_ - i; ++j) cs[j] = coeff(i, j);
            rows[i] = Poly<R>(std::move(cs)).shift(b);
        }
        // now shift in u: synthetic division on the vector of Poly coefficients
        std::vector<Poly<R>> out;
        std::vector<Poly<R>> cur = std::move(rows);
        auto nonzero = [](const std::vector<Poly<R>>& v) {
            for (const auto& p : v)
                if (!p.is_zero()) return true;
            return false;
        };
        while (nonzero(cur)) {
            // synthetic division of sum cur[i] u^i by (u - a)
            std::vector<Poly<R>> quot(cur.size() > 0 ? cur.size() - 1 : 0);
            Poly<R> carry;
            for (int i = int(cur.size()) - 1; i >= 1; --i) {
                carry = cur[size_t(i)] + a * carry;
                quot[size_t(i) - 1] = carry;
            }
            Poly<R> value = cur.empty() ? Poly<R>{} : cur[0] + a * carry;
            out.push_back(value);
            cur = std::move(quot);
        }
        BiPoly r(n_);
        for (size_t i = 0; i < out.size(); ++i)
            for (int j = 0; j <= out[i].degree(); ++j) r.set(int(i), j, out[i].coeff(j));
        return r;
    }

    /// Order of vanishing at a point (minimal total degree after shifting);
    /// -1 for the zero polynomial.
    int vanishing_order_at(const R& a, const R& b) const {
        BiPoly sh = taylor_shift(a, b);
        int best = -1;
        for (int d = 0; d <= sh.n_; ++d) {
            for (int i = 0; i <= d; ++i)
                if (!(sh.coeff(i, d - i) == R(0))) return d;
        }
        return best;
    }

    template <class R2>
    BiPoly<R2> map() const {
        BiPoly<R2> r(n_);
        for (int i = 0; i <= n_; ++i)
            for (int j = 0; j <= n_ - i; ++j) r.set(i, j, R2(coeff(i, j)));
        return r;
    }

  private:
    int n_;
    std::vector<R> c_;
};

}  // namespace orbicurve

#endif
