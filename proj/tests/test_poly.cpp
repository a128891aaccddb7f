#include <doctest.h>

#include <random>

#include "orbicurve/bipoly.hpp"
#include "orbicurve/poly.hpp"

using namespace orbicurve;

namespace {
Poly<Rat> rpoly(std::mt19937_64& gen, int maxdeg) {
    int d = int(gen() % std::uint64_t(maxdeg + 1));
    std::vector<Rat> c(size_t(d) + 1);
    for (auto& v : c) v = Rat(long(gen() % 21) - 10, long(gen() % 5) + 1);
    return Poly<Rat>(std::move(c));
}
}  // namespace

TEST_CASE("derivative basics") {
    // y^2 -> 2y
    CHECK(Poly<Rat>{0, 0, 1}.derivative() == Poly<Rat>{0, 2});
    // constant -> 0
    CHECK(Poly<Rat>::constant(Rat(5)).derivative().is_zero());
    // y^3 - y -> 3y^2 - 1
    CHECK(Poly<Rat>{0, -1, 0, 1}.derivative() == Poly<Rat>{-1, 0, 3});
    CHECK(Poly<Rat>{1, 1}.derivative().degree() == 0);
}

TEST_CASE("polynomial ring laws on random inputs") {
    std::mt19937_64 gen(7);
    for (int t = 0; t < 100; ++t) {
        auto p = rpoly(gen, 5), q = rpoly(gen, 5), r = rpoly(gen, 5);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("division, gcd, ord") {
    Poly<Rat> p{-1, 0, 1};  // x^2 - 1
    auto [q, r] = p.divrem(Poly<Rat>{-1, 1});
    CHECK(q == Poly<Rat>{1, 1});
    CHECK(r.is_zero());
    CHECK(gcd(Poly<Rat>{-1, 0, 1}, Poly<Rat>{1, 1}) == Poly<Rat>{1, 1});
    Poly<Rat> s = Poly<Rat>{0, 1}.pow(3) * Poly<Rat>{-2, 1};  // t^3 (t - 2)
    CHECK(s.ord_at(Rat(0)) == 3);
    CHECK(s.ord_at(Rat(2)) == 1);
    CHECK(s.ord_at(Rat(1)) == 0);
    CHECK(!Poly<Rat>{}.ord_at(Rat(0)).has_value());
}

TEST_CASE("Taylor shift") {
    std::mt19937_64 gen(11);
    for (int t = 0; t < 50; ++t) {
        auto p = rpoly(gen, 6);
        Rat a(long(gen() % 11) - 5, long(gen() % 3) + 1);
        auto sh = p.shift(a);
        for (long x = -3; x <= 3; ++x) CHECK(sh(Rat(x)) == p(Rat(x) + a));
    }
}

TEST_CASE("squarefree decomposition recovers multiplicity structure") {
    Poly<Rat> x = Poly<Rat>::x();
    Poly<Rat> p = (x - Poly<Rat>::constant(Rat(1))).pow(3) *
                  (x - Poly<Rat>::constant(Rat(2))).pow(2) * (x + Poly<Rat>::constant(Rat(5)));
    auto sf = squarefree_decomposition(p);
    REQUIRE(sf.size() == 3);
    // parts come out ordered by multiplicity
    CHECK(sf[0].second == 1);
    CHECK(sf[0].first == Poly<Rat>{5, 1});
    CHECK(sf[1].second == 2);
    CHECK(sf[1].first == Poly<Rat>{-2, 1});
    CHECK(sf[2].second == 3);
    CHECK(sf[2].first == Poly<Rat>{-1, 1});
}

TEST_CASE("rational roots with packets") {
    Poly<Rat> x = Poly<Rat>::x();
    // (t - 1)(t^2 - 2)^2: rational root 1, degree-2 packet of multiplicity 2
    Poly<Rat> p = (x - Poly<Rat>::constant(Rat(1))) * (x * x - Poly<Rat>::constant(Rat(2))).pow(2);
    auto rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 1);
    CHECK(rr.roots[0].first == Rat(1));
    CHECK(rr.roots[0].second == 1);
    REQUIRE(rr.packets.size() == 1);
    CHECK(rr.packets[0].first == Poly<Rat>{-2, 0, 1});
    CHECK(rr.packets[0].second == 2);
    // roots with fractional values
    Poly<Rat> q{Rat(-1, 2), Rat(1)};  // t - 1/2
    auto rr2 = rational_roots(q * q);
    REQUIRE(rr2.roots.size() == 1);
    CHECK(rr2.roots[0].first == Rat(1, 2));
    CHECK(rr2.roots[0].second == 2);
}

TEST_CASE("resultant detects common roots") {
    Poly<Rat> x = Poly<Rat>::x();
    auto lin = [&](long r) { return x - Poly<Rat>::constant(Rat(r)); };
    CHECK(resultant(lin(1) * lin(2), lin(2) * lin(3)).is_zero());
    CHECK(!resultant(lin(1) * lin(2), lin(3) * lin(4)).is_zero());
    // Res(f, g) = lc(f)^deg g lc(g)^deg f prod (root differences)
    CHECK(resultant(lin(0), lin(1)) == Rat(-1));
}

TEST_CASE("bivariate Taylor shift against direct evaluation") {
    std::mt19937_64 gen(19);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + int(gen() % 5);
        orbicurve::BiPoly<Rat> p(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n - i; ++j)
                p.set(i, j, Rat(long(gen() % 9) - 4, long(gen() % 3) + 1));
        Rat a(long(gen() % 7) - 3), b(long(gen() % 7) - 3, 2);
        auto sh = p.taylor_shift(a, b);
        for (long x = -2; x <= 2; ++x)
            for (long y = -2; y <= 2; ++y)
                CHECK(sh(Rat(x), Rat(y)) == p(Rat(x) + a, Rat(y) + b));
        // vanishing order at a point: plant a triple zero and detect it
    }
    orbicurve::BiPoly<Rat> u = orbicurve::BiPoly<Rat>::monomial(Rat(1), 1, 0);
    orbicurve::BiPoly<Rat> v = orbicurve::BiPoly<Rat>::monomial(Rat(1), 0, 1);
    auto shift_u = u - orbicurve::BiPoly<Rat>::constant(Rat(2), 1);
    auto shift_v = v - orbicurve::BiPoly<Rat>::constant(Rat(3), 1);
    auto c = shift_u * shift_u * shift_u + shift_u * shift_v * shift_v;
    CHECK(c.vanishing_order_at(Rat(2), Rat(3)) == 3);
    CHECK(c.vanishing_order_at(Rat(0), Rat(0)) == 0);
}

TEST_CASE("GaussRat polynomials evaluate and divide") {
    GaussRat i = GaussRat::i();
    Poly<GaussRat> p{GaussRat(Rat(1)), GaussRat(Rat(0)), GaussRat(Rat(1))};  // x^2 + 1
    CHECK(p(i) == GaussRat(Rat(0)));
    CHECK(p.ord_at(i) == 1);
    CHECK(p.ord_at(-i) == 1);
    CHECK(p.ord_at(GaussRat(Rat(1))) == 0);
}
