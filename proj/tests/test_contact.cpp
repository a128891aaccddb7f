#include <doctest.h>

#include <map>
#include <random>

#include "orbicurve/contact.hpp"
#include "orbicurve/function_field.hpp"

using namespace orbicurve;

TEST_CASE("resultant-free contact basics") {
    Poly<Rat> one = Poly<Rat>::constant(Rat(1));
    Poly<Rat> t2{0, 0, 1};
    // (t^2, 1) vs (0, 1) at t=0 -> 2
    CHECK(resultant_free_contact(t2, one, Poly<Rat>{}, one, BasePoint::finite(Rat(0))) == 2);
    // identical sections -> infinite flag
    CHECK(!resultant_free_contact(one, one, one, one, BasePoint::finite(Rat(3))).has_value());
    // (t, 1) vs (t^2, 1) at 0 -> 1
    CHECK(resultant_free_contact(Poly<Rat>{0, 1}, one, t2, one, BasePoint::finite(Rat(0))) == 1);
}

TEST_CASE("contact order of sections, including infinity") {
    auto s_t2 = FunctionFieldSection::from_poly(Poly<Rat>{0, 0, 1});
    CHECK(contact_order(s_t2, FunctionFieldSection::zero(), BasePoint::finite(Rat(0))) == 2);
    // s = t^2 + 1 against the constant 1 at 0 -> 2
    auto s2 = FunctionFieldSection::from_poly(Poly<Rat>{1, 0, 1});
    CHECK(contact_order(s2, FunctionFieldSection::one(), BasePoint::finite(Rat(0))) == 2);
    // s = 1/t^2 against infinity at 0 -> 2
    FunctionFieldSection s3{Poly<Rat>::constant(Rat(1)), Poly<Rat>{0, 0, 1}};
    CHECK(contact_order(s3, FunctionFieldSection::infinity(), BasePoint::finite(Rat(0))) == 2);
    // t^2 against infinity at the base point infinity -> 2
    CHECK(contact_order(s_t2, FunctionFieldSection::infinity(), BasePoint::infinity()) == 2);
}

TEST_CASE("contact order symmetry and scaling invariance") {
    std::mt19937_64 gen(17);
    auto rsec = [&] {
        std::vector<Rat> a(1 + gen() % 4), c(1 + gen() % 4);
        for (auto& v : a) v = Rat(long(gen() % 11) - 5);
        for (auto& v : c) v = Rat(long(gen() % 11) - 5);
        Poly<Rat> pa(std::move(a)), pc(std::move(c));
        if (pa.is_zero() && pc.is_zero()) pc = Poly<Rat>::constant(Rat(1));
        return FunctionFieldSection(pa, pc);
    };
    for (int t = 0; t < 40; ++t) {
        auto s = rsec(), p = rsec();
        if (s.same_section(p)) continue;
        for (auto b : {BasePoint::finite(Rat(0)), BasePoint::finite(Rat(1)),
                       BasePoint::finite(Rat(-2)), BasePoint::infinity()}) {
            CHECK(contact_order(s, p, b) == contact_order(p, s, b));
        }
        // simultaneous scaling of one pair by a nonzero constant
        FunctionFieldSection s_scaled{Rat(7) * s.A(), Rat(7) * s.C()};
        CHECK(contact_order(s_scaled, p, BasePoint::finite(Rat(0))) ==
              contact_order(s, p, BasePoint::finite(Rat(0))));
    }
}

TEST_CASE("Bezout: total contact of distinct sections is d + d'") {
    std::mt19937_64 gen(23);
    auto rsec = [&](int dmax) {
        std::vector<Rat> a(1 + gen() % std::uint64_t(dmax + 1)),
            c(1 + gen() % std::uint64_t(dmax + 1));
        for (auto& v : a) v = Rat(long(gen() % 13) - 6);
        for (auto& v : c) v = Rat(long(gen() % 13) - 6);
        Poly<Rat> pa(std::move(a)), pc(std::move(c));
        if (pa.is_zero() && pc.is_zero()) pa = Poly<Rat>::constant(Rat(1));
        return FunctionFieldSection(pa, pc);
    };
    int done = 0;
    while (done < 60) {
        auto s = rsec(4), p = rsec(4);
        if (s.same_section(p)) continue;
        ++done;
        // enumerate every finite contact point exactly via the squarefree
        // structure of the cross difference, then add the infinity contact
        Poly<Rat> d = cross_difference(s.A(), s.C(), p.A(), p.C());
        long total = 0;
        auto rr = rational_roots(d);
        for (const auto& [root, mult] : rr.roots) total += mult;
        for (const auto& [factor, mult] : rr.packets)
            total += static_cast<long>(factor.degree()) * mult;
        auto at_inf = contact_order(s, p, BasePoint::infinity());
        REQUIRE(at_inf.has_value());
        total += *at_inf;
        CHECK(total == s.degree() + p.degree());
    }
}
