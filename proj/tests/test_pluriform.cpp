#include <doctest.h>

#include <map>

#include "orbicurve/pluriform.hpp"

using namespace orbicurve;

TEST_CASE("w6 system shape and kernel") {
    auto sys = build_w6_system(Rat(2), Rat(1));
    CHECK(sys.matrix.rows() == 43);
    CHECK(sys.matrix.cols() == 44);
    CHECK(sys.block_sizes == std::vector<int>{12, 12, 19});
    CHECK(sys.kernel.size() >= 1);
    CHECK(sys.kernel.size() == 1);  // observed regression value
    for (const auto& v : sys.kernel)
        for (const auto& y : sys.matrix.mul_vec(v)) CHECK(y.is_zero());

    auto sys2 = build_w6_system(Rat(1, 2), Rat(0));
    CHECK(sys2.matrix.rows() == 43);
    CHECK(sys2.matrix.cols() == 44);
    CHECK(sys2.kernel.size() >= 1);
    // a locally constant 4th section enlarges the kernel; observed value
    CHECK(sys2.kernel.size() == 3);

    CHECK_THROWS_AS(build_w6_system(Rat(0), Rat(1)), Error);
    CHECK_THROWS_AS(build_w6_system(Rat(1), Rat(1)), Error);
}

TEST_CASE("w4 system shape and kernel") {
    auto sys = build_w4_system(Rat(2), Rat(1), Rat(3), Rat(-1));
    CHECK(sys.matrix.rows() == 27);
    CHECK(sys.matrix.cols() == 29);
    CHECK(sys.block_sizes == std::vector<int>{6, 6, 6, 9});
    CHECK(sys.kernel.size() >= 2);
    CHECK(sys.kernel.size() == 2);  // observed regression value

    auto sys2 = build_w4_system(Rat(2), Rat(0), Rat(3), Rat(0));
    CHECK(sys2.matrix.rows() == 27);
    CHECK(sys2.matrix.cols() == 29);
    CHECK(sys2.kernel.size() >= 2);
    CHECK(sys2.kernel.size() == 3);  // observed with both sections constant

    CHECK_THROWS_AS(build_w4_system(Rat(2), Rat(1), Rat(2), Rat(0)), Error);
    CHECK_THROWS_AS(build_w4_system(Rat(0), Rat(1), Rat(3), Rat(0)), Error);
}

TEST_CASE("binomial transform rows match the shear expansion") {
    // rebuild the osculation block of the w6 system by expanding
    // (dz + p1 dx)^(6-k) with Pascal-iterated coefficients and compare
    Rat p0(2), p1(3);
    auto sys = build_w6_system(p0, p1);
    const auto& caps = kW6Caps;
    std::vector<int> offs = {0};
    for (size_t k = 0; k + 1 < caps.size(); ++k) offs.push_back(offs.back() + caps[k] + 1);
    const int a[7] = {-1, 0, 0, 1, 1, 2, 2};
    // binomials by Pascal iteration
    long pascal[12][12] = {};
    for (int n = 0; n < 12; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
    }
    int row = 12;  // osculation block starts after the 12 rows at y = 1
    for (int j = 1; j <= 6; ++j)
        for (int h = 0; h <= a[j]; ++h) {
            // Q_j = sum_{k <= j} C(6-k, j-k) p1^{j-k} P_k
            std::vector<Rat> expect(44, Rat(0));
            for (int k = 0; k <= j; ++k) {
                Rat f = Rat(pascal[6 - k][j - k]) * p1.pow(j - k);
                for (int i = h; i <= caps[size_t(k)]; ++i) {
                    long fall = 1;
                    for (int t = 0; t < h; ++t) fall *= (i - t);
                    expect[size_t(offs[size_t(k)] + i)] += f * Rat(fall) * p0.pow(i - h);
                }
            }
            for (int c = 0; c < 44; ++c) CHECK(sys.matrix.at(row, c) == expect[size_t(c)]);
            ++row;
        }
}

TEST_CASE("pullback valuations for the w6 kernel form") {
    auto sys = build_w6_system(Rat(2), Rat(1));
    auto w = sys.kernel_form(0);
    Poly<Rat> p{Rat(2), Rat(1)};

    // 1-tangent section: holomorphic
    Laurent s1 = Laurent::from_poly(Poly<Rat>{1, 0, 1, 1});  // 1 + x^2(1 + x)
    auto f1 = pullback_w6(w, s1, p);
    REQUIRE(f1.valuation().has_value());
    CHECK(*f1.valuation() >= 0);

    // zero of order 3: vanishes at least once
    auto f2 = pullback_w6(w, Laurent::monomial(Rat(1), 3), p);
    REQUIRE(f2.valuation().has_value());
    CHECK(*f2.valuation() >= 1);

    // zero of order 5: vanishes to order >= 2
    auto f3 = pullback_w6(w, Laurent::monomial(Rat(1), 5), p);
    REQUIRE(f3.valuation().has_value());
    CHECK(*f3.valuation() >= 2);

    // infinity-tangent witness s = 1/x^2: holomorphic
    auto f4 = pullback_w6(w, Laurent::monomial(Rat(1), -2), p);
    REQUIRE(f4.valuation().has_value());
    CHECK(*f4.valuation() >= 0);
}

TEST_CASE("pullback valuations for w4 kernel forms") {
    auto sys = build_w4_system(Rat(2), Rat(0), Rat(3), Rat(0));
    Poly<Rat> p = Poly<Rat>::constant(Rat(2));
    Poly<Rat> q = Poly<Rat>::constant(Rat(3));
    for (size_t i = 0; i < sys.kernel.size(); ++i) {
        auto w = sys.kernel_form(i);
        // 1-tangent
        auto f1 = pullback_w4(w, Laurent::from_poly(Poly<Rat>{1, 0, 1}), p, q);
        if (f1.valuation()) CHECK(*f1.valuation() >= 0);
        // zero of order 2: vanishes
        auto f2 = pullback_w4(w, Laurent::monomial(Rat(1), 2), p, q);
        if (f2.valuation()) CHECK(*f2.valuation() >= 1);
        // zero of order 4: vanishes to order >= 2
        auto f3 = pullback_w4(w, Laurent::monomial(Rat(1), 4), p, q);
        if (f3.valuation()) CHECK(*f3.valuation() >= 2);
        // p-osculation of the constant section: holomorphic
        auto f4 = pullback_w4(w, Laurent::from_poly(Poly<Rat>{2, 0, 1}), p, q);
        if (f4.valuation()) CHECK(*f4.valuation() >= 0);
    }
}

TEST_CASE("verification suite passes and the corrupted control fails") {
    for (auto [p1, label] : {std::pair<Rat, const char*>{Rat(0), "constant"},
                             std::pair<Rat, const char*>{Rat(1), "moving"}}) {
        CAPTURE(label);
        auto sys = build_w6_system(Rat(2), p1);
        auto rep = verify_conditions_suite(sys, 10, 12345);
        CHECK(rep.kernel_exact);
        CHECK(rep.failures == 0);
        CHECK(rep.negative_control_failed);
        CHECK(rep.all_passed());
    }
    auto sys4 = build_w4_system(Rat(2), Rat(0), Rat(3), Rat(0));
    auto rep4 = verify_conditions_suite(sys4, 10, 999);
    CHECK(rep4.failures == 0);
    CHECK(rep4.negative_control_failed);
}

TEST_CASE("parallel verification matches sequential pass/fail counts") {
    auto sys = build_w6_system(Rat(2), Rat(1));
    auto seq = verify_conditions_suite(sys, 12, 777, kDefaultTruncation, 1);
    auto par = verify_conditions_suite(sys, 12, 777, kDefaultTruncation, 4);
    CHECK(seq.failures == par.failures);
    CHECK(seq.trials.size() == par.trials.size());
    CHECK(seq.negative_control_failed == par.negative_control_failed);
    // aggregation is order-independent: per-class failure counts agree
    auto count_by_class = [](const VerificationReport& r) {
        std::map<std::string, int> m;
        for (const auto& t : r.trials)
            if (!t.passed) ++m[t.condition_class];
        return m;
    };
    CHECK(count_by_class(seq) == count_by_class(par));
}
