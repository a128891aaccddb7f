#include <doctest.h>

#include <set>

#include "orbicurve/arithmetic_points.hpp"

using namespace orbicurve;

TEST_CASE("projective point normalization") {
    ProjectivePoint p(4, -6);
    CHECK(p.a() == -2);
    CHECK(p.c() == 3);
    ProjectivePoint q(-3, 0);
    CHECK(q.a() == 1);
    CHECK(q.c() == 0);
    CHECK_THROWS_AS(ProjectivePoint(0, 0), Error);
    CHECK(ProjectivePoint(8, 9).height() == 9);
}

TEST_CASE("intersection valuations of (8:9)") {
    ProjectivePoint x(8, 9);
    CHECK(intersection_valuation(x, ProjectivePoint::zero(), 2) == 3);
    CHECK(intersection_valuation(x, ProjectivePoint::infinity(), 3) == 2);
    CHECK(intersection_valuation(x, ProjectivePoint::one(), 5) == 0);
    CHECK(!intersection_valuation(x, x, 2).has_value());
}

TEST_CASE("orbifold point membership") {
    ProjectivePoint x(8, 9);
    CHECK(is_orbifold_point(x, ArithOrbifoldSpec::uvw(3, 2, 2)));
    CHECK(!is_orbifold_point(x, ArithOrbifoldSpec::uvw(2, 2, 7)));
    // excluding every prime of a * b * c waives all conditions
    CHECK(is_orbifold_point(ProjectivePoint(5, 7), ArithOrbifoldSpec::uvw(9, 9, 9, {2, 5, 7})));
    CHECK_THROWS_AS(is_orbifold_point(ProjectivePoint::one(), ArithOrbifoldSpec::uvw(2, 2, 2)),
                    Error);
}

TEST_CASE("powerful number generation matches the sieve filter") {
    for (int u : {2, 3}) {
        for (const auto& exempt : {std::set<mpz_class>{}, std::set<mpz_class>{2}}) {
            auto gen = powerful_numbers(2000, u, exempt);
            std::set<long> got(gen.begin(), gen.end());
            CHECK(got.size() == gen.size());
            for (long n = 1; n <= 2000; ++n) {
                bool ok = true;
                for (const auto& [p, e] : factorize(n)) {
                    if (exempt.count(p)) continue;
                    if (e < u) ok = false;
                }
                CHECK(got.count(n) == (ok ? 1 : 0));
            }
        }
    }
}

TEST_CASE("enumeration examples") {
    // (3,2,2) at height 10 contains (8:9)
    auto rep = enumerate_points(ArithOrbifoldSpec::uvw(3, 2, 2), 10);
    bool found = false;
    for (const auto& p : rep.points)
        if (p.point == ProjectivePoint(8, 9)) found = true;
    CHECK(found);

    // (2,2,2) at height 2 excludes (1:2); nothing else is admissible either
    auto rep2 = enumerate_points(ArithOrbifoldSpec::uvw(2, 2, 2), 2);
    for (const auto& p : rep2.points) CHECK(!(p.point == ProjectivePoint(1, 2)));
    CHECK(rep2.count() == 0);

    // height 0 is empty
    CHECK(enumerate_points(ArithOrbifoldSpec::uvw(2, 2, 2), 0).count() == 0);
}

namespace {
/// Brute-force oracle over all coprime pairs, via per-value factorizations.
std::set<std::string> all_pairs_oracle(const ArithOrbifoldSpec& spec, long h) {
    std::set<std::string> out;
    for (long c = 1; c <= h; ++c)
        for (long a = -h; a <= h; ++a) {
            if (a == 0 || a == c) continue;
            long b = c - a;
            if (std::abs(b) > h) continue;
            if (gcd(mpz_class(a), mpz_class(c)) != 1) continue;
            ProjectivePoint x(a, c);
            bool keep = true;
            for (const auto& mk : spec.marks) {
                mpz_class cross = x.a() * mk.point.c() - x.c() * mk.point.a();
                if (cross == 0) {
                    keep = false;
                    break;
                }
                for (const auto& [p, e] : factorize(cross)) {
                    if (spec.excluded_primes.count(p)) continue;
                    if (e < mk.multiplicity) keep = false;
                }
                if (!keep) break;
            }
            if (keep) out.insert(x.str());
        }
    return out;
}
}  // namespace

TEST_CASE("enumerator equals the all-pairs oracle at height 1000") {
    for (auto [u, v, w] : {std::tuple<int, int, int>{2, 2, 2}, {3, 2, 2}, {2, 3, 7}}) {
        auto spec = ArithOrbifoldSpec::uvw(u, v, w);
        auto rep = enumerate_points(spec, 1000);
        std::set<std::string> got;
        for (const auto& p : rep.points) got.insert(p.point.str());
        CHECK(got.size() == rep.count());
        CHECK(got == all_pairs_oracle(spec, 1000));
    }
    // with excluded primes
    auto spec_m = ArithOrbifoldSpec::uvw(2, 2, 2, {2});
    auto rep = enumerate_points(spec_m, 300);
    std::set<std::string> got;
    for (const auto& p : rep.points) got.insert(p.point.str());
    CHECK(got == all_pairs_oracle(spec_m, 300));
}

TEST_CASE("radical-condition formula agrees with the valuation definition") {
    // exhaustive over coprime pairs of height <= 200
    auto spec = ArithOrbifoldSpec::uvw(3, 2, 2);
    for (long c = 1; c <= 200; ++c)
        for (long a = -200; a <= 200; ++a) {
            if (a == 0 || a == c) continue;
            long b = c - a;
            if (std::abs(b) > 200) continue;
            if (gcd(mpz_class(a), mpz_class(c)) != 1) continue;
            ProjectivePoint x(a, c);
            bool rad_ok = true;
            auto powerful = [](long n, int u) {
                for (const auto& [p, e] : factorize(n))
                    if (e < u) return false;
                return true;
            };
            rad_ok = powerful(a, 3) && powerful(b, 2) && powerful(c, 2);
            CHECK(is_orbifold_point(x, spec) == rad_ok);
        }
}

TEST_CASE("monotonicity in the height and in M") {
    auto spec = ArithOrbifoldSpec::uvw(2, 2, 2);
    auto small = enumerate_points(spec, 100);
    auto large = enumerate_points(spec, 400);
    std::set<std::string> s1, s2;
    for (const auto& p : small.points) s1.insert(p.point.str());
    for (const auto& p : large.points) s2.insert(p.point.str());
    for (const auto& p : s1) CHECK(s2.count(p) == 1);

    auto spec_m = ArithOrbifoldSpec::uvw(2, 2, 2, {3});
    auto with_m = enumerate_points(spec_m, 100);
    std::set<std::string> s3;
    for (const auto& p : with_m.points) s3.insert(p.point.str());
    for (const auto& p : s1) CHECK(s3.count(p) == 1);
}

TEST_CASE("squaring map sends points to points of the image orbifold") {
    // x -> x^2 from (m at 0, m at inf, 2 at 1, 2 at -1) to (2m at 0, 2m at
    // inf, 2 at 1), with 2 added to the excluded primes
    const int m = 2;
    ArithOrbifoldSpec src({{ProjectivePoint::zero(), m},
                           {ProjectivePoint::one(), 2},
                           {ProjectivePoint::infinity(), m},
                           {ProjectivePoint(-1, 1), 2}},
                          {});
    ArithOrbifoldSpec tgt({{ProjectivePoint::zero(), 2 * m},
                           {ProjectivePoint::one(), 2},
                           {ProjectivePoint::infinity(), 2 * m}},
                          {2});
    auto rep = enumerate_points(src, 1000);
    for (const auto& p : rep.points) {
        ProjectivePoint image(p.point.a() * p.point.a(), p.point.c() * p.point.c());
        CHECK(is_orbifold_point(image, tgt));
    }
}

TEST_CASE("abc quality") {
    auto q = abc_quality(1, 8, 9);
    CHECK(q.rad == 6);
    // log 9 / log 6 = 1.2263...
    CHECK(q.quality > Rat(12, 10));
    CHECK(q.quality < Rat(13, 10));

    auto q2 = abc_quality(1, 1, 2);
    CHECK(q2.rad == 2);
    CHECK(q2.quality == Rat(1));

    auto q3 = abc_quality(5, 27, 32);
    CHECK(q3.rad == 30);

    CHECK_THROWS_AS(abc_quality(2, 2, 4), Error);
    CHECK_THROWS_AS(abc_quality(1, 2, 4), Error);
    CHECK_THROWS_AS(abc_quality(0, 1, 1), Error);
}

TEST_CASE("extra-mark filtering agrees with the membership test") {
    ArithOrbifoldSpec base = ArithOrbifoldSpec::uvw(2, 2, 2);
    ArithOrbifoldSpec full({{ProjectivePoint::zero(), 2},
                            {ProjectivePoint::one(), 2},
                            {ProjectivePoint::infinity(), 2},
                            {ProjectivePoint(2, 1), 2}},
                           {});
    auto base_points = enumerate_points(base, 500);
    auto full_points = enumerate_points(full, 500);
    std::set<std::string> expect;
    for (const auto& p : base_points.points) {
        // skip the extra mark itself; everything else goes through membership
        if (p.point == ProjectivePoint(2, 1)) continue;
        if (is_orbifold_point(p.point, full)) expect.insert(p.point.str());
    }
    std::set<std::string> got;
    for (const auto& p : full_points.points) got.insert(p.point.str());
    CHECK(got == expect);
}

TEST_CASE("finiteness report rows") {
    auto rows = finiteness_report({10, 100});
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].spec_name == "(2,3,7)");
    for (const auto& row : rows) {
        REQUIRE(row.counts.size() == 2);
        CHECK(row.counts[0].second <= row.counts[1].second);  // ladder monotone
    }
}
