#include "orbicurve/arithmetic_points.hpp"

#include <algorithm>
#include <cmath>

namespace orbicurve {

ProjectivePoint::ProjectivePoint(mpz_class a, mpz_class c) : a_(std::move(a)), c_(std::move(c)) {
    if (a_ == 0 && c_ == 0) throw Error("ProjectivePoint: (0, 0) is not a point");
    mpz_class g = gcd(a_, c_);
    if (g > 1) {
        a_ /= g;
        c_ /= g;
    }
    if (c_ < 0 || (c_ == 0 && a_ < 0)) {
        a_ = -a_;
        c_ = -c_;
    }
}

mpz_class ProjectivePoint::height() const {
    mpz_class h = abs(a_);
    mpz_class ac = abs(c_), ab = abs(b());
    if (ac > h) h = ac;
    if (ab > h) h = ab;
    return h;
}

namespace {

const std::vector<long>& small_primes() {
    static const std::vector<long> primes = [] {
        const long limit = 100000;
        std::vector<bool> is_comp(limit + 1, false);
        std::vector<long> ps;
        for (long i = 2; i <= limit; ++i) {
            if (!is_comp[i]) {
                ps.push_back(i);
                for (long j = i * i; j <= limit; j += i) is_comp[j] = true;
            }
        }
        return ps;
    }();
    return primes;
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factorize(mpz_class n) {
    std::vector<std::pair<mpz_class, int>> fs;
    n = abs(n);
    if (n <= 1) return fs;
    for (long p : small_primes()) {
        if (mpz_class(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fs.emplace_back(p, e);
        }
    }
    if (n > 1) {
        // remaining cofactor: either prime or a perfect power of a prime;
        // inputs here stay far below the square of the sieve limit
        if (mpz_class(100000) * 100000 < n)
            throw Error("factorize: input beyond trial-division range");
        fs.emplace_back(n, 1);
    }
    std::sort(fs.begin(), fs.end());
    return fs;
}

mpz_class radical(const mpz_class& n) {
    mpz_class r = 1;
    for (const auto& [p, e] : factorize(n)) r *= p;
    return r;
}

long p_adic_valuation(mpz_class n, const mpz_class& p) {
    if (n == 0) throw Error("p_adic_valuation: zero");
    n = abs(n);
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::optional<long> intersection_valuation(const ProjectivePoint& x, const ProjectivePoint& p,
                                           const mpz_class& v) {
    mpz_class cross = x.a() * p.c() - x.c() * p.a();
    if (cross == 0) return std::nullopt;
    return p_adic_valuation(cross, v);
}

ArithOrbifoldSpec::ArithOrbifoldSpec(std::vector<ArithMark> ms, std::set<mpz_class> m)
    : marks(std::move(ms)), excluded_primes(std::move(m)) {
    for (const auto& mk : marks)
        if (mk.multiplicity < 2) throw Error("ArithOrbifoldSpec: multiplicity must be >= 2");
    for (size_t i = 0; i < marks.size(); ++i)
        for (size_t j = i + 1; j < marks.size(); ++j)
            if (marks[i].point == marks[j].point)
                throw Error("ArithOrbifoldSpec: marks must be distinct points");
}

ArithOrbifoldSpec ArithOrbifoldSpec::uvw(int u, int v, int w, std::set<mpz_class> m) {
    return ArithOrbifoldSpec({{ProjectivePoint::zero(), u},
                              {ProjectivePoint::one(), v},
                              {ProjectivePoint::infinity(), w}},
                             std::move(m));
}

bool is_orbifold_point(const ProjectivePoint& x, const ArithOrbifoldSpec& spec) {
    for (const auto& mk : spec.marks) {
        mpz_class cross = x.a() * mk.point.c() - x.c() * mk.point.a();
        if (cross == 0) throw Error("is_orbifold_point: point coincides with a mark");
        for (const auto& [p, e] : factorize(cross)) {
            if (spec.excluded_primes.count(p)) continue;
            if (e > 0 && e < mk.multiplicity) return false;
        }
    }
    return true;
}

std::vector<long> powerful_numbers(long bound, int u, const std::set<mpz_class>& exempt) {
    std::vector<long> out;
    if (bound < 1) return out;
    std::vector<long> primes;
    for (long p : small_primes()) {
        if (p > bound) break;
        primes.push_back(p);
    }
    // DFS over primes; exponent >= u for non-exempt primes, >= 1 for exempt
    std::vector<std::pair<size_t, long>> stack = {{0, 1}};
    while (!stack.empty()) {
        auto [i, n] = stack.back();
        stack.pop_back();
        out.push_back(n);
        for (size_t j = i; j < primes.size(); ++j) {
            long p = primes[j];
            bool exempted = exempt.count(p) > 0;
            int min_e = exempted ? 1 : u;
            // p^min_e must fit
            long v = n;
            bool fits = true;
            for (int e = 0; e < min_e; ++e) {
                if (v > bound / p) {
                    fits = false;
                    break;
                }
                v *= p;
            }
            if (!fits) {
                if (p > bound / n) break;  // larger primes cannot fit either
                continue;
            }
            while (true) {
                stack.push_back({j + 1, v});
                if (v > bound / p) break;
                v *= p;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool is_u_powerful(const mpz_class& n, int u, const std::set<mpz_class>& exempt) {
    for (const auto& [p, e] : factorize(n)) {
        if (exempt.count(p)) continue;
        if (e < u) return false;
    }
    return true;
}

PointRecord record_for(const ProjectivePoint& x, const ArithOrbifoldSpec& spec) {
    PointRecord rec{x, {}};
    for (const auto& mk : spec.marks) {
        mpz_class cross = x.a() * mk.point.c() - x.c() * mk.point.a();
        std::vector<std::pair<mpz_class, long>> vals;
        for (const auto& [p, e] : factorize(cross)) vals.emplace_back(p, e);
        rec.valuations.push_back(std::move(vals));
    }
    return rec;
}

}  // namespace

EnumerationReport enumerate_points(const ArithOrbifoldSpec& spec, long height) {
    if (spec.marks.size() < 3 || !(spec.marks[0].point == ProjectivePoint::zero()) ||
        !(spec.marks[1].point == ProjectivePoint::one()) ||
        !(spec.marks[2].point == ProjectivePoint::infinity()))
        throw Error("enumerate_points: first three marks must be 0, 1, infinity");
    const int u = spec.marks[0].multiplicity;
    const int v = spec.marks[1].multiplicity;
    const int w = spec.marks[2].multiplicity;
    EnumerationReport rep;
    rep.height = height;
    if (height < 1) return rep;
    auto as = powerful_numbers(height, u, spec.excluded_primes);
    auto cs = powerful_numbers(height, w, spec.excluded_primes);
    for (long cval : cs) {
        mpz_class c(cval);
        for (long aval : as) {
            for (int sign : {1, -1}) {
                mpz_class a = sign * mpz_class(aval);
                mpz_class b = c - a;
                if (b == 0 || abs(b) > height) continue;
                if (gcd(a, c) != 1) continue;
                if (!is_u_powerful(b, v, spec.excluded_primes)) continue;
                ProjectivePoint x(a, c);
                // extra marks beyond 0, 1, infinity
                bool ok = true;
                for (size_t j = 3; j < spec.marks.size(); ++j) {
                    const auto& mk = spec.marks[j];
                    mpz_class cross = x.a() * mk.point.c() - x.c() * mk.point.a();
                    if (cross == 0) {
                        ok = false;  // coincides with a mark: excluded
                        break;
                    }
                    for (const auto& [p, e] : factorize(cross)) {
                        if (spec.excluded_primes.count(p)) continue;
                        if (e > 0 && e < mk.multiplicity) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                }
                if (!ok) continue;
                rep.points.push_back(record_for(x, spec));
            }
        }
    }
    std::sort(rep.points.begin(), rep.points.end(),
              [](const PointRecord& p, const PointRecord& q) { return p.point < q.point; });
    return rep;
}

AbcQuality abc_quality(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
    if (a == 0 || b == 0 || c == 0) throw Error("abc_quality: zero entry");
    if (a + b != c) throw Error("abc_quality: a + b != c");
    if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1)
        throw Error("abc_quality: entries must be pairwise coprime");
    AbcQuality q;
    q.rad = radical(a) * radical(b) * radical(c);
    mpz_class mx = abs(a);
    mpz_class tb = abs(b), tc = abs(c);
    if (tb > mx) mx = tb;
    if (tc > mx) mx = tc;
    double ratio = std::log(mx.get_d()) / std::log(q.rad.get_d());
    const long denom = 1000000000L;
    q.quality = Rat(mpz_class(static_cast<long>(std::llround(ratio * double(denom)))),
                    mpz_class(denom));
    return q;
}

std::vector<FinitenessRow> finiteness_report(const std::vector<long>& heights,
                                             const std::set<mpz_class>& excluded) {
    // the five general-type shapes; the marks beyond 0, 1, infinity are the
    // explicit rational points 2 and 1/2
    std::vector<std::pair<std::string, ArithOrbifoldSpec>> specs;
    specs.emplace_back("(2,3,7)", ArithOrbifoldSpec::uvw(2, 3, 7, excluded));
    specs.emplace_back("(2,4,5)", ArithOrbifoldSpec::uvw(2, 4, 5, excluded));
    specs.emplace_back("(3,3,4)", ArithOrbifoldSpec::uvw(3, 3, 4, excluded));
    {
        ArithOrbifoldSpec s({{ProjectivePoint::zero(), 3},
                             {ProjectivePoint::one(), 2},
                             {ProjectivePoint::infinity(), 2},
                             {ProjectivePoint(2, 1), 2}},
                            excluded);
        specs.emplace_back("(2,2,2,3)", std::move(s));
    }
    {
        ArithOrbifoldSpec s({{ProjectivePoint::zero(), 2},
                             {ProjectivePoint::one(), 2},
                             {ProjectivePoint::infinity(), 2},
                             {ProjectivePoint(2, 1), 2},
                             {ProjectivePoint(1, 2), 2}},
                            excluded);
        specs.emplace_back("(2,2,2,2,2)", std::move(s));
    }
    std::vector<FinitenessRow> rows;
    for (auto& [name, spec] : specs) {
        FinitenessRow row;
        row.spec_name = name;
        for (long h : heights) row.counts.emplace_back(h, enumerate_points(spec, h).count());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace orbicurve
