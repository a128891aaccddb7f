#ifndef ORBICURVE_ARITHMETIC_POINTS_HPP
#define ORBICURVE_ARITHMETIC_POINTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbicurve/rational.hpp"

namespace orbicurve {

/// Primitive integer point (a : c) of P^1, sign-normalized: c > 0, or
/// c = 0 and a = 1.
class ProjectivePoint {
  public:
    ProjectivePoint(mpz_class a, mpz_class c);
    static ProjectivePoint zero() { return {0, 1}; }
    static ProjectivePoint one() { return {1, 1}; }
    static ProjectivePoint infinity() { return {1, 0}; }
    static ProjectivePoint from_rat(const Rat& r) { return {r.num(), r.den()}; }

    const mpz_class& a() const { return a_; }
    const mpz_class& c() const { return c_; }
    mpz_class b() const { return c_ - a_; }  // the third coordinate of a+b=c

    friend bool operator==(const ProjectivePoint& x, const ProjectivePoint& y) {
        return x.a_ == y.a_ && x.c_ == y.c_;
    }
    friend bool operator<(const ProjectivePoint& x, const ProjectivePoint& y) {
        if (x.c_ != y.c_) return x.c_ < y.c_;
        return x.a_ < y.a_;
    }

    mpz_class height() const;  // max(|a|, |b|, |c|)
    std::string str() const { return a_.get_str() + ":" + c_.get_str(); }

  private:
    mpz_class a_, c_;
};

/// Factorization by trial division (plus perfect-power-free tail guard).
std::vector<std::pair<mpz_class, int>> factorize(mpz_class n);

mpz_class radical(const mpz_class& n);

long p_adic_valuation(mpz_class n, const mpz_class& p);

/// v-adic intersection of two distinct points: v(a_x c_p - c_x a_p).
/// nullopt when x = p.
std::optional<long> intersection_valuation(const ProjectivePoint& x, const ProjectivePoint& p,
                                           const mpz_class& v);

struct ArithMark {
    ProjectivePoint point;
    int multiplicity;  // >= 2
};

struct ArithOrbifoldSpec {
    std::vector<ArithMark> marks;
    std::set<mpz_class> excluded_primes;  // M

    ArithOrbifoldSpec(std::vector<ArithMark> ms, std::set<mpz_class> m);
    /// Marks u, v, w at 0, 1, infinity.
    static ArithOrbifoldSpec uvw(int u, int v, int w, std::set<mpz_class> m = {});
};

/// Definition test: at every prime outside M, the intersection valuation with
/// each mark is 0 or >= the mark's multiplicity. Throws if x is a mark.
bool is_orbifold_point(const ProjectivePoint& x, const ArithOrbifoldSpec& spec);

struct PointRecord {
    ProjectivePoint point;
    // per mark: list of (prime, valuation) over primes dividing the cross term
    std::vector<std::vector<std::pair<mpz_class, long>>> valuations;
};

struct EnumerationReport {
    long height;
    std::vector<PointRecord> points;
    size_t count() const { return points.size(); }
};

/// All orbifold rational points of height <= H for marks at {0, 1, infinity}
/// (plus optional extra rational marks), generated from powerful candidates.
EnumerationReport enumerate_points(const ArithOrbifoldSpec& spec, long height);

struct AbcQuality {
    mpz_class rad;   // rad(a) rad(b) rad(c), exact
    Rat quality;     // log max / log rad, fixed-precision rational approximation
};

/// Quality of a triple a + b = c of nonzero pairwise-coprime integers.
AbcQuality abc_quality(const mpz_class& a, const mpz_class& b, const mpz_class& c);

struct FinitenessRow {
    std::string spec_name;
    std::vector<std::pair<long, size_t>> counts;  // (height, point count)
};

/// Point counts along a height ladder for the five general-type shapes.
std::vector<FinitenessRow> finiteness_report(const std::vector<long>& heights,
                                             const std::set<mpz_class>& excluded = {});

/// Generates all n with 1 <= n <= bound such that every prime factor outside
/// `exempt` appears with exponent >= u. Sorted ascending.
std::vector<long> powerful_numbers(long bound, int u, const std::set<mpz_class>& exempt);

}  // namespace orbicurve

#endif
