#ifndef ORBICURVE_FUNCTION_FIELD_HPP
#define ORBICURVE_FUNCTION_FIELD_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbicurve/bipoly.hpp"
#include "orbicurve/contact.hpp"
#include "orbicurve/poly.hpp"

namespace orbicurve {

struct IdenticalSections : Error {
    using Error::Error;
};

/// A section of P^1 x B -> B over B = P^1, i.e. a point of P^1 over Q(t),
/// stored as a primitive pair (A(t) : C(t)) with gcd(A, C) = 1.
class FunctionFieldSection {
  public:
    FunctionFieldSection(Poly<Rat> a, Poly<Rat> c);

    static FunctionFieldSection constant(const Rat& v) {
        return {Poly<Rat>::constant(v), Poly<Rat>::constant(Rat(1))};
    }
    static FunctionFieldSection zero() { return constant(Rat(0)); }
    static FunctionFieldSection one() { return constant(Rat(1)); }
    static FunctionFieldSection infinity() {
        return {Poly<Rat>::constant(Rat(1)), Poly<Rat>{}};
    }
    /// Polynomial section s(t) = p(t).
    static FunctionFieldSection from_poly(Poly<Rat> p) {
        return {std::move(p), Poly<Rat>::constant(Rat(1))};
    }

    const Poly<Rat>& A() const { return a_; }
    const Poly<Rat>& C() const { return c_; }
    int degree() const { return std::max(a_.degree(), c_.degree()); }
    bool is_constant() const { return degree() <= 0; }

    /// Same point of P^1(Q(t)).
    bool same_section(const FunctionFieldSection& o) const {
        return cross_difference(a_, c_, o.a_, o.c_).is_zero();
    }

  private:
    Poly<Rat> a_, c_;
};

/// Contact order of two sections at a base point; nullopt if identical.
std::optional<int> contact_order(const FunctionFieldSection& s, const FunctionFieldSection& p,
                                 const BasePoint& b);

/// Marked sections with multiplicities plus a finite bad-place set M.
class SectionConfig {
  public:
    struct MarkedSection {
        FunctionFieldSection section;
        int multiplicity;  // >= 2
    };

    /// First three marked sections must be the constants 0, 1, infinity.
    SectionConfig(std::vector<MarkedSection> marks, std::set<BasePoint> bad_places);

    /// Convenience: constant marks 0, 1, infinity with the given multiplicities.
    static SectionConfig constants(int m0, int m1, int minf,
                                   std::set<BasePoint> bad_places = {});

    const std::vector<MarkedSection>& marks() const { return marks_; }
    const std::set<BasePoint>& bad_places() const { return bad_places_; }
    bool in_bad_places(const BasePoint& b) const { return bad_places_.count(b) > 0; }

    /// Coincidence points of distinct marked sections (must lie in M).
    const std::vector<BasePoint>& coincidence_points() const { return coincidence_points_; }

  private:
    std::vector<MarkedSection> marks_;
    std::set<BasePoint> bad_places_;
    std::vector<BasePoint> coincidence_points_;
};

/// Contact bookkeeping of one section against a SectionConfig. Conjugate
/// algebraic contact points are carried as packets (squarefree factor,
/// point count); each packet meets exactly one marked section and, being
/// irrational, never lies in the rational bad-place set.
struct ContactProfile {
    struct Entry {
        // either a rational base point ...
        std::optional<BasePoint> point;
        // ... or a packet of conjugate points: monic squarefree factor + count
        std::optional<Poly<Rat>> packet;
        int count = 1;
        std::vector<int> orders;  // t_j(b) per mark
        int max_order = 0;        // t(b)
        bool in_bad_places = false;
    };
    std::vector<Entry> entries;

    /// Sum of t_j over all entries (with packet counts), per mark.
    std::vector<long> totals_per_mark(size_t nmarks) const;
};

ContactProfile contact_profile(const FunctionFieldSection& s, const SectionConfig& cfg);

/// Definition: accepted iff every contact order with p_j outside M is 0 or >= m_j.
bool is_orbifold_section(const FunctionFieldSection& s, const SectionConfig& cfg);

struct HurwitzBound {
    Rat epsilon;        // (N - 2) - sum 1/m_j
    long numerator;     // 2 g_B - 2 + |M|
    long bound;         // floor(numerator / epsilon), 0 when empty
    long cap;           // 42 * numerator
    bool empty;         // no nonconstant section possible (numerator <= 0)
};

/// Degree bound for orbifold sections with N constant marked sections.
HurwitzBound hurwitz_degree_bound(int g_base, int card_m, const std::vector<int>& marks);

/// Parametric degree bound for the nonconstant-mark cases in terms of the
/// maximal coefficient pole order T and the bad-place count m_plus:
/// d <= 36 (g_B - 1) + 3 m_plus (2T + 4).
long degree_bound_bc(int g_base, int m_plus, int pole_order_T);

struct RamPoint {
    std::string where;  // rational value, packet descriptor, or "inf"
    int count;          // number of conjugate points
    int index;          // common ramification index
};

struct HurwitzCertificate {
    int degree;
    std::vector<RamPoint> fiber_over_0, fiber_over_1, fiber_over_inf;
    long full_ram_sum;        // sum (r-1) over all points of the base
    long restricted_ram_sum;  // sum (r-1) over the fibers above 0, 1, inf
    long lhs;                 // 2 g_B - 2 = -2
    long rhs_full;            // -2d + full_ram_sum
    bool identity_holds;      // lhs == rhs_full
    bool restricted_inequality_holds;  // lhs >= -2d + restricted_ram_sum
};

/// Ramification report for a nonconstant section over base genus 0.
HurwitzCertificate verify_hurwitz_certificate(const FunctionFieldSection& s);

struct StarInequality {
    long lhs;  // 2d
    Rat rhs;   // sum_{Q'} (t(b)-1) + sum_{Q''} t(b)
    bool holds;
};

StarInequality star_inequality(const FunctionFieldSection& s0, const ContactProfile& profile);

enum class ConfigShape { N4_Type2223, N5_Type22222 };

struct BranchesBound {
    Rat lhs;  // sum over Q'' of t(b)
    Rat rhs;  // sum over Q'' of sum_j (1-1/m_j) t_j(b)  -  sum_j delta_j (1-1/m_j)
    bool holds;
    // per-point refined inequality diagnostics (only multi-contact points)
    struct PerPoint {
        std::string point;
        Rat lhs;   // t(b) + (1/2) tau(b) when applicable, else t(b)
        Rat rhs;   // sum_j (1-1/m_j) t_j(b)
        bool holds;
    };
    std::vector<PerPoint> per_point;
};

/// Bad-place contact bound for the two covered shapes.
BranchesBound branches_bound(const ContactProfile& profile, const SectionConfig& cfg,
                             ConfigShape shape);

struct HeightBounds {
    long ev_bound;          // 4 (g-1)^2 (q - 1 + sigma)
    long isotrivial_bound;  // 2 (q - 1)
    long l_bound;           // ev_bound + 2 m q
};

HeightBounds height_bounds(int g_fiber, int q, int sigma, int m);

struct LocalIntersectionReport {
    bool g_is_zero;
    int t_order;            // a: order in t factored out of u(t,z) - u(0,z)
    std::optional<int> multiplicity;  // ord_z of the reduced difference at t=0
    int required;           // m when g == 0, m-1 otherwise
    bool holds;
    bool identically_equal; // u(t,z) == u(0,z)
};

/// Exact surrogate of the moving-contact intersection bound: forms
/// u(t,z) = p(z) + h(t,z) (z - g(t))^m and measures the generic number of
/// solutions of u(t,z) = u(0,z) near z = 0, counted with multiplicity.
LocalIntersectionReport local_intersection_lemma_check(const Poly<Rat>& p, const Poly<Rat>& g,
                                                       const BiPoly<Rat>& h, int m,
                                                       long truncation = 24);

}  // namespace orbicurve

#endif
