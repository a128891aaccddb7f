#ifndef ORBICURVE_SEXTIC_HPP
#define ORBICURVE_SEXTIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbicurve/bipoly.hpp"
#include "orbicurve/matrix.hpp"
#include "orbicurve/orbifold.hpp"
#include "orbicurve/poly.hpp"

namespace orbicurve {

/// Plane curve with exact coefficients in affine coordinates; the projective
/// model is the homogenization to `degree`.
template <class R>
struct PlaneCurve {
    BiPoly<R> affine;
    int degree = 0;
};

struct GhkChoice {
    Poly<Rat> g, h, k;  // degrees 2, 3, 3; g(0)=h(0)=k(0)=1
    std::vector<Rat> g_roots, h_roots, k_roots;
    // root generators: g roots are +-e^2, h roots 2 beta_j^2, k roots gamma_j^2,
    // chosen so every pulled-back profile point is Q(i)-rational
    Rat e;
    std::vector<Rat> betas, gammas;
    std::uint64_t seed = 0;
};

/// Seeded choice of g, h, k with rational roots such that
///  - g(0)=h(0)=k(0)=1, g'(0)=0, k'(0)=h'(0) (so k'(0) = 2g'(0) + h'(0)),
///  - the pulled-back profile points on the five lines are Q(i)-rational
///    (g roots +-e^2, h roots 2 beta^2, k roots gamma^2),
///  - all roots pairwise distinct, Res(g,h), Res(g,k), Res(h,k) nonzero.
GhkChoice choose_ghk(std::uint64_t seed);

/// Degree-6 curve with restrictions g^3, h^2, k^2 to the lines v=0, u=0,
/// u=2v, solved exactly on the 28-dimensional coefficient space.
PlaneCurve<Rat> build_s1(const GhkChoice& ghk);

struct NineFormsResult {
    Matrix<Rat> matrix;           // 9 x 10 on the cubic coefficient space
    int rank;                     // must be 9
    BiPoly<Rat> kernel_cubic;     // spans the right kernel; equals c * u v^2
    BiPoly<Rat> correction_cubic; // F with S2 = S1 + E*F
    PlaneCurve<Rat> s2;
};

NineFormsResult nine_forms_and_correction(const PlaneCurve<Rat>& s1, const GhkChoice& ghk);

struct TangencyCheck {
    std::string point;
    std::string line;
    std::string required;  // "smooth-tangent-2" | "double-point" | "triple-point"
    bool verified;
};

struct PerturbResult {
    Rat zeta;
    PlaneCurve<Rat> s;  // S = S2 + zeta * E * u v^2
    std::vector<TangencyCheck> profile;
    bool misses_origin;  // S(a) != 0 at a = (0:0:1)
};

PerturbResult perturb_and_verify(const PlaneCurve<Rat>& s2, const GhkChoice& ghk);

/// Substitution U = X^2 + Y^2, V = XY, W = Z^2 into the homogeneous sextic.
PlaneCurve<Rat> pullback_h(const PlaneCurve<Rat>& s);

struct GaussPoint {
    GaussRat x, y;  // affine chart Z = 1
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

struct LineProfile {
    std::string line;              // "L'", "L''", "D'", "T'", "T''"
    std::vector<GaussPoint> points;
    std::vector<int> contact_orders;    // of H with the line at each point
    std::vector<int> multiplicities;    // of H at each point
    int expected_points;
    int expected_multiplicity;
    bool verified;
};

struct HProfile {
    std::vector<LineProfile> lines;
    bool conjugate_pairing;  // L' and L'' points swap under conjugation
    bool all_verified;
};

/// Over Q(i): 6 double points on each of L', L'', D'; 4 triple points on each
/// of T', T''; contact orders with T' all exactly 3.
HProfile verify_h_profile(const PlaneCurve<Rat>& h, const GhkChoice& ghk);

struct FiberInfo {
    int base_point_count;            // 26
    int m;                           // non-classical multiplicity = 2
    int m_star;                      // classical multiplicity = 1
    std::vector<int> component_multiplicities;  // {2,2,2,3,3}
    /// kappa of the base orbifold of the m-fold base change (m marks of 2)
    std::vector<std::pair<int, std::string>> base_change_kappa;  // m = 1..6
};

FiberInfo base_points_and_fiber(const HProfile& profile);

struct SurfaceInvariants {
    long m;
    long c1_sq;      // m ((m-1) 96 - 17)
    long c2;         // m ((m-1) 48 + 29)
    Rat ratio;       // c1^2 / c2
    long fiber_genus;  // 13
    long k_dot_f;      // 24
};

SurfaceInvariants surface_invariants(long m);

struct ConstructionReport {
    std::uint64_t seed;
    GhkChoice ghk;
    PlaneCurve<Rat> s1, s2, s;
    Rat zeta;
    NineFormsResult nine;
    std::vector<TangencyCheck> s_profile;
    PlaneCurve<Rat> h;
    HProfile h_profile;
    FiberInfo fiber;
    SurfaceInvariants invariants_m5;
    bool compatibility_flag;  // printed first-order identity vs the one used
    bool all_passed;
    std::string failed_stage;  // empty when all_passed
};

/// Full pipeline, deterministic under the seed.
ConstructionReport run_sextic_pipeline(std::uint64_t seed);

}  // namespace orbicurve

#endif
