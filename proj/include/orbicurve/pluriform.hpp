#ifndef ORBICURVE_PLURIFORM_HPP
#define ORBICURVE_PLURIFORM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbicurve/laurent.hpp"
#include "orbicurve/matrix.hpp"
#include "orbicurve/poly.hpp"

namespace orbicurve {

/// Degree caps of the numerator polynomials P_0..P_6 of the 6-differential.
inline const std::vector<int> kW6Caps = {1, 2, 4, 5, 7, 8, 10};  // dim 44
/// Degree caps of P_0..P_4 of the 4-differential.
inline const std::vector<int> kW4Caps = {2, 3, 5, 6, 8};  // dim 29

/// Flattened coefficient vector of the capped numerator polynomials.
struct FormVector {
    std::vector<int> caps;
    std::vector<Rat> coeffs;  // length sum(caps[k] + 1)

    Poly<Rat> component(int k) const;
    size_t dimension() const { return coeffs.size(); }
};

struct PluriformSystem {
    // which: 6 for the (2,2,2,3) form, 4 for the (2,2,2,2,2) form
    int which;
    Rat p0, p1;
    std::optional<Rat> q0, q1;  // only for which == 4
    Matrix<Rat> matrix;
    std::vector<int> block_sizes;          // rows per condition block
    std::vector<std::vector<Rat>> kernel;  // right null space basis
    int rank;

    FormVector kernel_form(size_t i) const;
};

/// Condition system of the 6-differential
///   w = (sum_k P_k(y) dy^{6-k} dx^k) / (y^4 (y-1)^3 (y-p(x))^3)
/// at a point with p(0) = p0, p'(0) = p1. Requires p0 not in {0, 1}.
PluriformSystem build_w6_system(const Rat& p0, const Rat& p1);

/// Condition system of the 4-differential with denominator
/// y^2 (y-1)^2 (y-p(x))^2 (y-q(x))^2; the values p0, q0, 0, 1 must be
/// pairwise distinct.
PluriformSystem build_w4_system(const Rat& p0, const Rat& p1, const Rat& q0, const Rat& q1);

struct PulledBackForm {
    Laurent series;  // coefficient of dx^{tensor 6} resp. dx^{tensor 4}
    std::optional<long> valuation() const { return series.valuation(); }
};

/// s*(w) for the 6-differential: sum_k P_k(s) s'^{6-k} over s^4 (s-1)^3 (s-p)^3.
PulledBackForm pullback_w6(const FormVector& w, const Laurent& s, const Poly<Rat>& p,
                           long truncation = kDefaultTruncation);

/// s*(w) for the 4-differential.
PulledBackForm pullback_w4(const FormVector& w, const Laurent& s, const Poly<Rat>& p,
                           const Poly<Rat>& q, long truncation = kDefaultTruncation);

struct TrialResult {
    std::string condition_class;
    std::string section;
    long required;        // lower bound on the valuation
    std::optional<long> observed;  // nullopt = pullback vanishes identically
    bool passed;
};

struct VerificationReport {
    size_t kernel_dimension;
    bool kernel_exact;             // matrix * v == 0 for all basis vectors
    std::vector<TrialResult> trials;
    size_t failures;
    bool negative_control_failed;  // the corrupted form produced a violation
    bool all_passed() const { return failures == 0 && negative_control_failed; }
};

/// Seeded verification of the valuation guarantees on every kernel form.
/// Condition classes: infinity-tangent, 1-tangent, marked-value osculation,
/// high-order zeros, and the universal pole bound for transverse sections.
/// Osculation of a nonconstant marked section (p1 != 0) is checked against
/// the provable floor of the frozen system; all other classes use the sharp
/// holomorphy / vanishing bounds.
VerificationReport verify_conditions_suite(const PluriformSystem& sys, int trials,
                                           std::uint64_t seed,
                                           long truncation = kDefaultTruncation, int jobs = 1);

}  // namespace orbicurve

#endif
