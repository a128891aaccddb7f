#ifndef ORBICURVE_CONTACT_HPP
#define ORBICURVE_CONTACT_HPP

#include <optional>
#include <variant>

#include "orbicurve/poly.hpp"
#include "orbicurve/rational.hpp"

namespace orbicurve {

/// A point of the base line: a finite rational value or infinity.
struct BasePoint {
    bool at_infinity = false;
    Rat value{0};

    static BasePoint infinity() { return BasePoint{true, Rat(0)}; }
    static BasePoint finite(Rat v) { return BasePoint{false, std::move(v)}; }

    friend bool operator==(const BasePoint& a, const BasePoint& b) {
        if (a.at_infinity != b.at_infinity) return false;
        return a.at_infinity || a.value == b.value;
    }
    friend bool operator<(const BasePoint& a, const BasePoint& b) {
        if (a.at_infinity != b.at_infinity) return a.at_infinity < b.at_infinity;
        if (a.at_infinity) return false;
        return a.value < b.value;
    }
    std::string str() const { return at_infinity ? "inf" : value.str(); }
};

/// Cross-difference a1*c2 - c1*a2 of two primitive section pairs.
inline Poly<Rat> cross_difference(const Poly<Rat>& a1, const Poly<Rat>& c1, const Poly<Rat>& a2,
                                  const Poly<Rat>& c2) {
    return a1 * c2 - c1 * a2;
}

/// Local intersection order of two sections of P^1 x P^1 at a base point.
/// nullopt means the sections are identical (infinite contact).
inline std::optional<int> resultant_free_contact(const Poly<Rat>& a1, const Poly<Rat>& c1,
                                                 const Poly<Rat>& a2, const Poly<Rat>& c2,
                                                 const BasePoint& b) {
    Poly<Rat> d = cross_difference(a1, c1, a2, c2);
    if (d.is_zero()) return std::nullopt;
    if (!b.at_infinity) return d.ord_at(b.value);
    int d1 = std::max(a1.degree(), c1.degree());
    int d2 = std::max(a2.degree(), c2.degree());
    // order at infinity in the reversed coordinate
    return d1 + d2 - d.degree();
}

}  // namespace orbicurve

#endif
