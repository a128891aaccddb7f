#ifndef ORBICURVE_ORBIFOLD_HPP
#define ORBICURVE_ORBIFOLD_HPP

#include <map>
#include <string>
#include <vector>

#include "orbicurve/rational.hpp"

namespace orbicurve {

struct Mark {
    std::string point;
    int multiplicity;  // >= 2
};

/// Orbifold divisor: finitely many marked points with integer multiplicities >= 2.
class OrbifoldDivisor {
  public:
    OrbifoldDivisor() = default;
    explicit OrbifoldDivisor(std::vector<Mark> marks);
    /// Anonymous marks p1, p2, ... from a multiplicity list.
    static OrbifoldDivisor from_multiplicities(const std::vector<int>& ms);

    const std::vector<Mark>& marks() const { return marks_; }
    /// Multiplicity function: m_j at marks, 1 elsewhere.
    int multiplicity_at(const std::string& point) const;
    /// Multiplicities sorted descending.
    std::vector<int> sorted_multiplicities() const;
    bool empty() const { return marks_.empty(); }
    size_t size() const { return marks_.size(); }

    /// Sum of (1 - 1/m_j).
    Rat weight() const;

  private:
    std::vector<Mark> marks_;
};

struct OrbifoldCurve {
    int genus = 0;
    OrbifoldDivisor delta;
};

enum class KodairaClass { MinusInfinity, Zero, One };

std::string to_string(KodairaClass k);

/// deg(K + Delta) = 2g - 2 + sum (1 - 1/m_j).
Rat canonical_degree(const OrbifoldCurve& c);

KodairaClass kodaira_dimension(const OrbifoldCurve& c);

/// Identity-map domination: an injection of tgt marks into src marks with
/// m_src >= m_tgt pointwise (sorted-descending greedy matching).
bool dominates(const OrbifoldDivisor& src, const OrbifoldDivisor& tgt);

/// True iff d dominates one of (2,3,7), (2,4,5), (3,3,4), (2,2,2,3), (2,2,2,2,2).
bool is_general_type_via_five(const OrbifoldDivisor& d);

/// Result of the epsilon scan: minimal positive canonical degree on genus 0.
struct EpsilonMinimum {
    Rat value;
    std::vector<int> witness;
};

/// Minimum positive canonical degree over genus-0 divisors with at most
/// `max_marks` marks and multiplicities <= max_mult. For 5 or more marks the
/// degree is >= (N-4)/2 (>= 1/2), monotone in every multiplicity, so only the
/// all-2 configurations need checking there.
EpsilonMinimum epsilon_minimum(int max_marks = 7, int max_mult = 50);

/// Ramified cover data: fibers over selected target points. Any source point
/// not listed is unramified over an unmarked target point.
class RamificationData {
  public:
    struct FiberPoint {
        std::string source_point;
        int index;  // ramification index r >= 1
    };

    RamificationData(int degree, int source_genus, int target_genus,
                     std::map<std::string, std::vector<FiberPoint>> fibers);

    int degree() const { return degree_; }
    int source_genus() const { return source_genus_; }
    int target_genus() const { return target_genus_; }
    const std::map<std::string, std::vector<FiberPoint>>& fibers() const { return fibers_; }

    /// Target point a source point lies over, if listed.
    const std::string* target_of(const std::string& source_point) const;
    int ramification_index(const std::string& source_point) const;

  private:
    int degree_, source_genus_, target_genus_;
    std::map<std::string, std::vector<FiberPoint>> fibers_;
    std::map<std::string, std::string> source_to_target_;
};

/// r(x) * Delta_src(x) >= Delta_tgt(g(x)) at every source point.
bool is_orbifold_morphism(const RamificationData& r, const OrbifoldCurve& src,
                          const OrbifoldCurve& tgt);
/// Equality everywhere.
bool is_etale(const RamificationData& r, const OrbifoldCurve& src, const OrbifoldCurve& tgt);

/// Component multiplicities of the fibers of a fibration, per base point.
class FiberData {
  public:
    explicit FiberData(std::map<std::string, std::vector<int>> fibers);
    const std::map<std::string, std::vector<int>>& fibers() const { return fibers_; }

  private:
    std::map<std::string, std::vector<int>> fibers_;
};

/// (m, m*) = (min, gcd) of the component multiplicities over a base point.
/// For elliptic fibrations the two notions agree; that is a fact about the
/// geometry upstream and nothing here assumes it.
std::pair<int, int> fiber_multiplicities(const FiberData& f, const std::string& point);

/// Base orbifold divisors: marks where min > 1, resp. where gcd > 1.
std::pair<OrbifoldDivisor, OrbifoldDivisor> base_orbifold(const FiberData& f);

}  // namespace orbicurve

#endif
