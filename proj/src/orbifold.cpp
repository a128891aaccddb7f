#include "orbicurve/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace orbicurve {

OrbifoldDivisor::OrbifoldDivisor(std::vector<Mark> marks) : marks_(std::move(marks)) {
    std::set<std::string> seen;
    for (const auto& m : marks_) {
        if (m.multiplicity < 2) throw Error("OrbifoldDivisor: multiplicity must be >= 2");
        if (!seen.insert(m.point).second)
            throw Error("OrbifoldDivisor: duplicate marked point " + m.point);
    }
}

OrbifoldDivisor OrbifoldDivisor::from_multiplicities(const std::vector<int>& ms) {
    std::vector<Mark> marks;
    for (size_t i = 0; i < ms.size(); ++i)
        marks.push_back({"p" + std::to_string(i + 1), ms[i]});
    return OrbifoldDivisor(std::move(marks));
}

int OrbifoldDivisor::multiplicity_at(const std::string& point) const {
    for (const auto& m : marks_)
        if (m.point == point) return m.multiplicity;
    return 1;
}

std::vector<int> OrbifoldDivisor::sorted_multiplicities() const {
    std::vector<int> ms;
    for (const auto& m : marks_) ms.push_back(m.multiplicity);
    std::sort(ms.rbegin(), ms.rend());
    return ms;
}

Rat OrbifoldDivisor::weight() const {
    Rat w(0);
    for (const auto& m : marks_) w += Rat(1) - Rat(1, m.multiplicity);
    return w;
}

std::string to_string(KodairaClass k) {
    switch (k) {
        case KodairaClass::MinusInfinity: return "-inf";
        case KodairaClass::Zero: return "0";
        case KodairaClass::One: return "1";
    }
    return "?";
}

Rat canonical_degree(const OrbifoldCurve& c) {
    return Rat(2L * c.genus - 2) + c.delta.weight();
}

KodairaClass kodaira_dimension(const OrbifoldCurve& c) {
    int s = canonical_degree(c).sign();
    if (s > 0) return KodairaClass::One;
    if (s == 0) return KodairaClass::Zero;
    return KodairaClass::MinusInfinity;
}

bool dominates(const OrbifoldDivisor& src, const OrbifoldDivisor& tgt) {
    std::vector<int> a = src.sorted_multiplicities();
    std::vector<int> b = tgt.sorted_multiplicities();
    if (b.size() > a.size()) return false;
    for (size_t i = 0; i < b.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

bool is_general_type_via_five(const OrbifoldDivisor& d) {
    static const std::vector<std::vector<int>> five = {
        {2, 3, 7}, {2, 4, 5}, {3, 3, 4}, {2, 2, 2, 3}, {2, 2, 2, 2, 2}};
    for (const auto& ms : five)
        if (dominates(d, OrbifoldDivisor::from_multiplicities(ms))) return true;
    return false;
}

EpsilonMinimum epsilon_minimum(int max_marks, int max_mult) {
    EpsilonMinimum best{Rat(0), {}};
    bool have = false;
    auto consider = [&](const std::vector<int>& ms) {
        Rat deg(-2);
        for (int m : ms) deg += Rat(1) - Rat(1, m);
        if (deg.sign() > 0 && (!have || deg < best.value)) {
            best = {deg, ms};
            have = true;
        }
    };
    // N <= 4: full enumeration of nondecreasing multiplicity tuples
    for (int n = 1; n <= std::min(max_marks, 4); ++n) {
        std::vector<int> ms(n, 2);
        while (true) {
            consider(ms);
            int i = n - 1;
            while (i >= 0 && ms[i] == max_mult) --i;
            if (i < 0) break;
            ++ms[i];
            for (int j = i + 1; j < n; ++j) ms[j] = ms[i];
        }
    }
    // N >= 5: degree = N - 2 - sum 1/m_j is minimized at all-2 tuples
    for (int n = 5; n <= max_marks; ++n) consider(std::vector<int>(n, 2));
    if (!have) throw Error("epsilon_minimum: no general-type divisor in range");
    return best;
}

RamificationData::RamificationData(int degree, int source_genus, int target_genus,
                                   std::map<std::string, std::vector<FiberPoint>> fibers)
    : degree_(degree), source_genus_(source_genus), target_genus_(target_genus),
      fibers_(std::move(fibers)) {
    if (degree_ < 1) throw Error("RamificationData: degree must be >= 1");
    long total_extra = 0;
    for (const auto& [tgt, fps] : fibers_) {
        long sum = 0;
        for (const auto& fp : fps) {
            if (fp.index < 1) throw Error("RamificationData: ramification index must be >= 1");
            sum += fp.index;
            total_extra += fp.index - 1;
            auto [it, fresh] = source_to_target_.try_emplace(fp.source_point, tgt);
            if (!fresh)
                throw Error("RamificationData: source point " + fp.source_point +
                            " maps to two target points");
        }
        if (sum != degree_)
            throw Error("RamificationData: fiber sum over " + tgt + " mismatches degree");
    }
    long lhs = 2L * source_genus_ - 2;
    long rhs = static_cast<long>(degree_) * (2L * target_genus_ - 2) + total_extra;
    if (lhs != rhs) throw Error("RamificationData: Riemann-Hurwitz identity fails");
}

const std::string* RamificationData::target_of(const std::string& source_point) const {
    auto it = source_to_target_.find(source_point);
    return it == source_to_target_.end() ? nullptr : &it->second;
}

int RamificationData::ramification_index(const std::string& source_point) const {
    const std::string* tgt = target_of(source_point);
    if (!tgt) return 1;
    for (const auto& fp : fibers_.at(*tgt))
        if (fp.source_point == source_point) return fp.index;
    return 1;
}

namespace {

/// Checks r(x) * Delta_src(x) vs Delta_tgt(g(x)) at all relevant points;
/// `strict` asks for equality everywhere.
bool check_morphism(const RamificationData& r, const OrbifoldCurve& src, const OrbifoldCurve& tgt,
                    bool require_equality) {
    // every marked source point must be listed so its image is known
    std::set<std::string> listed;
    for (const auto& [t, fps] : r.fibers())
        for (const auto& fp : fps) listed.insert(fp.source_point);
    for (const auto& m : src.delta.marks())
        if (!listed.count(m.point))
            throw Error("is_orbifold_morphism: marked source point " + m.point +
                        " missing from fibers");
    for (const auto& m : tgt.delta.marks())
        if (!r.fibers().count(m.point))
            throw Error("is_orbifold_morphism: marked target point " + m.point +
                        " missing from fibers");
    // listed source points
    for (const auto& [t, fps] : r.fibers()) {
        int dt = tgt.delta.multiplicity_at(t);
        for (const auto& fp : fps) {
            long lhs = static_cast<long>(fp.index) * src.delta.multiplicity_at(fp.source_point);
            if (lhs < dt) return false;
            if (require_equality && lhs != dt) return false;
        }
    }
    // unlisted source points are unramified over unmarked targets: 1*1 vs 1 holds
    return true;
}

}  // namespace

bool is_orbifold_morphism(const RamificationData& r, const OrbifoldCurve& src,
                          const OrbifoldCurve& tgt) {
    return check_morphism(r, src, tgt, false);
}

bool is_etale(const RamificationData& r, const OrbifoldCurve& src, const OrbifoldCurve& tgt) {
    return check_morphism(r, src, tgt, true);
}

FiberData::FiberData(std::map<std::string, std::vector<int>> fibers) : fibers_(std::move(fibers)) {
    for (const auto& [p, ms] : fibers_) {
        if (ms.empty()) throw Error("FiberData: empty fiber over " + p);
        for (int m : ms)
            if (m < 1) throw Error("FiberData: nonpositive multiplicity over " + p);
    }
}

std::pair<int, int> fiber_multiplicities(const FiberData& f, const std::string& point) {
    auto it = f.fibers().find(point);
    if (it == f.fibers().end()) throw Error("fiber_multiplicities: unknown point " + point);
    int mn = it->second.front();
    int g = 0;
    for (int m : it->second) {
        mn = std::min(mn, m);
        g = std::gcd(g, m);
    }
    return {mn, g};
}

std::pair<OrbifoldDivisor, OrbifoldDivisor> base_orbifold(const FiberData& f) {
    std::vector<Mark> dm, dsm;
    for (const auto& [p, ms] : f.fibers()) {
        auto [mn, g] = fiber_multiplicities(f, p);
        if (mn > 1) dm.push_back({p, mn});
        if (g > 1) dsm.push_back({p, g});
    }
    return {OrbifoldDivisor(std::move(dm)), OrbifoldDivisor(std::move(dsm))};
}

}  // namespace orbicurve
