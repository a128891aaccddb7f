#include "orbicurve/function_field.hpp"

#include <algorithm>
#include <map>

namespace orbicurve {

FunctionFieldSection::FunctionFieldSection(Poly<Rat> a, Poly<Rat> c)
    : a_(std::move(a)), c_(std::move(c)) {
    if (a_.is_zero() && c_.is_zero())
        throw Error("FunctionFieldSection: (0, 0) is not a point");
    Poly<Rat> g = gcd(a_, c_);
    if (g.degree() > 0) {
        a_ = a_.divrem(g).first;
        c_ = c_.divrem(g).first;
    }
    // scale so the section has monic C (or monic A when C = 0)
    Rat lead = c_.is_zero() ? a_.lead() : c_.lead();
    Rat inv = Rat(1) / lead;
    a_ = inv * a_;
    c_ = inv * c_;
}

std::optional<int> contact_order(const FunctionFieldSection& s, const FunctionFieldSection& p,
                                 const BasePoint& b) {
    return resultant_free_contact(s.A(), s.C(), p.A(), p.C(), b);
}

SectionConfig::SectionConfig(std::vector<MarkedSection> marks, std::set<BasePoint> bad_places)
    : marks_(std::move(marks)), bad_places_(std::move(bad_places)) {
    if (marks_.size() < 3) throw Error("SectionConfig: need at least the three constant marks");
    if (!marks_[0].section.same_section(FunctionFieldSection::zero()) ||
        !marks_[1].section.same_section(FunctionFieldSection::one()) ||
        !marks_[2].section.same_section(FunctionFieldSection::infinity()))
        throw Error("SectionConfig: first three marked sections must be 0, 1, infinity");
    for (const auto& m : marks_)
        if (m.multiplicity < 2) throw Error("SectionConfig: multiplicity must be >= 2");
    for (size_t i = 0; i < marks_.size(); ++i)
        for (size_t j = i + 1; j < marks_.size(); ++j) {
            if (marks_[i].section.same_section(marks_[j].section))
                throw Error("SectionConfig: marked sections must be pairwise distinct");
            // coincidence locus p_i = p_j: all these base points must be in M
            Poly<Rat> d = cross_difference(marks_[i].section.A(), marks_[i].section.C(),
                                           marks_[j].section.A(), marks_[j].section.C());
            auto rr = rational_roots(d);
            if (!rr.packets.empty())
                throw Error("SectionConfig: marked sections meet at irrational base points; "
                            "enlarge the model so all bad places are rational");
            for (const auto& [root, mult] : rr.roots) coincidence_points_.push_back(
                BasePoint::finite(root));
            int di = marks_[i].section.degree(), dj = marks_[j].section.degree();
            if (di + dj - d.degree() > 0) coincidence_points_.push_back(BasePoint::infinity());
        }
    std::sort(coincidence_points_.begin(), coincidence_points_.end());
    coincidence_points_.erase(
        std::unique(coincidence_points_.begin(), coincidence_points_.end()),
        coincidence_points_.end());
    for (const auto& b : coincidence_points_)
        if (!bad_places_.count(b))
            throw Error("SectionConfig: bad places must contain every coincidence point "
                        "of the marked sections (missing " + b.str() + ")");
}

SectionConfig SectionConfig::constants(int m0, int m1, int minf, std::set<BasePoint> bad_places) {
    std::vector<MarkedSection> ms = {{FunctionFieldSection::zero(), m0},
                                     {FunctionFieldSection::one(), m1},
                                     {FunctionFieldSection::infinity(), minf}};
    return SectionConfig(std::move(ms), std::move(bad_places));
}

std::vector<long> ContactProfile::totals_per_mark(size_t nmarks) const {
    std::vector<long> t(nmarks, 0);
    for (const auto& e : entries)
        for (size_t j = 0; j < nmarks && j < e.orders.size(); ++j)
            t[j] += static_cast<long>(e.orders[j]) * e.count;
    return t;
}

ContactProfile contact_profile(const FunctionFieldSection& s, const SectionConfig& cfg) {
    const size_t n = cfg.marks().size();
    std::map<BasePoint, ContactProfile::Entry> rational_entries;
    ContactProfile profile;
    for (size_t j = 0; j < n; ++j) {
        const auto& pj = cfg.marks()[j].section;
        if (s.same_section(pj))
            throw IdenticalSections("contact_profile: section coincides with marked section " +
                                    std::to_string(j + 1));
        Poly<Rat> d = cross_difference(s.A(), s.C(), pj.A(), pj.C());
        auto rr = rational_roots(d);
        for (const auto& [root, mult] : rr.roots) {
            auto& e = rational_entries[BasePoint::finite(root)];
            e.orders.resize(n, 0);
            e.orders[j] = mult;
        }
        int oinf = s.degree() + pj.degree() - d.degree();
        if (oinf > 0) {
            auto& e = rational_entries[BasePoint::infinity()];
            e.orders.resize(n, 0);
            e.orders[j] = oinf;
        }
        for (const auto& [factor, mult] : rr.packets) {
            ContactProfile::Entry e;
            e.packet = factor;
            e.count = factor.degree();
            e.orders.assign(n, 0);
            e.orders[j] = mult;
            e.max_order = mult;
            e.in_bad_places = false;  // irrational points; M is rational
            profile.entries.push_back(std::move(e));
        }
    }
    for (auto& [b, e] : rational_entries) {
        e.point = b;
        e.count = 1;
        e.in_bad_places = cfg.in_bad_places(b);
        e.max_order = *std::max_element(e.orders.begin(), e.orders.end());
        profile.entries.push_back(std::move(e));
    }
    return profile;
}

bool is_orbifold_section(const FunctionFieldSection& s, const SectionConfig& cfg) {
    ContactProfile profile = contact_profile(s, cfg);
    for (const auto& e : profile.entries) {
        if (e.in_bad_places) continue;
        for (size_t j = 0; j < cfg.marks().size(); ++j) {
            int t = e.orders[j];
            if (t != 0 && t < cfg.marks()[j].multiplicity) return false;
        }
    }
    return true;
}

HurwitzBound hurwitz_degree_bound(int g_base, int card_m, const std::vector<int>& marks) {
    if (marks.size() < 3) throw Error("hurwitz_degree_bound: need at least 3 marks");
    if (g_base < 0 || card_m < 0) throw Error("hurwitz_degree_bound: negative input");
    Rat eps(static_cast<long>(marks.size()) - 2);
    for (int m : marks) {
        if (m < 2) throw Error("hurwitz_degree_bound: multiplicities must be >= 2");
        eps -= Rat(1, m);
    }
    if (eps.sign() <= 0)
        throw Error("hurwitz_degree_bound: marks are not of general type (epsilon <= 0)");
    HurwitzBound hb;
    hb.epsilon = eps;
    hb.numerator = 2L * g_base - 2 + card_m;
    hb.cap = 42L * hb.numerator;
    if (hb.numerator <= 0) {
        hb.bound = 0;
        hb.empty = true;
        return hb;
    }
    Rat q = Rat(hb.numerator) / eps;
    mpz_class fl = q.num() / q.den();  // numerator > 0, so truncation = floor
    hb.bound = fl.get_si();
    hb.empty = false;
    if (hb.bound > hb.cap) throw Error("hurwitz_degree_bound: universal 1/42 cap violated");
    return hb;
}

long degree_bound_bc(int g_base, int m_plus, int pole_order_T) {
    return 36L * (g_base - 1) + 3L * m_plus * (2L * pole_order_T + 4);
}

namespace {

/// Multiplicity structure of the fiber of s over a constant value, from the
/// squarefree decomposition of the relevant cross-difference polynomial.
std::vector<RamPoint> fiber_structure(const Poly<Rat>& cross, int degree, long* restricted_sum) {
    std::vector<RamPoint> out;
    auto rr = rational_roots(cross);
    for (const auto& [root, mult] : rr.roots) {
        out.push_back({root.str(), 1, mult});
        *restricted_sum += mult - 1;
    }
    for (const auto& [factor, mult] : rr.packets) {
        out.push_back({"deg-" + std::to_string(factor.degree()) + " packet", factor.degree(),
                       mult});
        *restricted_sum += static_cast<long>(factor.degree()) * (mult - 1);
    }
    int at_inf = degree - cross.degree();
    if (at_inf > 0) {
        out.push_back({"inf", 1, at_inf});
        *restricted_sum += at_inf - 1;
    }
    return out;
}

}  // namespace

HurwitzCertificate verify_hurwitz_certificate(const FunctionFieldSection& s) {
    if (s.is_constant()) throw Error("verify_hurwitz_certificate: section is constant");
    HurwitzCertificate cert;
    const int d = s.degree();
    cert.degree = d;
    long restricted = 0;
    cert.fiber_over_0 = fiber_structure(s.A(), d, &restricted);
    cert.fiber_over_1 = fiber_structure(s.A() - s.C(), d, &restricted);
    cert.fiber_over_inf = fiber_structure(s.C(), d, &restricted);
    cert.restricted_ram_sum = restricted;
    // total ramification away from the base point at infinity: degree of the
    // Wronskian A'C - AC'; at infinity: reversed-coordinate Wronskian order.
    Poly<Rat> w = s.A().derivative() * s.C() - s.A() * s.C().derivative();
    long full = w.is_zero() ? 0 : w.degree();
    Poly<Rat> ar = s.A().reversed(d), cr = s.C().reversed(d);
    Poly<Rat> winf = ar.derivative() * cr - ar * cr.derivative();
    if (!winf.is_zero()) {
        auto o = winf.val_at_zero();
        full += o ? *o : 0;
    }
    cert.full_ram_sum = full;
    cert.lhs = -2;
    cert.rhs_full = -2L * d + cert.full_ram_sum;
    cert.identity_holds = (cert.lhs == cert.rhs_full);
    cert.restricted_inequality_holds = (cert.lhs >= -2L * d + cert.restricted_ram_sum);
    return cert;
}

StarInequality star_inequality(const FunctionFieldSection& s0, const ContactProfile& profile) {
    StarInequality si;
    si.lhs = 2L * s0.degree();
    Rat rhs(0);
    for (const auto& e : profile.entries) {
        if (e.max_order == 0) continue;
        if (e.in_bad_places)
            rhs += Rat(e.max_order);
        else
            rhs += Rat(static_cast<long>(e.count) * (e.max_order - 1));
    }
    si.rhs = rhs;
    si.holds = Rat(si.lhs) >= rhs;
    return si;
}

BranchesBound branches_bound(const ContactProfile& profile, const SectionConfig& cfg,
                             ConfigShape shape) {
    const auto& marks = cfg.marks();
    auto mult_list = [&] {
        std::vector<int> ms;
        for (const auto& m : marks) ms.push_back(m.multiplicity);
        return ms;
    }();
    if (shape == ConfigShape::N4_Type2223) {
        if (mult_list != std::vector<int>{3, 2, 2, 2})
            throw Error("branches_bound: config is not of type (2,2,2,3) with the 3 at 0");
    } else {
        if (mult_list != std::vector<int>(5, 2))
            throw Error("branches_bound: config is not of type (2,2,2,2,2)");
    }
    BranchesBound bb;
    Rat lhs(0), contact_sum(0);
    for (const auto& e : profile.entries) {
        if (!e.in_bad_places) continue;
        lhs += Rat(e.max_order);
        Rat row(0);
        int active = 0;
        for (size_t j = 0; j < marks.size(); ++j) {
            if (e.orders[j] > 0) ++active;
            row += (Rat(1) - Rat(1, marks[j].multiplicity)) * Rat(e.orders[j]);
        }
        contact_sum += row;
        BranchesBound::PerPoint pp;
        pp.point = e.point ? e.point->str() : "packet";
        pp.rhs = row;
        pp.lhs = Rat(e.max_order);
        if (active >= 2 && e.point) {
            // refined per-point inequality includes (1/2) tau(b), the pairwise
            // contact of the two nonconstant-capable marked sections at b
            size_t ja = 0, jb = 0;
            bool first = true;
            for (size_t j = 0; j < marks.size(); ++j)
                if (e.orders[j] > 0) {
                    if (first) { ja = j; first = false; } else { jb = j; }
                }
            auto tau = contact_order(marks[ja].section, marks[jb].section, *e.point);
            if (tau) pp.lhs += Rat(1, 2) * Rat(*tau);
        }
        pp.holds = pp.lhs >= pp.rhs;
        bb.per_point.push_back(std::move(pp));
    }
    Rat degree_term(0);
    for (const auto& m : marks)
        degree_term += Rat(m.section.degree()) * (Rat(1) - Rat(1, m.multiplicity));
    bb.lhs = lhs;
    bb.rhs = contact_sum - degree_term;
    bb.holds = bb.lhs >= bb.rhs;
    return bb;
}

HeightBounds height_bounds(int g_fiber, int q, int sigma, int m) {
    if (g_fiber < 2) throw Error("height_bounds: fiber genus must be >= 2");
    if (q < 0 || sigma < 0 || m < 1) throw Error("height_bounds: invalid parameters");
    HeightBounds hb;
    long gm1 = g_fiber - 1;
    hb.ev_bound = 4L * gm1 * gm1 * (q - 1 + sigma);
    hb.isotrivial_bound = 2L * (q - 1);
    hb.l_bound = hb.ev_bound + 2L * m * q;
    return hb;
}

LocalIntersectionReport local_intersection_lemma_check(const Poly<Rat>& p, const Poly<Rat>& g,
                                                       const BiPoly<Rat>& h, int m,
                                                       long truncation) {
    if (m < 1) throw Error("local_intersection_lemma_check: m must be >= 1");
    if (!g.coeff(0).is_zero()) throw Error("local_intersection_lemma_check: need g(0) = 0");
    if (h.coeff(0, 0).is_zero())
        throw Error("local_intersection_lemma_check: need h(0,0) != 0");
    if (truncation < 2L * m)
        throw Error("local_intersection_lemma_check: truncation below 2m");
    LocalIntersectionReport rep;
    rep.g_is_zero = g.is_zero();
    // u(t,z) = p(z) + h(t,z) (z - g(t))^m in variables (t, z) = (u, v)
    BiPoly<Rat> zminusg(std::max(1, g.degree()));
    zminusg.set(0, 1, Rat(1));
    for (int i = 0; i <= g.degree(); ++i)
        zminusg.set(i, 0, zminusg.coeff(i, 0) - g.coeff(i));
    BiPoly<Rat> u = h * zminusg.pow(m);
    for (int j = 0; j <= p.degree(); ++j) u.set(0, j, u.coeff(0, j) + p.coeff(j));
    // delta(t,z) = u(t,z) - u(0,z)
    BiPoly<Rat> delta = u;
    for (int j = 0; j <= delta.bound(); ++j) delta.set(0, j, Rat(0));
    if (delta.is_zero()) {
        rep.identically_equal = true;
        rep.t_order = 0;
        rep.multiplicity = std::nullopt;
        rep.required = rep.g_is_zero ? m : m - 1;
        rep.holds = true;
        return rep;
    }
    rep.identically_equal = false;
    int a = delta.bound();
    for (int i = 0; i <= delta.bound(); ++i)
        for (int j = 0; j <= delta.bound() - i; ++j)
            if (!delta.coeff(i, j).is_zero()) a = std::min(a, i);
    rep.t_order = a;
    // reduced difference at t = 0: coefficients of t^a
    std::vector<Rat> red(delta.bound() + 1, Rat(0));
    for (int j = 0; j <= delta.bound() - a; ++j) red[j] = delta.coeff(a, j);
    Poly<Rat> red_poly{std::vector<Rat>(red)};
    auto mu = red_poly.val_at_zero();
    rep.multiplicity = mu;
    rep.required = rep.g_is_zero ? m : m - 1;
    rep.holds = !mu.has_value() || *mu >= rep.required;
    return rep;
}

}  // namespace orbicurve
