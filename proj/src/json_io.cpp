#include "orbicurve/json_io.hpp"

#include <algorithm>
#include <cstdint>

namespace orbicurve {

Json to_json(const Rat& r) { return r.str(); }
Json to_json(const GaussRat& g) { return g.str(); }

Json to_json(const Poly<Rat>& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

Json to_json(const Poly<GaussRat>& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

Json to_json(const BiPoly<Rat>& p) {
    Json a = Json::array();
    for (int i = 0; i <= p.bound(); ++i)
        for (int j = 0; j <= p.bound() - i; ++j)
            if (!p.coeff(i, j).is_zero()) a.push_back({i, j, p.coeff(i, j).str()});
    return a;
}

Json to_json(const Matrix<Rat>& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_text(const Matrix<Rat>& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += m.at(r, c).str();
        }
        out += '\n';
    }
    return out;
}

Json to_json(const OrbifoldCurve& c) {
    auto sorted = c.delta.marks();
    std::sort(sorted.begin(), sorted.end(), [](const Mark& a, const Mark& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        return a.point < b.point;
    });
    Json marks = Json::array();
    for (const auto& m : sorted) marks.push_back({{"p", m.point}, {"m", m.multiplicity}});
    return Json{{"genus", c.genus}, {"marks", marks}};
}

OrbifoldCurve orbifold_curve_from_json(const Json& j) {
    std::vector<Mark> marks;
    for (const auto& m : j.at("marks"))
        marks.push_back({m.at("p").get<std::string>(), m.at("m").get<int>()});
    return OrbifoldCurve{j.at("genus").get<int>(), OrbifoldDivisor(std::move(marks))};
}

Json to_json(const FunctionFieldSection& s) {
    return Json{{"A", to_json(s.A())}, {"C", to_json(s.C())}};
}

FunctionFieldSection section_from_json(const Json& j) {
    auto parse_poly = [](const Json& a) {
        std::vector<Rat> c;
        for (const auto& v : a) c.push_back(Rat::parse(v.get<std::string>()));
        return Poly<Rat>(std::move(c));
    };
    return {parse_poly(j.at("A")), parse_poly(j.at("C"))};
}

Json to_json(const ContactProfile& p) {
    Json entries = Json::array();
    for (const auto& e : p.entries) {
        Json je;
        if (e.point) je["point"] = e.point->str();
        if (e.packet) je["packet"] = to_json(*e.packet);
        je["count"] = e.count;
        je["orders"] = e.orders;
        je["max_order"] = e.max_order;
        je["in_bad_places"] = e.in_bad_places;
        entries.push_back(std::move(je));
    }
    return Json{{"entries", entries}};
}

Json to_json(const HurwitzBound& b) {
    return Json{{"epsilon", b.epsilon.str()}, {"numerator", b.numerator},
                {"bound", b.bound},          {"cap", b.cap},
                {"empty", b.empty}};
}

namespace {
Json ram_points(const std::vector<RamPoint>& ps) {
    Json a = Json::array();
    for (const auto& p : ps)
        a.push_back({{"where", p.where}, {"count", p.count}, {"index", p.index}});
    return a;
}
}  // namespace

Json to_json(const HurwitzCertificate& c) {
    return Json{{"degree", c.degree},
                {"fiber_over_0", ram_points(c.fiber_over_0)},
                {"fiber_over_1", ram_points(c.fiber_over_1)},
                {"fiber_over_inf", ram_points(c.fiber_over_inf)},
                {"full_ram_sum", c.full_ram_sum},
                {"restricted_ram_sum", c.restricted_ram_sum},
                {"lhs", c.lhs},
                {"rhs_full", c.rhs_full},
                {"identity_holds", c.identity_holds},
                {"restricted_inequality_holds", c.restricted_inequality_holds}};
}

Json to_json(const StarInequality& s) {
    return Json{{"lhs", s.lhs}, {"rhs", s.rhs.str()}, {"holds", s.holds}};
}

Json to_json(const BranchesBound& b) {
    Json pp = Json::array();
    for (const auto& p : b.per_point)
        pp.push_back({{"point", p.point},
                      {"lhs", p.lhs.str()},
                      {"rhs", p.rhs.str()},
                      {"holds", p.holds}});
    return Json{{"lhs", b.lhs.str()}, {"rhs", b.rhs.str()}, {"holds", b.holds},
                {"per_point", pp}};
}

Json to_json(const HeightBounds& h) {
    return Json{{"ev_bound", h.ev_bound},
                {"isotrivial_bound", h.isotrivial_bound},
                {"l_bound", h.l_bound}};
}

Json to_json(const LocalIntersectionReport& r) {
    Json j{{"g_is_zero", r.g_is_zero},
           {"t_order", r.t_order},
           {"required", r.required},
           {"holds", r.holds},
           {"identically_equal", r.identically_equal}};
    if (r.multiplicity)
        j["multiplicity"] = *r.multiplicity;
    else
        j["multiplicity"] = "infinite";
    return j;
}

Json to_json(const PluriformSystem& sys, bool include_matrix) {
    Json j{{"which", sys.which == 6 ? "w6" : "w4"},
           {"p0", sys.p0.str()},
           {"p1", sys.p1.str()},
           {"rows", sys.matrix.rows()},
           {"cols", sys.matrix.cols()},
           {"block_sizes", sys.block_sizes},
           {"rank", sys.rank},
           {"kernel_dimension", sys.kernel.size()}};
    if (sys.q0) {
        j["q0"] = sys.q0->str();
        j["q1"] = sys.q1->str();
    }
    Json kb = Json::array();
    for (const auto& v : sys.kernel) {
        Json vec = Json::array();
        for (const auto& c : v) vec.push_back(c.str());
        kb.push_back(std::move(vec));
    }
    j["kernel"] = kb;
    if (include_matrix) j["matrix"] = to_json(sys.matrix);
    return j;
}

Json to_json(const VerificationReport& rep) {
    // aggregate per condition class
    std::map<std::string, std::pair<int, int>> agg;  // class -> (count, failures)
    std::map<std::string, long> min_val;
    for (const auto& t : rep.trials) {
        auto& [n, f] = agg[t.condition_class];
        ++n;
        if (!t.passed) ++f;
        if (t.observed) {
            auto it = min_val.find(t.condition_class);
            if (it == min_val.end() || *t.observed < it->second)
                min_val[t.condition_class] = *t.observed;
        }
    }
    Json classes = Json::array();
    for (const auto& [cls, nf] : agg) {
        Json jc{{"class", cls}, {"trials", nf.first}, {"failures", nf.second}};
        if (min_val.count(cls)) jc["min_valuation"] = min_val[cls];
        classes.push_back(std::move(jc));
    }
    Json failures = Json::array();
    for (const auto& t : rep.trials)
        if (!t.passed)
            failures.push_back({{"class", t.condition_class},
                                {"section", t.section},
                                {"required", t.required},
                                {"observed", t.observed ? Json(*t.observed) : Json("zero")}});
    return Json{{"kernel_dimension", rep.kernel_dimension},
                {"kernel_exact", rep.kernel_exact},
                {"classes", classes},
                {"failures", failures},
                {"failure_count", rep.failures},
                {"negative_control_failed", rep.negative_control_failed},
                {"all_passed", rep.all_passed()}};
}

Json to_json(const EnumerationReport& rep, bool include_points) {
    Json j{{"height", rep.height}, {"count", rep.count()}};
    if (include_points) {
        Json pts = Json::array();
        for (const auto& p : rep.points) {
            Json vals = Json::array();
            for (const auto& per_mark : p.valuations) {
                Json mv = Json::array();
                for (const auto& [prime, v] : per_mark)
                    mv.push_back({{"prime", prime.get_str()}, {"val", v}});
                vals.push_back(std::move(mv));
            }
            pts.push_back({{"point", p.point.str()},
                           {"height", p.point.height().get_str()},
                           {"valuations", vals}});
        }
        j["points"] = pts;
    }
    return j;
}

Json to_json(const AbcQuality& q) {
    return Json{{"rad", q.rad.get_str()}, {"quality", q.quality.str()}};
}

namespace {

Json to_json(const TangencyCheck& t) {
    return Json{{"point", t.point}, {"line", t.line}, {"required", t.required},
                {"verified", t.verified}};
}

Json to_json(const GhkChoice& g) {
    Json roots = Json::array();
    auto rl = [](const std::vector<Rat>& rs) {
        Json a = Json::array();
        for (const auto& r : rs) a.push_back(r.str());
        return a;
    };
    return Json{{"g", to_json(g.g)},        {"h", to_json(g.h)},
                {"k", to_json(g.k)},        {"g_roots", rl(g.g_roots)},
                {"h_roots", rl(g.h_roots)}, {"k_roots", rl(g.k_roots)},
                {"e", g.e.str()},           {"betas", rl(g.betas)},
                {"gammas", rl(g.gammas)}};
}

Json to_json(const HProfile& p) {
    Json lines = Json::array();
    for (const auto& lp : p.lines) {
        Json pts = Json::array();
        for (const auto& q : lp.points) pts.push_back({{"x", q.x.str()}, {"y", q.y.str()}});
        lines.push_back({{"line", lp.line},
                         {"points", pts},
                         {"contact_orders", lp.contact_orders},
                         {"multiplicities", lp.multiplicities},
                         {"expected_points", lp.expected_points},
                         {"expected_multiplicity", lp.expected_multiplicity},
                         {"verified", lp.verified}});
    }
    return Json{{"lines", lines},
                {"conjugate_pairing", p.conjugate_pairing},
                {"all_verified", p.all_verified}};
}

}  // namespace

Json to_json(const ConstructionReport& rep) {
    Json prof = Json::array();
    for (const auto& t : rep.s_profile) prof.push_back(to_json(t));
    Json bck = Json::array();
    for (const auto& [m, kappa] : rep.fiber.base_change_kappa)
        bck.push_back({{"m", m}, {"kappa", kappa}});
    return Json{
        {"seed", rep.seed},
        {"ghk", to_json(rep.ghk)},
        {"s1", to_json(rep.s1.affine)},
        {"nine_forms",
         Json{{"rank", rep.nine.rank},
              {"kernel_cubic", to_json(rep.nine.kernel_cubic)},
              {"correction_cubic", to_json(rep.nine.correction_cubic)},
              {"matrix", to_json(rep.nine.matrix)}}},
        {"zeta", rep.zeta.str()},
        {"s", to_json(rep.s.affine)},
        {"s_profile", prof},
        {"h", to_json(rep.h.affine)},
        {"h_degree", rep.h.degree},
        {"h_profile", to_json(rep.h_profile)},
        {"fiber",
         Json{{"base_point_count", rep.fiber.base_point_count},
              {"m", rep.fiber.m},
              {"m_star", rep.fiber.m_star},
              {"component_multiplicities", rep.fiber.component_multiplicities},
              {"base_change_kappa", bck}}},
        {"invariants_m5",
         Json{{"m", rep.invariants_m5.m},
              {"c1_sq", rep.invariants_m5.c1_sq},
              {"c2", rep.invariants_m5.c2},
              {"ratio", rep.invariants_m5.ratio.str()},
              {"fiber_genus", rep.invariants_m5.fiber_genus},
              {"K_dot_F", rep.invariants_m5.k_dot_f}}},
        {"first_order_compatibility_both_forms", rep.compatibility_flag},
        {"all_passed", rep.all_passed},
        {"failed_stage", rep.failed_stage}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string digest(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace orbicurve
