#include "orbicurve/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace orbicurve {

namespace {

const char* kVersion = "0.1.0";

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(Rat::parse(item));
    }
    return out;
}

std::set<BasePoint> parse_places(const std::string& s) {
    std::set<BasePoint> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "inf")
            out.insert(BasePoint::infinity());
        else
            out.insert(BasePoint::finite(Rat::parse(item)));
    }
    return out;
}

long parse_height(const std::string& s) {
    auto e = s.find_first_of("eE");
    if (e == std::string::npos) return std::stol(s);
    long mant = std::stol(s.substr(0, e));
    long exp = std::stol(s.substr(e + 1));
    long v = mant;
    for (long i = 0; i < exp; ++i) v *= 10;
    return v;
}

/// "point=mult;point=mult" with rational points.
std::vector<ArithMark> parse_extra_marks(const std::string& s) {
    std::vector<ArithMark> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("extra mark needs point=multiplicity");
        Rat p = Rat::parse(item.substr(0, eq));
        int m = std::stoi(item.substr(eq + 1));
        out.push_back({ProjectivePoint::from_rat(p), m});
    }
    return out;
}

std::set<mpz_class> parse_primes(const std::string& s) {
    std::set<mpz_class> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.insert(mpz_class(item));
    }
    return out;
}

Json kappa_json(KodairaClass k) {
    switch (k) {
        case KodairaClass::One: return 1;
        case KodairaClass::Zero: return 0;
        case KodairaClass::MinusInfinity: return "-inf";
    }
    return nullptr;
}

struct Dispatch {
    Json result;
    bool verification_failed = false;
};

}  // namespace

void emit_report(const Json& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("emit_report: cannot open " + path);
    out << canonical_dump(doc);
    if (!out) throw Error("emit_report: write failed for " + path);
}

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact computations with orbifold curves and multiple fibers"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = 1;
    long trunc = kDefaultTruncation;
    int jobs = 1;

    // classify
    auto* classify = app.add_subcommand("classify", "Kodaira class of a curve orbifold");
    int genus = 0;
    std::string marks_str;
    classify->add_option("--genus", genus, "genus of the support curve")->required();
    classify->add_option("--marks", marks_str, "multiplicities, e.g. 2,3,7");

    // dominate
    auto* dominate_cmd = app.add_subcommand("dominate", "divisor domination test");
    std::string dom_marks, dom_target;
    dominate_cmd->add_option("--marks", dom_marks)->required();
    dominate_cmd->add_option("--target", dom_target)->required();

    // fiber
    auto* fiber_cmd = app.add_subcommand("fiber", "multiplicities and base orbifold of fibers");
    std::string fibers_str;
    fiber_cmd->add_option("--fibers", fibers_str,
                          "per-point component multiplicities, e.g. '1;2,3;4,6'")
        ->required();

    // section-check
    auto* section_cmd = app.add_subcommand("section-check", "orbifold section test over Q(t)");
    std::string a_str, c_str = "1", sec_marks = "2,2,2", exclude_str;
    section_cmd->add_option("--a", a_str, "numerator coefficients, low degree first")->required();
    section_cmd->add_option("--c", c_str, "denominator coefficients");
    section_cmd->add_option("--marks", sec_marks, "multiplicities at 0,1,inf");
    section_cmd->add_option("--exclude", exclude_str, "bad places, e.g. 1,-1,inf");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "degree and height bound calculators");
    std::string btype = "hurwitz", bmarks = "2,3,7";
    int gb = 0, card_m = 0, g_fiber = 2, bq = 0, bsigma = 0, bm = 1, m_plus = 0, pole_t = 0;
    bounds_cmd->add_option("--type", btype, "hurwitz | height | case-bc");
    bounds_cmd->add_option("--gb", gb, "base genus");
    bounds_cmd->add_option("--card-m", card_m, "cardinality of the excluded place set");
    bounds_cmd->add_option("--marks", bmarks, "constant-mark multiplicities");
    bounds_cmd->add_option("--g-fiber", g_fiber);
    bounds_cmd->add_option("--q", bq);
    bounds_cmd->add_option("--sigma", bsigma);
    bounds_cmd->add_option("--m", bm);
    bounds_cmd->add_option("--m-plus", m_plus);
    bounds_cmd->add_option("--t", pole_t, "maximal coefficient pole order");

    // pluriform
    auto* pluri_cmd = app.add_subcommand("pluriform", "condition systems of the differential forms");
    std::string which = "w6", p0s = "2", p1s = "1", q0s = "3", q1s = "-1", mfmt = "json";
    int trials = 50;
    pluri_cmd->add_option("--which", which, "w6 | w4");
    pluri_cmd->add_option("--p0", p0s);
    pluri_cmd->add_option("--p1", p1s);
    pluri_cmd->add_option("--q0", q0s);
    pluri_cmd->add_option("--q1", q1s);
    pluri_cmd->add_option("--trials", trials);
    pluri_cmd->add_option("--matrix-format", mfmt, "json | text | none");
    pluri_cmd->add_option("--seed", seed);
    pluri_cmd->add_option("--trunc", trunc);
    pluri_cmd->add_option("--jobs", jobs);
    pluri_cmd->add_option("--out", out_path);

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "height-bounded orbifold rational points");
    std::string emarks = "2,2,2", eheight = "100", eprimes, eextra;
    enum_cmd->add_option("--marks", emarks, "multiplicities at 0,1,inf, e.g. 3,2,2");
    enum_cmd->add_option("--height", eheight, "height bound, e.g. 1e4");
    enum_cmd->add_option("--exclude-primes", eprimes, "e.g. 2,3");
    enum_cmd->add_option("--extra-marks", eextra, "e.g. '2=2;1/2=2'");
    enum_cmd->add_option("--out", out_path);
    enum_cmd->add_option("--jobs", jobs);

    // sextic
    auto* sextic_cmd = app.add_subcommand("sextic", "plane-sextic construction pipeline");
    sextic_cmd->add_option("--seed", seed);
    sextic_cmd->add_option("--out", out_path);
    sextic_cmd->add_option("--jobs", jobs);

    // report
    auto* report_cmd = app.add_subcommand("report", "aggregated evidence tables");
    std::string rtype = "finiteness", rheights = "100,1000", rprimes;
    report_cmd->add_option("--type", rtype, "finiteness");
    report_cmd->add_option("--heights", rheights, "ladder, e.g. 100,1000,10000");
    report_cmd->add_option("--exclude-primes", rprimes);
    report_cmd->add_option("--out", out_path);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        return {0, Json{{"help", app.help()}}, ""};
    } catch (const CLI::ParseError& e) {
        return {2, Json{}, e.what()};
    }

    Dispatch d;
    try {
        if (classify->parsed()) {
            OrbifoldCurve c{genus, OrbifoldDivisor::from_multiplicities(parse_int_list(marks_str))};
            d.result = Json{{"kappa", kappa_json(kodaira_dimension(c))},
                            {"degree", canonical_degree(c).str()},
                            {"general_type_via_five",
                             genus == 0 && is_general_type_via_five(c.delta)},
                            {"orbifold", to_json(c)}};
        } else if (dominate_cmd->parsed()) {
            auto src = OrbifoldDivisor::from_multiplicities(parse_int_list(dom_marks));
            auto tgt = OrbifoldDivisor::from_multiplicities(parse_int_list(dom_target));
            d.result = Json{{"dominates", dominates(src, tgt)}};
        } else if (fiber_cmd->parsed()) {
            std::map<std::string, std::vector<int>> fibers;
            std::stringstream ss(fibers_str);
            std::string item;
            int idx = 0;
            while (std::getline(ss, item, ';'))
                if (!item.empty()) fibers["p" + std::to_string(++idx)] = parse_int_list(item);
            FiberData fd(fibers);
            Json per = Json::array();
            for (const auto& [p, ms] : fd.fibers()) {
                auto [m, ms_] = fiber_multiplicities(fd, p);
                per.push_back({{"point", p}, {"m", m}, {"m_star", ms_}});
            }
            auto [delta, delta_star] = base_orbifold(fd);
            d.result = Json{{"per_point", per},
                            {"delta", to_json(OrbifoldCurve{0, delta})},
                            {"delta_star", to_json(OrbifoldCurve{0, delta_star})}};
        } else if (section_cmd->parsed()) {
            FunctionFieldSection s{Poly<Rat>(parse_rat_list(a_str)),
                                   Poly<Rat>(parse_rat_list(c_str))};
            auto ms = parse_int_list(sec_marks);
            if (ms.size() != 3) throw Error("section-check: --marks needs three entries");
            SectionConfig cfg = SectionConfig::constants(ms[0], ms[1], ms[2],
                                                         parse_places(exclude_str));
            auto profile = contact_profile(s, cfg);
            d.result = Json{{"section", to_json(s)},
                            {"degree", s.degree()},
                            {"is_orbifold_section", is_orbifold_section(s, cfg)},
                            {"profile", to_json(profile)},
                            {"contact_totals", profile.totals_per_mark(cfg.marks().size())},
                            {"star_inequality", to_json(star_inequality(s, profile))}};
            if (!s.is_constant()) d.result["hurwitz"] = to_json(verify_hurwitz_certificate(s));
        } else if (bounds_cmd->parsed()) {
            if (btype == "hurwitz") {
                d.result = to_json(hurwitz_degree_bound(gb, card_m, parse_int_list(bmarks)));
            } else if (btype == "height") {
                d.result = to_json(height_bounds(g_fiber, bq, bsigma, bm));
            } else if (btype == "case-bc") {
                d.result = Json{{"bound", degree_bound_bc(gb, m_plus, pole_t)},
                                {"g_base", gb},
                                {"m_plus", m_plus},
                                {"t", pole_t}};
            } else {
                throw CLI::ValidationError("--type", "unknown bounds type");
            }
        } else if (pluri_cmd->parsed()) {
            PluriformSystem sys =
                which == "w6"
                    ? build_w6_system(Rat::parse(p0s), Rat::parse(p1s))
                    : build_w4_system(Rat::parse(p0s), Rat::parse(p1s), Rat::parse(q0s),
                                      Rat::parse(q1s));
            auto rep = verify_conditions_suite(sys, trials, seed, trunc, jobs);
            d.result = Json{{"system", to_json(sys, mfmt == "json")},
                            {"verification", to_json(rep)}};
            if (mfmt == "text") d.result["matrix_text"] = matrix_text(sys.matrix);
            d.verification_failed = !rep.all_passed();
        } else if (enum_cmd->parsed()) {
            auto ms = parse_int_list(emarks);
            if (ms.size() != 3) throw Error("enumerate: --marks needs three entries");
            std::vector<ArithMark> marks = {{ProjectivePoint::zero(), ms[0]},
                                            {ProjectivePoint::one(), ms[1]},
                                            {ProjectivePoint::infinity(), ms[2]}};
            for (auto& mk : parse_extra_marks(eextra)) marks.push_back(mk);
            ArithOrbifoldSpec spec(marks, parse_primes(eprimes));
            auto rep = enumerate_points(spec, parse_height(eheight));
            d.result = to_json(rep, true);
        } else if (sextic_cmd->parsed()) {
            auto rep = run_sextic_pipeline(seed);
            d.result = to_json(rep);
            d.verification_failed = !rep.all_passed;
        } else if (report_cmd->parsed()) {
            if (rtype != "finiteness") throw CLI::ValidationError("--type", "unknown report type");
            std::vector<long> heights;
            for (int h : parse_int_list(rheights)) heights.push_back(h);
            Json rows = Json::array();
            for (const auto& row : finiteness_report(heights, parse_primes(rprimes))) {
                Json counts = Json::array();
                for (const auto& [h, n] : row.counts) counts.push_back({{"height", h}, {"count", n}});
                rows.push_back({{"spec", row.spec_name}, {"counts", counts}});
            }
            d.result = Json{{"type", "finiteness"}, {"rows", rows}};
        }
    } catch (const CLI::Error& e) {
        return {2, Json{}, e.what()};
    } catch (const std::exception& e) {
        // invalid input (unparsable numbers, violated preconditions) is a
        // usage error; mid-run verification failures come back through the
        // result documents instead
        return {2, Json{}, e.what()};
    }

    std::string input_canon;
    for (const auto& a : args) {
        input_canon += a;
        input_canon += '\n';
    }
    Json doc{{"manifest",
              Json{{"version", kVersion},
                   {"seed", seed},
                   {"input_digest", digest(input_canon)},
                   {"result_digest", digest(canonical_dump(d.result))}}},
             {"result", d.result}};
    if (!out_path.empty()) emit_report(doc, out_path);
    return {d.verification_failed ? 1 : 0, doc, d.verification_failed ? "verification failed" : ""};
}

}  // namespace orbicurve
