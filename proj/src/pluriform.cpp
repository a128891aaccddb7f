#include "orbicurve/pluriform.hpp"

#include <future>
#include <random>

namespace orbicurve {

namespace {

long falling(int i, int h) {
    long r = 1;
    for (int t = 0; t < h; ++t) r *= (i - t);
    return r;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

std::vector<int> offsets(const std::vector<int>& caps) {
    std::vector<int> offs = {0};
    for (size_t k = 0; k + 1 < caps.size(); ++k) offs.push_back(offs.back() + caps[k] + 1);
    return offs;
}

/// Adds factor * P_k^{(h)}(y0) to a matrix row.
void add_deriv_row(Matrix<Rat>& m, int row, int off, int cap, int h, const Rat& y0,
                   const Rat& factor) {
    for (int i = h; i <= cap; ++i)
        m.at(row, off + i) += factor * Rat(falling(i, h)) * y0.pow(i - h);
}

}  // namespace

Poly<Rat> FormVector::component(int k) const {
    auto offs = offsets(caps);
    std::vector<Rat> c(coeffs.begin() + offs[size_t(k)],
                       coeffs.begin() + offs[size_t(k)] + caps[size_t(k)] + 1);
    return Poly<Rat>(std::move(c));
}

FormVector PluriformSystem::kernel_form(size_t i) const {
    return FormVector{which == 6 ? kW6Caps : kW4Caps, kernel.at(i)};
}

PluriformSystem build_w6_system(const Rat& p0, const Rat& p1) {
    if (p0 == Rat(0) || p0 == Rat(1))
        throw Error("build_w6_system: p0 must avoid the marked values 0 and 1");
    const auto& caps = kW6Caps;
    auto offs = offsets(caps);
    const int ncols = offs.back() + caps.back() + 1;  // 44
    const int a[7] = {-1, 0, 0, 1, 1, 2, 2};          // a_k for k = 1..6 (a[0] unused)
    const int b[7] = {0, 0, 1, 2, 2, 3, 4};
    int rows1 = 0, rows3 = 0;
    for (int k = 1; k <= 6; ++k) rows1 += a[k] + 1;
    for (int k = 0; k <= 6; ++k) rows3 += b[k] + 1;
    Matrix<Rat> m(rows1 * 2 + rows3, ncols);
    int row = 0;
    for (int k = 1; k <= 6; ++k)  // P_k^{(h)}(1) = 0
        for (int h = 0; h <= a[k]; ++h)
            add_deriv_row(m, row++, offs[k], caps[k], h, Rat(1), Rat(1));
    for (int k = 1; k <= 6; ++k)  // Q_k^{(h)}(p0) = 0
        for (int h = 0; h <= a[k]; ++h) {
            for (int mm = 0; mm <= k; ++mm) {
                int j = k - mm;
                Rat f = Rat(binom(6 - k + mm, mm)) * p1.pow(mm);
                add_deriv_row(m, row, offs[j], caps[j], h, p0, f);
            }
            ++row;
        }
    for (int k = 0; k <= 6; ++k)  // P_k^{(h)}(0) = 0
        for (int h = 0; h <= b[k]; ++h)
            add_deriv_row(m, row++, offs[k], caps[k], h, Rat(0), Rat(1));
    PluriformSystem sys;
    sys.which = 6;
    sys.p0 = p0;
    sys.p1 = p1;
    sys.matrix = m;
    sys.block_sizes = {rows1, rows1, rows3};
    sys.kernel = m.kernel_basis();
    sys.rank = m.rank();
    return sys;
}

PluriformSystem build_w4_system(const Rat& p0, const Rat& p1, const Rat& q0, const Rat& q1) {
    std::vector<Rat> vals = {Rat(0), Rat(1), p0, q0};
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j)
            if (vals[i] == vals[j])
                throw Error("build_w4_system: marked values 0, 1, p0, q0 must be distinct");
    const auto& caps = kW4Caps;
    auto offs = offsets(caps);
    const int ncols = offs.back() + caps.back() + 1;  // 29
    const int a[5] = {-1, 0, 0, 1, 1};
    const int b[5] = {0, 0, 1, 1, 2};
    int rows_t = 0, rows_z = 0;
    for (int k = 0; k <= 4; ++k) rows_t += a[k] + 1;
    for (int k = 0; k <= 4; ++k) rows_z += b[k] + 1;
    Matrix<Rat> m(rows_t * 3 + rows_z, ncols);
    int row = 0;
    auto tangency_block = [&](const Rat& y0, const Rat& y1) {
        for (int k = 0; k <= 4; ++k)
            for (int h = 0; h <= a[k]; ++h) {
                for (int mm = 0; mm <= k; ++mm) {
                    int j = k - mm;
                    Rat f = Rat(binom(4 - k + mm, mm)) * y1.pow(mm);
                    add_deriv_row(m, row, offs[j], caps[j], h, y0, f);
                }
                ++row;
            }
    };
    tangency_block(Rat(1), Rat(0));
    tangency_block(p0, p1);
    tangency_block(q0, q1);
    for (int k = 0; k <= 4; ++k)
        for (int h = 0; h <= b[k]; ++h)
            add_deriv_row(m, row++, offs[k], caps[k], h, Rat(0), Rat(1));
    PluriformSystem sys;
    sys.which = 4;
    sys.p0 = p0;
    sys.p1 = p1;
    sys.q0 = q0;
    sys.q1 = q1;
    sys.matrix = m;
    sys.block_sizes = {rows_t, rows_t, rows_t, rows_z};
    sys.kernel = m.kernel_basis();
    sys.rank = m.rank();
    return sys;
}

namespace {

PulledBackForm pullback(const FormVector& w, const Laurent& s,
                        const std::vector<Poly<Rat>>& denom_linear_shifts,
                        const std::vector<int>& denom_exponents, int weight, long truncation) {
    Laurent ds = s.derivative();
    Laurent num;  // exact zero
    for (int k = 0; k < int(w.caps.size()); ++k) {
        Laurent term = Laurent::eval_poly(w.component(k), s) * ds.pow(weight - k);
        num = num + term;
    }
    Laurent den = Laurent::monomial(Rat(1), 0);
    for (size_t i = 0; i < denom_linear_shifts.size(); ++i) {
        Laurent f = s - Laurent::from_poly(denom_linear_shifts[i]);
        den = den * f.pow(denom_exponents[i]);
    }
    PulledBackForm out;
    out.series = Laurent::divide(num, den, truncation);
    if (!out.series.valuation().has_value() && !num.is_exact())
        throw TruncationError("pullback: truncation exhausted before valuation determined");
    return out;
}

}  // namespace

PulledBackForm pullback_w6(const FormVector& w, const Laurent& s, const Poly<Rat>& p,
                           long truncation) {
    if (w.caps != kW6Caps) throw Error("pullback_w6: not a w6 coefficient vector");
    return pullback(w, s, {Poly<Rat>{}, Poly<Rat>::constant(Rat(1)), p}, {4, 3, 3}, 6,
                    truncation);
}

PulledBackForm pullback_w4(const FormVector& w, const Laurent& s, const Poly<Rat>& p,
                           const Poly<Rat>& q, long truncation) {
    if (w.caps != kW4Caps) throw Error("pullback_w4: not a w4 coefficient vector");
    return pullback(w, s, {Poly<Rat>{}, Poly<Rat>::constant(Rat(1)), p, q}, {2, 2, 2, 2}, 4,
                    truncation);
}

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    long rint(long lo, long hi) { return lo + long(gen() % std::uint64_t(hi - lo + 1)); }
    Rat rat(long max_num = 100, long max_den = 100) {
        return Rat(rint(-max_num, max_num), rint(1, max_den));
    }
    Rat nonzero_rat(long max_num = 100, long max_den = 100) {
        Rat r = rat(max_num, max_den);
        while (r.is_zero()) r = rat(max_num, max_den);
        return r;
    }
    Poly<Rat> poly(int deg, bool nonzero_const) {
        std::vector<Rat> c(size_t(deg) + 1);
        for (auto& v : c) v = rat(20, 10);
        if (nonzero_const && c[0].is_zero()) c[0] = nonzero_rat(20, 10);
        Poly<Rat> p(std::move(c));
        if (p.is_zero()) p = Poly<Rat>::constant(nonzero_rat(20, 10));
        return p;
    }
};

struct Trial {
    std::string cls;
    std::string label;
    Laurent section;
    long required;
};

std::vector<Trial> make_trials(const PluriformSystem& sys, int count, Rng& rng) {
    std::vector<Trial> out;
    const bool w6 = (sys.which == 6);
    std::vector<std::pair<Rat, Rat>> oscul = {{sys.p0, sys.p1}};
    if (!w6) oscul.push_back({*sys.q0, *sys.q1});
    for (int t = 0; t < count; ++t) {
        {  // infinity-tangent: s = u(x) / x^sigma, sigma >= 2, u(0) != 0
            long sigma = rng.rint(2, 3);
            Poly<Rat> u = rng.poly(3, true);
            Laurent s = Laurent::divide(Laurent::from_poly(u),
                                        Laurent::monomial(Rat(1), sigma), kDefaultTruncation);
            out.push_back({"infinity-tangent", "u/x^" + std::to_string(sigma), s, 0});
        }
        {  // 1-tangent: s = 1 + x^2 u(x)
            Poly<Rat> u = rng.poly(2, true);
            Laurent s = Laurent::monomial(Rat(1), 0) +
                        Laurent::monomial(Rat(1), 2) * Laurent::from_poly(u);
            out.push_back({"one-tangent", "1+x^2*u", s, 0});
        }
        for (size_t oi = 0; oi < oscul.size(); ++oi) {
            const auto& [v0, v1] = oscul[oi];
            Poly<Rat> u = rng.poly(2, true);
            Laurent s = Laurent::from_poly(Poly<Rat>{v0, v1}) +
                        Laurent::monomial(Rat(1), 2) * Laurent::from_poly(u);
            // a locally constant marked section gives the sharp holomorphy
            // guarantee; a moving one only the frozen-system pole floor
            long req;
            if (v1.is_zero())
                req = 0;
            else
                req = w6 ? -3 : -2;
            out.push_back({oi == 0 ? "p-osculating" : "q-osculating",
                           "v0+v1*x+x^2*u", s, req});
        }
        {  // high-order zero: s = x^r u(x), u(0) != 0
            long r = w6 ? rng.rint(3, 6) : rng.rint(2, 5);
            Poly<Rat> u = rng.poly(2, true);
            Laurent s = Laurent::monomial(Rat(1), r) * Laurent::from_poly(u);
            long req = w6 ? (r - 1 + 1) / 2 : (r + 1) / 2;  // ceil((r-1)/2), ceil(r/2)
            out.push_back({"zero-order-r", "x^" + std::to_string(r) + "*u", s, req});
        }
        {  // pole bound for arbitrary transverse sections: order at most T+4, T=0
            Poly<Rat> u = rng.poly(2, false);
            Poly<Rat> pm{sys.p0, sys.p1};
            Poly<Rat> qm = w6 ? Poly<Rat>{} : Poly<Rat>{*sys.q0, *sys.q1};
            while (u.is_zero() || u == Poly<Rat>::constant(Rat(1)) || u == pm || (!w6 && u == qm))
                u = rng.poly(2, false);
            out.push_back({"pole-bound", "generic", Laurent::from_poly(u), -4});
        }
    }
    return out;
}

size_t run_trials(const PluriformSystem& sys, const FormVector& w,
                  const std::vector<Trial>& trials, long truncation,
                  std::vector<TrialResult>* results) {
    Poly<Rat> p{sys.p0, sys.p1};
    Poly<Rat> q = sys.q0 ? Poly<Rat>{*sys.q0, *sys.q1} : Poly<Rat>{};
    size_t failures = 0;
    for (const auto& tr : trials) {
        PulledBackForm f = sys.which == 6 ? pullback_w6(w, tr.section, p, truncation)
                                          : pullback_w4(w, tr.section, p, q, truncation);
        auto val = f.valuation();
        bool ok = !val.has_value() || *val >= tr.required;
        if (!ok) ++failures;
        if (results)
            results->push_back({tr.cls, tr.label, tr.required, val, ok});
    }
    return failures;
}

}  // namespace

VerificationReport verify_conditions_suite(const PluriformSystem& sys, int trials,
                                           std::uint64_t seed, long truncation, int jobs) {
    if (sys.kernel.empty()) throw Error("verify_conditions_suite: empty kernel");
    VerificationReport rep;
    rep.kernel_dimension = sys.kernel.size();
    rep.kernel_exact = true;
    for (const auto& v : sys.kernel) {
        for (const auto& y : sys.matrix.mul_vec(v))
            if (!y.is_zero()) rep.kernel_exact = false;
    }
    Rng rng(seed);
    auto ts = make_trials(sys, trials, rng);
    rep.failures = 0;
    if (jobs <= 1 || ts.size() < 8) {
        for (size_t i = 0; i < sys.kernel.size(); ++i)
            rep.failures += run_trials(sys, sys.kernel_form(i), ts, truncation, &rep.trials);
    } else {
        // fan out per (kernel form, trial chunk); results are merged in a
        // fixed order, so the report does not depend on scheduling
        for (size_t i = 0; i < sys.kernel.size(); ++i) {
            FormVector w = sys.kernel_form(i);
            size_t nchunks = std::min<size_t>(size_t(jobs), ts.size());
            std::vector<std::future<std::pair<size_t, std::vector<TrialResult>>>> futs;
            for (size_t chunk = 0; chunk < nchunks; ++chunk) {
                futs.push_back(std::async(std::launch::async, [&, chunk] {
                    std::vector<Trial> part;
                    for (size_t t = chunk; t < ts.size(); t += nchunks) part.push_back(ts[t]);
                    std::vector<TrialResult> results;
                    size_t fails = run_trials(sys, w, part, truncation, &results);
                    return std::make_pair(fails, std::move(results));
                }));
            }
            for (auto& f : futs) {
                auto [fails, results] = f.get();
                rep.failures += fails;
                for (auto& r : results) rep.trials.push_back(std::move(r));
            }
        }
    }
    // negative control: perturb one coefficient of the first kernel form
    rep.negative_control_failed = false;
    for (int attempt = 0; attempt < 8 && !rep.negative_control_failed; ++attempt) {
        FormVector w = sys.kernel_form(0);
        size_t idx = size_t(rng.rint(0, long(w.coeffs.size()) - 1));
        FormVector corrupted = w;
        corrupted.coeffs[idx] += Rat(1);
        // must actually leave the kernel
        bool violates = false;
        for (const auto& y : sys.matrix.mul_vec(corrupted.coeffs))
            if (!y.is_zero()) violates = true;
        if (!violates) continue;
        if (run_trials(sys, corrupted, ts, truncation, nullptr) > 0)
            rep.negative_control_failed = true;
    }
    return rep;
}

}  // namespace orbicurve
