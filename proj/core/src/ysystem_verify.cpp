#include "ycluster/ysystem_verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "ycluster/errors.hpp"

namespace ycluster {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

VerificationReport start(const std::string& check, const FamilyDescriptor& d) {
    VerificationReport r;
    r.check = check;
    r.family = d;
    return r;
}

double numeric(const Coefficient& c) {
    if (auto* r = std::get_if<PositiveReal>(&c)) return r->value();
    throw DomainError("expected a numeric trajectory");
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

constexpr std::size_t kMaxWitnesses = 8;

void add_witness(VerificationReport& r, nlohmann::json w) {
    if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(w));
}

}  // namespace

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json j = {{"check", check},       {"family", ycluster::to_string(family.family)},
                        {"m", family.m},        {"n", family.n},
                        {"pass", pass},         {"residual", residual},
                        {"witnesses", witnesses}, {"details", details}};
    j["elapsed_ms"] = with_timing ? elapsed_ms : 0.0;
    return j;
}

VerificationReport check_quiver_period(const FamilyDescriptor& d) {
    auto t0 = Clock::now();
    auto r = start("quiver-period", d);
    const LabeledQuiver q0 = build_quiver(d);
    const MutationSchedule sched = make_schedule(d);
    LabeledQuiver q = q0;
    long mismatches = 0, adjacency = 0, involution = 0;
    for (int t = 0; t < sched.period_u; ++t) {
        if (t % 2 == 0 && !(q.matrix() == apply_sigma(q0, t / 2).matrix())) {
            ++mismatches;
            add_witness(r, {{"u", t}, {"issue", "Q(u) differs from sigma^(u/2)(Q(0))"}});
        }
        const auto& vs = sched.steps[static_cast<std::size_t>(t)].vertices;
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (q.arrows(vs[a], vs[b]) != 0) {
                    ++adjacency;
                    add_witness(r, {{"u", t}, {"issue", "adjacent in one step"},
                                    {"vertices", {to_string(vs[a]), to_string(vs[b])}}});
                }
        for (const auto& v : vs) {
            LabeledQuiver next = mutate_matrix(q, v);
            if (!(mutate_matrix(next, v) == q)) ++involution;
            q = std::move(next);
        }
    }
    bool closes = q == q0;
    if (!closes) add_witness(r, {{"u", sched.period_u}, {"issue", "Q(2n-2) != Q(0)"}});
    r.pass = closes && mismatches == 0 && adjacency == 0 && involution == 0;
    r.residual = static_cast<double>(mismatches + adjacency + involution + (closes ? 0 : 1));
    r.details = {{"steps", sched.period_u},
                 {"vertices", q0.size()},
                 {"sigma_mismatches", mismatches},
                 {"adjacency_violations", adjacency},
                 {"involution_violations", involution},
                 {"returns_to_initial", closes}};
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport check_relation_templates(const FamilyDescriptor& d) {
    auto t0 = Clock::now();
    auto r = start("relation-templates", d);
    const YSystemFamily fam = ysystem_family(d);
    long bad = 0, checked = 0;
    for (const auto& inst : derive_y_relations(d)) {
        ++checked;
        const auto& want = fam.y[static_cast<std::size_t>(inst.rel.i - 1)];
        if (!(inst.rel == want)) {
            ++bad;
            add_witness(r, {{"kind", "Y"}, {"u", inst.u}, {"derived", to_string(inst.rel)},
                            {"expected", to_string(want)}});
        }
    }
    for (const auto& inst : derive_t_relations(d)) {
        ++checked;
        const auto& want = fam.t[static_cast<std::size_t>(inst.rel.i - 1)];
        if (!(inst.rel == want)) {
            ++bad;
            add_witness(r, {{"kind", "T"}, {"u", inst.u}, {"derived", to_string(inst.rel)},
                            {"expected", to_string(want)}});
        }
    }
    r.pass = bad == 0;
    r.residual = static_cast<double>(bad);
    r.details = {{"instances", checked}, {"mismatches", bad}};
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport check_y_relations(const Trajectory& traj, double tol) {
    auto t0 = Clock::now();
    const auto& d = traj.family;
    auto r = start("y-relations", d);
    if (traj.kind != SemifieldKind::PositiveReal) throw DomainError("y-relation check needs a numeric trajectory");
    if (traj.u_max() < d.y_period() + d.n - 1)
        throw InsufficientLength("y-relation check needs u_max >= " + std::to_string(d.y_period() + d.n - 1));
    const YSystemFamily fam = ysystem_family(d);
    double worst = 0.0;
    long count = 0, failures = 0;
    for (const auto& rel : fam.y) {
        for (int u = rel.d; u + rel.d <= traj.u_max(); ++u) {
            if (!traj.has_y(rel.i, u - rel.d)) continue;
            bool ok = true;
            for (const auto& f : rel.factors) ok = ok && traj.has_y(f.j, u + f.offset);
            if (!ok) continue;
            double lhs = numeric(traj.y_tilde(rel.i, u - rel.d)) * numeric(traj.y_tilde(rel.i, u + rel.d));
            double rhs = 1.0;
            for (const auto& f : rel.factors) {
                double y = numeric(traj.y_tilde(f.j, u + f.offset));
                double base = f.inverted ? 1.0 / (1.0 + 1.0 / y) : 1.0 + y;
                rhs *= std::pow(base, f.power);
            }
            double res = std::abs(lhs / rhs - 1.0);
            ++count;
            worst = std::max(worst, res);
            if (res >= tol) {
                ++failures;
                add_witness(r, {{"i", rel.i}, {"u", u}, {"lhs", lhs}, {"rhs", rhs}});
            }
        }
    }
    r.pass = failures == 0 && count > 0;
    r.residual = worst;
    r.details = {{"relations_checked", count}, {"failures", failures}, {"tolerance", tol}};
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport check_t_relations(const Trajectory& traj) {
    auto t0 = Clock::now();
    const auto& d = traj.family;
    auto r = start("t-relations", d);
    if (!traj.symbolic) throw MissingSymbolicRun("t-relation check needs cluster variables");
    if (traj.principal) throw DomainError("t-relation check needs trivial coefficients");
    if (traj.u_max() < d.step_period())
        throw InsufficientLength("t-relation check needs u_max >= " + std::to_string(d.step_period()));
    const YSystemFamily fam = ysystem_family(d);
    long count = 0, failures = 0;
    const int lo = -(d.n - 1);
    for (const auto& rel : fam.t) {
        for (int u = lo; u <= traj.u_max(); ++u) {
            if (!traj.has_x(rel.i, u - rel.d) || !traj.has_x(rel.i, u + rel.d)) continue;
            bool ok = true;
            for (const auto* term : {&rel.first, &rel.second})
                for (const auto& f : *term) ok = ok && traj.has_x(f.j, u + f.offset);
            if (!ok) continue;
            const auto nv = traj.initial.size();
            LaurentPoly lhs = lp_mul(traj.x_tilde(rel.i, u - rel.d), traj.x_tilde(rel.i, u + rel.d));
            LaurentPoly rhs(nv);
            for (const auto* term : {&rel.first, &rel.second}) {
                LaurentPoly prod = LaurentPoly::constant(nv, 1);
                for (const auto& f : *term)
                    prod = lp_mul(prod, lp_pow(traj.x_tilde(f.j, u + f.offset), static_cast<unsigned>(f.power)));
                rhs += prod;
            }
            ++count;
            if (!(lhs == rhs)) {
                ++failures;
                add_witness(r, {{"i", rel.i}, {"u", u}, {"difference_terms", lp_sub(lhs, rhs).size()}});
            }
        }
    }
    r.pass = failures == 0 && count > 0;
    r.residual = static_cast<double>(failures);
    r.details = {{"relations_checked", count}, {"failures", failures}};
    r.elapsed_ms = ms_since(t0);
    return r;
}

namespace {

bool coeff_equal(const Coefficient& a, const Coefficient& b, double tol, double& worst) {
    if (auto* ra = std::get_if<PositiveReal>(&a)) {
        double diff = rel_diff(ra->value(), std::get<PositiveReal>(b).value());
        worst = std::max(worst, diff);
        return diff < tol;
    }
    return a == b;
}

}  // namespace

VerificationReport check_periodicity(const Trajectory& traj, double tol) {
    auto t0 = Clock::now();
    const auto& d = traj.family;
    auto r = start("periodicity", d);
    const int half = d.half_window(), full = d.y_period();
    if (traj.u_max() < full + half)
        throw InsufficientLength("periodicity check needs u_max >= " + std::to_string(full + half));
    const PermutationMaps maps = permutation_maps(d);
    const bool twisted = d.family == Family::SG && d.big_n() % 2 == 1;
    auto image = [&](int i) { return twisted ? maps.omega(i) : i; };

    long y_checked = 0, y_fail = 0, x_checked = 0, x_fail = 0;
    double worst = 0.0;
    for (int i = 1; i <= d.layers(); ++i) {
        for (int u = 0; u < full; ++u) {
            if (!traj.has_y(i, u)) continue;
            for (int shift : {half, full}) {
                if (!traj.has_y(i, u + shift)) continue;
                int j = shift == half ? image(i) : i;
                ++y_checked;
                if (!coeff_equal(traj.y_tilde(i, u + shift), traj.y_tilde(j, u), tol, worst)) {
                    ++y_fail;
                    add_witness(r, {{"var", "y"}, {"i", i}, {"u", u}, {"shift", shift}});
                }
            }
        }
    }
    if (traj.symbolic) {
        for (int i = 1; i <= d.layers(); ++i) {
            for (int u = -duration(d, i); u < full; ++u) {
                if (!traj.has_x(i, u)) continue;
                for (int shift : {half, full}) {
                    if (!traj.has_x(i, u + shift)) continue;
                    int j = shift == half ? image(i) : i;
                    ++x_checked;
                    if (!(traj.x_tilde(i, u + shift) == traj.x_tilde(j, u))) {
                        ++x_fail;
                        add_witness(r, {{"var", "x"}, {"i", i}, {"u", u}, {"shift", shift}});
                    }
                }
            }
        }
    }

    r.details = {{"half_period", half},
                 {"full_period", full},
                 {"omega_twist", twisted},
                 {"y_checked", y_checked},
                 {"y_failures", y_fail},
                 {"x_checked", x_checked},
                 {"x_failures", x_fail}};

    // For generic numeric data, also report whether the other reading of the
    // half period would hold, and the least period actually observed.
    if (traj.kind == SemifieldKind::PositiveReal) {
        bool alt = true;
        double dummy = 0.0;
        for (int i = 1; i <= d.layers() && alt; ++i)
            for (int u = 0; u < full && alt; ++u) {
                if (!traj.has_y(i, u)) continue;
                int j = twisted ? i : maps.omega(i);
                alt = coeff_equal(traj.y_tilde(i, u + half), traj.y_tilde(j, u), tol, dummy);
            }
        r.details["alternative_half_twist_holds"] = alt;
        int least = 0;
        for (int s = 2; s <= full && least == 0; s += 2) {
            bool ok = true;
            for (int i = 1; i <= d.layers() && ok; ++i)
                for (int u = 0; u + s <= traj.u_max() && ok; ++u)
                    if (traj.has_y(i, u)) ok = coeff_equal(traj.y_tilde(i, u + s), traj.y_tilde(i, u), tol, dummy);
            if (ok) least = s;
        }
        r.details["least_period"] = least;
    }

    r.pass = y_fail == 0 && x_fail == 0 && y_checked > 0;
    r.residual = traj.kind == SemifieldKind::PositiveReal ? worst : static_cast<double>(y_fail + x_fail);
    r.elapsed_ms = ms_since(t0);
    return r;
}

bool predicted_negative(const FamilyDescriptor& d, VertexId v, int u) {
    const int n = d.n, m = d.m, big = 2 * d.big_n();
    const bool open = v.i < n;
    if (d.family == Family::SG) {
        if (open || v.ip == m + 1) return 2 * n - 2 <= u && u < big;
        for (int k = 1; k <= m + 1; ++k)
            if (u == 2 * k * (n - 1) || u == 2 * k * (n - 1) + 1) return true;
        return false;
    }
    if (open) return 2 * n - 2 <= u && u < big;
    if (u == n - 2 || u == n - 1) return true;
    if (v.ip == m + 1) return 2 * n - 2 <= u && u < big;
    for (int k = 2; k <= 2 * m + 2; ++k)
        if (u == k * (n - 1) || u == k * (n - 1) + 1) return true;
    return false;
}

long expected_negative_count(const FamilyDescriptor& d) {
    const long m = d.m, n = d.n;
    if (d.family == Family::SG) return m == 1 ? 4 * n - 2 : (m + 1) * d.big_n();
    return m == 1 ? 6 * n - 15 : n * m * m - m * m + 3 * m * n - 8 * m + 2 * n - 6;
}

VerificationReport tropical_report(const FamilyDescriptor& d) {
    auto t0 = Clock::now();
    d.validate();
    auto r = start("tropical", d);
    const int window = d.half_window();
    const LabeledQuiver q = build_quiver(d);
    const Trajectory traj = run(tropical_seed(q), make_schedule(d), window);

    long negative = 0, positive = 0, mixed = 0, unit = 0, pattern_mismatch = 0;
    for (int u = 0; u < window; ++u) {
        for (std::size_t k = 0; k < q.size(); ++k) {
            const auto& v = q.vertices()[k];
            if (!is_mutation_point(d, v, u)) continue;
            const auto& mono = std::get<TropicalMonomial>(traj.snapshots[static_cast<std::size_t>(u)].y[k]);
            Sign s = classify_sign(mono);
            switch (s) {
                case Sign::Negative: ++negative; break;
                case Sign::Positive: ++positive; break;
                case Sign::Mixed: ++mixed; break;
                case Sign::Unit: ++unit; break;
            }
            if (s == Sign::Mixed) add_witness(r, {{"vertex", to_string(v.id)}, {"u", u}, {"issue", "mixed sign"}});
            if ((s == Sign::Negative) != predicted_negative(d, v.id, u)) {
                ++pattern_mismatch;
                add_witness(r, {{"vertex", to_string(v.id)}, {"u", u}, {"sign", to_string(s)},
                                {"issue", "sign differs from the predicted window"}});
            }
        }
    }

    const PermutationMaps maps = permutation_maps(d);
    long tau_mismatch = 0;
    const auto& last = traj.snapshots.back().y;
    for (std::size_t k = 0; k < q.size(); ++k) {
        VertexId v = q.vertices()[k].id;
        if (!(std::get<TropicalMonomial>(last[k]) == TropicalMonomial::generator(maps.tau_inverse(v)))) {
            ++tau_mismatch;
            add_witness(r, {{"vertex", to_string(v)}, {"u", window}, {"issue", "tau periodicity fails"},
                            {"value", to_json(last[k])}});
        }
    }

    const long expected = expected_negative_count(d);
    r.pass = mixed == 0 && pattern_mismatch == 0 && tau_mismatch == 0 && negative == expected;
    r.residual = static_cast<double>(std::labs(negative - expected) + mixed + pattern_mismatch + tau_mismatch);
    r.details = {{"window", window},
                 {"n_minus", negative},
                 {"n_minus_expected", expected},
                 {"positive", positive},
                 {"mixed", mixed},
                 {"unit", unit},
                 {"pattern_mismatches", pattern_mismatch},
                 {"tau_mismatches", tau_mismatch}};
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace ycluster
