#include <chrono>
#include <cmath>
#include <numbers>

#include "ycluster/errors.hpp"
#include "ycluster/ysystem_verify.hpp"

namespace ycluster {

namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

// Li2 by its power series; only called with 0 < x <= 1/2, where 40 terms
// leave a tail below 1e-15.
double li2_small(double x) {
    double sum = 0.0, p = x;
    for (int k = 1; k <= 40; ++k) {
        sum += p / (static_cast<double>(k) * k);
        p *= x;
    }
    return sum;
}

double rogers_small(double x) { return li2_small(x) + 0.5 * std::log(x) * std::log1p(-x); }

}  // namespace

double rogers_L(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("rogers_L defined on [0,1] only");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return kPi2Over6;
    if (x <= 0.5) return rogers_small(x);
    return kPi2Over6 - rogers_small(1.0 - x);
}

int dilog_window(const FamilyDescriptor& d) {
    return d.family == Family::SG ? 4 * d.big_n() : 2 * d.big_n();
}

long expected_s1(const FamilyDescriptor& d) {
    const long m = d.m, n = d.n;
    if (d.family == Family::SG) return 4 * (m + 1) * d.big_n();
    return 2 * (n * m * m - m * m + 3 * m * n - 8 * m + 2 * n - 6);
}

long expected_s2(const FamilyDescriptor& d) {
    const long m = d.m, n = d.n;
    if (d.family == Family::SG) return 4 * (n - 1) * d.big_n();
    return 2 * (n * n * m - 6 * n * m + 11 * m + n * n - 5 * n + 6);
}

DilogResult dilog_sums(const Trajectory& plus, const Trajectory& minus, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    const auto& d = plus.family;
    if (!(minus.family == d)) throw DomainError("dilog runs belong to different families");
    if (plus.kind != SemifieldKind::PositiveReal || minus.kind != SemifieldKind::PositiveReal)
        throw DomainError("dilogarithm sums need numeric trajectories");
    const int window = dilog_window(d);
    if (plus.u_max() < window - 1 || minus.u_max() < window)
        throw InsufficientLength("dilogarithm window " + std::to_string(window) + " exceeds the runs");

    DilogResult out;
    auto& s = out.sums;
    s.window = window;
    double sum1 = 0.0, sum2 = 0.0, half1 = 0.0, half2 = 0.0;
    for (int u = 0; u < window; ++u) {
        for (int i = 1; i <= d.layers(); ++i) {
            const Coefficient& c = is_y_point(d, i, u) ? plus.y_tilde(i, u) : minus.y_tilde(i, u + 1);
            double y = std::get<PositiveReal>(c).value();
            if (!(y > 0.0) || !std::isfinite(y)) throw NonPositiveValue("non-positive Y value in dilogarithm sum");
            double a = rogers_L(y / (1.0 + y)), b = rogers_L(1.0 / (1.0 + y));
            sum1 += a;
            sum2 += b;
            if (u < window / 2) {
                half1 += a;
                half2 += b;
            }
            ++s.terms;
        }
    }
    s.s1 = sum1 / kPi2Over6;
    s.s2 = sum2 / kPi2Over6;
    s.s1_half = half1 / kPi2Over6;
    s.s2_half = half2 / kPi2Over6;

    auto& r = out.report;
    r.check = "dilog";
    r.family = d;
    const double e1 = static_cast<double>(expected_s1(d)), e2 = static_cast<double>(expected_s2(d));
    const double err1 = std::abs(s.s1 - e1) / e1, err2 = std::abs(s.s2 - e2) / e2;
    const double count = static_cast<double>(s.terms);
    const double err_count = std::abs(s.s1 + s.s2 - count) / count;
    r.residual = std::max({err1, err2, err_count});
    r.pass = r.residual < tol;
    r.details = {{"window", window},
                 {"terms", s.terms},
                 {"s1", s.s1},
                 {"s2", s.s2},
                 {"s1_expected", expected_s1(d)},
                 {"s2_expected", expected_s2(d)},
                 {"s1_half_window", s.s1_half},
                 {"s2_half_window", s.s2_half},
                 {"tolerance", tol}};
    if (d.m == 1 && d.family == Family::SG) r.details["s2_average"] = s.s2 / window;
    if (d.m == 1 && d.family == Family::RSG && d.n == 4) r.details["c_eff"] = s.s2 / 14.0;
    if (!r.pass)
        r.witnesses.push_back({{"s1", s.s1}, {"s2", s.s2}, {"s1_expected", e1}, {"s2_expected", e2}});
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace ycluster
