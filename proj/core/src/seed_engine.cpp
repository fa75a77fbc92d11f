#include "ycluster/seed_engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ycluster/errors.hpp"

namespace ycluster {

namespace {

int pos_mod(int a, int p) { return ((a % p) + p) % p; }

// Tropical monomial as a monomial in the y block of a principal ring.
LaurentPoly y_monomial(const LabeledQuiver& q, const TropicalMonomial& t, std::size_t nvars) {
    Exponent e(nvars, 0);
    const std::size_t base = q.size();
    for (const auto& [v, x] : t.exponents()) {
        if (!x.fits_sint_p()) throw DomainError("tropical exponent too large for a cluster ring");
        e[base + q.index_of(v)] = static_cast<int>(x.get_si());
    }
    return LaurentPoly::monomial(std::move(e));
}

std::vector<Coefficient> mutate_coefficients(const ExchangeMatrix& b, const std::vector<Coefficient>& y,
                                             std::size_t k) {
    const Coefficient& yk = y[k];
    const Coefficient onep = sf_add(sf_one(kind_of(yk)), yk);
    const Coefficient up = sf_mul(yk, sf_inv(onep));  // y_k / (1 + y_k)
    std::vector<Coefficient> out = y;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i == k) {
            out[i] = sf_inv(yk);
            continue;
        }
        int bki = b(k, i);
        if (bki > 0)
            out[i] = sf_mul(y[i], sf_pow(up, bki));
        else if (bki < 0)
            out[i] = sf_mul(y[i], sf_pow(onep, -bki));
    }
    return out;
}

bool coefficients_match(const std::vector<Coefficient>& a, const std::vector<Coefficient>& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (auto* ra = std::get_if<PositiveReal>(&a[i])) {
            double x = ra->value(), z = std::get<PositiveReal>(b[i]).value();
            if (std::abs(x - z) > tol * std::max(std::abs(x), std::abs(z))) return false;
        } else if (!(a[i] == b[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace

Seed tropical_seed(const LabeledQuiver& q) {
    Seed s{q, {}, std::nullopt};
    for (const auto& v : q.vertices()) s.y.push_back(TropicalMonomial::generator(v.id));
    return s;
}

Seed numeric_seed(const LabeledQuiver& q, std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> dist(0.5, 2.0);
    std::vector<double> vals(q.size());
    for (auto& v : vals) v = dist(rng);
    return numeric_seed(q, vals);
}

Seed numeric_seed(const LabeledQuiver& q, const std::vector<double>& values) {
    if (values.size() != q.size()) throw DomainError("numeric seed needs one value per vertex");
    Seed s{q, {}, std::nullopt};
    for (double v : values) s.y.push_back(PositiveReal(v));
    return s;
}

Seed symbolic_seed(const LabeledQuiver& q, bool principal) {
    const std::size_t n = q.size();
    const std::size_t nv = principal ? 2 * n : n;
    Seed s{q, {}, std::vector<LaurentPoly>{}};
    for (std::size_t i = 0; i < n; ++i) {
        s.x->push_back(LaurentPoly::variable(nv, i));
        if (principal)
            s.y.push_back(TropicalMonomial::generator(q.vertices()[i].id));
        else
            s.y.push_back(TrivialElement{});
    }
    return s;
}

bool seed_is_principal(const Seed& s) {
    return s.x && !s.x->empty() && s.x->front().nvars() == 2 * s.quiver.size();
}

Seed mutate_seed(const Seed& s, std::size_t k) {
    const auto& b = s.quiver.matrix();
    if (k >= b.size()) throw InvalidVertex("mutation index out of range");
    Seed r{s.quiver.with_matrix(mutate_matrix(b, k)), mutate_coefficients(b, s.y, k), s.x};
    if (s.x) {
        const auto& x = *s.x;
        const std::size_t nv = x[k].nvars();
        const Coefficient& yk = s.y[k];
        LaurentPoly plus = LaurentPoly::constant(nv, 1), minus = LaurentPoly::constant(nv, 1);
        LaurentPoly den = x[k];
        if (auto* t = std::get_if<TropicalMonomial>(&yk)) {
            plus = y_monomial(s.quiver, *t, nv);
            den = lp_mul(den, y_monomial(s.quiver, trop_add(TropicalMonomial{}, *t), nv));
        } else if (std::holds_alternative<PositiveReal>(yk)) {
            throw DomainError("symbolic clusters need trivial or tropical coefficients");
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            int bjk = b(j, k);
            if (bjk > 0) plus = lp_mul(plus, lp_pow(x[j], static_cast<unsigned>(bjk)));
            if (bjk < 0) minus = lp_mul(minus, lp_pow(x[j], static_cast<unsigned>(-bjk)));
        }
        (*r.x)[k] = lp_exact_div(lp_add(plus, minus), den);
    }
    return r;
}

Seed mutate_seed(const Seed& s, VertexId k) { return mutate_seed(s, s.quiver.index_of(k)); }

const CompositeStep& MutationSchedule::at(int u) const {
    return steps[static_cast<std::size_t>(pos_mod(u, period_u))];
}

std::vector<int> mutation_residues(const FamilyDescriptor& d, const VertexInfo& v) {
    const int p = d.step_period();
    if (v.shape == Shape::Open) {
        int t = 2 * (v.id.i - 1) + (v.parity == Parity::Plus ? 0 : d.n - 1);
        return {pos_mod(t, p)};
    }
    std::vector<int> out;
    for (int t = v.parity == Parity::Plus ? 0 : 1; t < p; t += 2) out.push_back(t);
    return out;
}

bool is_mutation_point(const FamilyDescriptor& d, const VertexInfo& v, int u) {
    auto r = mutation_residues(d, v);
    return std::find(r.begin(), r.end(), pos_mod(u, d.step_period())) != r.end();
}

MutationSchedule make_schedule(const FamilyDescriptor& d) {
    d.validate();
    const LabeledQuiver q = build_quiver(d);
    MutationSchedule s{d, {}, d.step_period()};
    for (int t = 0; t < s.period_u; ++t) {
        CompositeStep step{t, {}};
        for (const auto& v : q.vertices())
            if (is_mutation_point(d, v, t)) step.vertices.push_back(v.id);
        s.steps.push_back(std::move(step));
    }
    return s;
}

MutationSchedule make_schedule(Family f, int m, int n) { return make_schedule(FamilyDescriptor{f, m, n}); }

int duration(const FamilyDescriptor& d, int i) {
    if (i < 1 || i > d.layers()) throw DomainError("layer index out of range: " + std::to_string(i));
    return i <= d.m ? d.n - 1 : 1;
}

int layer_parity(const FamilyDescriptor& d, int i) {
    if (i < 1 || i > d.layers()) throw DomainError("layer index out of range: " + std::to_string(i));
    if (i <= d.m) return (i - d.m) % 2 == 0 ? 0 : (d.n - 1) % 2;
    int s = std::min(i - d.m + 1, d.n);
    return s % 2 == 1 ? 0 : 1;
}

bool is_y_point(const FamilyDescriptor& d, int i, int u) { return pos_mod(u, 2) == layer_parity(d, i); }
bool is_x_point(const FamilyDescriptor& d, int i, int u) { return is_y_point(d, i, u + duration(d, i)); }

MutationPoint label_g_prime(const FamilyDescriptor& d, int i, int u) {
    if (!is_y_point(d, i, u))
        throw ParityError("(" + std::to_string(i) + "," + std::to_string(u) + ") is not a coefficient point");
    if (i > d.m) return {{d.n, i}, u};
    const int p = d.step_period();
    int r = pos_mod(u, p);
    bool plus = (i - d.m) % 2 == 0;
    int c = (plus ? r : pos_mod(r - (d.n - 1), p)) / 2 + 1;
    return {{c, i}, u};
}

MutationPoint label_g(const FamilyDescriptor& d, int i, int u) {
    if (!is_x_point(d, i, u))
        throw ParityError("(" + std::to_string(i) + "," + std::to_string(u) + ") is not a cluster point");
    return label_g_prime(d, i, u + duration(d, i));
}

std::pair<int, int> label_g_prime_inverse(const FamilyDescriptor& d, const MutationPoint& p) {
    const int i = p.vertex.ip;
    bool valid = i >= 1 && i <= d.layers() && (i > d.m ? p.vertex.i == d.n : p.vertex.i >= 1 && p.vertex.i < d.n);
    if (!valid || !is_y_point(d, i, p.u) || !(label_g_prime(d, i, p.u) == p))
        throw ParityError(to_string(p.vertex) + " is not mutated at u = " + std::to_string(p.u));
    return {i, p.u};
}

std::pair<int, int> label_g_inverse(const FamilyDescriptor& d, const MutationPoint& p) {
    auto [i, u] = label_g_prime_inverse(d, p);
    return {i, u - duration(d, i)};
}

VertexId PermutationMaps::sigma(VertexId v, int p) const {
    if (v.i >= family.n) return v;
    return {pos_mod(v.i - 1 + p, family.n - 1) + 1, v.ip};
}

VertexId PermutationMaps::tau(VertexId v) const {
    if (v.i < family.n) return sigma(v, 1);
    return family.big_n() % 2 == 1 ? omega(v) : v;
}

VertexId PermutationMaps::tau_inverse(VertexId v) const {
    if (v.i < family.n) return sigma(v, -1);
    return family.big_n() % 2 == 1 ? omega(v) : v;
}

int PermutationMaps::omega(int i) const {
    if (family.family != Family::SG) return i;
    const int a = family.m + family.n - 1, b = family.m + family.n;
    return i == a ? b : i == b ? a : i;
}

VertexId PermutationMaps::omega(VertexId v) const {
    if (v.i != family.n) return v;
    return {v.i, omega(v.ip)};
}

nlohmann::json PermutationMaps::to_json() const {
    const LabeledQuiver q = build_quiver(family);
    nlohmann::json sig = nlohmann::json::object(), ta = nlohmann::json::object(), om = nlohmann::json::object();
    for (const auto& v : q.vertices()) {
        sig[to_string(v.id)] = to_string(sigma(v.id));
        ta[to_string(v.id)] = to_string(tau(v.id));
    }
    for (int i = 1; i <= family.layers(); ++i) om[std::to_string(i)] = omega(i);
    return {{"sigma", sig}, {"tau", ta}, {"omega", om}};
}

PermutationMaps permutation_maps(const FamilyDescriptor& d) {
    d.validate();
    return PermutationMaps{d};
}

LabeledQuiver apply_sigma(const LabeledQuiver& q, int p) {
    // sigma only needs n; recover it from the filled vertices
    int n = 0;
    for (const auto& v : q.vertices())
        if (v.shape == Shape::Filled) n = v.id.i;
    if (n == 0) throw DomainError("quiver has no filled vertices");
    PermutationMaps maps{FamilyDescriptor{Family::SG, 1, n}};
    const auto& b = q.matrix();
    ExchangeMatrix c(b.size());
    std::vector<std::size_t> img(q.size());
    for (std::size_t a = 0; a < q.size(); ++a) img[a] = q.index_of(maps.sigma(q.vertices()[a].id, p));
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t e = a + 1; e < q.size(); ++e) c.set_arrow(img[a], img[e], b(a, e));
    return q.with_matrix(std::move(c));
}

bool Trajectory::has_y(int i, int u) const {
    return i >= 1 && i <= family.layers() && is_y_point(family, i, u) && u >= 0 && u <= u_max();
}

const Coefficient& Trajectory::y_tilde(int i, int u) const {
    MutationPoint p = label_g_prime(family, i, u);
    if (u < 0 || u > u_max())
        throw InsufficientLength("y~ at u = " + std::to_string(u) + " outside the recorded range");
    return snapshots[static_cast<std::size_t>(u)].y[initial.index_of(p.vertex)];
}

bool Trajectory::has_x(int i, int u) const {
    if (!symbolic || i < 1 || i > family.layers() || !is_x_point(family, i, u)) return false;
    int t = u + duration(family, i);
    return t >= 0 && t <= u_max();
}

const LaurentPoly& Trajectory::x_tilde(int i, int u) const {
    if (!symbolic) throw MissingSymbolicRun("trajectory has no cluster variables");
    MutationPoint p = label_g(family, i, u);
    if (p.u < 0 || p.u > u_max())
        throw InsufficientLength("x~ at u = " + std::to_string(u) + " outside the recorded range");
    return (*snapshots[static_cast<std::size_t>(p.u)].x)[initial.index_of(p.vertex)];
}

Trajectory run(const Seed& s0, const MutationSchedule& sched, int u_max, const RunOptions& opts) {
    if (u_max < 0) throw DomainError("u_max must be non-negative");
    if (s0.y.size() != s0.quiver.size() || (s0.x && s0.x->size() != s0.quiver.size()))
        throw DomainError("seed components have mismatched sizes");

    Trajectory traj;
    traj.family = sched.family;
    traj.initial = s0.quiver;
    traj.schedule = sched;
    traj.kind = s0.y.empty() ? SemifieldKind::Trivial : kind_of(s0.y.front());
    traj.symbolic = s0.x.has_value();
    traj.principal = seed_is_principal(s0);
    traj.snapshots.reserve(static_cast<std::size_t>(u_max) + 1);
    traj.snapshots.push_back({s0.y, s0.x});

    std::vector<std::vector<std::size_t>> step_index;
    for (const auto& step : sched.steps) {
        std::vector<std::size_t> idx;
        for (const auto& v : step.vertices) idx.push_back(s0.quiver.index_of(v));
        step_index.push_back(std::move(idx));
    }

    const std::size_t div_before = lp_division_count();
    Seed s = s0;
    for (int u = 0; u < u_max; ++u) {
        const auto& idx = step_index[static_cast<std::size_t>(pos_mod(u, sched.period_u))];
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                ++traj.diagnostics.adjacency_checks;
                if (s.quiver.matrix().adjacent(idx[a], idx[b]))
                    throw AdjacencyViolation("adjacent vertices " + to_string(s.quiver.vertices()[idx[a]].id) +
                                             " and " + to_string(s.quiver.vertices()[idx[b]].id) +
                                             " share step u = " + std::to_string(u));
            }
        for (std::size_t k : idx) {
            Seed next = mutate_seed(s, k);
            if (opts.check_involution) {
                ++traj.diagnostics.involution_checks;
                auto back_b = mutate_matrix(next.quiver.matrix(), k);
                auto back_y = mutate_coefficients(next.quiver.matrix(), next.y, k);
                if (!(back_b == s.quiver.matrix()) || !coefficients_match(back_y, s.y, opts.involution_tol))
                    throw InvolutionViolation("double mutation at " + to_string(s.quiver.vertices()[k].id) +
                                              " did not restore the seed");
            }
            s = std::move(next);
            ++traj.diagnostics.mutations;
        }
        traj.snapshots.push_back({s.y, s.x});
    }
    traj.diagnostics.exact_divisions = lp_division_count() - div_before;
    return traj;
}

LaurentPoly f_polynomial(const Trajectory& traj, int i, int u) {
    if (!traj.symbolic || !traj.principal)
        throw MissingSymbolicRun("F-polynomials need a principal-coefficient symbolic run");
    std::vector<std::size_t> xs(traj.initial.size());
    for (std::size_t v = 0; v < xs.size(); ++v) xs[v] = v;
    return lp_specialize_ones(traj.x_tilde(i, u), xs);
}

nlohmann::json to_json(const Trajectory& traj, bool include_clusters) {
    const auto& d = traj.family;
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : traj.schedule.steps) {
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : st.vertices) vs.push_back(to_string(v));
        steps.push_back({{"t", st.t}, {"vertices", vs}});
    }
    nlohmann::json ys = nlohmann::json::array();
    for (int u = 0; u <= traj.u_max(); ++u) {
        nlohmann::json vals = nlohmann::json::object();
        for (int i = 1; i <= d.layers(); ++i)
            if (traj.has_y(i, u)) vals[std::to_string(i)] = to_json(traj.y_tilde(i, u));
        ys.push_back({{"u", u}, {"values", vals}});
    }
    nlohmann::json out = {{"family", to_string(d.family)},
                          {"m", d.m},
                          {"n", d.n},
                          {"semifield", to_string(traj.kind)},
                          {"symbolic", traj.symbolic},
                          {"principal", traj.principal},
                          {"u_max", traj.u_max()},
                          {"schedule", {{"period_u", traj.schedule.period_u}, {"steps", steps}}},
                          {"permutations", permutation_maps(d).to_json()},
                          {"y", ys}};
    if (traj.symbolic && include_clusters) {
        nlohmann::json xs = nlohmann::json::array();
        const int dmax = d.n - 1;
        for (int u = -dmax; u <= traj.u_max(); ++u) {
            nlohmann::json vals = nlohmann::json::object();
            for (int i = 1; i <= d.layers(); ++i)
                if (traj.has_x(i, u)) vals[std::to_string(i)] = to_json(traj.x_tilde(i, u));
            if (!vals.empty()) xs.push_back({{"u", u}, {"values", vals}});
        }
        out["x"] = xs;
    }
    return out;
}

}  // namespace ycluster
