#include <algorithm>
#include <set>

#include "ycluster/errors.hpp"
#include "ycluster/ysystem_verify.hpp"

namespace ycluster {

namespace {

// Neighbours of layer i in the diagram X_{m,n}, restricted to the family's
// layers: a chain 1..m, the edge m - (m+1), a chain over the filled layers
// and, for SG, the fork m+n-1, m+n hanging off m+n-2.
std::vector<int> diagram_neighbours(const FamilyDescriptor& d, int i) {
    const int m = d.m, n = d.n, top = d.layers();
    std::set<int> out;
    if (i <= m) {
        if (i > 1) out.insert(i - 1);
        out.insert(i + 1);
    } else if (d.family == Family::SG && i >= m + n - 1) {
        out.insert(m + n - 2);
    } else {
        out.insert(i - 1);
        if (d.family == Family::SG && i == m + n - 2) {
            out.insert(m + n - 1);
            out.insert(m + n);
        } else {
            out.insert(i + 1);
        }
    }
    std::vector<int> r;
    for (int j : out)
        if (j >= 1 && j <= top) r.push_back(j);
    return r;
}

template <class F>
std::vector<F> merge(std::vector<F> fs) {
    std::sort(fs.begin(), fs.end());
    std::vector<F> out;
    for (const auto& f : fs) {
        if (!out.empty()) {
            F probe = out.back();
            probe.power = f.power;
            if (probe == f) {
                out.back().power += f.power;
                continue;
            }
        }
        out.push_back(f);
    }
    return out;
}

std::string offset_str(int o) {
    if (o == 0) return "u";
    return o > 0 ? "u+" + std::to_string(o) : "u" + std::to_string(o);
}

std::string term_str(const std::vector<TFactor>& fs) {
    if (fs.empty()) return "1";
    std::string s;
    for (const auto& f : fs) {
        s += "T" + std::to_string(f.j) + "(" + offset_str(f.offset) + ")";
        if (f.power != 1) s += "^" + std::to_string(f.power);
    }
    return s;
}

}  // namespace

YRelation normalized(YRelation r) {
    r.factors = merge(std::move(r.factors));
    return r;
}

TRelation normalized(TRelation r) {
    r.first = merge(std::move(r.first));
    r.second = merge(std::move(r.second));
    if (r.second < r.first) std::swap(r.first, r.second);
    return r;
}

std::string to_string(const YRelation& r) {
    std::string s = "Y" + std::to_string(r.i) + "(u-" + std::to_string(r.d) + ")Y" + std::to_string(r.i) + "(u+" +
                    std::to_string(r.d) + ") =";
    for (const auto& f : r.factors) {
        std::string arg = "Y" + std::to_string(f.j) + "(" + offset_str(f.offset) + ")";
        if (f.inverted)
            s += " (1+" + arg + "^-1)^-" + std::to_string(f.power);
        else
            s += " (1+" + arg + ")" + (f.power != 1 ? "^" + std::to_string(f.power) : "");
    }
    return s;
}

std::string to_string(const TRelation& r) {
    return "T" + std::to_string(r.i) + "(u-" + std::to_string(r.d) + ")T" + std::to_string(r.i) + "(u+" +
           std::to_string(r.d) + ") = " + term_str(r.first) + " + " + term_str(r.second);
}

YSystemFamily ysystem_family(const FamilyDescriptor& d) {
    d.validate();
    const int m = d.m, n = d.n, top = d.layers();
    const bool sg = d.family == Family::SG;
    const int chain_end = sg ? m + n - 2 : m + n - 3;  // last filled layer before the fork
    YSystemFamily fam{d, {}, {}, {}};
    for (int i = 1; i <= top; ++i) {
        const int di = duration(d, i);
        fam.d.push_back(di);
        YRelation y{i, di, {}};
        TRelation t{i, di, {}, {}};
        if (i < m) {
            for (int j : diagram_neighbours(d, i)) {
                y.factors.push_back({j, 0, 1, false});
                t.first.push_back({j, 0, 1});
            }
        } else if (i == m) {
            if (m > 1) y.factors.push_back({m - 1, 0, 1, false});
            for (int j = m + 1; j <= chain_end; ++j) {
                y.factors.push_back({j, -m - n + 1 + j, 1, false});
                y.factors.push_back({j, m + n - 1 - j, 1, false});
            }
            if (sg) {
                y.factors.push_back({m + n - 1, 0, 1, false});
                y.factors.push_back({m + n, 0, 1, false});
            } else {
                y.factors.push_back({top, 0, 1, true});
            }
            for (int j : diagram_neighbours(d, i)) t.first.push_back({j, 0, 1});
        } else {
            if (i == m + 1) y.factors.push_back({m, 0, 1, false});
            for (int j : diagram_neighbours(d, i))
                if (j > m) y.factors.push_back({j, 0, 1, true});

            const bool fork = sg && i >= m + n - 1;
            if (fork) {
                t.first.push_back({m, 0, 1});
                t.second.push_back({m + n - 2, 0, 1});
            } else {
                t.first.push_back({m, -m - n + 1 + i, 1});
                t.first.push_back({m, m + n - 1 - i, 1});
                for (int j : diagram_neighbours(d, i))
                    if (j > m) t.second.push_back({j, 0, 1});
                if (!sg && i == top) t.second.push_back({m, 0, 1});
            }
        }
        fam.y.push_back(normalized(std::move(y)));
        fam.t.push_back(normalized(std::move(t)));
    }
    return fam;
}

namespace {

// Exchange matrices at the start of each step of one period.
struct PeriodData {
    LabeledQuiver q;
    MutationSchedule sched;
    std::vector<ExchangeMatrix> b;
    std::vector<std::vector<std::size_t>> steps;
};

PeriodData period_data(const FamilyDescriptor& d) {
    PeriodData pd{build_quiver(d), make_schedule(d), {}, {}};
    ExchangeMatrix b = pd.q.matrix();
    for (const auto& st : pd.sched.steps) {
        std::vector<std::size_t> idx;
        for (const auto& v : st.vertices) idx.push_back(pd.q.index_of(v));
        pd.b.push_back(b);
        for (auto k : idx) b = mutate_matrix(b, k);
        pd.steps.push_back(std::move(idx));
    }
    if (!(b == pd.q.matrix())) throw DomainError("quiver is not periodic under the schedule");
    return pd;
}

int pmod(int a, int p) { return ((a % p) + p) % p; }

}  // namespace

std::vector<YInstance> derive_y_relations(const FamilyDescriptor& d) {
    d.validate();
    PeriodData pd = period_data(d);
    const int p = pd.sched.period_u;
    std::vector<YInstance> out;
    for (std::size_t j = 0; j < pd.q.size(); ++j) {
        const auto& vj = pd.q.vertices()[j];
        const int i = vj.id.ip, di = duration(d, i);
        for (int t0 : mutation_residues(d, vj)) {
            YRelation rel{i, di, {}};
            const int u = t0 + di;
            for (int s = t0 + 1; s < t0 + 2 * di; ++s) {
                const auto& b = pd.b[static_cast<std::size_t>(pmod(s, p))];
                for (auto k : pd.steps[static_cast<std::size_t>(pmod(s, p))]) {
                    int bkj = b(k, j);
                    if (bkj == 0) continue;
                    auto [l, v] = label_g_prime_inverse(d, {pd.q.vertices()[k].id, s});
                    if (bkj < 0)
                        rel.factors.push_back({l, v - u, -bkj, false});
                    else
                        rel.factors.push_back({l, v - u, bkj, true});
                }
            }
            out.push_back({u, normalized(std::move(rel))});
        }
    }
    return out;
}

std::vector<TInstance> derive_t_relations(const FamilyDescriptor& d) {
    d.validate();
    PeriodData pd = period_data(d);
    std::vector<TInstance> out;
    for (std::size_t j = 0; j < pd.q.size(); ++j) {
        const auto& vj = pd.q.vertices()[j];
        const int i = vj.id.ip, di = duration(d, i);
        for (int t0 : mutation_residues(d, vj)) {
            const auto& b = pd.b[static_cast<std::size_t>(t0)];
            TRelation rel{i, di, {}, {}};
            for (std::size_t k = 0; k < pd.q.size(); ++k) {
                int bkj = b(k, j);
                if (bkj == 0) continue;
                // x_k(t0) is the value recorded at k's next mutation point
                const auto& vk = pd.q.vertices()[k];
                int next = t0 + 1;
                while (!is_mutation_point(d, vk, next)) ++next;
                auto [l, v] = label_g_inverse(d, {vk.id, next});
                TFactor f{l, v - t0, std::abs(bkj)};
                (bkj > 0 ? rel.first : rel.second).push_back(f);
            }
            out.push_back({t0, normalized(std::move(rel))});
        }
    }
    return out;
}

}  // namespace ycluster
