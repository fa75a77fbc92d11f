#include "ycluster/mutclass.hpp"

#include <chrono>
#include <cstdlib>
#include <deque>
#include <queue>
#include <unordered_set>

#include "ycluster/errors.hpp"

namespace ycluster {

namespace {

struct Node {
    ExchangeMatrix b;
    std::size_t parent;
    std::size_t via;  // vertex index mutated to get here
    int depth;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

std::vector<VertexId> path_to(const std::vector<Node>& nodes, std::size_t idx, const LabeledQuiver& q) {
    std::vector<VertexId> path;
    for (std::size_t at = idx; nodes[at].parent != kRoot; at = nodes[at].parent)
        path.push_back(q.vertices()[nodes[at].via].id);
    return {path.rbegin(), path.rend()};
}

long edge_count(const ExchangeMatrix& b) {
    long e = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) e += std::abs(b(i, j));
    return e;
}

// Shared driver: `breadth` pops in discovery order, otherwise by edge count.
ClassSearchResult search(const LabeledQuiver& q, std::size_t node_bound, bool breadth) {
    if (node_bound < 1) throw DomainError("node_bound must be >= 1");
    ClassSearchResult res;
    std::vector<Node> nodes;
    std::unordered_set<std::string> seen;
    nodes.push_back({q.matrix(), kRoot, 0, 0});
    seen.insert(canonical_form(q.matrix()));

    using Key = std::tuple<long, int, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> best;
    std::deque<std::size_t> fifo;
    auto push = [&](std::size_t idx) {
        if (breadth)
            fifo.push_back(idx);
        else
            best.emplace(edge_count(nodes[idx].b), nodes[idx].depth, idx);
    };
    push(0);

    while (breadth ? !fifo.empty() : !best.empty()) {
        std::size_t idx;
        if (breadth) {
            idx = fifo.front();
            fifo.pop_front();
        } else {
            idx = std::get<2>(best.top());
            best.pop();
        }
        if (auto t = dynkin_type(nodes[idx].b)) {
            res.type = t;
            res.path = path_to(nodes, idx, q);
            break;
        }
        if (seen.size() >= node_bound) {
            res.bound_hit = true;
            break;
        }
        for (std::size_t k = 0; k < q.size() && seen.size() < node_bound; ++k) {
            ExchangeMatrix nb = mutate_matrix(nodes[idx].b, k);
            if (!seen.insert(canonical_form(nb)).second) continue;
            nodes.push_back({std::move(nb), idx, k, nodes[idx].depth + 1});
            push(nodes.size() - 1);
        }
    }
    res.explored = seen.size();
    return res;
}

}  // namespace

nlohmann::json ClassSearchResult::to_json() const {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& v : path) p.push_back(ycluster::to_string(v));
    return {{"found", found()},
            {"type", type ? nlohmann::json(ycluster::to_string(*type)) : nlohmann::json(nullptr)},
            {"path", p},
            {"explored", explored},
            {"bound_hit", bound_hit}};
}

ClassSearchResult find_dynkin(const LabeledQuiver& q, std::size_t node_bound) { return search(q, node_bound, true); }

ClassSearchResult guided_reduction(const LabeledQuiver& q, std::size_t node_bound) {
    return search(q, node_bound, false);
}

LabeledQuiver replay(const LabeledQuiver& q, const std::vector<VertexId>& path) {
    LabeledQuiver r = q;
    for (const auto& v : path) r = mutate_matrix(r, v);
    return r;
}

LabeledQuiver apply_script(const ReductionScript& s) {
    LabeledQuiver q = build_quiver(s.source);
    for (std::size_t step = 0; step < s.steps.size(); ++step) {
        const auto& vs = s.steps[step];
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (q.arrows(vs[a], vs[b]) != 0)
                    throw AdjacencyViolation("script step " + std::to_string(step) + " mutates adjacent vertices");
        for (const auto& v : vs) q = mutate_matrix(q, v);
    }
    return q;
}

VerificationReport verify_script(const ReductionScript& s) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.check = "reduction-script";
    r.family = s.source;
    LabeledQuiver q = apply_script(s);
    auto t = dynkin_type(q);
    r.pass = t && *t == s.expected;
    r.residual = r.pass ? 0.0 : 1.0;
    r.details = {{"steps", s.steps.size()},
                 {"expected", to_string(s.expected)},
                 {"reached", t ? nlohmann::json(to_string(*t)) : nlohmann::json(nullptr)}};
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

nlohmann::json to_json(const ReductionScript& s) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : s.steps) {
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : st) vs.push_back(to_string(v));
        steps.push_back(vs);
    }
    return {{"family", to_string(s.source.family)},
            {"m", s.source.m},
            {"n", s.source.n},
            {"expected", to_string(s.expected)},
            {"note", s.note},
            {"steps", steps}};
}

ReductionScript script_from_json(const nlohmann::json& j) {
    try {
        ReductionScript s;
        s.source = {parse_family(j.at("family").get<std::string>()), j.at("m").get<int>(), j.at("n").get<int>()};
        s.source.validate();
        auto e = j.at("expected").get<std::string>();
        if (e.size() < 2 || (e[0] != 'A' && e[0] != 'D')) throw ParseError("bad expected type " + e);
        s.expected = {e[0], std::stoi(e.substr(1))};
        s.note = j.value("note", "");
        for (const auto& st : j.at("steps")) {
            std::vector<VertexId> vs;
            for (const auto& v : st) vs.push_back(parse_vertex_id(v.get<std::string>()));
            s.steps.push_back(std::move(vs));
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("reduction script JSON: ") + e.what());
    }
}

ReductionScript make_script(const FamilyDescriptor& d, const std::vector<VertexId>& path, DynkinType expected) {
    ReductionScript s{d, {}, expected, ""};
    for (const auto& v : path) s.steps.push_back({v});
    return s;
}

DynkinType expected_dynkin(const FamilyDescriptor& d) {
    return d.family == Family::SG ? DynkinType{'D', d.big_n()} : DynkinType{'A', d.big_n() - 3};
}

int coxeter_number(const DynkinType& t) { return t.family == 'A' ? t.rank + 1 : 2 * t.rank - 2; }

VerificationReport coxeter_crosscheck(const FamilyDescriptor& d) {
    d.validate();
    VerificationReport r;
    r.check = "coxeter";
    r.family = d;
    const int big = d.big_n(), n = d.n, m = d.m;
    const int half = d.half_window(), full = d.y_period();
    const int h = coxeter_number(expected_dynkin(d));
    bool fact2;
    int coxeter_side;
    bool columns;
    if (d.family == Family::SG) {
        coxeter_side = big % 2 == 0 ? h + 2 : 2 * (h + 2);
        fact2 = full == coxeter_side;
        // half period = h(D_n)+2 + m (h(D_{n-1})+2)
        columns = half == coxeter_number({'D', n}) + 2 + m * (coxeter_number({'D', n - 1}) + 2);
    } else {
        coxeter_side = 2 * (h + 2);
        fact2 = full == coxeter_side;
        columns = full == 2 * (coxeter_number({'A', n - 3}) + 2 + m * (coxeter_number({'A', n - 4}) + 2));
    }
    r.pass = fact2 && columns;
    r.residual = r.pass ? 0.0 : 1.0;
    r.details = {{"N", big},
                 {"type", to_string(expected_dynkin(d))},
                 {"coxeter_number", h},
                 {"period", full},
                 {"coxeter_period", coxeter_side},
                 {"fact2", fact2},
                 {"column_decomposition", columns}};
    if (!r.pass) r.witnesses.push_back({{"period", full}, {"coxeter_period", coxeter_side}});
    return r;
}

}  // namespace ycluster
