#include "ycluster/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

#include "ycluster/errors.hpp"

namespace ycluster {

void ExchangeMatrix::set_arrow(std::size_t i, std::size_t j, int v) {
    if (i >= n_ || j >= n_) throw InvalidVertex("matrix index out of range");
    if (i == j && v != 0) throw DomainError("loops are not allowed");
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = -v;
}

void ExchangeMatrix::add_arrow(std::size_t from, std::size_t to, int mult) {
    set_arrow(from, to, (*this)(from, to) + mult);
}

bool ExchangeMatrix::is_skew_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
    const std::size_t n = b.size();
    if (k >= n) throw InvalidVertex("mutation index " + std::to_string(k) + " out of range");
    ExchangeMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            int v;
            if (i == k || j == k) {
                v = -b(i, j);
            } else {
                int bik = b(i, k), bkj = b(k, j);
                v = b(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
            }
            r.set_arrow(i, j, v);
        }
    }
    return r;
}

LabeledQuiver::LabeledQuiver(std::vector<VertexInfo> vertices, ExchangeMatrix b)
    : vertices_(std::move(vertices)), b_(std::move(b)) {
    if (b_.size() != vertices_.size()) throw DomainError("matrix size does not match vertex count");
    if (!b_.is_skew_symmetric()) throw DomainError("exchange matrix is not skew-symmetric");
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
            if (vertices_[i].id == vertices_[j].id)
                throw DomainError("duplicate vertex " + to_string(vertices_[i].id));
}

std::size_t LabeledQuiver::index_of(VertexId v) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == v) return i;
    throw InvalidVertex("no vertex " + to_string(v));
}

bool LabeledQuiver::contains(VertexId v) const {
    return std::any_of(vertices_.begin(), vertices_.end(), [&](const VertexInfo& x) { return x.id == v; });
}

LabeledQuiver LabeledQuiver::with_matrix(ExchangeMatrix b) const { return LabeledQuiver(vertices_, std::move(b)); }

LabeledQuiver mutate_matrix(const LabeledQuiver& q, VertexId k) {
    return q.with_matrix(mutate_matrix(q.matrix(), q.index_of(k)));
}

namespace {

// Filled vertices are addressed by slot s = i' - m + 1.  In SG the two fork
// tips (n, m+n-1) and (n, m+n) both sit in slot n.
class Builder {
public:
    Builder(Family fam, int m, int n) : fam_(fam), m_(m), n_(n) {
        FamilyDescriptor{fam, m, n}.validate();
        for (int c = 1; c <= n - 1; ++c)
            for (int ip = 1; ip <= m; ++ip)
                verts_.push_back({{c, ip}, Shape::Open, (ip - m) % 2 == 0 ? Parity::Plus : Parity::Minus});
        const int filled = fam == Family::SG ? n : n - 3;
        for (int k = 1; k <= filled; ++k) {
            int s = std::min(k + 1, n);
            verts_.push_back({{n, m + k}, Shape::Filled, s % 2 == 1 ? Parity::Plus : Parity::Minus});
        }
        b_ = ExchangeMatrix(verts_.size());
    }

    std::size_t open(int c, int ip) const { return static_cast<std::size_t>((c - 1) * m_ + ip - 1); }
    std::size_t filled(int k) const { return static_cast<std::size_t>(m_ * (n_ - 1) + k - 1); }

    std::vector<std::size_t> slot(int s) const {
        if (fam_ == Family::SG && s == n_) return {filled(n_ - 1), filled(n_)};
        return {filled(s - 1)};
    }

    void arrow(std::size_t from, std::size_t to) { b_.add_arrow(from, to); }
    void to_slot(std::size_t from, int s) {
        for (auto v : slot(s)) arrow(from, v);
    }
    void from_slot(int s, std::size_t to) {
        for (auto v : slot(s)) arrow(v, to);
    }

    // Filled part: bipartite, plus vertices are sources.
    void filled_edges() {
        auto edge = [&](std::size_t a, std::size_t b) {
            if (verts_[a].parity == Parity::Plus)
                arrow(a, b);
            else
                arrow(b, a);
        };
        if (fam_ == Family::SG) {
            for (int k = 1; k <= n_ - 2; ++k) edge(filled(k), filled(k + 1));
            edge(filled(n_ - 2), filled(n_));
        } else {
            for (int k = 1; k + 1 <= n_ - 3; ++k) edge(filled(k), filled(k + 1));
        }
    }

    // Within a column the minus vertices are sources in the left half and
    // sinks in the right half.
    void column_edges() {
        for (int c = 1; c <= n_ - 1; ++c) {
            bool minus_source = c <= n_ / 2;
            for (int ip = 1; ip < m_; ++ip) {
                std::size_t a = open(c, ip), b = open(c, ip + 1);
                std::size_t minus = verts_[a].parity == Parity::Minus ? a : b;
                std::size_t plus = minus == a ? b : a;
                if (minus_source)
                    arrow(minus, plus);
                else
                    arrow(plus, minus);
            }
        }
    }

    void sg_inner(int c) {
        std::size_t v = open(c, m_);
        if (2 * c <= n_) {
            if (c >= 2) to_slot(v, 2 * c - 1);
            from_slot(2 * c, v);
        } else {
            int a = n_ - c;
            from_slot(2 * a, v);
            to_slot(v, 2 * a + 1);
        }
    }

    LabeledQuiver finish() { return LabeledQuiver(verts_, b_); }

    Family fam_;
    int m_, n_;
    std::vector<VertexInfo> verts_;
    ExchangeMatrix b_;
};

}  // namespace

LabeledQuiver build_sg_quiver(int m, int n) {
    Builder bld(Family::SG, m, n);
    bld.filled_edges();
    bld.column_edges();
    for (int c = 1; c <= n - 1; ++c) bld.sg_inner(c);
    return bld.finish();
}

LabeledQuiver build_rsg_quiver(int m, int n) {
    Builder bld(Family::RSG, m, n);
    bld.filled_edges();
    bld.column_edges();
    const int last = n - 2;  // highest remaining slot
    const int mid = n / 2;
    for (int c = 1; c <= n - 1; ++c) {
        if (c == mid)
            bld.to_slot(bld.open(c, m), last);
        else if (c == mid + 1)
            bld.from_slot(last, bld.open(c, m));
        else
            bld.sg_inner(c);
    }
    bld.arrow(bld.open(mid + 1, m), bld.open(mid, m));
    return bld.finish();
}

LabeledQuiver build_quiver(const FamilyDescriptor& d) {
    return d.family == Family::SG ? build_sg_quiver(d.m, d.n) : build_rsg_quiver(d.m, d.n);
}

std::string to_string(const DynkinType& t) { return std::string(1, t.family) + std::to_string(t.rank); }

std::optional<DynkinType> dynkin_type(const ExchangeMatrix& b) {
    const std::size_t n = b.size();
    if (n == 0) return std::nullopt;
    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int v = std::abs(b(i, j));
            if (v > 1) return std::nullopt;
            if (v == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edges;
            }
        }
    if (edges != n - 1) return std::nullopt;
    // connected + n-1 edges = tree
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!bfs.empty()) {
        auto v = bfs.front();
        bfs.pop();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached != n) return std::nullopt;

    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 3) return std::nullopt;
        if (adj[v].size() == 3) branch.push_back(v);
    }
    const int rank = static_cast<int>(n);
    if (branch.empty()) return DynkinType{'A', rank};
    if (branch.size() > 1) return std::nullopt;
    // D shape: at least two of the three arms are single leaves
    int leaves = 0;
    for (auto w : adj[branch[0]])
        if (adj[w].size() == 1) ++leaves;
    if (leaves >= 2) return DynkinType{'D', rank};
    return std::nullopt;
}

nlohmann::json to_json(const LabeledQuiver& q) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : q.vertices())
        verts.push_back({{"i", v.id.i},
                         {"ip", v.id.ip},
                         {"shape", v.shape == Shape::Open ? "o" : "b"},
                         {"parity", v.parity == Parity::Plus ? "+" : "-"}});
    nlohmann::json arrows = nlohmann::json::array();
    const auto& b = q.matrix();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b(i, j) > 0) arrows.push_back({{"from", i}, {"to", j}, {"mult", b(i, j)}});
    return {{"vertices", verts}, {"arrows", arrows}};
}

LabeledQuiver quiver_from_json(const nlohmann::json& j) {
    try {
        std::vector<VertexInfo> verts;
        for (const auto& v : j.at("vertices")) {
            VertexInfo info;
            info.id = {v.at("i").get<int>(), v.at("ip").get<int>()};
            auto shape = v.at("shape").get<std::string>();
            auto parity = v.at("parity").get<std::string>();
            if (shape != "o" && shape != "b") throw ParseError("shape must be \"o\" or \"b\"");
            if (parity != "+" && parity != "-") throw ParseError("parity must be \"+\" or \"-\"");
            info.shape = shape == "o" ? Shape::Open : Shape::Filled;
            info.parity = parity == "+" ? Parity::Plus : Parity::Minus;
            verts.push_back(info);
        }
        ExchangeMatrix b(verts.size());
        for (const auto& a : j.at("arrows")) {
            auto from = a.at("from").get<std::size_t>();
            auto to = a.at("to").get<std::size_t>();
            int mult = a.at("mult").get<int>();
            if (from >= verts.size() || to >= verts.size()) throw ParseError("arrow endpoint out of range");
            if (mult <= 0) throw ParseError("arrow multiplicity must be positive");
            if (b(from, to) != 0) throw ParseError("repeated or opposite arrow between the same vertices");
            b.set_arrow(from, to, mult);
        }
        return LabeledQuiver(std::move(verts), std::move(b));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("quiver JSON: ") + e.what());
    }
}

}  // namespace ycluster
