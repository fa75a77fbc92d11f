#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "ycluster/errors.hpp"
#include "ycluster/quiver.hpp"
#include "ycluster/seed_engine.hpp"

using namespace ycluster;

namespace {

ExchangeMatrix from_arrows(std::size_t n, std::initializer_list<std::pair<int, int>> arrows) {
    ExchangeMatrix b(n);
    for (auto [f, t] : arrows) b.add_arrow(static_cast<std::size_t>(f), static_cast<std::size_t>(t));
    return b;
}

bool isomorphic_brute(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a(i, j) == b(p[i], p[j]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST(Matrix, RankTwoReversal) {
    auto b = from_arrows(2, {{0, 1}});
    EXPECT_EQ(mutate_matrix(b, 0), from_arrows(2, {{1, 0}}));
}

TEST(Matrix, TriangleMutation) {
    // 0 -> 1 -> 2: mutating at 1 adds 0 -> 2 and reverses both arrows.
    auto b = from_arrows(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(mutate_matrix(b, 1), from_arrows(3, {{1, 0}, {2, 1}, {0, 2}}));
}

TEST(Matrix, InvolutionRandom) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> w(-2, 2);
    for (int it = 0; it < 200; ++it) {
        ExchangeMatrix b(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) b.set_arrow(i, j, w(rng));
        for (std::size_t k = 0; k < 5; ++k) {
            auto c = mutate_matrix(b, k);
            EXPECT_TRUE(c.is_skew_symmetric());
            EXPECT_EQ(mutate_matrix(c, k), b);
        }
    }
}

TEST(Matrix, InvalidVertex) {
    EXPECT_THROW(mutate_matrix(ExchangeMatrix(3), 3), InvalidVertex);
    auto q = build_sg_quiver(1, 4);
    EXPECT_THROW(mutate_matrix(q, VertexId{9, 9}), InvalidVertex);
}

TEST(Builder, VertexCounts) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 4; n <= 10; ++n) {
            FamilyDescriptor sg{Family::SG, m, n}, rsg{Family::RSG, m, n};
            EXPECT_EQ(static_cast<int>(build_quiver(sg).size()), m * n - m + n);
            EXPECT_EQ(static_cast<int>(build_quiver(rsg).size()), m * n - m + n - 3);
            EXPECT_TRUE(build_quiver(sg).matrix().is_skew_symmetric());
        }
    EXPECT_EQ(build_sg_quiver(1, 8).size(), 15u);
    EXPECT_EQ(build_sg_quiver(4, 7).size(), 31u);
    EXPECT_EQ(build_rsg_quiver(4, 7).size(), 28u);
}

TEST(Builder, DomainErrors) {
    EXPECT_THROW(build_sg_quiver(1, 3), DomainError);
    EXPECT_THROW(build_rsg_quiver(0, 5), DomainError);
}

TEST(Builder, LeftmostParity) {
    for (int m = 1; m <= 4; ++m) {
        auto q = build_sg_quiver(m, 6);
        const auto& v = q.vertices()[q.index_of(VertexId{1, 1})];
        EXPECT_EQ(v.parity, m % 2 == 0 ? Parity::Minus : Parity::Plus) << "m=" << m;
        EXPECT_EQ(v.shape, Shape::Open);
    }
}

TEST(Builder, SgSixNeighbourOfCorner) {
    // In Q(0) for n = 6 the only neighbour of (1,1) is (6,2).
    auto q = build_sg_quiver(1, 6);
    const auto i = q.index_of(VertexId{1, 1});
    for (std::size_t j = 0; j < q.size(); ++j) {
        bool expect = q.vertices()[j].id == VertexId{6, 2};
        EXPECT_EQ(q.matrix().adjacent(i, j), expect) << to_string(q.vertices()[j].id);
    }
}

TEST(Builder, RsgSixExtraArrow) {
    auto q = build_rsg_quiver(1, 6);
    EXPECT_EQ(q.size(), 8u);
    EXPECT_EQ(q.arrows(VertexId{4, 1}, VertexId{3, 1}), 1);
}

TEST(Builder, RsgSixNeedsExtraArrow) {
    // Without the extra arrow the two middle columns become adjacent in Q(2)
    // and the schedule is no longer consistent.
    auto q = build_rsg_quiver(1, 6);
    auto b = q.matrix();
    b.set_arrow(q.index_of(VertexId{4, 1}), q.index_of(VertexId{3, 1}), 0);
    auto bad = q.with_matrix(b);
    auto sched = make_schedule(FamilyDescriptor{Family::RSG, 1, 6});
    LabeledQuiver cur = bad;
    for (int u = 0; u < 2; ++u)
        for (auto v : sched.at(u).vertices) cur = mutate_matrix(cur, v);
    EXPECT_EQ(cur.arrows(VertexId{3, 1}, VertexId{4, 1}), 1);
    EXPECT_ANY_THROW(run(tropical_seed(bad), sched, 10));
}

// The builders must agree with the matrix reconstructed from the Y-system
// relations and the mutation times alone.
TEST(Builder, MatchesReconstructionOracle) {
    for (bool sg : {true, false})
        for (int m = 1; m <= 4; ++m)
            for (int n = 4; n <= 10; ++n) {
                auto f = oracle::family(sg, m, n);
                auto B = oracle::reconstruct(f);
                auto q = sg ? build_sg_quiver(m, n) : build_rsg_quiver(m, n);
                ASSERT_EQ(q.size(), f.verts.size());
                for (std::size_t a = 0; a < q.size(); ++a) {
                    ASSERT_EQ(q.vertices()[a].id, (VertexId{f.verts[a].i, f.verts[a].ip}));
                    EXPECT_EQ(q.vertices()[a].parity == Parity::Plus, static_cast<bool>(f.plus[a]));
                    for (std::size_t b = 0; b < q.size(); ++b)
                        ASSERT_EQ(q.matrix()(a, b), B[a][b]) << (sg ? "sg" : "rsg") << "(" << m << "," << n << ") "
                                                             << to_string(q.vertices()[a].id) << " "
                                                             << to_string(q.vertices()[b].id);
                }
            }
}

TEST(Canonical, Examples) {
    EXPECT_EQ(canonical_form(from_arrows(2, {{0, 1}})), canonical_form(from_arrows(2, {{1, 0}})));
    EXPECT_NE(canonical_form(from_arrows(2, {{0, 1}})), canonical_form(from_arrows(3, {{0, 1}, {1, 2}})));
    EXPECT_NE(canonical_form(from_arrows(3, {{0, 1}, {1, 2}})), canonical_form(from_arrows(3, {{0, 1}, {2, 1}})));
}

TEST(Canonical, ExhaustiveFourVertexOrientations) {
    // every orientation (and absence) of each of the 6 possible edges
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<ExchangeMatrix> all;
    for (int code = 0; code < 729; ++code) {
        ExchangeMatrix b(4);
        int c = code;
        for (auto [i, j] : edges) {
            int s = c % 3 - 1;
            c /= 3;
            b.set_arrow(static_cast<std::size_t>(i), static_cast<std::size_t>(j), s);
        }
        all.push_back(b);
    }
    std::vector<std::string> forms;
    for (const auto& b : all) forms.push_back(canonical_form(b));
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int it = 0; it < 3000; ++it) {
        auto a = pick(rng), b = pick(rng);
        EXPECT_EQ(forms[a] == forms[b], isomorphic_brute(all[a], all[b]));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    EXPECT_EQ(forms.size(), 42u);  // directed graphs on 4 vertices without 2-cycles
}

TEST(Canonical, InvariantUnderRelabeling) {
    auto q = build_sg_quiver(2, 5);
    std::vector<std::size_t> p(q.size());
    std::iota(p.begin(), p.end(), 0);
    std::mt19937 rng(9);
    for (int it = 0; it < 5; ++it) {
        std::shuffle(p.begin(), p.end(), rng);
        ExchangeMatrix b(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j)
                if (q.matrix()(i, j) > 0) b.add_arrow(p[i], p[j], q.matrix()(i, j));
        EXPECT_EQ(canonical_form(b), canonical_form(q.matrix()));
    }
}

TEST(Dynkin, Examples) {
    auto path = from_arrows(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}});
    ASSERT_TRUE(dynkin_type(path));
    EXPECT_EQ(*dynkin_type(path), (DynkinType{'A', 5}));
    auto star = from_arrows(4, {{0, 1}, {2, 1}, {1, 3}});
    ASSERT_TRUE(dynkin_type(star));
    EXPECT_EQ(*dynkin_type(star), (DynkinType{'D', 4}));
    EXPECT_FALSE(dynkin_type(from_arrows(3, {{0, 1}, {1, 2}, {2, 0}})));
    ExchangeMatrix dbl(2);
    dbl.add_arrow(0, 1, 2);
    EXPECT_FALSE(dynkin_type(dbl));
    EXPECT_EQ(to_string(DynkinType{'D', 7}), "D7");
}

TEST(Dynkin, DLongTail) {
    // fork at one end, long tail: D6
    auto d6 = from_arrows(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    ASSERT_TRUE(dynkin_type(d6));
    EXPECT_EQ(*dynkin_type(d6), (DynkinType{'D', 6}));
    // E6: branch point with arms of lengths 2, 2, 1
    EXPECT_FALSE(dynkin_type(from_arrows(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}})));
}

TEST(QuiverJson, RoundTripBitExact) {
    for (auto d : {FamilyDescriptor{Family::SG, 1, 4}, FamilyDescriptor{Family::RSG, 3, 7}}) {
        auto q = build_quiver(d);
        auto s = to_json(q).dump();
        auto back = quiver_from_json(nlohmann::json::parse(s));
        EXPECT_EQ(back, q);
        EXPECT_EQ(to_json(back).dump(), s);
    }
}

TEST(QuiverJson, RejectsTwoCycles) {
    auto j = to_json(build_sg_quiver(1, 4));
    auto a = j["arrows"][0];
    std::swap(a["from"], a["to"]);
    j["arrows"].push_back(a);
    EXPECT_THROW(quiver_from_json(j), Error);
}
