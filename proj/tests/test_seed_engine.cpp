#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "ycluster/errors.hpp"
#include "ycluster/seed_engine.hpp"

using namespace ycluster;

namespace {

// A2: (1,1) -> (2,1)
LabeledQuiver a2() {
    ExchangeMatrix b(2);
    b.add_arrow(0, 1);
    return LabeledQuiver({{{1, 1}, Shape::Open, Parity::Plus}, {{2, 1}, Shape::Open, Parity::Minus}}, b);
}

LabeledQuiver random_quiver(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> w(-2, 2);
    ExchangeMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b.set_arrow(i, j, w(rng));
    std::vector<VertexInfo> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back({{static_cast<int>(i) + 1, 1}, Shape::Open, Parity::Plus});
    return LabeledQuiver(vs, b);
}

double val(const Coefficient& c) { return std::get<PositiveReal>(c).value(); }

}  // namespace

TEST(Mutation, A2TrivialExchange) {
    auto s = mutate_seed(symbolic_seed(a2(), false), VertexId{1, 1});
    auto x1 = LaurentPoly::variable(2, 0), x2 = LaurentPoly::variable(2, 1);
    EXPECT_EQ(s.x->at(0), lp_exact_div(x2 + LaurentPoly::constant(2, 1), x1));
    EXPECT_EQ(s.x->at(1), x2);
    EXPECT_EQ(s.quiver.arrows(VertexId{2, 1}, VertexId{1, 1}), 1);
}

TEST(Mutation, A2PrincipalFPolynomial) {
    auto s0 = symbolic_seed(a2(), true);
    EXPECT_TRUE(seed_is_principal(s0));
    EXPECT_EQ(lp_specialize_ones(s0.x->at(0), {0, 1}), LaurentPoly::constant(4, 1));
    auto s = mutate_seed(s0, VertexId{1, 1});
    auto f = lp_specialize_ones(s.x->at(0), {0, 1});
    EXPECT_EQ(f, LaurentPoly::constant(4, 1) + LaurentPoly::variable(4, 2));
}

TEST(Mutation, TropicalInvertsMutatedCoefficient) {
    std::mt19937 rng(1);
    for (int it = 0; it < 20; ++it) {
        auto q = random_quiver(rng, 4);
        auto s = tropical_seed(q);
        s = mutate_seed(s, std::size_t{1});
        for (std::size_t k = 0; k < 4; ++k) {
            auto t = mutate_seed(s, k);
            EXPECT_EQ(std::get<TropicalMonomial>(t.y[k]), trop_inv(std::get<TropicalMonomial>(s.y[k])));
        }
    }
}

TEST(Mutation, DoubleMutationIsIdentity) {
    std::mt19937 rng(2);
    for (int it = 0; it < 30; ++it) {
        auto q = random_quiver(rng, 4);
        auto s = symbolic_seed(q, true);
        // move away from the initial seed first
        s = mutate_seed(mutate_seed(s, std::size_t{0}), std::size_t{2});
        for (std::size_t k = 0; k < 4; ++k) {
            auto back = mutate_seed(mutate_seed(s, k), k);
            EXPECT_EQ(back.quiver, s.quiver);
            EXPECT_EQ(back.y, s.y);
            EXPECT_EQ(*back.x, *s.x);
        }
        auto num = numeric_seed(q, static_cast<std::uint64_t>(it));
        for (std::size_t k = 0; k < 4; ++k) {
            auto back = mutate_seed(mutate_seed(num, k), k);
            for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(val(back.y[i]) / val(num.y[i]), 1.0, 1e-12);
        }
    }
}

TEST(Mutation, NumericMatchesHandFormula) {
    auto s = numeric_seed(a2(), std::vector<double>{2.0, 3.0});
    auto t = mutate_seed(s, VertexId{1, 1});
    EXPECT_DOUBLE_EQ(val(t.y[0]), 0.5);
    EXPECT_DOUBLE_EQ(val(t.y[1]), 3.0 * 2.0 / 3.0);
    auto r = mutate_seed(s, VertexId{2, 1});
    EXPECT_DOUBLE_EQ(val(r.y[0]), 2.0 * 4.0);
}

TEST(Schedule, SgSixCycle) {
    auto sch = make_schedule(Family::SG, 1, 6);
    ASSERT_EQ(sch.period_u, 10);
    ASSERT_EQ(sch.steps.size(), 10u);
    for (int t = 0; t < 10; ++t) {
        std::set<VertexId> got(sch.at(t).vertices.begin(), sch.at(t).vertices.end()), want;
        if (t % 2 == 0) {
            want = {{6, 3}, {6, 5}, {t / 2 + 1, 1}};
        } else {
            want = {{6, 2}, {6, 4}, {6, 6}, {6, 7}};
        }
        EXPECT_EQ(got, want) << "t=" << t;
    }
    EXPECT_EQ(&sch.at(-1), &sch.at(9));
}

TEST(Schedule, RsgSixCycle) {
    auto sch = make_schedule(Family::RSG, 1, 6);
    ASSERT_EQ(sch.period_u, 10);
    for (int t = 0; t < 10; ++t) {
        std::set<VertexId> got(sch.at(t).vertices.begin(), sch.at(t).vertices.end()), want;
        if (t % 2 == 0)
            want = {{6, 3}, {t / 2 + 1, 1}};
        else
            want = {{6, 2}, {6, 4}};
        EXPECT_EQ(got, want) << "t=" << t;
    }
}

TEST(Schedule, LengthAndOracleAgreement) {
    for (bool sg : {true, false})
        for (int m = 1; m <= 3; ++m)
            for (int n = 4; n <= 9; ++n) {
                FamilyDescriptor d{sg ? Family::SG : Family::RSG, m, n};
                auto sch = make_schedule(d);
                auto f = oracle::family(sg, m, n);
                ASSERT_EQ(sch.period_u, 2 * n - 2);
                for (int t = 0; t < sch.period_u; ++t) {
                    std::set<VertexId> got(sch.at(t).vertices.begin(), sch.at(t).vertices.end()), want;
                    for (int a : f.step[static_cast<std::size_t>(t)])
                        want.insert({f.verts[static_cast<std::size_t>(a)].i, f.verts[static_cast<std::size_t>(a)].ip});
                    EXPECT_EQ(got, want);
                }
            }
}

TEST(Schedule, DomainError) { EXPECT_THROW(make_schedule(Family::RSG, 1, 3), DomainError); }

TEST(Run, ZeroSteps) {
    auto q = build_sg_quiver(1, 4);
    auto tr = run(tropical_seed(q), make_schedule(Family::SG, 1, 4), 0);
    ASSERT_EQ(tr.snapshots.size(), 1u);
    EXPECT_EQ(tr.snapshots[0].y, tropical_seed(q).y);
    EXPECT_EQ(tr.diagnostics.mutations, 0u);
}

TEST(Run, EvenStepsAreSigmaImages) {
    FamilyDescriptor d{Family::SG, 1, 6};
    auto q0 = build_quiver(d);
    auto sch = make_schedule(d);
    auto tr = run(tropical_seed(q0), sch, 22);
    EXPECT_EQ(tr.u_max(), 22);
    LabeledQuiver q = q0;
    for (int u = 0; u < 22; ++u) {
        if (u % 2 == 0) EXPECT_EQ(q, apply_sigma(q0, u / 2)) << "u=" << u;
        for (auto v : sch.at(u).vertices) q = mutate_matrix(q, v);
    }
    EXPECT_EQ(q, apply_sigma(q0, 11));
    EXPECT_EQ(tr.diagnostics.involution_checks, tr.diagnostics.mutations);
}

TEST(Run, NumericPositivity) {
    FamilyDescriptor d{Family::SG, 1, 4};
    auto q = build_quiver(d);
    auto tr = run(numeric_seed(q, 42), make_schedule(d), 28);
    int seen = 0;
    for (int i = 1; i <= d.layers(); ++i)
        for (int u = 0; u <= 28; ++u)
            if (tr.has_y(i, u)) {
                EXPECT_GT(val(tr.y_tilde(i, u)), 0.0);
                ++seen;
            }
    EXPECT_GT(seen, 50);
}

TEST(Run, SymbolicNeedsSymbolicCoefficients) {
    auto q = build_sg_quiver(1, 4);
    auto s = symbolic_seed(q, false);
    s.y = numeric_seed(q, 1).y;
    EXPECT_THROW(mutate_seed(s, std::size_t{0}), DomainError);
}

TEST(Labels, SgSixExamples) {
    FamilyDescriptor d{Family::SG, 1, 6};
    // (1,1) carries x_1(-5) in Q(0) and x_1(5) in Q(10)
    EXPECT_EQ(label_g(d, 1, -5), (MutationPoint{{1, 1}, 0}));
    EXPECT_EQ(label_g(d, 1, 5), (MutationPoint{{1, 1}, 10}));
    for (int j = 0; j < 5; ++j) EXPECT_EQ(label_g(d, 1, 2 * j - 5), (MutationPoint{{j + 1, 1}, 2 * j}));
    // x_2(0) sits at (6,2) in Q(1)
    EXPECT_EQ(label_g(d, 2, 0), (MutationPoint{{6, 2}, 1}));
    for (int i = 2; i <= 7; ++i)
        for (int u = -3; u <= 3; ++u)
            if (is_y_point(d, i, u)) EXPECT_EQ(label_g_prime(d, i, u), (MutationPoint{{6, i}, u}));
}

TEST(Labels, RoundTripRandom) {
    std::mt19937 rng(17);
    int done = 0;
    while (done < 200) {
        std::uniform_int_distribution<int> fm(0, 1), mm(1, 4), nn(4, 9), uu(-60, 60);
        FamilyDescriptor d{fm(rng) ? Family::SG : Family::RSG, mm(rng), nn(rng)};
        int i = std::uniform_int_distribution<int>(1, d.layers())(rng), u = uu(rng);
        if (!is_x_point(d, i, u)) {
            EXPECT_THROW(label_g(d, i, u), ParityError);
            continue;
        }
        auto p = label_g(d, i, u);
        EXPECT_EQ(label_g_inverse(d, p), std::make_pair(i, u));
        // the image really is a mutation point of the schedule
        auto q = build_quiver(d);
        EXPECT_TRUE(is_mutation_point(d, q.vertices()[q.index_of(p.vertex)], p.u));
        auto pp = label_g_prime(d, i, u + duration(d, i));
        EXPECT_EQ(label_g_prime_inverse(d, pp), std::make_pair(i, u + duration(d, i)));
        ++done;
    }
}

TEST(Labels, ParityErrors) {
    FamilyDescriptor d{Family::SG, 1, 6};
    EXPECT_THROW(label_g(d, 1, -4), ParityError);
    EXPECT_THROW(label_g_prime(d, 2, 0), ParityError);
    EXPECT_THROW(label_g_inverse(d, MutationPoint{{1, 1}, 1}), ParityError);
}

TEST(Labels, DurationsMatchMutationGaps) {
    // consecutive mutations of one vertex are 2 d_i apart in time and in label
    for (bool sg : {true, false})
        for (int m = 1; m <= 3; ++m)
            for (int n = 4; n <= 8; ++n) {
                FamilyDescriptor d{sg ? Family::SG : Family::RSG, m, n};
                auto q = build_quiver(d);
                for (const auto& v : q.vertices()) {
                    std::vector<int> ts;
                    for (int u = 0; u < 4 * d.step_period(); ++u)
                        if (is_mutation_point(d, v, u)) ts.push_back(u);
                    ASSERT_GE(ts.size(), 2u);
                    int di = duration(d, v.id.ip);
                    for (std::size_t a = 0; a + 1 < ts.size(); ++a) {
                        EXPECT_EQ(ts[a + 1] - ts[a], 2 * di);
                        auto l0 = label_g_prime_inverse(d, {v.id, ts[a]});
                        auto l1 = label_g_prime_inverse(d, {v.id, ts[a + 1]});
                        EXPECT_EQ(l1.second - l0.second, 2 * di);
                    }
                }
            }
}

TEST(Permutations, Basic) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 4; n <= 7; ++n) {
            FamilyDescriptor d{Family::SG, m, n};
            auto P = permutation_maps(d);
            auto q = build_quiver(d);
            for (const auto& v : q.vertices()) {
                EXPECT_EQ(P.sigma(v.id, n - 1), v.id);
                EXPECT_EQ(P.tau_inverse(P.tau(v.id)), v.id);
                EXPECT_EQ(P.omega(P.omega(v.id)), v.id);
                EXPECT_TRUE(q.contains(P.tau(v.id)));
            }
        }
    auto P = permutation_maps({Family::SG, 1, 4});
    EXPECT_EQ(P.omega(4), 5);
    EXPECT_EQ(P.omega(5), 4);
    EXPECT_EQ(P.omega(2), 2);
    EXPECT_EQ(permutation_maps({Family::RSG, 1, 5}).omega(3), 3);
}

TEST(FPolynomial, InitialIsOne) {
    FamilyDescriptor d{Family::SG, 1, 4};
    auto q = build_quiver(d);
    auto tr = run(symbolic_seed(q, true), make_schedule(d), 2);
    for (int i = 1; i <= d.layers(); ++i)
        for (int u = -4; u <= 0; ++u)
            if (tr.has_x(i, u) && label_g(d, i, u).u == 0) {
                EXPECT_EQ(f_polynomial(tr, i, u), LaurentPoly::constant(2 * q.size(), 1));
            }
    auto plain = run(symbolic_seed(q, false), make_schedule(d), 1);
    EXPECT_THROW(f_polynomial(plain, 1, -3), MissingSymbolicRun);
}
