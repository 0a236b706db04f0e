#include "doctest.h"

#include <random>

#include "wga/coxeter.hpp"
#include "wga/wgraph.hpp"

using namespace wga;

TEST_CASE("build_system matrices") {
    CoxeterSystem a3 = build_system(CoxType::A3);
    CHECK(a3.rank == 3);
    CHECK(a3.coxmat[0][1] == 3);
    CHECK(a3.coxmat[1][2] == 3);
    CHECK(a3.coxmat[0][2] == 2);
    CHECK(a3.ctx->m == 3);  // type A computations stay rational

    CoxeterSystem i7 = build_system(CoxType::I2, 7);
    CHECK(i7.rank == 2);
    CHECK(i7.coxmat[0][1] == 7);
    CHECK(i7.ctx->m == 7);

    CoxeterSystem b3 = build_system(CoxType::B3);
    CHECK(b3.labels == std::vector<std::string>{"0", "1", "2"});
    CHECK(b3.coxmat[0][1] == 4);
    CHECK(b3.coxmat[1][2] == 3);
    CHECK(b3.coxmat[0][2] == 2);
    CHECK(b3.ctx->m == 12);

    CHECK_THROWS(build_system(CoxType::I2, 2));
    CHECK_THROWS(build_system(CoxType::A1xN, 0));
}

TEST_CASE("group orders by reflection enumeration") {
    CHECK(group_order(build_system(CoxType::A1xN, 1)) == 2);
    CHECK(group_order(build_system(CoxType::A1xN, 3)) == 8);
    for (int m = 3; m <= 8; ++m) CHECK(group_order(build_system(CoxType::I2, m)) == 2 * m);
    CHECK(group_order(build_system(CoxType::A3)) == 24);
    CHECK(group_order(build_system(CoxType::B3)) == 48);
    CHECK(group_order(build_system(CoxType::A4)) == 120);
    CHECK(group_order(build_system(CoxType::D4)) == 192);
    CHECK(group_order(build_system(CoxType::H3)) == 120);
}

TEST_CASE("irr_data degrees and sum of squares") {
    auto sumsq = [](const IrrData& irr) {
        long s = 0;
        for (int d : irr.degrees) s += static_cast<long>(d) * d;
        return s;
    };
    {
        CoxeterSystem sys = build_system(CoxType::A3);
        IrrData irr = irr_data(sys);
        CHECK(irr.degrees == std::vector<int>{1, 3, 2, 3, 1});
        CHECK(sumsq(irr) == group_order(sys));
    }
    {
        CoxeterSystem sys = build_system(CoxType::I2, 5);
        IrrData irr = irr_data(sys);
        CHECK(irr.degrees == std::vector<int>{1, 2, 2, 1});
        CHECK(sumsq(irr) == 10);
    }
    {
        CoxeterSystem sys = build_system(CoxType::B3);
        IrrData irr = irr_data(sys);
        CHECK(irr.labels.size() == 10);
        std::vector<int> sorted = irr.degrees;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{1, 1, 1, 1, 2, 2, 3, 3, 3, 3});
        CHECK(sumsq(irr) == 48);
    }
    {
        CoxeterSystem sys = build_system(CoxType::A4);
        IrrData irr = irr_data(sys);
        CHECK(irr.degrees == std::vector<int>{1, 4, 5, 6, 5, 4, 1});
        CHECK(sumsq(irr) == 120);
    }
    for (int n = 1; n <= 3; ++n) {
        CoxeterSystem sys = build_system(CoxType::A1xN, n);
        CHECK(sumsq(irr_data(sys)) == group_order(sys));
    }
    for (int m = 3; m <= 8; ++m) {
        CoxeterSystem sys = build_system(CoxType::I2, m);
        CHECK(sumsq(irr_data(sys)) == 2 * m);
    }
    CHECK_THROWS(irr_data(build_system(CoxType::D4)));
}

TEST_CASE("irr_data partial order is acyclic") {
    for (auto sys : {build_system(CoxType::A3), build_system(CoxType::A4),
                     build_system(CoxType::B3), build_system(CoxType::I2, 6),
                     build_system(CoxType::A1xN, 3)}) {
        IrrData irr = irr_data(sys);
        for (const auto& a : irr.labels)
            for (const auto& b : irr.labels)
                if (a != b) CHECK(!(irr.leq(a, b) && irr.leq(b, a)));
    }
}

TEST_CASE("dominance order for A-types") {
    IrrData irr = irr_data(build_system(CoxType::A3));
    CHECK(irr.leq("(1,1,1,1)", "(4)"));
    CHECK(irr.leq("(2,2)", "(3,1)"));
    CHECK(!irr.leq("(3,1)", "(2,2)"));
}

TEST_CASE("braid commutator base cases") {
    CoxeterSystem sys = build_system(CoxType::I2, 3);
    auto g = wgraph_dihedral(sys, 1);
    auto mats = wgraph_hecke_matrices(sys, g);
    const auto& x = mats[0];
    const auto& y = mats[1];
    CHECK(braid_commutator(x, y, 0).is_zero());
    CHECK(braid_commutator(x, y, 1) == x - y);
    CHECK(braid_commutator(x, y, 3) == x * y * x - y * x * y);
    for (int m = 0; m <= 6; ++m) CHECK(braid_commutator(x, x, m).is_zero());
}

TEST_CASE("check_hecke_rep on one-dimensional and dihedral representations") {
    for (auto sys : {build_system(CoxType::A3), build_system(CoxType::I2, 5)}) {
        // index representation: all T_s = (v)
        std::vector<Matrix<Laurent>> idx(sys.rank, Matrix<Laurent>(1, 1, laurent_v(sys.ctx, 1)));
        CHECK(check_hecke_rep(sys, idx).all_pass());
        // sign representation: all T_s = (-v^-1)
        std::vector<Matrix<Laurent>> sgn(sys.rank, Matrix<Laurent>(1, 1, -laurent_v(sys.ctx, -1)));
        CHECK(check_hecke_rep(sys, sgn).all_pass());
    }
    for (int m = 3; m <= 7; ++m) {
        CoxeterSystem sys = build_system(CoxType::I2, m);
        for (int a = 1; 2 * a <= m - 1; ++a) {
            auto mats = wgraph_hecke_matrices(sys, wgraph_dihedral(sys, a));
            CHECK(check_hecke_rep(sys, mats).all_pass());
        }
        // a wrong weight must fail the braid relation
        Matrix<NumberFieldElem> m1(2, 2, NumberFieldElem::zero(sys.ctx)),
            m2(2, 2, NumberFieldElem::zero(sys.ctx));
        m1.at(0, 1) = NumberFieldElem::one(sys.ctx);
        m2.at(1, 0) = NumberFieldElem(sys.ctx, rational(7));
        WGraph bad = make_wgraph(sys, {Subset(1), Subset(2)}, {m1, m2});
        CHECK(!check_hecke_rep(sys, wgraph_hecke_matrices(sys, bad)).all_pass());
    }
}

TEST_CASE("braid commutator factorization") {
    CoxeterSystem sys = build_system(CoxType::I2, 5);
    auto mats = wgraph_hecke_matrices(sys, wgraph_dihedral(sys, 1));
    Laurent zeta = laurent_quad_param(sys.ctx);

    SUBCASE("x = y gives zero on both sides") {
        Report rep = verify_braid_factorization(mats[0], mats[0], zeta, 4, sys.ctx);
        CHECK(rep.all_pass());
    }
    SUBCASE("dihedral graph matrices pass up to r_max = 6") {
        Report rep = verify_braid_factorization(mats[0], mats[1], zeta, 6, sys.ctx);
        CHECK(rep.all_pass());
        CHECK(rep.items.size() == 7);
    }
    SUBCASE("precondition violation is an error, not a failure") {
        Matrix<Laurent> bad(2, 2, laurent_v(sys.ctx, 2));
        Report rep = verify_braid_factorization(bad, mats[1], zeta, 3, sys.ctx);
        CHECK(!rep.all_pass());
        CHECK(rep.items.size() == 1);
        CHECK(rep.items[0].status == "error");
    }
}

TEST_CASE("factorization identity over direct sums of W-graph matrices") {
    // Delta_m(x, y) = (-1)^(m-1) tau_{m-1}(x + y - zeta)(x - y) for matrices
    // assembled from validated W-graph blocks, 1 <= m <= 8.
    std::mt19937 rng(99);
    for (int m = 3; m <= 8; ++m) {
        CoxeterSystem sys = build_system(CoxType::I2, m);
        std::vector<std::pair<Matrix<Laurent>, Matrix<Laurent>>> blocks;
        for (int a = 1; 2 * a <= m - 1; ++a) {
            auto mats = wgraph_hecke_matrices(sys, wgraph_dihedral(sys, a));
            blocks.push_back({mats[0], mats[1]});
        }
        auto one_dim = [&](bool index_rep) {
            Laurent d = index_rep ? laurent_v(sys.ctx, 1) : -laurent_v(sys.ctx, -1);
            return Matrix<Laurent>(1, 1, d);
        };
        blocks.push_back({one_dim(true), one_dim(true)});
        blocks.push_back({one_dim(false), one_dim(false)});
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<size_t> pick;
            for (int i = 0; i < 3; ++i) pick.push_back(rng() % blocks.size());
            size_t n = 0;
            for (size_t b : pick) n += blocks[b].first.rows();
            Matrix<Laurent> x(n, n, Laurent()), y(n, n, Laurent());
            size_t off = 0;
            for (size_t b : pick) {
                const auto& [bx, by] = blocks[b];
                for (size_t i = 0; i < bx.rows(); ++i)
                    for (size_t j = 0; j < bx.cols(); ++j) {
                        x.at(off + i, off + j) = bx.at(i, j);
                        y.at(off + i, off + j) = by.at(i, j);
                    }
                off += bx.rows();
            }
            Report rep = verify_braid_factorization(x, y, laurent_quad_param(sys.ctx), m, sys.ctx);
            CHECK(rep.all_pass());
        }
    }
}
