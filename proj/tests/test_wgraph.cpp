#include "doctest.h"

#include "wga/wgraph.hpp"

using namespace wga;

TEST_CASE("one-vertex graphs validate") {
    for (auto sys : {build_system(CoxType::A3), build_system(CoxType::B3),
                     build_system(CoxType::I2, 6)}) {
        CHECK(validate_wgraph(sys, wgraph_trivial(sys)).all_pass());
        CHECK(validate_wgraph(sys, wgraph_sign(sys)).all_pass());
    }
}

TEST_CASE("dihedral two-vertex graphs validate exactly for a < m/2") {
    for (int m = 3; m <= 8; ++m) {
        CoxeterSystem sys = build_system(CoxType::I2, m);
        for (int a = 1; 2 * a <= m - 1; ++a)
            CHECK(validate_wgraph(sys, wgraph_dihedral(sys, a)).all_pass());
    }
}

TEST_CASE("condition-1 violation is reported with the offending triple") {
    CoxeterSystem sys = build_system(CoxType::I2, 3);
    Matrix<NumberFieldElem> m1(2, 2, NumberFieldElem::zero(sys.ctx)),
        m2(2, 2, NumberFieldElem::zero(sys.ctx));
    // weight where s = 1 does not lie in I(x)\I(y)
    m1.at(1, 0) = NumberFieldElem::one(sys.ctx);
    WGraph g = make_wgraph(sys, {Subset(1), Subset(2)}, {m1, m2});
    Report rep = validate_wgraph(sys, g);
    CHECK(!rep.all_pass());
    CHECK(rep.items[0].detail.find("s=1") != std::string::npos);
}

TEST_CASE("weight disagreement across tags is a warning, not a failure") {
    CoxeterSystem sys = build_system(CoxType::A1xN, 2);
    // vertex x labelled {1,2}, vertex y unlabelled; the two tags carry
    // different weights on the same edge
    Matrix<NumberFieldElem> m1(2, 2, NumberFieldElem::zero(sys.ctx)),
        m2(2, 2, NumberFieldElem::zero(sys.ctx));
    m1.at(0, 1) = NumberFieldElem::one(sys.ctx);
    m2.at(0, 1) = NumberFieldElem(sys.ctx, rational(2));
    WGraph g = make_wgraph(sys, {Subset(3), Subset(0)}, {m1, m2});
    Report rep = validate_wgraph(sys, g);
    bool warned = false;
    for (const auto& it : rep.items)
        if (it.status == "warn") warned = true;
    CHECK(warned);
}

TEST_CASE("wgraph_to_module and the m = 3 loop identity") {
    CoxeterSystem sys = build_system(CoxType::I2, 3);
    OmegaModule mod = wgraph_to_module(sys, wgraph_dihedral(sys, 1));
    auto fq = std::make_shared<const Quiver>(build_full_quiver(sys));
    const NumberFieldElem one = NumberFieldElem::one(sys.ctx);
    // X_{1,2} X_{2,1} acts as the identity on the {1}-labelled block
    auto loop = edge_elem(fq, Subset(1), Subset(2), 0, one) *
                edge_elem(fq, Subset(2), Subset(1), 1, one);
    CHECK(evaluate_in_module(mod, loop) == mod.e_proj[1]);
}

TEST_CASE("module relator check passes for all fixtures") {
    for (int m = 3; m <= 6; ++m) {
        CoxeterSystem sys = build_system(CoxType::I2, m);
        for (int a = 1; 2 * a <= m - 1; ++a)
            CHECK(module_relator_check(wgraph_to_module(sys, wgraph_dihedral(sys, a))).all_pass());
    }
    for (auto sys : {build_system(CoxType::A3), build_system(CoxType::B3)}) {
        CHECK(module_relator_check(wgraph_to_module(sys, wgraph_trivial(sys))).all_pass());
        CHECK(module_relator_check(wgraph_to_module(sys, wgraph_sign(sys))).all_pass());
    }
}

TEST_CASE("direct sums are block diagonal and still modules") {
    CoxeterSystem sys = build_system(CoxType::I2, 5);
    OmegaModule a = wgraph_to_module(sys, wgraph_dihedral(sys, 1));
    OmegaModule b = wgraph_to_module(sys, wgraph_dihedral(sys, 2));
    OmegaModule s = direct_sum(a, b);
    CHECK(s.dim == 4);
    CHECK(module_relator_check(s).all_pass());
}

TEST_CASE("module_to_wgraph round trip") {
    CoxeterSystem sys = build_system(CoxType::I2, 5);
    {
        OmegaModule mod = wgraph_to_module(sys, wgraph_trivial(sys));
        WGraph back = module_to_wgraph(mod);
        CHECK(back.labels == std::vector<Subset>{Subset(0)});
        CHECK(validate_wgraph(sys, back).all_pass());
    }
    {
        WGraph g = wgraph_dihedral(sys, 1);
        OmegaModule mod = wgraph_to_module(sys, g);
        WGraph back = module_to_wgraph(mod);
        // labels come back sorted by subset; the dihedral fixture is already
        // sorted, so the round trip is the identity
        CHECK(back.labels == g.labels);
        for (int s = 0; s < sys.rank; ++s) CHECK(back.weights[s] == g.weights[s]);
        CHECK(matrix_rank(mod.e_proj[1]) == 1);
        CHECK(matrix_rank(mod.e_proj[2]) == 1);
        NumberFieldElem prod = back.weights[0].at(0, 1) * back.weights[1].at(1, 0);
        CHECK(prod == sigma_in(sys.ctx, 1, 5));
    }
}

TEST_CASE("module_to_wgraph after a basis change still yields a valid graph") {
    CoxeterSystem sys = build_system(CoxType::I2, 5);
    OmegaModule mod = wgraph_to_module(sys, wgraph_dihedral(sys, 2));
    const NumberFieldElem zero = NumberFieldElem::zero(sys.ctx);
    Matrix<NumberFieldElem> P(2, 2, zero), Pinv(2, 2, zero);
    P.at(0, 0) = NumberFieldElem(sys.ctx, rational(3));
    P.at(1, 1) = NumberFieldElem(sys.ctx, rational(1, 2));
    Pinv.at(0, 0) = NumberFieldElem(sys.ctx, rational(1, 3));
    Pinv.at(1, 1) = NumberFieldElem(sys.ctx, rational(2));
    OmegaModule conj;
    conj.sys = sys;
    conj.dim = 2;
    for (const auto& e : mod.e_proj) conj.e_proj.push_back(Pinv * e * P);
    for (const auto& x : mod.x_mat) conj.x_mat.push_back(Pinv * x * P);
    WGraph back = module_to_wgraph(conj);
    CHECK(validate_wgraph(sys, back).all_pass());
    std::vector<Subset> lbl = back.labels;
    std::sort(lbl.begin(), lbl.end());
    CHECK(lbl == std::vector<Subset>{Subset(1), Subset(2)});
}

TEST_CASE("duality swaps trivial and sign and is an involution") {
    CoxeterSystem sys = build_system(CoxType::A3);
    WGraph triv = wgraph_trivial(sys);
    WGraph dual = apply_duality(sys, triv);
    CHECK(dual.labels == std::vector<Subset>{Subset(7)});
    CHECK(validate_wgraph(sys, dual).all_pass());

    OmegaModule mod = wgraph_to_module(sys, triv);
    OmegaModule dd = apply_duality(apply_duality(mod));
    for (size_t I = 0; I < mod.e_proj.size(); ++I) CHECK(dd.e_proj[I] == mod.e_proj[I]);
    for (int s = 0; s < sys.rank; ++s) CHECK(dd.x_mat[s] == mod.x_mat[s]);

    CoxeterSystem i5 = build_system(CoxType::I2, 5);
    OmegaModule dm = apply_duality(wgraph_to_module(i5, wgraph_dihedral(i5, 1)));
    CHECK(module_relator_check(dm).all_pass());
}

TEST_CASE("graph automorphisms relabel everything consistently") {
    CoxeterSystem sys = build_system(CoxType::A3);
    std::vector<int> ident{0, 1, 2};
    WGraph g = wgraph_trivial(sys);
    CHECK(apply_graph_automorphism(sys, ident, g).labels == g.labels);
    CHECK_THROWS(apply_graph_automorphism(sys, std::vector<int>{1, 0, 2}, g));

    CoxeterSystem i5 = build_system(CoxType::I2, 5);
    WGraph dg = wgraph_dihedral(i5, 1);
    WGraph swapped = apply_graph_automorphism(i5, std::vector<int>{1, 0}, dg);
    CHECK(swapped.labels == std::vector<Subset>{Subset(2), Subset(1)});
    CHECK(validate_wgraph(i5, swapped).all_pass());
    OmegaModule sm = apply_graph_automorphism(i5, std::vector<int>{1, 0},
                                              wgraph_to_module(i5, dg));
    CHECK(module_relator_check(sm).all_pass());
}
