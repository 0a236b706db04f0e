// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion prints its wall time.

#include <chrono>
#include <iostream>
#include <map>
#include <set>

#include "wga/io.hpp"

using namespace wga;
using QA = QuotientAlgebra;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    int number;
    std::string name;
    Clock::time_point start = Clock::now();
    bool pass = true;
    std::string detail;

    Criterion(int n, std::string nm) : number(n), name(std::move(nm)) {}
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name
                  << " (" << ms.count() << " ms";
        if (!detail.empty()) std::cout << "; " << detail;
        std::cout << ")" << std::endl;
        if (!pass) ++g_failures;
    }
};

Subset mask(std::initializer_list<int> gens) {
    Subset m = 0;
    for (int g : gens) m |= (1u << g);
    return m;
}

std::map<std::string, std::shared_ptr<QuotientAlgebra>> g_algebras;

std::shared_ptr<QuotientAlgebra> algebra(CoxType t, int param = 0) {
    std::string key = type_tag(t) + "_" + std::to_string(param);
    auto it = g_algebras.find(key);
    if (it != g_algebras.end()) return it->second;
    auto alg = QuotientAlgebra::compute(build_system(t, param));
    g_algebras.emplace(key, alg);
    return alg;
}

std::string fixture_dir() { return std::string(WGA_TESTS_DIR) + "/fixtures/"; }
std::string golden_dir() { return std::string(WGA_TESTS_DIR) + "/golden/"; }

void criterion_1_tau() {
    Criterion c(1, "tau polynomial suite");
    c.require(tau_poly(3) == IntPoly({mpz_class(0), mpz_class(-2), mpz_class(0), mpz_class(1)}),
              "tau_3 != T^3 - 2T");
    // recursion equals the product over the roots 2cos(a pi/(r+1)), expanded
    // exactly in the splitting field
    for (int r = 1; r <= 8; ++r) {
        int M = (r + 1 >= 3) ? r + 1 : 2 * (r + 1);
        FieldCtx ctx = field_context(M);
        std::vector<NumberFieldElem> prod{NumberFieldElem::one(ctx)};
        for (int a = 1; a <= r; ++a) {
            NumberFieldElem root = two_cos(ctx, a * (M / (r + 1)));
            std::vector<NumberFieldElem> next(prod.size() + 1, NumberFieldElem::zero(ctx));
            for (size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] = next[i + 1] + prod[i];
                next[i] = next[i] - root * prod[i];
            }
            prod = std::move(next);
        }
        IntPoly t = tau_poly(r);
        for (int i = 0; i <= r; ++i)
            c.require(prod[i] == NumberFieldElem(ctx, Rational(t.coeff(i))),
                      "product form fails at r = " + std::to_string(r));
    }
    for (int r = 0; r <= 20; ++r) {
        IntPoly t = tau_poly(r);
        c.require(t.negate_variable() == (r % 2 == 0 ? t : -t),
                  "parity fails at r = " + std::to_string(r));
        c.require(t.degree() == r && t.leading() == 1, "degree/monicity fails");
    }
}

void criterion_2_braid_factorization() {
    Criterion c(2, "braid commutator factorization over validated W-graph matrices");
    for (int m = 3; m <= 7; ++m) {
        CoxeterSystem sys = build_system(CoxType::I2, m);
        WGraph g = wgraph_dihedral(sys, 1);
        c.require(validate_wgraph(sys, g).all_pass(), "fixture graph invalid");
        auto mats = wgraph_hecke_matrices(sys, g);
        Report rep = verify_braid_factorization(mats[0], mats[1], laurent_quad_param(sys.ctx),
                                                m, sys.ctx);
        c.require(rep.all_pass(), "factorization fails for m = " + std::to_string(m));
    }
}

void criterion_3_compatibility_graphs() {
    Criterion c(3, "compatibility graphs match the figures and the golden files");
    auto pairs_of = [](const CoxeterSystem& sys) {
        std::set<std::pair<Subset, Subset>> got;
        for (auto [a, b] : transversal_pairs(build_compatibility_graph(sys)))
            got.insert({std::min(a, b), std::max(a, b)});
        return got;
    };
    for (int m : {3, 5, 7}) {
        auto got = pairs_of(build_system(CoxType::I2, m));
        c.require(got == std::set<std::pair<Subset, Subset>>{{1, 2}}, "I2 pairs");
    }
    c.require(pairs_of(build_system(CoxType::A3)).size() == 5, "A3 must have 5 transversal pairs");
    {
        auto got = pairs_of(build_system(CoxType::A3));
        std::set<std::pair<Subset, Subset>> expect{
            {mask({0}), mask({1})},       {mask({1}), mask({2})},       {mask({1}), mask({0, 2})},
            {mask({0, 2}), mask({1, 2})}, {mask({0, 1}), mask({0, 2})},
        };
        c.require(got == expect, "A3 transversal pairs differ from the figure");
    }
    {
        auto got = pairs_of(build_system(CoxType::A4));
        c.require(got.size() == 16, "A4 must have 16 transversal pairs");
        c.require(got.count({mask({0, 2}), mask({0, 3})}) == 1, "A4 pair 13 -- 14 missing");
        c.require(got.count({mask({0, 2}), mask({0, 1, 3})}) == 1, "A4 pair 124 -- 13 missing");
    }
    {
        auto got = pairs_of(build_system(CoxType::D4));
        c.require(got.count({mask({2}), mask({0, 1, 3})}) == 1,
                  "D4 long edge {2} -- {013} missing");
        for (Subset p : {mask({0}), mask({1}), mask({3}), mask({0, 1}), mask({0, 3}), mask({1, 3})})
            c.require(got.count({std::min(mask({2}), p), std::max(mask({2}), p)}) == 1,
                      "D4 center edge missing");
    }
    // golden DOT files
    for (auto [t, m] : {std::pair<CoxType, int>{CoxType::I2, 5},
                        {CoxType::A3, 0},
                        {CoxType::A4, 0},
                        {CoxType::D4, 0}}) {
        CoxeterSystem sys = build_system(t, m);
        std::string tag = type_tag(t);
        if (m) tag += "_" + std::to_string(m);
        std::string expect = read_file(golden_dir() + "compatibility_" + tag + ".dot");
        c.require(quiver_to_dot(build_compatibility_graph(sys), sys) == expect,
                  "golden DOT differs for " + tag);
    }
}

void criterion_4_quotients() {
    Criterion c(4, "quotient certification and semisimple dimensions");
    auto check = [&](CoxType t, int param, long order) {
        auto t0 = Clock::now();
        auto alg = algebra(t, param);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
        std::string tag = type_tag(t) + (param ? "(" + std::to_string(param) + ")" : "");
        std::cout << "    " << tag << ": dim = " << alg->dim()
                  << ", dim(rad) = " << alg->radical().dim_radical
                  << ", dim(ss) = " << alg->radical().dim_semisimple
                  << ", certified length = " << alg->certified_length() << "  [" << ms.count()
                  << " ms]\n";
        c.require(alg->radical().dim_semisimple == order,
                  tag + ": semisimple dim != " + std::to_string(order));
    };
    check(CoxType::A1xN, 1, 2);
    check(CoxType::A1xN, 2, 4);
    for (int m = 3; m <= 8; ++m) check(CoxType::I2, m, 2 * m);
    check(CoxType::A3, 0, 24);
    check(CoxType::B3, 0, 48);
    check(CoxType::A4, 0, 120);
}

void criterion_5_relator_vanishing() {
    Criterion c(5, "relator images vanish for every validated W-graph fixture");
    std::vector<std::pair<CoxeterSystem, WGraph>> fixtures;
    for (int m = 3; m <= 8; ++m) {
        CoxeterSystem sys = build_system(CoxType::I2, m);
        for (int a = 1; 2 * a <= m - 1; ++a) fixtures.push_back({sys, wgraph_dihedral(sys, a)});
    }
    for (auto t : {CoxType::A3, CoxType::B3}) {
        CoxeterSystem sys = build_system(t);
        fixtures.push_back({sys, wgraph_trivial(sys)});
        fixtures.push_back({sys, wgraph_sign(sys)});
    }
    {
        CoxeterSystem sys = build_system(CoxType::I2, 5);
        fixtures.push_back(
            {sys, wgraph_from_json(sys, Json::parse(read_file(fixture_dir() + "i2_5_lambda1.json")))});
    }
    for (auto& [sys, g] : fixtures) {
        c.require(validate_wgraph(sys, g).all_pass(), "fixture failed validation");
        c.require(module_relator_check(wgraph_to_module(sys, g)).all_pass(),
                  "relator image nonzero for a " + type_tag(sys.type) + " fixture");
    }
}

void criterion_6_transport() {
    Criterion c(6, "idempotent transport suite over all transversal pairs of A3 and B3");
    for (auto t : {CoxType::A3, CoxType::B3}) {
        auto alg = algebra(t);
        IdempotentFamily fam = build_family(*alg);
        for (auto [a, b] : transversal_pairs(alg->compat()))
            for (auto [I, J] : {std::pair<Subset, Subset>{a, b}, std::pair<Subset, Subset>{b, a}}) {
                Elem L = alg->mul(alg->edge(I, J), alg->edge(J, I));
                std::vector<std::pair<Elem, NumberFieldElem>> idems;
                bool eigen = true;
                for (const auto& la : fam.labels) {
                    auto it = fam.FI.at(la).find(I);
                    if (it == fam.FI.at(la).end()) continue;
                    Elem Lf = alg->mul(L, it->second);
                    if (QA::is_zero(Lf)) continue;
                    NumberFieldElem sigma = NumberFieldElem::zero(alg->ctx());
                    for (const auto& [k, cf] : it->second)
                        if (!cf.is_zero()) {
                            sigma = alg->coeff_of(Lf, k) / cf;
                            break;
                        }
                    if (!QA::equal(Lf, QA::scale(it->second, sigma))) eigen = false;
                    idems.push_back({it->second, sigma});
                }
                c.require(eigen, "family does not diagonalize a loop");
                TransportResult tr = transport(*alg, I, J, idems);
                c.require(tr.ok(), "transport checks failed at " + alg->system().subset_str(I) +
                                       " -> " + alg->system().subset_str(J));
            }
    }
}

void criterion_7_conjecture() {
    Criterion c(7, "decomposition properties Z1-Z4 for all supported types");
    struct Case {
        CoxType t;
        int param;
    };
    std::vector<Case> cases{{CoxType::A1xN, 1}, {CoxType::A1xN, 2}, {CoxType::A1xN, 3}};
    for (int m = 3; m <= 8; ++m) cases.push_back({CoxType::I2, m});
    cases.push_back({CoxType::A3, 0});
    cases.push_back({CoxType::B3, 0});
    cases.push_back({CoxType::A4, 0});
    for (auto [t, param] : cases) {
        auto t0 = Clock::now();
        auto alg = algebra(t, param);
        CoxeterSystem sys = alg->system();
        std::string tag = type_tag(t) + (param ? "(" + std::to_string(param) + ")" : "");
        IrrData irr = irr_data(sys);
        IdempotentFamily fam = build_family(*alg);
        c.require(fam.construction_checks.all_pass(), tag + ": construction identities");
        c.require(check_Z1_Z2(*alg, fam).all_pass(), tag + ": Z1/Z2");
        Z3Result z3 = check_Z3(*alg, fam, irr);
        c.require(z3.report.all_pass(), tag + ": Z3");
        c.require(check_Z4(*alg, fam, irr).all_pass(), tag + ": Z4");
        // order shape checks
        if (t == CoxType::A3 || t == CoxType::A4) {
            for (auto& [lo, hi] : z3.realized)
                c.require(irr.leq(lo, hi), tag + ": realized order outside dominance");
        } else if (t == CoxType::I2) {
            for (auto& [lo, hi] : z3.realized)
                c.require(lo == "sgn" || hi == "1",
                          tag + ": realized order beyond sgn-bottom / 1-top");
        } else if (t == CoxType::B3) {
            for (auto& [lo, hi] : z3.realized)
                c.require(irr.leq(lo, hi), tag + ": realized order outside the figure order");
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
        std::cout << "    " << tag << ": Z1-Z4 verified  [" << ms.count() << " ms]\n";
    }
}

void criterion_8_identity_pack() {
    Criterion c(8, "in-proof identity regression pack");
    for (auto t : {CoxType::A3, CoxType::B3, CoxType::A4}) {
        auto alg = algebra(t);
        IdempotentFamily fam = build_family(*alg);
        for (const auto& item : fam.construction_checks.items)
            c.require(item.pass, type_tag(t) + ": " + item.name);
    }
    {
        // the surjectivity identity for the inclusion edge {24} <- {2} in the
        // five-dimensional component
        auto alg = algebra(CoxType::A4);
        IdempotentFamily fam = build_family(*alg);
        const Elem& F = fam.F.at("(3,2)");
        auto conj = [&](Subset I, Subset J) {
            return alg->mul(alg->mul(F, alg->edge(I, J)), F);
        };
        Subset s2 = mask({1}), s3 = mask({2}), s13 = mask({0, 2}), s14 = mask({0, 3}),
               s24 = mask({1, 3});
        Elem lhs = conj(s24, s2);
        Elem rhs = alg->mul(
            alg->mul(alg->mul(alg->mul(conj(s24, s3), conj(s3, s24)), conj(s24, s14)),
                     conj(s14, s13)),
            conj(s13, s2));
        c.require(QA::equal(lhs, rhs), "A4: inclusion edge {24}<-{2} not expressible in the image");
        c.require(!QA::is_zero(lhs), "A4: inclusion wedge {24}<-{2} unexpectedly zero");
    }
    {
        // B3 matrix-unit identities behind the degree-2/3 morphism table are
        // part of Z4; assert them here explicitly once more
        auto alg = algebra(CoxType::B3);
        IdempotentFamily fam = build_family(*alg);
        Report z4 = check_Z4(*alg, fam, irr_data(alg->system()));
        for (const auto& item : z4.items) c.require(item.pass, "B3: " + item.name);
    }
}

void criterion_9_denominators() {
    Criterion c(9, "denominator audit");
    {
        auto alg = algebra(CoxType::B3);
        DenominatorAudit audit = audit_denominators(build_family(*alg));
        c.require(audit.all_powers_of_two, "B3 family uses a non-power-of-two denominator");
    }
    for (int m = 3; m <= 8; ++m) {
        auto alg = algebra(CoxType::I2, m);
        try {
            spectral_idempotents_side(*alg, 1);
            spectral_idempotents_side(*alg, 2);
            build_family(*alg);
        } catch (const division_by_zero_error&) {
            c.require(false, "I2(" + std::to_string(m) + "): sigma difference not invertible");
        }
    }
}

void criterion_10_filtration() {
    Criterion c(10, "filtration of a reducible module with a radical extension");
    CoxeterSystem sys = build_system(CoxType::I2, 5);
    auto alg = algebra(CoxType::I2, 5);
    IdempotentFamily fam = build_family(*alg);
    IrrData irr = irr_data(sys);
    OmegaModule direct = wgraph_to_module(sys, wgraph_dihedral(sys, 1));
    OmegaModule corner = corner_module(*alg, Subset(0));
    OmegaModule big = direct_sum(direct, corner);
    FiltrationResult fr = filtration(*alg, big, fam, irr);
    c.require(fr.report.all_pass(), "filtration checks failed");
    int occupied = 0, total = 0;
    for (const auto& l : fr.layers) {
        c.require(l.jump % irr.degree_of(l.label) == 0,
                  l.label + ": subquotient not a multiple of the degree");
        if (l.jump) ++occupied;
        total += l.jump;
    }
    c.require(occupied >= 2, "expected at least two occupied layers");
    c.require(total == big.dim, "layer dimensions do not add up to the module dimension");
    std::cout << "    layers:";
    for (const auto& l : fr.layers)
        if (l.jump) std::cout << " " << l.label << ":" << l.jump;
    std::cout << "\n";
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion_1_tau();
    criterion_2_braid_factorization();
    criterion_3_compatibility_graphs();
    criterion_4_quotients();
    criterion_5_relator_vanishing();
    criterion_6_transport();
    criterion_7_conjecture();
    criterion_8_identity_pack();
    criterion_9_denominators();
    criterion_10_filtration();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(g_failures))
              << " (total " << ms.count() << " ms)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
