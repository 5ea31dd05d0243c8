#include "doctest.h"

#include "qma/classical.hpp"

using namespace qma;

TEST_CASE("classical r-matrix data: N = 1 scalars") {
    ClassicalRData d = classical_r(1);
    CHECK(d.r.at(0, 0, 0, 0) == Rational(1, 2));
    CHECK(d.rho.at(0, 0, 0, 0) == 0);
    CHECK(d.t.at(0, 0, 0, 0) == Rational(1, 2));
}

TEST_CASE("rho antisymmetric, t symmetric, r = rho + t") {
    for (int N : {2, 3}) {
        ClassicalRData d = classical_r(N);
        CHECK(d.rho.flip() == d.rho.scaled(Rational(-1)));
        CHECK(d.t.flip() == d.t);
        CHECK(d.rho + d.t == d.r);
    }
}

TEST_CASE("t is half the flip-symmetrized Casimir for N = 2") {
    ClassicalRData d = classical_r(2);
    GTensor expect(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) expect.at(i, j, j, i) = Rational(1, 2);
    CHECK(d.t == expect);
}

TEST_CASE("classical yang-baxter for N = 2, 3") {
    for (int N : {2, 3}) CHECK(check_classical_yang_baxter(classical_r(N).r));
}

TEST_CASE("vector field actions on coordinates") {
    int N = 2;
    auto E = [&](int a, int b) {
        std::vector<Rational> x(N * N, Rational(0));
        x[a * N + b] = 1;
        return x;
    };
    // x^l(T) = T x: E11 left-invariant fixes t11, kills t12
    CHECK(vf_action({VfKind::LeftInvariant, E(0, 0)}, {1, 1, 1}, N) ==
          PolyExpr{{{0}, Rational(1)}});
    CHECK(vf_action({VfKind::LeftInvariant, E(0, 0)}, {1, 1, 2}, N).empty());
    // identity matrix acts trivially in the adjoint direction
    std::vector<Rational> id{Rational(1), Rational(0), Rational(0), Rational(1)};
    for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 2; ++c) CHECK(vf_action({VfKind::Adjoint, id}, {1, r, c}, N).empty());
    // adjoint = right - left, entrywise, for an assorted matrix
    std::vector<Rational> x{Rational(1), Rational(-2), Rational(3), Rational(5)};
    for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 2; ++c) {
            PolyExpr ad = vf_action({VfKind::Adjoint, x}, {1, r, c}, N);
            PolyExpr diff = pe_sub(vf_action({VfKind::RightInvariant, x}, {1, r, c}, N),
                                   vf_action({VfKind::LeftInvariant, x}, {1, r, c}, N));
            CHECK(ad == diff);
        }
}

TEST_CASE("sts bracket: antisymmetry and the abelian case") {
    CHECK(sts_bracket(1, {1, 1, 1}, {1, 1, 1}).empty());
    int N = 2;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            for (int c = 1; c <= N; ++c)
                for (int d = 1; d <= N; ++d) {
                    PolyExpr fwd = sts_bracket(N, {1, a, b}, {1, c, d});
                    PolyExpr bwd = sts_bracket(N, {1, c, d}, {1, a, b});
                    CHECK(fwd == pe_scale(bwd, Rational(-1)));
                }
}

TEST_CASE("fr bracket reduces to sts on a single handle") {
    GluingPattern ann = GluingPattern::annulus();
    int N = 2;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            CHECK(fr_bracket(ann, {1, a, b}, {1, b, a}, N) == sts_bracket(N, {1, a, b}, {1, b, a}));
}

TEST_CASE("fr bracket antisymmetry across handles") {
    GluingPattern tor = GluingPattern::punctured_torus();
    int N = 2;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            for (int c = 1; c <= N; ++c)
                for (int d = 1; d <= N; ++d) {
                    PolyExpr fwd = fr_bracket(tor, {1, a, b}, {2, c, d}, N);
                    PolyExpr bwd = fr_bracket(tor, {2, c, d}, {1, a, b}, N);
                    CHECK(fwd == pe_scale(bwd, Rational(-1)));
                }
}

TEST_CASE("fr bracket rejects invalid handles") {
    CHECK_THROWS(fr_bracket(GluingPattern::annulus(), {2, 1, 1}, {1, 1, 1}, 2));
}

TEST_CASE("jacobi identity for annulus and torus, N = 2") {
    CHECK(fr_jacobi_check(GluingPattern::annulus(), 2));
    CHECK(fr_jacobi_check(GluingPattern::punctured_torus(), 2));
}

TEST_CASE("quasiclassical limit: abelian case and annulus") {
    CHECK(quasiclassical_check(GluingPattern::punctured_torus(), 1));
    CHECK(quasiclassical_check(GluingPattern::annulus(), 2));
}

TEST_CASE("quasiclassical limit: six crossing-type witnesses, N = 2") {
    for (auto targets : {std::vector<int>{1, 3, 2, 4}, {2, 4, 1, 3}, {1, 4, 2, 3},
                         {2, 3, 1, 4}, {1, 2, 3, 4}, {3, 4, 1, 2}}) {
        GluingPattern P(targets);
        CAPTURE(P.to_string());
        CHECK(quasiclassical_check(P, 2));
    }
}

TEST_CASE("quasiclassical report lists every unordered generator pair") {
    auto report = quasiclassical_report(GluingPattern::annulus(), 2);
    CHECK(report.size() == 6); // C(4, 2)
    for (const auto& r : report) CHECK(r.ok);
}

TEST_CASE("qcl operator identity, N = 1 and 2") {
    CHECK(qcl_identity_check(1));
    CHECK(qcl_identity_check(2));
}
