#include "doctest.h"

#include "qma/braiding.hpp"
#include "qma/pattern.hpp"

using namespace qma;

TEST_CASE("yang-baxter and hecke for N = 1..3") {
    for (int N : {1, 2, 3}) {
        CAPTURE(N);
        CHECK(check_yang_baxter(r_matrix(N)));
        CHECK(check_hecke(r_matrix(N)));
    }
}

TEST_CASE("N = 1 braidings are the expected scalars") {
    CHECK(braiding(Strand::V, Strand::V, 1).entry(0, 0) == RatFunc::q(1));
    CHECK(braiding(Strand::Vdual, Strand::Vdual, 1).entry(0, 0) == RatFunc::q(1));
    CHECK(braiding(Strand::Vdual, Strand::V, 1).entry(0, 0) == RatFunc::q(-1));
    CHECK(braiding(Strand::V, Strand::Vdual, 1).entry(0, 0) == RatFunc::q(-1));
}

TEST_CASE("braid relations for every strand mix, N = 2") {
    for (Strand a : {Strand::V, Strand::Vdual})
        for (Strand b : {Strand::V, Strand::Vdual})
            for (Strand c : {Strand::V, Strand::Vdual}) CHECK(check_braid_relation(a, b, c, 2));
}

TEST_CASE("ev naturality (snake) for both strand kinds, N = 2") {
    CHECK(check_ev_naturality(Strand::V, 2));
    CHECK(check_ev_naturality(Strand::Vdual, 2));
}

TEST_CASE("braid word evaluation and inversion") {
    StrandList s{Strand::Vdual, Strand::V, Strand::Vdual, Strand::V};
    BraidWord w{{{2, 1}, {3, 1}, {1, 1}, {2, -1}}, 4};
    TensorOp op = braid_word_eval(w, s, 2);
    TensorOp inv = braid_word_eval(w.inverse(), op.strands_out(), 2);
    CHECK(inv.compose(op) == TensorOp::identity(s, 2));
}

TEST_CASE("crossing operators: inverses, strand signature, q = 1 shadow") {
    int N = 2;
    StrandList s{Strand::Vdual, Strand::V, Strand::Vdual, Strand::V};
    for (auto kind : {CrossingKind::Linked, CrossingKind::Nested, CrossingKind::Unlinked}) {
        TensorOp plus = crossing_operator({kind, +1}, N);
        TensorOp minus = crossing_operator({kind, -1}, N);
        CHECK(plus.compose(minus) == TensorOp::identity(s, N));
        CHECK(plus.strands_in() == s);
        CHECK(plus.strands_out() == s);
        CHECK(plus.is_permutation_at_q1());
    }
}

TEST_CASE("linked crossing equals the braid word s2^-1 s1 s3 s2") {
    StrandList s{Strand::Vdual, Strand::V, Strand::Vdual, Strand::V};
    BraidWord w{{{2, 1}, {3, 1}, {1, 1}, {2, -1}}, 4}; // rightmost factor first
    CHECK(crossing_operator({CrossingKind::Linked, +1}, 2) == braid_word_eval(w, s, 2));
}

TEST_CASE("crossing consistency against shuffle operators, six witnesses") {
    struct Case {
        std::vector<int> targets;
        CrossingKind kind;
        int sign;
    };
    const Case cases[] = {
        {{1, 3, 2, 4}, CrossingKind::Linked, +1},   {{2, 4, 1, 3}, CrossingKind::Linked, -1},
        {{1, 4, 2, 3}, CrossingKind::Nested, +1},   {{2, 3, 1, 4}, CrossingKind::Nested, -1},
        {{1, 2, 3, 4}, CrossingKind::Unlinked, +1}, {{3, 4, 1, 2}, CrossingKind::Unlinked, -1},
    };
    for (const auto& c : cases) {
        GluingPattern P(c.targets);
        CHECK(P.classify(1, 2) == CrossingType{c.kind, c.sign});
        CHECK(check_crossing_consistency(P, 1, 2, 2));
    }
}

TEST_CASE("linked crossing equals J12^-1 . J21 of the torus pattern") {
    GluingPattern tor = GluingPattern::punctured_torus();
    TensorOp comp = j_operator_inverse(tor, 1, 2, 2).compose(j_operator(tor, 2, 1, 2));
    CHECK(comp == crossing_operator({CrossingKind::Linked, +1}, 2));
}
