#include "doctest.h"

#include "qma/braiding.hpp"
#include "qma/tensorop.hpp"

using namespace qma;

TEST_CASE("flatten and unflatten are inverse") {
    StrandList s{Strand::V, Strand::Vdual, Strand::V};
    TensorOp id = TensorOp::identity(s, 3);
    for (int f = 0; f < 27; ++f) {
        auto idx = id.unflatten(f, 3);
        CHECK(id.flatten(idx) == f);
    }
    CHECK(id.flatten({1, 2, 0}) == 1 * 9 + 2 * 3 + 0); // first strand most significant
}

TEST_CASE("identity and permutation operators") {
    int N = 2;
    StrandList s{Strand::V, Strand::V};
    TensorOp id = TensorOp::identity(s, N);
    TensorOp p = TensorOp::strand_permutation(s, {1, 0}, N);
    CHECK(p.compose(p) == id);
    CHECK(p.entry(p.flatten({0, 1}), p.flatten({1, 0})) == RatFunc::one());
}

TEST_CASE("compose, tensor, embed consistency") {
    int N = 2;
    TensorOp R = r_matrix(N);
    StrandList vv{Strand::V, Strand::V};
    TensorOp id1 = TensorOp::identity({Strand::V}, N);
    StrandList vvv{Strand::V, Strand::V, Strand::V};
    CHECK(TensorOp::embed(R, 0, vvv, N) == R.tensor(id1));
    CHECK(TensorOp::embed(R, 1, vvv, N) == id1.tensor(R));
    CHECK(R.compose(R.inverse()) == TensorOp::identity(vv, N));
    CHECK(R.inverse().compose(R) == TensorOp::identity(vv, N));
}

TEST_CASE("linearity operations") {
    int N = 2;
    TensorOp R = r_matrix(N);
    CHECK((R + R) == R.scaled(RatFunc(Rational(2))));
    CHECK((R - R).entries().empty());
}

TEST_CASE("q = 1 specialization of the R-matrix is the identity matrix") {
    for (int N : {1, 2, 3}) {
        auto at1 = r_matrix(N).at_q1();
        for (const auto& [k, v] : at1) {
            CHECK(k.first == k.second);
            CHECK(v == 1);
        }
        CHECK((int)at1.size() == N * N);
    }
    CHECK(braiding(Strand::V, Strand::V, 2).is_permutation_at_q1());
}

TEST_CASE("first_order extracts the hbar-linear part") {
    int N = 2;
    // q * Id = (1 + h/2 + ...) Id
    TensorOp s = TensorOp::identity({Strand::V}, N).scaled(RatFunc::q(1));
    auto fo = s.first_order();
    for (int i = 0; i < N; ++i) CHECK(fo.at({i, i}) == Rational(1, 2));
    CHECK((int)fo.size() == N);
}

TEST_CASE("inverse rejects non-square shapes at the type level") {
    // braidings between different strand kinds still invert correctly
    TensorOp s = braiding(Strand::Vdual, Strand::V, 2);
    TensorOp inv = s.inverse();
    CHECK(inv.compose(s) == TensorOp::identity(s.strands_in(), 2));
}
