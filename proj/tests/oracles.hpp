#pragma once

// Hand-rolled matrix-identity oracles shared by the unit and acceptance
// suites. Everything here is written directly from R-matrix entries,
// independently of the relation builders under test.

#include "qma/braiding.hpp"
#include "qma/relations.hpp"

namespace qma::oracles {

using Mat = std::vector<std::vector<NCPoly>>;

inline Mat nc_matmul(const Mat& X, const Mat& Y) {
    int dim = (int)X.size();
    Mat Z(dim, std::vector<NCPoly>(dim));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            for (int m = 0; m < dim; ++m)
                if (!X[r][m].empty() && !Y[m][c].empty())
                    Z[r][c] = nc_add(Z[r][c], nc_mul(X[r][m], Y[m][c]));
    return Z;
}

/// R12, R21 and the matrix-of-generators operators A1, A2 on V (x) V,
/// with generator words offset so handle words start at gen_base.
struct ReMatrices {
    Mat R12, R21, A1, A2;
};

inline ReMatrices re_matrices(int N, int gen_base) {
    TensorOp R = r_matrix(N);
    auto Rc = [&](int a, int b, int c, int d) {
        return R.entry(R.flatten({a, b}), R.flatten({c, d}));
    };
    int dim = N * N;
    auto idx = [&](int i, int j) { return i * N + j; };
    ReMatrices m{Mat(dim, std::vector<NCPoly>(dim)), Mat(dim, std::vector<NCPoly>(dim)),
                 Mat(dim, std::vector<NCPoly>(dim)), Mat(dim, std::vector<NCPoly>(dim))};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l) {
                    RatFunc r12 = Rc(i, j, k, l);
                    if (!r12.is_zero()) m.R12[idx(i, j)][idx(k, l)] = {{Word{}, r12}};
                    RatFunc r21 = Rc(j, i, l, k);
                    if (!r21.is_zero()) m.R21[idx(i, j)][idx(k, l)] = {{Word{}, r21}};
                    if (j == l)
                        m.A1[idx(i, j)][idx(k, l)] = {{Word{gen_base + i * N + k}, RatFunc::one()}};
                    if (i == k)
                        m.A2[idx(i, j)][idx(k, l)] = {{Word{gen_base + j * N + l}, RatFunc::one()}};
                }
    return m;
}

/// The N^4 equations of R21 A1 R12 A2 = A2 R21 A1 R12.
inline std::vector<NCPoly> re_matrix_equations(int N) {
    ReMatrices m = re_matrices(N, 0);
    Mat lhs = nc_matmul(m.R21, nc_matmul(m.A1, nc_matmul(m.R12, m.A2)));
    Mat rhs = nc_matmul(m.A2, nc_matmul(m.R21, nc_matmul(m.A1, m.R12)));
    std::vector<NCPoly> eqs;
    for (size_t r = 0; r < lhs.size(); ++r)
        for (size_t c = 0; c < lhs.size(); ++c) {
            NCPoly p = nc_sub(lhs[r][c], rhs[r][c]);
            if (!p.empty()) eqs.push_back(std::move(p));
        }
    return eqs;
}

/// The elliptic-double cross identity A1 R D2 = R D2 R21 A1 R, written in
/// entries: a^i_j R^{jk}_{lm} d^m_n = R^{ik}_{op} d^p_r R^{ro}_{tu} a^u_v R^{vt}_{ln}.
/// Handle 1 (A) words are 0..N^2-1, handle 2 (D) words N^2..2N^2-1.
inline std::vector<NCPoly> elliptic_matrix_equations(int N) {
    TensorOp R = r_matrix(N);
    auto Rc = [&](int a, int b, int c, int d) {
        return R.entry(R.flatten({a, b}), R.flatten({c, d}));
    };
    int nn = N * N;
    auto A = [&](int r, int c) { return r * N + c; };
    auto D = [&](int r, int c) { return nn + r * N + c; };
    std::vector<NCPoly> eqs;
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l)
                for (int n = 0; n < N; ++n) {
                    NCPoly p;
                    for (int j = 0; j < N; ++j)
                        for (int m = 0; m < N; ++m) {
                            RatFunc c = Rc(j, k, l, m);
                            if (!c.is_zero()) p = nc_add(p, NCPoly{{Word{A(i, j), D(m, n)}, c}});
                        }
                    for (int o = 0; o < N; ++o)
                        for (int pp = 0; pp < N; ++pp)
                            for (int r = 0; r < N; ++r)
                                for (int t = 0; t < N; ++t)
                                    for (int u = 0; u < N; ++u)
                                        for (int v = 0; v < N; ++v) {
                                            RatFunc c =
                                                Rc(i, k, o, pp) * Rc(r, o, t, u) * Rc(v, t, l, n);
                                            if (!c.is_zero())
                                                p = nc_sub(p, NCPoly{{Word{D(pp, r), A(u, v)}, c}});
                                        }
                    if (!p.empty()) eqs.push_back(std::move(p));
                }
    return eqs;
}

/// Equal row spans, via uniqueness of the fully reduced echelon basis.
inline bool same_span(std::vector<NCPoly> a, std::vector<NCPoly> b) {
    auto ra = reduce_relations(std::move(a));
    auto rb = reduce_relations(std::move(b));
    if (ra.size() != rb.size()) return false;
    for (size_t i = 0; i < ra.size(); ++i)
        if (!(ra[i].terms == rb[i].terms)) return false;
    return true;
}

} // namespace qma::oracles
