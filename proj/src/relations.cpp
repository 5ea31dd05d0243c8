#include "qma/relations.hpp"

#include <stdexcept>

#include "qma/braiding.hpp"

namespace qma {

NCPoly nc_add(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    for (const auto& [w, c] : b) {
        RatFunc s = (r.count(w) ? r[w] : RatFunc()) + c;
        if (s.is_zero())
            r.erase(w);
        else
            r[w] = s;
    }
    return r;
}

NCPoly nc_sub(const NCPoly& a, const NCPoly& b) { return nc_add(a, nc_scale(b, RatFunc(Rational(-1)))); }

NCPoly nc_scale(const NCPoly& a, const RatFunc& c) {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, co] : a) r[w] = co * c;
    return r;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [w1, c1] : a)
        for (const auto& [w2, c2] : b) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            RatFunc s = (r.count(w) ? r[w] : RatFunc()) + c1 * c2;
            if (s.is_zero())
                r.erase(w);
            else
                r[w] = s;
        }
    return r;
}

bool mono_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b; // lexicographic; larger generator index is larger
}

const Word& leading_monomial(const NCPoly& p) {
    if (p.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    const Word* best = nullptr;
    for (const auto& [w, c] : p)
        if (!best || mono_less(*best, w)) best = &w;
    return *best;
}

int QuadraticPresentation::index(const Generator& g) const {
    return (g.handle - 1) * N * N + (g.row - 1) * N + (g.col - 1);
}

Generator QuadraticPresentation::generator(int idx) const {
    Generator g;
    g.col = idx % N + 1;
    idx /= N;
    g.row = idx % N + 1;
    g.handle = idx / N + 1;
    return g;
}

namespace {

using NCMatrix = std::vector<std::vector<NCPoly>>; // N^2 x N^2

NCMatrix nc_matmul(const NCMatrix& a, const NCMatrix& b) {
    size_t d = a.size();
    NCMatrix r(d, std::vector<NCPoly>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k) {
            if (a[i][k].empty()) continue;
            for (size_t j = 0; j < d; ++j) {
                if (b[k][j].empty()) continue;
                r[i][j] = nc_add(r[i][j], nc_mul(a[i][k], b[k][j]));
            }
        }
    return r;
}

NCMatrix scalar_matrix(const TensorOp& op) {
    int d = op.dim_in();
    NCMatrix m(d, std::vector<NCPoly>(d));
    for (const auto& [k, v] : op.entries()) m[k.first][k.second] = {{Word{}, v}};
    return m;
}

} // namespace

std::vector<Relation> reduce_relations(std::vector<NCPoly> polys) {
    std::map<Word, NCPoly> basis; // keyed by leading monomial
    for (auto& p : polys) {
        // eliminate existing leading monomials from p
        bool changed = true;
        while (changed && !p.empty()) {
            changed = false;
            for (const auto& [lm, q] : basis) {
                auto it = p.find(lm);
                if (it != p.end()) {
                    p = nc_sub(p, nc_scale(q, it->second));
                    changed = true;
                    break;
                }
            }
        }
        if (p.empty()) continue;
        const Word lm = leading_monomial(p);
        p = nc_scale(p, p.at(lm).inverse());
        // back-substitute into the existing basis
        for (auto& [olm, q] : basis) {
            auto it = q.find(lm);
            if (it != q.end()) q = nc_sub(q, nc_scale(p, it->second));
        }
        basis.emplace(lm, std::move(p));
    }
    std::vector<Relation> out;
    for (auto& [lm, p] : basis) out.push_back({std::move(p)});
    return out;
}

std::vector<Relation> re_relations(int N) {
    if (N < 1) throw std::invalid_argument("re_relations: N must be positive");
    TensorOp R = r_matrix(N);
    int d = N * N;
    auto gen = [N](int row, int col) { return row * N + col; }; // 0-based local index
    NCMatrix R12 = scalar_matrix(R);
    NCMatrix R21(d, std::vector<NCPoly>(d));
    for (const auto& [k, v] : R.entries()) {
        // R21[(i,j),(k,l)] = R[(j,i),(l,k)]
        int oi = k.first / N, oj = k.first % N;
        int ii = k.second / N, ij = k.second % N;
        R21[oj * N + oi][ij * N + ii] = {{Word{}, v}};
    }
    NCMatrix A1(d, std::vector<NCPoly>(d)), A2(d, std::vector<NCPoly>(d));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                // (A (x) I)[(i,j),(k,j)] = a^i_k ; (I (x) A)[(i,j),(i,k)] = a^j_k
                A1[i * N + j][k * N + j] = {{Word{gen(i, k)}, RatFunc::one()}};
                A2[j * N + i][j * N + k] = {{Word{gen(i, k)}, RatFunc::one()}};
            }
    NCMatrix lhs = nc_matmul(nc_matmul(nc_matmul(R21, A1), R12), A2);
    NCMatrix rhs = nc_matmul(nc_matmul(nc_matmul(A2, R21), A1), R12);
    // keep the raw equations (coefficients are Laurent polynomials, so no
    // poles at q = 1), discarding those dependent on earlier ones
    std::vector<Relation> out;
    std::map<Word, NCPoly> basis;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            NCPoly p = nc_sub(lhs[i][j], rhs[i][j]);
            NCPoly red = p;
            bool changed = true;
            while (changed && !red.empty()) {
                changed = false;
                for (const auto& [lm, q] : basis) {
                    auto it = red.find(lm);
                    if (it != red.end()) {
                        red = nc_sub(red, nc_scale(q, it->second));
                        changed = true;
                        break;
                    }
                }
            }
            if (red.empty()) continue;
            const Word lm = leading_monomial(red);
            basis.emplace(lm, nc_scale(red, red.at(lm).inverse()));
            out.push_back({std::move(p)});
        }
    return out;
}

std::vector<Relation> cross_relations(const CrossingType& t, int N) {
    if (N < 1) throw std::invalid_argument("cross_relations: N must be positive");
    // crossing_operator maps O^(lo) (x) O^(hi) -> O^(hi) (x) O^(lo); to
    // rewrite a product taken in (hi, lo) order we need its inverse, which
    // is the operator of the opposite sign.
    TensorOp C = crossing_operator({t.kind, -t.sign}, N);
    int nn = N * N;
    auto lo = [N](int row, int col) { return row * N + col; };
    auto hi = [N, nn](int row, int col) { return nn + row * N + col; };
    std::vector<Relation> out;
    // input multi-index (k,l,m,p) read in (hi, lo) block order
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
            for (int m = 0; m < N; ++m)
                for (int p = 0; p < N; ++p) {
                    NCPoly rel;
                    rel[Word{hi(k, l), lo(m, p)}] = RatFunc::one();
                    int in = C.flatten({k, l, m, p});
                    for (int a = 0; a < N; ++a)
                        for (int b = 0; b < N; ++b)
                            for (int g = 0; g < N; ++g)
                                for (int dd = 0; dd < N; ++dd) {
                                    RatFunc c = C.entry(C.flatten({a, b, g, dd}), in);
                                    if (c.is_zero()) continue;
                                    Word w{lo(a, b), hi(g, dd)};
                                    rel[w] = (rel.count(w) ? rel[w] : RatFunc()) - c;
                                }
                    out.push_back({std::move(rel)});
                }
    return out;
}

QuadraticPresentation build_presentation(const GluingPattern& P, int N) {
    if (N < 1) throw std::invalid_argument("build_presentation: N must be positive");
    QuadraticPresentation pres;
    pres.N = N;
    pres.n = P.handle_count();
    int nn = N * N;
    auto remap = [&](const NCPoly& poly, auto&& letter_map) {
        NCPoly r;
        for (const auto& [w, c] : poly) {
            Word nw;
            for (int x : w) nw.push_back(letter_map(x));
            r[nw] = c;
        }
        return r;
    };
    std::vector<Relation> re = re_relations(N);
    for (int h = 1; h <= pres.n; ++h) {
        int off = (h - 1) * nn;
        for (const auto& rel : re)
            pres.relations.push_back({remap(rel.terms, [off](int x) { return x + off; })});
    }
    for (int i = 1; i <= pres.n; ++i)
        for (int j = i + 1; j <= pres.n; ++j) {
            CrossingType t = P.classify(i, j);
            for (const auto& rel : cross_relations(t, N)) {
                int off_lo = (i - 1) * nn, off_hi = (j - 1) * nn;
                pres.relations.push_back({remap(rel.terms, [=](int x) {
                    return x < nn ? x + off_lo : x - nn + off_hi;
                })});
            }
        }
    return pres;
}

RatFunc counit_eps(const Generator& g) {
    return g.row == g.col ? RatFunc::one() : RatFunc();
}

RatFunc counit_eps(const NCPoly& p, const QuadraticPresentation& pres) {
    RatFunc acc;
    for (const auto& [w, c] : p) {
        RatFunc val = c;
        for (int idx : w) val = val * counit_eps(pres.generator(idx));
        acc = acc + val;
    }
    return acc;
}

} // namespace qma
