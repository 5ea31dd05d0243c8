#include "qma/classical.hpp"

#include <algorithm>
#include <stdexcept>

#include "qma/braiding.hpp"
#include "qma/tensorop.hpp"

namespace qma {

GTensor GTensor::flip() const {
    GTensor f(N_);
    for (int a = 0; a < N_; ++a)
        for (int b = 0; b < N_; ++b)
            for (int c = 0; c < N_; ++c)
                for (int d = 0; d < N_; ++d) f.at(c, d, a, b) = at(a, b, c, d);
    return f;
}

GTensor GTensor::operator+(const GTensor& o) const {
    GTensor s(N_);
    for (size_t i = 0; i < coeff_.size(); ++i) s.coeff_[i] = coeff_[i] + o.coeff_[i];
    return s;
}

GTensor GTensor::operator-(const GTensor& o) const {
    GTensor s(N_);
    for (size_t i = 0; i < coeff_.size(); ++i) s.coeff_[i] = coeff_[i] - o.coeff_[i];
    return s;
}

GTensor GTensor::scaled(const Rational& c) const {
    GTensor s(N_);
    for (size_t i = 0; i < coeff_.size(); ++i) s.coeff_[i] = coeff_[i] * c;
    return s;
}

ClassicalRData classical_r(int N) {
    if (N < 1) throw std::invalid_argument("classical_r: N must be positive");
    TensorOp R = r_matrix(N);
    ClassicalRData d;
    d.N = N;
    d.r = GTensor(N);
    for (const auto& [k, v] : R.entries()) {
        auto o = R.unflatten(k.first, 2);  // (i, k): output basis
        auto in = R.unflatten(k.second, 2); // (j, l)
        HSeries s = v.hbar_expand();
        Rational id = (k.first == k.second) ? Rational(1) : Rational(0);
        if (s.c0 != id) throw std::logic_error("classical_r: R is not Id at q = 1");
        d.r.at(o[0], in[0], o[1], in[1]) = d.r.at(o[0], in[0], o[1], in[1]) + s.c1;
    }
    GTensor r21 = d.r.flip();
    Rational half(1, 2);
    d.rho = (d.r - r21).scaled(half);
    d.t = (d.r + r21).scaled(half);
    return d;
}

namespace {

/// Dense square rational matrix, row-major.
struct DMat {
    int d = 0;
    std::vector<Rational> m;
    explicit DMat(int dim) : d(dim), m(size_t(dim) * dim, Rational(0)) {}
    Rational& at(int i, int j) { return m[size_t(i) * d + j]; }
    const Rational& at(int i, int j) const { return m[size_t(i) * d + j]; }
    DMat mul(const DMat& o) const {
        DMat r(d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                if (m[size_t(i) * d + k] == 0) continue;
                for (int j = 0; j < d; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }
    void add_scaled(const DMat& o, const Rational& c) {
        for (size_t i = 0; i < m.size(); ++i) m[i] += o.m[i] * c;
    }
    bool is_zero() const {
        for (const auto& v : m)
            if (v != 0) return false;
        return true;
    }
};

/// E_ab acting on the given legs (summed, i.e. via the coproduct) of a
/// strand list; V legs act by E_ab, V* legs by -(E_ab)^T.
DMat leg_action(int a, int b, const std::vector<int>& legs, const StrandList& strands, int N) {
    int n = (int)strands.size();
    int dim = 1;
    for (int i = 0; i < n; ++i) dim *= N;
    DMat r(dim);
    std::vector<int> idx(n, 0);
    for (int flat = 0; flat < dim; ++flat) {
        int rest = flat;
        for (int i = n - 1; i >= 0; --i) {
            idx[i] = rest % N;
            rest /= N;
        }
        for (int p : legs) {
            if (strands[p] == Strand::V) {
                if (idx[p] != b) continue;
                int out = flat + (a - b) * TensorOp::ipow(N, n - 1 - p);
                r.at(out, flat) += 1;
            } else {
                if (idx[p] != a) continue;
                int out = flat + (b - a) * TensorOp::ipow(N, n - 1 - p);
                r.at(out, flat) += -1;
            }
        }
    }
    return r;
}

/// Contract a g (x) g tensor through leg actions: sum B_abcd .
/// leg_action(E_ab, legs1) . leg_action(E_cd, legs2).
DMat contract_tensor(const GTensor& B, const std::vector<int>& legs1,
                     const std::vector<int>& legs2, const StrandList& strands) {
    int N = B.dim_n();
    int dim = 1;
    for (size_t i = 0; i < strands.size(); ++i) dim *= N;
    DMat r(dim);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) {
                    const Rational& co = B.at(a, b, c, d);
                    if (co == 0) continue;
                    DMat first = leg_action(a, b, legs1, strands, N);
                    DMat second = leg_action(c, d, legs2, strands, N);
                    r.add_scaled(first.mul(second), co);
                }
    return r;
}

} // namespace

bool check_classical_yang_baxter(const GTensor& r) {
    int N = r.dim_n();
    StrandList vvv{Strand::V, Strand::V, Strand::V};
    // evaluate r_pq as operators on V (x) V (x) V
    auto rr = [&](int p, int q) { return contract_tensor(r, {p}, {q}, vvv); };
    DMat r12 = rr(0, 1), r13 = rr(0, 2), r23 = rr(1, 2);
    auto comm = [](const DMat& a, const DMat& b) {
        DMat c = a.mul(b);
        c.add_scaled(b.mul(a), Rational(-1));
        return c;
    };
    DMat sum = comm(r12, r13);
    sum.add_scaled(comm(r12, r23), Rational(1));
    sum.add_scaled(comm(r13, r23), Rational(1));
    return sum.is_zero();
}

PolyExpr pe_add(const PolyExpr& a, const PolyExpr& b) {
    PolyExpr r = a;
    for (const auto& [m, c] : b) {
        Rational s = (r.count(m) ? r[m] : Rational(0)) + c;
        if (s == 0)
            r.erase(m);
        else
            r[m] = s;
    }
    return r;
}

PolyExpr pe_sub(const PolyExpr& a, const PolyExpr& b) { return pe_add(a, pe_scale(b, Rational(-1))); }

PolyExpr pe_scale(const PolyExpr& a, const Rational& c) {
    PolyExpr r;
    if (c == 0) return r;
    for (const auto& [m, co] : a) r[m] = co * c;
    return r;
}

PolyExpr pe_mul(const PolyExpr& a, const PolyExpr& b) {
    PolyExpr r;
    for (const auto& [m1, c1] : a)
        for (const auto& [m2, c2] : b) {
            std::vector<int> m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            Rational s = (r.count(m) ? r[m] : Rational(0)) + c1 * c2;
            if (s == 0)
                r.erase(m);
            else
                r[m] = s;
        }
    return r;
}

namespace {

int coord_index(int handle, int row0, int col0, int N) {
    return (handle - 1) * N * N + row0 * N + col0;
}

/// Action of E_ab (0-based) on the coordinate t^{(h)}_{i j} (0-based i, j):
/// x^l(T) = T x so E_ab^l t_ij = delta_bj t_ia; x^r(T) = x T so
/// E_ab^r t_ij = delta_ai t_bj.
PolyExpr basis_vf(VfKind kind, int a, int b, int handle, int i, int j, int N) {
    PolyExpr r;
    if (kind == VfKind::Adjoint)
        return pe_sub(basis_vf(VfKind::RightInvariant, a, b, handle, i, j, N),
                      basis_vf(VfKind::LeftInvariant, a, b, handle, i, j, N));
    if (kind == VfKind::LeftInvariant) {
        if (b == j) r[{coord_index(handle, i, a, N)}] = Rational(1);
    } else {
        if (a == i) r[{coord_index(handle, b, j, N)}] = Rational(1);
    }
    return r;
}

/// { t_c1, t_c2 } contribution of a bivector B with the given leg actions,
/// first leg acting on handle h1's coordinate, second on h2's.
PolyExpr apply_bivector(const GTensor& B, VfKind k1, VfKind k2, const Generator& c1,
                        const Generator& c2) {
    int N = B.dim_n();
    PolyExpr r;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) {
                    const Rational& co = B.at(a, b, c, d);
                    if (co == 0) continue;
                    PolyExpr f = basis_vf(k1, a, b, c1.handle, c1.row - 1, c1.col - 1, N);
                    PolyExpr g = basis_vf(k2, c, d, c2.handle, c2.row - 1, c2.col - 1, N);
                    r = pe_add(r, pe_scale(pe_mul(f, g), co));
                }
    return r;
}

} // namespace

PolyExpr vf_action(const VectorFieldAction& act, const Generator& coord, int N) {
    PolyExpr r;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            const Rational& c = act.x[size_t(a) * N + b];
            if (c == 0) continue;
            r = pe_add(r, pe_scale(basis_vf(act.kind, a, b, coord.handle, coord.row - 1,
                                            coord.col - 1, N),
                                   c));
        }
    return r;
}

PolyExpr sts_bracket(int N, const Generator& c1, const Generator& c2) {
    if (c1.handle != c2.handle)
        throw std::invalid_argument("sts_bracket: coordinates must share a handle");
    ClassicalRData d = classical_r(N);
    PolyExpr r = apply_bivector(d.rho, VfKind::Adjoint, VfKind::Adjoint, c1, c2);
    r = pe_add(r, apply_bivector(d.t, VfKind::RightInvariant, VfKind::LeftInvariant, c1, c2));
    r = pe_sub(r, apply_bivector(d.t, VfKind::LeftInvariant, VfKind::RightInvariant, c1, c2));
    return r;
}

PolyExpr fr_bracket(const GluingPattern& P, const Generator& c1, const Generator& c2, int N) {
    int n = P.handle_count();
    if (c1.handle < 1 || c1.handle > n || c2.handle < 1 || c2.handle > n)
        throw std::invalid_argument("fr_bracket: handle out of range");
    if (c1.handle == c2.handle) return sts_bracket(N, c1, c2);
    if (c1.handle > c2.handle)
        return pe_scale(fr_bracket(P, c2, c1, N), Rational(-1));
    CrossingType ct = P.classify(c1.handle, c2.handle);
    ClassicalRData d = classical_r(N);
    // A negatively-crossed pair is the positively-crossed pair with the
    // handles relabeled, so the negative bracket is minus the positive one
    // with the bivector transposed (tensor legs and vector-field kinds).
    bool pos = ct.sign > 0;
    auto term = [&](const GTensor& B, VfKind k1, VfKind k2) {
        return pos ? apply_bivector(B, k1, k2, c1, c2)
                   : apply_bivector(B.flip(), k2, k1, c1, c2);
    };
    PolyExpr r = term(d.r, VfKind::Adjoint, VfKind::Adjoint);
    if (ct.kind == CrossingKind::Linked || ct.kind == CrossingKind::Nested)
        r = pe_add(r, pe_scale(term(d.t, VfKind::RightInvariant, VfKind::LeftInvariant),
                               Rational(2)));
    if (ct.kind == CrossingKind::Nested)
        r = pe_sub(r, pe_scale(term(d.t, VfKind::RightInvariant, VfKind::RightInvariant),
                               Rational(2)));
    return pe_scale(r, Rational(ct.sign));
}

PolyExpr fr_bracket_poly(const GluingPattern& P, const Generator& c1, const PolyExpr& p, int N) {
    // coordinate index back to Generator
    auto gen = [N](int idx) {
        Generator g;
        g.col = idx % N + 1;
        idx /= N;
        g.row = idx % N + 1;
        g.handle = idx / N + 1;
        return g;
    };
    PolyExpr out;
    for (const auto& [m, c] : p) {
        // Leibniz: {x, m_0 ... m_k} = sum_i m_0 .. {x, m_i} .. m_k
        for (size_t i = 0; i < m.size(); ++i) {
            PolyExpr term = fr_bracket(P, c1, gen(m[i]), N);
            for (size_t j = 0; j < m.size(); ++j) {
                if (j == i) continue;
                term = pe_mul(term, PolyExpr{{{m[j]}, Rational(1)}});
            }
            out = pe_add(out, pe_scale(term, c));
        }
    }
    return out;
}

bool fr_jacobi_check(const GluingPattern& P, int N) {
    int G = P.handle_count() * N * N;
    auto gen = [N](int idx) {
        Generator g;
        g.col = idx % N + 1;
        idx /= N;
        g.row = idx % N + 1;
        g.handle = idx / N + 1;
        return g;
    };
    for (int x = 0; x < G; ++x)
        for (int y = x + 1; y < G; ++y)
            for (int z = y + 1; z < G; ++z) {
                PolyExpr s = fr_bracket_poly(P, gen(x), fr_bracket(P, gen(y), gen(z), N), N);
                s = pe_add(s, fr_bracket_poly(P, gen(y), fr_bracket(P, gen(z), gen(x), N), N));
                s = pe_add(s, fr_bracket_poly(P, gen(z), fr_bracket(P, gen(x), gen(y), N), N));
                if (!s.empty()) return false;
            }
    return true;
}

namespace {

PolyExpr commutative_image(const std::map<Word, Rational>& terms) {
    PolyExpr r;
    for (const auto& [w, c] : terms) {
        std::vector<int> m(w.begin(), w.end());
        std::sort(m.begin(), m.end());
        Rational s = (r.count(m) ? r[m] : Rational(0)) + c;
        if (s == 0)
            r.erase(m);
        else
            r[m] = s;
    }
    return r;
}

} // namespace

static bool quasiclassical_impl(const GluingPattern& P, int N,
                                std::vector<QclPairResult>* report) {
    QuadraticPresentation pres = build_presentation(P, N);
    // expand every relation: value at q = 1 plus the hbar-linear part
    struct Row {
        std::map<Word, Rational> s; // q = 1 specialization
        std::map<Word, Rational> l; // hbar-linear coefficients
    };
    auto put = [](std::map<Word, Rational>& m, const Word& w, const Rational& c) {
        if (c == 0) return;
        Rational v = (m.count(w) ? m[w] : Rational(0)) + c;
        if (v == 0)
            m.erase(w);
        else
            m[w] = v;
    };
    // row-reduced basis keyed by the leading word of the specialization
    std::map<Word, Row> basis;
    auto reduce_row = [&](Row& r) {
        bool changed = true;
        while (changed && !r.s.empty()) {
            changed = false;
            for (const auto& [lw, b] : basis) {
                auto it = r.s.find(lw);
                if (it == r.s.end()) continue;
                Rational c = it->second;
                for (const auto& [w, v] : b.s) put(r.s, w, -c * v);
                for (const auto& [w, v] : b.l) put(r.l, w, -c * v);
                changed = true;
                break;
            }
        }
    };
    for (const auto& rel : pres.relations) {
        Row r;
        for (const auto& [w, c] : rel.terms) {
            HSeries h = c.hbar_expand(); // throws on a pole at q = 1
            put(r.s, w, h.c0);
            put(r.l, w, h.c1);
        }
        reduce_row(r);
        if (r.s.empty()) {
            // hbar times a relation of the classical ring: its commutative
            // image must vanish, otherwise the limit is not flat
            if (!commutative_image(r.l).empty()) return false;
            continue;
        }
        const Word* lw = nullptr;
        for (const auto& [w, c] : r.s)
            if (!lw || mono_less(*lw, w)) lw = &w;
        Rational inv = Rational(1) / r.s.at(*lw);
        Row monic;
        for (const auto& [w, c] : r.s) monic.s[w] = c * inv;
        for (const auto& [w, c] : r.l) monic.l[w] = c * inv;
        Word key = *lw;
        // back-substitution keeps reduction single-pass deterministic
        for (auto& [olw, b] : basis) {
            auto it = b.s.find(key);
            if (it == b.s.end()) continue;
            Rational c = it->second;
            for (const auto& [w, v] : monic.s) put(b.s, w, -c * v);
            for (const auto& [w, v] : monic.l) put(b.l, w, -c * v);
        }
        basis.emplace(std::move(key), std::move(monic));
    }
    int G = pres.generator_count();
    bool all_ok = true;
    for (int x = 0; x < G; ++x)
        for (int y = 0; y < x; ++y) {
            Row r;
            r.s[{x, y}] = Rational(1);
            r.s[{y, x}] = Rational(-1);
            reduce_row(r);
            bool ok = r.s.empty(); // else xy - yx not in the classical span
            if (ok) {
                PolyExpr bracket = commutative_image(r.l);
                PolyExpr expect =
                    fr_bracket(P, pres.generator(x), pres.generator(y), N);
                ok = bracket == expect;
            }
            all_ok = all_ok && ok;
            if (report)
                report->push_back({pres.generator(x), pres.generator(y), ok});
            else if (!ok)
                return false;
        }
    return all_ok;
}

bool quasiclassical_check(const GluingPattern& P, int N) {
    return quasiclassical_impl(P, N, nullptr);
}

std::vector<QclPairResult> quasiclassical_report(const GluingPattern& P, int N) {
    std::vector<QclPairResult> report;
    quasiclassical_impl(P, N, &report);
    return report;
}

bool qcl_identity_check(int N) {
    static const StrandList strands{Strand::Vdual, Strand::V, Strand::Vdual, Strand::V};
    // block flip at q = 1 composed with the nested crossing operator
    TensorOp flip = TensorOp::strand_permutation(strands, {2, 3, 0, 1}, N);
    TensorOp nbar = flip.compose(crossing_operator({CrossingKind::Nested, +1}, N));
    std::map<std::pair<int, int>, Rational> lhs = nbar.first_order();
    ClassicalRData d = classical_r(N);
    DMat rhs = contract_tensor(d.r, {0, 1}, {2, 3}, strands);
    rhs.add_scaled(contract_tensor(d.t, {0}, {2}, strands), Rational(-2));
    rhs.add_scaled(contract_tensor(d.t, {0}, {3}, strands), Rational(-2));
    for (int i = 0; i < rhs.d; ++i)
        for (int j = 0; j < rhs.d; ++j) {
            auto it = lhs.find({i, j});
            Rational lv = (it == lhs.end()) ? Rational(0) : it->second;
            if (lv != rhs.at(i, j)) return false;
        }
    return true;
}

} // namespace qma
