#pragma once

#include <map>
#include <vector>

#include "qma/pattern.hpp"
#include "qma/rational.hpp"
#include "qma/relations.hpp"

namespace qma {

/// Element of gl_N (x) gl_N with rational coefficients; at(a,b,c,d) is the
/// coefficient of E_ab (x) E_cd (all indices 0-based).
class GTensor {
public:
    GTensor() : N_(0) {}
    explicit GTensor(int N) : N_(N), coeff_(N * N * N * N, Rational(0)) {}

    int dim_n() const { return N_; }
    Rational& at(int a, int b, int c, int d) { return coeff_[idx(a, b, c, d)]; }
    const Rational& at(int a, int b, int c, int d) const { return coeff_[idx(a, b, c, d)]; }

    GTensor flip() const; // exchange the two legs
    GTensor operator+(const GTensor& o) const;
    GTensor operator-(const GTensor& o) const;
    GTensor scaled(const Rational& c) const;
    bool operator==(const GTensor& o) const = default;

private:
    int idx(int a, int b, int c, int d) const { return ((a * N_ + b) * N_ + c) * N_ + d; }
    int N_;
    std::vector<Rational> coeff_;
};

/// Classical limit data of the R-matrix: R = Id + hbar r + O(hbar^2),
/// rho = (r - r_21)/2 antisymmetric, t = (r + r_21)/2 symmetric.
struct ClassicalRData {
    int N = 0;
    GTensor r, rho, t;
};

ClassicalRData classical_r(int N);

/// [r12, r13] + [r12, r23] + [r13, r23] = 0, evaluated on V^{(x)3}.
bool check_classical_yang_baxter(const GTensor& r);

/// Polynomial in the commuting coordinate functions t^{(h)}_{ij}; a monomial
/// is the sorted list of coordinate indices (indexed as in
/// QuadraticPresentation: handle-major, then row-major).
using PolyExpr = std::map<std::vector<int>, Rational>;

PolyExpr pe_add(const PolyExpr& a, const PolyExpr& b);
PolyExpr pe_sub(const PolyExpr& a, const PolyExpr& b);
PolyExpr pe_scale(const PolyExpr& a, const Rational& c);
PolyExpr pe_mul(const PolyExpr& a, const PolyExpr& b);

enum class VfKind { LeftInvariant, RightInvariant, Adjoint };

/// A vector field on a product of matrix groups: the element x acting by
/// left-/right-invariant fields or their difference x^{ad} = x^r - x^l.
struct VectorFieldAction {
    VfKind kind;
    std::vector<Rational> x; // N x N, row-major
};

/// Action on the coordinate t^{(handle) row}_{col} (Generator fields are
/// 1-based). x^l(T) = T x, x^r(T) = x T.
PolyExpr vf_action(const VectorFieldAction& a, const Generator& coord, int N);

/// Semenov-Tian-Shansky bracket {t_c1, t_c2} on a single copy of the group,
/// from the bivector rho^{ad,ad} + t^{r,l} - t^{l,r}.
PolyExpr sts_bracket(int N, const Generator& c1, const Generator& c2);

/// Fock-Rosly bracket for the ciliated-graph structure of the pattern:
/// same handle uses the STS bracket, distinct handles the crossing-type
/// bivector table; antisymmetric by construction.
PolyExpr fr_bracket(const GluingPattern& P, const Generator& c1, const Generator& c2, int N);

/// Leibniz extension of fr_bracket to a polynomial second argument.
PolyExpr fr_bracket_poly(const GluingPattern& P, const Generator& c1, const PolyExpr& p, int N);

/// Jacobi identity for fr_bracket, brute-forced over all coordinate
/// triples of the pattern.
bool fr_jacobi_check(const GluingPattern& P, int N);

/// For every generator pair, the hbar-linear term of the commutator in a_P
/// (extracted from the defining relations) must equal the Fock-Rosly
/// bracket. Throws on a pole at q = 1.
bool quasiclassical_check(const GluingPattern& P, int N);

/// Per-pair detail behind quasiclassical_check, for reporting.
struct QclPairResult {
    Generator a, b;
    bool ok;
};
std::vector<QclPairResult> quasiclassical_report(const GluingPattern& P, int N);

/// First-order expansion of the nested crossing operator (composed with the
/// classical block flip) equals r^{12,34} - 2 t^{1,3} - 2 t^{1,4} acting on
/// the four strands (V*, V, V*, V).
bool qcl_identity_check(int N);

} // namespace qma
