#pragma once

#include <map>
#include <vector>

#include "qma/pattern.hpp"
#include "qma/ratfunc.hpp"

namespace qma {

/// Matrix coordinate a^{(handle) row}_{col}; all fields 1-based.
struct Generator {
    int handle, row, col;
    bool operator==(const Generator&) const = default;
};

/// Word in the generators, stored as 0-based generator indices
/// (handle-major, then row-major). Degree = length.
using Word = std::vector<int>;

/// Linear combination of words with coefficients in Q(q).
using NCPoly = std::map<Word, RatFunc>;

NCPoly nc_add(const NCPoly& a, const NCPoly& b);
NCPoly nc_sub(const NCPoly& a, const NCPoly& b);
NCPoly nc_scale(const NCPoly& a, const RatFunc& c);
NCPoly nc_mul(const NCPoly& a, const NCPoly& b);

/// Degree-lexicographic order; larger generator index wins first.
bool mono_less(const Word& a, const Word& b);
/// Leading (order-largest) monomial; poly must be nonzero.
const Word& leading_monomial(const NCPoly& p);

/// A relation Sum c_w . w = 0, homogeneous of degree 2 (degree 3 terms can
/// appear only inside the rewrite system after completion).
struct Relation {
    NCPoly terms;
};

struct QuadraticPresentation {
    int N = 1; // matrix size
    int n = 0; // handle count
    std::vector<Relation> relations;

    int generator_count() const { return n * N * N; }
    int index(const Generator& g) const;
    Generator generator(int idx) const;
};

/// Row-reduce homogeneous relations to an independent set with distinct
/// leading monomials and leading coefficient 1; deterministic.
std::vector<Relation> reduce_relations(std::vector<NCPoly> polys);

/// The N^4 scalar equations of R21 A1 R12 A2 = A2 R21 A1 R12 for a single
/// handle, deduplicated to a linearly independent subset of the raw
/// equations (coefficients stay pole-free at q = 1). Words use local
/// generator indices 0..N^2-1.
std::vector<Relation> re_relations(int N);

/// Cross relations for an ordered handle pair (lower, higher) of the given
/// crossing type, derived from the crossing operator: each product
/// g^{(hi)} g^{(lo)} is rewritten through the operator into
/// g^{(lo)} g^{(hi)} combinations. Local indices: letters 0..N^2-1 belong
/// to the lower handle, N^2..2N^2-1 to the higher one.
std::vector<Relation> cross_relations(const CrossingType& t, int N);

/// Full presentation of a_P: one reflection-equation block per handle and
/// one cross block per handle pair, chosen by classify.
QuadraticPresentation build_presentation(const GluingPattern& P, int N);

/// Counit: eps(a^{(k)i}_j) = delta_ij.
RatFunc counit_eps(const Generator& g);
/// Multiplicative extension of the counit to a polynomial. This is an
/// algebra character only on presentations without linked handle pairs:
/// already at N = 1 a linked pair gives the q-Weyl relation a d = q^2 d a,
/// which admits no character sending both generators to 1.
RatFunc counit_eps(const NCPoly& p, const QuadraticPresentation& pres);

} // namespace qma
