#pragma once

#include "qma/tensorop.hpp"

namespace qma {

/// Standard R-matrix of the vector representation of U_q(gl_N) on V (x) V:
///   R = q sum_i E_ii(x)E_ii + sum_{i!=j} E_ii(x)E_jj
///       + (q - q^{-1}) sum_{i>j} E_ij(x)E_ji.
/// Normalized so that (R-hat - q)(R-hat + q^{-1}) = 0 with R-hat = flip.R.
TensorOp r_matrix(int N);

bool check_yang_baxter(const TensorOp& R);

bool check_hecke(const TensorOp& R);

/// Braiding sigma_{a,b}: a(x)b -> b(x)a for strand objects a, b.
/// sigma_{V,V} = flip.R; the three dual cases are the unique operators
/// compatible with evaluation (see doc/conventions.md).
TensorOp braiding(Strand a, Strand b, int N);

/// Inverse braiding (sigma_{a,b})^{-1}: b(x)a -> a(x)b.
TensorOp braiding_inverse(Strand a, Strand b, int N);

struct BraidGenerator {
    int position; // 1-based, crosses strands position, position+1
    int power;    // +1 or -1
};

/// Braid word; generators are listed in application order (the first
/// element acts first). The written form s_a s_b ... therefore lists the
/// rightmost factor of the composite last.
struct BraidWord {
    std::vector<BraidGenerator> generators;
    int strand_count = 0;

    BraidWord inverse() const;
};

TensorOp braid_word_eval(const BraidWord& w, const StrandList& strands, int N);

/// Braid relation (hexagon coherence on adjacent strands):
/// s1 s2 s1 = s2 s1 s2 evaluated on the strand triple (a, b, c).
bool check_braid_relation(Strand a, Strand b, Strand c, int N);

/// Naturality of the dual braidings with evaluation ev: V* (x) V -> k
/// ("snake" checks): braiding the pair (V*, V) past a strand w and then
/// evaluating agrees with evaluating first.
bool check_ev_naturality(Strand w, int N);

enum class CrossingKind { Linked, Nested, Unlinked };

struct CrossingType {
    CrossingKind kind;
    int sign; // +1 or -1

    bool operator==(const CrossingType&) const = default;
};

/// Crossing operator on the four strands (V*, V, V*, V) of a pair of
/// handle blocks, exchanging the two blocks. Positive types are the braid
/// words L = s2^-1 s1 s3 s2, N = s2^-1 s1^-1 s3 s2, U = s2 s1 s3 s2
/// (rightmost factor applied first); negative types are exact inverses.
TensorOp crossing_operator(const CrossingType& t, int N);

class GluingPattern; // pattern.hpp

/// Shuffle braiding J_{ij} reordering the four strands of handles i and j
/// from handle-grouped order (i's pair, then j's pair) to the interleaved
/// order given by the pattern positions. Built from positive braidings
/// moving j's strands left past i's.
TensorOp j_operator(const GluingPattern& P, int i, int j, int N);

/// J_{ij}^{-1} evaluated as a braid word (no dense inversion).
TensorOp j_operator_inverse(const GluingPattern& P, int i, int j, int N);

/// The braid-word crossing operator of classify(i, j) agrees with the
/// composition of shuffle operators: J_ij^-1 . J_ji for linked and
/// unlinked pairs, J_ji^-1 . J_ij for nested ones (the nested figure word
/// mixes crossing signs, which reverses the composition; the orientation
/// per kind is frozen by doc/conventions.md).
bool check_crossing_consistency(const GluingPattern& P, int i, int j, int N);

} // namespace qma
