#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qma/ratfunc.hpp"

namespace qma {

enum class Strand { V, Vdual };

using StrandList = std::vector<Strand>;

/// Sparse linear operator on a tensor product of copies of the vector
/// representation V and its dual. Entries are keyed by flattened
/// (out, in) multi-indices, row-major with the first strand most
/// significant; zero entries are never stored.
class TensorOp {
public:
    TensorOp() : dim_n_(1) {}
    TensorOp(StrandList in, StrandList out, int N);

    static TensorOp identity(const StrandList& strands, int N);
    /// Permutation operator sending strand s to position perm[s] (0-based).
    static TensorOp strand_permutation(const StrandList& in, const std::vector<int>& perm, int N);

    int dim_n() const { return dim_n_; }
    const StrandList& strands_in() const { return in_; }
    const StrandList& strands_out() const { return out_; }
    int dim_in() const { return ipow(dim_n_, (int)in_.size()); }
    int dim_out() const { return ipow(dim_n_, (int)out_.size()); }

    const std::map<std::pair<int, int>, RatFunc>& entries() const { return entries_; }
    RatFunc entry(int out, int in) const;
    void set_entry(int out, int in, const RatFunc& v);

    /// this \circ other (other applied first). Signatures must match.
    TensorOp compose(const TensorOp& other) const;
    TensorOp tensor(const TensorOp& other) const;
    /// id^{pos} (x) op (x) id^{rest} on the given ambient strand list
    /// (0-based position of op's first strand).
    static TensorOp embed(const TensorOp& op, int pos, const StrandList& ambient, int N);

    TensorOp inverse() const; // dense Gauss-Jordan; square operators only
    TensorOp operator+(const TensorOp& o) const;
    TensorOp operator-(const TensorOp& o) const;
    TensorOp scaled(const RatFunc& c) const;
    bool operator==(const TensorOp& o) const;

    /// Exact specialization q = 1.
    std::map<std::pair<int, int>, Rational> at_q1() const;
    bool is_permutation_at_q1() const;

    /// First-order term in h of (this - identity), entrywise, under
    /// q = exp(h/2). Throws on poles at q = 1.
    std::map<std::pair<int, int>, Rational> first_order() const;

    std::vector<int> unflatten(int flat, int count) const;
    int flatten(const std::vector<int>& idx) const;

    static int ipow(int b, int e);

private:
    StrandList in_, out_;
    int dim_n_;
    std::map<std::pair<int, int>, RatFunc> entries_;
};

} // namespace qma
