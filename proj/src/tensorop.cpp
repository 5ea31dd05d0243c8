#include "qma/tensorop.hpp"

#include <stdexcept>

namespace qma {

TensorOp::TensorOp(StrandList in, StrandList out, int N)
    : in_(std::move(in)), out_(std::move(out)), dim_n_(N) {
    if (N < 1) throw std::invalid_argument("TensorOp: N must be positive");
}

int TensorOp::ipow(int b, int e) {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

TensorOp TensorOp::identity(const StrandList& strands, int N) {
    TensorOp op(strands, strands, N);
    int d = op.dim_in();
    for (int i = 0; i < d; ++i) op.entries_[{i, i}] = RatFunc::one();
    return op;
}

TensorOp TensorOp::strand_permutation(const StrandList& in, const std::vector<int>& perm, int N) {
    StrandList out(in.size());
    for (size_t s = 0; s < in.size(); ++s) out[perm[s]] = in[s];
    TensorOp op(in, out, N);
    int d = op.dim_in();
    int k = (int)in.size();
    for (int flat = 0; flat < d; ++flat) {
        auto idx = op.unflatten(flat, k);
        std::vector<int> oidx(k);
        for (int s = 0; s < k; ++s) oidx[perm[s]] = idx[s];
        op.entries_[{op.flatten(oidx), flat}] = RatFunc::one();
    }
    return op;
}

RatFunc TensorOp::entry(int out, int in) const {
    auto it = entries_.find({out, in});
    return it == entries_.end() ? RatFunc() : it->second;
}

void TensorOp::set_entry(int out, int in, const RatFunc& v) {
    if (v.is_zero())
        entries_.erase({out, in});
    else
        entries_[{out, in}] = v;
}

std::vector<int> TensorOp::unflatten(int flat, int count) const {
    std::vector<int> idx(count);
    for (int s = count - 1; s >= 0; --s) {
        idx[s] = flat % dim_n_;
        flat /= dim_n_;
    }
    return idx;
}

int TensorOp::flatten(const std::vector<int>& idx) const {
    int flat = 0;
    for (int v : idx) flat = flat * dim_n_ + v;
    return flat;
}

TensorOp TensorOp::compose(const TensorOp& other) const {
    if (other.out_ != in_ || other.dim_n_ != dim_n_)
        throw std::invalid_argument("TensorOp::compose: signature mismatch");
    TensorOp r(other.in_, out_, dim_n_);
    // index other's entries by output
    std::map<int, std::vector<std::pair<int, const RatFunc*>>> by_out;
    for (const auto& [key, v] : other.entries_) by_out[key.first].push_back({key.second, &v});
    for (const auto& [key, v] : entries_) {
        auto it = by_out.find(key.second);
        if (it == by_out.end()) continue;
        for (const auto& [in, bv] : it->second) {
            RatFunc acc = r.entry(key.first, in) + v * (*bv);
            r.set_entry(key.first, in, acc);
        }
    }
    return r;
}

TensorOp TensorOp::tensor(const TensorOp& other) const {
    if (other.dim_n_ != dim_n_) throw std::invalid_argument("TensorOp::tensor: N mismatch");
    StrandList in = in_, out = out_;
    in.insert(in.end(), other.in_.begin(), other.in_.end());
    out.insert(out.end(), other.out_.begin(), other.out_.end());
    TensorOp r(in, out, dim_n_);
    int di = other.dim_in(), dout = other.dim_out();
    for (const auto& [k1, v1] : entries_)
        for (const auto& [k2, v2] : other.entries_)
            r.entries_[{k1.first * dout + k2.first, k1.second * di + k2.second}] = v1 * v2;
    return r;
}

TensorOp TensorOp::embed(const TensorOp& op, int pos, const StrandList& ambient, int N) {
    int k = (int)op.strands_in().size();
    StrandList left(ambient.begin(), ambient.begin() + pos);
    StrandList right(ambient.begin() + pos + k, ambient.end());
    TensorOp r = identity(left, N).tensor(op);
    return r.tensor(identity(right, N));
}

TensorOp TensorOp::inverse() const {
    int d = dim_in();
    if (d != dim_out()) throw std::invalid_argument("TensorOp::inverse: not square");
    // dense Gauss-Jordan over Q(q)
    std::vector<std::vector<RatFunc>> m(d, std::vector<RatFunc>(2 * d));
    for (const auto& [k, v] : entries_) m[k.first][k.second] = v;
    for (int i = 0; i < d; ++i) m[i][d + i] = RatFunc::one();
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row)
            if (!m[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) throw std::domain_error("TensorOp::inverse: singular operator");
        std::swap(m[col], m[pivot]);
        RatFunc inv = m[col][col].inverse();
        for (int j = col; j < 2 * d; ++j)
            if (!m[col][j].is_zero()) m[col][j] = m[col][j] * inv;
        for (int row = 0; row < d; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            RatFunc f = m[row][col];
            for (int j = col; j < 2 * d; ++j)
                if (!m[col][j].is_zero()) m[row][j] = m[row][j] - f * m[col][j];
        }
    }
    TensorOp r(out_, in_, dim_n_);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!m[i][d + j].is_zero()) r.entries_[{i, j}] = m[i][d + j];
    return r;
}

TensorOp TensorOp::operator+(const TensorOp& o) const {
    if (in_ != o.in_ || out_ != o.out_ || dim_n_ != o.dim_n_)
        throw std::invalid_argument("TensorOp::operator+: signature mismatch");
    TensorOp r = *this;
    for (const auto& [k, v] : o.entries_) r.set_entry(k.first, k.second, r.entry(k.first, k.second) + v);
    return r;
}

TensorOp TensorOp::operator-(const TensorOp& o) const {
    return *this + o.scaled(RatFunc(Rational(-1)));
}

TensorOp TensorOp::scaled(const RatFunc& c) const {
    TensorOp r(in_, out_, dim_n_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : entries_) r.entries_[k] = v * c;
    return r;
}

bool TensorOp::operator==(const TensorOp& o) const {
    return dim_n_ == o.dim_n_ && in_ == o.in_ && out_ == o.out_ && entries_ == o.entries_;
}

std::map<std::pair<int, int>, Rational> TensorOp::at_q1() const {
    std::map<std::pair<int, int>, Rational> r;
    for (const auto& [k, v] : entries_) {
        Rational x = v.at_one();
        if (x != 0) r[k] = x;
    }
    return r;
}

bool TensorOp::is_permutation_at_q1() const {
    auto m = at_q1();
    std::map<int, int> seen_in, seen_out;
    for (const auto& [k, v] : m) {
        if (v != 1) return false;
        if (++seen_in[k.second] > 1 || ++seen_out[k.first] > 1) return false;
    }
    return (int)m.size() == dim_in() && dim_in() == dim_out();
}

std::map<std::pair<int, int>, Rational> TensorOp::first_order() const {
    std::map<std::pair<int, int>, Rational> r;
    for (const auto& [k, v] : entries_) {
        HSeries s = v.hbar_expand();
        if (k.first == k.second) s = s - HSeries(Rational(1), 0, 0);
        if (s.c0 != 0)
            throw std::domain_error("first_order: operator is not the identity at q = 1");
        if (s.c1 != 0) r[k] = s.c1;
    }
    for (int i = 0; i < dim_in(); ++i)
        if (entries_.find({i, i}) == entries_.end())
            throw std::domain_error("first_order: operator is not the identity at q = 1");
    return r;
}

} // namespace qma
