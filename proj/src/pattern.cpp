#include "qma/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace qma {

GluingPattern::GluingPattern(std::vector<int> targets) : targets_(std::move(targets)) {
    if (targets_.size() % 2 != 0)
        throw PatternError(PatternError::Kind::WrongCount,
                           "pattern needs an even number of entries");
    int two_n = (int)targets_.size();
    std::vector<bool> seen(two_n + 1, false);
    for (int v : targets_) {
        if (v < 1 || v > two_n)
            throw PatternError(PatternError::Kind::NotBijection,
                               "target " + std::to_string(v) + " out of range 1.." +
                                   std::to_string(two_n));
        if (seen[v])
            throw PatternError(PatternError::Kind::NotBijection,
                               "target " + std::to_string(v) + " repeated");
        seen[v] = true;
    }
    for (int k = 0; k < two_n / 2; ++k) {
        if (targets_[2 * k] >= targets_[2 * k + 1])
            throw PatternError(PatternError::Kind::OrderViolation,
                               "P(" + std::to_string(k + 1) + ") must be less than P(" +
                                   std::to_string(k + 1) + "')");
    }
}

GluingPattern GluingPattern::parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> vals;
    std::string tok;
    while (is >> tok) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw PatternError(PatternError::Kind::BadToken, "bad token '" + tok + "'");
        }
    }
    return GluingPattern(vals);
}

int GluingPattern::position(int handle, bool primed) const {
    if (handle < 1 || handle > handle_count())
        throw std::out_of_range("handle index " + std::to_string(handle));
    return targets_[2 * (handle - 1) + (primed ? 1 : 0)];
}

std::string GluingPattern::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < targets_.size(); ++i) {
        if (i) os << ' ';
        os << targets_[i];
    }
    return os.str();
}

CrossingType GluingPattern::classify(int i, int j) const {
    if (i == j) throw std::invalid_argument("classify: handle pair needs i != j");
    if (i > j) {
        CrossingType t = classify(j, i);
        t.sign = -t.sign;
        return t;
    }
    int a = position(i, false), a2 = position(i, true);
    int b = position(j, false), b2 = position(j, true);
    if (a < b && b < a2 && a2 < b2) return {CrossingKind::Linked, +1};
    if (b < a && a < b2 && b2 < a2) return {CrossingKind::Linked, -1};
    if (a < b && b2 < a2) return {CrossingKind::Nested, +1};
    if (b < a && a2 < b2) return {CrossingKind::Nested, -1};
    if (a2 < b) return {CrossingKind::Unlinked, +1};
    return {CrossingKind::Unlinked, -1};
}

SurfaceTopology GluingPattern::topology() const {
    int n = handle_count();
    int m = 2 * n + 1; // disc intervals 0..2n, interval 0 unpaired
    std::vector<int> partner(m, -1);
    for (int k = 0; k < n; ++k) {
        partner[targets_[2 * k]] = targets_[2 * k + 1];
        partner[targets_[2 * k + 1]] = targets_[2 * k];
    }
    std::vector<bool> visited(m, false);
    int faces = 0;
    for (int start = 0; start < m; ++start) {
        if (visited[start]) continue;
        ++faces;
        int k = start;
        while (!visited[k]) {
            visited[k] = true;
            k = (partner[k] >= 0 ? partner[k] + 1 : k + 1) % m;
        }
    }
    SurfaceTopology t;
    t.boundary = faces;
    t.euler = 1 - n;
    t.genus = (2 - t.euler - t.boundary) / 2;
    return t;
}

GluingPattern GluingPattern::disjoint_union(const GluingPattern& other) const {
    std::vector<int> v = targets_;
    int shift = (int)targets_.size();
    for (int x : other.targets_) v.push_back(x + shift);
    return GluingPattern(v);
}

std::vector<int> GluingPattern::tau_perm() const {
    return targets_;
}

GluingPattern random_pattern(int n, std::mt19937_64& rng) {
    std::vector<int> pos(2 * n);
    for (int i = 0; i < 2 * n; ++i) pos[i] = i + 1;
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<int> targets(2 * n);
    for (int h = 0; h < n; ++h) {
        int a = pos[2 * h], b = pos[2 * h + 1];
        targets[2 * h] = std::min(a, b);
        targets[2 * h + 1] = std::max(a, b);
    }
    return GluingPattern(targets);
}

GluingPattern GluingPattern::sigma(int g, int r) {
    if (g < 0) throw std::invalid_argument("sigma: genus must be nonnegative");
    if (r <= 0) throw std::invalid_argument("sigma: need at least one boundary component");
    GluingPattern p;
    for (int i = 0; i < g; ++i) p = p.disjoint_union(punctured_torus());
    for (int i = 0; i < r - 1; ++i) p = p.disjoint_union(annulus());
    return p;
}

} // namespace qma
