#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qma/braiding.hpp" // CrossingType

namespace qma {

struct PatternError : std::runtime_error {
    enum class Kind { BadToken, WrongCount, NotBijection, OrderViolation };
    Kind kind;
    PatternError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct SurfaceTopology {
    int genus = 0;
    int boundary = 1;
    int euler = 1;

    bool operator==(const SurfaceTopology&) const = default;
};

/// A bijection P: {1,1',...,n,n'} -> {1,...,2n} with P(i) < P(i'),
/// stored as the flat target list P(1) P(1') P(2) P(2') ...
/// The null pattern (n = 0) is allowed and is the unit of disjoint union.
class GluingPattern {
public:
    GluingPattern() = default; // null pattern
    explicit GluingPattern(std::vector<int> targets); // validates

    static GluingPattern parse(const std::string& text);

    int handle_count() const { return (int)targets_.size() / 2; }
    bool is_null() const { return targets_.empty(); }
    /// P(i) for unprimed, P(i') for primed; i is 1-based.
    int position(int handle, bool primed) const;
    const std::vector<int>& targets() const { return targets_; }
    std::string to_string() const;

    bool operator==(const GluingPattern&) const = default;

    /// Interleaving type of handles i, j per the six-case definition;
    /// classify(j, i) has the same kind and opposite sign.
    CrossingType classify(int i, int j) const;

    /// Genus / boundary count of Sigma(P) by face tracing of the
    /// one-vertex ribbon graph: boundary cycles are orbits of
    /// k -> partner(k)+1 (mod 2n+1) on the disc intervals 0..2n, with
    /// interval 0 (the marked arc) unpaired.
    SurfaceTopology topology() const;

    GluingPattern disjoint_union(const GluingPattern& other) const;

    /// The permutation tau_P of {1,...,2n}: tau(2k-1) = P(k),
    /// tau(2k) = P(k'). Returned 1-based.
    std::vector<int> tau_perm() const;

    /// Pattern for the r-punctured genus-g surface: g copies of the
    /// punctured-torus pattern, then r-1 copies of the annulus pattern.
    static GluingPattern sigma(int g, int r);

    static GluingPattern annulus() { return GluingPattern({1, 2}); }
    static GluingPattern punctured_torus() { return GluingPattern({1, 3, 2, 4}); }
    static GluingPattern pants() { return GluingPattern({1, 2, 3, 4}); }

private:
    std::vector<int> targets_;
};

/// Random pattern on n handles: a random matching of the 2n positions,
/// each pair oriented ascending. Deterministic for a given rng state.
GluingPattern random_pattern(int n, std::mt19937_64& rng);

} // namespace qma
