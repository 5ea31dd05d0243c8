#pragma once

#include <stdexcept>

#include "qma/relations.hpp"

namespace qma {

struct CompletionError : std::runtime_error {
    Word overlap;
    CompletionError(Word o, const std::string& msg) : std::runtime_error(msg), overlap(std::move(o)) {}
};

/// Degree-bounded rewriting for a quadratic presentation. Rules are
/// oriented by the degree-lexicographic order (handle-major generator
/// order), so every rule strictly decreases the order. Completion resolves
/// all overlaps of degree <= degree_bound, adding cubic (and higher) rules
/// where an overlap fails to resolve; an overlap that reduces below the
/// quadratic part signals an inconsistent presentation and throws.
class RewriteSystem {
public:
    RewriteSystem(const QuadraticPresentation& pres, int degree_bound = 3);

    int degree_bound() const { return degree_bound_; }
    const std::map<Word, NCPoly>& rules() const { return rules_; }
    /// Rules added during completion beyond the quadratic ones.
    int completion_rule_count() const { return completion_rules_; }

    /// Canonical form of a word (or combination) of degree <= degree_bound.
    NCPoly normal_form(const Word& w) const;
    NCPoly normal_form(const NCPoly& p) const;

    /// Number of normal monomials of the given degree.
    long hilbert_count(int degree) const;

private:
    void complete();
    bool reduce_once(NCPoly& p) const;

    int num_gens_;
    int degree_bound_;
    std::map<Word, NCPoly> rules_; // leading monomial -> tail (== LM in the algebra)
    int completion_rules_ = 0;
};

/// Commutative oracle C(gens + d - 1, d): dimension of degree d in the
/// polynomial ring on the same generators.
long commutative_dimension(int gens, int degree);

} // namespace qma
