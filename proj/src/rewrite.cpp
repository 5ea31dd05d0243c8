#include "qma/rewrite.hpp"
#include <algorithm>
#include <functional>

namespace qma {

RewriteSystem::RewriteSystem(const QuadraticPresentation& pres, int degree_bound)
    : num_gens_(pres.generator_count()), degree_bound_(degree_bound) {
    // row-reduce first so every rule gets a distinct leading monomial
    std::vector<NCPoly> polys;
    for (const auto& rel : pres.relations)
        if (!rel.terms.empty()) polys.push_back(rel.terms);
    for (const auto& rel : reduce_relations(std::move(polys))) {
        Word lm = leading_monomial(rel.terms);
        if (lm.size() != 2)
            throw CompletionError(lm, "presentation relation is not quadratic");
        NCPoly tail = nc_scale(rel.terms, rel.terms.at(lm).inverse());
        tail.erase(lm);
        rules_[lm] = nc_scale(tail, RatFunc(Rational(-1)));
    }
    complete();
}

bool RewriteSystem::reduce_once(NCPoly& p) const {
    for (const auto& [w, c] : p) {
        for (size_t pos = 0; pos + 1 < w.size(); ++pos) {
            for (size_t len = 2; len <= 3 && pos + len <= w.size(); ++len) {
                Word sub(w.begin() + pos, w.begin() + pos + len);
                auto it = rules_.find(sub);
                if (it == rules_.end()) continue;
                NCPoly replaced;
                for (const auto& [tw, tc] : it->second) {
                    Word nw(w.begin(), w.begin() + pos);
                    nw.insert(nw.end(), tw.begin(), tw.end());
                    nw.insert(nw.end(), w.begin() + pos + len, w.end());
                    replaced[nw] = tc * c;
                }
                NCPoly rest = p;
                rest.erase(w);
                p = nc_add(rest, replaced);
                return true;
            }
        }
    }
    return false;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
    NCPoly r = p;
    while (reduce_once(r)) {
    }
    return r;
}

NCPoly RewriteSystem::normal_form(const Word& w) const {
    return normal_form(NCPoly{{w, RatFunc::one()}});
}

void RewriteSystem::complete() {
    bool added = true;
    while (added) {
        added = false;
        // collect overlaps u = prefix + shared, v = shared + suffix
        std::vector<std::pair<Word, Word>> pairs;
        for (const auto& [u, fu] : rules_)
            for (const auto& [v, fv] : rules_) {
                // maximal proper overlap of one letter suffices for quadratic
                // rules; longer rules test every proper overlap length
                for (size_t k = 1; k < u.size() && k < v.size(); ++k) {
                    if (!std::equal(u.end() - k, u.end(), v.begin())) continue;
                    size_t deg = u.size() + v.size() - k;
                    if ((int)deg > degree_bound_) continue;
                    pairs.push_back({u, v});
                }
            }
        for (const auto& [u, v] : pairs) {
            for (size_t k = 1; k < u.size() && k < v.size(); ++k) {
                if (!std::equal(u.end() - k, u.end(), v.begin())) continue;
                Word w = u;
                w.insert(w.end(), v.begin() + k, v.end());
                if ((int)w.size() > degree_bound_) continue;
                // reduce w by u at position 0 and by v at the right end
                NCPoly left;
                for (const auto& [tw, tc] : rules_.at(u)) {
                    Word nw = tw;
                    nw.insert(nw.end(), v.begin() + k, v.end());
                    left[nw] = tc;
                }
                NCPoly right;
                for (const auto& [tw, tc] : rules_.at(v)) {
                    Word nw(u.begin(), u.end() - k);
                    nw.insert(nw.end(), tw.begin(), tw.end());
                    right[nw] = tc;
                }
                NCPoly diff = nc_sub(normal_form(left), normal_form(right));
                if (diff.empty()) continue;
                Word lm = leading_monomial(diff);
                if (lm.size() < 2)
                    throw CompletionError(w, "overlap reduces to a non-quadratic element");
                NCPoly tail = nc_scale(diff, diff.at(lm).inverse());
                tail.erase(lm);
                rules_[lm] = nc_scale(tail, RatFunc(Rational(-1)));
                ++completion_rules_;
                added = true;
            }
        }
    }
}

long RewriteSystem::hilbert_count(int degree) const {
    // count words with no rule leading monomial as a subword
    long count = 0;
    Word w;
    auto reducible_tail = [&](const Word& word) {
        for (size_t len = 2; len <= 3 && len <= word.size(); ++len) {
            Word sub(word.end() - len, word.end());
            if (rules_.count(sub)) return true;
        }
        return false;
    };
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (int g = 0; g < num_gens_; ++g) {
            w.push_back(g);
            if (!reducible_tail(w)) rec(remaining - 1);
            w.pop_back();
        }
    };
    rec(degree);
    return count;
}

long commutative_dimension(int gens, int degree) {
    // C(gens + degree - 1, degree)
    long num = 1, den = 1;
    for (int i = 0; i < degree; ++i) {
        num *= gens + degree - 1 - i;
        den *= i + 1;
    }
    return num / den;
}

} // namespace qma
