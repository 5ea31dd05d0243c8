#include "qma/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

using ordered_json = nlohmann::ordered_json;

namespace qma {

namespace {

constexpr int kSchemaVersion = 1;

std::string relation_side(const Relation& rel, const QuadraticPresentation& pres) {
    std::set<int> handles;
    for (const auto& [w, c] : rel.terms)
        for (int g : w) handles.insert(pres.generator(g).handle);
    std::ostringstream os;
    if (handles.size() <= 1)
        os << "re(" << (handles.empty() ? 0 : *handles.begin()) << ")";
    else {
        os << "cross(";
        bool first = true;
        for (int h : handles) {
            if (!first) os << ",";
            os << h;
            first = false;
        }
        os << ")";
    }
    return os.str();
}

} // namespace

std::string presentation_to_json(const QuadraticPresentation& pres) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["N"] = pres.N;
    j["n"] = pres.n;
    j["generators"] = ordered_json::array();
    for (int i = 0; i < pres.generator_count(); ++i) {
        Generator g = pres.generator(i);
        j["generators"].push_back(
            {{"handle", g.handle}, {"row", g.row}, {"col", g.col}});
    }
    j["relations"] = ordered_json::array();
    for (const auto& rel : pres.relations) {
        ordered_json r;
        r["terms"] = ordered_json::array();
        for (const auto& [w, c] : rel.terms)
            r["terms"].push_back({{"coeff", c.to_string()},
                                  {"monomial", std::vector<int>(w.begin(), w.end())}});
        r["side"] = relation_side(rel, pres);
        j["relations"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

QuadraticPresentation presentation_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::runtime_error("presentation_from_json: unknown schema version");
    QuadraticPresentation pres;
    pres.N = j.at("N").get<int>();
    pres.n = j.at("n").get<int>();
    for (const auto& rj : j.at("relations")) {
        Relation rel;
        for (const auto& tj : rj.at("terms")) {
            Word w;
            for (const auto& g : tj.at("monomial")) w.push_back(g.get<int>());
            rel.terms[w] = RatFunc::parse(tj.at("coeff").get<std::string>());
        }
        pres.relations.push_back(std::move(rel));
    }
    return pres;
}

namespace {

std::string latex_scalar(const RatFunc& c) {
    auto brace = [](std::string s) {
        std::string r;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '^') {
                r += "^{";
                size_t k = i + 1;
                if (k < s.size() && s[k] == '-') ++k;
                while (k < s.size() && isdigit((unsigned char)s[k])) ++k;
                r += s.substr(i + 1, k - i - 1);
                r += "}";
                i = k - 1;
            } else
                r += s[i];
        }
        return r;
    };
    if (c.den().is_one()) return brace(c.num().to_string());
    return "\\tfrac{" + brace(c.num().to_string()) + "}{" +
           brace(c.den().to_string()) + "}";
}

std::string latex_generator(const Generator& g) {
    std::ostringstream os;
    os << "a^{(" << g.handle << ")" << g.row << "}_{" << g.col << "}";
    return os.str();
}

} // namespace

std::string presentation_to_latex(const QuadraticPresentation& pres) {
    std::ostringstream os;
    os << "% presentation: N = " << pres.N << ", handles = " << pres.n << "\n";
    os << "\\begin{align*}\n";
    bool first = true;
    for (const auto& rel : pres.relations) {
        if (!first) os << " \\\\\n";
        first = false;
        bool lead = true;
        for (const auto& [w, c] : rel.terms) {
            std::string s = latex_scalar(c);
            if (!lead) os << " + ";
            lead = false;
            os << "\\left(" << s << "\\right)";
            for (int g : w) os << " " << latex_generator(pres.generator(g));
        }
        os << " &= 0";
    }
    os << "\n\\end{align*}\n";
    return os.str();
}

std::string tensorop_to_json(const TensorOp& op) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["N"] = op.dim_n();
    auto names = [](const StrandList& s) {
        std::vector<std::string> v;
        for (Strand x : s) v.push_back(x == Strand::V ? "V" : "V*");
        return v;
    };
    j["strands"] = names(op.strands_in());
    if (op.strands_out() != op.strands_in())
        j["strands_out"] = names(op.strands_out());
    j["entries"] = ordered_json::array();
    for (const auto& [k, v] : op.entries()) // map order: sorted (out, in)
        j["entries"].push_back(
            {{"out", op.unflatten(k.first, (int)op.strands_out().size())},
             {"in", op.unflatten(k.second, (int)op.strands_in().size())},
             {"coeff", v.to_string()}});
    return j.dump(2) + "\n";
}

std::string pattern_info_json(const GluingPattern& P) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = P.handle_count();
    j["pattern"] = P.to_string();
    j["classifications"] = ordered_json::array();
    for (int i = 1; i <= P.handle_count(); ++i)
        for (int k = i + 1; k <= P.handle_count(); ++k) {
            CrossingType t = P.classify(i, k);
            const char* kind = t.kind == CrossingKind::Linked     ? "linked"
                               : t.kind == CrossingKind::Nested   ? "nested"
                                                                  : "unlinked";
            j["classifications"].push_back(
                {{"i", i}, {"j", k}, {"kind", kind}, {"sign", t.sign}});
        }
    SurfaceTopology top = P.topology();
    j["genus"] = top.genus;
    j["boundary"] = top.boundary;
    j["tau"] = P.tau_perm();
    return j.dump(2) + "\n";
}

} // namespace qma
