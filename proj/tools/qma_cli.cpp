#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qma/braiding.hpp"
#include "qma/classical.hpp"
#include "qma/pattern.hpp"
#include "qma/relations.hpp"
#include "qma/rewrite.hpp"
#include "qma/serialize.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace qma;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CheckLine {
    std::string name;
    bool ok;
};

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitIo;
    }
    f << text;
    if (!f.good()) {
        std::cerr << "error: write to " << out_path << " failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int emit_report(const std::string& command, const ordered_json& inputs,
                const std::vector<CheckLine>& checks, const std::string& out_path) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["inputs"] = inputs;
    j["checks"] = ordered_json::array();
    bool all = true;
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name}, {"status", c.ok ? "pass" : "fail"}});
        all = all && c.ok;
    }
    j["status"] = all ? "pass" : "fail";
    int io = write_output(j.dump(2) + "\n", out_path);
    if (io != kExitOk) return io;
    return all ? kExitOk : kExitCheckFailed;
}

std::string gen_name(const Generator& g) {
    std::ostringstream os;
    os << "a(" << g.handle << ")[" << g.row << "," << g.col << "]";
    return os.str();
}

std::string type_name(const CrossingType& t) {
    const char* k = t.kind == CrossingKind::Linked     ? "linked"
                    : t.kind == CrossingKind::Nested   ? "nested"
                                                       : "unlinked";
    return std::string(t.sign > 0 ? "+" : "-") + k;
}

int run_check(const std::string& suite, const std::string& pattern_text, int N,
              int degree, unsigned long seed, const std::string& out_path) {
    std::vector<CheckLine> checks;
    ordered_json inputs{{"suite", suite}, {"N", N}};
    if (!pattern_text.empty()) inputs["pattern"] = pattern_text;

    auto need_pattern = [&]() -> GluingPattern {
        if (pattern_text.empty())
            throw CLI::ValidationError("--pattern is required for suite " + suite);
        return GluingPattern::parse(pattern_text);
    };

    if (suite == "yang-baxter") {
        checks.push_back({"yang-baxter", check_yang_baxter(r_matrix(N))});
    } else if (suite == "hecke") {
        checks.push_back({"hecke", check_hecke(r_matrix(N))});
    } else if (suite == "coherence") {
        Strand kinds[2] = {Strand::V, Strand::Vdual};
        for (Strand a : kinds)
            for (Strand b : kinds)
                for (Strand c : kinds) {
                    std::string name = "braid-relation";
                    for (Strand s : {a, b, c})
                        name += s == Strand::V ? " V" : " V*";
                    checks.push_back({name, check_braid_relation(a, b, c, N)});
                }
        for (Strand w : kinds)
            checks.push_back({std::string("ev-naturality ") +
                                  (w == Strand::V ? "V" : "V*"),
                              check_ev_naturality(w, N)});
    } else if (suite == "flatness") {
        GluingPattern P = need_pattern();
        inputs["degree"] = degree;
        QuadraticPresentation pres = build_presentation(P, N);
        RewriteSystem rs(pres, degree);
        for (int d = 0; d <= degree; ++d) {
            long got = rs.hilbert_count(d);
            long want = commutative_dimension(pres.generator_count(), d);
            std::ostringstream os;
            os << "degree " << d << ": " << got << " vs " << want;
            checks.push_back({os.str(), got == want});
        }
    } else if (suite == "classical-limit") {
        GluingPattern P = need_pattern();
        for (const auto& r : quasiclassical_report(P, N))
            checks.push_back({"{" + gen_name(r.a) + ", " + gen_name(r.b) + "}", r.ok});
    } else if (suite == "qcl-identity") {
        checks.push_back({"qcl-identity", qcl_identity_check(N)});
    } else if (suite == "crossing-consistency") {
        std::vector<GluingPattern> pats;
        if (!pattern_text.empty()) {
            pats.push_back(need_pattern());
        } else {
            // the six two-handle witnesses, one per crossing type
            for (auto t : {std::vector<int>{1, 3, 2, 4}, {2, 4, 1, 3}, {1, 4, 2, 3},
                           {2, 3, 1, 4}, {1, 2, 3, 4}, {3, 4, 1, 2}})
                pats.emplace_back(t);
            std::mt19937_64 rng(seed);
            inputs["seed"] = seed;
            for (int k = 0; k < 10; ++k) pats.push_back(random_pattern(3, rng));
        }
        for (const auto& P : pats)
            for (int i = 1; i <= P.handle_count(); ++i)
                for (int j = i + 1; j <= P.handle_count(); ++j) {
                    std::ostringstream os;
                    os << "\"" << P.to_string() << "\" handles (" << i << "," << j
                       << ") " << type_name(P.classify(i, j));
                    checks.push_back({os.str(), check_crossing_consistency(P, i, j, N)});
                }
    } else {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
    }
    return emit_report("check " + suite, inputs, checks, out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum moduli algebra toolkit"};
    app.require_subcommand(1);

    std::string pattern_text, format = "json", out_path, suite;
    int N = 2, degree = 3;
    unsigned long seed = 0;

    auto* pat = app.add_subcommand("pattern", "gluing pattern utilities");
    pat->require_subcommand(1);
    auto* info = pat->add_subcommand("info", "topology and crossing summary");
    std::string info_pattern;
    info->add_option("pattern", info_pattern, "pattern, e.g. \"1 3 2 4\"")->required();
    info->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* emit = app.add_subcommand("emit", "emit the presentation of a_P");
    emit->add_option("--pattern", pattern_text, "gluing pattern")->required();
    emit->add_option("--N", N, "matrix size")->check(CLI::PositiveNumber);
    emit->add_option("--format", format, "json or latex")
        ->check(CLI::IsMember({"json", "latex"}));
    emit->add_option("--out", out_path, "output file (default stdout)");

    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"yang-baxter", "hecke", "coherence", "flatness",
                               "classical-limit", "qcl-identity",
                               "crossing-consistency"}));
    check->add_option("--pattern", pattern_text, "gluing pattern");
    check->add_option("--N", N, "matrix size")->check(CLI::PositiveNumber);
    check->add_option("--degree", degree, "degree bound")->check(CLI::PositiveNumber);
    check->add_option("--seed", seed, "seed for randomized sampling");
    check->add_option("--out", out_path, "write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*info) {
            GluingPattern P = GluingPattern::parse(info_pattern);
            return write_output(pattern_info_json(P), out_path);
        }
        if (*emit) {
            GluingPattern P = GluingPattern::parse(pattern_text);
            QuadraticPresentation pres = build_presentation(P, N);
            std::string text = format == "latex" ? presentation_to_latex(pres)
                                                 : presentation_to_json(pres);
            return write_output(text, out_path);
        }
        if (*check) return run_check(suite, pattern_text, N, degree, seed, out_path);
    } catch (const PatternError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
