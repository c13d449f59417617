#include "braidnorm/band3.hpp"
#include "braidnorm/bennequin.hpp"
#include "braidnorm/error.hpp"
#include "braidnorm/homfly.hpp"
#include "braidnorm/multipoly.hpp"
#include "braidnorm/report.hpp"
#include "braidnorm/skein_oracle.hpp"
#include "braidnorm/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>

using namespace braidnorm;

namespace {

enum Exit : int { ok = 0, usage = 1, verification = 2, budget = 3 };

struct RunConfig {
    std::string braid;
    int n = 0;
    std::string cls;
    std::string poly;
    bool json = false;
    bool oracle = false;
    std::uint64_t seed = 1;
    std::optional<int> max_len;
    std::optional<int> max_strands;
    std::optional<std::size_t> samples;
    std::optional<int> k;
    std::optional<int> max_l;
    std::size_t budget = 2'000'000;
    std::string suite;
    std::string family = "sigma1";
    int max_k = 10;
    bool csv = false;
};

std::string compact(const Json& j) {
    return j.dump();
}

void print(const Json& j) {
    std::cout << j.dump(2) << '\n';
}

BraidWord word_of(const RunConfig& cfg) {
    if (cfg.n < 1)
        throw ParseError("strand count -n must be given and >= 1");
    return parse_braid(cfg.braid, cfg.n);
}

int cmd_info(const RunConfig& cfg) {
    const BraidWord w = word_of(cfg);
    const Json j = info_json(w);
    if (cfg.json) {
        print(j);
        return ok;
    }
    std::cout << "word: " << j["word"].get<std::string>() << " (n=" << w.strands() << ")\n";
    std::cout << "components: " << j["components"].size() << '\n';
    for (const auto& c : j["components"])
        std::cout << "  " << c["id"] << ": strands " << compact(c["strands"]) << " n=" << c["n"]
                  << " l=" << c["self_crossings"] << " u=" << c["over_crossings"] << '\n';
    std::cout << "crossing matrix: " << compact(j["crossing_matrix"]) << '\n';
    std::cout << "linking matrix: " << compact(j["linking_matrix"]) << '\n';
    std::cout << "bennequin: " << j["bennequin"] << '\n';
    std::cout << "relative bennequin: " << compact(j["relative_bennequin"]) << '\n';
    for (const char* kind : {"seifert", "band_seifert"}) {
        const auto& e = j["euler"][kind];
        std::cout << "euler " << kind << ": chi=" << e["chi"] << " chi_minus=" << e["chi_minus"] << '\n';
    }
    int c = 0;
    for (const auto& e : j["euler"]["punctured_component"])
        std::cout << "euler punctured_component " << c++ << ": chi=" << e["chi"] << " chi_minus=" << e["chi_minus"]
                  << '\n';
    std::cout << "homogeneous: " << (j["homogeneous"].get<bool>() ? "yes" : "no") << '\n';
    return ok;
}

int cmd_bounds(const RunConfig& cfg) {
    const BraidWord w = word_of(cfg);
    const CohClass C = parse_class(cfg.cls);
    const NormBracket b = thurston_bracket(w, C);
    Json j;
    j["class"] = C.c;
    j["bracket"] = bracket_json(b);
    std::optional<McMullenReport> mc;
    if (!cfg.poly.empty()) {
        mc = mcmullen_check(read_multipoly_file(cfg.poly), b, C, closure_profile(w).r);
        j["mcmullen"] = mcmullen_json(*mc);
    }
    if (cfg.json) {
        print(j);
    } else {
        std::cout << "class: " << compact(j["class"]) << '\n';
        std::cout << "bracket: [" << b.lower << ", " << b.upper << "]" << (b.determined ? " determined" : "") << '\n';
        std::cout << "lower source: " << to_string(b.lower_source) << " (corollary " << b.corollary << ", scholium "
                  << b.scholium << ")\n";
        std::cout << "upper source: " << to_string(b.upper_source) << '\n';
        if (mc) {
            std::cout << "alexander norm: " << mc->alexander.get_str() << " <= " << mc->bound << ": "
                      << (mc->holds ? "holds" : "VIOLATED") << '\n';
            if (mc->has_gap)
                std::cout << "gap: " << mc->gap.get_str() << '\n';
        }
    }
    return mc && !mc->holds ? verification : ok;
}

int cmd_homfly(const RunConfig& cfg) {
    const BraidWord w = word_of(cfg);
    HomflyReport r;
    if (cfg.oracle) {
        SkeinOracle oracle(cfg.budget);
        r = homfly_report(w, oracle(w));
    } else {
        r = homfly_report(w);
    }
    const MfwReport m{r.beta_t, r.e, r.e >= r.beta_t + 1, r.e - (r.beta_t + 1)};
    const LaurentVZ p0 = eval_v0(r.P);
    Json j;
    j["homfly"] = homfly_json(r);
    j["bennequin"] = r.beta_t;
    j["mfw"] = Json{{"holds", m.holds}, {"slack", m.slack}};
    j["certificate"] = Json{{"certified", !p0.is_zero()}, {"p0", poly_json(p0)}};
    j["evaluator"] = cfg.oracle ? "skein_oracle" : "trace";
    if (cfg.json) {
        print(j);
    } else {
        std::cout << "P: " << to_string(r.P) << '\n';
        std::cout << "H: " << to_string(r.H) << '\n';
        std::cout << "e: " << r.e << "  e_P: " << r.e_P << '\n';
        std::cout << "conway: " << to_string(r.conway) << '\n';
        std::cout << "bennequin: " << r.beta_t << "  mfw slack: " << m.slack << '\n';
        std::cout << "P(0,z): " << to_string(p0) << (p0.is_zero() ? "" : "  (bennequin number maximal)") << '\n';
    }
    return m.holds ? ok : verification;
}

int cmd_cable(const RunConfig& cfg) {
    const BraidWord w = word_of(cfg);
    const CablePair cp = cable_pair(w, parse_class(cfg.cls));
    const Json j = cable_json(cp);
    if (cfg.json) {
        print(j);
        return ok;
    }
    std::cout << "L': " << j["lprime"].get<std::string>() << " (n=" << j["n"] << ")\n";
    std::cout << "L'' components: " << compact(j["subset"]) << '\n';
    std::cout << "origin: " << compact(j["origin"]) << '\n';
    std::cout << "p: " << compact(j["p"]) << "  q: " << compact(j["q"]) << '\n';
    std::cout << "twist offsets: " << compact(j["m"]) << "  exponents: " << compact(j["twist"]) << '\n';
    std::cout << "relative bennequin of L'' in L': " << j["relative_bennequin"] << '\n';
    std::cout << "bennequin of L'': " << j["bennequin_sublink"] << '\n';
    return ok;
}

int cmd_alexnorm(const RunConfig& cfg) {
    if (cfg.poly.empty())
        throw ParseError("alexnorm needs --poly <file>");
    const MultiPoly p = read_multipoly_file(cfg.poly);
    const CohClass C = parse_class(cfg.cls);
    Json j;
    j["class"] = C.c;
    j["alexander_norm"] = alexander_norm(p, C.c).get_str();
    std::optional<McMullenReport> mc;
    if (!cfg.braid.empty() || cfg.n > 0) {
        const BraidWord w = word_of(cfg);
        const NormBracket b = thurston_bracket(w, C);
        mc = mcmullen_check(p, b, C, closure_profile(w).r);
        j["bracket"] = bracket_json(b);
        j["mcmullen"] = mcmullen_json(*mc);
    }
    if (cfg.json) {
        print(j);
    } else {
        std::cout << "alexander norm: " << j["alexander_norm"].get<std::string>() << '\n';
        if (mc) {
            std::cout << "thurston bracket: [" << j["bracket"]["lower"] << ", " << j["bracket"]["upper"] << "]\n";
            std::cout << "alexander <= " << mc->bound << ": " << (mc->holds ? "holds" : "VIOLATED") << '\n';
            if (mc->has_gap)
                std::cout << "gap: " << mc->gap.get_str() << '\n';
        }
    }
    return mc && !mc->holds ? verification : ok;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyLimits lim;
    lim.max_strands = cfg.max_strands;
    lim.max_len = cfg.max_len;
    lim.samples = cfg.samples;
    lim.seed = cfg.seed;
    lim.k = cfg.k;
    lim.max_l = cfg.max_l;
    lim.budget = cfg.budget;
    const SuiteResult r = run_suite(cfg.suite, lim);
    if (cfg.json) {
        print(suite_json(r));
    } else {
        for (const auto& f : r.failures)
            std::cout << "FAIL " << f << '\n';
        for (const auto& note : r.notes)
            std::cout << "note: " << note << '\n';
        std::cout << "suite " << r.suite << ": " << r.checked << " checks, " << r.failures.size() << " failures\n";
    }
    return r.passed() ? ok : verification;
}

BraidWord bench_word(const std::string& family, int k, std::mt19937_64& rng) {
    if (family == "sigma1")
        return parse_braid("s1^" + std::to_string(k), 2);
    if (family == "sigma12") {
        std::string text;
        for (int i = 0; i < k; ++i)
            text += "s1 s2 ";
        return parse_braid(text, 3);
    }
    // Random homogeneous 3-braid of length k + 1 with both generators present.
    std::uniform_int_distribution<int> coin(0, 1);
    const int s1 = coin(rng) ? 1 : -1;
    const int s2 = coin(rng) ? 1 : -1;
    std::vector<BraidLetter> letters{BraidLetter::sigma(1, s1), BraidLetter::sigma(2, s2)};
    for (int i = 1; i < k; ++i) {
        const int g = coin(rng) + 1;
        letters.push_back(BraidLetter::sigma(g, g == 1 ? s1 : s2));
    }
    return BraidWord(3, std::move(letters));
}

int cmd_bench(const RunConfig& cfg) {
    if (cfg.family != "sigma1" && cfg.family != "sigma12" && cfg.family != "homogeneous" && cfg.family != "empty")
        throw ParseError("unknown family '" + cfg.family + "' (sigma1, sigma12, homogeneous, empty)");
    if (cfg.max_k < 0 || cfg.max_k > 24)
        throw DomainError("--max-k must lie in [0, 24]");
    std::mt19937_64 rng(cfg.seed);
    const char* header = "family,k,n,length,terms,trace_ms,oracle_ms,identical";
    if (cfg.csv)
        std::cout << header << '\n';
    else
        std::printf("%-12s %3s %2s %6s %6s %10s %10s %9s\n", "family", "k", "n", "length", "terms", "trace_ms",
                    "oracle_ms", "identical");
    bool all_same = true;
    if (cfg.family == "empty")
        return ok;
    using clock = std::chrono::steady_clock;
    for (int k = 1; k <= cfg.max_k; ++k) {
        const BraidWord w = bench_word(cfg.family, k, rng);
        HomflyEvaluator trace_eval;
        SkeinOracle oracle(cfg.budget);
        const auto t0 = clock::now();
        const LaurentVZ a = trace_eval(w);
        const auto t1 = clock::now();
        const LaurentVZ b = oracle(w);
        const auto t2 = clock::now();
        const double ms_a = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const double ms_b = std::chrono::duration<double, std::milli>(t2 - t1).count();
        const bool same = a == b;
        all_same = all_same && same;
        if (cfg.csv)
            std::printf("%s,%d,%d,%zu,%zu,%.3f,%.3f,%s\n", cfg.family.c_str(), k, w.strands(), w.length(), a.size(),
                        ms_a, ms_b, same ? "yes" : "no");
        else
            std::printf("%-12s %3d %2d %6zu %6zu %10.3f %10.3f %9s\n", cfg.family.c_str(), k, w.strands(), w.length(),
                        a.size(), ms_a, ms_b, same ? "yes" : "no");
    }
    return all_same ? ok : verification;
}

void add_word_options(CLI::App* sub, RunConfig& cfg, bool braid_required) {
    auto* b = sub->add_option("braid", cfg.braid, "braid word, e.g. \"s1^4\" or \"a1,3 s2^-1\"");
    if (braid_required)
        b->required();
    sub->add_option("-n", cfg.n, "strand count");
    sub->add_flag("--json", cfg.json, "emit JSON");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bennequin bounds, Thurston norm brackets and braid polynomials of closed braids"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* info = app.add_subcommand("info", "closure data, Bennequin numbers and Euler characteristics");
    add_word_options(info, cfg, true);

    auto* bounds = app.add_subcommand("bounds", "Thurston norm bracket for a class");
    add_word_options(bounds, cfg, true);
    bounds->add_option("--class", cfg.cls, "nonnegative class, e.g. 2,1")->required();
    bounds->add_option("--poly", cfg.poly, "multivariable Alexander polynomial file");

    auto* homfly = app.add_subcommand("homfly", "braid polynomial P, HOMFLY polynomial H and derived data");
    add_word_options(homfly, cfg, true);
    homfly->add_flag("--oracle", cfg.oracle, "evaluate with the skein oracle");
    homfly->add_option("--budget", cfg.budget, "oracle work budget");

    auto* cable = app.add_subcommand("cable", "cabled diagram L' and sublink L'' for a class");
    add_word_options(cable, cfg, true);
    cable->add_option("--class", cfg.cls, "nonnegative class")->required();

    auto* alex = app.add_subcommand("alexnorm", "Alexander norm of a polynomial file, optionally against a braid");
    add_word_options(alex, cfg, false);
    alex->add_option("--poly", cfg.poly, "polynomial file")->required();
    alex->add_option("--class", cfg.cls, "class")->required();

    auto* verify = app.add_subcommand("verify", "theorem-backed verification sweeps");
    verify->add_option("suite", cfg.suite, "skein, mfw, homogeneous, linearity, morton3 or kanda")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-strands", cfg.max_strands, "largest strand count");
    verify->add_option("--max-len", cfg.max_len, "largest word length");
    verify->add_option("--samples", cfg.samples, "random samples");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--k", cfg.k, "kanda: single k");
    verify->add_option("--max-l", cfg.max_l, "kanda: largest l");
    verify->add_option("--budget", cfg.budget, "oracle work budget per word");
    verify->add_flag("--json", cfg.json, "emit JSON");

    auto* bench = app.add_subcommand("bench", "trace evaluator against the skein oracle");
    bench->add_option("--family", cfg.family, "sigma1, sigma12, homogeneous or empty");
    bench->add_option("--max-k", cfg.max_k, "largest family parameter");
    bench->add_option("--seed", cfg.seed, "random seed");
    bench->add_option("--budget", cfg.budget, "oracle work budget");
    bench->add_flag("--csv", cfg.csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (info->parsed())
            return cmd_info(cfg);
        if (bounds->parsed())
            return cmd_bounds(cfg);
        if (homfly->parsed())
            return cmd_homfly(cfg);
        if (cable->parsed())
            return cmd_cable(cfg);
        if (alex->parsed())
            return cmd_alexnorm(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (bench->parsed())
            return cmd_bench(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return budget;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return verification;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
