// braidbup: braid words, their normal forms, the two-block subgroups, cabling, and the
// coincidence classification, on the command line.
//
// Exit codes: 0 success / true, 1 false or failed verification, 2 usage error,
// 3 internal invariant violation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braid/braid.hpp"

namespace {

using nlohmann::json;

json perm_json(const braid::Permutation& p) {
    json a = json::array();
    for (int i = 1; i <= p.size(); ++i) a.push_back(p(i));
    return a;
}

void emit(bool as_json, const json& record, const std::string& text) {
    if (as_json)
        std::cout << record.dump() << "\n";
    else
        std::cout << text;
}

std::string perm_line(const braid::Permutation& p) {
    std::string s;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) s += ' ';
        s += std::to_string(p(i));
    }
    return s;
}

braid::SurfaceKind parse_kind(const std::string& k) {
    if (k == "I") return braid::SurfaceKind::Orientable;
    if (k == "II") return braid::SurfaceKind::NonOrientableEven;
    if (k == "III") return braid::SurfaceKind::NonOrientableOdd;
    throw braid::InvalidDescriptor("unknown kind '" + k + "' (expected I, II or III)");
}

std::pair<braid::Target, int> parse_target(const std::string& t) {
    if (t == "plane") return {braid::Target::Plane, 0};
    if (t == "sphere") return {braid::Target::Sphere, 0};
    if (t == "rp2") return {braid::Target::ProjectivePlane, 0};
    auto genus_of = [&t](std::size_t prefix) {
        try {
            return std::stoi(t.substr(prefix));
        } catch (const std::exception&) {
            throw braid::InvalidDescriptor("bad genus in target '" + t + "'");
        }
    };
    if (t.rfind("or:", 0) == 0) {
        const int g = genus_of(3);
        if (g == 0) return {braid::Target::Sphere, 0};
        return {braid::Target::OrientableClosed, g};
    }
    if (t.rfind("nonor:", 0) == 0) {
        const int g = genus_of(6);
        if (g == 1) return {braid::Target::ProjectivePlane, 0};
        return {braid::Target::NonOrientableClosed, g};
    }
    throw braid::InvalidDescriptor("unknown target '" + t +
                                   "' (expected plane|sphere|rp2|or:G|nonor:G)");
}

braid::SurfacePresentation parse_presentation(const std::string& kind_str, int m,
                                              const std::string& theta_str) {
    const braid::SurfaceKind kind = parse_kind(kind_str);
    // Need the generator names before theta can be resolved; build with a placeholder
    // surjective theta first is not possible, so resolve names directly.
    std::vector<std::string> names;
    if (kind == braid::SurfaceKind::NonOrientableEven) names = {"u", "v"};
    if (kind == braid::SurfaceKind::NonOrientableOdd) names = {"c"};
    for (int k = 1; k <= 2 * m; ++k) names.push_back("a" + std::to_string(k));

    std::vector<braid::Z2> theta(names.size(), braid::z2_zero);
    std::string item;
    std::istringstream stream(theta_str);
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw braid::InvalidDescriptor("theta entries look like name=0 or name=1");
        const std::string name = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        if (val != "0" && val != "1")
            throw braid::InvalidDescriptor("theta value for '" + name + "' must be 0 or 1");
        bool found = false;
        for (std::size_t g = 0; g < names.size(); ++g)
            if (names[g] == name) {
                theta[g] = braid::Z2(val == "1" ? 1 : 0);
                found = true;
            }
        if (!found) throw braid::InvalidDescriptor("unknown generator '" + name + "' in theta");
    }
    return braid::SurfacePresentation(kind, m, theta);
}

struct WordArgs {
    std::string text;
    int strands = 0;
    bool as_json = false;
};

void add_word_options(CLI::App* cmd, WordArgs& args, const char* what) {
    cmd->add_option("expr", args.text, what)->required();
    cmd->add_option("--strands", args.strands, "number of strands")->required();
    cmd->add_flag("--json", args.as_json, "emit a JSON record");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid words, normal forms, block subgroups and the coincidence classifier"};
    app.require_subcommand(1);

    // --- nf ---------------------------------------------------------------
    WordArgs nf_args;
    CLI::App* nf_cmd = app.add_subcommand("nf", "print the left-greedy normal form");
    add_word_options(nf_cmd, nf_args, "braid expression");

    // --- eq ---------------------------------------------------------------
    struct {
        std::string a, b;
        int strands = 0;
        bool as_json = false;
    } eq_args;
    CLI::App* eq_cmd = app.add_subcommand("eq", "decide equality of two braid expressions");
    eq_cmd->add_option("a", eq_args.a, "first expression")->required();
    eq_cmd->add_option("b", eq_args.b, "second expression")->required();
    eq_cmd->add_option("--strands", eq_args.strands, "number of strands")->required();
    eq_cmd->add_flag("--json", eq_args.as_json, "emit a JSON record");

    // --- perm / pure --------------------------------------------------------
    WordArgs perm_args;
    CLI::App* perm_cmd = app.add_subcommand("perm", "print the induced permutation");
    add_word_options(perm_cmd, perm_args, "braid expression");

    WordArgs pure_args;
    CLI::App* pure_cmd = app.add_subcommand("pure", "decide whether the braid is pure");
    add_word_options(pure_cmd, pure_args, "braid expression");

    // --- eps / pi -----------------------------------------------------------
    struct {
        std::string text;
        int n = 0;
        bool as_json = false;
    } eps_args, pi_args;
    CLI::App* eps_cmd = app.add_subcommand("eps", "crossing invariant of a block-preserving word");
    eps_cmd->add_option("expr", eps_args.text, "braid expression on 2n strands")->required();
    eps_cmd->add_option("--n", eps_args.n, "block size")->required();
    eps_cmd->add_flag("--json", eps_args.as_json, "emit a JSON record");
    CLI::App* pi_cmd = app.add_subcommand("pi", "block-swap sign of a word");
    pi_cmd->add_option("expr", pi_args.text, "braid expression on 2n strands")->required();
    pi_cmd->add_option("--n", pi_args.n, "block size")->required();
    pi_cmd->add_flag("--json", pi_args.as_json, "emit a JSON record");

    // --- cable --------------------------------------------------------------
    struct {
        std::string text;
        int strands = 0;
        int k = 1;
        bool as_json = false;
    } cable_args;
    CLI::App* cable_cmd = app.add_subcommand("cable", "replace each strand by a parallel bundle");
    cable_cmd->add_option("expr", cable_args.text, "braid expression")->required();
    cable_cmd->add_option("--strands", cable_args.strands, "number of strands")->required();
    cable_cmd->add_option("--k", cable_args.k, "bundle multiplicity")->required();
    cable_cmd->add_flag("--json", cable_args.as_json, "emit a JSON record");

    // --- bup classify / cross-validate ---------------------------------------
    struct {
        std::string domain;
        std::string kind = "I";
        int m = 1;
        std::string theta;
        std::string target = "plane";
        int n = 1;
        bool as_json = false;
    } bup_args;
    CLI::App* bup_cmd = app.add_subcommand("bup", "coincidence classification");
    bup_cmd->require_subcommand(1);
    auto add_bup_options = [&bup_args](CLI::App* cmd) {
        cmd->add_option("--domain", bup_args.domain, "sphere or surface")->required();
        cmd->add_option("--kind", bup_args.kind, "quotient family: I, II or III");
        cmd->add_option("--m", bup_args.m, "genus parameter of the quotient");
        cmd->add_option("--theta", bup_args.theta, "comma-separated generator values, e.g. u=1,v=0");
        cmd->add_option("--target", bup_args.target, "plane|sphere|rp2|or:G|nonor:G");
        cmd->add_option("--n", bup_args.n, "multiplicity")->required();
        cmd->add_flag("--json", bup_args.as_json, "emit a JSON record");
    };
    CLI::App* classify_cmd = bup_cmd->add_subcommand("classify", "report the verdict table row");
    add_bup_options(classify_cmd);
    CLI::App* crossval_cmd =
        bup_cmd->add_subcommand("cross-validate", "re-derive a plane verdict from witnesses");
    add_bup_options(crossval_cmd);

    // --- verify-paper ---------------------------------------------------------
    struct {
        int max_n = 3;
        std::uint64_t seed = braid::checks::default_seed;
        bool as_json = false;
    } verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify-paper", "run the full identity and witness check suite");
    verify_cmd->add_option("--max-n", verify_args.max_n, "largest block size exercised");
    verify_cmd->add_option("--seed", verify_args.seed, "seed for the randomized suites");
    verify_cmd->add_flag("--json", verify_args.as_json, "emit a JSON record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*nf_cmd) {
            const braid::BraidWord w = braid::expr::parse_braid(nf_args.text, nf_args.strands);
            const braid::NormalForm nf = braid::normal_form(w);
            json factors = json::array();
            std::string text = "inf " + std::to_string(nf.inf) + "\n";
            for (const auto& f : nf.factors) {
                factors.push_back(perm_json(f));
                text += "factor " + perm_line(f) + "\n";
            }
            emit(nf_args.as_json,
                 {{"command", "nf"},
                  {"inputs", {{"expr", nf_args.text}, {"strands", nf_args.strands}}},
                  {"result", {{"inf", nf.inf}, {"factors", factors}}},
                  {"provenance", json::array()}},
                 text);
            return 0;
        }
        if (*eq_cmd) {
            const braid::BraidWord a = braid::expr::parse_braid(eq_args.a, eq_args.strands);
            const braid::BraidWord b = braid::expr::parse_braid(eq_args.b, eq_args.strands);
            const bool equal = braid::are_equal(a, b);
            emit(eq_args.as_json,
                 {{"command", "eq"},
                  {"inputs", {{"a", eq_args.a}, {"b", eq_args.b}, {"strands", eq_args.strands}}},
                  {"result", equal},
                  {"provenance", json::array()}},
                 equal ? "equal\n" : "not-equal\n");
            return equal ? 0 : 1;
        }
        if (*perm_cmd) {
            const braid::Permutation p =
                braid::permutation_of(braid::expr::parse_braid(perm_args.text, perm_args.strands));
            emit(perm_args.as_json,
                 {{"command", "perm"},
                  {"inputs", {{"expr", perm_args.text}, {"strands", perm_args.strands}}},
                  {"result", perm_json(p)},
                  {"provenance", json::array()}},
                 perm_line(p) + "\n");
            return 0;
        }
        if (*pure_cmd) {
            const bool pure =
                braid::is_pure(braid::expr::parse_braid(pure_args.text, pure_args.strands));
            emit(pure_args.as_json,
                 {{"command", "pure"},
                  {"inputs", {{"expr", pure_args.text}, {"strands", pure_args.strands}}},
                  {"result", pure},
                  {"provenance", json::array()}},
                 pure ? "true\n" : "false\n");
            return pure ? 0 : 1;
        }
        if (*eps_cmd) {
            const braid::MixedContext ctx(eps_args.n);
            const braid::Z2 v =
                braid::epsilon(braid::expr::parse_braid(eps_args.text, ctx.strands()), ctx);
            emit(eps_args.as_json,
                 {{"command", "eps"},
                  {"inputs", {{"expr", eps_args.text}, {"n", eps_args.n}}},
                  {"result", v.value()},
                  {"provenance", json::array()}},
                 std::to_string(v.value()) + "\n");
            return 0;
        }
        if (*pi_cmd) {
            const braid::MixedContext ctx(pi_args.n);
            const braid::Z2 v =
                braid::pi_sign(braid::expr::parse_braid(pi_args.text, ctx.strands()), ctx);
            emit(pi_args.as_json,
                 {{"command", "pi"},
                  {"inputs", {{"expr", pi_args.text}, {"n", pi_args.n}}},
                  {"result", v.value()},
                  {"provenance", json::array()}},
                 std::to_string(v.value()) + "\n");
            return 0;
        }
        if (*cable_cmd) {
            const braid::BraidWord w =
                braid::cable(braid::expr::parse_braid(cable_args.text, cable_args.strands),
                             cable_args.k);
            emit(cable_args.as_json,
                 {{"command", "cable"},
                  {"inputs",
                   {{"expr", cable_args.text}, {"strands", cable_args.strands}, {"k", cable_args.k}}},
                  {"result", {{"strands", w.strands()}, {"word", braid::expr::print_word(w)}}},
                  {"provenance", json::array()}},
                 braid::expr::print_word(w) + "\n");
            return 0;
        }
        if (*classify_cmd || *crossval_cmd) {
            braid::TripleDescriptor desc;
            const auto [target, genus] = parse_target(bup_args.target);
            if (bup_args.domain == "sphere") {
                desc = braid::TripleDescriptor::sphere_domain(target, bup_args.n, genus);
            } else if (bup_args.domain == "surface") {
                desc = braid::TripleDescriptor::surface_domain(
                    parse_presentation(bup_args.kind, bup_args.m, bup_args.theta), target,
                    bup_args.n, genus);
            } else {
                throw braid::InvalidDescriptor("domain must be sphere or surface");
            }
            if (*classify_cmd) {
                const braid::BupVerdict v = braid::classify(desc);
                std::string text;
                text += std::string("split ") + braid::to_string(v.split) + "\n";
                text += "split-rule " + v.split_rule + "\n";
                text += std::string("nonsplit ") + braid::to_string(v.nonsplit) + "\n";
                text += "nonsplit-rule " + v.nonsplit_rule + "\n";
                emit(bup_args.as_json,
                     {{"command", "bup classify"},
                      {"inputs",
                       {{"domain", bup_args.domain},
                        {"kind", bup_args.kind},
                        {"m", bup_args.m},
                        {"theta", bup_args.theta},
                        {"target", bup_args.target},
                        {"n", bup_args.n}}},
                      {"result",
                       {{"split", braid::to_string(v.split)},
                        {"nonsplit", braid::to_string(v.nonsplit)}}},
                      {"provenance", {v.split_rule, v.nonsplit_rule}}},
                     text);
                return 0;
            }
            const auto checks = braid::cross_validate(desc);
            std::string text;
            json steps = json::array();
            for (const auto& s : checks) {
                text += "ok " + s.description + "\n";
                steps.push_back({{"description", s.description}, {"pass", s.pass}});
            }
            emit(bup_args.as_json,
                 {{"command", "bup cross-validate"},
                  {"inputs",
                   {{"domain", bup_args.domain},
                    {"kind", bup_args.kind},
                    {"m", bup_args.m},
                    {"theta", bup_args.theta},
                    {"target", bup_args.target},
                    {"n", bup_args.n}}},
                  {"result", steps},
                  {"provenance", json::array()}},
                 text);
            return 0;
        }
        if (*verify_cmd) {
            const braid::checks::Options opt{verify_args.max_n, verify_args.seed};
            const auto results = braid::checks::run_all(opt);
            int failures = 0;
            std::string text;
            json rows = json::array();
            for (const auto& r : results) {
                if (!r.pass) ++failures;
                text += std::string(r.pass ? "PASS " : "FAIL ") + r.name +
                        (r.pass ? "" : " -- " + r.detail) + "\n";
                rows.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            }
            text += std::to_string(results.size() - failures) + "/" + std::to_string(results.size()) +
                    " checks passed\n";
            emit(verify_args.as_json,
                 {{"command", "verify-paper"},
                  {"inputs", {{"max-n", verify_args.max_n}, {"seed", verify_args.seed}}},
                  {"result", {{"passed", results.size() - failures}, {"total", results.size()}}},
                  {"provenance", rows}},
                 text);
            return failures == 0 ? 0 : 1;
        }
    } catch (const braid::InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const braid::WitnessFailure& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const braid::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
