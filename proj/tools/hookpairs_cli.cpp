// Command-line front end: parse compositions, dispatch to the library,
// render diagrams, traces and reports, emit JSON.
//
// Exit codes: 0 success, 1 domain error (invalid node, infeasible bounds),
// 2 parse error (composition grammar or command line).

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "hookpairs/critical.hpp"
#include "hookpairs/jack.hpp"
#include "hookpairs/oracle.hpp"
#include "hookpairs/textio.hpp"

namespace hp = hookpairs;

namespace {

hp::Node parse_node(const std::string& text) {
    auto commapos = text.find(',');
    if (commapos == std::string::npos) throw hp::ParseError("expected node as row,col", 0);
    try {
        int row = std::stoi(text.substr(0, commapos));
        int col = std::stoi(text.substr(commapos + 1));
        return hp::Node{row, col};
    } catch (const std::exception&) {
        throw hp::ParseError("expected node as row,col", 0);
    }
}

std::pair<hp::Int, hp::Int> parse_factor(const std::string& text) {
    auto commapos = text.find(',');
    if (commapos == std::string::npos) throw hp::ParseError("expected factor as m,n", 0);
    std::string ms = text.substr(0, commapos), ns = text.substr(commapos + 1);
    if (ms.empty() || ns.empty() || ms.find_first_not_of("0123456789") != std::string::npos ||
        ns.find_first_not_of("0123456789") != std::string::npos)
        throw hp::ParseError("expected factor as m,n with nonnegative integers", 0);
    return {hp::Int(ms), hp::Int(ns)};
}

void emit(const hp::Json& j) { std::cout << j.dump(2) << '\n'; }

void print_trace(const hp::ConstructResult& res) {
    const hp::AlgorithmTrace& tr = res.trace;
    std::cout << "node (" << res.node.row << "," << res.node.col << "): factor " << tr.m << "k+"
              << tr.n << ", shift l=" << tr.shift_l << ", N=" << tr.ambient << "\n";
    std::cout << "T=" << tr.T << " t=" << tr.t << " k=" << tr.k << " (bound T0=" << tr.T0
              << ")\n";
    std::cout << "beta = " << hp::render_trimmed(res.beta) << "\n";
}

struct Options {
    std::string alpha_text;
    std::string beta_text;
    std::string node_text;
    std::string factor_text;
    bool json = false;
    bool extended = false;
    int nmax = -1;
    int depth = 1;
    int nvars = -1;
    std::string mode = "rank";
    std::string scan_kind;
    int max_weight = 6;
    int max_length = 3;
};

int run_hooks(const Options& opt) {
    hp::Composition alpha = hp::parse_composition(opt.alpha_text);
    if (opt.json) {
        emit(hp::hooks_json(alpha));
        return 0;
    }
    std::cout << hp::diagram(alpha);
    for (const hp::HookFactor& f : hp::hook_factors_all(alpha)) {
        auto red = f.reduced();
        std::cout << "(" << f.node.row << "," << f.node.col << ")  L=" << leg_length(alpha, f.node)
                  << "  " << f.str();
        if (hp::Rat(red.first) != f.slope) std::cout << "  ~ " << red.first << "k+" << red.second;
        std::cout << "\n";
    }
    return 0;
}

int run_construct(const Options& opt) {
    hp::Composition alpha = hp::parse_composition(opt.alpha_text);
    std::vector<hp::ConstructResult> results;
    if (!opt.node_text.empty()) {
        results.push_back(hp::construct_beta(alpha, parse_node(opt.node_text)));
    } else if (!opt.factor_text.empty()) {
        auto [m, n] = parse_factor(opt.factor_text);
        std::vector<hp::HookFactor> nodes = hp::matching_hooks(alpha, m, n);
        if (nodes.empty()) throw hp::DomainError("no hook factor proportional to the request");
        for (const hp::HookFactor& f : nodes) results.push_back(hp::construct_beta(alpha, f.node));
    } else {
        throw hp::DomainError("construct needs --node or --factor");
    }
    if (opt.json) {
        hp::Json arr = hp::Json::array();
        for (const auto& r : results) arr.push_back(hp::construct_json(r));
        emit(hp::Json{{"alpha", hp::composition_json(alpha)}, {"results", arr}});
    } else {
        for (const auto& r : results) print_trace(r);
    }
    return 0;
}

int run_verify(const Options& opt) {
    hp::Composition alpha = hp::parse_composition(opt.alpha_text);
    hp::Composition beta = hp::parse_composition(opt.beta_text);
    if (opt.factor_text.empty()) throw hp::DomainError("verify needs --factor m,n");
    auto [m, n] = parse_factor(opt.factor_text);
    hp::CriticalCheck check = hp::check_critical_pair(alpha, beta, m, n, opt.extended);
    if (check.certificate) {
        if (opt.json) emit(hp::certificate_json(*check.certificate));
        else
            std::cout << "critical pair at kappa = -" << n << "/" << m << "\n";
        return 0;
    }
    if (opt.json)
        emit(hp::Json{{"critical", false},
                      {"first_violation_index", check.first_violation},
                      {"reason", check.reason}});
    else
        std::cout << "not a critical pair: " << check.reason << "\n";
    return 1;
}

int run_enumerate(const Options& opt) {
    hp::Composition alpha = hp::parse_composition(opt.alpha_text);
    if (opt.factor_text.empty()) throw hp::DomainError("enumerate needs --factor m,n");
    auto [m, n] = parse_factor(opt.factor_text);
    hp::SearchBounds bounds;
    bounds.n_max = opt.nmax;
    bounds.extended = opt.extended;
    if (opt.mode == "rank") bounds.mode = hp::SearchMode::RankPermutation;
    else if (opt.mode == "naive") bounds.mode = hp::SearchMode::NaiveComposition;
    else throw hp::DomainError("mode must be rank or naive");
    auto partners = hp::enumerate_partners(alpha, m, n, bounds);
    if (opt.json) {
        emit(hp::partners_json(alpha, m, n, partners));
    } else {
        for (const hp::Composition& p : partners) std::cout << hp::render_trimmed(p) << "\n";
        std::cout << partners.size() << " partner(s)\n";
    }
    return 0;
}

int run_closure(const Options& opt) {
    hp::Composition alpha = hp::parse_composition(opt.alpha_text);
    if (opt.factor_text.empty()) throw hp::DomainError("closure needs --factor m,n");
    auto [m, n] = parse_factor(opt.factor_text);
    auto entries = hp::closure(alpha, m, n, opt.depth);
    if (opt.json) {
        emit(hp::closure_json(alpha, m, n, opt.depth, entries));
    } else {
        for (const hp::ClosureEntry& e : entries)
            std::cout << hp::render_trimmed(e.beta) << "  (depth " << e.depth << " from "
                      << hp::render_trimmed(e.parent) << " at (" << e.node.row << ","
                      << e.node.col << "), factor " << e.step_m << "k+" << e.step_n << ")\n";
        std::cout << entries.size() << " partner(s)\n";
    }
    return 0;
}

int run_jack(const Options& opt) {
    hp::Composition alpha = hp::parse_composition(opt.alpha_text);
    int nvars = opt.nvars > 0 ? opt.nvars : std::max(alpha.length(), 1);
    hp::JackReport rep = hp::knop_sahi_report(alpha, nvars);
    if (opt.json) {
        emit(hp::jack_report_json(rep));
        return 0;
    }
    std::cout << "zeta_" << hp::render_trimmed(alpha) << " over " << nvars << " variables\n";
    for (const auto& [e, c] : rep.zeta.terms()) {
        std::cout << "  x^(";
        for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
        std::cout << ")  " << c.str() << "\n";
    }
    std::cout << "denominator lcm: " << rep.denominator_lcm.str() << "\n";
    for (const hp::PoleFactor& p : rep.pole_factors)
        std::cout << "pole factor " << p.m << "k+" << p.n << " (multiplicity " << p.multiplicity
                  << ")\n";
    std::cout << "knop_sahi_ok=" << (rep.knop_sahi_ok ? "true" : "false")
              << " trailing_coeff_ok=" << (rep.trailing_coeff_ok ? "true" : "false") << "\n";
    return 0;
}

int run_scan(const Options& opt) {
    if (opt.scan_kind == "uniqueness") {
        auto corpus = hp::all_partitions(opt.max_weight, opt.max_length);
        hp::UniquenessReport report = hp::uniqueness_scan(corpus, opt.nmax);
        std::cout << hp::uniqueness_report_lines(report);
        return 0;
    }
    if (opt.scan_kind == "negative") {
        auto corpus = hp::all_compositions(opt.max_weight, opt.max_length);
        hp::NegativeExistenceReport report = hp::negative_existence_scan(corpus);
        std::cout << hp::negative_report_lines(report);
        return 0;
    }
    throw hp::DomainError("scan kind must be uniqueness or negative");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hook-length products and critical pairs of compositions"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.json, "emit JSON"); };

    CLI::App* hooks = app.add_subcommand("hooks", "diagram and hook factor table");
    hooks->add_option("alpha", opt.alpha_text)->required();
    add_common(hooks);

    CLI::App* construct = app.add_subcommand("construct", "build a critical partner");
    construct->add_option("alpha", opt.alpha_text)->required();
    construct->add_option("--node", opt.node_text, "node as row,col");
    construct->add_option("--factor", opt.factor_text, "hook factor as m,n; runs all nodes");
    add_common(construct);

    CLI::App* verify = app.add_subcommand("verify", "check a critical pair");
    verify->add_option("alpha", opt.alpha_text)->required();
    verify->add_option("beta", opt.beta_text)->required();
    verify->add_option("--factor", opt.factor_text)->required();
    verify->add_flag("--extended", opt.extended, "accept m = 0");
    add_common(verify);

    CLI::App* enumerate = app.add_subcommand("enumerate", "brute-force partner search");
    enumerate->add_option("alpha", opt.alpha_text)->required();
    enumerate->add_option("--factor", opt.factor_text)->required();
    enumerate->add_option("--nmax", opt.nmax, "ambient length bound");
    enumerate->add_option("--mode", opt.mode, "rank (default) or naive");
    enumerate->add_flag("--extended", opt.extended, "accept m = 0");
    add_common(enumerate);

    CLI::App* clos = app.add_subcommand("closure", "iterate the construction");
    clos->add_option("alpha", opt.alpha_text)->required();
    clos->add_option("--factor", opt.factor_text)->required();
    clos->add_option("--depth", opt.depth, "iteration depth")->default_val(1);
    add_common(clos);

    CLI::App* jack = app.add_subcommand("jack", "nonsymmetric Jack polynomial report");
    jack->add_option("alpha", opt.alpha_text)->required();
    jack->add_option("-N,--nvars", opt.nvars, "number of variables (default l(alpha))");
    add_common(jack);

    CLI::App* scan = app.add_subcommand("scan", "conjecture scans over small corpora");
    scan->add_option("kind", opt.scan_kind, "uniqueness or negative")->required();
    scan->add_option("--max-weight", opt.max_weight)->default_val(6);
    scan->add_option("--max-length", opt.max_length)->default_val(3);
    scan->add_option("--nmax", opt.nmax, "ambient length bound");
    add_common(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(hooks)) return run_hooks(opt);
        if (app.got_subcommand(construct)) return run_construct(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(enumerate)) return run_enumerate(opt);
        if (app.got_subcommand(clos)) return run_closure(opt);
        if (app.got_subcommand(jack)) return run_jack(opt);
        if (app.got_subcommand(scan)) return run_scan(opt);
    } catch (const hp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const hp::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
