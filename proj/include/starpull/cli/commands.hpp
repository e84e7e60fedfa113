#pragma once

// The starpull command line: eval, verify, instances, report.
// run_command returns the exit status and the text that would be printed, so
// the whole front end is testable in-process.

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starpull/cli/evaluator.hpp"
#include "starpull/harness.hpp"

namespace starpull::cli {

enum ExitCode { exit_ok = 0, exit_violations = 1, exit_usage = 2 };

struct CommandResult {
    int code = exit_ok;
    std::string out;
    std::string err;
};

struct usage_error : error {
    using error::error;
};

/// Flat "key = value" text; '#' starts a comment.
inline std::map<std::string, std::string> parse_config(const std::string& text)
{
    static const std::set<std::string> keys{"instance", "base",   "field",  "t_kind",         "expr",
                                            "suite",    "seed",   "count",  "max_generators", "max_degree",
                                            "height",   "window", "op",     "out"};
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        if (auto h = line.find('#'); h != std::string::npos)
            line.resize(h);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw usage_error("config line " + std::to_string(n) + ": expected key = value");
        std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        if (!keys.count(k))
            throw usage_error("config line " + std::to_string(n) + ": unknown key '" + k + "'");
        out[k] = v;
    }
    return out;
}

inline std::map<std::string, std::string> read_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw usage_error("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

/// Settings merged from the config file and the command line (the command line wins).
struct Settings {
    std::string instance, base, t_kind = "poly", expr, suite, op = "t", out, config, report_path;
    long field = 1;
    SampleParams params;
    bool json = false;

    void apply(const std::map<std::string, std::string>& cfg, const CLI::App& cmd)
    {
        auto given = [&](const char* flag) {
            try {
                return cmd.get_option(flag)->count() > 0;
            } catch (const CLI::OptionNotFound&) {
                return false;
            }
        };
        auto num = [](const std::string& k, const std::string& v) {
            try {
                std::size_t used = 0;
                long long x = std::stoll(v, &used);
                if (used != v.size())
                    throw std::invalid_argument(v);
                return x;
            } catch (const std::exception&) {
                throw usage_error("config key '" + k + "' needs an integer, got '" + v + "'");
            }
        };
        for (const auto& [k, v] : cfg) {
            if (k == "instance" && !given("--instance"))
                instance = v;
            else if (k == "base" && !given("--base"))
                base = v;
            else if (k == "field" && !given("--field"))
                field = static_cast<long>(num(k, v));
            else if (k == "t_kind" && !given("--t-kind"))
                t_kind = v;
            else if (k == "expr" && !given("--expr"))
                expr = v;
            else if (k == "suite" && !given("--suite"))
                suite = v;
            else if (k == "op" && !given("--op"))
                op = v;
            else if (k == "out" && !given("--out"))
                out = v;
            else if (k == "seed" && !given("--seed"))
                params.seed = static_cast<std::uint64_t>(num(k, v));
            else if (k == "count" && !given("--count"))
                params.count = static_cast<int>(num(k, v));
            else if (k == "max_generators")
                params.max_generators = static_cast<int>(num(k, v));
            else if (k == "max_degree")
                params.max_degree = static_cast<int>(num(k, v));
            else if (k == "height")
                params.height = static_cast<long>(num(k, v));
            else if (k == "window")
                params.window = static_cast<int>(num(k, v));
        }
    }

    PullbackInstance make() const
    {
        if (!instance.empty() && !base.empty())
            throw usage_error("give either an instance name or an explicit base, not both");
        if (!instance.empty())
            return make_instance(InstanceConfig{instance});
        if (!base.empty())
            return make_instance(InstanceConfig{"", base, field, t_kind});
        throw usage_error("no instance given (use -i A..E or --base)");
    }
};

/// "expr\n     ^" under a syntax error.
inline std::string caret(const std::string& text, const parse_error& e)
{
    if (text.size() > 200 || text.find('\n') != std::string::npos)
        return "";
    return "  " + text + "\n  " + std::string(std::min(e.offset, text.size()), ' ') + "^\n";
}

inline std::string flags_line(const PullbackInstance& I)
{
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string cl = "[]";
    if (I.D().kind() == DomainKind::quadratic_order) {
        cl = "[";
        for (long o : I.D().class_group().cyclic_orders())
            cl += (cl.size() > 1 ? "," : "") + std::to_string(o);
        cl += "]";
    }
    return std::string("square+=") + yn(I.is_square_plus()) + " T-quasilocal=" + yn(I.t_quasilocal()) +
           " units-surject=" + yn(I.phi_tilde_surjective()) + " T_M-valuation=" + yn(I.t_localization_is_valuation()) +
           " Cl(D)=" + cl;
}

inline nlohmann::ordered_json instance_json(const PullbackInstance& I)
{
    auto cl = nlohmann::ordered_json::array();
    if (I.D().kind() == DomainKind::quadratic_order)
        for (long o : I.D().class_group().cyclic_orders())
            cl.push_back(o);
    return {{"name", I.name()},
            {"D", I.D().name()},
            {"k", I.D().field_name()},
            {"T", I.T_name()},
            {"square_plus", I.is_square_plus()},
            {"t_quasilocal", I.t_quasilocal()},
            {"phi_tilde_surjective", I.phi_tilde_surjective()},
            {"t_localization_is_valuation", I.t_localization_is_valuation()},
            {"class_group", cl}};
}

inline CommandResult cmd_eval(const Settings& s)
{
    if (s.expr.empty())
        throw usage_error("eval needs an expression (-e)");
    auto inst = s.make();
    Value v = evaluate(s.expr, inst);
    CommandResult r;
    if (s.json) {
        nlohmann::ordered_json j = v.to_json(inst);
        j = {{"instance", inst.name()}, {"input", s.expr}, {"kind", j["kind"]}, {"value", j["value"]}, {"expr", j["expr"]}};
        r.out = j.dump(2) + "\n";
    } else {
        r.out = v.to_string(inst) + "\n";
    }
    return r;
}

inline CommandResult cmd_verify(const Settings& s)
{
    if (s.suite.empty())
        throw usage_error("verify needs a suite (-s); one of: all, " + [] {
            std::string a;
            for (const auto& n : suite_names())
                a += (a.empty() ? "" : ", ") + n;
            return a;
        }());
    auto inst = s.make();
    StarOp op = resolve_op(parse_star_op(s.op), Side::R);
    nlohmann::ordered_json j;
    bool pass = true;
    std::string summary;
    if (s.suite == "all") {
        auto reps = nlohmann::ordered_json::array();
        auto skipped = nlohmann::ordered_json::array();
        for (const auto& name : suite_names()) {
            try {
                Report rep = run_suite(name, inst, op, s.params);
                pass = pass && rep.pass();
                summary += name + ": " + (rep.pass() ? "pass" : "fail") + "\n";
                reps.push_back(rep.to_json());
            } catch (const precondition_error& e) {
                skipped.push_back({{"suite", name}, {"reason", e.what()}});
                summary += name + ": skipped\n";
            }
        }
        j = {{"instance", inst.name()}, {"seed", s.params.seed}, {"reports", reps}, {"skipped", skipped},
             {"verdict", pass ? "pass" : "fail"}};
    } else {
        Report rep = run_suite(s.suite, inst, op, s.params);
        pass = rep.pass();
        j = rep.to_json();
        summary = s.suite + " on " + inst.name() + ": " + (pass ? "pass" : "fail") + " (" +
                  std::to_string(rep.n_samples) + " samples, " + std::to_string(rep.violations.size()) +
                  " violations)\n";
    }
    CommandResult r;
    r.code = pass ? exit_ok : exit_violations;
    if (!s.out.empty()) {
        std::ofstream f(s.out);
        if (!f)
            throw usage_error("cannot write '" + s.out + "'");
        f << j.dump(2) << "\n";
        r.out = summary;
    } else {
        r.out = j.dump(2) + "\n";
    }
    return r;
}

inline CommandResult cmd_instances(const Settings& s)
{
    CommandResult r;
    auto all = catalogue();
    if (s.json) {
        auto a = nlohmann::ordered_json::array();
        for (const auto& I : all)
            a.push_back(instance_json(I));
        r.out = a.dump(2) + "\n";
        return r;
    }
    for (const auto& I : all)
        r.out += I.describe() + "\n    " + flags_line(I) + "\n";
    return r;
}

inline CommandResult cmd_report(const Settings& s)
{
    std::ifstream f(s.report_path);
    if (!f)
        throw usage_error("cannot read report '" + s.report_path + "'");
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("not a JSON report: ") + e.what());
    }
    CommandResult r;
    if (s.json) {
        r.out = j.dump(2) + "\n";
    } else {
        std::ostringstream o;
        auto one = [&](const nlohmann::ordered_json& rep) {
            o << rep.value("suite", std::string("?")) << " on " << rep.value("instance", std::string("?"))
              << "  seed " << rep.value("seed", 0) << "  samples " << rep.value("n_samples", 0) << "  violations "
              << rep.value("n_violations", 0) << "  => " << rep.value("verdict", std::string("?")) << "\n";
            if (rep.contains("violations"))
                for (const auto& v : rep["violations"])
                    o << "  #" << v.value("sample", 0) << " expected " << v.value("expected", std::string())
                      << "\n      got " << v.value("got", std::string()) << "\n      witness "
                      << v.value("witness", std::string()) << "\n";
            if (rep.contains("details") && !rep["details"].empty())
                for (const auto& [k, v] : rep["details"].items())
                    o << "  " << k << ": " << v.dump() << "\n";
        };
        if (j.contains("reports")) {
            for (const auto& rep : j["reports"])
                one(rep);
            if (j.contains("skipped"))
                for (const auto& sk : j["skipped"])
                    o << sk.value("suite", std::string("?")) << ": skipped (" << sk.value("reason", std::string())
                      << ")\n";
        } else {
            one(j);
        }
        r.out = o.str();
    }
    r.code = j.value("verdict", std::string("pass")) == "fail" ? exit_violations : exit_ok;
    return r;
}

inline CommandResult run_command(const std::vector<std::string>& args)
{
    CLI::App app{"starpull: fractional ideals and star operations on pullback rings", "starpull"};
    app.require_subcommand(1);
    Settings s;
    std::string config;

    auto instance_opts = [&](CLI::App* c) {
        c->add_option("-i,--instance", s.instance, "catalogued instance A..E");
        c->add_option("--base", s.base, "explicit base domain: integers, quadratic, rational");
        c->add_option("--field", s.field, "squarefree d with k = Q(sqrt d); 1 for Q");
        c->add_option("--t-kind", s.t_kind, "poly or local");
        c->add_option("-c,--config", config, "key = value settings file");
        c->add_flag("--json", s.json, "JSON output");
    };
    auto* ev = app.add_subcommand("eval", "evaluate an ideal expression");
    instance_opts(ev);
    ev->add_option("-e,--expr", s.expr, "expression, e.g. \"v(ideal(2, X))\"");

    auto* ve = app.add_subcommand("verify", "run a conformance suite and write its JSON report");
    instance_opts(ve);
    ve->add_option("-s,--suite", s.suite, "suite name or 'all'");
    ve->add_option("--seed", s.params.seed, "sampler seed");
    ve->add_option("--count", s.params.count, "number of samples");
    ve->add_option("--op", s.op, "star operation on R, e.g. t, d, lift(v)");
    ve->add_option("--out", s.out, "write the report here instead of stdout");

    auto* in = app.add_subcommand("instances", "list the catalogued instances");
    in->add_flag("--json", s.json, "JSON output");

    auto* re = app.add_subcommand("report", "pretty-print a JSON report");
    re->add_option("path", s.report_path, "report file")->required();
    re->add_flag("--json", s.json, "re-emit the JSON");

    CommandResult res;
    std::ostringstream out, err;
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e, out, err);
        res.code = c == 0 ? exit_ok : exit_usage;
        res.out = out.str();
        res.err = err.str();
        return res;
    }
    try {
        CLI::App* cmd = app.get_subcommands().front();
        if (!config.empty())
            s.apply(read_config_file(config), *cmd);
        if (cmd == ev)
            return cmd_eval(s);
        if (cmd == ve)
            return cmd_verify(s);
        if (cmd == in)
            return cmd_instances(s);
        return cmd_report(s);
    } catch (const parse_error& e) {
        res.code = exit_usage;
        res.err = std::string("error: ") + e.what() + "\n" + caret(s.expr, e);
    } catch (const std::exception& e) {
        res.code = exit_usage;
        res.err = std::string("error: ") + e.what() + "\n";
    }
    return res;
}

} // namespace starpull::cli
