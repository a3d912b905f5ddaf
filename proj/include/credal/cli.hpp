#pragma once

// Command dispatch for the credal command-line tool. Kept in a header so the
// same code paths are exercised by the tests and by tools/credal.cpp.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "credal/audit.hpp"
#include "credal/credal_set.hpp"
#include "credal/decision.hpp"
#include "credal/rectangular.hpp"
#include "credal/scenario.hpp"

namespace credal::cli {

enum ExitCode : int { Success = 0, CheckFailed = 1, InputError = 2 };

enum class OutputFormat { Text, Structured };

struct CommandRequest {
    std::string command;
    std::vector<std::string> args;
    std::optional<UpdateMode> mode;
    std::optional<std::uint64_t> seed;
    OutputFormat format = OutputFormat::Text;
    bool recursive = false;
    bool after_rectangularize = false;
    /// Restricts audits to these acts (all acts of the document when empty).
    std::vector<std::string> acts;
    std::size_t samples = 0;
    /// check-axioms: "document", "rectangular" or "simplex"; empty picks
    /// credal_set_hat when present, else the rectangular hull.
    std::string against;
};

using json = nlohmann::ordered_json;

namespace detail {

class UsageError : public Error {
public:
    using Error::Error;
};

inline json to_json(std::span<const Rational> v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline json to_json(const Prior& p) { return to_json(p.mass()); }

inline json to_json(const CredalSet& c) {
    json out = json::array();
    for (const auto& v : c.vertices()) out.push_back(to_json(v));
    return out;
}

inline Rule parse_rule(const std::string& s) {
    if (s == "bewley") return Rule::Bewley;
    if (s == "maxmin") return Rule::Maxmin;
    throw UsageError("unknown rule '" + s + "' (expected bewley or maxmin)");
}

inline const NamedAct& act(const ScenarioDocument& doc, const std::string& name) {
    if (const auto* a = doc.find_act(name)) return *a;
    throw UsageError("unknown act '" + name + "'");
}

/// Resolves "R,B", a single label, or a concatenated cell name such as "RB".
inline Cell parse_cell(const ScenarioDocument& doc, const std::string& text) {
    if (text.find(',') != std::string::npos) {
        std::vector<std::size_t> idx;
        std::stringstream ss(text);
        for (std::string label; std::getline(ss, label, ',');) {
            auto i = doc.states.find(label);
            if (!i) throw UsageError("unknown state label '" + label + "'");
            idx.push_back(*i);
        }
        return Cell(std::move(idx));
    }
    if (auto i = doc.states.find(text)) return Cell{*i};
    for (const auto& cell : doc.partition)
        if (cell_name(doc.states, cell) == text) return cell;
    throw UsageError("unknown cell '" + text + "'");
}

inline void expect_args(const CommandRequest& req, std::size_t n, const char* usage) {
    if (req.args.size() != n) throw UsageError(std::string("usage: ") + usage);
}

struct Context {
    const ScenarioDocument& doc;
    const CommandRequest& req;
    UpdateMode mode;
    std::uint64_t seed;
    std::ostream& out;

    bool structured() const { return req.format == OutputFormat::Structured; }

    CredalSet working_set() const {
        auto c = doc.credal();
        return req.after_rectangularize ? rectangular_hull(c, doc.partition, mode) : c;
    }

    void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

inline std::string describe(const AuditReport& r, const AuditViolation& v) {
    std::string s = "(" + r.acts[v.first].name + "," + r.acts[v.second].name + ") on cell " + r.cells[v.cell] + ": ";
    if (v.ex_ante)
        s += "given " + r.cells[v.cell] + " " + to_string(v.ex_post) + ", ex ante spliced act " + to_string(*v.ex_ante);
    else
        s += "given " + r.cells[v.cell] + " " + to_string(v.ex_post) + ", expected indifferent";
    return s;
}

inline json to_json(const AuditReport& r) {
    json j;
    j["check"] = r.check;
    if (r.check == "dynamic-consistency") j["rule"] = to_string(r.rule);
    j["mode"] = to_string(r.mode);
    j["seed"] = r.seed;
    j["verdict"] = r.passed() ? "pass" : "fail";
    j["checked_pairs"] = r.checked_pairs;
    j["cells"] = r.cells;
    json acts = json::object();
    for (const auto& a : r.acts) acts[a.name] = to_json(a.utils.utils());
    j["acts"] = acts;
    json vs = json::array();
    for (const auto& v : r.violations) {
        json e;
        e["first"] = r.acts[v.first].name;
        e["second"] = r.acts[v.second].name;
        e["cell"] = r.cells[v.cell];
        if (v.ex_ante) e["ex_ante"] = to_string(*v.ex_ante);
        e["ex_post"] = to_string(v.ex_post);
        vs.push_back(e);
    }
    j["violations"] = vs;
    return j;
}

inline int report_audit(const Context& ctx, const AuditReport& r) {
    if (ctx.structured()) {
        ctx.emit(to_json(r));
    } else {
        ctx.out << r.check;
        if (r.check == "dynamic-consistency") ctx.out << " (" << to_string(r.rule) << ")";
        ctx.out << ": " << (r.passed() ? "pass" : "fail") << "\n";
        ctx.out << "mode " << to_string(r.mode) << ", seed " << r.seed << ", " << r.acts.size() << " acts, "
                << r.checked_pairs << " ordered pairs, " << r.violations.size() << " violations\n";
        for (const auto& v : r.violations) ctx.out << "  " << describe(r, v) << "\n";
    }
    return r.passed() ? Success : CheckFailed;
}

inline std::vector<NamedAct> selected_acts(const ScenarioDocument& doc, const CommandRequest& req) {
    if (req.acts.empty()) return doc.acts;
    std::vector<NamedAct> out;
    for (const auto& name : req.acts) out.push_back(act(doc, name));
    return out;
}

// --- commands --------------------------------------------------------------

inline int cmd_compare(const Context& ctx) {
    expect_args(ctx.req, 3, "compare <bewley|maxmin> <act> <act>");
    const Rule rule = parse_rule(ctx.req.args[0]);
    const auto& f = act(ctx.doc, ctx.req.args[1]);
    const auto& g = act(ctx.doc, ctx.req.args[2]);
    const auto c = ctx.working_set();
    json j;
    j["command"] = "compare";
    j["rule"] = to_string(rule);
    j["first"] = f.name;
    j["second"] = g.name;
    std::ostringstream text;
    if (rule == Rule::Bewley) {
        const auto v = bewley_compare(c, f.utils, g.utils);
        j["verdict"] = to_string(v.kind);
        j["favours_first"] = v.favours_first ? to_json(*v.favours_first) : json(nullptr);
        j["favours_second"] = v.favours_second ? to_json(*v.favours_second) : json(nullptr);
        static const char* phrase[] = {" strictly better than ", " indifferent to ", " strictly worse than ",
                                       " incomparable with "};
        text << "bewley: " << f.name << phrase[static_cast<int>(v.kind)] << g.name << "\n";
        if (v.favours_first) text << "  prior favouring " << f.name << ": " << to_string(*v.favours_first) << "\n";
        if (v.favours_second) text << "  prior favouring " << g.name << ": " << to_string(*v.favours_second) << "\n";
    } else {
        const auto vf = maxmin_value(c, f.utils);
        const auto vg = maxmin_value(c, g.utils);
        const auto order = maxmin_compare(c, f.utils, g.utils);
        j["verdict"] = to_string(order);
        j["values"] = {to_string(vf), to_string(vg)};
        text << "maxmin: " << f.name << " " << to_string(order) << (order == MaxminOrder::Indifferent ? " to " : " than ")
             << g.name << " (" << to_string(vf) << " vs " << to_string(vg) << ")\n";
    }
    if (ctx.structured())
        ctx.emit(j);
    else
        ctx.out << text.str();
    return Success;
}

inline int cmd_update(const Context& ctx) {
    expect_args(ctx.req, 1, "update <cell>");
    const Cell cell = parse_cell(ctx.doc, ctx.req.args[0]);
    const auto updated = canonicalize(update_set(ctx.working_set(), cell, ctx.mode));
    if (ctx.structured()) {
        json j;
        j["command"] = "update";
        j["cell"] = cell_name(ctx.doc.states, cell);
        j["mode"] = to_string(ctx.mode);
        j["vertices"] = to_json(updated);
        ctx.emit(j);
    } else {
        for (const auto& v : updated.vertices()) ctx.out << to_string(v) << "\n";
    }
    return Success;
}

inline int cmd_rectangularize(const Context& ctx) {
    expect_args(ctx.req, 0, "rectangularize");
    const auto hull = rectangular_hull(ctx.doc.credal(), ctx.doc.partition, ctx.mode);
    if (ctx.structured()) {
        json j;
        j["command"] = "rectangularize";
        j["mode"] = to_string(ctx.mode);
        j["vertices"] = to_json(hull);
        ctx.emit(j);
    } else {
        for (const auto& v : hull.vertices()) ctx.out << to_string(v) << "\n";
    }
    return Success;
}

inline int cmd_audit_dc(const Context& ctx) {
    expect_args(ctx.req, 1, "audit-dc <bewley|maxmin>");
    const Rule rule = parse_rule(ctx.req.args[0]);
    AuditOptions opt{ctx.mode, ctx.seed, ctx.req.samples};
    return report_audit(ctx, dynamic_consistency_audit(ctx.working_set(), ctx.doc.partition, rule,
                                                       selected_acts(ctx.doc, ctx.req), opt));
}

inline int cmd_audit_consequentialism(const Context& ctx) {
    expect_args(ctx.req, 0, "audit-consequentialism");
    AuditOptions opt{ctx.mode, ctx.seed, ctx.req.samples};
    return report_audit(ctx, consequentialism_check(ctx.working_set(), ctx.doc.partition,
                                                    selected_acts(ctx.doc, ctx.req), opt));
}

inline int cmd_check_axioms(const Context& ctx) {
    expect_args(ctx.req, 0, "check-axioms");
    const auto c = ctx.doc.credal();
    std::string against = ctx.req.against;
    if (against.empty()) against = ctx.doc.credal_set_hat ? "document" : "rectangular";
    CredalSet c_hat;
    if (against == "document") {
        if (!ctx.doc.credal_set_hat) throw UsageError("the scenario has no credal_set_hat");
        c_hat = *ctx.doc.credal_hat();
    } else if (against == "rectangular") {
        c_hat = rectangular_hull(c, ctx.doc.partition, ctx.mode);
    } else if (against == "simplex") {
        c_hat = CredalSet::simplex(ctx.doc.states);
    } else {
        throw UsageError("unknown --against value '" + against + "'");
    }
    const auto r = coherence_prudence_check(c, c_hat, ctx.doc.partition, ctx.mode);
    if (ctx.structured()) {
        json j;
        j["command"] = "check-axioms";
        j["against"] = against;
        j["mode"] = to_string(ctx.mode);
        j["verdict"] = r.passed() ? "pass" : "fail";
        json conds = json::array();
        for (const auto& cond : r.conditions) {
            json e;
            e["id"] = cond.id;
            e["description"] = cond.description;
            e["status"] = to_string(cond.status);
            if (cond.cell) e["cell"] = r.cells[*cond.cell];
            if (cond.uncovered) {
                e["uncovered_point"] = to_json(cond.uncovered->point);
                e["point_of"] = cond.missing_from_other;
                e["separating_direction"] = to_json(cond.uncovered->separation.direction);
                e["bound"] = to_string(cond.uncovered->separation.bound);
            }
            conds.push_back(e);
        }
        j["conditions"] = conds;
        ctx.emit(j);
    } else {
        ctx.out << "check-axioms against " << against << ": " << (r.passed() ? "pass" : "fail") << "\n";
        for (const auto& cond : r.conditions) {
            ctx.out << "  (" << cond.id << ") " << cond.description << ": " << to_string(cond.status) << "\n";
            if (cond.uncovered)
                ctx.out << "      point " << to_string(cond.uncovered->point) << " of " << cond.missing_from_other
                        << " is outside the other set; direction " << to_string(cond.uncovered->separation.direction)
                        << " exceeds " << to_string(cond.uncovered->separation.bound) << " there\n";
        }
    }
    return r.passed() ? Success : CheckFailed;
}

inline int cmd_evaluate(const Context& ctx) {
    expect_args(ctx.req, 2, "evaluate <bewley|maxmin> <act> [--recursive]");
    const Rule rule = parse_rule(ctx.req.args[0]);
    const auto& f = act(ctx.doc, ctx.req.args[1]);
    const auto c = ctx.working_set();
    json j;
    j["command"] = "evaluate";
    j["rule"] = to_string(rule);
    j["act"] = f.name;
    std::ostringstream text;
    if (rule == Rule::Maxmin) {
        const auto value =
            ctx.req.recursive ? recursive_maxmin_value(c, ctx.doc.partition, f.utils, ctx.mode) : maxmin_value(c, f.utils);
        j["recursive"] = ctx.req.recursive;
        j["value"] = to_string(value);
        text << f.name << ": " << to_string(value) << "\n";
    } else {
        if (ctx.req.recursive) throw UsageError("--recursive applies to the maxmin rule only");
        const auto b = expectation_bounds(c, f.utils);
        j["lower"] = to_string(b.lower);
        j["upper"] = to_string(b.upper);
        text << f.name << ": [" << to_string(b.lower) << ", " << to_string(b.upper) << "]\n";
    }
    if (ctx.structured())
        ctx.emit(j);
    else
        ctx.out << text.str();
    return Success;
}

inline int cmd_check_gmms(const Context& ctx) {
    expect_args(ctx.req, 0, "check-gmms");
    std::vector<UtilityProfile> acts;
    for (const auto& a : selected_acts(ctx.doc, ctx.req)) acts.push_back(a.utils);
    for (auto& a : sample_acts(ctx.doc.states.size(), ctx.req.samples, ctx.seed)) acts.push_back(std::move(a));
    const auto r = gmms_completion_check(ctx.working_set(), acts, certainty_grid(acts, 20));
    if (ctx.structured()) {
        json j;
        j["command"] = "check-gmms";
        j["verdict"] = r.passed() ? "pass" : "fail";
        j["consistency_checks"] = r.consistency_checks;
        j["certainty_checks"] = r.certainty_checks;
        json ce = json::array();
        for (const auto& c : r.counterexamples) ce.push_back(c.detail);
        j["counterexamples"] = ce;
        ctx.emit(j);
    } else {
        ctx.out << "check-gmms: " << (r.passed() ? "pass" : "fail") << " (" << r.consistency_checks
                << " consistency checks, " << r.certainty_checks << " default-to-certainty checks)\n";
        for (const auto& c : r.counterexamples) ctx.out << "  " << c.detail << "\n";
    }
    return r.passed() ? Success : CheckFailed;
}

inline int cmd_show(const Context& ctx) {
    expect_args(ctx.req, 0, "show");
    ctx.out << render_scenario(ctx.doc);
    return Success;
}

}  // namespace detail

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"compare",     "update",       "rectangularize", "audit-dc",
                                                   "audit-consequentialism", "check-axioms", "evaluate",
                                                   "check-gmms",  "show"};
    return names;
}

/// Runs one command against a parsed scenario. Returns 0 on success or a
/// passing check, 1 on a failing check, 2 on bad input.
inline int run_command(const ScenarioDocument& doc, const CommandRequest& req, std::ostream& out, std::ostream& err) {
    const detail::Context ctx{doc, req, req.mode.value_or(doc.mode), req.seed.value_or(doc.seed), out};
    try {
        if (req.command == "compare") return detail::cmd_compare(ctx);
        if (req.command == "update") return detail::cmd_update(ctx);
        if (req.command == "rectangularize") return detail::cmd_rectangularize(ctx);
        if (req.command == "audit-dc") return detail::cmd_audit_dc(ctx);
        if (req.command == "audit-consequentialism") return detail::cmd_audit_consequentialism(ctx);
        if (req.command == "check-axioms") return detail::cmd_check_axioms(ctx);
        if (req.command == "evaluate") return detail::cmd_evaluate(ctx);
        if (req.command == "check-gmms") return detail::cmd_check_gmms(ctx);
        if (req.command == "show") return detail::cmd_show(ctx);
        err << "error: unknown command '" << req.command << "'\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    }
    return InputError;
}

}  // namespace credal::cli
