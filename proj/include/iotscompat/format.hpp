#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "iotscompat/async.hpp"
#include "iotscompat/compose.hpp"
#include "iotscompat/model.hpp"
#include "iotscompat/pipeline.hpp"
#include "iotscompat/verdict.hpp"

namespace iotscompat {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

inline ActionName parse_action_token(std::string tok) {
    bool decorated = false;
    if (!tok.empty() && tok.back() == kDecorationMarker) {
        decorated = true;
        tok.pop_back();
    }
    return ActionName{tok, decorated};
}

[[noreturn]] inline void syntax_error(std::size_t lineno, const std::string& msg) {
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace detail

/// Line-oriented format:
///   iots <Name>
///   inputs <name>*   /  outputs <name>*  /  internals <name>*
///   init <state>
///   <state> <action><suffix> <state>    with suffix ? input, ! output, ~ internal
/// `#` starts a comment; decorated actions carry a trailing `>` before the suffix.
inline Iots parse_iots(const std::string& text) {
    RawIots raw;
    Alphabet alpha;
    bool saw_header = false, saw_init = false;
    std::istringstream input(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::tuple<std::size_t, std::string, std::string, char, std::string>>
        pending;  // line, src, action token, suffix, dst

    while (std::getline(input, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;

        if (toks[0] == "iots") {
            if (saw_header || toks.size() != 2)
                detail::syntax_error(lineno, "expected a single `iots <Name>` header");
            raw.name = toks[1];
            saw_header = true;
        } else if (toks[0] == "inputs" || toks[0] == "outputs" ||
                   toks[0] == "internals") {
            auto& cls = toks[0] == "inputs"    ? alpha.inputs
                        : toks[0] == "outputs" ? alpha.outputs
                                               : alpha.internals;
            for (std::size_t i = 1; i < toks.size(); ++i)
                cls.insert(detail::parse_action_token(toks[i]));
        } else if (toks[0] == "init") {
            if (saw_init || toks.size() != 2)
                detail::syntax_error(lineno, "expected a single `init <state>` line");
            raw.initial = toks[1];
            saw_init = true;
        } else if (toks.size() == 3) {
            std::string act = toks[1];
            if (act.size() < 2) detail::syntax_error(lineno, "malformed action token");
            char suffix = act.back();
            if (suffix != '?' && suffix != '!' && suffix != '~')
                detail::syntax_error(lineno,
                                     "action must end in ?, ! or ~: " + toks[1]);
            act.pop_back();
            pending.emplace_back(lineno, toks[0], act, suffix, toks[2]);
        } else {
            detail::syntax_error(lineno, "unrecognized line");
        }
    }
    if (!saw_header) detail::syntax_error(lineno, "missing `iots <Name>` header");
    if (!saw_init) detail::syntax_error(lineno, "missing `init <state>` line");

    for (const auto& [ln, src, act, suffix, dst] : pending) {
        ActionName name = detail::parse_action_token(act);
        auto declared_kind = alpha.kind_of(name);
        if (!declared_kind)
            throw Error(ErrorKind::UnknownAction,
                        "line " + std::to_string(ln) + ": action '" + name.str() +
                            "' is not declared in any alphabet class");
        ActionKind declared = *declared_kind;
        ActionKind used = suffix == '?'   ? ActionKind::Input
                          : suffix == '!' ? ActionKind::Output
                                          : ActionKind::Internal;
        if (declared != used)
            throw Error(ErrorKind::KindMismatch,
                        "line " + std::to_string(ln) + ": action '" + name.str() +
                            "' used with suffix '" + suffix +
                            "' but declared otherwise");
        raw.transitions.push_back(Transition{src, name, dst});
    }
    raw.inputs.assign(alpha.inputs.begin(), alpha.inputs.end());
    raw.outputs.assign(alpha.outputs.begin(), alpha.outputs.end());
    raw.internals.assign(alpha.internals.begin(), alpha.internals.end());
    return build(raw);
}

inline Iots load_iots(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw Error(ErrorKind::Usage, "cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_iots(ss.str());
}

inline std::string emit_iots(const Iots& a) {
    std::ostringstream out;
    out << "iots " << a.name << "\n";
    auto emit_class = [&](const char* kw, const std::set<ActionName>& cls) {
        if (cls.empty()) return;
        out << kw;
        for (const auto& x : cls) out << ' ' << x.str();
        out << "\n";
    };
    emit_class("inputs", a.alphabet.inputs);
    emit_class("outputs", a.alphabet.outputs);
    emit_class("internals", a.alphabet.internals);
    out << "init " << a.initial << "\n";
    for (const auto& t : a.transitions) {
        char suffix = '~';
        if (auto k = a.alphabet.kind_of(t.label)) {
            if (*k == ActionKind::Input) suffix = '?';
            else if (*k == ActionKind::Output) suffix = '!';
        }
        out << t.src << ' ' << t.label.str() << suffix << ' ' << t.dst << "\n";
    }
    return out.str();
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace detail

inline std::string emit_dot(const SyncGraph& g, const std::string& title = "sync") {
    std::ostringstream out;
    out << "digraph \"" << detail::dot_escape(title) << "\" {\n"
        << "  rankdir=LR;\n  node [shape=circle];\n"
        << "  __init [shape=point];\n"
        << "  __init -> \"" << detail::dot_escape(g.initial.str()) << "\";\n";
    for (const auto& n : g.nodes) {
        out << "  \"" << detail::dot_escape(n.str()) << "\"";
        if (g.out_degree(n) == 0) out << " [shape=doublecircle, color=red]";
        out << ";\n";
    }
    for (const auto& e : g.edges) {
        out << "  \"" << detail::dot_escape(e.src.str()) << "\" -> \""
            << detail::dot_escape(e.dst.str()) << "\" [label=\""
            << detail::dot_escape(e.label.str()) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string emit_dot(const AsyncGraph& g, const std::string& title = "async") {
    std::ostringstream out;
    out << "digraph \"" << detail::dot_escape(title) << "\" {\n"
        << "  rankdir=LR;\n  node [shape=box];\n"
        << "  __init [shape=point];\n"
        << "  __init -> \"" << detail::dot_escape(g.initial.str()) << "\";\n";
    for (const auto& n : g.nodes) {
        out << "  \"" << detail::dot_escape(n.str()) << "\"";
        bool horizon = g.horizon.count(n) > 0;
        if (horizon) out << " [style=dashed]";
        else if (g.out_degree(n) == 0) out << " [color=red, peripheries=2]";
        out << ";\n";
    }
    for (const auto& e : g.edges) {
        out << "  \"" << detail::dot_escape(e.src.str()) << "\" -> \""
            << detail::dot_escape(e.dst.str()) << "\" [label=\""
            << detail::dot_escape(e.label.str()) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

inline ordered_json action_list_json(const std::vector<ActionName>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : v) arr.push_back(a.str());
    return arr;
}

inline ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["status"] = status_name(v.status);
    if (v.witness) {
        ordered_json w;
        w["location"] = v.witness->location;
        w["actions"] = action_list_json(v.witness->actions);
        w["trace"] = action_list_json(v.witness->trace);
        j["witness"] = w;
    }
    j["justification"] = v.justification;
    if (v.bound) j["bound"] = *v.bound;
    if (v.exhaustive) j["exhaustive"] = *v.exhaustive;
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

inline ordered_json deadlock_json(const DeadlockReport& r) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& e : r.deadlocked) {
        ordered_json d;
        d["location"] = e.location;
        d["trace"] = action_list_json(e.trace);
        arr.push_back(d);
    }
    j["deadlocked"] = arr;
    if (r.bound) j["bound"] = *r.bound;
    if (r.horizon_empty) j["horizon_empty"] = *r.horizon_empty;
    return j;
}

inline ordered_json report_json(const Report& r) {
    ordered_json j;
    j["pair"] = {{"left", r.a_name}, {"right", r.b_name}};
    j["bound"] = r.bound;
    j["mode"] = r.mode == Mode::Strong ? "strong" : "weak";
    ordered_json checks;
    checks["io_separated_left"] = verdict_json(r.io_sep_a);
    checks["io_separated_right"] = verdict_json(r.io_sep_b);
    checks["obs_io_separated_left"] = verdict_json(r.obs_io_sep_a);
    checks["obs_io_separated_right"] = verdict_json(r.obs_io_sep_b);
    checks["half_duplex"] = verdict_json(r.half_duplex);
    checks["strong_sync"] = verdict_json(r.strong_sync);
    checks["weak_sync"] = verdict_json(r.weak_sync);
    checks["wac_left"] = verdict_json(r.wac_left);
    checks["wac_right"] = verdict_json(r.wac_right);
    checks["wac"] = verdict_json(r.wac);
    checks["completeness_x"] = verdict_json(r.completeness);
    if (r.async_bounded)
        checks["async_bounded"] = verdict_json(*r.async_bounded);
    checks["sync_deadlocks"] = deadlock_json(r.sync_deadlocks);
    checks["autonomous_df_left"] = verdict_json(r.autonomous_left);
    checks["autonomous_df_right"] = verdict_json(r.autonomous_right);
    if (r.async_deadlocks)
        checks["async_deadlocks"] = deadlock_json(*r.async_deadlocks);
    j["checks"] = checks;
    j["conclusion"] = conclusion_name(r.conclusion);
    j["criterion_conclusion"] = conclusion_name(r.criterion_conclusion);
    j["deadlock_conclusion"] = conclusion_name(r.deadlock_conclusion);
    j["justification"] = r.justification;
    j["deadlock_justification"] = r.deadlock_justification;
    return j;
}

inline std::string emit_report_json(const Report& r) {
    return report_json(r).dump(2) + "\n";
}

inline std::string emit_error_json(const Error& e) {
    ordered_json j;
    j["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    return j.dump(2) + "\n";
}

}  // namespace iotscompat
