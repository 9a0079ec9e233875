#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "iotscompat/analysis.hpp"
#include "iotscompat/compat.hpp"
#include "iotscompat/format.hpp"
#include "iotscompat/model.hpp"
#include "iotscompat/pipeline.hpp"

namespace iotscompat {

namespace detail {

// Exit-code contract: 0 holds, 1 confirmed failure, 2 inconclusive, 3 usage.
inline int verdict_exit(const Verdict& v) {
    switch (v.status) {
        case Status::Holds: return 0;
        case Status::Fails: return 1;
        case Status::Inconclusive: return 2;
    }
    return 3;
}

inline void print_verdict(std::ostream& os, const std::string& name,
                          const Verdict& v) {
    os << name << ": " << status_name(v.status);
    if (v.bound) os << " (bound " << *v.bound << ")";
    if (v.exhaustive && *v.exhaustive) os << " [exhaustive]";
    os << "\n";
    if (v.witness) {
        os << "  at " << v.witness->location;
        if (!v.witness->actions.empty()) {
            os << " on";
            for (const auto& a : v.witness->actions) os << ' ' << a.str();
        }
        os << "\n";
        if (!v.witness->trace.empty()) {
            os << "  trace:";
            for (const auto& a : v.witness->trace) os << ' ' << a.str();
            os << "\n";
        }
    }
    for (const auto& n : v.notes) os << "  note: " << n << "\n";
    if (!v.justification.empty()) {
        os << "  by";
        for (const auto& j : v.justification) os << ' ' << j;
        os << "\n";
    }
}

inline void print_deadlocks(std::ostream& os, const std::string& name,
                            const DeadlockReport& r) {
    os << name << ": " << (r.empty() ? "none" : "found");
    if (r.bound) os << " (bound " << *r.bound << ")";
    if (r.horizon_empty) os << (*r.horizon_empty ? " [exhaustive]" : " [horizon open]");
    os << "\n";
    for (const auto& e : r.deadlocked) {
        os << "  at " << e.location;
        if (!e.trace.empty()) {
            os << " via";
            for (const auto& a : e.trace) os << ' ' << a.str();
        }
        os << "\n";
    }
}

}  // namespace detail

inline int cli_main(int argc, const char* const* argv) {
    CLI::App app{"compatibility and deadlock checker for communicating I/O-transition systems"};
    app.require_subcommand(1);

    std::string file_a, file_b, json_path, dot_dir, product = "sync";
    std::string mode = "weak", side = "either";
    int bound = 3;

    auto* check = app.add_subcommand("check", "run a single compatibility check");
    check->require_subcommand(1);
    auto add_pair = [&](CLI::App* c) {
        c->add_option("a", file_a, "left component (.iots)")->required();
        c->add_option("b", file_b, "right component (.iots)")->required();
    };
    auto* c_ss = check->add_subcommand("sync-strong", "strong synchronous compatibility");
    add_pair(c_ss);
    auto* c_sw = check->add_subcommand("sync-weak", "weak synchronous compatibility");
    add_pair(c_sw);
    auto* c_hd = check->add_subcommand("half-duplex", "half-duplex property");
    add_pair(c_hd);
    auto* c_io = check->add_subcommand("io-sep", "I/O-separation of one component");
    c_io->add_option("a", file_a, "component (.iots)")->required();
    auto* c_oio = check->add_subcommand("obs-io-sep", "observational I/O-separation");
    c_oio->add_option("a", file_a, "component (.iots)")->required();
    auto* c_wac = check->add_subcommand("wac", "sufficient criterion for weak asynchronous compatibility");
    add_pair(c_wac);
    auto* c_x = check->add_subcommand("completeness", "completeness side conditions");
    add_pair(c_x);
    c_x->add_option("--bound", bound, "queue bound")->required();
    auto* c_as = check->add_subcommand("async", "bounded asynchronous compatibility");
    add_pair(c_as);
    c_as->add_option("--bound", bound, "queue bound")->required();
    c_as->add_option("--mode", mode, "strong|weak")
        ->check(CLI::IsMember({"strong", "weak"}));

    auto* dl = app.add_subcommand("deadlock", "deadlock analyses");
    dl->require_subcommand(1);
    auto* d_s = dl->add_subcommand("sync", "synchronous deadlock states");
    add_pair(d_s);
    auto* d_a = dl->add_subcommand("async", "bounded asynchronous deadlock search");
    add_pair(d_a);
    d_a->add_option("--bound", bound, "queue bound");
    auto* d_au = dl->add_subcommand("autonomous", "autonomous deadlock-freeness");
    add_pair(d_au);
    d_au->add_option("--side", side, "left|right|either")
        ->check(CLI::IsMember({"left", "right", "either"}));

    auto* pipe = app.add_subcommand("pipeline", "full verification methodology");
    add_pair(pipe);
    pipe->add_option("--bound", bound, "queue bound");
    pipe->add_option("--mode", mode, "strong|weak")
        ->check(CLI::IsMember({"strong", "weak"}));
    pipe->add_option("--json", json_path, "also write the JSON report here");
    pipe->add_option("--dot", dot_dir, "write product graphs as DOT into this directory");

    auto* exp = app.add_subcommand("export", "emit artifacts");
    exp->require_subcommand(1);
    auto* e_dot = exp->add_subcommand("dot", "product graph in DOT format");
    add_pair(e_dot);
    e_dot->add_option("--product", product, "sync|left|right|async")
        ->check(CLI::IsMember({"sync", "left", "right", "async"}));
    e_dot->add_option("--bound", bound, "queue bound (async product)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        auto& os = std::cout;
        if (c_io->parsed() || c_oio->parsed()) {
            Iots a = load_iots(file_a);
            Verdict v = c_io->parsed() ? io_separated(a) : obs_io_separated(a);
            detail::print_verdict(os, c_io->parsed() ? "io_separated" : "obs_io_separated", v);
            return detail::verdict_exit(v);
        }

        Iots a = load_iots(file_a);
        Iots b = load_iots(file_b);

        if (c_ss->parsed() || c_sw->parsed()) {
            Verdict v = c_ss->parsed() ? strong_sync(a, b) : weak_sync(a, b);
            detail::print_verdict(os, c_ss->parsed() ? "strong_sync" : "weak_sync", v);
            return detail::verdict_exit(v);
        }
        if (c_hd->parsed()) {
            Verdict v = half_duplex_check(a, b);
            detail::print_verdict(os, "half_duplex", v);
            return detail::verdict_exit(v);
        }
        if (c_wac->parsed()) {
            Verdict v = wac(a, b);
            detail::print_verdict(os, "wac", v);
            return detail::verdict_exit(v);
        }
        if (c_x->parsed()) {
            Verdict v = completeness_x(a, b, bound);
            detail::print_verdict(os, "completeness_x", v);
            return detail::verdict_exit(v);
        }
        if (c_as->parsed()) {
            Verdict v = async_compat_bounded(a, b, bound, mode == "weak");
            detail::print_verdict(os, "async_" + mode, v);
            return detail::verdict_exit(v);
        }
        if (d_s->parsed()) {
            DeadlockReport r = sync_deadlocks(a, b);
            detail::print_deadlocks(os, "sync_deadlocks", r);
            return r.empty() ? 0 : 1;
        }
        if (d_a->parsed()) {
            DeadlockReport r = async_deadlock_bounded(a, b, bound);
            detail::print_deadlocks(os, "async_deadlocks", r);
            if (!r.empty()) return 1;
            return r.horizon_empty.value_or(false) ? 0 : 2;
        }
        if (d_au->parsed()) {
            Verdict l = autonomous_df(a, b, Side::Left);
            Verdict r = autonomous_df(a, b, Side::Right);
            if (side != "right") detail::print_verdict(os, "autonomous_df_left", l);
            if (side != "left") detail::print_verdict(os, "autonomous_df_right", r);
            bool ok = side == "left" ? l.holds()
                      : side == "right" ? r.holds()
                                        : (l.holds() || r.holds());
            return ok ? 0 : 1;
        }
        if (pipe->parsed()) {
            Report rep = decide(a, b, bound, mode == "strong" ? Mode::Strong : Mode::Weak);
            std::string json = emit_report_json(rep);
            os << json;
            if (!json_path.empty()) {
                std::ofstream f(json_path);
                if (!f) throw Error(ErrorKind::Usage, "cannot write " + json_path);
                f << json;
            }
            if (!dot_dir.empty()) {
                std::filesystem::create_directories(dot_dir);
                auto write = [&](const std::string& name, const std::string& text) {
                    std::ofstream f(std::filesystem::path(dot_dir) / name);
                    if (!f) throw Error(ErrorKind::Usage, "cannot write into " + dot_dir);
                    f << text;
                };
                write("sync.dot", emit_dot(sync_product(a, b), "sync"));
                write("left.dot", emit_dot(criterion_product_left(a, b), "left"));
                write("right.dot", emit_dot(criterion_product_right(a, b), "right"));
                write("async.dot", emit_dot(async_explore(a, b, bound), "async"));
            }
            switch (rep.conclusion) {
                case CompatConclusion::StrongAsyncCompatible:
                case CompatConclusion::WeakAsyncCompatible: return 0;
                case CompatConclusion::NotWeakAsyncCompatible:
                case CompatConclusion::NotStrongAsyncCompatible: return 1;
                case CompatConclusion::Unknown: return 2;
            }
            return 2;
        }
        if (e_dot->parsed()) {
            if (product == "sync") os << emit_dot(sync_product(a, b), "sync");
            else if (product == "left") os << emit_dot(criterion_product_left(a, b), "left");
            else if (product == "right") os << emit_dot(criterion_product_right(a, b), "right");
            else os << emit_dot(async_explore(a, b, bound), "async");
            return 0;
        }
    } catch (const Error& e) {
        std::cout << emit_error_json(e);
        return 3;
    }
    return 3;
}

}  // namespace iotscompat
