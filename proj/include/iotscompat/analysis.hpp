#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "iotscompat/async.hpp"
#include "iotscompat/compose.hpp"
#include "iotscompat/model.hpp"
#include "iotscompat/verdict.hpp"

namespace iotscompat {

struct ClosureSet {
    std::string origin;
    std::set<ActionName> allowed;
    std::set<std::string> members;

    bool contains(const std::string& s) const { return members.count(s) > 0; }
};

/// States reachable from `s` using only transitions labelled in `allowed`
/// (the reflexive-transitive closure over that label set).
inline ClosureSet closure(const Iots& a, const std::string& s,
                          const std::set<ActionName>& allowed) {
    if (!a.states.count(s))
        throw Error(ErrorKind::UnknownState, "no state named '" + s + "' in " + a.name);
    ClosureSet c;
    c.origin = s;
    c.allowed = allowed;
    c.members.insert(s);
    std::deque<std::string> queue{s};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const auto& t : a.from(cur)) {
            if (allowed.count(t.label) && c.members.insert(t.dst).second)
                queue.push_back(t.dst);
        }
    }
    return c;
}

/// States of a component reachable from its initial state, in BFS order.
inline std::vector<std::string> reachable_states(const Iots& a) {
    std::vector<std::string> order;
    std::set<std::string> seen{a.initial};
    std::deque<std::string> queue{a.initial};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        order.push_back(cur);
        for (const auto& t : a.from(cur))
            if (seen.insert(t.dst).second) queue.push_back(t.dst);
    }
    return order;
}

namespace detail {

inline std::set<ActionName> enabled_of_kind(const Iots& a, const std::string& s,
                                            const std::set<ActionName>& klass) {
    std::set<ActionName> out;
    for (const auto& t : a.from(s))
        if (klass.count(t.label)) out.insert(t.label);
    return out;
}

}  // namespace detail

/// No reachable state offers both an input and an output.
inline Verdict io_separated(const Iots& a) {
    for (const auto& s : reachable_states(a)) {
        auto ins = detail::enabled_of_kind(a, s, a.alphabet.inputs);
        auto outs = detail::enabled_of_kind(a, s, a.alphabet.outputs);
        if (!ins.empty() && !outs.empty()) {
            Witness w;
            w.location = s;
            w.actions.insert(w.actions.end(), outs.begin(), outs.end());
            w.actions.insert(w.actions.end(), ins.begin(), ins.end());
            return Verdict::fail(std::move(w));
        }
    }
    return Verdict::pass();
}

/// No reachable state offers an output while an input becomes available
/// after internal moves only.
inline Verdict obs_io_separated(const Iots& a) {
    for (const auto& s : reachable_states(a)) {
        auto outs = detail::enabled_of_kind(a, s, a.alphabet.outputs);
        if (outs.empty()) continue;
        ClosureSet c = closure(a, s, a.alphabet.internals);
        std::set<ActionName> ins;
        for (const auto& m : c.members) {
            auto more = detail::enabled_of_kind(a, m, a.alphabet.inputs);
            ins.insert(more.begin(), more.end());
        }
        if (!ins.empty()) {
            Witness w;
            w.location = s;
            w.actions.insert(w.actions.end(), outs.begin(), outs.end());
            w.actions.insert(w.actions.end(), ins.begin(), ins.end());
            return Verdict::fail(std::move(w));
        }
    }
    return Verdict::pass();
}

/// Half-duplex decision on the synchronous product: fails at the first
/// reachable state where both sides simultaneously offer an output addressed
/// to the other side. Equivalent to "at most one queue nonempty" in the
/// asynchronous system.
inline Verdict half_duplex_check(const Iots& a, const Iots& b) {
    SharedProfile prof = async_composable(a, b);
    SyncGraph g = sync_product(a, b);
    for (const auto& s : g.bfs_order) {
        auto left = detail::enabled_of_kind(a, s.left, prof.out_ab);
        if (left.empty()) continue;
        auto right = detail::enabled_of_kind(b, s.right, prof.out_ba);
        if (right.empty()) continue;
        Witness w;
        w.location = s.str();
        w.actions.insert(w.actions.end(), left.begin(), left.end());
        w.actions.insert(w.actions.end(), right.begin(), right.end());
        w.trace = g.trace_to(s);
        return Verdict::fail(std::move(w), {"Lem-CrucialLemma"});
    }
    return Verdict::pass({"Lem-CrucialLemma"});
}

/// Reachable product states with no outgoing transition.
inline DeadlockReport sync_deadlocks(const Iots& a, const Iots& b) {
    SyncGraph g = sync_product(a, b);
    DeadlockReport r;
    for (const auto& s : g.bfs_order)
        if (g.out_degree(s) == 0) r.deadlocked.push_back({s.str(), g.trace_to(s)});
    return r;
}

enum class Side { Left, Right };

/// Autonomous deadlock-freeness: in the sender-side criterion product every
/// reachable state must have an outgoing transition whose label is not an
/// input the component can only get from its partner.
inline Verdict autonomous_df(const Iots& a, const Iots& b, Side side) {
    SharedProfile prof = async_composable(a, b);
    SyncGraph g = side == Side::Left ? criterion_product_left(a, b)
                                     : criterion_product_right(a, b);
    const std::set<ActionName>& forbidden =
        side == Side::Left ? prof.out_ba : prof.out_ab;
    for (const auto& s : g.bfs_order) {
        bool ok = false;
        for (const auto& e : g.from(s)) {
            if (!forbidden.count(e.label)) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            Witness w;
            w.location = s.str();
            w.trace = g.trace_to(s);
            return Verdict::fail(std::move(w), {"Thm-AutonomousDF"});
        }
    }
    return Verdict::pass({"Thm-AutonomousDF"});
}

}  // namespace iotscompat
