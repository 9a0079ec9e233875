#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iotscompat/analysis.hpp"
#include "iotscompat/async.hpp"
#include "iotscompat/compose.hpp"
#include "iotscompat/model.hpp"
#include "iotscompat/verdict.hpp"

namespace iotscompat {

namespace detail {

inline bool weakly_enables(const Iots& receiver, const std::string& state,
                           const std::set<ActionName>& allowed,
                           const ActionName& action) {
    ClosureSet c = closure(receiver, state, allowed);
    for (const auto& s : c.members)
        if (receiver.enables(s, action)) return true;
    return false;
}

// Outputs of `sender` addressed to the peer that the peer cannot take at
// `rstate` (immediately, or after moves over `allowed` when that set is
// nonempty-weak semantics is selected by passing the closure label set).
inline std::vector<ActionName> unmatched_outputs(
    const Iots& sender, const std::string& sstate,
    const std::set<ActionName>& addressed, const Iots& receiver,
    const std::string& rstate, const std::set<ActionName>* closure_labels) {
    std::vector<ActionName> bad;
    for (const auto& act : enabled_of_kind(sender, sstate, addressed)) {
        bool ok = closure_labels
                      ? weakly_enables(receiver, rstate, *closure_labels, act)
                      : receiver.enables(rstate, act);
        if (!ok) bad.push_back(act);
    }
    return bad;
}

inline Verdict sync_compat(const Iots& a, const Iots& b, bool weak) {
    SharedProfile prof = composable(a, b);
    SyncGraph g = sync_product(a, b);
    std::set<ActionName> clo_b = b.alphabet.internals;
    std::set<ActionName> clo_a = a.alphabet.internals;
    for (const auto& s : g.bfs_order) {
        auto bad = unmatched_outputs(a, s.left, prof.out_ab, b, s.right,
                                     weak ? &clo_b : nullptr);
        auto bad2 = unmatched_outputs(b, s.right, prof.out_ba, a, s.left,
                                      weak ? &clo_a : nullptr);
        bad.insert(bad.end(), bad2.begin(), bad2.end());
        if (!bad.empty()) {
            Witness w;
            w.location = s.str();
            w.actions = bad;
            w.trace = g.trace_to(s);
            return Verdict::fail(std::move(w));
        }
    }
    return Verdict::pass();
}

}  // namespace detail

/// Every output addressed to the peer must be immediately receivable in the
/// peer's current state, at every reachable product state, both directions.
inline Verdict strong_sync(const Iots& a, const Iots& b) {
    return detail::sync_compat(a, b, false);
}

/// As strong_sync, but the receiver may first perform internal moves.
inline Verdict weak_sync(const Iots& a, const Iots& b) {
    return detail::sync_compat(a, b, true);
}

/// Criterion (left direction): wherever the left component offers an output
/// to the right one — explored with the right component's outputs decorated
/// so they cannot block — the right component must be able to accept it after
/// internal moves and decorated sends of its own.
inline Verdict wac_left(const Iots& a, const Iots& b) {
    SharedProfile prof = async_composable(a, b);
    SyncGraph g = criterion_product_left(a, b);
    std::set<ActionName> clo = b.alphabet.internals;
    clo.insert(prof.out_ba.begin(), prof.out_ba.end());
    for (const auto& s : g.bfs_order) {
        auto bad = detail::unmatched_outputs(a, s.left, prof.out_ab, b, s.right, &clo);
        if (!bad.empty()) {
            Witness w;
            w.location = s.str();
            w.actions = bad;
            w.trace = g.trace_to(s);
            return Verdict::fail(std::move(w));
        }
    }
    return Verdict::pass();
}

/// Mirror of wac_left for outputs of the right component.
inline Verdict wac_right(const Iots& a, const Iots& b) {
    SharedProfile prof = async_composable(a, b);
    SyncGraph g = criterion_product_right(a, b);
    std::set<ActionName> clo = a.alphabet.internals;
    clo.insert(prof.out_ab.begin(), prof.out_ab.end());
    for (const auto& s : g.bfs_order) {
        auto bad = detail::unmatched_outputs(b, s.right, prof.out_ba, a, s.left, &clo);
        if (!bad.empty()) {
            Witness w;
            w.location = s.str();
            w.actions = bad;
            w.trace = g.trace_to(s);
            return Verdict::fail(std::move(w));
        }
    }
    return Verdict::pass();
}

/// Sufficient criterion for weak asynchronous compatibility.
inline Verdict wac(const Iots& a, const Iots& b) {
    Verdict l = wac_left(a, b);
    if (l.fails()) {
        l.justification.insert(l.justification.begin(), "Thm-WAC");
        return l;
    }
    Verdict r = wac_right(a, b);
    r.justification.insert(r.justification.begin(), "Thm-WAC");
    return r;
}

/// Completeness side conditions: every sending state that the criterion
/// products can reach must also be reachable with an empty queue in the
/// asynchronous composition. Verified by bounded search (plus an exact
/// synchronous-product argument when the pair is half-duplex); absence of a
/// witness is inconclusive, never a refutation.
inline Verdict completeness_x(const Iots& a, const Iots& b, int k) {
    SharedProfile prof = async_composable(a, b);

    auto sending_states = [&](const Iots& c, const std::set<ActionName>& addressed,
                              const SyncGraph& g, bool left) {
        std::set<std::string> local;
        for (const auto& n : g.nodes) local.insert(left ? n.left : n.right);
        std::set<std::string> out;
        for (const auto& s : local)
            if (!detail::enabled_of_kind(c, s, addressed).empty()) out.insert(s);
        return out;
    };

    std::set<std::string> need_a =
        sending_states(a, prof.out_ab, criterion_product_left(a, b), true);
    std::set<std::string> need_b =
        sending_states(b, prof.out_ba, criterion_product_right(a, b), false);

    AsyncGraph g = async_explore(a, b, k);
    std::set<std::string> found_a, found_b;
    for (const auto& c : g.nodes) {
        if (c.left_queue.empty()) found_a.insert(c.left_state);
        if (c.right_queue.empty()) found_b.insert(c.right_state);
    }

    std::vector<std::string> just{"Thm-Completeness"};
    bool used_sync = false;
    if (half_duplex_check(a, b).holds()) {
        // Half-duplex pairs: synchronous reachability carries over to
        // empty-queue reachability exactly, no bound involved.
        SyncGraph sg = sync_product(a, b);
        for (const auto& n : sg.nodes) {
            if (found_a.insert(n.left).second) used_sync = true;
            if (found_b.insert(n.right).second) used_sync = true;
        }
    }

    std::vector<std::string> missing;
    for (const auto& s : need_a)
        if (!found_a.count(s)) missing.push_back(a.name + ":" + s);
    for (const auto& s : need_b)
        if (!found_b.count(s)) missing.push_back(b.name + ":" + s);

    if (missing.empty()) {
        if (used_sync) just.push_back("Lem-EmptyQueueReach");
        Verdict v = Verdict::pass(just);
        v.bound = k;
        return v;
    }
    Verdict v = Verdict::inconclusive(k, just);
    v.notes = missing;
    return v;
}

/// Bounded walk of the asynchronous composition. The receiver-side enabling
/// test is computed on the component alone (sends can never block), so any
/// violation at a reachable configuration is a confirmed refutation; a clean
/// walk with an empty horizon is an exhaustive proof.
inline Verdict async_compat_bounded(const Iots& a, const Iots& b, int k, bool weak) {
    SharedProfile prof = async_composable(a, b);
    AsyncGraph g = async_explore(a, b, k);

    std::set<ActionName> clo_b = b.alphabet.internals;
    clo_b.insert(prof.out_ba.begin(), prof.out_ba.end());
    std::set<ActionName> clo_a = a.alphabet.internals;
    clo_a.insert(prof.out_ab.begin(), prof.out_ab.end());

    auto receivable = [&](const Iots& r, const std::string& state,
                          const std::set<ActionName>& clo, const ActionName& act) {
        return weak ? detail::weakly_enables(r, state, clo, act)
                    : r.enables(state, act);
    };

    for (const auto& c : g.bfs_order) {
        std::vector<ActionName> bad;
        if (!c.left_queue.empty() &&
            !receivable(b, c.right_state, clo_b, c.left_queue.front()))
            bad.push_back(c.left_queue.front());
        if (!c.right_queue.empty() &&
            !receivable(a, c.left_state, clo_a, c.right_queue.front()))
            bad.push_back(c.right_queue.front());
        if (!bad.empty()) {
            Witness w;
            w.location = c.str();
            w.actions = bad;
            w.trace = g.trace_to(c);
            Verdict v = Verdict::fail(std::move(w), {"Bounded-Confirmed"});
            v.bound = k;
            return v;
        }
    }
    if (g.horizon.empty()) {
        Verdict v = Verdict::pass({"Bounded-Exhaustive"});
        v.bound = k;
        v.exhaustive = true;
        return v;
    }
    Verdict v = Verdict::inconclusive(k);
    v.exhaustive = false;
    return v;
}

/// Stuck configurations within the bound. Horizon configurations are skipped:
/// the suppressed send is an available move of the unbounded system.
inline DeadlockReport async_deadlock_bounded(const Iots& a, const Iots& b, int k) {
    AsyncGraph g = async_explore(a, b, k);
    DeadlockReport r;
    r.bound = k;
    r.horizon_empty = g.horizon.empty();
    for (const auto& c : g.bfs_order) {
        if (g.out_degree(c) == 0 && !g.horizon.count(c))
            r.deadlocked.push_back({c.str(), g.trace_to(c)});
    }
    return r;
}

}  // namespace iotscompat
