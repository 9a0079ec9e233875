#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iotscompat/model.hpp"

namespace iotscompat {

struct SyncState {
    std::string left;
    std::string right;
    auto operator<=>(const SyncState&) const = default;

    std::string str() const { return "(" + left + "," + right + ")"; }
};

struct SyncEdge {
    SyncState src;
    ActionName label;
    SyncState dst;
    auto operator<=>(const SyncEdge&) const = default;
};

/// Reachable part of a synchronous product, explored breadth-first with
/// lexicographically ordered successors so traversal order is deterministic.
struct SyncGraph {
    Alphabet alphabet;
    SyncState initial;
    std::set<SyncState> nodes;
    std::set<SyncEdge> edges;
    std::vector<SyncState> bfs_order;
    std::map<SyncState, std::pair<SyncState, ActionName>> parent;
    std::map<SyncState, std::size_t> depth;
    SharedProfile profile;

    std::vector<SyncEdge> from(const SyncState& s) const {
        std::vector<SyncEdge> out;
        auto it = edges.lower_bound(SyncEdge{s, {}, {}});
        for (; it != edges.end() && it->src == s; ++it) out.push_back(*it);
        return out;
    }

    std::size_t out_degree(const SyncState& s) const { return from(s).size(); }

    /// Shortest trace (edge labels) from the initial state to s.
    std::vector<ActionName> trace_to(SyncState s) const {
        std::vector<ActionName> rev;
        while (!(s == initial)) {
            auto it = parent.find(s);
            rev.push_back(it->second.second);
            s = it->second.first;
        }
        return {rev.rbegin(), rev.rend()};
    }
};

namespace detail {

inline void check_capacity(std::size_t n) {
    if (n > max_product_states())
        throw Error(ErrorKind::ProductTooLarge,
                    "state space exceeds limit of " +
                        std::to_string(max_product_states()) + " states");
}

}  // namespace detail

/// Synchronous (rendezvous) product: free actions of either side interleave,
/// shared actions fire jointly and become internal to the product.
inline SyncGraph sync_product(const Iots& a, const Iots& b) {
    SharedProfile prof = composable(a, b);

    SyncGraph g;
    g.profile = prof;
    for (const auto& x : a.alphabet.inputs)
        if (!prof.shared.count(x)) g.alphabet.inputs.insert(x);
    for (const auto& x : b.alphabet.inputs)
        if (!prof.shared.count(x)) g.alphabet.inputs.insert(x);
    for (const auto& x : a.alphabet.outputs)
        if (!prof.shared.count(x)) g.alphabet.outputs.insert(x);
    for (const auto& x : b.alphabet.outputs)
        if (!prof.shared.count(x)) g.alphabet.outputs.insert(x);
    g.alphabet.internals = prof.shared;
    for (const auto& x : a.alphabet.internals) g.alphabet.internals.insert(x);
    for (const auto& x : b.alphabet.internals) g.alphabet.internals.insert(x);

    g.initial = {a.initial, b.initial};
    g.nodes.insert(g.initial);
    g.depth[g.initial] = 0;
    std::deque<SyncState> queue{g.initial};

    while (!queue.empty()) {
        SyncState s = queue.front();
        queue.pop_front();
        g.bfs_order.push_back(s);

        std::set<std::pair<ActionName, SyncState>> succ;
        for (const auto& t : a.from(s.left)) {
            if (prof.shared.count(t.label)) {
                // joint move: requires matching transition on the right
                for (const auto& dst : b.targets(s.right, t.label))
                    succ.insert({t.label, {t.dst, dst}});
            } else {
                succ.insert({t.label, {t.dst, s.right}});
            }
        }
        for (const auto& t : b.from(s.right)) {
            if (!prof.shared.count(t.label))
                succ.insert({t.label, {s.left, t.dst}});
        }

        for (const auto& [lbl, dst] : succ) {
            g.edges.insert({s, lbl, dst});
            if (g.nodes.insert(dst).second) {
                detail::check_capacity(g.nodes.size());
                g.parent[dst] = {s, lbl};
                g.depth[dst] = g.depth[s] + 1;
                queue.push_back(dst);
            }
        }
    }
    return g;
}

/// Product used when auditing the left sender: the outputs of `b` addressed
/// to `a` are decorated, so they no longer synchronise and `b` emits them
/// freely, while `a`'s matching inputs become free interleaving moves.
inline SyncGraph criterion_product_left(const Iots& a, const Iots& b) {
    SharedProfile prof = composable(a, b);
    return sync_product(a, rename_outputs(b, prof.out_ba));
}

/// Symmetric variant for auditing the right sender: the outputs of `a`
/// addressed to `b` are decorated.
inline SyncGraph criterion_product_right(const Iots& a, const Iots& b) {
    SharedProfile prof = composable(a, b);
    return sync_product(rename_outputs(a, prof.out_ab), b);
}

}  // namespace iotscompat
