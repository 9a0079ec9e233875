#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iotscompat/compose.hpp"
#include "iotscompat/model.hpp"

namespace iotscompat {

/// A configuration of the asynchronous composition: each side carries its
/// own FIFO output queue (head at the front).
struct AsyncConfig {
    std::string left_state;
    std::vector<ActionName> left_queue;
    std::string right_state;
    std::vector<ActionName> right_queue;
    auto operator<=>(const AsyncConfig&) const = default;

    static std::string queue_str(const std::vector<ActionName>& q) {
        std::string s = "[";
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (i) s += ' ';
            s += q[i].str();
        }
        return s + "]";
    }

    std::string str() const {
        return "((" + left_state + "," + queue_str(left_queue) + "),(" +
               right_state + "," + queue_str(right_queue) + "))";
    }
};

struct AsyncEdge {
    AsyncConfig src;
    ActionName label;
    AsyncConfig dst;
    auto operator<=>(const AsyncEdge&) const = default;
};

/// Bounded reachable fragment of the asynchronous composition. Configurations
/// in `horizon` had at least one enqueue suppressed because a queue was full;
/// when `horizon` is empty the fragment is the whole (finite) reachable space.
struct AsyncGraph {
    int bound = 0;
    SharedProfile profile;
    AsyncConfig initial;
    std::set<AsyncConfig> nodes;
    std::set<AsyncEdge> edges;
    std::set<AsyncConfig> horizon;
    std::vector<AsyncConfig> bfs_order;
    std::map<AsyncConfig, std::pair<AsyncConfig, ActionName>> parent;
    std::map<AsyncConfig, std::size_t> depth;

    std::vector<AsyncEdge> from(const AsyncConfig& c) const {
        std::vector<AsyncEdge> out;
        auto it = edges.lower_bound(AsyncEdge{c, {}, {}});
        for (; it != edges.end() && it->src == c; ++it) out.push_back(*it);
        return out;
    }

    std::size_t out_degree(const AsyncConfig& c) const { return from(c).size(); }

    std::vector<ActionName> trace_to(AsyncConfig c) const {
        std::vector<ActionName> rev;
        while (!(c == initial)) {
            auto it = parent.find(c);
            rev.push_back(it->second.second);
            c = it->second.first;
        }
        return {rev.rbegin(), rev.rend()};
    }
};

/// Explore the asynchronous composition with both queues capped at `bound`.
/// Moves: free actions of either side interleave; an output addressed to the
/// peer appends to the sender's queue (edge labelled with the decorated
/// action); an input consumes the matching head of the peer's queue.
inline AsyncGraph async_explore(const Iots& a, const Iots& b, int bound) {
    if (bound < 1) throw Error(ErrorKind::BoundTooSmall, "queue bound must be >= 1");
    SharedProfile prof = async_composable(a, b);

    AsyncGraph g;
    g.bound = bound;
    g.profile = prof;
    g.initial = {a.initial, {}, b.initial, {}};
    g.nodes.insert(g.initial);
    g.depth[g.initial] = 0;
    std::deque<AsyncConfig> queue{g.initial};

    const auto cap = static_cast<std::size_t>(bound);

    while (!queue.empty()) {
        AsyncConfig c = queue.front();
        queue.pop_front();
        g.bfs_order.push_back(c);

        std::set<std::pair<ActionName, AsyncConfig>> succ;

        for (const auto& t : a.from(c.left_state)) {
            if (prof.out_ab.count(t.label)) {
                if (c.left_queue.size() < cap) {
                    AsyncConfig d = c;
                    d.left_state = t.dst;
                    d.left_queue.push_back(t.label);
                    succ.insert({decorate(t.label), d});
                } else {
                    g.horizon.insert(c);
                }
            } else if (prof.out_ba.count(t.label)) {
                if (!c.right_queue.empty() && c.right_queue.front() == t.label) {
                    AsyncConfig d = c;
                    d.left_state = t.dst;
                    d.right_queue.erase(d.right_queue.begin());
                    succ.insert({t.label, d});
                }
            } else {
                AsyncConfig d = c;
                d.left_state = t.dst;
                succ.insert({t.label, d});
            }
        }
        for (const auto& t : b.from(c.right_state)) {
            if (prof.out_ba.count(t.label)) {
                if (c.right_queue.size() < cap) {
                    AsyncConfig d = c;
                    d.right_state = t.dst;
                    d.right_queue.push_back(t.label);
                    succ.insert({decorate(t.label), d});
                } else {
                    g.horizon.insert(c);
                }
            } else if (prof.out_ab.count(t.label)) {
                if (!c.left_queue.empty() && c.left_queue.front() == t.label) {
                    AsyncConfig d = c;
                    d.right_state = t.dst;
                    d.left_queue.erase(d.left_queue.begin());
                    succ.insert({t.label, d});
                }
            } else {
                AsyncConfig d = c;
                d.right_state = t.dst;
                succ.insert({t.label, d});
            }
        }

        for (const auto& [lbl, dst] : succ) {
            g.edges.insert({c, lbl, dst});
            if (g.nodes.insert(dst).second) {
                detail::check_capacity(g.nodes.size());
                g.parent[dst] = {c, lbl};
                g.depth[dst] = g.depth[c] + 1;
                queue.push_back(dst);
            }
        }
    }
    return g;
}

}  // namespace iotscompat
