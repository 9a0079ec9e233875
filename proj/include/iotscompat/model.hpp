#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace iotscompat {

/// Reserved marker appended to an action name when it is turned into an
/// enqueue action by rename_outputs(). Forbidden in user-declared names.
inline constexpr char kDecorationMarker = '>';

struct ActionName {
    std::string name;
    bool decorated = false;

    auto operator<=>(const ActionName&) const = default;

    std::string str() const {
        return decorated ? name + kDecorationMarker : name;
    }
};

inline ActionName action(std::string name) { return ActionName{std::move(name), false}; }
inline ActionName decorate(const ActionName& a) { return ActionName{a.name, true}; }
inline ActionName undecorate(const ActionName& a) { return ActionName{a.name, false}; }

enum class ErrorKind {
    AlphabetOverlap,
    UnknownState,
    UnknownAction,
    MissingInitial,
    NotComposable,
    DecorationClash,
    NotAnOutput,
    BoundTooSmall,
    SyntaxError,
    KindMismatch,
    ProductTooLarge,
    Usage,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::AlphabetOverlap: return "AlphabetOverlap";
        case ErrorKind::UnknownState: return "UnknownState";
        case ErrorKind::UnknownAction: return "UnknownAction";
        case ErrorKind::MissingInitial: return "MissingInitial";
        case ErrorKind::NotComposable: return "NotComposable";
        case ErrorKind::DecorationClash: return "DecorationClash";
        case ErrorKind::NotAnOutput: return "NotAnOutput";
        case ErrorKind::BoundTooSmall: return "BoundTooSmall";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::KindMismatch: return "KindMismatch";
        case ErrorKind::ProductTooLarge: return "ProductTooLarge";
        case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct Violation {
    ErrorKind kind;
    std::string detail;
};

enum class ActionKind { Input, Output, Internal };

struct Alphabet {
    std::set<ActionName> inputs;
    std::set<ActionName> outputs;
    std::set<ActionName> internals;

    bool contains(const ActionName& a) const {
        return inputs.contains(a) || outputs.contains(a) || internals.contains(a);
    }

    std::optional<ActionKind> kind_of(const ActionName& a) const {
        if (inputs.contains(a)) return ActionKind::Input;
        if (outputs.contains(a)) return ActionKind::Output;
        if (internals.contains(a)) return ActionKind::Internal;
        return std::nullopt;
    }

    bool operator==(const Alphabet&) const = default;

    std::set<ActionName> all() const {
        std::set<ActionName> r = inputs;
        r.insert(outputs.begin(), outputs.end());
        r.insert(internals.begin(), internals.end());
        return r;
    }
};

struct Transition {
    std::string src;
    ActionName label;
    std::string dst;

    auto operator<=>(const Transition&) const = default;
};

/// A finite I/O-transition system. Immutable after construction; the
/// transition relation is a set, so duplicates collapse.
struct Iots {
    std::string name;
    std::set<std::string> states;
    std::string initial;
    Alphabet alphabet;
    std::set<Transition> transitions;

    bool operator==(const Iots&) const = default;

    /// All transitions leaving `s`, in (label, dst) order.
    std::vector<Transition> from(const std::string& s) const {
        std::vector<Transition> r;
        auto it = transitions.lower_bound(Transition{s, ActionName{}, {}});
        for (; it != transitions.end() && it->src == s; ++it) r.push_back(*it);
        return r;
    }

    bool enables(const std::string& s, const ActionName& a) const {
        auto it = transitions.lower_bound(Transition{s, a, {}});
        return it != transitions.end() && it->src == s && it->label == a;
    }

    std::vector<std::string> targets(const std::string& s, const ActionName& a) const {
        std::vector<std::string> r;
        auto it = transitions.lower_bound(Transition{s, a, {}});
        for (; it != transitions.end() && it->src == s && it->label == a; ++it)
            r.push_back(it->dst);
        return r;
    }
};

/// Unchecked component description, as produced by a parser or built by hand.
struct RawIots {
    std::string name;
    std::vector<ActionName> inputs;
    std::vector<ActionName> outputs;
    std::vector<ActionName> internals;
    std::string initial;
    std::vector<Transition> transitions;
    std::vector<std::string> states;  // optional; inferred when empty
};

inline std::vector<Violation> validate(const RawIots& raw) {
    std::vector<Violation> out;

    Alphabet alpha;
    alpha.inputs.insert(raw.inputs.begin(), raw.inputs.end());
    alpha.outputs.insert(raw.outputs.begin(), raw.outputs.end());
    alpha.internals.insert(raw.internals.begin(), raw.internals.end());

    auto overlap = [&](const std::set<ActionName>& x, const std::set<ActionName>& y,
                       const char* xs, const char* ys) {
        for (const auto& a : x)
            if (y.contains(a))
                out.push_back({ErrorKind::AlphabetOverlap,
                               "action '" + a.str() + "' declared both " + xs + " and " + ys});
    };
    overlap(alpha.inputs, alpha.outputs, "input", "output");
    overlap(alpha.inputs, alpha.internals, "input", "internal");
    overlap(alpha.outputs, alpha.internals, "output", "internal");

    if (raw.initial.empty())
        out.push_back({ErrorKind::MissingInitial, "no initial state declared"});

    std::set<std::string> declared(raw.states.begin(), raw.states.end());
    if (!declared.empty()) {
        if (!raw.initial.empty() && !declared.contains(raw.initial))
            out.push_back({ErrorKind::UnknownState,
                           "initial state '" + raw.initial + "' not in declared state set"});
        for (const auto& t : raw.transitions) {
            if (!declared.contains(t.src))
                out.push_back({ErrorKind::UnknownState, "transition source '" + t.src + "' undeclared"});
            if (!declared.contains(t.dst))
                out.push_back({ErrorKind::UnknownState, "transition target '" + t.dst + "' undeclared"});
        }
    }

    for (const auto& t : raw.transitions)
        if (!alpha.contains(t.label))
            out.push_back({ErrorKind::UnknownAction,
                           "transition label '" + t.label.str() + "' not in alphabet"});

    return out;
}

/// Builds a validated Iots; throws Error on the first structural violation.
inline Iots build(const RawIots& raw) {
    auto violations = validate(raw);
    if (!violations.empty())
        throw Error(violations.front().kind, violations.front().detail);

    Iots m;
    m.name = raw.name;
    m.initial = raw.initial;
    m.alphabet.inputs.insert(raw.inputs.begin(), raw.inputs.end());
    m.alphabet.outputs.insert(raw.outputs.begin(), raw.outputs.end());
    m.alphabet.internals.insert(raw.internals.begin(), raw.internals.end());
    m.transitions.insert(raw.transitions.begin(), raw.transitions.end());
    m.states.insert(raw.states.begin(), raw.states.end());
    m.states.insert(raw.initial);
    for (const auto& t : m.transitions) {
        m.states.insert(t.src);
        m.states.insert(t.dst);
    }
    return m;
}

struct SharedProfile {
    std::set<ActionName> shared;
    std::set<ActionName> out_ab;  // out_A ∩ in_B
    std::set<ActionName> out_ba;  // out_B ∩ in_A
    std::set<ActionName> free_a;
    std::set<ActionName> free_b;
};

namespace detail {

inline std::set<ActionName> intersect(const std::set<ActionName>& x, const std::set<ActionName>& y) {
    std::set<ActionName> r;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(r, r.begin()));
    return r;
}

inline std::set<ActionName> subtract(const std::set<ActionName>& x, const std::set<ActionName>& y) {
    std::set<ActionName> r;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(r, r.begin()));
    return r;
}

}  // namespace detail

/// Syntactic composability: alphabets may only overlap on complementary
/// types, act_A ∩ act_B = (in_A ∩ out_B) ∪ (in_B ∩ out_A).
inline SharedProfile composable(const Iots& a, const Iots& b) {
    auto act_a = a.alphabet.all();
    auto act_b = b.alphabet.all();
    auto common = detail::intersect(act_a, act_b);

    SharedProfile p;
    p.out_ab = detail::intersect(a.alphabet.outputs, b.alphabet.inputs);
    p.out_ba = detail::intersect(b.alphabet.outputs, a.alphabet.inputs);
    p.shared = p.out_ab;
    p.shared.insert(p.out_ba.begin(), p.out_ba.end());

    auto offending = detail::subtract(common, p.shared);
    if (!offending.empty()) {
        std::string msg = "same-typed overlap on:";
        for (const auto& x : offending) {
            auto ka = a.alphabet.kind_of(x);
            auto kb = b.alphabet.kind_of(x);
            auto kind_str = [](std::optional<ActionKind> k) -> const char* {
                if (!k) return "?";
                switch (*k) {
                    case ActionKind::Input: return "input";
                    case ActionKind::Output: return "output";
                    case ActionKind::Internal: return "internal";
                }
                return "?";
            };
            msg += " " + x.str() + "(" + kind_str(ka) + "/" + kind_str(kb) + ")";
        }
        throw Error(ErrorKind::NotComposable, msg);
    }

    p.free_a = detail::subtract(act_a, p.shared);
    p.free_b = detail::subtract(act_b, p.shared);
    return p;
}

/// Composable, and no decorated variant of a shared action is already taken.
inline SharedProfile async_composable(const Iots& a, const Iots& b) {
    auto p = composable(a, b);
    for (const auto& s : p.shared) {
        ActionName dec = decorate(s);
        if (a.alphabet.contains(dec) || b.alphabet.contains(dec))
            throw Error(ErrorKind::DecorationClash,
                        "decorated name '" + dec.str() + "' already in use");
    }
    return p;
}

/// Copy of `a` with the outputs in m renamed to their enqueue form: identical
/// state set and transition structure, labels in m become decorated outputs.
inline Iots rename_outputs(const Iots& a, const std::set<ActionName>& m) {
    for (const auto& x : m)
        if (!a.alphabet.outputs.contains(x))
            throw Error(ErrorKind::NotAnOutput, "'" + x.str() + "' is not an output of " + a.name);

    Iots r;
    r.name = a.name;
    r.states = a.states;
    r.initial = a.initial;
    r.alphabet.inputs = a.alphabet.inputs;
    r.alphabet.internals = a.alphabet.internals;
    for (const auto& o : a.alphabet.outputs)
        r.alphabet.outputs.insert(m.contains(o) ? decorate(o) : o);
    for (const auto& t : a.transitions) {
        ActionName l = m.contains(t.label) ? decorate(t.label) : t.label;
        r.transitions.insert(Transition{t.src, l, t.dst});
    }
    return r;
}

/// Safety cap on explicit product/exploration size, overridable via the
/// IOTS_COMPAT_MAX_STATES environment variable.
inline std::size_t max_product_states() {
    if (const char* env = std::getenv("IOTS_COMPAT_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

}  // namespace iotscompat
