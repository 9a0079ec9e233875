#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iotscompat/analysis.hpp"
#include "iotscompat/compat.hpp"
#include "iotscompat/model.hpp"
#include "iotscompat/verdict.hpp"

namespace iotscompat {

enum class CompatConclusion {
    StrongAsyncCompatible,
    WeakAsyncCompatible,
    NotWeakAsyncCompatible,
    NotStrongAsyncCompatible,
    Unknown,
};

enum class DeadlockConclusion {
    AsyncDeadlockFree,
    AsyncDeadlockFound,
    Unknown,
};

inline const char* conclusion_name(CompatConclusion c) {
    switch (c) {
        case CompatConclusion::StrongAsyncCompatible: return "StrongAsyncCompatible";
        case CompatConclusion::WeakAsyncCompatible: return "WeakAsyncCompatible";
        case CompatConclusion::NotWeakAsyncCompatible: return "NotWeakAsyncCompatible";
        case CompatConclusion::NotStrongAsyncCompatible: return "NotStrongAsyncCompatible";
        case CompatConclusion::Unknown: return "Unknown";
    }
    return "?";
}

inline const char* conclusion_name(DeadlockConclusion c) {
    switch (c) {
        case DeadlockConclusion::AsyncDeadlockFree: return "AsyncDeadlockFree";
        case DeadlockConclusion::AsyncDeadlockFound: return "AsyncDeadlockFound";
        case DeadlockConclusion::Unknown: return "Unknown";
    }
    return "?";
}

enum class Mode { Strong, Weak };

struct Report {
    std::string a_name;
    std::string b_name;
    int bound = 0;
    Mode mode = Mode::Weak;

    Verdict io_sep_a, io_sep_b;
    Verdict obs_io_sep_a, obs_io_sep_b;
    Verdict half_duplex;
    Verdict strong_sync;
    Verdict weak_sync;
    Verdict wac_left;
    Verdict wac_right;
    Verdict wac;
    Verdict completeness;
    std::optional<Verdict> async_bounded;  // mode-matching bounded compat run
    DeadlockReport sync_deadlocks;
    Verdict autonomous_left;
    Verdict autonomous_right;
    std::optional<DeadlockReport> async_deadlocks;

    CompatConclusion conclusion = CompatConclusion::Unknown;
    // What the criterion chain alone (wac, then completeness) can establish,
    // independent of the half-duplex shortcut and of bounded exploration.
    CompatConclusion criterion_conclusion = CompatConclusion::Unknown;
    DeadlockConclusion deadlock_conclusion = DeadlockConclusion::Unknown;
    std::vector<std::string> justification;
    std::vector<std::string> deadlock_justification;
};

/// Re-derive the compatibility conclusion from recorded sub-verdicts; the
/// report built by decide() must agree with this table.
inline std::pair<CompatConclusion, std::vector<std::string>> conclude_compat(
    const Report& r) {
    std::vector<std::string> just;
    if (r.half_duplex.holds()) {
        const Verdict& sync = r.mode == Mode::Strong ? r.strong_sync : r.weak_sync;
        just = {"Cor-SynchIFFAsynch"};
        if (sync.holds())
            return {r.mode == Mode::Strong ? CompatConclusion::StrongAsyncCompatible
                                           : CompatConclusion::WeakAsyncCompatible,
                    just};
        return {r.mode == Mode::Strong ? CompatConclusion::NotStrongAsyncCompatible
                                       : CompatConclusion::NotWeakAsyncCompatible,
                just};
    }
    if (r.mode == Mode::Weak) {
        if (r.wac.holds()) return {CompatConclusion::WeakAsyncCompatible, {"Thm-WAC"}};
        if (r.completeness.holds())
            return {CompatConclusion::NotWeakAsyncCompatible, {"Thm-Completeness"}};
    } else if (r.strong_sync.fails()) {
        // strong async compatibility implies strong synchronous compatibility
        return {CompatConclusion::NotStrongAsyncCompatible, {"Thm-Asynch2Synch"}};
    }
    if (r.async_bounded) {
        if (r.async_bounded->fails())
            return {r.mode == Mode::Strong ? CompatConclusion::NotStrongAsyncCompatible
                                           : CompatConclusion::NotWeakAsyncCompatible,
                    {"Bounded-Confirmed"}};
        if (r.async_bounded->holds() && r.async_bounded->exhaustive.value_or(false))
            return {r.mode == Mode::Strong ? CompatConclusion::StrongAsyncCompatible
                                           : CompatConclusion::WeakAsyncCompatible,
                    {"Bounded-Exhaustive"}};
    }
    return {CompatConclusion::Unknown, {}};
}

inline std::pair<DeadlockConclusion, std::vector<std::string>> conclude_deadlock(
    const Report& r) {
    bool compat_positive =
        r.conclusion == CompatConclusion::StrongAsyncCompatible ||
        r.conclusion == CompatConclusion::WeakAsyncCompatible;
    if (r.half_duplex.holds() && compat_positive) {
        return {r.sync_deadlocks.empty() ? DeadlockConclusion::AsyncDeadlockFree
                                         : DeadlockConclusion::AsyncDeadlockFound,
                {"Thm-HalfDuplexDF"}};
    }
    if (compat_positive &&
        (r.autonomous_left.holds() || r.autonomous_right.holds())) {
        return {DeadlockConclusion::AsyncDeadlockFree, {"Thm-AutonomousDF"}};
    }
    if (r.async_deadlocks) {
        if (!r.async_deadlocks->empty())
            return {DeadlockConclusion::AsyncDeadlockFound, {"Bounded-Confirmed"}};
        if (r.async_deadlocks->horizon_empty.value_or(false))
            return {DeadlockConclusion::AsyncDeadlockFree, {"Bounded-Exhaustive"}};
    }
    return {DeadlockConclusion::Unknown, {}};
}

/// Full verification run: half-duplex shortcut first, then the sufficient
/// criterion, then the completeness side conditions, then bounded
/// exploration. Bounded findings only ever enter a conclusion as confirmed
/// refutations or exhaustive proofs. With force_bounded the explorers run
/// even when a theorem already settled the question.
inline Report decide(const Iots& a, const Iots& b, int k, Mode mode,
                     bool force_bounded = false) {
    if (k < 1) throw Error(ErrorKind::BoundTooSmall, "bound must be >= 1");
    async_composable(a, b);

    Report r;
    r.a_name = a.name;
    r.b_name = b.name;
    r.bound = k;
    r.mode = mode;

    r.io_sep_a = io_separated(a);
    r.io_sep_b = io_separated(b);
    r.obs_io_sep_a = obs_io_separated(a);
    r.obs_io_sep_b = obs_io_separated(b);
    r.half_duplex = half_duplex_check(a, b);
    r.strong_sync = strong_sync(a, b);
    r.weak_sync = weak_sync(a, b);
    r.wac_left = wac_left(a, b);
    r.wac_right = wac_right(a, b);
    r.wac = wac(a, b);
    r.completeness = completeness_x(a, b, k);
    r.sync_deadlocks = sync_deadlocks(a, b);
    r.autonomous_left = autonomous_df(a, b, Side::Left);
    r.autonomous_right = autonomous_df(a, b, Side::Right);

    if (r.wac.holds())
        r.criterion_conclusion = CompatConclusion::WeakAsyncCompatible;
    else if (r.completeness.holds())
        r.criterion_conclusion = CompatConclusion::NotWeakAsyncCompatible;

    // A positive theorem conclusion makes the bounded run redundant; on all
    // other paths it runs so refutations come with a concrete trace.
    auto [pre, pre_just] = conclude_compat(r);
    bool theorem_positive = pre == CompatConclusion::StrongAsyncCompatible ||
                            pre == CompatConclusion::WeakAsyncCompatible;
    if (force_bounded || !theorem_positive)
        r.async_bounded = async_compat_bounded(a, b, k, mode == Mode::Weak);

    std::tie(r.conclusion, r.justification) = conclude_compat(r);

    auto [dpre, dpre_just] = conclude_deadlock(r);
    if (force_bounded || dpre == DeadlockConclusion::Unknown)
        r.async_deadlocks = async_deadlock_bounded(a, b, k);
    std::tie(r.deadlock_conclusion, r.deadlock_justification) = conclude_deadlock(r);

    return r;
}

}  // namespace iotscompat
