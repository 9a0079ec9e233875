#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iotscompat/model.hpp"

namespace iotscompat {

enum class Status { Holds, Fails, Inconclusive };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::Inconclusive: return "InconclusiveAtBound";
    }
    return "?";
}

/// Counterexample data: where, which actions, and a shortest trace there.
struct Witness {
    std::string location;
    std::vector<ActionName> actions;
    std::vector<ActionName> trace;
};

struct Verdict {
    Status status = Status::Holds;
    std::optional<Witness> witness;
    std::vector<std::string> justification;
    std::optional<int> bound;          // present on bounded checks
    std::optional<bool> exhaustive;    // bounded check saw an empty horizon
    std::vector<std::string> notes;    // e.g. unwitnessed states of completeness_x

    bool holds() const { return status == Status::Holds; }
    bool fails() const { return status == Status::Fails; }

    static Verdict pass(std::vector<std::string> just = {}) {
        Verdict v;
        v.status = Status::Holds;
        v.justification = std::move(just);
        return v;
    }

    static Verdict fail(Witness w, std::vector<std::string> just = {}) {
        Verdict v;
        v.status = Status::Fails;
        v.witness = std::move(w);
        v.justification = std::move(just);
        return v;
    }

    static Verdict inconclusive(int bound, std::vector<std::string> just = {}) {
        Verdict v;
        v.status = Status::Inconclusive;
        v.bound = bound;
        v.justification = std::move(just);
        return v;
    }
};

struct DeadlockEntry {
    std::string location;
    std::vector<ActionName> trace;
};

struct DeadlockReport {
    std::vector<DeadlockEntry> deadlocked;
    std::optional<int> bound;
    std::optional<bool> horizon_empty;  // bounded reports only

    bool empty() const { return deadlocked.empty(); }
};

}  // namespace iotscompat
