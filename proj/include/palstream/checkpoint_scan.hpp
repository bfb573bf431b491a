#pragma once

#include <algorithm>
#include <cstdint>
#include <list>

#include "palstream/answer.hpp"
#include "palstream/fingerprint.hpp"

namespace palstream {

// Per-push instrumentation shared by the checkpoint engines. `last` values
// reset at the start of each push; maxima and totals accumulate.
struct StepCounters {
    std::uint32_t cursor_steps = 0;  // advance-loop iterations, last push
    std::uint32_t checks = 0;        // candidate probes, last push
    std::uint32_t deletions = 0;     // checkpoints expired, last push
    std::uint32_t max_cursor_steps = 0;
    std::uint32_t max_checks = 0;
    std::uint32_t max_deletions = 0;
    std::uint32_t max_ops = 0;  // max of per-push cursor_steps + checks + deletions
    std::uint64_t total_checks = 0;

    void begin_push() { cursor_steps = checks = deletions = 0; }

    void end_push() {
        max_cursor_steps = std::max(max_cursor_steps, cursor_steps);
        max_checks = std::max(max_checks, checks);
        max_deletions = std::max(max_deletions, deletions);
        max_ops = std::max(max_ops, cursor_steps + checks + deletions);
    }
};

namespace detail {

using TupleList = std::list<FingerprintTuple>;

// Shared tail of one iteration of the real-time engines: step the cursor
// back once, skip forward past checkpoints already covered by the current
// answer, then probe at most max_checks candidates for a strictly longer
// palindrome ending at position i.
inline void cursor_scan(const TupleList& sp, TupleList::const_iterator& cursor,
                        const FingerprintTuple& cur, std::uint64_t i, const HashConfig& cfg,
                        Answer& answer, int max_checks, StepCounters& ctr) {
    if (cursor != sp.begin()) --cursor;
    const auto last = std::prev(sp.end());
    while (i - cursor->i + 1 <= answer.len && cursor != last) {
        ++cursor;
        ++ctr.cursor_steps;
    }
    auto it = cursor;
    for (int k = 0; k < max_checks && it != sp.end(); ++k, ++it) {
        ++ctr.checks;
        ++ctr.total_checks;
        const std::uint64_t len = i - it->i + 1;
        if (answer.len < len && is_palindrome(*it, cur, cfg)) answer = {it->i, len};
    }
}

// Full pass over the checkpoint list, used by the slow reference variants.
inline void full_scan(const TupleList& sp, const FingerprintTuple& cur, std::uint64_t i,
                      const HashConfig& cfg, Answer& answer) {
    for (const auto& v : sp) {
        const std::uint64_t len = i - v.i + 1;
        if (answer.len < len && is_palindrome(v, cur, cfg)) answer = {v.i, len};
    }
}

}  // namespace detail
}  // namespace palstream
