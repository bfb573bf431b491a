#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "palstream/answer.hpp"
#include "palstream/fingerprint.hpp"  // Symbol

namespace palstream {

enum class ExactKind { Exact, AtLeast };

// Outcome of a finished windowed run. Exact carries the true longest
// palindrome when it is shorter than the window parameter m; AtLeast
// certifies a palindrome of length m or m+1 when the true answer reaches m.
struct ExactResult {
    ExactKind kind;
    std::uint64_t pos;
    std::uint64_t len;

    friend bool operator==(const ExactResult&, const ExactResult&) = default;
};

// Deterministic real-time windowed Manacher.
//
// Centers live at doubled indices: center c2 stands for stream position
// c2/2, integral when c2 is even. A radius value rad at center c2 spans
// positions [(c2 - 2 rad + (c2&1))/2, (c2 + 2 rad - (c2&1))/2], i.e. length
// 2 rad + 1 at integral centers and 2 rad at half-integral ones, so a single
// integer array covers odd and even palindromes.
//
// Only the last m+1 symbols and the last 2m+4 doubled-center radii are kept
// (circular); a suffix-palindrome that reaches length m or m+1 is treated as
// non-extendable, which keeps every access inside the window. Arriving
// symbols wait in a queue and the inner sweep runs at most three iterations
// per push, which bounds the queue by m/2 + 2.
class WindowedManacher {
  public:
    explicit WindowedManacher(std::uint64_t m) : m_(m) {
        if (m < 1) throw std::invalid_argument("window parameter must be >= 1");
        cs_.assign(m_ + 1, kSentinel);  // slot 0 doubles as the left endmarker
        crad_.assign(2 * m_ + 4, 0);
    }

    void push(Symbol a) {
        assert(a != kSentinel);
        ++pushed_;
        queue_.push_back(a);
        inner_last_ = 0;
        resume(3);
        max_queue_ = std::max<std::uint64_t>(max_queue_, queue_.size());
    }

    // Classification once the stream has ended. Pending queued symbols cannot
    // improve the best length, so they are not drained.
    ExactResult finish() const {
        return {best_.len >= m_ ? ExactKind::AtLeast : ExactKind::Exact, best_.pos,
                best_.len};
    }

    Answer best() const { return best_; }
    std::uint64_t window() const { return m_; }
    std::uint64_t pushed() const { return pushed_; }
    std::uint64_t queue_size() const { return queue_.size(); }
    std::uint64_t max_queue_size() const { return max_queue_; }
    std::uint32_t inner_iterations_last() const { return inner_last_; }
    std::uint32_t max_inner_iterations() const { return inner_max_; }
    std::uint64_t total_inner_iterations() const { return inner_total_; }

    // Window buffers plus current queue occupancy plus fixed state.
    std::uint64_t space_words() const {
        return cs_.size() + crad_.size() + queue_.size() + 10;
    }

  private:
    static constexpr Symbol kSentinel = std::numeric_limits<Symbol>::max();

    std::uint64_t radius_slot(std::uint64_t c2) const { return c2 % crad_.size(); }
    std::uint64_t symbol_slot(std::uint64_t pos) const { return pos % (m_ + 1); }

    std::uint64_t pal_len(std::uint64_t c2, std::uint64_t rad) const {
        return 2 * rad + ((c2 & 1) ^ 1);
    }
    std::uint64_t left_end(std::uint64_t c2, std::uint64_t rad) const {
        return (c2 - 2 * rad + (c2 & 1)) / 2;
    }

    // Runs the paused sweep for at most `budget` inner iterations, consuming
    // queued symbols as whole sweeps complete.
    void resume(int budget) {
        for (;;) {
            if (!mid_sweep_) {
                if (queue_.empty()) return;
                cur_ = queue_.front();
                queue_.pop_front();
                anchor2_ = c2_;  // center of the current longest suffix-palindrome
                mid_sweep_ = true;
            }
            if (c2_ > 2 * n_ + 1) {
                // swept past every candidate: the new symbol is its own palindrome
                crad_[radius_slot(c2_)] = 0;
                complete_sweep();
                continue;
            }
            if (budget == 0) return;
            --budget;
            ++inner_last_;
            inner_max_ = std::max(inner_max_, inner_last_);
            ++inner_total_;

            const std::uint64_t mirror2 = 2 * anchor2_ - c2_;
            assert(mirror2 + 2 * m_ + 1 >= 2 * n_);  // stays inside the radius window
            const std::uint64_t cap = (2 * n_ - c2_ + (c2_ & 1)) / 2;  // right end <= n
            const std::uint64_t rad =
                std::min<std::uint64_t>(crad_[radius_slot(mirror2)], cap);
            crad_[radius_slot(c2_)] = rad;
            // rad == cap means the palindrome at c2 touches the stream end and
            // may grow; lengths m and m+1 are never extended.
            if (rad == cap && pal_len(c2_, rad) < m_) {
                const std::uint64_t left = left_end(c2_, rad);
                assert(left >= 1);
                assert(left - 1 + m_ >= n_);  // stays inside the symbol window
                if (cs_[symbol_slot(left - 1)] == cur_) {
                    crad_[radius_slot(c2_)] = rad + 1;
                    complete_sweep();
                    continue;
                }
            }
            ++c2_;
        }
    }

    void complete_sweep() {
        ++n_;
        cs_[symbol_slot(n_)] = cur_;
        mid_sweep_ = false;
        const std::uint64_t rad = crad_[radius_slot(c2_)];
        const std::uint64_t len = pal_len(c2_, rad);
        if (len > best_.len) best_ = {left_end(c2_, rad), len};
    }

    std::uint64_t m_;
    std::vector<Symbol> cs_;          // recent symbols, indexed by position mod (m+1)
    std::vector<std::uint32_t> crad_; // recent radii, indexed by doubled center mod (2m+4)
    std::deque<Symbol> queue_;        // symbols not yet consumed by the sweep
    std::uint64_t n_ = 0;             // symbols consumed by the sweep
    std::uint64_t pushed_ = 0;
    std::uint64_t c2_ = 1;            // doubled center of the longest suffix-palindrome
    std::uint64_t anchor2_ = 1;       // doubled center at sweep entry (mirror anchor)
    bool mid_sweep_ = false;
    Symbol cur_ = 0;
    Answer best_;
    std::uint64_t max_queue_ = 0;
    std::uint32_t inner_last_ = 0;
    std::uint32_t inner_max_ = 0;
    std::uint64_t inner_total_ = 0;
};

struct EBasicResult {
    std::uint64_t len = 0;
    std::uint64_t pos = 0;

    friend bool operator==(const EBasicResult&, const EBasicResult&) = default;
};

// Reference sweep without laziness or circular storage: full radius array,
// every symbol processed to completion. With m it applies the same
// never-extend-past-m rule, making it the differential oracle for
// WindowedManacher; without m it is an exact offline solver.
inline EBasicResult ebasic_run(std::span<const Symbol> s,
                               std::optional<std::uint64_t> m = {}) {
    const std::uint64_t total = s.size();
    const std::uint64_t clamp = m ? *m : std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> rad(2 * total + 4, 0);
    EBasicResult best;
    std::uint64_t n = 0;
    std::uint64_t c2 = 1;
    for (std::uint64_t t = 0; t < total; ++t) {
        const Symbol a = s[t];
        const std::uint64_t anchor2 = c2;
        for (;;) {
            if (c2 > 2 * n + 1) break;  // rad[c2] is already 0
            const std::uint64_t parity = c2 & 1;
            const std::uint64_t cap = (2 * n - c2 + parity) / 2;
            std::uint64_t r = std::min(rad[2 * anchor2 - c2], cap);
            rad[c2] = r;
            if (r == cap && 2 * r + (parity ^ 1) < clamp) {
                const std::uint64_t left = (c2 - 2 * r + parity) / 2;
                if (left >= 2 && s[left - 2] == a) {  // s is 0-based, positions 1-based
                    rad[c2] = r + 1;
                    break;
                }
            }
            ++c2;
        }
        ++n;
        const std::uint64_t len = 2 * rad[c2] + ((c2 & 1) ^ 1);
        if (len > best.len) best = {len, (c2 - 2 * rad[c2] + (c2 & 1)) / 2};
    }
    return best;
}

}  // namespace palstream
