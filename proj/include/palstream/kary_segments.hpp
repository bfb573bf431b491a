#pragma once

#include <cassert>
#include <cstdint>
#include <list>

namespace palstream {

// Run-length encoding of the k-ary digits of a counter, least-significant
// first. Increment is O(1): a carry collapses one maximal run of digit k-1
// into zeros and bumps the digit above it. The rightmost nonzero digit
// position is read off the front run in O(1). Starts at zero (empty list).
class KarySegments {
  public:
    struct Run {
        std::uint32_t digit;
        std::uint64_t count;
        friend bool operator==(const Run&, const Run&) = default;
    };

    explicit KarySegments(std::uint32_t k) : k_(k) { assert(k >= 2); }

    void increment() {
        if (runs_.empty()) {
            runs_.push_front({1, 1});
            return;
        }
        const Run first = runs_.front();
        if (first.digit < k_ - 1) {
            pop_one_front();
            prepend_digit(first.digit + 1);
        } else {
            // adjacent runs differ, so the run above a k-1 run cannot carry again
            runs_.pop_front();
            std::uint32_t carried = 0;
            if (!runs_.empty()) {
                carried = runs_.front().digit;
                pop_one_front();
            }
            prepend_digit(carried + 1);
            prepend_run({0, first.count});
        }
    }

    // 0 when the lowest digit is nonzero, otherwise the length of the
    // trailing zero run; counter must be positive.
    std::uint32_t beta_prime() const {
        assert(!runs_.empty());
        return runs_.front().digit == 0
                   ? static_cast<std::uint32_t>(runs_.front().count)
                   : 0u;
    }

    std::uint32_t base() const { return k_; }
    bool zero() const { return runs_.empty(); }
    const std::list<Run>& runs() const { return runs_; }
    std::size_t run_count() const { return runs_.size(); }

    // Reconstructs the counter; for tests (overflows silently for huge values).
    std::uint64_t value() const {
        std::uint64_t v = 0;
        std::uint64_t place = 1;
        for (const auto& run : runs_)
            for (std::uint64_t t = 0; t < run.count; ++t) {
                v += run.digit * place;
                place *= k_;
            }
        return v;
    }

  private:
    void pop_one_front() {
        if (--runs_.front().count == 0) runs_.pop_front();
    }

    void prepend_digit(std::uint32_t d) {
        if (!runs_.empty() && runs_.front().digit == d)
            ++runs_.front().count;
        else
            runs_.push_front({d, 1});
    }

    void prepend_run(Run r) {
        if (!runs_.empty() && runs_.front().digit == r.digit)
            runs_.front().count += r.count;
        else
            runs_.push_front(r);
    }

    std::uint32_t k_;
    std::list<Run> runs_;
};

}  // namespace palstream
