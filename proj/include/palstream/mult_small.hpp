#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "palstream/binary_segments.hpp"
#include "palstream/checkpoint_scan.hpp"

namespace palstream {

// ttl exponents are capped so the arithmetic never leaves 64 bits; any ttl
// longer than the remaining stream keeps its checkpoint alive forever, so the
// cap is semantically inert for streams up to 2^40 symbols.
inline constexpr std::uint32_t kTtlExpCap = 62;

struct TtlParams {
    double eps;           // multiplicative error, in (0, 1]
    std::uint32_t q_eps;  // ceil(log2(2 / eps))
};

// q_eps computed by exact doubling: multiplying a double by 2 only moves the
// binary exponent, so no floating-point log is involved.
inline TtlParams make_ttl_params(double eps) {
    if (!(eps > 0.0) || eps > 1.0)
        throw std::invalid_argument("epsilon must be in (0, 1]");
    std::uint32_t q = 0;
    double scaled = eps;
    while (scaled < 2.0 && q < 63) {
        scaled *= 2.0;
        ++q;
    }
    return {eps, q};
}

// Trailing-zero count; the reference path for beta. The engine reads beta
// from its BinarySegments list instead.
inline std::uint32_t rightmost_one(std::uint64_t x) {
    assert(x > 0);
    return static_cast<std::uint32_t>(std::countr_zero(x));
}

// ttl(j) = 2^{q_eps + 2 + beta(j)}: how many iterations checkpoint I(j)
// stays alive after insertion.
inline std::uint64_t ttl(std::uint64_t j, const TtlParams& params) {
    assert(j >= 1);
    const std::uint32_t e = params.q_eps + 2 + rightmost_one(j);
    return std::uint64_t{1} << std::min(e, kTtlExpCap);
}

// Real-time multiplicative-error engine for eps in (0, 1]. Every position
// becomes a checkpoint; its time-to-live grows exponentially with the
// trailing-zero count of its index, which keeps O(log(n*eps)/eps) tuples live
// while guaranteeing a reported length of at least L(S)/(1+eps).
// Per symbol: at most one expiry, at most three candidate probes.
class MultSmallEngine {
  public:
    MultSmallEngine(HashConfig cfg, double eps)
        : cfg_(std::move(cfg)), params_(make_ttl_params(eps)), qu_(64) {
        cur_ = initial_tuple(cfg_);
    }

    // cursor and queues point into the checkpoint list: movable, not copyable
    MultSmallEngine(const MultSmallEngine&) = delete;
    MultSmallEngine& operator=(const MultSmallEngine&) = delete;
    MultSmallEngine(MultSmallEngine&&) = default;
    MultSmallEngine& operator=(MultSmallEngine&&) = default;

    void push(Symbol a) {
        ctr_.begin_push();
        ++i_;
        sp_.push_front(cur_);  // I(i)
        if (i_ == 1) cursor_ = sp_.cbegin();
        bs_.increment();  // counter now equals i
        const std::uint32_t b = bs_.beta();
        // The unique position expiring now (if any) shares beta with i and is
        // the oldest of its class; a head inserted recently is simply not yet
        // expired, hence the guard.
        auto& queue = qu_[b];
        if (!queue.empty()) {
            const auto head = queue.front();
            if (head->i + class_ttl(b) == i_) {
                if (cursor_ == head)
                    cursor_ = std::next(head) != sp_.cend() ? std::next(head)
                                                            : std::prev(head);
                queue.pop_front();
                sp_.erase(head);
                ++ctr_.deletions;
            }
        }
        queue.push_back(sp_.cbegin());
        cur_ = extend(cur_, a, cfg_);  // I(i+1)
        detail::cursor_scan(sp_, cursor_, cur_, i_, cfg_, answer_, 3, ctr_);
        ctr_.end_push();
    }

    Answer answer() const { return answer_; }
    std::uint64_t pushed() const { return i_; }
    const TtlParams& params() const { return params_; }
    const detail::TupleList& checkpoints() const { return sp_; }
    const BinarySegments& counter_segments() const { return bs_; }
    const StepCounters& counters() const { return ctr_; }

    // 5 words per tuple, one queue pointer per tuple, two words per counter
    // segment, plus fixed state.
    std::uint64_t space_words() const {
        return 6 * sp_.size() + 2 * bs_.segment_count() + 12;
    }

  private:
    std::uint64_t class_ttl(std::uint32_t beta) const {
        return std::uint64_t{1} << std::min(params_.q_eps + 2 + beta, kTtlExpCap);
    }

    HashConfig cfg_;
    TtlParams params_;
    detail::TupleList sp_;  // newest first
    detail::TupleList::const_iterator cursor_;
    BinarySegments bs_;
    std::vector<std::deque<detail::TupleList::const_iterator>> qu_;  // by beta class
    FingerprintTuple cur_{};
    Answer answer_;
    std::uint64_t i_ = 0;
    StepCounters ctr_;
};

// Slow reference variant: scans the whole list for expiries and candidates.
// Same answer sequence as MultSmallEngine.
class MultSmallBasic {
  public:
    MultSmallBasic(HashConfig cfg, double eps)
        : cfg_(std::move(cfg)), params_(make_ttl_params(eps)) {
        cur_ = initial_tuple(cfg_);
    }

    void push(Symbol a) {
        ++i_;
        sp_.push_front(cur_);
        for (auto it = sp_.begin(); it != sp_.end();)
            it = (it->i + ttl(it->i, params_) == i_) ? sp_.erase(it) : std::next(it);
        cur_ = extend(cur_, a, cfg_);
        detail::full_scan(sp_, cur_, i_, cfg_, answer_);
    }

    Answer answer() const { return answer_; }
    const detail::TupleList& checkpoints() const { return sp_; }
    const TtlParams& params() const { return params_; }

  private:
    HashConfig cfg_;
    TtlParams params_;
    detail::TupleList sp_;
    FingerprintTuple cur_{};
    Answer answer_;
    std::uint64_t i_ = 0;
};

inline Answer mbasic_run(const HashConfig& cfg, std::span<const Symbol> stream, double eps) {
    MultSmallBasic engine(cfg, eps);
    for (Symbol a : stream) engine.push(a);
    return engine.answer();
}

}  // namespace palstream
