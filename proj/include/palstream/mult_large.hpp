#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "palstream/checkpoint_scan.hpp"
#include "palstream/kary_segments.hpp"
#include "palstream/mult_small.hpp"  // kTtlExpCap

namespace palstream {

// Largest even k <= (1+eps)/2. The k-ary schedule needs k >= 4, i.e.
// eps >= 7; callers with eps in (1, 7) must fall back to the binary engine
// at eps = 1 (see MultiplicativeEngine).
inline std::uint32_t choose_k(double eps) {
    if (!(eps >= 7.0))
        throw std::invalid_argument("k-ary schedule requires epsilon >= 7");
    const double half = (1.0 + eps) / 2.0;
    // A base beyond 2^30 buys nothing: one k-ary digit already outlives any
    // feasible stream, and a smaller k only strengthens the guarantee.
    const double capped = half < double{1u << 30} ? half : double{1u << 30};
    const auto k = static_cast<std::uint32_t>(capped / 2.0) * 2;
    return k;
}

struct KaryParams {
    double eps;       // multiplicative error, >= 7
    std::uint32_t k;  // even, >= 4
};

inline KaryParams make_kary_params(double eps) { return {eps, choose_k(eps)}; }

// ttl'(j) = (9/2) k^{beta'(j)} when beta'(j) > 0, else 4. Exact integer since
// k is even; saturates at 2^62 (the checkpoint then never expires).
inline std::uint64_t class_ttl_prime(std::uint32_t beta, std::uint32_t k) {
    if (beta == 0) return 4;
    std::uint64_t v = std::uint64_t{9} * (k / 2);
    for (std::uint32_t t = 1; t < beta; ++t) {
        if (v > (std::uint64_t{1} << kTtlExpCap) / k)
            return std::uint64_t{1} << kTtlExpCap;
        v *= k;
    }
    return v;
}

// Reference path: beta' by trial division.
inline std::uint32_t rightmost_nonzero_digit(std::uint64_t x, std::uint32_t k) {
    assert(x > 0);
    std::uint32_t b = 0;
    while (x % k == 0) {
        x /= k;
        ++b;
    }
    return b;
}

inline std::uint64_t ttl_prime(std::uint64_t j, const KaryParams& params) {
    return class_ttl_prime(rightmost_nonzero_digit(j, params.k), params.k);
}

// Real-time multiplicative-error engine for eps >= 7: the binary time-to-live
// schedule rebuilt over base k, shrinking the live checkpoint list to
// O(log n / log(1+eps)) tuples. Expiring positions j satisfy either
// beta'(j) = beta'(i) + 1 or beta'(j) = 0, so only two queue heads are probed
// per symbol and at most two checkpoints are deleted.
class MultLargeEngine {
  public:
    MultLargeEngine(HashConfig cfg, double eps)
        : cfg_(std::move(cfg)), params_(make_kary_params(eps)), ks_(params_.k), qu_(66) {
        cur_ = initial_tuple(cfg_);
    }

    // cursor and queues point into the checkpoint list: movable, not copyable
    MultLargeEngine(const MultLargeEngine&) = delete;
    MultLargeEngine& operator=(const MultLargeEngine&) = delete;
    MultLargeEngine(MultLargeEngine&&) = default;
    MultLargeEngine& operator=(MultLargeEngine&&) = default;

    void push(Symbol a) {
        ctr_.begin_push();
        ++i_;
        sp_.push_front(cur_);  // I(i)
        if (i_ == 1) cursor_ = sp_.cbegin();
        ks_.increment();  // counter now equals i
        const std::uint32_t b = ks_.beta_prime();
        probe_queue(b + 1);
        probe_queue(0);
        qu_[b].push_back(sp_.cbegin());
        cur_ = extend(cur_, a, cfg_);  // I(i+1)
        detail::cursor_scan(sp_, cursor_, cur_, i_, cfg_, answer_, 3, ctr_);
        ctr_.end_push();
    }

    Answer answer() const { return answer_; }
    std::uint64_t pushed() const { return i_; }
    const KaryParams& params() const { return params_; }
    const detail::TupleList& checkpoints() const { return sp_; }
    const KarySegments& counter_segments() const { return ks_; }
    const StepCounters& counters() const { return ctr_; }

    std::uint64_t space_words() const {
        return 6 * sp_.size() + 2 * ks_.run_count() + 12;
    }

  private:
    void probe_queue(std::uint32_t cls) {
        assert(cls < qu_.size());
        auto& queue = qu_[cls];
        if (queue.empty()) return;
        const auto head = queue.front();
        if (head->i + class_ttl_prime(cls, params_.k) == i_) {
            if (cursor_ == head)
                cursor_ = std::next(head) != sp_.cend() ? std::next(head)
                                                        : std::prev(head);
            queue.pop_front();
            sp_.erase(head);
            ++ctr_.deletions;
        }
    }

    HashConfig cfg_;
    KaryParams params_;
    detail::TupleList sp_;  // newest first
    detail::TupleList::const_iterator cursor_;
    KarySegments ks_;
    std::vector<std::deque<detail::TupleList::const_iterator>> qu_;  // by beta' class
    FingerprintTuple cur_{};
    Answer answer_;
    std::uint64_t i_ = 0;
    StepCounters ctr_;
};

// Slow reference variant with full-list expiry and candidate scans.
class MultLargeBasic {
  public:
    MultLargeBasic(HashConfig cfg, double eps)
        : cfg_(std::move(cfg)), params_(make_kary_params(eps)) {
        cur_ = initial_tuple(cfg_);
    }

    void push(Symbol a) {
        ++i_;
        sp_.push_front(cur_);
        for (auto it = sp_.begin(); it != sp_.end();)
            it = (it->i + ttl_prime(it->i, params_) == i_) ? sp_.erase(it)
                                                           : std::next(it);
        cur_ = extend(cur_, a, cfg_);
        detail::full_scan(sp_, cur_, i_, cfg_, answer_);
    }

    Answer answer() const { return answer_; }
    const detail::TupleList& checkpoints() const { return sp_; }
    const KaryParams& params() const { return params_; }

  private:
    HashConfig cfg_;
    KaryParams params_;
    detail::TupleList sp_;
    FingerprintTuple cur_{};
    Answer answer_;
    std::uint64_t i_ = 0;
};

inline Answer mbasic_prime_run(const HashConfig& cfg, std::span<const Symbol> stream,
                               double eps) {
    MultLargeBasic engine(cfg, eps);
    for (Symbol a : stream) engine.push(a);
    return engine.answer();
}

}  // namespace palstream
