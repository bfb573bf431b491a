#pragma once

#include <cstdint>
#include <list>
#include <span>
#include <stdexcept>
#include <utility>

#include "palstream/checkpoint_scan.hpp"

namespace palstream {

// Real-time additive-error engine: keeps a checkpoint tuple every
// t_E = floor(E/2) positions and probes at most two candidates per symbol.
// After the whole stream, L(S) - E <= answer().len <= L(S) using
// floor(n / t_E) checkpoints of 5 words each.
class AdditiveEngine {
  public:
    AdditiveEngine(HashConfig cfg, std::uint64_t additive_error)
        : cfg_(std::move(cfg)), err_(additive_error), t_e_(additive_error / 2) {
        if (additive_error < 2)
            throw std::invalid_argument("additive error must be >= 2");
        cur_ = initial_tuple(cfg_);
    }

    // the cursor points into the checkpoint list: moves stay valid, copies would not
    AdditiveEngine(const AdditiveEngine&) = delete;
    AdditiveEngine& operator=(const AdditiveEngine&) = delete;
    AdditiveEngine(AdditiveEngine&&) = default;
    AdditiveEngine& operator=(AdditiveEngine&&) = default;

    void push(Symbol a) {
        ctr_.begin_push();
        ++i_;
        if (i_ % t_e_ == 0) {
            sp_.push_front(cur_);  // checkpoint I(i), describing S[1..i-1]
            if (!has_cursor_) {
                cursor_ = sp_.cbegin();
                has_cursor_ = true;
            }
        }
        cur_ = extend(cur_, a, cfg_);  // I(i+1)
        if (answer_.len == 0) answer_ = {1, 1};  // a single symbol is a palindrome
        if (has_cursor_)
            detail::cursor_scan(sp_, cursor_, cur_, i_, cfg_, answer_, 2, ctr_);
        ctr_.end_push();
    }

    Answer answer() const { return answer_; }
    std::uint64_t pushed() const { return i_; }
    std::uint64_t additive_error() const { return err_; }
    std::uint64_t checkpoint_spacing() const { return t_e_; }
    const detail::TupleList& checkpoints() const { return sp_; }
    const StepCounters& counters() const { return ctr_; }

    // Logical machine words held: 5 per checkpoint tuple plus fixed state
    // (current tuple, answer, scalars).
    std::uint64_t space_words() const { return 5 * sp_.size() + 12; }

  private:
    HashConfig cfg_;
    std::uint64_t err_;
    std::uint64_t t_e_;
    detail::TupleList sp_;  // newest first
    detail::TupleList::const_iterator cursor_;
    bool has_cursor_ = false;
    FingerprintTuple cur_{};
    Answer answer_;
    std::uint64_t i_ = 0;
    StepCounters ctr_;
};

// Slow reference variant: identical checkpoint schedule, but every stored
// tuple is probed on every symbol. Produces the same answer sequence as
// AdditiveEngine; differential tests rely on that.
class AdditiveBasic {
  public:
    AdditiveBasic(HashConfig cfg, std::uint64_t additive_error)
        : cfg_(std::move(cfg)), t_e_(additive_error / 2) {
        if (additive_error < 2)
            throw std::invalid_argument("additive error must be >= 2");
        cur_ = initial_tuple(cfg_);
    }

    void push(Symbol a) {
        ++i_;
        if (i_ % t_e_ == 0) sp_.push_front(cur_);
        cur_ = extend(cur_, a, cfg_);
        if (answer_.len == 0) answer_ = {1, 1};
        detail::full_scan(sp_, cur_, i_, cfg_, answer_);
    }

    Answer answer() const { return answer_; }
    const detail::TupleList& checkpoints() const { return sp_; }

  private:
    HashConfig cfg_;
    std::uint64_t t_e_;
    detail::TupleList sp_;
    FingerprintTuple cur_{};
    Answer answer_;
    std::uint64_t i_ = 0;
};

inline Answer abasic_run(const HashConfig& cfg, std::span<const Symbol> stream,
                         std::uint64_t additive_error) {
    AdditiveBasic engine(cfg, additive_error);
    for (Symbol a : stream) engine.push(a);
    return engine.answer();
}

}  // namespace palstream
