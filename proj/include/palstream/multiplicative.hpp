#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>

#include "palstream/mult_large.hpp"
#include "palstream/mult_small.hpp"

namespace palstream {

// Single multiplicative entry point. Routing policy:
//   eps in (0, 1]  -> binary schedule at eps
//   eps in (1, 7)  -> binary schedule at eps = 1 (dominates the requested bound)
//   eps >= 7       -> k-ary schedule at eps
class MultiplicativeEngine {
  public:
    MultiplicativeEngine(HashConfig cfg, double eps)
        : requested_eps_(eps), impl_(make_impl(std::move(cfg), eps)) {}

    void push(Symbol a) {
        std::visit([&](auto& e) { e.push(a); }, impl_);
    }

    Answer answer() const {
        return std::visit([](const auto& e) { return e.answer(); }, impl_);
    }

    std::uint64_t pushed() const {
        return std::visit([](const auto& e) { return e.pushed(); }, impl_);
    }

    std::uint64_t space_words() const {
        return std::visit([](const auto& e) { return e.space_words(); }, impl_);
    }

    const StepCounters& counters() const {
        return std::visit([](const auto& e) -> const StepCounters& { return e.counters(); },
                          impl_);
    }

    double requested_eps() const { return requested_eps_; }
    bool uses_kary() const { return std::holds_alternative<MultLargeEngine>(impl_); }

    // The error parameter the underlying schedule actually runs with.
    double effective_eps() const {
        if (uses_kary()) return std::get<MultLargeEngine>(impl_).params().eps;
        return std::get<MultSmallEngine>(impl_).params().eps;
    }

    const MultSmallEngine* small() const { return std::get_if<MultSmallEngine>(&impl_); }
    const MultLargeEngine* large() const { return std::get_if<MultLargeEngine>(&impl_); }

  private:
    using Impl = std::variant<MultSmallEngine, MultLargeEngine>;

    static Impl make_impl(HashConfig cfg, double eps) {
        if (!(eps > 0.0) || std::isnan(eps))
            throw std::invalid_argument("epsilon must be positive");
        if (eps <= 1.0) return MultSmallEngine(std::move(cfg), eps);
        if (eps < 7.0) return MultSmallEngine(std::move(cfg), 1.0);
        return MultLargeEngine(std::move(cfg), eps);
    }

    double requested_eps_;
    Impl impl_;
};

}  // namespace palstream
