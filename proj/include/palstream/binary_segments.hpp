#pragma once

#include <cassert>
#include <cstdint>
#include <list>
#include <utility>

namespace palstream {

// Maximal runs of 1-bits in the binary representation of a counter, kept as
// [lo, hi] pairs ordered least-significant first. Increment is O(1) list
// surgery; the rightmost set bit is read off the front in O(1).
// Starts at zero (empty list).
class BinarySegments {
  public:
    using Segment = std::pair<std::uint32_t, std::uint32_t>;  // [lo, hi], inclusive

    void increment() {
        if (segs_.empty()) {
            segs_.push_front({0, 0});
            return;
        }
        const auto [a, b] = segs_.front();
        if (a >= 2) {
            segs_.push_front({0, 0});
        } else if (a == 1) {
            segs_.front().first = 0;
        } else {
            // bits [0, b] flip to zero, carry sets bit b+1
            const std::uint32_t c = b + 1;
            segs_.pop_front();
            if (!segs_.empty() && segs_.front().first == c + 1)
                segs_.front().first = c;  // carry touches the next run
            else
                segs_.push_front({c, c});
        }
    }

    // Position of the rightmost 1 (0-based); counter must be positive.
    std::uint32_t beta() const {
        assert(!segs_.empty());
        return segs_.front().first;
    }

    bool zero() const { return segs_.empty(); }
    const std::list<Segment>& segments() const { return segs_; }
    std::size_t segment_count() const { return segs_.size(); }

    // Reconstructs the counter; linear in the popcount, for tests.
    std::uint64_t value() const {
        std::uint64_t v = 0;
        for (const auto& [lo, hi] : segs_)
            for (std::uint32_t b = lo; b <= hi; ++b) v |= std::uint64_t{1} << b;
        return v;
    }

  private:
    std::list<Segment> segs_;
};

}  // namespace palstream
