#pragma once

#include <cstdint>

namespace palstream {

// Best palindrome found so far: 1-based start position and length.
// (0, 0) until the first symbol has been read.
struct Answer {
    std::uint64_t pos = 0;
    std::uint64_t len = 0;

    friend bool operator==(const Answer&, const Answer&) = default;
};

}  // namespace palstream
