#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rademacher {

/// Raised whenever an exact count or closed-form value leaves its integer range.
class CountOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

__extension__ typedef unsigned __int128 wide_count;

/// Exact number of copies of a pattern. Always nonnegative; produced from
/// 128-bit accumulators and narrowed with an explicit overflow check.
struct CopyCount {
    std::uint64_t value = 0;

    friend constexpr auto operator<=>(const CopyCount&, const CopyCount&) = default;
};

inline CopyCount narrow_count(wide_count v) {
    if (v > static_cast<wide_count>(UINT64_MAX)) {
        throw CountOverflow("copy count exceeds 64-bit range");
    }
    return CopyCount{static_cast<std::uint64_t>(v)};
}

inline wide_count checked_add(wide_count a, wide_count b) {
    wide_count r;
    if (__builtin_add_overflow(a, b, &r)) throw CountOverflow("128-bit count accumulator overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CountOverflow("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw CountOverflow("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CountOverflow("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline std::string to_string(CopyCount c) { return std::to_string(c.value); }

}  // namespace rademacher
