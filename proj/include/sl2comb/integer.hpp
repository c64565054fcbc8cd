#pragma once

// Integer types used by the matrix algebra.
//
// BigInt is the default and never overflows. CheckedInt is a thin int64
// wrapper for the hot enumeration loops; every operation that would wrap
// throws std::overflow_error instead, so callers can retry with BigInt.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sl2comb {

using BigInt = boost::multiprecision::cpp_int;

/// Word entries. Entries stay small in practice; arithmetic on them goes
/// through the checked helpers below.
using Entry = std::int64_t;

class CheckedInt {
public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v) : value_(v) {}  // NOLINT(implicit)

    constexpr std::int64_t value() const { return value_; }

    friend CheckedInt operator+(CheckedInt x, CheckedInt y) {
        std::int64_t r;
        if (__builtin_add_overflow(x.value_, y.value_, &r)) throw_overflow("+");
        return r;
    }
    friend CheckedInt operator-(CheckedInt x, CheckedInt y) {
        std::int64_t r;
        if (__builtin_sub_overflow(x.value_, y.value_, &r)) throw_overflow("-");
        return r;
    }
    friend CheckedInt operator*(CheckedInt x, CheckedInt y) {
        std::int64_t r;
        if (__builtin_mul_overflow(x.value_, y.value_, &r)) throw_overflow("*");
        return r;
    }
    friend CheckedInt operator-(CheckedInt x) { return CheckedInt{0} - x; }

    friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
    friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

    friend std::ostream& operator<<(std::ostream& os, CheckedInt x) { return os << x.value_; }

private:
    [[noreturn]] static void throw_overflow(const char* op) {
        throw std::overflow_error(std::string("64-bit integer overflow in '") + op + "'");
    }

    std::int64_t value_ = 0;
};

namespace detail {

inline Entry checked_add(Entry x, Entry y) {
    Entry r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("word entry overflow");
    return r;
}

inline Entry checked_sub(Entry x, Entry y) {
    Entry r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("word entry overflow");
    return r;
}

template <class Int>
Int from_entry(Entry e) {
    return Int(e);
}

/// Narrowing conversion; throws std::overflow_error when `v` does not fit.
template <class Int>
Int narrow(const BigInt& v) {
    if constexpr (std::is_same_v<Int, BigInt>) {
        return v;
    } else {
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("value does not fit in 64 bits");
        return Int(static_cast<std::int64_t>(v));
    }
}

inline BigInt widen(const BigInt& v) { return v; }
inline BigInt widen(CheckedInt v) { return BigInt(v.value()); }

}  // namespace detail
}  // namespace sl2comb
