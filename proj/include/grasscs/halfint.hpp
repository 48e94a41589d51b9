#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace grasscs {

/// Half-integer stored as its doubled value, so j = 3/2 has twice == 3.
/// All spin/isospin labels are kept in this form to avoid fractional
/// arithmetic.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int doubled) : twice(doubled) {}

    static constexpr HalfInt from_twice(int t) { return HalfInt(t); }
    static constexpr HalfInt from_int(int n) { return HalfInt(2 * n); }
    static constexpr HalfInt half() { return HalfInt(1); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr double value() const { return 0.5 * twice; }
    // Valid only when is_integer().
    constexpr int as_int() const { return twice / 2; }

    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    constexpr HalfInt operator+(int n) const { return HalfInt(twice + 2 * n); }
    constexpr HalfInt operator-(int n) const { return HalfInt(twice - 2 * n); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

inline constexpr HalfInt abs(HalfInt h) { return HalfInt(h.twice < 0 ? -h.twice : h.twice); }

/// (-1)^n for a half-integer difference that must be an actual integer.
inline int parity_sign(HalfInt h) {
    if (!h.is_integer()) throw std::invalid_argument("parity_sign: not an integer");
    return (h.as_int() % 2 == 0) ? 1 : -1;
}

}  // namespace grasscs
