#pragma once

#include <cstdint>
#include <ostream>

namespace braid {

/// The two-element group {0, 1} under addition mod 2.
class Z2 {
public:
    constexpr Z2() = default;
    constexpr explicit Z2(int v) : v_(static_cast<std::uint8_t>(((v % 2) + 2) % 2)) {}

    /// Reduction of an arbitrary integer mod 2.
    static constexpr Z2 of(long long v) { return Z2(static_cast<int>(((v % 2) + 2) % 2)); }

    constexpr int value() const { return v_; }

    constexpr Z2 operator+(Z2 o) const { return Z2(v_ ^ o.v_); }
    constexpr Z2 operator-(Z2 o) const { return *this + o; }
    Z2& operator+=(Z2 o) {
        v_ ^= o.v_;
        return *this;
    }
    constexpr bool operator==(const Z2&) const = default;

private:
    std::uint8_t v_ = 0;
};

inline constexpr Z2 z2_zero{0};
inline constexpr Z2 z2_one{1};

inline std::ostream& operator<<(std::ostream& os, Z2 v) { return os << v.value(); }

}  // namespace braid
