#pragma once

// Arithmetic in GF(3) and GF(9) = GF(3)[w] / (w^2 - w - 1), plus the
// symplectic group Sp2(3) acting on GF(9) viewed as GF(3)^2.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace sdac9 {

class GF3 {
public:
    constexpr GF3() = default;
    constexpr explicit GF3(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    constexpr std::uint8_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr GF3 operator+(GF3 x, GF3 y) { return GF3(x.v_ + y.v_); }
    friend constexpr GF3 operator-(GF3 x, GF3 y) { return GF3(x.v_ + 3 - y.v_); }
    friend constexpr GF3 operator*(GF3 x, GF3 y) { return GF3(x.v_ * y.v_); }
    constexpr GF3 operator-() const { return GF3(3 - v_); }
    constexpr GF3& operator+=(GF3 y) { return *this = *this + y; }
    friend constexpr bool operator==(GF3, GF3) = default;

private:
    std::uint8_t v_ = 0;
};

/// Element a + b*w of GF(9), stored as the code a + 3b.
class GF9 {
public:
    constexpr GF9() = default;
    constexpr GF9(GF3 a, GF3 b) : code_(static_cast<std::uint8_t>(a.value() + 3 * b.value())) {}
    constexpr GF9(int a, int b) : GF9(GF3(a), GF3(b)) {}

    static constexpr GF9 from_code(std::uint8_t code) { return GF9(code % 3, code / 3); }
    static constexpr GF9 zero() { return GF9(); }
    static constexpr GF9 one() { return GF9(1, 0); }
    static constexpr GF9 omega() { return GF9(0, 1); }

    constexpr GF3 a() const { return GF3(code_ % 3); }
    constexpr GF3 b() const { return GF3(code_ / 3); }
    constexpr std::uint8_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr GF9 operator+(GF9 x, GF9 y) { return GF9(x.a() + y.a(), x.b() + y.b()); }
    friend constexpr GF9 operator-(GF9 x, GF9 y) { return GF9(x.a() - y.a(), x.b() - y.b()); }
    constexpr GF9 operator-() const { return GF9(-a(), -b()); }
    friend constexpr GF9 operator*(GF3 s, GF9 x) { return GF9(s * x.a(), s * x.b()); }
    friend GF9 operator*(GF9 x, GF9 y);
    friend constexpr bool operator==(GF9, GF9) = default;

private:
    std::uint8_t code_ = 0;
};

GF9 gf9_mul(GF9 x, GF9 y);
/// x^3.
GF9 gf9_conj(GF9 x);
/// x + x^3, which always lies in GF(3).
GF3 gf9_trace(GF9 x);
/// w^k for any integer k (w has multiplicative order 8).
GF9 gf9_omega_power(int k);

inline GF9 operator*(GF9 x, GF9 y) { return gf9_mul(x, y); }

/// (u, v) = tr(w^2 u . conj(v)). Throws std::invalid_argument on length mismatch.
GF3 hermitian_trace_ip(std::span<const GF9> u, std::span<const GF9> v);

/// Textual tokens: "0","1","2","w","2w","1+w","1+2w","2+w","2+2w".
std::string_view to_token(GF9 x);
std::optional<GF9> parse_token(std::string_view token);

/// A 2x2 matrix over GF(3) of determinant one, acting on a + b*w as the
/// column vector (a, b).
struct Sp2Element {
    GF3 m00, m01, m10, m11;

    constexpr GF3 det() const { return m00 * m11 - m01 * m10; }
    constexpr GF9 apply(GF9 c) const {
        return GF9(m00 * c.a() + m01 * c.b(), m10 * c.a() + m11 * c.b());
    }
    friend constexpr Sp2Element operator*(const Sp2Element& x, const Sp2Element& y) {
        return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
                x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
    }
    constexpr Sp2Element inverse() const { return {m11, -m01, -m10, m00}; }
    static constexpr Sp2Element identity() { return {GF3(1), GF3(0), GF3(0), GF3(1)}; }
    friend constexpr bool operator==(const Sp2Element&, const Sp2Element&) = default;
};

inline GF9 sp2_apply(const Sp2Element& m, GF9 c) { return m.apply(c); }

/// All 24 elements, lexicographic on (m00, m01, m10, m11).
const std::array<Sp2Element, 24>& sp2_enumerate();

/// Position of m in sp2_enumerate().
std::size_t sp2_index(const Sp2Element& m);

}  // namespace sdac9
