#include "sdac9/galois.hpp"

#include <stdexcept>

namespace sdac9 {
namespace {

// (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w, using w^2 = w + 1.
constexpr GF9 mul_from_relation(GF9 x, GF9 y) {
    const GF3 a = x.a(), b = x.b(), c = y.a(), d = y.b();
    return GF9(a * c + b * d, a * d + b * c + b * d);
}

struct Tables {
    std::array<std::array<GF9, 9>, 9> mul{};
    std::array<GF9, 9> conj{};
    std::array<GF3, 9> trace{};
    std::array<GF9, 8> omega_pow{};
};

constexpr Tables build_tables() {
    Tables t;
    for (std::uint8_t i = 0; i < 9; ++i)
        for (std::uint8_t j = 0; j < 9; ++j)
            t.mul[i][j] = mul_from_relation(GF9::from_code(i), GF9::from_code(j));
    for (std::uint8_t i = 0; i < 9; ++i) {
        const GF9 x = GF9::from_code(i);
        const GF9 x3 = t.mul[t.mul[i][i].code()][i];
        t.conj[i] = x3;
        const GF9 tr = x + x3;
        t.trace[i] = tr.a();
    }
    GF9 p = GF9::one();
    for (int k = 0; k < 8; ++k) {
        t.omega_pow[k] = p;
        p = t.mul[p.code()][GF9::omega().code()];
    }
    return t;
}

constexpr Tables kTables = build_tables();

constexpr bool tables_consistent() {
    // w^2 = w + 1, w^4 = -1, w generates the multiplicative group.
    if (!(kTables.omega_pow[2] == GF9(1, 1))) return false;
    if (!(kTables.omega_pow[4] == GF9(2, 0))) return false;
    std::array<bool, 9> seen{};
    for (const GF9 x : kTables.omega_pow) {
        if (x.is_zero() || seen[x.code()]) return false;
        seen[x.code()] = true;
    }
    for (std::uint8_t i = 0; i < 9; ++i) {
        const GF9 x = GF9::from_code(i);
        if (!((x + kTables.conj[i]).b().is_zero())) return false;
        if (!(kTables.conj[kTables.conj[i].code()] == x)) return false;
    }
    return true;
}
static_assert(tables_consistent(), "GF(9) tables violate w^2 = w + 1");

constexpr std::array<Sp2Element, 24> build_sp2() {
    std::array<Sp2Element, 24> out{};
    std::size_t k = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    const Sp2Element m{GF3(a), GF3(b), GF3(c), GF3(d)};
                    if (m.det() == GF3(1)) out[k++] = m;
                }
    return out;
}

constexpr std::array<Sp2Element, 24> kSp2 = build_sp2();

constexpr std::array<std::string_view, 9> kTokens = {"0", "1", "2", "w", "1+w", "2+w", "2w", "1+2w", "2+2w"};

}  // namespace

GF9 gf9_mul(GF9 x, GF9 y) { return kTables.mul[x.code()][y.code()]; }
GF9 gf9_conj(GF9 x) { return kTables.conj[x.code()]; }
GF3 gf9_trace(GF9 x) { return kTables.trace[x.code()]; }

GF9 gf9_omega_power(int k) { return kTables.omega_pow[static_cast<std::size_t>(((k % 8) + 8) % 8)]; }

GF3 hermitian_trace_ip(std::span<const GF9> u, std::span<const GF9> v) {
    if (u.size() != v.size()) throw std::invalid_argument("hermitian_trace_ip: length mismatch");
    const GF9 w2 = kTables.omega_pow[2];
    GF3 acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += gf9_trace(w2 * (u[i] * gf9_conj(v[i])));
    return acc;
}

std::string_view to_token(GF9 x) { return kTokens[x.code()]; }

std::optional<GF9> parse_token(std::string_view token) {
    for (std::uint8_t i = 0; i < 9; ++i)
        if (kTokens[i] == token) return GF9::from_code(i);
    return std::nullopt;
}

const std::array<Sp2Element, 24>& sp2_enumerate() { return kSp2; }

std::size_t sp2_index(const Sp2Element& m) {
    for (std::size_t i = 0; i < kSp2.size(); ++i)
        if (kSp2[i] == m) return i;
    throw std::invalid_argument("sp2_index: determinant is not one");
}

}  // namespace sdac9
