#pragma once

// Additive codes over GF(9): packed vectors, generator matrices, codeword
// enumeration, weight distributions and minimum distance.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sdac9/galois.hpp"

namespace sdac9 {

inline constexpr std::size_t kMaxLength = 32;

namespace detail {

// GF(3) vectors are bit-sliced: bit i of p is set iff trit i is 1, bit i of
// n is set iff trit i is 2.
struct TritPlanes {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
};

inline constexpr TritPlanes trit_add(TritPlanes x, TritPlanes y) {
    const std::uint32_t t = (x.p | y.n) ^ (x.n | y.p);
    return {(x.n | y.n) ^ t, (x.p | y.p) ^ t};
}

// Sum over all positions of x_i * y_i, reduced mod 3.
inline int trit_dot(TritPlanes x, TritPlanes y) {
    const int ones = std::popcount((x.p & y.p) | (x.n & y.n));
    const int twos = std::popcount((x.p & y.n) | (x.n & y.p));
    return ((ones - twos) % 3 + 3) % 3;
}

}  // namespace detail

/// A vector of GF(9)^n, n <= 32, stored as two bit-sliced GF(3) vectors:
/// the 1-components (A part) and the w-components (B part).
class CodeVector {
public:
    constexpr CodeVector() = default;
    constexpr CodeVector(detail::TritPlanes a, detail::TritPlanes b) : a_(a), b_(b) {}

    static CodeVector from_symbols(std::span<const GF9> symbols);

    GF9 get(std::size_t i) const {
        const std::uint32_t m = std::uint32_t{1} << i;
        return GF9((a_.p & m) ? 1 : (a_.n & m) ? 2 : 0, (b_.p & m) ? 1 : (b_.n & m) ? 2 : 0);
    }
    void set(std::size_t i, GF9 x);

    constexpr detail::TritPlanes a_part() const { return a_; }
    constexpr detail::TritPlanes b_part() const { return b_; }

    constexpr std::uint32_t support() const { return a_.p | a_.n | b_.p | b_.n; }
    int weight() const { return std::popcount(support()); }
    constexpr bool is_zero() const { return support() == 0; }

    friend constexpr CodeVector operator+(CodeVector x, CodeVector y) {
        return {detail::trit_add(x.a_, y.a_), detail::trit_add(x.b_, y.b_)};
    }
    constexpr CodeVector operator-() const { return {{a_.n, a_.p}, {b_.n, b_.p}}; }
    friend constexpr CodeVector operator-(CodeVector x, CodeVector y) { return x + (-y); }
    friend constexpr CodeVector operator*(GF3 s, CodeVector x) {
        return s.value() == 0 ? CodeVector{} : s.value() == 1 ? x : -x;
    }
    CodeVector& operator+=(CodeVector y) { return *this = *this + y; }
    friend constexpr bool operator==(const CodeVector&, const CodeVector&) = default;

    std::vector<GF9> symbols(std::size_t n) const;

private:
    detail::TritPlanes a_;
    detail::TritPlanes b_;
};

/// Hermitian trace inner product of packed vectors.
GF3 trace_ip(const CodeVector& u, const CodeVector& v);

/// Lexicographic order on symbols, each compared as the pair (a, b).
bool symbol_lex_less(const CodeVector& x, const CodeVector& y, std::size_t n);

/// Incremental GF(3) row echelon basis over the 2n trits of CodeVectors.
class Gf3Echelon {
public:
    /// Returns true (and extends the basis) iff v is independent of the basis.
    bool insert(CodeVector v);
    bool contains(CodeVector v) const;
    std::size_t rank() const { return basis_.size(); }

private:
    CodeVector reduce(CodeVector v) const;
    std::vector<CodeVector> basis_;
    std::vector<int> pivots_;
};

class GeneratorMatrix {
public:
    GeneratorMatrix() = default;

    /// Keeps the first GF(3)-independent subset of rows, in order.
    /// Throws std::invalid_argument on empty input, bad length, or n > 32.
    static GeneratorMatrix from_rows(std::size_t n, std::span<const std::vector<GF9>> rows);
    static GeneratorMatrix from_rows(std::size_t n, std::span<const CodeVector> rows);

    std::size_t length() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<CodeVector>& rows() const { return rows_; }
    GF9 at(std::size_t r, std::size_t c) const { return rows_[r].get(c); }

    /// Rows are exactly Gamma + wI with Gamma symmetric, zero diagonal, over GF(3).
    bool is_standard_form() const;

private:
    std::size_t n_ = 0;
    std::vector<CodeVector> rows_;
};

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // counts[i] = A_i

    std::uint64_t total() const;
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
    friend auto operator<=>(const WeightDistribution&, const WeightDistribution&) = default;
};

struct EnumFamilyMatch {
    std::size_t n = 0;
    int alpha = 0;
    friend bool operator==(const EnumFamilyMatch&, const EnumFamilyMatch&) = default;
};

/// Permutation of coordinates combined with an Sp2(3) element per coordinate.
/// Coordinate j of the input, after applying local[j], lands at perm[j].
struct CodeTransform {
    std::vector<std::size_t> perm;
    std::vector<Sp2Element> local;

    CodeVector apply(const CodeVector& v) const;
    GeneratorMatrix apply(const GeneratorMatrix& g) const;
};

bool is_self_dual(const GeneratorMatrix& g);

/// Calls fn on every codeword (3^rank of them, zero included).
void for_each_codeword(const GeneratorMatrix& g, const std::function<void(const CodeVector&)>& fn);

/// For a standard-form matrix, calls fn once per GF(3) coefficient vector x with
/// 1 <= |supp x| <= max_support whose first nonzero entry is 1, passing the
/// codeword xG. Lexicographic order on x restricted to those supports.
void for_each_low_support_codeword(const GeneratorMatrix& g, std::size_t max_support,
                                   const std::function<void(const CodeVector&)>& fn);

/// All codewords of weight <= w, both signs, zero included.
/// Throws std::invalid_argument unless g is in standard form.
std::vector<CodeVector> codewords_up_to_weight(const GeneratorMatrix& g, std::size_t w);

WeightDistribution weight_distribution(const GeneratorMatrix& g);

std::size_t minimum_distance(const GeneratorMatrix& g);

/// True iff some nonzero codeword has weight <= w (standard form fast path).
bool has_codeword_of_weight_at_most(const GeneratorMatrix& g, std::size_t w);

/// All codewords of weight d, d+1, ... until the collected set spans the code.
/// Each layer is sorted with symbol_lex_less and contains both c and -c.
std::vector<CodeVector> generating_set_by_weight(const GeneratorMatrix& g);

/// Solves for alpha in the weight-enumerator families W_{n,alpha} for
/// n in {9,10,11,12}. Throws std::invalid_argument for other n.
std::optional<EnumFamilyMatch> match_enumerator_family(std::size_t n, const WeightDistribution& wd);

}  // namespace sdac9
