#include "sdac9/standard_form.hpp"

#include <stdexcept>
#include <utility>

namespace sdac9 {
namespace {

using Matrix = std::vector<std::vector<GF3>>;

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<GF3>(n)); }

// Inverts a square matrix over GF(3) in place of `rhs`: returns M^{-1} rhs, or
// false if M is singular.
bool solve_left(Matrix m, Matrix& rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const GF3 inv = m[col][col];  // 1 and 2 are self-inverse
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] * inv;
            rhs[col][j] = rhs[col][j] * inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const GF3 f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] = m[r][j] - f * m[col][j];
                rhs[r][j] = rhs[r][j] - f * rhs[col][j];
            }
        }
    }
    return true;
}

}  // namespace

void WeightedGraph::set_weight(std::size_t i, std::size_t j, std::uint8_t w) {
    if (i == j && w != 0) throw std::invalid_argument("WeightedGraph: loops are not allowed");
    if (w > 2) throw std::invalid_argument("WeightedGraph: weight must be 0, 1 or 2");
    adj_[i * n_ + j] = w;
    adj_[j * n_ + i] = w;
}

std::string WeightedGraph::to_trits() const {
    std::string s;
    s.reserve(n_ * (n_ - (n_ > 0)) / 2);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) s.push_back(static_cast<char>('0' + weight(i, j)));
    return s;
}

std::size_t length_from_trit_count(std::size_t len) {
    std::size_t n = 1;
    while (n * (n - 1) / 2 < len) ++n;
    if (n * (n - 1) / 2 != len) throw std::invalid_argument("trit string length is not n(n-1)/2");
    return n;
}

WeightedGraph WeightedGraph::from_trits(std::string_view trits) {
    return from_trits(trits, length_from_trit_count(trits.size()));
}

WeightedGraph WeightedGraph::from_trits(std::string_view trits, std::size_t n) {
    if (trits.size() != n * (n - (n > 0)) / 2) throw std::invalid_argument("trit string length does not match n");
    WeightedGraph wg(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const char c = trits[k++];
            if (c < '0' || c > '2') throw std::invalid_argument("trit string contains a character outside 0,1,2");
            wg.set_weight(i, j, static_cast<std::uint8_t>(c - '0'));
        }
    return wg;
}

WeightedGraph to_standard_form(const GeneratorMatrix& g) {
    if (!is_self_dual(g)) throw std::invalid_argument("to_standard_form: code is not self-dual");
    const std::size_t n = g.length();

    // C = A + wB, i.e. A = tr(wC) and B = tr(w^2 C) entrywise.
    Matrix a = zero_matrix(n), b = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = g.at(i, j).a();
            b[i][j] = g.at(i, j).b();
        }

    // Row-reduce (A|B) on B, lowest usable pivot column and lowest pivot row
    // first. Rows below `rank` end with B identically zero.
    std::vector<bool> pivot_col(n, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && b[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || b[r][col].is_zero()) continue;
            const GF3 f = b[r][col] * b[rank][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = a[r][j] - f * a[rank][j];
                b[r][j] = b[r][j] - f * b[rank][j];
            }
        }
        pivot_col[col] = true;
        ++rank;
    }

    // c -> w conj(c) on the remaining columns: (a_i, b_i) <- (-b_i, a_i).
    if (rank < n) {
        for (std::size_t col = 0; col < n; ++col) {
            if (pivot_col[col]) continue;
            for (std::size_t r = 0; r < n; ++r) {
                const GF3 ai = a[r][col];
                a[r][col] = -b[r][col];
                b[r][col] = ai;
            }
        }
    }

    Matrix gamma = a;
    if (!solve_left(b, gamma)) throw std::logic_error("to_standard_form: B is singular after column swaps");

    WeightedGraph wg(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(gamma[i][j] == gamma[j][i])) throw std::logic_error("to_standard_form: Gamma is not symmetric");
            wg.set_weight(i, j, gamma[i][j].value());
        }
    return wg;
}

GeneratorMatrix graph_to_generator(const WeightedGraph& wg) {
    const std::size_t n = wg.size();
    std::vector<CodeVector> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        CodeVector r;
        for (std::size_t j = 0; j < n; ++j)
            if (wg.weight(i, j) != 0) r.set(j, GF9(wg.weight(i, j), 0));
        r.set(i, GF9::omega());
        rows[i] = r;
    }
    return GeneratorMatrix::from_rows(n, std::span<const CodeVector>(rows));
}

bool is_connected(const WeightedGraph& wg) {
    const std::size_t n = wg.size();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u = 0; u < n; ++u)
            if (wg.weight(v, u) != 0 && !seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

WeightedGraph direct_sum(const WeightedGraph& a, const WeightedGraph& b) {
    const std::size_t na = a.size();
    WeightedGraph out(na + b.size());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = i + 1; j < na; ++j) out.set_weight(i, j, a.weight(i, j));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) out.set_weight(na + i, na + j, b.weight(i, j));
    return out;
}

WeightedGraph lengthen(const WeightedGraph& wg, const std::vector<std::uint8_t>& row) {
    const std::size_t m = wg.size();
    if (row.size() != m) throw std::invalid_argument("lengthen: row length differs from vertex count");
    WeightedGraph out(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) out.set_weight(i, j, wg.weight(i, j));
        out.set_weight(i, m, row[i]);
    }
    return out;
}

std::uint64_t lengthening_count(std::size_t m) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < m; ++i) p *= 3;
    return (p - 1) / 2;
}

LengtheningStream::LengtheningStream(const WeightedGraph& parent) : parent_(parent), row_(parent.size(), 0) {
    if (parent.size() == 0) throw std::invalid_argument("LengtheningStream: parent must have a vertex");
}

// Base-3 increment with the last coordinate least significant, skipping rows
// whose first nonzero trit is 2.
bool LengtheningStream::advance() {
    while (true) {
        std::size_t i = row_.size();
        while (i > 0 && row_[i - 1] == 2) row_[--i] = 0;
        if (i == 0) return false;
        ++row_[i - 1];
        for (const auto t : row_) {
            if (t == 1) return true;
            if (t == 2) break;
        }
    }
}

bool LengtheningStream::next(WeightedGraph& out) {
    if (done_ || !advance()) {
        done_ = true;
        return false;
    }
    out = lengthen(parent_, row_);
    return true;
}

}  // namespace sdac9
