#pragma once

// Shared helpers for the test binaries: random objects and independent
// reference implementations.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sdac9/canon.hpp"
#include "sdac9/code.hpp"
#include "sdac9/database.hpp"
#include "sdac9/standard_form.hpp"

#ifndef SDAC9_TEST_DATA_DIR
#define SDAC9_TEST_DATA_DIR "tests/data"
#endif

namespace sdac9::test {

inline std::string data_path(const std::string& name) { return std::string(SDAC9_TEST_DATA_DIR) + "/" + name; }

inline GeneratorMatrix load_matrix(const std::string& name) { return read_matrix_file(data_path(name)); }

// GF(9) as pairs (a, b) with w^2 = w + 1, written out from the definition.
struct RefGF9 {
    int a = 0, b = 0;
};

inline RefGF9 ref_mul(RefGF9 x, RefGF9 y) {
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, and w^2 = 1 + w.
    const int c0 = x.a * y.a + x.b * y.b;
    const int c1 = x.a * y.b + x.b * y.a + x.b * y.b;
    return {c0 % 3, c1 % 3};
}

inline RefGF9 ref_pow(RefGF9 x, int k) {
    RefGF9 r{1, 0};
    for (int i = 0; i < k; ++i) r = ref_mul(r, x);
    return r;
}

inline RefGF9 to_ref(GF9 x) { return {x.a().value(), x.b().value()}; }

// tr(w^2 u conj(v)) for one coordinate, computed through field arithmetic.
inline int ref_trace_term(GF9 u, GF9 v) {
    const RefGF9 w2 = ref_pow({0, 1}, 2);
    const RefGF9 p = ref_mul(w2, ref_mul(to_ref(u), ref_pow(to_ref(v), 3)));
    const RefGF9 t = p;
    const RefGF9 t3 = ref_pow(p, 3);
    return (t.a + t3.a) % 3;
}

inline int ref_trace_ip(const std::vector<GF9>& u, const std::vector<GF9>& v) {
    int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += ref_trace_term(u[i], v[i]);
    return s % 3;
}

inline WeightedGraph random_graph(std::size_t n, std::mt19937_64& rng) {
    WeightedGraph wg(n);
    std::uniform_int_distribution<int> w(0, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) wg.set_weight(i, j, static_cast<std::uint8_t>(w(rng)));
    return wg;
}

inline CodeTransform random_transform(std::size_t n, std::mt19937_64& rng) {
    CodeTransform t;
    t.perm.resize(n);
    std::iota(t.perm.begin(), t.perm.end(), std::size_t{0});
    std::shuffle(t.perm.begin(), t.perm.end(), rng);
    std::uniform_int_distribution<std::size_t> pick(0, 23);
    for (std::size_t j = 0; j < n; ++j) t.local.push_back(sp2_enumerate()[pick(rng)]);
    return t;
}

// Replaces the basis of g by random invertible GF(3) combinations of its rows.
inline GeneratorMatrix random_basis(const GeneratorMatrix& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(0, 2);
    std::vector<CodeVector> rows;
    Gf3Echelon e;
    while (rows.size() < g.rank()) {
        CodeVector v;
        for (const auto& r : g.rows()) v += GF3(c(rng)) * r;
        if (e.insert(v)) rows.push_back(v);
    }
    return GeneratorMatrix::from_rows(g.length(), std::span<const CodeVector>(rows));
}

// A random self-dual code that is typically not in standard form.
inline GeneratorMatrix random_code(std::size_t n, std::mt19937_64& rng) {
    const GeneratorMatrix g = graph_to_generator(random_graph(n, rng));
    return random_basis(random_transform(n, rng).apply(g), rng);
}

inline ColoredDigraph random_digraph(std::size_t v, std::mt19937_64& rng, double p = 0.35, std::uint32_t colors = 2) {
    std::uniform_int_distribution<std::uint32_t> col(0, colors - 1);
    std::vector<std::uint32_t> c(v);
    for (auto& x : c) x = col(rng);
    // Make color ids dense.
    std::vector<std::uint32_t> used(c);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    ColoredDigraph g(v);
    for (std::uint32_t i = 0; i < v; ++i)
        g.set_color(i, static_cast<std::uint32_t>(std::lower_bound(used.begin(), used.end(), c[i]) - used.begin()));
    std::bernoulli_distribution arc(p);
    for (std::uint32_t i = 0; i < v; ++i)
        for (std::uint32_t j = 0; j < v; ++j)
            if (i != j && arc(rng)) g.add_arc(i, j);
    return g;
}

inline std::vector<std::uint32_t> random_permutation(std::size_t v, std::mt19937_64& rng) {
    std::vector<std::uint32_t> p(v);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace sdac9::test
