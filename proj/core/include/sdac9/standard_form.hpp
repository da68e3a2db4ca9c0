#pragma once

// Standard-form generator matrices Gamma + wI and their 3-weighted graphs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdac9/code.hpp"

namespace sdac9 {

/// Loop-free undirected graph with edge weights in GF(3); weight 0 means no edge.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

    std::size_t size() const { return n_; }
    std::uint8_t weight(std::size_t i, std::size_t j) const { return adj_[i * n_ + j]; }
    /// Sets both (i,j) and (j,i). Throws std::invalid_argument for a nonzero loop.
    void set_weight(std::size_t i, std::size_t j, std::uint8_t w);

    /// Upper triangle, row-major: adj[0][1], adj[0][2], ..., adj[n-2][n-1].
    std::string to_trits() const;
    /// Infers n from the string length. Throws std::invalid_argument if the
    /// length is not C(n,2) for some n or a character is outside {0,1,2}.
    static WeightedGraph from_trits(std::string_view trits);
    static WeightedGraph from_trits(std::string_view trits, std::size_t n);

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// n such that n(n-1)/2 == len; throws std::invalid_argument if none.
std::size_t length_from_trit_count(std::size_t len);

/// Maps a self-dual code to an equivalent standard form and returns Gamma.
/// Throws std::invalid_argument if g is not self-dual.
WeightedGraph to_standard_form(const GeneratorMatrix& g);

GeneratorMatrix graph_to_generator(const WeightedGraph& wg);

bool is_connected(const WeightedGraph& wg);

WeightedGraph direct_sum(const WeightedGraph& a, const WeightedGraph& b);

/// Appends a vertex joined to the old vertices with the given weights.
WeightedGraph lengthen(const WeightedGraph& wg, const std::vector<std::uint8_t>& row);

/// (3^m - 1) / 2 for a parent on m vertices.
std::uint64_t lengthening_count(std::size_t m);

/// Streams the lengthenings of a graph on m >= 1 vertices: one new row r per
/// pair {r, -r}, r nonzero with first nonzero trit 1, in lexicographic order.
class LengtheningStream {
public:
    explicit LengtheningStream(const WeightedGraph& parent);

    bool next(WeightedGraph& out);
    /// Row used by the most recent successful next().
    const std::vector<std::uint8_t>& row() const { return row_; }

private:
    bool advance();

    WeightedGraph parent_;
    std::vector<std::uint8_t> row_;
    bool done_ = false;
};

}  // namespace sdac9
