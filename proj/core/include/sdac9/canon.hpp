#pragma once

// Canonical labeling of vertex-colored directed graphs.
//
// canonize() is an individualization-refinement search: the ordered partition
// is refined to an equitable one (counting in- and out-neighbours per cell),
// a target cell is individualized, and the search tree is pruned by refinement
// traces and by automorphisms discovered from equal leaves. The automorphism
// group order is the product of the first-path stabilizer orbit sizes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdac9/standard_form.hpp"

namespace sdac9 {

using BigInt = boost::multiprecision::cpp_int;

class ColoredDigraph {
public:
    ColoredDigraph() = default;
    explicit ColoredDigraph(std::size_t vertices, std::uint32_t color = 0) : colors_(vertices, color) {}

    std::size_t size() const { return colors_.size(); }
    std::uint32_t add_vertex(std::uint32_t color);
    void set_color(std::uint32_t v, std::uint32_t color) { colors_.at(v) = color; }
    std::uint32_t color(std::uint32_t v) const { return colors_[v]; }
    const std::vector<std::uint32_t>& colors() const { return colors_; }

    /// Duplicate arcs are merged. Throws std::invalid_argument on a self-loop
    /// or an out-of-range endpoint.
    void add_arc(std::uint32_t u, std::uint32_t v);
    /// Arc pair (u,v), (v,u).
    void add_edge(std::uint32_t u, std::uint32_t v);

    /// Sorted, duplicate-free arc list.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs() const;
    bool has_arc(std::uint32_t u, std::uint32_t v) const;

    /// Image under the relabeling v -> perm[v].
    ColoredDigraph permuted(std::span<const std::uint32_t> perm) const;

private:
    std::vector<std::uint32_t> colors_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs_;
};

using CanonBytes = std::string;

struct CanonForm {
    /// Format id 0x01, then LEB128 varints: vertex count, color per canonical
    /// position, arc count, arcs as (position, position) in sorted order.
    CanonBytes bytes;
    /// labeling[v] = canonical position of vertex v.
    std::vector<std::uint32_t> labeling;
    BigInt aut_order = 1;
};

inline constexpr std::uint8_t kCanonFormatId = 0x01;

/// Throws std::invalid_argument if color ids are not dense from 0.
CanonForm canonize(const ColoredDigraph& g);

/// Exhaustive oracle over all color-preserving permutations.
/// Throws std::invalid_argument for more than 8 vertices.
CanonForm brute_force_canonize(const ColoredDigraph& g);

/// Vertices of wg get color 0. A weight-1 edge becomes an arc pair; a weight-2
/// edge {i,j} becomes a fresh color-1 vertex x with arc pairs to i and j.
ColoredDigraph encode_weighted_graph(const WeightedGraph& wg);

CanonBytes weighted_canonical_form(const WeightedGraph& wg);

}  // namespace sdac9
