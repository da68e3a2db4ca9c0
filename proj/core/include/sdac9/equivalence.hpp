#pragma once

// Code equivalence through canonical forms of equivalence graphs.

#include <cstddef>
#include <string>
#include <vector>

#include "sdac9/canon.hpp"
#include "sdac9/code.hpp"

namespace sdac9 {

/// Vertex of the coordinate graph for a nonzero GF(9) element.
inline std::uint32_t coordinate_vertex(GF9 x) { return static_cast<std::uint32_t>(x.code() - 1); }

/// The 8-vertex digraph with an arc (s1, sw) for each s in Sp2(3).
/// Throws std::logic_error unless its automorphism group has order 24.
ColoredDigraph build_coordinate_graph();

struct EquivalenceGraph {
    ColoredDigraph graph;
    /// Codeword vertex 8n + i corresponds to codewords[i].
    std::vector<CodeVector> codewords;
};

/// n coordinate-graph copies (color 0, vertex 8j + code - 1) and one color-1
/// vertex per codeword of generating_set_by_weight(g), linked by arc pairs to
/// vertex c_j of copy j for each nonzero coordinate.
EquivalenceGraph build_equivalence_graph(const GeneratorMatrix& g);

struct CanonicalCode {
    std::size_t n = 0;
    std::string trits;
    BigInt aut_order = 1;
};

CanonicalCode canonical_code(const GeneratorMatrix& g);

/// Throws std::invalid_argument if the lengths differ.
bool are_equivalent(const GeneratorMatrix& g1, const GeneratorMatrix& g2);

BigInt automorphism_group_order(const GeneratorMatrix& g);

}  // namespace sdac9
