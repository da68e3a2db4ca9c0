#include "sdac9/equivalence.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "sdac9/standard_form.hpp"

namespace sdac9 {
namespace {

void add_coordinate_copy(ColoredDigraph& g, std::uint32_t base) {
    for (const auto& s : sp2_enumerate())
        g.add_arc(base + coordinate_vertex(s.apply(GF9::one())), base + coordinate_vertex(s.apply(GF9::omega())));
}

}  // namespace

ColoredDigraph build_coordinate_graph() {
    ColoredDigraph g(8, 0);
    add_coordinate_copy(g, 0);
    if (canonize(g).aut_order != 24) throw std::logic_error("coordinate graph: automorphism group is not of order 24");
    return g;
}

EquivalenceGraph build_equivalence_graph(const GeneratorMatrix& g) {
    const auto n = static_cast<std::uint32_t>(g.length());
    EquivalenceGraph eg;
    eg.codewords = generating_set_by_weight(g);
    eg.graph = ColoredDigraph(8 * n, 0);
    for (std::uint32_t j = 0; j < n; ++j) add_coordinate_copy(eg.graph, 8 * j);
    for (const auto& c : eg.codewords) {
        const std::uint32_t v = eg.graph.add_vertex(1);
        for (std::uint32_t j = 0; j < n; ++j) {
            const GF9 x = c.get(j);
            if (!x.is_zero()) eg.graph.add_edge(v, 8 * j + coordinate_vertex(x));
        }
    }
    return eg;
}

CanonicalCode canonical_code(const GeneratorMatrix& g) {
    const std::size_t n = g.length();
    const EquivalenceGraph eg = build_equivalence_graph(g);
    const CanonForm cf = canonize(eg.graph);
    const auto& pos = cf.labeling;

    // Blocks in order of their first canonical position.
    std::vector<std::size_t> block_min(n);
    for (std::size_t j = 0; j < n; ++j)
        block_min[j] = *std::min_element(pos.begin() + 8 * j, pos.begin() + 8 * j + 8);
    std::vector<std::size_t> blocks(n);
    std::iota(blocks.begin(), blocks.end(), std::size_t{0});
    std::sort(blocks.begin(), blocks.end(), [&](std::size_t x, std::size_t y) { return block_min[x] < block_min[y]; });

    CodeTransform t;
    t.perm.resize(n);
    t.local.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t j = blocks[r];
        t.perm[j] = r;
        // Label the block so that the canonically first arc is (1, w).
        const auto at = [&](GF9 x) { return pos[8 * j + coordinate_vertex(x)]; };
        bool have = false;
        std::pair<std::uint32_t, std::uint32_t> best{};
        for (const auto& s : sp2_enumerate()) {
            const Sp2Element si = s.inverse();
            const std::pair key{at(si.apply(GF9::one())), at(si.apply(GF9::omega()))};
            if (!have || key < best) {
                best = key;
                t.local[j] = s;
                have = true;
            }
        }
    }

    std::vector<std::size_t> order(eg.codewords.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t off = 8 * n;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pos[off + x] < pos[off + y]; });
    std::vector<CodeVector> rows;
    rows.reserve(order.size());
    for (auto i : order) rows.push_back(t.apply(eg.codewords[i]));

    const GeneratorMatrix canon = GeneratorMatrix::from_rows(n, std::span<const CodeVector>(rows));
    if (canon.rank() != n) throw std::logic_error("canonical_code: generating set does not span the code");
    CanonicalCode out;
    out.n = n;
    out.trits = to_standard_form(canon).to_trits();
    out.aut_order = cf.aut_order;
    return out;
}

bool are_equivalent(const GeneratorMatrix& g1, const GeneratorMatrix& g2) {
    if (g1.length() != g2.length()) throw std::invalid_argument("are_equivalent: codes have different lengths");
    return canonical_code(g1).trits == canonical_code(g2).trits;
}

BigInt automorphism_group_order(const GeneratorMatrix& g) {
    return canonize(build_equivalence_graph(g).graph).aut_order;
}

}  // namespace sdac9
