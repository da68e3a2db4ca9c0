#include "sdac9/canon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sdac9 {

std::uint32_t ColoredDigraph::add_vertex(std::uint32_t color) {
    colors_.push_back(color);
    return static_cast<std::uint32_t>(colors_.size() - 1);
}

void ColoredDigraph::add_arc(std::uint32_t u, std::uint32_t v) {
    if (u == v) throw std::invalid_argument("ColoredDigraph: self-loops are not allowed");
    if (u >= size() || v >= size()) throw std::invalid_argument("ColoredDigraph: arc endpoint out of range");
    arcs_.emplace_back(u, v);
}

void ColoredDigraph::add_edge(std::uint32_t u, std::uint32_t v) {
    add_arc(u, v);
    add_arc(v, u);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ColoredDigraph::arcs() const {
    auto a = arcs_;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

bool ColoredDigraph::has_arc(std::uint32_t u, std::uint32_t v) const {
    return std::find(arcs_.begin(), arcs_.end(), std::pair{u, v}) != arcs_.end();
}

ColoredDigraph ColoredDigraph::permuted(std::span<const std::uint32_t> perm) const {
    if (perm.size() != size()) throw std::invalid_argument("permuted: permutation size mismatch");
    ColoredDigraph out(size());
    for (std::uint32_t v = 0; v < size(); ++v) out.colors_[perm[v]] = colors_[v];
    out.arcs_.reserve(arcs_.size());
    for (const auto& [u, v] : arcs_) out.arcs_.emplace_back(perm[u], perm[v]);
    return out;
}

namespace {

struct Csr {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> out_off, out_adj, in_off, in_adj;
    std::vector<std::uint32_t> color;
    std::uint32_t num_colors = 0;
};

Csr build_csr(const ColoredDigraph& g) {
    Csr c;
    c.n = static_cast<std::uint32_t>(g.size());
    c.color = g.colors();
    std::uint32_t max_color = 0;
    for (auto col : c.color) max_color = std::max(max_color, col);
    std::vector<bool> used(c.n == 0 ? 0 : max_color + 1, false);
    for (auto col : c.color) used[col] = true;
    for (bool u : used)
        if (!u) throw std::invalid_argument("canonize: color ids must be dense from 0");
    c.num_colors = c.n == 0 ? 0 : max_color + 1;

    const auto arcs = g.arcs();
    c.out_off.assign(c.n + 1, 0);
    c.in_off.assign(c.n + 1, 0);
    for (const auto& [u, v] : arcs) {
        ++c.out_off[u + 1];
        ++c.in_off[v + 1];
    }
    for (std::uint32_t i = 0; i < c.n; ++i) {
        c.out_off[i + 1] += c.out_off[i];
        c.in_off[i + 1] += c.in_off[i];
    }
    c.out_adj.resize(arcs.size());
    c.in_adj.resize(arcs.size());
    auto out_fill = c.out_off;
    auto in_fill = c.in_off;
    for (const auto& [u, v] : arcs) {
        c.out_adj[out_fill[u]++] = v;
        c.in_adj[in_fill[v]++] = u;
    }
    return c;
}

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return h ^ x;
}

// Ordered partition of positions 0..n-1 into cells [start, end).
struct Partition {
    std::vector<std::uint32_t> lab;        // position -> vertex
    std::vector<std::uint32_t> pos;        // vertex -> position
    std::vector<std::uint32_t> cell_of;    // position -> start of its cell
    std::vector<std::uint32_t> cell_end;   // cell start -> end
    std::uint32_t num_cells = 0;

    bool discrete() const { return num_cells == lab.size(); }
};

class Refiner {
public:
    explicit Refiner(const Csr& g)
        : g_(g), cnt_out_(g.n, 0), cnt_in_(g.n, 0), vmark_(g.n, 0), cmark_(g.n, 0), in_queue_(g.n, 0) {}

    Partition initial_partition() const {
        Partition p;
        const std::uint32_t n = g_.n;
        p.lab.resize(n);
        std::iota(p.lab.begin(), p.lab.end(), 0u);
        std::stable_sort(p.lab.begin(), p.lab.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return g_.color[a] < g_.color[b]; });
        p.pos.resize(n);
        p.cell_of.resize(n);
        p.cell_end.assign(n, 0);
        std::uint32_t start = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            p.pos[p.lab[i]] = i;
            if (i > 0 && g_.color[p.lab[i]] != g_.color[p.lab[i - 1]]) {
                p.cell_end[start] = i;
                start = i;
                ++p.num_cells;
            }
            p.cell_of[i] = start;
        }
        if (n > 0) {
            p.cell_end[start] = n;
            ++p.num_cells;
        }
        return p;
    }

    std::uint64_t refine_all(Partition& p) {
        std::vector<std::uint32_t> q;
        for (std::uint32_t s = 0; s < g_.n; s = p.cell_end[s]) q.push_back(s);
        return refine(p, q, mix(0x5d9a, p.num_cells));
    }

    // Splits off v as a singleton at the front of its cell and refines.
    std::uint64_t individualize(Partition& p, std::uint32_t v) {
        const std::uint32_t s = p.cell_of[p.pos[v]];
        const std::uint32_t e = p.cell_end[s];
        const std::uint32_t pv = p.pos[v];
        const std::uint32_t other = p.lab[s];
        p.lab[s] = v;
        p.lab[pv] = other;
        p.pos[v] = s;
        p.pos[other] = pv;
        p.cell_end[s] = s + 1;
        p.cell_end[s + 1] = e;
        for (std::uint32_t i = s + 1; i < e; ++i) p.cell_of[i] = s + 1;
        ++p.num_cells;
        std::vector<std::uint32_t> q{s};
        return refine(p, q, mix(0x1d1, s));
    }

private:
    std::uint64_t refine(Partition& p, std::vector<std::uint32_t>& queue, std::uint64_t h) {
        const std::uint32_t n = g_.n;
        for (auto s : queue) in_queue_[s] = 1;
        std::size_t head = 0;
        std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
        while (head < queue.size()) {
            const std::uint32_t w = queue[head++];
            in_queue_[w] = 0;
            if (p.num_cells == n) continue;
            const std::uint32_t wend = p.cell_end[w];

            touched_.clear();
            for (std::uint32_t i = w; i < wend; ++i) {
                const std::uint32_t x = p.lab[i];
                for (std::uint32_t k = g_.in_off[x]; k < g_.in_off[x + 1]; ++k) {
                    const std::uint32_t u = g_.in_adj[k];
                    if (!vmark_[u]) {
                        vmark_[u] = 1;
                        touched_.push_back(u);
                    }
                    ++cnt_out_[u];
                }
                for (std::uint32_t k = g_.out_off[x]; k < g_.out_off[x + 1]; ++k) {
                    const std::uint32_t u = g_.out_adj[k];
                    if (!vmark_[u]) {
                        vmark_[u] = 1;
                        touched_.push_back(u);
                    }
                    ++cnt_in_[u];
                }
            }
            cells_.clear();
            for (auto u : touched_) {
                const std::uint32_t c = p.cell_of[p.pos[u]];
                if (!cmark_[c]) {
                    cmark_[c] = 1;
                    cells_.push_back(c);
                }
            }
            std::sort(cells_.begin(), cells_.end());
            h = mix(h, w);
            h = mix(h, cells_.size());

            for (const std::uint32_t c : cells_) {
                cmark_[c] = 0;
                const std::uint32_t e = p.cell_end[c];
                keyed.clear();
                for (std::uint32_t i = c; i < e; ++i) {
                    const std::uint32_t x = p.lab[i];
                    keyed.emplace_back((std::uint64_t{cnt_out_[x]} << 32) | cnt_in_[x], x);
                }
                bool uniform = true;
                for (std::size_t i = 1; i < keyed.size() && uniform; ++i) uniform = keyed[i].first == keyed[0].first;
                if (uniform) {
                    h = mix(h, (std::uint64_t{c} << 32) ^ keyed[0].first);
                    continue;
                }
                std::sort(keyed.begin(), keyed.end());
                std::uint32_t frag = c;
                std::uint32_t largest = c, largest_size = 0;
                for (std::uint32_t i = c; i < e; ++i) {
                    const auto& [key, x] = keyed[i - c];
                    p.lab[i] = x;
                    p.pos[x] = i;
                    const bool boundary = i + 1 == e || keyed[i + 1 - c].first != key;
                    if (boundary) {
                        const std::uint32_t fend = i + 1;
                        p.cell_end[frag] = fend;
                        for (std::uint32_t j = frag; j < fend; ++j) p.cell_of[j] = frag;
                        h = mix(h, (std::uint64_t{frag} << 32) ^ (fend - frag));
                        h = mix(h, key);
                        if (fend - frag > largest_size) {
                            largest_size = fend - frag;
                            largest = frag;
                        }
                        if (frag != c) ++p.num_cells;
                        frag = fend;
                    }
                }
                const bool was_queued = in_queue_[c] != 0;
                for (std::uint32_t f = c; f < e; f = p.cell_end[f]) {
                    if (in_queue_[f]) continue;
                    if (!was_queued && f == largest) continue;
                    in_queue_[f] = 1;
                    queue.push_back(f);
                }
            }
            for (auto u : touched_) {
                vmark_[u] = 0;
                cnt_out_[u] = 0;
                cnt_in_[u] = 0;
            }
        }
        for (std::size_t i = head; i < queue.size(); ++i) in_queue_[queue[i]] = 0;
        return mix(h, p.num_cells);
    }

    const Csr& g_;
    std::vector<std::uint32_t> cnt_out_, cnt_in_;
    std::vector<std::uint8_t> vmark_, cmark_, in_queue_;
    std::vector<std::uint32_t> touched_, cells_;
};

// Smallest non-singleton cell, lowest position on ties.
std::uint32_t target_cell(const Partition& p) {
    const auto n = static_cast<std::uint32_t>(p.lab.size());
    std::uint32_t best = n, best_size = n + 1;
    for (std::uint32_t s = 0; s < n; s = p.cell_end[s]) {
        const std::uint32_t sz = p.cell_end[s] - s;
        if (sz > 1 && sz < best_size) {
            best = s;
            best_size = sz;
            if (sz == 2) break;
        }
    }
    return best;
}

using LeafKey = std::vector<std::uint64_t>;

LeafKey leaf_key(const Csr& g, const std::vector<std::uint32_t>& lab, const std::vector<std::uint32_t>& pos) {
    LeafKey key;
    key.reserve(g.out_adj.size());
    std::vector<std::uint32_t> nbr;
    const std::uint64_t n = g.n;
    for (std::uint32_t p = 0; p < g.n; ++p) {
        const std::uint32_t v = lab[p];
        nbr.clear();
        for (std::uint32_t k = g.out_off[v]; k < g.out_off[v + 1]; ++k) nbr.push_back(pos[g.out_adj[k]]);
        std::sort(nbr.begin(), nbr.end());
        for (auto q : nbr) key.push_back(p * n + q);
    }
    return key;
}

void put_varint(CanonBytes& out, std::uint64_t x) {
    while (x >= 0x80) {
        out.push_back(static_cast<char>((x & 0x7f) | 0x80));
        x >>= 7;
    }
    out.push_back(static_cast<char>(x));
}

CanonBytes serialize(const Csr& g, const std::vector<std::uint32_t>& lab, const LeafKey& key) {
    CanonBytes out;
    out.push_back(static_cast<char>(kCanonFormatId));
    put_varint(out, g.n);
    for (std::uint32_t p = 0; p < g.n; ++p) put_varint(out, g.color[lab[p]]);
    put_varint(out, key.size());
    for (auto k : key) {
        put_varint(out, k / g.n);
        put_varint(out, k % g.n);
    }
    return out;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::uint32_t> parent_;
};

class Search {
public:
    explicit Search(const Csr& g) : g_(g), refiner_(g) {}

    CanonForm run() {
        CanonForm out;
        if (g_.n == 0) {
            out.bytes = serialize(g_, {}, {});
            return out;
        }
        parts_.resize(1);
        parts_[0] = refiner_.initial_partition();
        cur_trace_.push_back(refiner_.refine_all(parts_[0]));

        // First path: always the first vertex of the target cell.
        std::size_t depth = 0;
        while (!parts_[depth].discrete()) {
            const std::uint32_t t = target_cell(parts_[depth]);
            const std::uint32_t v = parts_[depth].lab[t];
            ensure_depth(depth + 1);
            parts_[depth + 1] = parts_[depth];
            cur_trace_.push_back(refiner_.individualize(parts_[depth + 1], v));
            cur_path_.push_back(v);
            ++depth;
        }
        first_path_ = cur_path_;
        first_trace_ = cur_trace_;
        first_parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(depth + 1));
        first_lab_ = parts_[depth].lab;
        first_key_ = leaf_key(g_, parts_[depth].lab, parts_[depth].pos);
        best_path_ = first_path_;
        best_trace_ = first_trace_;
        best_lab_ = first_lab_;
        best_key_ = first_key_;

        BigInt order = 1;
        for (std::size_t level = first_path_.size(); level-- > 0;) {
            const Partition& node = first_parts_[level];
            const std::uint32_t t = target_cell(node);
            const std::uint32_t tend = node.cell_end[t];
            cur_path_.assign(first_path_.begin(), first_path_.begin() + static_cast<std::ptrdiff_t>(level));
            cur_trace_.assign(first_trace_.begin(), first_trace_.begin() + static_cast<std::ptrdiff_t>(level + 1));

            std::vector<std::uint32_t> explored{first_path_[level]};
            OrbitCache orbits;
            for (std::uint32_t i = t; i < tend; ++i) {
                const std::uint32_t v = node.lab[i];
                if (v == first_path_[level]) continue;
                if (in_explored_orbit(orbits, v, explored)) continue;
                ensure_depth(level + 1);
                parts_[level] = node;
                explore(level, v, true);
                explored.push_back(v);
            }
            refresh(orbits);
            const std::uint32_t root = orbits.uf.find(first_path_[level]);
            std::uint64_t orbit_size = 0;
            for (std::uint32_t i = t; i < tend; ++i)
                if (orbits.uf.find(node.lab[i]) == root) ++orbit_size;
            order *= orbit_size;
        }

        out.labeling.assign(g_.n, 0);
        for (std::uint32_t p = 0; p < g_.n; ++p) out.labeling[best_lab_[p]] = p;
        out.bytes = serialize(g_, best_lab_, best_key_);
        out.aut_order = order;
        return out;
    }

private:
    static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);

    struct OrbitCache {
        std::size_t gens_seen = static_cast<std::size_t>(-1);
        std::size_t prefix = 0;
        UnionFind uf{0};
    };

    void ensure_depth(std::size_t d) {
        if (parts_.size() <= d) parts_.resize(d + 1);
    }

    // Orbits of the group generated by the stored automorphisms that fix the
    // current path pointwise.
    void refresh(OrbitCache& oc) {
        if (oc.gens_seen == gens_.size() && oc.prefix == cur_path_.size()) return;
        oc.gens_seen = gens_.size();
        oc.prefix = cur_path_.size();
        oc.uf = UnionFind(g_.n);
        for (const auto& gen : gens_) {
            bool fixes = true;
            for (auto x : cur_path_)
                if (gen[x] != x) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (std::uint32_t x = 0; x < g_.n; ++x) oc.uf.unite(x, gen[x]);
        }
    }

    bool in_explored_orbit(OrbitCache& oc, std::uint32_t v, const std::vector<std::uint32_t>& explored) {
        if (gens_.empty()) return false;
        refresh(oc);
        const std::uint32_t r = oc.uf.find(v);
        for (auto u : explored)
            if (oc.uf.find(u) == r) return true;
        return false;
    }

    // -1, 0, +1 comparing the current trace with the best trace as sequences,
    // restricted to the current length (a longer current trace is greater).
    int compare_with_best() const {
        for (std::size_t i = 0; i < cur_trace_.size(); ++i) {
            if (i >= best_trace_.size()) return 1;
            if (cur_trace_[i] != best_trace_[i]) return cur_trace_[i] < best_trace_[i] ? -1 : 1;
        }
        return 0;
    }

    static std::size_t divergence(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
        return i;
    }

    // Records gamma with gamma(from[p]) = to[p]; returns whether gamma maps
    // the given path onto the current path.
    bool record_automorphism(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to,
                             const std::vector<std::uint32_t>& path) {
        std::vector<std::uint32_t> gamma(g_.n);
        for (std::uint32_t p = 0; p < g_.n; ++p) gamma[from[p]] = to[p];
        bool maps_path = path.size() == cur_path_.size();
        for (std::size_t i = 0; maps_path && i < path.size(); ++i) maps_path = gamma[path[i]] == cur_path_[i];
        gens_.push_back(std::move(gamma));
        return maps_path;
    }

    // Explores the child of the node at `depth` (stored in parts_[depth])
    // obtained by individualizing v. Returns the depth of the node whose child
    // loop should continue, or kNoJump.
    std::size_t explore(std::size_t depth, std::uint32_t v, bool eq_first) {
        const std::size_t d = depth + 1;
        ensure_depth(d);
        parts_[d] = parts_[depth];
        const std::uint64_t t = refiner_.individualize(parts_[d], v);
        cur_path_.push_back(v);
        cur_trace_.push_back(t);
        struct Pop {
            Search* s;
            ~Pop() {
                s->cur_path_.pop_back();
                s->cur_trace_.pop_back();
            }
        } pop{this};

        eq_first = eq_first && d < first_trace_.size() && first_trace_[d] == t;
        const int cmp = compare_with_best();
        if (!eq_first && cmp > 0) return kNoJump;

        Partition& node = parts_[d];
        if (node.discrete()) {
            LeafKey key = leaf_key(g_, node.lab, node.pos);
            if (eq_first && d + 1 == first_trace_.size() && key == first_key_) {
                if (record_automorphism(first_lab_, node.lab, first_path_)) return divergence(cur_path_, first_path_);
                return kNoJump;
            }
            if (cmp == 0 && d + 1 == best_trace_.size()) {
                if (key == best_key_) {
                    if (record_automorphism(best_lab_, node.lab, best_path_)) return divergence(cur_path_, best_path_);
                    return kNoJump;
                }
                if (key < best_key_) set_best(node, std::move(key));
            } else if (cmp < 0) {
                set_best(node, std::move(key));
            }
            return kNoJump;
        }

        const std::uint32_t tc = target_cell(node);
        const std::uint32_t tend = node.cell_end[tc];
        std::vector<std::uint32_t> children(node.lab.begin() + tc, node.lab.begin() + tend);
        std::vector<std::uint32_t> explored;
        OrbitCache orbits;
        for (const std::uint32_t w : children) {
            if (in_explored_orbit(orbits, w, explored)) continue;
            const std::size_t jump = explore(d, w, eq_first);
            if (jump != kNoJump && jump < d) return jump;
            explored.push_back(w);
            // A new best leaf below this node may make later siblings prunable.
            if (!eq_first && compare_with_best() > 0) return kNoJump;
        }
        return kNoJump;
    }

    void set_best(const Partition& leaf, LeafKey key) {
        best_key_ = std::move(key);
        best_lab_ = leaf.lab;
        best_path_ = cur_path_;
        best_trace_ = cur_trace_;
    }

    const Csr& g_;
    Refiner refiner_;
    std::vector<Partition> parts_;
    std::vector<Partition> first_parts_;
    std::vector<std::uint32_t> cur_path_, first_path_, best_path_;
    std::vector<std::uint64_t> cur_trace_, first_trace_, best_trace_;
    std::vector<std::uint32_t> first_lab_, best_lab_;
    LeafKey first_key_, best_key_;
    std::vector<std::vector<std::uint32_t>> gens_;
};

}  // namespace

CanonForm canonize(const ColoredDigraph& g) {
    const Csr csr = build_csr(g);
    Search s(csr);
    return s.run();
}

CanonForm brute_force_canonize(const ColoredDigraph& g) {
    if (g.size() > 8) throw std::invalid_argument("brute_force_canonize: at most 8 vertices");
    const Csr csr = build_csr(g);
    const std::uint32_t n = csr.n;

    // Vertices grouped by color; the positions of each group are fixed.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return csr.color[a] < csr.color[b]; });
    std::vector<std::pair<std::uint32_t, std::uint32_t>> groups;  // [start, end) in `order`
    for (std::uint32_t i = 0; i < n;) {
        std::uint32_t j = i;
        while (j < n && csr.color[order[j]] == csr.color[order[i]]) ++j;
        groups.emplace_back(i, j);
        std::sort(order.begin() + i, order.begin() + j);
        i = j;
    }

    LeafKey best;
    std::vector<std::uint32_t> best_lab;
    std::uint64_t count = 0;
    std::vector<std::uint32_t> pos(n);
    bool have = false;

    // Odometer over the product of per-group permutations.
    while (true) {
        for (std::uint32_t p = 0; p < n; ++p) pos[order[p]] = p;
        LeafKey key = leaf_key(csr, order, pos);
        if (!have || key < best) {
            best = std::move(key);
            best_lab = order;
            count = 1;
            have = true;
        } else if (key == best) {
            ++count;
        }
        std::size_t gi = 0;
        for (; gi < groups.size(); ++gi) {
            auto [s, e] = groups[gi];
            if (std::next_permutation(order.begin() + s, order.begin() + e)) break;
        }
        if (gi == groups.size()) break;
    }

    CanonForm out;
    out.labeling.assign(n, 0);
    for (std::uint32_t p = 0; p < n; ++p) out.labeling[best_lab[p]] = p;
    out.bytes = serialize(csr, best_lab, best);
    out.aut_order = count;
    return out;
}

ColoredDigraph encode_weighted_graph(const WeightedGraph& wg) {
    const auto n = static_cast<std::uint32_t>(wg.size());
    ColoredDigraph g(n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const auto w = wg.weight(i, j);
            if (w == 1) {
                g.add_edge(i, j);
            } else if (w == 2) {
                const std::uint32_t x = g.add_vertex(1);
                g.add_edge(i, x);
                g.add_edge(j, x);
            }
        }
    return g;
}

CanonBytes weighted_canonical_form(const WeightedGraph& wg) { return canonize(encode_weighted_graph(wg)).bytes; }

}  // namespace sdac9
