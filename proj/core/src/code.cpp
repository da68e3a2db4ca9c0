#include "sdac9/code.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sdac9 {
namespace {

using detail::TritPlanes;

GF3 trit_at(TritPlanes t, std::size_t i) {
    const std::uint32_t m = std::uint32_t{1} << i;
    return GF3((t.p & m) ? 1 : (t.n & m) ? 2 : 0);
}

void set_trit(TritPlanes& t, std::size_t i, GF3 v) {
    const std::uint32_t m = std::uint32_t{1} << i;
    t.p &= ~m;
    t.n &= ~m;
    if (v.value() == 1) t.p |= m;
    if (v.value() == 2) t.n |= m;
}

// Position of the first nonzero trit when the vector is read as A part then B
// part, or -1 for zero.
int leading_index(const CodeVector& v) {
    const std::uint32_t a = v.a_part().p | v.a_part().n;
    if (a != 0) return std::countr_zero(a);
    const std::uint32_t b = v.b_part().p | v.b_part().n;
    if (b != 0) return 32 + std::countr_zero(b);
    return -1;
}

GF3 trit_at_index(const CodeVector& v, int idx) {
    return idx < 32 ? trit_at(v.a_part(), static_cast<std::size_t>(idx))
                    : trit_at(v.b_part(), static_cast<std::size_t>(idx - 32));
}

// Depth-first walk over coefficient vectors of a standard-form matrix, in
// lexicographic order, restricted to 1 <= |supp| <= max_support and first
// nonzero coefficient 1. fn returns true to stop early.
template <class F>
bool low_support_walk(const std::vector<CodeVector>& rows, std::size_t pos, std::size_t used,
                      std::size_t max_support, const CodeVector& acc, F& fn) {
    const std::size_t n = rows.size();
    if (pos == n) return used > 0 && fn(acc);
    if (low_support_walk(rows, pos + 1, used, max_support, acc, fn)) return true;
    if (used == max_support) return false;
    if (low_support_walk(rows, pos + 1, used + 1, max_support, acc + rows[pos], fn)) return true;
    if (used > 0 && low_support_walk(rows, pos + 1, used + 1, max_support, acc - rows[pos], fn)) return true;
    return false;
}

void check_standard(const GeneratorMatrix& g, const char* what) {
    if (!g.is_standard_form()) throw std::invalid_argument(std::string(what) + ": matrix is not in standard form");
}

std::size_t min_distance_standard(const GeneratorMatrix& g) {
    for (std::size_t w = 1; w <= g.length(); ++w)
        if (has_codeword_of_weight_at_most(g, w)) return w;
    return g.length();
}

}  // namespace

CodeVector CodeVector::from_symbols(std::span<const GF9> symbols) {
    if (symbols.size() > kMaxLength) throw std::invalid_argument("CodeVector: length exceeds 32");
    CodeVector v;
    for (std::size_t i = 0; i < symbols.size(); ++i) v.set(i, symbols[i]);
    return v;
}

void CodeVector::set(std::size_t i, GF9 x) {
    set_trit(a_, i, x.a());
    set_trit(b_, i, x.b());
}

std::vector<GF9> CodeVector::symbols(std::size_t n) const {
    std::vector<GF9> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = get(i);
    return out;
}

GF3 trace_ip(const CodeVector& u, const CodeVector& v) {
    // Per coordinate tr(w^2 u conj(v)) = b_u a_v - a_u b_v.
    return GF3(detail::trit_dot(u.b_part(), v.a_part()) - detail::trit_dot(u.a_part(), v.b_part()));
}

bool symbol_lex_less(const CodeVector& x, const CodeVector& y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const GF9 s = x.get(i), t = y.get(i);
        if (s == t) continue;
        if (!(s.a() == t.a())) return s.a().value() < t.a().value();
        return s.b().value() < t.b().value();
    }
    return false;
}

CodeVector Gf3Echelon::reduce(CodeVector v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const GF3 c = trit_at_index(v, pivots_[i]);
        if (!c.is_zero()) v = v - c * basis_[i];
    }
    return v;
}

bool Gf3Echelon::insert(CodeVector v) {
    v = reduce(v);
    const int lead = leading_index(v);
    if (lead < 0) return false;
    if (trit_at_index(v, lead).value() == 2) v = -v;
    basis_.push_back(v);
    pivots_.push_back(lead);
    return true;
}

bool Gf3Echelon::contains(CodeVector v) const { return reduce(v).is_zero(); }

GeneratorMatrix GeneratorMatrix::from_rows(std::size_t n, std::span<const CodeVector> rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: empty input");
    if (n == 0 || n > kMaxLength) throw std::invalid_argument("from_rows: length must be in 1..32");
    const std::uint32_t mask = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    GeneratorMatrix g;
    g.n_ = n;
    Gf3Echelon ech;
    for (const CodeVector& r : rows) {
        if ((r.support() & ~mask) != 0) throw std::invalid_argument("from_rows: row longer than n");
        if (ech.insert(r)) g.rows_.push_back(r);
    }
    return g;
}

GeneratorMatrix GeneratorMatrix::from_rows(std::size_t n, std::span<const std::vector<GF9>> rows) {
    std::vector<CodeVector> packed;
    packed.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("from_rows: row length differs from n");
        packed.push_back(CodeVector::from_symbols(r));
    }
    return from_rows(n, std::span<const CodeVector>(packed));
}

bool GeneratorMatrix::is_standard_form() const {
    if (rows_.size() != n_) return false;
    for (std::size_t i = 0; i < n_; ++i) {
        const auto b = rows_[i].b_part();
        if (b.n != 0 || b.p != (std::uint32_t{1} << i)) return false;
        if (!rows_[i].get(i).a().is_zero()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!(rows_[i].get(j).a() == rows_[j].get(i).a())) return false;
    }
    return true;
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

CodeVector CodeTransform::apply(const CodeVector& v) const {
    CodeVector out;
    for (std::size_t j = 0; j < perm.size(); ++j) out.set(perm[j], local[j].apply(v.get(j)));
    return out;
}

GeneratorMatrix CodeTransform::apply(const GeneratorMatrix& g) const {
    if (perm.size() != g.length() || local.size() != g.length())
        throw std::invalid_argument("CodeTransform: length mismatch");
    std::vector<CodeVector> rows;
    rows.reserve(g.rank());
    for (const auto& r : g.rows()) rows.push_back(apply(r));
    return GeneratorMatrix::from_rows(g.length(), std::span<const CodeVector>(rows));
}

bool is_self_dual(const GeneratorMatrix& g) {
    if (g.rank() != g.length()) return false;
    const auto& rows = g.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (!trace_ip(rows[i], rows[j]).is_zero()) return false;
    return true;
}

void for_each_codeword(const GeneratorMatrix& g, const std::function<void(const CodeVector&)>& fn) {
    const auto& rows = g.rows();
    const std::size_t k = rows.size();
    // Iterative odometer over coefficient vectors in GF(3)^k.
    std::vector<std::uint8_t> coef(k, 0);
    CodeVector acc;
    fn(acc);
    while (true) {
        std::size_t i = 0;
        while (i < k && coef[i] == 2) {
            coef[i] = 0;
            acc = acc - GF3(2) * rows[i];
            ++i;
        }
        if (i == k) return;
        ++coef[i];
        acc += rows[i];
        fn(acc);
    }
}

void for_each_low_support_codeword(const GeneratorMatrix& g, std::size_t max_support,
                                   const std::function<void(const CodeVector&)>& fn) {
    check_standard(g, "for_each_low_support_codeword");
    auto visit = [&](const CodeVector& c) {
        fn(c);
        return false;
    };
    low_support_walk(g.rows(), 0, 0, max_support, CodeVector{}, visit);
}

std::vector<CodeVector> codewords_up_to_weight(const GeneratorMatrix& g, std::size_t w) {
    check_standard(g, "codewords_up_to_weight");
    std::vector<CodeVector> out{CodeVector{}};
    auto keep = [&](const CodeVector& c) {
        if (static_cast<std::size_t>(c.weight()) <= w) {
            out.push_back(c);
            out.push_back(-c);
        }
        return false;
    };
    // A combination of s rows of a standard-form matrix has weight >= s.
    low_support_walk(g.rows(), 0, 0, w, CodeVector{}, keep);
    return out;
}

WeightDistribution weight_distribution(const GeneratorMatrix& g) {
    WeightDistribution wd;
    wd.counts.assign(g.length() + 1, 0);
    for_each_codeword(g, [&](const CodeVector& c) { ++wd.counts[static_cast<std::size_t>(c.weight())]; });
    return wd;
}

bool has_codeword_of_weight_at_most(const GeneratorMatrix& g, std::size_t w) {
    if (g.is_standard_form()) {
        auto found = [w](const CodeVector& c) { return static_cast<std::size_t>(c.weight()) <= w; };
        return low_support_walk(g.rows(), 0, 0, w, CodeVector{}, found);
    }
    bool found = false;
    for_each_codeword(g, [&](const CodeVector& c) {
        if (!c.is_zero() && static_cast<std::size_t>(c.weight()) <= w) found = true;
    });
    return found;
}

std::size_t minimum_distance(const GeneratorMatrix& g) {
    if (g.is_standard_form()) return min_distance_standard(g);
    const auto wd = weight_distribution(g);
    for (std::size_t i = 1; i < wd.counts.size(); ++i)
        if (wd.counts[i] > 0) return i;
    throw std::invalid_argument("minimum_distance: code has no nonzero codeword");
}

std::vector<CodeVector> generating_set_by_weight(const GeneratorMatrix& g) {
    const std::size_t n = g.length();
    const std::size_t k = g.rank();
    auto by_lex = [n](const CodeVector& x, const CodeVector& y) { return symbol_lex_less(x, y, n); };

    std::vector<std::vector<CodeVector>> layers(n + 1);
    std::size_t first_weight = 0;
    const bool standard = g.is_standard_form();
    if (!standard) {
        for_each_codeword(g, [&](const CodeVector& c) {
            if (!c.is_zero()) layers[static_cast<std::size_t>(c.weight())].push_back(c);
        });
        for (first_weight = 1; first_weight <= n && layers[first_weight].empty(); ++first_weight) {}
    } else {
        first_weight = min_distance_standard(g);
    }

    std::vector<CodeVector> out;
    Gf3Echelon ech;
    for (std::size_t w = first_weight; w <= n && ech.rank() < k; ++w) {
        std::vector<CodeVector> layer;
        if (standard) {
            auto keep = [&](const CodeVector& c) {
                if (static_cast<std::size_t>(c.weight()) == w) {
                    layer.push_back(c);
                    layer.push_back(-c);
                }
                return false;
            };
            low_support_walk(g.rows(), 0, 0, w, CodeVector{}, keep);
        } else {
            layer = std::move(layers[w]);
        }
        std::sort(layer.begin(), layer.end(), by_lex);
        for (const auto& c : layer) {
            if (ech.rank() < k) ech.insert(c);
            out.push_back(c);
        }
    }
    return out;
}

namespace {

struct Family {
    std::size_t n;
    std::size_t lead;  // index of the coefficient alpha is solved from
    std::vector<std::array<long long, 2>> coeffs;  // A_i = c0 + c1 * alpha
    std::vector<int> admissible;
};

std::vector<int> range_incl(int lo, int hi) {
    std::vector<int> v;
    for (int a = lo; a <= hi; ++a) v.push_back(a);
    return v;
}

const std::vector<Family>& families() {
    static const std::vector<Family> kFamilies = [] {
        std::vector<Family> f;
        f.push_back({9, 4,
                     {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {4, 2}, {244, -4}, {1168, -4}, {3704, 16}, {7766, -14},
                      {6796, 4}},
                     range_incl(0, 24)});
        f.push_back({10, 5,
                     {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {44, 4}, {1460, -20}, {3320, 40}, {13600, -40},
                      {22380, 20}, {18244, -4}},
                     {0, 9, 12, 13, 16, 18, 21, 22, 24, 25}});
        std::vector<int> a11 = range_incl(6, 50);
        a11.insert(a11.begin(), 0);
        a11.push_back(54);
        a11.push_back(60);
        // The weight-11 coefficient is 48576 - 4 alpha; with 48756 the
        // distribution would not sum to 3^11.
        f.push_back({11, 5,
                     {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {12, 2}, {888, -6}, {3960, 0}, {14970, 20},
                      {42500, -30}, {66240, 18}, {48576, -4}},
                     a11});
        // The weight-11 coefficient is 193536 - 24 alpha; it is the only value
        // for which the distribution sums to 3^12.
        f.push_back({12, 6,
                     {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {480, 4}, {3456, -24}, {15120, 60},
                      {55520, -80}, {133920, 60}, {193536, -24}, {129408, 4}},
                     {0, 1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28, 31, 36, 37, 39, 43, 48, 49, 52, 57, 63,
                      64, 81, 144}});
        return f;
    }();
    return kFamilies;
}

}  // namespace

std::optional<EnumFamilyMatch> match_enumerator_family(std::size_t n, const WeightDistribution& wd) {
    const Family* fam = nullptr;
    for (const auto& f : families())
        if (f.n == n) fam = &f;
    if (fam == nullptr) throw std::invalid_argument("match_enumerator_family: n must be 9, 10, 11 or 12");
    if (wd.counts.size() != n + 1) return std::nullopt;

    const auto [c0, c1] = fam->coeffs[fam->lead];
    const long long lead = static_cast<long long>(wd.counts[fam->lead]) - c0;
    if (lead % c1 != 0) return std::nullopt;
    const int alpha = static_cast<int>(lead / c1);
    if (std::find(fam->admissible.begin(), fam->admissible.end(), alpha) == fam->admissible.end())
        return std::nullopt;
    for (std::size_t i = 0; i <= n; ++i) {
        const long long expect = fam->coeffs[i][0] + fam->coeffs[i][1] * alpha;
        if (static_cast<long long>(wd.counts[i]) != expect) return std::nullopt;
    }
    return EnumFamilyMatch{n, alpha};
}

}  // namespace sdac9
