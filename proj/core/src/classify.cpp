#include "sdac9/classify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace sdac9 {

const WeightDistribution& CodeClass::weight_distribution() {
    if (!wd) wd = sdac9::weight_distribution(generator());
    return *wd;
}

bool class_less(const CodeClass& a, const CodeClass& b) { return a.trits < b.trits; }

CodeClass length_one_class() {
    CodeClass c;
    c.n = 1;
    c.d = 1;
    c.aut_order = 6;
    return c;
}

CodeClass make_class(const GeneratorMatrix& g) {
    CanonicalCode cc = canonical_code(g);
    CodeClass c;
    c.n = cc.n;
    c.trits = std::move(cc.trits);
    c.aut_order = std::move(cc.aut_order);
    const GeneratorMatrix canon = c.generator();
    c.d = minimum_distance(canon);
    c.indecomposable = is_connected(c.graph());
    return c;
}

namespace {

// Runs body(parent_index) for every parent on a pool of threads.
void run_parents(std::size_t count, const ClassifyOptions& opts, const std::function<void(std::size_t)>& body) {
    std::atomic<std::size_t> next{0};
    std::mutex progress_mutex;
    std::size_t done = 0;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            body(i);
            if (opts.progress) {
                std::lock_guard lock(progress_mutex);
                opts.progress(++done, count);
            }
        }
    };
    const unsigned w = std::max(1u, opts.workers);
    if (w == 1 || count <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(w);
    for (unsigned t = 0; t < w; ++t)
        pool.emplace_back([&, t] {
            try {
                worker();
            } catch (...) {
                errors[t] = std::current_exception();
                next = count;
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Shared store: weighted-graph forms already seen, classes by trits.
class ClassStore {
public:
    bool first_sighting(CanonBytes key) {
        std::lock_guard lock(m_);
        return seen_.insert(std::move(key)).second;
    }
    void insert(CodeClass c) {
        std::lock_guard lock(m_);
        const std::string key = c.trits;
        classes_.try_emplace(key, std::move(c));
    }
    bool contains(const std::string& trits) {
        std::lock_guard lock(m_);
        return classes_.count(trits) != 0;
    }
    std::vector<CodeClass> take() {
        std::vector<CodeClass> out;
        out.reserve(classes_.size());
        for (auto& [k, c] : classes_) out.push_back(std::move(c));
        return out;
    }

private:
    std::mutex m_;
    std::unordered_set<CanonBytes> seen_;
    std::map<std::string, CodeClass> classes_;
};

void check_length(const std::vector<CodeClass>& classes, std::size_t n, const char* what) {
    for (const auto& c : classes)
        if (c.n != n) throw std::invalid_argument(std::string(what) + ": classes of mixed length");
}

}  // namespace

std::vector<CodeClass> classify_step(const std::vector<CodeClass>& prev, std::size_t n, const ClassifyOptions& opts) {
    if (n == 1) return {length_one_class()};
    if (prev.empty()) throw std::invalid_argument("classify_step: no classes of length n - 1");
    check_length(prev, n - 1, "classify_step");

    ClassStore store;
    run_parents(prev.size(), opts, [&](std::size_t i) {
        const WeightedGraph parent = prev[i].graph();
        LengtheningStream stream(parent);
        WeightedGraph child;
        while (stream.next(child)) {
            if (!store.first_sighting(weighted_canonical_form(child))) continue;
            const GeneratorMatrix g = graph_to_generator(child);
            CanonicalCode cc = canonical_code(g);
            if (store.contains(cc.trits)) continue;
            CodeClass c;
            c.n = n;
            c.trits = std::move(cc.trits);
            c.aut_order = std::move(cc.aut_order);
            c.d = minimum_distance(c.generator());
            c.indecomposable = true;
            store.insert(std::move(c));
        }
    });
    return store.take();
}

std::vector<CodeClass> decomposable_classes(std::size_t n,
                                            const std::vector<std::vector<CodeClass>>& by_length) {
    // Items with length < n, in a fixed order; multisets are nondecreasing
    // index sequences.
    std::vector<const CodeClass*> items;
    for (std::size_t m = 1; m < n && m < by_length.size(); ++m)
        for (const auto& c : by_length[m]) {
            if (c.n != m) throw std::invalid_argument("decomposable_classes: class stored under the wrong length");
            items.push_back(&c);
        }

    std::vector<CodeClass> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
            if (chosen.size() < 2) return;
            WeightedGraph sum(0);
            std::size_t d = n;
            BigInt aut = 1;
            for (std::size_t k = 0; k < chosen.size();) {
                const CodeClass& part = *items[chosen[k]];
                std::size_t mult = 0;
                while (k < chosen.size() && chosen[k] == chosen[k - mult]) {
                    sum = direct_sum(sum, part.graph());
                    ++mult;
                    ++k;
                }
                d = std::min(d, part.d);
                for (std::size_t r = 1; r <= mult; ++r) aut *= BigInt(r) * part.aut_order;
            }
            CodeClass c;
            c.n = n;
            c.trits = canonical_code(graph_to_generator(sum)).trits;
            c.d = d;
            c.aut_order = aut;
            c.indecomposable = false;
            out.push_back(std::move(c));
            return;
        }
        for (std::size_t i = start; i < items.size(); ++i) {
            if (items[i]->n > remaining) continue;
            chosen.push_back(i);
            rec(i, remaining - items[i]->n);
            chosen.pop_back();
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end(), class_less);
    return out;
}

std::vector<BigInt> euler_transform(const std::vector<BigInt>& i) {
    const std::size_t N = i.size();
    std::vector<BigInt> c(N + 1, 0), t(N + 1, 0);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) c[n] += BigInt(d) * i[d - 1];
    for (std::size_t n = 1; n <= N; ++n) {
        BigInt s = c[n];
        for (std::size_t k = 1; k < n; ++k) s += c[k] * t[n - k];
        if (s % n != 0) throw std::logic_error("euler_transform: non-integral term");
        t[n] = s / n;
    }
    return {t.begin() + 1, t.end()};
}

BigInt equivalence_group_order(std::size_t n) {
    BigInt g = 1;
    for (std::size_t k = 1; k <= n; ++k) g *= 24 * BigInt(k);
    return g;
}

namespace {

BigInt self_dual_code_count(std::size_t n) {
    BigInt p = 1, three = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        three *= 3;
        p *= three + 1;
    }
    return p;
}

}  // namespace

MassReport mass_check(std::size_t n, const std::vector<CodeClass>& classes) {
    check_length(classes, n, "mass_check");
    const BigInt group = equivalence_group_order(n);
    MassReport r;
    r.lhs = self_dual_code_count(n);
    r.rhs = 0;
    for (const auto& c : classes) {
        if (c.aut_order <= 0 || group % c.aut_order != 0)
            throw std::logic_error("mass_check: automorphism group order does not divide the group order");
        r.rhs += group / c.aut_order;
    }
    r.equal = r.lhs == r.rhs;
    return r;
}

BigInt mass_lower_bound(std::size_t n) {
    if (n == 0) throw std::invalid_argument("mass_lower_bound: n must be positive");
    const BigInt num = 2 * self_dual_code_count(n);
    const BigInt den = equivalence_group_order(n);
    return (num + den - 1) / den;
}

std::vector<CodeClass> extend_with_distance_floor(const std::vector<CodeClass>& classes, std::size_t d0,
                                                  const ClassifyOptions& opts) {
    if (classes.empty()) return {};
    const std::size_t n = classes.front().n;
    check_length(classes, n, "extend_with_distance_floor");

    ClassStore store;
    run_parents(classes.size(), opts, [&](std::size_t i) {
        const WeightedGraph parent = classes[i].graph();
        LengtheningStream stream(parent);
        WeightedGraph child;
        while (stream.next(child)) {
            const GeneratorMatrix g = graph_to_generator(child);
            if (has_codeword_of_weight_at_most(g, d0)) continue;
            if (!store.first_sighting(weighted_canonical_form(child))) continue;
            CanonicalCode cc = canonical_code(g);
            if (store.contains(cc.trits)) continue;
            CodeClass c;
            c.n = n + 1;
            c.trits = std::move(cc.trits);
            c.aut_order = std::move(cc.aut_order);
            c.d = minimum_distance(c.generator());
            c.indecomposable = is_connected(c.graph());
            store.insert(std::move(c));
        }
    });
    return store.take();
}

Tabulation tabulate(std::size_t n, std::vector<CodeClass>& classes) {
    Tabulation t;
    t.row.n = n;
    std::map<std::size_t, std::set<WeightDistribution>> wds;
    std::set<WeightDistribution> all_wds;
    for (auto& c : classes) {
        ++t.row.t_n;
        ++t.row.by_distance[c.d];
        ++t.aut_histogram[c.aut_order];
        if (c.aut_order == 2) {
            ++t.row.trivial_aut_count;
            ++t.trivial_aut_by_distance[c.d];
        }
        if (!c.indecomposable) continue;
        ++t.row.i_n;
        ++t.indecomposable_by_distance[c.d];
        const WeightDistribution& wd = c.weight_distribution();
        wds[c.d].insert(wd);
        all_wds.insert(wd);
        if (n >= 9 && n <= 12)
            if (auto m = match_enumerator_family(n, wd)) ++t.alpha_beta[{c.d, m->alpha, c.aut_order}];
    }
    for (const auto& [d, s] : wds) t.distinct_wd_by_distance[d] = s.size();
    t.distinct_wd_total = all_wds.size();
    return t;
}

std::vector<LengthResult> classify_up_to(std::size_t n_max, const ClassifyOptions& opts,
                                         const std::function<void(const LengthResult&)>& on_length) {
    if (n_max == 0) throw std::invalid_argument("classify_up_to: n must be positive");
    std::vector<LengthResult> out;
    std::vector<std::vector<CodeClass>> by_length(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        LengthResult r;
        r.n = n;
        r.indecomposable = n == 1 ? std::vector<CodeClass>{length_one_class()}
                                  : classify_step(by_length[n - 1], n, opts);
        r.decomposable = decomposable_classes(n, by_length);
        by_length.push_back(r.indecomposable);
        if (on_length) on_length(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace sdac9
