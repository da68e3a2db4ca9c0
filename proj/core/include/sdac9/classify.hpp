#pragma once

// Classification by lengthening, decomposable classes, census arithmetic and
// the distance-floor extension search.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdac9/equivalence.hpp"
#include "sdac9/standard_form.hpp"

namespace sdac9 {

/// One equivalence class, represented by its canonical standard form.
struct CodeClass {
    std::size_t n = 0;
    std::string trits;
    std::size_t d = 0;
    BigInt aut_order = 1;
    bool indecomposable = true;
    std::optional<WeightDistribution> wd;

    WeightedGraph graph() const { return WeightedGraph::from_trits(trits, n); }
    GeneratorMatrix generator() const { return graph_to_generator(graph()); }
    const WeightDistribution& weight_distribution();
};

/// Orders by trits.
bool class_less(const CodeClass& a, const CodeClass& b);

/// The single class of length 1: the empty graph, d = 1, aut = 6.
CodeClass length_one_class();

/// Builds the class of the code generated by g (canonical form, d, aut).
CodeClass make_class(const GeneratorMatrix& g);

struct ClassifyOptions {
    unsigned workers = 1;
    /// Called once per finished parent, from worker threads under a lock.
    std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Indecomposable classes of length n from the indecomposable classes of
/// length n - 1. Output is sorted by trits.
/// Throws std::invalid_argument if prev is empty or has the wrong length.
std::vector<CodeClass> classify_step(const std::vector<CodeClass>& prev, std::size_t n,
                                     const ClassifyOptions& opts = {});

/// One class per multiset of at least two indecomposables with lengths summing
/// to n. indecomposable_by_length[m] holds the classes of length m (index 0 unused).
std::vector<CodeClass> decomposable_classes(std::size_t n,
                                            const std::vector<std::vector<CodeClass>>& indecomposable_by_length);

/// t_1..t_N from i_1..i_N. Throws std::logic_error on a non-integral step.
std::vector<BigInt> euler_transform(const std::vector<BigInt>& i);

struct MassReport {
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
};

/// lhs = prod (3^i + 1), rhs = sum 24^n n! / aut. Throws std::logic_error if
/// some aut_order does not divide 24^n n!.
MassReport mass_check(std::size_t n, const std::vector<CodeClass>& classes);

BigInt equivalence_group_order(std::size_t n);
BigInt mass_lower_bound(std::size_t n);

/// Lengthens every input class and keeps the children with minimum distance
/// above d0 (checked before canonization). Output holds one class per
/// equivalence class of length n + 1 with d >= d0 + 1, sorted by trits.
std::vector<CodeClass> extend_with_distance_floor(const std::vector<CodeClass>& classes, std::size_t d0,
                                                  const ClassifyOptions& opts = {});

struct CensusRow {
    std::size_t n = 0;
    std::size_t i_n = 0;
    std::size_t t_n = 0;
    std::map<std::size_t, std::size_t> by_distance;
    std::size_t trivial_aut_count = 0;
};

struct Tabulation {
    CensusRow row;
    /// Indecomposable classes only.
    std::map<std::size_t, std::size_t> indecomposable_by_distance;
    std::map<std::size_t, std::size_t> distinct_wd_by_distance;
    std::size_t distinct_wd_total = 0;
    std::map<BigInt, std::size_t> aut_histogram;
    std::map<std::size_t, std::size_t> trivial_aut_by_distance;
    /// (d, alpha, aut) -> count, for n in 9..12 when the family matches.
    std::map<std::tuple<std::size_t, int, BigInt>, std::size_t> alpha_beta;
};

/// Distinct weight distributions are counted among indecomposable classes.
Tabulation tabulate(std::size_t n, std::vector<CodeClass>& classes);

struct LengthResult {
    std::size_t n = 0;
    std::vector<CodeClass> indecomposable;
    std::vector<CodeClass> decomposable;
};

/// Full classification of lengths 1..n_max.
std::vector<LengthResult> classify_up_to(std::size_t n_max, const ClassifyOptions& opts = {},
                                         const std::function<void(const LengthResult&)>& on_length = {});

}  // namespace sdac9
