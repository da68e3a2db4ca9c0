// Extended check, off by default: the complete set of (9,3^9,4) codes from the
// length-8 classes with d >= 3, against the known alpha-by-|Aut| counts.

#include <filesystem>
#include <iostream>
#include <map>

#include "sdac9/classify.hpp"

using namespace sdac9;

int main() {
    // (alpha, |Aut|) -> number of (9,3^9,4) codes.
    const std::map<std::pair<int, int>, std::size_t> want{
        {{0, 4}, 3},
        {{0, 8}, 1},
        {{0, 16}, 1},
        {{1, 2}, 2},
        {{1, 4}, 1},
        {{1, 6}, 2},
        {{2, 2}, 15},
        {{2, 4}, 21},
        {{2, 8}, 4},
        {{3, 2}, 15},
        {{3, 4}, 13},
        {{3, 6}, 1},
        {{3, 8}, 3},
        {{3, 12}, 2},
        {{3, 24}, 1},
        {{4, 2}, 125},
        {{4, 4}, 52},
        {{4, 12}, 12},
        {{4, 16}, 2},
        {{4, 24}, 2},
        {{4, 48}, 2},
        {{5, 2}, 85},
        {{5, 4}, 8},
        {{6, 2}, 338},
        {{6, 4}, 93},
        {{6, 8}, 11},
        {{6, 12}, 2},
        {{6, 16}, 1},
        {{7, 2}, 165},
        {{7, 4}, 53},
        {{7, 6}, 2},
        {{7, 8}, 9},
        {{7, 12}, 2},
        {{7, 16}, 2},
        {{7, 24}, 2},
        {{7, 72}, 1},
        {{8, 2}, 561},
        {{8, 4}, 150},
        {{8, 8}, 11},
        {{8, 32}, 1},
        {{9, 2}, 173},
        {{9, 4}, 20},
        {{9, 6}, 6},
        {{9, 8}, 7},
        {{9, 24}, 1},
        {{10, 2}, 522},
        {{10, 4}, 154},
        {{10, 6}, 4},
        {{10, 8}, 7},
        {{10, 12}, 7},
        {{10, 24}, 2},
        {{10, 48}, 2},
        {{11, 2}, 157},
        {{11, 4}, 53},
        {{11, 8}, 15},
        {{12, 2}, 356},
        {{12, 4}, 143},
        {{12, 6}, 2},
        {{12, 8}, 4},
        {{12, 12}, 3},
        {{12, 16}, 2},
        {{13, 2}, 119},
        {{13, 4}, 25},
        {{13, 6}, 2},
        {{13, 8}, 6},
        {{14, 2}, 229},
        {{14, 4}, 114},
        {{14, 8}, 11},
        {{14, 16}, 2},
        {{15, 2}, 42},
        {{15, 4}, 28},
        {{15, 6}, 1},
        {{15, 8}, 16},
        {{15, 12}, 1},
        {{15, 16}, 2},
        {{16, 2}, 96},
        {{16, 4}, 62},
        {{16, 8}, 8},
        {{16, 12}, 2},
        {{16, 16}, 3},
        {{16, 24}, 2},
        {{16, 36}, 4},
        {{16, 144}, 2},
        {{16, 288}, 1},
        {{17, 2}, 15},
        {{17, 4}, 9},
        {{17, 8}, 6},
        {{18, 2}, 23},
        {{18, 4}, 33},
        {{18, 8}, 2},
        {{18, 12}, 1},
        {{18, 16}, 6},
        {{18, 32}, 2},
        {{19, 2}, 9},
        {{19, 4}, 4},
        {{19, 8}, 6},
        {{19, 16}, 2},
        {{19, 24}, 2},
        {{20, 2}, 8},
        {{20, 4}, 23},
        {{20, 8}, 6},
        {{20, 32}, 2},
        {{21, 4}, 2},
        {{21, 6}, 2},
        {{21, 24}, 1},
        {{22, 2}, 1},
        {{22, 4}, 3},
        {{22, 16}, 2},
        {{22, 32}, 1},
        {{23, 8}, 1},
        {{24, 32}, 3}};

    ClassifyOptions opts;
    std::vector<CodeClass> parents;
    for (auto& r : classify_up_to(8, opts)) {
        if (r.n != 8) continue;
        for (auto* part : {&r.indecomposable, &r.decomposable})
            for (auto& c : *part)
                if (c.d >= 3) parents.push_back(c);
    }
    auto nine = extend_with_distance_floor(parents, 3, opts);
    std::map<std::size_t, std::size_t> by_d;
    std::map<std::pair<int, int>, std::size_t> got;
    for (auto& c : nine) {
        ++by_d[c.d];
        if (c.d != 4) continue;
        const auto m = match_enumerator_family(9, c.weight_distribution());
        if (!m) {
            std::cout << "FAIL no enumerator family for " << c.trits << "\n";
            return 1;
        }
        ++got[{m->alpha, static_cast<int>(c.aut_order)}];
    }
    const bool counts_ok = by_d == std::map<std::size_t, std::size_t>{{4, 4370}, {5, 4}};
    const bool table_ok = got == want;
    std::cout << (counts_ok ? "PASS" : "FAIL") << " n=9 d>=4 classes: d4=" << by_d[4] << " d5=" << by_d[5] << "\n";
    std::cout << (table_ok ? "PASS" : "FAIL") << " n=9 d=4 alpha-by-aut table\n";
    return counts_ok && table_ok ? 0 : 1;
}
