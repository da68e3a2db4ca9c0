// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "sdac9/classify.hpp"
#include "sdac9/database.hpp"
#include "support.hpp"

using namespace sdac9;

namespace {

using Counts = std::map<std::size_t, std::size_t>;

struct Check {
    bool ok = true;
    std::ostringstream why;

    template <class A, class B>
    void eq(const A& got, const B& want, const std::string& what) {
        if (got == want) return;
        ok = false;
        why << " [" << what << ": got " << show(got) << ", want " << show(want) << "]";
    }
    void that(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        why << " [" << what << "]";
    }

private:
    template <class T>
    static std::string show(const T& x) {
        std::ostringstream s;
        if constexpr (std::is_same_v<T, Counts>) {
            s << "{";
            for (const auto& [k, v] : x) s << k << ":" << v << " ";
            s << "}";
        } else if constexpr (std::is_same_v<T, std::vector<std::size_t>> ||
                             std::is_same_v<T, std::vector<std::uint64_t>>) {
            for (auto v : x) s << v << " ";
        } else if constexpr (std::is_same_v<T, std::multiset<BigInt>>) {
            for (const auto& v : x) s << v << " ";
        } else {
            s << x;
        }
        return s.str();
    }
};

struct Cli {
    int code;
    std::string out;
    std::string err;
};

Cli cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "sdac9");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::map<std::string, std::string> tsv_fields(const std::string& text) {
    std::map<std::string, std::string> m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto tab = line.find('\t');
        if (tab != std::string::npos) m[line.substr(0, tab)] = line.substr(tab + 1);
    }
    return m;
}

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Check&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.why << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.ok) ++failures;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed
              << std::setprecision(1) << secs << "s)" << c.why.str() << std::endl;
}

std::vector<CodeClass> load_all(const std::string& dir, std::size_t n) {
    return read_database_file((std::filesystem::path(dir) / database_file_name(n)).string()).classes;
}

}  // namespace

int main() {
    const auto dir = (std::filesystem::temp_directory_path() / "sdac9_acceptance").string();
    std::filesystem::remove_all(dir);
    const std::string workers = std::to_string(cli::resolve_workers(std::nullopt));

    report(1, "census n <= 8 (Tables I-III)", [&](Check& c) {
        const auto r = cli_run({"--tsv", "classify", "--n", "8", "--out", dir, "--workers", workers});
        c.eq(r.code, 0, "classify exit code");
        std::vector<std::size_t> i, t;
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto all = load_all(dir, n);
            std::size_t k = 0;
            for (const auto& x : all) k += x.indecomposable;
            i.push_back(k);
            t.push_back(all.size());
        }
        c.eq(i, std::vector<std::size_t>{1, 1, 1, 3, 5, 21, 73, 659}, "i_n");
        c.eq(t, std::vector<std::size_t>{1, 2, 3, 7, 13, 39, 121, 817}, "t_n");
        const std::map<std::size_t, Counts> indec{
            {2, {{2, 1}}},           {3, {{2, 1}}},
            {4, {{2, 2}, {3, 1}}},   {5, {{2, 4}, {3, 1}}},
            {6, {{2, 15}, {3, 5}, {4, 1}}}, {7, {{2, 51}, {3, 20}, {4, 2}}},
            {8, {{2, 388}, {3, 194}, {4, 77}}}};
        const std::map<std::size_t, Counts> total{
            {1, {{1, 1}}},
            {2, {{1, 1}, {2, 1}}},
            {3, {{1, 2}, {2, 1}}},
            {4, {{1, 3}, {2, 3}, {3, 1}}},
            {5, {{1, 7}, {2, 5}, {3, 1}}},
            {6, {{1, 13}, {2, 20}, {3, 5}, {4, 1}}},
            {7, {{1, 39}, {2, 60}, {3, 20}, {4, 2}}},
            {8, {{1, 121}, {2, 424}, {3, 195}, {4, 77}}}};
        for (std::size_t n = 1; n <= 8; ++n) {
            Counts a, b;
            for (const auto& x : load_all(dir, n)) {
                ++b[x.d];
                if (x.indecomposable) ++a[x.d];
            }
            if (indec.count(n)) c.eq(a, indec.at(n), "indecomposable by d, n=" + std::to_string(n));
            c.eq(b, total.at(n), "total by d, n=" + std::to_string(n));
        }
    });

    report(2, "mass formula n <= 8", [&](Check& c) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto r = cli_run({"--tsv", "mass", "--db", dir, "--n", std::to_string(n)});
            auto f = tsv_fields(r.out);
            c.eq(r.code, 0, "mass exit code n=" + std::to_string(n));
            c.eq(f["mass"], std::string("PASS"), "mass n=" + std::to_string(n));
            c.that(!f["lhs"].empty() && f["lhs"] == f["rhs"], "lhs == rhs n=" + std::to_string(n));
        }
    });

    report(3, "distinct weight enumerators (Table IV)", [&](Check& c) {
        const std::map<std::size_t, std::pair<Counts, std::size_t>> want{
            {2, {{{2, 1}}, 1}},
            {3, {{{2, 1}}, 1}},
            {4, {{{2, 2}, {3, 1}}, 3}},
            {5, {{{2, 4}, {3, 1}}, 5}},
            {6, {{{2, 14}, {3, 3}, {4, 1}}, 18}},
            {7, {{{2, 42}, {3, 9}, {4, 1}}, 52}},
            {8, {{{2, 202}, {3, 33}, {4, 9}}, 244}}};
        for (const auto& [n, w] : want) {
            auto all = load_all(dir, n);
            const auto t = tabulate(n, all);
            c.eq(t.distinct_wd_by_distance, w.first, "distinct wd by d, n=" + std::to_string(n));
            c.eq(t.distinct_wd_total, w.second, "distinct wd total, n=" + std::to_string(n));
        }
    });

    report(4, "trivial automorphism groups (Table VII)", [&](Check& c) {
        for (std::size_t n = 1; n <= 7; ++n) {
            auto all = load_all(dir, n);
            c.eq(tabulate(n, all).row.trivial_aut_count, std::size_t{0}, "trivial count n=" + std::to_string(n));
        }
        auto all = load_all(dir, 8);
        const auto t = tabulate(8, all);
        c.eq(t.row.trivial_aut_count, std::size_t{35}, "trivial count n=8");
        c.eq(t.trivial_aut_by_distance, Counts{{3, 32}, {4, 3}}, "trivial by d n=8");
    });

    report(5, "codes with d <= 2 and 2 <= n <= 8 have |Aut| >= 12, attained at n = 8", [&](Check& c) {
        // The single length-1 code has |Aut| = 6: negating its only coordinate
        // is the global -I, so the bound starts at n = 2.
        const auto one = load_all(dir, 1);
        c.that(one.size() == 1 && one[0].aut_order == 6, "length-1 class with |Aut| = 6");
        bool attained = false;
        for (std::size_t n = 2; n <= 8; ++n)
            for (const auto& x : load_all(dir, n)) {
                if (x.d > 2) continue;
                c.that(x.aut_order >= 12, "aut " + x.aut_order.str() + " < 12 at n=" + std::to_string(n));
                attained = attained || (n == 8 && x.d == 2 && x.aut_order == 12);
            }
        c.that(attained, "no n=8, d=2 class with |Aut| = 12");
    });

    report(6, "coordinate graph |Aut| = 24", [&](Check& c) {
        const auto g = build_coordinate_graph();
        c.eq(g.size(), std::size_t{8}, "vertices");
        c.eq(canonize(g).aut_order, BigInt(24), "aut");
    });

    report(7, "extension searches (6,3^6,4) and (9,3^9,5)", [&](Check& c) {
        auto r = cli_run({"extend", "--db", dir + "/n5.db", "--min-d", "3", "--out", dir + "/ext6.db", "--workers",
                          workers});
        c.eq(r.code, 0, "extend n=5 exit code");
        const auto six = read_database_file(dir + "/ext6.db");
        c.eq(six.classes.size(), std::size_t{1}, "classes at n=6");
        if (six.classes.size() == 1) c.eq(six.classes[0].d, std::size_t{4}, "d at n=6");

        r = cli_run({"extend", "--db", dir + "/n8.db", "--min-d", "4", "--out", dir + "/ext9.db", "--workers",
                     workers});
        c.eq(r.code, 0, "extend n=8 exit code");
        auto nine = read_database_file(dir + "/ext9.db");
        c.eq(nine.classes.size(), std::size_t{4}, "classes at n=9");
        std::multiset<BigInt> auts;
        for (auto& x : nine.classes) {
            auts.insert(x.aut_order);
            c.eq(x.d, std::size_t{5}, "d at n=9");
            c.eq(x.weight_distribution().counts,
                 std::vector<std::uint64_t>{1, 0, 0, 0, 0, 252, 1176, 3672, 7794, 6788}, "weight distribution");
        }
        c.eq(auts, std::multiset<BigInt>{72, 108, 108, 432}, "aut orders");
    });

    report(8, "displayed matrices", [&](Check& c) {
        struct Want {
            const char* file;
            const char* d;
            const char* aut;
            const char* alpha;
            const char* connected;
        };
        const std::vector<Want> wants{
            {"n4_cprime.txt", "3", nullptr, nullptr, "yes"},
            {"n8_aut2.txt", "4", "2", nullptr, nullptr},
            {"n9_aut288.txt", "4", "288", "16", nullptr},
            {"n9_alpha0_aut16.txt", nullptr, "16", "0", nullptr},
            {"n10_aut2880.txt", "5", "2880", "25", nullptr},
            {"n10_alpha0.txt", nullptr, nullptr, "0", nullptr},
            {"n11_aut47520.txt", "5", "47520", "60", nullptr},
            {"n12_aut2280960.txt", "6", "2280960", "144", nullptr},
            {"n12_alpha0_aut11520.txt", nullptr, "11520", "0", nullptr},
        };
        for (const auto& w : wants) {
            const auto r = cli_run({"--tsv", "inspect", "--matrix", sdac9::test::data_path(w.file)});
            c.eq(r.code, 0, std::string("inspect exit code ") + w.file);
            auto f = tsv_fields(r.out);
            if (w.d) c.eq(f["d"], std::string(w.d), std::string("d ") + w.file);
            if (w.aut) c.eq(f["aut"], std::string(w.aut), std::string("aut ") + w.file);
            if (w.alpha) c.eq(f["alpha"], std::string(w.alpha), std::string("alpha ") + w.file);
            if (w.connected) c.eq(f["connected"], std::string(w.connected), std::string("connected ") + w.file);
        }
        const auto r = cli_run({"equiv", "--a", sdac9::test::data_path("n4_c.txt"), "--b",
                                sdac9::test::data_path("n4_cprime.txt"), "--expect-equivalent"});
        c.eq(r.code, 0, "C equivalent to C'");
    });

    report(9, "oracle suites", [&](Check& c) {
        std::mt19937_64 rng(2024);
        std::size_t mismatches = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            const std::size_t v = 1 + trial % 7;
            const auto g = sdac9::test::random_digraph(v, rng, 0.15 + 0.1 * (trial % 6), 1 + trial % 3);
            const auto h = g.permuted(sdac9::test::random_permutation(v, rng));
            const auto fg = canonize(g), fh = canonize(h), bg = brute_force_canonize(g), bh = brute_force_canonize(h);
            if (fg.bytes != fh.bytes || bg.bytes != bh.bytes || fg.aut_order != bg.aut_order ||
                fh.aut_order != bh.aut_order)
                ++mismatches;
        }
        c.eq(mismatches, std::size_t{0}, "canonize vs brute force mismatches");

        std::size_t variant = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t n = 1 + trial % 6;
            const auto g = sdac9::test::random_code(n, rng);
            const auto h = sdac9::test::random_basis(sdac9::test::random_transform(n, rng).apply(g), rng);
            const auto a = canonical_code(g), b = canonical_code(h);
            if (a.trits != b.trits || a.aut_order != b.aut_order) ++variant;
        }
        c.eq(variant, std::size_t{0}, "canonical_code changed under a transform");

        std::vector<CodeClass> prev;
        for (std::size_t n = 1; n <= 5; ++n) {
            prev = n == 1 ? std::vector<CodeClass>{length_one_class()} : classify_step(prev, n);
            std::set<std::string> lengthened;
            for (const auto& x : prev) lengthened.insert(x.trits);
            std::set<std::string> brute;
            const std::size_t m = n * (n - 1) / 2;
            std::string t(m, '0');
            while (true) {
                const auto wg = WeightedGraph::from_trits(t, n);
                if (is_connected(wg)) brute.insert(canonical_code(graph_to_generator(wg)).trits);
                std::size_t i = 0;
                while (i < m && t[i] == '2') t[i++] = '0';
                if (i == m) break;
                ++t[i];
            }
            c.eq(lengthened.size(), brute.size(), "indecomposable count n=" + std::to_string(n));
            c.that(lengthened == brute, "indecomposable classes differ at n=" + std::to_string(n));
        }
    });

    report(10, "mass lower bounds", [&](Check& c) {
        c.eq(mass_lower_bound(11), BigInt("1592385579"), "n=11");
        c.eq(mass_lower_bound(12), BigInt("2938404780748"), "n=12");
        auto f = tsv_fields(cli_run({"--tsv", "mass", "--n", "12"}).out);
        c.eq(f["lower_bound"], std::string("2938404780748"), "cli n=12");
    });

    std::filesystem::remove_all(dir);
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
