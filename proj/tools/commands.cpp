#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sdac9/classify.hpp"
#include "sdac9/database.hpp"

namespace sdac9::cli {
namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print(std::ostream& out, bool tsv) const {
        if (tsv) {
            for (const auto* r : all()) {
                for (std::size_t i = 0; i < r->size(); ++i) out << (i ? "\t" : "") << (*r)[i];
                out << '\n';
            }
            return;
        }
        std::vector<std::size_t> w(header.size(), 0);
        for (const auto* r : all())
            for (std::size_t i = 0; i < r->size(); ++i) w[i] = std::max(w[i], (*r)[i].size());
        for (const auto* r : all()) {
            std::string line;
            for (std::size_t i = 0; i < r->size(); ++i) {
                if (i) line += "  ";
                line += std::string(w[i] - (*r)[i].size(), ' ') + (*r)[i];
            }
            out << line << '\n';
        }
    }

private:
    std::vector<const std::vector<std::string>*> all() const {
        std::vector<const std::vector<std::string>*> v{&header};
        for (const auto& r : rows) v.push_back(&r);
        return v;
    }
};

template <class T>
std::string str(const T& x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

void print_fields(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& fields, bool tsv) {
    std::size_t w = 0;
    for (const auto& f : fields) w = std::max(w, f.first.size());
    for (const auto& [k, v] : fields) {
        if (tsv)
            out << k << '\t' << v << '\n';
        else
            out << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    }
}

std::string join_counts(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::vector<CodeClass> all_classes(const LengthResult& r) {
    auto all = r.indecomposable;
    all.insert(all.end(), r.decomposable.begin(), r.decomposable.end());
    return all;
}

ClassifyOptions progress_options(unsigned workers, bool verbose, std::ostream& err) {
    ClassifyOptions o;
    o.workers = workers;
    if (verbose)
        o.progress = [&err](std::size_t done, std::size_t total) {
            if (done == total || done % 16 == 0) err << "  parents " << done << "/" << total << '\n';
        };
    return o;
}

}  // namespace

unsigned resolve_workers(std::optional<unsigned> flag) {
    if (flag && *flag > 0) return *flag;
    if (const char* env = std::getenv("SDAC9_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n == 0 || a.n > kMaxLength) {
        err << "classify: --n must be between 1 and 32\n";
        return kExitUsage;
    }
    std::error_code ec;
    std::filesystem::create_directories(a.out_dir, ec);
    if (ec || !std::filesystem::is_directory(a.out_dir)) {
        err << "classify: cannot create output directory " << a.out_dir << '\n';
        return kExitUsage;
    }
    Table t{{"n", "i", "t"}, {}};
    int status = kExitOk;
    classify_up_to(a.n, progress_options(a.workers, a.verbose, err), [&](const LengthResult& r) {
        const auto all = all_classes(r);
        const auto path = (std::filesystem::path(a.out_dir) / database_file_name(r.n)).string();
        write_database_file(path, r.n, all);
        if (!a.tsv) out << "n=" << r.n << " i=" << r.indecomposable.size() << " t=" << all.size() << std::endl;
        t.rows.push_back({str(r.n), str(r.indecomposable.size()), str(all.size())});
        if (!mass_check(r.n, all).equal) {
            err << "classify: mass formula fails at n=" << r.n << '\n';
            status = kExitFail;
        }
    });
    if (a.tsv) t.print(out, true);
    return status;
}

int cmd_extend(const ExtendArgs& a, std::ostream& out, std::ostream& err) {
    const Database db = read_database_file(a.db);
    std::vector<CodeClass> parents;
    for (const auto& c : db.classes)
        if (c.d >= a.min_d) parents.push_back(c);
    const auto children = extend_with_distance_floor(parents, a.min_d, progress_options(a.workers, a.verbose, err));
    write_database_file(a.out, db.n + 1, children);

    std::map<std::size_t, std::size_t> by_d;
    for (const auto& c : children) ++by_d[c.d];
    if (a.tsv) {
        Table t{{"n", "d", "count"}, {}};
        for (const auto& [d, k] : by_d) t.rows.push_back({str(db.n + 1), str(d), str(k)});
        t.print(out, true);
    } else {
        out << "parents=" << parents.size() << " n=" << db.n + 1 << " classes=" << children.size();
        for (const auto& [d, k] : by_d) out << " d" << d << "=" << k;
        out << '\n';
    }
    return kExitOk;
}

int cmd_inspect(const InspectArgs& a, std::ostream& out, std::ostream& err) {
    if (a.matrix.has_value() == a.trits.has_value()) {
        err << "inspect: give exactly one of --matrix or --trits\n";
        return kExitUsage;
    }
    GeneratorMatrix g;
    if (a.matrix) {
        g = read_matrix_file(*a.matrix);
    } else {
        g = graph_to_generator(WeightedGraph::from_trits(*a.trits));
    }
    if (!is_self_dual(g)) {
        err << "inspect: the code is not self-dual (some pair of rows has nonzero trace inner product)\n";
        return kExitUsage;
    }
    const std::size_t n = g.length();
    const WeightDistribution wd = weight_distribution(g);
    const CanonicalCode cc = canonical_code(g);
    std::size_t d = 0;
    for (std::size_t i = 1; i < wd.counts.size() && d == 0; ++i)
        if (wd.counts[i] != 0) d = i;
    std::vector<std::pair<std::string, std::string>> f{
        {"n", str(n)},
        {"d", str(d)},
        {"weight_distribution", join_counts(wd.counts)},
        {"aut", str(cc.aut_order)},
        {"connected", is_connected(WeightedGraph::from_trits(cc.trits, n)) ? "yes" : "no"},
        {"trits", cc.trits.empty() ? "-" : cc.trits},
    };
    if (n >= 9 && n <= 12) {
        const auto m = match_enumerator_family(n, wd);
        f.emplace_back("alpha", m ? str(m->alpha) : "-");
    }
    print_fields(out, f, a.tsv);
    return kExitOk;
}

int cmd_equiv(const EquivArgs& a, std::ostream& out, std::ostream& err) {
    const GeneratorMatrix ga = read_matrix_file(a.a);
    const GeneratorMatrix gb = read_matrix_file(a.b);
    if (ga.length() != gb.length()) {
        err << "equiv: lengths differ (" << ga.length() << " vs " << gb.length() << ")\n";
        return kExitUsage;
    }
    for (const auto* g : {&ga, &gb})
        if (!is_self_dual(*g)) {
            err << "equiv: " << (g == &ga ? a.a : a.b) << " is not self-dual\n";
            return kExitUsage;
        }
    const bool eq = are_equivalent(ga, gb);
    out << (eq ? "equivalent" : "inequivalent") << '\n';
    return (!eq && a.expect_equivalent) ? kExitFail : kExitOk;
}

int cmd_mass(const MassArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n == 0) {
        err << "mass: --n must be positive\n";
        return kExitUsage;
    }
    std::vector<std::pair<std::string, std::string>> f{{"n", str(a.n)}};
    int status = kExitOk;
    if (a.db_dir) {
        const auto path = (std::filesystem::path(*a.db_dir) / database_file_name(a.n)).string();
        const Database db = read_database_file(path);
        if (db.n != a.n) {
            err << "mass: " << path << " holds length " << db.n << '\n';
            return kExitUsage;
        }
        const MassReport r = mass_check(a.n, db.classes);
        f.emplace_back("classes", str(db.classes.size()));
        f.emplace_back("lhs", str(r.lhs));
        f.emplace_back("rhs", str(r.rhs));
        f.emplace_back("mass", r.equal ? "PASS" : "FAIL");
        if (!r.equal) status = kExitFail;
    }
    f.emplace_back("lower_bound", str(mass_lower_bound(a.n)));
    print_fields(out, f, a.tsv);
    return status;
}

int cmd_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
    static const std::set<std::string> kTables{"distance", "wd", "aut", "alpha-beta"};
    if (!kTables.count(a.table)) {
        err << "stats: unknown table '" << a.table << "' (distance, wd, aut, alpha-beta)\n";
        return kExitUsage;
    }
    Database db = read_database_file(a.db);
    const Tabulation tab = tabulate(db.n, db.classes);
    Table t;
    if (a.table == "distance") {
        t.header = {"d", "indecomposable", "total"};
        for (const auto& [d, k] : tab.row.by_distance) {
            const auto it = tab.indecomposable_by_distance.find(d);
            t.rows.push_back({str(d), str(it == tab.indecomposable_by_distance.end() ? 0 : it->second), str(k)});
        }
        if (!db.classes.empty()) t.rows.push_back({"all", str(tab.row.i_n), str(tab.row.t_n)});
    } else if (a.table == "wd") {
        t.header = {"d", "distinct_wd"};
        for (const auto& [d, k] : tab.distinct_wd_by_distance) t.rows.push_back({str(d), str(k)});
        if (!db.classes.empty()) t.rows.push_back({"all", str(tab.distinct_wd_total)});
    } else if (a.table == "aut") {
        t.header = {"aut", "count"};
        for (const auto& [aut, k] : tab.aut_histogram) t.rows.push_back({str(aut), str(k)});
        std::string trivial;
        for (const auto& [d, k] : tab.trivial_aut_by_distance) trivial += " d" + str(d) + "=" + str(k);
        if (!a.tsv) out << "trivial=" << tab.row.trivial_aut_count << trivial << '\n';
    } else {
        std::set<BigInt> betas;
        std::map<int, std::map<BigInt, std::size_t>> grid;
        for (const auto& [key, k] : tab.alpha_beta) {
            const auto& [d, alpha, beta] = key;
            betas.insert(beta);
            grid[alpha][beta] += k;
        }
        t.header = {"alpha"};
        for (const auto& b : betas) t.header.push_back(str(b));
        t.header.push_back("all");
        std::map<BigInt, std::size_t> col;
        std::size_t grand = 0;
        for (const auto& [alpha, row] : grid) {
            std::vector<std::string> r{str(alpha)};
            std::size_t sum = 0;
            for (const auto& b : betas) {
                const auto it = row.find(b);
                const std::size_t k = it == row.end() ? 0 : it->second;
                r.push_back(k ? str(k) : (a.tsv ? "0" : ""));
                sum += k;
                col[b] += k;
            }
            r.push_back(str(sum));
            grand += sum;
            t.rows.push_back(std::move(r));
        }
        if (!grid.empty()) {
            std::vector<std::string> r{"all"};
            for (const auto& b : betas) r.push_back(str(col[b]));
            r.push_back(str(grand));
            t.rows.push_back(std::move(r));
        }
    }
    t.print(out, a.tsv);
    return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classification of self-dual additive codes over GF(9)"};
    app.require_subcommand(1);
    bool tsv = false;
    app.add_flag("--tsv", tsv, "Tab-separated output");

    std::optional<unsigned> workers;
    bool verbose = false;

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Classify all codes of length 1..N");
    classify->add_option("--n", ca.n, "Maximum length")->required()->check(CLI::Range(1, 32));
    classify->add_option("--out", ca.out_dir, "Output directory for n<k>.db files")->required();
    classify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    classify->add_flag("-v,--verbose", verbose, "Progress on stderr");

    ExtendArgs ea;
    auto* extend = app.add_subcommand("extend", "Lengthen classes with d >= D, keep children with d > D");
    extend->add_option("--db", ea.db, "Input database")->required();
    extend->add_option("--min-d", ea.min_d, "Distance floor D")->required()->check(CLI::PositiveNumber);
    extend->add_option("--out", ea.out, "Output database")->required();
    extend->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    extend->add_flag("-v,--verbose", verbose, "Progress on stderr");

    InspectArgs ia;
    auto* inspect = app.add_subcommand("inspect", "Report parameters of one code");
    auto* im = inspect->add_option("--matrix", ia.matrix, "Generator matrix file");
    auto* it = inspect->add_option("--trits", ia.trits, "Standard form as a trit string");
    im->excludes(it);

    EquivArgs qa;
    auto* equiv = app.add_subcommand("equiv", "Test two codes for equivalence");
    equiv->add_option("--a", qa.a, "First generator matrix file")->required();
    equiv->add_option("--b", qa.b, "Second generator matrix file")->required();
    equiv->add_flag("--expect-equivalent", qa.expect_equivalent, "Exit 1 if inequivalent");

    MassArgs ma;
    auto* mass = app.add_subcommand("mass", "Check the mass formula and print the lower bound on t_n");
    mass->add_option("--db", ma.db_dir, "Directory holding n<k>.db files");
    mass->add_option("--n", ma.n, "Length")->required()->check(CLI::Range(1, 32));

    StatsArgs sa;
    auto* stats = app.add_subcommand("stats", "Census tables for one database");
    stats->add_option("--db", sa.db, "Database file")->required();
    stats->add_option("--table", sa.table, "distance, wd, aut or alpha-beta");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*classify) {
            ca.workers = resolve_workers(workers);
            ca.tsv = tsv;
            ca.verbose = verbose;
            return cmd_classify(ca, out, err);
        }
        if (*extend) {
            ea.workers = resolve_workers(workers);
            ea.tsv = tsv;
            ea.verbose = verbose;
            return cmd_extend(ea, out, err);
        }
        if (*inspect) {
            ia.tsv = tsv;
            return cmd_inspect(ia, out, err);
        }
        if (*equiv) return cmd_equiv(qa, out, err);
        if (*mass) {
            ma.tsv = tsv;
            return cmd_mass(ma, out, err);
        }
        sa.tsv = tsv;
        return cmd_stats(sa, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "verification error: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace sdac9::cli
