#pragma once

// Command implementations behind the sdac9 executable. Each returns a process
// exit code: 0 success, 1 verification failure, 2 usage or input error.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace sdac9::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct ClassifyArgs {
    std::size_t n = 0;
    std::string out_dir;
    unsigned workers = 1;
    bool tsv = false;
    bool verbose = false;
};

struct ExtendArgs {
    std::string db;
    std::size_t min_d = 1;
    std::string out;
    unsigned workers = 1;
    bool tsv = false;
    bool verbose = false;
};

struct InspectArgs {
    std::optional<std::string> matrix;
    std::optional<std::string> trits;
    bool tsv = false;
};

struct EquivArgs {
    std::string a;
    std::string b;
    bool expect_equivalent = false;
};

struct MassArgs {
    std::optional<std::string> db_dir;
    std::size_t n = 0;
    bool tsv = false;
};

struct StatsArgs {
    std::string db;
    std::string table = "distance";
    bool tsv = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err);
int cmd_extend(const ExtendArgs& a, std::ostream& out, std::ostream& err);
int cmd_inspect(const InspectArgs& a, std::ostream& out, std::ostream& err);
int cmd_equiv(const EquivArgs& a, std::ostream& out, std::ostream& err);
int cmd_mass(const MassArgs& a, std::ostream& out, std::ostream& err);
int cmd_stats(const StatsArgs& a, std::ostream& out, std::ostream& err);

/// --workers if given, else SDAC9_WORKERS, else the hardware thread count.
unsigned resolve_workers(std::optional<unsigned> flag);

/// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdac9::cli
