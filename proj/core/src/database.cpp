#include "sdac9/database.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sdac9 {

ParseError::ParseError(std::size_t line, std::size_t column, std::string token, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what +
                         (token.empty() ? std::string() : " '" + token + "'")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> split(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const std::size_t s = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(s, i - s), s + 1});
    }
    return out;
}

bool skippable(const std::string& line) {
    const auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

}  // namespace

GeneratorMatrix read_matrix(std::istream& in) {
    std::vector<std::vector<GF9>> rows;
    std::string line;
    std::size_t lineno = 0, n = 0, last_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        last_line = lineno;
        const auto toks = split(line);
        if (rows.empty()) {
            n = toks.size();
            if (n > kMaxLength) throw ParseError(lineno, 1, "", "more than 32 columns");
        } else if (toks.size() != n) {
            const std::size_t col = toks.size() > n ? toks[n].column : line.size() + 1;
            throw ParseError(lineno, col, toks.size() > n ? toks[n].text : "",
                             "expected " + std::to_string(n) + " entries, found " + std::to_string(toks.size()));
        }
        std::vector<GF9> row;
        for (const auto& t : toks) {
            auto x = parse_token(t.text);
            if (!x) throw ParseError(lineno, t.column, t.text, "not a GF(9) element");
            row.push_back(*x);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno + 1, 1, "", "empty matrix");
    if (rows.size() != n)
        throw ParseError(last_line + 1, 1, "",
                         "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
    GeneratorMatrix g = GeneratorMatrix::from_rows(n, std::span<const std::vector<GF9>>(rows));
    if (g.rank() != n) throw ParseError(last_line, 1, "", "rows are not GF(3)-independent");
    return g;
}

GeneratorMatrix read_matrix_file(const std::string& path) {
    auto f = open_in(path);
    return read_matrix(f);
}

void write_matrix(std::ostream& out, const GeneratorMatrix& g) {
    for (std::size_t r = 0; r < g.rank(); ++r) {
        for (std::size_t c = 0; c < g.length(); ++c) out << (c ? " " : "") << to_token(g.at(r, c));
        out << '\n';
    }
}

std::string database_file_name(std::size_t n) { return "n" + std::to_string(n) + ".db"; }

void write_database(std::ostream& out, std::size_t n, std::vector<CodeClass> classes) {
    std::sort(classes.begin(), classes.end(), class_less);
    out << "# sdac9 v1 n=" << n << '\n';
    for (const bool section : {true, false}) {
        out << (section ? "# indecomposable\n" : "# decomposable\n");
        for (const auto& c : classes) {
            if (c.indecomposable != section) continue;
            if (!c.trits.empty()) out << c.trits << ' ';
            out << "d=" << c.d << " aut=" << c.aut_order << '\n';
        }
    }
}

void write_database_file(const std::string& path, std::size_t n, const std::vector<CodeClass>& classes) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    write_database(f, n, classes);
    if (!f) throw std::runtime_error("error writing " + path);
}

Database read_database(std::istream& in) {
    Database db;
    std::string line;
    std::size_t lineno = 0;
    bool header = false, indecomposable = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!header) {
            const std::string prefix = "# sdac9 v1 n=";
            if (line.rfind(prefix, 0) != 0) throw ParseError(lineno, 1, line, "missing database header");
            try {
                std::size_t used = 0;
                db.n = std::stoul(line.substr(prefix.size()), &used);
                if (used != line.size() - prefix.size() || db.n == 0 || db.n > kMaxLength) throw std::out_of_range("");
            } catch (const std::exception&) {
                throw ParseError(lineno, prefix.size() + 1, line.substr(prefix.size()), "bad length in header");
            }
            header = true;
            continue;
        }
        if (line == "# indecomposable") {
            indecomposable = true;
            continue;
        }
        if (line == "# decomposable") {
            indecomposable = false;
            continue;
        }
        if (skippable(line)) continue;
        auto toks = split(line);
        CodeClass c;
        c.n = db.n;
        c.indecomposable = indecomposable;
        std::size_t k = 0;
        if (toks[0].text.rfind("d=", 0) != 0) c.trits = toks[k++].text;
        const std::size_t expect = db.n * (db.n - 1) / 2;
        if (c.trits.size() != expect || c.trits.find_first_not_of("012") != std::string::npos)
            throw ParseError(lineno, toks[0].column, toks[0].text,
                             "expected " + std::to_string(expect) + " trits");
        bool have_d = false, have_aut = false;
        for (; k < toks.size(); ++k) {
            const auto& t = toks[k];
            try {
                if (t.text.rfind("d=", 0) == 0 && !have_d) {
                    std::size_t used = 0;
                    c.d = std::stoul(t.text.substr(2), &used);
                    if (used + 2 != t.text.size() || c.d == 0) throw std::invalid_argument("");
                    have_d = true;
                } else if (t.text.rfind("aut=", 0) == 0 && !have_aut) {
                    const std::string v = t.text.substr(4);
                    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
                        throw std::invalid_argument("");
                    c.aut_order = BigInt(v);
                    if (c.aut_order == 0) throw std::invalid_argument("");
                    have_aut = true;
                } else {
                    throw std::invalid_argument("");
                }
            } catch (const std::exception&) {
                throw ParseError(lineno, t.column, t.text, "unexpected field");
            }
        }
        if (!have_d || !have_aut) throw ParseError(lineno, line.size() + 1, "", "missing d= or aut= field");
        db.classes.push_back(std::move(c));
    }
    if (!header) throw ParseError(lineno + 1, 1, "", "missing database header");
    return db;
}

Database read_database_file(const std::string& path) {
    auto f = open_in(path);
    return read_database(f);
}

}  // namespace sdac9
