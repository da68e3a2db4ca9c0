#pragma once

// Text formats: generator-matrix files and class database files.
//
// A matrix file has n lines of n whitespace-separated GF(9) tokens; blank
// lines and lines starting with '#' are ignored.
//
// A database file starts with "# sdac9 v1 n=<n>", followed by the sections
// "# indecomposable" and "# decomposable". Each class is one line
// "<trits> d=<d> aut=<order>", sorted by trits within its section. For n = 1
// the trit string is empty and the line is "d=1 aut=6".

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdac9/classify.hpp"

namespace sdac9 {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, std::string token, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& token() const { return token_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

/// Throws ParseError with the 1-based line and column of the offending token.
GeneratorMatrix read_matrix(std::istream& in);
GeneratorMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const GeneratorMatrix& g);

struct Database {
    std::size_t n = 0;
    std::vector<CodeClass> classes;
};

void write_database(std::ostream& out, std::size_t n, std::vector<CodeClass> classes);
void write_database_file(const std::string& path, std::size_t n, const std::vector<CodeClass>& classes);
/// Throws ParseError on a malformed header or line.
Database read_database(std::istream& in);
Database read_database_file(const std::string& path);

std::string database_file_name(std::size_t n);

}  // namespace sdac9
