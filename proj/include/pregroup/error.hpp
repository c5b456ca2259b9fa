#pragma once

#include <stdexcept>
#include <string>

namespace pregroup {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input: type expressions, grammar files, tables, tensors.
// Carries a 1-based line number (0 when unknown) and column (-1 when unknown).
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, int line_no = 0, int column_no = -1)
        : Error(format(msg, line_no, column_no)), line(line_no), column(column_no) {}

    int line;
    int column;

private:
    static std::string format(const std::string& msg, int line, int column) {
        std::string out = msg;
        if (line > 0) {
            out += " (line " + std::to_string(line);
            if (column >= 1) out += ", column " + std::to_string(column);
            out += ")";
        } else if (column >= 1) {
            out += " (column " + std::to_string(column) + ")";
        }
        return out;
    }
};

// A search bound was reached before the enumeration completed. Distinct from
// an empty result: the caller cannot tell whether more answers exist.
struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

}  // namespace pregroup
