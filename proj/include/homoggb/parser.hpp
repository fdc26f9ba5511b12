#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homoggb/polynomial.hpp"

namespace homoggb {

/// Parse failure with 1-based source position.
struct parse_error : error {
    int line;
    int col;
    parse_error(const std::string& msg, int line_, int col_)
        : error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_),
          col(col_) {}
};

/// One polynomial. Syntax: terms joined by + / -; a term is an optional
/// coefficient (integer or a/b) followed by *-separated factors var or var^k.
/// Free-kind factor order is significant and juxtaposition is not allowed.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line_no = 1);

struct ParsedSystem {
    std::vector<Polynomial> polys;
    std::vector<std::string> warnings;  // zero-polynomial lines, skipped
};

/// One polynomial per line; '#' starts a comment; blank lines ignored.
ParsedSystem parse_system(const RingPtr& ring, std::string_view text);

}  // namespace homoggb
