// Presentation file reader.
//
//   # comment
//   generators: x, a, b
//   relators: x^2, (x*a)^2, [a,b], a^b * a^-3, x^5 = y
//   subgroup: x, a*b
//
// word := term { '*' term }
// term := atom [ '^' ( integer | atom ) ]
// atom := name | '(' word ')' | '[' word ',' word ']'
//
// A trailing '\' continues a line. In relators, u = w stands for u*w^-1.

#ifndef COSEN_PARSE_HPP_
#define COSEN_PARSE_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cosen/words.hpp"

namespace cosen {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what);

    std::size_t line() const noexcept { return _line; }
    std::size_t column() const noexcept { return _column; }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  // Warnings (e.g. relators that reduce to the empty word) are appended to
  // `warnings` when it is non-null.
  Presentation parse_presentation(std::string_view          text,
                                  std::vector<std::string>* warnings = nullptr);

  Presentation read_presentation_file(std::string const&        path,
                                      std::vector<std::string>* warnings = nullptr);

  // Parses a single word expression over the given generator names.
  Expr parse_expr(std::string_view text, std::vector<std::string> const& names);

}  // namespace cosen

#endif  // COSEN_PARSE_HPP_
