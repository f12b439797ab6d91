#ifndef GISEMI_ERRORS_HPP_
#define GISEMI_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gisemi {

  // Malformed user input: bad graphs, unknown identifiers, violated
  // preconditions on values that came from outside the library.
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Text that failed to parse. Line and column are 1-based.
  class ParseError : public InputError {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : InputError(what + " (line " + std::to_string(line) + ", column " + std::to_string(column)
                     + ")"),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace gisemi

#endif  // GISEMI_ERRORS_HPP_
