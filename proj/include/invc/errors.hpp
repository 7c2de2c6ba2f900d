/*!
  \file errors.hpp
  \brief Error types shared across the library
*/

#pragma once

#include <stdexcept>
#include <string>

namespace invc
{

/*! \brief Malformed input text; carries a 1-based line number (0 when not tied to a line). */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::string const& message, int line = 0 )
      : std::runtime_error( line > 0 ? "line " + std::to_string( line ) + ": " + message : message ),
        line_( line )
  {
  }

  int line() const { return line_; }

private:
  int line_;
};

/*! \brief A configured resource limit (arity cap, pattern limit, search size) was exceeded. */
class cap_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace invc
