/*!
  \file truth_table.hpp
  \brief Bit-vector truth tables, function systems, and the function file format

  A truth table of arity n stores 2^n bits.  Bit i holds f(a) for the input
  tuple a = (a_1, ..., a_n) with a_j = (i >> (j - 1)) & 1, i.e. x_1 sits in the
  least significant position of the index.

  All operations are pure; tables are safe to share across threads once built.
*/

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace invc
{

/*! \brief Largest arity accepted by the text parsers. */
inline constexpr int max_parse_arity = 16;

class truth_table
{
public:
  /*! \brief Constructs the arity-0 constant 0. */
  truth_table() : truth_table( 0 ) {}

  /*! \brief Constructs the all-zero table of the given arity. */
  explicit truth_table( int arity );

  /*! \brief Constructs from the low 2^arity bits of \p bits (arity at most 6). */
  truth_table( int arity, uint64_t bits );

  int arity() const { return arity_; }
  uint64_t num_bits() const { return uint64_t( 1 ) << arity_; }

  bool get( uint64_t index ) const
  {
    return ( words_[index >> 6] >> ( index & 63 ) ) & 1;
  }

  void set( uint64_t index, bool value )
  {
    uint64_t const mask = uint64_t( 1 ) << ( index & 63 );
    if ( value )
    {
      words_[index >> 6] |= mask;
    }
    else
    {
      words_[index >> 6] &= ~mask;
    }
  }

  uint64_t count_ones() const;

  truth_table operator~() const;
  truth_table operator&( truth_table const& other ) const;
  truth_table operator|( truth_table const& other ) const;
  truth_table operator^( truth_table const& other ) const;

  bool operator==( truth_table const& other ) const
  {
    return arity_ == other.arity_ && words_ == other.words_;
  }
  bool operator!=( truth_table const& other ) const { return !( *this == other ); }
  bool operator<( truth_table const& other ) const
  {
    if ( arity_ != other.arity_ )
    {
      return arity_ < other.arity_;
    }
    return words_ < other.words_;
  }

  /*! \brief Hex string with nibbles in LSB-first order.

    Nibble k of the string (counted from the left) holds bits 4k .. 4k+3, so
    x XOR y XOR z XOR 1 prints as "96".  The string always has
    ceil(2^arity / 4) digits.
  */
  std::string to_hex() const;

  /*! \brief Inverse of to_hex; \p hex must not carry a "0x" prefix.

    Throws std::invalid_argument on a wrong digit count, a non-hex character,
    or set bits beyond 2^arity.
  */
  static truth_table from_hex( int arity, std::string_view hex );

private:
  int arity_;
  std::vector<uint64_t> words_;
};

/*! \brief The projection onto variable \p var (0-based) as a function of \p arity variables. */
truth_table projection( int arity, int var );

/*! \brief The constant \p value as a function of \p arity variables. */
truth_table constant( int arity, bool value );

/*! \brief True iff raising any input never flips the output from 1 to 0.

  Arity-0 tables (constants) are monotone.
*/
bool is_monotone( truth_table const& table );

/*! \brief Composition: result(x) = fn(args[0](x), ..., args[a-1](x)).

  All argument tables must share one arity, which becomes the result arity;
  fn must have arity args.size().
*/
truth_table compose( truth_table const& fn, std::vector<truth_table> const& args );

/*! \brief A nonempty list of same-arity functions, interpreted jointly.

  Duplicates are allowed; order is preserved.
*/
class function_system
{
public:
  explicit function_system( std::vector<truth_table> members );

  int arity() const { return members_.empty() ? 0 : members_[0].arity(); }
  size_t size() const { return members_.size(); }
  std::vector<truth_table> const& members() const { return members_; }

  bool operator==( function_system const& other ) const { return members_ == other.members_; }
  bool operator!=( function_system const& other ) const { return !( *this == other ); }

private:
  std::vector<truth_table> members_;
};

struct named_function
{
  std::string name;
  truth_table table;
};

/*! \brief Reads lines of the form "<name> <arity> 0x<hex>".

  '#' starts a comment; blank lines are skipped.  Throws parse_error (with the
  offending line number) on malformed input or an empty file.
*/
std::vector<named_function> parse_function_file( std::istream& in );

/*! \brief One "<name> <arity> 0x<hex>" line, without trailing newline. */
std::string format_function_line( named_function const& fn );

/*! \brief Collects parsed functions into a system; throws on mixed arity. */
function_system to_system( std::vector<named_function> const& fns );

} // namespace invc
