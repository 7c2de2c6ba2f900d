#include "invc/truth_table.hpp"

#include "invc/errors.hpp"

#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace invc
{

namespace
{

uint64_t tail_mask( int arity )
{
  uint64_t const bits = uint64_t( 1 ) << arity;
  return bits >= 64 ? ~uint64_t( 0 ) : ( uint64_t( 1 ) << bits ) - 1;
}

} // namespace

truth_table::truth_table( int arity ) : arity_( arity )
{
  if ( arity < 0 || arity > 26 )
  {
    throw std::invalid_argument( "truth table arity out of range" );
  }
  words_.assign( arity <= 6 ? 1 : ( uint64_t( 1 ) << ( arity - 6 ) ), 0 );
}

truth_table::truth_table( int arity, uint64_t bits ) : truth_table( arity )
{
  if ( arity > 6 )
  {
    throw std::invalid_argument( "word constructor limited to arity 6" );
  }
  if ( ( bits & ~tail_mask( arity ) ) != 0 )
  {
    throw std::invalid_argument( "bits set beyond 2^arity" );
  }
  words_[0] = bits;
}

uint64_t truth_table::count_ones() const
{
  uint64_t count = 0;
  for ( auto const w : words_ )
  {
    count += std::popcount( w );
  }
  return count;
}

truth_table truth_table::operator~() const
{
  truth_table result( arity_ );
  for ( size_t i = 0; i < words_.size(); ++i )
  {
    result.words_[i] = ~words_[i];
  }
  if ( arity_ <= 6 )
  {
    result.words_[0] &= tail_mask( arity_ );
  }
  return result;
}

truth_table truth_table::operator&( truth_table const& other ) const
{
  if ( arity_ != other.arity_ )
  {
    throw std::invalid_argument( "arity mismatch" );
  }
  truth_table result( arity_ );
  for ( size_t i = 0; i < words_.size(); ++i )
  {
    result.words_[i] = words_[i] & other.words_[i];
  }
  return result;
}

truth_table truth_table::operator|( truth_table const& other ) const
{
  if ( arity_ != other.arity_ )
  {
    throw std::invalid_argument( "arity mismatch" );
  }
  truth_table result( arity_ );
  for ( size_t i = 0; i < words_.size(); ++i )
  {
    result.words_[i] = words_[i] | other.words_[i];
  }
  return result;
}

truth_table truth_table::operator^( truth_table const& other ) const
{
  if ( arity_ != other.arity_ )
  {
    throw std::invalid_argument( "arity mismatch" );
  }
  truth_table result( arity_ );
  for ( size_t i = 0; i < words_.size(); ++i )
  {
    result.words_[i] = words_[i] ^ other.words_[i];
  }
  return result;
}

std::string truth_table::to_hex() const
{
  static char const digits[] = "0123456789abcdef";
  size_t const n_digits = size_t( ( num_bits() + 3 ) / 4 );
  std::string out( n_digits, '0' );
  for ( size_t k = 0; k < n_digits; ++k )
  {
    int v = 0;
    for ( int j = 0; j < 4; ++j )
    {
      uint64_t const i = 4 * k + j;
      if ( i < num_bits() && get( i ) )
      {
        v |= 1 << j;
      }
    }
    out[k] = digits[v];
  }
  return out;
}

truth_table truth_table::from_hex( int arity, std::string_view hex )
{
  truth_table result( arity );
  size_t const n_digits = size_t( ( result.num_bits() + 3 ) / 4 );
  if ( hex.size() != n_digits )
  {
    throw parse_error( "expected " + std::to_string( n_digits ) +
                                 " hex digit(s) for arity " + std::to_string( arity ) );
  }
  for ( size_t k = 0; k < n_digits; ++k )
  {
    char const c = hex[k];
    int v;
    if ( c >= '0' && c <= '9' )
    {
      v = c - '0';
    }
    else if ( c >= 'a' && c <= 'f' )
    {
      v = c - 'a' + 10;
    }
    else if ( c >= 'A' && c <= 'F' )
    {
      v = c - 'A' + 10;
    }
    else
    {
      throw parse_error( "invalid hex digit" );
    }
    for ( int j = 0; j < 4; ++j )
    {
      if ( !( v >> j & 1 ) )
      {
        continue;
      }
      uint64_t const i = 4 * k + j;
      if ( i >= result.num_bits() )
      {
        throw parse_error( "bits set beyond 2^arity" );
      }
      result.set( i, true );
    }
  }
  return result;
}

truth_table projection( int arity, int var )
{
  if ( var < 0 || var >= arity )
  {
    throw std::invalid_argument( "projection variable out of range" );
  }
  truth_table result( arity );
  for ( uint64_t i = 0; i < result.num_bits(); ++i )
  {
    if ( i >> var & 1 )
    {
      result.set( i, true );
    }
  }
  return result;
}

truth_table constant( int arity, bool value )
{
  truth_table result( arity );
  if ( value )
  {
    result = ~result;
  }
  return result;
}

bool is_monotone( truth_table const& table )
{
  for ( uint64_t i = 0; i < table.num_bits(); ++i )
  {
    if ( !table.get( i ) )
    {
      continue;
    }
    for ( int j = 0; j < table.arity(); ++j )
    {
      if ( !( i >> j & 1 ) && !table.get( i | uint64_t( 1 ) << j ) )
      {
        return false;
      }
    }
  }
  return true;
}

truth_table compose( truth_table const& fn, std::vector<truth_table> const& args )
{
  if ( fn.arity() != int( args.size() ) )
  {
    throw std::invalid_argument( "composition arity mismatch" );
  }
  int const n = args.empty() ? 0 : args[0].arity();
  for ( auto const& a : args )
  {
    if ( a.arity() != n )
    {
      throw std::invalid_argument( "argument tables differ in arity" );
    }
  }
  truth_table result( n );
  for ( uint64_t p = 0; p < fn.num_bits(); ++p )
  {
    if ( !fn.get( p ) )
    {
      continue;
    }
    truth_table term = constant( n, true );
    for ( size_t l = 0; l < args.size(); ++l )
    {
      term = term & ( p >> l & 1 ? args[l] : ~args[l] );
    }
    result = result | term;
  }
  return result;
}

function_system::function_system( std::vector<truth_table> members )
    : members_( std::move( members ) )
{
  if ( members_.empty() )
  {
    throw std::invalid_argument( "function system must not be empty" );
  }
  for ( auto const& f : members_ )
  {
    if ( f.arity() != members_[0].arity() )
    {
      throw std::invalid_argument( "function system members differ in arity" );
    }
  }
}

std::vector<named_function> parse_function_file( std::istream& in )
{
  std::vector<named_function> out;
  std::string line;
  int lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    if ( auto const pos = line.find( '#' ); pos != std::string::npos )
    {
      line.resize( pos );
    }
    std::istringstream ss( line );
    std::string name;
    if ( !( ss >> name ) )
    {
      continue;
    }
    long long arity = -1;
    std::string hex;
    if ( !( ss >> arity >> hex ) )
    {
      throw parse_error( "expected '<name> <arity> 0x<hex>'", lineno );
    }
    std::string extra;
    if ( ss >> extra )
    {
      throw parse_error( "unexpected token '" + extra + "'", lineno );
    }
    if ( arity < 0 || arity > max_parse_arity )
    {
      throw parse_error( "arity out of range", lineno );
    }
    if ( hex.size() < 2 || hex[0] != '0' || ( hex[1] != 'x' && hex[1] != 'X' ) )
    {
      throw parse_error( "truth table must start with 0x", lineno );
    }
    try
    {
      out.push_back( { name, truth_table::from_hex( int( arity ), std::string_view( hex ).substr( 2 ) ) } );
    }
    catch ( parse_error const& e )
    {
      throw parse_error( e.what(), lineno );
    }
  }
  if ( out.empty() )
  {
    throw parse_error( "no functions in file" );
  }
  return out;
}

std::string format_function_line( named_function const& fn )
{
  return fn.name + " " + std::to_string( fn.table.arity() ) + " 0x" + fn.table.to_hex();
}

function_system to_system( std::vector<named_function> const& fns )
{
  std::vector<truth_table> members;
  members.reserve( fns.size() );
  for ( auto const& fn : fns )
  {
    members.push_back( fn.table );
  }
  return function_system( std::move( members ) );
}

} // namespace invc
