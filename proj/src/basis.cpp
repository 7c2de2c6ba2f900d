#include "invc/basis.hpp"

#include "invc/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace invc
{

namespace
{

bool tuple_less( uint64_t a, uint64_t b )
{
  if ( a == b )
  {
    return false;
  }
  uint64_t const low = ( a ^ b ) & -( a ^ b );
  return ( a & low ) == 0;
}

} // namespace

basis::basis( std::vector<truth_table> omegas ) : omegas_( std::move( omegas ) )
{
  if ( omegas_.empty() )
  {
    throw std::invalid_argument( "basis needs at least one non-monotone generator" );
  }
  r_ = 0;
  for ( size_t i = 0; i < omegas_.size(); ++i )
  {
    if ( is_monotone( omegas_[i] ) )
    {
      throw std::invalid_argument( "generator " + std::to_string( i ) + " is monotone" );
    }
    r_ = std::max( r_, decrease( function_system( { omegas_[i] } ) ).d );
  }
  c_ = std::log2( 2.0 * r_ + 1.0 ) + 1.0;
}

basis basis::b0()
{
  return basis( { truth_table( 1, 0x1 ) } );
}

negation_gadget find_negation_gadget( basis const& b )
{
  for ( size_t idx = 0; idx < b.omegas().size(); ++idx )
  {
    auto const& omega = b.omegas()[idx];
    int const a = omega.arity();

    std::vector<uint64_t> corners( omega.num_bits() );
    std::iota( corners.begin(), corners.end(), 0 );
    std::sort( corners.begin(), corners.end(), tuple_less );

    for ( auto const corner : corners )
    {
      if ( !omega.get( corner ) )
      {
        continue;
      }
      for ( int pin = 0; pin < a; ++pin )
      {
        if ( corner >> pin & 1 )
        {
          continue;
        }
        if ( omega.get( corner | uint64_t( 1 ) << pin ) )
        {
          continue;
        }
        std::vector<bool> constants( size_t( a ), false );
        for ( int j = 0; j < a; ++j )
        {
          constants[j] = j != pin && ( corner >> j & 1 );
        }
        return { int( idx ), pin, std::move( constants ) };
      }
    }
  }
  /* unreachable: every generator is non-monotone, so some corner pair falls */
  throw std::logic_error( "no negation gadget in a non-monotone basis" );
}

truth_table apply_negation_gadget( basis const& b, negation_gadget const& gadget )
{
  auto const& omega = b.omegas().at( size_t( gadget.omega_index ) );
  truth_table result( 1 );
  for ( uint64_t v = 0; v < 2; ++v )
  {
    uint64_t point = v << gadget.pin;
    for ( int j = 0; j < omega.arity(); ++j )
    {
      if ( j != gadget.pin && gadget.constants[j] )
      {
        point |= uint64_t( 1 ) << j;
      }
    }
    result.set( v, omega.get( point ) );
  }
  return result;
}

bounds_result bounds_from_decrease( int d, basis const& b )
{
  if ( d < 0 )
  {
    throw std::invalid_argument( "decrease must be nonnegative" );
  }
  int const upper = std::bit_width( unsigned( d ) );
  int const lower = std::max( 0, int( std::ceil( double( upper ) - b.c() ) ) );
  return { lower, upper };
}

bounds_result bounds( function_system const& system, basis const& b, int cap )
{
  return bounds_from_decrease( decrease( system, cap ).d, b );
}

} // namespace invc
