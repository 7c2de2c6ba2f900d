#include "invc/decrease.hpp"

#include "invc/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace invc
{

namespace
{

bool jump_unchecked( function_system const& system, uint64_t a, uint64_t b )
{
  for ( auto const& f : system.members() )
  {
    if ( f.get( a ) && !f.get( b ) )
    {
      return true;
    }
  }
  return false;
}

/* Tuple order: compare x_1 first, i.e. the lowest differing bit decides. */
bool tuple_less( uint64_t a, uint64_t b )
{
  if ( a == b )
  {
    return false;
  }
  uint64_t const low = ( a ^ b ) & -( a ^ b );
  return ( a & low ) == 0;
}

void check_cap( function_system const& system, int cap )
{
  if ( system.arity() > cap )
  {
    throw cap_error( "arity " + std::to_string( system.arity() ) +
                     " exceeds cap " + std::to_string( cap ) );
  }
}

/* Most jumps over chains starting at each tuple. */
std::vector<int> suffix_profile( function_system const& system )
{
  int const n = system.arity();
  uint64_t const size = uint64_t( 1 ) << n;
  std::vector<int> mu( size, 0 );
  for ( uint64_t mask = size; mask-- > 0; )
  {
    for ( int j = 0; j < n; ++j )
    {
      if ( mask >> j & 1 )
      {
        continue;
      }
      uint64_t const next = mask | uint64_t( 1 ) << j;
      mu[mask] = std::max( mu[mask], mu[next] + ( jump_unchecked( system, mask, next ) ? 1 : 0 ) );
    }
  }
  return mu;
}

void enumerate_chains( function_system const& system, uint64_t point, uint64_t size, int jumps, int& best )
{
  best = std::max( best, jumps );
  uint64_t const complement = ( size - 1 ) & ~point;
  for ( uint64_t add = complement; add != 0; add = ( add - 1 ) & complement )
  {
    uint64_t const next = point | add;
    enumerate_chains( system, next, size, jumps + ( jump_unchecked( system, point, next ) ? 1 : 0 ), best );
  }
}

} // namespace

bool is_increasing_chain( chain const& c, int arity )
{
  if ( c.points.empty() )
  {
    return false;
  }
  uint64_t const size = uint64_t( 1 ) << arity;
  if ( c.points[0] >= size )
  {
    return false;
  }
  for ( size_t i = 1; i < c.points.size(); ++i )
  {
    uint64_t const prev = c.points[i - 1];
    uint64_t const cur = c.points[i];
    if ( cur >= size || cur == prev || ( prev & ~cur ) != 0 )
    {
      return false;
    }
  }
  return true;
}

std::string format_tuple( uint64_t mask, int arity )
{
  std::string out( size_t( arity ), '0' );
  for ( int j = 0; j < arity; ++j )
  {
    if ( mask >> j & 1 )
    {
      out[j] = '1';
    }
  }
  return out;
}

bool is_jump( function_system const& system, uint64_t alpha, uint64_t beta )
{
  uint64_t const size = uint64_t( 1 ) << system.arity();
  if ( alpha >= size || beta >= size )
  {
    throw std::invalid_argument( "tuple out of range" );
  }
  if ( alpha == beta )
  {
    throw std::invalid_argument( "jump pair must be distinct" );
  }
  if ( ( alpha & ~beta ) != 0 )
  {
    throw std::invalid_argument( "jump pair must be componentwise increasing" );
  }
  return jump_unchecked( system, alpha, beta );
}

int chain_jump_count( function_system const& system, chain const& c )
{
  if ( !is_increasing_chain( c, system.arity() ) )
  {
    throw std::invalid_argument( "not an increasing chain" );
  }
  int count = 0;
  for ( size_t i = 1; i < c.points.size(); ++i )
  {
    if ( jump_unchecked( system, c.points[i - 1], c.points[i] ) )
    {
      ++count;
    }
  }
  return count;
}

decrease_result decrease( function_system const& system, int cap )
{
  check_cap( system, cap );
  int const n = system.arity();
  auto const mu = suffix_profile( system );

  int d = 0;
  for ( auto const v : mu )
  {
    d = std::max( d, v );
  }

  uint64_t start = 0;
  for ( uint64_t mask = 0; mask < mu.size(); ++mask )
  {
    if ( mu[mask] == d && ( mu[start] != d || tuple_less( mask, start ) ) )
    {
      start = mask;
    }
  }

  chain witness;
  witness.points.push_back( start );
  uint64_t cur = start;
  int remaining = d;
  while ( remaining > 0 )
  {
    bool extended = false;
    /* raising a higher variable gives the smaller successor in tuple order */
    for ( int j = n; j-- > 0; )
    {
      if ( cur >> j & 1 )
      {
        continue;
      }
      uint64_t const next = cur | uint64_t( 1 ) << j;
      int const w = jump_unchecked( system, cur, next ) ? 1 : 0;
      if ( w + mu[next] >= remaining )
      {
        witness.points.push_back( next );
        remaining -= w;
        cur = next;
        extended = true;
        break;
      }
    }
    if ( !extended )
    {
      throw std::logic_error( "decrease witness reconstruction failed" );
    }
  }
  return { d, std::move( witness ) };
}

int decrease_oracle( function_system const& system, int cap )
{
  check_cap( system, cap );
  uint64_t const size = uint64_t( 1 ) << system.arity();
  std::vector<int> longest( size, 0 );
  int d = 0;
  for ( uint64_t mask = 1; mask < size; ++mask )
  {
    for ( uint64_t sub = ( mask - 1 ) & mask;; sub = ( sub - 1 ) & mask )
    {
      longest[mask] = std::max( longest[mask],
                                longest[sub] + ( jump_unchecked( system, sub, mask ) ? 1 : 0 ) );
      if ( sub == 0 )
      {
        break;
      }
    }
    d = std::max( d, longest[mask] );
  }
  if ( system.arity() <= 3 && decrease_all_chains( system ) != d )
  {
    throw std::logic_error( "comparability DAG and chain enumeration disagree" );
  }
  return d;
}

int decrease_all_chains( function_system const& system, int cap )
{
  check_cap( system, cap );
  uint64_t const size = uint64_t( 1 ) << system.arity();
  int best = 0;
  for ( uint64_t start = 0; start < size; ++start )
  {
    enumerate_chains( system, start, size, 0, best );
  }
  return best;
}

decrease_profile nu_profile( function_system const& system, int cap )
{
  check_cap( system, cap );
  int const n = system.arity();
  uint64_t const size = uint64_t( 1 ) << n;
  decrease_profile profile{ n, std::vector<int>( size, 0 ) };
  for ( uint64_t mask = 1; mask < size; ++mask )
  {
    for ( int j = 0; j < n; ++j )
    {
      if ( !( mask >> j & 1 ) )
      {
        continue;
      }
      uint64_t const prev = mask & ~( uint64_t( 1 ) << j );
      profile.nu[mask] = std::max( profile.nu[mask],
                                   profile.nu[prev] + ( jump_unchecked( system, prev, mask ) ? 1 : 0 ) );
    }
  }
  return profile;
}

int markov_complexity( function_system const& system, int cap )
{
  return std::bit_width( unsigned( decrease( system, cap ).d ) );
}

} // namespace invc
