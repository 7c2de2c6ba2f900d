#include "invc/exact.hpp"

#include "invc/decrease.hpp"
#include "invc/errors.hpp"

#include <array>
#include <climits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace invc
{

namespace
{

/* Enumerating feed tuples is cut off beyond this many combinations per generator. */
constexpr uint64_t tuple_limit = uint64_t( 1 ) << 26;

/* One row per tuple: row[a] = set of tuples whose pattern dominates pattern(a).
   Pools always contain the projections, so patterns are distinct per tuple and
   the pattern order is simply a relation on tuples. */
using rows_t = std::vector<uint32_t>;

struct node_key
{
  std::array<uint64_t, 4> words{};

  bool operator==( node_key const& other ) const { return words == other.words; }
};

struct node_key_hash
{
  size_t operator()( node_key const& key ) const
  {
    uint64_t h = 1469598103934665603ULL;
    for ( auto const w : key.words )
    {
      h = ( h ^ w ) * 1099511628211ULL;
    }
    return size_t( h );
  }
};

node_key pack( rows_t const& rows )
{
  node_key key;
  for ( size_t i = 0; i < rows.size(); ++i )
  {
    key.words[i / 4] |= uint64_t( rows[i] ) << ( 16 * ( i & 3 ) );
  }
  return key;
}

bool upclosed( uint32_t set, rows_t const& rows )
{
  for ( size_t a = 0; a < rows.size(); ++a )
  {
    if ( ( set >> a & 1 ) && ( rows[a] & ~set ) != 0 )
    {
      return false;
    }
  }
  return true;
}

rows_t refine( rows_t const& rows, uint32_t z )
{
  rows_t out( rows );
  for ( size_t a = 0; a < out.size(); ++a )
  {
    if ( z >> a & 1 )
    {
      out[a] &= z;
    }
  }
  return out;
}

std::vector<uint32_t> upsets_of( rows_t const& rows )
{
  std::vector<uint32_t> out;
  uint32_t const full = uint32_t( ( uint64_t( 1 ) << rows.size() ) - 1 );
  for ( uint32_t set = 0;; ++set )
  {
    if ( upclosed( set, rows ) )
    {
      out.push_back( set );
    }
    if ( set == full )
    {
      break;
    }
  }
  return out;
}

struct candidate
{
  uint32_t z;
  int omega_index;
  std::vector<uint32_t> feeds;
};

/* New-signal candidates in a fixed order: generators in basis order, feed
   tuples lexicographic over the ascending up-set list, duplicates keeping the
   first producer.  Signals already expressible are skipped; they cannot
   change the pool. */
std::vector<candidate> candidates_of( rows_t const& rows, basis const& b )
{
  auto const upsets = upsets_of( rows );
  std::vector<candidate> out;
  std::unordered_set<uint32_t> seen;
  for ( size_t w = 0; w < b.omegas().size(); ++w )
  {
    auto const& omega = b.omegas()[w];
    int const a = omega.arity();

    uint64_t combinations = 1;
    for ( int l = 0; l < a; ++l )
    {
      combinations *= upsets.size();
      if ( combinations > tuple_limit )
      {
        throw cap_error( "exact search candidate space too large" );
      }
    }

    std::vector<size_t> odometer( size_t( a ), 0 );
    for ( uint64_t step = 0; step < combinations; ++step )
    {
      uint32_t z = 0;
      for ( size_t point = 0; point < rows.size(); ++point )
      {
        uint64_t p = 0;
        for ( int l = 0; l < a; ++l )
        {
          p |= uint64_t( upsets[odometer[l]] >> point & 1 ) << l;
        }
        if ( omega.get( p ) )
        {
          z |= uint32_t( 1 ) << point;
        }
      }
      if ( seen.insert( z ).second && !upclosed( z, rows ) )
      {
        std::vector<uint32_t> feeds( size_t( a ), 0 );
        for ( int l = 0; l < a; ++l )
        {
          feeds[l] = upsets[odometer[l]];
        }
        out.push_back( candidate{ z, int( w ), std::move( feeds ) } );
      }
      for ( int l = a; l-- > 0; )
      {
        if ( ++odometer[l] < upsets.size() )
        {
          break;
        }
        odometer[l] = 0;
      }
    }
  }
  return out;
}

struct memo_entry
{
  int min_solvable = INT_MAX;
  int max_unsolvable = -1;
};

struct search_engine
{
  basis const& b;
  std::vector<uint32_t> targets;
  std::unordered_map<node_key, memo_entry, node_key_hash> memo;

  bool all_expressible( rows_t const& rows ) const
  {
    for ( auto const t : targets )
    {
      if ( !upclosed( t, rows ) )
      {
        return false;
      }
    }
    return true;
  }

  bool solvable( rows_t const& rows, int budget )
  {
    if ( all_expressible( rows ) )
    {
      return true;
    }
    if ( budget == 0 )
    {
      return false;
    }
    auto& entry = memo[pack( rows )];
    if ( budget >= entry.min_solvable )
    {
      return true;
    }
    if ( budget <= entry.max_unsolvable )
    {
      return false;
    }
    for ( auto const& cand : candidates_of( rows, b ) )
    {
      if ( solvable( refine( rows, cand.z ), budget - 1 ) )
      {
        /* re-lookup: the recursion may have rehashed the memo */
        auto& fresh = memo[pack( rows )];
        fresh.min_solvable = std::min( fresh.min_solvable, budget );
        return true;
      }
    }
    auto& fresh = memo[pack( rows )];
    fresh.max_unsolvable = std::max( fresh.max_unsolvable, budget );
    return false;
  }

  std::vector<candidate> reconstruct( rows_t rows, int t )
  {
    std::vector<candidate> path;
    while ( !all_expressible( rows ) )
    {
      bool advanced = false;
      for ( auto const& cand : candidates_of( rows, b ) )
      {
        auto child = refine( rows, cand.z );
        if ( solvable( child, t - int( path.size() ) - 1 ) )
        {
          path.push_back( cand );
          rows = std::move( child );
          advanced = true;
          break;
        }
      }
      if ( !advanced )
      {
        throw std::logic_error( "exact search failed to reconstruct a solution" );
      }
    }
    return path;
  }
};

truth_table table_from_mask( int arity, uint32_t mask )
{
  truth_table t( arity );
  for ( uint64_t i = 0; i < t.num_bits(); ++i )
  {
    if ( mask >> i & 1 )
    {
      t.set( i, true );
    }
  }
  return t;
}

circuit build_witness( function_system const& system, basis const& b,
                       std::vector<exact_step> const& steps )
{
  int const n = system.arity();
  circuit s;
  s.n_inputs = n;
  pattern_pool pool( n );
  std::vector<signal> pool_signals;
  for ( int i = 0; i < n; ++i )
  {
    pool_signals.push_back( input_ref( i ) );
  }
  for ( auto const& step : steps )
  {
    std::vector<signal> wiring;
    for ( auto const& feed : step.feeds )
    {
      s.gates.push_back( gate{ gate::kind_t::monotone, monotone_extension( feed, pool ), -1,
                               pool_signals, {} } );
      wiring.push_back( gate_ref( int( s.gates.size() ) - 1 ) );
    }
    s.gates.push_back( gate{ gate::kind_t::basis, {}, step.omega_index, std::move( wiring ), {} } );
    pool_signals.push_back( gate_ref( int( s.gates.size() ) - 1 ) );
    pool = pool.extended( step.z );
  }
  for ( auto const& f : system.members() )
  {
    s.gates.push_back( gate{ gate::kind_t::monotone, monotone_extension( f, pool ), -1,
                             pool_signals, {} } );
    s.outputs.push_back( gate_ref( int( s.gates.size() ) - 1 ) );
  }
  if ( realized_system( s, b ) != system )
  {
    throw std::logic_error( "exact witness does not realize the system" );
  }
  if ( inversion_weight( s ) != int( steps.size() ) )
  {
    throw std::logic_error( "exact witness has the wrong weight" );
  }
  return s;
}

} // namespace

pattern_pool::pattern_pool( int arity ) : arity_( arity )
{
  for ( int i = 0; i < arity; ++i )
  {
    signals_.push_back( projection( arity, i ) );
  }
}

pattern_pool pattern_pool::extended( truth_table const& signal_table ) const
{
  if ( signal_table.arity() != arity_ )
  {
    throw std::invalid_argument( "pool signal arity mismatch" );
  }
  if ( signals_.size() >= 64 )
  {
    throw cap_error( "pool limited to 64 signals" );
  }
  pattern_pool out( *this );
  out.signals_.push_back( signal_table );
  return out;
}

uint64_t pattern_pool::pattern( uint64_t point ) const
{
  uint64_t p = 0;
  for ( size_t l = 0; l < signals_.size(); ++l )
  {
    if ( signals_[l].get( point ) )
    {
      p |= uint64_t( 1 ) << l;
    }
  }
  return p;
}

bool monotone_expressible( truth_table const& g, pattern_pool const& pool )
{
  if ( g.arity() != pool.arity() )
  {
    throw std::invalid_argument( "arity mismatch" );
  }
  uint64_t const size = g.num_bits();
  std::vector<uint64_t> patterns( size );
  for ( uint64_t a = 0; a < size; ++a )
  {
    patterns[a] = pool.pattern( a );
  }
  for ( uint64_t a = 0; a < size; ++a )
  {
    if ( !g.get( a ) )
    {
      continue;
    }
    for ( uint64_t c = 0; c < size; ++c )
    {
      if ( ( patterns[a] & ~patterns[c] ) == 0 && !g.get( c ) )
      {
        return false;
      }
    }
  }
  return true;
}

truth_table monotone_extension( truth_table const& g, pattern_pool const& pool )
{
  if ( !monotone_expressible( g, pool ) )
  {
    throw std::invalid_argument( "function is not monotone over the pool" );
  }
  int const s = int( pool.signals().size() );
  if ( s > 20 )
  {
    throw cap_error( "extension table too wide" );
  }
  truth_table result( s );
  for ( uint64_t p = 0; p < result.num_bits(); ++p )
  {
    for ( uint64_t a = 0; a < g.num_bits(); ++a )
    {
      if ( g.get( a ) && ( pool.pattern( a ) & ~p ) == 0 )
      {
        result.set( p, true );
        break;
      }
    }
  }
  return result;
}

std::vector<truth_table> enumerate_monotone_signals( pattern_pool const& pool, int pattern_limit )
{
  int const n = pool.arity();
  uint64_t const size = uint64_t( 1 ) << n;
  /* projections keep patterns distinct, so they number exactly 2^arity */
  if ( size > uint64_t( pattern_limit ) || size > 16 )
  {
    throw cap_error( "too many distinct patterns" );
  }
  rows_t rows( size, 0 );
  for ( uint64_t a = 0; a < size; ++a )
  {
    for ( uint64_t c = 0; c < size; ++c )
    {
      if ( ( pool.pattern( a ) & ~pool.pattern( c ) ) == 0 )
      {
        rows[a] |= uint32_t( 1 ) << c;
      }
    }
  }
  std::vector<truth_table> out;
  for ( auto const set : upsets_of( rows ) )
  {
    out.push_back( table_from_mask( n, set ) );
  }
  return out;
}

exact_result exact_inversion_complexity( function_system const& system, basis const& b,
                                         exact_options const& options )
{
  int const n = system.arity();
  uint64_t const size = uint64_t( 1 ) << n;
  if ( size > uint64_t( options.pattern_limit ) || size > 16 )
  {
    throw cap_error( "arity too large for exact search" );
  }

  search_engine engine{ b, {}, {} };
  for ( auto const& f : system.members() )
  {
    uint32_t mask = 0;
    for ( uint64_t a = 0; a < size; ++a )
    {
      if ( f.get( a ) )
      {
        mask |= uint32_t( 1 ) << a;
      }
    }
    engine.targets.push_back( mask );
  }

  rows_t root( size, 0 );
  for ( uint64_t a = 0; a < size; ++a )
  {
    for ( uint64_t c = 0; c < size; ++c )
    {
      if ( ( a & ~c ) == 0 )
      {
        root[a] |= uint32_t( 1 ) << c;
      }
    }
  }

  exact_result result;
  result.t_max = options.t_max >= 0 ? options.t_max : markov_complexity( system );
  for ( int t = 0; t <= result.t_max; ++t )
  {
    if ( !engine.solvable( root, t ) )
    {
      continue;
    }
    for ( auto const& cand : engine.reconstruct( root, t ) )
    {
      exact_step step;
      step.omega_index = cand.omega_index;
      for ( auto const feed : cand.feeds )
      {
        step.feeds.push_back( table_from_mask( n, feed ) );
      }
      step.z = table_from_mask( n, cand.z );
      result.steps.push_back( std::move( step ) );
    }
    result.weight = t;
    if ( options.want_witness )
    {
      result.witness = build_witness( system, b, result.steps );
    }
    return result;
  }
  return result;
}

} // namespace invc
