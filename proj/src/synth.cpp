#include "invc/synth.hpp"

#include "invc/errors.hpp"

#include <bit>
#include <stdexcept>

namespace invc
{

namespace
{

truth_table separator_table( function_system const& system, int threshold )
{
  auto const profile = nu_profile( system );
  truth_table m( system.arity() );
  for ( uint64_t mask = 0; mask < m.num_bits(); ++mask )
  {
    m.set( mask, profile.nu[mask] >= threshold );
  }
  return m;
}

/* g_i over (x, y) with y as the new last variable. */
function_system transform( function_system const& system, truth_table const& m )
{
  int const n = system.arity();
  uint64_t const size = uint64_t( 1 ) << n;
  std::vector<truth_table> out;
  out.reserve( system.size() );
  for ( auto const& f : system.members() )
  {
    truth_table g( n + 1 );
    for ( uint64_t mask = 0; mask < g.num_bits(); ++mask )
    {
      uint64_t const x = mask & ( size - 1 );
      bool const y = mask >> n & 1;
      bool const fx = f.get( x );
      bool const mx = m.get( x );
      g.set( mask, ( fx || mx ) && ( ( fx && mx ) || y ) );
    }
    out.push_back( std::move( g ) );
  }
  return function_system( std::move( out ) );
}

} // namespace

std::pair<truth_table, function_system> decompose_step( function_system const& system, int cap )
{
  int const d = decrease( system, cap ).d;
  if ( d == 0 )
  {
    throw std::invalid_argument( "system is monotone; nothing to decompose" );
  }
  int const k = std::bit_width( unsigned( d ) );
  int const threshold = 1 << ( k - 1 );
  auto m = separator_table( system, threshold );
  auto transformed = transform( system, m );
  return { std::move( m ), std::move( transformed ) };
}

synth_result synthesize( function_system const& system, basis const& b, int cap )
{
  int const n = system.arity();
  int const d0 = decrease( system, cap ).d;
  int const levels = std::bit_width( unsigned( d0 ) );
  if ( n + levels > cap )
  {
    throw cap_error( "synthesis needs arity " + std::to_string( n + levels ) +
                     ", cap is " + std::to_string( cap ) );
  }

  synth_result result;
  circuit& s = result.circ;
  s.n_inputs = n;

  negation_gadget gadget{ -1, 0, {} };
  if ( levels > 0 )
  {
    gadget = find_negation_gadget( b );
  }
  int const_gates[2] = { -1, -1 };
  auto const_signal = [&]( bool value ) -> signal
  {
    if ( const_gates[value] < 0 )
    {
      s.gates.push_back( gate{ gate::kind_t::monotone, constant( 0, value ), -1, {},
                               value ? "const1" : "const0" } );
      const_gates[value] = int( s.gates.size() ) - 1;
    }
    return gate_ref( const_gates[value] );
  };

  std::vector<signal> pool;
  for ( int i = 0; i < n; ++i )
  {
    pool.push_back( input_ref( i ) );
  }

  function_system current = system;
  while ( true )
  {
    int const d = decrease( current, cap ).d;
    if ( d == 0 )
    {
      for ( auto const& f : current.members() )
      {
        s.gates.push_back( gate{ gate::kind_t::monotone, f, -1, pool, {} } );
        s.outputs.push_back( gate_ref( int( s.gates.size() ) - 1 ) );
      }
      break;
    }

    int const k = std::bit_width( unsigned( d ) );
    int const threshold = 1 << ( k - 1 );
    auto const m = separator_table( current, threshold );
    if ( !is_monotone( m ) )
    {
      throw std::logic_error( "separator came out non-monotone" );
    }
    s.gates.push_back( gate{ gate::kind_t::monotone, m, -1, pool, {} } );
    signal const m_signal = gate_ref( int( s.gates.size() ) - 1 );

    auto const& omega = b.omegas()[size_t( gadget.omega_index )];
    std::vector<signal> wiring( size_t( omega.arity() ) );
    for ( int j = 0; j < omega.arity(); ++j )
    {
      wiring[j] = j == gadget.pin ? m_signal : const_signal( gadget.constants[j] );
    }
    s.gates.push_back( gate{ gate::kind_t::basis, {}, gadget.omega_index,
                             std::move( wiring ), {} } );
    signal const y_signal = gate_ref( int( s.gates.size() ) - 1 );

    auto transformed = transform( current, m );
    if ( decrease( transformed, cap ).d > threshold - 1 )
    {
      throw std::logic_error( "decomposition failed to halve the decrease" );
    }
    result.trace.levels.push_back( synth_level{ k, threshold, m, transformed } );

    pool.push_back( y_signal );
    current = std::move( transformed );
  }

  if ( realized_system( s, b, cap ) != system )
  {
    throw std::logic_error( "synthesized circuit does not realize the system" );
  }
  if ( inversion_weight( s ) != levels )
  {
    throw std::logic_error( "synthesized circuit has the wrong weight" );
  }
  return result;
}

} // namespace invc
