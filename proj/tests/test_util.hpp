#pragma once

#include "invc/basis.hpp"
#include "invc/circuit.hpp"
#include "invc/truth_table.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace test_util
{

using rng_t = std::mt19937_64;

inline invc::truth_table random_table( rng_t& rng, int arity )
{
  invc::truth_table t( arity );
  for ( uint64_t i = 0; i < t.num_bits(); ++i )
  {
    t.set( i, ( rng() & 1 ) != 0 );
  }
  return t;
}

/* sparse random seed closed upward */
inline invc::truth_table random_monotone_table( rng_t& rng, int arity )
{
  invc::truth_table t( arity );
  for ( uint64_t i = 0; i < t.num_bits(); ++i )
  {
    if ( ( rng() & 3 ) == 0 )
    {
      t.set( i, true );
    }
  }
  for ( uint64_t mask = 0; mask < t.num_bits(); ++mask )
  {
    if ( !t.get( mask ) )
    {
      continue;
    }
    for ( int j = 0; j < arity; ++j )
    {
      t.set( mask | uint64_t( 1 ) << j, true );
    }
  }
  return t;
}

inline invc::truth_table random_nonmonotone_table( rng_t& rng, int arity )
{
  for ( ;; )
  {
    auto t = random_table( rng, arity );
    if ( !invc::is_monotone( t ) )
    {
      return t;
    }
  }
}

inline invc::function_system random_system( rng_t& rng, int arity, int max_members )
{
  int const m = 1 + int( rng() % uint64_t( max_members ) );
  std::vector<invc::truth_table> members;
  for ( int i = 0; i < m; ++i )
  {
    members.push_back( random_table( rng, arity ) );
  }
  return invc::function_system( std::move( members ) );
}

inline invc::basis random_basis( rng_t& rng )
{
  int const count = 1 + int( rng() % 2 );
  std::vector<invc::truth_table> omegas;
  for ( int i = 0; i < count; ++i )
  {
    int const a = 1 + int( rng() % 3 );
    omegas.push_back( random_nonmonotone_table( rng, a ) );
  }
  return invc::basis( std::move( omegas ) );
}

inline invc::circuit random_circuit( rng_t& rng, invc::basis const& b, int n_inputs, int max_gates )
{
  invc::circuit s;
  s.n_inputs = n_inputs;
  auto pick_signal = [&]
  {
    int const total = n_inputs + int( s.gates.size() );
    int const idx = int( rng() % uint64_t( total ) );
    return idx < n_inputs ? invc::input_ref( idx ) : invc::gate_ref( idx - n_inputs );
  };
  int const n_gates = 1 + int( rng() % uint64_t( max_gates ) );
  for ( int i = 0; i < n_gates; ++i )
  {
    invc::gate g;
    if ( rng() % 3 == 0 )
    {
      g.kind = invc::gate::kind_t::basis;
      g.omega_index = int( rng() % b.omegas().size() );
      int const a = b.omegas()[size_t( g.omega_index )].arity();
      for ( int l = 0; l < a; ++l )
      {
        g.args.push_back( pick_signal() );
      }
    }
    else
    {
      g.kind = invc::gate::kind_t::monotone;
      int const a = int( rng() % 3 );
      g.table = random_monotone_table( rng, a );
      for ( int l = 0; l < a; ++l )
      {
        g.args.push_back( pick_signal() );
      }
    }
    s.gates.push_back( std::move( g ) );
  }
  int const n_outputs = 1 + int( rng() % 3 );
  for ( int i = 0; i < n_outputs; ++i )
  {
    s.outputs.push_back( pick_signal() );
  }
  return s;
}

/* the worked pair of example systems and the xor-complement basis */

inline invc::truth_table xnor3() { return invc::truth_table::from_hex( 3, "96" ); }

inline invc::function_system example_f1() { return invc::function_system( { xnor3() } ); }

inline invc::function_system example_f2()
{
  return invc::function_system( { invc::truth_table( 2, 0x5 ), invc::truth_table( 2, 0x3 ) } );
}

inline invc::basis xnor_basis() { return invc::basis( { xnor3() } ); }

inline invc::basis nand_basis() { return invc::basis( { invc::truth_table( 2, 0x7 ) } ); }

inline invc::basis xor_basis() { return invc::basis( { invc::truth_table( 2, 0x6 ) } ); }

inline std::string data_file( std::string const& name )
{
  return std::string( INVC_TEST_DATA ) + "/" + name;
}

inline std::string read_file( std::string const& path )
{
  std::ifstream in( path );
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline invc::function_system load_system( std::string const& path )
{
  std::ifstream in( path );
  return invc::to_system( invc::parse_function_file( in ) );
}

inline invc::circuit load_circuit( std::string const& path )
{
  std::ifstream in( path );
  return invc::parse_circuit( in );
}

/* command line runner */

inline std::string cli_path()
{
  if ( char const* env = std::getenv( "INVC_CLI" ) )
  {
    return env;
  }
#ifdef INVC_CLI_PATH
  return INVC_CLI_PATH;
#else
  return "";
#endif
}

inline std::filesystem::path temp_dir()
{
  auto p = std::filesystem::temp_directory_path() / ( "invc_tests_" + std::to_string( getpid() ) );
  std::filesystem::create_directories( p );
  return p;
}

inline std::string write_file( std::string const& name, std::string const& content )
{
  auto const p = temp_dir() / name;
  std::ofstream out( p );
  out << content;
  return p.string();
}

struct cli_result
{
  int exit_code;
  std::string out;
};

inline cli_result run_cli( std::string const& args )
{
  static int counter = 0;
  auto const out_path = temp_dir() / ( "cli_out_" + std::to_string( counter++ ) + ".txt" );
  std::string const cmd = cli_path() + " " + args + " >" + out_path.string() + " 2>&1";
  int const status = std::system( cmd.c_str() );
  cli_result res;
  res.exit_code = WIFEXITED( status ) ? WEXITSTATUS( status ) : -1;
  res.out = read_file( out_path.string() );
  std::filesystem::remove( out_path );
  return res;
}

inline std::map<std::string, std::string> parse_machine( std::string const& out )
{
  std::map<std::string, std::string> kv;
  std::istringstream in( out );
  std::string line;
  while ( std::getline( in, line ) )
  {
    if ( auto const eq = line.find( '=' ); eq != std::string::npos )
    {
      kv[line.substr( 0, eq )] = line.substr( eq + 1 );
    }
  }
  return kv;
}

} // namespace test_util
