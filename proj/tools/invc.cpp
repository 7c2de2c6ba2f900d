#include "invc/basis.hpp"
#include "invc/circuit.hpp"
#include "invc/decrease.hpp"
#include "invc/errors.hpp"
#include "invc/exact.hpp"
#include "invc/synth.hpp"
#include "invc/truth_table.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

invc::function_system load_functions( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw invc::parse_error( "cannot open " + path );
  }
  try
  {
    return invc::to_system( invc::parse_function_file( in ) );
  }
  catch ( invc::parse_error const& e )
  {
    throw invc::parse_error( path + ": " + e.what() );
  }
}

invc::basis load_basis( std::string const& path )
{
  if ( path.empty() )
  {
    return invc::basis::b0();
  }
  std::ifstream in( path );
  if ( !in )
  {
    throw invc::parse_error( "cannot open " + path );
  }
  std::vector<invc::named_function> fns;
  try
  {
    fns = invc::parse_function_file( in );
  }
  catch ( invc::parse_error const& e )
  {
    throw invc::parse_error( path + ": " + e.what() );
  }
  std::vector<invc::truth_table> omegas;
  for ( auto const& fn : fns )
  {
    omegas.push_back( fn.table );
  }
  try
  {
    return invc::basis( std::move( omegas ) );
  }
  catch ( std::invalid_argument const& e )
  {
    throw std::invalid_argument( path + ": " + e.what() );
  }
}

invc::circuit load_circuit( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw invc::parse_error( "cannot open " + path );
  }
  try
  {
    return invc::parse_circuit( in );
  }
  catch ( invc::parse_error const& e )
  {
    throw invc::parse_error( path + ": " + e.what() );
  }
}

void write_text( std::string const& path, std::string const& text )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw invc::parse_error( "cannot open " + path + " for writing" );
  }
  out << text;
}

std::string format_witness( invc::chain const& c, int arity )
{
  std::string out;
  for ( size_t i = 0; i < c.points.size(); ++i )
  {
    if ( i > 0 )
    {
      out += ' ';
    }
    out += invc::format_tuple( c.points[i], arity );
  }
  return out;
}

std::string format_double( double v )
{
  std::ostringstream os;
  os << v;
  return os.str();
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "inversion complexity toolkit for boolean circuits" };
  app.require_subcommand( 1 );

  std::string funcs_path;
  std::string basis_path;
  std::string circuit_path;
  std::string out_path;
  int t_max = -1;
  bool machine = false;
  bool trace = false;
  bool witness = false;

  auto* sc_decrease = app.add_subcommand( "decrease", "decrease of a function system" );
  sc_decrease->add_option( "--funcs", funcs_path, "function file" )->required();
  sc_decrease->add_flag( "--machine", machine, "one key=value per line" );
  sc_decrease->add_flag( "--witness", witness, "print a maximizing chain" );

  auto* sc_bounds = app.add_subcommand( "bounds", "inversion complexity bounds over a basis" );
  sc_bounds->add_option( "--funcs", funcs_path, "function file" )->required();
  sc_bounds->add_option( "--basis", basis_path, "basis file (default: negation)" );
  sc_bounds->add_flag( "--machine", machine, "one key=value per line" );

  auto* sc_synth = app.add_subcommand( "synth", "synthesize a circuit of minimal weight" );
  sc_synth->add_option( "--funcs", funcs_path, "function file" )->required();
  sc_synth->add_option( "--basis", basis_path, "basis file (default: negation)" );
  sc_synth->add_option( "--out", out_path, "write the circuit here" );
  sc_synth->add_flag( "--machine", machine, "one key=value per line" );
  sc_synth->add_flag( "--trace", trace, "print the per-level decomposition" );

  auto* sc_verify = app.add_subcommand( "verify", "check a circuit against a function file" );
  sc_verify->add_option( "--funcs", funcs_path, "function file" )->required();
  sc_verify->add_option( "--circuit", circuit_path, "circuit file" )->required();
  sc_verify->add_option( "--basis", basis_path, "basis file (default: negation)" );
  sc_verify->add_flag( "--machine", machine, "one key=value per line" );

  auto* sc_exact = app.add_subcommand( "exact", "exact minimal weighted-gate count" );
  sc_exact->add_option( "--funcs", funcs_path, "function file" )->required();
  sc_exact->add_option( "--basis", basis_path, "basis file (default: negation)" );
  sc_exact->add_option( "--t-max", t_max, "largest count to try (default: the negation-basis value)" );
  sc_exact->add_option( "--out", out_path, "write a witness circuit here" );
  sc_exact->add_flag( "--machine", machine, "one key=value per line" );
  sc_exact->add_flag( "--witness", witness, "build a witness circuit" );
  sc_exact->add_flag( "--trace", trace, "print the weighted gates of the witness" );

  auto* sc_split = app.add_subcommand( "split", "peel the first weighted gate off a circuit" );
  sc_split->add_option( "--circuit", circuit_path, "circuit file" )->required();
  sc_split->add_option( "--basis", basis_path, "basis file (default: negation)" );
  sc_split->add_option( "--out", out_path, "write the reduced circuit here" );
  sc_split->add_flag( "--machine", machine, "one key=value per line" );

  auto* sc_check = app.add_subcommand( "check-bound", "decrease bound for a circuit's weight" );
  sc_check->add_option( "--circuit", circuit_path, "circuit file" )->required();
  sc_check->add_option( "--basis", basis_path, "basis file (default: negation)" );
  sc_check->add_flag( "--machine", machine, "one key=value per line" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::Success const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return 3;
  }

  try
  {
    if ( sc_decrease->parsed() )
    {
      auto const sys = load_functions( funcs_path );
      auto const res = invc::decrease( sys );
      if ( machine )
      {
        std::cout << "d=" << res.d << "\n";
        std::cout << "witness=" << format_witness( res.witness, sys.arity() ) << "\n";
      }
      else
      {
        std::cout << "d = " << res.d << "\n";
        if ( witness )
        {
          std::cout << "witness: " << format_witness( res.witness, sys.arity() ) << "\n";
        }
      }
      return 0;
    }

    if ( sc_bounds->parsed() )
    {
      auto const sys = load_functions( funcs_path );
      auto const b = load_basis( basis_path );
      auto const d = invc::decrease( sys ).d;
      auto const res = invc::bounds_from_decrease( d, b );
      if ( machine )
      {
        std::cout << "d=" << d << "\n";
        std::cout << "r=" << b.r() << "\n";
        std::cout << "c=" << format_double( b.c() ) << "\n";
        std::cout << "lower=" << res.lower << "\n";
        std::cout << "upper=" << res.upper << "\n";
      }
      else
      {
        std::cout << "d = " << d << "\n";
        std::cout << "r = " << b.r() << ", c = " << format_double( b.c() ) << "\n";
        std::cout << "lower = " << res.lower << "\n";
        std::cout << "upper = " << res.upper << "\n";
      }
      return 0;
    }

    if ( sc_synth->parsed() )
    {
      auto const sys = load_functions( funcs_path );
      auto const b = load_basis( basis_path );
      auto const res = invc::synthesize( sys, b );
      std::string text;
      if ( trace )
      {
        /* annotate the circuit itself; '#' lines survive a reparse */
        for ( size_t i = 0; i < res.trace.levels.size(); ++i )
        {
          auto const& lvl = res.trace.levels[i];
          std::ostringstream line;
          line << "# level " << i << ": k=" << lvl.k << " threshold=" << lvl.threshold
               << " separator=0x" << lvl.separator.to_hex() << "\n";
          text += line.str();
        }
      }
      text += invc::serialize( res.circ );
      int const weight = invc::inversion_weight( res.circ );
      if ( !out_path.empty() )
      {
        write_text( out_path, text );
      }
      if ( machine )
      {
        std::cout << "weight=" << weight << "\n";
        std::cout << "verified=1\n";
        std::cout << "levels=" << res.trace.levels.size() << "\n";
      }
      else if ( out_path.empty() )
      {
        std::cout << text;
      }
      else
      {
        std::cout << "weight " << weight << "\n";
      }
      return 0;
    }

    if ( sc_verify->parsed() )
    {
      auto const sys = load_functions( funcs_path );
      auto const b = load_basis( basis_path );
      auto const circ = load_circuit( circuit_path );
      if ( circ.n_inputs != sys.arity() )
      {
        throw std::invalid_argument( "circuit input count does not match the function arity" );
      }
      if ( circ.outputs.size() != sys.size() )
      {
        throw std::invalid_argument( "circuit output count does not match the function count" );
      }
      auto const realized = invc::realized_system( circ, b );
      int const weight = invc::inversion_weight( circ );
      bool ok = true;
      uint64_t bad_point = 0;
      size_t bad_member = 0;
      for ( uint64_t x = 0; ok && x < ( uint64_t( 1 ) << sys.arity() ); ++x )
      {
        for ( size_t j = 0; j < sys.size(); ++j )
        {
          if ( realized.members()[j].get( x ) != sys.members()[j].get( x ) )
          {
            ok = false;
            bad_point = x;
            bad_member = j;
            break;
          }
        }
      }
      if ( machine )
      {
        std::cout << "ok=" << ( ok ? 1 : 0 ) << "\n";
        std::cout << "weight=" << weight << "\n";
        if ( !ok )
        {
          std::cout << "mismatch_input=" << invc::format_tuple( bad_point, sys.arity() ) << "\n";
        }
      }
      else if ( ok )
      {
        std::cout << "ok (weight " << weight << ")\n";
      }
      else
      {
        std::cout << "mismatch at " << invc::format_tuple( bad_point, sys.arity() ) << ": member "
                  << ( bad_member + 1 ) << " computes "
                  << ( realized.members()[bad_member].get( bad_point ) ? 1 : 0 ) << ", expected "
                  << ( sys.members()[bad_member].get( bad_point ) ? 1 : 0 ) << "\n";
      }
      return ok ? 0 : 2;
    }

    if ( sc_exact->parsed() )
    {
      auto const sys = load_functions( funcs_path );
      auto const b = load_basis( basis_path );
      invc::exact_options opt;
      opt.t_max = t_max;
      opt.want_witness = witness || !out_path.empty();
      auto const res = invc::exact_inversion_complexity( sys, b, opt );
      if ( machine )
      {
        std::cout << "t_max=" << res.t_max << "\n";
        std::cout << "i=" << ( res.weight ? std::to_string( *res.weight ) : "above" ) << "\n";
      }
      else if ( res.weight )
      {
        std::cout << "i = " << *res.weight << "\n";
      }
      else
      {
        std::cout << "i > " << res.t_max << "\n";
      }
      if ( trace )
      {
        for ( size_t i = 0; i < res.steps.size(); ++i )
        {
          auto const& step = res.steps[i];
          if ( machine )
          {
            std::cout << "step" << i << ".omega=" << step.omega_index << "\n";
            std::cout << "step" << i << ".z=0x" << step.z.to_hex() << "\n";
          }
          else
          {
            std::cout << "# step " << i << ": omega " << step.omega_index << ", z = 0x"
                      << step.z.to_hex() << "\n";
          }
        }
      }
      if ( res.witness )
      {
        auto const text = invc::serialize( *res.witness );
        if ( !out_path.empty() )
        {
          write_text( out_path, text );
        }
        else if ( !machine )
        {
          std::cout << text;
        }
      }
      return 0;
    }

    if ( sc_split->parsed() )
    {
      auto const b = load_basis( basis_path );
      auto const circ = load_circuit( circuit_path );
      auto const res = invc::split_first_nonmonotone( circ, b );
      int const before = invc::inversion_weight( circ );
      int const after = invc::inversion_weight( res.reduced );
      auto const text = invc::serialize( res.reduced );
      if ( !out_path.empty() )
      {
        write_text( out_path, text );
      }
      if ( machine )
      {
        std::cout << "weight_before=" << before << "\n";
        std::cout << "weight_after=" << after << "\n";
        std::cout << "h=0x" << res.h.to_hex() << "\n";
        std::cout << "h_arity=" << res.h.arity() << "\n";
      }
      else
      {
        std::cout << "h " << res.h.arity() << " 0x" << res.h.to_hex() << "\n";
        std::cout << "weight " << before << " -> " << after << "\n";
        if ( out_path.empty() )
        {
          std::cout << text;
        }
      }
      return 0;
    }

    if ( sc_check->parsed() )
    {
      auto const b = load_basis( basis_path );
      auto const circ = load_circuit( circuit_path );
      auto const rep = invc::check_decrease_bound( circ, b );
      if ( machine )
      {
        std::cout << "d=" << rep.d << "\n";
        std::cout << "r=" << rep.r << "\n";
        std::cout << "i=" << rep.weight << "\n";
        std::cout << "bound=" << rep.bound << "\n";
        std::cout << "holds=" << ( rep.holds ? 1 : 0 ) << "\n";
      }
      else
      {
        std::cout << "d = " << rep.d << ", r = " << rep.r << ", i = " << rep.weight
                  << ", bound = " << rep.bound << "\n";
        std::cout << ( rep.holds ? "holds" : "VIOLATED" ) << "\n";
      }
      return rep.holds ? 0 : 2;
    }
  }
  catch ( invc::parse_error const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  catch ( invc::cap_error const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return 0;
}
