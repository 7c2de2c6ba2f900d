#include "invc/circuit.hpp"

#include "invc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace invc
{

namespace
{

bool is_keyword( std::string const& s )
{
  return s == "inputs" || s == "outputs" || s == "gate" || s == "mono" || s == "basis";
}

bool is_const_name( std::string const& s )
{
  return s == "const0" || s == "const1";
}

bool is_input_name( std::string const& s )
{
  if ( s.size() < 2 || s[0] != 'x' )
  {
    return false;
  }
  return std::all_of( s.begin() + 1, s.end(), []( unsigned char c ) { return std::isdigit( c ); } );
}

bool is_const_gate( gate const& g, std::string const& name )
{
  return g.kind == gate::kind_t::monotone && g.table.arity() == 0 &&
         g.table == constant( 0, name == "const1" );
}

long long parse_int( std::string const& token, int lineno, char const* what )
{
  size_t pos = 0;
  long long value = 0;
  try
  {
    value = std::stoll( token, &pos );
  }
  catch ( std::exception const& )
  {
    throw parse_error( std::string( "expected " ) + what, lineno );
  }
  if ( pos != token.size() )
  {
    throw parse_error( std::string( "expected " ) + what, lineno );
  }
  return value;
}

/* Output tables of gates [0, upto); assumes the circuit already validated. */
std::vector<truth_table> gate_tables( circuit const& s, basis const& b, size_t upto )
{
  int const n = s.n_inputs;
  std::vector<truth_table> tables;
  tables.reserve( upto );
  for ( size_t i = 0; i < upto; ++i )
  {
    auto const& g = s.gates[i];
    std::vector<truth_table> args;
    args.reserve( g.args.size() );
    for ( auto const& a : g.args )
    {
      args.push_back( a.kind == signal::kind_t::input ? projection( n, a.index )
                                                      : tables[size_t( a.index )] );
    }
    auto const& fn = g.kind == gate::kind_t::monotone ? g.table
                                                      : b.omegas()[size_t( g.omega_index )];
    /* arity-0 gates have no argument to carry the input arity */
    tables.push_back( args.empty() ? constant( n, fn.get( 0 ) ) : compose( fn, args ) );
  }
  return tables;
}

void require_valid( circuit const& s, basis const& b )
{
  if ( auto const err = validate( s, b ) )
  {
    throw std::invalid_argument( "invalid circuit: " + err->message );
  }
}

} // namespace

bool structurally_equal( circuit const& a, circuit const& b )
{
  if ( a.n_inputs != b.n_inputs || a.gates.size() != b.gates.size() || a.outputs != b.outputs )
  {
    return false;
  }
  for ( size_t i = 0; i < a.gates.size(); ++i )
  {
    auto const& ga = a.gates[i];
    auto const& gb = b.gates[i];
    if ( ga.kind != gb.kind || ga.args != gb.args )
    {
      return false;
    }
    if ( ga.kind == gate::kind_t::monotone ? ga.table != gb.table
                                           : ga.omega_index != gb.omega_index )
    {
      return false;
    }
  }
  return true;
}

std::optional<validation_error> validate( circuit const& s, basis const& b )
{
  if ( s.n_inputs < 0 )
  {
    return validation_error{ -1, "negative input count" };
  }
  auto check_signal = [&]( signal const& sig, int upto ) -> char const*
  {
    if ( sig.kind == signal::kind_t::input )
    {
      return sig.index >= 0 && sig.index < s.n_inputs ? nullptr : "references a missing input";
    }
    if ( sig.index < 0 || size_t( sig.index ) >= s.gates.size() )
    {
      return "references a missing gate";
    }
    return upto < 0 || sig.index < upto ? nullptr : "references itself or a later gate";
  };
  for ( size_t i = 0; i < s.gates.size(); ++i )
  {
    auto const& g = s.gates[i];
    for ( auto const& a : g.args )
    {
      if ( auto const* msg = check_signal( a, int( i ) ) )
      {
        return validation_error{ int( i ), msg };
      }
    }
    if ( g.kind == gate::kind_t::monotone )
    {
      if ( g.table.arity() != int( g.args.size() ) )
      {
        return validation_error{ int( i ), "argument count differs from table arity" };
      }
      if ( !is_monotone( g.table ) )
      {
        return validation_error{ int( i ), "non-monotone table in a monotone gate" };
      }
    }
    else
    {
      if ( g.omega_index < 0 || size_t( g.omega_index ) >= b.omegas().size() )
      {
        return validation_error{ int( i ), "generator index outside the basis" };
      }
      if ( b.omegas()[size_t( g.omega_index )].arity() != int( g.args.size() ) )
      {
        return validation_error{ int( i ), "argument count differs from generator arity" };
      }
    }
  }
  for ( size_t k = 0; k < s.outputs.size(); ++k )
  {
    if ( auto const* msg = check_signal( s.outputs[k], -1 ) )
    {
      return validation_error{ -1, "output " + std::to_string( k ) + " " + msg };
    }
  }
  return std::nullopt;
}

std::vector<bool> evaluate( circuit const& s, basis const& b, uint64_t x )
{
  require_valid( s, b );
  if ( s.n_inputs < 64 && ( x >> s.n_inputs ) != 0 )
  {
    throw std::invalid_argument( "input tuple out of range" );
  }
  std::vector<bool> values( s.gates.size() );
  auto signal_value = [&]( signal const& sig )
  {
    return sig.kind == signal::kind_t::input ? bool( x >> sig.index & 1 )
                                             : values[size_t( sig.index )];
  };
  for ( size_t i = 0; i < s.gates.size(); ++i )
  {
    auto const& g = s.gates[i];
    uint64_t point = 0;
    for ( size_t l = 0; l < g.args.size(); ++l )
    {
      if ( signal_value( g.args[l] ) )
      {
        point |= uint64_t( 1 ) << l;
      }
    }
    auto const& fn = g.kind == gate::kind_t::monotone ? g.table
                                                      : b.omegas()[size_t( g.omega_index )];
    values[i] = fn.get( point );
  }
  std::vector<bool> out;
  out.reserve( s.outputs.size() );
  for ( auto const& sig : s.outputs )
  {
    out.push_back( signal_value( sig ) );
  }
  return out;
}

function_system realized_system( circuit const& s, basis const& b, int cap )
{
  require_valid( s, b );
  if ( s.n_inputs > cap )
  {
    throw cap_error( "circuit has " + std::to_string( s.n_inputs ) +
                     " inputs, cap is " + std::to_string( cap ) );
  }
  if ( s.outputs.empty() )
  {
    throw std::invalid_argument( "circuit has no outputs" );
  }
  auto const tables = gate_tables( s, b, s.gates.size() );
  std::vector<truth_table> members;
  members.reserve( s.outputs.size() );
  for ( auto const& sig : s.outputs )
  {
    members.push_back( sig.kind == signal::kind_t::input ? projection( s.n_inputs, sig.index )
                                                         : tables[size_t( sig.index )] );
  }
  return function_system( std::move( members ) );
}

int inversion_weight( circuit const& s )
{
  int weight = 0;
  for ( auto const& g : s.gates )
  {
    if ( g.kind == gate::kind_t::basis )
    {
      ++weight;
    }
  }
  return weight;
}

split_result split_first_nonmonotone( circuit const& s, basis const& b )
{
  require_valid( s, b );
  size_t removed = s.gates.size();
  for ( size_t i = 0; i < s.gates.size(); ++i )
  {
    if ( s.gates[i].kind == gate::kind_t::basis )
    {
      removed = i;
      break;
    }
  }
  if ( removed == s.gates.size() )
  {
    throw std::invalid_argument( "circuit has no weighted gate to split" );
  }

  truth_table const h = gate_tables( s, b, removed + 1 ).back();

  circuit reduced;
  reduced.n_inputs = s.n_inputs + 1;
  auto remap = [&]( signal const& sig ) -> signal
  {
    if ( sig.kind == signal::kind_t::input )
    {
      return sig;
    }
    if ( size_t( sig.index ) == removed )
    {
      return input_ref( s.n_inputs );
    }
    return gate_ref( size_t( sig.index ) > removed ? sig.index - 1 : sig.index );
  };
  for ( size_t i = 0; i < s.gates.size(); ++i )
  {
    if ( i == removed )
    {
      continue;
    }
    gate g = s.gates[i];
    for ( auto& a : g.args )
    {
      a = remap( a );
    }
    reduced.gates.push_back( std::move( g ) );
  }
  for ( auto const& sig : s.outputs )
  {
    reduced.outputs.push_back( remap( sig ) );
  }
  return { std::move( reduced ), h };
}

decrease_bound_report check_decrease_bound( circuit const& s, basis const& b, int cap )
{
  auto const system = realized_system( s, b, cap );
  int const d = decrease( system, cap ).d;
  int const weight = inversion_weight( s );
  if ( weight > 62 )
  {
    throw cap_error( "weight too large for the bound arithmetic" );
  }
  long long const bound = ( 2LL * b.r() + 1 ) * ( ( 1LL << weight ) - 1 );
  return { d, b.r(), weight, bound, d <= bound };
}

std::string serialize( circuit const& s )
{
  std::vector<std::string> names( s.gates.size() );
  std::unordered_set<std::string> used;
  for ( size_t i = 0; i < s.gates.size(); ++i )
  {
    auto const& name = s.gates[i].name;
    if ( name.empty() || is_keyword( name ) || is_input_name( name ) || used.count( name ) )
    {
      continue;
    }
    if ( is_const_name( name ) && !is_const_gate( s.gates[i], name ) )
    {
      continue;
    }
    names[i] = name;
    used.insert( name );
  }
  for ( size_t i = 0; i < s.gates.size(); ++i )
  {
    if ( !names[i].empty() )
    {
      continue;
    }
    std::string candidate = "g" + std::to_string( i );
    while ( used.count( candidate ) )
    {
      candidate += "_";
    }
    names[i] = candidate;
    used.insert( candidate );
  }

  auto ref = [&]( signal const& sig )
  {
    return sig.kind == signal::kind_t::input ? "x" + std::to_string( sig.index + 1 )
                                             : names[size_t( sig.index )];
  };

  std::ostringstream out;
  out << "inputs " << s.n_inputs << "\n";
  for ( size_t i = 0; i < s.gates.size(); ++i )
  {
    auto const& g = s.gates[i];
    if ( is_const_name( names[i] ) && is_const_gate( g, names[i] ) )
    {
      out << names[i] << "\n";
      continue;
    }
    out << "gate " << names[i];
    if ( g.kind == gate::kind_t::monotone )
    {
      out << " mono " << g.table.arity() << " 0x" << g.table.to_hex();
    }
    else
    {
      out << " basis " << g.omega_index;
    }
    for ( auto const& a : g.args )
    {
      out << " " << ref( a );
    }
    out << "\n";
  }
  out << "outputs";
  for ( auto const& sig : s.outputs )
  {
    out << " " << ref( sig );
  }
  out << "\n";
  return out.str();
}

circuit parse_circuit( std::istream& in )
{
  circuit c;
  std::unordered_map<std::string, int> gate_names;
  bool seen_inputs = false;
  bool seen_outputs = false;

  auto declare = [&]( std::string const& name, gate g ) -> signal
  {
    g.name = name;
    c.gates.push_back( std::move( g ) );
    gate_names.emplace( name, int( c.gates.size() ) - 1 );
    return gate_ref( int( c.gates.size() ) - 1 );
  };

  auto resolve = [&]( std::string const& token, int lineno ) -> signal
  {
    if ( is_const_name( token ) )
    {
      if ( auto const it = gate_names.find( token ); it != gate_names.end() )
      {
        return gate_ref( it->second );
      }
      return declare( token, gate{ gate::kind_t::monotone, constant( 0, token == "const1" ), -1, {}, {} } );
    }
    if ( is_input_name( token ) )
    {
      long long const idx = parse_int( token.substr( 1 ), lineno, "an input index" );
      if ( idx < 1 || idx > c.n_inputs )
      {
        throw parse_error( "unknown input '" + token + "'", lineno );
      }
      return input_ref( int( idx ) - 1 );
    }
    if ( auto const it = gate_names.find( token ); it != gate_names.end() )
    {
      return gate_ref( it->second );
    }
    throw parse_error( "unknown signal '" + token + "'", lineno );
  };

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
    std::vector<std::string> tokens;
    for ( std::string t; ss >> t; )
    {
      tokens.push_back( std::move( t ) );
    }
    if ( tokens.empty() )
    {
      continue;
    }
    if ( seen_outputs )
    {
      throw parse_error( "content after the outputs line", lineno );
    }
    if ( !seen_inputs )
    {
      if ( tokens[0] != "inputs" || tokens.size() != 2 )
      {
        throw parse_error( "expected 'inputs <k>'", lineno );
      }
      long long const k = parse_int( tokens[1], lineno, "an input count" );
      if ( k < 0 || k > max_parse_arity )
      {
        throw parse_error( "input count out of range", lineno );
      }
      c.n_inputs = int( k );
      seen_inputs = true;
      continue;
    }
    if ( is_const_name( tokens[0] ) )
    {
      if ( tokens.size() != 1 )
      {
        throw parse_error( "unexpected token after '" + tokens[0] + "'", lineno );
      }
      if ( gate_names.count( tokens[0] ) )
      {
        throw parse_error( "duplicate signal '" + tokens[0] + "'", lineno );
      }
      declare( tokens[0], gate{ gate::kind_t::monotone, constant( 0, tokens[0] == "const1" ), -1, {}, {} } );
      continue;
    }
    if ( tokens[0] == "outputs" )
    {
      if ( tokens.size() < 2 )
      {
        throw parse_error( "outputs line needs at least one signal", lineno );
      }
      for ( size_t t = 1; t < tokens.size(); ++t )
      {
        c.outputs.push_back( resolve( tokens[t], lineno ) );
      }
      seen_outputs = true;
      continue;
    }
    if ( tokens[0] != "gate" )
    {
      throw parse_error( "unknown directive '" + tokens[0] + "'", lineno );
    }
    if ( tokens.size() < 3 )
    {
      throw parse_error( "expected 'gate <name> mono|basis ...'", lineno );
    }
    std::string const& name = tokens[1];
    if ( is_keyword( name ) || is_const_name( name ) || is_input_name( name ) )
    {
      throw parse_error( "reserved name '" + name + "'", lineno );
    }
    if ( gate_names.count( name ) )
    {
      throw parse_error( "duplicate signal '" + name + "'", lineno );
    }

    gate g;
    size_t first_arg;
    if ( tokens[2] == "mono" )
    {
      if ( tokens.size() < 5 )
      {
        throw parse_error( "expected 'gate <name> mono <arity> 0x<hex> <args...>'", lineno );
      }
      long long const arity = parse_int( tokens[3], lineno, "a gate arity" );
      if ( arity < 0 || arity > max_parse_arity )
      {
        throw parse_error( "gate arity out of range", lineno );
      }
      std::string const& hex = tokens[4];
      if ( hex.size() < 2 || hex[0] != '0' || ( hex[1] != 'x' && hex[1] != 'X' ) )
      {
        throw parse_error( "truth table must start with 0x", lineno );
      }
      try
      {
        g.table = truth_table::from_hex( int( arity ), std::string_view( hex ).substr( 2 ) );
      }
      catch ( parse_error const& e )
      {
        throw parse_error( e.what(), lineno );
      }
      g.kind = gate::kind_t::monotone;
      first_arg = 5;
      if ( tokens.size() - first_arg != size_t( arity ) )
      {
        throw parse_error( "gate declares " + std::to_string( arity ) + " inputs but has " +
                               std::to_string( tokens.size() - first_arg ) + " arguments",
                           lineno );
      }
    }
    else if ( tokens[2] == "basis" )
    {
      if ( tokens.size() < 4 )
      {
        throw parse_error( "expected 'gate <name> basis <omega_index> <args...>'", lineno );
      }
      long long const omega = parse_int( tokens[3], lineno, "a generator index" );
      if ( omega < 0 )
      {
        throw parse_error( "generator index must be nonnegative", lineno );
      }
      g.kind = gate::kind_t::basis;
      g.omega_index = int( omega );
      first_arg = 4;
    }
    else
    {
      throw parse_error( "unknown gate kind '" + tokens[2] + "'", lineno );
    }
    for ( size_t t = first_arg; t < tokens.size(); ++t )
    {
      g.args.push_back( resolve( tokens[t], lineno ) );
    }
    declare( name, std::move( g ) );
  }
  if ( !seen_inputs )
  {
    throw parse_error( "missing 'inputs' line" );
  }
  if ( !seen_outputs )
  {
    throw parse_error( "missing 'outputs' line" );
  }
  return c;
}

} // namespace invc
