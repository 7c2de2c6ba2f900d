#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "invc/circuit.hpp"
#include "invc/decrease.hpp"
#include "invc/errors.hpp"

#include <sstream>

using namespace invc;

TEST_CASE( "golden circuits realize the worked examples" )
{
  {
    auto const s = test_util::load_circuit( test_util::data_file( "f1_b2.circ" ) );
    CHECK( s.n_inputs == 3 );
    CHECK( !validate( s, test_util::xnor_basis() ) );
    CHECK( realized_system( s, test_util::xnor_basis() ) == test_util::example_f1() );
    CHECK( inversion_weight( s ) == 1 );
  }
  {
    auto const s = test_util::load_circuit( test_util::data_file( "f2_b2.circ" ) );
    CHECK( s.n_inputs == 2 );
    CHECK( realized_system( s, test_util::xnor_basis() ) == test_util::example_f2() );
    CHECK( inversion_weight( s ) == 2 );
  }
}

TEST_CASE( "golden circuits serialize byte for byte" )
{
  for ( auto const* name : { "f1_b2.circ", "f2_b2.circ" } )
  {
    auto const text = test_util::read_file( test_util::data_file( name ) );
    std::istringstream in( text );
    CHECK( serialize( parse_circuit( in ) ) == text );
  }
}

TEST_CASE( "serialization round trips random circuits" )
{
  test_util::rng_t rng( 37 );
  for ( int i = 0; i < 40; ++i )
  {
    auto const b = test_util::random_basis( rng );
    auto const s = test_util::random_circuit( rng, b, 1 + int( rng() % 4 ), 8 );
    auto const text = serialize( s );
    std::istringstream in( text );
    auto const back = parse_circuit( in );
    CHECK( structurally_equal( s, back ) );
    CHECK( serialize( back ) == text );
  }
}

TEST_CASE( "evaluate agrees with realized tables" )
{
  test_util::rng_t rng( 41 );
  for ( int i = 0; i < 25; ++i )
  {
    auto const b = test_util::random_basis( rng );
    int const n = 1 + int( rng() % 4 );
    auto const s = test_util::random_circuit( rng, b, n, 8 );
    auto const sys = realized_system( s, b );
    for ( uint64_t x = 0; x < ( uint64_t( 1 ) << n ); ++x )
    {
      auto const vals = evaluate( s, b, x );
      REQUIRE( vals.size() == sys.size() );
      for ( size_t j = 0; j < vals.size(); ++j )
      {
        CHECK( vals[j] == sys.members()[j].get( x ) );
      }
    }
  }
}

TEST_CASE( "evaluate rejects out of range inputs" )
{
  auto const s = test_util::load_circuit( test_util::data_file( "f2_b2.circ" ) );
  CHECK_THROWS_AS( evaluate( s, test_util::xnor_basis(), 5 ), std::invalid_argument );
}

TEST_CASE( "validation pinpoints bad gates" )
{
  auto const b = basis::b0();
  circuit s;
  s.n_inputs = 2;
  s.gates.push_back( gate{ gate::kind_t::basis, {}, 0, { input_ref( 0 ) }, {} } );
  s.outputs = { gate_ref( 0 ) };
  CHECK( !validate( s, b ) );

  SUBCASE( "self reference" )
  {
    s.gates[0].args = { gate_ref( 0 ) };
    auto const err = validate( s, b );
    REQUIRE( err );
    CHECK( err->gate_index == 0 );
  }
  SUBCASE( "input out of range" )
  {
    s.gates[0].args = { input_ref( 2 ) };
    CHECK( validate( s, b ) );
  }
  SUBCASE( "generator index out of range" )
  {
    s.gates[0].omega_index = 1;
    CHECK( validate( s, b ) );
  }
  SUBCASE( "generator arity mismatch" )
  {
    s.gates[0].args = { input_ref( 0 ), input_ref( 1 ) };
    CHECK( validate( s, b ) );
  }
  SUBCASE( "free gates must be monotone" )
  {
    s.gates[0] = gate{ gate::kind_t::monotone, truth_table( 1, 0x1 ), -1, { input_ref( 0 ) }, {} };
    auto const err = validate( s, b );
    REQUIRE( err );
    CHECK( err->message.find( "monotone" ) != std::string::npos );
  }
  SUBCASE( "output out of range" )
  {
    s.outputs = { gate_ref( 3 ) };
    CHECK( validate( s, b ) );
  }
}

TEST_CASE( "parse errors carry line numbers" )
{
  auto expect_error_on_line = []( std::string const& text, int line )
  {
    std::istringstream in( text );
    try
    {
      parse_circuit( in );
      CHECK( false );
    }
    catch ( parse_error const& e )
    {
      CHECK( e.line() == line );
    }
  };
  expect_error_on_line( "gate g mono 0 0x1\n", 1 );
  expect_error_on_line( "inputs 2\ngate g mono 2 0x8 x1 x9\noutputs g\n", 2 );
  expect_error_on_line( "inputs 2\ngate x1 mono 0 0x1\noutputs x1\n", 2 );
  expect_error_on_line( "inputs 2\ngate g mono 0 0x1\ngate g mono 0 0x1\noutputs g\n", 3 );
  expect_error_on_line( "inputs 2\ngate g mono 2 0x8 x1\noutputs g\n", 2 );
  expect_error_on_line( "inputs 2\ngate g mono 2 0xq8 x1 x2\noutputs g\n", 2 );
  expect_error_on_line( "inputs 2\ngate g mono 2 0x8 x1 x2\n", 0 );
  expect_error_on_line( "inputs 2\ngate g mono 2 0x8 x1 x2\noutputs g\noutputs g\n", 4 );
  expect_error_on_line( "inputs 2\ngate g mono 2 0x8 x1 x2\noutputs h\n", 3 );
  expect_error_on_line( "inputs 2\ngate g basis 0 zz\noutputs g\n", 2 );
}

TEST_CASE( "constants materialize on demand" )
{
  std::istringstream in( "inputs 1\n"
                         "gate n basis 0 x1 const1\n"
                         "outputs n\n" );
  auto const s = parse_circuit( in );
  auto const b = test_util::nand_basis();
  CHECK( realized_system( s, b ) ==
         function_system( { truth_table( 1, 0x1 ) } ) );

  auto const text = serialize( s );
  std::istringstream back( text );
  CHECK( structurally_equal( parse_circuit( back ), s ) );
}

TEST_CASE( "splitting the golden two output circuit" )
{
  auto const b = test_util::xnor_basis();
  auto const s = test_util::load_circuit( test_util::data_file( "f2_b2.circ" ) );
  auto const res = split_first_nonmonotone( s, b );
  CHECK( res.h == truth_table( 2, 0x5 ) );
  CHECK( res.reduced.n_inputs == 3 );
  CHECK( inversion_weight( res.reduced ) == 1 );
  CHECK( res.reduced.outputs[0] == input_ref( 2 ) );

  auto const orig = realized_system( s, b );
  auto const red = realized_system( res.reduced, b );
  for ( uint64_t x = 0; x < 4; ++x )
  {
    uint64_t const xy = x | uint64_t( res.h.get( x ) ) << 2;
    for ( size_t j = 0; j < orig.size(); ++j )
    {
      CHECK( red.members()[j].get( xy ) == orig.members()[j].get( x ) );
    }
  }
}

TEST_CASE( "splitting random circuits preserves the composition identity" )
{
  test_util::rng_t rng( 43 );
  int done = 0;
  while ( done < 25 )
  {
    auto const b = test_util::random_basis( rng );
    int const n = 1 + int( rng() % 4 );
    auto const s = test_util::random_circuit( rng, b, n, 8 );
    if ( inversion_weight( s ) == 0 )
    {
      continue;
    }
    ++done;
    auto const res = split_first_nonmonotone( s, b );
    CHECK( inversion_weight( res.reduced ) == inversion_weight( s ) - 1 );
    auto const orig = realized_system( s, b );
    auto const red = realized_system( res.reduced, b );
    for ( uint64_t x = 0; x < ( uint64_t( 1 ) << n ); ++x )
    {
      uint64_t const xy = x | uint64_t( res.h.get( x ) ) << n;
      for ( size_t j = 0; j < orig.size(); ++j )
      {
        CHECK( red.members()[j].get( xy ) == orig.members()[j].get( x ) );
      }
    }
  }
}

TEST_CASE( "splitting requires a weighted gate" )
{
  circuit s;
  s.n_inputs = 2;
  s.gates.push_back(
      gate{ gate::kind_t::monotone, truth_table( 2, 0x8 ), -1, { input_ref( 0 ), input_ref( 1 ) }, {} } );
  s.outputs = { gate_ref( 0 ) };
  CHECK_THROWS_AS( split_first_nonmonotone( s, basis::b0() ), std::invalid_argument );
}

TEST_CASE( "weight bound report on the golden circuit" )
{
  auto const s = test_util::load_circuit( test_util::data_file( "f1_b2.circ" ) );
  auto const rep = check_decrease_bound( s, test_util::xnor_basis() );
  CHECK( rep.d == 2 );
  CHECK( rep.r == 2 );
  CHECK( rep.weight == 1 );
  CHECK( rep.bound == 5 );
  CHECK( rep.holds );
}

TEST_CASE( "weight bound holds on random circuits" )
{
  test_util::rng_t rng( 47 );
  for ( int i = 0; i < 40; ++i )
  {
    auto const b = test_util::random_basis( rng );
    auto const s = test_util::random_circuit( rng, b, 1 + int( rng() % 4 ), 8 );
    auto const rep = check_decrease_bound( s, b );
    CHECK( rep.holds );
    CHECK( rep.d <= rep.bound );
    CHECK( rep.weight == inversion_weight( s ) );
  }
}

TEST_CASE( "structural equality ignores names" )
{
  auto const text = test_util::read_file( test_util::data_file( "f1_b2.circ" ) );
  std::istringstream in1( text );
  auto a = parse_circuit( in1 );
  auto b = a;
  b.gates[0].name = "renamed";
  CHECK( structurally_equal( a, b ) );

  auto c = a;
  c.outputs = { input_ref( 0 ) };
  CHECK( !structurally_equal( a, c ) );

  auto d = a;
  d.gates[0].args = { input_ref( 1 ), input_ref( 0 ), input_ref( 2 ) };
  CHECK( !structurally_equal( a, d ) );
}
