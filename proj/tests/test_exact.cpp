#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "invc/circuit.hpp"
#include "invc/decrease.hpp"
#include "invc/errors.hpp"
#include "invc/exact.hpp"

#include <algorithm>
#include <set>

using namespace invc;

TEST_CASE( "pattern pools over projections" )
{
  pattern_pool pool( 2 );
  REQUIRE( pool.signals().size() == 2 );
  for ( uint64_t x = 0; x < 4; ++x )
  {
    CHECK( pool.pattern( x ) == x );
  }

  pattern_pool one( 1 );
  auto const with_not = one.extended( truth_table( 1, 0x1 ) );
  CHECK( with_not.pattern( 0 ) == 0b10 );
  CHECK( with_not.pattern( 1 ) == 0b01 );

  CHECK_THROWS_AS( one.extended( truth_table( 2, 0x8 ) ), std::invalid_argument );
}

TEST_CASE( "expressibility over projections is monotonicity" )
{
  pattern_pool pool( 2 );
  for ( uint64_t bits = 0; bits < 16; ++bits )
  {
    truth_table const t( 2, bits );
    CHECK( monotone_expressible( t, pool ) == is_monotone( t ) );
  }

  test_util::rng_t rng( 61 );
  pattern_pool pool4( 4 );
  for ( int i = 0; i < 40; ++i )
  {
    auto const t = test_util::random_table( rng, 4 );
    CHECK( monotone_expressible( t, pool4 ) == is_monotone( t ) );
  }
}

TEST_CASE( "extending the pool extends expressibility" )
{
  pattern_pool pool( 1 );
  truth_table const neg( 1, 0x1 );
  CHECK( !monotone_expressible( neg, pool ) );
  CHECK( monotone_expressible( neg, pool.extended( neg ) ) );
}

TEST_CASE( "monotone extension worked cases" )
{
  {
    pattern_pool pool( 2 );
    auto const and2 = truth_table( 2, 0x8 );
    CHECK( monotone_extension( and2, pool ) == and2 );
  }
  {
    auto const pool = pattern_pool( 1 ).extended( truth_table( 1, 0x1 ) );
    CHECK( monotone_extension( truth_table( 1, 0x1 ), pool ) == projection( 2, 1 ) );
  }
  CHECK_THROWS_AS( monotone_extension( truth_table( 1, 0x1 ), pattern_pool( 1 ) ),
                   std::invalid_argument );
}

TEST_CASE( "extensions evaluate back to the function and are minimal" )
{
  test_util::rng_t rng( 67 );
  int done = 0;
  while ( done < 30 )
  {
    int const n = 1 + int( rng() % 3 );
    auto pool = pattern_pool( n );
    auto const extra = test_util::random_table( rng, n );
    pool = pool.extended( extra );
    auto const g = test_util::random_table( rng, n );
    if ( !monotone_expressible( g, pool ) )
    {
      continue;
    }
    ++done;
    auto const ext = monotone_extension( g, pool );
    CHECK( is_monotone( ext ) );
    for ( uint64_t x = 0; x < ( uint64_t( 1 ) << n ); ++x )
    {
      CHECK( ext.get( pool.pattern( x ) ) == g.get( x ) );
    }
  }
}

TEST_CASE( "counting one gate monotone signals" )
{
  CHECK( enumerate_monotone_signals( pattern_pool( 1 ) ).size() == 3 );
  CHECK( enumerate_monotone_signals( pattern_pool( 2 ) ).size() == 6 );
  CHECK( enumerate_monotone_signals( pattern_pool( 3 ) ).size() == 20 );
  CHECK( enumerate_monotone_signals( pattern_pool( 1 ).extended( truth_table( 1, 0x1 ) ) ).size() ==
         4 );

  auto const got = enumerate_monotone_signals( pattern_pool( 2 ) );
  std::set<truth_table> expected;
  for ( uint64_t bits = 0; bits < 16; ++bits )
  {
    if ( is_monotone( truth_table( 2, bits ) ) )
    {
      expected.insert( truth_table( 2, bits ) );
    }
  }
  CHECK( std::set<truth_table>( got.begin(), got.end() ) == expected );
}

TEST_CASE( "enumeration caps" )
{
  CHECK_THROWS_AS( enumerate_monotone_signals( pattern_pool( 5 ) ), cap_error );
  CHECK_THROWS_AS( enumerate_monotone_signals( pattern_pool( 2 ), 3 ), cap_error );
}

TEST_CASE( "exact counts of the worked examples" )
{
  {
    auto const res = exact_inversion_complexity( test_util::example_f1(), test_util::xnor_basis() );
    REQUIRE( res.weight );
    CHECK( *res.weight == 1 );
    CHECK( res.steps.size() == 1 );
    CHECK( res.steps[0].omega_index == 0 );
    CHECK( res.steps[0].z == test_util::xnor3() );
  }
  {
    auto const res = exact_inversion_complexity( test_util::example_f2(), test_util::xnor_basis() );
    REQUIRE( res.weight );
    CHECK( *res.weight == 2 );
    CHECK( res.steps.size() == 2 );
  }
  {
    auto const sys = function_system( { truth_table( 1, 0x1 ) } );
    auto const res = exact_inversion_complexity( sys, basis::b0() );
    REQUIRE( res.weight );
    CHECK( *res.weight == 1 );
  }
  {
    auto const sys = function_system( { truth_table( 2, 0x6 ) } );
    auto const res = exact_inversion_complexity( sys, basis::b0() );
    REQUIRE( res.weight );
    CHECK( *res.weight == 1 );
  }
  {
    auto const sys = function_system( { truth_table( 2, 0x8 ) } );
    auto const res = exact_inversion_complexity( sys, basis::b0() );
    REQUIRE( res.weight );
    CHECK( *res.weight == 0 );
    CHECK( res.steps.empty() );
  }
}

TEST_CASE( "exact search respects the budget" )
{
  exact_options opt;
  opt.t_max = 1;
  auto const res = exact_inversion_complexity( test_util::example_f2(), test_util::xnor_basis(),
                                               opt );
  CHECK( !res.weight );
  CHECK( res.t_max == 1 );
  CHECK( res.steps.empty() );
}

TEST_CASE( "witnesses realize the system at the reported weight" )
{
  for ( auto const& sys : { test_util::example_f1(), test_util::example_f2() } )
  {
    exact_options opt;
    opt.want_witness = true;
    auto const b = test_util::xnor_basis();
    auto const res = exact_inversion_complexity( sys, b, opt );
    REQUIRE( res.weight );
    REQUIRE( res.witness );
    CHECK( realized_system( *res.witness, b ) == sys );
    CHECK( inversion_weight( *res.witness ) == *res.weight );
  }
}

TEST_CASE( "exact equals the markov count over the negation basis" )
{
  for ( uint64_t bits = 0; bits < 16; ++bits )
  {
    auto const sys = function_system( { truth_table( 2, bits ) } );
    auto const res = exact_inversion_complexity( sys, basis::b0() );
    REQUIRE( res.weight );
    CHECK( *res.weight == markov_complexity( sys ) );
  }
  test_util::rng_t rng( 71 );
  for ( int i = 0; i < 20; ++i )
  {
    auto const sys = test_util::random_system( rng, 3, 3 );
    auto const res = exact_inversion_complexity( sys, basis::b0() );
    REQUIRE( res.weight );
    CHECK( *res.weight == markov_complexity( sys ) );
  }
}

TEST_CASE( "richer generators never cost more" )
{
  test_util::rng_t rng( 73 );
  std::vector<basis> const bases{ test_util::nand_basis(), test_util::xor_basis(),
                                  test_util::xnor_basis() };
  for ( int i = 0; i < 24; ++i )
  {
    auto const sys = test_util::random_system( rng, 2, 3 );
    auto const& b = bases[size_t( i % 3 )];
    auto const res = exact_inversion_complexity( sys, b );
    REQUIRE( res.weight );
    CHECK( *res.weight <= markov_complexity( sys ) );
  }
}

TEST_CASE( "exact search is deterministic" )
{
  exact_options opt;
  opt.want_witness = true;
  auto const b = test_util::xnor_basis();
  auto const a = exact_inversion_complexity( test_util::example_f2(), b, opt );
  auto const c = exact_inversion_complexity( test_util::example_f2(), b, opt );
  REQUIRE( a.witness );
  REQUIRE( c.witness );
  CHECK( serialize( *a.witness ) == serialize( *c.witness ) );
  REQUIRE( a.steps.size() == c.steps.size() );
  for ( size_t i = 0; i < a.steps.size(); ++i )
  {
    CHECK( a.steps[i].omega_index == c.steps[i].omega_index );
    CHECK( a.steps[i].z == c.steps[i].z );
    CHECK( a.steps[i].feeds == c.steps[i].feeds );
  }
}

TEST_CASE( "exact search caps wide inputs" )
{
  auto const sys = function_system( { truth_table( 5 ) } );
  CHECK_THROWS_AS( exact_inversion_complexity( sys, basis::b0() ), cap_error );
}
