/*!
  \file circuit.hpp
  \brief Circuits over a monotone-plus-generators basis, their text format,
         and the single-gate split transformation

  Gates are stored in topological order and reference only inputs or strictly
  earlier gates.  Monotone gates carry their own table and cost nothing;
  weighted gates reference a generator of the basis by index.  Constants are
  ordinary arity-0 monotone gates.
*/

#pragma once

#include "invc/basis.hpp"
#include "invc/truth_table.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace invc
{

struct signal
{
  enum class kind_t : uint8_t
  {
    input,
    gate
  };

  kind_t kind = kind_t::input;
  int index = 0;

  bool operator==( signal const& other ) const = default;
};

inline signal input_ref( int index )
{
  return { signal::kind_t::input, index };
}

inline signal gate_ref( int index )
{
  return { signal::kind_t::gate, index };
}

struct gate
{
  enum class kind_t : uint8_t
  {
    monotone,
    basis
  };

  kind_t kind = kind_t::monotone;
  truth_table table;        /* monotone gates only */
  int omega_index = -1;     /* weighted gates only */
  std::vector<signal> args;
  std::string name;         /* optional label used by the serializer */
};

struct circuit
{
  int n_inputs = 0;
  std::vector<gate> gates;
  std::vector<signal> outputs;
};

/*! \brief Equality up to gate labels. */
bool structurally_equal( circuit const& a, circuit const& b );

struct validation_error
{
  int gate_index; /* -1 when the problem is not tied to one gate */
  std::string message;
};

/*! \brief Checks wiring, arities, generator indices, and gate monotonicity.

  Returns the first failure in gate order, or nothing when the circuit is
  well formed.
*/
std::optional<validation_error> validate( circuit const& s, basis const& b );

/*! \brief Output values on one input tuple; throws std::invalid_argument when invalid. */
std::vector<bool> evaluate( circuit const& s, basis const& b, uint64_t x );

/*! \brief The tuple of output functions, one member per output reference. */
function_system realized_system( circuit const& s, basis const& b, int cap = default_arity_cap );

/*! \brief Number of weighted gates. */
int inversion_weight( circuit const& s );

struct split_result
{
  circuit reduced;   /* one more input: y arrives as the last input */
  truth_table h;     /* function the removed gate computed, over the original inputs */
};

/*! \brief Removes the first weighted gate and exposes its output as input y.

  The reduced circuit g satisfies g(x, h(x)) = f(x) for every tuple x, and its
  weight drops by exactly one.  Throws std::invalid_argument when the circuit
  is invalid or purely monotone.
*/
split_result split_first_nonmonotone( circuit const& s, basis const& b );

struct decrease_bound_report
{
  int d;
  int r;
  int weight;
  long long bound;   /* (2r + 1) * (2^weight - 1) */
  bool holds;
};

/*! \brief Checks d(realized system) <= (2r + 1)(2^weight - 1); true for every valid circuit. */
decrease_bound_report check_decrease_bound( circuit const& s, basis const& b,
                                            int cap = default_arity_cap );

/*! \brief Circuit text:

    inputs <k>
    const0
    gate <name> mono <arity> 0x<hex> <args...>
    gate <name> basis <omega_index> <args...>
    outputs <names...>

  Arguments are x1..xk, earlier gate names, or const0/const1.  The constants
  are predeclared: referencing them without a declaration line materializes
  the arity-0 gate in place.  '#' starts a comment.
*/
std::string serialize( circuit const& s );

/*! \brief Inverse of serialize; throws parse_error with the offending line number. */
circuit parse_circuit( std::istream& in );

} // namespace invc
