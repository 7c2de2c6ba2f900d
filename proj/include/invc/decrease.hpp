/*!
  \file decrease.hpp
  \brief The decrease measure of function systems over increasing chains

  Input tuples are packed into masks with x_1 in bit 0.  An increasing chain
  is a sequence of pairwise distinct tuples that grows componentwise; a jump
  of a system F on a pair a <= b is some member falling from 1 to 0.  The
  decrease d(F) is the largest jump count over consecutive pairs of any chain.
*/

#pragma once

#include "invc/truth_table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace invc
{

/*! \brief Arity bound for the dynamic programs over the full cube. */
inline constexpr int default_arity_cap = 12;

/*! \brief Arity bound for literal enumeration of all chains. */
inline constexpr int chain_enum_cap = 4;

/*! \brief A sequence of input tuples, stored as masks. */
struct chain
{
  std::vector<uint64_t> points;
};

/*! \brief True iff the points are strictly increasing componentwise and fit the arity.

  Single-point chains are valid; empty ones are not.
*/
bool is_increasing_chain( chain const& c, int arity );

/*! \brief Renders a tuple as "a_1 a_2 ... a_n" without separators, x_1 first. */
std::string format_tuple( uint64_t mask, int arity );

/*! \brief True iff some member falls from 1 to 0 between \p alpha and \p beta.

  Throws std::invalid_argument unless alpha <= beta componentwise and
  alpha != beta.
*/
bool is_jump( function_system const& system, uint64_t alpha, uint64_t beta );

/*! \brief Number of consecutive jump pairs of \p c under \p system. */
int chain_jump_count( function_system const& system, chain const& c );

struct decrease_result
{
  int d;
  chain witness;
};

/*! \brief Decrease via longest weighted path over covering edges.

  Restricting to covering pairs is sound: refining a chain never loses jumps,
  since a jump on a <= b survives into (a, c) or (c, b) for any a < c < b.
  The witness is the smallest maximizing chain in tuple order (x_1 compared
  first, shorter prefixes first); it is always a covering chain and carries
  exactly d jumps.  Throws cap_error beyond \p cap.
*/
decrease_result decrease( function_system const& system, int cap = default_arity_cap );

/*! \brief Decrease via longest weighted path over the full comparability DAG.

  Independent of the covering-edge route; for arity at most 3 the result is
  additionally cross-checked against literal enumeration of every chain.
*/
int decrease_oracle( function_system const& system, int cap = default_arity_cap );

/*! \brief Decrease by brute-force enumeration of all increasing chains. */
int decrease_all_chains( function_system const& system, int cap = chain_enum_cap );

/*! \brief nu[mask] = most jumps over chains ending at the tuple. */
struct decrease_profile
{
  int arity;
  std::vector<int> nu;
};

/*! \brief Computes the profile; nu is monotone, zero at the origin, and peaks at d. */
decrease_profile nu_profile( function_system const& system, int cap = default_arity_cap );

/*! \brief ceil(log2(d(F) + 1)): the exact NOT-gate demand over the standard basis. */
int markov_complexity( function_system const& system, int cap = default_arity_cap );

} // namespace invc
