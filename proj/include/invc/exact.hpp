/*!
  \file exact.hpp
  \brief Exact minimal weighted-gate counts by search over signal pools

  A pool holds the signals available at some point of a circuit: the input
  projections plus the outputs of earlier weighted gates.  Everything a block
  of free monotone gates can add is exactly the set of functions that respect
  the pool's pattern order, so optimal circuits are searched as sequences of
  weighted gates fed by such functions.
*/

#pragma once

#include "invc/basis.hpp"
#include "invc/circuit.hpp"
#include "invc/truth_table.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace invc
{

/*! \brief Default bound on distinct input patterns (16 = full arity-4 cube). */
inline constexpr int default_pattern_limit = 16;

class pattern_pool
{
public:
  /*! \brief Pool holding just the input projections. */
  explicit pattern_pool( int arity );

  /*! \brief This pool plus one more signal of matching arity. */
  pattern_pool extended( truth_table const& signal_table ) const;

  int arity() const { return arity_; }
  std::vector<truth_table> const& signals() const { return signals_; }

  /*! \brief Bit l holds signals()[l] evaluated at the tuple. */
  uint64_t pattern( uint64_t point ) const;

private:
  int arity_;
  std::vector<truth_table> signals_;
};

/*! \brief True iff g is a monotone function of the pool signals.

  Equivalent: whenever pattern(a) <= pattern(b) bitwise, g(a) <= g(b).
*/
bool monotone_expressible( truth_table const& g, pattern_pool const& pool );

/*! \brief The least monotone gate table computing g from the pool signals.

  The result T has one input per pool signal, is monotone, and satisfies
  T(pattern(a)) = g(a).  Throws std::invalid_argument when g is not
  expressible.
*/
truth_table monotone_extension( truth_table const& g, pattern_pool const& pool );

/*! \brief Every function of the pool variables realizable by one free monotone gate.

  Enumerated as the order-preserving 0/1 labelings of the pattern order.
  Throws cap_error when distinct patterns exceed \p pattern_limit.
*/
std::vector<truth_table> enumerate_monotone_signals( pattern_pool const& pool,
                                                     int pattern_limit = default_pattern_limit );

struct exact_options
{
  int t_max = -1;                             /* -1: use ceil(log2(d + 1)) */
  int pattern_limit = default_pattern_limit;
  bool want_witness = false;
};

/*! \brief One weighted gate of an optimal realization. */
struct exact_step
{
  int omega_index;
  std::vector<truth_table> feeds; /* monotone functions of the pool, as functions of x */
  truth_table z;                  /* the gate output as a function of x */
};

struct exact_result
{
  std::optional<int> weight;      /* empty: every count up to t_max falls short */
  int t_max;
  std::vector<exact_step> steps;
  std::optional<circuit> witness;
};

/*! \brief Smallest number of weighted gates realizing \p system over \p b.

  Iterative deepening over pool states with memoization; deterministic.  The
  witness, when requested and found, is verified to realize the system at the
  reported weight.
*/
exact_result exact_inversion_complexity( function_system const& system, basis const& b,
                                         exact_options const& options = {} );

} // namespace invc
