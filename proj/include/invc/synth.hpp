/*!
  \file synth.hpp
  \brief Weight-optimal circuit synthesis by separator decomposition

  Each level halves the decrease: with d = d(F) and k = ceil(log2(d + 1)),
  the separator m(x) = [nu(x) >= 2^(k-1)] is monotone, its negation y costs
  one weighted gate, and the transformed system

      g_i = (f_i OR m) AND ((f_i AND m) OR y)

  over the extended variable pool satisfies d(G') <= 2^(k-1) - 1 and
  g_i(x, NOT m(x)) = f_i(x).  Iterating yields exactly ceil(log2(d + 1))
  weighted gates, which is optimal over the standard basis and within the
  general-basis bounds.
*/

#pragma once

#include "invc/basis.hpp"
#include "invc/circuit.hpp"
#include "invc/truth_table.hpp"

#include <utility>
#include <vector>

namespace invc
{

struct synth_level
{
  int k;                        /* ceil(log2(d + 1)) at this level */
  int threshold;                /* 2^(k-1) */
  truth_table separator;        /* over the pool arity of this level */
  function_system transformed;  /* one more variable: y arrives last */
};

struct synthesis_trace
{
  std::vector<synth_level> levels;
};

struct synth_result
{
  circuit circ;
  synthesis_trace trace;
};

/*! \brief One decomposition level: the separator and the transformed system.

  Throws std::invalid_argument when the system is already monotone.
*/
std::pair<truth_table, function_system> decompose_step( function_system const& system,
                                                        int cap = default_arity_cap );

/*! \brief Builds a circuit for \p system over \p b with minimal weighted-gate count.

  The result is verified internally against the input system; a failure there
  signals a bug and raises std::logic_error.  The cap applies to the input
  arity plus one pseudo-input per level.
*/
synth_result synthesize( function_system const& system, basis const& b,
                         int cap = default_arity_cap );

} // namespace invc
