/*!
  \file basis.hpp
  \brief Gate bases: all monotone functions for free plus weighted generators

  A basis consists of every monotone function at weight 0 together with a
  finite list of non-monotone generators at weight 1.  Its strength is
  summarized by r = max d(omega_i) and c = log2(2r + 1) + 1.
*/

#pragma once

#include "invc/decrease.hpp"
#include "invc/truth_table.hpp"

#include <vector>

namespace invc
{

class basis
{
public:
  /*! \brief Validates the generators: nonempty, each non-monotone. */
  explicit basis( std::vector<truth_table> omegas );

  /*! \brief The standard basis: monotone functions plus negation. */
  static basis b0();

  std::vector<truth_table> const& omegas() const { return omegas_; }
  int r() const { return r_; }
  double c() const { return c_; }

private:
  std::vector<truth_table> omegas_;
  int r_;
  double c_;
};

/*! \brief Wiring that turns one generator into negation.

  Feeding the variable into input \p pin and constants[j] into every other
  input j of generator \p omega_index yields NOT.  Such a wiring exists for
  every non-monotone function.
*/
struct negation_gadget
{
  int omega_index;
  int pin;                      /* 0-based input position carrying the variable */
  std::vector<bool> constants;  /* size = generator arity; entry at pin unused */
};

/*! \brief Deterministic gadget choice.

  Scans generators in order, corners in tuple order (x_1 compared first), pins
  ascending, and returns the first corner pair a < a' differing in one
  position with omega(a) = 1 and omega(a') = 0.
*/
negation_gadget find_negation_gadget( basis const& b );

/*! \brief The arity-1 function realized by the gadget; equals NOT by construction. */
truth_table apply_negation_gadget( basis const& b, negation_gadget const& gadget );

struct bounds_result
{
  int lower;
  int upper;
};

/*! \brief Inversion-weight bounds from a known decrease value.

  upper = ceil(log2(d + 1)); lower = max(0, ceil(upper - c(B))).
*/
bounds_result bounds_from_decrease( int d, basis const& b );

/*! \brief Bounds on the minimal weighted-gate count realizing \p system over \p b. */
bounds_result bounds( function_system const& system, basis const& b, int cap = default_arity_cap );

} // namespace invc
