#ifndef L2A_QUADRUPLE_HPP
#define L2A_QUADRUPLE_HPP

#include <cstddef>

#include "l2a/cohomology.hpp"

namespace l2a {

/// Classification data of a 2-term L-infinity algebra: a Lie algebra g, the
/// dimension of U, a representation (rho, V) of g and a 3-cocycle Jtilde in
/// C_3(g, rho, V).
struct Quadruple {
  LieAlgebra g;
  std::size_t dim_u = 0;
  Representation rep;
  Cochain jtilde;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

}  // namespace l2a

#endif  // L2A_QUADRUPLE_HPP
