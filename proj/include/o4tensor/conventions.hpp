#pragma once

namespace o4tensor {

// How a matrix element of a rank-1 spherical tensor factors into a coupling
// coefficient times a reduced symbol.
//
//   Standard:  <j' m'| T_q |j m> = cg(j, m, 1, q, j', m') * R(j', j)
//   BraFirst:  <j' m'| T_q |j m> = cg(j', m', 1, q, j, m' + q) * R(j', j)
//
// Standard is the usual Wigner-Eckart ordering (ket and operator coupled to
// the bra).  BraFirst feeds the bra labels through the coupling coefficient
// first; some derivations in the literature are written this way, and the
// two give different (but relatable) reduced symbols.
enum class Convention { Standard, BraFirst };

inline const char* convention_name(Convention c) {
    return c == Convention::Standard ? "standard" : "bra_first";
}

}  // namespace o4tensor
