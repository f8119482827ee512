#ifndef RADMHD_EXPM_HPP
#define RADMHD_EXPM_HPP

#include "radmhd/symbols.hpp"

namespace radmhd {

/// Dense matrix exponential by scaling-and-squaring with the order-13 Pade
/// approximant (Higham's choice of scaling threshold). Eigendecomposition is
/// deliberately not used, so near-defective generators are handled.
CMat9 expm(const CMat9& A);

}  // namespace radmhd

#endif
