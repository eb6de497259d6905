#pragma once

#include <string>

namespace nfcert {

enum class ExtRoute { closed_form, congruence, local_kernel };

// dim Ext of the degree-p multiplicative-type extension problem away from l;
// always 0 or 1, and every route agrees where defined.
struct ExtDimension {
  long l = 0;
  long p = 0;
  int dimension = 0;
  ExtRoute route = ExtRoute::closed_form;
};

// dimension 1 iff (l^2-1)/24 = 0 mod p, evaluated exactly as
// v_p(l^2-1) >= v_p(24) + 1.  Rejects l == p.
ExtDimension ext_dimension(long l, long p);

// dimension 1 iff l = +-1 mod p (p >= 5), mod 9 (p = 3), mod 8 (p = 2).
ExtDimension ext_dimension_congruence(long l, long p);

// Kernel dimension of the explicit global-to-local power-class map:
// p = 2: span{2, -1, l} -> (valuation mod 2, unit class mod 8);
// p = 3: span{3, l}     -> (valuation mod 3, unit class mod 9).
// Only p in {2, 3}.
ExtDimension local_kernel_dimension(long l, long p);

}  // namespace nfcert
