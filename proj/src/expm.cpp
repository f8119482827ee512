#include "radmhd/expm.hpp"

#include <Eigen/LU>
#include <cmath>

namespace radmhd {

CMat9 expm(const CMat9& A) {
  // Pade-13 coefficients.
  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};
  const double theta13 = 5.371920351148152;

  double norm1 = A.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm1 > theta13)
    s = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));

  CMat9 As = A / std::pow(2.0, s);
  CMat9 A2 = As * As;
  CMat9 A4 = A2 * A2;
  CMat9 A6 = A4 * A2;
  CMat9 I = CMat9::Identity();

  CMat9 U = As * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 +
                  b[5] * A4 + b[3] * A2 + b[1] * I);
  CMat9 V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 +
            b[4] * A4 + b[2] * A2 + b[0] * I;

  CMat9 F = (V - U).partialPivLu().solve(V + U);
  for (int k = 0; k < s; ++k) F = F * F;
  return F;
}

}  // namespace radmhd
