#include "fano/skew.hpp"

namespace fano {

int quadruple_sign(Quadruple q, Quadruple* sorted) {
  int sign = 1;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 3 - a; ++b) {
      if (q[b] == q[b + 1]) return 0;
      if (q[b] > q[b + 1]) {
        std::swap(q[b], q[b + 1]);
        sign = -sign;
      }
    }
  if (q[0] == q[1] || q[1] == q[2] || q[2] == q[3]) return 0;
  if (sorted) *sorted = q;
  return sign;
}

}  // namespace fano
