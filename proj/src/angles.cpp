#include "sphrect/angles.hpp"

#include <algorithm>

namespace sphrect {

namespace {
// floor division for possibly negative numerators
int floordiv(int num, int den) {
  int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}
}  // namespace

std::string AngleQuadruple::str() const {
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
         std::to_string(a[2]) + "," + std::to_string(a[3]);
}

bool exists(const AngleQuadruple& q) {
  int td = q.two_delta();
  if (td >= 2 && q[1] >= 1 && q[3] >= 1) return true;
  if (td <= -2 && q[0] >= 1 && q[2] >= 1) return true;
  return false;
}

bool is_special(const AngleQuadruple& q) {
  int td = q.two_delta();
  if (td % 4 == 0 || td % 2 != 0) return false;  // delta must be an odd integer
  int d = td / 2;
  if (d > 0) return q[1] >= d && q[3] >= d;
  return q[0] >= -d && q[2] >= -d;
}

AngleQuadruple relabel_marking(const AngleQuadruple& q) {
  return AngleQuadruple(q[1], q[2], q[3], q[0]);
}

CountReport count(const AngleQuadruple& q) {
  CountReport r;
  r.exists = exists(q);
  r.special = is_special(q);
  int td = q.two_delta();

  // quantities in quarter-turn units so the floors stay exact
  r.m1 = std::max(0, floordiv(std::min({2 * q[1] + 2, 2 * q[3] + 2, 2 + td}), 4));
  r.m2 = std::max(0, floordiv(std::min({2 * q[0] + 2, 2 * q[2] + 2, 2 - td}), 4));

  if (td >= 2) {
    int km = floordiv(std::min({2 * q[1] - 2, 2 * q[3] - 2, td - 2}), 4);
    if (km >= 0) r.kappa_max = km;
  }

  long n = 0;
  if (r.special) {
    int d = td / 2;  // odd integer
    if (d > 0) {
      r.n_special = std::max(0, std::min({q[0], q[1] - d, q[2], q[3] - d}));
      n = (1 + d) / 2 + r.n_special;
    } else {
      r.n_special = std::max(0, std::min({q[1], q[2] + d, q[3], q[0] + d}));
      n = (1 - d) / 2 + r.n_special;
    }
  }

  if (!r.exists) {
    r.first_type_count = 0;
  } else if (r.special) {
    r.first_type_count = n;
  } else {
    r.first_type_count = (td >= 2) ? r.m1 : r.m2;
  }
  r.total_marked_count = 2 * r.first_type_count;
  return r;
}

SymmetricCount symmetric_count(int A, int B) {
  SymmetricCount s;
  int diff = std::abs(B - A);
  if (diff < 1) return s;  // alpha == beta: no spherical rectangle
  if (diff % 2 == 0) {
    s.total = diff;
  } else {
    s.total = A + B + 1;  // alpha + beta
  }
  s.first_type = s.total / 2;
  return s;
}

}  // namespace sphrect
