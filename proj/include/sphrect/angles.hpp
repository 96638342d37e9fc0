#pragma once

#include <array>
#include <optional>
#include <string>

namespace sphrect {

// Integer parts (A0..A3) of the corner angles of a circular rectangle.
// The angle at corner j is (A[j] + 1/2) half-turns; delta = (A1+A3-A0-A2)/2
// is kept as the exact integer two_delta = 2*delta.
struct AngleQuadruple {
  std::array<int, 4> a{0, 0, 0, 0};

  AngleQuadruple() = default;
  AngleQuadruple(int a0, int a1, int a2, int a3) : a{a0, a1, a2, a3} {}

  int operator[](int j) const { return a[static_cast<std::size_t>(j)]; }
  bool operator==(const AngleQuadruple& o) const { return a == o.a; }
  bool operator<(const AngleQuadruple& o) const { return a < o.a; }

  int two_delta() const { return a[1] + a[3] - a[0] - a[2]; }
  double delta() const { return 0.5 * two_delta(); }
  int sum() const { return a[0] + a[1] + a[2] + a[3]; }
  // actual angle at corner j, in half-turns
  double alpha(int j) const { return a[static_cast<std::size_t>(j)] + 0.5; }

  std::string str() const;
};

// Existence of a spherical rectangle with these angles:
// delta>=1, A1>=1, A3>=1  or  delta<=-1, A0>=1, A2>=1.
bool exists(const AngleQuadruple& q);

// delta is an odd integer and A1>=delta>0, A3>=delta>0
// (or A0>=-delta>0, A2>=-delta>0).
bool is_special(const AngleQuadruple& q);

// New marking with a1 as initial corner: (A1,A2,A3,A0); delta negates.
AngleQuadruple relabel_marking(const AngleQuadruple& q);

struct CountReport {
  bool exists = false;
  bool special = false;
  int m1 = 0;          // [min((A1+1)/2,(A3+1)/2,(1+delta)/2)], clamped at 0
  int m2 = 0;          // [min((A0+1)/2,(A2+1)/2,(1-delta)/2)], clamped at 0
  int n_special = 0;   // min(A0,A1-d,A2,A3-d) extra nets, when special
  std::optional<int> kappa_max;  // [min((A1-1)/2,(A3-1)/2,(delta-1)/2)], delta>=1 only
  long first_type_count = 0;
  long total_marked_count = 0;  // both types; = 2*first_type_count
};

CountReport count(const AngleQuadruple& q);

// Quadruple (A,B,A,B) with angles alpha=A+1/2, beta=B+1/2.
// |beta-alpha| even: total=|beta-alpha|; odd: total=alpha+beta.
struct SymmetricCount {
  long total = 0;
  long first_type = 0;
};
SymmetricCount symmetric_count(int A, int B);

}  // namespace sphrect
