#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphrect/angles.hpp"

namespace sphrect {

// The seven non-negative integers (mu,nu,kappa,i,k,l,m) encoding the
// decomposition of a net into primitive triangles T_mu, T_nu, the digon
// D_{2kappa} between them, and side digons D_i, D_k, D_l, D_m.
// Constraint: i>0 only if mu=0, l>0 only if nu=0.
struct NetParams {
  int mu = 0, nu = 0, kappa = 0, i = 0, k = 0, l = 0, m = 0;

  bool operator==(const NetParams& o) const {
    return mu == o.mu && nu == o.nu && kappa == o.kappa && i == o.i &&
           k == o.k && l == o.l && m == o.m;
  }
  bool operator<(const NetParams& o) const {
    if (mu != o.mu) return mu < o.mu;
    if (nu != o.nu) return nu < o.nu;
    if (kappa != o.kappa) return kappa < o.kappa;
    if (i != o.i) return i < o.i;
    if (k != o.k) return k < o.k;
    if (l != o.l) return l < o.l;
    return m < o.m;
  }
  std::string str() const;
};

bool valid(const NetParams& p);

// A0=i+m, A1=i+k+nu+1+2kappa, A2=k+l, A3=l+m+mu+1+2kappa
AngleQuadruple induced_angles(const NetParams& p);

// All tuples inducing exactly q, lexicographic in (mu,nu,kappa,i,k,l,m).
// Requires delta(q) >= 1 when a rectangle with these angles exists at all
// (relabel_marking first for delta <= -1); returns an empty list when
// exists(q) is false.
std::vector<NetParams> enumerate_nets(const AngleQuadruple& q);

enum class NetOp { I, II, III, IV, V, VI, InvI, InvII, InvIII, InvIV, InvV, InvVI };

const char* to_string(NetOp op);

// Angle-preserving net operation; throws std::invalid_argument naming the
// first failed applicability condition.
NetParams apply_operation(NetOp op, const NetParams& p);

bool operation_applicable(NetOp op, const NetParams& p);

// The unique applicable kappa-increasing operation (InvI..InvV), if any;
// at most one exists when min(i,l)=0.
std::optional<NetOp> applicable_inverse(const NetParams& p);

// Index 0..11 of the terminal condition (a)..(l) this tuple satisfies,
// or nullopt. Terminal tuples admit no InvI..InvV move.
std::optional<int> terminal_condition(const NetParams& p);

// Operation VI until min(i,l)=0, then the unique applicable inverse
// operation until none applies. The result satisfies one of the twelve
// terminal conditions and depends only on the induced angles.
NetParams reduce_to_terminal(const NetParams& p);

}  // namespace sphrect
