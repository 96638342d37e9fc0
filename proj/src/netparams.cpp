#include "sphrect/netparams.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphrect {

std::string NetParams::str() const {
  return "(" + std::to_string(mu) + "," + std::to_string(nu) + "," +
         std::to_string(kappa) + "," + std::to_string(i) + "," +
         std::to_string(k) + "," + std::to_string(l) + "," +
         std::to_string(m) + ")";
}

bool valid(const NetParams& p) {
  if (p.mu < 0 || p.nu < 0 || p.kappa < 0 || p.i < 0 || p.k < 0 || p.l < 0 ||
      p.m < 0)
    return false;
  return p.i * p.mu == 0 && p.l * p.nu == 0;
}

AngleQuadruple induced_angles(const NetParams& p) {
  return AngleQuadruple(p.i + p.m, p.i + p.k + p.nu + 1 + 2 * p.kappa,
                        p.k + p.l, p.l + p.m + p.mu + 1 + 2 * p.kappa);
}

std::vector<NetParams> enumerate_nets(const AngleQuadruple& q) {
  if (q.two_delta() <= -2)
    throw std::invalid_argument(
        "enumerate_nets: delta <= -1; relabel_marking first");
  std::vector<NetParams> out;
  if (!exists(q)) return out;
  int kap_hi = (std::min(q[1], q[3]) - 1) / 2;
  for (int i = 0; i <= q[0]; ++i) {
    int m = q[0] - i;
    for (int k = 0; k <= q[2]; ++k) {
      int l = q[2] - k;
      for (int kap = 0; kap <= kap_hi; ++kap) {
        int nu = q[1] - i - k - 1 - 2 * kap;
        int mu = q[3] - l - m - 1 - 2 * kap;
        if (nu < 0 || mu < 0) continue;
        if (i * mu != 0 || l * nu != 0) continue;
        out.push_back(NetParams{mu, nu, kap, i, k, l, m});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(NetOp op) {
  switch (op) {
    case NetOp::I: return "I";
    case NetOp::II: return "II";
    case NetOp::III: return "III";
    case NetOp::IV: return "IV";
    case NetOp::V: return "V";
    case NetOp::VI: return "VI";
    case NetOp::InvI: return "InvI";
    case NetOp::InvII: return "InvII";
    case NetOp::InvIII: return "InvIII";
    case NetOp::InvIV: return "InvIV";
    case NetOp::InvV: return "InvV";
    case NetOp::InvVI: return "InvVI";
  }
  return "?";
}

namespace {

struct Cond {
  bool ok;
  const char* what;
};

void check(const std::vector<Cond>& conds, NetOp op) {
  for (const auto& c : conds)
    if (!c.ok)
      throw std::invalid_argument(std::string("operation ") + to_string(op) +
                                  ": requires " + c.what);
}

}  // namespace

bool operation_applicable(NetOp op, const NetParams& p) {
  switch (op) {
    case NetOp::I:    return p.kappa > 0 && p.i >= 2 && p.l == 0 && p.mu == 0;
    case NetOp::II:   return p.kappa > 0 && p.i == 0 && p.l >= 2 && p.nu == 0;
    case NetOp::III:  return p.kappa > 0 && p.i == 1 && p.l == 0 && p.mu == 0;
    case NetOp::IV:   return p.kappa > 0 && p.i == 0 && p.l == 1 && p.nu == 0;
    case NetOp::V:    return p.kappa > 0 && p.i == 0 && p.l == 0;
    case NetOp::VI:   return p.i > 0 && p.l > 0 && p.mu == 0 && p.nu == 0;
    case NetOp::InvI: return p.l == 0 && p.m >= 2 && p.mu == 0 && p.nu >= 4;
    case NetOp::InvII:return p.i == 0 && p.k >= 2 && p.mu >= 4 && p.nu == 0;
    case NetOp::InvIII:
      return p.i == 0 && p.l == 0 && p.m >= 1 && p.mu == 1 && p.nu >= 3;
    case NetOp::InvIV:
      return p.i == 0 && p.l == 0 && p.k >= 1 && p.mu >= 3 && p.nu == 1;
    case NetOp::InvV: return p.i == 0 && p.l == 0 && p.mu >= 2 && p.nu >= 2;
    case NetOp::InvVI:return p.k > 0 && p.m > 0 && p.mu == 0 && p.nu == 0;
  }
  return false;
}

NetParams apply_operation(NetOp op, const NetParams& p) {
  NetParams r = p;
  switch (op) {
    case NetOp::I:
      check({{p.kappa > 0, "kappa>0"}, {p.i >= 2, "i>=2"}, {p.l == 0, "l=0"},
             {p.mu == 0, "mu=0"}}, op);
      r.kappa -= 1; r.nu += 4; r.i -= 2; r.m += 2;
      break;
    case NetOp::InvI:
      check({{p.l == 0, "l=0"}, {p.m >= 2, "m>=2"}, {p.mu == 0, "mu=0"},
             {p.nu >= 4, "nu>=4"}}, op);
      r.kappa += 1; r.nu -= 4; r.i += 2; r.m -= 2;
      break;
    case NetOp::II:
      check({{p.kappa > 0, "kappa>0"}, {p.i == 0, "i=0"}, {p.l >= 2, "l>=2"},
             {p.nu == 0, "nu=0"}}, op);
      r.kappa -= 1; r.mu += 4; r.k += 2; r.l -= 2;
      break;
    case NetOp::InvII:
      check({{p.i == 0, "i=0"}, {p.k >= 2, "k>=2"}, {p.mu >= 4, "mu>=4"},
             {p.nu == 0, "nu=0"}}, op);
      r.kappa += 1; r.mu -= 4; r.k -= 2; r.l += 2;
      break;
    case NetOp::III:
      check({{p.kappa > 0, "kappa>0"}, {p.i == 1, "i=1"}, {p.l == 0, "l=0"},
             {p.mu == 0, "mu=0"}}, op);
      r.kappa -= 1; r.mu = 1; r.nu += 3; r.i = 0; r.m += 1;
      break;
    case NetOp::InvIII:
      check({{p.i == 0, "i=0"}, {p.l == 0, "l=0"}, {p.m >= 1, "m>=1"},
             {p.mu == 1, "mu=1"}, {p.nu >= 3, "nu>=3"}}, op);
      r.kappa += 1; r.mu = 0; r.nu -= 3; r.i = 1; r.m -= 1;
      break;
    case NetOp::IV:
      check({{p.kappa > 0, "kappa>0"}, {p.i == 0, "i=0"}, {p.l == 1, "l=1"},
             {p.nu == 0, "nu=0"}}, op);
      r.kappa -= 1; r.mu += 3; r.nu = 1; r.k += 1; r.l = 0;
      break;
    case NetOp::InvIV:
      check({{p.i == 0, "i=0"}, {p.l == 0, "l=0"}, {p.k >= 1, "k>=1"},
             {p.mu >= 3, "mu>=3"}, {p.nu == 1, "nu=1"}}, op);
      r.kappa += 1; r.mu -= 3; r.nu = 0; r.k -= 1; r.l = 1;
      break;
    case NetOp::V:
      check({{p.kappa > 0, "kappa>0"}, {p.i == 0, "i=0"}, {p.l == 0, "l=0"}},
            op);
      r.kappa -= 1; r.mu += 2; r.nu += 2;
      break;
    case NetOp::InvV:
      check({{p.i == 0, "i=0"}, {p.l == 0, "l=0"}, {p.mu >= 2, "mu>=2"},
             {p.nu >= 2, "nu>=2"}}, op);
      r.kappa += 1; r.mu -= 2; r.nu -= 2;
      break;
    case NetOp::VI:
      check({{p.i > 0, "i>0"}, {p.l > 0, "l>0"}, {p.mu == 0, "mu=0"},
             {p.nu == 0, "nu=0"}}, op);
      r.i -= 1; r.k += 1; r.l -= 1; r.m += 1;
      break;
    case NetOp::InvVI:
      check({{p.k > 0, "k>0"}, {p.m > 0, "m>0"}, {p.mu == 0, "mu=0"},
             {p.nu == 0, "nu=0"}}, op);
      r.i += 1; r.k -= 1; r.l += 1; r.m -= 1;
      break;
  }
  return r;
}

std::optional<NetOp> applicable_inverse(const NetParams& p) {
  const NetOp invs[] = {NetOp::InvI, NetOp::InvII, NetOp::InvIII, NetOp::InvIV,
                        NetOp::InvV};
  std::optional<NetOp> found;
  for (NetOp op : invs) {
    if (operation_applicable(op, p)) {
      if (found)
        throw std::logic_error("more than one inverse operation applies to " +
                               p.str());
      found = op;
    }
  }
  return found;
}

std::optional<int> terminal_condition(const NetParams& p) {
  if (std::min(p.i, p.l) > 0) return std::nullopt;
  if (p.mu == 0 && p.nu == 0) return 0;                     // (a)
  if (p.mu == 0 && p.nu == 1) return 1;                     // (b)
  if (p.mu == 1 && p.nu == 0) return 2;                     // (c)
  if (p.mu == 1 && p.nu == 1) return 3;                     // (d)
  if (p.mu == 0 && p.nu == 2) return 4;                     // (e)
  if (p.mu == 2 && p.nu == 0) return 5;                     // (f)
  if (p.mu == 0 && p.nu == 3) return 6;                     // (g)
  if (p.mu == 3 && p.nu == 0) return 7;                     // (h)
  if (p.mu == 1 && p.nu >= 3 && p.m == 0) return 8;         // (i)
  if (p.mu >= 3 && p.nu == 1 && p.k == 0) return 9;         // (j)
  if (p.mu == 0 && p.nu >= 4 && p.m <= 1) return 10;        // (k)
  if (p.mu >= 4 && p.nu == 0 && p.k <= 1) return 11;        // (l)
  // (1,2) and (2,1) also admit no inverse operation (the stated list of
  // twelve conditions misses them; e.g. the unique net of angles (0,2,0,3))
  if (p.mu == 1 && p.nu == 2) return 12;
  if (p.mu == 2 && p.nu == 1) return 13;
  return std::nullopt;
}

NetParams reduce_to_terminal(const NetParams& p) {
  NetParams r = p;
  while (std::min(r.i, r.l) > 0) r = apply_operation(NetOp::VI, r);
  while (auto op = applicable_inverse(r)) r = apply_operation(*op, r);
  if (!terminal_condition(r))
    throw std::logic_error("reduce_to_terminal: non-terminal fixed point " +
                           r.str());
  return r;
}

}  // namespace sphrect
