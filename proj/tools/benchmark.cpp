// Serial vs OpenMP comparison for the data-parallel kernels: the lambda-grid
// period scan, the exhaustive counting sweep, and the net realization sweep.
#include <chrono>
#include <cstdio>
#include <cmath>
#include <vector>

#include "sphrect/angles.hpp"
#include "sphrect/netgraph.hpp"
#include "sphrect/parallel.hpp"
#include "sphrect/periods.hpp"

using namespace sphrect;

namespace {

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

// brute-force net count over bounded tuples (reference oracle)
long brute_count(const AngleQuadruple& q) {
  long n = 0;
  int hi = std::max({q[0], q[1], q[2], q[3]});
  for (int mu = 0; mu <= hi; ++mu)
    for (int nu = 0; nu <= hi; ++nu)
      for (int kap = 0; kap <= hi; ++kap)
        for (int i = 0; i <= hi; ++i)
          for (int k = 0; k <= hi; ++k)
            for (int l = 0; l <= hi; ++l)
              for (int m = 0; m <= hi; ++m) {
                NetParams p{mu, nu, kap, i, k, l, m};
                if (valid(p) && induced_angles(p) == q) ++n;
              }
  return n;
}

struct Row {
  const char* name;
  double serial_s, parallel_s;
};

}  // namespace

int main() {
  std::printf("sphrect benchmark, %d thread(s) available\n",
              hardware_threads());
  std::vector<Row> rows;

  {  // lambda-grid scan of the real period
    AngleQuadruple q(1, 2, 1, 2);
    double a = 1.3;
    std::vector<double> ls(160);
    for (std::size_t i = 0; i < ls.size(); ++i)
      ls[i] = -20.0 + 40.0 * static_cast<double>(i) / (ls.size() - 1);
    PeriodOptions po;
    double t0 = now_s();
    auto gs = scan_values(q, a, ls, po, ExecMode::Serial);
    double t1 = now_s();
    auto gp = scan_values(q, a, ls, po, ExecMode::Parallel);
    double t2 = now_s();
    bool same = true;
    for (std::size_t i = 0; i < gs.size(); ++i)
      same = same && (gs[i] == gp[i] || (std::isnan(gs[i]) && std::isnan(gp[i])));
    std::printf("  scan results identical: %s\n", same ? "yes" : "NO");
    rows.push_back({"lambda scan (160 pts, deg 6)", t1 - t0, t2 - t1});
  }

  {  // exhaustive count sweep, closed form vs brute force
    const int HI = 6;
    std::vector<AngleQuadruple> qs;
    for (int a0 = 0; a0 <= HI; ++a0)
      for (int a1 = 0; a1 <= HI; ++a1)
        for (int a2 = 0; a2 <= HI; ++a2)
          for (int a3 = 0; a3 <= HI; ++a3) qs.emplace_back(a0, a1, a2, a3);
    std::vector<long> cs(qs.size()), cp(qs.size());
    auto work = [&](std::vector<long>& out, ExecMode mode) {
      parallel_for(qs.size(), mode, [&](std::size_t i) {
        AngleQuadruple q = qs[i];
        if (q.two_delta() <= -2) q = relabel_marking(q);
        out[i] = brute_count(q) - count(qs[i]).first_type_count;
      });
    };
    double t0 = now_s();
    work(cs, ExecMode::Serial);
    double t1 = now_s();
    work(cp, ExecMode::Parallel);
    double t2 = now_s();
    long bad = 0;
    for (std::size_t i = 0; i < qs.size(); ++i)
      bad += (cs[i] != 0) + (cs[i] != cp[i]);
    std::printf("  count mismatches: %ld\n", bad);
    rows.push_back({"exhaustive counts (A_j <= 6)", t1 - t0, t2 - t1});
  }

  {  // net realization + validation sweep
    std::vector<NetParams> nets;
    for (int a0 = 0; a0 <= 4; ++a0)
      for (int a1 = 0; a1 <= 4; ++a1)
        for (int a2 = 0; a2 <= 4; ++a2)
          for (int a3 = 0; a3 <= 4; ++a3) {
            AngleQuadruple q(a0, a1, a2, a3);
            if (q.two_delta() < 2) continue;
            for (const auto& p : enumerate_nets(q)) nets.push_back(p);
          }
    std::vector<int> vs(nets.size()), vp(nets.size());
    auto work = [&](std::vector<int>& out, ExecMode mode) {
      parallel_for(nets.size(), mode, [&](std::size_t i) {
        NetGraph g = realize(nets[i]);
        out[i] = static_cast<int>(validate(g).size());
      });
    };
    double t0 = now_s();
    work(vs, ExecMode::Serial);
    double t1 = now_s();
    work(vp, ExecMode::Parallel);
    double t2 = now_s();
    long bad = 0;
    for (std::size_t i = 0; i < nets.size(); ++i)
      bad += vs[i] + (vs[i] != vp[i]);
    std::printf("  net violations: %ld over %zu nets\n", bad, nets.size());
    rows.push_back({"net realize+validate sweep", t1 - t0, t2 - t1});
  }

  std::printf("\n%-34s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]",
              "speedup");
  for (const auto& r : rows)
    std::printf("%-34s %10.3f %10.3f %7.2fx\n", r.name, r.serial_s,
                r.parallel_s, r.serial_s / (r.parallel_s > 0 ? r.parallel_s : 1));
  return 0;
}
