#include <set>
#include <stdexcept>

#include "doctest.h"
#include "sphrect/netparams.hpp"

using namespace sphrect;

namespace {

// Independent oracle: plain bounded search over all seven parameters.
// Deliberately structured differently from the library's enumeration.
std::vector<NetParams> brute_nets(const AngleQuadruple& q) {
  std::vector<NetParams> out;
  int hi = std::max({q[0], q[1], q[2], q[3]}) + 1;
  for (int mu = 0; mu <= hi; ++mu)
    for (int nu = 0; nu <= hi; ++nu)
      for (int kap = 0; kap <= hi; ++kap)
        for (int i = 0; i <= hi; ++i)
          for (int k = 0; k <= hi; ++k)
            for (int l = 0; l <= hi; ++l)
              for (int m = 0; m <= hi; ++m) {
                NetParams p{mu, nu, kap, i, k, l, m};
                if (i * mu != 0 || l * nu != 0) continue;
                if (induced_angles(p) == q) out.push_back(p);
              }
  return out;
}

const NetOp kAllOps[] = {NetOp::I,    NetOp::II,    NetOp::III,  NetOp::IV,
                         NetOp::V,    NetOp::VI,    NetOp::InvI, NetOp::InvII,
                         NetOp::InvIII, NetOp::InvIV, NetOp::InvV, NetOp::InvVI};

NetOp inverse_of(NetOp op) {
  switch (op) {
    case NetOp::I: return NetOp::InvI;
    case NetOp::II: return NetOp::InvII;
    case NetOp::III: return NetOp::InvIII;
    case NetOp::IV: return NetOp::InvIV;
    case NetOp::V: return NetOp::InvV;
    case NetOp::VI: return NetOp::InvVI;
    case NetOp::InvI: return NetOp::I;
    case NetOp::InvII: return NetOp::II;
    case NetOp::InvIII: return NetOp::III;
    case NetOp::InvIV: return NetOp::IV;
    case NetOp::InvV: return NetOp::V;
    case NetOp::InvVI: return NetOp::VI;
  }
  return NetOp::I;
}

}  // namespace

TEST_CASE("delta examples") {
  CHECK(AngleQuadruple(0, 1, 0, 1).two_delta() == 2);
  CHECK(AngleQuadruple(0, 1, 0, 1).delta() == doctest::Approx(1.0));
  CHECK(AngleQuadruple(0, 0, 0, 0).delta() == doctest::Approx(0.0));
  CHECK(AngleQuadruple(1, 3, 1, 3).delta() == doctest::Approx(2.0));
}

TEST_CASE("existence examples") {
  CHECK(exists(AngleQuadruple(0, 1, 0, 1)));
  CHECK_FALSE(exists(AngleQuadruple(0, 0, 0, 0)));
  CHECK(exists(AngleQuadruple(1, 0, 1, 0)));  // delta = -1 orientation
  CHECK_FALSE(exists(AngleQuadruple(0, 2, 0, 0)));  // delta 1 but A3 = 0
}

TEST_CASE("special examples") {
  CHECK(is_special(AngleQuadruple(0, 1, 0, 1)));
  CHECK_FALSE(is_special(AngleQuadruple(1, 3, 1, 3)));
  CHECK_FALSE(is_special(AngleQuadruple(0, 0, 0, 0)));
  CHECK(is_special(AngleQuadruple(2, 3, 2, 3)));
}

TEST_CASE("counting golden values") {
  CHECK(count(AngleQuadruple(0, 1, 0, 1)).first_type_count == 1);
  CHECK(count(AngleQuadruple(1, 2, 1, 2)).first_type_count == 2);
  CHECK(count(AngleQuadruple(2, 3, 2, 3)).first_type_count == 3);
  CHECK(count(AngleQuadruple(1, 3, 1, 3)).first_type_count == 1);
  for (auto q : {AngleQuadruple(0, 1, 0, 1), AngleQuadruple(2, 3, 2, 3)}) {
    auto r = count(q);
    CHECK(r.total_marked_count == 2 * r.first_type_count);
  }
}

TEST_CASE("enumerate_nets frozen examples") {
  auto one = enumerate_nets(AngleQuadruple(0, 1, 0, 1));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == NetParams{0, 0, 0, 0, 0, 0, 0});

  auto three = enumerate_nets(AngleQuadruple(2, 3, 2, 3));
  REQUIRE(three.size() == 3);
  CHECK(three[0] == NetParams{0, 0, 0, 0, 2, 0, 2});
  CHECK(three[1] == NetParams{0, 0, 0, 1, 1, 1, 1});
  CHECK(three[2] == NetParams{0, 0, 0, 2, 0, 2, 0});

  auto single = enumerate_nets(AngleQuadruple(1, 3, 1, 3));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == NetParams{1, 1, 0, 0, 1, 0, 1});

  CHECK_THROWS(enumerate_nets(AngleQuadruple(1, 0, 1, 0)));
  CHECK(enumerate_nets(AngleQuadruple(0, 5, 0, 1)).empty() ==
        !exists(AngleQuadruple(0, 5, 0, 1)));
}

TEST_CASE("enumeration matches the brute-force oracle, A_j <= 5") {
  for (int a0 = 0; a0 <= 5; ++a0)
    for (int a1 = 0; a1 <= 5; ++a1)
      for (int a2 = 0; a2 <= 5; ++a2)
        for (int a3 = 0; a3 <= 5; ++a3) {
          AngleQuadruple q(a0, a1, a2, a3);
          AngleQuadruple qq = q.two_delta() <= -2 ? relabel_marking(q) : q;
          std::vector<NetParams> got;
          if (qq.two_delta() >= 2) got = enumerate_nets(qq);
          auto want = brute_nets(qq);
          CAPTURE(q.str());
          CHECK(got.size() == want.size());
          CHECK(static_cast<long>(got.size()) == count(q).first_type_count);
          CHECK((!got.empty()) == exists(q));
          std::set<NetParams> sg(got.begin(), got.end()),
              sw(want.begin(), want.end());
          CHECK(sg == sw);
        }
}

TEST_CASE("operations: frozen examples") {
  NetParams p{0, 0, 1, 2, 0, 0, 0};
  NetParams r = apply_operation(NetOp::I, p);
  CHECK(r == NetParams{0, 4, 0, 0, 0, 0, 2});
  CHECK(induced_angles(r) == AngleQuadruple(2, 5, 0, 3));
  CHECK(induced_angles(r) == induced_angles(p));

  CHECK(apply_operation(NetOp::VI, NetParams{0, 0, 0, 1, 0, 1, 0}) ==
        NetParams{0, 0, 0, 0, 1, 0, 1});

  CHECK_THROWS_WITH_AS(apply_operation(NetOp::V, NetParams{0, 0, 0, 0, 0, 0, 0}),
                       "operation V: requires kappa>0", std::invalid_argument);
}

TEST_CASE("operations preserve angles and invert, nets with A_j <= 8") {
  for (int a0 = 0; a0 <= 8; ++a0)
    for (int a1 = 0; a1 <= 8; ++a1)
      for (int a2 = 0; a2 <= 8; ++a2)
        for (int a3 = 0; a3 <= 8; ++a3) {
          AngleQuadruple q(a0, a1, a2, a3);
          if (q.two_delta() < 2) {
            if (q.two_delta() <= -2)
              CHECK(enumerate_nets(relabel_marking(q)).empty() == !exists(q));
            continue;
          }
          CHECK(enumerate_nets(q).empty() == !exists(q));
          for (const auto& p : enumerate_nets(q)) {
            for (NetOp op : kAllOps) {
              if (!operation_applicable(op, p)) continue;
              NetParams r = apply_operation(op, p);
              CHECK(valid(r));
              CHECK(induced_angles(r) == q);
              CHECK(operation_applicable(inverse_of(op), r));
              CHECK(apply_operation(inverse_of(op), r) == p);
            }
          }
        }
}

TEST_CASE("reduce_to_terminal") {
  CHECK(reduce_to_terminal(NetParams{0, 0, 0, 1, 1, 1, 1}) ==
        NetParams{0, 0, 0, 0, 2, 0, 2});
  CHECK(reduce_to_terminal(NetParams{0, 0, 0, 0, 0, 0, 0}) ==
        NetParams{0, 0, 0, 0, 0, 0, 0});
  // InvI applies to (0,4,0,0,0,0,2); the kappa-increasing convention moves
  // to (0,0,1,2,0,0,0), which satisfies terminal condition (a)
  NetParams t = reduce_to_terminal(NetParams{0, 4, 0, 0, 0, 0, 2});
  CHECK(t == NetParams{0, 0, 1, 2, 0, 0, 0});
  CHECK(terminal_condition(t).has_value());
  CHECK_FALSE(terminal_condition(NetParams{0, 4, 0, 0, 0, 0, 2}).has_value());
}

TEST_CASE("terminal is unique per quadruple and has kappa_max, A_j <= 5") {
  for (int a0 = 0; a0 <= 5; ++a0)
    for (int a1 = 0; a1 <= 5; ++a1)
      for (int a2 = 0; a2 <= 5; ++a2)
        for (int a3 = 0; a3 <= 5; ++a3) {
          AngleQuadruple q(a0, a1, a2, a3);
          if (q.two_delta() < 2 || !exists(q)) continue;
          auto nets = enumerate_nets(q);
          std::set<NetParams> terminals;
          for (const auto& p : nets) {
            NetParams t = reduce_to_terminal(p);
            CHECK(induced_angles(t) == q);
            CHECK(terminal_condition(t).has_value());
            terminals.insert(t);
          }
          CAPTURE(q.str());
          CHECK(terminals.size() == 1);
          auto km = count(q).kappa_max;
          REQUIRE(km.has_value());
          CHECK(terminals.begin()->kappa == *km);

          // kappa values of the min(i,l)=0 nets fill [0, kappa_max]
          std::set<int> kappas;
          for (const auto& p : nets)
            if (std::min(p.i, p.l) == 0) kappas.insert(p.kappa);
          CHECK(static_cast<int>(kappas.size()) == *km + 1);
          CHECK(*kappas.begin() == 0);
          CHECK(*kappas.rbegin() == *km);
        }
}

TEST_CASE("relabel_marking") {
  CHECK(relabel_marking(AngleQuadruple(1, 0, 1, 0)) == AngleQuadruple(0, 1, 0, 1));
  CHECK(relabel_marking(AngleQuadruple(0, 0, 0, 0)) == AngleQuadruple(0, 0, 0, 0));
  CHECK(relabel_marking(AngleQuadruple(1, 2, 3, 4)) == AngleQuadruple(2, 3, 4, 1));
  AngleQuadruple q(1, 2, 3, 4);
  CHECK(relabel_marking(q).two_delta() == -q.two_delta());
}

TEST_CASE("symmetric counting law") {
  auto s = symmetric_count(1, 2);  // alpha=3/2, beta=5/2
  CHECK(s.total == 4);
  CHECK(s.first_type == 2);
  CHECK(symmetric_count(3, 3).total == 0);
  auto t = symmetric_count(1, 3);  // alpha=3/2, beta=7/2
  CHECK(t.total == 2);
  CHECK(t.first_type == 1);

  for (int A = 0; A <= 10; ++A)
    for (int B = 0; B <= 10; ++B) {
      CAPTURE(A);
      CAPTURE(B);
      CHECK(symmetric_count(A, B).first_type ==
            count(AngleQuadruple(A, B, A, B)).first_type_count);
    }
}
