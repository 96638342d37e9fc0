#include "sphrect/netgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sphrect {

const char* to_string(CircleLabel c) {
  switch (c) {
    case CircleLabel::C: return "C";
    case CircleLabel::Cp: return "C'";
    case CircleLabel::Cpp: return "C''";
  }
  return "?";
}

const char* to_string(VertexRole r) {
  switch (r) {
    case VertexRole::Corner0: return "corner0";
    case VertexRole::Corner1: return "corner1";
    case VertexRole::Corner2: return "corner2";
    case VertexRole::Corner3: return "corner3";
    case VertexRole::Boundary: return "boundary";
    case VertexRole::Interior: return "interior";
  }
  return "?";
}

namespace {

struct Arc {
  std::vector<int> v;  // endpoints inclusive
  std::vector<int> e;  // e[j] joins v[j], v[j+1]
};

struct Builder {
  NetGraph g;

  int vertex() {
    g.vertices.push_back({});
    return static_cast<int>(g.vertices.size()) - 1;
  }
  int edge(int u, int v, CircleLabel lab) {
    g.edges.push_back({u, v, lab});
    return static_cast<int>(g.edges.size()) - 1;
  }
  Arc arc(const std::vector<int>& vs, CircleLabel lab) {
    Arc a;
    a.v = vs;
    for (std::size_t j = 0; j + 1 < vs.size(); ++j)
      a.e.push_back(edge(vs[j], vs[j + 1], lab));
    return a;
  }
  void face(int u, int w, int z, int euw, int ewz, int ezu) {
    auto joins = [&](int e, int p, int q) {
      return (g.edges[e].v0 == p && g.edges[e].v1 == q) ||
             (g.edges[e].v0 == q && g.edges[e].v1 == p);
    };
    if (!joins(euw, u, w) || !joins(ewz, w, z) || !joins(ezu, z, u))
      throw std::logic_error("realize: face edges do not chain");
    g.faces.push_back({{u, w, z}, {euw, ewz, ezu}, FaceType::Theta});
  }
};

Arc reversed(const Arc& a) {
  Arc r;
  r.v.assign(a.v.rbegin(), a.v.rend());
  r.e.assign(a.e.rbegin(), a.e.rend());
  return r;
}

// One digon copy: hub vertex joined to every vertex of the ccw walk
// (inner arc reversed, then outer arc forward).
void add_copy(Builder& b, const Arc& inner, const Arc& outer, int hub,
              const std::map<int, CircleLabel>& hub_lab) {
  std::map<int, int> hub_edge;
  auto he = [&](int v) {
    auto it = hub_edge.find(v);
    if (it != hub_edge.end()) return it->second;
    int e = b.edge(hub, v, hub_lab.at(v));
    hub_edge[v] = e;
    return e;
  };
  Arc in_rev = reversed(inner);
  auto emit = [&](const Arc& a) {
    for (std::size_t j = 0; j + 1 < a.v.size(); ++j)
      b.face(a.v[j], a.v[j + 1], hub, a.e[j], he(a.v[j + 1]), he(a.v[j]));
  };
  emit(in_rev);
  emit(outer);
}

// Chain of n copies on circle-C sides between corners cu, cv.
// Arcs alternate short (1 edge) / long (3 edges); arc 0 (= inner, already
// built) is short. Interior points of long arcs: nearest to cu has hub
// label labS, the other labT.
Arc c_chain(Builder& b, Arc inner, int cu, int cv, int n, CircleLabel cuLab,
            CircleLabel cvLab, CircleLabel labS, CircleLabel labT) {
  for (int j = 1; j <= n; ++j) {
    Arc outer;
    std::map<int, CircleLabel> hl{{cu, cuLab}, {cv, cvLab}};
    if (j % 2 == 1) {
      int s = b.vertex(), t = b.vertex();
      outer = b.arc({cu, s, t, cv}, CircleLabel::C);
      hl[s] = labS;
      hl[t] = labT;
    } else {
      outer = b.arc({cu, cv}, CircleLabel::C);
    }
    if (j % 2 == 0) {  // long inner arc: its interior points need labels too
      hl[inner.v[1]] = labS;
      hl[inner.v[2]] = labT;
    }
    int hub = b.vertex();
    add_copy(b, inner, outer, hub, hl);
    inner = outer;
  }
  return inner;
}

// Chain of n balanced copies (sides on Cp or Cpp) between corners cu, cv.
// Every arc is [cu, w, cv]; hub edges to corners carry C, to the interior
// points wLab.
Arc bal_chain(Builder& b, Arc inner, int cu, int cv, int n,
              CircleLabel arcLab, CircleLabel wLab) {
  for (int j = 1; j <= n; ++j) {
    int w = b.vertex();
    Arc outer = b.arc({cu, w, cv}, arcLab);
    int hub = b.vertex();
    add_copy(b, inner, outer, hub,
             {{cu, CircleLabel::C},
              {cv, CircleLabel::C},
              {w, wLab},
              {inner.v[1], wLab}});
    inner = outer;
  }
  return inner;
}

// dart = 2*edge + dir; dir 0 = v0->v1
int dart_from(const NetGraph& g, int e, int origin) {
  return 2 * e + (g.edges[e].v0 == origin ? 0 : 1);
}
int dart_origin(const NetGraph& g, int d) {
  return (d & 1) ? g.edges[d >> 1].v1 : g.edges[d >> 1].v0;
}
int dart_target(const NetGraph& g, int d) {
  return (d & 1) ? g.edges[d >> 1].v0 : g.edges[d >> 1].v1;
}

// ccw successor of each dart at its origin vertex
std::vector<int> rotation_next(const NetGraph& g) {
  std::vector<int> nxt(2 * g.edges.size(), -1);
  for (const auto& f : g.faces) {
    for (int j = 0; j < 3; ++j) {
      int jn = (j + 1) % 3;
      int d_prev = dart_from(g, f.e[j], f.v[j]);
      int d_next = dart_from(g, f.e[jn], f.v[jn]);
      nxt[d_next] = d_prev ^ 1;
    }
  }
  std::size_t nb = g.boundary_vertices.size();
  for (std::size_t t = 0; t < nb; ++t) {
    int w = g.boundary_vertices[t];
    int e_in = g.boundary_edges[(t + nb - 1) % nb];
    int e_out = g.boundary_edges[t];
    nxt[dart_from(g, e_in, w)] = dart_from(g, e_out, w);
  }
  return nxt;
}

char role_char(VertexRole r, int anchor) {
  switch (r) {
    case VertexRole::Corner0:
    case VertexRole::Corner1:
    case VertexRole::Corner2:
    case VertexRole::Corner3: {
      int j = static_cast<int>(r) - static_cast<int>(VertexRole::Corner0);
      return static_cast<char>('0' + ((j - anchor) % 4 + 4) % 4);
    }
    case VertexRole::Boundary: return 'b';
    case VertexRole::Interior: return 'i';
  }
  return '?';
}

char label_char(CircleLabel c, int anchor) {
  // the half-turn a0 <-> a2 symmetry maps L1 onto L3, conjugating the
  // circle labeling Cp <-> Cpp; codes anchored at a2 compare in that gauge
  if (anchor == 2) {
    if (c == CircleLabel::Cp) c = CircleLabel::Cpp;
    else if (c == CircleLabel::Cpp) c = CircleLabel::Cp;
  }
  switch (c) {
    case CircleLabel::C: return 'c';
    case CircleLabel::Cp: return 'p';
    case CircleLabel::Cpp: return 'q';
  }
  return '?';
}

void assign_face_types(NetGraph& g) {
  // anchor: a face containing the gamma edge (a short a1-a3 arc of the net)
  // is of the alpha = 1-theta type; propagate with the flip rule (types
  // agree across C edges, flip across Cp/Cpp edges).
  std::vector<std::vector<int>> faces_of_edge(g.edges.size());
  for (std::size_t fi = 0; fi < g.faces.size(); ++fi)
    for (int e : g.faces[fi].e) faces_of_edge[e].push_back(static_cast<int>(fi));

  int anchor = -1;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    bool a13 = (ed.v0 == g.corner[1] && ed.v1 == g.corner[3]) ||
               (ed.v0 == g.corner[3] && ed.v1 == g.corner[1]);
    if (a13 && ed.label == CircleLabel::C) {
      anchor = faces_of_edge[e].front();
      break;
    }
  }
  if (anchor < 0) throw std::logic_error("realize: no gamma edge found");

  std::vector<int> type(g.faces.size(), -1);
  type[anchor] = 1;  // OneMinusTheta
  std::queue<int> q;
  q.push(anchor);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int e : g.faces[f].e) {
      bool flip = g.edges[e].label != CircleLabel::C;
      for (int f2 : faces_of_edge[e]) {
        if (f2 == f) continue;
        int t = flip ? 1 - type[f] : type[f];
        if (type[f2] == -1) {
          type[f2] = t;
          q.push(f2);
        } else if (type[f2] != t) {
          throw std::logic_error("realize: inconsistent face types");
        }
      }
    }
  }
  for (std::size_t fi = 0; fi < g.faces.size(); ++fi) {
    if (type[fi] == -1) throw std::logic_error("realize: disconnected faces");
    g.faces[fi].type = type[fi] ? FaceType::OneMinusTheta : FaceType::Theta;
  }
}

}  // namespace

NetGraph realize(const NetParams& p) {
  if (!valid(p))
    throw std::invalid_argument("realize: invalid NetParams " + p.str());

  Builder b;
  int a0 = b.vertex(), a1 = b.vertex(), a2 = b.vertex(), a3 = b.vertex();

  // T_mu: apex a3, base from a0 to a1 on Cp, 2mu+2 fan faces
  std::vector<int> baseMu{a0};
  for (int j = 0; j < 2 * p.mu + 1; ++j) baseMu.push_back(b.vertex());
  baseMu.push_back(a1);
  Arc arcBaseMu = b.arc(baseMu, CircleLabel::Cp);

  // T_nu: apex a1, base from a2 to a3 on Cpp
  std::vector<int> baseNu{a2};
  for (int j = 0; j < 2 * p.nu + 1; ++j) baseNu.push_back(b.vertex());
  baseNu.push_back(a3);
  Arc arcBaseNu = b.arc(baseNu, CircleLabel::Cpp);

  int freeMu = b.edge(a3, a0, CircleLabel::C);
  int freeNu = b.edge(a1, a2, CircleLabel::C);
  int gammaMu, gammaNu;
  if (p.kappa == 0) {
    gammaMu = gammaNu = b.edge(a3, a1, CircleLabel::C);
  } else {
    gammaMu = b.edge(a3, a1, CircleLabel::C);
    gammaNu = b.edge(a1, a3, CircleLabel::C);
  }

  // fan edges of T_mu: index 0 = free side, 2mu+2 = gamma side
  std::vector<int> fanMu(2 * p.mu + 3);
  fanMu[0] = freeMu;
  fanMu[2 * p.mu + 2] = gammaMu;
  for (int j = 1; j <= 2 * p.mu + 1; ++j)
    fanMu[j] = b.edge(a3, baseMu[j],
                      j % 2 == 1 ? CircleLabel::Cpp : CircleLabel::C);
  for (int j = 0; j <= 2 * p.mu + 1; ++j)
    b.face(baseMu[j], baseMu[j + 1], a3, arcBaseMu.e[j], fanMu[j + 1], fanMu[j]);

  std::vector<int> fanNu(2 * p.nu + 3);
  fanNu[0] = freeNu;
  fanNu[2 * p.nu + 2] = gammaNu;
  for (int j = 1; j <= 2 * p.nu + 1; ++j)
    fanNu[j] = b.edge(a1, baseNu[j],
                      j % 2 == 1 ? CircleLabel::Cp : CircleLabel::C);
  for (int j = 0; j <= 2 * p.nu + 1; ++j)
    b.face(baseNu[j], baseNu[j + 1], a1, arcBaseNu.e[j], fanNu[j + 1], fanNu[j]);

  // D_{2kappa} between the gamma sides, corners a1, a3
  if (p.kappa > 0) {
    Arc g0{{a1, a3}, {gammaMu}};
    Arc last = c_chain(b, g0, a1, a3, 2 * p.kappa, CircleLabel::Cp,
                       CircleLabel::Cpp, CircleLabel::Cpp, CircleLabel::Cp);
    if (last.e.size() != 1 || last.e[0] != gammaNu) {
      // last arc of an even chain is short; identify it with gammaNu
      // by construction order it is a fresh edge: rewire faces
      int stray = last.e[0];
      for (auto& f : b.g.faces)
        for (auto& e : f.e)
          if (e == stray) e = gammaNu;
      // drop the stray edge by marking it onto gammaNu endpoints (edge ids
      // must stay dense: swap-with-last not safe mid-build, so rebuild below)
      b.g.edges[stray].v0 = -2;  // tombstone
    }
  }

  // side digons
  Arc sideL1 = (p.i > 0)
                   ? bal_chain(b, arcBaseMu, a0, a1, p.i, CircleLabel::Cp,
                               CircleLabel::Cpp)
                   : arcBaseMu;
  Arc sideL3 = (p.l > 0)
                   ? bal_chain(b, arcBaseNu, a2, a3, p.l, CircleLabel::Cpp,
                               CircleLabel::Cp)
                   : arcBaseNu;
  Arc sideL2 = (p.k > 0)
                   ? c_chain(b, Arc{{a1, a2}, {freeNu}}, a1, a2, p.k,
                             CircleLabel::Cp, CircleLabel::Cpp,
                             CircleLabel::Cpp, CircleLabel::Cp)
                   : Arc{{a1, a2}, {freeNu}};
  Arc sideL4 = (p.m > 0)
                   ? c_chain(b, Arc{{a3, a0}, {freeMu}}, a3, a0, p.m,
                             CircleLabel::Cpp, CircleLabel::Cp,
                             CircleLabel::Cp, CircleLabel::Cpp)
                   : Arc{{a3, a0}, {freeMu}};

  NetGraph& g = b.g;

  // compact tombstoned edges
  {
    std::vector<int> remap(g.edges.size());
    std::vector<NetGraph::Edge> kept;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].v0 == -2) {
        remap[e] = -1;
      } else {
        remap[e] = static_cast<int>(kept.size());
        kept.push_back(g.edges[e]);
      }
    }
    g.edges = std::move(kept);
    auto fix = [&](int& e) { e = remap[e]; };
    for (auto& f : g.faces)
      for (auto& e : f.e) fix(e);
    for (Arc* a : {&sideL1, &sideL2, &sideL3, &sideL4})
      for (auto& e : a->e) fix(e);
  }

  g.params = p;
  g.angles = induced_angles(p);
  g.corner = {a0, a1, a2, a3};

  auto append_side = [&](const Arc& s) {
    for (std::size_t j = 1; j < s.v.size(); ++j)
      g.boundary_vertices.push_back(s.v[j]);
    for (int e : s.e) g.boundary_edges.push_back(e);
  };
  g.boundary_vertices.push_back(a0);
  g.corner_pos[0] = 0;
  append_side(sideL1);
  g.corner_pos[1] = static_cast<int>(g.boundary_vertices.size()) - 1;
  append_side(sideL2);
  g.corner_pos[2] = static_cast<int>(g.boundary_vertices.size()) - 1;
  append_side(sideL3);
  g.corner_pos[3] = static_cast<int>(g.boundary_vertices.size()) - 1;
  append_side(sideL4);
  g.boundary_vertices.pop_back();  // closing a0 repeats the start

  for (auto& v : g.vertices) v.role = VertexRole::Interior;
  for (int v : g.boundary_vertices) g.vertices[v].role = VertexRole::Boundary;
  g.vertices[a0].role = VertexRole::Corner0;
  g.vertices[a1].role = VertexRole::Corner1;
  g.vertices[a2].role = VertexRole::Corner2;
  g.vertices[a3].role = VertexRole::Corner3;

  assign_face_types(g);
  return g;
}

std::vector<Violation> validate(const NetGraph& g) {
  std::vector<Violation> out;
  auto add = [&](const std::string& rule, int id, const std::string& detail) {
    out.push_back({rule, id, detail});
  };

  int n_v = static_cast<int>(g.vertices.size());
  int n_e = static_cast<int>(g.edges.size());
  int n_f = static_cast<int>(g.faces.size());

  // face edge chains and label triples
  for (int fi = 0; fi < n_f; ++fi) {
    const auto& f = g.faces[fi];
    std::set<CircleLabel> labs;
    for (int j = 0; j < 3; ++j) {
      int e = f.e[j];
      if (e < 0 || e >= n_e) {
        add("face-edges", fi, "edge id out of range");
        continue;
      }
      const auto& ed = g.edges[e];
      int u = f.v[j], w = f.v[(j + 1) % 3];
      if (!((ed.v0 == u && ed.v1 == w) || (ed.v0 == w && ed.v1 == u)))
        add("face-edges", fi, "edge does not join consecutive vertices");
      labs.insert(ed.label);
    }
    if (labs.size() != 3)
      add("face-labels", fi, "face sides do not carry three distinct circles");
  }

  // edge -> faces incidence
  std::vector<std::vector<int>> fo(n_e);
  for (int fi = 0; fi < n_f; ++fi)
    for (int e : g.faces[fi].e) if (e >= 0 && e < n_e) fo[e].push_back(fi);
  std::set<int> bset(g.boundary_edges.begin(), g.boundary_edges.end());
  for (int e = 0; e < n_e; ++e) {
    std::size_t want = bset.count(e) ? 1 : 2;
    if (fo[e].size() != want)
      add("edge-incidence", e,
          "edge borders " + std::to_string(fo[e].size()) + " faces, expected " +
              std::to_string(want));
  }

  // degrees
  std::vector<int> deg(n_v, 0);
  for (const auto& ed : g.edges) {
    if (ed.v0 >= 0 && ed.v0 < n_v) ++deg[ed.v0];
    if (ed.v1 >= 0 && ed.v1 < n_v) ++deg[ed.v1];
  }
  std::set<int> bverts(g.boundary_vertices.begin(), g.boundary_vertices.end());
  for (int v = 0; v < n_v; ++v) {
    bool corner = std::count(g.corner.begin(), g.corner.end(), v) > 0;
    if (corner) continue;
    if (bverts.count(v)) {
      if (deg[v] != 3)
        add("P2-boundary-degree", v,
            "boundary vertex degree " + std::to_string(deg[v]));
    } else {
      if (deg[v] != 4)
        add("P1-interior-degree", v,
            "interior vertex degree " + std::to_string(deg[v]));
    }
  }

  // corner face counts 2A_j+1
  std::vector<int> fcount(n_v, 0);
  for (const auto& f : g.faces)
    for (int v : f.v) if (v >= 0 && v < n_v) ++fcount[v];
  for (int j = 0; j < 4; ++j) {
    int want = 2 * g.angles[j] + 1;
    if (fcount[g.corner[j]] != want)
      add("corner-face-count", j,
          std::to_string(fcount[g.corner[j]]) + " != " + std::to_string(want));
  }

  // totals
  int sumA = g.angles.sum();
  if (n_f != 2 * sumA)
    add("face-total", -1,
        std::to_string(n_f) + " faces != 2*sum(A) = " + std::to_string(2 * sumA));
  int n_theta = 0;
  for (const auto& f : g.faces) n_theta += f.type == FaceType::Theta;
  if (n_theta != sumA || n_f - n_theta != sumA)
    add("type-counts", -1,
        "theta faces " + std::to_string(n_theta) + ", alpha faces " +
            std::to_string(n_f - n_theta));

  // flip rule across interior edges
  for (int e = 0; e < n_e; ++e) {
    if (fo[e].size() != 2) continue;
    bool same = g.faces[fo[e][0]].type == g.faces[fo[e][1]].type;
    bool want_same = g.edges[e].label == CircleLabel::C;
    if (same != want_same) add("type-flip", e, "face types break the flip rule");
  }

  // boundary cycle and side labels
  std::size_t nb = g.boundary_vertices.size();
  if (nb != g.boundary_edges.size()) {
    add("boundary", -1, "vertex/edge count mismatch");
  } else {
    static const CircleLabel side_lab[4] = {CircleLabel::Cp, CircleLabel::C,
                                            CircleLabel::Cpp, CircleLabel::C};
    for (std::size_t t = 0; t < nb; ++t) {
      int e = g.boundary_edges[t];
      int u = g.boundary_vertices[t];
      int w = g.boundary_vertices[(t + 1) % nb];
      const auto& ed = g.edges[e];
      if (!((ed.v0 == u && ed.v1 == w) || (ed.v0 == w && ed.v1 == u)))
        add("boundary", static_cast<int>(t), "boundary edge does not chain");
      int side = 3;
      for (int j = 0; j < 3; ++j)
        if (static_cast<int>(t) >= g.corner_pos[j] &&
            static_cast<int>(t) < g.corner_pos[j + 1])
          side = j;
      if (static_cast<int>(t) < g.corner_pos[1] && g.corner_pos[0] == 0) side = 0;
      if (ed.label != side_lab[side])
        add("boundary-side-label", static_cast<int>(t),
            std::string("side L") + std::to_string(side + 1) + " edge carries " +
                to_string(ed.label));
    }
    for (int j = 0; j < 4; ++j)
      if (g.boundary_vertices[g.corner_pos[j]] != g.corner[j])
        add("boundary", j, "corner out of place");
  }

  // disk Euler characteristic
  if (n_v - n_e + n_f != 1)
    add("euler", -1, "V-E+F = " + std::to_string(n_v - n_e + n_f));

  return out;
}

DoubledTriangulation double_graph(const NetGraph& g) {
  DoubledTriangulation d;
  int n_v = static_cast<int>(g.vertices.size());
  std::set<int> bverts(g.boundary_vertices.begin(), g.boundary_vertices.end());
  std::vector<int> mirror(n_v);
  int next = n_v;
  for (int v = 0; v < n_v; ++v) mirror[v] = bverts.count(v) ? v : next++;
  d.v = next;
  d.degree.assign(next, 0);
  d.on_circle.assign(next, false);
  for (int v : g.boundary_vertices) d.on_circle[v] = true;

  std::set<int> bedges(g.boundary_edges.begin(), g.boundary_edges.end());
  long e_count = 0;
  auto add_edge = [&](int u, int v) {
    ++e_count;
    ++d.degree[u];
    ++d.degree[v];
  };
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    add_edge(g.edges[e].v0, g.edges[e].v1);
    if (!bedges.count(static_cast<int>(e)))
      add_edge(mirror[g.edges[e].v0], mirror[g.edges[e].v1]);
  }
  d.e = e_count;
  d.f = 2 * static_cast<long>(g.faces.size());
  for (int j = 0; j < 4; ++j) d.corner_degree[j] = d.degree[g.corner[j]];
  return d;
}

std::vector<Violation> validate(const DoubledTriangulation& d,
                                const AngleQuadruple& q) {
  std::vector<Violation> out;
  if (d.v - d.e + d.f != 2)
    out.push_back({"euler-sphere", -1,
                   "V-E+F = " + std::to_string(d.v - d.e + d.f)});
  for (int j = 0; j < 4; ++j) {
    long want = 4L * q[j] + 2;
    if (d.corner_degree[j] != want)
      out.push_back({"corner-degree", j,
                     std::to_string(d.corner_degree[j]) + " != " +
                         std::to_string(want)});
  }
  for (std::size_t v = 0; v < d.degree.size(); ++v) {
    if (d.on_circle[v]) {
      if (d.degree[v] % 2 != 0)
        out.push_back({"S2-on-circle-even", static_cast<int>(v),
                       "odd degree " + std::to_string(d.degree[v])});
    } else if (d.degree[v] != 4) {
      out.push_back({"S2-off-circle-degree", static_cast<int>(v),
                     "degree " + std::to_string(d.degree[v])});
    }
  }
  return out;
}

std::string canonical_code(const NetGraph& g, int anchor_corner) {
  std::vector<int> nxt = rotation_next(g);
  int c = g.corner[anchor_corner];
  int start = dart_from(g, g.boundary_edges[g.corner_pos[anchor_corner]], c);

  std::vector<int> num(g.vertices.size(), -1);
  int counter = 0;
  num[c] = counter++;
  std::queue<std::pair<int, int>> bfs;  // vertex, entry dart
  bfs.push({c, start});
  std::ostringstream code;
  code << role_char(g.vertices[c].role, anchor_corner);
  while (!bfs.empty()) {
    auto [v, entry] = bfs.front();
    bfs.pop();
    code << ';';
    int d = entry;
    do {
      int t = dart_target(g, d);
      code << label_char(g.edges[d >> 1].label, anchor_corner);
      if (num[t] == -1) {
        num[t] = counter++;
        bfs.push({t, d ^ 1});
        code << '*' << role_char(g.vertices[t].role, anchor_corner);
      } else {
        code << num[t];
      }
      code << ',';
      d = nxt[d];
      if (d < 0) throw std::logic_error("canonical_code: broken rotation");
    } while (d != entry);
  }
  return code.str();
}

bool equivalent(const NetGraph& g1, const NetGraph& g2) {
  return canonical_code(g1, 0) == canonical_code(g2, 0);
}

bool rotation_symmetric(const NetGraph& g) {
  return canonical_code(g, 0) == canonical_code(g, 2);
}

NetGraph mirror_marked(const NetGraph& g) {
  NetGraph m = g;
  m.angles = AngleQuadruple(g.angles[0], g.angles[3], g.angles[2], g.angles[1]);
  for (auto& f : m.faces) {
    f.v = {f.v[0], f.v[2], f.v[1]};
    f.e = {f.e[2], f.e[1], f.e[0]};
  }
  m.corner = {g.corner[0], g.corner[3], g.corner[2], g.corner[1]};
  m.vertices[m.corner[1]].role = VertexRole::Corner1;
  m.vertices[m.corner[3]].role = VertexRole::Corner3;
  std::size_t nb = g.boundary_vertices.size();
  m.boundary_vertices.assign(1, g.boundary_vertices[0]);
  for (std::size_t t = nb - 1; t >= 1; --t)
    m.boundary_vertices.push_back(g.boundary_vertices[t]);
  m.boundary_edges.clear();
  for (std::size_t t = 0; t < nb; ++t)
    m.boundary_edges.push_back(g.boundary_edges[nb - 1 - t]);
  for (int j = 1; j < 4; ++j)
    m.corner_pos[j] = static_cast<int>(nb) - g.corner_pos[4 - j];
  m.corner_pos[0] = 0;
  return m;
}

std::string to_dot(const NetGraph& g) {
  std::ostringstream os;
  os << "graph net {\n  overlap=false;\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const char* shape = "point";
    std::string label;
    switch (g.vertices[v].role) {
      case VertexRole::Corner0: shape = "box"; label = "a0"; break;
      case VertexRole::Corner1: shape = "box"; label = "a1"; break;
      case VertexRole::Corner2: shape = "box"; label = "a2"; break;
      case VertexRole::Corner3: shape = "box"; label = "a3"; break;
      case VertexRole::Boundary: shape = "circle"; break;
      case VertexRole::Interior: shape = "point"; break;
    }
    os << "  v" << v << " [shape=" << shape;
    if (!label.empty()) os << ", label=\"" << label << "\"";
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    const char* color = e.label == CircleLabel::C    ? "black"
                        : e.label == CircleLabel::Cp ? "red"
                                                     : "blue";
    os << "  v" << e.v0 << " -- v" << e.v1 << " [color=" << color << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sphrect
