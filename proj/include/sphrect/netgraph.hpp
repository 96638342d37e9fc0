#pragma once

#include <array>
#include <string>
#include <vector>

#include "sphrect/netparams.hpp"

namespace sphrect {

enum class CircleLabel { C, Cp, Cpp };
enum class VertexRole { Corner0, Corner1, Corner2, Corner3, Boundary, Interior };
enum class FaceType { Theta, OneMinusTheta };

const char* to_string(CircleLabel c);
const char* to_string(VertexRole r);

// Labeled triangulation of the quadrilateral realizing a NetParams tuple.
// Faces are stored as ccw triangles over explicit edge ids (the graph has
// parallel edges, so vertex pairs do not identify edges).
struct NetGraph {
  struct Vertex {
    VertexRole role = VertexRole::Interior;
  };
  struct Edge {
    int v0 = -1, v1 = -1;
    CircleLabel label = CircleLabel::C;
  };
  struct Face {
    std::array<int, 3> v{};        // ccw vertex cycle
    std::array<int, 3> e{};        // e[j] joins v[j] -> v[(j+1)%3]
    FaceType type = FaceType::Theta;
  };

  AngleQuadruple angles;           // quadruple this graph realizes
  NetParams params;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::array<int, 4> corner{-1, -1, -1, -1};
  // ccw boundary starting at a0: vertex i sits between edge i-1 and edge i
  std::vector<int> boundary_vertices;
  std::vector<int> boundary_edges;
  // indices into boundary_vertices where corners a0..a3 sit
  std::array<int, 4> corner_pos{0, 0, 0, 0};
};

// Assembles T_mu, T_nu, D_{2kappa} and the side digons into the unique net.
NetGraph realize(const NetParams& p);

struct Violation {
  std::string rule;
  int id = -1;
  std::string detail;
};

// Structural laws: face labels, interior degree 4, boundary degree 3,
// corner face counts 2A_j+1, face totals 2*sum(A), per-type counts, side
// label pattern, Euler characteristic. Empty list iff the graph is valid.
std::vector<Violation> validate(const NetGraph& g);

struct DoubledTriangulation {
  long v = 0, e = 0, f = 0;
  std::vector<long> degree;          // per doubled-vertex degree
  std::vector<bool> on_circle;       // vertex lies on the symmetry circle S
  std::array<long, 4> corner_degree{0, 0, 0, 0};
};

// Glue the net to its mirror copy along the boundary (symmetry circle S).
DoubledTriangulation double_graph(const NetGraph& g);

std::vector<Violation> validate(const DoubledTriangulation& d,
                                const AngleQuadruple& q);

// Canonical rotation-system code, anchored at the given corner, traversing
// ccw. Two realized nets are combinatorially equivalent (label-, marking-
// and orientation-preserving) iff their codes at anchor 0 are equal.
std::string canonical_code(const NetGraph& g, int anchor_corner = 0);

bool equivalent(const NetGraph& g1, const NetGraph& g2);

// Orientation-preserving self map exchanging a0<->a2, a1<->a3 exists.
bool rotation_symmetric(const NetGraph& g);

// The orientation-reversing marked partner (a second-type net): corner
// roles a1<->a3 swap, faces reversed, circle labels kept.
NetGraph mirror_marked(const NetGraph& g);

std::string to_dot(const NetGraph& g);

}  // namespace sphrect
