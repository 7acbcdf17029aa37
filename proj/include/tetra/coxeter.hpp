#pragma once

// The Coxeter diagram of the polytope P cut out by the twenty simple roots,
// its cusps (maximal parabolic subdiagrams), and the parity character.

#include "tetra/lattice.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tetra::coxeter {

enum class Edge { None, Single, Double };

class CoxeterDiagram {
 public:
  struct Node {
    std::string label;
    bool is_u = true;  // U_ab node, otherwise alpha_ab
  };

  CoxeterDiagram(std::vector<Node> nodes, std::vector<std::vector<Edge>> edges);

  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_.at(i); }
  Edge edge(int i, int j) const { return edges_.at(i).at(j); }
  void set_edge(int i, int j, Edge e);

  // Gram matrix read back from the edges: -2 on the diagonal, 1 or 2 off it.
  RationalMatrix gram(std::span<const int> subset) const;
  CoxeterDiagram induced(std::span<const int> subset) const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::vector<Edge>> edges_;
};

// Node i is lattice::root(i); edge labels come from the inner products.
CoxeterDiagram build_diagram();

struct AffineComponent {
  std::vector<int> nodes;
  std::string type;  // "A~5", "E~6", "D~5", ...
};

struct ParabolicClass {
  std::vector<int> nodes;
  std::vector<AffineComponent> components;
  std::string orbit_type;  // component types joined by spaces, U-components first
  int orbit_id = 0;
  lattice::LatticeVector null_vector;
};

// Connected affine subdiagrams of the full diagram.
std::vector<AffineComponent> affine_components(const CoxeterDiagram& d);

// Every rank-8 parabolic subdiagram, sorted by orbit id then node set.
std::vector<ParabolicClass> classify_cusps();

// The S5 action on the twenty roots: relabels pair subscripts.
int permute_root(int root, std::span<const int> perm5);

bool in_P(const lattice::LatticeVector& v);

struct Parity {
  int u = 0;
  int alpha = 0;
  friend bool operator==(const Parity&, const Parity&) = default;
};

// Reflection in a U-root counts (1,0), in an alpha-root (0,1); the
// permutation part contributes nothing but must be a permutation of 0..4.
Parity parity_character(std::span<const int> reflection_roots, std::span<const int> perm5);

// Every single edge joins two nodes of the same kind.
bool verify_parity_welldefined(const CoxeterDiagram& d);

}  // namespace tetra::coxeter
