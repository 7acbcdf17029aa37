#include "tetra/coxeter.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace tetra::coxeter {

using lattice::kRank;
using lattice::kRootCount;

CoxeterDiagram::CoxeterDiagram(std::vector<Node> nodes, std::vector<std::vector<Edge>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (edges_.size() != nodes_.size()) throw DomainError("edge table size mismatch");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].size() != nodes_.size()) throw DomainError("edge table size mismatch");
    if (edges_[i][i] != Edge::None) throw DomainError("diagram has a loop");
    for (std::size_t j = 0; j < i; ++j)
      if (edges_[i][j] != edges_[j][i]) throw DomainError("edge table is not symmetric");
  }
}

void CoxeterDiagram::set_edge(int i, int j, Edge e) {
  if (i == j) throw DomainError("diagram has a loop");
  edges_.at(i).at(j) = e;
  edges_.at(j).at(i) = e;
}

RationalMatrix CoxeterDiagram::gram(std::span<const int> subset) const {
  RationalMatrix g(subset.size(), subset.size());
  for (std::size_t x = 0; x < subset.size(); ++x)
    for (std::size_t y = 0; y < subset.size(); ++y) {
      if (x == y) {
        g(x, y) = -2;
        continue;
      }
      switch (edge(subset[x], subset[y])) {
        case Edge::None: break;
        case Edge::Single: g(x, y) = 1; break;
        case Edge::Double: g(x, y) = 2; break;
      }
    }
  return g;
}

CoxeterDiagram CoxeterDiagram::induced(std::span<const int> subset) const {
  std::vector<Node> nodes;
  std::vector<std::vector<Edge>> edges(subset.size(), std::vector<Edge>(subset.size(), Edge::None));
  for (std::size_t x = 0; x < subset.size(); ++x) {
    nodes.push_back(node(subset[x]));
    for (std::size_t y = 0; y < subset.size(); ++y)
      if (x != y) edges[x][y] = edge(subset[x], subset[y]);
  }
  return CoxeterDiagram(std::move(nodes), std::move(edges));
}

CoxeterDiagram build_diagram() {
  std::vector<CoxeterDiagram::Node> nodes;
  std::vector<lattice::LatticeVector> roots;
  for (int i = 0; i < kRootCount; ++i) {
    nodes.push_back({lattice::root_label(i), i < kRank});
    roots.push_back(lattice::root(i));
  }
  std::vector<std::vector<Edge>> edges(kRootCount, std::vector<Edge>(kRootCount, Edge::None));
  for (int i = 0; i < kRootCount; ++i)
    for (int j = 0; j < kRootCount; ++j) {
      if (i == j) continue;
      const Rational p = lattice::inner_product(roots[i], roots[j]);
      if (p == 1) {
        edges[i][j] = Edge::Single;
      } else if (p == 2) {
        edges[i][j] = Edge::Double;
      } else if (p != 0) {
        throw InternalError("simple roots with inner product outside {0,1,2}");
      }
    }
  return CoxeterDiagram(std::move(nodes), std::move(edges));
}

namespace {

using Mask = std::uint32_t;

std::vector<int> mask_nodes(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (Mask{1} << i)) out.push_back(i);
  return out;
}

// Affine type from node count and degree sequence; the caller has already
// established that the component is affine.
std::string affine_type(const CoxeterDiagram& d, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 2) {
    if (d.edge(nodes[0], nodes[1]) == Edge::Double) return "A~1";
    throw InternalError("two-node affine component without a double edge");
  }
  int deg3 = 0, deg4 = 0, deg_other = 0;
  for (int v : nodes) {
    int deg = 0;
    for (int w : nodes)
      if (w != v && d.edge(v, w) != Edge::None) ++deg;
    if (deg == 3) ++deg3;
    else if (deg == 4) ++deg4;
    else if (deg > 4) ++deg_other;
  }
  if (deg_other) throw InternalError("affine component with a node of degree > 4");
  if (deg3 == 0 && deg4 == 0) return "A~" + std::to_string(n - 1);
  if (deg4 == 1 && deg3 == 0 && n == 5) return "D~4";
  if (deg3 == 2 && deg4 == 0) return "D~" + std::to_string(n - 1);
  if (deg3 == 1 && deg4 == 0 && n >= 7 && n <= 9) return "E~" + std::to_string(n - 1);
  throw InternalError("unrecognised affine component");
}

enum class Shape { Definite, Affine, Other };

Shape classify(const CoxeterDiagram& d, const std::vector<int>& nodes) {
  auto sig = lattice::signature(d.gram(nodes));
  const int n = static_cast<int>(nodes.size());
  if (sig.negative == n) return Shape::Definite;
  if (sig.positive == 0 && sig.zero == 1) return Shape::Affine;
  return Shape::Other;
}

std::vector<Mask> neighbor_masks(const CoxeterDiagram& d) {
  std::vector<Mask> nb(d.size(), 0);
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      if (d.edge(i, j) != Edge::None) nb[i] |= Mask{1} << j;
  return nb;
}

int component_rank(const AffineComponent& c) { return static_cast<int>(c.nodes.size()) - 1; }

// U-only components first, then mixed, then alpha-only; larger first.
int component_order_key(const CoxeterDiagram& d, const AffineComponent& c) {
  const int u = static_cast<int>(std::count_if(c.nodes.begin(), c.nodes.end(), [&](int v) { return d.node(v).is_u; }));
  const int n = static_cast<int>(c.nodes.size());
  const int cls = u == n ? 0 : (u == 0 ? 2 : 1);
  return cls * 100 + (100 - n);
}

lattice::LatticeVector null_vector_of(const CoxeterDiagram& d, const AffineComponent& c) {
  auto kernel = d.gram(c.nodes).null_space();
  if (kernel.size() != 1) throw InternalError("affine component without a one-dimensional kernel");
  auto k = kernel[0];
  // Scale to the primitive integer vector with positive entries.
  Integer den = 1;
  for (const auto& x : k) den = lcm(den, x.get_den());
  Integer g = 0;
  for (auto& x : k) {
    x *= den;
    g = gcd(g, x.get_num());
  }
  const bool negate = k[0] < 0;
  lattice::LatticeVector v;
  for (std::size_t i = 0; i < k.size(); ++i) {
    Rational coeff = k[i] / g;
    if (negate) coeff = -coeff;
    v += coeff * lattice::root(c.nodes[i]);
  }
  return v;
}

std::vector<std::array<int, 5>> all_perm5() {
  std::vector<std::array<int, 5>> out;
  std::array<int, 5> p = {0, 1, 2, 3, 4};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

int permute_root(int root, std::span<const int> perm5) {
  auto [a, b] = lattice::pair_at(root % kRank);
  const int idx = lattice::pair_index(perm5[a], perm5[b]);
  return root < kRank ? idx : idx + kRank;
}

std::vector<AffineComponent> affine_components(const CoxeterDiagram& d) {
  if (d.size() > 32) throw DomainError("diagram too large for the subset scan");
  const auto nb = neighbor_masks(d);
  std::vector<AffineComponent> found;
  std::unordered_set<Mask> seen;
  std::vector<Mask> frontier;
  for (int i = 0; i < d.size(); ++i) frontier.push_back(Mask{1} << i);
  // Grow connected negative-definite sets one node at a time; an affine set
  // cannot be enlarged to a connected semidefinite one, so growth stops there.
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask m : frontier) {
      Mask boundary = 0;
      for (int v : mask_nodes(m)) boundary |= nb[v];
      boundary &= ~m;
      for (int w : mask_nodes(boundary)) {
        const Mask grown = m | (Mask{1} << w);
        if (!seen.insert(grown).second) continue;
        auto nodes = mask_nodes(grown);
        switch (classify(d, nodes)) {
          case Shape::Definite: next.push_back(grown); break;
          case Shape::Affine: found.push_back({nodes, affine_type(d, nodes)}); break;
          case Shape::Other: break;
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.nodes < b.nodes; });
  return found;
}

std::vector<ParabolicClass> classify_cusps() {
  const auto d = build_diagram();
  const auto comps = affine_components(d);
  const auto nb = neighbor_masks(d);

  std::vector<Mask> comp_mask(comps.size(), 0), comp_closed(comps.size(), 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (int v : comps[i].nodes) {
      comp_mask[i] |= Mask{1} << v;
      comp_closed[i] |= (Mask{1} << v) | nb[v];
    }
  }

  // Unions of pairwise orthogonal affine components of total rank 8.
  std::vector<std::vector<std::size_t>> unions;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t start, Mask blocked, int rank) -> void {
    if (rank == 8) {
      unions.push_back(chosen);
      return;
    }
    for (std::size_t i = start; i < comps.size(); ++i) {
      if (comp_mask[i] & blocked) continue;
      const int r = component_rank(comps[i]);
      if (rank + r > 8) continue;
      chosen.push_back(i);
      self(self, i + 1, blocked | comp_closed[i], rank + r);
      chosen.pop_back();
    }
  };
  search(search, 0, 0, 0);

  const auto perms = all_perm5();
  std::map<Mask, std::vector<ParabolicClass>> by_orbit;
  for (const auto& u : unions) {
    ParabolicClass pc;
    Mask mask = 0;
    for (auto i : u) {
      pc.components.push_back(comps[i]);
      mask |= comp_mask[i];
    }
    std::stable_sort(pc.components.begin(), pc.components.end(), [&](const auto& a, const auto& b) {
      return component_order_key(d, a) < component_order_key(d, b);
    });
    pc.nodes = mask_nodes(mask);
    for (std::size_t i = 0; i < pc.components.size(); ++i) {
      if (i) pc.orbit_type += ' ';
      pc.orbit_type += pc.components[i].type;
    }
    pc.null_vector = null_vector_of(d, pc.components.front());

    Mask canonical = mask;
    for (const auto& p : perms) {
      Mask img = 0;
      for (int v : pc.nodes) img |= Mask{1} << permute_root(v, p);
      canonical = std::min(canonical, img);
    }
    by_orbit[canonical].push_back(std::move(pc));
  }

  std::vector<ParabolicClass> out;
  int orbit = 0;
  for (auto& [key, members] : by_orbit) {
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.nodes < b.nodes; });
    for (auto& m : members) {
      m.orbit_id = orbit;
      out.push_back(std::move(m));
    }
    ++orbit;
  }
  return out;
}

bool in_P(const lattice::LatticeVector& v) {
  for (int i = 0; i < kRootCount; ++i)
    if (lattice::inner_product(v, lattice::root(i)) < 0) return false;
  return true;
}

Parity parity_character(std::span<const int> reflection_roots, std::span<const int> perm5) {
  if (perm5.size() != 5) throw DomainError("permutation of {0..4} needs five images");
  std::array<bool, 5> hit{};
  for (int x : perm5) {
    if (x < 0 || x > 4 || hit[x]) throw DomainError("not a permutation of {0..4}");
    hit[x] = true;
  }
  Parity p;
  for (int r : reflection_roots) {
    if (r < 0 || r >= kRootCount) throw DomainError("unknown root index " + std::to_string(r));
    if (r < kRank) p.u ^= 1;
    else p.alpha ^= 1;
  }
  return p;
}

bool verify_parity_welldefined(const CoxeterDiagram& d) {
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d.edge(i, j) == Edge::Single && d.node(i).is_u != d.node(j).is_u) return false;
  return true;
}

}  // namespace tetra::coxeter
