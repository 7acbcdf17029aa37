#include "tetra/verify.hpp"

#include "tetra/coxeter.hpp"
#include "tetra/errors.hpp"
#include "tetra/game.hpp"
#include "tetra/quaternion.hpp"
#include "tetra/tree.hpp"

#include <chrono>
#include <future>
#include <random>
#include <set>

namespace tetra::verify {

using lattice::LatticeVector;

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lattice", "coxeter", "group", "quaternion", "tree", "game"};
  return names;
}

namespace {

class Battery {
 public:
  template <typename F>
  void run(const std::string& name, F&& f) {
    Check c{name, false, ""};
    try {
      c.passed = f(c.details);
    } catch (const std::exception& e) {
      c.passed = false;
      c.details = std::string("exception: ") + e.what();
    }
    checks.push_back(std::move(c));
  }
  std::vector<Check> checks;
};

int shared(int i, int j) {
  auto [a, b] = lattice::pair_at(i);
  auto [c, d] = lattice::pair_at(j);
  return (a == c || a == d) + (b == c || b == d);
}

int closed_form_product(int x, int y) {
  const int i = x % lattice::kRank, j = y % lattice::kRank;
  const bool xu = x < lattice::kRank, yu = y < lattice::kRank;
  if (xu && yu) return i == j ? -2 : (shared(i, j) == 0 ? 1 : 0);
  if (!xu && !yu) return i == j ? -2 : (shared(i, j) == 1 ? 1 : 0);
  return i == j ? 2 : 0;
}

std::vector<Check> lattice_suite() {
  Battery b;
  b.run("gram-table-400-entries", [](std::string& d) {
    int bad = 0;
    for (int x = 0; x < lattice::kRootCount; ++x)
      for (int y = 0; y < lattice::kRootCount; ++y)
        bad += lattice::inner_product(lattice::root(x), lattice::root(y)) != closed_form_product(x, y);
    d = "400 entries, " + std::to_string(bad) + " mismatches";
    return bad == 0;
  });
  b.run("integral-basis-even-unimodular", [](std::string& d) {
    const auto& basis = lattice::integral_basis();
    auto g = lattice::gram_matrix(basis);
    bool even = true;
    for (int i = 0; i < lattice::kRank; ++i) {
      for (int j = 0; j < lattice::kRank; ++j)
        if (!is_integer(g(i, j))) even = false;
      if (is_integer(g(i, i)) && g(i, i).get_num() % 2 != 0) even = false;
    }
    auto det = g.determinant();
    auto sig = lattice::signature(g);
    d = "det " + to_string(det) + ", signature (" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) + ")";
    return even && det == -1 && sig == lattice::Signature{1, 9, 0};
  });
  b.run("delta-battery", [](std::string& d) {
    auto del = lattice::delta();
    bool ok = lattice::inner_product(del, del) == 10;
    for (int i = 0; i < lattice::kRank; ++i) {
      ok = ok && lattice::inner_product(del, lattice::root(i)) == 1;
      ok = ok && lattice::inner_product(del, lattice::root(i + lattice::kRank)) == 2;
    }
    d = "Delta^2 = " + to_string(lattice::inner_product(del, del));
    return ok;
  });
  b.run("nu-isotropic", [](std::string& d) {
    int n = 0;
    for (int a = 0; a < 5; ++a)
      for (int c = 0; c < 5; ++c)
        if (a != c) n += lattice::inner_product(lattice::nu(a, c), lattice::nu(a, c)) == 0 && lattice::in_lattice(lattice::nu(a, c));
    d = std::to_string(n) + " of 20 null lattice vectors";
    return n == 20;
  });
  b.run("root-reflections-preserve-lattice", [](std::string& d) {
    int n = 0;
    for (int r = 0; r < lattice::kRootCount; ++r) {
      auto m = lattice::LatticeIsometry::reflection(lattice::root(r));
      n += m.preserves_form() && m.preserves_lattice() && m * m == lattice::LatticeIsometry::identity();
    }
    d = std::to_string(n) + " of 20";
    return n == 20;
  });
  b.run("cusp-identity-half-nu", [](std::string&) {
    return lattice::alpha(0, 1) + lattice::alpha(0, 2) + lattice::alpha(0, 3) == Rational(1, 2) * lattice::nu(4, 0);
  });
  b.run("facet-sum-identity", [](std::string& d) {
    const auto params = group::FamilyParams::family(Rational(1, 16));
    LatticeVector sum;
    const int triples[3][3] = {{1, 1, 2}, {2, 2, 3}, {3, 3, 1}};
    for (const auto& t : triples)
      sum += group::generator_matrix(4, t[0], params).apply(lattice::alpha(t[1], t[2]));
    d = "g41(a12) + g42(a23) + g43(a31) = nu(0,4)";
    return sum == lattice::nu(0, 4);
  });
  b.run("g41-on-nu01", [](std::string& d) {
    const auto params = group::FamilyParams::family(Rational(1, 16));
    auto img = group::generator_matrix(4, 1, params).apply(lattice::nu(0, 1));
    std::string which = "other";
    for (int a = 0; a < 5; ++a)
      for (int c = 0; c < 5; ++c)
        if (a != c && img == lattice::nu(a, c)) which = "nu(" + std::to_string(a) + "," + std::to_string(c) + ")";
    d = "g41(nu(0,1)) = " + which;
    return which != "other";
  });
  return b.checks;
}

std::vector<Check> coxeter_suite() {
  Battery b;
  const auto cusps = coxeter::classify_cusps();
  b.run("petersen-pattern", [](std::string& d) {
    auto g = coxeter::build_diagram();
    int u_edges = 0, a_edges = 0, doubles = 0, mixed = 0;
    for (int i = 0; i < 20; ++i)
      for (int j = i + 1; j < 20; ++j) {
        auto e = g.edge(i, j);
        if (e == coxeter::Edge::Double) ++doubles;
        else if (e == coxeter::Edge::Single) (i < 10 && j < 10 ? u_edges : i >= 10 ? a_edges : mixed)++;
      }
    d = std::to_string(u_edges) + " U edges, " + std::to_string(a_edges) + " alpha edges, " + std::to_string(doubles) +
        " double edges";
    return u_edges == 15 && a_edges == 30 && doubles == 10 && mixed == 0;
  });
  b.run("cusp-orbit-types", [&](std::string& d) {
    std::set<std::string> types;
    for (const auto& c : cusps) types.insert(c.orbit_type);
    for (const auto& t : types) d += (d.empty() ? "" : ", ") + t;
    return types == std::set<std::string>{"A~5 A~1 A~2", "E~6 A~2", "D~5 A~3", "A~4 A~4"};
  });
  b.run("e6-cusp-count", [&](std::string& d) {
    auto n = std::count_if(cusps.begin(), cusps.end(), [](const auto& c) { return c.orbit_type == "E~6 A~2"; });
    d = std::to_string(n) + " cusps of type E~6 A~2, " + std::to_string(cusps.size()) + " in all";
    return n == 20;
  });
  b.run("nu-orthogonal-to-e6-cusps", [&](std::string& d) {
    int matched = 0;
    for (int a = 0; a < 5; ++a)
      for (int c = 0; c < 5; ++c) {
        if (a == c) continue;
        auto n = lattice::nu(a, c);
        for (const auto& cu : cusps)
          if (cu.orbit_type == "E~6 A~2" &&
              std::all_of(cu.nodes.begin(), cu.nodes.end(),
                          [&](int v) { return lattice::inner_product(n, lattice::root(v)) == 0; })) {
            ++matched;
            break;
          }
      }
    d = std::to_string(matched) + " of 20";
    return matched == 20;
  });
  b.run("cusps-rank-8-semidefinite", [&](std::string&) {
    auto g = coxeter::build_diagram();
    for (const auto& c : cusps) {
      auto sig = lattice::signature(g.gram(c.nodes));
      if (sig.positive != 0 || static_cast<int>(c.nodes.size()) - sig.zero != 8) return false;
      if (lattice::inner_product(c.null_vector, c.null_vector) != 0 || !coxeter::in_P(c.null_vector)) return false;
    }
    return true;
  });
  b.run("parity-well-defined", [](std::string&) { return coxeter::verify_parity_welldefined(coxeter::build_diagram()); });
  return b.checks;
}

std::vector<Check> group_suite(const Options& o) {
  Battery b;
  const auto& p = o.params;
  b.run("generators-involutive-isometries", [&](std::string&) {
    for (int x = 0; x < 5; ++x)
      for (int y = x + 1; y < 5; ++y) {
        auto g = group::generator_matrix(x, y, p);
        if (!(g * g == lattice::LatticeIsometry::identity() && g.preserves_form() && g.preserves_lattice())) return false;
      }
    return true;
  });
  const group::FamilyParams distinct = p.all_distinct() ? p : group::FamilyParams({1, 2, 3, 4, 5});
  b.run("shimada-relations", [&](std::string& d) {
    d = "lambda = (";
    for (int i = 0; i < 5; ++i) d += (i ? "," : "") + to_string(distinct[i]);
    d += ")";
    return group::verify_shimada_relations(distinct);
  });
  if (!p.is_family_shape()) {
    b.run("family-shape", [](std::string& d) {
      d = "params not of the form (c,c,c,c,d); word, chamber and nef checks not run";
      return true;
    });
    return b.checks;
  }

  b.run("homomorphism-to-length-4", [&](std::string& d) {
    auto r = group::verify_homomorphism(p, 4);
    d = r.detail;
    return r.ok;
  });
  b.run("injectivity-to-length-6", [&](std::string& d) {
    auto r = group::verify_injectivity(p, 6);
    d = r.detail;
    return r.ok && r.checked == 34968;
  });
  b.run("parity-invariant-to-length-6", [&](std::string& d) {
    auto r = group::verify_parity_invariant(p, 6);
    d = r.detail;
    return r.ok;
  });
  b.run("chamber-reduction-scrambles", [&](std::string& d) {
    std::mt19937_64 rng(2024);
    const auto del = lattice::delta();
    int solved = 0;
    for (int t = 0; t < 100; ++t) {
      auto w = game::scramble(static_cast<int>(rng() % 9), rng()).word;
      auto r = group::reduce_to_chamber(group::word_to_isometry(w, p).apply(del), p);
      solved += r.vector == del && r.word == group::word_inverse(w);
    }
    d = std::to_string(solved) + " of 100";
    return solved == 100;
  });
  b.run("nef-examples", [&](std::string&) {
    bool ok = group::is_nef(lattice::delta(), p) && !group::is_nef(lattice::U(0, 1), p);
    for (int x = 0; x < 5; ++x)
      for (int y = x + 1; y < 5; ++y) ok = ok && group::is_nef(lattice::f(x, y), p);
    return ok;
  });
  b.run("new-nodes", [&](std::string& d) {
    auto n = group::new_nodes(p[4] / p[0]);
    d = std::to_string(n.size()) + " new nodes";
    return group::new_nodes(Rational(1, 16)).size() == 1 && group::new_nodes(Rational(1, 4)).size() == 4 &&
           group::new_nodes(2).empty();
  });
  return b.checks;
}

std::vector<Check> quaternion_suite() {
  using quat::Quaternion;
  Battery b;
  b.run("norm-of-body-diagonal", [](std::string&) { return Quaternion{0, 1, 1, 1}.norm() == 3; });
  b.run("edge-quotient-identity", [](std::string&) {
    const Rational h(1, 2);
    return Quaternion{0, 0, 1, -1} * Quaternion{0, 1, -1, 0}.inverse() == Quaternion{-h, h, h, h};
  });
  b.run("edge-rotations-form-S4", [](std::string& d) {
    std::vector<quat::Rotation3> edges;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) edges.push_back(quat::conjugation_rotation(quat::gbar(x, y)));
    auto g = quat::closure(edges, 100);
    std::set<group::Perm4> perms;
    for (const auto& r : g)
      if (auto p = quat::diagonal_permutation(r)) perms.insert(*p);
    d = std::to_string(g.size()) + " rotations, " + std::to_string(perms.size()) + " permutations of the diagonals";
    return g.size() == 24 && perms.size() == 24;
  });
  b.run("ten-generators-not-finite", [](std::string&) {
    std::vector<quat::Rotation3> ten;
    for (int x = 0; x < 5; ++x)
      for (int y = x + 1; y < 5; ++y) ten.push_back(quat::conjugation_rotation(quat::gbar(x, y)));
    try {
      quat::closure(ten, 10000);
    } catch (const CapExceeded&) {
      return true;
    }
    return false;
  });
  b.run("binary-tetrahedral-group", [](std::string&) {
    auto a = quat::binary_tetrahedral();
    for (const auto& x : a) {
      if (x.norm() != 1) return false;
      for (const auto& y : a)
        if (std::find(a.begin(), a.end(), x * y) == a.end()) return false;
    }
    return a.size() == 24;
  });
  b.run("conjugation-homomorphism", [](std::string&) {
    auto a = quat::binary_tetrahedral();
    for (const auto& x : a)
      for (const auto& y : a)
        if (quat::conjugation_rotation(x * y) != quat::conjugation_rotation(x) * quat::conjugation_rotation(y)) return false;
    return true;
  });
  b.run("equivariance", [](std::string&) { return quat::verify_equivariance(); });
  b.run("centralizer", [](std::string&) { return quat::verify_centralizer(); });
  b.run("facet-reflections", [](std::string&) {
    for (int a = 0; a < 4; ++a) {
      auto f = quat::facet_reflection(a);
      if (f.determinant() != -1 || f * f != quat::Rotation3()) return false;
    }
    return true;
  });
  b.run("sl2-f3-bijection", [](std::string&) { return quat::sl2f3_check(); });
  return b.checks;
}

std::vector<Check> tree_suite(const Options& o) {
  Battery b;
  const int n = o.precision;
  const tree::TreeVertex base{};
  b.run("ball-sizes", [&](std::string& d) {
    auto bl = tree::ball(o.radius, n);
    std::size_t expect = 1, layer = 4;
    bool ok = true;
    for (int r = 0; r <= o.radius; ++r) {
      d += (r ? "," : "") + std::to_string(bl.sizes_by_depth[r]);
      ok = ok && bl.sizes_by_depth[r] == expect;
      expect += layer;
      layer *= 3;
    }
    d = "ball sizes " + d;
    return ok;
  });
  b.run("simple-transitivity", [&](std::string& d) {
    auto r = tree::verify_simple_transitivity(o.radius, n);
    d = std::to_string(r.total) + " words";
    return r.bijection && r.distance_matches_length && r.bipartition;
  });
  b.run("binary-tetrahedral-fixes-only-base", [&](std::string&) {
    std::set<tree::TreeVertex> common;
    bool first = true;
    for (const auto& x : quat::binary_tetrahedral()) {
      auto f = tree::fixed_vertices(tree::split_quaternion(x, n), 2, n);
      std::set<tree::TreeVertex> fs(f.begin(), f.end());
      if (first) common = fs;
      std::set<tree::TreeVertex> keep;
      for (const auto& v : common)
        if (fs.count(v)) keep.insert(v);
      common = keep;
      first = false;
    }
    return common == std::set<tree::TreeVertex>{base};
  });
  b.run("order-3-fixed-edge", [&](std::string& d) {
    int count = 0;
    for (const auto& x : quat::binary_tetrahedral()) {
      auto r = quat::conjugation_rotation(x);
      if (r == quat::Rotation3() || r * r * r != quat::Rotation3()) continue;
      ++count;
      auto f = tree::fixed_vertices(tree::split_quaternion(x, n), 4, n);
      if (f.size() != 2 || f[0] != base || f[1].distance_from_base() != 1) return false;
    }
    d = std::to_string(count) + " elements";
    return count == 16;
  });
  b.run("body-diagonals-swap-classes", [&](std::string&) {
    for (int a = 0; a < 4; ++a) {
      auto g = tree::split_quaternion(quat::gbar(a, 4), n);
      if (!tree::fixed_vertices(g, 3, n).empty()) return false;
      if (g.determinant().valuation() != 1) return false;
      for (const auto& v : tree::ball(2, n).vertices)
        if (tree::act(g, v, n).parity() == v.parity()) return false;
    }
    return true;
  });
  b.run("base-stabilizer-24", [&](std::string& d) {
    auto s = tree::stabilizer_order(2, n);
    d = std::to_string(s.order) + " of " + std::to_string(s.enumerated) + " enumerated elements";
    return s.order == 24 && s.unit_determinants && s.no_length_one;
  });
  b.run("sl2-z9-rigidity", [](std::string& d) {
    auto r = tree::verify_distance2_rigidity();
    d = std::to_string(r.order3_count) + " order-3 elements in the stabilizer of order " +
        std::to_string(r.stabilizer_size);
    return r.ok();
  });
  b.run("precision-monotonicity", [&](std::string&) {
    return tree::ball(o.radius, n).vertices == tree::ball(o.radius, n + 8).vertices;
  });
  return b.checks;
}

std::vector<Check> game_suite() {
  Battery b;
  b.run("scrambles-solved", [](std::string& d) {
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      int len = static_cast<int>(seed % 21);
      auto s = game::scramble(len, seed);
      auto sol = game::solve(s);
      std::vector<game::Move> expect;
      for (auto it = s.word.free_part.rbegin(); it != s.word.free_part.rend(); ++it)
        expect.push_back(game::Move::facet_move(*it));
      ok += sol == expect && static_cast<int>(sol.size()) == len && game::apply_moves(s, sol).pose == game::Pose::identity();
    }
    d = std::to_string(ok) + " of 500";
    return ok == 500;
  });
  b.run("pose-table-collision-free", [](std::string& d) {
    game::PoseTable t(5, true);
    d = std::to_string(t.size()) + " poses";
    return t.collision_free() && t.size() == 11640;
  });
  b.run("linear-part-injective", [](std::string& d) {
    std::set<quat::Mat3> seen;
    for (const auto& w : group::normal_forms(6)) seen.insert(game::pose_of_word(w).linear);
    d = std::to_string(seen.size()) + " distinct linear parts";
    return seen.size() == 34968;
  });
  b.run("facet-reflections", [](std::string&) {
    for (int a = 0; a < 4; ++a) {
      auto f = game::facet_pose(a);
      auto v = f.vertices();
      for (int c = 0; c < 4; ++c)
        if (c != a && v[c] != quat::tetrahedron_vertices()[c]) return false;
      if (f.determinant() != -1) return false;
    }
    return true;
  });
  return b.checks;
}

std::vector<Check> run_checks(const std::string& suite, const Options& o) {
  if (suite == "lattice") return lattice_suite();
  if (suite == "coxeter") return coxeter_suite();
  if (suite == "group") return group_suite(o);
  if (suite == "quaternion") return quaternion_suite();
  if (suite == "tree") return tree_suite(o);
  if (suite == "game") return game_suite();
  throw DomainError("unknown suite: " + suite);
}

}  // namespace

Report run_suite(const std::string& suite, const Options& options) {
  if (options.radius < 0 || options.radius > 8) throw DomainError("radius must be in 0..8");
  if (options.precision < 8) throw DomainError("precision must be at least 8");
  const auto start = std::chrono::steady_clock::now();
  Report r{suite, {}, 0};
  if (suite == "all") {
    std::vector<std::future<std::vector<Check>>> jobs;
    for (const auto& name : suite_names())
      jobs.push_back(std::async(std::launch::async, [name, &options] { return run_checks(name, options); }));
    for (std::size_t i = 0; i < jobs.size(); ++i)
      for (auto& c : jobs[i].get()) {
        c.name = suite_names()[i] + "/" + c.name;
        r.checks.push_back(std::move(c));
      }
  } else {
    r.checks = run_checks(suite, options);
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void to_json(Json& j, const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"details", c.details}});
  j = Json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}, {"runtime_ms", static_cast<std::int64_t>(r.runtime_ms)}};
}

}  // namespace tetra::verify
