// One PASS/FAIL line per acceptance criterion. Every library result is
// compared with an oracle computed here from closed forms or by brute force.

#include "tetra/coxeter.hpp"
#include "tetra/game.hpp"
#include "tetra/group.hpp"
#include "tetra/lattice.hpp"
#include "tetra/quaternion.hpp"
#include "tetra/tree.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace tetra;
namespace lat = tetra::lattice;

namespace {

// ---------------------------------------------------------------- oracles

using Vec = std::array<Rational, 10>;
using Mat = std::vector<Rational>;  // 10x10 row-major, columns are images

constexpr std::array<std::pair<int, int>, 10> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

int pidx(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int i = 0; i < 10; ++i)
    if (kPairs[i] == std::pair{a, b}) return i;
  throw std::logic_error("bad pair");
}

int shared(int i, int j) {
  auto [a, b] = kPairs[i];
  auto [c, d] = kPairs[j];
  return (a == c || a == d) + (b == c || b == d);
}

// U_ab . U_cd on the U-basis.
int ugram(int i, int j) { return i == j ? -2 : (shared(i, j) == 0 ? 1 : 0); }

Rational dot(const Vec& v, const Vec& w) {
  Rational s = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      if (int g = ugram(i, j)) s += v[i] * w[j] * g;
  return s;
}

Vec operator+(Vec a, const Vec& b) {
  for (int i = 0; i < 10; ++i) a[i] += b[i];
  return a;
}
Vec operator*(const Rational& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}

Vec Uo(int a, int b) {
  Vec v{};
  v[pidx(a, b)] = 1;
  return v;
}
Vec fo(int a, int b) {
  Vec v{};
  for (int i = 0; i < 10; ++i)
    if (shared(i, pidx(a, b)) == 1) v[i] = Rational(1, 2);
  return v;
}
Vec alphao(int a, int b) { return fo(a, b) + Rational(-1) * Uo(a, b); }
Vec deltao() {
  Vec v;
  v.fill(1);
  return v;
}
// 3U_ba + 2(U over pairs avoiding a,b) + U_ac for the other three c.
Vec nuo(int a, int b) {
  Vec v{};
  v[pidx(a, b)] = 3;
  for (int c = 0; c < 5; ++c) {
    if (c == a || c == b) continue;
    v[pidx(a, c)] = 1;
    for (int d = c + 1; d < 5; ++d)
      if (d != a && d != b) v[pidx(c, d)] = 2;
  }
  return v;
}
Vec rooto(int r) {
  auto [a, b] = kPairs[r % 10];
  return r < 10 ? Uo(a, b) : alphao(a, b);
}
Vec of(const lat::LatticeVector& v) { return v.coords(); }

// Transposition (ab) on subscripts, then optionally the reflection in alpha_ab.
Vec gen_apply(int a, int b, bool reflect, const Vec& v) {
  Vec w{};
  for (int i = 0; i < 10; ++i) {
    auto [p, q] = kPairs[i];
    auto t = [&](int x) { return x == a ? b : x == b ? a : x; };
    w[pidx(t(p), t(q))] += v[i];
  }
  if (reflect) {
    Vec al = alphao(a, b);
    w = w + dot(w, al) * al;
  }
  return w;
}

Mat mat_of(const std::function<Vec(const Vec&)>& f) {
  Mat m(100);
  for (int c = 0; c < 10; ++c) {
    Vec e{};
    e[c] = 1;
    Vec img = f(e);
    for (int r = 0; r < 10; ++r) m[r * 10 + c] = img[r];
  }
  return m;
}
Mat mul(const Mat& x, const Mat& y) {
  Mat z(100);
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < 10; ++k) {
      if (x[i * 10 + k] == 0) continue;
      for (int j = 0; j < 10; ++j) z[i * 10 + j] += x[i * 10 + k] * y[k * 10 + j];
    }
  return z;
}
Mat ident() {
  Mat m(100);
  for (int i = 0; i < 10; ++i) m[i * 11] = 1;
  return m;
}
Vec mat_apply(const Mat& m, const Vec& v) {
  Vec w{};
  for (int r = 0; r < 10; ++r)
    for (int c = 0; c < 10; ++c) w[r] += m[r * 10 + c] * v[c];
  return w;
}
Mat perm_mat(const std::array<int, 5>& s) {
  Mat m(100);
  for (int i = 0; i < 10; ++i) m[pidx(s[kPairs[i].first], s[kPairs[i].second]) * 10 + i] = 1;
  return m;
}
bool same(const Mat& m, const lat::LatticeIsometry& g) {
  for (int r = 0; r < 10; ++r)
    for (int c = 0; c < 10; ++c)
      if (m[r * 10 + c] != g(r, c)) return false;
  return true;
}
std::string key(const Mat& m) {
  std::string k;
  for (const auto& x : m) k += x.get_str() + ",";
  return k;
}

// The family generators x_a -> g_a4 (a <= 3) with lambda_a != lambda_4.
const std::array<Mat, 4>& family_gens() {
  static const std::array<Mat, 4> g = [] {
    std::array<Mat, 4> out;
    for (int a = 0; a < 4; ++a) out[a] = mat_of([a](const Vec& v) { return gen_apply(a, 4, true, v); });
    return out;
  }();
  return g;
}
Mat word_mat(const group::GroupWord& w) {
  Mat m = ident();
  for (int a : w.free_part) m = mul(m, family_gens()[a]);
  return mul(m, perm_mat({w.perm[0], w.perm[1], w.perm[2], w.perm[3], 4}));
}

// Exact integer determinant by fraction-free elimination.
__int128 bareiss(std::vector<std::vector<__int128>> a) {
  const int n = static_cast<int>(a.size());
  __int128 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Characteristic polynomial coefficients c_n..c_0 (c_n = 1), Faddeev-LeVerrier.
std::vector<Rational> charpoly(const std::vector<std::vector<Rational>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n)), am(n, std::vector<Rational>(n));
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        am[i][j] = s;
      }
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / k;
    m = am;
  }
  return c;
}

// Positive and negative eigenvalue counts of a real symmetric matrix from
// Descartes' rule, which is exact for real-rooted polynomials.
std::pair<int, int> descartes_signature(const std::vector<std::vector<Rational>>& a) {
  auto c = charpoly(a);
  auto changes = [](const std::vector<Rational>& p) {
    int s = 0, last = 0;
    for (const auto& x : p) {
      int sg = sgn(x);
      if (sg == 0) continue;
      if (last && sg != last) ++s;
      last = sg;
    }
    return s;
  };
  std::vector<Rational> neg = c;
  for (size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  return {changes(c), changes(neg)};
}

// Row-style Hermite reduction over Z; returns a basis of the row module.
std::vector<std::vector<Integer>> integer_row_basis(std::vector<std::vector<Integer>> rows) {
  const size_t n = rows.empty() ? 0 : rows[0].size();
  std::vector<std::vector<Integer>> basis;
  for (size_t col = 0; col < n; ++col) {
    while (true) {
      int piv = -1;
      for (size_t r = 0; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (piv < 0 || abs(rows[r][col]) < abs(rows[piv][col]))) piv = static_cast<int>(r);
      if (piv < 0) break;
      bool done = true;
      for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(r) == piv || rows[r][col] == 0) continue;
        Integer q = rows[r][col] / rows[piv][col];
        for (size_t c = 0; c < n; ++c) rows[r][c] -= q * rows[piv][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        basis.push_back(rows[piv]);
        rows.erase(rows.begin() + piv);
        break;
      }
    }
  }
  return basis;
}

std::vector<std::array<int, 5>> s5() {
  std::vector<std::array<int, 5>> out;
  std::array<int, 5> p = {0, 1, 2, 3, 4};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------- harness

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& name, const std::function<void(Outcome&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " exception: " << e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (n < 10 ? " " : "") << n << ". " << name << " [" << ms
            << " ms] " << o.detail.str() << std::endl;
}

// ---------------------------------------------------------------- criteria

void gram_battery(Outcome& o) {
  int mismatches = 0;
  for (int x = 0; x < 20; ++x) {
    if (of(lat::root(x)) != rooto(x)) o.expect(false, "root " + std::to_string(x) + " differs from its definition");
    for (int y = 0; y < 20; ++y) {
      const int i = x % 10, j = y % 10;
      int closed;
      if (x < 10 && y < 10) closed = ugram(i, j);
      else if (x >= 10 && y >= 10) closed = i == j ? -2 : (shared(i, j) == 1 ? 1 : 0);
      else closed = i == j ? 2 : 0;
      mismatches += lat::inner_product(lat::root(x), lat::root(y)) != closed;
      mismatches += dot(rooto(x), rooto(y)) != closed;
    }
  }
  o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.detail << "400 entries, library and definitions agree with the closed forms";
}

void lattice_structure(Outcome& o) {
  // Independent basis of the Z-span of all U_ab and f_ab (coordinates doubled).
  std::vector<std::vector<Integer>> gens;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (const Vec& v : {Uo(a, b), fo(a, b)}) {
        std::vector<Integer> row;
        for (const auto& q : v) row.push_back(Integer(q * 2));
        gens.push_back(row);
      }
  auto basis = integer_row_basis(gens);
  o.expect(basis.size() == 10, "rank " + std::to_string(basis.size()));
  std::vector<Vec> bv;
  for (const auto& row : basis) {
    Vec v;
    for (int i = 0; i < 10; ++i) v[i] = Rational(row[i], 2);
    for (auto& q : v) q.canonicalize();
    bv.push_back(v);
  }
  auto gram_of = [](const std::vector<Vec>& vs) {
    std::vector<std::vector<Rational>> g(vs.size(), std::vector<Rational>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = 0; j < vs.size(); ++j) g[i][j] = dot(vs[i], vs[j]);
    return g;
  };
  auto check_gram = [&](const std::vector<std::vector<Rational>>& g, const std::string& who) {
    std::vector<std::vector<__int128>> gi(10, std::vector<__int128>(10));
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) {
        o.expect(g[i][j].get_den() == 1, who + " Gram not integral");
        gi[i][j] = g[i][j].get_num().get_si();
      }
    for (int i = 0; i < 10; ++i) o.expect(gi[i][i] % 2 == 0, who + " Gram not even");
    o.expect(bareiss(gi) == -1, who + " determinant is not -1");
    auto [pos, neg] = descartes_signature(g);
    o.expect(pos == 1 && neg == 9, who + " signature (" + std::to_string(pos) + "," + std::to_string(neg) + ")");
  };
  check_gram(gram_of(bv), "oracle basis");
  std::vector<Vec> lib;
  for (const auto& v : lat::integral_basis()) lib.push_back(of(v));
  check_gram(gram_of(lib), "library basis");
  // Same module: each basis has integral coordinates in the other (Gram inverse).
  auto coords_integral = [&](const std::vector<Vec>& b, const Vec& v) {
    auto c = lat::lattice_coordinates(lat::LatticeVector(v));
    if (!c) return false;
    Vec back{};
    for (int i = 0; i < 10; ++i) back = back + Rational((*c)[i]) * b[i];
    return back == v;
  };
  for (const auto& v : bv) o.expect(coords_integral(lib, v), "oracle basis vector outside the library lattice");
  auto lib_sig = lat::signature(lat::gram_matrix(lat::integral_basis()));
  o.expect(lib_sig == lat::Signature{1, 9, 0}, "library signature");
  o.detail << "even, integral, det -1, signature (1,9); bases span the same module";
}

void delta_battery(Outcome& o) {
  o.expect(lat::inner_product(lat::delta(), lat::delta()) == 10, "Delta^2");
  o.expect(of(lat::delta()) == deltao(), "Delta differs from the sum of the U_ab");
  o.expect(dot(deltao(), deltao()) == 10, "oracle Delta^2");
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      o.expect(lat::inner_product(lat::delta(), lat::U(a, b)) == 1 && dot(deltao(), Uo(a, b)) == 1, "Delta.U");
      o.expect(lat::inner_product(lat::delta(), lat::alpha(a, b)) == 2 && dot(deltao(), alphao(a, b)) == 2,
               "Delta.alpha");
    }
  o.detail << "Delta^2 = 10, Delta.U = 1 and Delta.alpha = 2 for all ten pairs";
}

// Affine type from the shape of a connected affine subdiagram.
std::string affine_type(uint32_t mask, const std::array<std::array<int, 20>, 20>& g) {
  std::vector<int> nodes;
  for (int i = 0; i < 20; ++i)
    if (mask >> i & 1) nodes.push_back(i);
  const int n = static_cast<int>(nodes.size());
  if (n == 2) return "A~1";
  std::map<int, int> deg;
  for (int x : nodes)
    for (int y : nodes)
      if (x != y && g[x][y]) ++deg[x];
  std::vector<int> branch;
  for (auto [x, d] : deg) {
    if (d == 4) return "D~4";
    if (d == 3) branch.push_back(x);
  }
  if (branch.empty()) return "A~" + std::to_string(n - 1);
  if (branch.size() == 2) return "D~" + std::to_string(n - 1);
  std::vector<int> arms;
  for (int y : nodes) {
    if (!g[branch[0]][y] || y == branch[0]) continue;
    int len = 1, prev = branch[0], cur = y;
    while (true) {
      int next = -1;
      for (int z : nodes)
        if (z != cur && z != prev && g[cur][z]) next = z;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D~" + std::to_string(n - 1);
  if (arms == std::vector<int>{2, 2, 2}) return "E~6";
  if (arms == std::vector<int>{1, 3, 3}) return "E~7";
  if (arms == std::vector<int>{1, 2, 5}) return "E~8";
  return "?";
}

std::string sorted_types(std::vector<std::string> t) {
  std::sort(t.begin(), t.end());
  std::string s;
  for (const auto& x : t) s += (s.empty() ? "" : " ") + x;
  return s;
}

void cusp_classification(Outcome& o) {
  std::array<std::array<int, 20>, 20> g{};
  for (int x = 0; x < 20; ++x)
    for (int y = 0; y < 20; ++y) g[x][y] = Integer(dot(rooto(x), rooto(y))).get_si();
  std::array<uint32_t, 20> nbr{};
  for (int x = 0; x < 20; ++x)
    for (int y = 0; y < 20; ++y)
      if (x != y && g[x][y]) nbr[x] |= 1u << y;
  auto det_neg = [&](uint32_t mask) {
    std::vector<int> nodes;
    for (int i = 0; i < 20; ++i)
      if (mask >> i & 1) nodes.push_back(i);
    std::vector<std::vector<__int128>> m(nodes.size(), std::vector<__int128>(nodes.size()));
    for (size_t i = 0; i < nodes.size(); ++i)
      for (size_t j = 0; j < nodes.size(); ++j) m[i][j] = -g[nodes[i]][nodes[j]];
    return bareiss(m);
  };

  // Connected subdiagrams grown one node at a time from definite ones.
  std::vector<uint32_t> affine;
  std::set<uint32_t> seen, level;
  for (int i = 0; i < 20; ++i) level.insert(1u << i);
  while (!level.empty()) {
    std::set<uint32_t> next;
    for (uint32_t m : level) {
      uint32_t reach = 0;
      for (int i = 0; i < 20; ++i)
        if (m >> i & 1) reach |= nbr[i];
      reach &= ~m;
      for (int i = 0; i < 20; ++i) {
        if (!(reach >> i & 1)) continue;
        uint32_t m2 = m | 1u << i;
        if (!seen.insert(m2).second) continue;
        auto d = det_neg(m2);
        if (d > 0) next.insert(m2);
        else if (d == 0) affine.push_back(m2);
      }
    }
    level = std::move(next);
  }

  std::vector<uint32_t> comp_nbr(affine.size());
  for (size_t k = 0; k < affine.size(); ++k)
    for (int i = 0; i < 20; ++i)
      if (affine[k] >> i & 1) comp_nbr[k] |= nbr[i];

  std::map<uint32_t, std::string> cusps;  // node mask -> sorted component types
  std::vector<size_t> chosen;
  std::function<void(size_t, uint32_t, uint32_t, int)> search = [&](size_t from, uint32_t used, uint32_t blocked,
                                                                   int rank) {
    if (rank == 8) {
      std::vector<std::string> types;
      for (size_t k : chosen) types.push_back(affine_type(affine[k], g));
      cusps[used] = sorted_types(types);
      return;
    }
    for (size_t k = from; k < affine.size(); ++k) {
      int r = std::popcount(affine[k]) - 1;
      if (rank + r > 8 || (affine[k] & (used | blocked))) continue;
      chosen.push_back(k);
      search(k + 1, used | affine[k], blocked | comp_nbr[k], rank + r);
      chosen.pop_back();
    }
  };
  search(0, 0, 0, 0);

  // S5 orbits of the oracle cusp set.
  auto act = [](const std::array<int, 5>& s, uint32_t mask) {
    uint32_t out = 0;
    for (int r = 0; r < 20; ++r)
      if (mask >> r & 1) {
        auto [a, b] = kPairs[r % 10];
        out |= 1u << (pidx(s[a], s[b]) + (r < 10 ? 0 : 10));
      }
    return out;
  };
  std::set<uint32_t> done;
  std::set<std::string> orbit_types;
  int orbits = 0;
  for (auto [m, t] : cusps) {
    if (done.count(m)) continue;
    ++orbits;
    orbit_types.insert(t);
    for (const auto& s : s5()) {
      uint32_t im = act(s, m);
      o.expect(cusps.count(im) && cusps[im] == t, "oracle cusp set not S5-stable");
      done.insert(im);
    }
  }
  const std::set<std::string> expected = {"A~1 A~2 A~5", "A~2 E~6", "A~3 D~5", "A~4 A~4"};
  o.expect(orbits == 4, std::to_string(orbits) + " orbits");
  o.expect(orbit_types == expected, "orbit types differ from the four expected");

  // Library classification must coincide cusp by cusp.
  auto lib = coxeter::classify_cusps();
  std::map<uint32_t, std::string> lib_map;
  for (const auto& c : lib) {
    uint32_t m = 0;
    for (int r : c.nodes) m |= 1u << r;
    std::vector<std::string> t;
    std::istringstream in(c.orbit_type);
    for (std::string s; in >> s;) t.push_back(s);
    lib_map[m] = sorted_types(t);
  }
  o.expect(lib_map == cusps, "library cusps differ from the oracle enumeration");

  int e6 = 0;
  for (auto& [m, t] : cusps) e6 += t == "A~2 E~6";
  o.expect(e6 == 20, std::to_string(e6) + " E~6 A~2 cusps");

  // nu_(a,b) is null and orthogonal to exactly one E~6 A~2 node set.
  std::set<uint32_t> matched;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      if (a == b) continue;
      Vec nu = nuo(a, b);
      o.expect(of(lat::nu(a, b)) == nu, "library nu differs from its closed form");
      o.expect(dot(nu, nu) == 0, "nu not null");
      int hits = 0;
      for (auto& [m, t] : cusps) {
        if (t != "A~2 E~6") continue;
        bool orth = true;
        for (int r = 0; r < 20; ++r)
          if (m >> r & 1) orth = orth && dot(nu, rooto(r)) == 0;
        if (orth) {
          ++hits;
          matched.insert(m);
        }
      }
      o.expect(hits == 1, "nu orthogonal to " + std::to_string(hits) + " E~6 A~2 node sets");
    }
  o.expect(matched.size() == 20, "nu vectors do not biject onto the E~6 A~2 cusps");
  o.detail << affine.size() << " affine components, " << cusps.size() << " cusps in " << orbits
           << " S5-orbits, 20 of type E~6 A~2 matched to the 20 nu_(a,b)";
}

void cusp_identities(Outcome& o) {
  const auto half = Rational(1, 2);
  o.expect(alphao(0, 1) + alphao(0, 2) + alphao(0, 3) == half * nuo(4, 0), "oracle half-nu identity");
  o.expect(lat::alpha(0, 1) + lat::alpha(0, 2) + lat::alpha(0, 3) == half * lat::nu(4, 0), "library half-nu identity");

  // Facets at nu_(0,4): g41(a12), g42(a23), g43(a31).
  const std::array<std::array<int, 3>, 3> facets = {{{1, 1, 2}, {2, 2, 3}, {3, 3, 1}}};
  Vec sum{};
  lat::LatticeVector lib_sum;
  const auto p = group::FamilyParams::family(Rational(1, 16));
  for (auto [g, a, b] : facets) {
    sum = sum + gen_apply(g, 4, true, alphao(a, b));
    lib_sum += group::word_to_isometry(group::GroupWord::letter(g), p).apply(lat::alpha(a, b));
  }
  o.expect(sum == nuo(0, 4), "oracle facet sum is not nu_(0,4)");
  o.expect(of(lib_sum) == nuo(0, 4), "library facet sum is not nu_(0,4)");
  Vec literal = alphao(1, 4) + alphao(1, 2) + alphao(2, 4) + alphao(2, 3) + alphao(3, 4) + alphao(1, 3);
  o.detail << "a01+a02+a03 = nu_(4,0)/2; g41(a12)+g42(a23)+g43(a31) = nu_(0,4) (the literal pairing "
              "(a41+a12)+(a42+a23)+(a43+a31) has norm "
           << dot(literal, literal).get_str() << ", so the facets are taken as the g-images)";
}

void group_representation(Outcome& o) {
  const auto p = group::FamilyParams::family(Rational(1, 16));
  auto hom = group::verify_homomorphism(p, 4);
  o.expect(hom.ok && hom.checked == 3864ull * 3864ull, "library homomorphism: " + hom.detail);

  // Own matrices against the library on random products.
  auto all = group::normal_forms(4);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 1500; ++t) {
    const auto& u = all[rng() % all.size()];
    const auto& v = all[rng() % all.size()];
    if (!same(mul(word_mat(u), word_mat(v)), group::word_to_isometry(group::word_multiply(u, v), p))) {
      o.expect(false, "product " + group::to_string(u) + " * " + group::to_string(v));
      break;
    }
  }

  // Distinct images up to length 6, counted from scratch.
  std::set<std::string> images;
  std::vector<Mat> perms;
  for (const auto& s : group::all_perms()) perms.push_back(perm_mat({s[0], s[1], s[2], s[3], 4}));
  std::size_t words = 0;
  std::function<void(const Mat&, int, int)> dfs = [&](const Mat& m, int last, int len) {
    for (const auto& pm : perms) {
      images.insert(key(mul(m, pm)));
      ++words;
    }
    if (len == 6) return;
    for (int a = 0; a < 4; ++a)
      if (a != last) dfs(mul(m, family_gens()[a]), a, len + 1);
  };
  dfs(ident(), -1, 0);
  o.expect(words == 34968 && images.size() == 34968,
           std::to_string(images.size()) + " distinct images of " + std::to_string(words));
  auto inj = group::verify_injectivity(p, 6);
  o.expect(inj.ok && inj.checked == 34968, "library injectivity: " + inj.detail);

  // Shimada relations for lambda = (1,2,3,4,5), from scratch and in the library.
  std::array<std::array<Mat, 5>, 5> g;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a != b) g[a][b] = mat_of([a, b](const Vec& v) { return gen_apply(a, b, true, v); });
  const Mat id = ident();
  int relations = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      o.expect(mul(g[a][b], g[a][b]) == id, "g_ab^2 != 1");
      o.expect(g[a][b] != id, "g_ab trivial");
      ++relations;
      for (int c = 0; c < 5; ++c) {
        if (c == a || c == b) continue;
        Mat t = mul(mul(g[a][b], g[b][c]), g[c][a]);
        o.expect(mul(t, t) == id, "(g_ab g_bc g_ca)^2 != 1");
        ++relations;
        for (int d = c + 1; d < 5; ++d) {
          if (d == a || d == b) continue;
          Mat s = mul(g[a][b], g[c][d]);
          o.expect(mul(s, s) == id, "(g_ab g_cd)^2 != 1");
          ++relations;
        }
      }
    }
  const group::FamilyParams distinct({1, 2, 3, 4, 5});
  o.expect(group::verify_shimada_relations(distinct), "library Shimada relations");
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      o.expect(same(g[a][b], group::generator_matrix(a, b, distinct)), "library g_ab differs");
  o.detail << hom.checked << " pairs multiplicative; 34968 words, 34968 distinct images; " << relations
           << " relations at lambda = (1,2,3,4,5)";
}

void nef_machinery(Outcome& o) {
  const auto p = group::FamilyParams::family(Rational(1, 16));
  const Vec d = deltao();
  std::mt19937_64 rng(20240601);
  int inverted = 0;
  long steps = 0;
  for (int t = 0; t < 1000; ++t) {
    group::GroupWord w;
    int len = static_cast<int>(rng() % 16);
    for (int i = 0; i < len; ++i) {
      int a;
      do a = static_cast<int>(rng() % 4);
      while (!w.free_part.empty() && w.free_part.back() == a);
      w.free_part.push_back(a);
    }
    w.perm = group::all_perms()[rng() % 24];
    Vec v = mat_apply(word_mat(w), d);
    auto r = group::reduce_to_chamber(lat::LatticeVector(v), p);
    group::GroupWord u{w.free_part, group::kIdentityPerm};
    group::GroupWord inv{std::vector<int>(u.free_part.rbegin(), u.free_part.rend()), group::kIdentityPerm};
    bool ok = of(r.vector) == d && r.word == inv && r.steps == u.free_part.size();
    // The returned word carries v back to Delta in the oracle model too.
    ok = ok && mat_apply(word_mat(r.word), v) == d;
    inverted += ok;
    steps += static_cast<long>(r.steps);
  }
  o.expect(inverted == 1000, std::to_string(inverted) + " of 1000 scrambles inverted");
  o.expect(group::is_nef(lat::delta(), p), "is_nef(Delta)");
  o.expect(!group::is_nef(lat::U(0, 1), p), "is_nef(U01)");
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) o.expect(group::is_nef(lat::f(a, b), p), "is_nef(f_ab)");
  o.detail << inverted << " of 1000 seeded scrambles inverted exactly (" << steps
           << " reflections); Delta and all f_ab nef, U01 not";
}

void new_nodes(Outcome& o) {
  using Tuple = std::array<Rational, 5>;
  auto normalise = [](Tuple y) {
    Rational s = y[0];
    for (auto& q : y) q /= s;
    return y;
  };
  auto satisfies = [](const Tuple& y, const Rational& t) {
    const Tuple lambda = {1, 1, 1, 1, t};
    Rational sum = 0, inv = 0;
    for (int a = 0; a < 5; ++a) {
      sum += y[a];
      inv += 1 / (lambda[a] * y[a]);
    }
    bool eq = true;
    for (int a = 0; a < 5; ++a) eq = eq && lambda[a] * y[a] * y[a] == lambda[0] * y[0] * y[0];
    return sum == 0 && inv == 0 && eq;
  };
  auto as_set = [&](const std::vector<Tuple>& v) {
    std::set<Tuple> s;
    for (const auto& y : v) s.insert(normalise(y));
    return s;
  };
  const std::set<Tuple> sixteenth = {{1, 1, 1, 1, -4}};
  std::vector<Tuple> quarter_stated;
  for (int neg = 0; neg < 4; ++neg) {
    Tuple y = {1, 1, 1, 1, -2};
    y[neg] = -1;
    quarter_stated.push_back(y);
  }
  for (const auto& y : quarter_stated) o.expect(satisfies(y, Rational(1, 4)), "stated t = 1/4 node fails the equations");
  o.expect(satisfies({1, 1, 1, 1, -4}, Rational(1, 16)), "stated t = 1/16 node fails the equations");
  auto got16 = group::new_nodes(Rational(1, 16));
  auto got4 = group::new_nodes(Rational(1, 4));
  o.expect(got16.size() == 1 && as_set(got16) == sixteenth, "t = 1/16 nodes differ");
  o.expect(got4.size() == 4 && as_set(got4) == as_set(quarter_stated), "t = 1/4 nodes differ");
  for (const auto& y : got4) o.expect(satisfies(y, Rational(1, 4)), "returned t = 1/4 node fails the equations");
  o.detail << "t = 1/16: {(1,1,1,1,-4)}; t = 1/4: the four images of (1,1,1,-1,-2)";
}

using quat::Quaternion;
using quat::Rotation3;

Quaternion hamilton(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z, p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x, p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

quat::Mat3 rotation_of(const Quaternion& q) {
  const Rational n = q.norm();
  const auto &w = q.w, &x = q.x, &y = q.y, &z = q.z;
  quat::Mat3 m = {{{w * w + x * x - y * y - z * z, 2 * (x * y - w * z), 2 * (x * z + w * y)},
                   {2 * (x * y + w * z), w * w - x * x + y * y - z * z, 2 * (y * z - w * x)},
                   {2 * (x * z - w * y), 2 * (y * z + w * x), w * w - x * x - y * y + z * z}}};
  for (auto& row : m)
    for (auto& e : row) e /= n;
  return m;
}

std::vector<Quaternion> hurwitz_units() {
  std::vector<Quaternion> out;
  for (int s : {1, -1}) {
    out.push_back({s, 0, 0, 0});
    out.push_back({0, s, 0, 0});
    out.push_back({0, 0, s, 0});
    out.push_back({0, 0, 0, s});
  }
  const Rational h(1, 2);
  for (int m = 0; m < 16; ++m)
    out.push_back({m & 1 ? -h : h, m & 2 ? -h : h, m & 4 ? -h : h, m & 8 ? -h : h});
  return out;
}

void quaternion_battery(Outcome& o) {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  o.expect((i + j + k).norm() == 3, "norm(i+j+k)");
  const Rational h(1, 2);
  const Quaternion stated = {-h, h, h, h};
  Quaternion ij = i - j;
  Quaternion ij_inv = Rational(1) / ij.norm() * ij.conjugate();
  o.expect(hamilton(j - k, ij_inv) == stated, "oracle (j-k)(i-j)^-1");
  o.expect((j - k) * (i - j).inverse() == stated, "library (j-k)(i-j)^-1");

  // Six edge rotations: closure and action on the body diagonals.
  const quat::Vec3 dg[4] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<quat::Mat3> gens;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      quat::Vec3 axis;
      for (int c = 0; c < 3; ++c) axis[c] = (dg[a][c] - dg[b][c]) / 2;
      Quaternion q = {0, axis[0], axis[1], axis[2]};
      gens.push_back(rotation_of(q));
      o.expect(Rotation3(gens.back()) == quat::conjugation_rotation(quat::gbar(a, b)), "edge rotation differs");
    }
  auto mm = [](const quat::Mat3& a, const quat::Mat3& b) {
    quat::Mat3 c{};
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) c[r][s] += a[r][t] * b[t][s];
    return c;
  };
  std::set<quat::Mat3> group = {rotation_of({1, 0, 0, 0})};
  std::vector<quat::Mat3> frontier(group.begin(), group.end());
  while (!frontier.empty() && group.size() <= 100) {
    std::vector<quat::Mat3> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = mm(x, g);
        if (group.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::set<std::array<int, 4>> induced;
  for (const auto& m : group) {
    std::array<int, 4> perm{-1, -1, -1, -1};
    for (int a = 0; a < 4; ++a) {
      quat::Vec3 img{};
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) img[r] += m[r][c] * dg[a][c];
      for (int b = 0; b < 4; ++b) {
        quat::Vec3 neg = {-dg[b][0], -dg[b][1], -dg[b][2]};
        if (img == dg[b] || img == neg) perm[a] = b;
      }
    }
    induced.insert(perm);
  }
  std::vector<Rotation3> lib_gens;
  for (const auto& g : gens) lib_gens.push_back(Rotation3(g));
  auto lib_closure = quat::closure(lib_gens, 1000);
  o.expect(group.size() == 24 && lib_closure.size() == 24, "closure order " + std::to_string(group.size()));
  o.expect(induced.size() == 24 && !induced.count({-1, -1, -1, -1}), "action on diagonals is not S4");
  for (const auto& r : lib_closure) o.expect(quat::diagonal_permutation(r).has_value(), "library diagonal action");

  // Reduction mod 3 of the 24 units through the splitting with sqrt(-2) = 1.
  auto mod3 = [](const Rational& q) {
    long num = (Integer(Integer(q.get_num()) % 3).get_si() + 3) % 3;
    long den = Integer(q.get_den() % 3).get_si();
    return static_cast<int>(num * (den == 2 ? 2 : 1) % 3);
  };
  std::set<std::array<int, 4>> images;
  auto units = hurwitz_units();
  int det_one = 0;
  for (const auto& q : units) {
    int w = mod3(q.w), x = mod3(q.x), y = mod3(q.y), z = mod3(q.z);
    // I = [[0,-1],[1,0]], J = [[1,1],[1,-1]], K = IJ = [[-1,1],[1,1]]
    std::array<int, 4> m = {w + y - z, -x + y + z, x + y + z, w - y + z};
    for (auto& e : m) e = ((e % 3) + 3) % 3;
    det_one += ((m[0] * m[3] - m[1] * m[2]) % 3 + 3) % 3 == 1;
    images.insert(m);
  }
  int sl2 = 0;
  for (int a = 0; a < 81; ++a) {
    int m0 = a % 3, m1 = a / 3 % 3, m2 = a / 9 % 3, m3 = a / 27;
    sl2 += ((m0 * m3 - m1 * m2) % 3 + 3) % 3 == 1;
  }
  std::set<std::string> lib_units, own_units;
  for (const auto& q : quat::binary_tetrahedral()) lib_units.insert(quat::to_string(q));
  for (const auto& q : units) own_units.insert(quat::to_string(q));
  o.expect(lib_units == own_units, "library binary tetrahedral group differs");
  o.expect(sl2 == 24 && det_one == 24 && images.size() == 24, "mod-3 image is not all of SL2(F3)");
  o.expect(quat::sl2f3_check(), "library SL2(F3) check");
  o.detail << "norm 3; (j-k)(i-j)^-1 = (-1+i+j+k)/2; edge rotations generate 24 elements inducing "
           << induced.size() << " permutations; 24 units map onto the 24 elements of SL2(F3)";
}

void tree_battery(Outcome& o) {
  const int prec = 48;
  auto b = tree::ball(4, prec);
  std::vector<std::size_t> expected;
  for (int r = 0; r <= 4; ++r) expected.push_back(1 + 2 * (static_cast<std::size_t>(std::pow(3, r)) - 1));
  o.expect(b.sizes_by_depth == expected, "ball sizes");
  o.expect(expected == std::vector<std::size_t>{1, 5, 17, 53, 161}, "ball size formula");
  const tree::TreeVertex base{};

  // Reduced words in the body diagonals against the ball.
  std::set<tree::TreeVertex> hit;
  std::size_t words = 0;
  bool distance_ok = true, formula_ok = true;
  std::function<void(group::GroupWord&)> dfs = [&](group::GroupWord& w) {
    auto m = tree::word_matrix(w, prec);
    auto v = tree::act(m, base, prec);
    ++words;
    hit.insert(v);
    distance_ok = distance_ok && v.distance_from_base() == static_cast<std::int64_t>(w.length());
    // d(base, M base) = v(det M) - 2 min v(m_ij)
    int minv = 1 << 20;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (!m(r, c).is_zero()) minv = std::min(minv, m(r, c).valuation());
    formula_ok = formula_ok && m.determinant().valuation() - 2 * minv == static_cast<int>(w.length());
    if (w.length() == 4) return;
    for (int a = 0; a < 4; ++a) {
      if (!w.free_part.empty() && w.free_part.back() == a) continue;
      w.free_part.push_back(a);
      dfs(w);
      w.free_part.pop_back();
    }
  };
  group::GroupWord w0;
  dfs(w0);
  std::set<tree::TreeVertex> ball_set(b.vertices.begin(), b.vertices.end());
  o.expect(words == 161 && hit == ball_set, "words do not biject onto the ball");
  o.expect(distance_ok, "distance differs from word length");
  o.expect(formula_ok, "valuation formula differs from word length");
  auto tr = tree::verify_simple_transitivity(4, prec);
  o.expect(tr.bijection && tr.distance_matches_length && tr.total == 161, "library transitivity report");

  // Binary tetrahedral group: common fixed set within radius 2 is the base.
  std::set<tree::TreeVertex> common;
  bool first = true;
  int order3 = 0;
  for (const auto& q : hurwitz_units()) {
    auto g = tree::split_quaternion(q, prec);
    auto f2 = tree::fixed_vertices(g, 2, prec);
    std::set<tree::TreeVertex> s(f2.begin(), f2.end());
    o.expect(s.count(base) == 1, "unit does not fix the base");
    if (first) common = s;
    else {
      std::set<tree::TreeVertex> keep;
      for (const auto& v : common)
        if (s.count(v)) keep.insert(v);
      common = keep;
    }
    first = false;
    if (abs(q.w) == Rational(1, 2)) {
      ++order3;
      auto f4 = tree::fixed_vertices(g, 4, prec);
      int at1 = 0;
      for (const auto& v : f4) at1 += v.distance_from_base() == 1;
      o.expect(f4.size() == 2 && at1 == 1 && std::count(f4.begin(), f4.end(), base) == 1,
               "order-3 element fixes " + std::to_string(f4.size()) + " vertices");
    }
  }
  o.expect(common == std::set<tree::TreeVertex>{base}, "common fixed set within radius 2 is not {base}");
  o.expect(order3 == 16, "order-3 count");

  // Body diagonals: no fixed vertex, bipartition classes swapped.
  auto b3 = tree::ball(3, prec);
  for (int a = 0; a < 4; ++a) {
    auto g = tree::split_quaternion(quat::gbar(a, 4), prec);
    o.expect(tree::fixed_vertices(g, 4, prec).empty(), "body diagonal fixes a vertex");
    for (const auto& v : b3.vertices) {
      auto im = tree::act(g, v, prec);
      if (im.parity() == v.parity()) {
        o.expect(false, "body diagonal preserves a bipartition class");
        break;
      }
    }
  }

  auto st = tree::stabilizer_order(2, prec);
  o.expect(st.order == 24, "base stabilizer order " + std::to_string(st.order));

  // Upper triangular SL2(Z/9): tau = [[1,1],[0,1]], sigma = diag(2,5).
  auto mul9 = [](std::array<int, 4> x, std::array<int, 4> y) {
    return std::array<int, 4>{(x[0] * y[0] + x[1] * y[2]) % 9, (x[0] * y[1] + x[1] * y[3]) % 9,
                              (x[2] * y[0] + x[3] * y[2]) % 9, (x[2] * y[1] + x[3] * y[3]) % 9};
  };
  const std::array<int, 4> one = {1, 0, 0, 1}, tau = {1, 1, 0, 1}, sigma = {2, 0, 0, 5}, sigma_inv = {5, 0, 0, 2};
  auto tau4 = mul9(mul9(tau, tau), mul9(tau, tau));
  o.expect(mul9(mul9(sigma, tau), sigma_inv) == tau4, "sigma tau sigma^-1 != tau^4");
  int borel = 0, o3 = 0;
  bool o3_trivial = true;
  for (int a = 0; a < 9; ++a)
    for (int bb = 0; bb < 9; ++bb)
      for (int d = 0; d < 9; ++d) {
        std::array<int, 4> m = {a, bb, 0, d};
        if (a * d % 9 != 1) continue;
        ++borel;
        if (m != one && mul9(mul9(m, m), m) == one) {
          ++o3;
          o3_trivial = o3_trivial && a % 3 == 1 && bb % 3 == 0 && d % 3 == 1;
        }
      }
  auto rig = tree::verify_distance2_rigidity();
  o.expect(rig.ok() && rig.stabilizer_size == static_cast<std::size_t>(borel) &&
               rig.order3_count == static_cast<std::size_t>(o3) && o3_trivial,
           "SL2(Z/9) rigidity");
  o.detail << "ball sizes 1,5,17,53,161; 161 words biject with length = distance; " << order3
           << " order-3 units fix one edge; stabilizer 24; " << o3 << " order-3 elements in the Borel of order "
           << borel << ", all trivial mod 3";
}

void cross_model(Outcome& o) {
  const auto p = group::FamilyParams::family(Rational(1, 16));
  std::array<lat::LatticeIsometry, 4> gens;
  for (int a = 0; a < 4; ++a) gens[a] = group::generator_matrix(a, 4, p);
  std::vector<std::pair<group::Perm4, lat::LatticeIsometry>> perms;
  for (const auto& s : group::all_perms()) {
    const int s5[] = {s[0], s[1], s[2], s[3], 4};
    perms.push_back({s, lat::LatticeIsometry::pair_permutation(s5)});
  }
  const auto id = lat::LatticeIsometry::identity();
  std::size_t words = 0, disagreements = 0, trivial = 0, spot = 0;
  std::function<void(group::GroupWord&, const lat::LatticeIsometry&)> dfs = [&](group::GroupWord& w,
                                                                                  const lat::LatticeIsometry& m) {
    for (const auto& [s, pm] : perms) {
      group::GroupWord full{w.free_part, s};
      auto lm = m * pm;
      if (words % 97 == 0) {
        o.expect(lm == group::word_to_isometry(full, p), "incremental matrix differs");
        ++spot;
      }
      bool in_lambda = lm == id;
      bool in_so3 = quat::conjugation_rotation(quat::word_quaternion(full)) == Rotation3();
      bool in_tree = tree::word_matrix(full).is_scalar();
      ++words;
      if (in_lambda != in_so3 || in_so3 != in_tree) ++disagreements;
      trivial += in_lambda && in_so3 && in_tree;
    }
    if (w.length() == 5) return;
    for (int a = 0; a < 4; ++a) {
      if (!w.free_part.empty() && w.free_part.back() == a) continue;
      w.free_part.push_back(a);
      dfs(w, m * gens[a]);
      w.free_part.pop_back();
    }
  };
  group::GroupWord w0;
  dfs(w0, id);
  o.expect(words == 11640, std::to_string(words) + " words");
  o.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.expect(trivial == 1, std::to_string(trivial) + " words trivial in all models");
  o.detail << words << " normal forms; the three kernels agree on every word, only the identity is trivial";
}

struct Affine {
  quat::Mat3 a;
  quat::Vec3 t;
};
Affine compose(const Affine& x, const Affine& y) {
  Affine z{};
  for (int r = 0; r < 3; ++r) {
    z.t[r] = x.t[r];
    for (int c = 0; c < 3; ++c) {
      z.t[r] += x.a[r][c] * y.t[c];
      for (int k = 0; k < 3; ++k) z.a[r][c] += x.a[r][k] * y.a[k][c];
    }
  }
  return z;
}
// x -> x - (2/3)(d.x + 1) d
Affine facet_reflection(int f) {
  const quat::Vec3 dg[4] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  Affine r{};
  for (int i = 0; i < 3; ++i) {
    r.t[i] = Rational(-2, 3) * dg[f][i];
    for (int j = 0; j < 3; ++j) r.a[i][j] = (i == j ? 1 : 0) - Rational(2, 3) * dg[f][i] * dg[f][j];
  }
  return r;
}

void game_battery(Outcome& o) {
  int solved = 0;
  for (int s = 1; s <= 500; ++s) {
    const int len = 1 + s % 20;
    auto st = game::scramble(len, static_cast<std::uint64_t>(s));
    std::vector<int> reduced;
    Affine pose{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {0, 0, 0}};
    for (const auto& m : st.history) {
      if (!m.is_facet) break;
      if (!reduced.empty() && reduced.back() == m.facet) reduced.pop_back();
      else reduced.push_back(m.facet);
      pose = compose(pose, facet_reflection(m.facet));
    }
    bool ok = static_cast<int>(st.history.size()) == len && st.pose.linear == pose.a &&
              st.pose.translation == pose.t && st.word.free_part == reduced && st.word.perm == group::kIdentityPerm;
    auto sol = game::solve(st);
    ok = ok && sol.size() == reduced.size();
    for (std::size_t i = 0; ok && i < sol.size(); ++i)
      ok = sol[i].is_facet && sol[i].facet == reduced[reduced.size() - 1 - i];
    for (const auto& m : sol) pose = compose(pose, facet_reflection(m.facet));
    ok = ok && game::apply_moves(st, sol).pose == game::Pose::identity();
    ok = ok && pose.a == game::Pose::identity().linear && pose.t == game::Pose::identity().translation;
    solved += ok;
  }
  o.expect(solved == 500, std::to_string(solved) + " of 500 solved by the reversed word");
  game::PoseTable table(5, true);
  std::size_t forms = 0;
  for (int n = 0, c = 1; n <= 5; ++n, c = n == 1 ? 4 : c * 3) forms += 24 * static_cast<std::size_t>(c);
  o.expect(table.collision_free() && table.size() == forms && table.entries_inserted() == forms,
           "pose table has " + std::to_string(table.size()) + " of " + std::to_string(forms) + " poses");
  o.detail << solved << " of 500 scrambles (lengths 1..20) solved by exactly the reversed reduced word; "
           << table.size() << " poses up to length 5, no collisions";
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion(1, "Gram battery", gram_battery);
  criterion(2, "Lattice structure", lattice_structure);
  criterion(3, "Delta battery", delta_battery);
  criterion(4, "Cusp classification", cusp_classification);
  criterion(5, "Cusp identities", cusp_identities);
  criterion(6, "Group representation", group_representation);
  criterion(7, "Nef machinery", nef_machinery);
  criterion(8, "New nodes", new_nodes);
  criterion(9, "Quaternion battery", quaternion_battery);
  criterion(10, "Tree battery", tree_battery);
  criterion(11, "Cross-model kernel agreement", cross_model);
  criterion(12, "Game", game_battery);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << " (" << ms << " ms)"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
