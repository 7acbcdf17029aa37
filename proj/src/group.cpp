#include "tetra/group.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace tetra::group {

using lattice::LatticeIsometry;
using lattice::LatticeVector;
using lattice::kRank;

bool is_permutation(std::span<const int> p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm4 compose(const Perm4& s, const Perm4& t) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[i] = s[t[i]];
  return r;
}

Perm4 invert(const Perm4& s) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[s[i]] = i;
  return r;
}

int sign(const Perm4& s) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inversions += s[i] > s[j];
  return inversions % 2 ? -1 : 1;
}

const std::vector<Perm4>& all_perms() {
  static const std::vector<Perm4> perms = [] {
    std::vector<Perm4> out;
    Perm4 p = kIdentityPerm;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

GroupWord GroupWord::letter(int a) {
  if (a < 0 || a > 3) throw DomainError("letter index out of range 0..3");
  return GroupWord{{a}, kIdentityPerm};
}

GroupWord GroupWord::permutation(const Perm4& p) {
  if (!is_permutation(p)) throw DomainError("not a permutation of 0..3");
  return GroupWord{{}, p};
}

bool GroupWord::is_normal_form() const {
  if (!is_permutation(perm)) return false;
  for (std::size_t i = 0; i < free_part.size(); ++i) {
    if (free_part[i] < 0 || free_part[i] > 3) return false;
    if (i > 0 && free_part[i] == free_part[i - 1]) return false;
  }
  return true;
}

GroupWord word_multiply(const GroupWord& u, const GroupWord& v) {
  GroupWord r;
  r.free_part.reserve(u.free_part.size() + v.free_part.size());
  r.free_part = u.free_part;
  for (int a : v.free_part) {
    int img = u.perm[a];
    if (!r.free_part.empty() && r.free_part.back() == img)
      r.free_part.pop_back();
    else
      r.free_part.push_back(img);
  }
  r.perm = compose(u.perm, v.perm);
  return r;
}

GroupWord word_inverse(const GroupWord& u) {
  GroupWord r;
  r.perm = invert(u.perm);
  r.free_part.reserve(u.free_part.size());
  for (auto it = u.free_part.rbegin(); it != u.free_part.rend(); ++it) r.free_part.push_back(r.perm[*it]);
  return r;
}

std::string to_string(const GroupWord& w) {
  std::string out;
  for (int a : w.free_part) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += static_cast<char>('0' + a);
  }
  if (w.perm != kIdentityPerm) {
    if (!out.empty()) out += ' ';
    out += "s=(";
    for (int x : w.perm) out += static_cast<char>('0' + x);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

GroupWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  GroupWord w;
  bool have_perm = false;
  while (in >> tok) {
    if (tok == "id" || tok == "e") continue;
    if (tok.size() == 2 && tok[0] == 'x' && tok[1] >= '0' && tok[1] <= '3') {
      w = word_multiply(w, GroupWord::letter(tok[1] - '0'));
    } else if (tok.size() == 8 && tok.starts_with("s=(") && tok.back() == ')') {
      if (have_perm) throw ParseError("more than one permutation token");
      have_perm = true;
      Perm4 p{};
      for (int i = 0; i < 4; ++i) {
        char c = tok[3 + i];
        if (c < '0' || c > '3') throw ParseError("bad permutation token: " + tok);
        p[i] = c - '0';
      }
      if (!is_permutation(p)) throw ParseError("not a permutation: " + tok);
      w = word_multiply(w, GroupWord::permutation(p));
    } else {
      throw ParseError("bad word token: " + tok);
    }
  }
  return w;
}

std::size_t reduced_word_count(int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  std::size_t c = 4;
  for (int i = 1; i < n; ++i) c *= 3;
  return c;
}

namespace {

std::vector<std::vector<int>> reduced_free_words(int max_length) {
  std::vector<std::vector<int>> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int a = 0; a < 4; ++a) {
        if (!out[i].empty() && out[i].back() == a) continue;
        auto w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace

std::vector<GroupWord> normal_forms(int max_length) {
  std::vector<GroupWord> out;
  for (auto& f : reduced_free_words(max_length))
    for (const auto& p : all_perms()) out.push_back(GroupWord{f, p});
  return out;
}

FamilyParams::FamilyParams(const std::array<Rational, 5>& lambdas) : lambdas_(lambdas) {
  for (const auto& l : lambdas_)
    if (l == 0) throw DomainError("family parameters must be nonzero");
}

FamilyParams FamilyParams::family(const Rational& t) { return FamilyParams({1, 1, 1, 1, t}); }

bool FamilyParams::is_family_shape() const {
  for (int a = 1; a < 4; ++a)
    if (lambdas_[a] != lambdas_[0]) return false;
  return lambdas_[4] != lambdas_[0];
}

bool FamilyParams::all_distinct() const {
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      if (lambdas_[a] == lambdas_[b]) return false;
  return true;
}

LatticeIsometry generator_matrix(int a, int b, const FamilyParams& params) {
  if (a < 0 || a > 4 || b < 0 || b > 4 || a == b) throw DomainError("generator needs two distinct indices in 0..4");
  std::array<int, 5> perm = {0, 1, 2, 3, 4};
  std::swap(perm[a], perm[b]);
  auto t = LatticeIsometry::pair_permutation(perm);
  if (params[a] == params[b]) return t;
  return LatticeIsometry::reflection(lattice::alpha(a, b)) * t;
}

namespace {

void require_family(const FamilyParams& params) {
  if (!params.is_family_shape())
    throw DomainError("parameters must have the shape (1,1,1,1,t) with t != 1");
}

LatticeIsometry perm_matrix(const Perm4& p) {
  std::array<int, 5> perm = {p[0], p[1], p[2], p[3], 4};
  return LatticeIsometry::pair_permutation(perm);
}

}  // namespace

LatticeIsometry word_to_isometry(const GroupWord& w, const FamilyParams& params) {
  require_family(params);
  if (!w.is_normal_form()) throw DomainError("word is not in normal form");
  LatticeIsometry m;
  for (int a : w.free_part) m = m * generator_matrix(a, 4, params);
  return m * perm_matrix(w.perm);
}

std::vector<int> interior_roots(const FamilyParams& params) {
  std::vector<int> out;
  for (int i = 0; i < kRank; ++i) {
    auto [a, b] = lattice::pair_at(i);
    if (params[a] != params[b]) out.push_back(kRank + i);
  }
  return out;
}

std::vector<int> exterior_roots(const FamilyParams& params) {
  std::vector<int> out;
  for (int i = 0; i < kRank; ++i) out.push_back(i);
  for (int i = 0; i < kRank; ++i) {
    auto [a, b] = lattice::pair_at(i);
    if (params[a] == params[b]) out.push_back(kRank + i);
  }
  return out;
}

ChamberResult reduce_to_chamber(const LatticeVector& v, const FamilyParams& params) {
  require_family(params);
  const auto d = lattice::delta();
  if (lattice::inner_product(v, v) < 0) throw DomainError("vector has negative square");
  if (lattice::inner_product(v, d) <= 0) throw DomainError("vector must pair positively with Delta");

  std::array<LatticeVector, 4> alphas;
  std::array<LatticeIsometry, 4> gens;
  for (int c = 0; c < 4; ++c) {
    alphas[c] = lattice::alpha(c, 4);
    gens[c] = generator_matrix(c, 4, params);
  }

  ChamberResult r{v, GroupWord::identity(), 0};
  while (true) {
    int best = -1;
    Rational best_val = 0;
    for (int c = 0; c < 4; ++c) {
      Rational p = lattice::inner_product(r.vector, alphas[c]);
      if (p < best_val) {
        best_val = p;
        best = c;
      }
    }
    if (best < 0) return r;
    if (r.steps >= kChamberIterationCap) throw InternalError("chamber reduction exceeded iteration cap");
    r.vector = gens[best].apply(r.vector);
    r.word = word_multiply(GroupWord::letter(best), r.word);
    ++r.steps;
  }
}

bool is_nef(const LatticeVector& v, const FamilyParams& params) {
  require_family(params);
  if (v.is_zero()) return true;
  if (lattice::inner_product(v, v) < 0) return false;
  if (lattice::inner_product(v, lattice::delta()) <= 0) return false;
  auto r = reduce_to_chamber(v, params);
  for (int i : exterior_roots(params))
    if (lattice::inner_product(r.vector, lattice::root(i)) < 0) return false;
  return true;
}

bool verify_shimada_relations(const FamilyParams& params) {
  std::array<std::array<LatticeIsometry, 5>, 5> g;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a != b) g[a][b] = generator_matrix(a, b, params);
  const auto id = LatticeIsometry::identity();
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      if (a == b) continue;
      if (g[a][b] * g[a][b] != id) return false;
      for (int c = 0; c < 5; ++c) {
        if (c == a || c == b) continue;
        auto t = g[a][b] * g[b][c] * g[c][a];
        if (t * t != id) return false;
        for (int d = 0; d < 5; ++d) {
          if (d == a || d == b || d == c) continue;
          auto s = g[a][b] * g[c][d];
          if (s * s != id) return false;
        }
      }
    }
  return true;
}

std::vector<std::array<Rational, 5>> new_nodes(const Rational& t) {
  if (t == 0) throw DomainError("t must be nonzero");
  const std::array<Rational, 5> lambda = {1, 1, 1, 1, t};
  std::vector<std::array<Rational, 5>> out;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<Rational, 5> y = {1, mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1, 0};
    y[4] = -(y[0] + y[1] + y[2] + y[3]);
    if (y[4] == 0) continue;
    if (t * y[4] * y[4] != 1) continue;
    Rational s = 0;
    for (int a = 0; a < 5; ++a) s += 1 / (lambda[a] * y[a]);
    if (s != 0) continue;
    out.push_back(y);
  }
  return out;
}

namespace {

// Integer kernel for the exhaustive checks. Every group element is an
// integral matrix in the U-basis, so int64 suffices at these lengths.
using Mat = std::array<std::int64_t, kRank * kRank>;
constexpr std::int64_t kEntryBound = std::int64_t{1} << 28;

Mat to_mat(const LatticeIsometry& m) {
  Mat r{};
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) {
      const Rational& q = m(i, j);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InternalError("generator matrix is not small integral");
      r[i * kRank + j] = q.get_num().get_si();
    }
  return r;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < kRank; ++i)
    for (int k = 0; k < kRank; ++k) {
      std::int64_t x = a[i * kRank + k];
      if (x == 0) continue;
      for (int j = 0; j < kRank; ++j) r[i * kRank + j] += x * b[k * kRank + j];
    }
  return r;
}

void check_bound(const Mat& m) {
  for (auto x : m)
    if (x >= kEntryBound || x <= -kEntryBound) throw InternalError("matrix entry exceeds the int64 kernel bound");
}

// Column j of M P_sigma is column cols[j] of M.
using ColumnMap = std::array<int, kRank>;

ColumnMap column_map(const Perm4& p) {
  ColumnMap c{};
  for (int j = 0; j < kRank; ++j) {
    auto [a, b] = lattice::pair_at(j);
    c[j] = lattice::pair_index(a == 4 ? 4 : p[a], b == 4 ? 4 : p[b]);
  }
  return c;
}

Mat permute_columns(const Mat& m, const ColumnMap& c) {
  Mat r;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) r[i * kRank + j] = m[i * kRank + c[j]];
  return r;
}

// Free words keyed by base-5 digits (letter + 1).
std::size_t free_key(const std::vector<int>& w) {
  std::size_t k = 0;
  for (int a : w) k = k * 5 + static_cast<std::size_t>(a + 1);
  return k;
}

struct Kernel {
  std::array<Mat, 4> gens;
  std::vector<ColumnMap> perm_cols;  // indexed like all_perms()
  std::vector<std::int32_t> slot;    // free_key -> index into mats, -1 if absent
  std::vector<Mat> mats;             // product of generators for each free word

  Kernel(const FamilyParams& params, int max_free) {
    require_family(params);
    for (int a = 0; a < 4; ++a) gens[a] = to_mat(generator_matrix(a, 4, params));
    for (const auto& p : all_perms()) perm_cols.push_back(column_map(p));
    std::size_t span = 1;
    for (int i = 0; i < max_free; ++i) span *= 5;
    slot.assign(span * 5, -1);
    Mat id{};
    for (int i = 0; i < kRank; ++i) id[i * kRank + i] = 1;
    for (auto& w : reduced_free_words(max_free)) {
      Mat m = id;
      if (!w.empty()) {
        auto prefix = w;
        prefix.pop_back();
        m = mul(mats[slot[free_key(prefix)]], gens[w.back()]);
        check_bound(m);
      }
      slot[free_key(w)] = static_cast<std::int32_t>(mats.size());
      mats.push_back(m);
    }
  }

  const Mat& free_matrix(const std::vector<int>& w) const { return mats[slot[free_key(w)]]; }

  static std::size_t perm_index(const Perm4& p) {
    const auto& ps = all_perms();
    return static_cast<std::size_t>(std::lower_bound(ps.begin(), ps.end(), p) - ps.begin());
  }

  Mat word_matrix(const GroupWord& w) const { return permute_columns(free_matrix(w.free_part), perm_cols[perm_index(w.perm)]); }
};

}  // namespace

EnumerationReport verify_homomorphism(const FamilyParams& params, int max_length) {
  Kernel k(params, 2 * max_length);
  // Spot-check the integer kernel against the exact representation.
  for (const auto& w : normal_forms(std::min(max_length, 2)))
    if (k.word_matrix(w) != to_mat(word_to_isometry(w, params)))
      return {false, 0, "kernel disagrees with exact matrix for " + to_string(w)};

  const auto words = normal_forms(max_length);
  std::vector<Mat> images;
  images.reserve(words.size());
  for (const auto& w : words) images.push_back(k.word_matrix(w));

  EnumerationReport rep;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t jf = 0; jf < words.size(); jf += 24) {
      // M(u) M(v) = (M(u) F_v) P_tau; the bracket is shared by the 24 choices of tau.
      const Mat left = mul(images[i], images[jf]);
      for (std::size_t j = jf; j < jf + 24; ++j) {
        const GroupWord uv = word_multiply(words[i], words[j]);
        const Mat lhs = permute_columns(left, k.perm_cols[j - jf]);
        const Mat& f = k.free_matrix(uv.free_part);
        const ColumnMap& c = k.perm_cols[Kernel::perm_index(uv.perm)];
        for (int r = 0; r < kRank; ++r)
          for (int col = 0; col < kRank; ++col)
            if (lhs[r * kRank + col] != f[r * kRank + c[col]]) {
              rep.ok = false;
              rep.detail = "M(u)M(v) != M(uv) for u = " + to_string(words[i]) + ", v = " + to_string(words[j]);
              return rep;
            }
        ++rep.checked;
      }
    }
  }
  rep.detail = std::to_string(rep.checked) + " pairs";
  return rep;
}

EnumerationReport verify_injectivity(const FamilyParams& params, int max_length) {
  Kernel k(params, max_length);
  const auto words = normal_forms(max_length);
  std::vector<std::pair<Mat, std::size_t>> images;
  images.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) images.emplace_back(k.word_matrix(words[i]), i);
  std::sort(images.begin(), images.end());
  EnumerationReport rep;
  rep.checked = words.size();
  for (std::size_t i = 1; i < images.size(); ++i)
    if (images[i].first == images[i - 1].first) {
      rep.ok = false;
      rep.detail = "collision: " + to_string(words[images[i - 1].second]) + " and " + to_string(words[images[i].second]);
      return rep;
    }
  rep.detail = std::to_string(rep.checked) + " words, all images distinct";
  return rep;
}

EnumerationReport verify_parity_invariant(const FamilyParams& params, int max_length) {
  Kernel k(params, max_length);
  const auto target = lattice::alpha(0, 1);
  const int u01 = lattice::pair_index(0, 1);
  EnumerationReport rep;
  for (const auto& w : normal_forms(max_length)) {
    const Mat m = k.word_matrix(w);
    bool equal = true;
    for (int i = 0; i < kRank && equal; ++i) equal = Rational(m[i * kRank + u01]) == target[i];
    if (equal) {
      rep.ok = false;
      rep.detail = to_string(w) + " sends U01 to a01";
      return rep;
    }
    ++rep.checked;
  }
  rep.detail = std::to_string(rep.checked) + " words, U01 never sent to a01";
  return rep;
}

}  // namespace tetra::group
