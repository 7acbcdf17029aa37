#include "tetra/lattice.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <vector>

namespace tetra::lattice {

namespace {

constexpr std::array<std::pair<int, int>, kRank> kPairs = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
}};

bool disjoint(int i, int j) {
  auto [a, b] = kPairs[i];
  auto [c, d] = kPairs[j];
  return a != c && a != d && b != c && b != d;
}

int shared_count(int i, int j) {
  auto [a, b] = kPairs[i];
  auto [c, d] = kPairs[j];
  return (a == c || a == d) + (b == c || b == d);
}

void check_index(int a) {
  if (a < 0 || a > 4) throw DomainError("index out of range 0..4: " + std::to_string(a));
}

}  // namespace

int pair_index(int a, int b) {
  check_index(a);
  check_index(b);
  if (a == b) throw DomainError("pair needs two distinct indices");
  if (a > b) std::swap(a, b);
  for (int i = 0; i < kRank; ++i)
    if (kPairs[i] == std::pair{a, b}) return i;
  throw DomainError("unreachable pair");
}

std::pair<int, int> pair_at(int index) {
  if (index < 0 || index >= kRank) throw DomainError("pair index out of range");
  return kPairs[index];
}

std::string pair_label(int index) {
  auto [a, b] = pair_at(index);
  return std::to_string(a) + std::to_string(b);
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  for (int i = 0; i < kRank; ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  for (int i = 0; i < kRank; ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

LatticeVector U(int a, int b) {
  LatticeVector v;
  v[pair_index(a, b)] = 1;
  return v;
}

LatticeVector f(int a, int b) {
  const int ab = pair_index(a, b);
  LatticeVector v;
  for (int i = 0; i < kRank; ++i)
    if (shared_count(i, ab) == 1) v[i] = Rational(1, 2);
  return v;
}

LatticeVector alpha(int a, int b) { return f(a, b) - U(a, b); }

LatticeVector nu(int a, int b) {
  const int ab = pair_index(a, b);
  std::vector<int> rest;
  for (int c = 0; c < 5; ++c)
    if (c != a && c != b) rest.push_back(c);
  const int c = rest[0], d = rest[1], e = rest[2];
  LatticeVector v;
  v[ab] = 3;
  v[pair_index(c, d)] = 2;
  v[pair_index(d, e)] = 2;
  v[pair_index(e, c)] = 2;
  v[pair_index(a, e)] = 1;
  v[pair_index(a, c)] = 1;
  v[pair_index(a, d)] = 1;
  return v;
}

LatticeVector delta() {
  LatticeVector v;
  for (int i = 0; i < kRank; ++i) v[i] = 1;
  return v;
}

LatticeVector generator(GeneratorKind kind, std::span<const int> indices) {
  switch (kind) {
    case GeneratorKind::Delta:
      if (!indices.empty()) throw DomainError("delta takes no indices");
      return delta();
    case GeneratorKind::U:
    case GeneratorKind::F:
    case GeneratorKind::Alpha:
    case GeneratorKind::Nu:
      if (indices.size() != 2) throw DomainError("generator needs exactly two indices");
      break;
  }
  const int a = indices[0], b = indices[1];
  switch (kind) {
    case GeneratorKind::U: return U(a, b);
    case GeneratorKind::F: return f(a, b);
    case GeneratorKind::Alpha: return alpha(a, b);
    default: return nu(a, b);
  }
}

LatticeVector root(int index) {
  if (index < 0 || index >= kRootCount) throw DomainError("root index out of range");
  auto [a, b] = kPairs[index % kRank];
  return index < kRank ? U(a, b) : alpha(a, b);
}

std::string root_label(int index) {
  if (index < 0 || index >= kRootCount) throw DomainError("root index out of range");
  return (index < kRank ? "U" : "a") + pair_label(index % kRank);
}

int root_index_from_label(const std::string& label) {
  for (int i = 0; i < kRootCount; ++i)
    if (root_label(i) == label) return i;
  throw DomainError("unknown root label: " + label);
}

const RationalMatrix& u_gram() {
  static const RationalMatrix g = [] {
    RationalMatrix m(kRank, kRank);
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) m(i, j) = i == j ? -2 : (disjoint(i, j) ? 1 : 0);
    return m;
  }();
  return g;
}

Rational inner_product(const LatticeVector& v, const LatticeVector& w) {
  const auto& g = u_gram();
  Rational s = 0;
  for (int i = 0; i < kRank; ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < kRank; ++j)
      if (g(i, j) != 0 && w[j] != 0) row += g(i, j) * w[j];
    s += v[i] * row;
  }
  return s;
}

LatticeVector reflect_in_root(const LatticeVector& r, const LatticeVector& v) {
  if (inner_product(r, r) != -2) throw DomainError("reflection root must have norm -2");
  return v + inner_product(v, r) * r;
}

RationalMatrix gram_matrix(std::span<const LatticeVector> vectors) {
  RationalMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) g(i, j) = g(j, i) = inner_product(vectors[i], vectors[j]);
  return g;
}

namespace {

// Row Hermite normal form over Z; returns the nonzero rows.
std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= q * rows[top][c];
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

const RationalMatrix& basis_inverse_transpose() {
  static const RationalMatrix inv = [] {
    RationalMatrix b(kRank, kRank);
    const auto& basis = integral_basis();
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) b(j, i) = basis[i][j];  // columns are basis vectors
    return *b.inverse();
  }();
  return inv;
}

}  // namespace

const std::array<LatticeVector, kRank>& integral_basis() {
  static const std::array<LatticeVector, kRank> basis = [] {
    std::vector<std::vector<Integer>> rows;
    for (int i = 0; i < kRank; ++i) {
      auto [a, b] = kPairs[i];
      for (const auto& g : {U(a, b), f(a, b)}) {
        std::vector<Integer> row(kRank);
        for (int j = 0; j < kRank; ++j) row[j] = Rational(2 * g[j]).get_num();
        rows.push_back(std::move(row));
      }
    }
    auto h = hermite_rows(std::move(rows));
    if (h.size() != kRank) throw InternalError("generators of the lattice do not have full rank");
    std::array<LatticeVector, kRank> out;
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) {
        out[i][j] = Rational(h[i][j], 2);
        out[i][j].canonicalize();
      }
    return out;
  }();
  return basis;
}

std::optional<std::array<Integer, kRank>> lattice_coordinates(const LatticeVector& v) {
  const auto& inv = basis_inverse_transpose();
  std::array<Integer, kRank> out;
  for (int i = 0; i < kRank; ++i) {
    Rational c = 0;
    for (int j = 0; j < kRank; ++j) c += inv(i, j) * v[j];
    if (!is_integer(c)) return std::nullopt;
    out[i] = c.get_num();
  }
  return out;
}

bool in_lattice(const LatticeVector& v) { return lattice_coordinates(v).has_value(); }

Signature signature(const RationalMatrix& gram) {
  if (!gram.is_symmetric()) throw DomainError("signature needs a symmetric matrix");
  RationalMatrix a = gram;
  std::vector<std::size_t> active(a.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  Signature sig;
  while (!active.empty()) {
    auto pivot = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return a(i, i) != 0; });
    if (pivot == active.end()) {
      // All diagonal entries vanish: replace e_i by e_i + e_j for the first
      // nonzero off-diagonal entry, making the new diagonal 2 a_ij.
      bool found = false;
      for (std::size_t x = 0; x < active.size() && !found; ++x) {
        for (std::size_t y = x + 1; y < active.size() && !found; ++y) {
          const std::size_t i = active[x], j = active[y];
          if (a(i, j) == 0) continue;
          const Rational new_ii = a(i, i) + 2 * a(i, j) + a(j, j);
          for (std::size_t k : active) {
            if (k == i) continue;
            a(i, k) += a(j, k);
            a(k, i) = a(i, k);
          }
          a(i, i) = new_ii;
          found = true;
        }
      }
      if (!found) {
        sig.zero = static_cast<int>(active.size());
        break;
      }
      continue;
    }
    const std::size_t p = *pivot;
    const Rational d = a(p, p);
    (d > 0 ? sig.positive : sig.negative)++;
    active.erase(pivot);
    for (std::size_t j : active) {
      if (a(j, p) == 0) continue;
      const Rational factor = a(j, p) / d;
      for (std::size_t k : active) a(j, k) -= factor * a(p, k);
    }
  }
  return sig;
}

LatticeIsometry::LatticeIsometry(RationalMatrix m) : m_(std::move(m)) {
  if (m_.rows() != kRank || m_.cols() != kRank) throw DomainError("isometry must be 10x10");
}

LatticeIsometry LatticeIsometry::reflection(const LatticeVector& r) {
  RationalMatrix m(kRank, kRank);
  for (int j = 0; j < kRank; ++j) {
    LatticeVector e;
    e[j] = 1;
    LatticeVector img = reflect_in_root(r, e);
    for (int i = 0; i < kRank; ++i) m(i, j) = img[i];
  }
  return LatticeIsometry(std::move(m));
}

LatticeIsometry LatticeIsometry::pair_permutation(std::span<const int> perm) {
  if (perm.size() != 5) throw DomainError("pair permutation needs 5 images");
  RationalMatrix m(kRank, kRank);
  for (int j = 0; j < kRank; ++j) {
    auto [a, b] = kPairs[j];
    m(pair_index(perm[a], perm[b]), j) = 1;
  }
  return LatticeIsometry(std::move(m));
}

LatticeVector LatticeIsometry::apply(const LatticeVector& v) const {
  LatticeVector out;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j)
      if (m_(i, j) != 0 && v[j] != 0) out[i] += m_(i, j) * v[j];
  return out;
}

bool LatticeIsometry::preserves_form() const {
  return m_.transposed() * u_gram() * m_ == u_gram();
}

bool LatticeIsometry::preserves_lattice() const {
  RationalMatrix b(kRank, kRank);
  const auto& basis = integral_basis();
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) b(j, i) = basis[i][j];
  RationalMatrix in_basis = basis_inverse_transpose() * m_ * b;
  if (!in_basis.is_integral()) return false;
  const Rational d = in_basis.determinant();
  return d == 1 || d == -1;
}

}  // namespace tetra::lattice
