#include "tetra/quaternion.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <set>

namespace tetra::quat {

Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
Quaternion operator*(const Rational& s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
  };
}

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw DomainError("zero quaternion has no inverse");
  Rational n = norm();
  return Rational(1) / n * conjugate();
}

bool Quaternion::is_hurwitz() const {
  const std::array<Rational, 4> c = {w, x, y, z};
  bool all_int = std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integer(q); });
  bool all_half = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q.get_den() == 2; });
  return all_int || all_half;
}

std::string to_string(const Quaternion& q) {
  return tetra::to_string(q.w) + " + " + tetra::to_string(q.x) + "i + " + tetra::to_string(q.y) + "j + " +
         tetra::to_string(q.z) + "k";
}

Rotation3::Rotation3() {
  for (int i = 0; i < 3; ++i) m_[i][i] = 1;
}

Rational Rotation3::determinant() const {
  return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) - m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
         m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

Rotation3 Rotation3::transposed() const {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m_[j][i];
  return Rotation3(t);
}

bool Rotation3::is_orthogonal() const { return transposed() * *this == Rotation3(); }

Vec3 Rotation3::apply(const Vec3& v) const {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2];
  return r;
}

Rotation3 operator*(const Rotation3& a, const Rotation3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j] + a.m_[i][2] * b.m_[2][j];
  return Rotation3(r);
}

Rotation3 operator-(const Rotation3& a) {
  Mat3 r = a.m_;
  for (auto& row : r)
    for (auto& e : row) e = -e;
  return Rotation3(r);
}

Rotation3 conjugation_rotation(const Quaternion& q) {
  if (q.is_zero()) throw DomainError("zero quaternion has no conjugation action");
  const Rational n = q.norm();
  const auto& [w, x, y, z] = q;
  Mat3 m = {{
      {w * w + x * x - y * y - z * z, 2 * (x * y - w * z), 2 * (x * z + w * y)},
      {2 * (x * y + w * z), w * w - x * x + y * y - z * z, 2 * (y * z - w * x)},
      {2 * (x * z - w * y), 2 * (y * z + w * x), w * w - x * x - y * y + z * z},
  }};
  for (auto& row : m)
    for (auto& e : row) e /= n;
  return Rotation3(m);
}

std::vector<Rotation3> closure(const std::vector<Rotation3>& generators, std::size_t cap) {
  std::set<Rotation3> seen{Rotation3()};
  std::vector<Rotation3> order{Rotation3()};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& g : generators) {
      Rotation3 h = order[i] * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw CapExceeded("closure exceeded cap of " + std::to_string(cap));
        order.push_back(h);
      }
    }
  return order;
}

std::vector<Quaternion> binary_tetrahedral() {
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

const std::array<Vec3, 4>& tetrahedron_vertices() {
  static const std::array<Vec3, 4> v = {{
      {1, 1, 1},
      {1, -1, -1},
      {-1, 1, -1},
      {-1, -1, 1},
  }};
  return v;
}

namespace {

Quaternion normalised(Quaternion q) {
  for (const Rational* c : {&q.w, &q.x, &q.y, &q.z}) {
    if (*c == 0) continue;
    return *c > 0 ? q : -q;
  }
  return q;
}

Quaternion pure(const Vec3& v) { return {0, v[0], v[1], v[2]}; }

}  // namespace

Quaternion gbar(int a, int b) {
  if (a < 0 || a > 4 || b < 0 || b > 4 || a == b) throw DomainError("gbar needs two distinct indices in 0..4");
  if (a > b) std::swap(a, b);
  const auto& d = tetrahedron_vertices();
  if (b == 4) return normalised(pure(d[a]));
  Vec3 axis;
  for (int i = 0; i < 3; ++i) axis[i] = (d[a][i] - d[b][i]) / 2;
  return normalised(pure(axis));
}

std::map<std::string, Quaternion> gbar_assignment() {
  std::map<std::string, Quaternion> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) out["g" + std::to_string(a) + std::to_string(b)] = gbar(a, b);
  return out;
}

Quaternion perm_quaternion(const group::Perm4& sigma) {
  if (!group::is_permutation(sigma)) throw DomainError("not a permutation of 0..3");
  Quaternion q = Quaternion::real(1);
  group::Perm4 s = sigma;
  for (int i = 0; i < 4; ++i) {
    if (s[i] == i) continue;
    int j = s[i];
    q = q * gbar(i, j);
    group::Perm4 t = group::kIdentityPerm;
    std::swap(t[i], t[j]);
    s = group::compose(t, s);
  }
  return q;
}

Quaternion word_quaternion(const group::GroupWord& w) {
  Quaternion q = Quaternion::real(1);
  for (int a : w.free_part) q = q * gbar(a, 4);
  return q * perm_quaternion(w.perm);
}

bool verify_equivariance() {
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      group::Perm4 t = group::kIdentityPerm;
      std::swap(t[a], t[b]);
      const Rotation3 r = conjugation_rotation(gbar(a, b));
      const std::array<int, 5> t5 = {t[0], t[1], t[2], t[3], 4};
      for (int c = 0; c < 5; ++c)
        for (int d = c + 1; d < 5; ++d) {
          Rotation3 lhs = r * conjugation_rotation(gbar(c, d)) * r.transposed();
          if (lhs != conjugation_rotation(gbar(t5[c], t5[d]))) return false;
        }
    }
  return true;
}

bool verify_centralizer() {
  Rotation3 g04 = conjugation_rotation(gbar(0, 4));
  Rotation3 c = conjugation_rotation(gbar(1, 2)) * conjugation_rotation(gbar(2, 3));
  return g04 * c == c * g04 && c * c * c == Rotation3() && c != Rotation3();
}

Rotation3 facet_reflection(int a) {
  if (a < 0 || a > 3) throw DomainError("facet index out of range 0..3");
  return -conjugation_rotation(gbar(a, 4));
}

std::optional<group::Perm4> diagonal_permutation(const Rotation3& r) {
  const auto& d = tetrahedron_vertices();
  group::Perm4 p{};
  for (int a = 0; a < 4; ++a) {
    Vec3 img = r.apply(d[a]);
    int found = -1;
    for (int b = 0; b < 4 && found < 0; ++b) {
      Vec3 neg = {-d[b][0], -d[b][1], -d[b][2]};
      if (img == d[b] || img == neg) found = b;
    }
    if (found < 0) return std::nullopt;
    p[a] = found;
  }
  if (!group::is_permutation(p)) return std::nullopt;
  return p;
}

}  // namespace tetra::quat
