#include "flagrank/rootsystem.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>

namespace flagrank {

bool valid_simple_type(const SimpleType& t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  switch (t.family) {
    case 'A':
      if (t.rank < 1) return fail("A_l requires l >= 1");
      return true;
    case 'B':
      if (t.rank < 2) return fail("B_l requires l >= 2");
      return true;
    case 'C':
      if (t.rank < 2) return fail("C_l requires l >= 2");
      return true;
    case 'D':
      if (t.rank < 3) return fail("D_l requires l >= 3");
      return true;
    case 'E':
      if (t.rank < 6 || t.rank > 8) return fail("E_l requires l in {6,7,8}");
      return true;
    case 'F':
      if (t.rank != 4) return fail("F_l requires l = 4");
      return true;
    case 'G':
      if (t.rank != 2) return fail("G_l requires l = 2");
      return true;
    default:
      return fail(std::string("unknown family '") + t.family + "'");
  }
}

std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
  std::string why;
  if (!valid_simple_type(t, &why)) throw std::invalid_argument(why);
  const int l = t.rank;
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i][j] = c[j][i] = -1; };  // 0-based
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      c[l - 2][l - 1] = -2;  // alpha_l is short
      break;
    case 'C':
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      c[l - 1][l - 2] = -2;  // alpha_l is long
      break;
    case 'D':
      for (int i = 0; i + 1 < l - 1; ++i) bond(i, i + 1);
      bond(l - 3, l - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1);
      bond(2, 3);
      c[1][2] = -2;  // alpha_1, alpha_2 long
      c[2][1] = -1;
      break;
    case 'G':
      c[0][1] = -1;  // alpha_1 short, as in Humphreys
      c[1][0] = -3;
      break;
  }
  return c;
}

int RootSystem::positive_index(const RootCoords& r) const {
  auto it = index_.find(r);
  if (it != index_.end()) return it->second;
  RootCoords neg(r);
  for (int& x : neg) x = -x;
  it = index_.find(neg);
  if (it != index_.end()) return it->second;
  return -1;
}

bool RootSystem::is_root(const RootCoords& r) const { return positive_index(r) >= 0; }

int RootSystem::height(const RootCoords& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

int RootSystem::pairing_with_simple_coroot(const RootCoords& r, int i) const {
  int p = 0;
  for (int j = 0; j < rank(); ++j) p += r[j] * cartan[j][i];
  return p;
}

Rat RootSystem::length2(const RootCoords& r) const {
  Rat v = 0;
  for (int i = 0; i < rank(); ++i) {
    if (r[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (r[j] == 0 || cartan[i][j] == 0) continue;
      v += Rat(r[i]) * r[j] * cartan[i][j] * simple_len2[j] / 2;
    }
  }
  return v;
}

std::vector<int> RootSystem::minus_w0_involution() const {
  const int l = rank();
  // Drive 2*rho to the antidominant chamber, recording the reflection word.
  RootCoords v(l, 0);
  for (const auto& r : positive_roots)
    for (int i = 0; i < l; ++i) v[i] += r[i];
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < l; ++i) {
      int p = pairing_with_simple_coroot(v, i);
      if (p > 0) {
        for (int j = 0; j < l; ++j) v[j] -= (i == j) ? p : 0;
        word.push_back(i);
        moved = true;
        break;
      }
    }
  }
  std::vector<int> sigma(l, -1);
  for (int j = 0; j < l; ++j) {
    RootCoords u(l, 0);
    u[j] = 1;
    for (int i : word) {
      int p = pairing_with_simple_coroot(u, i);
      u[i] -= p;
    }
    for (int& x : u) x = -x;  // -w0(alpha_j)
    for (int k = 0; k < l; ++k) {
      RootCoords simple(l, 0);
      simple[k] = 1;
      if (u == simple) {
        sigma[j] = k;
        break;
      }
    }
    if (sigma[j] < 0) throw std::logic_error("minus_w0: image is not a simple root");
  }
  return sigma;
}

std::vector<int> RootSystem::i_degree(const RootCoords& r, const std::vector<int>& I) const {
  if (!is_root(r)) throw std::invalid_argument("i_degree: not a root");
  std::vector<int> d;
  d.reserve(I.size());
  for (int i : I) {
    if (i < 1 || i > rank()) throw std::out_of_range("i_degree: simple index out of range");
    d.push_back(std::abs(r[i - 1]));
  }
  return d;
}

RootSystem build_root_system(const SimpleType& t) {
  std::string why;
  if (!valid_simple_type(t, &why)) throw std::invalid_argument(why);
  RootSystem rs;
  rs.type = t;
  rs.cartan = cartan_matrix(t);
  const int l = t.rank;

  // Root lengths from the Cartan matrix, short roots normalized to 2.
  rs.simple_len2.assign(l, Rat(0));
  rs.simple_len2[0] = 2;
  std::queue<int> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop();
    for (int j = 0; j < l; ++j) {
      if (i == j || rs.cartan[i][j] == 0 || rs.simple_len2[j] != 0) continue;
      rs.simple_len2[j] = rs.simple_len2[i] * rs.cartan[j][i] / rs.cartan[i][j];
      bfs.push(j);
    }
  }
  Rat mn = rs.simple_len2[0];
  for (const Rat& v : rs.simple_len2) mn = std::min(mn, v);
  for (Rat& v : rs.simple_len2) v = v * 2 / mn;

  // Closure over root strings, height by height.
  std::map<RootCoords, int> seen;
  std::vector<RootCoords> roots;
  for (int i = 0; i < l; ++i) {
    RootCoords r(l, 0);
    r[i] = 1;
    seen[r] = 1;
    roots.push_back(r);
  }
  std::size_t head = 0;
  while (head < roots.size()) {
    RootCoords r = roots[head++];
    for (int i = 0; i < l; ++i) {
      int p = 0;
      RootCoords down(r);
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < l; ++j) pairing += r[j] * rs.cartan[j][i];
      if (p - pairing >= 1) {
        RootCoords up(r);
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = 1;
          roots.push_back(up);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootCoords& a, const RootCoords& b) {
    int ha = RootSystem::height(a), hb = RootSystem::height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.positive_roots = roots;
  for (std::size_t k = 0; k < roots.size(); ++k) rs.index_[roots[k]] = static_cast<int>(k);
  rs.len2.reserve(roots.size());
  for (const auto& r : roots) rs.len2.push_back(rs.length2(r));
  return rs;
}

}  // namespace flagrank
