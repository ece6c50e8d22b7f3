#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "dehnkit/builders.hpp"
#include "dehnkit/invariants.hpp"
#include "dehnkit/presentation.hpp"

namespace fixtures {

inline const std::string kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline const std::string kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
inline const std::string kFigureEightSpecial = "X[3,6,5,1] X[1,5,4,2] X[9,10,3,2] X[4,6,8,7] X[10,9,7,8]";
inline const std::string kKink = "X[1,2,2,1]";
inline const std::string kHopf = "X[1,3,2,4] X[3,1,4,2]";
inline const std::string kBorromean = "X[3,7,9,1] X[1,10,12,2] X[4,8,7,5] X[11,4,6,12] X[8,11,10,9] X[2,6,5,3]";
inline const std::string kSplitSix = "O X[1,3,2,4] X[3,1,4,2] X[5,7,6,8] X[7,5,8,6] O IN(1,0) IN(2,3) IN(3,5)";
inline constexpr int kSplitSixOuter = 7;

// Reduced Goeritz matrix straight from the crossing-sum definition, read off
// the unshaded corners of each crossing.
inline dehnkit::IntMatrix goeritz_oracle(const dehnkit::Shading& s) {
  const int n = s.n();
  dehnkit::IntMatrix full(n + 1, n + 1, 0);
  for (int c = 0; c < s.num_crossings(); ++c) {
    std::vector<int> unshaded;
    for (int k = 0; k < 4; ++k) {
      int r = s.region_at({c, k});
      if (!s.is_shaded(r)) unshaded.push_back(r);
    }
    if (unshaded.size() != 2 || unshaded[0] == unshaded[1]) continue;
    const int a = unshaded[0], b = unshaded[1], eta = s.eta(c);
    full(a, b) -= eta;
    full(b, a) -= eta;
    full(a, a) += eta;
    full(b, b) += eta;
  }
  dehnkit::IntMatrix g(n, n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = full(i + 1, j + 1);
  return g;
}

// True if b = P a P^T for some permutation P (brute force, small n).
inline bool permutation_equivalent(const dehnkit::IntMatrix& a, const dehnkit::IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) return false;
  std::vector<int> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.rows() && ok; ++i)
      for (std::size_t j = 0; j < a.cols() && ok; ++j) ok = a(p[i], p[j]) == b(i, j);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Rank over Q by fraction-free elimination.
inline int rank(dehnkit::IntMatrix m) {
  int r = 0;
  for (std::size_t c = 0; c < m.cols() && r < static_cast<int>(m.rows()); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      dehnkit::Integer f = m(i, c), p = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * p - m(r, j) * f;
    }
    ++r;
  }
  return r;
}

// Exponent-sum matrix of a presentation (relators x generators).
inline dehnkit::IntMatrix abelianized(const dehnkit::Presentation& p) {
  dehnkit::IntMatrix m(p.num_relators(), p.num_generators(), 0);
  for (std::size_t i = 0; i < p.num_relators(); ++i) {
    auto sums = p.relators[i].word.exponent_sums(p.num_generators());
    for (std::size_t j = 0; j < sums.size(); ++j) m(i, j) = static_cast<long>(sums[j]);
  }
  return m;
}

// Relabel PD edge labels by label -> perm[label - 1] + 1.
inline std::string relabel_pd(const dehnkit::LinkDiagram& d, const std::vector<int>& perm) {
  std::string out;
  for (const auto& x : d.crossings()) {
    out += "X[";
    for (int k = 0; k < 4; ++k) out += std::to_string(perm[x[k]] + 1) + (k < 3 ? "," : "]");
    out += ' ';
  }
  return out;
}

// 2-colouring of a bipartite plane graph.
inline std::vector<int> bipartition(const dehnkit::PlaneGraph& g) {
  std::vector<int> part(g.num_vertices(), -1);
  part[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int d = 0; d < 2 * g.num_edges(); ++d) {
      int a = g.origin(d), b = g.origin(d ^ 1);
      if (part[a] >= 0 && part[b] < 0) {
        part[b] = 1 - part[a];
        changed = true;
      }
    }
  }
  return part;
}

}  // namespace fixtures
