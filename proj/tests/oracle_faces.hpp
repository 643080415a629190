#pragma once

// LP-free face oracle for tiny polytopes: enumerate facet hyperplanes
// through d-point subsets of the signed vertices and decide face-ness
// from facet incidences. Shares no code path with the simplex-based
// implementation it checks.

#include <algorithm>
#include <set>
#include <vector>

#include "csn/configuration.hpp"

namespace csn::testing {

class FaceOracle {
 public:
  explicit FaceOracle(const CsConfiguration& c) : dim_(c.dim()) {
    for (int i = 0; i < c.count(); ++i) {
      points_.push_back(c.vector(i));
      points_.push_back(scale(c.vector(i), Rat(-1)));
    }
    enumerate_facets();
  }

  // s expressed over signed-point indices: index i, sign +1 → 2i,
  // sign −1 → 2i+1.
  static std::set<int> to_point_set(const SignedSubset& s) {
    std::set<int> pts;
    for (int k = 0; k < s.size(); ++k)
      pts.insert(2 * s.index(k) + (s.sign(k) > 0 ? 0 : 1));
    return pts;
  }

  bool is_face(const SignedSubset& s) const {
    std::set<int> want = to_point_set(s);
    bool found_any = false;
    std::set<int> meet;
    for (const auto& facet : facets_) {
      if (!std::includes(facet.begin(), facet.end(), want.begin(), want.end()))
        continue;
      if (!found_any) {
        meet = facet;
        found_any = true;
      } else {
        std::set<int> next;
        std::set_intersection(facet.begin(), facet.end(), meet.begin(), meet.end(),
                              std::inserter(next, next.begin()));
        meet = std::move(next);
      }
    }
    return found_any && meet == want;
  }

  int facet_count() const { return int(facets_.size()); }

 private:
  void enumerate_facets() {
    int npts = int(points_.size());
    std::vector<int> idx(dim_);
    for (int i = 0; i < dim_; ++i) idx[i] = i;
    std::set<std::set<int>> seen;
    for (;;) {
      consider(idx, seen);
      int pos = dim_ - 1;
      while (pos >= 0 && idx[pos] == npts - dim_ + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int q = pos + 1; q < dim_; ++q) idx[q] = idx[q - 1] + 1;
    }
    facets_.assign(seen.begin(), seen.end());
  }

  void consider(const std::vector<int>& idx, std::set<std::set<int>>& seen) {
    // Hyperplane ⟨a,x⟩ = b through the chosen points: kernel of the
    // d×(d+1) system over (a, b).
    Matrix sys(dim_, dim_ + 1);
    for (int r = 0; r < dim_; ++r) {
      for (int j = 0; j < dim_; ++j) sys.at(r, j) = points_[idx[r]][j];
      sys.at(r, dim_) = Rat(-1);
    }
    Matrix ker = kernel_columns(sys);
    if (ker.cols() != 1) return;
    Vec ab = ker.col(0);
    Vec a(ab.begin(), ab.begin() + dim_);
    if (is_zero(a)) return;
    Rat b = ab[dim_];

    int npts = int(points_.size());
    bool all_le = true, all_ge = true;
    for (int p = 0; p < npts; ++p) {
      int cmp = (dot(a, points_[p]) - b).sign();
      if (cmp > 0) all_le = false;
      if (cmp < 0) all_ge = false;
    }
    if (!all_le && !all_ge) return;
    if (all_ge) {
      a = scale(a, Rat(-1));
      b = -b;
    }
    std::set<int> on;
    for (int p = 0; p < npts; ++p)
      if (dot(a, points_[p]) == b) on.insert(p);
    seen.insert(std::move(on));
  }

  int dim_;
  std::vector<Vec> points_;
  std::vector<std::set<int>> facets_;
};

}  // namespace csn::testing
