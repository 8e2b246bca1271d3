#pragma once

#include <map>
#include <utility>

#include <catch2/catch_amalgamated.hpp>

#include "qsc/qsc.hpp"

namespace testutil {

// Presentations are pure functions of (p, l); cache them across test cases
// so each binary builds every group at most once.
inline const qsc::Presentation& gamma(long p, long l) {
  static std::map<std::pair<long, long>, qsc::Presentation> cache;
  auto it = cache.find({p, l});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(p, l),
                       qsc::build_squares(qsc::Int(p), qsc::Int(l)))
             .first;
  }
  return it->second;
}

inline qsc::GroupElement cls(long a, long b, long c, long d) {
  return qsc::reduce_canonical(qsc::Quaternion(a, b, c, d));
}

}  // namespace testutil
