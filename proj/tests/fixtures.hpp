#pragma once

#include "clustree/instance.hpp"

namespace fixtures {

using clustree::ClusteredInstance;

// Two unit triangles {0,1,2}, {3,4,5} joined by (2,3).
inline ClusteredInstance p6() {
  ClusteredInstance inst;
  inst.n = 6;
  inst.edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}};
  inst.clusters = {{0, 1, 2}, {3, 4, 5}};
  inst.source = 0;
  return inst;
}

inline ClusteredInstance path4() {
  ClusteredInstance inst;
  inst.n = 4;
  inst.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  inst.clusters = {{0, 1}, {2, 3}};
  inst.source = 0;
  return inst;
}

inline ClusteredInstance singletons(ClusteredInstance inst) {
  inst.clusters.clear();
  for (int v = 0; v < inst.n; ++v) inst.clusters.push_back({v});
  return inst;
}

inline ClusteredInstance triangle() {
  ClusteredInstance inst;
  inst.n = 3;
  inst.edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
  inst.clusters = {{0}, {1}, {2}};
  return inst;
}

}  // namespace fixtures
