#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace clustree {

using Vertex = std::int32_t;
using Weight = std::int64_t;
using Cost = std::int64_t;

/// Saturation value for every cost computation. Larger than any cost an
/// instance that fits in memory can produce, small enough that adding two
/// of them does not overflow.
inline constexpr Cost kInfinity = std::numeric_limits<Cost>::max() / 4;

constexpr Cost sat_add(Cost a, Cost b) {
  const Cost s = a + b;
  return s >= kInfinity ? kInfinity : s;
}

constexpr Cost sat_mul(Cost a, Cost b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kInfinity || b >= kInfinity) return kInfinity;
  if (a > kInfinity / b) return kInfinity;
  return a * b;
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Error hierarchy. The CLI maps each class onto an exit code.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a request that does not apply to the given instance.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The instance admits no clustered spanning tree.
class InfeasibleInstance : public Error {
 public:
  InfeasibleInstance() : Error("infeasible instance") {}
  explicit InfeasibleInstance(const std::string& what) : Error("infeasible instance: " + what) {}
};

/// An enumeration or table size exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class GraphDisconnected : public Error {
 public:
  GraphDisconnected() : Error("graph disconnected") {}
};

}  // namespace clustree
