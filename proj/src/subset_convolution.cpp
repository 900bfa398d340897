#include "clustree/subset_convolution.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace clustree {

namespace {

void check_sizes(std::span<const Cost> f, std::span<const Cost> g, int u, std::span<Cost> out) {
  if (u < 0 || u > 30) throw InvalidInput("subset convolution universe size out of range");
  const std::size_t size = std::size_t{1} << u;
  if (f.size() != size || g.size() != size || out.size() != size)
    throw InvalidInput("subset convolution expects 2^u values per function");
}

void direct(std::span<const Cost> f, std::span<const Cost> g, int u, Cost cap, std::span<Cost> out) {
  const std::uint32_t full = (std::uint32_t{1} << u) - 1;
  for (std::uint32_t y = 0; y <= full; ++y) {
    Cost best = cap;
    for (std::uint32_t z = y;; z = (z - 1) & y) {
      best = std::min(best, f[z] + g[y ^ z]);
      if (z == 0) break;
    }
    out[y] = best;
  }
}

// Each value a is encoded as the monomial x^a; coefficients count how many
// splits reach a given sum. Counts never exceed 3^u, so wrapping unsigned
// arithmetic is exact for u <= 40 and a zero coefficient really is zero.
void ranked(std::span<const Cost> f, std::span<const Cost> g, int u, Cost cap, std::span<Cost> out) {
  const std::size_t size = std::size_t{1} << u;
  const std::size_t ranks = static_cast<std::size_t>(u) + 1;
  const auto in_deg = static_cast<std::size_t>(cap) + 1;
  const std::size_t out_deg = 2 * static_cast<std::size_t>(cap) + 1;
  if (ranks * size * out_deg > (std::size_t{1} << 25))
    throw BudgetExceeded("ranked convolution table too large (u=" + std::to_string(u) +
                         ", cap=" + std::to_string(cap) + ")");

  for (std::size_t x = 0; x < size; ++x)
    if (f[x] < 0 || g[x] < 0) throw InvalidInput("ranked convolution needs non-negative values");

  using Count = std::uint64_t;
  auto zeta = [&](std::span<const Cost> h) {
    std::vector<Count> t(ranks * size * in_deg, 0);
    for (std::size_t x = 0; x < size; ++x) {
      const auto r = static_cast<std::size_t>(std::popcount(x));
      const auto e = static_cast<std::size_t>(std::min(h[x], cap));
      t[(r * size + x) * in_deg + e] += 1;
    }
    for (std::size_t r = 0; r < ranks; ++r)
      for (std::size_t bit = 1; bit < size; bit <<= 1)
        for (std::size_t x = 0; x < size; ++x)
          if (x & bit) {
            Count* dst = &t[(r * size + x) * in_deg];
            const Count* src = &t[(r * size + (x ^ bit)) * in_deg];
            for (std::size_t e = 0; e < in_deg; ++e) dst[e] += src[e];
          }
    return t;
  };
  const std::vector<Count> fz = zeta(f);
  const std::vector<Count> gz = zeta(g);

  std::vector<Count> h(ranks * size * out_deg, 0);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t r = 0; r < ranks; ++r) {
      Count* dst = &h[(r * size + x) * out_deg];
      for (std::size_t j = 0; j <= r; ++j) {
        const Count* a = &fz[(j * size + x) * in_deg];
        const Count* b = &gz[((r - j) * size + x) * in_deg];
        for (std::size_t p = 0; p < in_deg; ++p) {
          if (a[p] == 0) continue;
          for (std::size_t q = 0; q < in_deg; ++q) dst[p + q] += a[p] * b[q];
        }
      }
    }
  for (std::size_t r = 0; r < ranks; ++r)
    for (std::size_t bit = 1; bit < size; bit <<= 1)
      for (std::size_t x = 0; x < size; ++x)
        if (x & bit) {
          Count* dst = &h[(r * size + x) * out_deg];
          const Count* src = &h[(r * size + (x ^ bit)) * out_deg];
          for (std::size_t e = 0; e < out_deg; ++e) dst[e] -= src[e];
        }

  for (std::size_t y = 0; y < size; ++y) {
    const auto r = static_cast<std::size_t>(std::popcount(y));
    const Count* poly = &h[(r * size + y) * out_deg];
    Cost best = cap;
    for (std::size_t e = 0; e < out_deg; ++e)
      if (poly[e] != 0) {
        best = std::min(static_cast<Cost>(e), cap);
        break;
      }
    out[y] = best;
  }
}

}  // namespace

void subset_convolution_minsum(std::span<const Cost> f, std::span<const Cost> g, int u, Cost cap,
                               std::span<Cost> out, ConvolutionMethod method) {
  check_sizes(f, g, u, out);
  if (cap < 0) throw InvalidInput("subset convolution cap must be non-negative");
  if (method == ConvolutionMethod::Direct)
    direct(f, g, u, cap, out);
  else
    ranked(f, g, u, cap, out);
}

std::vector<Cost> subset_convolution_minsum(std::span<const Cost> f, std::span<const Cost> g, int u,
                                            Cost cap, ConvolutionMethod method) {
  std::vector<Cost> out(f.size());
  subset_convolution_minsum(f, g, u, cap, out, method);
  return out;
}

}  // namespace clustree
