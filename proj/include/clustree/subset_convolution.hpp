#pragma once

#include <span>
#include <vector>

#include "clustree/core.hpp"

namespace clustree {

enum class ConvolutionMethod {
  Direct,  // O(3^u) loop over (Y, Z ⊆ Y)
  Ranked,  // ranked zeta / Möbius transform over polynomial counts
};

/// Min-sum subset convolution (f*g)(Y) = min_{Z⊆Y} f(Z) + g(Y∖Z) over a
/// universe of u elements, with every output clamped to cap. f and g hold
/// 2^u values indexed by bit mask and must be non-negative.
std::vector<Cost> subset_convolution_minsum(std::span<const Cost> f, std::span<const Cost> g, int u,
                                            Cost cap,
                                            ConvolutionMethod method = ConvolutionMethod::Direct);

/// Writes the result into out (2^u entries) without allocating for the
/// direct method.
void subset_convolution_minsum(std::span<const Cost> f, std::span<const Cost> g, int u, Cost cap,
                               std::span<Cost> out,
                               ConvolutionMethod method = ConvolutionMethod::Direct);

}  // namespace clustree
