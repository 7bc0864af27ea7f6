#pragma once

#include <cstdint>

namespace ikernel {

/// Agreement count between two equally long kernels.
struct SimilarityResult {
  std::uint64_t matches = 0;
  std::uint64_t total = 0;

  double fraction() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(matches) / static_cast<double>(total);
  }

  friend bool operator==(const SimilarityResult&, const SimilarityResult&) = default;
};

}  // namespace ikernel
