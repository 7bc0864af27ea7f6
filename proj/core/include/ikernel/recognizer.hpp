#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ikernel/image_kernel.hpp"

namespace ikernel {

/// A class template: the per-bit majority of its training kernels.
///
/// Per-bit one-counts are kept alongside the kernel so further samples can be
/// absorbed without revisiting the training set. Templates read back from disk
/// carry no votes (sample_count == 0) and cannot absorb.
struct LabeledTemplate {
  std::string label;
  Kernel kernel;
  std::vector<std::uint32_t> votes_ones;
  std::uint32_t sample_count = 0;

  /// Adds one training kernel and re-thresholds every bit.
  void absorb(const Kernel& sample);
};

/// Strict per-bit majority; exact ties (even counts) give 0.
/// Throws on an empty list, mixed params, or template inputs.
LabeledTemplate average_kernels(std::span<const Kernel> kernels, std::string label);

/// Wraps a stored template kernel (no vote history).
LabeledTemplate make_template(Kernel kernel, std::string label);

struct Classification {
  std::size_t index = 0;  // position in the template list
  std::string label;
  SimilarityResult similarity;
};

/// Template with the highest similarity fraction; the earliest listed wins ties.
Classification classify(const Kernel& probe, std::span<const LabeledTemplate> templates);

}  // namespace ikernel
