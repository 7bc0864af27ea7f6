#pragma once

#include <string>

#include "ikernel/similarity.hpp"

namespace ikernel {

/// matches / total as a percentage with exactly three decimals, rounded half
/// away from zero using exact integer arithmetic ("89.017").
std::string format_percent(const SimilarityResult& s);

/// "matches=<n> total=<k> percent=<p>"
std::string format_similarity(const SimilarityResult& s);

}  // namespace ikernel
