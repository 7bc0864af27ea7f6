#include "ikernel/format.hpp"

#include <cstdio>

namespace ikernel {

std::string format_percent(const SimilarityResult& s) {
  if (s.total == 0) {
    return "0.000";
  }
  // Thousandths of a percent: round(matches * 100000 / total), ties away from 0.
  __extension__ typedef unsigned __int128 Wide;
  const Wide scaled = (Wide{s.matches} * 200000U + s.total) / (Wide{s.total} * 2U);
  const auto milli = static_cast<unsigned long long>(scaled);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%03llu", milli / 1000, milli % 1000);
  return buf;
}

std::string format_similarity(const SimilarityResult& s) {
  return "matches=" + std::to_string(s.matches) + " total=" + std::to_string(s.total) +
         " percent=" + format_percent(s);
}

}  // namespace ikernel
