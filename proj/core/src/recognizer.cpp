#include "ikernel/recognizer.hpp"

#include "ikernel/error.hpp"

namespace ikernel {
namespace {

void threshold(LabeledTemplate& t) {
  BitVector bits(t.votes_ones.size());
  for (std::size_t i = 0; i < t.votes_ones.size(); ++i) {
    if (std::uint64_t{t.votes_ones[i]} * 2 > t.sample_count) {
      bits.set(i, true);
    }
  }
  t.kernel.bits = std::move(bits);
}

void check_sample(const LabeledTemplate& t, const Kernel& sample) {
  if (sample.is_template) {
    throw InvalidArgument("cannot average a template kernel");
  }
  if (sample.params != t.kernel.params || sample.bits.size() != t.votes_ones.size()) {
    throw IncomparableError("incomparable kernels");
  }
}

void tally(LabeledTemplate& t, const Kernel& sample) {
  for (std::size_t i = 0; i < t.votes_ones.size(); ++i) {
    t.votes_ones[i] += sample.bits.get(i) ? 1U : 0U;
  }
  ++t.sample_count;
}

}  // namespace

void LabeledTemplate::absorb(const Kernel& sample) {
  if (sample_count == 0) {
    throw InvalidArgument("template has no vote history to extend");
  }
  check_sample(*this, sample);
  tally(*this, sample);
  threshold(*this);
}

LabeledTemplate average_kernels(std::span<const Kernel> kernels, std::string label) {
  if (kernels.empty()) {
    throw InvalidArgument("cannot average an empty kernel list");
  }
  LabeledTemplate t;
  t.label = std::move(label);
  t.kernel.params = kernels.front().params;
  t.kernel.is_template = true;
  t.votes_ones.assign(kernels.front().bits.size(), 0);
  for (const Kernel& k : kernels) {
    check_sample(t, k);
    tally(t, k);
  }
  threshold(t);
  return t;
}

LabeledTemplate make_template(Kernel kernel, std::string label) {
  kernel.is_template = true;
  return LabeledTemplate{std::move(label), std::move(kernel), {}, 0};
}

Classification classify(const Kernel& probe, std::span<const LabeledTemplate> templates) {
  if (templates.empty()) {
    throw InvalidArgument("no templates to classify against");
  }
  Classification best;
  bool have_best = false;
  for (std::size_t i = 0; i < templates.size(); ++i) {
    const SimilarityResult s = similarity(probe, templates[i].kernel);
    // Same k everywhere, so comparing match counts compares fractions exactly.
    if (!have_best || s.matches > best.similarity.matches) {
      best = {i, templates[i].label, s};
      have_best = true;
    }
  }
  return best;
}

}  // namespace ikernel
