// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ikernel/format.hpp"
#include "ikernel/image_kernel.hpp"
#include "ikernel/kernel_io.hpp"
#include "ikernel/netpbm.hpp"
#include "ikernel/oracle.hpp"
#include "ikernel/recognizer.hpp"
#include "ikernel/transforms.hpp"
#include "test_support.hpp"

namespace {

using namespace ikernel;
using ikernel::testing::random_image;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kBits = 60000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // <= 0: no runtime bound
  std::function<Outcome()> run;
};

std::uint32_t plane_variant(const Image& plane) {
  std::uint32_t v = 0;
  for (const Sample s : plane.samples()) {
    v = (v << 1) | s;
  }
  return v;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::uint64_t fnv1a(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const auto b : bytes) {
    h = (h ^ b) * 0x100000001B3ULL;
  }
  return h;
}

std::string pct(const SimilarityResult& s) { return format_percent(s) + "%"; }

Outcome fig1_reproduction() {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"oracle", "kernel", "001"}, out, err);
  const bool ok = code == 0 && out.str() == "11010100\n";
  return {ok, "oracle kernel 001 -> " + out.str().substr(0, 8)};
}

Outcome oracle_sampled_equivalence() {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::uint32_t>(8 + trial % 9);
    const Image img = random_image(n, 1, 1, 1, 1000 + trial);
    const auto params = KernelParams::for_image(img, 2000, 0);
    const Kernel k = build_kernel(img, params);
    const BitVector exact = oracle::exact_kernel(oracle::BitString(n, plane_variant(img)));
    for (std::uint64_t i = 0; i < params.bits; ++i) {
      ++checked;
      if (k.bits[i] != exact[plane_variant(generate_plane(params, i))]) {
        ++mismatches;
      }
    }
  }
  return {checked == 40000 && mismatches == 0,
          std::to_string(checked) + " bits checked, " + std::to_string(mismatches) +
              " mismatches"};
}

Outcome bit_count_law() {
  std::uint64_t strings = 0;
  for (unsigned n = 3; n <= 10; ++n) {
    std::uint64_t expected = 0;
    for (unsigned d = 0; 2 * d < n; ++d) {
      expected += binomial(n, d);
    }
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      ++strings;
      const auto got = oracle::exact_kernel(oracle::BitString(n, s)).count();
      if (got != expected) {
        return {false, "n=" + std::to_string(n) + " s=" + std::to_string(s) + " popcount " +
                           std::to_string(got) + " != " + std::to_string(expected)};
      }
    }
  }
  return {true, std::to_string(strings) + " strings, n=3..10"};
}

Outcome self_and_complement() {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Image img = random_image(16, 16, seed % 2 == 0 ? 1 : 3, 255, seed);
    const Kernel k = build_kernel(img, KernelParams::for_image(img, 4096, seed));
    if (format_percent(similarity(k, k)) != "100.000") {
      return {false, "self-similarity below 100% for seed " + std::to_string(seed)};
    }
  }
  std::uint64_t pairs = 0;
  for (const unsigned n : {3U, 5U, 7U}) {
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      const oracle::BitString str(n, s);
      ++pairs;
      if (oracle::exact_similarity(str, str.complement()).matches != 0) {
        return {false, "complement agreement at n=" + std::to_string(n)};
      }
    }
  }
  return {true, "self 100.000% on 5 kernels; delta(s, ~s)=0 for " + std::to_string(pairs) +
                    " odd-n strings"};
}

Outcome chance_level() {
  const Image a = random_image(64, 64, 1, 255, 501);
  const Image b = random_image(64, 64, 1, 255, 502);
  const auto params = KernelParams::for_image(a, kBits, 0);
  const auto s = similarity(build_kernel(a, params), build_kernel(b, params));
  const double f = s.fraction();
  return {f >= 0.485 && f <= 0.515, "similarity " + pct(s) + " (bound 50% +/- 1.5%)"};
}

Outcome inversion() {
  const Image img = random_image(64, 64, 1, 255, 601);
  const Image inv = invert_image(img);
  const auto params = KernelParams::for_image(img, kBits, 0);
  const auto s = similarity(build_kernel(img, params), build_kernel(inv, params));
  std::uint64_t ties = 0;
  for (const auto& d : kernel_deviations(img, params)) {
    ties += d.tie() ? 1 : 0;
  }
  const bool ok = s.fraction() <= 0.001 && ties == 0;
  return {ok, "similarity " + pct(s) + " (bound 0.1%), deviation ties " + std::to_string(ties) +
                  " (required 0)"};
}

Outcome recognition() {
  const Image base[2] = {random_image(64, 64, 1, 255, 701), random_image(64, 64, 1, 255, 702)};
  const std::string labels[2] = {"first", "second"};
  const auto params = KernelParams::for_image(base[0], kBits, 0);
  std::vector<LabeledTemplate> templates;
  std::vector<std::pair<std::size_t, Kernel>> probes;
  for (std::size_t c = 0; c < 2; ++c) {
    std::vector<Kernel> training;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Kernel k = build_kernel(add_noise(base[c], 20, seed), params);
      if (seed <= 5) {
        training.push_back(std::move(k));
      } else {
        probes.emplace_back(c, std::move(k));
      }
    }
    templates.push_back(average_kernels(training, labels[c]));
  }
  int correct = 0;
  for (const auto& [c, k] : probes) {
    correct += classify(k, templates).label == labels[c] ? 1 : 0;
  }
  return {correct >= 9, std::to_string(correct) + "/10 held-out variants correct"};
}

Outcome robustness() {
  const Image img = read_image(ikernel::testing::data_path("astronaut64.pgm"));
  const auto params = KernelParams::for_image(img, kBits, 0);
  std::vector<TransformSpec> suite = default_suite(img.channels(), 1);
  suite.push_back({TransformKind::identity, 0.0});
  const auto rows = bench_transforms(img, params, suite);

  bool ok = true;
  std::ostringstream detail;
  for (const auto& row : rows) {
    const bool row_ok = row.spec.kind == TransformKind::identity
                            ? format_percent(row.similarity) == "100.000"
                            : row.similarity.fraction() > 0.55;
    ok = ok && row_ok;
    detail << "\n      " << (row_ok ? "ok  " : "LOW ") << row.name << ": " << pct(row.similarity);
  }

  const Kernel reference = build_kernel(img, params);
  double previous = 2.0;
  detail << "\n      noise monotonicity:";
  for (const double p : {10.0, 30.0, 50.0}) {
    const auto s = similarity(reference, build_kernel(add_noise(img, p, 1), params));
    ok = ok && s.fraction() <= previous;
    previous = s.fraction();
    detail << " " << p << "%->" << pct(s);
  }
  return {ok, "astronaut64.pgm, k=60000" + detail.str()};
}

Outcome determinism() {
  ikernel::testing::TempDir dir;
  const std::string image = ikernel::testing::data_path("astronaut64.pgm").string();
  auto build = [&](const std::string& name, const std::string& extra) {
    const std::string out = (dir / name).string();
    const std::string cmd = std::string("\"") + IKERNEL_CLI_PATH + "\" kernel \"" + image +
                            "\" -o \"" + out + "\" " + extra;
    if (std::system(cmd.c_str()) != 0) {
      return std::uint64_t{0};
    }
    return fnv1a(read_file(out));
  };
  const auto first = build("run1.ikrn", "");
  const auto second = build("run2.ikrn", "");
  const auto one = build("w1.ikrn", "--threads 1");
  const auto many = build("w4.ikrn", "--threads 4");
  char buf[64];
  std::snprintf(buf, sizeof buf, "fnv1a %016llx", static_cast<unsigned long long>(first));
  const bool ok = first != 0 && first == second && first == one && one == many;
  return {ok, std::string(buf) + (ok ? " for all 4 runs (2x default, threads 1, threads 4)"
                                     : " differs between runs")};
}

Outcome round_trips() {
  std::mt19937_64 rng(1010);
  int cases = 0;
  for (int i = 0; i < 100; ++i) {
    const auto w = static_cast<std::uint32_t>(1 + rng() % 32);
    const auto h = static_cast<std::uint32_t>(1 + rng() % 32);
    const unsigned ch = rng() % 2 == 0 ? 1 : 3;
    const auto ceiling = static_cast<Sample>(i % 4 == 0 ? 1 + rng() % 65535 : 1 + rng() % 255);
    const Image img = random_image(w, h, ch, ceiling, rng());
    if (decode_netpbm(encode_netpbm(img)) != img) {
      return {false, "netpbm case " + std::to_string(i)};
    }
    ++cases;

    KernelParams p{rng(), 1 + rng() % 5000, ceiling, w, h, ch};
    Kernel k{p, BitVector(p.bits), rng() % 2 == 0};
    for (std::uint64_t b = 0; b < p.bits; ++b) {
      k.bits.set(b, rng() & 1U);
    }
    if (decode_kernel(encode_kernel(k)) != k) {
      return {false, "IKRN case " + std::to_string(i)};
    }
    ++cases;
  }
  return {true, std::to_string(cases) + " fuzzed cases (100 netpbm, 100 IKRN)"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example kernel of 001", 0.001, fig1_reproduction},
      {2, "oracle/sampled equivalence", 1.0, oracle_sampled_equivalence},
      {3, "kernel bit-count law", 5.0, bit_count_law},
      {4, "self / complement similarity", 0.0, self_and_complement},
      {5, "chance level", 10.0, chance_level},
      {6, "inversion", 10.0, inversion},
      {7, "recognition by averaged kernels", 120.0, recognition},
      {8, "transform robustness", 120.0, robustness},
      {9, "determinism", 0.0, determinism},
      {10, "format round-trips", 0.0, round_trips},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.budget_seconds <= 0 || seconds < c.budget_seconds;
    const bool pass = outcome.pass && in_time;
    failures += pass ? 0 : 1;

    char timing[96];
    if (c.budget_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.3f s, budget %.3f s%s", seconds,
                    c.budget_seconds, in_time ? "" : " EXCEEDED");
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    }
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name
              << " -- " << outcome.detail << " (" << timing << ")" << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
