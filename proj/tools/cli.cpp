#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "ikernel/error.hpp"
#include "ikernel/format.hpp"
#include "ikernel/image_kernel.hpp"
#include "ikernel/kernel_io.hpp"
#include "ikernel/netpbm.hpp"
#include "ikernel/oracle.hpp"
#include "ikernel/transforms.hpp"

namespace ikernel::cli {
namespace {

namespace fs = std::filesystem;

// Raised when a classification falls below --min-similarity.
class Rejected : public Error {
 public:
  using Error::Error;
};

struct KernelFlags {
  std::uint64_t bits = kDefaultKernelBits;
  std::uint64_t seed = kDefaultSeed;
  std::string resize;
  unsigned threads = 0;

  void attach(CLI::App& cmd, bool with_resize = true) {
    cmd.add_option("--bits", bits, "Kernel length in bits")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--seed", seed, "Plane generator seed")->capture_default_str();
    if (with_resize) {
      cmd.add_option("--resize", resize, "Resample to WxH before kerneling");
    }
    cmd.add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
  }

  Image prepare(Image img) const {
    if (resize.empty()) {
      return img;
    }
    unsigned w = 0;
    unsigned h = 0;
    char x = 0;
    char extra = 0;
    std::istringstream in(resize);
    if (!(in >> w >> x >> h) || (x != 'x' && x != 'X') || (in >> extra) || w == 0 || h == 0) {
      throw InvalidArgument("--resize expects WxH, got '" + resize + "'");
    }
    return resize_bilinear(img, w, h);
  }

  Kernel kernel_of(const fs::path& path) const {
    const Image img = prepare(read_image(path));
    return build_kernel(img, KernelParams::for_image(img, bits, seed), BuildOptions{threads});
  }
};

bool is_image_path(const fs::path& p) {
  const std::string ext = p.extension().string();
  return ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

bool is_kernel_path(const fs::path& p) { return p.extension() == ".ikrn"; }

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    const fs::path p(input);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() &&
            (is_image_path(entry.path()) || is_kernel_path(entry.path()))) {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  if (files.empty()) {
    throw InvalidArgument("no training inputs found");
  }
  return files;
}

void print_bench(const std::vector<BenchRow>& rows, bool json, std::ostream& out) {
  if (json) {
    for (const BenchRow& row : rows) {
      nlohmann::json j;
      j["transform"] = row.name;
      j["matches"] = row.similarity.matches;
      j["total"] = row.similarity.total;
      j["percent"] = std::stod(format_percent(row.similarity));
      out << j.dump() << '\n';
    }
    return;
  }
  std::size_t width = std::string_view("transform").size();
  for (const BenchRow& row : rows) {
    width = std::max(width, row.name.size());
  }
  out << std::left << std::setw(static_cast<int>(width)) << "transform"
      << "  percent   matches/total\n";
  for (const BenchRow& row : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << row.name << "  " << std::right
        << std::setw(7) << format_percent(row.similarity) << "   " << row.similarity.matches
        << '/' << row.similarity.total << '\n';
  }
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open manifest '" + path.string() + "'");
  }
  std::vector<ManifestEntry> entries;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    const auto label_end = line.find_first_of(" \t", first);
    const auto path_start =
        label_end == std::string::npos ? label_end : line.find_first_not_of(" \t", label_end);
    if (path_start == std::string::npos) {
      throw FormatError("manifest line " + std::to_string(line_no) +
                        ": expected '<label> <path>'");
    }
    const auto path_end = line.find_last_not_of(" \t\r");
    ManifestEntry entry{line.substr(first, label_end - first),
                        fs::path(line.substr(path_start, path_end - path_start + 1))};
    if (!seen.insert(entry.label).second) {
      throw FormatError("manifest: duplicate label '" + entry.label + "'");
    }
    if (entry.path.is_relative()) {
      entry.path = path.parent_path() / entry.path;
    }
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) {
    throw FormatError("manifest '" + path.string() + "' lists no templates");
  }
  return entries;
}

std::vector<LabeledTemplate> load_templates(const fs::path& manifest) {
  std::vector<LabeledTemplate> templates;
  for (auto& entry : read_manifest(manifest)) {
    Kernel k = read_kernel(entry.path);
    if (!k.is_template) {
      throw FormatError("'" + entry.path.string() + "' is not a template kernel");
    }
    templates.push_back(make_template(std::move(k), std::move(entry.label)));
  }
  return templates;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information-kernel fingerprints: build, compare, train, classify, bench"};
  app.name("ikernel");
  app.require_subcommand(1);

  // kernel
  std::string kernel_image;
  std::string kernel_out;
  KernelFlags kernel_flags;
  auto* kernel_cmd = app.add_subcommand("kernel", "Build the kernel of an image");
  kernel_cmd->add_option("image", kernel_image, "PGM/PPM image")->required();
  kernel_cmd->add_option("-o,--output", kernel_out, "Output .ikrn file")->required();
  kernel_flags.attach(*kernel_cmd);

  // compare
  std::string cmp_a;
  std::string cmp_b;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two kernel files");
  compare_cmd->add_option("a", cmp_a)->required();
  compare_cmd->add_option("b", cmp_b)->required();

  // compare-images
  std::string ci_a;
  std::string ci_b;
  KernelFlags ci_flags;
  auto* compare_images_cmd =
      app.add_subcommand("compare-images", "Build and compare the kernels of two images");
  compare_images_cmd->add_option("a", ci_a)->required();
  compare_images_cmd->add_option("b", ci_b)->required();
  ci_flags.attach(*compare_images_cmd);

  // train
  std::vector<std::string> train_inputs;
  std::string train_label;
  std::string train_out;
  KernelFlags train_flags;
  auto* train_cmd = app.add_subcommand("train", "Average training kernels into a template");
  train_cmd->add_option("inputs", train_inputs, "Images, .ikrn kernels, or directories")
      ->required();
  train_cmd->add_option("--label", train_label, "Class label")->required();
  train_cmd->add_option("-o,--output", train_out, "Output template .ikrn")->required();
  train_flags.attach(*train_cmd);

  // classify
  std::string cls_image;
  std::string cls_manifest;
  std::optional<double> min_similarity;
  KernelFlags cls_flags;
  auto* classify_cmd = app.add_subcommand("classify", "Match an image against templates");
  classify_cmd->add_option("image", cls_image)->required();
  classify_cmd->add_option("--manifest", cls_manifest, "Lines of '<label> <template.ikrn>'")
      ->required();
  classify_cmd
      ->add_option("--min-similarity", min_similarity,
                   "Reject when the best similarity fraction is below this")
      ->check(CLI::Range(0.0, 1.0));
  cls_flags.attach(*classify_cmd);

  // bench
  std::string bench_image;
  std::string bench_suite = "default";
  std::uint64_t noise_seed = 1;
  bool bench_json = false;
  KernelFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Kernel similarity under transformations");
  bench_cmd->add_option("image", bench_image)->required();
  bench_cmd
      ->add_option("--suite", bench_suite,
                   "'default' or comma-separated kind:magnitude list "
                   "(e.g. noise:20,rotate:10,color_balance:R:40)")
      ->capture_default_str();
  bench_cmd->add_option("--noise-seed", noise_seed)->capture_default_str();
  bench_cmd->add_flag("--json", bench_json, "Emit JSON lines instead of a table");
  bench_flags.attach(*bench_cmd, false);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive kernels of short bit strings");
  oracle_cmd->require_subcommand(1);
  std::string ok_bits;
  auto* oracle_kernel = oracle_cmd->add_subcommand("kernel", "Print the 2^n-bit kernel");
  oracle_kernel->add_option("bits", ok_bits)->required();
  std::string oc_a;
  std::string oc_b;
  auto* oracle_compare = oracle_cmd->add_subcommand("compare", "Exact kernel similarity");
  oracle_compare->add_option("s1", oc_a)->required();
  oracle_compare->add_option("s2", oc_b)->required();
  std::string ocl_s;
  std::string ocl_v;
  auto* oracle_classify =
      oracle_cmd->add_subcommand("classify", "1 if v is a weak transformation of s, else 0");
  oracle_classify->add_option("s", ocl_s)->required();
  oracle_classify->add_option("v", ocl_v)->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("ikernel");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    if (kernel_cmd->parsed()) {
      write_kernel(kernel_flags.kernel_of(kernel_image), kernel_out);
    } else if (compare_cmd->parsed()) {
      out << format_similarity(similarity(read_kernel(cmp_a), read_kernel(cmp_b))) << '\n';
    } else if (compare_images_cmd->parsed()) {
      out << format_similarity(similarity(ci_flags.kernel_of(ci_a), ci_flags.kernel_of(ci_b)))
          << '\n';
    } else if (train_cmd->parsed()) {
      std::vector<Kernel> kernels;
      for (const auto& path : expand_inputs(train_inputs)) {
        kernels.push_back(is_kernel_path(path) ? read_kernel(path)
                                               : train_flags.kernel_of(path));
      }
      const LabeledTemplate t = average_kernels(kernels, train_label);
      write_kernel(t.kernel, train_out);
      out << "label=" << t.label << " samples=" << t.sample_count << '\n';
    } else if (classify_cmd->parsed()) {
      const auto templates = load_templates(cls_manifest);
      const Classification best = classify(cls_flags.kernel_of(cls_image), templates);
      const std::string line =
          "label=" + best.label + " " + format_similarity(best.similarity);
      if (min_similarity && best.similarity.fraction() < *min_similarity) {
        throw Rejected("rejected: best " + line);
      }
      out << line << '\n';
    } else if (bench_cmd->parsed()) {
      const Image img = read_image(bench_image);
      std::vector<TransformSpec> suite;
      if (bench_suite == "default") {
        suite = default_suite(img.channels(), noise_seed);
      } else {
        std::istringstream items(bench_suite);
        for (std::string item; std::getline(items, item, ',');) {
          TransformSpec spec = parse_transform(item);
          spec.noise_seed = noise_seed;
          suite.push_back(spec);
        }
      }
      const auto params = KernelParams::for_image(img, bench_flags.bits, bench_flags.seed);
      print_bench(bench_transforms(img, params, suite, BuildOptions{bench_flags.threads}),
                  bench_json, out);
    } else if (oracle_kernel->parsed()) {
      out << oracle::exact_kernel(oracle::BitString::parse(ok_bits)).to_string() << '\n';
    } else if (oracle_compare->parsed()) {
      out << format_similarity(oracle::exact_similarity(oracle::BitString::parse(oc_a),
                                                        oracle::BitString::parse(oc_b)))
          << '\n';
    } else if (oracle_classify->parsed()) {
      out << (oracle::classify_transformation(oracle::BitString::parse(ocl_s),
                                              oracle::BitString::parse(ocl_v))
                  ? 1
                  : 0)
          << '\n';
    }
  } catch (const Rejected& e) {
    err << e.what() << '\n';
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace ikernel::cli
