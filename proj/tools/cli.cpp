#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ljsimd/bench.hpp"
#include "ljsimd/xyz.hpp"

namespace ljsimd::cli {

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<KernelId> parse_kernel_list(const std::string& names, bool include_oracle_in_all) {
  std::vector<KernelId> ids;
  std::stringstream ss(names);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    if (name == "all") {
      for (const KernelInfo& k : list_kernels()) {
        if (k.id != KernelId::Oracle || include_oracle_in_all) ids.push_back(k.id);
      }
      continue;
    }
    const auto id = parse_kernel(name);
    if (!id) throw ConfigError(fmt::format("unknown kernel '{}' (see list-kernels)", name));
    ids.push_back(*id);
  }
  if (ids.empty()) throw ConfigError("no kernels given");
  return ids;
}

std::optional<VectorPath> parse_path(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "portable") return VectorPath::Portable;
  if (s == "intrinsic") return VectorPath::Intrinsic;
  throw ConfigError(fmt::format("unknown path '{}' (auto|portable|intrinsic)", s));
}

struct GenOptions {
  int cells = 16;
  double lattice_const = 0.0;
  bool paper = false;
  std::string out;
};

struct VerifyOptions {
  std::string kernel;
  int cells = 16;
  double tol = 1e-9;
  std::string path = "auto";
  std::string file;
  double rs = 3.3;
  double dt = 1.0;
};

struct BenchOptions {
  std::string kernels = "all";
  int repeats = 3;
  int warmup = 1;
  int sweeps = 100;
  bool paper = false;
  int cells = 16;
  std::string file;
  std::string format = "csv";
  std::string path = "auto";
  double rs = 3.3;
  double dt = 1.0;
};

int do_gen(const GenOptions& o, std::ostream& out) {
  ParticleSystem s;
  if (o.paper) {
    s = paper_benchmark_system();
  } else if (o.lattice_const > 0.0) {
    SimParams p;
    const double extent = o.cells * o.lattice_const;
    p.box_edge = std::max(p.box_edge, std::ceil(extent + 2.0 * p.search_radius));
    const double off = 0.5 * (p.box_edge - extent);
    s = build_fcc(o.cells, o.lattice_const, {off, off, off}, p);
  } else {
    s = centered_fcc(o.cells);
  }
  if (o.out.empty()) {
    write_xyz(out, s);
  } else {
    write_xyz_file(o.out, s);
    out << fmt::format("wrote {} atoms to {}\n", s.size(), o.out);
  }
  return 0;
}

int do_verify(const VerifyOptions& o, std::ostream& out) {
  SimParams p;
  p.search_radius = o.rs;
  p.dt = o.dt;
  ParticleSystem system = o.file.empty() ? centered_fcc(o.cells, p) : read_xyz_file(o.file);
  if (!o.file.empty()) {
    system.params.search_radius = o.rs;
    system.params.dt = o.dt;
  }
  system.params.validate();
  system.validate();
  system.reset_momenta();

  const auto requested = parse_path(o.path);
  const std::vector<KernelId> ids = parse_kernel_list(o.kernel, true);

  const std::vector<Vec3> expected = oracle_sweep(system);
  const PairList pairs = build_pair_list(system);
  const SortedList sorted = sort_pair_list(pairs, system.size());

  bool ok = true;
  for (KernelId id : ids) {
    const KernelInfo& info = kernel_info(id);
    const VectorPath path =
        effective_path(id, requested.value_or(best_path(std::max(info.width, 4))));
    LayoutView view = to_layout(system, info.layout);
    const SweepStats st = run_kernel(id, view, {&pairs, &sorted}, system.params, path);
    double max_dev = 0.0;
    for (std::size_t i = 0; i < system.size(); ++i) {
      const Vec3 d = view.momentum(i) - expected[i];
      max_dev = std::max({max_dev, std::abs(d.x), std::abs(d.y), std::abs(d.z)});
    }
    const bool pass = max_dev <= o.tol;
    ok = ok && pass;
    out << fmt::format("{} kernel={} layout={} path={} n={} pairs_in_cutoff={} max_dev={:.3e} tol={:.1e}\n",
                       pass ? "PASS" : "FAIL", info.name, to_string(info.layout),
                       to_string(path), system.size(), st.pairs_within_cutoff, max_dev, o.tol);
  }
  return ok ? 0 : kExitVerifyFailed;
}

int do_bench(const BenchOptions& o, std::ostream& out) {
  BenchConfig cfg;
  cfg.kernels = parse_kernel_list(o.kernels, false);
  cfg.repeats = o.repeats;
  cfg.warmup = o.warmup;
  cfg.n_sweeps = o.sweeps;
  cfg.search_radius = o.rs;
  cfg.dt = o.dt;
  cfg.path = parse_path(o.path);
  if (o.paper) {
    cfg.source = SystemSource::Paper;
  } else if (!o.file.empty()) {
    cfg.source = SystemSource::File;
    cfg.file = o.file;
  } else {
    cfg.source = SystemSource::Scaled;
    cfg.cells_per_side = o.cells;
  }
  const ReportFormat fmt = o.format == "json" ? ReportFormat::Json : ReportFormat::Csv;
  out << report(run_bench(cfg), fmt);
  return 0;
}

int do_list(std::ostream& out) {
  for (const KernelInfo& k : list_kernels()) {
    out << fmt::format("{:<16} {:<5} width={} {}\n", k.name, to_string(k.layout), k.width,
                       k.description);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lennard-Jones force-kernel laboratory: layouts, SIMD kernels, benchmarks"};
  app.name("ljsimd");
  app.require_subcommand(1, 1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write an FCC system as extended XYZ");
  gen_cmd->add_option("--cells", gen.cells, "FCC cells per side")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--lattice-const", gen.lattice_const,
                      "lattice constant (default: density 1.0)")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--paper", gen.paper, "the 119164-atom benchmark configuration");
  gen_cmd->add_option("--out", gen.out, "output file (default: stdout)");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "compare kernels against the brute-force oracle");
  ver_cmd->add_option("--kernel", ver.kernel, "kernel name, comma list, or 'all'")->required();
  ver_cmd->add_option("--cells", ver.cells, "FCC cells per side")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--file", ver.file, "read the system from an extended-XYZ file");
  ver_cmd->add_option("--tol", ver.tol, "max absolute deviation per component")
      ->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--path", ver.path, "auto|portable|intrinsic");
  ver_cmd->add_option("--rs", ver.rs, "search radius");
  ver_cmd->add_option("--dt", ver.dt, "impulse scale");

  BenchOptions ben;
  auto* ben_cmd = app.add_subcommand("bench", "time force sweeps");
  ben_cmd->add_option("--kernels", ben.kernels, "comma-separated kernel names or 'all'");
  ben_cmd->add_option("--repeats", ben.repeats, "timed runs per kernel")->check(CLI::PositiveNumber);
  ben_cmd->add_option("--warmup", ben.warmup, "untimed runs per kernel")
      ->check(CLI::NonNegativeNumber);
  ben_cmd->add_option("--sweeps", ben.sweeps, "force sweeps per run")->check(CLI::PositiveNumber);
  auto* paper_flag = ben_cmd->add_flag("--paper", ben.paper, "119164 atoms, box 100, r_c 3.0");
  auto* cells_opt =
      ben_cmd->add_option("--cells", ben.cells, "FCC cells per side")->check(CLI::PositiveNumber);
  auto* file_opt = ben_cmd->add_option("--file", ben.file, "extended-XYZ input");
  paper_flag->excludes(cells_opt)->excludes(file_opt);
  cells_opt->excludes(file_opt);
  ben_cmd->add_option("--format", ben.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  ben_cmd->add_option("--path", ben.path, "auto|portable|intrinsic");
  ben_cmd->add_option("--rs", ben.rs, "search radius");
  ben_cmd->add_option("--dt", ben.dt, "impulse scale");

  auto* list_cmd = app.add_subcommand("list-kernels", "print the kernel registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return do_gen(gen, out);
    if (*ver_cmd) return do_verify(ver, out);
    if (*ben_cmd) return do_bench(ben, out);
    if (*list_cmd) return do_list(out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace ljsimd::cli
