#include <algorithm>

#include <fmt/format.h>
#include <json.hpp>

#include "ljsimd/bench.hpp"

namespace ljsimd {

std::string report(std::vector<BenchResult> results, ReportFormat format) {
  std::stable_sort(results.begin(), results.end(),
                   [](const BenchResult& a, const BenchResult& b) { return a.kernel < b.kernel; });

  if (format == ReportFormat::Csv) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const BenchResult& r : results) {
      out += fmt::format("{},{},{},{},{},{},{},{},{}\n", to_string(r.kernel), to_string(r.layout),
                         to_string(r.path), r.n, r.min_s, r.mean_s, r.stddev_s, r.pairs_in_cutoff,
                         r.checksum);
    }
    return out;
  }

  nlohmann::json doc = nlohmann::json::array();
  for (const BenchResult& r : results) {
    doc.push_back({{"kernel", to_string(r.kernel)},
                   {"layout", to_string(r.layout)},
                   {"path", to_string(r.path)},
                   {"n", r.n},
                   {"samples_s", r.samples_s},
                   {"min_s", r.min_s},
                   {"mean_s", r.mean_s},
                   {"stddev_s", r.stddev_s},
                   {"pairs_in_cutoff", r.pairs_in_cutoff},
                   {"checksum", r.checksum}});
  }
  return doc.dump(2) + "\n";
}

std::vector<BenchResult> parse_json_report(std::string_view text) {
  std::vector<BenchResult> out;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& e : doc) {
      BenchResult r;
      const auto kernel = parse_kernel(e.at("kernel").get<std::string>());
      const auto layout = parse_layout(e.at("layout").get<std::string>());
      if (!kernel || !layout) throw ConfigError("unknown kernel or layout in report");
      r.kernel = *kernel;
      r.layout = *layout;
      const auto path = e.at("path").get<std::string>();
      if (path != "portable" && path != "intrinsic") throw ConfigError("unknown path in report");
      r.path = path == "intrinsic" ? VectorPath::Intrinsic : VectorPath::Portable;
      r.n = e.at("n").get<std::size_t>();
      r.samples_s = e.value("samples_s", std::vector<double>{});
      r.min_s = e.at("min_s").get<double>();
      r.mean_s = e.at("mean_s").get<double>();
      r.stddev_s = e.at("stddev_s").get<double>();
      r.pairs_in_cutoff = e.at("pairs_in_cutoff").get<std::uint64_t>();
      r.checksum = e.at("checksum").get<double>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(fmt::format("malformed JSON report: {}", ex.what()));
  }
  return out;
}

}  // namespace ljsimd
