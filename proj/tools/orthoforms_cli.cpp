// Command-line driver: computes pipeline artifacts, runs the verification
// suites, writes reports and replayable certificates, and manages the
// on-disk cache. Exit codes: 0 success, 1 verification failure, 2 usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "orthoforms/hilbert.hpp"
#include "orthoforms/poly_binary.hpp"
#include "orthoforms/verify.hpp"
#include "orthoforms/version.hpp"

namespace of = orthoforms;
using nlohmann::json;

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(text.data(), std::streamsize(text.size()));
  if (!out) throw of::Error("cannot write " + path);
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!out) throw of::Error("cannot write " + path);
}

std::string poly_json_text(const std::string& target, const of::Polynomial& p) {
  json j;
  j["schema"] = 1;
  j["target"] = target;
  j["space"] = {{"names", p.space()->names()},
                {"weights", std::vector<long>(p.space()->weights().begin(),
                                              p.space()->weights().end())}};
  auto wd = p.weighted_degree();
  if (wd) j["weighted_degree"] = *wd;
  j["term_count"] = p.term_count();
  j["hash"] = of::hash_to_hex(p.content_hash());
  j["text"] = p.to_text();
  return j.dump(2) + "\n";
}

int run_compute(const std::string& target, const std::string& format,
                std::string out_path, const of::CacheConfig& cache,
                const std::string& ring, unsigned truncate) {
  if (target == "hilbert") {
    of::WeightedPresentation pres;
    if (ring == "characters")
      pres = of::characters_ring_presentation();
    else if (ring == "gamma1")
      pres = of::gamma1_ring_presentation();
    else if (ring == "vinberg")
      pres = of::vinberg_ring_presentation();
    else
      throw CLI::ValidationError("--ring must be characters, gamma1 or vinberg");
    of::PowerSeries rational = of::hilbert_from_rational(pres, truncate);
    of::PowerSeries counting = of::hilbert_from_counting(pres, truncate);
    if (!of::series_equal(rational, counting)) {
      std::cerr << "hilbert: rational expansion disagrees with the counting oracle\n";
      return 1;
    }
    if (out_path.empty()) out_path = "hilbert-" + ring + ".json";
    write_file(out_path, of::series_to_json_text(rational, pres, ring));
    std::size_t nonzero = 0;
    for (long long c : rational.c) nonzero += c != 0;
    std::cout << "hilbert[" << ring << "]: truncation " << truncate << ", "
              << nonzero << " nonzero coefficients -> " << out_path << "\n";
    return 0;
  }

  const auto& targets = of::ArtifactStore::target_names();
  if (std::find(targets.begin(), targets.end(), target) == targets.end())
    throw CLI::ValidationError("unknown target " + target);
  of::ArtifactStore store(cache);
  const of::Polynomial& value = store.get(target);
  if (out_path.empty())
    out_path = target + (format == "binary" ? ".ofb"
                         : format == "json" ? ".json"
                                            : ".txt");
  if (format == "text")
    write_file(out_path, value.to_text() + "\n");
  else if (format == "json")
    write_file(out_path, poly_json_text(target, value));
  else if (format == "binary")
    write_file(out_path, of::poly_to_binary(value));
  else
    throw CLI::ValidationError("--format must be text, json or binary");

  auto wd = value.weighted_degree();
  std::cout << target << ": weighted degree " << (wd ? std::to_string(*wd) : "none")
            << ", " << value.term_count() << " terms, hash "
            << of::hash_to_hex(value.content_hash()) << " -> " << out_path << "\n";
  return 0;
}

int run_verify(const std::vector<std::string>& suites, const of::VerifyOptions& opts,
               const std::string& report_path) {
  std::vector<std::string> names = of::suite_check_names(suites);
  of::ArtifactStore store(opts.cache);
  std::vector<of::CheckResult> results = of::run_checks(names, opts, store);
  std::string report = of::verification_report_json(results, opts, suites, store);
  if (report_path.empty())
    std::cout << report;
  else
    write_file(report_path, report);
  for (const auto& r : results)
    std::cerr << "[" << of::check_status_name(r.status) << "] " << r.name << "\n";
  bool ok = of::all_passed(results, opts.allow_inconclusive);
  std::cerr << (ok ? "verification passed" : "verification FAILED") << " ("
            << results.size() << " checks)\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(of::kToolName) + " " + of::kToolVersion +
               " - exact verification of a modular-form ring computation"};
  app.require_subcommand(1);

  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--cache-dir", cache_dir,
                 "artifact cache directory (default .orthoforms-cache or "
                 "$ORTHOFORMS_CACHE)");
  app.add_flag("--no-cache", no_cache, "ignore the on-disk cache entirely");

  auto* compute = app.add_subcommand("compute", "compute one artifact");
  std::string target, format = "text", out_path, ring = "characters";
  unsigned compute_truncate = 120;
  compute->add_option("target", target, "g2|g3|h|r20|k120|delta60|hilbert")
      ->required();
  compute->add_option("--format", format, "text|json|binary (default text)");
  compute->add_option("--out", out_path, "output file (default <target>.<ext>)");
  compute->add_option("--ring", ring,
                      "hilbert target: characters|gamma1|vinberg");
  compute->add_option("--truncate", compute_truncate,
                      "hilbert target: truncation order (default 120)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites;
  of::VerifyOptions opts;
  std::string report_path;
  verify->add_option("suite", suites, "all|pipeline|rings|group|symfunc")
      ->required()
      ->expected(1, 5);
  verify->add_option("--seed", opts.seed, "global randomness seed (default 0)");
  verify->add_option("--attempts", opts.attempts,
                     "irreducibility attempt budget (default 40)");
  verify->add_option("--truncate", opts.truncate,
                     "series truncation order (default 120)");
  verify->add_flag("--allow-inconclusive", opts.allow_inconclusive,
                   "treat inconclusive irreducibility as acceptable");
  verify->add_option("--jobs", opts.jobs, "worker threads (default 2)");
  verify->add_option("--report", report_path, "report file (default stdout)");
  verify->add_flag("--timings", opts.timings,
                   "include wall times in the report (non-deterministic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  of::CacheConfig cache;
  cache.directory = cache_dir;
  cache.enabled = !no_cache;
  opts.cache = cache;

  try {
    if (compute->parsed()) return run_compute(target, format, out_path, cache, ring,
                                              compute_truncate);
    return run_verify(suites, opts, report_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
