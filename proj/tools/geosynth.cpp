// geosynth: theorem-grounded synthetic geometry figures with validated
// chain-of-thought question/answer pairs.
//
// Subcommands: generate, validate, stats, augment, render. Machine-readable
// reports go to stdout; progress events are line-delimited JSON on stderr.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#define GEOSYNTH_ENABLE_HTTP_CLIENT
#include "geosynth/catalog_default.hpp"
#include "geosynth/pipeline.hpp"

namespace fs = std::filesystem;
using namespace geosynth;

namespace {

struct StderrProgress : ProgressSink {
  std::mutex mu;
  void event(const std::string& kind, const ordered_json& payload) override {
    std::lock_guard<std::mutex> lock(mu);
    ordered_json j;
    j["event"] = kind;
    for (const auto& [k, v] : payload.items()) j[k] = v;
    std::cerr << j.dump() << "\n";
  }
};

Catalog load_catalog_or_default(const std::string& path) {
  if (path.empty()) return parse_catalog(default_catalog_json(), "bundled");
  return load_catalogs(path);
}

ordered_json read_config_file(const std::string& path) {
  if (path.empty()) return ordered_json::object();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return ordered_json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
}

std::map<std::string, double> parse_distribution(const std::string& text) {
  if (text.find('=') == std::string::npos)
    return GenerationConfig::distribution_preset(text);
  std::map<std::string, double> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::invalid_config, "bad distribution entry '" + item + "'");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

struct GenerateArgs {
  std::string config_file, catalog_file, prompts_dir, out_dir = "corpus";
  std::uint64_t figures = 10;
  std::uint64_t seed = 0;
  int n = 1, k = 0, theorems_per_category = 0, retry_budget = 64, jobs = 0;
  std::string distribution;
  bool mock_client = false, dry_run = false, multi_substrate = false, no_images = false;
  std::string model = "default";
  double temperature = 0.2;
};

// Effective config: built-in defaults, overlaid by the config file, overlaid
// by explicitly set CLI flags. The merged result lands in the manifest.
PipelineOptions make_options(const GenerateArgs& args, const CLI::App* cmd,
                             ordered_json file_cfg, bool& mock_client,
                             std::string& model, double& temperature) {
  PipelineOptions opts;
  auto merged = [&](const char* flag, const char* key, auto cli_value, auto current) {
    using T = decltype(current);
    if (cmd->count(flag)) return static_cast<T>(cli_value);
    if (file_cfg.contains(key)) return file_cfg[key].get<T>();
    return current;
  };
  opts.figures = merged("--figures", "figures", args.figures, opts.figures);
  opts.config.seed = merged("--seed", "seed", args.seed, opts.config.seed);
  opts.config.n = merged("--n", "n", args.n, opts.config.n);
  opts.config.k = merged("--k", "k", args.k, opts.config.k);
  opts.config.theorems_per_category =
      merged("--theorems-per-category", "theorems_per_category",
             args.theorems_per_category, opts.config.theorems_per_category);
  opts.config.retry_budget =
      merged("--retry-budget", "retry_budget", args.retry_budget, opts.config.retry_budget);
  opts.config.allow_multi_substrate = merged("--multi-substrate", "allow_multi_substrate",
                                             args.multi_substrate,
                                             opts.config.allow_multi_substrate);
  if (cmd->count("--distribution")) {
    opts.config.substrate_distribution = parse_distribution(args.distribution);
  } else if (file_cfg.contains("distribution")) {
    if (file_cfg["distribution"].is_string())
      opts.config.substrate_distribution =
          GenerationConfig::distribution_preset(file_cfg["distribution"].get<std::string>());
    else
      for (const auto& [k, v] : file_cfg["distribution"].items())
        opts.config.substrate_distribution[k] = v.get<double>();
  }
  if (file_cfg.contains("fidelity")) {
    const auto& f = file_cfg["fidelity"];
    if (f.contains("max_min_distance_ratio"))
      opts.config.fidelity.max_min_distance_ratio = f["max_min_distance_ratio"];
    if (f.contains("min_angle_deg")) opts.config.fidelity.min_angle_deg = f["min_angle_deg"];
    if (f.contains("max_angle_deg")) opts.config.fidelity.max_angle_deg = f["max_angle_deg"];
  }
  opts.dry_run = merged("--dry-run", "dry_run", args.dry_run, opts.dry_run);
  opts.write_images = !args.no_images;
  opts.out_dir = args.out_dir;
  mock_client = merged("--mock-client", "mock_client", args.mock_client, false);
  model = merged("--model", "model", args.model, std::string("default"));
  temperature = merged("--temperature", "temperature", args.temperature, 0.2);
  int jobs = merged("--jobs", "jobs", args.jobs, 0);
  if (jobs <= 0) {
    // Generation-only runs scale with the CPU; reasoner stages default to the
    // client window of 32 in-flight pipelines.
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    jobs = opts.dry_run ? static_cast<int>(hw) : 32;
  }
  opts.jobs = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(jobs), std::max<std::uint64_t>(opts.figures, 1)));
  return opts;
}

int cmd_generate(const GenerateArgs& args, const CLI::App* cmd) {
  bool mock = false;
  std::string model;
  double temperature = 0.2;
  PipelineOptions opts =
      make_options(args, cmd, read_config_file(args.config_file), mock, model, temperature);
  Catalog catalog = load_catalog_or_default(args.catalog_file);
  PromptAssets assets = load_prompt_assets(args.prompts_dir);

  std::unique_ptr<CompletionClient> client;
  if (mock || opts.dry_run) {
    client = std::make_unique<MockCompletionClient>();
  } else {
    HttpClientConfig http;
    http.model = model;
    http.temperature = temperature;
    client = std::make_unique<HttpCompletionClient>(http);
  }
  RequestLog log;
  client->set_log(&log);
  StderrProgress progress;
  Manifest manifest =
      run_generation(opts, catalog, client.get(), &assets, &log, &progress);

  ordered_json summary;
  summary["event"] = "summary";
  summary["counts"] = manifest.counts.to_json();
  summary["complete"] = manifest.complete;
  std::cerr << summary.dump() << "\n";
  std::cout << manifest.to_json().dump(2) << "\n";
  return manifest.complete ? 0 : 2;
}

int cmd_validate(const std::string& corpus, const std::string& catalog_file) {
  Catalog catalog = load_catalog_or_default(catalog_file);
  auto records = read_corpus(corpus);
  auto report = validate_corpus(records, catalog);
  std::cout << report.to_json().dump(2) << "\n";
  return report.violations.empty() ? 0 : 1;
}

int cmd_stats(const std::string& corpus, std::size_t sample, std::uint64_t seed,
              const std::string& out_file) {
  auto records = read_corpus(corpus);
  TrigramEmbedder embedder;
  auto stats = compute_stats(records, &embedder, sample, seed);
  std::string text = stats.to_json().dump(2) + "\n";
  if (!out_file.empty()) write_file(out_file, text);
  std::cout << text;
  return 0;
}

int cmd_augment(const std::string& source, const std::string& out_dir, bool strict,
                bool mock, const std::string& prompts_dir, const std::string& catalog_file,
                int jobs, const std::string& model, double temperature) {
  Catalog catalog = load_catalog_or_default(catalog_file);
  PromptAssets assets = load_prompt_assets(prompts_dir);
  std::unique_ptr<CompletionClient> client;
  if (mock) {
    client = std::make_unique<MockCompletionClient>();
  } else {
    HttpClientConfig http;
    http.model = model;
    http.temperature = temperature;
    client = std::make_unique<HttpCompletionClient>(http);
  }
  RequestLog log;
  client->set_log(&log);

  std::vector<std::string> warnings;
  auto items = read_external_qa(source, &warnings);
  for (const auto& w : warnings) {
    ordered_json j;
    j["event"] = "warning";
    j["detail"] = w;
    std::cerr << j.dump() << "\n";
  }

  std::vector<AugmentationRecord> records(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) break;
      try {
        records[i] = augment_one(items[i], *client, assets);
        if (strict) strict_filter_augmented(records[i], items[i], catalog, *client, assets);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        break;
      }
    }
  };
  int pool_size = std::max(1, jobs);
  if (pool_size == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < pool_size; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  fs::create_directories(out_dir);
  std::string jsonl;
  std::uint64_t pairs = 0;
  for (const auto& rec : records) {
    jsonl += rec.to_json().dump() + "\n";
    pairs += rec.qa.size();
  }
  write_file(fs::path(out_dir) / "augmented.jsonl", jsonl);
  write_file(fs::path(out_dir) / "requests.jsonl", log.to_jsonl());
  ordered_json report;
  report["source_items"] = items.size();
  report["skipped_rows"] = warnings.size();
  report["records"] = records.size();
  report["new_pairs"] = pairs;
  report["strict"] = strict;
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_render(const std::string& corpus, std::string out_dir) {
  auto records = read_corpus(corpus);
  if (out_dir.empty())
    out_dir = (fs::is_directory(corpus) ? fs::path(corpus) : fs::path(corpus).parent_path())
                  .string();
  for (const auto& rec : records) {
    fs::path target = fs::path(out_dir) / rec.image;
    fs::create_directories(target.parent_path());
    write_file(target, render_svg(rec.scene));
  }
  ordered_json report;
  report["rendered"] = records.size();
  report["out_dir"] = out_dir;
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theorem-grounded synthetic geometry Q&A pipeline"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate figures and validated Q&A");
  generate->add_option("--figures", gen.figures, "Number of figures");
  generate->add_option("--seed", gen.seed, "Base RNG seed");
  generate->add_option("--out", gen.out_dir, "Output corpus directory");
  generate->add_option("--config", gen.config_file, "JSON config file");
  generate->add_option("--catalog", gen.catalog_file, "Catalog file (default: bundled)");
  generate->add_option("--prompts", gen.prompts_dir, "Prompt asset directory");
  generate->add_option("--distribution", gen.distribution,
                       "group1|group2|group3 or class=weight,... pairs");
  generate->add_option("--n", gen.n, "Substrate rounds per figure");
  generate->add_option("--k", gen.k, "Line rounds per figure (0 = sample 1..3)");
  generate->add_option("--theorems-per-category", gen.theorems_per_category,
                       "Theorems per category (0 = sample 1..3)");
  generate->add_option("--retry-budget", gen.retry_budget, "Fidelity retries per figure");
  generate->add_option("--jobs", gen.jobs, "Worker pool size");
  generate->add_option("--model", gen.model, "Model name for the live client");
  generate->add_option("--temperature", gen.temperature, "Sampling temperature");
  generate->add_flag("--mock-client", gen.mock_client, "Use the deterministic mock client");
  generate->add_flag("--dry-run", gen.dry_run, "Figures and ledgers only, no client calls");
  generate->add_flag("--multi-substrate", gen.multi_substrate,
                     "Allow shared-edge substrate merging (experimental)");
  generate->add_flag("--no-images", gen.no_images, "Skip SVG output");

  std::string corpus_path, catalog_file2;
  auto* validate = app.add_subcommand("validate", "Re-check a corpus against its scenes");
  validate->add_option("corpus", corpus_path, "Corpus directory or dataset.jsonl")
      ->required();
  validate->add_option("--catalog", catalog_file2, "Catalog file (default: bundled)");

  std::string stats_path, stats_out;
  std::size_t stats_sample = 5000;
  std::uint64_t stats_seed = 0;
  auto* stats = app.add_subcommand("stats", "Corpus statistics and diversity");
  stats->add_option("corpus", stats_path, "Corpus directory or dataset.jsonl")->required();
  stats->add_option("--sample", stats_sample, "Diversity sample size");
  stats->add_option("--sample-seed", stats_seed, "Diversity sampling seed");
  stats->add_option("--out", stats_out, "Also write the report to this file");

  std::string aug_source, aug_out = "augmented", aug_prompts, aug_catalog,
              aug_model = "default";
  bool aug_strict = false, aug_mock = false;
  int aug_jobs = 1;
  double aug_temperature = 0.2;
  auto* augment = app.add_subcommand("augment", "Augment an external Q&A corpus");
  augment->add_option("--source", aug_source, "Source JSONL {id, question, cot_answer}")
      ->required();
  augment->add_option("--out", aug_out, "Output directory");
  augment->add_option("--prompts", aug_prompts, "Prompt asset directory");
  augment->add_option("--catalog", aug_catalog, "Catalog file (default: bundled)");
  augment->add_option("--jobs", aug_jobs, "Parallel client window");
  augment->add_option("--model", aug_model, "Model name for the live client");
  augment->add_option("--temperature", aug_temperature, "Sampling temperature");
  augment->add_flag("--strict", aug_strict, "Route new pairs through the reverse judge");
  augment->add_flag("--mock-client", aug_mock, "Use the deterministic mock client");

  std::string render_path, render_out;
  auto* render = app.add_subcommand("render", "Re-render SVGs from a corpus");
  render->add_option("corpus", render_path, "Corpus directory or dataset.jsonl")->required();
  render->add_option("--out", render_out, "Output directory (default: corpus directory)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(gen, generate);
    if (validate->parsed()) return cmd_validate(corpus_path, catalog_file2);
    if (stats->parsed()) return cmd_stats(stats_path, stats_sample, stats_seed, stats_out);
    if (augment->parsed())
      return cmd_augment(aug_source, aug_out, aug_strict, aug_mock, aug_prompts,
                         aug_catalog, aug_jobs, aug_model, aug_temperature);
    if (render->parsed()) return cmd_render(render_path, render_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
