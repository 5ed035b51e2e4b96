#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "geosynth/catalog_default.hpp"
#include "geosynth/pipeline.hpp"

using namespace geosynth;
namespace fs = std::filesystem;

namespace {

Catalog default_catalog() { return parse_catalog(default_catalog_json(), "bundled"); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "geosynth_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Manifest run_mock_pipeline(const fs::path& out, std::uint64_t figures, std::uint64_t seed,
                           const Catalog& catalog, bool dry_run = false, int jobs = 1) {
  PipelineOptions opts;
  opts.config.seed = seed;
  opts.figures = figures;
  opts.out_dir = out.string();
  opts.dry_run = dry_run;
  opts.jobs = jobs;
  MockCompletionClient client;
  RequestLog log;
  client.set_log(&log);
  PromptAssets assets = load_prompt_assets();
  return run_generation(opts, catalog, &client, &assets, &log);
}

}  // namespace

TEST_CASE("corpus round-trip") {
  Catalog catalog = default_catalog();
  SECTION("zero records still give a valid corpus") {
    auto dir = fresh_dir("empty");
    Manifest m;
    m.config = ordered_json::object();
    m.config_hash = digest_hex("{}");
    m.catalog_hash = digest_hex(catalog.canonical_text());
    write_corpus({}, dir.string(), m);
    CHECK(slurp(dir / "dataset.jsonl").empty());
    auto manifest = ordered_json::parse(slurp(dir / "manifest.json"));
    CHECK(manifest["counts"]["figures_written"] == 0);
    CHECK(read_corpus(dir.string()).empty());
  }
  SECTION("records read back field-for-field") {
    auto dir = fresh_dir("roundtrip");
    auto manifest = run_mock_pipeline(dir, 10, 31, catalog);
    auto records = read_corpus(dir.string());
    REQUIRE(records.size() == manifest.counts.figures_written);
    REQUIRE_FALSE(records.empty());
    // Re-serialize: every line must match the file byte-for-byte.
    std::istringstream file(slurp(dir / "dataset.jsonl"));
    std::string line;
    std::size_t i = 0;
    while (std::getline(file, line)) {
      REQUIRE(i < records.size());
      CHECK(records[i].to_json().dump() == line);
      ++i;
    }
    CHECK(i == records.size());
  }
  SECTION("two identical runs are byte-identical") {
    auto dir_a = fresh_dir("det_a");
    auto dir_b = fresh_dir("det_b");
    run_mock_pipeline(dir_a, 8, 77, catalog);
    run_mock_pipeline(dir_b, 8, 77, catalog);
    CHECK(slurp(dir_a / "dataset.jsonl") == slurp(dir_b / "dataset.jsonl"));
    CHECK(slurp(dir_a / "manifest.json") == slurp(dir_b / "manifest.json"));
    // And the image directories match.
    for (const auto& entry : fs::directory_iterator(dir_a / "images")) {
      CHECK(slurp(entry.path()) ==
            slurp(dir_b / "images" / entry.path().filename()));
    }
  }
  SECTION("parallel run matches the sequential corpus") {
    auto dir_seq = fresh_dir("par_seq");
    auto dir_par = fresh_dir("par_par");
    run_mock_pipeline(dir_seq, 8, 123, catalog, false, 1);
    run_mock_pipeline(dir_par, 8, 123, catalog, false, 4);
    CHECK(slurp(dir_seq / "dataset.jsonl") == slurp(dir_par / "dataset.jsonl"));
    CHECK(slurp(dir_seq / "requests.jsonl") == slurp(dir_par / "requests.jsonl"));
  }
}

TEST_CASE("dry run emits figures with no completion requests") {
  Catalog catalog = default_catalog();
  auto dir = fresh_dir("dry");
  PipelineOptions opts;
  opts.config.seed = 9;
  opts.figures = 3;
  opts.out_dir = dir.string();
  opts.dry_run = true;
  MockCompletionClient client;
  RequestLog log;
  client.set_log(&log);
  PromptAssets assets = load_prompt_assets();
  auto manifest = run_generation(opts, catalog, &client, &assets, &log);
  CHECK(manifest.counts.figures_written == 3);
  CHECK(log.size() == 0);
  CHECK_FALSE(fs::exists(dir / "requests.jsonl"));
  auto records = read_corpus(dir.string());
  for (const auto& r : records) {
    CHECK(r.qa.empty());
    CHECK_FALSE(r.ledger.lengths.empty());
  }
}

TEST_CASE("self-produced corpora validate clean; corruption is pinpointed") {
  Catalog catalog = default_catalog();
  auto dir = fresh_dir("validate");
  run_mock_pipeline(dir, 12, 55, catalog);
  auto records = read_corpus(dir.string());
  REQUIRE_FALSE(records.empty());

  SECTION("zero violations on the untouched corpus") {
    auto report = validate_corpus(records, catalog);
    CHECK(report.records == records.size());
    CHECK(report.accepted_pairs > 0);
    for (const auto& v : report.violations) INFO(v.figure_id << ": " << v.detail);
    CHECK(report.violations.empty());
  }
  SECTION("one corrupted answer yields exactly one violation at that record") {
    std::size_t target = records.size() / 2;
    bool planted = false;
    for (auto& pair : records[target].qa)
      if (!pair.claims.empty()) {
        pair.claims[0].value *= 1.2;
        planted = true;
        break;
      }
    REQUIRE(planted);
    auto report = validate_corpus(records, catalog);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].record_index == target);
  }
}

TEST_CASE("compute_stats") {
  Catalog catalog = default_catalog();
  TrigramEmbedder embedder;

  SECTION("two identical texts have zero diversity") {
    DatasetRecord r;
    r.figure_id = "fig_000000";
    r.pattern = "p";
    r.substrate_kinds = {"square"};
    QAPair q;
    q.question = "Same question?";
    q.answer = "Same answer.";
    q.qtype = "relationship";
    q.status = QAStatus::accepted;
    r.qa = {q, q};
    auto stats = compute_stats({r}, &embedder);
    REQUIRE(stats.diversity.has_value());
    CHECK(*stats.diversity == Catch::Approx(0.0).margin(1e-9));
    CHECK(stats.qa_pairs == 2);
    CHECK(stats.qa_per_figure == Catch::Approx(2.0));
  }
  SECTION("pattern count equals hand enumeration on a fixture corpus") {
    std::vector<DatasetRecord> records;
    std::vector<std::string> patterns = {"a|median", "a|median", "b|chord",
                                         "a|altitude", "b|chord"};
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      DatasetRecord r;
      r.figure_id = "fig";
      r.pattern = patterns[i];
      r.substrate_kinds = {"square"};
      QAPair q;
      q.question = "q" + std::to_string(i);
      q.answer = "a";
      q.qtype = "angle";
      q.status = QAStatus::accepted;
      r.qa = {q};
      records.push_back(r);
    }
    auto stats = compute_stats(records, &embedder);
    CHECK(stats.unique_patterns == 3);  // {a|median, b|chord, a|altitude}
    CHECK(stats.question_types["angle"] == 5);
  }
  SECTION("stats are deterministic and diversity is positive on a real corpus") {
    auto dir = fresh_dir("stats");
    run_mock_pipeline(dir, 10, 404, catalog);
    auto records = read_corpus(dir.string());
    auto a = compute_stats(records, &embedder, 5000, 0);
    auto b = compute_stats(records, &embedder, 5000, 0);
    CHECK(a.to_json().dump() == b.to_json().dump());
    REQUIRE(a.diversity.has_value());
    CHECK(*a.diversity > 0.0);
    CHECK(a.qa_per_figure ==
          Catch::Approx(static_cast<double>(a.qa_pairs) / a.figures));
  }
  SECTION("failing embedder marks diversity unavailable") {
    struct Broken : Embedder {
      std::vector<float> embed(const std::string&) override {
        throw Error(ErrorCode::client_error, "offline");
      }
    } broken;
    DatasetRecord r;
    r.figure_id = "fig_000000";
    r.pattern = "p";
    QAPair q;
    q.question = "q";
    q.answer = "a";
    q.qtype = "area";
    q.status = QAStatus::accepted;
    r.qa = {q};
    auto stats = compute_stats({r}, &broken);
    CHECK_FALSE(stats.diversity.has_value());
    CHECK(stats.to_json()["diversity"].is_null());
  }
}

TEST_CASE("augmentation pipeline") {
  Catalog catalog = default_catalog();
  PromptAssets assets = load_prompt_assets();
  MockCompletionClient client;

  auto dir = fresh_dir("augment");
  // Three-item external corpus, one malformed row that must be skipped.
  {
    std::ofstream out(dir / "source.jsonl");
    out << R"({"id":"g1","question":"In triangle ABC, AB = AC and the base angle at B is 50 degrees. What is the apex angle at A?","cot_answer":"Base angles are equal so angle C is 50 degrees. The angle sum gives angle A = 180 - 50 - 50 = 80 degrees."})"
        << "\n";
    out << "{broken json\n";
    out << R"({"id":"g2","question":"A tangent from P touches circle O of radius 3 at T, and OP = 5. Find PT.","cot_answer":"The radius OT is perpendicular to PT. By the Pythagorean theorem PT squared is 25 - 9 = 16, so PT = 4.","image":"g2.png"})"
        << "\n";
    out << R"({"id":"g3","question":"Parallelogram ABCD has AB = 9 and BC = 5. Find its perimeter.","cot_answer":"Opposite sides are equal. The perimeter is 9 + 5 + 9 + 5 = 28."})"
        << "\n";
  }

  SECTION("three stages produce one record per source item, one pair per step") {
    std::vector<std::string> warnings;
    auto items = read_external_qa((dir / "source.jsonl").string(), &warnings);
    REQUIRE(items.size() == 3);
    CHECK(warnings.size() == 1);
    std::vector<AugmentationRecord> records;
    for (const auto& item : items) records.push_back(augment_one(item, client, assets));
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& rec = records[i];
      INFO("source " << rec.source_id);
      CHECK_FALSE(rec.analysis.empty());
      CHECK(rec.steps.size() >= 2);
      CHECK(rec.qa.size() == rec.steps.size());
      for (const auto& pair : rec.qa) {
        // Output excludes the source question; every pair maps to a step.
        CHECK(pair.question != items[i].question);
        REQUIRE(pair.chain.size() == 1);
        CHECK(pair.chain[0] < static_cast<int>(rec.steps.size()));
      }
    }
  }
  SECTION("empty source file gives an empty stream with no errors") {
    std::ofstream(dir / "empty.jsonl").close();
    auto items = read_external_qa((dir / "empty.jsonl").string());
    CHECK(items.empty());
  }
  SECTION("strict mode routes augmented pairs through the reverse judge") {
    auto items = read_external_qa((dir / "source.jsonl").string());
    auto rec = augment_one(items[0], client, assets);
    REQUIRE_FALSE(rec.qa.empty());
    bool complete = strict_filter_augmented(rec, items[0], catalog, client, assets);
    CHECK(complete);
    for (const auto& pair : rec.qa) CHECK(pair.status != QAStatus::candidate);
  }
}

TEST_CASE("request log jsonl carries the documented fields") {
  Catalog catalog = default_catalog();
  auto dir = fresh_dir("reqlog");
  run_mock_pipeline(dir, 2, 9001, catalog);
  std::istringstream log(slurp(dir / "requests.jsonl"));
  std::string line;
  std::size_t n = 0;
  while (std::getline(log, line)) {
    auto j = ordered_json::parse(line);
    CHECK(j.contains("id"));
    CHECK(j.contains("prompt_hash"));
    CHECK(j.contains("response"));
    CHECK(j.contains("latency_ms"));
    CHECK(j["latency_ms"] == 0.0);  // deterministic under the mock
    ++n;
  }
  CHECK(n > 0);
}
