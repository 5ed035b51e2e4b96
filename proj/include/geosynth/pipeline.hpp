#pragma once

#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

#include "geosynth/dataset.hpp"
#include "geosynth/generate.hpp"

namespace geosynth {

struct PipelineOptions {
  GenerationConfig config;
  std::uint64_t figures{10};
  std::string out_dir;
  bool dry_run{false};  // figures and ledgers only, no completion requests
  int jobs{1};
  bool write_images{true};
  bool keep_empty_qa{false};
};

struct ProgressSink {
  virtual ~ProgressSink() = default;
  virtual void event(const std::string& kind, const ordered_json& payload) = 0;
};

namespace pipeline_detail {

inline std::string figure_name(std::uint64_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fig_%06llu", static_cast<unsigned long long>(index));
  return buf;
}

}  // namespace pipeline_detail

// One figure end to end: generation, patch reasoning, reverse question
// generation, bidirectional filtering. Returns nothing when the figure is
// dropped (fidelity retries exhausted or reasoning malformed).
inline std::optional<DatasetRecord> build_record(
    const PipelineOptions& opts, const Catalog& catalog, CompletionClient* client,
    const PromptAssets* assets, std::uint64_t index, CorpusCounts& counts,
    std::mutex& counts_mu, bool& complete) {
  FigureBundle fig;
  try {
    fig = generate_figure(opts.config, catalog, index);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::retry_exhausted) {
      std::lock_guard<std::mutex> lock(counts_mu);
      ++counts.fidelity_rejected;
      return std::nullopt;
    }
    throw;
  }

  DatasetRecord rec;
  rec.figure_id = pipeline_detail::figure_name(index);
  rec.image = "images/" + rec.figure_id + ".svg";
  rec.description = fig.description.joined();
  rec.theorem_ids = fig.theorem_ids;
  rec.substrate_kinds = fig.substrate_kinds;
  rec.pattern = fig.pattern_key;

  if (!opts.dry_run) {
    if (!client || !assets)
      throw Error(ErrorCode::invalid_config, "reasoner stages need a client and prompts");
    std::vector<const Theorem*> theorems;
    for (const auto& id : fig.theorem_ids)
      if (const Theorem* t = catalog.theorem_by_id(id)) theorems.push_back(t);
    auto tags = figure_query_tags(catalog, fig.theorem_ids);
    auto chain = patch_reasoning_fusion(fig.description, theorems, *client, *assets, tags,
                                        rec.figure_id);
    if (!chain.empty() && chain.back().malformed) {
      std::lock_guard<std::mutex> lock(counts_mu);
      ++counts.reasoner_rejected_figures;
      return std::nullopt;
    }
    auto pairs = reverse_question_generation(chain, fig.ledger, fig.scene, catalog,
                                             *client, *assets, tags, rec.figure_id,
                                             rec.description);
    auto outcome = filter_qa(pairs, chain, fig.ledger, fig.scene, catalog, *client,
                             *assets, rec.figure_id, rec.description);
    {
      std::lock_guard<std::mutex> lock(counts_mu);
      counts.qa_candidates += pairs.size();
      for (const auto& pair : pairs) {
        if (pair.status == QAStatus::accepted) ++counts.qa_accepted;
        if (pair.status == QAStatus::rejected)
          ++counts.qa_rejected[reject_reason_name(pair.reason)];
      }
      if (!outcome.complete) complete = false;
    }
    rec.steps = chain;
    for (const auto& pair : pairs)
      if (pair.status == QAStatus::accepted) rec.qa.push_back(pair);
    if (rec.qa.empty() && !opts.keep_empty_qa) {
      std::lock_guard<std::mutex> lock(counts_mu);
      ++counts.empty_qa_figures;
      return std::nullopt;
    }
  }
  rec.scene = std::move(fig.scene);
  rec.ledger = std::move(fig.ledger);
  return rec;
}

// Full generation run: the worker pool owns figure indices; results merge in
// index order so output bytes do not depend on scheduling.
inline Manifest run_generation(const PipelineOptions& opts, const Catalog& catalog,
                               CompletionClient* client, const PromptAssets* assets,
                               RequestLog* log = nullptr, ProgressSink* progress = nullptr) {
  CorpusCounts counts;
  counts.figures_requested = opts.figures;
  bool complete = true;
  std::mutex counts_mu;
  std::vector<std::optional<DatasetRecord>> slots(opts.figures);

  std::exception_ptr first_error;
  std::mutex error_mu;
  std::atomic<std::uint64_t> next{0};
  int jobs = std::max(1, opts.jobs);
  auto worker = [&]() {
    while (true) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= opts.figures) break;
      {
        std::lock_guard<std::mutex> lock(error_mu);
        if (first_error) break;
      }
      try {
        slots[i] = build_record(opts, catalog, client, assets, i, counts, counts_mu,
                                complete);
        if (progress) {
          ordered_json payload;
          payload["figure"] = i;
          payload["kept"] = slots[i].has_value();
          progress->event("figure", payload);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        break;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<DatasetRecord> records;
  for (auto& slot : slots)
    if (slot) records.push_back(std::move(*slot));

  Manifest manifest;
  manifest.config = opts.config.to_json();
  manifest.config["figures"] = opts.figures;
  manifest.config["dry_run"] = opts.dry_run;
  manifest.config_hash = digest_hex(manifest.config.dump());
  manifest.catalog_hash = digest_hex(catalog.canonical_text());
  manifest.counts = counts;
  manifest.complete = complete;
  manifest = write_corpus(records, opts.out_dir, manifest, opts.write_images);
  if (log && !opts.dry_run)
    write_file(std::filesystem::path(opts.out_dir) / "requests.jsonl", log->to_jsonl());
  return manifest;
}

// ---------------------------------------------------------------------------
// Corpus validation: recompute ledgers from the stored scenes, compare, and
// re-run the deterministic checks on every accepted pair.
// ---------------------------------------------------------------------------

struct CorpusViolation {
  std::size_t record_index{0};
  std::string figure_id;
  std::string detail;
};

struct ValidateReport {
  std::uint64_t records{0};
  std::uint64_t accepted_pairs{0};
  std::vector<CorpusViolation> violations;

  ordered_json to_json() const {
    ordered_json j;
    j["records"] = records;
    j["accepted_pairs"] = accepted_pairs;
    ordered_json v = ordered_json::array();
    for (const auto& viol : violations) {
      ordered_json vj;
      vj["record"] = viol.record_index;
      vj["figure_id"] = viol.figure_id;
      vj["detail"] = viol.detail;
      v.push_back(vj);
    }
    j["violations"] = v;
    return j;
  }
};

inline ValidateReport validate_corpus(const std::vector<DatasetRecord>& records,
                                      const Catalog& catalog) {
  ValidateReport report;
  report.records = records.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    auto flag = [&](const std::string& detail) {
      report.violations.push_back({i, rec.figure_id, detail});
    };
    PropertyLedger fresh;
    try {
      fresh = compute_ledger(rec.scene);
    } catch (const Error& e) {
      flag(std::string("ledger recompute failed: ") + e.what());
      continue;
    }
    for (const auto& [key, value] : rec.ledger.lengths) {
      auto it = fresh.lengths.find(key);
      if (it == fresh.lengths.end())
        flag("stored length " + key + " has no recomputed counterpart");
      else if (std::abs(it->second - value) > 1e-9)
        flag("stored length " + key + " drifted from the scene");
    }
    for (const auto& [key, value] : rec.ledger.angles) {
      auto it = fresh.angles.find(key);
      if (it == fresh.angles.end())
        flag("stored angle " + key + " has no recomputed counterpart");
      else if (std::abs(it->second - value) > 1e-9)
        flag("stored angle " + key + " drifted from the scene");
    }
    for (const auto& [key, value] : rec.ledger.areas) {
      auto it = fresh.areas.find(key);
      if (it == fresh.areas.end())
        flag("stored area " + key + " has no recomputed counterpart");
      else if (std::abs(it->second - value) > 1e-9 * std::max(1.0, value))
        flag("stored area " + key + " drifted from the scene");
    }
    for (const auto& pair : rec.qa) {
      if (pair.status != QAStatus::accepted) {
        flag("record carries a non-accepted pair");
        continue;
      }
      ++report.accepted_pairs;
      auto claims = validate_claims(pair.claims, fresh, rec.scene);
      if (!claims.ok) flag("accepted pair fails claims: " + claims.detail);
      for (const auto& id : pair.theorem_ids) {
        const Theorem* t = catalog.theorem_by_id(id);
        if (!t) {
          flag("accepted pair cites unknown theorem " + id);
        } else if (!theorem_applicable(*t, rec.scene, &fresh.relations)) {
          flag("accepted pair cites inapplicable theorem " + id);
        }
      }
      for (int step_index : pair.chain) {
        if (step_index < 0 || step_index >= static_cast<int>(rec.steps.size())) continue;
        auto step_report = validate_step(rec.steps[static_cast<std::size_t>(step_index)],
                                         fresh, rec.scene, catalog);
        if (!step_report.ok)
          flag("supporting step " + std::to_string(step_index) +
               " fails validation: " + step_report.detail);
      }
    }
  }
  return report;
}

}  // namespace geosynth
