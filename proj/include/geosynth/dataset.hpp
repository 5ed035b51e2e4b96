#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "geosynth/reasoner.hpp"
#include "geosynth/svg.hpp"

namespace geosynth {

// ---------------------------------------------------------------------------
// Scene <-> JSON
// ---------------------------------------------------------------------------

inline ordered_json scene_to_json(const Scene& scene) {
  ordered_json j;
  ordered_json verts = ordered_json::array();
  for (const auto& [label, p] : scene.vertices())
    verts.push_back({{"label", label}, {"x", p.x}, {"y", p.y}});
  j["vertices"] = verts;
  ordered_json prims = ordered_json::array();
  for (const Primitive& p : scene.primitives()) {
    ordered_json pj;
    if (p.kind == PrimitiveKind::segment) {
      pj["kind"] = "segment";
      pj["a"] = p.a;
      pj["b"] = p.b;
    } else if (p.kind == PrimitiveKind::circle) {
      pj["kind"] = "circle";
      pj["center"] = p.center;
      pj["radius"] = p.radius;
    } else {
      pj["kind"] = "arc";
      pj["center"] = p.center;
      pj["radius"] = p.radius;
      pj["a"] = p.a;
      pj["b"] = p.b;
    }
    ordered_json roles = ordered_json::array();
    for (RoleTag r : p.roles) roles.push_back(role_name(r));
    pj["roles"] = roles;
    prims.push_back(pj);
  }
  j["primitives"] = prims;
  ordered_json subs = ordered_json::array();
  for (const auto& s : scene.substrates()) {
    ordered_json sj;
    sj["kind"] = s.kind;
    sj["verts"] = s.verts;
    sj["cycle"] = s.cycle;
    if (s.circle_center) {
      sj["center"] = *s.circle_center;
      sj["radius"] = s.circle_radius;
    }
    if (!s.external_points.empty()) sj["external"] = s.external_points;
    subs.push_back(sj);
  }
  j["substrates"] = subs;
  ordered_json inj = ordered_json::array();
  for (const auto& e : scene.injected()) {
    ordered_json ej;
    ej["role"] = role_name(e.role);
    ej["a"] = e.seg_a;
    ej["b"] = e.seg_b;
    ej["context"] = e.context;
    ej["primitive"] = e.primitive_index;
    inj.push_back(ej);
  }
  j["injected"] = inj;
  ordered_json anns = ordered_json::array();
  for (const auto& a : scene.annotations())
    anns.push_back({{"target", a.target_id}, {"text", a.text}});
  j["annotations"] = anns;
  ordered_json log = ordered_json::array();
  for (const auto& step : scene.construction_log()) {
    ordered_json lj;
    lj["kind"] = step.kind == ConstructionStep::Kind::substrate      ? "substrate"
                 : step.kind == ConstructionStep::Kind::line_element ? "line-element"
                                                                     : "annotation";
    lj["ref"] = step.ref;
    lj["theorems"] = step.theorem_ids;
    log.push_back(lj);
  }
  j["log"] = log;
  return j;
}

inline Scene scene_from_json(const ordered_json& j) {
  Scene scene;
  for (const auto& v : j.at("vertices"))
    scene.add_vertex_labeled(v.at("label").get<std::string>(),
                             {v.at("x").get<double>(), v.at("y").get<double>()});
  for (const auto& pj : j.at("primitives")) {
    std::vector<RoleTag> roles;
    for (const auto& r : pj.at("roles")) {
      auto role = parse_role(r.get<std::string>());
      if (!role) throw Error(ErrorCode::schema_violation, "unknown role in scene");
      roles.push_back(*role);
    }
    std::string kind = pj.at("kind").get<std::string>();
    if (kind == "segment") {
      scene.add_segment(pj.at("a").get<std::string>(), pj.at("b").get<std::string>(),
                        std::move(roles));
    } else if (kind == "circle") {
      scene.add_circle(pj.at("center").get<std::string>(), pj.at("radius").get<double>(),
                       std::move(roles));
    } else {
      throw Error(ErrorCode::schema_violation, "unsupported primitive kind " + kind);
    }
  }
  for (const auto& sj : j.at("substrates")) {
    SubstrateInstance inst;
    inst.kind = sj.at("kind").get<std::string>();
    for (const auto& v : sj.at("verts")) inst.verts.push_back(v.get<std::string>());
    for (const auto& v : sj.at("cycle")) inst.cycle.push_back(v.get<std::string>());
    if (sj.contains("center")) {
      inst.circle_center = sj.at("center").get<std::string>();
      inst.circle_radius = sj.at("radius").get<double>();
    }
    if (sj.contains("external"))
      for (const auto& v : sj.at("external"))
        inst.external_points.push_back(v.get<std::string>());
    scene.substrates().push_back(std::move(inst));
  }
  for (const auto& ej : j.at("injected")) {
    InjectedElement el;
    el.role = *parse_role(ej.at("role").get<std::string>());
    el.seg_a = ej.at("a").get<std::string>();
    el.seg_b = ej.at("b").get<std::string>();
    for (const auto& c : ej.at("context")) el.context.push_back(c.get<std::string>());
    el.primitive_index = ej.at("primitive").get<std::size_t>();
    scene.injected().push_back(std::move(el));
  }
  for (const auto& aj : j.at("annotations"))
    scene.annotations().push_back(
        {aj.at("target").get<std::string>(), aj.at("text").get<std::string>()});
  for (const auto& lj : j.at("log")) {
    ConstructionStep step;
    std::string kind = lj.at("kind").get<std::string>();
    step.kind = kind == "substrate"      ? ConstructionStep::Kind::substrate
                : kind == "line-element" ? ConstructionStep::Kind::line_element
                                         : ConstructionStep::Kind::annotation;
    step.ref = lj.at("ref").get<std::size_t>();
    for (const auto& t : lj.at("theorems")) step.theorem_ids.push_back(t.get<std::string>());
    scene.construction_log().push_back(std::move(step));
  }
  return scene;
}

inline PropertyLedger ledger_from_json(const ordered_json& j) {
  PropertyLedger ledger;
  for (const auto& [k, v] : j.at("lengths").items()) ledger.lengths[k] = v.get<double>();
  for (const auto& [k, v] : j.at("angles").items()) ledger.angles[k] = v.get<double>();
  for (const auto& [k, v] : j.at("areas").items()) ledger.areas[k] = v.get<double>();
  for (const auto& rj : j.at("relations")) {
    Relation r;
    std::string kind = rj.at("kind").get<std::string>();
    for (RelationKind rk :
         {RelationKind::parallel, RelationKind::perpendicular, RelationKind::equal_length,
          RelationKind::congruent_triangles, RelationKind::tangent,
          RelationKind::point_on_circle, RelationKind::midpoint_of})
      if (kind == relation_name(rk)) r.kind = rk;
    for (const auto& e : rj.at("elements")) r.elements.push_back(e.get<std::string>());
    r.residual = rj.at("residual").get<double>();
    ledger.relations.push_back(std::move(r));
  }
  for (const auto& [k, v] : j.at("displayed").items())
    ledger.displayed[k] = v.get<std::string>();
  return ledger;
}

// ---------------------------------------------------------------------------
// QA pairs and steps <-> JSON
// ---------------------------------------------------------------------------

inline ordered_json claim_to_json(const NumericClaim& c) {
  ordered_json j;
  j["kind"] = c.kind == NumericClaim::Kind::length  ? "length"
              : c.kind == NumericClaim::Kind::angle ? "angle"
                                                    : "area";
  j["ids"] = c.ids;
  j["value"] = c.value;
  return j;
}

inline NumericClaim claim_from_json(const ordered_json& j) {
  NumericClaim c;
  std::string kind = j.at("kind").get<std::string>();
  c.kind = kind == "length"  ? NumericClaim::Kind::length
           : kind == "angle" ? NumericClaim::Kind::angle
                             : NumericClaim::Kind::area;
  for (const auto& id : j.at("ids")) c.ids.push_back(id.get<std::string>());
  c.value = j.at("value").get<double>();
  return c;
}

inline ordered_json qa_to_json(const QAPair& q) {
  ordered_json j;
  j["question"] = q.question;
  j["answer"] = q.answer;
  j["type"] = q.qtype;
  j["chain"] = q.chain;
  ordered_json claims = ordered_json::array();
  for (const auto& c : q.claims) claims.push_back(claim_to_json(c));
  j["claims"] = claims;
  j["theorems"] = q.theorem_ids;
  j["status"] = q.status == QAStatus::accepted   ? "accepted"
                : q.status == QAStatus::rejected ? "rejected"
                                                 : "candidate";
  if (q.status == QAStatus::rejected) j["reason"] = reject_reason_name(q.reason);
  return j;
}

inline QAPair qa_from_json(const ordered_json& j) {
  QAPair q;
  q.question = j.at("question").get<std::string>();
  q.answer = j.at("answer").get<std::string>();
  q.qtype = j.at("type").get<std::string>();
  for (const auto& c : j.at("chain")) q.chain.push_back(c.get<int>());
  for (const auto& c : j.at("claims")) q.claims.push_back(claim_from_json(c));
  for (const auto& t : j.at("theorems")) q.theorem_ids.push_back(t.get<std::string>());
  std::string status = j.at("status").get<std::string>();
  q.status = status == "accepted"   ? QAStatus::accepted
             : status == "rejected" ? QAStatus::rejected
                                    : QAStatus::candidate;
  if (j.contains("reason")) {
    std::string r = j.at("reason").get<std::string>();
    for (RejectReason rr :
         {RejectReason::theorem_violation, RejectReason::metric_discrepancy,
          RejectReason::diagram_text_mismatch, RejectReason::answerability_ambiguity})
      if (r == reject_reason_name(rr)) q.reason = rr;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Dataset records
// ---------------------------------------------------------------------------

struct DatasetRecord {
  std::string figure_id;
  std::string image;  // relative path within the corpus directory
  std::string description;
  Scene scene;
  PropertyLedger ledger;
  std::vector<ReasoningStep> steps;
  std::vector<QAPair> qa;
  std::vector<std::string> theorem_ids;
  std::vector<std::string> substrate_kinds;
  std::string pattern;

  ordered_json to_json() const {
    ordered_json j;
    j["figure_id"] = figure_id;
    j["image"] = image;
    j["description"] = description;
    j["scene"] = scene_to_json(scene);
    j["ledger"] = ledger.to_json();
    ordered_json sj = ordered_json::array();
    for (const auto& s : steps) {
      ordered_json stepj;
      stepj["index"] = s.index;
      stepj["statement"] = s.statement;
      stepj["theorems"] = s.theorem_ids;
      ordered_json claims = ordered_json::array();
      for (const auto& c : s.claims) claims.push_back(claim_to_json(c));
      stepj["claims"] = claims;
      sj.push_back(stepj);
    }
    j["steps"] = sj;
    ordered_json qj = ordered_json::array();
    for (const auto& q : qa) qj.push_back(qa_to_json(q));
    j["qa"] = qj;
    j["theorems"] = theorem_ids;
    j["substrates"] = substrate_kinds;
    j["pattern"] = pattern;
    return j;
  }

  static DatasetRecord from_json(const ordered_json& j) {
    DatasetRecord r;
    r.figure_id = j.at("figure_id").get<std::string>();
    r.image = j.at("image").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.scene = scene_from_json(j.at("scene"));
    r.ledger = ledger_from_json(j.at("ledger"));
    for (const auto& stepj : j.at("steps")) {
      ReasoningStep s;
      s.index = stepj.at("index").get<int>();
      s.statement = stepj.at("statement").get<std::string>();
      for (const auto& t : stepj.at("theorems")) s.theorem_ids.push_back(t.get<std::string>());
      for (const auto& c : stepj.at("claims")) s.claims.push_back(claim_from_json(c));
      r.steps.push_back(std::move(s));
    }
    for (const auto& qj : j.at("qa")) r.qa.push_back(qa_from_json(qj));
    for (const auto& t : j.at("theorems")) r.theorem_ids.push_back(t.get<std::string>());
    for (const auto& s : j.at("substrates")) r.substrate_kinds.push_back(s.get<std::string>());
    r.pattern = j.at("pattern").get<std::string>();
    return r;
  }
};

// ---------------------------------------------------------------------------
// Corpus writing: dataset.jsonl + images/ + manifest.json, byte-identical on
// identical input. The JSONL is staged to a temp name and renamed so a
// schema failure never finalizes a partial corpus.
// ---------------------------------------------------------------------------

struct CorpusCounts {
  std::uint64_t figures_requested{0};
  std::uint64_t figures_written{0};
  std::uint64_t fidelity_rejected{0};
  std::uint64_t reasoner_rejected_figures{0};
  std::uint64_t empty_qa_figures{0};
  std::uint64_t qa_candidates{0};
  std::uint64_t qa_accepted{0};
  std::map<std::string, std::uint64_t> qa_rejected;

  ordered_json to_json() const {
    ordered_json j;
    j["figures_requested"] = figures_requested;
    j["figures_written"] = figures_written;
    j["fidelity_rejected"] = fidelity_rejected;
    j["reasoner_rejected_figures"] = reasoner_rejected_figures;
    j["empty_qa_figures"] = empty_qa_figures;
    j["qa_candidates"] = qa_candidates;
    j["qa_accepted"] = qa_accepted;
    ordered_json rej = ordered_json::object();
    for (const auto& [k, v] : qa_rejected) rej[k] = v;
    j["qa_rejected"] = rej;
    return j;
  }
};

struct Manifest {
  int schema_version{1};
  ordered_json config;
  std::string config_hash;
  std::string catalog_hash;
  CorpusCounts counts;
  bool complete{true};

  ordered_json to_json() const {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["config"] = config;
    j["config_hash"] = config_hash;
    j["catalog_hash"] = catalog_hash;
    j["counts"] = counts.to_json();
    j["complete"] = complete;
    return j;
  }
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
  out << content;
  if (!out.good()) throw Error(ErrorCode::io_error, "short write to " + path.string());
}

inline Manifest write_corpus(const std::vector<DatasetRecord>& records,
                             const std::string& out_dir, Manifest manifest,
                             bool write_images = true) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::string jsonl;
  for (const auto& r : records) jsonl += r.to_json().dump() + "\n";
  fs::path staged = fs::path(out_dir) / "dataset.jsonl.tmp";
  write_file(staged, jsonl);
  fs::rename(staged, fs::path(out_dir) / "dataset.jsonl");
  if (write_images) {
    fs::create_directories(fs::path(out_dir) / "images");
    for (const auto& r : records)
      write_file(fs::path(out_dir) / r.image, render_svg(r.scene));
  }
  manifest.counts.figures_written = records.size();
  write_file(fs::path(out_dir) / "manifest.json", manifest.to_json().dump(2) + "\n");
  return manifest;
}

inline std::vector<DatasetRecord> read_corpus(const std::string& path) {
  namespace fs = std::filesystem;
  fs::path jsonl = fs::is_directory(path) ? fs::path(path) / "dataset.jsonl" : fs::path(path);
  std::ifstream in(jsonl, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open corpus at " + jsonl.string());
  std::vector<DatasetRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(DatasetRecord::from_json(ordered_json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse_error,
                  jsonl.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus statistics
// ---------------------------------------------------------------------------

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::vector<float> embed(const std::string& text) = 0;
};

// Hashed bag of character trigrams, fixed dimension, L2-normalized.
// Deterministic, dependency-free; the drop-in for CI runs.
class TrigramEmbedder : public Embedder {
 public:
  explicit TrigramEmbedder(std::size_t dim = 256) : dim_(dim) {}
  std::vector<float> embed(const std::string& text) override {
    std::vector<float> v(dim_, 0.0f);
    if (text.size() >= 3) {
      for (std::size_t i = 0; i + 3 <= text.size(); ++i)
        v[fnv1a64(std::string_view(text).substr(i, 3)) % dim_] += 1.0f;
    } else {
      v[fnv1a64(text) % dim_] += 1.0f;
    }
    double norm2 = 0;
    for (float x : v) norm2 += static_cast<double>(x) * x;
    if (norm2 > 0) {
      float inv = static_cast<float>(1.0 / std::sqrt(norm2));
      for (float& x : v) x *= inv;
    }
    return v;
  }

 private:
  std::size_t dim_;
};

struct CorpusStats {
  std::uint64_t figures{0};
  std::uint64_t qa_pairs{0};
  double qa_per_figure{0};
  std::map<std::string, std::uint64_t> substrate_distribution;
  std::map<std::string, std::uint64_t> question_types;
  std::uint64_t unique_patterns{0};
  std::optional<double> diversity;  // mean pairwise cosine distance
  std::uint64_t diversity_sample{0};

  ordered_json to_json() const {
    ordered_json j;
    j["figures"] = figures;
    j["qa_pairs"] = qa_pairs;
    j["qa_per_figure"] = qa_per_figure;
    ordered_json sd = ordered_json::object();
    for (const auto& [k, v] : substrate_distribution) sd[k] = v;
    j["substrate_distribution"] = sd;
    ordered_json qt = ordered_json::object();
    for (const auto& [k, v] : question_types) qt[k] = v;
    j["question_types"] = qt;
    j["unique_patterns"] = unique_patterns;
    if (diversity) {
      j["diversity"] = *diversity;
      j["diversity_sample"] = diversity_sample;
    } else {
      j["diversity"] = nullptr;
    }
    return j;
  }
};

// Mean pairwise cosine distance via the normalized-sum identity:
// mean pairwise cosine similarity = (|sum u|^2 - N) / (N (N - 1)).
inline CorpusStats compute_stats(const std::vector<DatasetRecord>& records,
                                 Embedder* embedder, std::size_t sample_size = 5000,
                                 std::uint64_t sample_seed = 0) {
  if (records.empty()) throw Error(ErrorCode::invalid_config, "empty corpus");
  CorpusStats stats;
  stats.figures = records.size();
  std::set<std::string> patterns;
  std::vector<std::string> texts;
  for (const auto& r : records) {
    patterns.insert(r.pattern);
    for (const auto& k : r.substrate_kinds) stats.substrate_distribution[k]++;
    for (const auto& q : r.qa) {
      if (q.status == QAStatus::rejected) continue;
      ++stats.qa_pairs;
      stats.question_types[q.qtype]++;
      texts.push_back(q.question + " " + q.answer);
    }
  }
  stats.qa_per_figure =
      static_cast<double>(stats.qa_pairs) / static_cast<double>(stats.figures);
  stats.unique_patterns = patterns.size();

  if (embedder && !texts.empty()) {
    Rng rng(sample_seed);
    std::vector<std::size_t> idx =
        rng.sample_indices(texts.size(), std::min(sample_size, texts.size()));
    std::sort(idx.begin(), idx.end());
    try {
      std::vector<double> sum;
      std::size_t n = 0;
      for (std::size_t i : idx) {
        auto v = embedder->embed(texts[i]);
        if (sum.empty()) sum.assign(v.size(), 0.0);
        if (v.size() != sum.size())
          throw Error(ErrorCode::client_error, "embedder dimension changed");
        for (std::size_t d = 0; d < v.size(); ++d) sum[d] += v[d];
        ++n;
      }
      if (n >= 2) {
        double norm2 = 0;
        for (double x : sum) norm2 += x * x;
        double mean_sim = (norm2 - static_cast<double>(n)) /
                          (static_cast<double>(n) * static_cast<double>(n - 1));
        // Cosine distance lives in [0, 2]; float accumulation can stray by
        // ~1e-7, so pin it back.
        stats.diversity = std::clamp(1.0 - mean_sim, 0.0, 2.0);
        stats.diversity_sample = n;
      } else {
        stats.diversity = 0.0;
        stats.diversity_sample = n;
      }
    } catch (const Error&) {
      stats.diversity = std::nullopt;  // embedding backend failed
    }
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Augmentation over an external question/answer corpus: full analysis, step
// segmentation, one new pair per step. The source pairs never appear in the
// output.
// ---------------------------------------------------------------------------

struct ExternalQA {
  std::string id;
  std::string question;
  std::string cot_answer;
  std::string image;
};

struct AugmentationRecord {
  std::string source_id;
  std::string analysis;
  std::vector<std::string> steps;
  std::vector<QAPair> qa;

  ordered_json to_json() const {
    ordered_json j;
    j["source_id"] = source_id;
    j["analysis"] = analysis;
    j["steps"] = steps;
    ordered_json qj = ordered_json::array();
    for (const auto& q : qa) qj.push_back(qa_to_json(q));
    j["qa"] = qj;
    return j;
  }
};

inline std::vector<ExternalQA> read_external_qa(const std::string& path,
                                                std::vector<std::string>* warnings = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open source corpus " + path);
  std::vector<ExternalQA> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto j = ordered_json::parse(line);
      ExternalQA item;
      item.id = j.at("id").get<std::string>();
      item.question = j.at("question").get<std::string>();
      item.cot_answer = j.at("cot_answer").get<std::string>();
      if (j.contains("image")) item.image = j.at("image").get<std::string>();
      out.push_back(std::move(item));
    } catch (const nlohmann::json::exception& e) {
      if (warnings)
        warnings->push_back(path + ":" + std::to_string(lineno) + ": skipped (" +
                            e.what() + ")");
    }
  }
  return out;
}

inline AugmentationRecord augment_one(const ExternalQA& item, CompletionClient& client,
                                      const PromptAssets& assets) {
  using reasoner_detail::fenced_block;
  using reasoner_detail::labeled_line;
  AugmentationRecord rec;
  rec.source_id = item.id;

  auto analysis_prompt = prompt_detail::fill(
      assets.skeleton("augment_analysis.txt"),
      {{"EXAMPLES", prompt_detail::render_examples(assets, "analysis")},
       {"QUESTION", item.question},
       {"COT", item.cot_answer}});
  auto analysis = client.complete("aug:" + item.id + ":analysis", analysis_prompt);
  if (!analysis.ok)
    throw Error(ErrorCode::client_error, "analysis failed for " + item.id);
  rec.analysis = fenced_block(analysis.text, "analysis").value_or(analysis.text);

  auto segment_prompt = prompt_detail::fill(
      assets.skeleton("augment_segment.txt"),
      {{"EXAMPLES", prompt_detail::render_examples(assets, "segment")},
       {"ANALYSIS", rec.analysis}});
  auto segmented = client.complete("aug:" + item.id + ":segment", segment_prompt);
  if (!segmented.ok)
    throw Error(ErrorCode::client_error, "segmentation failed for " + item.id);
  if (auto block = fenced_block(segmented.text, "steps")) {
    std::istringstream ss(*block);
    std::string line;
    while (std::getline(ss, line)) {
      auto pos = line.find("STEP ");
      if (pos == std::string::npos) continue;
      auto colon = line.find(':', pos);
      if (colon == std::string::npos) continue;
      std::string text = line.substr(colon + 1);
      while (!text.empty() && text.front() == ' ') text.erase(text.begin());
      if (!text.empty()) rec.steps.push_back(text);
    }
  }

  for (std::size_t i = 0; i < rec.steps.size(); ++i) {
    auto qa_prompt = prompt_detail::fill(
        assets.skeleton("augment_stepqa.txt"),
        {{"EXAMPLES", prompt_detail::render_examples(assets, "stepqa")},
         {"QUESTION", item.question},
         {"STEP", rec.steps[i]}});
    auto got = client.complete("aug:" + item.id + ":qa:" + std::to_string(i), qa_prompt);
    if (!got.ok)
      throw Error(ErrorCode::client_error, "step QA failed for " + item.id);
    auto block = fenced_block(got.text, "question");
    if (!block) continue;
    auto question = labeled_line(*block, "QUESTION");
    auto answer = labeled_line(*block, "ANSWER");
    if (!question || !answer || question->empty()) continue;
    if (*question == item.question) continue;  // the source pair itself is excluded
    QAPair pair;
    pair.question = *question;
    pair.answer = *answer;
    pair.qtype = "relationship";
    pair.chain = {static_cast<int>(i)};
    pair.status = QAStatus::candidate;
    rec.qa.push_back(std::move(pair));
  }
  return rec;
}

// Optional strict mode: augmented pairs have no ledger to check against, so
// the forward pass is vacuous and only the reverse judgement applies.
inline bool strict_filter_augmented(AugmentationRecord& rec, const ExternalQA& item,
                                    const Catalog& catalog, CompletionClient& client,
                                    const PromptAssets& assets) {
  Scene empty_scene;
  PropertyLedger empty_ledger;
  std::vector<ReasoningStep> no_chain;
  auto outcome = filter_qa(rec.qa, no_chain, empty_ledger, empty_scene, catalog, client,
                           assets, "aug:" + item.id, item.question);
  return outcome.complete;
}

}  // namespace geosynth
