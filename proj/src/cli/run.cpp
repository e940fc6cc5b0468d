// Copyright 2026 The OncoKG Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "onco/cli/run.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>

#include "onco/clock.hpp"
#include "onco/dlq/repl.hpp"
#include "onco/error.hpp"
#include "onco/extract/pipeline.hpp"
#include "onco/extract/score.hpp"
#include "onco/llm/apply.hpp"
#include "onco/llm/client.hpp"
#include "onco/llm/prompt.hpp"
#include "onco/llm/response.hpp"
#include "onco/llm/triage.hpp"
#include "onco/ontology/gazetteer.hpp"
#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"
#include "onco/quality/assess.hpp"
#include "onco/rdf/ntriples.hpp"
#include "onco/reason/consistency.hpp"
#include "onco/reason/explain.hpp"
#include "onco/reason/saturate.hpp"
#include "onco/util/config.hpp"

namespace onco::cli {

namespace {

using rdf::Graph;

Clock make_clock(const RunConfig& config) {
  if (!config.fake_now.empty()) {
    return fixed_clock_epoch_seconds(std::stoll(config.fake_now));
  }
  return system_clock();
}

Graph load_kg(const std::string& path) {
  Graph graph = rdf::parse_ntriples(ontology::read_file(path));
  graph.register_prefixes(ontology::default_prefixes());
  return graph;
}

void dump_kg(const Graph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write KG file " + path);
  out << rdf::serialize_ntriples(graph);
}

std::vector<reason::Rule> load_rules(const RunConfig& config) {
  if (config.rules.empty()) return {};
  return reason::parse_rules(ontology::read_file(config.rules),
                             ontology::default_prefixes());
}

ontology::Gazetteer make_gazetteer(const Graph& kg, const RunConfig& config) {
  ontology::Gazetteer gazetteer = ontology::Gazetteer::from_graph(kg);
  if (!config.aliases.empty() && std::filesystem::exists(config.aliases)) {
    gazetteer.load_aliases(config.aliases);
  }
  return gazetteer;
}

std::string output_path(const RunConfig& config) {
  return config.out.empty() ? config.kg : config.out;
}

std::string audit_path(const RunConfig& config) {
  return config.audit.empty() ? config.kg + ".audit.jsonl" : config.audit;
}

std::string queue_path(const RunConfig& config) {
  return config.queue.empty() ? config.kg + ".queue.nt" : config.queue;
}

int cmd_build(const RunConfig& config, std::ostream&, std::ostream& err) {
  ontology::SeedReport report;
  Graph graph = ontology::load_seed(config.seed, &report);
  for (const auto& issue : report.issues) {
    err << "seed error: " << issue.subject << ": " << issue.message << "\n";
  }
  if (!report.issues.empty()) return 2;
  dump_kg(graph, output_path(config));
  err << "build: cancers=" << report.cancer_instances << " (tcga=" << report.tcga_instances
      << ") genes=" << report.gene_instances << " triples=" << graph.size() << " -> "
      << output_path(config) << "\n";
  return 0;
}

extract::PipelineOptions pipeline_options(const RunConfig& config) {
  extract::PipelineOptions options;
  options.theta_link = config.theta_link;
  options.jobs = config.jobs;
  const std::string& extractor = config.extractor;
  if (extractor == "builtin" || extractor.empty()) {
    options.mode = extract::ExtractorMode::kBuiltin;
  } else if (extractor.rfind("subprocess:", 0) == 0) {
    options.mode = extract::ExtractorMode::kSubprocess;
    options.extractor_target = extractor.substr(11);
  } else if (extractor.rfind("http:", 0) == 0) {
    options.mode = extract::ExtractorMode::kHttp;
    options.extractor_target = extractor.substr(5);
  } else {
    throw ConfigError("unknown extractor '" + extractor +
                      "' (builtin, subprocess:<cmd>, http:<url>)");
  }
  return options;
}

int cmd_extract(const RunConfig& config, std::ostream&, std::ostream& err) {
  Graph kg = load_kg(config.kg);
  ontology::Gazetteer gazetteer = make_gazetteer(kg, config);
  auto corpus = extract::load_corpus(config.corpus);
  auto result = extract::run_extraction(kg, corpus, gazetteer, pipeline_options(config),
                                        make_clock(config));
  for (const auto& doc : result.docs) {
    err << "extract: " << doc.doc_id << " mentions=" << doc.mentions
        << " linked=" << doc.linked << " candidates=" << doc.candidates
        << " inserted=" << doc.inserted << " duplicates=" << doc.duplicates << "\n";
    for (const auto& e : doc.errors) err << "extract: " << doc.doc_id << ": " << e << "\n";
    for (const auto& u : doc.link_report.unlinked) {
      err << "extract: " << doc.doc_id << ": unlinked for review: " << u << "\n";
    }
  }
  err << "extract: total inserted=" << result.inserted_total
      << " duplicates=" << result.duplicate_total << "\n";
  dump_kg(kg, output_path(config));
  return 0;
}

std::unique_ptr<llm::LlmClient> make_llm_client(const RunConfig& config,
                                                const extract::Document& doc) {
  const std::string& llm = config.llm;
  if (llm.rfind("mock:", 0) == 0) {
    std::filesystem::path path = llm.substr(5);
    if (std::filesystem::is_directory(path)) {
      path /= doc.id + ".response";
    }
    return llm::MockClient::canned(ontology::read_file(path));
  }
  if (llm == "http") {
    return llm::make_http_client(llm::ClientConfig::from_env());
  }
  throw ConfigError("llm must be mock:<path> or http (got '" + llm + "')");
}

int cmd_refresh(const RunConfig& config, std::ostream&, std::ostream& err) {
  Graph kg = load_kg(config.kg);
  ontology::Gazetteer gazetteer = make_gazetteer(kg, config);
  auto corpus = extract::load_corpus(config.corpus);
  auto rules = load_rules(config);
  llm::Policy policy = llm::parse_policy(config.policy);
  Clock clock = make_clock(config);

  for (const auto& doc : corpus) {
    auto client = make_llm_client(config, doc);
    llm::PromptInstance prompt = llm::render_prompt(kg, doc.body);
    std::string response = llm::request(*client, prompt.render());
    llm::ParsedResponse parsed = llm::parse_response(response, kg, gazetteer);
    reason::SaturationResult saturated = reason::saturate(kg, rules, clock);
    llm::DiffReport diff = llm::triage(parsed, saturated, rules);
    llm::ApplyContext context{doc.id, queue_path(config), audit_path(config), clock};
    llm::ApplyResult applied = llm::apply(diff, kg, policy, context);
    err << "refresh: " << doc.id << " parsed=" << diff.partition_size()
        << " new=" << diff.fresh.size() << " confirmed=" << diff.confirmed.size()
        << " conflicting=" << diff.conflicting.size() << " invalid=" << diff.invalid.size()
        << " rejected=" << diff.rejects.size() << " inserted=" << applied.inserted
        << " queued=" << applied.queued << "\n";
  }
  if (policy != llm::Policy::kDryRun) {
    dump_kg(kg, output_path(config));
  }
  return 0;
}

int cmd_reason(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Graph kg = load_kg(config.kg);
  auto rules = load_rules(config);
  reason::SaturationResult saturated = reason::saturate(kg, rules, make_clock(config));
  auto constraints = reason::Constraints::from_graph(saturated.graph);
  auto violations = reason::check_consistency(saturated.graph, constraints);
  out << "asserted=" << kg.size() << " inferred=" << saturated.inferred.size()
      << " rounds=" << saturated.rounds << " violations=" << violations.size() << "\n";
  for (const auto& violation : violations) {
    out << reason::render(violation, saturated.graph) << "\n";
  }
  if (config.strict && !violations.empty()) {
    err << "reason: " << violations.size() << " consistency violations (strict mode)\n";
    return 3;
  }
  return 0;
}

int cmd_query(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Graph kg = load_kg(config.kg);
  auto rules = load_rules(config);
  reason::SaturationResult saturated = reason::saturate(kg, rules, make_clock(config));
  if (config.repl) {
    return dlq::repl(saturated, std::cin, out, err);
  }
  if (config.query.empty()) {
    throw ConfigError("query: provide a query string or --repl");
  }
  dlq::run_query(saturated, config.query, out);
  return 0;
}

int cmd_assess(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Graph kg = load_kg(config.kg);
  quality::QualityConfig qc;
  qc.latency_budget_ms = config.latency_budget_ms;
  quality::QualityReport report = quality::assess(kg, qc, make_clock(config));
  out << report.table();
  std::ofstream json_out(config.report, std::ios::binary | std::ios::trunc);
  if (!json_out) throw Error("cannot write report " + config.report);
  json_out << report.json();
  err << "assess: report written to " << config.report << "\n";
  return 0;
}

int cmd_export(const RunConfig& config, std::ostream&, std::ostream& err) {
  Graph kg = load_kg(config.kg);
  dump_kg(kg, output_path(config));
  err << "export: " << kg.size() << " triples -> " << output_path(config) << "\n";
  return 0;
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream&) {
  Graph kg = load_kg(config.kg);
  std::map<std::string, std::size_t> classes;
  std::map<std::string, std::size_t> predicates;
  for (const auto& [triple, prov] : kg.entries()) {
    ++predicates[kg.compact(triple.predicate)];
    if (triple.predicate == ontology::rdf_type()) {
      ++classes[kg.compact(triple.object)];
    }
  }
  std::size_t cancers = 0;
  std::size_t tcga = 0;
  for (const auto& t :
       kg.match(std::nullopt, ontology::rdf_type(), ontology::vocab::Cancer())) {
    ++cancers;
    if (kg.contains({t.subject, ontology::vocab::tcgaMember(), rdf::Term::boolean(true)})) {
      ++tcga;
    }
  }
  out << "triples=" << kg.size() << "\n";
  out << "cancer_instances=" << cancers << " tcga=" << tcga << "\n";
  out << "classes:\n";
  for (const auto& [name, count] : classes) out << "  " << name << " " << count << "\n";
  out << "predicates:\n";
  for (const auto& [name, count] : predicates) out << "  " << name << " " << count << "\n";
  return 0;
}

void apply_file_config(RunConfig& config, const std::map<std::string, std::string>& file) {
  auto get = [&](const char* key, std::string& into) {
    auto it = file.find(key);
    if (it != file.end()) into = it->second;
  };
  get("seed", config.seed);
  get("kg", config.kg);
  get("corpus", config.corpus);
  get("aliases", config.aliases);
  get("rules", config.rules);
  get("extractor", config.extractor);
  get("llm", config.llm);
  get("out", config.out);
  get("audit", config.audit);
  get("queue", config.queue);
  get("report", config.report);
  get("policy", config.policy);
  get("fake_now", config.fake_now);
  if (auto it = file.find("theta_link"); it != file.end()) {
    config.theta_link = std::stod(it->second);
  }
  if (auto it = file.find("latency_budget_ms"); it != file.end()) {
    config.latency_budget_ms = std::stod(it->second);
  }
  if (auto it = file.find("jobs"); it != file.end()) {
    config.jobs = static_cast<std::size_t>(std::stoul(it->second));
  }
}

void apply_env(RunConfig& config) {
  auto get = [](const char* name) -> std::optional<std::string> {
    const char* value = std::getenv(name);
    if (value == nullptr) return std::nullopt;
    return std::string(value);
  };
  if (auto v = get("ONCOKG_SEED")) config.seed = *v;
  if (auto v = get("ONCOKG_KG")) config.kg = *v;
  if (auto v = get("ONCOKG_CORPUS")) config.corpus = *v;
  if (auto v = get("ONCOKG_ALIASES")) config.aliases = *v;
  if (auto v = get("ONCOKG_RULES")) config.rules = *v;
  if (auto v = get("ONCOKG_EXTRACTOR")) config.extractor = *v;
  if (auto v = get("ONCOKG_LLM")) config.llm = *v;
  if (auto v = get("ONCOKG_OUT")) config.out = *v;
  if (auto v = get("ONCOKG_AUDIT")) config.audit = *v;
  if (auto v = get("ONCOKG_QUEUE")) config.queue = *v;
  if (auto v = get("ONCOKG_REPORT")) config.report = *v;
  if (auto v = get("ONCOKG_POLICY")) config.policy = *v;
  if (auto v = get("ONCOKG_FAKE_NOW")) config.fake_now = *v;
  if (auto v = get("ONCOKG_THETA_LINK")) config.theta_link = std::stod(*v);
  if (auto v = get("ONCOKG_LATENCY_BUDGET_MS")) config.latency_budget_ms = std::stod(*v);
  if (auto v = get("ONCOKG_JOBS")) config.jobs = std::stoul(*v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"oncokg - cancer-biomarker knowledge graph toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--seed", config.seed, "seed file or directory");
  app.add_option("--kg", config.kg, "KG file (canonical N-Triples)");
  app.add_option("--corpus", config.corpus, "corpus directory of .txt documents");
  app.add_option("--aliases", config.aliases, "alias TSV file");
  app.add_option("--rules", config.rules, "user rule file");
  app.add_option("--extractor", config.extractor,
                 "builtin | subprocess:<cmd> | http:<url>");
  app.add_option("--llm", config.llm, "mock:<path> | http");
  app.add_option("--out", config.out, "output path for build/extract/refresh/export");
  app.add_option("--audit", config.audit, "audit log path (JSON lines)");
  app.add_option("--queue", config.queue, "review queue path");
  app.add_option("--report", config.report, "assess JSON report path");
  app.add_option("--policy", config.policy,
                 "accept_new | accept_new_and_queue_conflicts | dry_run");
  app.add_option("--theta-link", config.theta_link, "entity linking threshold");
  app.add_option("--latency-budget", config.latency_budget_ms,
                 "performance budget in ms (p95)");
  app.add_option("--jobs", config.jobs, "parallel document workers");
  app.add_option("--fake-now", config.fake_now, "pin the clock (epoch seconds)");

  CLI::App* build = app.add_subcommand("build", "load + validate seed, dump KG");
  CLI::App* extract_cmd = app.add_subcommand("extract", "corpus -> triples -> KG");
  CLI::App* refresh = app.add_subcommand("refresh", "LLM triple refresh with triage");
  CLI::App* reason_cmd = app.add_subcommand("reason", "saturate + consistency report");
  reason_cmd->add_flag("--strict", config.strict, "exit 3 on violations");
  CLI::App* query = app.add_subcommand("query", "evaluate a DL query");
  query->add_option("dlq", config.query, "query string");
  query->add_flag("--repl", config.repl, "interactive query loop");
  CLI::App* assess_cmd = app.add_subcommand("assess", "six-dimension quality report");
  CLI::App* export_cmd = app.add_subcommand("export", "canonical N-Triples dump");
  CLI::App* stats = app.add_subcommand("stats", "counts by class and predicate");
  for (CLI::App* sub : {build, extract_cmd, refresh, reason_cmd, query, assess_cmd,
                        export_cmd, stats}) {
    sub->fallthrough();
  }

  std::vector<std::string> argv = args;
  // Config file first so flags can override it.
  for (std::size_t i = 0; i + 1 < argv.size(); ++i) {
    if (argv[i] == "--config") {
      apply_file_config(config, util::load_config(argv[i + 1]));
      break;
    }
  }

  try {
    std::vector<const char*> raw;
    raw.push_back("oncokg");
    for (const auto& a : argv) raw.push_back(a.c_str());
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }
  apply_env(config);

  try {
    if (build->parsed()) return cmd_build(config, out, err);
    if (extract_cmd->parsed()) return cmd_extract(config, out, err);
    if (refresh->parsed()) return cmd_refresh(config, out, err);
    if (reason_cmd->parsed()) return cmd_reason(config, out, err);
    if (query->parsed()) return cmd_query(config, out, err);
    if (assess_cmd->parsed()) return cmd_assess(config, out, err);
    if (export_cmd->parsed()) return cmd_export(config, out, err);
    if (stats->parsed()) return cmd_stats(config, out, err);
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace onco::cli
