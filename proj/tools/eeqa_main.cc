// Command-line front end: question generation, adapter requests, extraction,
// threshold calibration, evaluation and the zero-shot split.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eeqa/corpus.h"
#include "eeqa/errors.h"
#include "eeqa/pipeline.h"

namespace {

using namespace eeqa;

struct Flags {
  std::string ontology;
  std::string corpus;
  std::string provider = "oracle";
  std::optional<uint64_t> seed;
  std::string probs;
  std::string trigger_question = "verb";
  std::string arg_template = "guideline";
  bool in_trigger = true;
  int max_span_length = 10;
  std::string mode = "dynamic";
  std::string thresholds;
  bool gold_triggers = false;
  bool global_threshold = false;
  std::string out;
};

void AddProviderFlags(CLI::App *cmd, Flags &f) {
  cmd->add_option("--provider", f.provider,
                  "Probability source: oracle, random or file")
      ->check(CLI::IsMember({"oracle", "random", "file"}))
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed for the random provider");
  cmd->add_option("--probs", f.probs, "Probability file for --provider file");
}

void AddQuestionFlags(CLI::App *cmd, Flags &f) {
  cmd->add_option("--trigger-question", f.trigger_question,
                  "Trigger question: empty, what-is-the-trigger, "
                  "what-happened, trigger, action, verb")
      ->capture_default_str();
  cmd->add_option("--arg-template", f.arg_template,
                  "Argument template: role-name, type-role, guideline")
      ->capture_default_str();
  cmd->add_flag("--in-trigger,!--no-in-trigger", f.in_trigger,
                "Append \"in <trigger>\" to argument questions")
      ->capture_default_str();
  cmd->add_flag("--gold-triggers", f.gold_triggers,
                "Ask argument questions about gold triggers");
}

void AddDecodeFlags(CLI::App *cmd, Flags &f) {
  cmd->add_option("--max-span-length", f.max_span_length,
                  "Longest argument span in tokens")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--mode", f.mode, "Candidate filter: dynamic or zero")
      ->check(CLI::IsMember({"dynamic", "zero"}))
      ->capture_default_str();
}

RunConfig ToRunConfig(const Flags &f) {
  RunConfig config;
  config.ontology_path = f.ontology;
  config.corpus_path = f.corpus;
  config.thresholds_path = f.thresholds;
  config.output_path = f.out;
  if (f.provider == "oracle") {
    config.provider.kind = ProviderConfig::Kind::kOracle;
  } else if (f.provider == "random") {
    config.provider.kind = ProviderConfig::Kind::kPseudoRandom;
  } else {
    config.provider.kind = ProviderConfig::Kind::kFile;
  }
  config.provider.seed = f.seed;
  config.provider.path = f.probs;
  config.options.trigger_strategy = ParseTriggerStrategy(f.trigger_question);
  config.options.arg_strategy = {ParseArgTemplate(f.arg_template), f.in_trigger};
  config.options.decode.max_span_length = f.max_span_length;
  config.options.decode.mode = ParseThresholdMode(f.mode);
  config.options.use_gold_triggers = f.gold_triggers;
  config.per_role = !f.global_threshold;
  return config;
}

EventOntology OntologyFrom(const Flags &f) {
  return LoadOntology(f.ontology.empty() ? DefaultOntologyPath() : f.ontology);
}

void WriteOrPrint(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << content;
}

std::set<std::string> SplitList(const std::string &s) {
  std::set<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Event extraction as question answering: question generation, "
               "span decoding and scoring"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--ontology", f.ontology,
                 "Ontology file (default: the shipped ACE 2005 schema)");

  // generate-questions
  auto *gen = app.add_subcommand("generate-questions",
                                 "Print the argument questions of an event type");
  std::string event_type;
  std::string gen_strategy = "guideline";
  std::optional<std::string> trigger_word;
  gen->add_option("--event-type", event_type, "Event type, e.g. Movement.Transport")
      ->required();
  gen->add_option("--strategy", gen_strategy,
                  "role-name, type-role or guideline (1, 2, 3 also accepted)")
      ->capture_default_str();
  gen->add_option("--trigger", trigger_word,
                  "Trigger token; appends \"in <trigger>\"");

  // requests
  auto *req = app.add_subcommand("requests",
                                 "Write model adapter request records");
  std::string stage = "trigger";
  req->add_option("--corpus", f.corpus, "Corpus file")->required();
  req->add_option("--stage", stage, "trigger or argument")
      ->check(CLI::IsMember({"trigger", "argument"}))
      ->capture_default_str();
  req->add_option("--out", f.out, "Output file (default stdout)");
  AddProviderFlags(req, f);
  AddQuestionFlags(req, f);

  // extract
  auto *ext = app.add_subcommand("extract", "Predict triggers and arguments");
  ext->add_option("--corpus", f.corpus, "Corpus file")->required();
  ext->add_option("--thresholds", f.thresholds,
                  "Threshold table (required with --mode dynamic)");
  ext->add_option("--out", f.out, "Prediction file")->required();
  AddProviderFlags(ext, f);
  AddQuestionFlags(ext, f);
  AddDecodeFlags(ext, f);

  // calibrate
  auto *cal = app.add_subcommand("calibrate",
                                 "Fit no-answer thresholds on a dev corpus");
  cal->add_option("--corpus", f.corpus, "Dev corpus file")->required();
  cal->add_option("--out", f.out, "Threshold table to write")->required();
  cal->add_flag("--global", f.global_threshold,
                "One threshold for all roles instead of one per role");
  AddProviderFlags(cal, f);
  AddQuestionFlags(cal, f);
  AddDecodeFlags(cal, f);

  // evaluate
  auto *ev = app.add_subcommand("evaluate", "Score predictions against gold");
  std::string predictions;
  ev->add_option("--gold", f.corpus, "Gold corpus file")->required();
  ev->add_option("--predictions", predictions, "Prediction file")->required();
  ev->add_option("--out", f.out, "Machine-readable report (JSON)");

  // split-zeroshot
  auto *zs = app.add_subcommand("split-zeroshot",
                                "Split a corpus by seen/unseen argument roles");
  std::string unseen_list;
  std::string train_out, test_out;
  zs->add_option("--corpus", f.corpus, "Corpus file")->required();
  zs->add_option("--unseen", unseen_list,
                 "Comma-separated unseen roles (default: Vehicle,Artifact,"
                 "Target,Victim,Recipient,Buyer)");
  zs->add_option("--train-out", train_out, "Train subset file")->required();
  zs->add_option("--test-out", test_out, "Test subset file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const EventOntology ontology = OntologyFrom(f);
      ArgTemplateStrategy strategy{ParseArgTemplate(gen_strategy),
                                   trigger_word.has_value()};
      std::optional<std::string_view> trigger;
      if (trigger_word) trigger = *trigger_word;
      for (const RoleSpec &role : ontology.Roles(event_type)) {
        std::cout << role.role_name << '\t'
                  << ArgumentQuestion(role, strategy, trigger).text << '\n';
      }
    } else if (*req) {
      RunConfig config = ToRunConfig(f);
      config.Validate();
      const EventOntology ontology = OntologyFrom(f);
      const Corpus corpus = LoadCorpus(f.corpus, ontology);
      if (stage == "trigger") {
        WriteOrPrint(f.out, TriggerRequestLines(corpus, config.options));
      } else {
        const auto provider = MakeProvider(config.provider, ontology);
        WriteOrPrint(f.out, ArgumentRequestLines(corpus, ontology, *provider,
                                                 config.options));
      }
    } else if (*ext) {
      const PredictionSet p = RunExtract(ToRunConfig(f));
      std::cerr << "wrote " << p.triggers().size() << " triggers, "
                << p.arguments().size() << " arguments to " << f.out << "\n";
    } else if (*cal) {
      const ThresholdTable table = RunCalibrate(ToRunConfig(f));
      std::cerr << "wrote thresholds for " << table.per_role().size()
                << " roles to " << f.out << "\n";
    } else if (*ev) {
      RunConfig config = ToRunConfig(f);
      config.predictions_path = predictions;
      std::cout << RunEvaluate(config).ToTable();
    } else if (*zs) {
      const EventOntology ontology = OntologyFrom(f);
      const Corpus corpus = LoadCorpus(f.corpus, ontology);
      const std::set<std::string> unseen =
          unseen_list.empty() ? DefaultUnseenRoles() : SplitList(unseen_list);
      const ZeroShotSubsets subsets = ZeroShotSplit(ontology, unseen, corpus);
      WriteOrPrint(train_out, WriteCorpus(subsets.train));
      WriteOrPrint(test_out, WriteCorpus(subsets.test));
      std::cerr << "train: " << subsets.train.num_sentences()
                << " sentences, test: " << subsets.test.num_sentences()
                << " sentences\n";
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
