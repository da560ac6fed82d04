#include "eqparse/cli/bundle.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "eqparse/error.h"
#include "eqparse/eval/gold.h"
#include "eqparse/relevance/relevance.h"
#include "eqparse/variables/variables.h"

namespace eqparse {
namespace {

constexpr std::string_view kMagic = "eqparse-bundle";
constexpr int kVersion = 1;

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto [end, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size()) {
    throw DataError("config " + key + ": bad value '" + value + "'");
  }
  return out;
}

bool parse_flag(const std::string& key, const std::string& value) {
  if (value == "1") return true;
  if (value == "0") return false;
  throw DataError("config " + key + ": expected 0 or 1, got '" + value + "'");
}

void write_section(std::ostream& out, std::string_view name,
                   const std::string& body) {
  int lines = 0;
  for (char c : body) lines += c == '\n';
  out << "section " << name << ' ' << lines << '\n' << body;
}

std::string read_section(std::istream& in, std::string_view name) {
  std::string header;
  if (!std::getline(in, header)) {
    throw DataError("bundle: missing section " + std::string(name));
  }
  std::istringstream h(header);
  std::string word, got;
  int lines = -1;
  h >> word >> got >> lines;
  if (word != "section" || got != name || lines < 0) {
    throw DataError("bundle: expected section " + std::string(name) +
                    ", found '" + header + "'");
  }
  std::string body, line;
  for (int i = 0; i < lines; ++i) {
    if (!std::getline(in, line)) {
      throw DataError("bundle: section " + std::string(name) + " truncated");
    }
    body += line;
    body += '\n';
  }
  return body;
}

std::string model_text(const LinearModel& m) {
  std::ostringstream s;
  m.write(s);
  return s.str();
}

LinearModel model_from_text(const std::string& text) {
  std::istringstream s(text);
  return LinearModel::read(s);
}

}  // namespace

std::map<std::string, std::string> BundleConfig::describe() const {
  std::map<std::string, std::string> kv = learner.describe();
  kv["use_lexicon"] = tree.use_lexicon ? "1" : "0";
  kv["lexicon_as_features"] = tree.lexicon_as_features ? "1" : "0";
  kv["conform_syntactic"] = tree.conform_syntactic ? "1" : "0";
  kv["tree_window"] = std::to_string(tree.window);
  kv["relevance_window"] = std::to_string(relevance_window);
  kv["variable_window"] = std::to_string(variable_window);
  return kv;
}

BundleConfig BundleConfig::from_map(
    const std::map<std::string, std::string>& kv) {
  BundleConfig c;
  for (const auto& [key, value] : kv) {
    if (key == "epochs") c.learner.epochs = parse_number<int>(key, value);
    else if (key == "learning_rate") c.learner.learning_rate = parse_number<double>(key, value);
    else if (key == "margin_cost") c.learner.margin_cost = parse_number<double>(key, value);
    else if (key == "max_outer_iters") c.learner.max_outer_iters = parse_number<int>(key, value);
    else if (key == "seed") c.learner.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "average") c.learner.average = parse_flag(key, value);
    else if (key == "use_lexicon") c.tree.use_lexicon = parse_flag(key, value);
    else if (key == "lexicon_as_features") c.tree.lexicon_as_features = parse_flag(key, value);
    else if (key == "conform_syntactic") c.tree.conform_syntactic = parse_flag(key, value);
    else if (key == "tree_window") c.tree.window = parse_number<int>(key, value);
    else if (key == "relevance_window") c.relevance_window = parse_number<int>(key, value);
    else if (key == "variable_window") c.variable_window = parse_number<int>(key, value);
    else throw DataError("config: unknown key '" + key + "'");
  }
  return c;
}

void ModelBundle::write(std::ostream& out) const {
  out << kMagic << ' ' << kVersion << '\n' << "config";
  for (const auto& [key, value] : config.describe()) {
    out << ' ' << key << '=' << value;
  }
  out << '\n';
  write_section(out, "lexicon", rules.to_text());
  write_section(out, "number_words", numbers.to_text());
  write_section(out, "relevance", model_text(relevance));
  write_section(out, "variables", model_text(variables));
  write_section(out, "tree", model_text(tree));
}

ModelBundle ModelBundle::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != std::string(kMagic) + " " + std::to_string(kVersion)) {
    throw DataError("bundle: bad header (expected '" + std::string(kMagic) +
                    " " + std::to_string(kVersion) + "')");
  }
  if (!std::getline(in, line) || line.rfind("config", 0) != 0) {
    throw DataError("bundle: missing config line");
  }
  std::map<std::string, std::string> kv;
  std::istringstream cfg(line.substr(6));
  for (std::string item; cfg >> item;) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw DataError("bundle: bad config item '" + item + "'");
    }
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  ModelBundle b;
  b.config = BundleConfig::from_map(kv);
  b.rules = LexiconRules::parse_text(read_section(in, "lexicon"));
  std::istringstream words(read_section(in, "number_words"));
  b.numbers = NumberWordLexicon::parse(words);
  b.relevance = model_from_text(read_section(in, "relevance"));
  b.variables = model_from_text(read_section(in, "variables"));
  b.tree = model_from_text(read_section(in, "tree"));
  return b;
}

ModelBundle ModelBundle::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read model bundle " + path);
  return read(in);
}

ModelBundle train_bundle(const std::vector<AnnotatedExample>& corpus,
                         const BundleConfig& config, const LexiconRules& rules,
                         const NumberWordLexicon& numbers,
                         TrainReport* report) {
  if (corpus.size() < 2) throw DataError("corpus too small");
  ModelBundle bundle;
  bundle.config = config;
  bundle.rules = rules;
  bundle.numbers = numbers;
  TreeParser parser = bundle.parser();

  std::vector<std::pair<RelevanceInput, RelevanceAssignment>> relevance;
  std::vector<SupersetExample<Sentence, VariableCandidate>> variables;
  std::vector<std::pair<TreeInput, EquationTree>> trees;
  for (const AnnotatedExample& ex : corpus) {
    GoldStages gold = derive_gold(ex, parser, numbers);
    if (gold.relevance && gold.quantities.size() <= kMaxJointQuantities) {
      relevance.push_back({{ex.sentence, gold.quantities}, *gold.relevance});
    }
    if (!gold.variable_set.empty()) {
      variables.push_back({ex.sentence, gold.variable_set});
    }
    if (gold.tree && gold.tree_admissible) {
      trees.push_back({{ex.sentence, *gold.triggers}, *gold.tree});
    }
  }

  TrainReport local;
  TrainReport& r = report ? *report : local;
  r.examples = static_cast<int>(corpus.size());
  r.relevance_examples = static_cast<int>(relevance.size());
  r.variable_examples = static_cast<int>(variables.size());
  r.tree_examples = static_cast<int>(trees.size());

  bundle.relevance = train_structured(
      relevance, relevance_problem(config.relevance_window), config.learner);
  bundle.variables =
      train_superset(variables, variable_problem(config.variable_window),
                     config.learner, &r.variable_trace);
  bundle.tree = train_structured(trees, parser.problem(), config.learner);
  return bundle;
}

BundlePredictor::BundlePredictor(ModelBundle bundle)
    : bundle_(std::move(bundle)), parser_(bundle_.parser()) {}

RelevanceAssignment BundlePredictor::relevance(
    const Sentence& sentence,
    const std::vector<QuantityTrigger>& quantities) const {
  return predict_relevance(bundle_.relevance, sentence, quantities,
                           bundle_.config.relevance_window);
}

VariableCandidate BundlePredictor::variables(const Sentence& sentence) const {
  return predict(bundle_.variables, sentence,
                 variable_problem(bundle_.config.variable_window));
}

EquationTree BundlePredictor::tree(const Sentence& sentence,
                                   const TriggerList& triggers) const {
  return cky_decode(bundle_.tree, parser_, sentence, triggers);
}

}  // namespace eqparse
