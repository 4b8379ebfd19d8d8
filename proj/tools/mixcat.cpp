#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mixcat/cpm.hpp"
#include "mixcat/lexicon.hpp"
#include "mixcat/pregroup.hpp"
#include "mixcat/relate.hpp"
#include "mixcat/suites.hpp"

namespace {

using namespace mixcat;

constexpr int kUsage = 2;

struct LawsOptions {
  std::string suite = "all";
  std::vector<std::string> models;
  std::string base = "rel";
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::string out;
};

struct MeaningOptions {
  std::string lexicon;
  std::string target = "s";
  std::string model;
  std::vector<std::string> words;
};

bool write_json(const LawReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << report.to_json().dump(2) << "\n";
  return static_cast<bool>(out);
}

int finish(const LawReport& report, const std::string& out) {
  std::cout << report.to_text();
  if (!out.empty() && !write_json(report, out)) return 1;
  return report.passed() ? 0 : 1;
}

int cmd_laws(const LawsOptions& opt) {
  LawReport report;
  report.title = "laws";
  std::vector<MonadTag> models;
  if (opt.models.empty()) {
    models.assign(kAllMonads.begin(), kAllMonads.end());
  } else {
    for (const auto& m : opt.models) models.push_back(parse_monad_tag(m));
  }
  const BaseKind base = parse_base_kind(opt.base);
  if (opt.suite == "monads" || opt.suite == "all") report.append(run_monad_suite(opt.samples, opt.seed));
  if (opt.suite == "enrich" || opt.suite == "all") {
    for (const auto tag : models) report.append(run_enrich_suite(tag, base, opt.samples, opt.seed));
  }
  if (opt.suite == "relate" || opt.suite == "all") report.append(run_relate_suite(opt.samples, opt.seed));
  return finish(report, opt.out);
}

template <BaseCategory Base>
std::string show_state(const Morphism<Base>& state) {
  const auto& m = state.matrix();
  std::string out;
  if constexpr (std::same_as<Base, Rel>) {
    out = "{";
    bool first = true;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (!m(r, 0)) continue;
      if (!first) out += ", ";
      first = false;
      out += state.tgt().elements[static_cast<std::size_t>(r)];
    }
    return out + "}";
  } else {
    out = "(";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r != 0) out += ", ";
      out += m(r, 0).str();
    }
    return out + ")";
  }
}

template <BaseCategory Base>
int print_meaning(const Lexicon<Base>& lexicon, const MeaningOptions& opt) {
  const MonadTag tag = opt.model.empty() ? lexicon.model : parse_monad_tag(opt.model);
  const auto target = parse_type(opt.target);
  const auto meaning = sentence_meaning(lexicon, opt.words, target, tag);
  std::cout << serialize(meaning) << "\n";
  for (const auto& [state, w] : meaning.terms()) {
    std::cout << "  " << w.str() << "  " << show_state(state) << "\n";
  }
  return 0;
}

int cmd_meaning(const MeaningOptions& opt) {
  const auto lexicon = load_lexicon_file(opt.lexicon);
  return std::visit([&](const auto& lex) { return print_meaning(lex, opt); }, lexicon);
}

std::string function_table(const RelMorphism& f) {
  std::string out = "[";
  for (Eigen::Index c = 0; c < f.matrix().cols(); ++c) {
    for (Eigen::Index r = 0; r < f.matrix().rows(); ++r) {
      if (!f.matrix()(r, c)) continue;
      if (c != 0) out += " ";
      out += std::to_string(c) + "->" + std::to_string(r);
    }
  }
  return out + "]";
}

int cmd_counterexample(std::size_t size) {
  const auto search = search_uniform_counterexamples(size);
  std::cout << "functions examined: " << search.examined << "\n";
  std::cout << "non-uniform squares: " << search.witnesses.size() << "\n";
  std::map<std::string, std::size_t> shapes;
  for (const auto& w : search.witnesses) ++shapes[weight_shape(w.weights)];
  for (const auto& [shape, count] : shapes) {
    const auto* first = search.find_shape(shape);
    std::cout << "shape " << shape << ": " << count << " functions\n";
    std::cout << "  f = " << function_table(first->f) << " on " << first->f.src().size() << " elements\n";
    std::cout << "  e = 1/2|f> + 1/2|f.f>\n";
    std::cout << "  e.e = ";
    bool lead = true;
    for (const auto& [g, w] : first->square.terms()) {
      if (!lead) std::cout << " + ";
      lead = false;
      std::cout << w.str() << "|" << function_table(g) << ">";
    }
    std::cout << "\n";
  }
  return search.witnesses.empty() ? 1 : 0;
}

int cmd_cpm(std::size_t size) {
  const auto found = find_anomalies(size);
  std::cout << found.to_text();
  const auto report = check_cpm_anomalies(size);
  return finish(report, {});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free enrichments of Rel and Mat by informational monads"};
  app.require_subcommand(1);

  LawsOptions laws;
  auto* laws_cmd = app.add_subcommand("laws", "Run law suites");
  laws_cmd->add_option("--suite", laws.suite, "monads, enrich, relate or all")
      ->check(CLI::IsMember({"monads", "enrich", "relate", "all"}))
      ->capture_default_str();
  laws_cmd->add_option("--model", laws.models, "Models for the enrich suite (default: all five)")
      ->check(CLI::IsMember({"lift", "pplus", "pomega", "dist", "subdist"}));
  laws_cmd->add_option("--base", laws.base, "rel or mat")
      ->check(CLI::IsMember({"rel", "mat"}))
      ->capture_default_str();
  laws_cmd->add_option("--seed", laws.seed)->check(CLI::PositiveNumber)->capture_default_str();
  laws_cmd->add_option("--samples", laws.samples, "Instances per law")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  laws_cmd->add_option("--out", laws.out, "Also write the report as JSON");

  MeaningOptions meaning;
  auto* meaning_cmd = app.add_subcommand("meaning", "Evaluate a sentence against a lexicon");
  meaning_cmd->add_option("--lexicon", meaning.lexicon)->required();
  meaning_cmd->add_option("--target", meaning.target, "Pregroup type to reduce to")->capture_default_str();
  meaning_cmd->add_option("--model", meaning.model, "Evaluate in another model (default: the lexicon's)")
      ->check(CLI::IsMember({"lift", "pplus", "pomega", "dist", "subdist"}));
  meaning_cmd->add_option("words", meaning.words)->required();

  std::size_t ce_size = 4;
  auto* ce_cmd = app.add_subcommand("counterexample", "Search for non-uniform squares of uniform mixtures");
  ce_cmd->add_option("--size", ce_size, "Largest carrier")->capture_default_str();

  std::size_t cpm_size = 2;
  auto* cpm_cmd = app.add_subcommand("cpm", "Pure and mixed states of CPM(Rel)");
  cpm_cmd->add_option("--size", cpm_size, "Carrier size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*laws_cmd) return cmd_laws(laws);
    if (*meaning_cmd) return cmd_meaning(meaning);
    if (*ce_cmd) return cmd_counterexample(ce_size);
    if (*cpm_cmd) return cmd_cpm(cpm_size);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
