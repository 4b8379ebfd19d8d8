// One PASS/FAIL line per acceptance criterion, with timings and the
// evidence behind each verdict on indented lines. Exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "list_monad.hpp"
#include "mixcat/cpm.hpp"
#include "mixcat/lexicon.hpp"
#include "mixcat/pregroup.hpp"
#include "mixcat/suites.hpp"

using namespace mixcat;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "MISS ") + what);
  }
  void note(const std::string& what) { details.push_back("     " + what); }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0: no runtime bound
  std::function<void(Verdict&)> body;
};

std::size_t min_instances(const LawReport& report, const std::function<bool(const LawResult&)>& pick) {
  std::size_t least = SIZE_MAX;
  for (const auto& r : report.results) {
    if (pick(r)) least = std::min(least, r.instances);
  }
  return least == SIZE_MAX ? 0 : least;
}

void require_report(Verdict& v, const LawReport& report, const std::string& what) {
  v.require(report.passed(), what + ": " + std::to_string(report.results.size()) + " laws, " +
                                 std::to_string(report.failures()) + " failures");
  for (const auto& r : report.results) {
    if (!r.passed()) {
      v.note("failed " + r.suite + "/" + r.law);
      for (const auto& w : r.witnesses) v.note("  " + w);
    }
  }
}

void monad_laws(Verdict& v) {
  for (MonadTag tag : kAllMonads) {
    const auto report = check_monad_laws(tag, 3, kSeed, 100);
    require_report(v, report, "monad laws for " + std::string(to_string(tag)) + " on carriers up to 3");
    if (is_quantitative(tag)) {
      const auto n = min_instances(report, [](const LawResult&) { return true; });
      v.require(n >= 100, std::string(to_string(tag)) + ": at least " + std::to_string(n) + " cases per law");
    }
  }
}

void commutativity(Verdict& v) {
  for (MonadTag tag : kAllMonads) {
    const auto c = check_commutativity(tag, 2, kSeed, 100);
    v.require(c.holds, std::string(to_string(tag)) + " commutative on " + std::to_string(c.instances) +
                           " pairs over carriers up to 2");
  }
  const testing::ListMonad list;
  const std::vector<std::vector<int>> ts{{0, 1}, {1, 0}, {0}};
  const auto c = check_commutativity(list, ts, ts);
  v.require(!c.holds && !c.witness.empty(), "list monad control fails");
  v.note("witness: " + c.witness);
}

void dagger_compact(Verdict& v) {
  const std::set<std::string> counted{
      "h.(g.f) = (h.g).f",
      "id.f = f",
      "f.id = f",
      "(g.f) x (k.h) = (g x k).(f x h)",
      "f^dagger^dagger = f",
      "(g.f)^dagger = f^dagger . g^dagger",
      "(f x g)^dagger = f^dagger x g^dagger",
      "snake: rho.(id x cap).alpha.(cup x id).lambda^-1 = id",
      "snake: lambda.(cap x id).alpha^-1.(id x cup).rho^-1 = id"};
  for (MonadTag tag : kAllMonads) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = check_enriched_category<Rel>(tag, 300, kSeed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require_report(v, report, "rel/" + std::string(to_string(tag)));
    const auto n = min_instances(report, [&](const LawResult& r) { return counted.count(r.law) != 0; });
    v.require(n >= 300, "rel/" + std::string(to_string(tag)) + ": " + std::to_string(n) + " instances per law");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    v.require(secs < 60.0, "rel/" + std::string(to_string(tag)) + " within 60s (" + buf + ")");
  }
}

void enrichment(Verdict& v) {
  const auto report = check_enrichment_suite(200, kSeed);
  require_report(v, report, "free models, finrel union, finmat zero, intersection control");
  std::set<std::string> suites;
  for (const auto& r : report.results) suites.insert(r.suite);
  for (const char* s : {"enrichment/finrel/union", "enrichment/finmat/zero"}) {
    bool present = false;
    for (const auto& name : suites) present = present || name.rfind(s, 0) == 0;
    v.require(present, std::string(s) + " checked");
  }
  for (const auto& s : suites) v.note(s);
}

void embeddings(Verdict& v) {
  const auto report = check_embeddings(200, kSeed);
  require_report(v, report, "four embeddings and the corrupted control");
  const auto n = min_instances(report, [](const LawResult& r) {
    return r.suite.rfind("embedding/", 0) == 0 && r.suite != "embedding/corrupted" && r.law != "F(id) = id";
  });
  v.require(n >= 200, std::to_string(n) + " morphisms per composition, tensor and dagger law");
  v.note("F(id) = id is checked on every object of the pool");
}

void scalars(Verdict& v) {
  const auto report = check_scalars(50, kSeed);
  require_report(v, report, "scalar laws");
  const auto lift = enumerate_elements(MonadTag::Lift, all_relations(Rel::unit(), Rel::unit()));
  v.require(lift.size() == 3, "(rel)_lift scalars: " + std::to_string(lift.size()));
  const auto n = min_instances(report, [](const LawResult& r) { return r.suite == "scalars/dist"; });
  v.require(n >= 50, std::to_string(n) + " rational pairs");
}

void counterexample(Verdict& v) {
  const auto search = search_uniform_counterexamples(4);
  v.require(!search.witnesses.empty(), std::to_string(search.witnesses.size()) + " non-uniform squares among " +
                                           std::to_string(search.examined) + " functions");
  const auto* w = search.find_shape("1/4,3/4");
  v.require(w != nullptr, "a 1/4,3/4 witness");
  if (w != nullptr) {
    v.note("f = " + w->f.key());
    v.note("e.e = " + serialize(w->square));
  }
}

void support_enrichment(Verdict& v) {
  const auto report = check_support_enrichment(200, kSeed);
  require_report(v, report, "convex-algebra axioms and convexpreserve");
  v.require(min_instances(report, [](const LawResult&) { return true; }) >= 200, "at least 200 instances per law");
  const auto uniform = check_uniform_functor(200, kSeed);
  bool composition_failed = false;
  for (const auto& r : uniform.results) {
    if (r.law == "F(g . f) = F(g) . F(f)" && !r.passed()) {
      composition_failed = true;
      v.note("witness: " + r.witnesses.front());
    }
  }
  v.require(composition_failed, "uniform distribution map fails to preserve composition");
}

void isomorphisms(Verdict& v) {
  require_report(v, check_pomega_iso(3), "pomega = (pplus)_lift, exhaustive up to 3");
  const auto s = check_subdist_iso(3, kSeed, 100);
  require_report(v, s, "subdist = dist((-)_lift)");
  const auto n = min_instances(s, [](const LawResult& r) { return r.law != "unit transported"; });
  v.require(n >= 100, std::to_string(n) + " sampled elements per round trip and multiplication check");
  v.note("unit transported is checked on every carrier element");
}

void verdicts(Verdict& v) {
  std::set<MonadTag> affine;
  for (MonadTag tag : kAllMonads) {
    if (is_affine(tag)) affine.insert(tag);
  }
  v.require(affine == std::set<MonadTag>{MonadTag::PPlus, MonadTag::Dist}, "affine monads are exactly pplus, dist");
  for (std::size_t n = 0; n <= 3; ++n) {
    v.require(check_relevant(MonadTag::Lift, n, kSeed).passed(), "lift relevant on |X| = " + std::to_string(n));
  }
}

std::string pipeline_transcript() {
  std::string out;
  const auto bank = std::get<Lexicon<Rel>>(load_lexicon_file(std::string(MIXCAT_DATA_DIR) + "/bank.json"));
  out += serialize(sentence_meaning(bank, {"bank"}, parse_type("n"), MonadTag::Dist)) + "\n";
  const auto trans = std::get<Lexicon<Rel>>(load_lexicon_file(std::string(MIXCAT_DATA_DIR) + "/transitive.json"));
  for (const auto& s : std::vector<std::vector<std::string>>{{"alice", "likes", "bob"}, {"bob", "likes", "alice"}}) {
    for (MonadTag tag : {MonadTag::Dist, MonadTag::SubDist, MonadTag::PPlus, MonadTag::POmega}) {
      out += serialize(sentence_meaning(trans, s, parse_type("s"), tag)) + "\n";
    }
  }
  out += run_enrich_suite(MonadTag::Dist, BaseKind::Rel, 40, 7).to_text();
  return out;
}

void pipeline(Verdict& v) {
  const std::vector<PregroupType> sentence{parse_type("n"), parse_type("n^r s n^l"), parse_type("n")};
  const auto r = parse(sentence, parse_type("s"));
  v.require(r.has_value() && apply_reduction(concat(sentence), *r) == parse_type("s"),
            "[n, n^r s n^l, n] reduces to s");

  const auto bank = std::get<Lexicon<Rel>>(load_lexicon_file(std::string(MIXCAT_DATA_DIR) + "/bank.json"));
  const auto n = bank.objects.at("n");
  const auto expected = canonicalize<Rel>(MonadTag::Dist, Rel::unit(), n,
                                          {{relation(Rel::unit(), n, {{0, 0}}), Rational(9, 10)},
                                           {relation(Rel::unit(), n, {{0, 1}}), Rational(1, 10)}});
  const auto meaning = sentence_meaning(bank, {"bank"}, parse_type("n"), MonadTag::Dist);
  v.require(meaning == expected, "bank under dist: " + serialize(meaning));

  const std::string partial = R"({
    "model": "lift",
    "objects": {"n": ["alice", "bob"], "s": ["yes"]},
    "words": {
      "alice": {"type": "n", "terms": [{"matrix": [1, 0]}]},
      "someone": {"type": "n", "bottom": true},
      "sees": {"type": "n^r s n^l", "terms": [{"matrix": [1, 1, 0, 1]}]}
    }
  })";
  const auto lift = std::get<Lexicon<Rel>>(load_lexicon(partial));
  const auto bot = sentence_meaning(lift, {"alice", "sees", "someone"}, parse_type("s"), MonadTag::Lift);
  v.require(bot.is_bottom(), "bottom entry under lift: " + serialize(bot));

  const std::string singletons = R"({
    "model": "pomega",
    "objects": {"n": ["alice", "bob"], "s": ["no", "yes"]},
    "words": {
      "alice": {"type": "n", "terms": [{"matrix": [1, 0]}]},
      "bob": {"type": "n", "terms": [{"matrix": [0, 1]}]},
      "sees": {"type": "n^r s n^l", "terms": [{"matrix": [0, 1, 1, 0, 1, 0, 0, 1]}]}
    }
  })";
  const auto single = std::get<Lexicon<Rel>>(load_lexicon(singletons));
  bool all_equal = true;
  for (const auto& a : {"alice", "bob"}) {
    for (const auto& b : {"alice", "bob"}) {
      const std::vector<std::string> words{a, "sees", b};
      const auto lifted = lift_base(plain_meaning(single, words, parse_type("s")), MonadTag::POmega);
      all_equal = all_equal && sentence_meaning(single, words, parse_type("s"), MonadTag::POmega) == lifted;
    }
  }
  v.require(all_equal, "pomega singleton lexicon equals lift_base of the plain meaning on 4 sentences");

  const auto first = pipeline_transcript();
  const auto second = pipeline_transcript();
  v.require(first == second, "repeated seeded runs are byte-identical (" + std::to_string(first.size()) + " bytes)");
}

void cpm(Verdict& v) {
  const auto two = find_anomalies(2);
  v.require(!two.pure_from_mixed.empty(), "n = 2: pure state as union of two mixed states (" +
                                               std::to_string(two.pure_from_mixed.size()) + " witnesses)");
  v.require(!two.pure_from_pure.empty(), "n = 2: two distinct pure states with a pure union (" +
                                              std::to_string(two.pure_from_pure.size()) + " witnesses)");
  const auto report = check_cpm_anomalies(2);
  for (const auto& r : report.results) {
    if (r.law == "dist mixtures of the witness states stay mixed") {
      v.require(r.passed(), "C_D contrast on " + std::to_string(r.instances) + " lifted mixtures");
    }
  }
  const auto smallest = smallest_anomaly_size(4);
  v.note("smallest carrier with both witnesses: " + (smallest ? std::to_string(*smallest) : std::string("none")));
  const auto three = find_anomalies(3);
  v.note("n = 3: " + std::to_string(three.pure_from_mixed.size()) + " mixed-to-pure, " +
         std::to_string(three.pure_from_pure.size()) + " pure-to-pure witnesses");
  if (!three.pure_from_mixed.empty()) {
    v.note("n = 3 example: " + three.pure_from_mixed.front().pure.key());
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "monad laws", 10.0, monad_laws},
      {2, "commutativity and the list-monad control", 30.0, commutativity},
      {3, "dagger compact closed laws of the five enrichments", 0.0, dagger_compact},
      {4, "enrichment equations", 0.0, enrichment},
      {5, "embeddings are functors", 0.0, embeddings},
      {6, "scalars", 0.0, scalars},
      {7, "uniform-mixture counterexample", 5.0, counterexample},
      {8, "support enrichment and the uniform-distribution control", 0.0, support_enrichment},
      {9, "monad isomorphisms", 0.0, isomorphisms},
      {10, "affine and relevant verdicts", 0.0, verdicts},
      {11, "pregroup pipeline", 0.0, pipeline},
      {12, "CPM(Rel) anomalies on two elements", 30.0, cpm},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.0fs", c.budget_seconds);
      v.require(secs < c.budget_seconds, std::string("within ") + buf);
    }
    if (!v.pass) ++failed;
    std::printf("%s %2d %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    for (const auto& d : v.details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
