#include "mixcat/suites.hpp"

#include <algorithm>

namespace mixcat {

BaseKind parse_base_kind(std::string_view name) {
  if (name == "rel") return BaseKind::Rel;
  if (name == "mat") return BaseKind::Mat;
  throw ModelError("unknown base '" + std::string(name) + "' (expected rel or mat)");
}

std::string_view to_string(BaseKind base) { return base == BaseKind::Rel ? "rel" : "mat"; }

void expect_failure(LawReport& into, const std::string& suite, const std::string& law,
                    const LawReport& control) {
  auto& r = into.add(suite, law);
  r.record(!control.passed(), "negative control unexpectedly passed: " + control.title);
  for (const auto& c : control.results) {
    for (const auto& w : c.witnesses) {
      if (r.notes.size() >= 2) break;
      r.notes.push_back(c.law + ": " + w);
    }
  }
}

namespace {

using RelEnriched = EnrichedMorphism<Rel>;

/// n weights, some of them zero, totalling 1 (or at most 1).
std::vector<Rational> weights_with_zeros(Rng& rng, std::size_t n, bool subconvex) {
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < n; ++i) {
    if (!coin(rng, 3)) live.push_back(i);
  }
  if (live.empty()) live.push_back(uniform_index(rng, 0, n - 1));
  const auto w = random_weights(rng, live.size(), subconvex);
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < live.size(); ++k) out[live[k]] = w[k];
  return out;
}

RelEnriched dist_scalar(const Rational& p) {
  return canonicalize<Rel>(MonadTag::Dist, Rel::unit(), Rel::unit(),
                           {{rel_true(), p}, {rel_false(), Rational(1) - p}});
}

}  // namespace

LawReport check_support_enrichment(std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  LawReport report;
  report.title = "support enrichment of pplus and pomega";
  const auto pool = object_pool<Rel>();
  for (MonadTag tag : {MonadTag::PPlus, MonadTag::POmega}) {
    const bool sub = tag == MonadTag::POmega;
    const std::string suite = "support/" + std::string(to_string(tag));
    auto& projection = report.add(suite, "sum delta_ij x_j = x_i");
    auto& barycenter = report.add(suite, "sum p_i (sum q_ij x_j) = sum (sum p_i q_ij) x_j");
    auto& idempotent = report.add(suite, "p x + (1-p) x = x");
    auto& preserve_left = report.add(suite, "(sum p_i f_i) . g = sum p_i (f_i . g)");
    auto& preserve_right = report.add(suite, "g . (sum p_i f_i) = sum p_i (g . f_i)");
    for (std::size_t s = 0; s < samples; ++s) {
      const auto& a = random_object<Rel>(pool, rng);
      const auto& b = random_object<Rel>(pool, rng);
      const auto& c = random_object<Rel>(pool, rng);
      const std::size_t m = uniform_index(rng, 1, 3);
      std::vector<RelEnriched> xs;
      for (std::size_t j = 0; j < m; ++j) xs.push_back(random_enriched<Rel>(tag, a, b, rng));

      const std::size_t pick = uniform_index(rng, 0, m - 1);
      std::vector<WeightedPart<Rel>> delta;
      for (std::size_t j = 0; j < m; ++j) delta.emplace_back(xs[j], Rational(j == pick ? 1 : 0));
      const auto proj = support_mix<Rel>(tag, a, b, delta);
      projection.check(proj == xs[pick], [&] { return serialize(proj) + " vs " + serialize(xs[pick]); });

      const std::size_t n = uniform_index(rng, 1, 3);
      const auto p = weights_with_zeros(rng, n, sub);
      std::vector<WeightedPart<Rel>> outer;
      std::vector<Rational> flat(m);
      for (std::size_t i = 0; i < n; ++i) {
        const auto q = weights_with_zeros(rng, m, sub);
        std::vector<WeightedPart<Rel>> inner;
        for (std::size_t j = 0; j < m; ++j) {
          inner.emplace_back(xs[j], q[j]);
          flat[j] += p[i] * q[j];
        }
        outer.emplace_back(support_mix<Rel>(tag, a, b, inner), p[i]);
      }
      std::vector<WeightedPart<Rel>> collapsed;
      for (std::size_t j = 0; j < m; ++j) collapsed.emplace_back(xs[j], flat[j]);
      const auto lhs = support_mix<Rel>(tag, a, b, outer);
      const auto rhs = support_mix<Rel>(tag, a, b, collapsed);
      barycenter.check(lhs == rhs, [&] { return serialize(lhs) + " vs " + serialize(rhs); });

      const auto half = random_probability(rng);
      const auto same = support_mix<Rel>(tag, a, b, {{xs[0], half}, {xs[0], Rational(1) - half}});
      idempotent.check(same == xs[0], [&] { return serialize(xs[0]); });

      const auto g = random_enriched<Rel>(tag, c, a, rng);
      const auto h = random_enriched<Rel>(tag, b, c, rng);
      std::vector<WeightedPart<Rel>> fs, fg, hf;
      const auto w = weights_with_zeros(rng, m, sub);
      for (std::size_t j = 0; j < m; ++j) {
        fs.emplace_back(xs[j], w[j]);
        fg.emplace_back(enr_compose(xs[j], g), w[j]);
        hf.emplace_back(enr_compose(h, xs[j]), w[j]);
      }
      const auto mixed = support_mix<Rel>(tag, a, b, fs);
      const auto l1 = enr_compose(mixed, g);
      const auto r1 = support_mix<Rel>(tag, c, b, fg);
      preserve_left.check(l1 == r1, [&] { return serialize(l1) + " vs " + serialize(r1); });
      const auto l2 = enr_compose(h, mixed);
      const auto r2 = support_mix<Rel>(tag, a, c, hf);
      preserve_right.check(l2 == r2, [&] { return serialize(l2) + " vs " + serialize(r2); });
    }
  }
  return report;
}

LawReport check_scalars(std::size_t pairs, std::uint64_t seed) {
  Rng rng(seed);
  LawReport report;
  report.title = "scalars of (rel)_lift and (rel)_dist";
  auto& three = report.add("scalars/lift", "exactly three scalars: true, false, bottom");
  const auto lift_scalars = enumerate_elements(MonadTag::Lift, all_relations(Rel::unit(), Rel::unit()));
  three.record(lift_scalars.size() == 3, std::to_string(lift_scalars.size()) + " scalars");
  for (const auto& s : lift_scalars) three.notes.push_back(describe(s));

  auto& param = report.add("scalars/dist", "every scalar is p|true> + (1-p)|false>");
  auto& product = report.add("scalars/dist", "s(q) . s(p) = s(pq)");
  const auto unit = Rel::unit();
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto p = random_probability(rng);
    const auto q = random_probability(rng);
    const auto any = random_enriched<Rel>(MonadTag::Dist, unit, unit, rng);
    const auto as_param = dist_scalar(any.payload().weight(rel_true()));
    param.check(any == as_param, [&] { return serialize(any); });
    const auto got = enr_compose(dist_scalar(q), dist_scalar(p));
    const auto expected = dist_scalar(p * q);
    product.check(got == expected, [&] {
      return "p = " + p.str() + ", q = " + q.str() + ": " + serialize(got);
    });
  }
  return report;
}

LawReport check_enrichment_suite(std::size_t samples, std::uint64_t seed) {
  LawReport report;
  report.title = "enrichment conditions";
  for (MonadTag tag : kAllMonads) {
    Rng rng(seed + static_cast<std::uint64_t>(tag));
    report.append(check_enrichment_conditions(free_model_description<Rel>(tag, rng),
                                              free_model_algebra<Rel>(tag), samples, seed));
  }
  report.append(check_enrichment_conditions(finrel_description(), finrel_union_algebra(), samples, seed));
  report.append(check_enrichment_conditions(finmat_description(seed), finmat_zero_algebra(), samples, seed));
  expect_failure(report, "enrichment/finrel/intersection", "composition does not distribute over intersection",
                 check_enrichment_conditions(finrel_description(), finrel_intersection_algebra(), samples, seed));
  return report;
}

LawReport check_counterexample_suite(std::size_t samples, std::uint64_t seed) {
  LawReport report;
  report.title = "uniform-mixture counterexample";
  const std::string suite = "counterexample";
  const auto search = search_uniform_counterexamples(4);
  auto& found = report.add(suite, "a non-uniform e.e exists on at most 4 elements");
  found.record(!search.witnesses.empty(), std::to_string(search.examined) + " functions, no witness");
  found.notes.push_back(std::to_string(search.examined) + " functions examined, " +
                        std::to_string(search.witnesses.size()) + " non-uniform");
  auto& quarter = report.add(suite, "a witness with weights 1/4, 3/4 exists");
  const auto* w = search.find_shape("1/4,3/4");
  quarter.record(w != nullptr, "no 1/4,3/4 witness");
  if (w != nullptr) quarter.notes.push_back("f = " + w->f.key() + "; e.e = " + serialize(w->square));

  auto& successor = report.add(suite, "successor with absorber on 4 elements gives 1/4 f^2 + 3/4 f^3");
  const auto f = successor_with_absorber(4);
  const auto r = counterexample_uniform(f);
  const auto f2 = compose(f, f);
  const auto f3 = compose(f, f2);
  const auto expected = canonicalize<Rel>(MonadTag::Dist, f.src(), f.tgt(),
                                          {{f2, Rational(1, 4)}, {f3, Rational(3, 4)}});
  successor.record(r.square == expected && !r.uniform, serialize(r.square));

  expect_failure(report, suite, "uniform distribution on sets is not a functor",
                 check_uniform_functor(samples, seed));
  return report;
}

LawReport check_embeddings(std::size_t samples, std::uint64_t seed) {
  LawReport report;
  report.title = "embeddings";
  for (auto e : kAllEmbeddings) report.append(check_embedding_functorial<Rel>(e, samples, seed));
  // A corrupted embedding that sends bottom to the point mass on the full relation.
  // The empty relation would not do: it absorbs composition and tensor in Rel.
  const EnrichedFunctor<Rel> corrupted = [](const RelEnriched& m) {
    if (m.is_bottom()) {
      const auto rows = static_cast<Eigen::Index>(m.tgt().size());
      const auto cols = static_cast<Eigen::Index>(m.src().size());
      RelMorphism full(m.src(), m.tgt(), MatrixOf<Rel>::Constant(rows, cols, true));
      return canonicalize<Rel>(MonadTag::SubDist, m.src(), m.tgt(), {{std::move(full), Rational(1)}});
    }
    return embed(EmbeddingTag::BotToSubDist, m);
  };
  expect_failure(report, "embedding/corrupted", "bottom sent to a point is caught",
                 check_functor<Rel>("corrupted bot->subdist", MonadTag::Lift, MonadTag::SubDist,
                                    corrupted, samples, seed));
  return report;
}

LawReport run_monad_suite(std::size_t samples, std::uint64_t seed) {
  LawReport report;
  report.title = "monads";
  for (MonadTag tag : kAllMonads) report.append(check_monad_laws(tag, 3, seed, samples));

  for (MonadTag tag : kAllMonads) {
    auto& r = report.add("commutativity/" + std::string(to_string(tag)), "dst = dst'");
    const auto c = check_commutativity(tag, 2, seed, samples);
    r.instances = c.instances;
    if (!c.holds) {
      r.failures = 1;
      r.witnesses.push_back(c.witness);
    }
  }

  auto& affine = report.add("affine", "exactly pplus and dist are affine");
  for (MonadTag tag : kAllMonads) {
    const auto t = inspect_terminal(tag);
    const bool expected = tag == MonadTag::PPlus || tag == MonadTag::Dist;
    affine.record(t.affine == expected, std::string(to_string(tag)) + " affine = " + (t.affine ? "yes" : "no"));
    affine.notes.push_back(std::string(to_string(tag)) + ": |T1| = " +
                           (t.size ? std::to_string(*t.size) : std::string("infinite")) +
                           (t.affine ? ", affine" : ""));
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    auto r = check_relevant(MonadTag::Lift, n, seed, samples);
    r.law += " (|X| = " + std::to_string(n) + ")";
    report.results.push_back(std::move(r));
  }
  report.results.push_back(check_idempotence(MonadTag::PPlus, 3));
  report.results.push_back(check_idempotence(MonadTag::Dist, 3));

  const auto bits = join_semilattice_algebra<int>({0, 1}, [](int a, int b) { return std::max(a, b); }, 0);
  report.append(check_em_algebra(bits, MonadTag::POmega, seed, samples));
  const EMAlgebraSpec<Rational> interval{
      {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)},
      [](const MonadElement<Rational>& t) {
        Rational acc;
        for (const auto& [x, w] : t.terms()) acc += w * x;
        return acc;
      }};
  report.append(check_em_algebra(interval, MonadTag::Dist, seed, samples));

  report.append(check_pomega_iso(3));
  report.append(check_subdist_iso(3, seed, samples));
  return report;
}

LawReport run_enrich_suite(MonadTag tag, BaseKind base, std::size_t samples, std::uint64_t seed) {
  LawReport report;
  if (base == BaseKind::Rel) {
    report = check_enriched_category<Rel>(tag, samples, seed);
    Rng rng(seed);
    report.append(check_enrichment_conditions(free_model_description<Rel>(tag, rng),
                                              free_model_algebra<Rel>(tag), samples, seed));
  } else {
    report = check_enriched_category<Mat>(tag, samples, seed);
    Rng rng(seed);
    report.append(check_enrichment_conditions(free_model_description<Mat>(tag, rng),
                                              free_model_algebra<Mat>(tag), samples, seed));
  }
  return report;
}

LawReport run_relate_suite(std::size_t samples, std::uint64_t seed) {
  LawReport report;
  report.title = "relations between models";
  report.append(check_embeddings(samples, seed));
  report.append(check_support_enrichment(samples, seed));
  report.append(check_scalars(std::max<std::size_t>(samples / 4, 50), seed));
  report.append(check_enrichment_suite(samples, seed));
  report.append(check_counterexample_suite(samples, seed));
  return report;
}

}  // namespace mixcat
