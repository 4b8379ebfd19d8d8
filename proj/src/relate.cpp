#include "mixcat/relate.hpp"

namespace mixcat {

std::string_view to_string(EmbeddingTag tag) {
  switch (tag) {
    case EmbeddingTag::BotToPOmega: return "bot->pomega";
    case EmbeddingTag::PPlusToPOmega: return "pplus->pomega";
    case EmbeddingTag::BotToSubDist: return "bot->subdist";
    case EmbeddingTag::DistToSubDist: return "dist->subdist";
  }
  return "?";
}

MonadTag source_model(EmbeddingTag tag) {
  switch (tag) {
    case EmbeddingTag::BotToPOmega:
    case EmbeddingTag::BotToSubDist: return MonadTag::Lift;
    case EmbeddingTag::PPlusToPOmega: return MonadTag::PPlus;
    case EmbeddingTag::DistToSubDist: return MonadTag::Dist;
  }
  return MonadTag::Lift;
}

MonadTag target_model(EmbeddingTag tag) {
  switch (tag) {
    case EmbeddingTag::BotToPOmega:
    case EmbeddingTag::PPlusToPOmega: return MonadTag::POmega;
    case EmbeddingTag::BotToSubDist:
    case EmbeddingTag::DistToSubDist: return MonadTag::SubDist;
  }
  return MonadTag::POmega;
}

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Pointed: return "pointed";
    case AlgebraKind::Semilattice: return "semilattice";
    case AlgebraKind::PointedSemilattice: return "pointed semilattice";
    case AlgebraKind::Convex: return "convex";
    case AlgebraKind::Subconvex: return "subconvex";
  }
  return "?";
}

std::string weight_shape(const std::vector<Rational>& weights) {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i != 0) out += ",";
    out += weights[i].str();
  }
  return out;
}

const UniformityReport<Rel>* CounterexampleSearch::find_shape(const std::string& shape) const {
  for (const auto& w : witnesses) {
    if (weight_shape(w.weights) == shape) return &w;
  }
  return nullptr;
}

CounterexampleSearch search_uniform_counterexamples(std::size_t max_size) {
  if (max_size > 5) {
    throw BoundError("counterexample search is bounded to 5 elements, got " +
                     std::to_string(max_size));
  }
  CounterexampleSearch out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const FinSet x = finset_of_size("X" + std::to_string(n), n);
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= n;
    for (std::size_t code = 0; code < count; ++code) {
      // Most significant digit is the image of element 0.
      std::vector<std::pair<std::size_t, std::size_t>> pairs(n);
      std::size_t rest = code;
      for (std::size_t i = n; i-- > 0;) {
        pairs[i] = {i, rest % n};
        rest /= n;
      }
      auto report = counterexample_uniform(relation(x, x, pairs));
      ++out.examined;
      if (!report.uniform) out.witnesses.push_back(std::move(report));
    }
  }
  return out;
}

RelMorphism successor_with_absorber(std::size_t n) {
  const FinSet x = finset_of_size("X" + std::to_string(n), n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, std::min(i + 1, n - 1));
  return relation(x, x, pairs);
}

LawReport check_uniform_functor(std::size_t samples, std::uint64_t seed) {
  const auto f = successor_with_absorber(4);
  const auto u = EnrichedMorphism<Rel>(
      f.src(), f.tgt(), MonadElement<RelMorphism>::from_set(MonadTag::PPlus, {f, compose(f, f)}));
  const EnrichedFunctor<Rel> functor = [](const EnrichedMorphism<Rel>& m) {
    return uniform_distribution(m);
  };
  return check_functor<Rel>("uniform pplus->dist", MonadTag::PPlus, MonadTag::Dist, functor,
                            samples, seed, {{u, u}});
}

CategoryDescription<RelMorphism, FinSet> finrel_description(std::size_t max_size) {
  CategoryDescription<RelMorphism, FinSet> cat;
  cat.name = "finrel";
  for (std::size_t n = 0; n <= max_size; ++n) {
    cat.objects.push_back(finset_of_size("S" + std::to_string(n), n));
  }
  cat.homset = [](const FinSet& a, const FinSet& b) { return all_relations(a, b); };
  cat.compose = [](const RelMorphism& g, const RelMorphism& f) { return compose(g, f); };
  cat.show = [](const RelMorphism& f) { return f.key(); };
  return cat;
}

namespace {

RelMorphism pointwise(const RelMorphism& f, const RelMorphism& g, bool conjunction) {
  if (!(f.src() == g.src()) || !(f.tgt() == g.tgt())) {
    throw CompositionError("pointwise operation on different homsets");
  }
  MatrixOf<Rel> m = conjunction ? MatrixOf<Rel>(f.matrix().array() && g.matrix().array())
                                : MatrixOf<Rel>(f.matrix().array() || g.matrix().array());
  return RelMorphism(f.src(), f.tgt(), std::move(m));
}

}  // namespace

HomsetAlgebra<RelMorphism, FinSet> finrel_union_algebra() {
  HomsetAlgebra<RelMorphism, FinSet> alg;
  alg.name = "union";
  alg.kind = AlgebraKind::PointedSemilattice;
  alg.bottom = [](const FinSet& a, const FinSet& b) { return zero<Rel>(a, b); };
  alg.join = [](const RelMorphism& f, const RelMorphism& g) { return pointwise(f, g, false); };
  return alg;
}

HomsetAlgebra<RelMorphism, FinSet> finrel_intersection_algebra() {
  HomsetAlgebra<RelMorphism, FinSet> alg;
  alg.name = "intersection";
  alg.kind = AlgebraKind::Semilattice;
  alg.join = [](const RelMorphism& f, const RelMorphism& g) { return pointwise(f, g, true); };
  return alg;
}

CategoryDescription<MatMorphism, MatObj> finmat_description(std::uint64_t seed) {
  CategoryDescription<MatMorphism, MatObj> cat;
  cat.name = "finmat";
  cat.objects = {make_matobj(0), make_matobj(1), make_matobj(2)};
  cat.homset = [seed](const MatObj& a, const MatObj& b) {
    Rng rng(seed * 1000003 + a.dim * 31 + b.dim);
    std::vector<MatMorphism> out{zero<Mat>(a, b)};
    for (int i = 0; i < 6; ++i) out.push_back(random_morphism<Mat>(a, b, rng));
    return out;
  };
  cat.compose = [](const MatMorphism& g, const MatMorphism& f) { return compose(g, f); };
  cat.show = [](const MatMorphism& f) { return f.key(); };
  return cat;
}

HomsetAlgebra<MatMorphism, MatObj> finmat_zero_algebra() {
  HomsetAlgebra<MatMorphism, MatObj> alg;
  alg.name = "zero";
  alg.kind = AlgebraKind::Pointed;
  alg.bottom = [](const MatObj& a, const MatObj& b) { return zero<Mat>(a, b); };
  return alg;
}

}  // namespace mixcat
