#include "mixcat/monads.hpp"

namespace mixcat {

std::string_view to_string(MonadTag tag) {
  switch (tag) {
    case MonadTag::Lift: return "lift";
    case MonadTag::PPlus: return "pplus";
    case MonadTag::POmega: return "pomega";
    case MonadTag::Dist: return "dist";
    case MonadTag::SubDist: return "subdist";
  }
  return "?";
}

MonadTag parse_monad_tag(std::string_view name) {
  for (auto tag : kAllMonads) {
    if (to_string(tag) == name) return tag;
  }
  throw ModelError("unknown model '" + std::string(name) +
                   "' (expected lift, pplus, pomega, dist or subdist)");
}

std::vector<int> int_carrier(std::size_t n, int offset) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), offset);
  return out;
}

namespace {

/// Elements of T Y with at most two members, plus `samples` random ones.
template <class Y>
std::vector<MonadElement<Y>> small_subsets(MonadTag tag, const std::vector<Y>& ys,
                                           std::size_t samples, Rng& rng) {
  std::vector<MonadElement<Y>> out;
  if (tag == MonadTag::POmega) out.push_back(MonadElement<Y>::bottom(tag));
  for (std::size_t i = 0; i < ys.size(); ++i) {
    out.push_back(t_unit(tag, ys[i]));
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      out.push_back(MonadElement<Y>::from_set(tag, {ys[i], ys[j]}));
    }
  }
  const auto extra = random_elements(tag, ys, samples, rng);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

template <class X>
std::vector<MonadElement<X>> with_corners(MonadTag tag, const std::vector<X>& carrier,
                                          std::size_t samples, Rng& rng) {
  auto out = corner_elements(tag, carrier);
  const auto extra = random_elements(tag, carrier, samples, rng);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

}  // namespace

LawReport check_monad_laws(MonadTag tag, std::size_t max_carrier, std::uint64_t seed,
                           std::size_t samples) {
  Rng rng(seed);
  LawReport report;
  report.title = "monad laws: " + std::string(to_string(tag));
  const std::string suite = "monad/" + std::string(to_string(tag));
  const FiniteMonad m{tag};
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    const auto carrier = int_carrier(n);
    if (is_enumerable(tag)) {
      const auto tx = enumerate_elements(tag, carrier);
      const auto ttx = enumerate_elements(tag, tx);
      const bool full = tag == MonadTag::Lift || ttx.size() <= 16;
      const auto ttt = full ? enumerate_elements(tag, ttx) : small_subsets(tag, ttx, samples, rng);
      check_monad_laws(m, report, suite, tx, ttt);
      check_monad_laws(m, report, suite, ttx, std::remove_cvref_t<decltype(ttt)>{});
    } else {
      if (n == 0 && tag == MonadTag::Dist) continue;
      const auto tx = with_corners(tag, carrier, samples, rng);
      const auto ttx = with_corners(tag, tx, samples, rng);
      const auto ttt = with_corners(tag, ttx, samples, rng);
      check_monad_laws(m, report, suite, tx, ttt);
      check_monad_laws(m, report, suite, ttx, std::remove_cvref_t<decltype(ttt)>{});
    }
  }
  return report;
}

CommutativityResult check_commutativity(MonadTag tag, std::size_t max_carrier,
                                        std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  const FiniteMonad m{tag};
  CommutativityResult total;
  for (std::size_t nx = 1; nx <= max_carrier; ++nx) {
    for (std::size_t ny = 1; ny <= max_carrier; ++ny) {
      const auto xs = int_carrier(nx);
      const auto ys = int_carrier(ny, 10);
      const auto ts = is_enumerable(tag) ? enumerate_elements(tag, xs) : with_corners(tag, xs, samples, rng);
      const auto us = is_enumerable(tag) ? enumerate_elements(tag, ys) : with_corners(tag, ys, samples, rng);
      const auto r = check_commutativity(m, ts, us);
      total.instances += r.instances;
      if (!r.holds && total.holds) {
        total.holds = false;
        total.witness = r.witness;
      }
    }
  }
  return total;
}

TerminalInspection inspect_terminal(MonadTag tag) {
  const std::vector<int> one{0};
  const auto eta = t_unit(tag, 0);
  std::vector<MonadElement<int>> found;
  if (is_enumerable(tag)) {
    found = enumerate_elements(tag, one);
  } else {
    for (const auto& w : {Rational(1), Rational(1, 2), Rational(1, 3), Rational(0)}) {
      try {
        auto t = MonadElement<int>::from_terms(tag, {{0, w}});
        if (std::find(found.begin(), found.end(), t) == found.end()) found.push_back(std::move(t));
      } catch (const WeightError&) {
      }
    }
  }
  TerminalInspection out;
  out.affine = found.size() == 1 && found.front() == eta;
  if (!is_quantitative(tag) || found.size() == 1) out.size = found.size();
  for (const auto& t : found) out.elements.push_back(describe(t));
  return out;
}

LawResult check_relevant(MonadTag tag, std::size_t carrier_size, std::uint64_t seed,
                         std::size_t samples) {
  Rng rng(seed);
  LawResult result{"relevance/" + std::string(to_string(tag)), "dst . delta = T(delta)"};
  const auto carrier = int_carrier(carrier_size);
  const auto ts = is_enumerable(tag) ? enumerate_elements(tag, carrier)
                                     : with_corners(tag, carrier, samples, rng);
  for (const auto& t : ts) {
    const auto lhs = t_double_strength(t, t);
    const auto rhs = t_map([](int x) { return std::pair(x, x); }, t);
    result.check(lhs == rhs, [&] { return describe(t) + ": " + describe(lhs) + " vs " + describe(rhs); });
  }
  return result;
}

LawResult check_idempotence(MonadTag tag, std::size_t carrier_size) {
  LawResult result{"idempotence/" + std::string(to_string(tag)), "combining x with x gives x"};
  for (int x : int_carrier(carrier_size)) {
    std::vector<MonadElement<int>::Term> terms;
    if (is_quantitative(tag)) {
      terms = {{x, Rational(1, 3)}, {x, Rational(1, 6)}, {x, Rational(1, 2)}};
    } else {
      terms = {{x, Rational(1)}, {x, Rational(1)}};
    }
    const auto collected = MonadElement<int>::from_terms(tag, terms);
    result.check(collected == t_unit(tag, x), [&] { return describe(collected); });
  }
  return result;
}

LawReport check_pomega_iso(std::size_t max_carrier) {
  LawReport report;
  report.title = "pomega = (pplus)_bottom";
  const std::string suite = "iso/pomega";
  auto& there = report.add(suite, "lifted . pomega round trip");
  auto& back = report.add(suite, "pomega . lifted round trip");
  auto& unit = report.add(suite, "unit transported");
  auto& mult = report.add(suite, "multiplication transported");
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    const auto xs = int_carrier(n);
    const auto pomega = enumerate_elements(MonadTag::POmega, xs);
    for (const auto& s : pomega) {
      const auto r = lifted_to_pomega(pomega_to_lifted(s));
      there.check(r == s, [&] { return describe(s) + " -> " + describe(r); });
    }
    for (const auto& l : enumerate_elements(MonadTag::Lift, enumerate_elements(MonadTag::PPlus, xs))) {
      const auto r = pomega_to_lifted(lifted_to_pomega(l));
      back.check(r == l, [&] { return describe(l) + " -> " + describe(r); });
    }
    for (int x : xs) {
      unit.check(pomega_to_lifted(t_unit(MonadTag::POmega, x)) == lifted_pplus_unit(x),
                 [&] { return describe(x); });
    }
    for (const auto& tt : enumerate_elements(MonadTag::POmega, pomega)) {
      const auto lhs = pomega_to_lifted(t_mult(tt));
      const auto rhs = lifted_pplus_mult(pomega_to_lifted(t_map(pomega_to_lifted<int>, tt)));
      mult.check(lhs == rhs, [&] { return describe(tt) + ": " + describe(lhs) + " vs " + describe(rhs); });
    }
  }
  return report;
}

LawReport check_subdist_iso(std::size_t max_carrier, std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  LawReport report;
  report.title = "subdist = dist((-)_bottom)";
  const std::string suite = "iso/subdist";
  auto& there = report.add(suite, "dist . subdist round trip");
  auto& back = report.add(suite, "subdist . dist round trip");
  auto& unit = report.add(suite, "unit transported");
  auto& mult = report.add(suite, "multiplication transported");
  for (std::size_t n = 1; n <= max_carrier; ++n) {
    const auto xs = int_carrier(n);
    const auto elems = with_corners(MonadTag::SubDist, xs, samples, rng);
    for (const auto& s : elems) {
      const auto r = dist_to_subdist(subdist_to_dist(s));
      there.check(r == s, [&] { return describe(s) + " -> " + describe(r); });
    }
    std::vector<std::optional<int>> lifted{std::nullopt};
    lifted.insert(lifted.end(), xs.begin(), xs.end());
    for (const auto& d : with_corners(MonadTag::Dist, lifted, samples, rng)) {
      const auto r = subdist_to_dist(dist_to_subdist(d));
      back.check(r == d, [&] { return describe(d) + " -> " + describe(r); });
    }
    for (int x : xs) {
      unit.check(subdist_to_dist(t_unit(MonadTag::SubDist, x)) == dist_lift_unit(x),
                 [&] { return describe(x); });
    }
    for (const auto& tt : with_corners(MonadTag::SubDist, elems, samples, rng)) {
      const auto lhs = subdist_to_dist(t_mult(tt));
      const auto rhs = dist_lift_mult(subdist_to_dist(t_map(subdist_to_dist<int>, tt)));
      mult.check(lhs == rhs, [&] { return describe(tt) + ": " + describe(lhs) + " vs " + describe(rhs); });
    }
  }
  return report;
}

}  // namespace mixcat
