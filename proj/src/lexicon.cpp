#include "mixcat/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mixcat {

namespace {

using nlohmann::json;

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

/// Line of the first "key" (quoted, followed by a colon), or 0.
std::size_t line_of_key(std::string_view text, const std::string& key, std::size_t from = 0) {
  const std::string quoted = "\"" + key + "\"";
  for (auto pos = text.find(quoted, from); pos != std::string_view::npos;
       pos = text.find(quoted, pos + 1)) {
    auto after = pos + quoted.size();
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (after < text.size() && text[after] == ':') return line_at(text, pos);
  }
  return 0;
}

struct Context {
  std::string_view text;

  [[noreturn]] void fail(const std::string& message, const std::string& near = {}) const {
    throw LexiconError(message, near.empty() ? 0 : line_of_key(text, near));
  }
  /// Located inside the "words" object.
  [[noreturn]] void fail_word(const std::string& message, const std::string& word) const {
    const auto words = text.find("\"words\"");
    throw LexiconError(message, line_of_key(text, word, words == std::string_view::npos ? 0 : words));
  }
};

Rational parse_weight(const json& w, const Context& ctx, const std::string& word) {
  try {
    if (w.is_string()) return Rational::parse(w.get<std::string>());
    if (w.is_number_integer()) return Rational(w.get<std::int64_t>());
  } catch (const std::exception& e) {
    ctx.fail_word("word '" + word + "': bad weight: " + e.what(), word);
  }
  ctx.fail_word("word '" + word + "': weight must be a \"num/den\" string or an integer", word);
}

template <BaseCategory Base>
typename Base::Scalar parse_entry(const json& v, const Context& ctx, const std::string& word) {
  if constexpr (std::same_as<Base, Rel>) {
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_number_integer() && (v.get<std::int64_t>() == 0 || v.get<std::int64_t>() == 1)) {
      return v.get<std::int64_t>() == 1;
    }
    ctx.fail_word("word '" + word + "': relation entries must be 0 or 1", word);
  } else {
    return parse_weight(v, ctx, word);
  }
}

template <BaseCategory Base>
Morphism<Base> parse_state(const json& matrix, const typename Base::Object& tgt,
                           const Context& ctx, const std::string& word) {
  if (!matrix.is_array()) ctx.fail_word("word '" + word + "': matrix must be an array", word);
  const auto rows = static_cast<Eigen::Index>(tgt.size());
  if (matrix.size() != tgt.size()) {
    ctx.fail_word("word '" + word + "': matrix has " + std::to_string(matrix.size()) + " rows, type needs " +
                 std::to_string(tgt.size()),
                  word);
  }
  MatrixOf<Base> m(rows, 1);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = matrix[static_cast<std::size_t>(r)];
    if (row.is_array()) {
      if (row.size() != 1) ctx.fail_word("word '" + word + "': a state matrix has one column", word);
      m(r, 0) = parse_entry<Base>(row[0], ctx, word);
    } else {
      m(r, 0) = parse_entry<Base>(row, ctx, word);
    }
  }
  return Morphism<Base>(Base::unit(), tgt, std::move(m));
}

template <BaseCategory Base>
typename Base::Object parse_object(const std::string& name, const json& spec, const Context& ctx) {
  if constexpr (std::same_as<Base, Rel>) {
    if (!spec.is_array()) ctx.fail("object '" + name + "' must list element labels", name);
    std::vector<std::string> elements;
    for (const auto& e : spec) {
      if (!e.is_string()) ctx.fail("object '" + name + "' has a non-string element", name);
      elements.push_back(e.get<std::string>());
    }
    try {
      return make_finset(name, std::move(elements));
    } catch (const ShapeError& e) {
      ctx.fail(e.what(), name);
    }
  } else {
    if (!spec.is_number_unsigned()) ctx.fail("object '" + name + "' must be a dimension", name);
    const auto dim = spec.get<std::size_t>();
    return MatObj{name, {dim}, dim};
  }
}

template <BaseCategory Base>
Lexicon<Base> build(const json& doc, MonadTag model, const Context& ctx) {
  Lexicon<Base> lex;
  lex.model = model;
  if (doc.contains("objects")) {
    if (!doc["objects"].is_object()) ctx.fail("\"objects\" must be an object", "objects");
    for (const auto& [name, spec] : doc["objects"].items()) {
      lex.objects.emplace(name, parse_object<Base>(name, spec, ctx));
    }
  }
  if (!doc.contains("words")) return lex;
  if (!doc["words"].is_object()) ctx.fail("\"words\" must be an object", "words");
  for (const auto& [word, entry] : doc["words"].items()) {
    if (!entry.is_object()) ctx.fail_word("word '" + word + "' must be an object", word);
    if (!entry.contains("type") || !entry["type"].is_string()) {
      ctx.fail_word("word '" + word + "' has no type string", word);
    }
    PregroupType type;
    typename Base::Object object;
    try {
      type = parse_type(entry["type"].template get<std::string>());
      object = type_object<Base>(lex.objects, type);
    } catch (const Error& e) {
      ctx.fail_word("word '" + word + "': " + e.what(), word);
    }
    const bool bottom = entry.contains("bottom") && entry["bottom"].is_boolean() && entry["bottom"].template get<bool>();
    std::vector<RawTerm<Base>> terms;
    if (bottom) {
      if (!has_bottom(model)) {
        ctx.fail_word("word '" + word + "': model " + std::string(to_string(model)) + " has no bottom", word);
      }
      if (entry.contains("terms") && !entry["terms"].empty()) {
        ctx.fail_word("word '" + word + "': a bottom entry takes no terms", word);
      }
    } else {
      if (!entry.contains("terms") || !entry["terms"].is_array()) {
        ctx.fail_word("word '" + word + "' needs a terms array or \"bottom\": true", word);
      }
      for (const auto& term : entry["terms"]) {
        if (!term.is_object() || !term.contains("matrix")) {
          ctx.fail_word("word '" + word + "': each term needs a matrix", word);
        }
        Rational w(1);
        if (term.contains("weight")) {
          w = parse_weight(term["weight"], ctx, word);
        } else if (is_quantitative(model)) {
          ctx.fail_word("word '" + word + "': terms of a " + std::string(to_string(model)) + " lexicon need weights", word);
        }
        if (!w.is_positive()) ctx.fail_word("word '" + word + "': weights must be positive", word);
        terms.emplace_back(parse_state<Base>(term["matrix"], object, ctx, word), w);
      }
    }
    try {
      lex.words.emplace(word, LexiconEntry<Base>{std::move(type),
                                                 canonicalize<Base>(model, Base::unit(), object,
                                                                    std::move(terms))});
    } catch (const Error& e) {
      ctx.fail_word("word '" + word + "': " + e.what(), word);
    }
  }
  return lex;
}

}  // namespace

AnyLexicon load_lexicon(std::string_view text) {
  const Context ctx{text};
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) {
    return Lexicon<Rel>{};
  }
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw LexiconError(std::string("malformed JSON: ") + e.what(), line_at(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw LexiconError("lexicon must be a JSON object", 1);
  MonadTag model = MonadTag::Dist;
  if (doc.contains("model")) {
    if (!doc["model"].is_string()) ctx.fail("\"model\" must be a string", "model");
    try {
      model = parse_monad_tag(doc["model"].template get<std::string>());
    } catch (const ModelError& e) {
      ctx.fail(e.what(), "model");
    }
  }
  std::string base = "rel";
  if (doc.contains("base")) {
    if (!doc["base"].is_string()) ctx.fail("\"base\" must be a string", "base");
    base = doc["base"].template get<std::string>();
  }
  if (base == "rel") return build<Rel>(doc, model, ctx);
  if (base == "mat") return build<Mat>(doc, model, ctx);
  ctx.fail("unknown base '" + base + "' (expected rel or mat)", "base");
}

AnyLexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot read lexicon file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_lexicon(buffer.str());
}

}  // namespace mixcat
