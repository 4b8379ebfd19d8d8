#pragma once

// JSON lexicon files.
//
//   {
//     "model": "dist",                      lift | pplus | pomega | dist | subdist
//     "base": "rel",                        rel | mat
//     "objects": {"n": ["finance", "river"], "s": ["no", "yes"]},
//     "words": {
//       "bank": {"type": "n",
//                "terms": [{"weight": "9/10", "matrix": [[1], [0]]},
//                          {"weight": "1/10", "matrix": [[0], [1]]}]},
//       "unknown": {"type": "n", "bottom": true}
//     }
//   }
//
// Objects are element labels for rel and dimensions for mat. A term's
// matrix is the state I -> W as |W| rows of one entry (a flat list is read
// as that column). Set models may omit weights.

#include <string>
#include <string_view>
#include <variant>

#include "mixcat/base_category.hpp"
#include "mixcat/pregroup.hpp"

namespace mixcat {

using AnyLexicon = std::variant<Lexicon<Rel>, Lexicon<Mat>>;

/// Throws LexiconError with the offending line when it can be located. An
/// empty or all-whitespace text is an empty dist lexicon over rel.
AnyLexicon load_lexicon(std::string_view text);

/// Reads the file and calls load_lexicon. Throws LexiconError when the file
/// cannot be read.
AnyLexicon load_lexicon_file(const std::string& path);

}  // namespace mixcat
