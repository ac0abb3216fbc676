#pragma once

#include <string>
#include <vector>

#include "retell/dsynts.h"
#include "retell/lexicon.h"

namespace retell {

enum class TokenKind { kWord, kPunctuation };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  bool no_space_before = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct RealizeOptions {
  bool contractions = false;
};

// Sentences joined by single spaces, each capitalised and closed by its
// punct feature (period by default).
std::string realize_document(const Document& doc, const Lexicon& lexicon = Lexicon::builtin(),
                             const RealizeOptions& opts = {});

std::string realize_sentence(const DSyntNode& root, const Lexicon& lexicon = Lexicon::builtin(),
                             const RealizeOptions& opts = {});

// Ordered tokens of a sentence, terminal punctuation included, before
// capitalisation and contraction. Throws LinearizationError.
std::vector<Token> linearize(const DSyntNode& root, const Lexicon& lexicon = Lexicon::builtin());

// "did not" -> "didn't", "could not" -> "couldn't", "was not" -> "wasn't",
// "were not" -> "weren't".
std::vector<Token> apply_contractions(std::vector<Token> tokens);

// Joins tokens, honouring no_space_before and punctuation, and capitalises
// the first letter.
std::string render(const std::vector<Token>& tokens);

}  // namespace retell
