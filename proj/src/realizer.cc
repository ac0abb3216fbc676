#include "retell/realizer.h"

#include <cctype>

#include "retell/error.h"

namespace retell {
namespace {

class Linearizer {
 public:
  explicit Linearizer(const Lexicon& lexicon) : lexicon_(lexicon) {}

  std::vector<Token> run(const DSyntNode& root) {
    if (root.cls != NodeClass::kVerb) {
      throw LinearizationError("sentence root '" + root.lexeme + "' is not a verb");
    }
    clause(root, false);
    Punct p = root.features.punct.value_or(Punct::kPeriod);
    punct(p == Punct::kExclaim ? "!" : p == Punct::kQuestion ? "?" : ".");
    for (std::size_t i = 1; i < tokens_.size(); ++i) {
      const std::string& prev = tokens_[i - 1].surface;
      if (!prev.empty() && prev.back() == '-') tokens_[i].no_space_before = true;
    }
    return std::move(tokens_);
  }

 private:
  void word(std::string_view s) {
    // Multiword lexemes: "in_order_for", "I mean".
    std::string cur;
    for (char c : s) {
      if (c == '_' || c == ' ') {
        if (!cur.empty()) tokens_.push_back({cur, TokenKind::kWord, false});
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) tokens_.push_back({cur, TokenKind::kWord, false});
  }

  void punct(std::string s) { tokens_.push_back({std::move(s), TokenKind::kPunctuation, true}); }

  const LexemeEntry& entry(const DSyntNode& n, PartOfSpeech pos) {
    const LexemeEntry* e = lexicon_.find(n.lexeme, pos);
    if (!e) {
      throw LinearizationError("no " + std::string(to_string(pos)) + " entry for '" + n.lexeme +
                               "'");
    }
    return *e;
  }

  static bool is_comma(const DSyntNode& n) { return n.features.punct == Punct::kComma; }

  static Position attr_position(const DSyntNode& n) {
    if (n.features.position) return *n.features.position;
    return n.cls == NodeClass::kAdjective ? Position::kPost : Position::kPre;
  }

  static Number subject_number(const DSyntNode& verb) {
    const DSyntNode* s = verb.child(Relation::kI);
    if (s && s->features.number) return *s->features.number;
    return Number::kSingular;
  }

  void node(const DSyntNode& n, bool bare_infinitive = false) {
    switch (n.cls) {
      case NodeClass::kVerb: clause(n, bare_infinitive); break;
      case NodeClass::kCommonNoun: noun_phrase(n); break;
      case NodeClass::kAdjective: modified_word(n, n.lexeme); break;
      case NodeClass::kAdverb: modified_word(n, n.lexeme); break;
      case NodeClass::kPreposition: modified_word(n, n.lexeme); break;
      case NodeClass::kFunctionWord: modified_word(n, n.lexeme); break;
    }
  }

  // Pre ATTR, the word, II, post ATTR, APPEND.
  void modified_word(const DSyntNode& n, std::string_view surface) {
    for (const auto& c : n.children) {
      if (c.relation == Relation::kAttr && attr_position(c) == Position::kPre) node(c);
    }
    word(surface);
    if (const DSyntNode* obj = n.child(Relation::kII)) node(*obj);
    for (const auto& c : n.children) {
      if (c.relation == Relation::kAttr && attr_position(c) == Position::kPost) node(c);
    }
    appends(n);
  }

  void noun_phrase(const DSyntNode& n) {
    const LexemeEntry& e = entry(n, PartOfSpeech::kNoun);
    const std::string head = inflect(e, {std::nullopt, n.features.number});
    switch (n.features.article.value_or(Article::kNone)) {
      case Article::kDefinite: word("the"); break;
      case Article::kIndefinite: {
        const DSyntNode* first_attr = n.child(Relation::kAttr);
        const std::string& next = first_attr ? first_attr->lexeme : head;
        word(!next.empty() && std::string_view("aeiou").find(next[0]) != std::string_view::npos
                 ? "an"
                 : "a");
        break;
      }
      case Article::kNone: break;
    }
    for (const auto& c : n.children) {
      if (c.relation == Relation::kAttr) node(c);
    }
    word(head);
    appends(n);
  }

  // APPEND dependents of a non-clausal head, in child order.
  void appends(const DSyntNode& n) {
    for (const auto& c : n.children) {
      if (c.relation != Relation::kAppend) continue;
      if (is_comma(c)) punct(",");
      node(c);
    }
  }

  void verb_group(const DSyntNode& v) {
    const LexemeEntry& e = entry(v, PartOfSpeech::kVerb);
    const bool negated = v.features.polarity == Polarity::kNegated;
    const Number number = subject_number(v);
    if (e.lemma == "be" || e.modal) {
      word(inflect(e, {Tense::kPast, number}));
      if (negated) word("not");
      return;
    }
    if (negated) {
      word("did");
      word("not");
      word(e.lemma);
      return;
    }
    word(inflect(e, {Tense::kPast, number}));
  }

  // Finite clause when tensed; otherwise "[subject] [not] to V ...", with a
  // bare infinitive under a modal.
  void clause(const DSyntNode& v, bool bare_infinitive) {
    const bool finite = v.features.tense.has_value();
    for (const auto& c : v.children) {
      if (c.relation == Relation::kAppend && c.features.position == Position::kPre) {
        node(c);
        if (is_comma(c)) punct(",");
      }
    }
    if (const DSyntNode* subject = v.child(Relation::kI)) node(*subject);
    for (const auto& c : v.children) {
      if (c.relation == Relation::kAttr && attr_position(c) == Position::kPre) node(c);
    }
    const LexemeEntry& e = entry(v, PartOfSpeech::kVerb);
    if (finite) {
      verb_group(v);
    } else {
      if (v.features.polarity == Polarity::kNegated) word("not");
      if (!bare_infinitive) word("to");
      word(e.lemma);
    }
    for (const auto& c : v.children) {
      if (c.relation == Relation::kAttr && attr_position(c) == Position::kPost) node(c);
    }
    if (const DSyntNode* iii = v.child(Relation::kIII)) node(*iii);
    if (const DSyntNode* ii = v.child(Relation::kII)) node(*ii, e.modal);

    std::vector<const DSyntNode*> post;
    for (const auto& c : v.children) {
      if (c.relation == Relation::kAppend && c.features.position != Position::kPre) {
        post.push_back(&c);
      }
    }
    for (std::size_t i = 0; i < post.size(); ++i) {
      const DSyntNode& c = *post[i];
      if (is_comma(c)) punct(",");
      node(c);
      if (is_comma(c) && i + 1 < post.size()) punct(",");
    }
  }

  const Lexicon& lexicon_;
  std::vector<Token> tokens_;
};

}  // namespace

std::vector<Token> linearize(const DSyntNode& root, const Lexicon& lexicon) {
  return Linearizer(lexicon).run(root);
}

std::vector<Token> apply_contractions(std::vector<Token> tokens) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& s = tokens[i].surface;
    const bool aux = s == "did" || s == "could" || s == "was" || s == "were";
    if (aux && i + 1 < tokens.size() && tokens[i + 1].surface == "not") {
      Token t = tokens[i];
      t.surface += "n't";
      out.push_back(std::move(t));
      ++i;
      continue;
    }
    out.push_back(tokens[i]);
  }
  return out;
}

std::string render(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty() && !t.no_space_before && t.kind == TokenKind::kWord) out += ' ';
    out += t.surface;
  }
  for (char& c : out) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
  }
  return out;
}

std::string realize_sentence(const DSyntNode& root, const Lexicon& lexicon,
                             const RealizeOptions& opts) {
  std::vector<Token> tokens = linearize(root, lexicon);
  if (opts.contractions) tokens = apply_contractions(std::move(tokens));
  return render(tokens);
}

std::string realize_document(const Document& doc, const Lexicon& lexicon,
                             const RealizeOptions& opts) {
  std::string out;
  for (const auto& s : doc.sentences) {
    if (!out.empty()) out += ' ';
    out += realize_sentence(s, lexicon, opts);
  }
  return out;
}

}  // namespace retell
