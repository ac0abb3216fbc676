#include "doctest.h"
#include "retell/error.h"
#include "retell/realizer.h"

using namespace retell;

namespace {

Features past(Polarity p = Polarity::kAffirmative) {
  Features f;
  f.tense = Tense::kPast;
  f.polarity = p;
  return f;
}

DSyntNode np(const std::string& lemma, Number n = Number::kSingular,
             Article a = Article::kDefinite) {
  Features f;
  f.article = a;
  f.number = n;
  return make_node(lemma, NodeClass::kCommonNoun, f);
}

DSyntNode clause(const std::string& verb, DSyntNode subject, Polarity p = Polarity::kAffirmative) {
  return attach(make_node(verb, NodeClass::kVerb, past(p)), std::move(subject), Relation::kI);
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<Token> words(std::initializer_list<const char*> list) {
  std::vector<Token> out;
  for (const char* w : list) out.push_back({w, TokenKind::kWord, false});
  return out;
}

}  // namespace

TEST_CASE("single clause") {
  CHECK(realize_sentence(clause("jump", np("fox"))) == "The fox jumped.");
  Document doc;
  doc.sentences.push_back(clause("jump", np("fox")));
  doc.sentences.push_back(clause("sober", np("lion")));
  CHECK(realize_document(doc) == "The fox jumped. The lion sobered.");
  CHECK(realize_document(Document{}).empty());
}

TEST_CASE("negation and agreement") {
  DSyntNode obtain = clause("obtain", np("fox"), Polarity::kNegated);
  obtain = attach(std::move(obtain), np("cheese"), Relation::kII);
  CHECK(realize_sentence(obtain) == "The fox did not obtain the cheese.");
  CHECK(realize_sentence(obtain, Lexicon::builtin(), {true}) == "The fox didn't obtain the cheese.");

  DSyntNode be = clause("be", np("fox", Number::kPlural), Polarity::kNegated);
  be = attach(std::move(be), make_node("hungry", NodeClass::kAdjective), Relation::kAttr);
  CHECK(realize_sentence(be) == "The foxes were not hungry.");
  CHECK(realize_sentence(be, Lexicon::builtin(), {true}) == "The foxes weren't hungry.");

  DSyntNode able = clause("be", np("fox"), Polarity::kNegated);
  DSyntNode reach = attach(make_node("reach", NodeClass::kVerb), np("vine"), Relation::kII);
  DSyntNode adj = attach(make_node("able", NodeClass::kAdjective), reach, Relation::kII);
  able = attach(std::move(able), std::move(adj), Relation::kAttr);
  CHECK(realize_sentence(able) == "The fox was not able to reach the vine.");

  DSyntNode could = clause("can", np("fox"), Polarity::kNegated);
  could = attach(std::move(could), reach, Relation::kII);
  CHECK(realize_sentence(could, Lexicon::builtin(), {true}) == "The fox couldn't reach the vine.");
}

TEST_CASE("noun phrases") {
  DSyntNode fox = np("fox");
  fox = attach(std::move(fox), make_node("hungry", NodeClass::kAdjective), Relation::kAttr);
  CHECK(realize_sentence(clause("jump", fox)) == "The hungry fox jumped.");
  CHECK(realize_sentence(clause("jump", np("fox", Number::kSingular, Article::kIndefinite))) ==
        "A fox jumped.");
  CHECK(realize_sentence(clause("jump", np("air", Number::kSingular, Article::kIndefinite))) ==
        "An air jumped.");
  CHECK(realize_sentence(clause("jump", np("wife", Number::kPlural, Article::kNone))) ==
        "Wives jumped.");
}

TEST_CASE("linearize tokens and punctuation") {
  DSyntNode s = clause("jump", np("fox"));
  CHECK(surfaces(linearize(s)) == std::vector<std::string>{"the", "fox", "jumped", "."});
  s.features.punct = Punct::kExclaim;
  CHECK(realize_sentence(s) == "The fox jumped!");
  s.features.punct = Punct::kQuestion;
  CHECK(realize_sentence(s) == "The fox jumped?");
  auto tokens = linearize(s);
  CHECK(tokens.back().kind == TokenKind::kPunctuation);
  CHECK(tokens.back().no_space_before);
}

TEST_CASE("stutter fragments attach without spaces") {
  DSyntNode trellis = np("trellis");
  trellis = attach(std::move(trellis), make_node("tr-", NodeClass::kFunctionWord), Relation::kAttr);
  trellis = attach(std::move(trellis), make_node("tr-", NodeClass::kFunctionWord), Relation::kAttr);
  DSyntNode on = attach(make_node("on", NodeClass::kPreposition), trellis, Relation::kII);
  DSyntNode s = attach(clause("hang", np("vine")), on, Relation::kAppend);
  CHECK(realize_sentence(s) == "The vine hung on the tr-tr-trellis.");
  auto tokens = linearize(s);
  CHECK(tokens[5].surface == "tr-");
  CHECK(tokens[6].no_space_before);
}

TEST_CASE("comma-set markers") {
  Features pre;
  pre.position = Position::kPre;
  pre.punct = Punct::kComma;
  Features post = pre;
  post.position = Position::kPost;
  DSyntNode s = clause("hang", np("vine"));
  s = attach(std::move(s), make_node("well", NodeClass::kFunctionWord, pre), Relation::kAppend);
  s = attach(std::move(s), make_node("didn't it", NodeClass::kFunctionWord, post),
             Relation::kAppend);
  s.features.punct = Punct::kQuestion;
  CHECK(realize_sentence(s) == "Well, the vine hung, didn't it?");
}

TEST_CASE("apply_contractions") {
  CHECK(surfaces(apply_contractions(words({"did", "not", "obtain"}))) ==
        std::vector<std::string>{"didn't", "obtain"});
  CHECK(surfaces(apply_contractions(words({"could", "not", "reach"}))) ==
        std::vector<std::string>{"couldn't", "reach"});
  CHECK(surfaces(apply_contractions(words({"was", "not"}))) == std::vector<std::string>{"wasn't"});
  CHECK(surfaces(apply_contractions(words({"the", "fox", "jumped"}))) ==
        std::vector<std::string>{"the", "fox", "jumped"});
  CHECK(surfaces(apply_contractions(words({"not", "did"}))) ==
        std::vector<std::string>{"not", "did"});
}

TEST_CASE("render") {
  CHECK(render(words({"err...", "the", "fox"})) == "Err... the fox");
  std::vector<Token> t = words({"a", "b"});
  t.push_back({",", TokenKind::kPunctuation, true});
  CHECK(render(t) == "A b,");
  CHECK(render({}).empty());
}

TEST_CASE("linearization errors") {
  CHECK_THROWS_AS(linearize(np("fox")), LinearizationError);
  CHECK_THROWS_AS(linearize(clause("teleport", np("fox"))), LinearizationError);
  CHECK_THROWS_AS(linearize(clause("jump", np("dragon"))), LinearizationError);
}
