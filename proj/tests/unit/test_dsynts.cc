#include "doctest.h"
#include "retell/dsynts.h"
#include "retell/error.h"
#include "retell/story_graph.h"
#include "retell/transform.h"
#include "test_util.h"

using namespace retell;

namespace {

Features past(Polarity p = Polarity::kAffirmative) {
  Features f;
  f.tense = Tense::kPast;
  f.polarity = p;
  return f;
}

Features def_np() {
  Features f;
  f.article = Article::kDefinite;
  f.number = Number::kSingular;
  return f;
}

DSyntNode hang_vine() {
  DSyntNode root = make_node("hang", NodeClass::kVerb, past());
  root = attach(std::move(root), make_node("vine", NodeClass::kCommonNoun, def_np()), Relation::kI);
  DSyntNode on = make_node("on", NodeClass::kPreposition);
  on = attach(std::move(on), make_node("trellis", NodeClass::kCommonNoun, def_np()), Relation::kII);
  return attach(std::move(root), std::move(on), Relation::kAppend);
}

}  // namespace

TEST_CASE("attach enforces class constraints and argument uniqueness") {
  DSyntNode noun = make_node("fox", NodeClass::kCommonNoun);
  CHECK_THROWS_AS(attach(noun, make_node("x", NodeClass::kCommonNoun), Relation::kI), ClassError);
  CHECK_THROWS_AS(attach(noun, make_node("x", NodeClass::kCommonNoun), Relation::kRoot),
                  ClassError);
  DSyntNode adverb = make_node("now", NodeClass::kAdverb);
  CHECK_THROWS_AS(attach(adverb, make_node("x", NodeClass::kAdverb), Relation::kAttr), ClassError);

  DSyntNode v = make_node("see", NodeClass::kVerb, past());
  v = attach(std::move(v), make_node("fox", NodeClass::kCommonNoun), Relation::kI);
  CHECK_THROWS_AS(attach(v, make_node("lion", NodeClass::kCommonNoun), Relation::kI),
                  RelationConflictError);
  // ATTR and APPEND may repeat.
  v = attach(std::move(v), make_node("now", NodeClass::kAdverb), Relation::kAttr);
  v = attach(std::move(v), make_node("earlier", NodeClass::kAdverb), Relation::kAttr);
  CHECK(v.count(Relation::kAttr) == 2);
  CHECK(v.children[0].relation == Relation::kI);
}

TEST_CASE("attach leaves its arguments untouched") {
  const DSyntNode parent = make_node("see", NodeClass::kVerb, past());
  const DSyntNode child = make_node("fox", NodeClass::kCommonNoun);
  DSyntNode out = attach(parent, child, Relation::kI);
  CHECK(parent.children.empty());
  CHECK(child.relation == Relation::kRoot);
  CHECK(out.children.size() == 1);
}

TEST_CASE("validate_tree") {
  CHECK(validate_tree(hang_vine()).empty());

  SUBCASE("root must be a verb") {
    auto d = validate_tree(make_node("fox", NodeClass::kCommonNoun));
    REQUIRE_FALSE(d.empty());
    CHECK(d[0].location == "/");
  }
  SUBCASE("preposition without object") {
    DSyntNode t = hang_vine();
    t.children[1].children.clear();
    auto d = validate_tree(t);
    REQUIRE(d.size() == 1);
    CHECK(d[0].location == "/1");
  }
  SUBCASE("terminal punctuation below the root") {
    DSyntNode t = hang_vine();
    t.children[0].features.punct = Punct::kExclaim;
    CHECK(validate_tree(t).size() == 1);
  }
  SUBCASE("features on the wrong class") {
    DSyntNode t = hang_vine();
    t.children[0].features.tense = Tense::kPast;
    t.features.article = Article::kDefinite;
    CHECK(validate_tree(t).size() == 2);
  }
  SUBCASE("hand-built duplicate argument") {
    DSyntNode t = hang_vine();
    DSyntNode extra = make_node("fox", NodeClass::kCommonNoun);
    extra.relation = Relation::kI;
    t.children.push_back(extra);
    CHECK_FALSE(validate_tree(t).empty());
  }
  SUBCASE("embedded verb under ATTR") {
    DSyntNode t = hang_vine();
    DSyntNode v = make_node("see", NodeClass::kVerb);
    v.relation = Relation::kAttr;
    t.children.push_back(v);
    CHECK_FALSE(validate_tree(t).empty());
  }
}

TEST_CASE("node paths") {
  DSyntNode t = hang_vine();
  CHECK(node_at(t, {})->lexeme == "hang");
  CHECK(node_at(t, {1, 0})->lexeme == "trellis");
  CHECK(node_at(t, {2}) == nullptr);
  CHECK(format_path({}) == "/");
  CHECK(format_path({1, 0}) == "/1/0");
  node_at(t, NodePath{0})->lexeme = "rock";
  CHECK(t.children[0].lexeme == "rock");
}

TEST_CASE("serialization") {
  Document doc;
  doc.sentences.push_back(hang_vine());
  const std::string expected =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<dsynts-document sentences=\"1\">\n"
      "  <dsynts id=\"s1\">\n"
      "    <node lexeme=\"hang\" class=\"verb\" rel=\"ROOT\" polarity=\"aff\" tense=\"past\">\n"
      "      <node lexeme=\"vine\" class=\"common_noun\" rel=\"I\" article=\"def\" number=\"sg\"/>\n"
      "      <node lexeme=\"on\" class=\"preposition\" rel=\"APPEND\">\n"
      "        <node lexeme=\"trellis\" class=\"common_noun\" rel=\"II\" article=\"def\" "
      "number=\"sg\"/>\n"
      "      </node>\n"
      "    </node>\n"
      "  </dsynts>\n"
      "</dsynts-document>\n";
  CHECK(serialize(doc) == expected);
  DSyntNode odd = make_node("say", NodeClass::kVerb);
  odd = attach(std::move(odd), make_node("\"a<b>&'", NodeClass::kFunctionWord), Relation::kII);
  CHECK(serialize_sentence(odd).find("lexeme=\"&quot;a&lt;b&gt;&amp;&apos;\"") !=
        std::string::npos);
}

TEST_CASE("neutral fox trees match the frozen markup") {
  StoryGraph g = parse_story(retell::testing::read_text("fixtures/fox_and_grapes.story"));
  Document doc = transform_story(g);
  CHECK(serialize(doc) == retell::testing::read_text("fixtures/dsynts_fox.xml"));
}
