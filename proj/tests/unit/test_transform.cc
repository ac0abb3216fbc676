#include "doctest.h"
#include "retell/error.h"
#include "retell/realizer.h"
#include "retell/story_graph.h"
#include "retell/transform.h"
#include "test_util.h"

using namespace retell;
using retell::testing::read_paragraph;
using retell::testing::read_text;

namespace {

StoryGraph mini(const std::string& timeline) {
  return parse_story(
      "story s\ntitle \"S\"\n\nentities\n"
      "  fox character fox\n"
      "  wife character wife\n"
      "  grapes object group group_of=grape\n"
      "  vine object vine\n"
      "  vultures character group group_of=vulture\n"
      "  rock location rock\n"
      "\ntimeline\n  span 0\n" +
      timeline);
}

std::string neutral(const std::string& timeline) {
  return realize_document(transform_story(mini(timeline)));
}

std::string formal(const std::string& timeline) {
  TransformOptions opts;
  opts.referring_expression = ReferringExpression::kPronominalizeAfterFirst;
  opts.contractions = true;
  RealizeOptions ro;
  ro.contractions = true;
  return realize_document(transform_story(mini(timeline), opts), Lexicon::builtin(), ro);
}

bool has_pronoun(const DSyntNode& n) {
  static const std::set<std::string> pronouns = {"he", "him", "she", "her", "it", "they", "them"};
  if (n.cls == NodeClass::kFunctionWord && pronouns.count(n.lexeme)) return true;
  for (const auto& c : n.children) {
    if (has_pronoun(c)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("golden neutral realizations") {
  StoryGraph fox = parse_story(read_text("fixtures/fox_and_grapes.story"));
  Document fox_doc = transform_story(fox);
  CHECK(fox_doc.sentences.size() == 8);
  CHECK(realize_document(fox_doc) == read_paragraph("fixtures/fig1_personage.txt"));

  StoryGraph lion = parse_story(read_text("fixtures/lion_and_boar.story"));
  Document lion_doc = transform_story(lion);
  CHECK(lion_doc.sentences.size() == 16);
  CHECK(realize_document(lion_doc) == read_paragraph("fixtures/fig5_personage.txt"));
}

TEST_CASE("formal options reproduce the pronoun and contraction pattern") {
  StoryGraph fox = parse_story(read_text("fixtures/fox_and_grapes.story"));
  TransformOptions opts{ReferringExpression::kPronominalizeAfterFirst, true};
  std::string text =
      realize_document(transform_story(fox, opts), Lexicon::builtin(), RealizeOptions{true});
  // First five sentences of the FORMAL telling.
  CHECK(text.rfind(read_paragraph("fixtures/fig8_formal.txt"), 0) == 0);
}

TEST_CASE("build_clause examples") {
  CHECK(neutral("    [p1] jump jump(Agent=fox)\n") == "The fox jumped.");
  CHECK(neutral("    [p1] obtain obtain(Agent=fox, Theme=grapes) polarity=neg\n") ==
        "The fox did not obtain the group of grapes.");
  CHECK(neutral("    [p1] see see(Experiencer=fox)\n"
                "      role Stimulus:\n"
                "        [p2] be_seated be(Theme=vultures)\n"
                "          prep on: rock\n") ==
        "The fox saw the group of vultures was seated on the rock.");
  CHECK(neutral("    [p1] be_ripe be(Theme=grapes)\n") == "The group of grapes was ripe.");
  CHECK(neutral("    [p1] be_ripe be(Theme=grapes) polarity=neg\n") ==
        "The group of grapes was not ripe.");
  CHECK(neutral("    [p1] eat eat(Agent=fox, Patient=grapes)\n") ==
        "The fox ate the group of grapes.");
  CHECK(neutral("    [p1] hang hang(Theme=\"something\")\n") == "Something hung.");
}

TEST_CASE("build_clause tree shape") {
  StoryGraph g = mini("    [p1] obtain obtain(Agent=fox, Theme=grapes) polarity=neg\n");
  DiscourseContext ctx(g, Lexicon::builtin(), {});
  DSyntNode n = build_clause(g.timeline[0].propositions[0], ctx);
  CHECK(n.lexeme == "obtain");
  CHECK(n.features.tense == Tense::kPast);
  CHECK(n.features.polarity == Polarity::kNegated);
  REQUIRE(n.child(Relation::kI));
  CHECK(n.child(Relation::kI)->lexeme == "fox");
  REQUIRE(n.child(Relation::kII));
  CHECK(n.child(Relation::kII)->lexeme == "group");
}

TEST_CASE("build_clause errors carry the proposition id") {
  StoryGraph g = mini("    [p1] jump jump(Agent=fox)\n");
  DiscourseContext ctx(g, Lexicon::builtin(), {});
  Proposition p = g.timeline[0].propositions[0];
  p.frame.frame_id = "fly";
  try {
    build_clause(p, ctx);
    FAIL("expected BuildError");
  } catch (const BuildError& e) {
    CHECK(e.proposition_id() == "p1");
  }
  p = g.timeline[0].propositions[0];
  p.frame.bindings.push_back({"Theme", EntityRef{"vine"}});
  CHECK_THROWS_AS(build_clause(p, ctx), BuildError);
  p = g.timeline[0].propositions[0];
  p.frame.bindings.clear();
  CHECK_THROWS_AS(build_clause(p, ctx), BuildError);

  g.timeline[0].propositions[0].id = "p7";
  g.timeline[0].propositions[0].frame.bindings[0].value = EntityRef{"nobody"};
  try {
    transform_story(g);
    FAIL("expected BuildError");
  } catch (const BuildError& e) {
    CHECK(e.proposition_id() == "p7");
  }
}

TEST_CASE("realize_entity_np") {
  StoryGraph g = mini("    [p1] jump jump(Agent=fox)\n");
  TransformOptions pron{ReferringExpression::kPronominalizeAfterFirst, false};
  DiscourseContext ctx(g, Lexicon::builtin(), pron);
  DSyntNode first = realize_entity_np(*g.find_entity("fox"), ctx, NpCase::kSubject);
  CHECK(first.lexeme == "fox");
  CHECK(first.features.article == Article::kDefinite);
  CHECK(realize_entity_np(*g.find_entity("fox"), ctx, NpCase::kSubject).lexeme == "he");
  CHECK(realize_entity_np(*g.find_entity("fox"), ctx, NpCase::kObject).lexeme == "him");
  realize_entity_np(*g.find_entity("wife"), ctx, NpCase::kSubject);
  CHECK(realize_entity_np(*g.find_entity("wife"), ctx, NpCase::kObject).lexeme == "her");
  // Objects keep their full NP.
  realize_entity_np(*g.find_entity("grapes"), ctx, NpCase::kObject);
  DSyntNode grapes = realize_entity_np(*g.find_entity("grapes"), ctx, NpCase::kObject);
  CHECK(grapes.lexeme == "group");
  REQUIRE(grapes.child(Relation::kAppend));
  CHECK(grapes.child(Relation::kAppend)->lexeme == "of");
  CHECK(grapes.child(Relation::kAppend)->child(Relation::kII)->features.number ==
        Number::kPlural);
  ctx.begin_sentence();
  CHECK(realize_entity_np(*g.find_entity("fox"), ctx, NpCase::kSubject).lexeme == "fox");
}

TEST_CASE("attach_adjuncts") {
  CHECK(neutral("    [p1] walk walk(Agent=fox)\n"
                "      prep away_from: grapes\n"
                "      prep with: \"dignity and unconcern\"\n") ==
        "The fox walked away from the group of grapes with dignity and unconcern.");
  CHECK(neutral("    [p1] hang hang(Theme=grapes)\n      prep on: vine\n") ==
        "The group of grapes hung on the vine.");
  CHECK(neutral("    [p1] think think(Experiencer=fox) adv=earlier@pre\n") ==
        "The fox earlier thought.");
  CHECK(neutral("    [p1] jump jump(Agent=fox) adv=again@post\n") == "The fox jumped again.");

  StoryGraph g = mini("    [p1] jump jump(Agent=fox)\n      prep on: vine\n");
  Proposition p = g.timeline[0].propositions[0];
  p.attachments[0].preposition = "beneath";
  DiscourseContext ctx(g, Lexicon::builtin(), {});
  CHECK_THROWS_AS(attach_adjuncts(make_node("jump", NodeClass::kVerb), p, ctx),
                  UnknownPrepositionError);
}

TEST_CASE("attach_discourse") {
  CHECK(neutral("    [p1] jump jump(Agent=fox)\n"
                "      purpose:\n"
                "        [p2] obtain obtain(Agent=fox, Theme=grapes)\n") ==
        "The fox jumped in order for the fox to obtain the group of grapes.");
  CHECK(formal("    [p1] jump jump(Agent=fox)\n"
               "      purpose:\n"
               "        [p2] obtain obtain(Agent=fox, Theme=grapes)\n") ==
        "The fox jumped in order to obtain the group of grapes.");
  CHECK(formal("    [p1] jump jump(Agent=fox)\n"
               "      purpose:\n"
               "        [p2] obtain obtain(Agent=wife, Theme=grapes)\n") ==
        "The fox jumped in order for the wife to obtain the group of grapes.");
  CHECK(neutral("    [p1] obtain obtain(Agent=fox, Theme=grapes) polarity=neg\n"
                "      cause:\n"
                "        [p2] be_able be(Theme=fox) polarity=neg\n"
                "          role Action:\n"
                "            [p3] reach reach(Agent=fox, Theme=grapes)\n") ==
        "The fox did not obtain the group of grapes because the fox was not able to reach the "
        "group of grapes.");
  CHECK(neutral("    [p1] say say(Agent=fox)\n"
                "      complement:\n"
                "        [p2] think think(Experiencer=fox) adv=earlier@pre\n") ==
        "The fox said the fox earlier thought.");

  DSyntNode main = make_node("jump", NodeClass::kVerb);
  DSyntNode sub = make_node("obtain", NodeClass::kVerb);
  CHECK_THROWS_AS(attach_discourse(main, AttachmentRelation::kPrepositional, sub),
                  UnsupportedRelationError);
  DSyntNode with_ii = attach(make_node("say", NodeClass::kVerb),
                             make_node("it", NodeClass::kFunctionWord), Relation::kII);
  CHECK_THROWS_AS(attach_discourse(with_ii, AttachmentRelation::kComplement, sub),
                  RelationConflictError);
  DSyntNode purpose = attach_discourse(main, AttachmentRelation::kPurpose, sub);
  REQUIRE(purpose.child(Relation::kAppend));
  CHECK(purpose.child(Relation::kAppend)->lexeme == "in_order");
}

TEST_CASE("transform_story invariants") {
  StoryGraph empty = mini("    [p1] jump jump(Agent=fox)\n");
  empty.timeline.clear();
  CHECK(transform_story(empty).sentences.empty());
  CHECK(realize_document(transform_story(empty)).empty());

  for (const char* name : {"fixtures/fox_and_grapes.story", "fixtures/lion_and_boar.story"}) {
    StoryGraph g = parse_story(read_text(name));
    Document a = transform_story(g);
    CHECK(a == transform_story(g));
    for (const auto& s : a.sentences) {
      CHECK(validate_tree(s).empty());
      CHECK_FALSE(has_pronoun(s));
    }
  }
}
