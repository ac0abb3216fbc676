#include <set>

#include "doctest.h"
#include "retell/error.h"
#include "retell/pipeline.h"
#include "retell/realizer.h"
#include "retell/story_graph.h"
#include "retell/style.h"
#include "retell/transform.h"
#include "test_util.h"

using namespace retell;
using retell::testing::read_text;

namespace {

DSyntNode sentence(const std::string& timeline) {
  StoryGraph g = parse_story(
      "story s\ntitle \"S\"\n\nentities\n"
      "  fox character fox\n"
      "  grapes object group group_of=grape\n"
      "  vine object vine\n"
      "  trellis object trellis\n"
      "\ntimeline\n  span 0\n" +
      timeline);
  return transform_story(g).sentences.at(0);
}

DSyntNode hang() { return sentence("    [p1] hang hang(Theme=vine)\n      prep on: trellis\n"); }

DSyntNode not_obtain() {
  return sentence("    [p1] obtain obtain(Agent=fox, Theme=grapes) polarity=neg\n");
}

std::string say(const DSyntNode& s) { return realize_sentence(s, Lexicon::builtin(), {true}); }

// Every realisation the marker can produce, over a range of seeds.
std::set<std::string> marker_outputs(const DSyntNode& s, StyleParam param) {
  std::set<std::string> out;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    if (auto e = insert_marker(s, param, rng)) out.insert(say(e->sentence));
  }
  return out;
}

VoiceModel only(StyleParam p, double v = 1.0) { return VoiceModel("X", {{p, v}}); }

}  // namespace

TEST_CASE("softeners") {
  auto all = marker_outputs(sentence("    [p1] be_hungry be(Theme=fox)\n"),
                            StyleParam::kSoftenerHedges);
  CHECK(all.count("It seemed that the fox was hungry."));
  CHECK(all.count("I thought that the fox was hungry."));
  CHECK(all.count("It seemed to me that the fox was hungry."));
  CHECK(all.count("The fox sort of was hungry."));
  CHECK(all.size() == softener_markers().size());
}

TEST_CASE("clause-wrapping softener keeps the old tree under II") {
  DSyntNode s = sentence("    [p1] be_hungry be(Theme=fox)\n");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    auto e = insert_marker(s, StyleParam::kSoftenerHedges, rng);
    REQUIRE(e);
    CHECK(validate_tree(e->sentence).empty());
    if (e->payload != "it seems that") continue;
    CHECK(e->sentence.lexeme == "seem");
    const DSyntNode* that = e->sentence.child(Relation::kII);
    REQUIRE(that);
    CHECK(that->lexeme == "that");
    CHECK(*that->child(Relation::kII) == [&] {
      DSyntNode old = s;
      old.relation = Relation::kII;
      return old;
    }());
    return;
  }
  FAIL("no seed chose the wrapping softener");
}

TEST_CASE("tag questions") {
  auto outs = marker_outputs(hang(), StyleParam::kTagQuestion);
  CHECK(outs == std::set<std::string>{"The vine hung on the trellis, didn't it?",
                                      "The vine hung on the trellis, okay?",
                                      "The vine hung on the trellis, alright?",
                                      "The vine hung on the trellis, you see?"});
  auto neg = marker_outputs(not_obtain(), StyleParam::kTagQuestion);
  CHECK(neg.count("The fox didn't obtain the group of grapes, did he?"));
  auto be = marker_outputs(sentence("    [p1] be_ripe be(Theme=grapes)\n"),
                           StyleParam::kTagQuestion);
  CHECK(be.count("The group of grapes was ripe, wasn't it?"));

  DSyntNode ex = hang();
  ex.features.punct = Punct::kExclaim;
  Rng rng(1);
  CHECK_FALSE(insert_marker(ex, StyleParam::kTagQuestion, rng));
}

TEST_CASE("exclamation, expletives, emphasizers") {
  CHECK(marker_outputs(hang(), StyleParam::kExclamation) ==
        std::set<std::string>{"The vine hung on the trellis!"});
  CHECK(marker_outputs(hang(), StyleParam::kExpletives) ==
        std::set<std::string>{"The vine damn hung on the trellis."});
  CHECK(marker_outputs(hang(), StyleParam::kEmphasizerHedges).count(
      "The vine really hung on the trellis."));
}

TEST_CASE("filled pauses and interjections") {
  auto pauses = marker_outputs(hang(), StyleParam::kFilledPauses);
  CHECK(pauses.count("Err... the vine hung on the trellis."));
  CHECK(pauses.count("I mean, the vine hung on the trellis."));
  auto inter = marker_outputs(hang(), StyleParam::kInitialInterjection);
  CHECK(inter == std::set<std::string>{"Well, the vine hung on the trellis.",
                                       "Ok, the vine hung on the trellis.",
                                       "Oh, the vine hung on the trellis."});
  Rng rng(0);
  auto first = insert_marker(hang(), StyleParam::kFilledPauses, rng);
  REQUIRE(first);
  CHECK_FALSE(insert_marker(first->sentence, StyleParam::kInitialInterjection, rng));
  CHECK_FALSE(insert_marker(first->sentence, StyleParam::kFilledPauses, rng));
}

TEST_CASE("stuttering") {
  DSyntNode s = hang();
  const NodePath trellis{1, 0};
  REQUIRE(node_at(s, trellis)->lexeme == "trellis");
  auto once = stutter_at(s, trellis, 1);
  REQUIRE(once);
  CHECK(say(once->sentence) == "The vine hung on the tr-trellis.");
  auto twice = stutter_at(s, trellis, 2);
  REQUIRE(twice);
  CHECK(say(twice->sentence) == "The vine hung on the tr-tr-trellis.");
  CHECK(twice->payload == "tr-tr-trellis");
  CHECK(validate_tree(twice->sentence).empty());
  // Already stuttered, and a verb: no site.
  CHECK_FALSE(stutter_at(twice->sentence, trellis, 1));
  CHECK_FALSE(stutter_at(s, {}, 1));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    auto e = apply_stuttering(hang(), rng);
    REQUIRE(e);
    const std::string out = say(e->sentence);
    CHECK((out.find("v-vine") != std::string::npos || out.find("tr-trellis") != std::string::npos));
  }
}

TEST_CASE("negation paraphrase") {
  Rng rng(0);
  auto e = apply_negation_paraphrase(not_obtain(), rng);
  REQUIRE(e);
  CHECK(validate_tree(e->sentence).empty());
  const std::string out = say(e->sentence);
  CHECK((out == "The fox failed to get the group of grapes." ||
         out == "The fox failed to collect the group of grapes."));
  // Affirmative clauses and negated clauses without a casual synonym are left alone.
  CHECK_FALSE(apply_negation_paraphrase(hang(), rng));
  CHECK_FALSE(apply_negation_paraphrase(
      sentence("    [p1] jump jump(Agent=fox) polarity=neg\n"), rng));
  CHECK_FALSE(apply_negation_paraphrase(
      sentence("    [p1] be_ripe be(Theme=grapes) polarity=neg\n"), rng));
}

TEST_CASE("lexical variation and restatement") {
  Rng rng(0);
  auto e = apply_lexical_variation(hang(), rng);
  REQUIRE(e);
  CHECK(e->payload == "hang->rest");
  CHECK(say(e->sentence) == "The vine rested on the trellis.");
  Rng r2(0);
  CHECK_FALSE(apply_lexical_variation(sentence("    [p1] jump jump(Agent=fox)\n"), r2));

  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng r(seed);
    auto neg = apply_negation_paraphrase(not_obtain(), r);
    REQUIRE(neg);
    auto re = apply_restatement(neg->sentence, "obtain", Polarity::kNegated);
    REQUIRE(re);
    CHECK(re->payload == "not obtain");
    CHECK(validate_tree(re->sentence).empty());
    seen.insert(say(re->sentence));
  }
  CHECK(seen.count("The fox failed to get the group of grapes, didn't obtain it."));

  // No object to restate.
  CHECK_FALSE(apply_restatement(e->sentence, "hang", Polarity::kAffirmative));
}

TEST_CASE("voice models") {
  CHECK(VoiceModel::builtin("shy")->name() == "SHY");
  CHECK(VoiceModel::builtin("Laid-Back")->activation(StyleParam::kTagQuestion) == 0.4);
  CHECK_FALSE(VoiceModel::builtin("grumpy"));
  CHECK(VoiceModel::builtin("NEUTRAL")->params().empty());
  CHECK(VoiceModel::builtin_names().size() == 4);
  CHECK_THROWS_AS(VoiceModel("X", {{StyleParam::kStuttering, 1.5}}), Error);

  VoiceModel v = VoiceModel::parse(
      "# a voice\nname GRUFF\nexpletives: 0.75\ntag_question: 0.25\ncontractions: 1\n");
  CHECK(v.name() == "GRUFF");
  CHECK(v.activation(StyleParam::kExpletives) == 0.75);
  CHECK(v.activation(StyleParam::kStuttering) == 0.0);
  CHECK(v == VoiceModel::parse(
                 "name GRUFF\ncontractions: 1.0\ntag_question: 0.25\nexpletives: 0.75\n"));

  CHECK_THROWS_AS(VoiceModel::parse("expletives: 0.5\n"), SyntaxError);
  CHECK_THROWS_AS(VoiceModel::parse("name A\nmumbling: 0.5\n"), SyntaxError);
  CHECK_THROWS_AS(VoiceModel::parse("name A\nexpletives: lots\n"), SyntaxError);
  CHECK_THROWS_AS(VoiceModel::parse("name A\nexpletives: 2\n"), SyntaxError);
  CHECK_THROWS_AS(VoiceModel::parse("name A\nexpletives 0.5\n"), SyntaxError);
  CHECK_THROWS_AS(VoiceModel::parse("name A\nexpletives: 0.5\nexpletives: 0.1\n"), SyntaxError);
  try {
    VoiceModel::parse("name A\n\nstuttering: -1\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(VoiceModel::load("/nonexistent/voice.txt"), Error);

  CHECK(is_tree_param(StyleParam::kStuttering));
  CHECK_FALSE(is_tree_param(StyleParam::kContractions));
  for (StyleParam p : kAllStyleParams) CHECK(style_param_from_string(to_string(p)) == p);
}

TEST_CASE("option thresholds") {
  CHECK_FALSE(transform_options_for(only(StyleParam::kContractions, 0.49)).contractions);
  CHECK(transform_options_for(only(StyleParam::kContractions, 0.5)).contractions);
  CHECK(realize_options_for(only(StyleParam::kContractions, 0.5)).contractions);
  CHECK(transform_options_for(only(StyleParam::kPronominalization, 0.5)).referring_expression ==
        ReferringExpression::kPronominalizeAfterFirst);
  CHECK(transform_options_for(only(StyleParam::kPronominalization, 0.2)).referring_expression ==
        ReferringExpression::kFullNp);
}

TEST_CASE("apply_voice decisions point into the final trees") {
  StoryGraph fox = parse_story(read_text("fixtures/fox_and_grapes.story"));
  Document doc = transform_story(fox);
  for (const char* name : {"SHY", "LAID-BACK"}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      StyledDocument styled = apply_voice(doc, *VoiceModel::builtin(name), seed);
      REQUIRE(styled.document.sentences.size() == doc.sentences.size());
      for (const auto& d : styled.decisions) {
        INFO(name << " seed " << seed << " " << to_string(d.param) << " " << format_path(d.site));
        const DSyntNode* n = node_at(styled.document.sentences[d.sentence_index], d.site);
        REQUIRE(n);
        if (d.param == StyleParam::kLexicalVariation) {
          CHECK(d.payload.substr(d.payload.find("->") + 2) == n->lexeme);
        }
        if (d.param == StyleParam::kStuttering) CHECK(n->count(Relation::kAttr) >= 1);
      }
      for (const auto& s : styled.document.sentences) CHECK(validate_tree(s).empty());
    }
  }
}

TEST_CASE("restatement needs an earlier substitution") {
  StoryGraph fox = parse_story(read_text("fixtures/fox_and_grapes.story"));
  Document doc = transform_story(fox);
  StyledDocument alone = apply_voice(doc, only(StyleParam::kRestatement), 1);
  CHECK(alone.decisions.empty());
  CHECK(alone.document == doc);

  VoiceModel both("X", {{StyleParam::kNegationParaphrase, 1.0}, {StyleParam::kRestatement, 1.0}});
  StyledDocument styled = apply_voice(doc, both, 1);
  std::size_t restated = 0;
  for (const auto& d : styled.decisions) restated += d.param == StyleParam::kRestatement;
  CHECK(restated == 1);
  CHECK(realize_document(styled.document).find(", did not obtain it") != std::string::npos);
}

TEST_CASE("generate") {
  StoryGraph fox = parse_story(read_text("fixtures/fox_and_grapes.story"));
  Generation shy = generate(fox, *VoiceModel::builtin("SHY"), 34);
  CHECK(shy.text.find("tr-tr-trellis") != std::string::npos);
  CHECK(shy.text.find("Err...") != std::string::npos);
  CHECK(shy.text == realize_document(shy.document, Lexicon::builtin(), {true}));
  Generation neutral = generate(fox, *VoiceModel::builtin("NEUTRAL"));
  CHECK(neutral.decisions.empty());
  CHECK(neutral.text == retell::testing::read_paragraph("fixtures/fig1_personage.txt"));
}
