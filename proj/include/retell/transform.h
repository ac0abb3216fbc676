#pragma once

// Story graph to dependency trees: one clause tree per top-level timeline
// proposition, with role bindings mapped through the frame table, adjuncts
// collected separately, and discourse attachments realised as subordinate
// or complement clauses.

#include <set>
#include <string>

#include "retell/dsynts.h"
#include "retell/lexicon.h"
#include "retell/story_graph.h"

namespace retell {

enum class ReferringExpression { kFullNp, kPronominalizeAfterFirst };

struct TransformOptions {
  ReferringExpression referring_expression = ReferringExpression::kFullNp;
  // Realised downstream; here it selects the modal rendering of copular
  // frames that have one ("could not reach" rather than "was not able to").
  bool contractions = false;

  static TransformOptions neutral() { return {}; }
  friend bool operator==(const TransformOptions&, const TransformOptions&) = default;
};

// Per-document state threaded through clause construction.
class DiscourseContext {
 public:
  DiscourseContext(const StoryGraph& story, const Lexicon& lexicon, TransformOptions opts)
      : story_(story), lexicon_(lexicon), opts_(opts) {}

  const StoryGraph& story() const { return story_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const TransformOptions& options() const { return opts_; }

  // Pronouns are chosen for repeated character mentions within one sentence.
  void begin_sentence() { mentioned_.clear(); }
  bool mentioned(const std::string& entity_id) const { return mentioned_.count(entity_id) > 0; }
  void note_mention(const std::string& entity_id) { mentioned_.insert(entity_id); }

 private:
  const StoryGraph& story_;
  const Lexicon& lexicon_;
  TransformOptions opts_;
  std::set<std::string> mentioned_;
};

enum class NpCase { kSubject, kObject };

Document transform_story(const StoryGraph& g, const TransformOptions& opts = {},
                         const Lexicon& lexicon = Lexicon::builtin());

// Verb-rooted clause for p, tense past. Throws BuildError (missing frame,
// unmapped role) tagged with p.id.
DSyntNode build_clause(const Proposition& p, DiscourseContext& ctx);

// Definite NP, "group of X" for collectives, or a pronoun for a repeated
// character mention under kPronominalizeAfterFirst. Records the mention.
DSyntNode realize_entity_np(const Entity& e, DiscourseContext& ctx, NpCase np_case);

// Adverbs as positioned ATTR modifiers, prepositional attachments as APPEND
// PPs in attachment order. Throws UnknownPrepositionError.
DSyntNode attach_adjuncts(DSyntNode clause, const Proposition& p, DiscourseContext& ctx);

// purpose: "in order for X to VP" (or "in order to VP" without a subject);
// cause: "because" + finite clause; complement: finite clause in slot II.
// Throws UnsupportedRelationError for kPrepositional.
DSyntNode attach_discourse(DSyntNode main, AttachmentRelation relation, DSyntNode sub);

}  // namespace retell
