#pragma once

// Timeline layer of a story intention graph: declared entities and temporally
// ordered propositions with discourse attachments, plus the text encoding
// that carries them (see docs/formats.md).

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "retell/diagnostic.h"
#include "retell/grammar.h"
#include "retell/lexicon.h"

namespace retell {

enum class EntityKind { kCharacter, kObject, kLocation };
std::string_view to_string(EntityKind v);

struct Entity {
  std::string id;
  EntityKind kind = EntityKind::kObject;
  std::string head_lemma;
  std::optional<std::string> group_of;  // "grape" gives "group of grapes"
  Number number = Number::kSingular;
  std::vector<std::string> fixed_modifiers;

  friend bool operator==(const Entity&, const Entity&) = default;
};

struct Proposition;
using PropositionPtr = std::shared_ptr<const Proposition>;

struct EntityRef {
  std::string id;
  friend bool operator==(const EntityRef&, const EntityRef&) = default;
};

// A proposition nested under a role or attachment. by_reference marks a
// nested slot written as "@id" in the encoding; the proposition itself is
// resolved at parse time.
struct Nested {
  PropositionPtr proposition;
  bool by_reference = false;
};
bool operator==(const Nested& a, const Nested& b);

struct Property {
  std::string adjective;
  friend bool operator==(const Property&, const Property&) = default;
};

struct Text {
  std::string literal;
  friend bool operator==(const Text&, const Text&) = default;
};

// Coordinated bare nouns ("dignity and unconcern").
struct NounPhrase {
  std::vector<std::string> nouns;
  friend bool operator==(const NounPhrase&, const NounPhrase&) = default;
};

using Argument = std::variant<EntityRef, Nested, Property, Text>;

struct RoleBinding {
  std::string role;
  Argument value;
  friend bool operator==(const RoleBinding&, const RoleBinding&) = default;
};

struct FrameInstance {
  std::string predicate_lemma;
  std::string frame_id;
  std::vector<RoleBinding> bindings;  // document order, roles unique

  const Argument* find(std::string_view role) const;
  // Order-insensitive over bindings.
  friend bool operator==(const FrameInstance& a, const FrameInstance& b);
};

enum class AttachmentRelation { kPurpose, kCause, kComplement, kPrepositional };
std::string_view to_string(AttachmentRelation v);

using AttachmentTarget = std::variant<Nested, EntityRef, Property, NounPhrase>;

struct Attachment {
  AttachmentRelation relation = AttachmentRelation::kPrepositional;
  std::optional<std::string> preposition;  // set iff prepositional
  AttachmentTarget target;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct AdverbUse {
  std::string lemma;
  Position position = Position::kPre;
  friend bool operator==(const AdverbUse&, const AdverbUse&) = default;
};

struct Proposition {
  std::string id;
  FrameInstance frame;
  Polarity polarity = Polarity::kAffirmative;
  std::vector<AdverbUse> adverbs;
  std::vector<Attachment> attachments;

  friend bool operator==(const Proposition&, const Proposition&) = default;
};

struct Timespan {
  int index = 0;
  std::vector<Proposition> propositions;
  friend bool operator==(const Timespan&, const Timespan&) = default;
};

struct StoryGraph {
  std::string id;
  std::string title;
  std::optional<std::string> original_text;
  std::vector<Entity> entities;
  std::vector<Timespan> timeline;

  const Entity* find_entity(std::string_view id) const;
  friend bool operator==(const StoryGraph&, const StoryGraph&) = default;
};

inline PropositionPtr make_nested(Proposition p) {
  return std::make_shared<const Proposition>(std::move(p));
}

// Throws SyntaxError (with line/column), ReferenceError (unknown entity,
// frame or proposition id) or CycleError (a proposition nests itself through
// "@id" references).
StoryGraph parse_story(std::string_view encoded_text,
                       const Lexicon& lexicon = Lexicon::builtin());

// Canonical encoding; parse_story(serialize_story(g)) == g.
std::string serialize_story(const StoryGraph& g);

std::vector<Diagnostic> validate_story(const StoryGraph& g,
                                       const Lexicon& lexicon = Lexicon::builtin());

// Top-level propositions in timeline order. Nested propositions are reachable
// only through their parents.
std::vector<Proposition> timeline_propositions(const StoryGraph& g);

}  // namespace retell
