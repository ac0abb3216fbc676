#pragma once

// Closed lexicon: lexeme entries with irregular morphology, synonym sets and
// stutter onsets, plus the verb frame table that maps thematic roles onto
// deep-syntactic argument slots.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "retell/grammar.h"
#include "retell/rng.h"

namespace retell {

enum class PartOfSpeech { kNoun, kVerb, kAdjective, kAdverb, kPreposition, kFunction };
enum class Register { kNeutral, kCasual };
enum class Gender { kMasculine, kFeminine, kNeuter };

std::string_view to_string(PartOfSpeech v);
std::string_view to_string(Register v);
std::optional<PartOfSpeech> pos_from_string(std::string_view s);

struct IrregularForms {
  std::optional<std::string> past;
  std::optional<std::string> past_participle;
  std::optional<std::string> past_plural;  // "were"
  std::optional<std::string> plural;
  std::optional<std::string> third_singular;

  friend bool operator==(const IrregularForms&, const IrregularForms&) = default;
};

struct Synonym {
  std::string lemma;
  Register reg = Register::kNeutral;

  friend bool operator==(const Synonym&, const Synonym&) = default;
};

struct LexemeEntry {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kNoun;
  IrregularForms irregular;
  std::optional<std::pair<std::string, std::string>> onset_split;
  std::vector<Synonym> synonyms;
  Gender gender = Gender::kNeuter;  // nouns: pronoun choice
  bool modal = false;               // verbs: "could" takes a bare infinitive
  bool double_final = false;        // verbs: stressed final CVC syllable

  friend bool operator==(const LexemeEntry&, const LexemeEntry&) = default;
};

// Argument slot of a verb in the dependency tree.
enum class ArgSlot { kI, kII, kIII };
std::string_view to_string(ArgSlot v);

enum class ComplementKind { kFiniteClause, kInfinitiveClause };

struct RoleMapping {
  std::string role;
  ArgSlot slot = ArgSlot::kI;

  friend bool operator==(const RoleMapping&, const RoleMapping&) = default;
};

// Optional role: either an argument slot or a preposition heading a PP.
struct OptionalRole {
  std::string role;
  std::variant<ArgSlot, std::string> target;

  friend bool operator==(const OptionalRole&, const OptionalRole&) = default;
};

struct FrameDef {
  std::string frame_id;
  std::vector<RoleMapping> mandatory_roles;
  std::vector<OptionalRole> optional_roles;
  std::optional<ComplementKind> complement_kind;
  // Copular frames ("be_ripe"): predicate adjective governed by "be".
  std::optional<std::string> copula_adjective;
  // Modal rendering of a copular frame when contractions are on ("be able"
  // becomes "could").
  std::optional<std::string> modal_verb;

  // Slot of a role, mandatory or optional; nullopt for unknown roles or
  // prepositional optional roles.
  std::optional<ArgSlot> slot_of(std::string_view role) const;
  bool has_role(std::string_view role) const;
  const OptionalRole* optional_role(std::string_view role) const;

  friend bool operator==(const FrameDef&, const FrameDef&) = default;
};

struct InflectFeatures {
  std::optional<Tense> tense;
  std::optional<Number> number;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Parses the two data files. Throws SyntaxError on malformed records.
  static Lexicon parse(std::string_view lexicon_text, std::string_view frames_text);
  static Lexicon load(const std::filesystem::path& lexicon_file,
                      const std::filesystem::path& frames_file);

  // The lexicon shipped with the library (data/ compiled in).
  static const Lexicon& builtin();

  // Throws NotFoundError naming lemma and pos.
  const LexemeEntry& lookup(std::string_view lemma, PartOfSpeech pos) const;
  const LexemeEntry* find(std::string_view lemma, PartOfSpeech pos) const;

  const FrameDef& frame(std::string_view frame_id) const;
  const FrameDef* find_frame(std::string_view frame_id) const;

  std::vector<const LexemeEntry*> entries() const;
  std::vector<const FrameDef*> frames() const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<std::string, PartOfSpeech>, LexemeEntry, std::less<>> entries_;
  std::map<std::string, FrameDef, std::less<>> frames_;
};

// Irregular table first, then regular English rules. Throws
// FeatureMismatchError for tense on a non-verb or number on a non-noun/verb.
std::string inflect(const LexemeEntry& entry, const InflectFeatures& features);

std::string regular_past(std::string_view lemma, bool double_final = false);
std::string regular_plural(std::string_view lemma);

// Synonym of the requested register, never the lemma itself.
std::optional<std::string> synonym(const LexemeEntry& entry, Register reg, Rng& rng);

// (onset, remainder) for stuttering: explicit split if the entry has one,
// otherwise split before the first vowel. Vowel-initial lemmas give
// ("", lemma).
std::pair<std::string, std::string> split_onset(const LexemeEntry& entry);

}  // namespace retell
