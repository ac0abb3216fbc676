#pragma once

// Parameterised stylistic transformations applied to dependency trees before
// realisation. Each (sentence, parameter) pair fires with probability equal
// to the parameter's activation, drawing from its own random stream.

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retell/dsynts.h"
#include "retell/lexicon.h"
#include "retell/realizer.h"
#include "retell/rng.h"
#include "retell/transform.h"

namespace retell {

enum class StyleParam {
  kSoftenerHedges,
  kEmphasizerHedges,
  kFilledPauses,
  kStuttering,
  kExclamation,
  kExpletives,
  kTagQuestion,
  kInitialInterjection,
  kLexicalVariation,
  kNegationParaphrase,
  kRestatement,
  kContractions,
  kPronominalization,
};

inline constexpr std::array kAllStyleParams = {
    StyleParam::kSoftenerHedges,     StyleParam::kEmphasizerHedges,
    StyleParam::kFilledPauses,       StyleParam::kStuttering,
    StyleParam::kExclamation,        StyleParam::kExpletives,
    StyleParam::kTagQuestion,        StyleParam::kInitialInterjection,
    StyleParam::kLexicalVariation,   StyleParam::kNegationParaphrase,
    StyleParam::kRestatement,        StyleParam::kContractions,
    StyleParam::kPronominalization,
};

std::string_view to_string(StyleParam p);
std::optional<StyleParam> style_param_from_string(std::string_view s);

// Parameters that rewrite trees in apply_voice. kContractions and
// kPronominalization are consumed as transform/realize options instead.
bool is_tree_param(StyleParam p);

class VoiceModel {
 public:
  VoiceModel() = default;
  // Throws Error for an activation outside [0, 1].
  VoiceModel(std::string name, std::map<StyleParam, double> params);

  const std::string& name() const { return name_; }
  double activation(StyleParam p) const;
  const std::map<StyleParam, double>& params() const { return params_; }

  // NEUTRAL, FORMAL, SHY, LAID-BACK (case-insensitive); nullopt otherwise.
  static std::optional<VoiceModel> builtin(std::string_view name);
  static std::vector<std::string> builtin_names();

  // "name <NAME>" then "param: value" lines. Throws SyntaxError.
  static VoiceModel parse(std::string_view text);
  static VoiceModel load(const std::filesystem::path& file);

  friend bool operator==(const VoiceModel&, const VoiceModel&) = default;

 private:
  std::string name_ = "NEUTRAL";
  std::map<StyleParam, double> params_;
};

// Activations of 0.5 and above switch the option on.
TransformOptions transform_options_for(const VoiceModel& model);
RealizeOptions realize_options_for(const VoiceModel& model);

struct StyleDecision {
  std::size_t sentence_index = 0;
  StyleParam param = StyleParam::kSoftenerHedges;
  NodePath site;        // in the final styled sentence
  std::string payload;  // marker text or "old->new" substitution

  friend bool operator==(const StyleDecision&, const StyleDecision&) = default;
};

struct StyledDocument {
  Document document;
  std::vector<StyleDecision> decisions;

  friend bool operator==(const StyledDocument&, const StyledDocument&) = default;
};

// One transformation applied to one sentence.
struct StyleEdit {
  DSyntNode sentence;
  NodePath site;
  std::string payload;
};

StyledDocument apply_voice(const Document& doc, const VoiceModel& model, std::uint64_t seed,
                           const Lexicon& lexicon = Lexicon::builtin());

// Pragmatic marker insertion for softener/emphasizer hedges, filled pauses,
// interjections, expletives, tag questions and exclamation. nullopt when the
// sentence has no applicable site.
std::optional<StyleEdit> insert_marker(const DSyntNode& sentence, StyleParam param, Rng& rng,
                                       const Lexicon& lexicon = Lexicon::builtin());

// Picks a consonant-initial noun or adjective and prefixes one or two
// "onset-" fragments.
std::optional<StyleEdit> apply_stuttering(const DSyntNode& sentence, Rng& rng,
                                          const Lexicon& lexicon = Lexicon::builtin());

// Stutter the node at site with the given repeat count.
std::optional<StyleEdit> stutter_at(const DSyntNode& sentence, const NodePath& site, int repeats,
                                    const Lexicon& lexicon = Lexicon::builtin());

// "did not V" -> "failed to V'" with V' a casual synonym of V.
std::optional<StyleEdit> apply_negation_paraphrase(const DSyntNode& sentence, Rng& rng,
                                                   const Lexicon& lexicon = Lexicon::builtin());

// Casual synonym for one verb of the sentence.
std::optional<StyleEdit> apply_lexical_variation(const DSyntNode& sentence, Rng& rng,
                                                 const Lexicon& lexicon = Lexicon::builtin());

// ", didn't obtain it," after a substituted main verb: restates the clause
// with its original verb and polarity and a pronoun object. original_lemma and
// original_polarity describe the root verb before substitution.
std::optional<StyleEdit> apply_restatement(const DSyntNode& sentence,
                                           const std::string& original_lemma,
                                           Polarity original_polarity,
                                           const Lexicon& lexicon = Lexicon::builtin());

// Marker vocabularies.
const std::vector<std::string>& softener_markers();
const std::vector<std::string>& emphasizer_markers();
const std::vector<std::string>& filled_pause_markers();
const std::vector<std::string>& interjection_markers();
const std::vector<std::string>& expletive_markers();
const std::vector<std::string>& external_tag_markers();

}  // namespace retell
