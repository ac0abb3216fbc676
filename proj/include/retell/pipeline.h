#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "retell/dsynts.h"
#include "retell/lexicon.h"
#include "retell/story_graph.h"
#include "retell/style.h"

namespace retell {

struct Generation {
  Document document;  // styled trees, as realised
  std::vector<StyleDecision> decisions;
  std::string text;
};

// transform -> apply_voice -> realize, with transform and realize options
// taken from the voice model.
Generation generate(const StoryGraph& story, const VoiceModel& voice, std::uint64_t seed = 0,
                    const Lexicon& lexicon = Lexicon::builtin());

}  // namespace retell
