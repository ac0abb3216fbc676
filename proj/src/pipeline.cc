#include "retell/pipeline.h"

#include "retell/realizer.h"
#include "retell/transform.h"

namespace retell {

Generation generate(const StoryGraph& story, const VoiceModel& voice, std::uint64_t seed,
                    const Lexicon& lexicon) {
  Document neutral = transform_story(story, transform_options_for(voice), lexicon);
  StyledDocument styled = apply_voice(neutral, voice, seed, lexicon);
  Generation out;
  out.text = realize_document(styled.document, lexicon, realize_options_for(voice));
  out.document = std::move(styled.document);
  out.decisions = std::move(styled.decisions);
  return out;
}

}  // namespace retell
