#include "retell/lexicon.h"

#include <fstream>
#include <sstream>

#include "retell/error.h"
#include "text_util.h"

namespace retell {

// Generated from data/ at configure time.
extern const char kBuiltinLexiconText[];
extern const char kBuiltinFramesText[];

namespace {

using detail::Field;

bool is_vowel_at(std::string_view w, std::size_t i) {
  char c = w[i];
  switch (c) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
      return true;
    case 'u':
      return !(i > 0 && w[i - 1] == 'q');
    case 'y':
      return i > 0 && !is_vowel_at(w, i - 1);
    default:
      return false;
  }
}

int vowel_groups(std::string_view w) {
  int groups = 0;
  bool in_group = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool v = is_vowel_at(w, i);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

bool ends_cvc(std::string_view w) {
  if (w.size() < 3) return false;
  std::size_t n = w.size();
  char last = w[n - 1];
  if (last == 'w' || last == 'x' || last == 'y') return false;
  return !is_vowel_at(w, n - 1) && is_vowel_at(w, n - 2) && !is_vowel_at(w, n - 3);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

[[noreturn]] void fail(int line, int column, const std::string& message) {
  throw SyntaxError(line, column, message);
}

// Returns the lines after the version header.
std::vector<std::pair<int, std::string_view>> records(std::string_view text,
                                                      std::string_view header) {
  std::vector<std::pair<int, std::string_view>> out;
  bool seen_header = false;
  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (detail::is_comment_or_blank(line)) continue;
    if (!seen_header) {
      auto f = detail::split_fields(line);
      if (f.size() != 2 || f[0].text != header || f[1].text != "1") {
        fail(line_no, 1, "expected '" + std::string(header) + " 1'");
      }
      seen_header = true;
      continue;
    }
    out.emplace_back(line_no, line);
  }
  if (!seen_header) fail(line_no, 1, "missing '" + std::string(header) + "' header");
  return out;
}

std::pair<std::string_view, std::string_view> split_attr(const Field& f, int line) {
  auto eq = f.text.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == f.text.size()) {
    fail(line, f.column, "expected key=value, got '" + std::string(f.text) + "'");
  }
  return {f.text.substr(0, eq), f.text.substr(eq + 1)};
}

std::optional<ArgSlot> slot_from_string(std::string_view s) {
  if (s == "I") return ArgSlot::kI;
  if (s == "II") return ArgSlot::kII;
  if (s == "III") return ArgSlot::kIII;
  return std::nullopt;
}

LexemeEntry parse_entry(const std::vector<Field>& f, int line) {
  if (f.size() < 2) fail(line, 1, "expected '<lemma> <pos>'");
  LexemeEntry e;
  e.lemma = std::string(f[0].text);
  auto pos = pos_from_string(f[1].text);
  if (!pos) fail(line, f[1].column, "unknown part of speech '" + std::string(f[1].text) + "'");
  e.pos = *pos;
  for (std::size_t i = 2; i < f.size(); ++i) {
    if (f[i].text == "modal") {
      e.modal = true;
      continue;
    }
    if (f[i].text == "double") {
      e.double_final = true;
      continue;
    }
    auto [key, value] = split_attr(f[i], line);
    std::string v(value);
    if (key == "past") {
      e.irregular.past = v;
    } else if (key == "past_participle") {
      e.irregular.past_participle = v;
    } else if (key == "past_plural") {
      e.irregular.past_plural = v;
    } else if (key == "plural") {
      e.irregular.plural = v;
    } else if (key == "third_singular") {
      e.irregular.third_singular = v;
    } else if (key == "syn") {
      auto colon = value.find(':');
      if (colon == std::string_view::npos) fail(line, f[i].column, "expected syn=<lemma>:<register>");
      std::string_view reg = value.substr(colon + 1);
      Synonym s{std::string(value.substr(0, colon)), Register::kNeutral};
      if (reg == "casual") {
        s.reg = Register::kCasual;
      } else if (reg != "neutral") {
        fail(line, f[i].column, "unknown register '" + std::string(reg) + "'");
      }
      if (s.lemma == e.lemma) fail(line, f[i].column, "synonym equals its own lemma");
      e.synonyms.push_back(std::move(s));
    } else if (key == "onset") {
      auto bar = value.find('|');
      if (bar == std::string_view::npos) fail(line, f[i].column, "expected onset=<onset>|<rest>");
      std::string onset(value.substr(0, bar)), rest(value.substr(bar + 1));
      if (onset + rest != e.lemma) fail(line, f[i].column, "onset split does not spell the lemma");
      e.onset_split = std::make_pair(onset, rest);
    } else if (key == "gender") {
      if (value == "m") {
        e.gender = Gender::kMasculine;
      } else if (value == "f") {
        e.gender = Gender::kFeminine;
      } else if (value == "n") {
        e.gender = Gender::kNeuter;
      } else {
        fail(line, f[i].column, "gender must be m, f or n");
      }
    } else {
      fail(line, f[i].column, "unknown attribute '" + std::string(key) + "'");
    }
  }
  return e;
}

FrameDef parse_frame(const std::vector<Field>& f, int line) {
  FrameDef d;
  d.frame_id = std::string(f[0].text);
  bool used[3] = {false, false, false};
  auto claim = [&](ArgSlot s, int column) {
    auto idx = static_cast<int>(s);
    if (used[idx]) fail(line, column, "slot " + std::string(to_string(s)) + " mapped twice");
    used[idx] = true;
  };
  for (std::size_t i = 1; i < f.size(); ++i) {
    auto [key, value] = split_attr(f[i], line);
    if (auto slot = slot_from_string(key)) {
      claim(*slot, f[i].column);
      d.mandatory_roles.push_back({std::string(value), *slot});
    } else if (key == "opt") {
      auto colon = value.find(':');
      if (colon == std::string_view::npos) fail(line, f[i].column, "expected opt=<role>:<target>");
      OptionalRole r;
      r.role = std::string(value.substr(0, colon));
      std::string_view target = value.substr(colon + 1);
      if (auto slot = slot_from_string(target)) {
        claim(*slot, f[i].column);
        r.target = *slot;
      } else {
        r.target = std::string(target);
      }
      d.optional_roles.push_back(std::move(r));
    } else if (key == "complement") {
      if (value == "finite") {
        d.complement_kind = ComplementKind::kFiniteClause;
      } else if (value == "infinitive") {
        d.complement_kind = ComplementKind::kInfinitiveClause;
      } else {
        fail(line, f[i].column, "complement must be finite or infinitive");
      }
    } else if (key == "attr") {
      d.copula_adjective = std::string(value);
    } else if (key == "modal") {
      d.modal_verb = std::string(value);
    } else {
      fail(line, f[i].column, "unknown attribute '" + std::string(key) + "'");
    }
  }
  return d;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string_view to_string(PartOfSpeech v) {
  switch (v) {
    case PartOfSpeech::kNoun: return "noun";
    case PartOfSpeech::kVerb: return "verb";
    case PartOfSpeech::kAdjective: return "adjective";
    case PartOfSpeech::kAdverb: return "adverb";
    case PartOfSpeech::kPreposition: return "preposition";
    case PartOfSpeech::kFunction: return "function";
  }
  return "function";
}

std::string_view to_string(Register v) { return v == Register::kNeutral ? "neutral" : "casual"; }

std::optional<PartOfSpeech> pos_from_string(std::string_view s) {
  if (s == "noun") return PartOfSpeech::kNoun;
  if (s == "verb") return PartOfSpeech::kVerb;
  if (s == "adjective") return PartOfSpeech::kAdjective;
  if (s == "adverb") return PartOfSpeech::kAdverb;
  if (s == "preposition") return PartOfSpeech::kPreposition;
  if (s == "function") return PartOfSpeech::kFunction;
  return std::nullopt;
}

std::string_view to_string(ArgSlot v) {
  switch (v) {
    case ArgSlot::kI: return "I";
    case ArgSlot::kII: return "II";
    case ArgSlot::kIII: return "III";
  }
  return "I";
}

std::optional<ArgSlot> FrameDef::slot_of(std::string_view role) const {
  for (const auto& m : mandatory_roles) {
    if (m.role == role) return m.slot;
  }
  if (const OptionalRole* r = optional_role(role)) {
    if (const auto* slot = std::get_if<ArgSlot>(&r->target)) return *slot;
  }
  return std::nullopt;
}

bool FrameDef::has_role(std::string_view role) const {
  for (const auto& m : mandatory_roles) {
    if (m.role == role) return true;
  }
  return optional_role(role) != nullptr;
}

const OptionalRole* FrameDef::optional_role(std::string_view role) const {
  for (const auto& r : optional_roles) {
    if (r.role == role) return &r;
  }
  return nullptr;
}

Lexicon Lexicon::parse(std::string_view lexicon_text, std::string_view frames_text) {
  Lexicon lex;
  for (auto [line, text] : records(lexicon_text, "lexicon-version")) {
    LexemeEntry e = parse_entry(detail::split_fields(text), line);
    auto key = std::make_pair(e.lemma, e.pos);
    if (lex.entries_.count(key)) {
      fail(line, 1, "duplicate entry '" + e.lemma + "' (" + std::string(to_string(e.pos)) + ")");
    }
    lex.entries_.emplace(std::move(key), std::move(e));
  }
  for (auto [line, text] : records(frames_text, "frames-version")) {
    FrameDef d = parse_frame(detail::split_fields(text), line);
    if (lex.frames_.count(d.frame_id)) fail(line, 1, "duplicate frame '" + d.frame_id + "'");
    lex.frames_.emplace(d.frame_id, std::move(d));
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& lexicon_file,
                      const std::filesystem::path& frames_file) {
  return parse(read_file(lexicon_file), read_file(frames_file));
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lexicon = parse(kBuiltinLexiconText, kBuiltinFramesText);
  return lexicon;
}

const LexemeEntry* Lexicon::find(std::string_view lemma, PartOfSpeech pos) const {
  auto it = entries_.find(std::make_pair(std::string(lemma), pos));
  return it == entries_.end() ? nullptr : &it->second;
}

const LexemeEntry& Lexicon::lookup(std::string_view lemma, PartOfSpeech pos) const {
  if (const LexemeEntry* e = find(lemma, pos)) return *e;
  throw NotFoundError("no lexicon entry for '" + std::string(lemma) + "' (" +
                      std::string(to_string(pos)) + ")");
}

const FrameDef* Lexicon::find_frame(std::string_view frame_id) const {
  auto it = frames_.find(frame_id);
  return it == frames_.end() ? nullptr : &it->second;
}

const FrameDef& Lexicon::frame(std::string_view frame_id) const {
  if (const FrameDef* d = find_frame(frame_id)) return *d;
  throw NotFoundError("no frame '" + std::string(frame_id) + "'");
}

std::vector<const LexemeEntry*> Lexicon::entries() const {
  std::vector<const LexemeEntry*> out;
  for (const auto& [_, e] : entries_) out.push_back(&e);
  return out;
}

std::vector<const FrameDef*> Lexicon::frames() const {
  std::vector<const FrameDef*> out;
  for (const auto& [_, d] : frames_) out.push_back(&d);
  return out;
}

std::string regular_past(std::string_view lemma, bool double_final) {
  std::string w(lemma);
  if (w.empty()) return w;
  if (w.back() == 'e') return w + "d";
  if (w.size() >= 2 && w.back() == 'y' && !is_vowel_at(w, w.size() - 2)) {
    w.pop_back();
    return w + "ied";
  }
  if (ends_cvc(w) && (double_final || vowel_groups(w) == 1)) return w + w.back() + "ed";
  return w + "ed";
}

std::string regular_plural(std::string_view lemma) {
  std::string w(lemma);
  if (w.empty()) return w;
  if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") || ends_with(w, "ch") ||
      ends_with(w, "sh")) {
    return w + "es";
  }
  if (w.size() >= 2 && w.back() == 'y' && !is_vowel_at(w, w.size() - 2)) {
    w.pop_back();
    return w + "ies";
  }
  return w + "s";
}

std::string inflect(const LexemeEntry& entry, const InflectFeatures& features) {
  switch (entry.pos) {
    case PartOfSpeech::kNoun:
      if (features.tense) throw FeatureMismatchError("tense on noun '" + entry.lemma + "'");
      if (features.number == Number::kPlural) {
        return entry.irregular.plural ? *entry.irregular.plural : regular_plural(entry.lemma);
      }
      return entry.lemma;
    case PartOfSpeech::kVerb:
      if (!features.tense) return entry.lemma;
      if (features.number == Number::kPlural && entry.irregular.past_plural) {
        return *entry.irregular.past_plural;
      }
      return entry.irregular.past ? *entry.irregular.past
                                  : regular_past(entry.lemma, entry.double_final);
    default:
      if (features.tense || features.number) {
        throw FeatureMismatchError("inflection features on " + std::string(to_string(entry.pos)) +
                                   " '" + entry.lemma + "'");
      }
      return entry.lemma;
  }
}

std::optional<std::string> synonym(const LexemeEntry& entry, Register reg, Rng& rng) {
  std::vector<const std::string*> candidates;
  for (const auto& s : entry.synonyms) {
    if (s.reg == reg && s.lemma != entry.lemma) candidates.push_back(&s.lemma);
  }
  if (candidates.empty()) return std::nullopt;
  return *candidates[rng.below(candidates.size())];
}

std::pair<std::string, std::string> split_onset(const LexemeEntry& entry) {
  if (entry.onset_split) return *entry.onset_split;
  const std::string& w = entry.lemma;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_vowel_at(w, i)) {
      return {w.substr(0, i), w.substr(i)};
    }
  }
  return {"", w};
}

}  // namespace retell
