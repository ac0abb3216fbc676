#include "retell/style.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <fstream>
#include <sstream>

#include "retell/error.h"
#include "text_util.h"

namespace retell {
namespace {

// Per-sentence application order. Substitutions run before restatement,
// which needs to know the original verb; punctuation changes run last.
constexpr std::array kApplyOrder = {
    StyleParam::kNegationParaphrase, StyleParam::kLexicalVariation,
    StyleParam::kRestatement,        StyleParam::kEmphasizerHedges,
    StyleParam::kSoftenerHedges,     StyleParam::kExpletives,
    StyleParam::kStuttering,         StyleParam::kFilledPauses,
    StyleParam::kInitialInterjection, StyleParam::kTagQuestion,
    StyleParam::kExclamation,
};

struct ParamName {
  StyleParam param;
  std::string_view name;
};

constexpr std::array<ParamName, 13> kParamNames = {{
    {StyleParam::kSoftenerHedges, "softener_hedges"},
    {StyleParam::kEmphasizerHedges, "emphasizer_hedges"},
    {StyleParam::kFilledPauses, "filled_pauses"},
    {StyleParam::kStuttering, "stuttering"},
    {StyleParam::kExclamation, "exclamation"},
    {StyleParam::kExpletives, "expletives"},
    {StyleParam::kTagQuestion, "tag_question"},
    {StyleParam::kInitialInterjection, "initial_interjection"},
    {StyleParam::kLexicalVariation, "lexical_variation"},
    {StyleParam::kNegationParaphrase, "negation_paraphrase"},
    {StyleParam::kRestatement, "restatement"},
    {StyleParam::kContractions, "contractions"},
    {StyleParam::kPronominalization, "pronominalization"},
}};

constexpr double kOptionThreshold = 0.5;

// How an edit moved existing nodes, so that earlier decision sites can be
// carried into the final tree.
struct Applied {
  StyleEdit edit;
  std::optional<std::pair<NodePath, std::size_t>> inserted;  // parent, index
  std::optional<NodePath> wrapped;                           // old root now here
};

void shift_for_insert(NodePath& site, const NodePath& parent, std::size_t index) {
  if (site.size() <= parent.size()) return;
  if (!std::equal(parent.begin(), parent.end(), site.begin())) return;
  if (site[parent.size()] >= index) ++site[parent.size()];
}

void shift_for_wrap(NodePath& site, const NodePath& prefix) {
  site.insert(site.begin(), prefix.begin(), prefix.end());
}

DSyntNode marker_node(const std::string& text, std::optional<Position> position,
                      bool comma = false) {
  Features f;
  f.position = position;
  if (comma) f.punct = Punct::kComma;
  return make_node(text, NodeClass::kFunctionWord, f);
}

Applied append_child(const DSyntNode& sentence, DSyntNode child, Relation rel,
                     std::string payload) {
  DSyntNode s = attach(sentence, std::move(child), rel);
  NodePath site{s.children.size() - 1};
  return {{std::move(s), std::move(site), std::move(payload)}, std::nullopt, std::nullopt};
}

bool has_initial_marker(const DSyntNode& root) {
  return std::any_of(root.children.begin(), root.children.end(), [](const DSyntNode& c) {
    return c.relation == Relation::kAppend && c.features.position == Position::kPre;
  });
}

bool plain_terminal(const DSyntNode& root) {
  return !root.features.punct || root.features.punct == Punct::kPeriod;
}

Gender noun_gender(const DSyntNode& n, const Lexicon& lexicon) {
  const LexemeEntry* e = lexicon.find(n.lexeme, PartOfSpeech::kNoun);
  return e ? e->gender : Gender::kNeuter;
}

std::string pronoun_for(const DSyntNode& np, const Lexicon& lexicon, bool subject) {
  if (np.cls == NodeClass::kFunctionWord) {
    static const std::map<std::string, std::pair<std::string, std::string>, std::less<>> forms = {
        {"he", {"he", "him"}},     {"him", {"he", "him"}},   {"she", {"she", "her"}},
        {"her", {"she", "her"}},   {"it", {"it", "it"}},     {"they", {"they", "them"}},
        {"them", {"they", "them"}}, {"I", {"I", "me"}},      {"me", {"I", "me"}},
    };
    auto it = forms.find(np.lexeme);
    if (it != forms.end()) return subject ? it->second.first : it->second.second;
    return "it";
  }
  if (np.features.number == Number::kPlural) return subject ? "they" : "them";
  switch (noun_gender(np, lexicon)) {
    case Gender::kMasculine: return subject ? "he" : "him";
    case Gender::kFeminine: return subject ? "she" : "her";
    case Gender::kNeuter: break;
  }
  return "it";
}

// "didn't it" for an affirmative past clause, "did he" for a negated one.
std::string auxiliary_tag(const DSyntNode& root, const Lexicon& lexicon) {
  const LexemeEntry* e = lexicon.find(root.lexeme, PartOfSpeech::kVerb);
  const DSyntNode* subject = root.child(Relation::kI);
  const bool plural = subject && subject->features.number == Number::kPlural;
  std::string aux = "did";
  if (root.lexeme == "be") {
    aux = plural ? "were" : "was";
  } else if (e && e->modal) {
    aux = e->irregular.past.value_or(root.lexeme);
  }
  if (root.features.polarity != Polarity::kNegated) aux += "n't";
  return aux + " " + (subject ? pronoun_for(*subject, lexicon, true) : "it");
}

Applied wrap_clause(const DSyntNode& sentence, const std::string& marker) {
  // "it seems that", "it seems to me that", "I think that"
  const bool think = marker.rfind("I think", 0) == 0;
  DSyntNode old_root = sentence;
  Features root_features;
  root_features.tense = Tense::kPast;
  root_features.polarity = Polarity::kAffirmative;
  root_features.punct = old_root.features.punct;
  old_root.features.punct.reset();

  Features pron;
  pron.number = Number::kSingular;
  pron.person = Person::kThird;
  DSyntNode root = make_node(think ? "think" : "seem", NodeClass::kVerb, root_features);
  root = attach(std::move(root), make_node(think ? "I" : "it", NodeClass::kFunctionWord, pron),
                Relation::kI);
  if (marker.find("to me") != std::string::npos) {
    root = attach(std::move(root), marker_node("to me", Position::kPost), Relation::kAttr);
  }
  DSyntNode that = make_node("that", NodeClass::kFunctionWord);
  that = attach(std::move(that), std::move(old_root), Relation::kII);
  root = attach(std::move(root), std::move(that), Relation::kII);
  NodePath old_at{root.children.size() - 1, 0};
  return {{std::move(root), NodePath{}, marker}, std::nullopt, old_at};
}

std::optional<Applied> marker_impl(const DSyntNode& sentence, StyleParam param, Rng& rng,
                                   const Lexicon& lexicon) {
  if (sentence.cls != NodeClass::kVerb) return std::nullopt;
  auto pick = [&](const std::vector<std::string>& list) -> const std::string& {
    return list[rng.below(list.size())];
  };
  switch (param) {
    case StyleParam::kSoftenerHedges: {
      const std::string& m = pick(softener_markers());
      if (m.size() > 5 && m.compare(m.size() - 5, 5, " that") == 0) return wrap_clause(sentence, m);
      return append_child(sentence, marker_node(m, Position::kPre), Relation::kAttr, m);
    }
    case StyleParam::kEmphasizerHedges:
    case StyleParam::kExpletives: {
      const std::string& m = pick(param == StyleParam::kExpletives ? expletive_markers()
                                                                    : emphasizer_markers());
      return append_child(sentence, marker_node(m, Position::kPre), Relation::kAttr, m);
    }
    case StyleParam::kFilledPauses: {
      if (has_initial_marker(sentence)) return std::nullopt;
      const std::string& m = pick(filled_pause_markers());
      const bool trailing_dots = m.size() >= 3 && m.compare(m.size() - 3, 3, "...") == 0;
      return append_child(sentence, marker_node(m, Position::kPre, !trailing_dots),
                          Relation::kAppend, m);
    }
    case StyleParam::kInitialInterjection: {
      if (has_initial_marker(sentence)) return std::nullopt;
      const std::string& m = pick(interjection_markers());
      return append_child(sentence, marker_node(m, Position::kPre, true), Relation::kAppend, m);
    }
    case StyleParam::kTagQuestion: {
      if (!plain_terminal(sentence)) return std::nullopt;
      const auto& external = external_tag_markers();
      const std::uint64_t i = rng.below(external.size() + 1);
      const std::string tag = i == 0 ? auxiliary_tag(sentence, lexicon) : external[i - 1];
      Applied a = append_child(sentence, marker_node(tag, Position::kPost, true),
                               Relation::kAppend, tag);
      a.edit.sentence.features.punct = Punct::kQuestion;
      return a;
    }
    case StyleParam::kExclamation: {
      if (!plain_terminal(sentence)) return std::nullopt;
      DSyntNode s = sentence;
      s.features.punct = Punct::kExclaim;
      return Applied{{std::move(s), NodePath{}, "!"}, std::nullopt, std::nullopt};
    }
    default:
      return std::nullopt;
  }
}

void collect_paths(const DSyntNode& n, NodePath& path,
                   const std::function<bool(const DSyntNode&)>& pred,
                   std::vector<NodePath>& out) {
  if (pred(n)) out.push_back(path);
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(i);
    collect_paths(n.children[i], path, pred, out);
    path.pop_back();
  }
}

std::vector<NodePath> find_paths(const DSyntNode& root,
                                 const std::function<bool(const DSyntNode&)>& pred) {
  std::vector<NodePath> out;
  NodePath path;
  collect_paths(root, path, pred, out);
  return out;
}

bool is_stutter_fragment(const DSyntNode& n) {
  return n.relation == Relation::kAttr && n.cls == NodeClass::kFunctionWord &&
         !n.lexeme.empty() && n.lexeme.back() == '-';
}

const LexemeEntry* stutterable(const DSyntNode& n, const Lexicon& lexicon) {
  PartOfSpeech pos;
  if (n.cls == NodeClass::kCommonNoun) {
    pos = PartOfSpeech::kNoun;
  } else if (n.cls == NodeClass::kAdjective) {
    pos = PartOfSpeech::kAdjective;
  } else {
    return nullptr;
  }
  // Plural nouns take their surface from inflection; the onset still holds,
  // but irregular plurals could change it.
  if (n.features.number == Number::kPlural) return nullptr;
  const LexemeEntry* e = lexicon.find(n.lexeme, pos);
  if (!e || split_onset(*e).first.empty()) return nullptr;
  if (std::any_of(n.children.begin(), n.children.end(), is_stutter_fragment)) return nullptr;
  return e;
}

std::optional<Applied> stutter_impl(const DSyntNode& sentence, const NodePath& site, int repeats,
                                    const Lexicon& lexicon) {
  if (repeats < 1) return std::nullopt;
  const DSyntNode* target = node_at(sentence, site);
  if (!target) return std::nullopt;
  const LexemeEntry* e = stutterable(*target, lexicon);
  if (!e) return std::nullopt;
  const std::string onset = split_onset(*e).first;
  DSyntNode s = sentence;
  DSyntNode* n = node_at(s, site);
  std::string payload;
  for (int i = 0; i < repeats; ++i) {
    *n = attach(std::move(*n), make_node(onset + "-", NodeClass::kFunctionWord), Relation::kAttr);
    payload += onset + "-";
  }
  payload += e->lemma;
  return Applied{{std::move(s), site, std::move(payload)}, std::nullopt, std::nullopt};
}

std::optional<Applied> stuttering_impl(const DSyntNode& sentence, Rng& rng,
                                       const Lexicon& lexicon) {
  auto sites = find_paths(sentence, [&](const DSyntNode& n) { return stutterable(n, lexicon); });
  if (sites.empty()) return std::nullopt;
  const NodePath& site = sites[rng.below(sites.size())];
  const int repeats = 1 + static_cast<int>(rng.below(2));
  return stutter_impl(sentence, site, repeats, lexicon);
}

bool has_casual_synonym(const LexemeEntry& e) {
  return std::any_of(e.synonyms.begin(), e.synonyms.end(), [&](const Synonym& s) {
    return s.reg == Register::kCasual && s.lemma != e.lemma;
  });
}

const LexemeEntry* substitutable_verb(const DSyntNode& n, const Lexicon& lexicon) {
  if (n.cls != NodeClass::kVerb || n.lexeme == "be") return nullptr;
  const LexemeEntry* e = lexicon.find(n.lexeme, PartOfSpeech::kVerb);
  if (!e || e->modal || !has_casual_synonym(*e)) return nullptr;
  return e;
}

std::optional<Applied> negation_impl(const DSyntNode& sentence, Rng& rng,
                                     const Lexicon& lexicon) {
  if (sentence.features.polarity != Polarity::kNegated || !sentence.features.tense) {
    return std::nullopt;
  }
  const LexemeEntry* e = substitutable_verb(sentence, lexicon);
  if (!e) return std::nullopt;
  const std::string casual = *synonym(*e, Register::kCasual, rng);

  Features fail_features = sentence.features;
  fail_features.polarity = Polarity::kAffirmative;
  DSyntNode fail = make_node("fail", NodeClass::kVerb, fail_features);
  Features inner_features;
  inner_features.polarity = Polarity::kAffirmative;
  DSyntNode inner = make_node(casual, NodeClass::kVerb, inner_features);
  for (const auto& c : sentence.children) {
    if (c.relation == Relation::kII || c.relation == Relation::kIII) {
      inner = attach(std::move(inner), c, c.relation);
    }
  }
  std::size_t inner_at = 0;
  bool placed = false;
  for (const auto& c : sentence.children) {
    if (c.relation == Relation::kII || c.relation == Relation::kIII) {
      if (!placed) {
        inner_at = fail.children.size();
        fail = attach(std::move(fail), inner, Relation::kII);
        placed = true;
      }
      continue;
    }
    fail = attach(std::move(fail), c, c.relation);
  }
  if (!placed) {
    inner_at = fail.children.size();
    fail = attach(std::move(fail), std::move(inner), Relation::kII);
  }
  return Applied{{std::move(fail), NodePath{inner_at}, e->lemma + "->" + casual},
                 std::nullopt, std::nullopt};
}

std::optional<Applied> lexical_impl(const DSyntNode& sentence, Rng& rng,
                                    const Lexicon& lexicon) {
  auto sites =
      find_paths(sentence, [&](const DSyntNode& n) { return substitutable_verb(n, lexicon); });
  if (sites.empty()) return std::nullopt;
  const NodePath site = sites[rng.below(sites.size())];
  DSyntNode s = sentence;
  DSyntNode* n = node_at(s, site);
  const LexemeEntry& e = *substitutable_verb(*n, lexicon);
  const std::string casual = *synonym(e, Register::kCasual, rng);
  n->lexeme = casual;
  return Applied{{std::move(s), site, e.lemma + "->" + casual}, std::nullopt, std::nullopt};
}

std::optional<Applied> restatement_impl(const DSyntNode& sentence,
                                        const std::string& original_lemma,
                                        Polarity original_polarity, const Lexicon& lexicon) {
  if (sentence.cls != NodeClass::kVerb || !sentence.features.tense) return std::nullopt;
  if (!lexicon.find(original_lemma, PartOfSpeech::kVerb)) return std::nullopt;
  // After a negation paraphrase the object sits under "failed to V'".
  const DSyntNode* verb = &sentence;
  if (sentence.lexeme == "fail" && sentence.child(Relation::kII) &&
      sentence.child(Relation::kII)->cls == NodeClass::kVerb) {
    verb = sentence.child(Relation::kII);
  }
  if (verb->lexeme == original_lemma) return std::nullopt;
  const DSyntNode* object = verb->child(Relation::kII);
  if (!object || object->cls != NodeClass::kCommonNoun) return std::nullopt;

  Features f;
  f.tense = Tense::kPast;
  f.polarity = original_polarity;
  f.punct = Punct::kComma;
  DSyntNode restated = make_node(original_lemma, NodeClass::kVerb, f);
  Features pron;
  pron.number = object->features.number.value_or(Number::kSingular);
  pron.person = Person::kThird;
  restated = attach(std::move(restated),
                    make_node(pronoun_for(*object, lexicon, false), NodeClass::kFunctionWord, pron),
                    Relation::kII);

  std::size_t index = sentence.children.size();
  for (std::size_t i = 0; i < sentence.children.size(); ++i) {
    const DSyntNode& c = sentence.children[i];
    if (c.relation == Relation::kAppend && c.features.position != Position::kPre) {
      index = i;
      break;
    }
  }
  DSyntNode s = sentence;
  restated.relation = Relation::kAppend;
  s.children.insert(s.children.begin() + static_cast<std::ptrdiff_t>(index), std::move(restated));
  std::string payload = (original_polarity == Polarity::kNegated ? "not " : "") + original_lemma;
  return Applied{{std::move(s), NodePath{index}, std::move(payload)},
                 std::make_pair(NodePath{}, index), std::nullopt};
}

std::optional<StyleEdit> strip(std::optional<Applied> a) {
  if (!a) return std::nullopt;
  return std::move(a->edit);
}

VoiceModel make_builtin(std::string name, std::map<StyleParam, double> params) {
  return VoiceModel(std::move(name), std::move(params));
}

}  // namespace

std::string_view to_string(StyleParam p) {
  for (const auto& n : kParamNames) {
    if (n.param == p) return n.name;
  }
  return "softener_hedges";
}

std::optional<StyleParam> style_param_from_string(std::string_view s) {
  for (const auto& n : kParamNames) {
    if (n.name == s) return n.param;
  }
  return std::nullopt;
}

bool is_tree_param(StyleParam p) {
  return p != StyleParam::kContractions && p != StyleParam::kPronominalization;
}

VoiceModel::VoiceModel(std::string name, std::map<StyleParam, double> params)
    : name_(std::move(name)) {
  for (const auto& [p, v] : params) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error("activation of " + std::string(to_string(p)) + " must lie in [0, 1]");
    }
    if (v > 0.0) params_[p] = v;
  }
}

double VoiceModel::activation(StyleParam p) const {
  auto it = params_.find(p);
  return it == params_.end() ? 0.0 : it->second;
}

std::optional<VoiceModel> VoiceModel::builtin(std::string_view name) {
  using P = StyleParam;
  const std::string key = detail::lowercase(name);
  if (key == "neutral") return make_builtin("NEUTRAL", {});
  if (key == "formal") {
    return make_builtin("FORMAL", {{P::kContractions, 1.0}, {P::kPronominalization, 1.0}});
  }
  if (key == "shy") {
    return make_builtin("SHY", {{P::kSoftenerHedges, 0.4},
                                {P::kStuttering, 0.3},
                                {P::kFilledPauses, 0.3},
                                {P::kInitialInterjection, 0.2},
                                {P::kPronominalization, 1.0},
                                {P::kContractions, 1.0}});
  }
  if (key == "laid-back") {
    return make_builtin("LAID-BACK", {{P::kEmphasizerHedges, 0.3},
                                      {P::kTagQuestion, 0.4},
                                      {P::kExpletives, 0.2},
                                      {P::kInitialInterjection, 0.3},
                                      {P::kLexicalVariation, 0.4},
                                      {P::kNegationParaphrase, 0.5},
                                      {P::kRestatement, 0.3},
                                      {P::kExclamation, 0.2},
                                      {P::kPronominalization, 1.0},
                                      {P::kContractions, 1.0}});
  }
  return std::nullopt;
}

std::vector<std::string> VoiceModel::builtin_names() {
  return {"NEUTRAL", "FORMAL", "SHY", "LAID-BACK"};
}

VoiceModel VoiceModel::parse(std::string_view text) {
  std::optional<std::string> name;
  std::map<StyleParam, double> params;
  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (detail::is_comment_or_blank(line)) continue;
    auto fields = detail::split_fields(line);
    if (fields.front().text == "name") {
      if (fields.size() != 2) throw SyntaxError(line_no, fields.front().column, "expected 'name <NAME>'");
      if (name) throw SyntaxError(line_no, fields.front().column, "duplicate name");
      name = std::string(fields[1].text);
      continue;
    }
    const std::string_view trimmed = detail::trim(line);
    const auto colon = trimmed.find(':');
    const int column = fields.front().column;
    if (colon == std::string_view::npos) throw SyntaxError(line_no, column, "expected 'param: value'");
    const std::string_view key = detail::trim(trimmed.substr(0, colon));
    const std::string_view value = detail::trim(trimmed.substr(colon + 1));
    auto param = style_param_from_string(key);
    if (!param) throw SyntaxError(line_no, column, "unknown parameter '" + std::string(key) + "'");
    if (params.count(*param)) {
      throw SyntaxError(line_no, column, "duplicate parameter '" + std::string(key) + "'");
    }
    double v = 0.0;
    auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || end != value.data() + value.size() || value.empty()) {
      throw SyntaxError(line_no, column, "bad activation '" + std::string(value) + "'");
    }
    if (!(v >= 0.0 && v <= 1.0)) {
      throw SyntaxError(line_no, column, "activation " + std::string(value) + " outside [0, 1]");
    }
    params[*param] = v;
  }
  if (!name) throw SyntaxError(1, 1, "voice model has no name");
  return VoiceModel(*name, params);
}

VoiceModel VoiceModel::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

TransformOptions transform_options_for(const VoiceModel& model) {
  TransformOptions opts;
  if (model.activation(StyleParam::kPronominalization) >= kOptionThreshold) {
    opts.referring_expression = ReferringExpression::kPronominalizeAfterFirst;
  }
  opts.contractions = model.activation(StyleParam::kContractions) >= kOptionThreshold;
  return opts;
}

RealizeOptions realize_options_for(const VoiceModel& model) {
  RealizeOptions opts;
  opts.contractions = model.activation(StyleParam::kContractions) >= kOptionThreshold;
  return opts;
}

StyledDocument apply_voice(const Document& doc, const VoiceModel& model, std::uint64_t seed,
                           const Lexicon& lexicon) {
  StyledDocument out;
  out.document = doc;
  for (std::size_t i = 0; i < out.document.sentences.size(); ++i) {
    DSyntNode& sentence = out.document.sentences[i];
    std::vector<StyleDecision> local;
    // Root verb before a substitution, for restatement.
    std::optional<std::pair<std::string, Polarity>> substituted;

    for (StyleParam param : kApplyOrder) {
      const double activation = model.activation(param);
      if (activation <= 0.0) continue;
      Rng rng = Rng::derive(seed, {i, static_cast<std::uint64_t>(param)});
      if (rng.uniform() >= activation) continue;

      std::optional<Applied> applied;
      switch (param) {
        case StyleParam::kNegationParaphrase:
          applied = negation_impl(sentence, rng, lexicon);
          if (applied) substituted.emplace(sentence.lexeme, Polarity::kNegated);
          break;
        case StyleParam::kLexicalVariation:
          applied = lexical_impl(sentence, rng, lexicon);
          if (applied && applied->edit.site.empty() && !substituted) {
            substituted.emplace(sentence.lexeme,
                                sentence.features.polarity.value_or(Polarity::kAffirmative));
          }
          break;
        case StyleParam::kRestatement:
          if (substituted) {
            applied = restatement_impl(sentence, substituted->first, substituted->second, lexicon);
          }
          break;
        case StyleParam::kStuttering:
          applied = stuttering_impl(sentence, rng, lexicon);
          break;
        default:
          applied = marker_impl(sentence, param, rng, lexicon);
      }
      if (!applied) continue;
      for (auto& d : local) {
        if (applied->inserted) shift_for_insert(d.site, applied->inserted->first,
                                                applied->inserted->second);
        if (applied->wrapped) shift_for_wrap(d.site, *applied->wrapped);
      }
      sentence = std::move(applied->edit.sentence);
      local.push_back({i, param, std::move(applied->edit.site), std::move(applied->edit.payload)});
    }
    out.decisions.insert(out.decisions.end(), local.begin(), local.end());
  }
  return out;
}

std::optional<StyleEdit> insert_marker(const DSyntNode& sentence, StyleParam param, Rng& rng,
                                       const Lexicon& lexicon) {
  return strip(marker_impl(sentence, param, rng, lexicon));
}

std::optional<StyleEdit> apply_stuttering(const DSyntNode& sentence, Rng& rng,
                                          const Lexicon& lexicon) {
  return strip(stuttering_impl(sentence, rng, lexicon));
}

std::optional<StyleEdit> stutter_at(const DSyntNode& sentence, const NodePath& site, int repeats,
                                    const Lexicon& lexicon) {
  return strip(stutter_impl(sentence, site, repeats, lexicon));
}

std::optional<StyleEdit> apply_negation_paraphrase(const DSyntNode& sentence, Rng& rng,
                                                   const Lexicon& lexicon) {
  return strip(negation_impl(sentence, rng, lexicon));
}

std::optional<StyleEdit> apply_lexical_variation(const DSyntNode& sentence, Rng& rng,
                                                 const Lexicon& lexicon) {
  return strip(lexical_impl(sentence, rng, lexicon));
}

std::optional<StyleEdit> apply_restatement(const DSyntNode& sentence,
                                           const std::string& original_lemma,
                                           Polarity original_polarity, const Lexicon& lexicon) {
  return strip(restatement_impl(sentence, original_lemma, original_polarity, lexicon));
}

const std::vector<std::string>& softener_markers() {
  static const std::vector<std::string> v = {
      "sort of", "kind of",   "somewhat",      "quite",           "around",
      "rather",  "I think that", "it seems that", "it seems to me that"};
  return v;
}

const std::vector<std::string>& emphasizer_markers() {
  static const std::vector<std::string> v = {"really", "basically", "actually"};
  return v;
}

const std::vector<std::string>& filled_pause_markers() {
  static const std::vector<std::string> v = {"err...", "mmhm...", "I mean", "like", "you know"};
  return v;
}

const std::vector<std::string>& interjection_markers() {
  static const std::vector<std::string> v = {"well", "ok", "oh"};
  return v;
}

const std::vector<std::string>& expletive_markers() {
  static const std::vector<std::string> v = {"damn"};
  return v;
}

const std::vector<std::string>& external_tag_markers() {
  static const std::vector<std::string> v = {"okay", "alright", "you see"};
  return v;
}

}  // namespace retell
