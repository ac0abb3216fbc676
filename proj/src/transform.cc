#include "retell/transform.h"

#include "retell/error.h"

namespace retell {
namespace {

struct ClauseMode {
  bool omit_subject = false;
};

Features past_clause(Polarity polarity) {
  Features f;
  f.tense = Tense::kPast;
  f.polarity = polarity;
  return f;
}

// Entity bound to the subject slot of p, if any.
std::optional<std::string> subject_entity(const Proposition& p, const Lexicon& lexicon) {
  const FrameDef* def = lexicon.find_frame(p.frame.frame_id);
  if (!def) return std::nullopt;
  for (const auto& b : p.frame.bindings) {
    if (def->slot_of(b.role) != ArgSlot::kI) continue;
    if (const auto* ref = std::get_if<EntityRef>(&b.value)) return ref->id;
  }
  return std::nullopt;
}

DSyntNode pronoun(const Entity& e, const Lexicon& lexicon, NpCase np_case) {
  Gender gender = Gender::kNeuter;
  if (const LexemeEntry* entry = lexicon.find(e.head_lemma, PartOfSpeech::kNoun)) {
    gender = entry->gender;
  }
  const bool subject = np_case == NpCase::kSubject;
  std::string form;
  if (e.number == Number::kPlural) {
    form = subject ? "they" : "them";
  } else if (gender == Gender::kMasculine) {
    form = subject ? "he" : "him";
  } else if (gender == Gender::kFeminine) {
    form = subject ? "she" : "her";
  } else {
    form = "it";
  }
  Features f;
  f.number = e.number;
  f.person = Person::kThird;
  return make_node(form, NodeClass::kFunctionWord, f);
}

DSyntNode bare_noun(const std::string& lemma) {
  Features f;
  f.article = Article::kNone;
  f.number = Number::kSingular;
  return make_node(lemma, NodeClass::kCommonNoun, f);
}

// "dignity and unconcern": first noun heads, later conjuncts hang from "and".
DSyntNode coordinated_nouns(const NounPhrase& np) {
  DSyntNode head = bare_noun(np.nouns.front());
  for (std::size_t i = 1; i < np.nouns.size(); ++i) {
    DSyntNode conj = make_node("and", NodeClass::kFunctionWord);
    conj = attach(std::move(conj), bare_noun(np.nouns[i]), Relation::kII);
    head = attach(std::move(head), std::move(conj), Relation::kAppend);
  }
  return head;
}

DSyntNode strip_tense(DSyntNode clause) {
  clause.features.tense.reset();
  return clause;
}

DSyntNode build_clause_impl(const Proposition& p, DiscourseContext& ctx, ClauseMode mode);

DSyntNode entity_np(const std::string& id, const Proposition& p, DiscourseContext& ctx,
                    NpCase np_case) {
  const Entity* e = ctx.story().find_entity(id);
  if (!e) throw BuildError(p.id, "unknown entity '" + id + "'");
  return realize_entity_np(*e, ctx, np_case);
}

DSyntNode nested_clause(const Proposition& outer, const Proposition& inner,
                        ComplementKind kind, DiscourseContext& ctx) {
  if (kind == ComplementKind::kFiniteClause) return build_clause_impl(inner, ctx, {});
  // Infinitive complements are subject-controlled: a subject shared with the
  // matrix clause is left implicit.
  auto outer_subject = subject_entity(outer, ctx.lexicon());
  auto inner_subject = subject_entity(inner, ctx.lexicon());
  ClauseMode mode;
  mode.omit_subject = outer_subject && inner_subject == outer_subject;
  return strip_tense(build_clause_impl(inner, ctx, mode));
}

DSyntNode argument_node(const Argument& arg, ArgSlot slot, const Proposition& p,
                        const FrameDef& def, DiscourseContext& ctx) {
  if (const auto* ref = std::get_if<EntityRef>(&arg)) {
    return entity_np(ref->id, p, ctx, slot == ArgSlot::kI ? NpCase::kSubject : NpCase::kObject);
  }
  if (const auto* prop = std::get_if<Property>(&arg)) {
    return make_node(prop->adjective, NodeClass::kAdjective);
  }
  if (const auto* text = std::get_if<Text>(&arg)) {
    return make_node(text->literal, NodeClass::kFunctionWord);
  }
  const auto& nested = std::get<Nested>(arg);
  if (!nested.proposition) throw BuildError(p.id, "empty nested proposition");
  return nested_clause(p, *nested.proposition,
                       def.complement_kind.value_or(ComplementKind::kFiniteClause), ctx);
}

DSyntNode build_clause_impl(const Proposition& p, DiscourseContext& ctx, ClauseMode mode) {
  const Lexicon& lexicon = ctx.lexicon();
  const FrameDef* def = lexicon.find_frame(p.frame.frame_id);
  if (!def) throw BuildError(p.id, "missing frame '" + p.frame.frame_id + "'");
  if (!lexicon.find(p.frame.predicate_lemma, PartOfSpeech::kVerb)) {
    throw BuildError(p.id, "predicate '" + p.frame.predicate_lemma + "' is not a lexicon verb");
  }
  for (const auto& b : p.frame.bindings) {
    if (!def->has_role(b.role)) {
      throw BuildError(p.id, "role " + b.role + " is not mapped by frame " + def->frame_id);
    }
  }
  for (const auto& m : def->mandatory_roles) {
    if (!p.frame.find(m.role)) throw BuildError(p.id, "mandatory role " + m.role + " unbound");
  }

  const bool modal = def->modal_verb && ctx.options().contractions;
  const bool copular = def->copula_adjective && !modal;
  DSyntNode clause = make_node(modal ? *def->modal_verb : p.frame.predicate_lemma,
                               NodeClass::kVerb, past_clause(p.polarity));

  auto bound_in = [&](ArgSlot slot) -> const RoleBinding* {
    for (const auto& b : p.frame.bindings) {
      if (def->slot_of(b.role) == slot) return &b;
    }
    return nullptr;
  };

  // Build in surface order so that mention tracking sees the subject first.
  if (const RoleBinding* b = bound_in(ArgSlot::kI); b && !mode.omit_subject) {
    clause = attach(std::move(clause), argument_node(b->value, ArgSlot::kI, p, *def, ctx),
                    Relation::kI);
  }
  std::optional<DSyntNode> predicate_adjective;
  if (copular) predicate_adjective = make_node(*def->copula_adjective, NodeClass::kAdjective);
  for (ArgSlot slot : {ArgSlot::kIII, ArgSlot::kII}) {
    const RoleBinding* b = bound_in(slot);
    if (!b) continue;
    DSyntNode arg = argument_node(b->value, slot, p, *def, ctx);
    Relation rel = slot == ArgSlot::kII ? Relation::kII : Relation::kIII;
    if (copular && slot == ArgSlot::kII && std::holds_alternative<Nested>(b->value)) {
      predicate_adjective = attach(std::move(*predicate_adjective), std::move(arg), Relation::kII);
    } else {
      clause = attach(std::move(clause), std::move(arg), rel);
    }
  }
  if (predicate_adjective) {
    clause = attach(std::move(clause), std::move(*predicate_adjective), Relation::kAttr);
  }

  for (const auto& a : p.attachments) {
    if (a.relation != AttachmentRelation::kComplement) continue;
    const auto* nested = std::get_if<Nested>(&a.target);
    if (!nested || !nested->proposition) {
      throw BuildError(p.id, "complement attachment must target a proposition");
    }
    DSyntNode sub = nested_clause(p, *nested->proposition,
                                  def->complement_kind.value_or(ComplementKind::kFiniteClause),
                                  ctx);
    try {
      clause = attach_discourse(std::move(clause), a.relation, std::move(sub));
    } catch (const RelationConflictError& e) {
      throw BuildError(p.id, e.what());
    }
  }

  for (const auto& r : def->optional_roles) {
    const auto* prep = std::get_if<std::string>(&r.target);
    const Argument* arg = p.frame.find(r.role);
    if (!prep || !arg) continue;
    DSyntNode pp = make_node(*prep, NodeClass::kPreposition);
    pp = attach(std::move(pp), argument_node(*arg, ArgSlot::kII, p, *def, ctx), Relation::kII);
    clause = attach(std::move(clause), std::move(pp), Relation::kAppend);
  }

  clause = attach_adjuncts(std::move(clause), p, ctx);

  for (const auto& a : p.attachments) {
    if (a.relation != AttachmentRelation::kPurpose && a.relation != AttachmentRelation::kCause) {
      continue;
    }
    const auto* nested = std::get_if<Nested>(&a.target);
    if (!nested || !nested->proposition) {
      throw BuildError(p.id, std::string(to_string(a.relation)) +
                                 " attachment must target a proposition");
    }
    const Proposition& inner = *nested->proposition;
    ClauseMode sub_mode;
    if (a.relation == AttachmentRelation::kPurpose &&
        ctx.options().referring_expression == ReferringExpression::kPronominalizeAfterFirst) {
      auto outer_subject = subject_entity(p, lexicon);
      sub_mode.omit_subject = outer_subject && subject_entity(inner, lexicon) == outer_subject;
    }
    DSyntNode sub = build_clause_impl(inner, ctx, sub_mode);
    clause = attach_discourse(std::move(clause), a.relation, std::move(sub));
  }
  return clause;
}

}  // namespace

Document transform_story(const StoryGraph& g, const TransformOptions& opts,
                         const Lexicon& lexicon) {
  DiscourseContext ctx(g, lexicon, opts);
  Document doc;
  for (const Timespan& ts : g.timeline) {
    for (const Proposition& p : ts.propositions) {
      ctx.begin_sentence();
      doc.sentences.push_back(build_clause(p, ctx));
    }
  }
  return doc;
}

DSyntNode build_clause(const Proposition& p, DiscourseContext& ctx) {
  return build_clause_impl(p, ctx, {});
}

DSyntNode realize_entity_np(const Entity& e, DiscourseContext& ctx, NpCase np_case) {
  if (ctx.options().referring_expression == ReferringExpression::kPronominalizeAfterFirst &&
      e.kind == EntityKind::kCharacter && ctx.mentioned(e.id)) {
    return pronoun(e, ctx.lexicon(), np_case);
  }
  ctx.note_mention(e.id);
  Features f;
  f.article = Article::kDefinite;
  f.number = e.number;
  DSyntNode np = make_node(e.head_lemma, NodeClass::kCommonNoun, f);
  for (const auto& m : e.fixed_modifiers) {
    np = attach(std::move(np), make_node(m, NodeClass::kAdjective), Relation::kAttr);
  }
  if (e.group_of) {
    Features member;
    member.article = Article::kNone;
    member.number = Number::kPlural;
    DSyntNode of = make_node("of", NodeClass::kPreposition);
    of = attach(std::move(of), make_node(*e.group_of, NodeClass::kCommonNoun, member),
                Relation::kII);
    np = attach(std::move(np), std::move(of), Relation::kAppend);
  }
  return np;
}

DSyntNode attach_adjuncts(DSyntNode clause, const Proposition& p, DiscourseContext& ctx) {
  for (const auto& a : p.adverbs) {
    Features f;
    f.position = a.position;
    clause = attach(std::move(clause), make_node(a.lemma, NodeClass::kAdverb, f), Relation::kAttr);
  }
  for (const auto& a : p.attachments) {
    if (a.relation != AttachmentRelation::kPrepositional) continue;
    const std::string prep = a.preposition.value_or("");
    if (!ctx.lexicon().find(prep, PartOfSpeech::kPreposition)) {
      throw UnknownPrepositionError("proposition " + p.id + ": unknown preposition '" + prep +
                                    "'");
    }
    DSyntNode object;
    if (const auto* ref = std::get_if<EntityRef>(&a.target)) {
      object = entity_np(ref->id, p, ctx, NpCase::kObject);
    } else if (const auto* prop = std::get_if<Property>(&a.target)) {
      object = make_node(prop->adjective, NodeClass::kAdjective);
    } else if (const auto* np = std::get_if<NounPhrase>(&a.target)) {
      if (np->nouns.empty()) throw BuildError(p.id, "empty noun phrase");
      object = coordinated_nouns(*np);
    } else {
      throw BuildError(p.id, "prepositional attachment cannot target a proposition");
    }
    DSyntNode pp = make_node(prep, NodeClass::kPreposition);
    pp = attach(std::move(pp), std::move(object), Relation::kII);
    clause = attach(std::move(clause), std::move(pp), Relation::kAppend);
  }
  return clause;
}

DSyntNode attach_discourse(DSyntNode main, AttachmentRelation relation, DSyntNode sub) {
  switch (relation) {
    case AttachmentRelation::kPurpose: {
      sub = strip_tense(std::move(sub));
      const bool has_subject = sub.child(Relation::kI) != nullptr;
      DSyntNode sub_marker =
          make_node(has_subject ? "in_order_for" : "in_order", NodeClass::kFunctionWord);
      sub_marker = attach(std::move(sub_marker), std::move(sub), Relation::kII);
      return attach(std::move(main), std::move(sub_marker), Relation::kAppend);
    }
    case AttachmentRelation::kCause: {
      DSyntNode because = make_node("because", NodeClass::kFunctionWord);
      because = attach(std::move(because), std::move(sub), Relation::kII);
      return attach(std::move(main), std::move(because), Relation::kAppend);
    }
    case AttachmentRelation::kComplement:
      return attach(std::move(main), std::move(sub), Relation::kII);
    case AttachmentRelation::kPrepositional:
      break;
  }
  throw UnsupportedRelationError("'" + std::string(to_string(relation)) +
                                 "' is not a discourse relation");
}

}  // namespace retell
