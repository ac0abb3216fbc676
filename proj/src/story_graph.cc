#include "retell/story_graph.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "retell/error.h"
#include "text_util.h"

namespace retell {
namespace {

// ---------------------------------------------------------------------------
// Line tree

struct Line {
  int number = 0;
  int indent = 0;
  std::string_view text;  // without indentation
  std::vector<Line*> children;
};

struct LineTree {
  std::vector<std::unique_ptr<Line>> storage;
  std::vector<Line*> roots;
};

LineTree build_line_tree(std::string_view doc) {
  LineTree tree;
  std::vector<Line*> stack;
  int number = 0;
  for (std::string_view raw : detail::split_lines(doc)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (detail::is_comment_or_blank(raw)) continue;
    int indent = 0;
    while (indent < static_cast<int>(raw.size()) && raw[indent] == ' ') ++indent;
    if (indent < static_cast<int>(raw.size()) && raw[indent] == '\t') {
      throw SyntaxError(number, indent + 1, "tabs are not allowed in indentation");
    }
    auto line = std::make_unique<Line>();
    line->number = number;
    line->indent = indent;
    line->text = detail::trim(raw.substr(indent));
    while (!stack.empty() && stack.back()->indent >= indent) stack.pop_back();
    if (stack.empty()) {
      tree.roots.push_back(line.get());
    } else {
      stack.back()->children.push_back(line.get());
    }
    stack.push_back(line.get());
    tree.storage.push_back(std::move(line));
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Character scanner over one line

class Scanner {
 public:
  Scanner(const Line& line) : line_(line), text_(line.text) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(line_.number, line_.indent + static_cast<int>(pos_) + 1, message);
  }

  int column() const { return line_.indent + static_cast<int>(pos_) + 1; }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  void skip_space() {
    while (pos_ < text_.size() && detail::is_space(text_[pos_])) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && is_ident_char(text_[end])) return false;
    pos_ = end;
    return true;
  }

  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  std::string identifier(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string quoted() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected quoted string");
    ++pos_;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      char c = text_[pos_++];
      if (c == '\\') {
        if (pos_ >= text_.size()) fail("unterminated escape");
        char e = text_[pos_++];
        if (e == 'n') {
          out += '\n';
        } else if (e == '"' || e == '\\') {
          out += e;
        } else {
          fail(std::string("unknown escape \\") + e);
        }
      } else {
        out += c;
      }
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  // Next run of non-space characters.
  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !detail::is_space(text_[pos_])) ++pos_;
    if (start == pos_) fail("unexpected end of line");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_end() {
    if (!done()) fail("unexpected trailing text");
  }

 private:
  const Line& line_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Raw propositions (before reference resolution)

struct RawProposition;

struct RawSlot {
  std::unique_ptr<RawProposition> inline_prop;
  std::string ref;
  int line = 0;
  int column = 0;
};

struct RawAttachment {
  AttachmentRelation relation;
  std::optional<std::string> preposition;
  std::optional<AttachmentTarget> flat_target;  // non-nested target
  RawSlot nested;
};

struct RawProposition {
  int line = 0;
  std::string id;
  std::string frame_id;
  std::string predicate;
  Polarity polarity = Polarity::kAffirmative;
  std::vector<AdverbUse> adverbs;
  std::vector<RoleBinding> flat_bindings;
  std::vector<std::pair<std::string, RawSlot>> nested_bindings;
  std::vector<RawAttachment> attachments;
};

class StoryParser {
 public:
  explicit StoryParser(const Lexicon& lexicon) : lexicon_(lexicon) {}

  StoryGraph parse(std::string_view text) {
    LineTree tree = build_line_tree(text);
    StoryGraph g;
    bool have_story = false, have_title = false, have_entities = false, have_timeline = false;
    std::vector<std::vector<std::unique_ptr<RawProposition>>> spans;

    for (Line* line : tree.roots) {
      Scanner s(*line);
      if (line->indent != 0) s.fail("top-level line must not be indented");
      std::string key = s.identifier("section keyword");
      if (key == "story") {
        if (have_story) s.fail("duplicate 'story' line");
        g.id = s.identifier("story id");
        s.expect_end();
        have_story = true;
      } else if (key == "title") {
        if (have_title) s.fail("duplicate 'title' line");
        g.title = s.quoted();
        s.expect_end();
        have_title = true;
      } else if (key == "original") {
        if (g.original_text) s.fail("duplicate 'original' line");
        g.original_text = s.quoted();
        s.expect_end();
      } else if (key == "entities") {
        if (have_entities) s.fail("duplicate 'entities' section");
        s.expect_end();
        have_entities = true;
        for (Line* child : line->children) g.entities.push_back(parse_entity(*child));
      } else if (key == "timeline") {
        if (have_timeline) s.fail("duplicate 'timeline' section");
        if (!have_entities) s.fail("'entities' must precede 'timeline'");
        s.expect_end();
        have_timeline = true;
        for (Line* child : line->children) spans.push_back(parse_span(*child, spans.size()));
      } else {
        Scanner(*line).fail("unknown section '" + key + "'");
      }
      if (!line->children.empty() && key != "entities" && key != "timeline") {
        Scanner(*line->children.front()).fail("unexpected indented line");
      }
    }
    if (!have_story) throw SyntaxError(1, 1, "missing 'story' line");
    if (!have_title) throw SyntaxError(1, 1, "missing 'title' line");
    if (!have_entities) throw SyntaxError(1, 1, "missing 'entities' section");

    for (const Entity& e : g.entities) {
      if (!entity_ids_.insert(e.id).second) {
        throw SyntaxError(entity_lines_[e.id], 1, "duplicate entity id '" + e.id + "'");
      }
    }
    check_references(spans);

    for (std::size_t i = 0; i < spans.size(); ++i) {
      Timespan ts;
      ts.index = static_cast<int>(i);
      for (auto& raw : spans[i]) ts.propositions.push_back(*build(*raw));
      g.timeline.push_back(std::move(ts));
    }
    return g;
  }

 private:
  Entity parse_entity(const Line& line) {
    Scanner s(line);
    if (!line.children.empty()) Scanner(*line.children.front()).fail("unexpected indented line");
    Entity e;
    e.id = s.identifier("entity id");
    std::string kind = s.identifier("entity kind");
    if (kind == "character") {
      e.kind = EntityKind::kCharacter;
    } else if (kind == "object") {
      e.kind = EntityKind::kObject;
    } else if (kind == "location") {
      e.kind = EntityKind::kLocation;
    } else {
      s.fail("entity kind must be character, object or location");
    }
    e.head_lemma = s.identifier("head lemma");
    while (!s.done()) {
      int col = s.column();
      std::string key = s.identifier("entity attribute");
      s.expect('=');
      std::string value = s.identifier("attribute value");
      if (key == "group_of") {
        if (e.group_of) throw SyntaxError(line.number, col, "duplicate group_of");
        e.group_of = value;
      } else if (key == "number") {
        auto n = number_from_string(value);
        if (!n) throw SyntaxError(line.number, col, "number must be sg or pl");
        e.number = *n;
      } else if (key == "mod") {
        e.fixed_modifiers.push_back(value);
      } else {
        throw SyntaxError(line.number, col, "unknown entity attribute '" + key + "'");
      }
    }
    if (e.group_of && e.number != Number::kSingular) {
      s.fail("collective entity '" + e.id + "' must be singular");
    }
    entity_lines_.emplace(e.id, line.number);
    return e;
  }

  std::vector<std::unique_ptr<RawProposition>> parse_span(const Line& line, std::size_t expected) {
    Scanner s(line);
    if (!s.accept_word("span")) s.fail("expected 'span <index>'");
    s.skip_space();
    int col = s.column();
    std::string idx = s.identifier("span index");
    s.expect_end();
    if (!std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw SyntaxError(line.number, col, "span index must be a non-negative integer");
    }
    if (idx != std::to_string(expected)) {
      throw SyntaxError(line.number, col,
                        "non-contiguous timeline: expected span " + std::to_string(expected));
    }
    if (line.children.empty()) s.fail("span " + idx + " has no propositions");
    std::vector<std::unique_ptr<RawProposition>> out;
    for (Line* child : line.children) out.push_back(parse_proposition(*child));
    return out;
  }

  Argument parse_flat_argument(Scanner& s) {
    if (s.peek('"')) return Text{s.quoted()};
    std::string ident = s.identifier("argument");
    if (ident == "adj" && s.accept(':')) return Property{s.identifier("adjective")};
    return EntityRef{ident};
  }

  std::unique_ptr<RawProposition> parse_proposition(const Line& line) {
    Scanner s(line);
    auto p = std::make_unique<RawProposition>();
    p->line = line.number;
    s.expect('[');
    p->id = s.identifier("proposition id");
    s.expect(']');
    p->frame_id = s.identifier("frame id");
    p->predicate = s.identifier("predicate");
    s.expect('(');
    std::set<std::string> roles;
    if (!s.accept(')')) {
      do {
        int col = s.column();
        std::string role = s.identifier("role name");
        s.expect('=');
        if (!roles.insert(role).second) {
          throw SyntaxError(line.number, col, "role '" + role + "' bound twice");
        }
        p->flat_bindings.push_back({role, parse_flat_argument(s)});
      } while (s.accept(','));
      s.expect(')');
    }
    while (!s.done()) {
      int col = s.column();
      std::string key = s.identifier("proposition option");
      s.expect('=');
      if (key == "polarity") {
        std::string v = s.identifier("polarity");
        if (v == "neg") {
          p->polarity = Polarity::kNegated;
        } else if (v == "aff") {
          p->polarity = Polarity::kAffirmative;
        } else {
          throw SyntaxError(line.number, col, "polarity must be aff or neg");
        }
      } else if (key == "adv") {
        AdverbUse a;
        a.lemma = s.identifier("adverb");
        s.expect('@');
        auto pos = position_from_string(s.identifier("adverb position"));
        if (!pos) throw SyntaxError(line.number, col, "adverb position must be pre or post");
        a.position = *pos;
        p->adverbs.push_back(std::move(a));
      } else {
        throw SyntaxError(line.number, col, "unknown proposition option '" + key + "'");
      }
    }
    for (Line* child : line.children) parse_child(*child, *p, roles);
    return p;
  }

  RawSlot parse_slot(const Line& owner) {
    if (owner.children.size() != 1) {
      Scanner(owner).fail("expected exactly one nested proposition line");
    }
    const Line& line = *owner.children.front();
    RawSlot slot;
    slot.line = line.number;
    slot.column = line.indent + 1;
    Scanner s(line);
    if (s.accept('@')) {
      slot.ref = s.identifier("proposition id");
      s.expect_end();
      if (!line.children.empty()) Scanner(*line.children.front()).fail("unexpected indented line");
    } else {
      slot.inline_prop = parse_proposition(line);
    }
    return slot;
  }

  void parse_child(const Line& line, RawProposition& p, std::set<std::string>& roles) {
    Scanner s(line);
    std::string key = s.identifier("'role', 'prep' or a discourse relation");
    if (key == "role") {
      int col = s.column();
      std::string role = s.identifier("role name");
      s.expect(':');
      s.expect_end();
      if (!roles.insert(role).second) {
        throw SyntaxError(line.number, col, "role '" + role + "' bound twice");
      }
      p.nested_bindings.emplace_back(role, parse_slot(line));
      return;
    }
    RawAttachment a;
    if (key == "purpose" || key == "cause" || key == "complement") {
      a.relation = key == "purpose"  ? AttachmentRelation::kPurpose
                   : key == "cause" ? AttachmentRelation::kCause
                                    : AttachmentRelation::kComplement;
      s.expect(':');
      s.expect_end();
      a.nested = parse_slot(line);
    } else if (key == "prep") {
      a.relation = AttachmentRelation::kPrepositional;
      a.preposition = s.identifier("preposition");
      s.expect(':');
      if (s.peek('"')) {
        int col = s.column();
        a.flat_target = parse_noun_phrase(s.quoted(), line.number, col);
      } else {
        std::string ident = s.identifier("attachment target");
        if (ident == "adj" && s.accept(':')) {
          a.flat_target = Property{s.identifier("adjective")};
        } else {
          a.flat_target = EntityRef{ident};
        }
      }
      s.expect_end();
      if (!line.children.empty()) Scanner(*line.children.front()).fail("unexpected indented line");
    } else {
      Scanner(line).fail("unknown proposition child '" + key + "'");
    }
    p.attachments.push_back(std::move(a));
  }

  static NounPhrase parse_noun_phrase(const std::string& literal, int line, int col) {
    NounPhrase np;
    std::string_view rest = literal;
    while (true) {
      auto sep = rest.find(" and ");
      std::string_view noun = detail::trim(rest.substr(0, sep));
      if (noun.empty() || noun.find(' ') != std::string_view::npos) {
        throw SyntaxError(line, col, "noun phrase must be nouns joined by ' and '");
      }
      np.nouns.emplace_back(noun);
      if (sep == std::string_view::npos) break;
      rest = rest.substr(sep + 5);
    }
    return np;
  }

  // Entity, frame and proposition-id references.
  void check_references(const std::vector<std::vector<std::unique_ptr<RawProposition>>>& spans) {
    for (const auto& span : spans) {
      for (const auto& p : span) index(*p);
    }
    for (const auto& span : spans) {
      for (const auto& p : span) check(*p);
    }
  }

  void index(const RawProposition& p) {
    if (!by_id_.emplace(p.id, &p).second) {
      throw SyntaxError(p.line, 1, "duplicate proposition id '" + p.id + "'");
    }
    for (const auto& [_, slot] : p.nested_bindings) {
      if (slot.inline_prop) index(*slot.inline_prop);
    }
    for (const auto& a : p.attachments) {
      if (a.nested.inline_prop) index(*a.nested.inline_prop);
    }
  }

  void check_entity(const std::string& id) {
    if (!entity_ids_.count(id)) {
      throw ReferenceError(id, "unknown entity '" + id + "'");
    }
  }

  void check_slot(const RawSlot& slot) {
    if (slot.inline_prop) {
      check(*slot.inline_prop);
    } else if (!by_id_.count(slot.ref)) {
      throw ReferenceError(slot.ref, "unknown proposition '" + slot.ref + "' (line " +
                                         std::to_string(slot.line) + ")");
    }
  }

  void check(const RawProposition& p) {
    if (!lexicon_.find_frame(p.frame_id)) {
      throw ReferenceError(p.frame_id, "unknown frame '" + p.frame_id + "' (line " +
                                           std::to_string(p.line) + ")");
    }
    for (const auto& b : p.flat_bindings) {
      if (const auto* ref = std::get_if<EntityRef>(&b.value)) check_entity(ref->id);
    }
    for (const auto& [_, slot] : p.nested_bindings) check_slot(slot);
    for (const auto& a : p.attachments) {
      if (a.flat_target) {
        if (const auto* ref = std::get_if<EntityRef>(&*a.flat_target)) check_entity(ref->id);
      } else {
        check_slot(a.nested);
      }
    }
  }

  Nested build_slot(const RawSlot& slot) {
    if (slot.inline_prop) return Nested{build(*slot.inline_prop), false};
    if (in_progress_.count(slot.ref)) {
      throw CycleError("proposition '" + slot.ref + "' nests itself (line " +
                       std::to_string(slot.line) + ")");
    }
    return Nested{build(*by_id_.at(slot.ref)), true};
  }

  PropositionPtr build(const RawProposition& raw) {
    if (auto it = built_.find(raw.id); it != built_.end()) return it->second;
    in_progress_.insert(raw.id);
    Proposition p;
    p.id = raw.id;
    p.frame.predicate_lemma = raw.predicate;
    p.frame.frame_id = raw.frame_id;
    p.frame.bindings = raw.flat_bindings;
    for (const auto& [role, slot] : raw.nested_bindings) {
      p.frame.bindings.push_back({role, build_slot(slot)});
    }
    p.polarity = raw.polarity;
    p.adverbs = raw.adverbs;
    for (const auto& ra : raw.attachments) {
      Attachment a;
      a.relation = ra.relation;
      a.preposition = ra.preposition;
      if (ra.flat_target) {
        a.target = *ra.flat_target;
      } else {
        a.target = build_slot(ra.nested);
      }
      p.attachments.push_back(std::move(a));
    }
    in_progress_.erase(raw.id);
    auto ptr = make_nested(std::move(p));
    built_.emplace(raw.id, ptr);
    return ptr;
  }

  const Lexicon& lexicon_;
  std::set<std::string> entity_ids_;
  std::map<std::string, int> entity_lines_;
  std::map<std::string, const RawProposition*> by_id_;
  std::map<std::string, PropositionPtr> built_;
  std::set<std::string> in_progress_;
};

// ---------------------------------------------------------------------------
// Serialization

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out + "\"";
}

std::string flat_argument(const Argument& a) {
  if (const auto* e = std::get_if<EntityRef>(&a)) return e->id;
  if (const auto* p = std::get_if<Property>(&a)) return "adj:" + p->adjective;
  if (const auto* t = std::get_if<Text>(&a)) return quote(t->literal);
  return "";
}

void write_proposition(std::ostream& out, const Proposition& p, int indent);

void write_slot(std::ostream& out, const Nested& n, int indent) {
  if (n.by_reference) {
    out << std::string(indent, ' ') << '@' << n.proposition->id << '\n';
  } else {
    write_proposition(out, *n.proposition, indent);
  }
}

void write_proposition(std::ostream& out, const Proposition& p, int indent) {
  out << std::string(indent, ' ') << '[' << p.id << "] " << p.frame.frame_id << ' '
      << p.frame.predicate_lemma << '(';
  bool first = true;
  for (const auto& b : p.frame.bindings) {
    if (std::holds_alternative<Nested>(b.value)) continue;
    if (!first) out << ", ";
    out << b.role << '=' << flat_argument(b.value);
    first = false;
  }
  out << ')';
  if (p.polarity == Polarity::kNegated) out << " polarity=neg";
  for (const auto& a : p.adverbs) out << " adv=" << a.lemma << '@' << to_string(a.position);
  out << '\n';
  const std::string pad(indent + 2, ' ');
  for (const auto& b : p.frame.bindings) {
    if (const auto* n = std::get_if<Nested>(&b.value)) {
      out << pad << "role " << b.role << ":\n";
      write_slot(out, *n, indent + 4);
    }
  }
  for (const auto& a : p.attachments) {
    if (a.relation == AttachmentRelation::kPrepositional) {
      out << pad << "prep " << a.preposition.value_or("") << ": ";
      if (const auto* e = std::get_if<EntityRef>(&a.target)) {
        out << e->id;
      } else if (const auto* pr = std::get_if<Property>(&a.target)) {
        out << "adj:" << pr->adjective;
      } else if (const auto* np = std::get_if<NounPhrase>(&a.target)) {
        std::string joined;
        for (std::size_t i = 0; i < np->nouns.size(); ++i) {
          if (i) joined += " and ";
          joined += np->nouns[i];
        }
        out << quote(joined);
      }
      out << '\n';
    } else {
      out << pad << to_string(a.relation) << ":\n";
      if (const auto* n = std::get_if<Nested>(&a.target)) write_slot(out, *n, indent + 4);
    }
  }
}

// ---------------------------------------------------------------------------
// Validation

class Validator {
 public:
  Validator(const StoryGraph& g, const Lexicon& lexicon) : g_(g), lexicon_(lexicon) {}

  std::vector<Diagnostic> run() {
    std::set<std::string> ids;
    for (const Entity& e : g_.entities) {
      std::string loc = "entity:" + e.id;
      if (!ids.insert(e.id).second) error(loc, "duplicate entity id '" + e.id + "'");
      if (e.head_lemma.empty()) {
        error(loc, "empty head lemma");
      } else if (!lexicon_.find(e.head_lemma, PartOfSpeech::kNoun)) {
        error(loc, "head lemma '" + e.head_lemma + "' is not a lexicon noun");
      }
      if (e.group_of) {
        if (!lexicon_.find(*e.group_of, PartOfSpeech::kNoun)) {
          error(loc, "group member '" + *e.group_of + "' is not a lexicon noun");
        }
        if (e.number != Number::kSingular) error(loc, "collective entity must be singular");
      }
      for (const auto& m : e.fixed_modifiers) {
        if (!lexicon_.find(m, PartOfSpeech::kAdjective)) {
          error(loc, "modifier '" + m + "' is not a lexicon adjective");
        }
      }
    }
    for (std::size_t i = 0; i < g_.timeline.size(); ++i) {
      const Timespan& ts = g_.timeline[i];
      std::string loc = "timespan:" + std::to_string(ts.index);
      if (ts.index != static_cast<int>(i)) {
        error(loc, "non-contiguous timeline");
      }
      if (ts.propositions.empty()) error(loc, "timespan has no propositions");
      for (const Proposition& p : ts.propositions) check(p);
    }
    return std::move(out_);
  }

 private:
  void error(std::string location, std::string message) {
    out_.push_back({Severity::kError, std::move(location), std::move(message)});
  }

  void check_entity(const std::string& loc, const std::string& id) {
    if (!g_.find_entity(id)) error(loc, "unknown entity '" + id + "'");
  }

  void check_nested(const std::string& loc, const Nested& n) {
    if (!n.proposition) {
      error(loc, "empty nested proposition");
      return;
    }
    if (std::find(stack_.begin(), stack_.end(), n.proposition.get()) != stack_.end()) {
      error(loc, "proposition nesting cycle through '" + n.proposition->id + "'");
      return;
    }
    check(*n.proposition);
  }

  void check(const Proposition& p) {
    stack_.push_back(&p);
    std::string loc = "proposition:" + p.id;
    const FrameInstance& f = p.frame;
    if (!lexicon_.find(f.predicate_lemma, PartOfSpeech::kVerb)) {
      error(loc, "predicate '" + f.predicate_lemma + "' is not a lexicon verb");
    }
    const FrameDef* def = lexicon_.find_frame(f.frame_id);
    if (!def) error(loc, "unknown frame '" + f.frame_id + "'");

    std::set<std::string> bound;
    for (const auto& b : f.bindings) {
      if (!bound.insert(b.role).second) error(loc, "role " + b.role + " bound twice");
      if (def && !def->has_role(b.role)) {
        error(loc, "role " + b.role + " is not defined by frame " + def->frame_id);
      }
      if (const auto* ref = std::get_if<EntityRef>(&b.value)) {
        check_entity(loc, ref->id);
      } else if (const auto* prop = std::get_if<Property>(&b.value)) {
        if (!lexicon_.find(prop->adjective, PartOfSpeech::kAdjective)) {
          error(loc, "property '" + prop->adjective + "' is not a lexicon adjective");
        }
      } else if (const auto* n = std::get_if<Nested>(&b.value)) {
        check_nested(loc, *n);
      }
    }
    if (def) {
      for (const auto& m : def->mandatory_roles) {
        if (!bound.count(m.role)) error(loc, "mandatory role " + m.role + " unbound");
      }
    }
    for (const auto& a : p.adverbs) {
      if (!lexicon_.find(a.lemma, PartOfSpeech::kAdverb)) {
        error(loc, "adverb '" + a.lemma + "' is not a lexicon adverb");
      }
    }
    bool complement_seen = false;
    for (const auto& a : p.attachments) {
      bool nested = std::holds_alternative<Nested>(a.target);
      if (a.relation == AttachmentRelation::kPrepositional) {
        if (!a.preposition) {
          error(loc, "prepositional attachment without a preposition");
        } else if (!lexicon_.find(*a.preposition, PartOfSpeech::kPreposition)) {
          error(loc, "unknown preposition '" + *a.preposition + "'");
        }
        if (nested) error(loc, "prepositional attachment cannot target a proposition");
        if (const auto* ref = std::get_if<EntityRef>(&a.target)) check_entity(loc, ref->id);
        if (const auto* np = std::get_if<NounPhrase>(&a.target)) {
          if (np->nouns.empty()) error(loc, "empty noun phrase");
          for (const auto& n : np->nouns) {
            if (!lexicon_.find(n, PartOfSpeech::kNoun)) {
              error(loc, "noun '" + n + "' is not a lexicon noun");
            }
          }
        }
        if (const auto* prop = std::get_if<Property>(&a.target)) {
          if (!lexicon_.find(prop->adjective, PartOfSpeech::kAdjective)) {
            error(loc, "property '" + prop->adjective + "' is not a lexicon adjective");
          }
        }
      } else {
        if (a.preposition) {
          error(loc, std::string(to_string(a.relation)) + " attachment carries a preposition");
        }
        if (!nested) {
          error(loc, std::string(to_string(a.relation)) + " attachment must target a proposition");
        } else {
          check_nested(loc, std::get<Nested>(a.target));
        }
        if (a.relation == AttachmentRelation::kComplement) {
          if (complement_seen) error(loc, "more than one complement attachment");
          complement_seen = true;
          if (def && !def->complement_kind) {
            error(loc, "frame " + def->frame_id + " takes no clausal complement");
          }
          if (def) {
            for (const auto& b : f.bindings) {
              if (def->slot_of(b.role) == ArgSlot::kII) {
                error(loc, "complement attachment conflicts with role " + b.role + " in slot II");
              }
            }
          }
        }
      }
    }
    stack_.pop_back();
  }

  const StoryGraph& g_;
  const Lexicon& lexicon_;
  std::vector<const Proposition*> stack_;
  std::vector<Diagnostic> out_;
};

}  // namespace

bool operator==(const Nested& a, const Nested& b) {
  if (a.by_reference != b.by_reference) return false;
  if (a.proposition == b.proposition) return true;
  if (!a.proposition || !b.proposition) return false;
  return *a.proposition == *b.proposition;
}

bool operator==(const FrameInstance& a, const FrameInstance& b) {
  if (a.predicate_lemma != b.predicate_lemma || a.frame_id != b.frame_id) return false;
  if (a.bindings.size() != b.bindings.size()) return false;
  // Bindings are a role-keyed map; storage order is not significant.
  for (const auto& binding : a.bindings) {
    const Argument* other = b.find(binding.role);
    if (!other || !(*other == binding.value)) return false;
  }
  return true;
}

std::string_view to_string(EntityKind v) {
  switch (v) {
    case EntityKind::kCharacter: return "character";
    case EntityKind::kObject: return "object";
    case EntityKind::kLocation: return "location";
  }
  return "object";
}

std::string_view to_string(AttachmentRelation v) {
  switch (v) {
    case AttachmentRelation::kPurpose: return "purpose";
    case AttachmentRelation::kCause: return "cause";
    case AttachmentRelation::kComplement: return "complement";
    case AttachmentRelation::kPrepositional: return "prep";
  }
  return "prep";
}

const Argument* FrameInstance::find(std::string_view role) const {
  for (const auto& b : bindings) {
    if (b.role == role) return &b.value;
  }
  return nullptr;
}

const Entity* StoryGraph::find_entity(std::string_view id) const {
  for (const auto& e : entities) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

StoryGraph parse_story(std::string_view encoded_text, const Lexicon& lexicon) {
  return StoryParser(lexicon).parse(encoded_text);
}

std::string serialize_story(const StoryGraph& g) {
  std::ostringstream out;
  out << "story " << g.id << '\n';
  out << "title " << quote(g.title) << '\n';
  if (g.original_text) out << "original " << quote(*g.original_text) << '\n';
  out << "\nentities\n";
  for (const Entity& e : g.entities) {
    out << "  " << e.id << ' ' << to_string(e.kind) << ' ' << e.head_lemma;
    if (e.group_of) out << " group_of=" << *e.group_of;
    if (e.number == Number::kPlural) out << " number=pl";
    for (const auto& m : e.fixed_modifiers) out << " mod=" << m;
    out << '\n';
  }
  out << "\ntimeline\n";
  for (const Timespan& ts : g.timeline) {
    out << "  span " << ts.index << '\n';
    for (const Proposition& p : ts.propositions) write_proposition(out, p, 4);
  }
  return out.str();
}

std::vector<Diagnostic> validate_story(const StoryGraph& g, const Lexicon& lexicon) {
  return Validator(g, lexicon).run();
}

std::vector<Proposition> timeline_propositions(const StoryGraph& g) {
  std::vector<Proposition> out;
  for (const Timespan& ts : g.timeline) {
    out.insert(out.end(), ts.propositions.begin(), ts.propositions.end());
  }
  return out;
}

}  // namespace retell
