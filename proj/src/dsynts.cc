#include "retell/dsynts.h"

#include <sstream>

#include "retell/error.h"

namespace retell {
namespace {

bool relation_allowed(NodeClass parent, Relation r) {
  switch (r) {
    case Relation::kRoot:
      return false;
    case Relation::kI:
    case Relation::kIII:
      return parent == NodeClass::kVerb;
    case Relation::kII:
      // Objects of verbs, prepositions, subordinators and adjective complements.
      return parent == NodeClass::kVerb || parent == NodeClass::kPreposition ||
             parent == NodeClass::kFunctionWord || parent == NodeClass::kAdjective;
    case Relation::kAttr:
      return parent == NodeClass::kCommonNoun || parent == NodeClass::kVerb ||
             parent == NodeClass::kAdjective;
    case Relation::kAppend:
      return parent == NodeClass::kVerb || parent == NodeClass::kCommonNoun ||
             parent == NodeClass::kAdjective;
  }
  return false;
}

bool is_argument(Relation r) {
  return r == Relation::kI || r == Relation::kII || r == Relation::kIII;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_node(std::ostream& out, const DSyntNode& n, int depth) {
  const std::string pad(2 * depth, ' ');
  out << pad << "<node lexeme=\"" << escape(n.lexeme) << "\" class=\"" << to_string(n.cls)
      << "\" rel=\"" << to_string(n.relation) << '"';
  // Alphabetical feature keys.
  const Features& f = n.features;
  if (f.article) out << " article=\"" << to_string(*f.article) << '"';
  if (f.number) out << " number=\"" << to_string(*f.number) << '"';
  if (f.person) out << " person=\"" << to_string(*f.person) << '"';
  if (f.polarity) out << " polarity=\"" << to_string(*f.polarity) << '"';
  if (f.position) out << " position=\"" << to_string(*f.position) << '"';
  if (f.punct) out << " punct=\"" << to_string(*f.punct) << '"';
  if (f.tense) out << " tense=\"" << to_string(*f.tense) << '"';
  if (n.children.empty()) {
    out << "/>\n";
    return;
  }
  out << ">\n";
  for (const auto& c : n.children) write_node(out, c, depth + 1);
  out << pad << "</node>\n";
}

void check_node(const DSyntNode& n, const NodePath& path, bool is_root,
                std::vector<Diagnostic>& out) {
  auto diag = [&](std::string message) {
    out.push_back({Severity::kError, format_path(path), std::move(message)});
  };
  if (n.lexeme.empty()) diag("empty lexeme");
  if (is_root) {
    if (n.cls != NodeClass::kVerb) diag("sentence root must be a verb");
    if (n.relation != Relation::kRoot) diag("sentence root must carry relation ROOT");
    if (n.features.punct == Punct::kComma) diag("comma is not a terminal punctuation");
  } else {
    if (n.relation == Relation::kRoot) diag("ROOT relation below the sentence root");
    if (n.features.punct && n.features.punct != Punct::kComma) {
      diag("terminal punctuation below the sentence root");
    }
    if (n.cls == NodeClass::kVerb && n.relation != Relation::kII &&
        n.relation != Relation::kAppend) {
      diag("embedded clause must hang from II or APPEND");
    }
  }
  if (n.features.article && n.cls != NodeClass::kCommonNoun) {
    diag("article feature on a " + std::string(to_string(n.cls)));
  }
  if (n.features.tense && n.cls != NodeClass::kVerb) {
    diag("tense feature on a " + std::string(to_string(n.cls)));
  }
  if (n.cls == NodeClass::kPreposition && n.count(Relation::kII) == 0) {
    diag("preposition '" + n.lexeme + "' has no object");
  }
  for (Relation r : {Relation::kI, Relation::kII, Relation::kIII}) {
    if (n.count(r) > 1) {
      diag("more than one " + std::string(to_string(r)) + " under '" + n.lexeme + "'");
    }
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    const DSyntNode& c = n.children[i];
    NodePath child_path = path;
    child_path.push_back(i);
    if (c.relation != Relation::kRoot && !relation_allowed(n.cls, c.relation)) {
      out.push_back({Severity::kError, format_path(child_path),
                     std::string(to_string(c.relation)) + " not allowed under " +
                         std::string(to_string(n.cls)) + " '" + n.lexeme + "'"});
    }
    check_node(c, child_path, false, out);
  }
}

}  // namespace

std::string_view to_string(NodeClass v) {
  switch (v) {
    case NodeClass::kCommonNoun: return "common_noun";
    case NodeClass::kVerb: return "verb";
    case NodeClass::kAdjective: return "adjective";
    case NodeClass::kAdverb: return "adverb";
    case NodeClass::kPreposition: return "preposition";
    case NodeClass::kFunctionWord: return "function_word";
  }
  return "function_word";
}

std::string_view to_string(Relation v) {
  switch (v) {
    case Relation::kRoot: return "ROOT";
    case Relation::kI: return "I";
    case Relation::kII: return "II";
    case Relation::kIII: return "III";
    case Relation::kAttr: return "ATTR";
    case Relation::kAppend: return "APPEND";
  }
  return "ROOT";
}

bool Features::empty() const { return *this == Features{}; }

const DSyntNode* DSyntNode::child(Relation r) const {
  for (const auto& c : children) {
    if (c.relation == r) return &c;
  }
  return nullptr;
}

std::size_t DSyntNode::count(Relation r) const {
  std::size_t n = 0;
  for (const auto& c : children) n += c.relation == r;
  return n;
}

DSyntNode make_node(std::string lexeme, NodeClass cls, Features features) {
  DSyntNode n;
  n.lexeme = std::move(lexeme);
  n.cls = cls;
  n.features = features;
  return n;
}

DSyntNode attach(DSyntNode parent, DSyntNode child, Relation relation) {
  if (!relation_allowed(parent.cls, relation)) {
    throw ClassError(std::string(to_string(relation)) + " not allowed under " +
                     std::string(to_string(parent.cls)) + " '" + parent.lexeme + "'");
  }
  if (is_argument(relation) && parent.count(relation) > 0) {
    throw RelationConflictError("'" + parent.lexeme + "' already has a " +
                                std::string(to_string(relation)) + " dependent");
  }
  child.relation = relation;
  parent.children.push_back(std::move(child));
  return parent;
}

std::vector<Diagnostic> validate_tree(const DSyntNode& root) {
  std::vector<Diagnostic> out;
  check_node(root, {}, true, out);
  return out;
}

std::string serialize_sentence(const DSyntNode& root) {
  std::ostringstream out;
  write_node(out, root, 0);
  return out.str();
}

std::string serialize(const Document& doc) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<dsynts-document sentences=\"" << doc.sentences.size() << "\">\n";
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    out << "  <dsynts id=\"s" << i + 1 << "\">\n";
    std::istringstream body(serialize_sentence(doc.sentences[i]));
    for (std::string line; std::getline(body, line);) out << "    " << line << '\n';
    out << "  </dsynts>\n";
  }
  out << "</dsynts-document>\n";
  return out.str();
}

const DSyntNode* node_at(const DSyntNode& root, const NodePath& path) {
  const DSyntNode* n = &root;
  for (std::size_t i : path) {
    if (i >= n->children.size()) return nullptr;
    n = &n->children[i];
  }
  return n;
}

DSyntNode* node_at(DSyntNode& root, const NodePath& path) {
  DSyntNode* n = &root;
  for (std::size_t i : path) {
    if (i >= n->children.size()) return nullptr;
    n = &n->children[i];
  }
  return n;
}

std::string format_path(const NodePath& path) {
  std::string out = "/";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(path[i]);
  }
  return out;
}

}  // namespace retell
