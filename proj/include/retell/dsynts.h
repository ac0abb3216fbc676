#pragma once

// Deep-syntactic dependency trees: lexeme-labelled nodes, labelled arcs, and
// grammatical features. Trees are plain values; attach() returns a new
// parent and never touches the child.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retell/diagnostic.h"
#include "retell/grammar.h"

namespace retell {

enum class NodeClass { kCommonNoun, kVerb, kAdjective, kAdverb, kPreposition, kFunctionWord };
enum class Relation { kRoot, kI, kII, kIII, kAttr, kAppend };

std::string_view to_string(NodeClass v);
std::string_view to_string(Relation v);

struct Features {
  std::optional<Tense> tense;
  std::optional<Number> number;
  std::optional<Article> article;
  std::optional<Polarity> polarity;
  std::optional<Person> person;
  std::optional<Punct> punct;
  std::optional<Position> position;

  bool empty() const;
  friend bool operator==(const Features&, const Features&) = default;
};

struct DSyntNode {
  std::string lexeme;
  NodeClass cls = NodeClass::kFunctionWord;
  Relation relation = Relation::kRoot;
  Features features;
  std::vector<DSyntNode> children;

  // First child carrying the relation, or nullptr.
  const DSyntNode* child(Relation r) const;
  std::size_t count(Relation r) const;

  friend bool operator==(const DSyntNode&, const DSyntNode&) = default;
};

struct Document {
  std::vector<DSyntNode> sentences;
  friend bool operator==(const Document&, const Document&) = default;
};

// Path of child indices from a sentence root.
using NodePath = std::vector<std::size_t>;

DSyntNode make_node(std::string lexeme, NodeClass cls, Features features = {});

// Appends child under relation. Throws ClassError when the relation is not
// allowed under parent's class and RelationConflictError for a second
// I/II/III.
DSyntNode attach(DSyntNode parent, DSyntNode child, Relation relation);

// Empty iff every node invariant holds recursively. The root must be a verb
// with relation ROOT.
std::vector<Diagnostic> validate_tree(const DSyntNode& root);

// Deterministic markup, features emitted in fixed key order.
std::string serialize(const Document& doc);
std::string serialize_sentence(const DSyntNode& root);

const DSyntNode* node_at(const DSyntNode& root, const NodePath& path);
DSyntNode* node_at(DSyntNode& root, const NodePath& path);

std::string format_path(const NodePath& path);

}  // namespace retell
