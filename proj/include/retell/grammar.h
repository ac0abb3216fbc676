#pragma once

// Grammatical feature values shared by the story model, the lexicon and the
// dependency trees.

#include <optional>
#include <string_view>

namespace retell {

enum class Number { kSingular, kPlural };
enum class Tense { kPast };
enum class Polarity { kAffirmative, kNegated };
enum class Article { kDefinite, kIndefinite, kNone };
enum class Person { kThird };
enum class Punct { kPeriod, kExclaim, kQuestion, kComma };
enum class Position { kPre, kPost };

std::string_view to_string(Number v);
std::string_view to_string(Tense v);
std::string_view to_string(Polarity v);
std::string_view to_string(Article v);
std::string_view to_string(Person v);
std::string_view to_string(Punct v);
std::string_view to_string(Position v);

std::optional<Number> number_from_string(std::string_view s);
std::optional<Position> position_from_string(std::string_view s);

}  // namespace retell
