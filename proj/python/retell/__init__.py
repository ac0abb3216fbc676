"""Story graphs to styled text, and the metrics used to score it."""

from ._retell import (
    BuildError,
    Error,
    NotFoundError,
    ReferenceError,
    Story,
    StorySyntaxError,
    bleu,
    evaluate,
    generate,
    inflect,
    levenshtein,
    parse_story,
    tokenize,
    validate,
    voices,
)


def load_story(path):
    with open(path, encoding="utf-8") as f:
        return parse_story(f.read())


__all__ = [
    "BuildError",
    "Error",
    "NotFoundError",
    "ReferenceError",
    "Story",
    "StorySyntaxError",
    "bleu",
    "evaluate",
    "generate",
    "inflect",
    "levenshtein",
    "load_story",
    "parse_story",
    "tokenize",
    "validate",
    "voices",
]
