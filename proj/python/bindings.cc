#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "retell/error.h"
#include "retell/eval.h"
#include "retell/lexicon.h"
#include "retell/pipeline.h"
#include "retell/story_graph.h"
#include "retell/style.h"

namespace py = pybind11;
using namespace retell;

namespace {

VoiceModel resolve_voice(const std::string& spec) {
  if (auto v = VoiceModel::builtin(spec)) return *v;
  return VoiceModel::load(spec);
}

std::string inflect_form(const std::string& lemma, const std::string& form) {
  const Lexicon& lex = Lexicon::builtin();
  if (form == "past") return inflect(lex.lookup(lemma, PartOfSpeech::kVerb), {Tense::kPast, {}});
  if (form == "past_plural") {
    return inflect(lex.lookup(lemma, PartOfSpeech::kVerb), {Tense::kPast, Number::kPlural});
  }
  if (form == "plural") return inflect(lex.lookup(lemma, PartOfSpeech::kNoun), {{}, Number::kPlural});
  throw py::value_error("form must be 'past', 'past_plural' or 'plural'");
}

}  // namespace

PYBIND11_MODULE(_retell, m) {
  m.doc() = "Story retelling: story graphs to styled text, plus string-similarity metrics.";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SyntaxError>(m, "StorySyntaxError", base.ptr());
  py::register_exception<ReferenceError>(m, "ReferenceError", base.ptr());
  py::register_exception<NotFoundError>(m, "NotFoundError", base.ptr());
  py::register_exception<BuildError>(m, "BuildError", base.ptr());

  py::class_<StoryGraph>(m, "Story")
      .def_readonly("id", &StoryGraph::id)
      .def_readonly("title", &StoryGraph::title)
      .def("__len__", [](const StoryGraph& g) { return g.timeline.size(); })
      .def("serialize", [](const StoryGraph& g) { return serialize_story(g); })
      .def("__eq__", [](const StoryGraph& a, const StoryGraph& b) { return a == b; });

  m.def("parse_story", [](const std::string& text) { return parse_story(text); }, py::arg("text"));

  // (severity, location, message) triples.
  m.def(
      "validate",
      [](const StoryGraph& g) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& d : validate_story(g)) {
          out.emplace_back(d.severity == Severity::kError ? "error" : "warning", d.location,
                           d.message);
        }
        return out;
      },
      py::arg("story"));

  m.def(
      "generate",
      [](const StoryGraph& g, const std::string& voice, std::uint64_t seed) {
        Generation result = generate(g, resolve_voice(voice), seed);
        py::list decisions;
        for (const auto& d : result.decisions) {
          decisions.append(py::make_tuple(d.sentence_index, std::string(to_string(d.param)),
                                          format_path(d.site), d.payload));
        }
        py::dict out;
        out["text"] = result.text;
        out["dsynts"] = serialize(result.document);
        out["decisions"] = decisions;
        return out;
      },
      py::arg("story"), py::arg("voice") = "NEUTRAL", py::arg("seed") = 0);

  m.def("voices", &VoiceModel::builtin_names);

  m.def("tokenize", &tokenize_and_stem, py::arg("text"), py::arg("stem") = true);
  m.def(
      "levenshtein",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return levenshtein(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "bleu",
      [](const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
        return bleu(candidate, reference);
      },
      py::arg("candidate"), py::arg("reference"));
  m.def(
      "evaluate",
      [](const std::string& candidate, const std::string& reference, bool stem) {
        auto c = tokenize_and_stem(candidate, stem);
        auto r = tokenize_and_stem(reference, stem);
        return py::make_tuple(levenshtein(c, r), bleu(c, r));
      },
      py::arg("candidate"), py::arg("reference"), py::arg("stem") = true);

  m.def("inflect", &inflect_form, py::arg("lemma"), py::arg("form"));
}
