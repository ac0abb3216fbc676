#include "retell/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "retell/dsynts.h"
#include "retell/error.h"
#include "retell/eval.h"
#include "retell/pipeline.h"
#include "retell/story_graph.h"
#include "retell/style.h"

namespace retell::cli {
namespace {

struct IoError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

std::string trim_text(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

StoryGraph load_story(const std::string& path) {
  try {
    return parse_story(read_file(path));
  } catch (const SyntaxError& e) {
    throw IoError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                  ": " + e.what());
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    throw IoError(path + ": " + e.what());
  }
}

VoiceModel resolve_voice(const std::string& spec) {
  if (auto v = VoiceModel::builtin(spec)) return *v;
  try {
    return VoiceModel::load(spec);
  } catch (const SyntaxError& e) {
    throw IoError(spec + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                  ": " + e.what());
  } catch (const Error&) {
    throw IoError("unknown voice '" + spec + "' (not a built-in and not a readable file)");
  }
}

// Prints diagnostics; true when the story has errors.
bool report_diagnostics(const StoryGraph& g, std::ostream& err) {
  auto diags = validate_story(g);
  for (const auto& d : diags) err << format_diagnostic(d) << '\n';
  return has_errors(diags);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Retell stories from timeline graphs in different voices", "retell"};
  app.require_subcommand(1);

  std::string story_path;
  auto* validate = app.add_subcommand("validate", "Check a story file");
  validate->add_option("story", story_path, "Story file")->required();

  std::string voice_spec = "NEUTRAL";
  std::uint64_t seed = 0;
  bool emit_dsynts = false;
  bool trace = false;
  std::string output_path;
  auto* gen = app.add_subcommand("generate", "Realize a story in a voice");
  gen->add_option("story", story_path, "Story file")->required();
  gen->add_option("--voice", voice_spec, "Built-in voice name or voice model file");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_flag("--emit-dsynts", emit_dsynts, "Also print the dependency trees");
  gen->add_option("-o,--output", output_path, "Write text here instead of stdout");
  gen->add_flag("--trace", trace, "Print style decisions to stderr");

  std::vector<std::string> candidates;
  std::vector<std::string> references;
  std::vector<std::string> labels;
  bool no_stem = false;
  std::string json_path;
  auto* ev = app.add_subcommand("eval", "Score candidate texts against references");
  ev->add_option("--candidate", candidates, "Candidate text file (repeatable)")->required();
  ev->add_option("--reference", references, "Reference text file (repeatable)")->required();
  ev->add_option("--label", labels, "Row label (repeatable)");
  ev->add_flag("--no-stem", no_stem, "Compare unstemmed tokens");
  ev->add_option("--json", json_path, "Also write the report as JSON");

  std::string reference_path;
  auto* pipe = app.add_subcommand("pipeline", "Generate neutrally and score against a reference");
  pipe->add_option("story", story_path, "Story file")->required();
  pipe->add_option("--reference", reference_path, "Reference text file")->required();
  pipe->add_flag("--no-stem", no_stem, "Compare unstemmed tokens");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "retell: " << e.what() << '\n';
    return kExitIo;
  }

  try {
    if (*validate) {
      StoryGraph g = load_story(story_path);
      if (report_diagnostics(g, err)) return kExitValidation;
      out << story_path << ": ok\n";
      return kExitOk;
    }

    if (*gen) {
      StoryGraph g = load_story(story_path);
      VoiceModel voice = resolve_voice(voice_spec);
      if (report_diagnostics(g, err)) return kExitValidation;
      Generation result = generate(g, voice, seed);
      std::string text = result.text + "\n";
      if (emit_dsynts) text += serialize(result.document);
      if (output_path.empty()) {
        out << text;
      } else {
        write_file(output_path, text);
      }
      if (trace) {
        for (const auto& d : result.decisions) {
          err << "s" << d.sentence_index + 1 << ' ' << to_string(d.param) << ' '
              << format_path(d.site) << ' ' << d.payload << '\n';
        }
      }
      return kExitOk;
    }

    if (*ev) {
      if (candidates.size() != references.size()) {
        err << "retell: --candidate and --reference must be given the same number of times\n";
        return kExitIo;
      }
      if (!labels.empty() && labels.size() != candidates.size()) {
        err << "retell: --label must be given once per pair or not at all\n";
        return kExitIo;
      }
      std::vector<EvalPair> pairs;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        pairs.push_back({trim_text(read_file(candidates[i])), trim_text(read_file(references[i])),
                         labels.empty() ? candidates[i] : labels[i]});
      }
      EvalReport report = corpus_report(pairs, !no_stem);
      out << format_report(report);
      if (!json_path.empty()) write_file(json_path, report_to_json(report));
      return kExitOk;
    }

    if (*pipe) {
      StoryGraph g = load_story(story_path);
      if (report_diagnostics(g, err)) return kExitValidation;
      std::string reference = trim_text(read_file(reference_path));
      Generation result = generate(g, *VoiceModel::builtin("NEUTRAL"));
      std::vector<EvalPair> pairs{{result.text, reference, g.id.empty() ? story_path : g.id}};
      out << result.text << '\n' << format_report(corpus_report(pairs, !no_stem));
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "retell: " << e.what() << '\n';
    return kExitIo;
  } catch (const BuildError& e) {
    err << "retell: proposition " << e.proposition_id() << ": " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "retell: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace retell::cli
