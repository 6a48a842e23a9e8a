#include "f2j/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "f2j/json_io.hpp"
#include "f2j/names.hpp"
#include "f2j/pipeline.hpp"

namespace f2j::cli {
namespace {

namespace fs = std::filesystem;

bool read_file(const std::string& path, std::string& text, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open " + path;
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

bool write_file(const fs::path& path, const std::string& text, std::string& error) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    error = "cannot write " + path.string();
    return false;
  }
  out << text;
  return out.good();
}

// Two-column config lines: <NAME> <value>; '#' starts a comment.
bool parse_two_column(const std::string& text, std::map<std::string, std::string>& into,
                      std::string& error) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string key, value, extra;
    if (!(fields >> key)) continue;  // blank line
    if (!(fields >> value) || (fields >> extra)) {
      error = "line " + std::to_string(line_no) + ": expected two columns";
      return false;
    }
    into[to_upper(key)] = value;
  }
  return true;
}

struct EmitSet {
  bool kdm = false, primitives = false, platform = false, oo = false;
  bool java = false, metrics = false, flowgraph = false;
};

bool stage_requested(EmitSet& set, const std::string& name) {
  if (name == "kdm") return set.kdm = true;
  if (name == "primitives") return set.primitives = true;
  if (name == "platform") return set.platform = true;
  if (name == "oo") return set.oo = true;
  if (name == "java") return set.java = true;
  if (name == "metrics") return set.metrics = true;
  if (name == "flowgraph") return set.flowgraph = true;
  return false;
}

std::string artifact_form_name(const PipelineArtifacts& a) {
  if (a.primitives) return a.primitives->form_name;
  if (a.code_model) return a.code_model->form_name;
  if (a.platform) return a.platform->form_name;
  if (a.oo) return a.oo->form_name;
  if (a.bundle) return a.bundle->name;
  return "FORM";
}

// Writes the requested artifacts of one form below out_dir; returns false on
// an I/O failure (reported in `error`).
bool write_outputs(const PipelineArtifacts& a, const EmitSet& emit, const fs::path& out_dir,
                   FlowFormat flow_format, std::ostream& out, std::string& error) {
  const std::string form = artifact_form_name(a);
  const fs::path form_dir = out_dir / form;
  int written = 0;

  auto dump = [&](bool wanted, const char* file, const std::string& text) {
    if (!wanted) return true;
    if (!write_file(form_dir / file, text, error)) return false;
    ++written;
    return true;
  };

  if (emit.kdm && a.code_model && !dump(true, "kdm.json", to_json(*a.code_model))) return false;
  if (emit.primitives && a.primitives &&
      !dump(true, "primitives.json", to_json(*a.primitives)))
    return false;
  if (emit.platform && a.platform && !dump(true, "platform.json", to_json(*a.platform)))
    return false;
  if (emit.oo && a.oo && !dump(true, "oo.json", to_json(*a.oo))) return false;
  if (emit.metrics && a.metrics) {
    if (!dump(true, "metrics.json", to_json(*a.metrics))) return false;
    if (!dump(true, "metrics.txt", a.metrics->render_table())) return false;
  }
  if (emit.java && a.files) {
    for (const auto& f : a.files->files) {
      if (!write_file(out_dir / f.path, f.content, error)) return false;
      ++written;
    }
  }
  if (emit.flowgraph) {
    const char* ext = flow_format == FlowFormat::Cypher ? ".cypher" : ".dot";
    for (const auto& [stem, graph] : a.flows) {
      if (!write_file(form_dir / "flows" / (stem + ext), emit_flow(graph, flow_format), error))
        return false;
      ++written;
    }
  }
  out << form << ": " << written << " file(s)\n";
  return true;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"forms2java - migrates RAD form descriptors with PL/SQL triggers to Java MVC sources"};
  app.get_formatter()->column_width(34);

  std::vector<std::string> inputs;
  std::string out_dir;
  std::vector<std::string> emit_names;
  std::string skeleton_dir, builtins_file, types_file;
  std::string flow_format_name = "cypher";
  std::string from_stage, state_dir;
  bool strict = false;

  app.add_option("--input", inputs, "Input form descriptor file(s)")->delimiter(',');
  app.add_option("--out", out_dir, "Output directory")->required();
  app.add_option("--emit", emit_names,
                 "Artifacts to write: kdm,primitives,platform,oo,java,metrics,flowgraph "
                 "(default: java)")
      ->delimiter(',');
  app.add_option("--skeletons", skeleton_dir,
                 "Directory of .java skeletons with // BODY:<method> markers");
  app.add_option("--builtins", builtins_file,
                 "Two-column file mapping PL/SQL builtins to Java calls");
  app.add_option("--types", types_file, "Two-column file overriding PL/SQL-to-Java type mapping");
  app.add_option("--flow-format,--format", flow_format_name, "Flow graph format: cypher|dot");
  app.add_flag("--strict", strict, "Treat warnings as errors for the exit status");
  app.add_option("--from", from_stage,
                 "Resume the chain at a stage (kdm|primitives|platform|oo|java) from --state");
  app.add_option("--state", state_dir, "Directory holding the JSON models of a previous run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  EmitSet emit;
  if (emit_names.empty()) emit_names.push_back("java");
  for (const auto& name : emit_names) {
    if (!stage_requested(emit, name)) {
      err << "error: unknown emit stage '" << name << "'\n";
      return 2;
    }
  }

  FlowFormat flow_format;
  if (flow_format_name == "cypher") {
    flow_format = FlowFormat::Cypher;
  } else if (flow_format_name == "dot") {
    flow_format = FlowFormat::Dot;
  } else {
    err << "error: unknown flow format '" << flow_format_name << "'\n";
    return 2;
  }

  PipelineConfig config;
  config.flow_format = flow_format;
  config.strict = strict;
  std::string io_error;

  if (!builtins_file.empty()) {
    std::string text;
    if (!read_file(builtins_file, text, io_error) ||
        !parse_two_column(text, config.oo.builtin_map, io_error)) {
      err << "error: builtins file: " << io_error << "\n";
      return 2;
    }
  }
  if (!types_file.empty()) {
    std::string text;
    if (!read_file(types_file, text, io_error) ||
        !parse_two_column(text, config.oo.types.overrides, io_error)) {
      err << "error: types file: " << io_error << "\n";
      return 2;
    }
  }
  if (!skeleton_dir.empty()) {
    std::error_code ec;
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(skeleton_dir, ec))
      if (entry.path().extension() == ".java") paths.push_back(entry.path());
    if (ec) {
      err << "error: cannot read skeleton directory " << skeleton_dir << "\n";
      return 2;
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      Skeleton s;
      s.class_name = p.stem().string();
      if (!read_file(p.string(), s.content, io_error)) {
        err << "error: " << io_error << "\n";
        return 2;
      }
      config.skeletons.push_back(std::move(s));
    }
  }

  std::optional<Stage> resume_from;
  if (!from_stage.empty()) {
    resume_from = stage_from_name(from_stage);
    if (!resume_from || *resume_from == Stage::Forms) {
      err << "error: --from expects kdm|primitives|platform|oo|java\n";
      return 2;
    }
    if (state_dir.empty()) {
      err << "error: --from requires --state\n";
      return 2;
    }
    if (!inputs.empty()) {
      err << "error: --from and --input are mutually exclusive\n";
      return 2;
    }
  } else if (!state_dir.empty()) {
    err << "error: --state requires --from\n";
    return 2;
  } else if (inputs.empty()) {
    err << "error: at least one --input is required\n";
    return 2;
  }

  std::vector<PipelineArtifacts> results;

  if (resume_from) {
    PipelineArtifacts a;
    auto load = [&](const char* file, auto parse, auto member) -> bool {
      std::string text, ignored;
      fs::path path = fs::path(state_dir) / file;
      if (!fs::exists(path)) return true;  // optional: resume uses what exists
      if (!read_file(path.string(), text, ignored)) return true;
      try {
        a.*member = parse(text);
      } catch (const std::exception& e) {
        err << "error: " << path.string() << ": " << e.what() << "\n";
        return false;
      }
      return true;
    };
    if (!load("kdm.json", code_model_from_json, &PipelineArtifacts::code_model)) return 2;
    if (!load("primitives.json", primitives_from_json, &PipelineArtifacts::primitives)) return 2;
    if (!load("platform.json", platform_from_json, &PipelineArtifacts::platform)) return 2;
    if (!load("oo.json", oo_from_json, &PipelineArtifacts::oo)) return 2;
    resume_pipeline(a, *resume_from, config);
    results.push_back(std::move(a));
  } else {
    for (const auto& input : inputs) {
      std::string text;
      if (!read_file(input, text, io_error)) {
        err << "error: " << io_error << "\n";
        return 2;
      }
      results.push_back(run_pipeline(text, fs::path(input).filename().string(), config));
    }
  }

  bool any_error = false;
  bool any_warning = false;
  for (const auto& a : results) {
    if (!write_outputs(a, emit, out_dir, flow_format, out, io_error)) {
      err << "error: " << io_error << "\n";
      return 2;
    }
    for (const auto& d : a.diags.items()) {
      err << d.render() << "\n";
      if (d.severity == Severity::Error) any_error = true;
      if (d.severity == Severity::Warning) any_warning = true;
    }
  }
  if (any_error || (strict && any_warning)) return 1;
  return 0;
}

}  // namespace f2j::cli
