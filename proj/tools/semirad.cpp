// semirad: command-line front end.
//
//   semirad <command> <instance-file> [submodule] [options]
//   semirad verify [--spec file] [--seed k] [options]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "semirad/cli.hpp"

namespace {

using namespace semirad;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int emit(const cli::CommandResult& r, const std::string& out_path) {
  if (!r.error.empty()) std::cerr << "semirad: " << r.error << "\n";
  if (r.output.empty()) return r.exit_code;
  if (out_path.empty()) {
    std::cout << r.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "semirad: cannot write " << out_path << "\n";
      return cli::kExitInputError;
    }
    out << r.output;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiprime submodules and radicals over finite commutative rings"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  Bounds bounds;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", out_path, "write the report to a file instead of stdout");
    sub->add_option("--element-bound", bounds.element_bound, "largest ambient module to enumerate");
    sub->add_option("--lattice-bound", bounds.lattice_bound, "largest module whose submodule lattice is enumerated");
  };

  std::string instance_path, target;
  for (const auto& name : cli::instance_commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("instance", instance_path, "instance file")->required();
    sub->add_option("submodule", target, "name of a submodule declared in the instance");
    common(sub);
  }

  std::string spec_path;
  std::optional<std::uint64_t> seed;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "certify the theorems over a generated corpus");
  verify->add_option("--spec", spec_path, "corpus spec file (default: built-in corpus)");
  verify->add_option("--seed", seed, "override the corpus seed");
  verify->add_flag("--no-timing", no_timing, "omit wall-clock time from the report");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }

  const auto fmt = format == "structured" ? cli::Format::Structured : cli::Format::Text;
  auto* chosen = app.get_subcommands().front();

  if (chosen == verify) {
    CorpusSpec spec = default_corpus_spec();
    if (!spec_path.empty()) {
      std::string text;
      if (!read_file(spec_path, text)) {
        std::cerr << "semirad: cannot read " << spec_path << "\n";
        return cli::kExitInputError;
      }
      try {
        spec = parse_corpus_spec(text);
      } catch (const ParseError& e) {
        std::cerr << "semirad: " << spec_path << ": " << e.what() << "\n";
        return cli::kExitInputError;
      }
    }
    if (seed) spec.seed = *seed;
    if (verify->count("--element-bound")) spec.element_bound = bounds.element_bound;
    if (verify->count("--lattice-bound")) spec.lattice_bound = bounds.lattice_bound;
    return emit(cli::run_verify(spec, fmt, !no_timing), out_path);
  }

  std::string text;
  if (!read_file(instance_path, text)) {
    std::cerr << "semirad: cannot read " << instance_path << "\n";
    return cli::kExitInputError;
  }
  InstanceFile instance;
  try {
    instance = parse_instance(text);
  } catch (const ParseError& e) {
    std::cerr << "semirad: " << instance_path << ": " << e.what() << "\n";
    return cli::kExitInputError;
  }
  return emit(cli::run_command(instance, {chosen->get_name(), target, fmt, bounds}), out_path);
}
