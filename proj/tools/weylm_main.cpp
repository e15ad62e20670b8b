#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "weylm_commands.hpp"

namespace {

constexpr int kUsageError = 2;

int emit(const weylm::cli::CommandResult& result, const std::string& path) {
  if (path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      std::cerr << "weylm: cannot open '" << path << "' for writing\n";
      return kUsageError;
    }
    file << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace weylm::cli;

  CLI::App app{"Exact Weyl group combinatorics: Bruhat order, conjugacy classes, unique-maximum classes"};
  app.require_subcommand(1);

  std::string type_text;
  std::string format_text = "text";
  std::uint64_t cap = 0;
  bool with_oracle = false;
  std::string suite = "all";
  int jobs = 1;
  std::string out_path;
  std::string u_word;
  std::string v_word;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type", type_text, "Cartan type, e.g. A3, B4, E6")->required();
    cmd->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--cap", cap, "Maximum group order to enumerate (env: WEYLM_CAP)");
    cmd->add_option("--jobs", jobs, "Worker threads for verification suites")->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  auto* roots = app.add_subcommand("roots", "List the positive roots");
  add_common(roots);
  auto* classes = app.add_subcommand("classes", "Table of conjugacy classes");
  add_common(classes);
  auto* wm = app.add_subcommand("wm", "Classes with a unique element of maximal length");
  add_common(wm);
  auto* bruhat = app.add_subcommand("bruhat", "Compare two elements in Bruhat order");
  add_common(bruhat);
  bruhat->add_option("--u", u_word, "First element as a word of 1-based simple indices")->required();
  bruhat->add_option("--v", v_word, "Second element as a word of 1-based simple indices")->required();
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit code 0 iff all checks pass");
  add_common(verify);
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_names()));
  verify->add_flag("--with-oracle", with_oracle, "Include the brute-force differential suite in 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    cfg.type = weylm::parse_cartan_type(type_text);
    cfg.format = parse_format(format_text);
    cfg.cap = cap != 0 ? cap : default_cap();
    cfg.with_oracle = with_oracle;
    cfg.suite = suite;
    cfg.jobs = jobs;
    cfg.out = out_path;

    if (roots->parsed()) return emit(cmd_roots(cfg), cfg.out);
    if (classes->parsed()) return emit(cmd_classes(cfg), cfg.out);
    if (wm->parsed()) return emit(cmd_wm(cfg), cfg.out);
    if (bruhat->parsed()) return emit(cmd_bruhat(cfg, u_word, v_word), cfg.out);
    if (verify->parsed()) return emit(cmd_verify(cfg), cfg.out);
  } catch (const weylm::EnumerationCapExceeded& e) {
    std::cerr << "weylm: " << e.what() << "; raise it with --cap or " << kCapEnvVar << '\n';
    return kUsageError;
  } catch (const weylm::ParseError& e) {
    std::cerr << "weylm: " << e.what() << '\n';
    return kUsageError;
  } catch (const weylm::Error& e) {
    std::cerr << "weylm: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
