#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "hfitt/job.hpp"

namespace {

bool read_all(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher Fitting ideals over polynomial rings and their quotients"};
  app.set_version_flag("--version", std::string("hfitt ") + hfitt::kVersion);
  app.require_subcommand(1);

  std::string job_path, output_path, format = "json";
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  bool timing = false;

  CLI::App* run = app.add_subcommand("run", "Run a job document and print its report");
  run->add_option("job", job_path, "Job file, or - for stdin")->required();
  run->add_option("--output,-o", output_path, "Write the report here instead of stdout");
  auto* budget_opt = run->add_option("--budget", budget, "Groebner step budget per computation");
  run->add_option("--seed", seed, "Seed recorded in the report");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  run->add_flag("--timing", timing, "Include per-task wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : hfitt::exit_code::input;
  }

  std::string text;
  if (!read_all(job_path, text)) {
    std::cerr << "hfitt: cannot read " << job_path << '\n';
    return hfitt::exit_code::input;
  }

  hfitt::JobOptions options;
  if (*budget_opt) options.budget = budget;
  options.seed = seed;
  options.timing = timing;
  options.format = format == "text" ? hfitt::ReportFormat::Text : hfitt::ReportFormat::Json;

  hfitt::JobResult result = hfitt::run_job(text, options);
  if (output_path.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "hfitt: cannot write " << output_path << '\n';
      return hfitt::exit_code::input;
    }
    out << result.report;
  }
  if (result.exit_code != hfitt::exit_code::ok) std::cerr << "hfitt: exit " << result.exit_code << '\n';
  return result.exit_code;
}
