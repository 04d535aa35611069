#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ccplus/dsl/run.hpp"
#include "ccplus/error.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ccplus::Error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ccplus::dsl;

  CLI::App app{"Query causal theories, C+ action descriptions and ADL descriptions"};
  std::string path;
  std::string query_name;
  std::string format_name = "text";
  std::string method_name;
  std::optional<std::size_t> limit;
  std::optional<std::string> eliminate;
  std::size_t max_steps = 10;
  bool stats = false;

  app.add_option("file", path, "Source file ('-' for stdin)")->required();
  app.add_option("-q,--query", query_name, "Query to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("-f,--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "records", "dot"}));
  app.add_option("-n,--limit", limit, "Report at most N results");
  app.add_option("-e,--eliminate", eliminate, "Constant to eliminate (default: all non-Boolean constants)");
  app.add_option("-m,--method", method_name, "Elimination method")
      ->check(CLI::IsMember({"general", "definite"}));
  app.add_option("--max-steps", max_steps, "Longest plan considered");
  app.add_flag("--stats", stats, "Report search counters and wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  QuerySpec query;
  query.command = *command_from_name(query_name);
  query.limit = limit;
  query.eliminate = eliminate;
  query.max_steps = max_steps;
  if (method_name == "general") query.method = ccplus::EliminationMethod::kGeneral;
  if (method_name == "definite") query.method = ccplus::EliminationMethod::kDefinite;
  const Format format = format_name == "records" ? Format::kRecords
                        : format_name == "dot"   ? Format::kDot
                                                 : Format::kText;

  try {
    std::string text;
    if (path == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      text = read_file(path);
    }
    Report report = run(expand_schemas(parse(text)), query);
    std::ostringstream out;
    emit(report, format, out, stats && format == Format::kRecords);
    std::cout << out.str();
    if (stats && format != Format::kRecords) {
      std::cerr << "decisions " << report.stats.decisions << ", propagations " << report.stats.propagations
                << ", conflicts " << report.stats.conflicts << ", models " << report.stats.models_found
                << ", " << report.seconds << " s\n";
    }
  } catch (const ccplus::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
