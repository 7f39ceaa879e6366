#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "glueform/commands.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const glueform::cli::CommandResult& result) {
  std::cout << result.report;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace glueform::cli;
  CLI::App app{"Exact De Rham forms and truncated cohomology of two-plot diffeological spaces"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "verify plots, witnesses and pullback charts");
  check->add_option("file", file, "space presentation")->required();

  std::optional<std::uint32_t> bound;
  std::vector<std::size_t> degrees;
  auto* coh = app.add_subcommand("cohomology", "truncated De Rham cohomology report");
  coh->add_option("file", file, "space presentation")->required();
  coh->add_option("--bound", bound, "coefficient degree bound D");
  coh->add_option("--degree", degrees, "form degree k (repeatable)")->take_all();

  std::string mu_path;
  std::string nu_path;
  auto* del = app.add_subcommand("delta", "difference morphism and glue verdict");
  del->add_option("file", file, "space presentation")->required();
  del->add_option("--mu", mu_path, "form file on the first plot's domain")->required();
  del->add_option("--nu", nu_path, "form file on the second plot's domain")->required();

  std::size_t samples = 100;
  std::uint64_t seed = 0;
  auto* sample = app.add_subcommand("sample", "falsify symbolic identities at random points");
  sample->add_option("file", file, "space presentation")->required();
  sample->add_option("--samples", samples, "points per identity");
  sample->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  const auto text = read_file(file);
  if (!text) {
    std::cerr << "error: cannot read " << file << '\n';
    return kExitInputError;
  }
  if (*check) return emit(cmd_check(*text));
  if (*coh) return emit(cmd_cohomology(*text, bound, degrees));
  if (*del) {
    const auto mu = read_file(mu_path);
    const auto nu = read_file(nu_path);
    if (!mu || !nu) {
      std::cerr << "error: cannot read " << (!mu ? mu_path : nu_path) << '\n';
      return kExitInputError;
    }
    return emit(cmd_delta(*text, *mu, *nu));
  }
  return emit(cmd_sample(*text, samples, seed));
}
