#include "sphorb/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
  CLI::App app{"Weyl group combinatorics of spherical conjugacy classes"};
  app.require_subcommand(1);

  sphorb::cli::CommandRequest req;
  std::string format, pi, word, s, seed;

  auto add = [&](const char *name, const char *help, const char *positional) {
    auto *sub = app.add_subcommand(name, help);
    if (positional) sub->add_option(positional, req.type_arg, positional)->required();
    sub->add_option("--format", format, "table, json or tsv")->check(CLI::IsMember({"table", "json", "tsv"}));
    return sub;
  };
  add("roots", "positive roots of TYPE", "TYPE");
  auto *weyl = add("weyl", "element data for a word (w0 by default)", "TYPE");
  weyl->add_option("--word", word, "comma-separated simple indices");
  weyl->add_option("--seed", seed, "random element from this seed");
  add("pi", "admissible pi for TYPE", "TYPE");
  add("dim", "datum for one pi", "TYPE")->add_option("--pi", pi, "comma-separated simple indices")->required();
  auto *step = add("step", "involution step", "TYPE");
  step->add_option("--word", word, "involution as a word");
  step->add_option("--s", s, "simple index")->required();
  add("verify", "verify a certificate file", "FILE");
  add("tables", "pi tables for every type of rank <= 8", nullptr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : sphorb::cli::kUsage;
  }

  req.subcommand = app.get_subcommands().front()->get_name();
  auto set = [&](const char *key, const std::string &value, const char *flag) {
    const auto *o = app.get_subcommands().front()->get_option_no_throw(flag);
    if (o && o->count() > 0) req.options[key] = value;
  };
  set("format", format, "--format");
  set("pi", pi, "--pi");
  set("word", word, "--word");
  set("s", s, "--s");
  set("seed", seed, "--seed");
  return sphorb::cli::run(req, std::cout, std::cerr);
}
