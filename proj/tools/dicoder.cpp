#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dicoder/cli.hpp"

namespace {

void add_dialect(CLI::App& cmd, dicoder::cli::CliConfig& c) {
  cmd.add_option("--delimiter", c.corpus_format.delimiter, "CSV field delimiter")->capture_default_str();
  cmd.add_option("--col-doc", c.corpus_format.col_doc, "Document id column (name or 0-based index)")
      ->capture_default_str();
  cmd.add_option("--col-line", c.corpus_format.col_line, "Line id column")->capture_default_str();
  cmd.add_option("--col-raw", c.corpus_format.col_raw, "Raw text column")->capture_default_str();
  cmd.add_option("--col-standard", c.corpus_format.col_standard, "Standard text column")->capture_default_str();
  cmd.add_option("--col-code", c.corpus_format.col_code, "Code column")->capture_default_str();
}

void add_dictionary(CLI::App& cmd, dicoder::cli::CliConfig& c, std::string& mode) {
  cmd.add_option("--corpus", c.corpus, "AlignedCauses training file (repeatable)")->check(CLI::ExistingFile);
  cmd.add_option("--external", c.external, "Label/code term list, used with --mode corpus_plus_external")
      ->check(CLI::ExistingFile);
  cmd.add_option("--ext-col-label", c.term_list_format.col_label, "Term list label column")
      ->capture_default_str();
  cmd.add_option("--ext-col-code", c.term_list_format.col_code, "Term list code column")->capture_default_str();
  cmd.add_option("--mode", mode, "corpus_only | corpus_plus_external")
      ->check(CLI::IsMember({"corpus_only", "corpus_plus_external"}))
      ->capture_default_str();
  cmd.add_option("--stopwords", c.stopwords, "Stopword file (default: built-in French list)")
      ->check(CLI::ExistingFile);
  add_dialect(cmd, c);
}

}  // namespace

int main(int argc, char** argv) {
  dicoder::cli::CliConfig c;
  std::string mode = "corpus_only";

  CLI::App app{"Dictionary-based concept annotation and coding"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Build the dictionary and print its report");
  add_dictionary(*build, c, mode);
  build->add_option("--output", c.output, "Write the report as JSON");

  auto* annotate = app.add_subcommand("annotate", "Annotate the raw text of a corpus file");
  add_dictionary(*annotate, c, mode);
  annotate->add_option("--input", c.input, "Corpus file to annotate")->required()->check(CLI::ExistingFile);
  annotate->add_option("--output", c.output, "Annotation CSV to write")->required();
  annotate->add_option("--abbreviations", c.abbreviations, "Abbreviation file (default: built-in list)")
      ->check(CLI::ExistingFile);
  annotate->add_option("--max-dist", c.max_dist, "Largest accepted edit distance")->capture_default_str();
  annotate->add_option("--fuzzy-min-len", c.fuzzy_min_len, "Shortest token eligible for fuzzy matching")
      ->capture_default_str();
  annotate->add_option("--workers", c.workers, "Annotation threads (0: all processors)")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Score an annotation file against a gold corpus");
  eval->add_option("--gold", c.gold, "Gold AlignedCauses file")->required()->check(CLI::ExistingFile);
  eval->add_option("--predicted", c.predicted, "Annotation CSV")->required()->check(CLI::ExistingFile);
  eval->add_option("--output", c.output, "Write the report as JSON");
  add_dialect(*eval, c);

  CLI11_PARSE(app, argc, argv);
  c.mode = dicoder::parse_mode(mode);

  if (build->parsed()) return dicoder::cli::cmd_build(c, std::cout, std::cerr);
  if (annotate->parsed()) return dicoder::cli::cmd_annotate(c, std::cout, std::cerr);
  return dicoder::cli::cmd_eval(c, std::cout, std::cerr);
}
