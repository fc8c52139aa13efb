// Copyright 2026 The igbotext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// igbotext: command-line front end for the Igbo text representation
// pipeline.
//
//   igbotext normalize <file>
//   igbotext tokenize  <file> [--filter]
//   igbotext represent <file> --n 1,2,3
//   igbotext matrix    <dir>  --n N
//   igbotext features  <file> [--lexicon <path>]
//
// Global flags: --mode paper|strict, --stopwords <path>, --format tsv|json,
// --output <path>.
//
// Exit codes: 0 success, 1 usage error, 2 decode error, 3 I/O error,
// 4 format/invariant error in data files.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "igbotext.hpp"

#ifndef IGBOTEXT_DATA_DIR
#define IGBOTEXT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace igbotext;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kDecode = 2, kIo = 3, kData = 4 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::kDecode:
      return kDecode;
    case ErrorKind::kIo:
      return kIo;
    case ErrorKind::kData:
      return kData;
    case ErrorKind::kUsage:
    case ErrorKind::kModel:
      break;
  }
  return kUsage;
}

struct GlobalOptions {
  std::string mode = "paper";
  std::string stopwords = std::string(IGBOTEXT_DATA_DIR) + "/stopwords.txt";
  std::string format = "tsv";
  std::string output;
};

void emit(const GlobalOptions& g, const std::string& content) {
  if (g.output.empty() || g.output == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    write_file(g.output, content);
  }
}

void report_warnings(const Pipeline& p) {
  for (LoadWarning w : p.warnings()) {
    if (w == LoadWarning::kEmptyStopList) {
      std::cerr << "igbotext: warning: stop-word list is empty; no words removed\n";
    }
  }
}

PipelineConfig make_config(const GlobalOptions& g, std::set<int> orders) {
  PipelineConfig cfg;
  cfg.mode = *parse_mode(g.mode);
  cfg.stoplist_path = g.stopwords;
  cfg.orders = std::move(orders);
  cfg.output_format = g.format == "json" ? OutputFormat::kJson : OutputFormat::kTsv;
  return cfg;
}

std::set<int> to_orders(const std::vector<int>& ns) {
  for (int n : ns) check_order(n);
  return {ns.begin(), ns.end()};
}

std::vector<fs::path> corpus_files(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError(dir.string(), "not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) throw IoError(dir.string(), ec.message());
  std::ranges::sort(files);
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Igbo text normalization, tokenization and n-gram representation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--mode", g.mode, "Pipeline mode")
      ->check(CLI::IsMember({"paper", "strict"}));
  app.add_option("--stopwords", g.stopwords, "Stop-word list file");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--output", g.output, "Output file (default stdout)");

  std::string input;
  std::vector<int> orders{1, 2, 3};
  int matrix_order = 1;
  bool filter = false;
  std::string lexicon = std::string(IGBOTEXT_DATA_DIR) + "/lexicon.tsv";

  auto* normalize_cmd = app.add_subcommand("normalize", "Print normalized text");
  normalize_cmd->add_option("file", input)->required();

  auto* tokenize_cmd = app.add_subcommand("tokenize", "Print one token per line");
  tokenize_cmd->add_option("file", input)->required();
  tokenize_cmd->add_flag("--filter", filter, "Also remove stop words");

  auto* represent_cmd = app.add_subcommand("represent", "Print n-gram tables");
  represent_cmd->add_option("file", input)->required();
  represent_cmd->add_option("--n", orders, "Orders, e.g. 1,2,3")->delimiter(',');

  auto* matrix_cmd =
      app.add_subcommand("matrix", "Document-term matrix over a directory");
  matrix_cmd->add_option("dir", input)->required();
  matrix_cmd->add_option("--n", matrix_order, "N-gram order")->required();

  auto* features_cmd =
      app.add_subcommand("features", "Match n-grams against a compound lexicon");
  features_cmd->add_option("file", input)->required();
  features_cmd->add_option("--lexicon", lexicon, "Lexicon file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const bool as_json = g.format == "json";
  try {
    if (normalize_cmd->parsed()) {
      Pipeline p(make_config(g, {1}));
      report_warnings(p);
      const Document doc = p.normalized(load_document(input));
      const std::string text = utf8::encode(doc.text);
      emit(g, as_json ? dump(json{{"doc_id", doc.id}, {"text", text}})
                      : text + '\n');
    } else if (tokenize_cmd->parsed()) {
      Pipeline p(make_config(g, {1}));
      report_warnings(p);
      const Document doc = load_document(input);
      const TokenStream ts = filter ? p.filtered_tokens(doc) : p.tokens(doc);
      emit(g, as_json ? dump(tokens_to_json(ts)) : tokens_to_tsv(ts));
    } else if (represent_cmd->parsed()) {
      Pipeline p(make_config(g, to_orders(orders)));
      report_warnings(p);
      const RepresentationBundle b = p.run(load_document(input));
      emit(g, as_json ? dump(bundle_to_json(b)) : bundle_to_tsv(b));
    } else if (matrix_cmd->parsed()) {
      Pipeline p(make_config(g, to_orders({matrix_order})));
      report_warnings(p);
      const auto files = corpus_files(input);
      std::vector<RepresentationBundle> bundles;
      for (const Document& doc : load_corpus(files)) bundles.push_back(p.run(doc));
      const DocTermMatrix m = build_doc_term_matrix(bundles, matrix_order);
      emit(g, as_json ? dump(matrix_to_json(m)) : matrix_to_tsv(m));
    } else if (features_cmd->parsed()) {
      PipelineConfig cfg = make_config(g, {1, 2, 3});
      cfg.lexicon_path = lexicon;
      Pipeline p(cfg);
      report_warnings(p);
      const RepresentationBundle b = p.run(load_document(input));
      const auto& fs = *b.features;
      emit(g, as_json ? dump(features_to_json(b.doc_id, fs)) : features_to_tsv(fs));
    }
  } catch (const Error& e) {
    std::cerr << "igbotext: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "igbotext: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
