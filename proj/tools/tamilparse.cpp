// tamilparse -- command-line front end for the parsing pipeline.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tamilparse/model_io.hpp"
#include "tamilparse/pipeline.hpp"

namespace tp = tamilparse;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw tp::DataError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string morph_column(const tp::MorphAnalysis& m) {
  std::string out = m.root;
  for (const auto& s : m.suffixes) {
    out.push_back('+');
    out += s.pattern;
  }
  if (!m.sandhi.empty()) {
    out.push_back('+');
    out += m.sandhi;
  }
  return out;
}

struct SharedOptions {
  std::string lexicon_path;
  std::string suffixes_path;
  std::string model_path;
  std::string input;
};

void add_resource_flags(CLI::App* cmd, SharedOptions& opts,
                        bool model_flag = false) {
  cmd->add_option("--lexicon", opts.lexicon_path, "Lexicon TSV (FORM, TAG)")
      ->required();
  cmd->add_option("--suffixes", opts.suffixes_path,
                  "Suffix table TSV (PATTERN, CATEGORY, FEATURES, PRIORITY)")
      ->required();
  if (model_flag)
    cmd->add_option("--model", opts.model_path,
                    "Trained clause-boundary model (rules-only if omitted)");
  cmd->add_option("input", opts.input, "Input text file ('-' = stdin)");
}

double percent(double x) { return 100.0 * x; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tamil dependency parsing pipeline"};
  app.require_subcommand(1);

  SharedOptions opts;
  std::string format = "conll";
  std::string train_output;
  tp::crf::TrainOptions train_opts;
  std::string gold_path, predicted_path;

  auto* cmd_tokenize = app.add_subcommand("tokenize", "Split text into tokens");
  cmd_tokenize->add_option("input", opts.input, "Input text file ('-' = stdin)");

  auto* cmd_tag = app.add_subcommand("tag", "POS tag with morphological fallback");
  add_resource_flags(cmd_tag, opts);

  auto* cmd_chunk = app.add_subcommand("chunk", "Tag and chunk");
  add_resource_flags(cmd_chunk, opts);

  auto* cmd_clauses =
      app.add_subcommand("clauses", "Tag, chunk and label clause boundaries");
  add_resource_flags(cmd_clauses, opts, /*model_flag=*/true);

  auto* cmd_parse = app.add_subcommand("parse", "Run the full pipeline");
  add_resource_flags(cmd_parse, opts, /*model_flag=*/true);
  cmd_parse->add_option("--format", format, "Output format: conll|dot|text")
      ->check(CLI::IsMember({"conll", "dot", "text"}));

  auto* cmd_train =
      app.add_subcommand("train", "Train the clause-boundary CRF");
  cmd_train->add_option("corpus", opts.input, "Training corpus file")
      ->required();
  cmd_train->add_option("output", train_output, "Model file to write")
      ->required();
  cmd_train->add_option("--l2", train_opts.l2, "L2 regularization strength");
  cmd_train->add_option("--max-iters", train_opts.max_iters,
                        "Maximum training iterations");
  cmd_train->add_option("--tolerance", train_opts.tolerance,
                        "Gradient max-norm stopping tolerance");
  cmd_train->add_option("--seed", train_opts.seed, "Random seed (recorded)");

  auto* cmd_eval = app.add_subcommand("eval", "Score predicted against gold");
  cmd_eval->add_option("gold", gold_path, "Gold corpus file")->required();
  cmd_eval->add_option("predicted", predicted_path, "Predicted corpus file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_tokenize->parsed()) {
      const auto sentences = tp::tokenize(read_input(opts.input));
      for (const auto& sentence : sentences) {
        for (const auto& token : sentence) std::cout << token.surface << '\n';
        std::cout << '\n';
      }
      return kExitOk;
    }

    if (cmd_train->parsed()) {
      const auto sentences = tp::read_corpus_file(opts.input);
      const auto corpus = tp::corpus_to_crf(sentences);
      const auto model = tp::crf::train(corpus, tp::default_clause_alphabet(),
                                        tp::clause_templates(), train_opts);
      tp::save_model_file(model, train_output);
      return kExitOk;
    }

    if (cmd_eval->parsed()) {
      const auto gold = tp::corpus_trees(tp::read_corpus_file(gold_path));
      const auto predicted =
          tp::corpus_heads(tp::read_corpus_file(predicted_path));
      const tp::Metrics m = tp::edge_prf(gold, predicted);
      char line[128];
      std::printf("%-28s%8s%8s%8s\n", "Relation between the words", "P(%)",
                  "R(%)", "F(%)");
      std::snprintf(line, sizeof line, "%-28s%8.2f%8.2f%8.2f",
                    "With dependency", percent(m.precision),
                    percent(m.recall), percent(m.f_measure));
      std::printf("%s\n", line);
      std::printf("Sentences exact: %zu/%zu (%.2f%%)\n", m.correct_sentences,
                  m.total_sentences,
                  m.total_sentences
                      ? percent(double(m.correct_sentences) / m.total_sentences)
                      : 0.0);
      return kExitOk;
    }

    // Remaining subcommands run (a prefix of) the pipeline.
    const tp::Resources res =
        tp::Resources::load(opts.lexicon_path, opts.suffixes_path);
    tp::crf::CrfModel model_storage;
    const tp::crf::CrfModel* model = nullptr;
    if (!opts.model_path.empty()) {
      model_storage = tp::load_model_file(opts.model_path);
      model = &model_storage;
    }
    const std::string text = read_input(opts.input);

    if (cmd_tag->parsed()) {
      for (auto& tokens : tp::tokenize(text)) {
        const auto sentence = tp::annotate(std::move(tokens), res);
        for (size_t i = 0; i < sentence.size(); ++i)
          std::cout << sentence.tokens[i].surface << '\t'
                    << tp::to_string(sentence.pos[i]) << '\t'
                    << morph_column(sentence.morph[i]) << '\n';
        std::cout << '\n';
      }
      return kExitOk;
    }

    if (cmd_chunk->parsed()) {
      for (auto& tokens : tp::tokenize(text)) {
        const auto sentence = tp::annotate(std::move(tokens), res);
        const auto bio = tp::chunks_to_bio(sentence.chunks, sentence.size());
        for (size_t i = 0; i < sentence.size(); ++i)
          std::cout << sentence.tokens[i].surface << '\t'
                    << tp::to_string(sentence.pos[i]) << '\t'
                    << tp::to_string(bio[i]) << '\n';
        std::cout << '\n';
      }
      return kExitOk;
    }

    if (cmd_clauses->parsed()) {
      for (auto& tokens : tp::tokenize(text)) {
        auto sentence = tp::annotate(std::move(tokens), res);
        auto [labels, spans] = tp::decode_clauses(sentence, model);
        (void)spans;
        const auto bio = tp::chunks_to_bio(sentence.chunks, sentence.size());
        for (size_t i = 0; i < sentence.size(); ++i)
          std::cout << sentence.tokens[i].surface << '\t'
                    << tp::to_string(sentence.pos[i]) << '\t'
                    << tp::to_string(bio[i]) << '\t'
                    << tp::to_string(labels[i]) << '\n';
        std::cout << '\n';
      }
      return kExitOk;
    }

    if (cmd_parse->parsed()) {
      const auto sentences = tp::run_pipeline(text, res, model);
      if (format == "conll") {
        std::vector<tp::CorpusSentence> corpus;
        for (const auto& s : sentences) corpus.push_back(tp::to_corpus(s));
        tp::write_corpus(std::cout, corpus);
      } else {
        for (const auto& s : sentences) {
          if (format == "dot")
            std::cout << tp::render_dot(*s.tree, s.tokens);
          else
            std::cout << tp::render_text(*s.tree, s.tokens);
          std::cout << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "tamilparse: error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
