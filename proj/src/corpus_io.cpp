#include "tamilparse/corpus_io.hpp"

#include <fstream>
#include <sstream>

namespace tamilparse {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::string cur;
  for (char ch : line) {
    if (ch == '\t') {
      cols.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cols.push_back(cur);
  return cols;
}

void validate_sentence_records(const CorpusSentence& sentence,
                               size_t sentence_no,
                               const std::string& name) {
  const size_t n = sentence.size();
  for (size_t i = 0; i < n; ++i) {
    if (sentence[i].index != i + 1)
      throw DataError(name + ": sentence " + std::to_string(sentence_no) +
                      ": INDEX not consecutive at token " +
                      std::to_string(i + 1));
    if (sentence[i].head && *sentence[i].head > n)
      throw DataError(name + ": sentence " + std::to_string(sentence_no) +
                      ": HEAD " + std::to_string(*sentence[i].head) +
                      " out of range for " + std::to_string(n) + " tokens");
  }
}

}  // namespace

std::vector<CorpusSentence> read_corpus(std::istream& in,
                                        const std::string& name) {
  std::vector<CorpusSentence> sentences;
  CorpusSentence current;
  std::string line;
  size_t lineno = 0;

  auto flush = [&] {
    if (!current.empty()) {
      validate_sentence_records(current, sentences.size() + 1, name);
      sentences.push_back(std::move(current));
      current.clear();
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    const auto cols = split_tabs(line);
    if (cols.size() != 7)
      throw DataError(name + ":" + std::to_string(lineno) +
                      ": expected 7 tab-separated columns, got " +
                      std::to_string(cols.size()));
    CorpusToken tok;
    try {
      tok.index = std::stoul(cols[0]);
    } catch (const std::exception&) {
      throw DataError(name + ":" + std::to_string(lineno) +
                      ": INDEX is not a number");
    }
    tok.form = cols[1];
    if (tok.form.empty())
      throw DataError(name + ":" + std::to_string(lineno) + ": empty FORM");
    tok.pos = cols[2];
    tok.chunk = cols[3];
    tok.clause = cols[4];
    if (cols[5] != "_") {
      try {
        tok.head = std::stoul(cols[5]);
      } catch (const std::exception&) {
        throw DataError(name + ":" + std::to_string(lineno) +
                        ": HEAD is not a number or '_'");
      }
    }
    tok.deprel = cols[6];
    current.push_back(std::move(tok));
  }
  flush();
  return sentences;
}

std::vector<CorpusSentence> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file: " + path);
  return read_corpus(in, path);
}

void write_corpus(std::ostream& out,
                  const std::vector<CorpusSentence>& sentences) {
  for (const CorpusSentence& sentence : sentences) {
    for (const CorpusToken& tok : sentence) {
      out << tok.index << '\t' << tok.form << '\t' << tok.pos << '\t'
          << tok.chunk << '\t' << tok.clause << '\t';
      if (tok.head)
        out << *tok.head;
      else
        out << '_';
      out << '\t' << tok.deprel << '\n';
    }
    out << '\n';
  }
}

void write_corpus_file(const std::string& path,
                       const std::vector<CorpusSentence>& sentences) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path);
  write_corpus(out, sentences);
}

std::vector<DependencyTree> corpus_trees(
    const std::vector<CorpusSentence>& sentences) {
  std::vector<DependencyTree> trees;
  trees.reserve(sentences.size());
  for (size_t s = 0; s < sentences.size(); ++s) {
    DependencyTree tree;
    for (const CorpusToken& tok : sentences[s]) {
      if (!tok.head)
        throw DataError("sentence " + std::to_string(s + 1) +
                        ": gold corpus has an unattached token");
      tree.heads.push_back(*tok.head);
      tree.relations.push_back(*tok.head == 0 ? "root" : "dep");
    }
    if (Verdict v = validate_tree(tree); !v)
      throw DataError("sentence " + std::to_string(s + 1) + ": " + v.reason);
    trees.push_back(std::move(tree));
  }
  return trees;
}

std::vector<PredictedHeads> corpus_heads(
    const std::vector<CorpusSentence>& sentences) {
  std::vector<PredictedHeads> heads;
  heads.reserve(sentences.size());
  for (const CorpusSentence& sentence : sentences) {
    PredictedHeads h;
    for (const CorpusToken& tok : sentence) h.push_back(tok.head);
    heads.push_back(std::move(h));
  }
  return heads;
}

}  // namespace tamilparse
