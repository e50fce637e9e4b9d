// corpus_io.hpp -- tab-separated vertical corpus format:
// INDEX FORM POS CHUNK CLAUSE HEAD DEPREL, blank-line sentence separator,
// '#' comment lines, '_' for absent values.

#ifndef TAMILPARSE_CORPUS_IO_HPP
#define TAMILPARSE_CORPUS_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tamilparse/lexical.hpp"  // DataError
#include "tamilparse/metrics.hpp"

namespace tamilparse {

struct CorpusToken {
  size_t index = 1;        // 1-based, consecutive within the sentence
  std::string form;
  std::string pos = "_";
  std::string chunk = "_";
  std::string clause = "_";
  std::optional<size_t> head;  // 0 = ROOT, j = token j
  std::string deprel = "_";

  friend bool operator==(const CorpusToken&, const CorpusToken&) = default;
};

using CorpusSentence = std::vector<CorpusToken>;

std::vector<CorpusSentence> read_corpus(std::istream& in,
                                        const std::string& name = "<input>");
std::vector<CorpusSentence> read_corpus_file(const std::string& path);

void write_corpus(std::ostream& out,
                  const std::vector<CorpusSentence>& sentences);
void write_corpus_file(const std::string& path,
                       const std::vector<CorpusSentence>& sentences);

// Gold trees / predicted heads extraction for evaluation. Gold requires a
// complete, valid tree; predicted heads may be partial ('_').
std::vector<DependencyTree> corpus_trees(
    const std::vector<CorpusSentence>& sentences);
std::vector<PredictedHeads> corpus_heads(
    const std::vector<CorpusSentence>& sentences);

}  // namespace tamilparse

#endif
