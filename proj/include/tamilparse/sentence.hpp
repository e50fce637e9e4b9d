// sentence.hpp -- the annotated sentence flowing through the pipeline.

#ifndef TAMILPARSE_SENTENCE_HPP
#define TAMILPARSE_SENTENCE_HPP

#include <optional>
#include <vector>

#include "tamilparse/core.hpp"
#include "tamilparse/lexical.hpp"

namespace tamilparse {

struct AnnotatedSentence {
  std::vector<Token> tokens;
  std::vector<PosTag> pos;              // empty until tagged
  std::vector<MorphAnalysis> morph;     // empty unless tagged
  std::vector<Chunk> chunks;
  std::vector<ClauseLabel> clause_labels;  // empty until clause-labeled
  std::optional<DependencyTree> tree;

  size_t size() const { return tokens.size(); }
};

}  // namespace tamilparse

#endif
