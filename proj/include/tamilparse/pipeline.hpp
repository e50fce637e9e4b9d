// pipeline.hpp -- stage composition shared by the CLI and the tests.

#ifndef TAMILPARSE_PIPELINE_HPP
#define TAMILPARSE_PIPELINE_HPP

#include <string>
#include <vector>

#include "tamilparse/chunker.hpp"
#include "tamilparse/clause.hpp"
#include "tamilparse/corpus_io.hpp"
#include "tamilparse/depparse.hpp"
#include "tamilparse/sentence.hpp"

namespace tamilparse {

struct Resources {
  Lexicon lexicon;
  SuffixTable suffixes;

  static Resources load(const std::string& lexicon_path,
                        const std::string& suffixes_path);
};

// tokenize -> tag (with morphological fallback) -> chunk.
AnnotatedSentence annotate(std::vector<Token> tokens, const Resources& res);

// Full pipeline over raw text; model may be null (rules-only clauses).
std::vector<AnnotatedSentence> run_pipeline(const std::string& text,
                                            const Resources& res,
                                            const crf::CrfModel* model);

CorpusSentence to_corpus(const AnnotatedSentence& sentence);

// Observation sequence from corpus columns (FORM/POS/CHUNK, rule flags
// recomputed from POS); gold labels from the CLAUSE column.
std::pair<crf::ObservationSeq, std::vector<std::string>> corpus_to_crf_example(
    const CorpusSentence& sentence);
crf::Corpus corpus_to_crf(const std::vector<CorpusSentence>& sentences);

}  // namespace tamilparse

#endif
