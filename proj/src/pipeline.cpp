#include "tamilparse/pipeline.hpp"

namespace tamilparse {

Resources Resources::load(const std::string& lexicon_path,
                          const std::string& suffixes_path) {
  return Resources{Lexicon::load(lexicon_path), SuffixTable::load(suffixes_path)};
}

AnnotatedSentence annotate(std::vector<Token> tokens, const Resources& res) {
  AnnotatedSentence sentence;
  sentence.tokens = std::move(tokens);
  auto [tags, morphs] = tag_sentence(sentence.tokens, res.lexicon, res.suffixes);
  sentence.pos = std::move(tags);
  sentence.morph = std::move(morphs);
  sentence.chunks = chunk(sentence.pos);
  return sentence;
}

std::vector<AnnotatedSentence> run_pipeline(const std::string& text,
                                            const Resources& res,
                                            const crf::CrfModel* model) {
  std::vector<AnnotatedSentence> out;
  for (auto& tokens : tokenize(text)) {
    AnnotatedSentence sentence = annotate(std::move(tokens), res);
    auto [labels, spans] = decode_clauses(sentence, model);
    (void)spans;
    sentence.clause_labels = std::move(labels);
    sentence.tree = build_tree(sentence);
    out.push_back(std::move(sentence));
  }
  return out;
}

CorpusSentence to_corpus(const AnnotatedSentence& sentence) {
  const size_t n = sentence.size();
  const auto bio = chunks_to_bio(sentence.chunks, n);
  CorpusSentence out(n);
  for (size_t i = 0; i < n; ++i) {
    CorpusToken& tok = out[i];
    tok.index = i + 1;
    tok.form = sentence.tokens[i].surface;
    tok.pos = sentence.pos.size() == n ? to_string(sentence.pos[i]) : "_";
    tok.chunk = to_string(bio[i]);
    tok.clause = sentence.clause_labels.size() == n
                     ? to_string(sentence.clause_labels[i])
                     : "_";
    if (sentence.tree) {
      tok.head = sentence.tree->heads[i];
      tok.deprel = sentence.tree->relations[i];
    }
  }
  return out;
}

std::pair<crf::ObservationSeq, std::vector<std::string>> corpus_to_crf_example(
    const CorpusSentence& sentence) {
  std::vector<PosTag> pos;
  pos.reserve(sentence.size());
  for (const CorpusToken& tok : sentence) {
    const auto tag = parse_pos_tag(tok.pos);
    if (!tag)
      throw DataError("corpus token '" + tok.form +
                      "' has no usable POS tag ('" + tok.pos + "')");
    pos.push_back(*tag);
  }
  std::vector<bool> r1(sentence.size(), false), r2(sentence.size(), false);
  for (const RuleFlag& f : rule1_candidates(pos)) r1[f.position] = true;
  for (const RuleFlag& f : rule2_candidates(pos)) r2[f.position] = true;

  crf::ObservationSeq seq(sentence.size());
  std::vector<std::string> gold(sentence.size());
  for (size_t i = 0; i < sentence.size(); ++i) {
    auto& attrs = seq[i].attrs;
    attrs["w"] = sentence[i].form;
    attrs["pos"] = sentence[i].pos;
    attrs["chunk"] = sentence[i].chunk == "_" ? "O" : sentence[i].chunk;
    attrs["rule1"] = r1[i] ? "true" : "false";
    attrs["rule2"] = r2[i] ? "true" : "false";
    gold[i] = sentence[i].clause == "_" ? "O" : sentence[i].clause;
  }
  return {std::move(seq), std::move(gold)};
}

crf::Corpus corpus_to_crf(const std::vector<CorpusSentence>& sentences) {
  crf::Corpus corpus;
  corpus.reserve(sentences.size());
  for (const CorpusSentence& s : sentences)
    corpus.push_back(corpus_to_crf_example(s));
  return corpus;
}

}  // namespace tamilparse
