#include "tamilparse/clause.hpp"

#include <algorithm>

namespace tamilparse {

std::vector<RuleFlag> rule1_candidates(const std::vector<PosTag>& pos_tags) {
  std::vector<RuleFlag> flags;
  for (size_t i = 0; i + 1 < pos_tags.size(); ++i) {
    if (pos_tags[i] != PosTag::RCM) continue;
    const PosTag next = pos_tags[i + 1];
    if (next == PosTag::V || next == PosTag::PRP || next == PosTag::ADJ ||
        next == PosTag::N) {
      flags.push_back(RuleFlag{RuleFlag::RULE1_BEGIN, i});
    }
  }
  return flags;
}

std::vector<RuleFlag> rule2_candidates(const std::vector<PosTag>& pos_tags) {
  std::vector<RuleFlag> flags;
  const size_t n = pos_tags.size();
  for (size_t i = 0; i < n; ++i) {
    const bool verbal = pos_tags[i] == PosTag::VAUX || pos_tags[i] == PosTag::V;
    if (verbal && i + 1 < n && pos_tags[i + 1] == PosTag::SYM) {
      flags.push_back(RuleFlag{RuleFlag::RULE2_END, i});
    } else if (i + 1 == n && pos_tags[i] == PosTag::VAUX) {
      // Sentence-final auxiliary with no trailing symbol.
      flags.push_back(RuleFlag{RuleFlag::RULE2_END, i});
    }
  }
  return flags;
}

crf::ObservationSeq clause_features(const AnnotatedSentence& sentence) {
  const size_t n = sentence.size();
  if (sentence.pos.size() != n)
    throw StructuralError("clause_features: sentence has no POS annotation");
  if (Verdict v = validate_chunks(sentence.chunks, n); !v)
    throw StructuralError("clause_features: " + v.reason);

  const auto bio = chunks_to_bio(sentence.chunks, n);
  std::vector<bool> r1(n, false), r2(n, false);
  for (const RuleFlag& f : rule1_candidates(sentence.pos)) r1[f.position] = true;
  for (const RuleFlag& f : rule2_candidates(sentence.pos)) r2[f.position] = true;

  crf::ObservationSeq seq(n);
  for (size_t i = 0; i < n; ++i) {
    auto& attrs = seq[i].attrs;
    attrs["w"] = sentence.tokens[i].surface;
    attrs["pos"] = to_string(sentence.pos[i]);
    attrs["chunk"] = to_string(bio[i]);
    attrs["rule1"] = r1[i] ? "true" : "false";
    attrs["rule2"] = r2[i] ? "true" : "false";
  }
  return seq;
}

std::vector<crf::FeatureTemplate> clause_templates() {
  std::vector<crf::FeatureTemplate> tpls;
  int id = 0;
  auto add = [&](const std::string& attr, std::vector<int> offsets,
                 bool bigram) {
    tpls.push_back(crf::FeatureTemplate{"U" + std::to_string(id++), attr,
                                        std::move(offsets), bigram});
  };
  for (int off = -2; off <= 2; ++off) add("w", {off}, false);
  for (int off = -2; off <= 2; ++off) add("pos", {off}, false);
  add("pos", {-1, 0}, false);
  add("pos", {0, 1}, false);
  for (int off = -2; off <= 2; ++off) add("chunk", {off}, false);
  add("rule1", {0}, false);
  add("rule2", {0}, false);
  add("rule1", {-1}, false);
  add("rule2", {1}, false);
  tpls.push_back(crf::FeatureTemplate{"T", "", {}, true});  // transitions
  tpls.push_back(crf::FeatureTemplate{"TP", "pos", {0}, true});
  return tpls;
}

std::pair<std::vector<ClauseLabel>, std::vector<ClauseSpan>> decode_clauses(
    const AnnotatedSentence& sentence, const crf::CrfModel* model) {
  const size_t n = sentence.size();
  if (n == 0) return {{}, {}};

  std::vector<ClauseLabel> labels(n, ClauseLabel::O);
  if (model == nullptr) {
    // Rules-only fallback.
    for (const RuleFlag& f : rule1_candidates(sentence.pos))
      labels[f.position] = ClauseLabel::CB_REL;
    for (const RuleFlag& f : rule2_candidates(sentence.pos))
      labels[f.position] = ClauseLabel::CE;
  } else {
    if (model->labels != default_clause_alphabet())
      throw crf::CrfError(
          "decode_clauses: model alphabet is not {O, CB-REL, CE}");
    const auto seq = clause_features(sentence);
    const auto [decoded, score] = crf::viterbi(seq, *model);
    (void)score;
    for (size_t i = 0; i < n; ++i)
      labels[i] = *parse_clause_label(decoded[i]);
  }
  return {labels, clause_spans_from_labels(labels)};
}

}  // namespace tamilparse
