// clause.hpp -- hybrid clause-boundary identification: deterministic
// candidate rules feeding rule-flag features into the CRF decoder.

#ifndef TAMILPARSE_CLAUSE_HPP
#define TAMILPARSE_CLAUSE_HPP

#include <vector>

#include "tamilparse/crf.hpp"
#include "tamilparse/sentence.hpp"

namespace tamilparse {

struct RuleFlag {
  enum Kind { RULE1_BEGIN, RULE2_END } kind;
  size_t position;

  friend bool operator==(const RuleFlag&, const RuleFlag&) = default;
};

// RULE_1: a relative clause marker followed by V/PRP/ADJ/N marks the
// marker's position as a clause beginning.
std::vector<RuleFlag> rule1_candidates(const std::vector<PosTag>& pos_tags);

// RULE_2: a verbal element (VAUX or V) followed by a symbol, or a
// sentence-final VAUX, marks a clause end.
std::vector<RuleFlag> rule2_candidates(const std::vector<PosTag>& pos_tags);

// Per-position observation attributes: surface form, POS, chunk BIO tag
// and the rule flags. pre: sentence has POS and chunk annotations.
crf::ObservationSeq clause_features(const AnnotatedSentence& sentence);

// Feature templates used by the clause-boundary CRF (windows -2..+2).
std::vector<crf::FeatureTemplate> clause_templates();

// Viterbi decode plus the stack-repair pass. With a null model the
// rules-only fallback maps RULE1_BEGIN -> CB-REL and RULE2_END -> CE.
std::pair<std::vector<ClauseLabel>, std::vector<ClauseSpan>> decode_clauses(
    const AnnotatedSentence& sentence, const crf::CrfModel* model);

}  // namespace tamilparse

#endif
