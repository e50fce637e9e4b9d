#include "tamilparse/metrics.hpp"

namespace tamilparse {

double f_measure(double precision, double recall) {
  const double denom = precision + recall;
  if (denom <= 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

namespace {

void check_alignment(const std::vector<DependencyTree>& gold,
                     const std::vector<PredictedHeads>& predicted) {
  if (gold.size() != predicted.size())
    throw StructuralError("edge_prf: sentence counts differ (" +
                          std::to_string(gold.size()) + " vs " +
                          std::to_string(predicted.size()) + ")");
  for (size_t s = 0; s < gold.size(); ++s)
    if (gold[s].size() != predicted[s].size())
      throw StructuralError("edge_prf: token counts differ in sentence " +
                            std::to_string(s + 1));
}

}  // namespace

Metrics edge_prf(const std::vector<DependencyTree>& gold,
                 const std::vector<PredictedHeads>& predicted) {
  check_alignment(gold, predicted);
  size_t gold_edges = 0, predicted_edges = 0, correct = 0;
  for (size_t s = 0; s < gold.size(); ++s) {
    gold_edges += gold[s].size();
    for (size_t i = 0; i < gold[s].size(); ++i) {
      if (!predicted[s][i]) continue;
      ++predicted_edges;
      if (*predicted[s][i] == gold[s].heads[i]) ++correct;
    }
  }
  Metrics m;
  m.precision = predicted_edges ? double(correct) / predicted_edges : 0.0;
  m.recall = gold_edges ? double(correct) / gold_edges : 0.0;
  m.f_measure = f_measure(m.precision, m.recall);
  auto [ok, total] = sentence_accuracy(gold, predicted);
  m.correct_sentences = ok;
  m.total_sentences = total;
  return m;
}

std::pair<size_t, size_t> sentence_accuracy(
    const std::vector<DependencyTree>& gold,
    const std::vector<PredictedHeads>& predicted) {
  check_alignment(gold, predicted);
  size_t correct = 0;
  for (size_t s = 0; s < gold.size(); ++s) {
    bool exact = true;
    for (size_t i = 0; i < gold[s].size(); ++i) {
      if (!predicted[s][i] || *predicted[s][i] != gold[s].heads[i]) {
        exact = false;
        break;
      }
    }
    if (exact) ++correct;
  }
  return {correct, gold.size()};
}

}  // namespace tamilparse
