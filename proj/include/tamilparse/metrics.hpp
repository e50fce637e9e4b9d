// metrics.hpp -- precision/recall/F over dependency edges and
// sentence-exact-match accuracy.

#ifndef TAMILPARSE_METRICS_HPP
#define TAMILPARSE_METRICS_HPP

#include <optional>
#include <vector>

#include "tamilparse/core.hpp"

namespace tamilparse {

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  size_t correct_sentences = 0;
  size_t total_sentences = 0;
};

// Harmonic mean 2PR/(P+R), 0 when P+R = 0.
double f_measure(double precision, double recall);

// Predicted heads per sentence; nullopt marks an unattached token, which
// is what lets precision and recall diverge.
using PredictedHeads = std::vector<std::optional<size_t>>;

Metrics edge_prf(const std::vector<DependencyTree>& gold,
                 const std::vector<PredictedHeads>& predicted);

// (correct, total): a sentence counts as correct iff every predicted head
// equals gold.
std::pair<size_t, size_t> sentence_accuracy(
    const std::vector<DependencyTree>& gold,
    const std::vector<PredictedHeads>& predicted);

}  // namespace tamilparse

#endif
