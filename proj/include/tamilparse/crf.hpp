// crf.hpp -- generic linear-chain conditional random field: template-based
// feature extraction, exact inference (forward log-partition, Viterbi,
// forward-backward marginals) and L2-regularized maximum likelihood
// training by batch gradient ascent.

#ifndef TAMILPARSE_CRF_HPP
#define TAMILPARSE_CRF_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tamilparse/core.hpp"

namespace tamilparse {
namespace crf {

class CrfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Previous-label sentinel used at position 0.
inline const std::string kBeginLabel = "_BEGIN_";

struct Observation {
  std::map<std::string, std::string> attrs;
};
using ObservationSeq = std::vector<Observation>;

// A template reads one attribute at a window of offsets and conjoins the
// values with the current label (and the previous label when bigram).
// An empty attr with empty offsets is a pure label-transition template.
struct FeatureTemplate {
  std::string id;
  std::string attr;
  std::vector<int> offsets;
  bool bigram = false;
};

struct CrfModel {
  std::vector<std::string> labels;
  std::vector<FeatureTemplate> templates;
  std::map<std::string, double> weights;
  int version = 1;
  uint64_t seed = 0;

  size_t label_index(const std::string& label) const;
};

// Feature strings active at (t, prev, cur). prev = labels.size() stands for
// the BEGIN sentinel.
std::vector<std::string> active_features(
    const ObservationSeq& seq, size_t t, size_t prev, size_t cur,
    const std::vector<FeatureTemplate>& templates,
    const std::vector<std::string>& labels);

// Full per-position, per-label-pair feature table:
// result[t][prev][cur] with prev in {0..|Y|} (|Y| = BEGIN), cur in {0..|Y|-1}.
std::vector<std::vector<std::vector<std::vector<std::string>>>> featurize(
    const ObservationSeq& seq, const std::vector<FeatureTemplate>& templates,
    const std::vector<std::string>& labels);

// Unnormalized log-score of a labeling.
double sequence_score(const ObservationSeq& seq,
                      const std::vector<std::string>& labels,
                      const CrfModel& model);

// log Z(x) by the forward recursion in log space. pre: seq non-empty.
double log_partition(const ObservationSeq& seq, const CrfModel& model);

// Argmax labeling; ties broken toward the lexicographically smallest
// label-index sequence. Returned score is the sequence_score of the result.
std::pair<std::vector<std::string>, double> viterbi(const ObservationSeq& seq,
                                                    const CrfModel& model);

struct Marginals {
  // node[t][y]; edge[t][prev][cur] for t >= 1 (edge[0] is empty).
  std::vector<std::vector<double>> node;
  std::vector<std::vector<std::vector<double>>> edge;
};

Marginals posterior_marginals(const ObservationSeq& seq,
                              const CrfModel& model);

using Corpus =
    std::vector<std::pair<ObservationSeq, std::vector<std::string>>>;

// Conditional log-likelihood with L2 penalty and its gradient
// (observed - expected - l2*w). The gradient covers every feature seen in
// the corpus plus every feature carrying weight.
std::pair<double, std::map<std::string, double>> log_likelihood_and_gradient(
    const Corpus& corpus, const CrfModel& model, double l2);

struct TrainOptions {
  double l2 = 1.0;
  int max_iters = 200;
  double tolerance = 1e-4;
  uint64_t seed = 0;
};

// Batch gradient ascent with backtracking line search from zero weights.
// Deterministic for a fixed corpus order.
CrfModel train(const Corpus& corpus,
               const std::vector<std::string>& label_alphabet,
               const std::vector<FeatureTemplate>& templates,
               const TrainOptions& options = {});

}  // namespace crf
}  // namespace tamilparse

#endif
