#include "tamilparse/crf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tamilparse {
namespace crf {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double logsumexp(const std::vector<double>& xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

std::string window_value(const ObservationSeq& seq, size_t t, int off,
                         const std::string& attr) {
  const long p = static_cast<long>(t) + off;
  if (p < 0) return "__BOS__";
  if (p >= static_cast<long>(seq.size())) return "__EOS__";
  const auto& attrs = seq[static_cast<size_t>(p)].attrs;
  auto it = attrs.find(attr);
  return it == attrs.end() ? "__NA__" : it->second;
}

}  // namespace

size_t CrfModel::label_index(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw CrfError("label '" + label + "' not in model alphabet");
}

std::vector<std::string> active_features(
    const ObservationSeq& seq, size_t t, size_t prev, size_t cur,
    const std::vector<FeatureTemplate>& templates,
    const std::vector<std::string>& labels) {
  const std::string& cur_label = labels[cur];
  const std::string& prev_label =
      prev == labels.size() ? kBeginLabel : labels[prev];
  std::vector<std::string> out;
  out.reserve(templates.size());
  for (const FeatureTemplate& tpl : templates) {
    std::string f = tpl.id;
    f.push_back(':');
    for (size_t k = 0; k < tpl.offsets.size(); ++k) {
      if (k) f.push_back('&');
      f += tpl.attr;
      f.push_back('@');
      f += std::to_string(tpl.offsets[k]);
      f.push_back('=');
      f += window_value(seq, t, tpl.offsets[k], tpl.attr);
    }
    f += "|y=";
    f += cur_label;
    if (tpl.bigram) {
      f += "|p=";
      f += prev_label;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::vector<std::vector<std::vector<std::string>>>> featurize(
    const ObservationSeq& seq, const std::vector<FeatureTemplate>& templates,
    const std::vector<std::string>& labels) {
  const size_t ny = labels.size();
  std::vector<std::vector<std::vector<std::vector<std::string>>>> out(
      seq.size());
  for (size_t t = 0; t < seq.size(); ++t) {
    out[t].resize(ny + 1);
    for (size_t prev = 0; prev <= ny; ++prev) {
      out[t][prev].resize(ny);
      for (size_t cur = 0; cur < ny; ++cur)
        out[t][prev][cur] =
            active_features(seq, t, prev, cur, templates, labels);
    }
  }
  return out;
}

namespace {

double pair_score(const ObservationSeq& seq, size_t t, size_t prev,
                  size_t cur, const CrfModel& model) {
  double s = 0.0;
  for (const std::string& f :
       active_features(seq, t, prev, cur, model.templates, model.labels)) {
    auto it = model.weights.find(f);
    if (it != model.weights.end()) s += it->second;
  }
  return s;
}

// psi[t][prev][cur]; at t=0 only prev = |Y| (BEGIN) is populated.
std::vector<std::vector<std::vector<double>>> score_table(
    const ObservationSeq& seq, const CrfModel& model) {
  const size_t ny = model.labels.size();
  std::vector<std::vector<std::vector<double>>> psi(
      seq.size(),
      std::vector<std::vector<double>>(ny + 1, std::vector<double>(ny, 0.0)));
  for (size_t cur = 0; cur < ny; ++cur)
    psi[0][ny][cur] = pair_score(seq, 0, ny, cur, model);
  for (size_t t = 1; t < seq.size(); ++t)
    for (size_t prev = 0; prev < ny; ++prev)
      for (size_t cur = 0; cur < ny; ++cur)
        psi[t][prev][cur] = pair_score(seq, t, prev, cur, model);
  return psi;
}

}  // namespace

double sequence_score(const ObservationSeq& seq,
                      const std::vector<std::string>& labels,
                      const CrfModel& model) {
  if (labels.size() != seq.size())
    throw CrfError("labeling length differs from sequence length");
  const size_t ny = model.labels.size();
  double s = 0.0;
  size_t prev = ny;  // BEGIN
  for (size_t t = 0; t < seq.size(); ++t) {
    const size_t cur = model.label_index(labels[t]);
    s += pair_score(seq, t, prev, cur, model);
    prev = cur;
  }
  return s;
}

double log_partition(const ObservationSeq& seq, const CrfModel& model) {
  if (seq.empty()) throw CrfError("log_partition: empty sequence");
  const size_t ny = model.labels.size();
  const auto psi = score_table(seq, model);
  std::vector<double> alpha(ny), next(ny), buf(ny);
  for (size_t y = 0; y < ny; ++y) alpha[y] = psi[0][ny][y];
  for (size_t t = 1; t < seq.size(); ++t) {
    for (size_t cur = 0; cur < ny; ++cur) {
      for (size_t prev = 0; prev < ny; ++prev)
        buf[prev] = alpha[prev] + psi[t][prev][cur];
      next[cur] = logsumexp(buf);
    }
    alpha = next;
  }
  return logsumexp(alpha);
}

std::pair<std::vector<std::string>, double> viterbi(const ObservationSeq& seq,
                                                    const CrfModel& model) {
  if (seq.empty()) throw CrfError("viterbi: empty sequence");
  const size_t n = seq.size();
  const size_t ny = model.labels.size();
  const auto psi = score_table(seq, model);

  // delta[t][y]: best achievable score over positions t+1..n-1 given y_t=y.
  std::vector<std::vector<double>> delta(n, std::vector<double>(ny, 0.0));
  for (size_t t = n - 1; t-- > 0;) {
    for (size_t y = 0; y < ny; ++y) {
      double best = kNegInf;
      for (size_t y2 = 0; y2 < ny; ++y2)
        best = std::max(best, psi[t + 1][y][y2] + delta[t + 1][y2]);
      delta[t][y] = best;
    }
  }

  // Greedy left-to-right pick gives the lexicographically smallest argmax.
  std::vector<std::string> labels(n);
  double score = 0.0;
  size_t prev = ny;  // BEGIN
  for (size_t t = 0; t < n; ++t) {
    size_t best_y = 0;
    double best = kNegInf;
    for (size_t y = 0; y < ny; ++y) {
      const double s = psi[t][prev][y] + delta[t][y];
      if (s > best) {
        best = s;
        best_y = y;
      }
    }
    score += psi[t][prev][best_y];
    labels[t] = model.labels[best_y];
    prev = best_y;
  }
  return {labels, score};
}

Marginals posterior_marginals(const ObservationSeq& seq,
                              const CrfModel& model) {
  if (seq.empty()) throw CrfError("posterior_marginals: empty sequence");
  const size_t n = seq.size();
  const size_t ny = model.labels.size();
  const auto psi = score_table(seq, model);

  std::vector<std::vector<double>> alpha(n, std::vector<double>(ny));
  std::vector<std::vector<double>> beta(n, std::vector<double>(ny, 0.0));
  std::vector<double> buf(ny);

  for (size_t y = 0; y < ny; ++y) alpha[0][y] = psi[0][ny][y];
  for (size_t t = 1; t < n; ++t)
    for (size_t cur = 0; cur < ny; ++cur) {
      for (size_t prev = 0; prev < ny; ++prev)
        buf[prev] = alpha[t - 1][prev] + psi[t][prev][cur];
      alpha[t][cur] = logsumexp(buf);
    }
  for (size_t t = n - 1; t-- > 0;)
    for (size_t y = 0; y < ny; ++y) {
      for (size_t y2 = 0; y2 < ny; ++y2)
        buf[y2] = psi[t + 1][y][y2] + beta[t + 1][y2];
      beta[t][y] = logsumexp(buf);
    }
  const double log_z = logsumexp(alpha[n - 1]);

  Marginals m;
  m.node.assign(n, std::vector<double>(ny));
  m.edge.assign(n, {});
  for (size_t t = 0; t < n; ++t)
    for (size_t y = 0; y < ny; ++y)
      m.node[t][y] = std::exp(alpha[t][y] + beta[t][y] - log_z);
  for (size_t t = 1; t < n; ++t) {
    m.edge[t].assign(ny, std::vector<double>(ny));
    for (size_t prev = 0; prev < ny; ++prev)
      for (size_t cur = 0; cur < ny; ++cur)
        m.edge[t][prev][cur] = std::exp(alpha[t - 1][prev] +
                                        psi[t][prev][cur] + beta[t][cur] -
                                        log_z);
  }
  return m;
}

std::pair<double, std::map<std::string, double>> log_likelihood_and_gradient(
    const Corpus& corpus, const CrfModel& model, double l2) {
  const size_t ny = model.labels.size();
  double ll = 0.0;
  std::map<std::string, double> grad;

  for (const auto& [seq, gold] : corpus) {
    if (gold.size() != seq.size())
      throw CrfError("corpus: gold labeling length differs from sequence");
    if (seq.empty()) continue;

    // Observed counts along the gold path.
    size_t prev = ny;
    for (size_t t = 0; t < seq.size(); ++t) {
      const size_t cur = model.label_index(gold[t]);
      for (const std::string& f : active_features(seq, t, prev, cur,
                                                  model.templates,
                                                  model.labels))
        grad[f] += 1.0;
      prev = cur;
    }

    // Expected counts from exact marginals.
    const Marginals m = posterior_marginals(seq, model);
    for (size_t cur = 0; cur < ny; ++cur) {
      const double p = m.node[0][cur];
      if (p <= 0.0) continue;
      for (const std::string& f : active_features(seq, 0, ny, cur,
                                                  model.templates,
                                                  model.labels))
        grad[f] -= p;
    }
    for (size_t t = 1; t < seq.size(); ++t)
      for (size_t pv = 0; pv < ny; ++pv)
        for (size_t cur = 0; cur < ny; ++cur) {
          const double p = m.edge[t][pv][cur];
          if (p <= 0.0) continue;
          for (const std::string& f : active_features(seq, t, pv, cur,
                                                      model.templates,
                                                      model.labels))
            grad[f] -= p;
        }

    ll += sequence_score(seq, gold, model) - log_partition(seq, model);
  }

  for (const auto& [f, w] : model.weights) {
    ll -= 0.5 * l2 * w * w;
    grad[f] -= l2 * w;
  }
  return {ll, grad};
}

CrfModel train(const Corpus& corpus,
               const std::vector<std::string>& label_alphabet,
               const std::vector<FeatureTemplate>& templates,
               const TrainOptions& options) {
  if (corpus.empty()) throw CrfError("train: empty corpus");
  CrfModel model;
  model.labels = label_alphabet;
  model.templates = templates;
  model.seed = options.seed;

  double step = 1.0;
  for (int iter = 0; iter < options.max_iters; ++iter) {
    auto [ll, grad] = log_likelihood_and_gradient(corpus, model, options.l2);
    if (!std::isfinite(ll))
      throw CrfError("train: non-finite likelihood at iteration " +
                     std::to_string(iter));

    double gmax = 0.0, gnorm2 = 0.0;
    for (const auto& [f, g] : grad) {
      gmax = std::max(gmax, std::abs(g));
      gnorm2 += g * g;
    }
    if (gmax < options.tolerance) break;

    // Backtracking line search (Armijo) on the ascent direction.
    const std::map<std::string, double> base = model.weights;
    step = std::min(step * 2.0, 1.0);
    bool accepted = false;
    while (step > 1e-12) {
      model.weights = base;
      for (const auto& [f, g] : grad) model.weights[f] += step * g;
      const auto [ll2, g2] =
          log_likelihood_and_gradient(corpus, model, options.l2);
      (void)g2;
      if (std::isfinite(ll2) && ll2 >= ll + 1e-4 * step * gnorm2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      model.weights = base;
      break;
    }
  }
  return model;
}

}  // namespace crf
}  // namespace tamilparse
