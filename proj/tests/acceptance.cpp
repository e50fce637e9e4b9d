// Acceptance suite: one pass/fail line per criterion. Exits non-zero if any
// criterion fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tamilparse/chunker.hpp"
#include "tamilparse/clause.hpp"
#include "tamilparse/corpus_io.hpp"
#include "tamilparse/depparse.hpp"
#include "tamilparse/metrics.hpp"
#include "tamilparse/model_io.hpp"
#include "tamilparse/pipeline.hpp"
#include "test_util.hpp"

using namespace tamilparse;

namespace {

const std::string kDataDir = TAMILPARSE_DATA_DIR;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& detail = "") {
  std::printf("%s  %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------- criterion 1

void criterion1_metric_arithmetic() {
  const double f1 = f_measure(0.8278, 0.9367);
  const double f2 = f_measure(0.6378, 0.5632);
  const bool ok = std::abs(f1 - 0.8789) <= 0.00005 &&
                  std::abs(f2 - 0.5982) <= 0.00005;
  char detail[96];
  std::snprintf(detail, sizeof detail, "F=%.5f and F=%.5f", f1, f2);
  report(1, ok, "metric arithmetic reproduces the reference F-measures",
         detail);
}

// ---------------------------------------------------------------- criterion 2

void criterion2_pipeline_golden() {
  bool ok = true;
  std::string detail;
  try {
    const Resources res = Resources::load(kDataDir + "/lexicon.tsv",
                                          kDataDir + "/suffixes.tsv");
    const auto parsed =
        run_pipeline("கிருஷ்ணன் பாடம் படித்தான்", res, nullptr);
    if (parsed.size() != 1 || !parsed[0].tree) {
      ok = false;
      detail = "pipeline did not yield one parsed sentence";
    } else {
      const auto& tree = *parsed[0].tree;
      if (tree.heads != std::vector<size_t>{3, 3, 0}) {
        ok = false;
        std::ostringstream s;
        s << "heads =";
        for (size_t h : tree.heads) s << ' ' << h;
        detail = s.str();
      }
      const std::string dot = render_dot(tree, parsed[0].tokens);
      for (const std::string edge :
           {"n1 -> n3;", "n2 -> n3;", "n3 -> root;"}) {
        if (dot.find(edge) == std::string::npos) {
          ok = false;
          detail = "missing DOT edge " + edge;
        }
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(2, ok, "golden three-token sentence parses to [3, 3, 0]", detail);
}

// ---------------------------------------------------------------- criterion 3

void criterion3_inference_oracle() {
  std::mt19937_64 rng(1003);
  bool ok = true;
  std::string detail;
  for (int it = 0; it < 200 && ok; ++it) {
    const auto inst =
        testutil::random_crf_instance(rng, 6, 4, /*integer_weights=*/it % 4 == 0);
    const size_t n = inst.seq.size();
    const size_t ny = inst.model.labels.size();

    double log_z = -std::numeric_limits<double>::infinity();
    std::vector<size_t> best;
    double best_score = -std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> node(n, std::vector<double>(ny, 0.0));
    std::vector<std::vector<std::vector<double>>> edge(
        n, std::vector<std::vector<double>>(ny, std::vector<double>(ny, 0.0)));

    std::vector<double> scores;
    std::vector<std::vector<size_t>> labelings;
    testutil::for_each_labeling(n, ny, [&](const std::vector<size_t>& ys) {
      const double s = crf::sequence_score(
          inst.seq, testutil::index_labels(inst.model, ys), inst.model);
      scores.push_back(s);
      labelings.push_back(ys);
      log_z = testutil::logsumexp2(log_z, s);
      if (s > best_score) {
        best_score = s;
        best = ys;
      }
    });
    for (size_t k = 0; k < scores.size(); ++k) {
      const double p = std::exp(scores[k] - log_z);
      for (size_t t = 0; t < n; ++t) {
        node[t][labelings[k][t]] += p;
        if (t >= 1) edge[t][labelings[k][t - 1]][labelings[k][t]] += p;
      }
    }

    const double lz = crf::log_partition(inst.seq, inst.model);
    if (std::abs(lz - log_z) > 1e-9 * std::max(1.0, std::abs(log_z))) {
      ok = false;
      detail = "log partition mismatch at instance " + std::to_string(it);
      break;
    }
    const auto [labels, score] = crf::viterbi(inst.seq, inst.model);
    if (labels != testutil::index_labels(inst.model, best) ||
        std::abs(score - best_score) >
            1e-9 * std::max(1.0, std::abs(best_score))) {
      ok = false;
      detail = "Viterbi mismatch at instance " + std::to_string(it);
      break;
    }
    const auto marg = crf::posterior_marginals(inst.seq, inst.model);
    for (size_t t = 0; t < n && ok; ++t)
      for (size_t y = 0; y < ny && ok; ++y) {
        if (std::abs(marg.node[t][y] - node[t][y]) > 1e-9) {
          ok = false;
          detail = "node marginal mismatch at instance " + std::to_string(it);
        }
        if (t >= 1)
          for (size_t prev = 0; prev < ny; ++prev)
            if (std::abs(marg.edge[t][prev][y] - edge[t][prev][y]) > 1e-9) {
              ok = false;
              detail =
                  "edge marginal mismatch at instance " + std::to_string(it);
            }
      }
  }
  report(3, ok, "exact inference matches enumeration on 200 random models",
         detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion4_gradient_check() {
  std::mt19937_64 rng(1004);
  const double eps = 1e-5;
  bool ok = true;
  std::string detail;
  for (int it = 0; it < 50 && ok; ++it) {
    auto inst = testutil::random_crf_instance(rng, 4, 3, false);
    crf::Corpus corpus;
    std::uniform_int_distribution<size_t> pick(0, inst.model.labels.size() - 1);
    std::vector<std::string> gold;
    for (size_t t = 0; t < inst.seq.size(); ++t)
      gold.push_back(inst.model.labels[pick(rng)]);
    corpus.emplace_back(inst.seq, gold);

    const double l2 = 1.0;
    const auto [ll, grad] =
        crf::log_likelihood_and_gradient(corpus, inst.model, l2);
    if (!std::isfinite(ll)) {
      ok = false;
      detail = "non-finite likelihood at instance " + std::to_string(it);
      break;
    }
    for (const auto& [f, g] : grad) {
      crf::CrfModel plus = inst.model, minus = inst.model;
      plus.weights[f] += eps;
      minus.weights[f] -= eps;
      const double llp =
          crf::log_likelihood_and_gradient(corpus, plus, l2).first;
      const double llm =
          crf::log_likelihood_and_gradient(corpus, minus, l2).first;
      const double fd = (llp - llm) / (2 * eps);
      if (std::abs(g - fd) > 1e-4 * std::max(1.0, std::abs(fd))) {
        ok = false;
        detail = "coordinate " + f + " off at instance " + std::to_string(it);
        break;
      }
    }
  }
  report(4, ok, "analytic gradient matches central finite differences",
         detail);
}

// ---------------------------------------------------------------- criterion 5

crf::Corpus toy_clause_corpus() {
  // POS patterns whose gold labels follow the clause rules exactly, so the
  // rule-flag features make the problem separable.
  using T = PosTag;
  const std::vector<std::vector<PosTag>> patterns = {
      {T::RCM, T::N, T::V, T::VAUX, T::SYM},
      {T::N, T::N, T::V, T::SYM},
      {T::RCM, T::V, T::N, T::VAUX},
      {T::PRP, T::V, T::SYM},
      {T::N, T::RCM, T::N, T::V, T::SYM},
      {T::DET, T::N, T::V, T::VAUX},
      {T::RCM, T::PRP, T::V, T::SYM},
      {T::N, T::VAUX, T::SYM},
      {T::ADV, T::N, T::V, T::SYM},
      {T::RCM, T::ADJ, T::N, T::VAUX},
      {T::N, T::P, T::N, T::V, T::SYM},
      {T::PRP, T::N, T::VAUX},
  };
  crf::Corpus corpus;
  for (int rep = 0; rep < 2; ++rep) {
    for (size_t p = 0; p < patterns.size(); ++p) {
      AnnotatedSentence s;
      for (size_t i = 0; i < patterns[p].size(); ++i) {
        // Vary the surface forms between repetitions.
        s.tokens.push_back(
            Token{"w" + std::to_string(rep) + "_" + std::to_string(p) + "_" +
                      std::to_string(i),
                  i});
        s.pos.push_back(patterns[p][i]);
      }
      s.chunks = chunk(s.pos);
      const auto [labels, spans] = decode_clauses(s, nullptr);
      (void)spans;
      std::vector<std::string> gold;
      for (ClauseLabel l : labels) gold.push_back(to_string(l));
      corpus.emplace_back(clause_features(s), std::move(gold));
    }
  }
  return corpus;
}

void criterion5_training_sanity() {
  bool ok = true;
  std::string detail;
  try {
    const crf::Corpus corpus = toy_clause_corpus();
    if (corpus.size() < 20) throw std::runtime_error("toy corpus too small");

    const std::vector<crf::FeatureTemplate> templates = {
        {"P", "pos", {0}, false},
        {"R1", "rule1", {0}, false},
        {"R2", "rule2", {0}, false},
        {"T", "", {}, true},
    };
    crf::TrainOptions opts;
    opts.l2 = 1.0;
    opts.max_iters = 2000;
    opts.tolerance = 1e-4;
    opts.seed = 7;

    const crf::CrfModel m1 =
        crf::train(corpus, default_clause_alphabet(), templates, opts);
    const crf::CrfModel m2 =
        crf::train(corpus, default_clause_alphabet(), templates, opts);

    const auto [ll, grad] = crf::log_likelihood_and_gradient(corpus, m1, opts.l2);
    (void)ll;
    double gmax = 0.0;
    for (const auto& [f, g] : grad) gmax = std::max(gmax, std::abs(g));
    if (gmax >= 1e-4) {
      ok = false;
      detail = "gradient max-norm " + std::to_string(gmax);
    }

    for (const auto& [seq, gold] : corpus) {
      if (crf::viterbi(seq, m1).first != gold) {
        ok = false;
        detail = "decode differs from gold";
        break;
      }
    }

    save_model_file(m1, "acceptance_model_a.txt");
    save_model_file(m2, "acceptance_model_b.txt");
    if (read_file("acceptance_model_a.txt").empty() ||
        read_file("acceptance_model_a.txt") !=
            read_file("acceptance_model_b.txt")) {
      ok = false;
      detail = "model files differ between equal-seed runs";
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(5, ok, "training converges, decodes gold and is reproducible",
         detail);
}

// ---------------------------------------------------------------- criterion 6

void criterion6_morphology_round_trip() {
  bool ok = true;
  std::string detail;
  size_t combinations = 0;
  try {
    const Lexicon lexicon = Lexicon::load(kDataDir + "/lexicon.tsv");
    const SuffixTable table = SuffixTable::load(kDataDir + "/suffixes.tsv");

    const std::vector<std::string> roots = {
        // verbs
        "படி", "பார்", "வா", "போ", "செய்", "சொல்", "கொடு", "எடு", "வாங்கு",
        "சாப்பிடு", "ஓடு", "நட", "எழுது", "கேள்", "இரு", "வை", "தூங்கு",
        "பேசு", "சிரி", "அழு", "பாடு", "ஆடு", "குடி", "தா", "விடு", "பிடி",
        "தேடு", "காண்", "அனுப்பு", "அழை", "திற", "மூடு", "மற", "வெல்",
        "தோல்", "கற்பி", "உதவு", "கட்டு", "உடை", "நம்பு", "விரும்பு",
        "முயற்சி",
        // nouns
        "பாடம்", "மரம்", "புத்தகம்", "நகரம்", "குழந்தை", "மனிதன்", "பறவை",
        "கதை"};
    if (roots.size() != 50) throw std::runtime_error("expected 50 roots");
    for (const auto& r : roots)
      if (!lexicon.is_root(r))
        throw std::runtime_error("root not in lexicon: " + r);

    // Licensed combinations: every suffix alone on every root, plus every
    // tense marker followed by a personal ending on verb roots.
    std::vector<std::vector<SuffixRule>> chains;
    for (const SuffixRule& rule : table.rules()) chains.push_back({rule});
    std::vector<std::vector<SuffixRule>> verb_chains;
    for (const SuffixRule& tense : table.rules()) {
      if (tense.feature("slot") != "tense") continue;
      for (const SuffixRule& png : table.rules()) {
        if (png.feature("slot") != "png") continue;
        verb_chains.push_back({tense, png});
      }
    }

    auto check_chain = [&](const std::string& root,
                           const std::vector<SuffixRule>& chain) {
      const std::string word = morph_join(root, chain);
      const MorphAnalysis m = stem(word, table, lexicon);
      bool match = m.root == root && m.suffixes.size() == chain.size() &&
                   m.sandhi.empty() && !m.fallback;
      for (size_t k = 0; match && k < chain.size(); ++k)
        match = m.suffixes[k].pattern == chain[k].pattern &&
                m.suffixes[k].category == chain[k].category;
      if (!match && ok) {
        ok = false;
        std::string want = root;
        for (const auto& s : chain) want += "+" + s.pattern;
        std::string got = m.root;
        for (const auto& s : m.suffixes) got += "+" + s.pattern;
        detail = "word " + word + ": expected " + want + ", got " + got;
      }
      ++combinations;
    };

    for (const std::string& root : roots) {
      for (const auto& chain : chains) check_chain(root, chain);
      if (lexicon.is_verb_root(root))
        for (const auto& chain : verb_chains) check_chain(root, chain);
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(6, ok,
         "morphology round trip over " + std::to_string(combinations) +
             " root/suffix combinations",
         detail);
}

// ---------------------------------------------------------------- criterion 7

void criterion7_chunker() {
  using T = PosTag;
  bool ok = true;
  std::string detail;

  const auto c1 = chunk({T::DET, T::ADJ, T::N});
  if (c1 != std::vector<Chunk>{{ChunkLabel::NP, 0, 3, 2}}) {
    ok = false;
    detail = "[DET,ADJ,N] did not fold into one NP";
  }
  const auto c2 = chunk({T::N, T::V});
  if (c2 != std::vector<Chunk>{{ChunkLabel::NP, 0, 1, 0},
                               {ChunkLabel::VP, 1, 2, 1}}) {
    ok = false;
    detail = "[N,V] did not yield NP+VP";
  }
  const auto c3 = chunk({T::N, T::CNJ, T::N, T::V});
  if (c3 != std::vector<Chunk>{{ChunkLabel::NP, 0, 3, 2},
                               {ChunkLabel::VP, 3, 4, 3}}) {
    ok = false;
    detail = "[N,CNJ,N,V] did not merge the coordinated NP";
  }

  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<size_t> len(1, 20);
  std::uniform_int_distribution<int> tag(0, kNumPosTags - 2);
  for (int it = 0; it < 1000 && ok; ++it) {
    const size_t n = len(rng);
    std::vector<PosTag> tags(n);
    for (auto& t : tags) t = static_cast<PosTag>(tag(rng));
    const auto chunks = chunk(tags);
    if (Verdict v = validate_chunks(chunks, n); !v) {
      ok = false;
      detail = v.reason;
      break;
    }
    // The conj merge is idempotent: re-encoding through BIO and re-running
    // head assignment reproduces the same chunking.
    auto again = bio_to_chunks(chunks_to_bio(chunks, n));
    assign_heads(again, tags);
    if (again != chunks) {
      ok = false;
      detail = "chunking not stable under BIO round trip";
    }
  }
  report(7, ok, "chunker grammar examples and 1000 random sequences", detail);
}

// ---------------------------------------------------------------- criterion 8

void criterion8_rule_truth_tables() {
  using T = PosTag;
  bool ok = true;
  std::string detail;
  size_t cases = 0;
  for (int a = 0; a < kNumPosTags && ok; ++a) {
    for (int b = 0; b < kNumPosTags && ok; ++b) {
      const PosTag t1 = static_cast<PosTag>(a);
      const PosTag t2 = static_cast<PosTag>(b);
      const std::vector<PosTag> pair = {t1, t2};
      ++cases;

      // Independent statement of RULE_1: RCM immediately followed by one of
      // V, PRP, ADJ, N begins a relative clause at the marker.
      std::vector<RuleFlag> want1;
      if (t1 == T::RCM && (t2 == T::V || t2 == T::PRP || t2 == T::ADJ ||
                           t2 == T::N))
        want1.push_back({RuleFlag::RULE1_BEGIN, 0});
      if (rule1_candidates(pair) != want1) {
        ok = false;
        detail = "rule1 disagrees on (" + to_string(t1) + ", " +
                 to_string(t2) + ")";
        break;
      }

      // Independent statement of RULE_2: V/VAUX before a symbol ends a
      // clause there; a sentence-final VAUX also ends one.
      std::vector<RuleFlag> want2;
      if ((t1 == T::V || t1 == T::VAUX) && t2 == T::SYM)
        want2.push_back({RuleFlag::RULE2_END, 0});
      if (t2 == T::VAUX) want2.push_back({RuleFlag::RULE2_END, 1});
      if (rule2_candidates(pair) != want2) {
        ok = false;
        detail = "rule2 disagrees on (" + to_string(t1) + ", " +
                 to_string(t2) + ")";
        break;
      }
    }
  }
  report(8, ok,
         "clause rules match their truth tables on all " +
             std::to_string(cases) + " tag pairs",
         detail);
}

// ---------------------------------------------------------------- criterion 9

bool well_nested(const std::vector<ClauseSpan>& spans) {
  for (size_t i = 0; i < spans.size(); ++i)
    for (size_t j = i + 1; j < spans.size(); ++j) {
      const auto& a = spans[i];
      const auto& b = spans[j];
      const bool disjoint = a.end < b.start || b.end < a.start;
      const bool a_in_b = b.start <= a.start && a.end <= b.end;
      const bool b_in_a = a.start <= b.start && b.end <= a.end;
      if (!disjoint && !a_in_b && !b_in_a) return false;
    }
  return true;
}

void criterion9_structural_properties() {
  std::mt19937_64 rng(1009);
  std::uniform_int_distribution<size_t> len(1, 20);
  std::uniform_int_distribution<int> tag(0, kNumPosTags - 2);
  std::uniform_int_distribution<int> clause(0, 9);
  bool ok = true;
  std::string detail;
  for (int it = 0; it < 1000 && ok; ++it) {
    const size_t n = len(rng);
    AnnotatedSentence s;
    for (size_t i = 0; i < n; ++i) {
      s.tokens.push_back(Token{"t" + std::to_string(i), i});
      s.pos.push_back(static_cast<PosTag>(tag(rng)));
    }
    s.chunks = chunk(s.pos);
    for (size_t i = 0; i < n; ++i) {
      const int c = clause(rng);
      s.clause_labels.push_back(c == 0   ? ClauseLabel::CB_REL
                                : c == 1 ? ClauseLabel::CE
                                         : ClauseLabel::O);
    }
    try {
      const DependencyTree tree = build_tree(s);
      if (Verdict v = validate_tree(tree); !v) {
        ok = false;
        detail = v.reason + " at instance " + std::to_string(it);
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string(e.what()) + " at instance " + std::to_string(it);
    }
    if (!well_nested(clause_spans_from_labels(s.clause_labels))) {
      ok = false;
      detail = "spans not well-nested at instance " + std::to_string(it);
    }
  }
  report(9, ok, "1000 random sentences build valid, well-nested structure",
         detail);
}

// --------------------------------------------------------------- criterion 10

void criterion10_round_trips_and_cli() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(1010);

  // Corpus round trips.
  std::uniform_int_distribution<size_t> len(1, 10);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int it = 0; it < 100 && ok; ++it) {
    CorpusSentence sent;
    const size_t n = len(rng);
    for (size_t i = 0; i < n; ++i) {
      CorpusToken t;
      t.index = i + 1;
      t.form = "மொழி" + std::to_string(i);
      t.pos = coin(rng) ? "N" : "_";
      t.chunk = coin(rng) ? "B-NP" : "O";
      t.clause = coin(rng) ? "CB-REL" : "_";
      if (coin(rng)) {
        std::uniform_int_distribution<size_t> hd(0, n);
        size_t h = hd(rng);
        if (h == i + 1) h = 0;
        t.head = h;
        t.deprel = h == 0 ? "root" : "dep";
      }
      sent.push_back(std::move(t));
    }
    std::ostringstream out;
    write_corpus(out, {sent});
    std::istringstream in(out.str());
    const auto back = read_corpus(in, "rt");
    if (back.size() != 1 || back[0] != sent) {
      ok = false;
      detail = "corpus round trip failed at instance " + std::to_string(it);
    }
  }

  // Model round trips.
  std::uniform_real_distribution<double> w(-50.0, 50.0);
  std::uniform_int_distribution<int> nw(1, 40);
  for (int it = 0; it < 100 && ok; ++it) {
    crf::CrfModel model;
    model.labels = {"O", "CB-REL", "CE"};
    model.seed = rng();
    model.templates = clause_templates();
    const int k = nw(rng);
    for (int i = 0; i < k; ++i)
      model.weights["feat" + std::to_string(i) + "|y=O"] = w(rng);
    std::ostringstream out;
    save_model(model, out);
    std::istringstream in(out.str());
    const auto back = load_model(in, "rt");
    std::ostringstream out2;
    save_model(back, out2);
    bool same = out.str() == out2.str() && back.labels == model.labels &&
                back.seed == model.seed &&
                back.weights.size() == model.weights.size();
    for (const auto& [f, v] : model.weights) {
      const auto found = back.weights.find(f);
      same = same && found != back.weights.end() &&
             std::memcmp(&found->second, &v, sizeof v) == 0;
    }
    if (!same) {
      ok = false;
      detail = "model round trip failed at instance " + std::to_string(it);
    }
  }

  // CLI determinism on the bundled mini-corpus.
  if (ok) {
    const std::string base = std::string(TAMILPARSE_CLI_PATH) + " parse" +
                             " --lexicon " + kDataDir + "/lexicon.tsv" +
                             " --suffixes " + kDataDir + "/suffixes.tsv " +
                             kDataDir + "/sentences.txt";
    const int r1 = std::system((base + " > acceptance_cli_1.txt").c_str());
    const int r2 = std::system((base + " > acceptance_cli_2.txt").c_str());
    const std::string o1 = read_file("acceptance_cli_1.txt");
    const std::string o2 = read_file("acceptance_cli_2.txt");
    if (r1 != 0 || r2 != 0) {
      ok = false;
      detail = "CLI exited non-zero";
    } else if (o1.empty() || o1 != o2) {
      ok = false;
      detail = "CLI output not deterministic";
    }
  }
  report(10, ok, "format round trips and deterministic CLI output", detail);
}

}  // namespace

int main() {
  criterion1_metric_arithmetic();
  criterion2_pipeline_golden();
  criterion3_inference_oracle();
  criterion4_gradient_check();
  criterion5_training_sanity();
  criterion6_morphology_round_trip();
  criterion7_chunker();
  criterion8_rule_truth_tables();
  criterion9_structural_properties();
  criterion10_round_trips_and_cli();

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
