#include "tamilparse/model_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tamilparse {

namespace {

constexpr const char* kMagic = "tamilparse-crf-model";
constexpr int kVersion = 1;

std::string hexfloat(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::string cur;
  for (char ch : line) {
    if (ch == '\t') {
      cols.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cols.push_back(cur);
  return cols;
}

}  // namespace

void save_model(const crf::CrfModel& model, std::ostream& out) {
  out << kMagic << ' ' << kVersion << '\n';
  out << "seed\t" << model.seed << '\n';
  out << "labels";
  for (const std::string& l : model.labels) out << '\t' << l;
  out << '\n';
  out << "templates\t" << model.templates.size() << '\n';
  for (const auto& tpl : model.templates) {
    out << "template\t" << tpl.id << '\t' << (tpl.attr.empty() ? "_" : tpl.attr)
        << '\t' << (tpl.bigram ? 1 : 0) << '\t';
    if (tpl.offsets.empty()) {
      out << '_';
    } else {
      for (size_t k = 0; k < tpl.offsets.size(); ++k) {
        if (k) out << ',';
        out << tpl.offsets[k];
      }
    }
    out << '\n';
  }
  out << "weights\t" << model.weights.size() << '\n';
  for (const auto& [feature, weight] : model.weights)  // sorted by key
    out << feature << '\t' << hexfloat(weight) << '\n';
}

void save_model_file(const crf::CrfModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path);
  save_model(model, out);
}

crf::CrfModel load_model(std::istream& in, const std::string& name) {
  auto fail = [&](size_t lineno, const std::string& why) -> DataError {
    return DataError(name + ":" + std::to_string(lineno) + ": " + why);
  };

  std::string line;
  size_t lineno = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next_line()) throw fail(1, "empty model file");
  {
    std::istringstream head(line);
    std::string magic;
    int version = -1;
    head >> magic >> version;
    if (magic != kMagic) throw fail(lineno, "not a model file");
    if (version != kVersion)
      throw ModelVersionError(name + ": unsupported model version " +
                              std::to_string(version) + " (expected " +
                              std::to_string(kVersion) + ")");
  }

  crf::CrfModel model;
  if (!next_line()) throw fail(lineno, "missing seed line");
  {
    const auto cols = split_tabs(line);
    if (cols.size() != 2 || cols[0] != "seed")
      throw fail(lineno, "expected seed line");
    model.seed = std::stoull(cols[1]);
  }
  if (!next_line()) throw fail(lineno, "missing labels line");
  {
    const auto cols = split_tabs(line);
    if (cols.empty() || cols[0] != "labels" || cols.size() < 2)
      throw fail(lineno, "expected labels line");
    model.labels.assign(cols.begin() + 1, cols.end());
  }
  if (!next_line()) throw fail(lineno, "missing templates line");
  const auto tcols = split_tabs(line);
  if (tcols.size() != 2 || tcols[0] != "templates")
    throw fail(lineno, "expected templates count");
  const size_t n_templates = std::stoul(tcols[1]);
  for (size_t k = 0; k < n_templates; ++k) {
    if (!next_line()) throw fail(lineno, "truncated template list");
    const auto cols = split_tabs(line);
    if (cols.size() != 5 || cols[0] != "template")
      throw fail(lineno, "malformed template line");
    crf::FeatureTemplate tpl;
    tpl.id = cols[1];
    tpl.attr = cols[2] == "_" ? "" : cols[2];
    tpl.bigram = cols[3] == "1";
    if (cols[4] != "_") {
      std::stringstream offs(cols[4]);
      std::string item;
      while (std::getline(offs, item, ','))
        tpl.offsets.push_back(std::stoi(item));
    }
    model.templates.push_back(std::move(tpl));
  }
  if (!next_line()) throw fail(lineno, "missing weights line");
  const auto wcols = split_tabs(line);
  if (wcols.size() != 2 || wcols[0] != "weights")
    throw fail(lineno, "expected weights count");
  const size_t n_weights = std::stoul(wcols[1]);
  for (size_t k = 0; k < n_weights; ++k) {
    if (!next_line()) throw fail(lineno, "truncated weight list");
    const auto cols = split_tabs(line);
    if (cols.size() != 2) throw fail(lineno, "malformed weight line");
    char* end = nullptr;
    const double w = std::strtod(cols[1].c_str(), &end);
    if (end == cols[1].c_str() || *end != '\0')
      throw fail(lineno, "malformed weight value");
    model.weights.emplace(cols[0], w);
  }
  return model;
}

crf::CrfModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model file: " + path);
  return load_model(in, path);
}

}  // namespace tamilparse
