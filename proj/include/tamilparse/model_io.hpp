// model_io.hpp -- versioned structured-text CRF model files. Weights are
// written as hexfloats so load(save(m)) reproduces bit patterns exactly.

#ifndef TAMILPARSE_MODEL_IO_HPP
#define TAMILPARSE_MODEL_IO_HPP

#include <iosfwd>
#include <string>

#include "tamilparse/crf.hpp"
#include "tamilparse/lexical.hpp"  // DataError

namespace tamilparse {

class ModelVersionError : public DataError {
 public:
  using DataError::DataError;
};

void save_model(const crf::CrfModel& model, std::ostream& out);
void save_model_file(const crf::CrfModel& model, const std::string& path);

crf::CrfModel load_model(std::istream& in, const std::string& name = "<input>");
crf::CrfModel load_model_file(const std::string& path);

}  // namespace tamilparse

#endif
