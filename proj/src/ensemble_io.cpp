#include "harmlab/ensemble_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "harmlab/errors.hpp"

namespace harmlab {

namespace {

constexpr const char* kHeader = "#barron-ensemble";

double parse_number(const std::string& token, int line) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw ValidationError(ValidationCode::ParseError,
                          "line " + std::to_string(line) + ": bad number '" + token + "'");
  }
  return value;
}

std::string header_field(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) {
    throw ValidationError(ValidationCode::ParseError, "header expects " + key + "=..., got '" + token + "'");
  }
  return token.substr(key.size() + 1);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_ensemble(std::ostream& out, const NeuronEnsemble& e) {
  out << kHeader << " v1 alpha=" << format_double(e.alpha()) << " dim=" << e.dim() << '\n';
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& n = e.neurons()[i];
    out << format_double(e.probs()[i]) << ' ' << format_double(n.a) << ' '
        << format_double(n.w[0]) << ' ';
    if (e.dim() == 2) out << format_double(n.w[1]) << ' ';
    out << format_double(n.b) << '\n';
  }
}

std::string format_ensemble(const NeuronEnsemble& e) {
  std::ostringstream out;
  write_ensemble(out, e);
  return out.str();
}

NeuronEnsemble read_ensemble(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError(ValidationCode::ParseError, "empty ensemble file");
  }
  std::istringstream head(line);
  std::string magic;
  std::string version;
  std::string alpha_tok;
  std::string dim_tok;
  head >> magic >> version >> alpha_tok >> dim_tok;
  if (magic != kHeader || version != "v1") {
    throw ValidationError(ValidationCode::ParseError, "missing '#barron-ensemble v1' header");
  }
  const double alpha = parse_number(header_field(alpha_tok, "alpha"), 1);
  const double dim_value = parse_number(header_field(dim_tok, "dim"), 1);
  if (dim_value != 1.0 && dim_value != 2.0) {
    throw ValidationError(ValidationCode::ParseError, "dim must be 1 or 2");
  }
  const int dim = static_cast<int>(dim_value);
  const std::size_t fields = dim == 1 ? 4 : 5;

  std::vector<Neuron> neurons;
  std::vector<double> probs;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::vector<double> values;
    std::string token;
    while (row >> token) values.push_back(parse_number(token, line_no));
    if (values.empty()) continue;
    if (values.size() != fields) {
      throw ValidationError(ValidationCode::ParseError,
                            "line " + std::to_string(line_no) + ": expected " +
                                std::to_string(fields) + " fields");
    }
    probs.push_back(values[0]);
    Neuron n;
    n.a = values[1];
    n.w[0] = values[2];
    n.w[1] = dim == 2 ? values[3] : 0.0;
    n.b = values.back();
    neurons.push_back(n);
  }
  return {std::move(neurons), std::move(probs), alpha, dim};
}

NeuronEnsemble parse_ensemble(const std::string& text) {
  std::istringstream in(text);
  return read_ensemble(in);
}

void save_ensemble(const std::string& path, const NeuronEnsemble& e) {
  std::ofstream out(path);
  if (!out) throw ValidationError(ValidationCode::InvalidArgument, "cannot write '" + path + "'");
  write_ensemble(out, e);
}

NeuronEnsemble load_ensemble(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(ValidationCode::InvalidArgument, "cannot read '" + path + "'");
  return read_ensemble(in);
}

}  // namespace harmlab
