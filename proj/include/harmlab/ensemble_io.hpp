#pragma once

#include <iosfwd>
#include <string>

#include "harmlab/barron.hpp"

namespace harmlab {

// Plain-text ensemble format:
//   #barron-ensemble v1 alpha=<alpha> dim=<d>
//   prob a w_1 [w_2] b        (one neuron per line)
// Numbers are printed with 17 significant digits, so a round trip is exact.

void write_ensemble(std::ostream& out, const NeuronEnsemble& e);
std::string format_ensemble(const NeuronEnsemble& e);

/// Throws ValidationError(ParseError) for malformed text and the usual
/// ensemble validation errors for inconsistent content.
NeuronEnsemble read_ensemble(std::istream& in);
NeuronEnsemble parse_ensemble(const std::string& text);

void save_ensemble(const std::string& path, const NeuronEnsemble& e);
NeuronEnsemble load_ensemble(const std::string& path);

/// %.17g formatting used by every text output of the library.
std::string format_double(double v);

}  // namespace harmlab
