#pragma once

#include "k3gm/serialize.hpp"

#include <string>

namespace k3gm {

// Expansions in the series JSON schema. K and qmax may be as small as 0.
Json emit_periods(Model m, int K, const std::string &which = "all");
Json emit_mirror_map(Model m, int K);
// form: A, B, Cr, E, j or alpha. "C" is rejected: it is not a rational q-series.
Json emit_form(int level, const std::string &form, int qmax);
Json emit_connection(Model m, const std::string &source = "printed");
Json emit_pairing(Model m, const std::string &source = "printed");
Json emit_frame(Model m, int K);

// kind: form | period | mirror-map. For forms `level` 0 means the level of `m`.
Json emit_expansion(const std::string &kind, const std::string &selector, Model m, int level, int K, int qmax);

// Plain-text rendering of any of the above.
std::string expansion_text(const Json &j);

} // namespace k3gm
