#pragma once

#include "braidnorm/bennequin.hpp"
#include "braidnorm/homfly.hpp"
#include "braidnorm/multipoly.hpp"
#include "braidnorm/verify.hpp"

#include <json.hpp>

namespace braidnorm {

using Json = nlohmann::ordered_json;

/// [[coeff, v_exp, z_exp], ...] in canonical order. Coefficients that do not
/// fit in 64 bits are emitted as decimal strings.
Json poly_json(const LaurentVZ& p);

/// Closure data, matrices, Bennequin numbers and Euler reports of a word.
Json info_json(const BraidWord& word);

Json bracket_json(const NormBracket& b);
Json mcmullen_json(const McMullenReport& m);
Json homfly_json(const HomflyReport& r);
Json cable_json(const CablePair& cp);
Json suite_json(const SuiteResult& r);

} // namespace braidnorm
