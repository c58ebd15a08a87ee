#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fo52/fobracket.hpp"
#include "fo52/grassmann.hpp"
#include "fo52/multivector.hpp"

namespace fo52 {

// {"grade": g, "coeff_degree": d, "components": [{"index": [i,j,…],
//  "poly": [{"exp": [a0..a4], "coeff": "p/q"}]}]}
std::string multivector_to_json(const PolyMultivector& m);
PolyMultivector multivector_from_json(const std::string& text);

// {"seed": n, "planes": [[2x5 rows], ...], "w_basis": 5x10 rows}
std::string fixture_to_json(const Fixture& f);
Fixture fixture_from_json(const std::string& text);

// {"format": "fo52.pi52.v1", "grid_seed": g, "n_samples": n, "rank": 126,
//  "columns": [[[row, "p/q"], ...], ...]}, 252 sparse columns in lex
// subset order.
std::string pi52_to_json(const Pi52Map& m);
Pi52Map pi52_from_json(const std::string& text);

// Recomputes the matrix rank and re-checks canonical form (triv₂ pivot
// coordinates of every column are zero); throws RankDeficit / ParseError.
void require_certified(const Pi52Map& m);

std::string load_text_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

} // namespace fo52
