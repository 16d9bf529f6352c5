#pragma once

#include "cartan/errors.hpp"
#include "cartan/form.hpp"
#include "cartan/lie_model.hpp"

#include <vector>

namespace cartan {

// Chevalley-Eilenberg differential: d xi^a = -sum_{b<c} c^a_{bc} xi^b ^ xi^c, as an odd derivation.
Form ce_differential(const LieModel& m, const Form& f);

// Component of d f with exactly r+1 plus factors. Throws GradeMismatch unless f is at grade g.
Form slovak_d(const LieModel& m, const Form& f, Grade g);

// All monomials of the given degree with exactly plus_count plus factors and at least min_minus minus factors.
std::vector<Monomial> enumerate_monomials(const LieModel& m, int degree, int plus_count, int min_minus);

// Basis of the g0-invariant forms spanned by enumerate_monomials(...), in reduced echelon shape.
std::vector<Form> invariant_basis(const LieModel& m, int degree, int plus_count, int min_minus);

// Natural grade of a single dual generator: (1,0,0), (0,1,0) or (0,0,1).
Grade natural_grade(const LieModel& m, int g);

}  // namespace cartan
