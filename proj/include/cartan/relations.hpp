#pragma once

#include "cartan/char_classes.hpp"
#include "cartan/exterior.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cartan {

// Exponent vector of a Chern monomial: exps[i] is the power of c_{i+1}.
struct ChernMonomial {
    std::vector<int> exps;
    int degree() const;
    std::string str() const;  // "c2", "c1^2", "c1*c2"
    InvPoly poly() const;
    friend bool operator==(const ChernMonomial&, const ChernMonomial&) = default;
};

// All monomials of weighted degree k, c_k first and c_1^k last.
std::vector<ChernMonomial> chern_monomials(int k);

struct Relation {
    std::vector<ChernMonomial> monomials;  // only the monomials with nonzero coefficient
    std::vector<Rational> coefficients;    // coprime integers, first one positive
    std::string str() const;
};

struct RelationOptions {
    // Relations in the quotient by dS-exact forms at grade (k,0,k) instead of exact form identities.
    bool modulo_exact = false;
    bool invariant_only = true;
};

// Basis of all linear relations among the degree-k Chern monomials of rep, as exact forms
// (or as classes with modulo_exact). Every relation is re-evaluated before return.
std::vector<Relation> find_relations(const LieModel& m, const Rep& rep, int k, const RelationOptions& opts = {});
// Same, restricted to the given monomials.
std::vector<Relation> find_relations(const LieModel& m, const Rep& rep, int k, const std::vector<ChernMonomial>& monomials,
                                     const RelationOptions& opts = {});

// sum_j coefficient_j * monomial_j evaluated on the Chern forms of rep.
Form evaluate_relation(const LieModel& m, const Rep& rep, const Relation& r);

// a_1..a_n from sum_{q=0}^{floor(n/2)} (1+h)^(n-2q) h^(2q) = 1 + a_1 h + a_2 h^2 + ...
std::vector<Rational> conformal_coefficients(int n);

struct ClosedResult {
    bool closed = false;
    Form residual;
};

// dS at the given grade; throws GradeMismatch if the form is not at that grade.
ClosedResult is_closed(const LieModel& m, const Form& xi, Grade g);

struct PrimitiveOptions {
    bool invariant_only = true;
    int min_minus = 0;
};

struct RankCertificate {
    std::size_t unknowns = 0;    // dimension of the search space
    std::size_t equations = 0;   // number of monomials in the target grade touched
    std::size_t rank = 0;        // rank of the dS matrix on the search space
    std::size_t rank_augmented = 0;  // rank with the target appended; larger means NotExact
};

struct PrimitiveResult {
    bool exact = false;
    bool target_closed = true;
    std::optional<Form> primitive;
    RankCertificate certificate;
};

// Solves dS psi = xi at grade g over forms with plus count g.r - 1, degree g.degree() - 1 and
// at least min_minus minus factors. A returned psi is re-verified exactly.
PrimitiveResult find_primitive(const LieModel& m, const Form& xi, Grade g, const PrimitiveOptions& opts = {});

struct AuditEntry {
    int degree = 0;
    bool zero_form = false;
    PrimitiveResult result;
};

// For a rep that extends to all of g: is each c_k dS-exact at grade (k,0,k) with min_minus 0?
// Throws std::invalid_argument if the rep is not flagged extends_to_g.
std::vector<AuditEntry> exactness_audit(const LieModel& m, const Rep& rep);

}  // namespace cartan
