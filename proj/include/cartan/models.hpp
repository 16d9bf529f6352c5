#pragma once

#include "cartan/lie_model.hpp"

#include <map>
#include <string>
#include <vector>

namespace cartan {

// A model together with its named representations and auxiliary matrices.
struct ModelBundle {
    LieModel model;
    std::vector<Rep> reps;
    std::map<std::string, QMatrix> data;

    const Rep& rep(const std::string& label) const;
    bool has_rep(const std::string& label) const;
    std::vector<std::string> rep_labels() const;
};

// P^n under PSL(n+1). Reps: tangent, O(d) for each twist, V (C^{n+1} restricted), V(1) = V tensor O(1).
ModelBundle projective(int n, const std::vector<int>& twists = {-1, 0, 1, 2});
// Gr(p, C^{p+q}). Reps: tangent, U, Q, V (C^{p+q} restricted).
ModelBundle grassmannian(int p, int q);
// Lagrangian Grassmannian of C^{2n}. Reps: tangent, U, V (C^{2n} restricted).
ModelBundle lagrangian_grassmannian(int n);
// Quadric of dimension n under SO(n+2). Reps: tangent, O(1), V. Data: "q" pairing on g-.
ModelBundle conformal(int n);
// Projective space with a linear P^{p-1}-foliation model. Reps: tangent, TF, normal.
ModelBundle foliated_projective(int p, int q);
// Product of affine models. Reps: tangent.
ModelBundle split_projective(int p, int q);
// G2 modulo the parabolic for the short simple root. Reps: graded-tangent.
ModelBundle g2_flag();

// The standard sl(2) table: f in g-, h in g0, e in g+.
ModelBundle sl2_model();

// Builds a family by name with positional integer parameters; throws std::invalid_argument.
ModelBundle build_model(const std::string& family, const std::vector<int>& params);
std::vector<std::string> model_families();

// Default representation label used by the CLI for a model.
std::string default_rep_label(const ModelBundle& b);

namespace detail {

// Structure constants of the span of the given matrices (which must close under commutator).
LieModel matrix_algebra(std::array<int, 3> dims, std::vector<std::string> names, const std::vector<QMatrix>& basis,
                        ModelInfo info);

struct RootSystem {
    QMatrix cartan;                     // A_ij = 2(a_i,a_j)/(a_j,a_j)
    std::vector<Rational> lengths;      // (a_i, a_i)
    std::vector<std::vector<int>> roots;  // positive roots, simple-root coordinates, height order
    Rational inner(const std::vector<int>& a, const std::vector<int>& b) const;
    int find(const std::vector<int>& r) const;  // index in roots, or -1 (positive only)
};

RootSystem root_system(const QMatrix& cartan);

// Chevalley basis: root vectors for +-roots and coroots h_i; returns the full bracket data
// in the order (negative roots reversed, h_1..h_l, positive roots).
struct ChevalleyAlgebra {
    RootSystem rs;
    std::vector<std::vector<int>> basis_weights;  // root of each basis element (zero for Cartan)
    int rank = 0;
    BracketTable table;
};

ChevalleyAlgebra chevalley(const QMatrix& cartan_matrix);

}  // namespace detail

}  // namespace cartan
