#pragma once

#include "cartan/form.hpp"
#include "cartan/linalg.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cartan {

enum class Part { Minus = 0, Zero = 1, Plus = 2 };

const char* part_symbol(Part p);

struct Generator {
    Part part;
    int index;  // position within its part
    std::string name;
};

// Sparse coefficient vector over the global generator basis.
using SparseVec = std::vector<std::pair<int, Rational>>;

// Keys are (i, j) with i < j; [e_j, e_i] is implied by antisymmetry.
using BracketTable = std::map<std::pair<int, int>, SparseVec>;

struct ModelInfo {
    std::string family;
    std::vector<int> params;
};

// Trigraded Lie algebra g = g- + g0 + g+ given by exact structure constants.
class LieModel {
public:
    LieModel() = default;
    // Throws std::invalid_argument / std::out_of_range on malformed tables.
    LieModel(std::array<int, 3> dims, std::vector<std::string> names, BracketTable brackets, ModelInfo info = {});

    int dim(Part p) const { return dims_[static_cast<int>(p)]; }
    std::array<int, 3> dims() const { return dims_; }
    int total_dim() const { return dims_[0] + dims_[1] + dims_[2]; }
    int offset(Part p) const;
    int global(Part p, int index) const { return offset(p) + index; }

    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(int g) const { return gens_.at(static_cast<std::size_t>(g)); }
    std::vector<std::string> names() const;
    int index_of(const std::string& name) const;  // -1 if absent

    const PartLayout& layout() const { return layout_; }
    const BracketTable& table() const { return table_; }
    const ModelInfo& info() const { return info_; }

    // [e_i, e_j] as a sparse vector.
    SparseVec bracket_basis(int i, int j) const;
    // Coefficient of e_k in [e_i, e_j].
    Rational structure_constant(int i, int j, int k) const;

    // d of the dual generator xi^a at the flat model.
    const Form& dual_differential(int a) const { return d_gen_.at(static_cast<std::size_t>(a)); }
    const std::vector<Form>& dual_differentials() const { return d_gen_; }
    // Images of all dual generators under the coadjoint action of e_u.
    const std::vector<Form>& coadjoint_images(int u) const { return coadj_.at(static_cast<std::size_t>(u)); }

private:
    std::array<int, 3> dims_{0, 0, 0};
    std::vector<Generator> gens_;
    BracketTable table_;
    ModelInfo info_;
    PartLayout layout_;
    std::vector<Form> d_gen_;
    std::vector<std::vector<Form>> coadj_;
};

Vector unit_vector(const LieModel& m, int g);
Vector bracket(const LieModel& m, const Vector& x, const Vector& y);
Vector proj(const LieModel& m, Part part, const Vector& v);

// (u . xi)(y) = -xi([u, y]), extended to forms as an even derivation.
// Defined for every generator u; the g0 generators give the invariance conditions.
Form coadjoint_action(const LieModel& m, int u, const Form& f);

// Representation of g0 by rational matrices, one per g0 generator (in g0 order).
struct Rep {
    std::string label;
    int dim = 0;
    std::vector<QMatrix> matrices;
    bool ghost = false;         // no bundle at group level
    bool extends_to_g = false;  // restriction of a g-module
};

struct ValidationFailure {
    std::string condition;
    std::vector<int> witnesses;  // generator indices
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    bool ok() const { return failures.empty(); }
    bool has(const std::string& condition) const;
};

// Jacobi identity plus the eight bracket-vanishing conditions of the splitting.
ValidationReport validate_model(const LieModel& m);
// Shape checks and rho([u,v]) = [rho(u), rho(v)] for g0 generators.
ValidationReport validate_rep(const LieModel& m, const Rep& rep);

// g0 acting on g- by the bracket (g0 generator order, g- basis).
Rep adjoint_rep(const LieModel& m, Part on, const std::string& label);

}  // namespace cartan
