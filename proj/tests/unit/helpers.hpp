#pragma once

#include "cartan/models.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

struct Named {
    std::string label;
    cartan::ModelBundle bundle;
};

// The built-in model list used by the validation and cross-algorithm checks.
inline std::vector<Named> catalogue() {
    using namespace cartan;
    std::vector<Named> out;
    for (int n = 1; n <= 5; ++n) out.push_back({"projective(" + std::to_string(n) + ")", projective(n)});
    for (auto [p, q] : {std::pair{1, 1}, {2, 2}, {2, 3}})
        out.push_back({"grassmannian(" + std::to_string(p) + "," + std::to_string(q) + ")", grassmannian(p, q)});
    for (int n = 1; n <= 2; ++n) out.push_back({"lagrangian(" + std::to_string(n) + ")", lagrangian_grassmannian(n)});
    for (int n = 3; n <= 5; ++n) out.push_back({"conformal(" + std::to_string(n) + ")", conformal(n)});
    for (int k = 1; k <= 2; ++k) {
        out.push_back({"foliated(" + std::to_string(k) + "," + std::to_string(k) + ")", foliated_projective(k, k)});
        out.push_back({"split(" + std::to_string(k) + "," + std::to_string(k) + ")", split_projective(k, k)});
    }
    out.push_back({"g2", g2_flag()});
    return out;
}

inline cartan::Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    return cartan::Rational(num(rng), den(rng));
}

// Random combination of up to `terms` monomials of the given degree.
inline cartan::Form random_form(const cartan::LieModel& m, std::mt19937& rng, int degree, int terms) {
    cartan::Form f;
    std::uniform_int_distribution<int> gen(0, m.total_dim() - 1);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> idx;
        while (static_cast<int>(idx.size()) < degree) {
            int g = gen(rng);
            if (std::find(idx.begin(), idx.end(), g) == idx.end()) idx.push_back(g);
        }
        f.add(cartan::Monomial::from_indices(idx), random_rational(rng), 0);
    }
    return f;
}

// Random form at grade (p, q, r) with exactly p minus and q zero factors.
inline cartan::Form random_graded_form(const cartan::LieModel& m, std::mt19937& rng, cartan::Grade g, int terms) {
    using cartan::Part;
    cartan::Form f;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> idx;
        auto pick = [&](Part part, int count) {
            int n = m.dim(part);
            std::vector<int> pool(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = m.global(part, i);
            std::shuffle(pool.begin(), pool.end(), rng);
            for (int i = 0; i < count; ++i) idx.push_back(pool[static_cast<std::size_t>(i)]);
        };
        pick(Part::Minus, g.p);
        pick(Part::Zero, g.q);
        pick(Part::Plus, g.r);
        f.add(cartan::Monomial::from_indices(idx), random_rational(rng), 0);
    }
    return f;
}

}  // namespace testing_support
