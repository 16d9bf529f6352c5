#include "cartan/exterior.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace cartan {

Form ce_differential(const LieModel& m, const Form& f) { return apply_derivation(f, m.dual_differentials(), true); }

Form slovak_d(const LieModel& m, const Form& f, Grade g) {
    if (!f.at_grade(m.layout(), g)) throw GradeMismatch("slovak_d: form is not at grade " + g.str());
    const std::uint64_t plus = m.layout().plus;
    // Only generators whose d raises the plus count can contribute.
    std::vector<Form> raising(m.dual_differentials().size());
    for (std::size_t a = 0; a < raising.size(); ++a) {
        int own = (plus >> a) & 1U;
        raising[a] = m.dual_differentials()[a].filter([&](Monomial u) { return u.count_in(plus) == own + 1; });
    }
    return apply_derivation(f, raising, true).plus_component(m.layout(), g.r + 1);
}

namespace {

void combinations(const std::vector<int>& pool, int k, std::size_t start, std::uint64_t acc, std::vector<std::uint64_t>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(k) <= pool.size(); ++i)
        combinations(pool, k - 1, i + 1, acc | (std::uint64_t{1} << pool[i]), out);
}

std::vector<int> part_indices(const LieModel& m, Part p) {
    std::vector<int> v;
    for (int g = m.offset(p); g < m.offset(p) + m.dim(p); ++g) v.push_back(g);
    return v;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const LieModel& m, int degree, int plus_count, int min_minus) {
    std::vector<Monomial> out;
    if (degree < 0 || plus_count < 0 || plus_count > degree) return out;
    auto minus = part_indices(m, Part::Minus), zero = part_indices(m, Part::Zero), plus = part_indices(m, Part::Plus);
    std::vector<std::uint64_t> ps;
    combinations(plus, plus_count, 0, 0, ps);
    for (int s = std::max(min_minus, 0); s <= degree - plus_count; ++s) {
        int z = degree - plus_count - s;
        if (s > static_cast<int>(minus.size()) || z > static_cast<int>(zero.size())) continue;
        std::vector<std::uint64_t> ms, zs;
        combinations(minus, s, 0, 0, ms);
        combinations(zero, z, 0, 0, zs);
        for (auto a : ms)
            for (auto b : zs)
                for (auto c : ps) out.push_back(Monomial{a | b | c});
    }
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

std::vector<Form> invariant_basis(const LieModel& m, int degree, int plus_count, int min_minus) {
    std::vector<Monomial> mons = enumerate_monomials(m, degree, plus_count, min_minus);
    const int n = m.total_dim();

    // g0 generators acting diagonally on dual generators give weights; keep weight zero.
    std::vector<int> general;
    std::vector<std::vector<Rational>> weights;
    for (int u = m.offset(Part::Zero); u < m.offset(Part::Zero) + m.dim(Part::Zero); ++u) {
        const auto& img = m.coadjoint_images(u);
        std::vector<Rational> w(static_cast<std::size_t>(n));
        bool diagonal = true;
        for (int a = 0; a < n && diagonal; ++a) {
            const Form& f = img[static_cast<std::size_t>(a)];
            if (f.is_zero()) continue;
            if (f.size() != 1 || f.terms().begin()->first.bits != (std::uint64_t{1} << a)) {
                diagonal = false;
                break;
            }
            w[static_cast<std::size_t>(a)] = f.terms().begin()->second.coeff(0);
        }
        if (diagonal) weights.push_back(std::move(w));
        else general.push_back(u);
    }
    std::erase_if(mons, [&](Monomial mono) {
        for (const auto& w : weights) {
            Rational s;
            for (int g : mono.indices()) s += w[static_cast<std::size_t>(g)];
            if (!s.is_zero()) return true;
        }
        return false;
    });

    SparseMatrix sys;
    sys.cols = static_cast<int>(mons.size());
    std::map<std::pair<int, std::uint64_t>, std::size_t> row_of;
    for (std::size_t c = 0; c < mons.size(); ++c) {
        Form basis = Form::monomial(mons[c], TauScalar(1));
        for (int u : general) {
            const Form image = coadjoint_action(m, u, basis);
            for (const auto& [mono, coeff] : image.terms()) {
                auto key = std::pair{u, mono.bits};
                auto it = row_of.find(key);
                if (it == row_of.end()) {
                    it = row_of.emplace(key, sys.rows.size()).first;
                    sys.rows.emplace_back();
                }
                sys.rows[it->second].emplace_back(static_cast<int>(c), coeff.coeff(0));
            }
        }
    }

    std::vector<Form> out;
    for (const auto& v : nullspace(sys)) {
        Form f;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) f.add(mons[c], v[c], 0);
        out.push_back(std::move(f));
    }
    return out;
}

Grade natural_grade(const LieModel& m, int g) {
    switch (m.generator(g).part) {
        case Part::Minus: return {1, 0, 0};
        case Part::Zero: return {0, 1, 0};
        case Part::Plus: return {0, 0, 1};
    }
    return {};
}

}  // namespace cartan
