#include "cartan/lie_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cartan {

const char* part_symbol(Part p) {
    switch (p) {
        case Part::Minus: return "-";
        case Part::Zero: return "0";
        case Part::Plus: return "+";
    }
    return "?";
}

LieModel::LieModel(std::array<int, 3> dims, std::vector<std::string> names, BracketTable brackets, ModelInfo info)
    : dims_(dims), table_(std::move(brackets)), info_(std::move(info)) {
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("negative part dimension");
    const int n = total_dim();
    if (n > kMaxGenerators) throw std::invalid_argument("model has more than 64 generators");
    if (static_cast<int>(names.size()) != n)
        throw std::invalid_argument("names: expected " + std::to_string(n) + " entries, got " + std::to_string(names.size()));
    std::set<std::string> seen;
    for (int g = 0; g < n; ++g) {
        Part p = g < dims_[0] ? Part::Minus : (g < dims_[0] + dims_[1] ? Part::Zero : Part::Plus);
        if (!seen.insert(names[static_cast<std::size_t>(g)]).second)
            throw std::invalid_argument("duplicate generator name '" + names[static_cast<std::size_t>(g)] + "'");
        gens_.push_back({p, g - offset(p), names[static_cast<std::size_t>(g)]});
        std::uint64_t bit = std::uint64_t{1} << g;
        if (p == Part::Minus) layout_.minus |= bit;
        else if (p == Part::Zero) layout_.zero |= bit;
        else layout_.plus |= bit;
    }

    for (auto it = table_.begin(); it != table_.end();) {
        auto [i, j] = it->first;
        auto& v = it->second;
        auto triple = [&](int k) {
            std::ostringstream os;
            os << "[" << i << "," << j << "," << k << "]";
            return os.str();
        };
        if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("bracket " + triple(-1) + " index out of range (total dim " + std::to_string(n) + ")");
        if (i >= j) throw std::invalid_argument("bracket " + triple(-1) + " must have i < j");
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec merged;
        for (auto& [k, c] : v) {
            if (k < 0 || k >= n) throw std::out_of_range("bracket " + triple(k) + " index out of range (total dim " + std::to_string(n) + ")");
            if (!merged.empty() && merged.back().first == k) merged.back().second += c;
            else merged.emplace_back(k, c);
        }
        std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
        if (merged.empty()) {
            it = table_.erase(it);
        } else {
            v = std::move(merged);
            ++it;
        }
    }

    d_gen_.assign(static_cast<std::size_t>(n), Form{});
    for (const auto& [ij, v] : table_)
        for (const auto& [a, c] : v) d_gen_[static_cast<std::size_t>(a)].add(Monomial::of({ij.first, ij.second}), -c, 0);

    coadj_.assign(static_cast<std::size_t>(n), std::vector<Form>(static_cast<std::size_t>(n)));
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < n; ++b)
            for (const auto& [a, c] : bracket_basis(u, b))
                coadj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(a)].add(Monomial::of({b}), -c, 0);
}

int LieModel::offset(Part p) const {
    switch (p) {
        case Part::Minus: return 0;
        case Part::Zero: return dims_[0];
        case Part::Plus: return dims_[0] + dims_[1];
    }
    return 0;
}

std::vector<std::string> LieModel::names() const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.name);
    return out;
}

int LieModel::index_of(const std::string& name) const {
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].name == name) return static_cast<int>(g);
    return -1;
}

SparseVec LieModel::bracket_basis(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    auto it = table_.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == table_.end()) return {};
    SparseVec v = it->second;
    if (flip)
        for (auto& e : v) e.second = -e.second;
    return v;
}

Rational LieModel::structure_constant(int i, int j, int k) const {
    for (const auto& [kk, c] : bracket_basis(i, j))
        if (kk == k) return c;
    return Rational(0);
}

Vector unit_vector(const LieModel& m, int g) {
    Vector v(static_cast<std::size_t>(m.total_dim()));
    v.at(static_cast<std::size_t>(g)) = 1;
    return v;
}

Vector bracket(const LieModel& m, const Vector& x, const Vector& y) {
    const auto n = static_cast<std::size_t>(m.total_dim());
    if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: dimension mismatch");
    Vector out(n);
    for (const auto& [ij, v] : m.table()) {
        auto i = static_cast<std::size_t>(ij.first), j = static_cast<std::size_t>(ij.second);
        Rational w = x[i] * y[j] - x[j] * y[i];
        if (w.is_zero()) continue;
        for (const auto& [k, c] : v) out[static_cast<std::size_t>(k)] += w * c;
    }
    return out;
}

Vector proj(const LieModel& m, Part part, const Vector& v) {
    if (v.size() != static_cast<std::size_t>(m.total_dim())) throw std::invalid_argument("proj: dimension mismatch");
    Vector out(v.size());
    for (int g = m.offset(part); g < m.offset(part) + m.dim(part); ++g) out[static_cast<std::size_t>(g)] = v[static_cast<std::size_t>(g)];
    return out;
}

Form coadjoint_action(const LieModel& m, int u, const Form& f) {
    if (u < 0 || u >= m.total_dim()) throw std::out_of_range("coadjoint_action: bad generator");
    return apply_derivation(f, m.coadjoint_images(u), false);
}

bool ValidationReport::has(const std::string& condition) const {
    return std::any_of(failures.begin(), failures.end(), [&](const auto& f) { return f.condition == condition; });
}

namespace {

void add_term(SparseVec& acc, int k, const Rational& c) {
    for (auto& e : acc)
        if (e.first == k) {
            e.second += c;
            return;
        }
    acc.emplace_back(k, c);
}

// [e_i, sparse vector]
SparseVec bracket_with(const LieModel& m, int i, const SparseVec& v) {
    SparseVec out;
    for (const auto& [j, c] : v)
        for (const auto& [k, d] : m.bracket_basis(i, j)) add_term(out, k, c * d);
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

}  // namespace

ValidationReport validate_model(const LieModel& m) {
    ValidationReport rep;
    const int n = m.total_dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                SparseVec acc;
                for (const auto& [g, c] : bracket_with(m, i, m.bracket_basis(j, k))) add_term(acc, g, c);
                for (const auto& [g, c] : bracket_with(m, j, m.bracket_basis(k, i))) add_term(acc, g, c);
                for (const auto& [g, c] : bracket_with(m, k, m.bracket_basis(i, j))) add_term(acc, g, c);
                std::erase_if(acc, [](const auto& e) { return e.second.is_zero(); });
                if (acc.empty()) continue;
                std::string sig = std::string("(") + part_symbol(m.generator(i).part) + "," +
                                  part_symbol(m.generator(j).part) + "," + part_symbol(m.generator(k).part) + ")";
                rep.failures.push_back({"jacobi", {i, j, k},
                                        "Jacobi fails on " + m.generator(i).name + "," + m.generator(j).name + "," +
                                            m.generator(k).name + " " + sig});
            }

    struct Cond {
        Part a, b, out;
    };
    const Cond conds[] = {{Part::Zero, Part::Zero, Part::Minus}, {Part::Zero, Part::Plus, Part::Minus},
                          {Part::Plus, Part::Plus, Part::Minus}, {Part::Plus, Part::Plus, Part::Zero},
                          {Part::Zero, Part::Minus, Part::Zero}, {Part::Zero, Part::Minus, Part::Plus},
                          {Part::Zero, Part::Zero, Part::Plus},  {Part::Zero, Part::Plus, Part::Zero}};
    for (const auto& c : conds) {
        std::string name = std::string("[g") + part_symbol(c.a) + ",g" + part_symbol(c.b) + "]_" + part_symbol(c.out) + "=0";
        for (int i = m.offset(c.a); i < m.offset(c.a) + m.dim(c.a); ++i)
            for (int j = m.offset(c.b); j < m.offset(c.b) + m.dim(c.b); ++j) {
                if (c.a == c.b && j <= i) continue;
                for (const auto& [k, v] : m.bracket_basis(i, j))
                    if (m.generator(k).part == c.out) {
                        rep.failures.push_back({name, {i, j}, "[" + m.generator(i).name + "," + m.generator(j).name +
                                                                  "] has component along " + m.generator(k).name});
                        break;
                    }
            }
    }
    return rep;
}

ValidationReport validate_rep(const LieModel& m, const Rep& rep) {
    ValidationReport out;
    const int n0 = m.dim(Part::Zero);
    if (static_cast<int>(rep.matrices.size()) != n0) {
        out.failures.push_back({"rep-shape", {}, rep.label + ": expected " + std::to_string(n0) + " matrices"});
        return out;
    }
    for (const auto& a : rep.matrices)
        if (static_cast<int>(a.rows()) != rep.dim || static_cast<int>(a.cols()) != rep.dim) {
            out.failures.push_back({"rep-shape", {}, rep.label + ": matrix is not " + std::to_string(rep.dim) + "x" + std::to_string(rep.dim)});
            return out;
        }
    const int off = m.offset(Part::Zero);
    for (int u = 0; u < n0; ++u)
        for (int v = u + 1; v < n0; ++v) {
            QMatrix lhs(static_cast<std::size_t>(rep.dim), static_cast<std::size_t>(rep.dim));
            for (const auto& [k, c] : m.bracket_basis(off + u, off + v)) {
                if (m.generator(k).part != Part::Zero) continue;
                lhs += rep.matrices[static_cast<std::size_t>(k - off)] * c;
            }
            if (lhs != QMatrix::commutator(rep.matrices[static_cast<std::size_t>(u)], rep.matrices[static_cast<std::size_t>(v)]))
                out.failures.push_back({"rep-commutator", {off + u, off + v},
                                        rep.label + ": rho([" + m.generator(off + u).name + "," + m.generator(off + v).name + "]) != commutator"});
        }
    return out;
}

Rep adjoint_rep(const LieModel& m, Part on, const std::string& label) {
    Rep r;
    r.label = label;
    r.dim = m.dim(on);
    const int off0 = m.offset(Part::Zero), off = m.offset(on);
    for (int u = 0; u < m.dim(Part::Zero); ++u) {
        QMatrix a(static_cast<std::size_t>(r.dim), static_cast<std::size_t>(r.dim));
        for (int j = 0; j < r.dim; ++j)
            for (const auto& [k, c] : m.bracket_basis(off0 + u, off + j)) {
                if (m.generator(k).part != on) continue;
                a(static_cast<std::size_t>(k - off), static_cast<std::size_t>(j)) = c;
            }
        r.matrices.push_back(std::move(a));
    }
    return r;
}

}  // namespace cartan
