#include "cartan/models.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cartan {

const Rep& ModelBundle::rep(const std::string& label) const {
    for (const auto& r : reps)
        if (r.label == label) return r;
    throw std::invalid_argument("model has no representation '" + label + "'");
}

bool ModelBundle::has_rep(const std::string& label) const {
    return std::any_of(reps.begin(), reps.end(), [&](const Rep& r) { return r.label == label; });
}

std::vector<std::string> ModelBundle::rep_labels() const {
    std::vector<std::string> out;
    for (const auto& r : reps) out.push_back(r.label);
    return out;
}

namespace detail {

namespace {

// Coordinates of vectors in a fixed basis of a subspace of Q^N, through a set of
// pivot positions where the basis restricts to an invertible square matrix.
class Coordinates {
public:
    explicit Coordinates(const std::vector<Vector>& basis) : basis_(basis) {
        const int d = static_cast<int>(basis.size());
        if (d == 0) return;
        SparseMatrix rows;
        rows.cols = static_cast<int>(basis[0].size());
        for (const auto& b : basis) {
            SparseMatrix::Row r;
            for (std::size_t k = 0; k < b.size(); ++k)
                if (!b[k].is_zero()) r.emplace_back(static_cast<int>(k), b[k]);
            rows.rows.push_back(std::move(r));
        }
        pivots_ = rref(rows).pivots;
        if (static_cast<int>(pivots_.size()) != d) throw std::logic_error("basis vectors are linearly dependent");
        QMatrix sq(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i) sq(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots_[static_cast<std::size_t>(k)])];
        inverse_ = QMatrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        for (int c = 0; c < d; ++c) {
            Vector e(static_cast<std::size_t>(d));
            e[static_cast<std::size_t>(c)] = 1;
            auto x = solve(sq, e);
            if (!x) throw std::logic_error("singular pivot block");
            for (int r = 0; r < d; ++r) inverse_(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = (*x)[static_cast<std::size_t>(r)];
        }
    }

    Vector operator()(const Vector& v) const {
        const std::size_t d = basis_.size();
        Vector vp(d);
        for (std::size_t k = 0; k < d; ++k) vp[k] = v[static_cast<std::size_t>(pivots_[k])];
        Vector x = inverse_.apply(vp);
        Vector back(v.size());
        for (std::size_t i = 0; i < d; ++i)
            if (!x[i].is_zero())
                for (std::size_t k = 0; k < v.size(); ++k)
                    if (!basis_[i][k].is_zero()) back[k] += x[i] * basis_[i][k];
        if (back != v) throw std::logic_error("vector is not in the span (bracket does not close)");
        return x;
    }

private:
    std::vector<Vector> basis_;
    std::vector<int> pivots_;
    QMatrix inverse_;
};

Vector flatten(const QMatrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

BracketTable table_from(int n, const std::function<Vector(int, int)>& bracket_coords) {
    BracketTable t;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vector x = bracket_coords(i, j);
            SparseVec v;
            for (int k = 0; k < n; ++k)
                if (!x[static_cast<std::size_t>(k)].is_zero()) v.emplace_back(k, x[static_cast<std::size_t>(k)]);
            if (!v.empty()) t.emplace(std::pair{i, j}, std::move(v));
        }
    return t;
}

}  // namespace

LieModel matrix_algebra(std::array<int, 3> dims, std::vector<std::string> names, const std::vector<QMatrix>& basis,
                        ModelInfo info) {
    std::vector<Vector> flat;
    for (const auto& b : basis) flat.push_back(flatten(b));
    Coordinates coords(flat);
    auto table = table_from(static_cast<int>(basis.size()), [&](int i, int j) {
        return coords(flatten(QMatrix::commutator(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)])));
    });
    return LieModel(dims, std::move(names), std::move(table), std::move(info));
}

Rational RootSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
    Rational s;
    const std::size_t l = lengths.size();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            if (a[i] && b[j]) s += Rational(a[i] * b[j]) * cartan(i, j) * lengths[j] / Rational(2);
    return s;
}

int RootSystem::find(const std::vector<int>& r) const {
    auto it = std::find(roots.begin(), roots.end(), r);
    return it == roots.end() ? -1 : static_cast<int>(it - roots.begin());
}

RootSystem root_system(const QMatrix& cartan) {
    RootSystem rs;
    rs.cartan = cartan;
    const std::size_t l = cartan.rows();
    // symmetrize: L_j A_ij = L_i A_ji
    rs.lengths.assign(l, Rational(0));
    rs.lengths[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j)
                if (!rs.lengths[i].is_zero() && rs.lengths[j].is_zero() && !cartan(i, j).is_zero()) {
                    rs.lengths[j] = rs.lengths[i] * cartan(j, i) / cartan(i, j);
                    changed = true;
                }
    }
    Rational shortest = rs.lengths[0];
    for (const auto& L : rs.lengths) {
        if (L.is_zero()) throw std::invalid_argument("Cartan matrix is not connected");
        shortest = std::min(shortest, L);
    }
    for (auto& L : rs.lengths) L = L * Rational(2) / shortest;

    // reflection closure from the simple roots
    std::vector<std::vector<int>> all;
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<int> e(l, 0);
        e[i] = 1;
        all.push_back(e);
    }
    for (std::size_t k = 0; k < all.size(); ++k)
        for (std::size_t i = 0; i < l; ++i) {
            std::vector<int> e(l, 0);
            e[i] = 1;
            Rational pairing = Rational(2) * rs.inner(all[k], e) / rs.lengths[i];
            if (!pairing.is_integer()) throw std::logic_error("non-integral root pairing");
            long c = pairing.num().get_si();
            std::vector<int> r = all[k];
            r[i] -= static_cast<int>(c);
            if (std::find(all.begin(), all.end(), r) == all.end()) all.push_back(r);
        }
    for (const auto& r : all)
        if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) rs.roots.push_back(r);
    std::sort(rs.roots.begin(), rs.roots.end(), [](const auto& a, const auto& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a > b;
    });
    return rs;
}

namespace {

class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs) : rs_(rs) {}

    bool is_root(const std::vector<int>& r) const { return index(r) != 0; }

    // +k+1 for positive root k, -(k+1) for its negative, 0 if not a root.
    int index(const std::vector<int>& r) const {
        int k = rs_.find(r);
        if (k >= 0) return k + 1;
        k = rs_.find(neg(r));
        if (k >= 0) return -(k + 1);
        return 0;
    }

    static std::vector<int> neg(std::vector<int> r) {
        for (auto& x : r) x = -x;
        return r;
    }
    static std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    }

    Rational N(const std::vector<int>& r, const std::vector<int>& s) {
        auto key = std::pair{r, s};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Rational v = compute(r, s);
        memo_.emplace(key, v);
        return v;
    }

private:
    Rational compute(const std::vector<int>& r, const std::vector<int>& s) {
        int ir = index(r), is = index(s);
        if (!is_root(add(r, s))) return Rational(0);
        if (ir > 0 && is > 0) {
            if (ir > is) return -N(s, r);
            auto xi = add(r, s);
            auto [a, b] = extraspecial(xi);
            int p = 0;
            for (auto t = b; is_root(t = add(t, neg(a)));) ++p;
            if (r == a) return Rational(p + 1);
            Rational sum;
            auto s_a = add(s, neg(a)), r_a = add(r, neg(a));
            if (is_root(s_a)) sum += N(s, neg(a)) * N(r, neg(b)) / rs_.inner(s_a, s_a);
            if (is_root(r_a)) sum += N(neg(a), r) * N(s, neg(b)) / rs_.inner(r_a, r_a);
            return rs_.inner(xi, xi) / Rational(p + 1) * sum;
        }
        if (ir < 0 && is < 0) return -N(neg(r), neg(s));
        if (ir < 0) return -N(s, r);
        // r positive, s negative
        auto t = neg(add(r, s));
        if (index(t) > 0) return rs_.inner(t, t) / rs_.inner(s, s) * N(t, r);
        return -(rs_.inner(t, t) / rs_.inner(r, r)) * N(neg(s), neg(t));
    }

    std::pair<std::vector<int>, std::vector<int>> extraspecial(const std::vector<int>& xi) const {
        for (std::size_t k = 0; k < rs_.roots.size(); ++k) {
            const auto& a = rs_.roots[k];
            auto b = add(xi, neg(a));
            int ib = rs_.find(b);
            if (ib > static_cast<int>(k)) return {a, b};
        }
        throw std::logic_error("no extraspecial pair");
    }

    const RootSystem& rs_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> memo_;
};

}  // namespace

ChevalleyAlgebra chevalley(const QMatrix& cartan_matrix) {
    ChevalleyAlgebra ca;
    ca.rs = root_system(cartan_matrix);
    ca.rank = static_cast<int>(cartan_matrix.rows());
    const auto& pos = ca.rs.roots;
    const int np = static_cast<int>(pos.size()), l = ca.rank;
    // basis: positive roots, negative roots, coroots
    for (const auto& r : pos) ca.basis_weights.push_back(r);
    for (const auto& r : pos) ca.basis_weights.push_back(StructureConstants::neg(r));
    for (int i = 0; i < l; ++i) ca.basis_weights.push_back(std::vector<int>(static_cast<std::size_t>(l), 0));

    StructureConstants sc(ca.rs);
    auto basis_of_root = [&](const std::vector<int>& r) {
        int k = sc.index(r);
        return k > 0 ? k - 1 : np + (-k - 1);
    };
    const int n = 2 * np + l;
    ca.table = table_from(n, [&](int i, int j) {
        Vector out(static_cast<std::size_t>(n));
        bool hi = i >= 2 * np, hj = j >= 2 * np;
        if (hi && hj) return out;
        if (hi || hj) {
            int h = hi ? i : j, e = hi ? j : i;
            std::vector<int> simple(static_cast<std::size_t>(l), 0);
            simple[static_cast<std::size_t>(h - 2 * np)] = 1;
            const auto& beta = ca.basis_weights[static_cast<std::size_t>(e)];
            Rational c = Rational(2) * ca.rs.inner(beta, simple) / ca.rs.lengths[static_cast<std::size_t>(h - 2 * np)];
            out[static_cast<std::size_t>(e)] = hi ? c : -c;
            return out;
        }
        const auto& a = ca.basis_weights[static_cast<std::size_t>(i)];
        const auto& b = ca.basis_weights[static_cast<std::size_t>(j)];
        auto sum = StructureConstants::add(a, b);
        if (std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; })) {
            // [e_a, e_-a] = h_a, written in simple coroots
            const auto& apos = sc.index(a) > 0 ? a : b;
            Rational len = ca.rs.inner(apos, apos);
            Rational sign = sc.index(a) > 0 ? Rational(1) : Rational(-1);
            for (int k = 0; k < l; ++k)
                out[static_cast<std::size_t>(2 * np + k)] = sign * Rational(apos[static_cast<std::size_t>(k)]) * ca.rs.lengths[static_cast<std::size_t>(k)] / len;
            return out;
        }
        if (!sc.is_root(sum)) return out;
        out[static_cast<std::size_t>(basis_of_root(sum))] = sc.N(a, b);
        return out;
    });
    return ca;
}

}  // namespace detail

namespace {

using detail::matrix_algebra;

QMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

std::string idx(int i) { return std::to_string(i + 1); }

Rep matrix_rep(const std::string& label, const std::vector<QMatrix>& zero_basis,
               const std::function<QMatrix(const QMatrix&)>& restrict) {
    Rep r;
    r.label = label;
    for (const auto& b : zero_basis) r.matrices.push_back(restrict(b));
    r.dim = r.matrices.empty() ? 0 : static_cast<int>(r.matrices[0].rows());
    return r;
}

QMatrix block(const QMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    QMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = m(r0 + i, c0 + j);
    return b;
}

Rep sub_block_rep(const Rep& full, const std::string& label, std::size_t start, std::size_t size) {
    Rep r;
    r.label = label;
    r.dim = static_cast<int>(size);
    for (const auto& m : full.matrices) r.matrices.push_back(block(m, start, start, size, size));
    return r;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

ModelBundle sl2_model() {
    BracketTable t;
    t[{1, 2}] = {{2, Rational(2)}};   // [h,e] = 2e
    t[{0, 1}] = {{0, Rational(2)}};   // [f,h] = 2f
    t[{0, 2}] = {{1, Rational(-1)}};  // [f,e] = -h
    ModelBundle b{LieModel({1, 1, 1}, {"f", "h", "e"}, std::move(t), {"sl2", {}}), {}, {}};
    b.reps.push_back(adjoint_rep(b.model, Part::Minus, "tangent"));
    return b;
}

ModelBundle projective(int n, const std::vector<int>& twists) {
    require(n >= 1, "projective: n must be >= 1");
    const std::size_t N = static_cast<std::size_t>(n) + 1;
    std::vector<QMatrix> basis;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
        basis.push_back(unit(N, static_cast<std::size_t>(i), 0));
        names.push_back("w" + std::to_string(i));
    }
    std::vector<QMatrix> zero;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            QMatrix b = unit(N, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (i == j) b -= QMatrix::identity(N) * Rational(1, static_cast<long>(N));
            zero.push_back(b);
            names.push_back("w" + std::to_string(i) + "_" + std::to_string(j));
        }
    basis.insert(basis.end(), zero.begin(), zero.end());
    for (int j = 1; j <= n; ++j) {
        basis.push_back(unit(N, 0, static_cast<std::size_t>(j)));
        names.push_back("wb" + std::to_string(j));
    }
    ModelBundle b{matrix_algebra({n, n * n, n}, names, basis, {"projective", {n}}), {}, {}};
    b.reps.push_back(adjoint_rep(b.model, Part::Minus, "tangent"));
    // weight of O(d): d times the trace of the gl(n) block of the traceless matrix
    auto block_trace = [&](const QMatrix& z) {
        Rational t;
        for (std::size_t i = 1; i < N; ++i) t += z(i, i);
        return t;
    };
    for (int d : twists) {
        Rep r = matrix_rep("O(" + std::to_string(d) + ")", zero, [&](const QMatrix& z) {
            QMatrix m(1, 1);
            m(0, 0) = Rational(d) * block_trace(z);
            return m;
        });
        r.ghost = true;
        b.reps.push_back(std::move(r));
    }
    Rep v = matrix_rep("V", zero, [](const QMatrix& z) { return z; });
    v.extends_to_g = true;
    b.reps.push_back(std::move(v));
    b.reps.push_back(matrix_rep("V(1)", zero, [&](const QMatrix& z) { return z + QMatrix::identity(N) * block_trace(z); }));
    return b;
}

ModelBundle grassmannian(int p, int q) {
    require(p >= 1 && q >= 1, "grassmannian: p, q must be >= 1");
    const std::size_t N = static_cast<std::size_t>(p + q);
    std::vector<QMatrix> basis, zero;
    std::vector<std::string> names;
    for (int a = 0; a < q; ++a)
        for (int j = 0; j < p; ++j) {
            basis.push_back(unit(N, static_cast<std::size_t>(p + a), static_cast<std::size_t>(j)));
            names.push_back("y" + idx(a) + "_" + idx(j));
        }
    auto traceless = [&](std::size_t i, std::size_t j) {
        QMatrix b = unit(N, i, j);
        if (i == j) b -= QMatrix::identity(N) * Rational(1, static_cast<long>(N));
        return b;
    };
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (i == p - 1 && j == p - 1) continue;  // scalars are quotiented out
            zero.push_back(traceless(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            names.push_back("u" + idx(i) + "_" + idx(j));
        }
    for (int a = 0; a < q; ++a)
        for (int c = 0; c < q; ++c) {
            zero.push_back(traceless(static_cast<std::size_t>(p + a), static_cast<std::size_t>(p + c)));
            names.push_back("v" + idx(a) + "_" + idx(c));
        }
    basis.insert(basis.end(), zero.begin(), zero.end());
    for (int j = 0; j < p; ++j)
        for (int a = 0; a < q; ++a) {
            basis.push_back(unit(N, static_cast<std::size_t>(j), static_cast<std::size_t>(p + a)));
            names.push_back("x" + idx(j) + "_" + idx(a));
        }
    ModelBundle b{matrix_algebra({p * q, p * p + q * q - 1, p * q}, names, basis, {"grassmannian", {p, q}}), {}, {}};
    b.reps.push_back(adjoint_rep(b.model, Part::Minus, "tangent"));
    Rep u = matrix_rep("U", zero, [&](const QMatrix& z) { return block(z, 0, 0, static_cast<std::size_t>(p), static_cast<std::size_t>(p)); });
    Rep qr = matrix_rep("Q", zero, [&](const QMatrix& z) { return block(z, static_cast<std::size_t>(p), static_cast<std::size_t>(p), static_cast<std::size_t>(q), static_cast<std::size_t>(q)); });
    u.ghost = qr.ghost = true;
    b.reps.push_back(std::move(u));
    b.reps.push_back(std::move(qr));
    Rep v = matrix_rep("V", zero, [](const QMatrix& z) { return z; });
    v.extends_to_g = true;
    b.reps.push_back(std::move(v));
    return b;
}

ModelBundle lagrangian_grassmannian(int n) {
    require(n >= 1, "lagrangian_grassmannian: n must be >= 1");
    const std::size_t N = 2 * static_cast<std::size_t>(n), un = static_cast<std::size_t>(n);
    std::vector<QMatrix> basis, zero;
    std::vector<std::string> names;
    auto sym = [&](std::size_t r0, std::size_t c0, std::size_t i, std::size_t j) {
        QMatrix m = unit(N, r0 + i, c0 + j);
        if (i != j) m += unit(N, r0 + j, c0 + i);
        return m;
    };
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i; j < un; ++j) {
            basis.push_back(sym(un, 0, i, j));
            names.push_back("y" + idx(static_cast<int>(i)) + idx(static_cast<int>(j)));
        }
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) {
            zero.push_back(unit(N, i, j) - unit(N, un + j, un + i));
            names.push_back("a" + idx(static_cast<int>(i)) + "_" + idx(static_cast<int>(j)));
        }
    basis.insert(basis.end(), zero.begin(), zero.end());
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i; j < un; ++j) {
            basis.push_back(sym(0, un, i, j));
            names.push_back("x" + idx(static_cast<int>(i)) + idx(static_cast<int>(j)));
        }
    const int s = n * (n + 1) / 2;
    ModelBundle b{matrix_algebra({s, n * n, s}, names, basis, {"lagrangian", {n}}), {}, {}};
    b.reps.push_back(adjoint_rep(b.model, Part::Minus, "tangent"));
    Rep u = matrix_rep("U", zero, [&](const QMatrix& z) { return block(z, 0, 0, un, un); });
    u.ghost = true;
    b.reps.push_back(std::move(u));
    Rep v = matrix_rep("V", zero, [](const QMatrix& z) { return z; });
    v.extends_to_g = true;
    b.reps.push_back(std::move(v));
    return b;
}

ModelBundle conformal(int n) {
    require(n >= 3, "conformal: n must be >= 3");
    const std::size_t un = static_cast<std::size_t>(n), N = un + 2, inf = un + 1;
    const std::size_t m = un / 2;
    // pairing on the middle block: x_k <-> y_k split, plus z^2 for odd n
    QMatrix S(un, un);
    for (std::size_t k = 0; k < m; ++k) S(k, m + k) = S(m + k, k) = 1;
    if (un % 2) S(un - 1, un - 1) = 1;
    std::vector<std::string> mid;
    for (std::size_t k = 0; k < m; ++k) mid.push_back("x" + std::to_string(k + 1));
    for (std::size_t k = 0; k < m; ++k) mid.push_back("y" + std::to_string(k + 1));
    if (un % 2) mid.push_back("z");

    std::vector<QMatrix> basis, zero;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < un; ++i) {
        QMatrix y = unit(N, 1 + i, 0);
        for (std::size_t j = 0; j < un; ++j)
            if (!S(i, j).is_zero()) y(inf, 1 + j) = -S(i, j);
        basis.push_back(y);
        names.push_back(mid[i]);
    }
    zero.push_back(unit(N, 0, 0) - unit(N, inf, inf));
    names.push_back("s");
    // S is its own inverse for these pairings
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) {
            QMatrix k(un, un);
            k(i, j) = 1;
            k(j, i) = -1;
            QMatrix r = S * k;
            QMatrix z(N, N);
            for (std::size_t a = 0; a < un; ++a)
                for (std::size_t c = 0; c < un; ++c) z(1 + a, 1 + c) = r(a, c);
            zero.push_back(z);
            names.push_back("r" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    basis.insert(basis.end(), zero.begin(), zero.end());
    for (std::size_t i = 0; i < un; ++i) {
        QMatrix x = unit(N, 1 + i, inf);
        for (std::size_t j = 0; j < un; ++j)
            if (!S(i, j).is_zero()) x(0, 1 + j) = -S(i, j);
        basis.push_back(x);
        names.push_back("p" + mid[i]);
    }
    ModelBundle b{matrix_algebra({n, n * (n - 1) / 2 + 1, n}, names, basis, {"conformal", {n}}), {}, {}};
    b.reps.push_back(adjoint_rep(b.model, Part::Minus, "tangent"));
    Rep o1 = matrix_rep("O(1)", zero, [&](const QMatrix& z) {
        QMatrix w(1, 1);
        w(0, 0) = -z(0, 0);
        return w;
    });
    o1.ghost = true;
    b.reps.push_back(std::move(o1));
    Rep v = matrix_rep("V", zero, [](const QMatrix& z) { return z; });
    v.extends_to_g = true;
    b.reps.push_back(std::move(v));
    b.data["q"] = S;
    return b;
}

ModelBundle foliated_projective(int p, int q) {
    require(p >= 1 && q >= 1, "foliated_projective: p, q must be >= 1");
    const std::size_t N = static_cast<std::size_t>(p + q) + 1;
    auto L = [](int i) { return static_cast<std::size_t>(1 + i); };
    auto T = [p](int a) { return static_cast<std::size_t>(1 + p + a); };
    std::vector<QMatrix> basis, zero;
    std::vector<std::string> names;
    for (int i = 0; i < p; ++i) {
        basis.push_back(unit(N, L(i), 0));
        names.push_back("t" + idx(i));
    }
    for (int a = 0; a < q; ++a) {
        basis.push_back(unit(N, T(a), 0));
        names.push_back("n" + idx(a));
    }
    auto traceless = [&](std::size_t i, std::size_t j) {
        QMatrix b = unit(N, i, j);
        if (i == j) b -= QMatrix::identity(N) * Rational(1, static_cast<long>(N));
        return b;
    };
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            zero.push_back(traceless(L(i), L(j)));
            names.push_back("t" + idx(i) + "_" + idx(j));
        }
    for (int a = 0; a < q; ++a)
        for (int c = 0; c < q; ++c) {
            zero.push_back(traceless(T(a), T(c)));
            names.push_back("n" + idx(a) + "_" + idx(c));
        }
    basis.insert(basis.end(), zero.begin(), zero.end());
    for (int a = 0; a < q; ++a) {
        basis.push_back(unit(N, 0, T(a)));
        names.push_back("nb" + idx(a));
    }
    for (int i = 0; i < p; ++i)
        for (int a = 0; a < q; ++a) {
            basis.push_back(unit(N, L(i), T(a)));
            names.push_back("s" + idx(i) + "_" + idx(a));
        }
    ModelBundle b{matrix_algebra({p + q, p * p + q * q, q + p * q}, names, basis, {"foliated", {p, q}}), {}, {}};
    Rep tangent = adjoint_rep(b.model, Part::Minus, "tangent");
    b.reps.push_back(sub_block_rep(tangent, "TF", 0, static_cast<std::size_t>(p)));
    b.reps.push_back(sub_block_rep(tangent, "normal", static_cast<std::size_t>(p), static_cast<std::size_t>(q)));
    b.reps.insert(b.reps.begin(), std::move(tangent));
    return b;
}

ModelBundle split_projective(int p, int q) {
    require(p >= 1 && q >= 1, "split_projective: p, q must be >= 1");
    const std::size_t N = static_cast<std::size_t>(p + q) + 2;
    const std::size_t c1 = static_cast<std::size_t>(p), o2 = c1 + 1, c2 = o2 + static_cast<std::size_t>(q);
    std::vector<QMatrix> basis;
    std::vector<std::string> names;
    for (int i = 0; i < p; ++i) {
        basis.push_back(unit(N, static_cast<std::size_t>(i), c1));
        names.push_back("t" + idx(i));
    }
    for (int a = 0; a < q; ++a) {
        basis.push_back(unit(N, o2 + static_cast<std::size_t>(a), c2));
        names.push_back("n" + idx(a));
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            basis.push_back(unit(N, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            names.push_back("t" + idx(i) + "_" + idx(j));
        }
    for (int a = 0; a < q; ++a)
        for (int c = 0; c < q; ++c) {
            basis.push_back(unit(N, o2 + static_cast<std::size_t>(a), o2 + static_cast<std::size_t>(c)));
            names.push_back("n" + idx(a) + "_" + idx(c));
        }
    ModelBundle b{matrix_algebra({p + q, p * p + q * q, 0}, names, basis, {"split", {p, q}}), {}, {}};
    Rep tangent = adjoint_rep(b.model, Part::Minus, "tangent");
    tangent.extends_to_g = true;  // g- is an abelian ideal here
    b.reps.push_back(std::move(tangent));
    return b;
}

ModelBundle g2_flag() {
    detail::ChevalleyAlgebra ca = detail::chevalley(QMatrix{{2, -1}, {-3, 2}});
    const auto& rs = ca.rs;
    const int np = static_cast<int>(rs.roots.size());
    const int n = 2 * np + 2;
    auto root_vec = [&](std::vector<int> r) {
        Vector v(static_cast<std::size_t>(n));
        bool negative = r[0] < 0 || r[1] < 0;
        if (negative)
            for (auto& x : r) x = -x;
        int k = rs.find(r);
        if (k < 0) throw std::logic_error("g2: missing root");
        v[static_cast<std::size_t>(negative ? np + k : k)] = 1;
        return v;
    };
    // Cartan elements H with prescribed values of the simple roots.
    auto cartan_vec = [&](Rational on_a1, Rational on_a2) {
        // alpha_j(h_i) = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)
        QMatrix mtx(2, 2);
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 2; ++i) {
                std::vector<int> ai{i == 0, i == 1}, aj{j == 0, j == 1};
                mtx(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = Rational(2) * rs.inner(aj, ai) / rs.lengths[static_cast<std::size_t>(i)];
            }
        auto c = solve(mtx, Vector{on_a1, on_a2});
        Vector v(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(2 * np)] = (*c)[0];
        v[static_cast<std::size_t>(2 * np + 1)] = (*c)[1];
        return v;
    };
    std::vector<Vector> nb = {
        root_vec({-3, -1}), root_vec({-3, -2}), root_vec({-2, -1}), root_vec({-1, 0}), root_vec({-1, -1}),
        cartan_vec(-1, 1),  root_vec({0, 1}),   root_vec({0, -1}),  cartan_vec(0, -1),
        root_vec({1, 0}),   root_vec({1, 1}),   root_vec({2, 1}),   root_vec({3, 1}),  root_vec({3, 2}),
    };
    std::vector<std::string> names = {"w1", "w2", "w3", "w4", "w5", "v1", "v2", "v3", "v4",
                                      "v5", "v6", "v7", "c1", "c2"};
    std::vector<std::string> tmp;
    for (int i = 0; i < n; ++i) tmp.push_back("e" + std::to_string(i));
    LieModel native({0, n, 0}, tmp, ca.table, {});

    detail::Coordinates coords(nb);
    auto table = detail::table_from(n, [&](int i, int j) {
        return coords(bracket(native, nb[static_cast<std::size_t>(i)], nb[static_cast<std::size_t>(j)]));
    });
    ModelBundle b{LieModel({5, 4, 5}, names, std::move(table), {"g2", {}}), {}, {}};
    b.reps.push_back(adjoint_rep(b.model, Part::Minus, "graded-tangent"));
    return b;
}

ModelBundle build_model(const std::string& family, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument(family + ": expected " + std::to_string(k) + " parameter(s), got " + std::to_string(params.size()));
    };
    if (family == "projective") return want(1), projective(params[0]);
    if (family == "grassmannian") return want(2), grassmannian(params[0], params[1]);
    if (family == "lagrangian") return want(1), lagrangian_grassmannian(params[0]);
    if (family == "conformal") return want(1), conformal(params[0]);
    if (family == "foliated") return want(2), foliated_projective(params[0], params[1]);
    if (family == "split") return want(2), split_projective(params[0], params[1]);
    if (family == "g2") return want(0), g2_flag();
    if (family == "sl2") return want(0), sl2_model();
    throw std::invalid_argument("unknown model family '" + family + "'");
}

std::vector<std::string> model_families() {
    return {"projective", "grassmannian", "lagrangian", "conformal", "foliated", "split", "g2", "sl2"};
}

std::string default_rep_label(const ModelBundle& b) {
    if (b.has_rep("tangent")) return "tangent";
    if (b.has_rep("graded-tangent")) return "graded-tangent";
    return b.reps.empty() ? std::string() : b.reps.front().label;
}

}  // namespace cartan
