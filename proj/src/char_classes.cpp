#include "cartan/char_classes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cartan {

// ---- InvPoly

InvPoly InvPoly::constant(const Rational& c) { return word({}, c); }

InvPoly InvPoly::trace(int k) {
    if (k < 1) throw std::invalid_argument("trace power must be >= 1");
    return word({k});
}

InvPoly InvPoly::word(Word w, const Rational& c) {
    InvPoly p;
    if (c.is_zero()) return p;
    std::sort(w.begin(), w.end(), std::greater<>());
    p.terms_[w] = c;
    return p;
}

InvPoly InvPoly::chern(int k) {
    if (k < 0) throw std::invalid_argument("chern index must be >= 0");
    std::vector<InvPoly> e{constant(1)};
    for (int j = 1; j <= k; ++j) {
        InvPoly s;
        for (int i = 1; i <= j; ++i) {
            InvPoly t = e[static_cast<std::size_t>(j - i)] * trace(i);
            if (i % 2 == 0) t *= Rational(-1);
            s += t;
        }
        e.push_back(s * Rational(1, j));
    }
    return e[static_cast<std::size_t>(k)];
}

InvPoly InvPoly::character(int k) {
    if (k == 0) return constant(1);
    return trace(k) * (Rational(1) / factorial(k));
}

int InvPoly::degree() const {
    int d = -2;
    for (const auto& [w, c] : terms_) {
        int s = std::accumulate(w.begin(), w.end(), 0);
        if (d == -2) d = s;
        else if (d != s) return -1;
    }
    return d == -2 ? 0 : d;
}

InvPoly& InvPoly::operator+=(const InvPoly& o) {
    for (const auto& [w, c] : o.terms_) {
        auto& slot = terms_[w];
        slot += c;
        if (slot.is_zero()) terms_.erase(w);
    }
    return *this;
}

InvPoly& InvPoly::operator-=(const InvPoly& o) { return *this += o * Rational(-1); }

InvPoly& InvPoly::operator*=(const Rational& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

InvPoly operator*(const InvPoly& a, const InvPoly& b) {
    InvPoly out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            InvPoly::Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out += InvPoly::word(w, ca * cb);
        }
    return out;
}

InvPoly power(const InvPoly& p, int e) {
    if (e < 0) throw std::invalid_argument("negative power");
    InvPoly r = InvPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

std::string InvPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        std::string cs = c.str();
        if (!s.empty()) {
            if (cs[0] == '-') {
                s += " - ";
                cs = cs.substr(1);
            } else {
                s += " + ";
            }
        }
        if (w.empty()) {
            s += cs;
            continue;
        }
        if (cs != "1") s += (cs == "-1" ? "-" : cs + "*");
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*tr" : "tr") + std::to_string(w[i]);
    }
    return s;
}

// ---- Atiyah data

AtiyahTensor atiyah_tensor(const LieModel& m, const Rep& rep) {
    AtiyahTensor t;
    t.n_plus = m.dim(Part::Plus);
    t.n_minus = m.dim(Part::Minus);
    const int z0 = m.offset(Part::Zero);
    for (int x = 0; x < t.n_plus; ++x)
        for (int y = 0; y < t.n_minus; ++y) {
            QMatrix a(static_cast<std::size_t>(rep.dim), static_cast<std::size_t>(rep.dim));
            for (const auto& [k, c] : m.bracket_basis(m.global(Part::Plus, x), m.global(Part::Minus, y)))
                if (m.generator(k).part == Part::Zero) a -= rep.matrices.at(static_cast<std::size_t>(k - z0)) * c;
            t.values.push_back(std::move(a));
        }
    return t;
}

MatrixForm atiyah_form(const LieModel& m, const Rep& rep) {
    AtiyahTensor t = atiyah_tensor(m, rep);
    const std::size_t d = static_cast<std::size_t>(rep.dim);
    MatrixForm A(d, d);
    for (int x = 0; x < t.n_plus; ++x)
        for (int y = 0; y < t.n_minus; ++y) {
            const QMatrix& a = t.at(x, y);
            // chi^x ^ omega^y = -(omega^y ^ chi^x), the latter canonical
            Monomial mono = Monomial::of({m.global(Part::Minus, y), m.global(Part::Plus, x)});
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (!a(i, j).is_zero()) A(i, j).add(mono, -a(i, j), 0);
        }
    return A;
}

bool TangentAtiyah::symmetric() const {
    for (int x = 0; x < n_plus; ++x)
        for (int y = 0; y < n_minus; ++y)
            for (int z = y + 1; z < n_minus; ++z)
                if (at(x, y, z) != at(x, z, y)) return false;
    return true;
}

TangentAtiyah tangent_atiyah_form(const LieModel& m) {
    Rep tangent = adjoint_rep(m, Part::Minus, "tangent");
    AtiyahTensor a = atiyah_tensor(m, tangent);
    TangentAtiyah t;
    t.n_plus = a.n_plus;
    t.n_minus = a.n_minus;
    for (int x = 0; x < t.n_plus; ++x)
        for (int y = 0; y < t.n_minus; ++y)
            for (int z = 0; z < t.n_minus; ++z) {
                Vector v = a.at(x, y).column(static_cast<std::size_t>(z));
                Vector w = a.at(x, z).column(static_cast<std::size_t>(y));
                for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + w[i]) / Rational(2);
                t.values.push_back(std::move(v));
            }
    return t;
}

MatrixForm connection_matrix(const LieModel& m, const Rep& rep) {
    const std::size_t d = static_cast<std::size_t>(rep.dim);
    MatrixForm M(d, d);
    for (int b = 0; b < m.dim(Part::Zero); ++b) {
        const QMatrix& r = rep.matrices.at(static_cast<std::size_t>(b));
        int g = m.global(Part::Zero, b);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!r(i, j).is_zero()) M(i, j).add(Monomial::of({g}), r(i, j), 0);
    }
    return M;
}

// ---- Chern forms

namespace {

MatrixForm scalar_matrix(std::size_t n, const Form& f) {
    MatrixForm r(n, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = f;
    return r;
}

void check_rep(const LieModel& m, const Rep& rep) {
    if (static_cast<int>(rep.matrices.size()) != m.dim(Part::Zero))
        throw std::invalid_argument("representation '" + rep.label + "' does not match the model's g0");
}

std::vector<Form> trace_powers(const MatrixForm& A, int k_max) {
    std::vector<Form> p;
    MatrixForm P = A;
    for (int i = 1; i <= k_max; ++i) {
        if (i > 1) P = wedge(P, A);
        p.push_back(P.trace());
    }
    return p;
}

}  // namespace

std::vector<Form> chern_forms(const LieModel& m, const Rep& rep, int k_max) {
    check_rep(m, rep);
    MatrixForm A = atiyah_form(m, rep);
    const std::size_t n = A.rows();
    std::vector<Form> out;
    MatrixForm B = MatrixForm::identity(n);
    for (int k = 1; k <= k_max; ++k) {
        MatrixForm C = wedge(A, B);
        Form e = C.trace() * Rational(1, k);
        B = scalar_matrix(n, e) - C;
        out.push_back(e.tau_shifted(k));
    }
    return out;
}

std::vector<Form> chern_forms_newton(const LieModel& m, const Rep& rep, int k_max) {
    check_rep(m, rep);
    std::vector<Form> p = trace_powers(atiyah_form(m, rep), k_max);
    std::vector<Form> e{Form::constant(TauScalar(1))};
    for (int k = 1; k <= k_max; ++k) {
        Form s;
        for (int i = 1; i <= k; ++i) {
            Form t = wedge(e[static_cast<std::size_t>(k - i)], p[static_cast<std::size_t>(i - 1)]);
            if (i % 2 == 0) s -= t;
            else s += t;
        }
        e.push_back(s * Rational(1, k));
    }
    std::vector<Form> out;
    for (int k = 1; k <= k_max; ++k) out.push_back(e[static_cast<std::size_t>(k)].tau_shifted(k));
    return out;
}

std::vector<Form> chern_character(const LieModel& m, const Rep& rep, int j_max) {
    check_rep(m, rep);
    std::vector<Form> p = trace_powers(atiyah_form(m, rep), j_max);
    std::vector<Form> out;
    for (int j = 1; j <= j_max; ++j)
        out.push_back((p[static_cast<std::size_t>(j - 1)] * (Rational(1) / factorial(j))).tau_shifted(j));
    return out;
}

std::vector<Form> todd_forms(const LieModel& m, const Rep& rep, int k_max) {
    if (k_max > 4) throw std::invalid_argument("todd forms are only available up to degree 4");
    int need = std::min(k_max, rep.dim);
    std::vector<Form> c = chern_forms(m, rep, need);
    while (static_cast<int>(c.size()) < 4) c.emplace_back();
    const Form &c1 = c[0], &c2 = c[1], &c3 = c[2], &c4 = c[3];
    std::vector<Form> td;
    if (k_max >= 1) td.push_back(c1 * Rational(1, 2));
    if (k_max >= 2) td.push_back((wedge(c1, c1) + c2) * Rational(1, 12));
    if (k_max >= 3) td.push_back(wedge(c1, c2) * Rational(1, 24));
    if (k_max >= 4) {
        Form c1sq = wedge(c1, c1);
        Form t = -wedge(c1sq, c1sq) + wedge(c1sq, c2) * Rational(4) + wedge(c1, c3) + wedge(c2, c2) * Rational(3) - c4;
        td.push_back(t * Rational(1, 720));
    }
    return td;
}

// ---- polarization

Form invariant_poly_eval(const InvPoly& f, const std::vector<MatrixForm>& args) {
    const int k = static_cast<int>(args.size());
    if (f.is_zero()) return {};
    if (f.degree() != k) throw std::invalid_argument("invariant polynomial of degree " + std::to_string(f.degree()) +
                                                     " evaluated on " + std::to_string(k) + " argument(s)");
    if (k == 0) return Form::constant(TauScalar(f.terms().begin()->second));

    std::vector<int> cls(static_cast<std::size_t>(k)), odd(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        cls[static_cast<std::size_t>(i)] = i;
        for (int j = 0; j < i; ++j)
            if (args[static_cast<std::size_t>(j)] == args[static_cast<std::size_t>(i)]) {
                cls[static_cast<std::size_t>(i)] = cls[static_cast<std::size_t>(j)];
                break;
            }
        int par = args[static_cast<std::size_t>(i)].parity();
        if (par < 0) throw std::invalid_argument("matrix argument has entries of mixed parity");
        odd[static_cast<std::size_t>(i)] = par;
    }

    // Collapse permutations to distinct arrangements of argument classes, with summed Koszul signs.
    std::map<std::vector<int>, Rational> arrangements;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (odd[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] &&
                    odd[static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])] &&
                    perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                    ++inv;
        // identical arguments give identical evaluations; key by the class sequence
        std::vector<int> key;
        for (int p : perm) key.push_back(cls[static_cast<std::size_t>(p)]);
        arrangements[key] += Rational(inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<std::vector<int>, MatrixForm> products;
    std::function<const MatrixForm&(const std::vector<int>&)> product = [&](const std::vector<int>& seq) -> const MatrixForm& {
        if (auto it = products.find(seq); it != products.end()) return it->second;
        MatrixForm r = seq.size() == 1 ? args[static_cast<std::size_t>(seq[0])]
                                       : wedge(product(std::vector<int>(seq.begin(), seq.end() - 1)),
                                               args[static_cast<std::size_t>(seq.back())]);
        return products.emplace(seq, std::move(r)).first->second;
    };
    std::map<std::vector<int>, Form> traces;
    auto trace_of = [&](const std::vector<int>& seq) -> const Form& {
        auto it = traces.find(seq);
        if (it != traces.end()) return it->second;
        return traces.emplace(seq, product(seq).trace()).first->second;
    };

    Form total;
    for (const auto& [key, weight] : arrangements) {
        if (weight.is_zero()) continue;
        for (const auto& [w, c] : f.terms()) {
            Form prod = Form::constant(TauScalar(1));
            std::size_t pos = 0;
            for (int len : w) {
                std::vector<int> chunk(key.begin() + static_cast<std::ptrdiff_t>(pos),
                                       key.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(len)));
                pos += static_cast<std::size_t>(len);
                prod = wedge(prod, trace_of(chunk));
                if (prod.is_zero()) break;
            }
            if (!prod.is_zero()) total += prod * (weight * c);
        }
    }
    return total * (Rational(1) / factorial(k));
}

Form characteristic_form(const LieModel& m, const Rep& rep, const InvPoly& f) {
    check_rep(m, rep);
    int k = f.degree();
    if (k < 0) throw std::invalid_argument("invariant polynomial is not homogeneous");
    if (f.is_zero()) return {};
    MatrixForm A = atiyah_form(m, rep);
    return invariant_poly_eval(f, std::vector<MatrixForm>(static_cast<std::size_t>(k), A)).tau_shifted(k);
}

Rational chern_simons_coefficient(int k, int j) {
    Rational a = factorial(k - 1) / (factorial(k + j) * factorial(k - 1 - j));
    return j % 2 ? -a : a;
}

Form chern_simons_form(const LieModel& m, const Rep& rep, const InvPoly& f, bool literal_coefficients) {
    check_rep(m, rep);
    int k = f.degree();
    if (k < 0) throw std::invalid_argument("invariant polynomial is not homogeneous");
    if (k == 0 || f.is_zero()) return {};
    MatrixForm A = atiyah_form(m, rep), M = connection_matrix(m, rep);
    MatrixForm V = wedge(M, M);
    if (literal_coefficients) V *= Rational(2);
    Form cs;
    for (int j = 0; j < k; ++j) {
        std::vector<MatrixForm> args{M};
        for (int i = 0; i < j; ++i) args.push_back(V);
        for (int i = 0; i < k - 1 - j; ++i) args.push_back(A);
        Rational coeff = chern_simons_coefficient(k, j);
        if (!literal_coefficients) coeff *= factorial(k);
        cs += invariant_poly_eval(f, args) * coeff;
    }
    return cs.tau_shifted(k);
}

Form cs_class(const LieModel& m, const Rep& rep, const InvPoly& f) {
    check_rep(m, rep);
    int k = f.degree();
    if (k < 0) throw std::invalid_argument("invariant polynomial is not homogeneous");
    if (k == 0 || f.is_zero()) return {};
    MatrixForm A = atiyah_form(m, rep), M = connection_matrix(m, rep);
    std::vector<MatrixForm> args{M};
    for (int i = 1; i < k; ++i) args.push_back(A);
    return invariant_poly_eval(f, args).tau_shifted(k);
}

// ---- splitting principle

MultiplicativityReport verify_multiplicativity(const LieModel& m, const Rep& sub, const Rep& total, const Rep& quot,
                                               int k_max) {
    check_rep(m, sub);
    check_rep(m, total);
    check_rep(m, quot);
    const std::size_t s = static_cast<std::size_t>(sub.dim), q = static_cast<std::size_t>(quot.dim);
    if (static_cast<std::size_t>(total.dim) != s + q) throw std::invalid_argument("dimensions do not add up");
    for (std::size_t u = 0; u < total.matrices.size(); ++u) {
        const QMatrix& t = total.matrices[u];
        for (std::size_t i = 0; i < s + q; ++i)
            for (std::size_t j = 0; j < s + q; ++j) {
                Rational expect;
                bool fixed = true;
                if (i < s && j < s) expect = sub.matrices[u](i, j);
                else if (i >= s && j >= s) expect = quot.matrices[u](i - s, j - s);
                else if (i >= s && j < s) expect = 0;
                else fixed = false;
                if (fixed && t(i, j) != expect)
                    throw std::invalid_argument("total representation is not block triangular over sub and quotient");
            }
    }
    auto padded = [&](const Rep& r) {
        std::vector<Form> c{Form::constant(TauScalar(1))};
        auto ck = chern_forms(m, r, std::min(k_max, r.dim));
        c.insert(c.end(), ck.begin(), ck.end());
        c.resize(static_cast<std::size_t>(k_max) + 1);
        return c;
    };
    auto cs = padded(sub), cq = padded(quot), ct = padded(total);
    MultiplicativityReport rep;
    for (int k = 1; k <= k_max; ++k) {
        Form prod;
        for (int i = 0; i <= k; ++i) prod += wedge(cs[static_cast<std::size_t>(i)], cq[static_cast<std::size_t>(k - i)]);
        Form defect = ct[static_cast<std::size_t>(k)] - prod;
        rep.degree_ok.push_back(defect.is_zero());
        rep.ok = rep.ok && defect.is_zero();
        rep.defects.push_back(std::move(defect));
    }
    return rep;
}

}  // namespace cartan
