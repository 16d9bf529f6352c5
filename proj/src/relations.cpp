#include "cartan/relations.hpp"

#include "cartan/parallel.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace cartan {

int ChernMonomial::degree() const {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += static_cast<int>(i + 1) * exps[i];
    return d;
}

std::string ChernMonomial::str() const {
    std::string s;
    for (std::size_t i = exps.size(); i-- > 0;) {
        if (!exps[i]) continue;
        if (!s.empty()) s += "*";
        s += "c" + std::to_string(i + 1);
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

InvPoly ChernMonomial::poly() const {
    InvPoly p = InvPoly::constant(1);
    for (std::size_t i = 0; i < exps.size(); ++i) p = p * power(InvPoly::chern(static_cast<int>(i + 1)), exps[i]);
    return p;
}

namespace {

void partitions(int remaining, int max_part, std::vector<int>& exps, std::vector<ChernMonomial>& out) {
    if (remaining == 0) {
        out.push_back({exps});
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part)
        for (int count = remaining / part; count >= 1; --count) {
            exps[static_cast<std::size_t>(part - 1)] = count;
            partitions(remaining - part * count, part - 1, exps, out);
            exps[static_cast<std::size_t>(part - 1)] = 0;
        }
}

// Row index of each (monomial, tau exponent) pair seen so far.
class RowIndex {
public:
    int operator()(Monomial mono, int tau) {
        auto key = std::pair{mono.bits, tau};
        auto it = rows_.find(key);
        if (it == rows_.end()) it = rows_.emplace(key, static_cast<int>(rows_.size())).first;
        return it->second;
    }
    std::size_t size() const { return rows_.size(); }

private:
    std::map<std::pair<std::uint64_t, int>, int> rows_;
};

// Transposes column forms into sparse rows.
SparseMatrix columns_to_matrix(const std::vector<Form>& cols, RowIndex& index) {
    std::vector<std::vector<std::pair<int, Rational>>> by_col(cols.size());
    std::vector<SparseMatrix::Row> rows;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [mono, scalar] : cols[c].terms())
            for (const auto& [e, v] : scalar.terms()) {
                int r = index(mono, e);
                if (static_cast<std::size_t>(r) >= rows.size()) rows.resize(static_cast<std::size_t>(r) + 1);
                rows[static_cast<std::size_t>(r)].emplace_back(static_cast<int>(c), v);
            }
    SparseMatrix m;
    m.cols = static_cast<int>(cols.size());
    m.rows = std::move(rows);
    return m;
}

std::vector<Form> dS_images(const LieModel& m, const std::vector<Form>& basis, Grade g) {
    std::vector<Form> out(basis.size());
    parallel_for(basis.size(), [&](std::size_t i) { out[i] = slovak_d(m, basis[i], g); });
    return out;
}

std::vector<Form> search_basis(const LieModel& m, int degree, int plus, int min_minus, bool invariant_only) {
    if (invariant_only) return invariant_basis(m, degree, plus, min_minus);
    std::vector<Form> out;
    for (Monomial mono : enumerate_monomials(m, degree, plus, min_minus)) out.push_back(Form::monomial(mono, TauScalar(1)));
    return out;
}

std::vector<Form> chern_list(const LieModel& m, const Rep& rep, int k) {
    std::vector<Form> c = chern_forms(m, rep, std::min(k, rep.dim));
    c.resize(static_cast<std::size_t>(k));  // c_j = 0 beyond the rank
    return c;
}

Form monomial_form(const std::vector<Form>& c, const ChernMonomial& mono) {
    Form f = Form::constant(TauScalar(1));
    for (std::size_t i = 0; i < mono.exps.size(); ++i)
        for (int e = 0; e < mono.exps[i]; ++e) f = wedge(f, c[i]);
    return f;
}

}  // namespace

std::vector<ChernMonomial> chern_monomials(int k) {
    std::vector<ChernMonomial> out;
    if (k < 1) return out;
    std::vector<int> exps(static_cast<std::size_t>(k), 0);
    partitions(k, k, exps, out);
    return out;
}

std::string Relation::str() const {
    std::string s;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        std::string c = coefficients[i].str();
        if (i) {
            s += c[0] == '-' ? " - " : " + ";
            if (c[0] == '-') c = c.substr(1);
        }
        s += (c == "1" ? "" : c + "*") + monomials[i].str();
    }
    return s + " = 0";
}

Form evaluate_relation(const LieModel& m, const Rep& rep, const Relation& r) {
    int k = 0;
    for (const auto& mono : r.monomials) k = std::max(k, mono.degree());
    std::vector<Form> c = chern_list(m, rep, k);
    Form total;
    for (std::size_t i = 0; i < r.monomials.size(); ++i) total += monomial_form(c, r.monomials[i]) * r.coefficients[i];
    return total;
}

std::vector<Relation> find_relations(const LieModel& m, const Rep& rep, int k, const RelationOptions& opts) {
    return find_relations(m, rep, k, chern_monomials(k), opts);
}

std::vector<Relation> find_relations(const LieModel& m, const Rep& rep, int k, const std::vector<ChernMonomial>& monomials,
                                     const RelationOptions& opts) {
    if (k < 1) throw std::invalid_argument("relation degree must be >= 1");
    for (const auto& mono : monomials)
        if (mono.degree() != k) throw std::invalid_argument("monomial " + mono.str() + " is not of degree " + std::to_string(k));
    std::vector<Form> c = chern_list(m, rep, k);
    std::vector<Form> cols(monomials.size());
    parallel_for(monomials.size(), [&](std::size_t i) { cols[i] = monomial_form(c, monomials[i]); });
    const std::size_t nm = cols.size();
    if (opts.modulo_exact) {
        Grade pre{k, 0, k - 1};
        for (auto& f : dS_images(m, search_basis(m, 2 * k - 1, k - 1, k, opts.invariant_only), pre))
            cols.push_back(f.tau_shifted(k));
    }
    RowIndex index;
    SparseMatrix sys = columns_to_matrix(cols, index);

    // Project the kernel onto the monomial coordinates, then reduce to a canonical basis.
    SparseMatrix proj;
    proj.cols = static_cast<int>(nm);
    for (const auto& v : nullspace(sys)) {
        SparseMatrix::Row row;
        for (std::size_t i = 0; i < nm; ++i)
            if (!v[i].is_zero()) row.emplace_back(static_cast<int>(i), v[i]);
        if (!row.empty()) proj.rows.push_back(std::move(row));
    }
    std::vector<Relation> out;
    for (const auto& row : rref(proj).rows) {
        Vector dense(nm);
        for (const auto& [j, v] : row) dense[static_cast<std::size_t>(j)] = v;
        dense = primitive_integer_vector(dense);
        Relation r;
        for (std::size_t i = 0; i < nm; ++i)
            if (!dense[i].is_zero()) {
                r.monomials.push_back(monomials[i]);
                r.coefficients.push_back(dense[i]);
            }
        Form check = evaluate_relation(m, rep, r);
        bool ok = opts.modulo_exact
                      ? find_primitive(m, check, Grade{k, 0, k}, {opts.invariant_only, k}).exact
                      : check.is_zero();
        if (!ok) throw std::logic_error("relation failed re-evaluation: " + r.str());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Rational> conformal_coefficients(int n) {
    if (n < 1) throw std::invalid_argument("conformal_coefficients: n must be >= 1");
    std::vector<Rational> poly(static_cast<std::size_t>(n) + 1);
    for (int q = 0; 2 * q <= n; ++q)
        for (int i = 0; i <= n - 2 * q; ++i) poly[static_cast<std::size_t>(i + 2 * q)] += binomial(n - 2 * q, i);
    return std::vector<Rational>(poly.begin() + 1, poly.end());
}

ClosedResult is_closed(const LieModel& m, const Form& xi, Grade g) {
    ClosedResult r;
    r.residual = slovak_d(m, xi, g);
    r.closed = r.residual.is_zero();
    return r;
}

PrimitiveResult find_primitive(const LieModel& m, const Form& xi, Grade g, const PrimitiveOptions& opts) {
    if (!xi.at_grade(m.layout(), g)) throw GradeMismatch("find_primitive: target is not at grade " + g.str());
    PrimitiveResult res;
    if (xi.is_zero()) {
        res.exact = true;
        res.primitive = Form();
        return res;
    }
    if (g.r < 1) throw std::invalid_argument("find_primitive: target grade needs r >= 1");
    res.target_closed = slovak_d(m, xi, g).is_zero();

    const int degree = g.degree() - 1, plus = g.r - 1;
    const int zero = degree - plus - opts.min_minus;
    std::vector<Form> basis;
    if (zero >= 0) basis = search_basis(m, degree, plus, opts.min_minus, opts.invariant_only);
    Grade source{opts.min_minus, std::max(zero, 0), plus};
    std::vector<Form> images = dS_images(m, basis, source);

    std::set<int> exps;
    for (const auto& [mono, s] : xi.terms())
        for (const auto& [e, v] : s.terms()) exps.insert(e);

    RowIndex index;
    SparseMatrix sys = columns_to_matrix(images, index);
    // target rows, one right-hand side per tau exponent
    std::map<int, Vector> rhs;
    for (const auto& [mono, s] : xi.terms())
        for (const auto& [e, v] : s.terms()) {
            int r = index(mono, 0);
            auto& b = rhs[e];
            if (b.size() <= static_cast<std::size_t>(r)) b.resize(static_cast<std::size_t>(r) + 1);
            b[static_cast<std::size_t>(r)] = v;
        }
    sys.rows.resize(index.size());
    res.certificate.unknowns = basis.size();
    res.certificate.equations = index.size();
    res.certificate.rank = rank(sys);
    res.certificate.rank_augmented = res.certificate.rank;

    Form psi;
    bool exact = true;
    for (auto& [e, b] : rhs) {
        b.resize(index.size());
        SparseMatrix aug = sys;
        aug.cols += 1;
        for (std::size_t r = 0; r < b.size(); ++r)
            if (!b[r].is_zero()) aug.rows[r].emplace_back(sys.cols, b[r]);
        res.certificate.rank_augmented = std::max(res.certificate.rank_augmented, rank(aug));
        auto x = solve(sys, b);
        if (!x) {
            exact = false;
            continue;
        }
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!(*x)[i].is_zero()) psi += basis[i].tau_shifted(e) * (*x)[i];
    }
    if (!exact) return res;
    if (slovak_d(m, psi, source) != xi) throw std::logic_error("find_primitive: primitive failed re-verification");
    res.exact = true;
    res.primitive = std::move(psi);
    return res;
}

std::vector<AuditEntry> exactness_audit(const LieModel& m, const Rep& rep) {
    if (!rep.extends_to_g) throw std::invalid_argument("representation '" + rep.label + "' is not flagged as a g-module restriction");
    std::vector<AuditEntry> out;
    std::vector<Form> c = chern_forms(m, rep, rep.dim);
    for (int k = 1; k <= rep.dim; ++k) {
        AuditEntry e;
        e.degree = k;
        const Form& ck = c[static_cast<std::size_t>(k - 1)];
        e.zero_form = ck.is_zero();
        e.result = find_primitive(m, ck, Grade{k, 0, k}, {true, 0});
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace cartan
