#include "cartan/form.hpp"

#include <sstream>
#include <stdexcept>

namespace cartan {

Monomial Monomial::of(std::initializer_list<int> gens) { return from_indices(std::vector<int>(gens)); }

Monomial Monomial::from_indices(const std::vector<int>& gens) {
    Monomial m;
    for (int g : gens) {
        if (g < 0 || g >= kMaxGenerators) throw std::out_of_range("generator index out of range");
        if (m.contains(g)) throw std::invalid_argument("repeated generator in monomial");
        m.bits |= std::uint64_t{1} << g;
    }
    return m;
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

static inline std::uint64_t above(int y) { return y >= 63 ? 0 : ~((std::uint64_t{2} << y) - 1); }

int wedge_sign(Monomial a, Monomial b) {
    if (a.bits & b.bits) return 0;
    int inversions = 0;
    for (std::uint64_t x = b.bits; x; x &= x - 1) inversions += std::popcount(a.bits & above(std::countr_zero(x)));
    return (inversions & 1) ? -1 : 1;
}

std::string Grade::str() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

Form Form::constant(const TauScalar& c) { return monomial(Monomial{}, c); }

Form Form::generator(int g, const TauScalar& c) { return monomial(Monomial::of({g}), c); }

Form Form::monomial(Monomial m, const TauScalar& c) {
    Form f;
    f.add(m, c);
    return f;
}

void Form::add(Monomial m, const TauScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Form::add(Monomial m, const Rational& c, int tau_exp) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, TauScalar(c, tau_exp));
    if (!inserted) {
        it->second.add(tau_exp, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form& Form::operator+=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Form& Form::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Form& Form::operator*=(const TauScalar& c) {
    Terms out;
    for (auto& [m, v] : terms_) {
        TauScalar p = v * c;
        if (!p.is_zero()) out.emplace(m, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

Form Form::tau_shifted(int k) const {
    Form f = *this;
    for (auto& [m, v] : f.terms_) v = v.shifted(k);
    return f;
}

int Form::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, v] : terms_)
        if (m.degree() != d) return -1;
    return d;
}

bool Form::at_grade(const PartLayout& layout, Grade g) const {
    for (const auto& [m, v] : terms_) {
        if (m.degree() != g.degree()) return false;
        if (m.count_in(layout.plus) != g.r) return false;
        if (m.count_in(layout.minus) < g.p) return false;
    }
    return true;
}

Form Form::plus_component(const PartLayout& layout, int r) const {
    return filter([&](Monomial m) { return m.count_in(layout.plus) == r; });
}

Form Form::filter(const std::function<bool(Monomial)>& keep) const {
    Form f;
    for (const auto& [m, v] : terms_)
        if (keep(m)) f.terms_.emplace_hint(f.terms_.end(), m, v);
    return f;
}

std::string Form::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        auto idx = m.indices();
        std::string coeff;
        bool negative = false;
        if (v.is_monomial()) {
            auto [e, c] = v.terms().front();
            negative = c.sign() < 0;
            std::string mag = (negative ? -c : c).str();
            std::string tau = e == 0 ? "" : (e == 1 ? "tau" : "tau^" + std::to_string(e));
            if (tau.empty()) coeff = (mag == "1" && !idx.empty()) ? "" : mag;
            else coeff = mag == "1" ? tau : mag + "*" + tau;
        } else {
            coeff = "(" + v.str() + ")";
        }
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + ")) << coeff;
        first = false;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            auto g = static_cast<std::size_t>(idx[i]);
            os << (i ? "^" : (coeff.empty() ? "" : " ")) << (g < names.size() ? names[g] : "g" + std::to_string(g));
        }
    }
    return os.str();
}

Form wedge(const Form& a, const Form& b) {
    Form out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            TauScalar c = ca * cb;
            if (s < 0) c = -c;
            out.add(Monomial{ma.bits | mb.bits}, c);
        }
    return out;
}

Form wedge_power(const Form& a, int k) {
    Form r = Form::constant(TauScalar(1));
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

Form apply_derivation(const Form& f, const std::vector<Form>& on_generators, bool odd) {
    Form out;
    for (const auto& [m, c] : f.terms()) {
        int pos = 0;
        for (std::uint64_t rem = m.bits; rem; rem &= rem - 1, ++pos) {
            int g = std::countr_zero(rem);
            if (static_cast<std::size_t>(g) >= on_generators.size())
                throw std::out_of_range("apply_derivation: generator without image");
            const Form& img = on_generators[static_cast<std::size_t>(g)];
            if (img.is_zero()) continue;
            std::uint64_t bit = std::uint64_t{1} << g;
            Monomial prefix{m.bits & (bit - 1)};
            Monomial suffix{m.bits & ~((bit - 1) | bit)};
            int base = (odd && (pos & 1)) ? -1 : 1;
            for (const auto& [u, cu] : img.terms()) {
                int s1 = wedge_sign(prefix, u);
                if (!s1) continue;
                Monomial pu{prefix.bits | u.bits};
                int s2 = wedge_sign(pu, suffix);
                if (!s2) continue;
                TauScalar term = c * cu;
                if (base * s1 * s2 < 0) term = -term;
                out.add(Monomial{pu.bits | suffix.bits}, term);
            }
        }
    }
    return out;
}

MatrixForm MatrixForm::identity(std::size_t n) {
    MatrixForm m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Form::constant(TauScalar(1));
    return m;
}

bool MatrixForm::is_zero() const {
    for (const auto& f : data_)
        if (!f.is_zero()) return false;
    return true;
}

Form MatrixForm::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square MatrixForm");
    Form t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

int MatrixForm::parity() const {
    int p = -2;
    for (const auto& f : data_)
        for (const auto& [m, c] : f.terms()) {
            int q = m.degree() & 1;
            if (p == -2) p = q;
            else if (p != q) return -1;
        }
    return p == -2 ? 0 : p;
}

MatrixForm& MatrixForm::operator+=(const MatrixForm& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatrixForm +: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

MatrixForm& MatrixForm::operator-=(const MatrixForm& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatrixForm -: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

MatrixForm& MatrixForm::operator*=(const Rational& c) {
    for (auto& f : data_) f *= c;
    return *this;
}

MatrixForm wedge(const MatrixForm& a, const MatrixForm& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("MatrixForm wedge: shape mismatch");
    MatrixForm c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j) += wedge(a(i, k), b(k, j));
        }
    return c;
}

MatrixForm map_entries(const MatrixForm& a, const std::function<Form(const Form&)>& f) {
    MatrixForm out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f(a(i, j));
    return out;
}

}  // namespace cartan
