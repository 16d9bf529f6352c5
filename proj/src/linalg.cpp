#include "cartan/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cartan {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector QMatrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector QMatrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("QMatrix::apply: dimension mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix +: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix -: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix *: shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
        }
    return c;
}

QMatrix QMatrix::commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

std::string QMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

SparseMatrix SparseMatrix::from_dense(const QMatrix& m) {
    SparseMatrix s;
    s.cols = static_cast<int>(m.cols());
    s.rows.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) s.rows[i].emplace_back(static_cast<int>(j), m(i, j));
    return s;
}

QMatrix SparseMatrix::to_dense() const {
    QMatrix m(rows.size(), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i]) m(i, static_cast<std::size_t>(j)) = v;
    return m;
}

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

void remove_content(IntRow& r) {
    if (r.empty()) return;
    mpz_class g = abs(r[0].second);
    for (std::size_t i = 1; i < r.size() && g != 1; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].second.get_mpz_t());
    if (g != 1)
        for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseMatrix::Row& r) {
    mpz_class l = 1;
    for (const auto& e : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.value().get_den_mpz_t());
    IntRow out;
    out.reserve(r.size());
    for (const auto& e : r) {
        mpz_class v = e.second.value().get_num() * (l / e.second.value().get_den());
        out.emplace_back(e.first, std::move(v));
    }
    remove_content(out);
    return out;
}

// target <- s*target - t*src, with s, t chosen so that column col cancels.
void eliminate(IntRow& target, const IntRow& src, int col) {
    const mpz_class* a = nullptr;
    for (const auto& e : target)
        if (e.first == col) { a = &e.second; break; }
    if (!a) return;
    const mpz_class& p = std::find_if(src.begin(), src.end(), [col](const auto& e) { return e.first == col; })->second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a->get_mpz_t());
    mpz_class s = p / g, t = *a / g;
    IntRow out;
    out.reserve(target.size() + src.size());
    std::size_t i = 0, j = 0;
    mpz_class v;
    while (i < target.size() || j < src.size()) {
        if (j == src.size() || (i < target.size() && target[i].first < src[j].first)) {
            out.emplace_back(target[i].first, s * target[i].second);
            ++i;
        } else if (i == target.size() || src[j].first < target[i].first) {
            out.emplace_back(src[j].first, -t * src[j].second);
            ++j;
        } else {
            v = s * target[i].second - t * src[j].second;
            if (v != 0) out.emplace_back(target[i].first, v);
            ++i;
            ++j;
        }
    }
    remove_content(out);
    target = std::move(out);
}

}  // namespace

SparseRref rref(const SparseMatrix& m) {
    std::vector<IntRow> work;
    work.reserve(m.rows.size());
    for (const auto& r : m.rows) {
        for (std::size_t k = 1; k < r.size(); ++k)
            if (r[k].first <= r[k - 1].first) throw std::invalid_argument("SparseMatrix row not sorted");
        IntRow ir = to_int_row(r);
        if (!ir.empty()) work.push_back(std::move(ir));
    }

    // Forward elimination: repeatedly take the smallest leading column, choose
    // the sparsest row leading there as pivot, clear that column in the others.
    std::vector<IntRow> pivots;
    std::vector<int> pivot_cols;
    while (!work.empty()) {
        int c = work[0].front().first;
        for (const auto& r : work) c = std::min(c, r.front().first);
        std::size_t best = work.size();
        for (std::size_t i = 0; i < work.size(); ++i)
            if (work[i].front().first == c && (best == work.size() || work[i].size() < work[best].size())) best = i;
        IntRow piv = std::move(work[best]);
        work.erase(work.begin() + static_cast<long>(best));
        std::vector<IntRow> next;
        next.reserve(work.size());
        for (auto& r : work) {
            if (r.front().first == c) eliminate(r, piv, c);
            if (!r.empty()) next.push_back(std::move(r));
        }
        work = std::move(next);
        pivots.push_back(std::move(piv));
        pivot_cols.push_back(c);
    }

    // Back substitution, still fraction free.
    for (std::size_t k = pivots.size(); k-- > 0;)
        for (std::size_t i = 0; i < k; ++i) eliminate(pivots[i], pivots[k], pivot_cols[k]);

    SparseRref out;
    out.pivots = pivot_cols;
    out.rows.reserve(pivots.size());
    for (const auto& r : pivots) {
        SparseMatrix::Row row;
        row.reserve(r.size());
        const mpz_class& lead = r.front().second;
        for (const auto& e : r) row.emplace_back(e.first, Rational(e.second, lead));
        out.rows.push_back(std::move(row));
    }
    return out;
}

RrefResult rref(const QMatrix& m) {
    SparseRref s = rref(SparseMatrix::from_dense(m));
    RrefResult r{QMatrix(m.rows(), m.cols()), s.pivots};
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        for (const auto& [j, v] : s.rows[i]) r.reduced(i, static_cast<std::size_t>(j)) = v;
    return r;
}

std::size_t rank(const SparseMatrix& m) { return rref(m).pivots.size(); }
std::size_t rank(const QMatrix& m) { return rank(SparseMatrix::from_dense(m)); }

std::vector<Vector> nullspace(const SparseMatrix& m) {
    SparseRref r = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vector> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vector v(static_cast<std::size_t>(m.cols));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            for (const auto& [j, val] : r.rows[i])
                if (j == f) v[static_cast<std::size_t>(r.pivots[i])] = -val;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> nullspace(const QMatrix& m) { return nullspace(SparseMatrix::from_dense(m)); }

std::optional<Vector> solve(const SparseMatrix& m, const Vector& b) {
    if (b.size() != m.rows.size()) throw std::invalid_argument("solve: right-hand side length mismatch");
    SparseMatrix aug;
    aug.cols = m.cols + 1;
    aug.rows = m.rows;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) aug.rows[i].emplace_back(m.cols, b[i]);
    SparseRref r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols) return std::nullopt;
    Vector x(static_cast<std::size_t>(m.cols));
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        if (r.rows[i].back().first == m.cols) x[static_cast<std::size_t>(r.pivots[i])] = r.rows[i].back().second;

    // re-verify
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        Rational acc;
        for (const auto& [j, v] : m.rows[i]) acc += v * x[static_cast<std::size_t>(j)];
        if (acc != b[i]) throw std::logic_error("solve: verification failed");
    }
    return x;
}

std::optional<Vector> solve(const QMatrix& m, const Vector& b) { return solve(SparseMatrix::from_dense(m), b); }

Vector primitive_integer_vector(const Vector& v) {
    mpz_class l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        ints.push_back(x.value().get_num() * (l / x.value().get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (g == 0) return v;
    int lead = 0;
    for (const auto& x : ints)
        if (x != 0) { lead = sgn(x); break; }
    Vector out;
    out.reserve(v.size());
    for (const auto& x : ints) out.emplace_back(mpz_class(x / g * lead));
    return out;
}

}  // namespace cartan
