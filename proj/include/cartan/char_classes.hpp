#pragma once

#include "cartan/form.hpp"
#include "cartan/lie_model.hpp"

#include <map>
#include <string>
#include <vector>

namespace cartan {

// Invariant polynomial on matrices as a rational combination of trace words.
// The word {k1 >= k2 >= ...} stands for tr(X^k1) tr(X^k2) ...
class InvPoly {
public:
    using Word = std::vector<int>;
    using Terms = std::map<Word, Rational>;

    InvPoly() = default;
    static InvPoly constant(const Rational& c);
    static InvPoly trace(int k);                    // tr(X^k)
    static InvPoly word(Word w, const Rational& c = Rational(1));
    static InvPoly chern(int k);                    // elementary symmetric e_k via Newton
    static InvPoly character(int k);                // tr(X^k)/k!

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Common degree of all words; -1 if mixed, 0 for constants and zero.
    int degree() const;

    InvPoly& operator+=(const InvPoly& o);
    InvPoly& operator-=(const InvPoly& o);
    InvPoly& operator*=(const Rational& c);
    friend InvPoly operator+(InvPoly a, const InvPoly& b) { return a += b; }
    friend InvPoly operator-(InvPoly a, const InvPoly& b) { return a -= b; }
    friend InvPoly operator*(InvPoly a, const Rational& c) { return a *= c; }
    friend InvPoly operator*(const Rational& c, InvPoly a) { return a *= c; }
    friend InvPoly operator*(const InvPoly& a, const InvPoly& b);
    friend bool operator==(const InvPoly& a, const InvPoly& b) = default;

    std::string str() const;

private:
    Terms terms_;
};

InvPoly power(const InvPoly& p, int e);

// a(x, y) = -rho(proj0 [x, y]) for x in g+, y in g- (indices within the parts).
struct AtiyahTensor {
    int n_plus = 0, n_minus = 0;
    std::vector<QMatrix> values;  // index x * n_minus + y
    const QMatrix& at(int x, int y) const { return values.at(static_cast<std::size_t>(x * n_minus + y)); }
};

AtiyahTensor atiyah_tensor(const LieModel& m, const Rep& rep);

// A = sum a(e_x, e_y) chi^x ^ omega^y, a matrix of 2-forms with one plus and one minus factor.
MatrixForm atiyah_form(const LieModel& m, const Rep& rep);

// Symmetrized tangent tensor a_T(x, y, z) = (a(x,y)z + a(x,z)y)/2, valued in g-.
struct TangentAtiyah {
    int n_plus = 0, n_minus = 0;
    std::vector<Vector> values;  // index (x * n_minus + y) * n_minus + z
    const Vector& at(int x, int y, int z) const {
        return values.at(static_cast<std::size_t>((x * n_minus + y) * n_minus + z));
    }
    bool symmetric() const;
};

TangentAtiyah tangent_atiyah_form(const LieModel& m);

// M = sum_b rho(e_b) eta^b over the g0 generators.
MatrixForm connection_matrix(const LieModel& m, const Rep& rep);

// c_1..c_kmax by Faddeev-LeVerrier; c_k = tau^k e_k(A).
std::vector<Form> chern_forms(const LieModel& m, const Rep& rep, int k_max);
// Same via Newton's identities from the traces tr(A^i).
std::vector<Form> chern_forms_newton(const LieModel& m, const Rep& rep, int k_max);
// ch_j = tau^j tr(A^j)/j!
std::vector<Form> chern_character(const LieModel& m, const Rep& rep, int j_max);
// td_1..td_kmax from the universal polynomials; k_max <= 4.
std::vector<Form> todd_forms(const LieModel& m, const Rep& rep, int k_max);

// Polarized evaluation (1/k!) sum_sigma (Koszul sign) word(X_sigma(1), ..., X_sigma(k)).
// Throws std::invalid_argument if the number of arguments differs from the degree.
Form invariant_poly_eval(const InvPoly& f, const std::vector<MatrixForm>& args);

// tau^k f(A, ..., A).
Form characteristic_form(const LieModel& m, const Rep& rep, const InvPoly& f);

// Transgression of f. Default: sum_j k! a_j f(M, (M^M)^j, A^(k-1-j)) with
// a_j = (-1)^j (k-1)!/((k+j)!(k-1-j)!), so that d CS = tau^k f(A).
// literal_coefficients uses a_j with (2 M^M)^j instead.
Form chern_simons_form(const LieModel& m, const Rep& rep, const InvPoly& f, bool literal_coefficients = false);
Rational chern_simons_coefficient(int k, int j);

// tau^k f(M, A, ..., A), the top plus-count part of the transgression.
Form cs_class(const LieModel& m, const Rep& rep, const InvPoly& f);

struct MultiplicativityReport {
    bool ok = true;
    std::vector<bool> degree_ok;  // entry k-1 for degree k
    std::vector<Form> defects;    // c_k(total) - sum c_i(sub) c_{k-i}(quot)
};

// Checks c(sub) c(quot) = c(total) up to k_max. Throws std::invalid_argument unless
// total is block upper triangular with sub and quot on the diagonal.
MultiplicativityReport verify_multiplicativity(const LieModel& m, const Rep& sub, const Rep& total, const Rep& quot,
                                               int k_max);

}  // namespace cartan
