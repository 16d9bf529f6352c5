#pragma once

#include "cartan/rational.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cartan {

// Maximum number of generators a model may have; monomials are bit sets.
inline constexpr int kMaxGenerators = 64;

// Wedge of distinct dual generators, stored as a bit set over global indices.
// The canonical ordering of the factors is increasing global index.
struct Monomial {
    std::uint64_t bits = 0;

    static Monomial of(std::initializer_list<int> gens);
    static Monomial from_indices(const std::vector<int>& gens);

    int degree() const { return std::popcount(bits); }
    bool contains(int g) const { return (bits >> g) & 1U; }
    std::vector<int> indices() const;
    int count_in(std::uint64_t mask) const { return std::popcount(bits & mask); }

    friend bool operator==(Monomial a, Monomial b) { return a.bits == b.bits; }
};

// Graded lexicographic order on the index lists.
struct MonomialLess {
    bool operator()(Monomial a, Monomial b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        std::uint64_t diff = a.bits ^ b.bits;
        if (!diff) return false;
        return (a.bits & (diff & (~diff + 1))) != 0;
    }
};

// Sign of (a in canonical order) ^ (b in canonical order) once sorted; 0 if they share a factor.
int wedge_sign(Monomial a, Monomial b);

// Masks of the three parts of a model's generators.
struct PartLayout {
    std::uint64_t minus = 0, zero = 0, plus = 0;
};

struct Grade {
    int p = 0, q = 0, r = 0;
    int degree() const { return p + q + r; }
    friend bool operator==(const Grade&, const Grade&) = default;
    std::string str() const;
};

class Form {
public:
    using Terms = std::map<Monomial, TauScalar, MonomialLess>;

    Form() = default;
    static Form constant(const TauScalar& c);
    static Form generator(int g, const TauScalar& c = TauScalar(1));
    static Form monomial(Monomial m, const TauScalar& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Adds c to the coefficient of m (in canonical order).
    void add(Monomial m, const TauScalar& c);
    void add(Monomial m, const Rational& c, int tau_exp);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Rational& c);
    Form& operator*=(const TauScalar& c);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(Form a) { return a *= Rational(-1); }
    friend Form operator*(Form a, const Rational& c) { return a *= c; }
    friend Form operator*(const Rational& c, Form a) { return a *= c; }
    friend Form operator*(Form a, const TauScalar& c) { return a *= c; }
    friend Form operator*(const TauScalar& c, Form a) { return a *= c; }
    friend bool operator==(const Form& a, const Form& b) = default;

    // Multiplies every coefficient by tau^k.
    Form tau_shifted(int k) const;

    // Degree of the form if all monomials share it, else -1 (0 for the zero form).
    int homogeneous_degree() const;
    bool at_grade(const PartLayout& layout, Grade g) const;
    // Monomials with exactly r plus factors.
    Form plus_component(const PartLayout& layout, int r) const;
    Form filter(const std::function<bool(Monomial)>& keep) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    Terms terms_;
};

Form wedge(const Form& a, const Form& b);
Form wedge_power(const Form& a, int k);

// Applies a derivation given by its values on generators. With odd = true the
// sign (-1)^(position) is applied as for an odd derivation.
Form apply_derivation(const Form& f, const std::vector<Form>& on_generators, bool odd);

// Rectangular matrix of forms.
class MatrixForm {
public:
    MatrixForm() = default;
    MatrixForm(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static MatrixForm identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Form& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Form& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    Form trace() const;
    // Parity of the entry degrees: 0 even, 1 odd, -1 mixed. Zero matrices count as even.
    int parity() const;

    MatrixForm& operator+=(const MatrixForm& o);
    MatrixForm& operator-=(const MatrixForm& o);
    MatrixForm& operator*=(const Rational& c);
    friend MatrixForm operator+(MatrixForm a, const MatrixForm& b) { return a += b; }
    friend MatrixForm operator-(MatrixForm a, const MatrixForm& b) { return a -= b; }
    friend MatrixForm operator*(MatrixForm a, const Rational& c) { return a *= c; }
    friend bool operator==(const MatrixForm& a, const MatrixForm& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Form> data_;
};

// Matrix product with entries multiplied by wedge.
MatrixForm wedge(const MatrixForm& a, const MatrixForm& b);
MatrixForm map_entries(const MatrixForm& a, const std::function<Form(const Form&)>& f);

}  // namespace cartan
