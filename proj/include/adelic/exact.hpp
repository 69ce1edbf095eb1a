#pragma once

// Exact arithmetic: rationals, dense rational matrices, and elements of
// cyclotomic fields Q(zeta_N) represented in the power basis mod Phi_N.

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic::exact {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense rational matrix, row-major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[i * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    QMatrix scaled(const Rational& c) const;
    bool operator==(const QMatrix& rhs) const;

    bool is_zero() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Row-echelon rank of a list of row vectors (destructive on the copy).
int rank_of_rows(std::vector<std::vector<Rational>> rows);

// Basis of the row space in echelon form.
std::vector<std::vector<Rational>> row_space_basis(std::vector<std::vector<Rational>> rows);

// Basis (as coordinate vectors) of a complement of the given row space in Q^n,
// i.e. representatives of a basis of the quotient.
std::vector<std::vector<Rational>> quotient_basis(
    const std::vector<std::vector<Rational>>& span, int n);

// Cyclotomic polynomial Phi_n as integer coefficient vector (lowest degree first).
std::vector<Integer> cyclotomic_polynomial(int n);

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{deg Phi_n - 1}.
class Cyclotomic {
  public:
    Cyclotomic() : n_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r) : n_(1), coeffs_(1, r) {}

    // zeta_n^k
    static Cyclotomic root_of_unity(int n, long k);
    static Cyclotomic zero(int n);
    static Cyclotomic one(int n);

    int level() const { return n_; }
    int degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic scaled(const Rational& c) const;
    Cyclotomic conjugate() const;  // zeta -> zeta^{-1}
    bool operator==(const Cyclotomic& rhs) const;
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;

    // numeric embedding zeta_n -> exp(2 pi i / n)
    std::complex<double> to_complex() const;

    std::string str() const;

    // lift both operands to Q(zeta_lcm) before arithmetic
    static std::pair<Cyclotomic, Cyclotomic> to_common_level(const Cyclotomic& a,
                                                             const Cyclotomic& b);

  private:
    Cyclotomic(int n, std::vector<Rational> coeffs);
    Cyclotomic lifted_to(int m) const;

    int n_;
    std::vector<Rational> coeffs_;  // coefficients of zeta^0 .. zeta^{deg-1}, post-reduction
};

// small dense matrix over a cyclotomic field
struct CycMatrix {
    int rows = 0, cols = 0;
    std::vector<Cyclotomic> data;
    CycMatrix() = default;
    CycMatrix(int r, int c) : rows(r), cols(c), data(r * c) {}
    Cyclotomic& at(int i, int j) { return data[i * cols + j]; }
    const Cyclotomic& at(int i, int j) const { return data[i * cols + j]; }
    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix operator+(const CycMatrix& rhs) const;
    bool operator==(const CycMatrix& rhs) const;
    static CycMatrix identity(int n);
    static CycMatrix from_rational(const QMatrix& m);
    bool is_zero() const;
};

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace adelic::exact
