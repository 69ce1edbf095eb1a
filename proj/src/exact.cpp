#include "adelic/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace adelic::exact {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeMismatch("QMatrix: product shape mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("QMatrix: sum shape mismatch");
    QMatrix out(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("QMatrix: diff shape mismatch");
    QMatrix out(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix out(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) out.data_[i] = data_[i] * c;
    return out;
}

bool QMatrix::operator==(const QMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r == 0; });
}

namespace {

// in-place row reduction; returns pivot column per row kept
std::vector<int> echelonize(std::vector<std::vector<Rational>>& rows) {
    std::vector<int> pivots;
    std::size_t lead = 0;
    if (rows.empty()) return pivots;
    std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = 1 / rows[r][col];
        for (std::size_t j = col; j < ncols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rational f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++r;
        (void)lead;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

int rank_of_rows(std::vector<std::vector<Rational>> rows) {
    auto piv = echelonize(rows);
    return static_cast<int>(piv.size());
}

std::vector<std::vector<Rational>> row_space_basis(std::vector<std::vector<Rational>> rows) {
    echelonize(rows);
    return rows;
}

std::vector<std::vector<Rational>> quotient_basis(const std::vector<std::vector<Rational>>& span,
                                                  int n) {
    auto rows = span;
    auto pivots = echelonize(rows);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> out;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------------------
// cyclotomic polynomials and field elements

namespace {

using ZPoly = std::vector<Integer>;

// exact division assuming divisor monic and divisibility
ZPoly zpoly_divide(const ZPoly& num, const ZPoly& den) {
    ZPoly rem = num;
    int dn = static_cast<int>(rem.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    ZPoly quot(dn - dd + 1, Integer(0));
    for (int k = dn - dd; k >= 0; --k) {
        Integer c = rem[k + dd];
        quot[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= c * den[j];
    }
    return quot;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int n) {
    if (n < 1) throw Error("cyclotomic_polynomial: n must be positive");
    static std::map<int, ZPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    ZPoly result(n + 1, Integer(0));
    result[0] = -1;
    result[n] = 1;  // x^n - 1
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        ZPoly phi_d_raw = cyclotomic_polynomial(d);
        result = zpoly_divide(result, phi_d_raw);
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache[n] = result;
    return result;
}

namespace {

std::vector<Rational> poly_mod_cyclotomic(std::vector<Rational> poly, const ZPoly& phi) {
    int deg = static_cast<int>(phi.size()) - 1;
    for (int k = static_cast<int>(poly.size()) - 1; k >= deg; --k) {
        Rational c = poly[k];
        if (c == 0) continue;
        // x^k = x^{k-deg} * (x^deg - phi_reduced); phi monic
        for (int j = 0; j <= deg; ++j) poly[k - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg);
    return poly;
}

}  // namespace

Cyclotomic::Cyclotomic(int n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::zero(int n) {
    auto phi = cyclotomic_polynomial(n);
    return Cyclotomic(n, std::vector<Rational>(phi.size() - 1, Rational(0)));
}

Cyclotomic Cyclotomic::one(int n) {
    auto out = zero(n);
    out.coeffs_[0] = 1;
    return out;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
    k %= n;
    if (k < 0) k += n;
    auto phi = cyclotomic_polynomial(n);
    std::vector<Rational> poly(static_cast<std::size_t>(k) + 1, Rational(0));
    poly[k] = 1;
    return Cyclotomic(n, poly_mod_cyclotomic(std::move(poly), phi));
}

Cyclotomic Cyclotomic::lifted_to(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw LevelMismatch("Cyclotomic: invalid level lift");
    int stride = m / n_;
    std::vector<Rational> poly(static_cast<std::size_t>(n_) * stride, Rational(0));
    for (int j = 0; j < static_cast<int>(coeffs_.size()); ++j) poly[j * stride] = coeffs_[j];
    auto phi = cyclotomic_polynomial(m);
    return Cyclotomic(m, poly_mod_cyclotomic(std::move(poly), phi));
}

std::pair<Cyclotomic, Cyclotomic> Cyclotomic::to_common_level(const Cyclotomic& a,
                                                              const Cyclotomic& b) {
    int m = std::lcm(a.n_, b.n_);
    return {a.lifted_to(m), b.lifted_to(m)};
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    auto [a, b] = to_common_level(*this, rhs);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    auto [a, b] = to_common_level(*this, rhs);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    auto [a, b] = to_common_level(*this, rhs);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    auto phi = cyclotomic_polynomial(a.n_);
    return Cyclotomic(a.n_, poly_mod_cyclotomic(std::move(prod), phi));
}

Cyclotomic Cyclotomic::scaled(const Rational& c) const {
    Cyclotomic out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

Cyclotomic Cyclotomic::conjugate() const {
    std::vector<Rational> poly(static_cast<std::size_t>(n_) + 1, Rational(0));
    for (int j = 0; j < static_cast<int>(coeffs_.size()); ++j) {
        int k = (n_ - j) % n_;
        poly[k] += coeffs_[j];
    }
    auto phi = cyclotomic_polynomial(n_);
    return Cyclotomic(n_, poly_mod_cyclotomic(std::move(poly), phi));
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    auto [a, b] = to_common_level(*this, rhs);
    return a.coeffs_ == b.coeffs_;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw Error("Cyclotomic: not rational");
    return coeffs_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (int j = 0; j < static_cast<int>(coeffs_.size()); ++j) {
        double c = coeffs_[j].get_d();
        double ang = 2.0 * 3.14159265358979323846 * j / n_;
        acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].get_str();
    }
    os << "]@z" << n_;
    return os.str();
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    if (cols != rhs.rows) throw ShapeMismatch("CycMatrix: product shape mismatch");
    CycMatrix out(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Cyclotomic& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < rhs.cols; ++j)
                out.at(i, j) = out.at(i, j) + a * rhs.at(k, j);
        }
    return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw ShapeMismatch("CycMatrix: sum shape mismatch");
    CycMatrix out(rows, cols);
    for (int i = 0; i < rows * cols; ++i) out.data[i] = data[i] + rhs.data[i];
    return out;
}

bool CycMatrix::operator==(const CycMatrix& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) return false;
    for (int i = 0; i < rows * cols; ++i)
        if (!(data[i] == rhs.data[i])) return false;
    return true;
}

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(Rational(1));
    return m;
}

CycMatrix CycMatrix::from_rational(const QMatrix& m) {
    CycMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Cyclotomic(m.at(i, j));
    return out;
}

bool CycMatrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("rational_from_string: bad literal '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace adelic::exact
