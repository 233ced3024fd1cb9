#include "arknit/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace arknit {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                         const std::vector<long>& row_major) {
  if (row_major.size() != rows * cols) throw ValidationError("from_ints: wrong entry count");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < row_major.size(); ++i) m.data_[i] = field.from_int(row_major[i]);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw ValidationError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                          std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                          std::to_string(o.cols_));
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& e : r.data_) e *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix::Echelon Matrix::rref() const {
  Echelon e{*this, {}};
  Matrix& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && m(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(row, j));
    Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (std::size_t j = col; j < cols_; ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

Matrix Matrix::nullspace() const {
  Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(field_, cols_, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = field_.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return basis;
}

Matrix Matrix::column_basis() const {
  Echelon e = rref();
  Matrix b(field_, rows_, e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) b(r, k) = (*this)(r, e.pivots[k]);
  return b;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
  if (rhs.rows_ != rows_) throw ValidationError("solve: row mismatch");
  Matrix aug = hstack(rhs);
  Echelon e = aug.rref();
  for (auto p : e.pivots)
    if (p >= cols_) return std::nullopt;
  Matrix x(field_, cols_, rhs.cols_);
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < rhs.cols_; ++j) x(e.pivots[r], j) = e.reduced(r, cols_ + j);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (rank() != rows_) return std::nullopt;
  return solve(identity(field_, rows_));
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ValidationError("block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ValidationError("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw ValidationError("hstack: row mismatch");
  Matrix r(field_, rows_, cols_ + right.cols_);
  r.set_block(0, 0, *this);
  r.set_block(0, cols_, right);
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw ValidationError("vstack: column mismatch");
  Matrix r(field_, rows_ + below.rows_, cols_);
  r.set_block(0, 0, *this);
  r.set_block(rows_, 0, below);
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

Matrix block_diagonal(const Field& field, const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(field, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

namespace {

void trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Flattened matrix as a vector.
std::vector<Scalar> flatten(const Matrix& a) {
  std::vector<Scalar> v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

}  // namespace

Polynomial minimal_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("minimal_polynomial of non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  if (n == 0) return {f.one()};
  // Incremental elimination of vec(A^k); each reduced row remembers its combination of powers.
  struct Row {
    std::vector<Scalar> v;
    std::vector<Scalar> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  Matrix power = Matrix::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Scalar> v = flatten(power);
    std::vector<Scalar> combo(k + 1, f.zero());
    combo[k] = f.one();
    for (const Row& r : rows) {
      if (v[r.pivot].is_zero()) continue;
      Scalar c = v[r.pivot];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!r.v[i].is_zero()) v[i] -= c * r.v[i];
      for (std::size_t i = 0; i < r.combo.size(); ++i) combo[i] -= c * r.combo[i];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == v.end()) {
      // combo is the relation; it is monic in degree k already.
      Polynomial p = combo;
      trim(p);
      return p;
    }
    std::size_t piv = static_cast<std::size_t>(it - v.begin());
    Scalar inv = v[piv].inverse();
    for (auto& s : v) s *= inv;
    for (auto& s : combo) s *= inv;
    for (Row& r : rows) {
      if (r.v[piv].is_zero()) continue;
      Scalar c = r.v[piv];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r.v[i] -= c * v[i];
      r.combo.resize(combo.size(), f.zero());
      for (std::size_t i = 0; i < combo.size(); ++i) r.combo[i] -= c * combo[i];
    }
    rows.push_back({std::move(v), std::move(combo), piv});
    power = power * a;
  }
  throw CrossValidationError("minimal polynomial degree exceeded matrix size");
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
  Matrix result(a.field(), a.rows(), a.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    result = result * a + Matrix::identity(a.field(), a.rows()).scaled(*it);
  return result;
}

namespace {

Scalar eval_poly(const Polynomial& p, const Scalar& x) {
  Scalar acc = x.field().zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  if (n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Scalar> roots_in_field(const Polynomial& p0) {
  Polynomial p = p0;
  trim(p);
  std::vector<Scalar> roots;
  if (p.size() <= 1) return roots;
  const Field f = p.front().field();
  if (!f.is_rational()) {
    for (std::uint32_t x = 0; x < f.characteristic(); ++x) {
      Scalar s = f.from_int(x);
      if (eval_poly(p, s).is_zero()) roots.push_back(s);
    }
    return roots;
  }
  // Clear denominators.
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(mpz_class(c.rational() * lcm));
  std::set<mpq_class> found;
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) found.insert(0);
  if (low + 1 < ints.size()) {
    for (const auto& num : divisors(ints[low]))
      for (const auto& den : divisors(ints.back()))
        for (int sign : {1, -1}) {
          mpq_class cand(num * sign, den);
          cand.canonicalize();
          if (found.count(cand)) continue;
          Scalar s = f.parse(cand.get_str());
          if (eval_poly(p, s).is_zero()) found.insert(cand);
        }
  }
  for (const auto& q : found) roots.push_back(f.parse(q.get_str()));
  return roots;
}

bool is_nilpotent(const Matrix& a) {
  if (a.rows() == 0) return true;
  Matrix p = a;
  std::size_t e = 1;
  while (e < a.rows()) {
    p = p * p;
    e *= 2;
  }
  return p.is_zero();
}

}  // namespace arknit
