#include "lhd/matrix.hpp"

#include <sstream>
#include <utility>

#include "lhd/errors.hpp"

namespace lhd {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field()))
    throw FieldMismatch(std::string(op) + ": " + a.field().name() + " vs " + b.field().name());
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(Field field, std::initializer_list<std::initializer_list<long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : row) data_.push_back(field_.from_int(v));
  }
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<mpq_class> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  for (auto& v : data_) v = field_.from_rational(v);
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::unit(Field field, std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("unit vector index out of range");
  Matrix m(field, n, 1);
  m.data_[i] = 1;
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const mpq_class& v) {
  data_[i * cols_ + j] = field_.from_rational(v);
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o, "product");
  if (cols_ != o.rows_) throw DimensionError("product of " + shape(*this) + " and " + shape(o));
  // Sparse rows of o; almost every structure map here is sparse.
  std::vector<std::vector<std::pair<std::size_t, const mpq_class*>>> sparse(o.rows_);
  for (std::size_t k = 0; k < o.rows_; ++k)
    for (std::size_t j = 0; j < o.cols_; ++j)
      if (sgn(o(k, j)) != 0) sparse[k].emplace_back(j, &o(k, j));

  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (const auto& [j, b] : sparse[k]) field_.add_mul(out.data_[i * out.cols_ + j], a, *b);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o, "sum");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("sum of " + shape(*this) + " and " + shape(o));
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(*this, o, "difference");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("difference of " + shape(*this) + " and " + shape(o));
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.sub(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::scaled(const mpq_class& s) const {
  mpq_class c = field_.from_rational(s);
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(data_[k]) != 0) out.data_[k] = field_.mul(data_[k], c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::column(std::size_t j) const {
  if (j >= cols_) throw DimensionError("column index out of range");
  Matrix out(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) out.data_[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::columns(std::span<const std::size_t> which) const {
  Matrix out(field_, rows_, which.size());
  for (std::size_t c = 0; c < which.size(); ++c) {
    if (which[c] >= cols_) throw DimensionError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out.data_[i * which.size() + c] = (*this)(i, which[c]);
  }
  return out;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionError("block out of range");
  Matrix out(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out.data_[i * ncols + j] = (*this)(row0 + i, col0 + j);
  return out;
}

std::optional<std::size_t> Matrix::first_differing_column(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return 0;
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, j) != o(i, j)) return j;
  return std::nullopt;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kron");
  const Field& f = a.field();
  std::vector<mpq_class> out(a.rows() * b.rows() * a.cols() * b.cols());
  const std::size_t out_cols = a.cols() * b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const mpq_class& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const mpq_class& y = b(k, l);
          if (sgn(y) == 0) continue;
          out[(i * b.rows() + k) * out_cols + j * b.cols() + l] = f.mul(x, y);
        }
    }
  return Matrix(f, a.rows() * b.rows(), out_cols, std::move(out));
}

Matrix kron(std::initializer_list<Matrix> factors) {
  if (factors.size() == 0) throw DimensionError("kron of no factors");
  auto it = factors.begin();
  Matrix out = *it;
  for (++it; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) throw DimensionError("hstack of " + shape(a) + " and " + shape(b));
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b(i, j));
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vstack");
  if (a.cols() != b.cols()) throw DimensionError("vstack of " + shape(a) + " and " + shape(b));
  std::vector<mpq_class> out(a.entries());
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(out));
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "block_diagonal");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

Matrix swap_matrix(Field field, std::size_t m, std::size_t n) {
  const std::size_t dims[] = {m, n};
  const std::size_t perm[] = {1, 0};
  return permute_factors(field, dims, perm);
}

Matrix permute_factors(Field field, std::span<const std::size_t> dims,
                       std::span<const std::size_t> perm) {
  const std::size_t k = dims.size();
  if (perm.size() != k) throw DimensionError("permutation length mismatch");
  std::vector<std::size_t> target_dims(k);
  std::vector<bool> seen(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (perm[i] >= k || seen[perm[i]]) throw DimensionError("not a permutation");
    seen[perm[i]] = true;
    target_dims[perm[i]] = dims[i];
  }
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  Matrix out(field, total, total);
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t src = 0; src < total; ++src) {
    std::size_t rem = src;
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = rem % dims[i];
      rem /= dims[i];
    }
    std::size_t dst = 0;
    std::vector<std::size_t> target_digits(k);
    for (std::size_t i = 0; i < k; ++i) target_digits[perm[i]] = digits[i];
    for (std::size_t i = 0; i < k; ++i) dst = dst * target_dims[i] + target_digits[i];
    out.set(dst, src, 1);
  }
  return out;
}

Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& x) {
  require_same_field(a, b, "kron_apply");
  require_same_field(a, x, "kron_apply");
  if (a.cols() * b.cols() != x.rows())
    throw DimensionError("kron_apply of " + shape(a) + " (x) " + shape(b) + " on " + shape(x));
  const Field& f = a.field();
  using SparseColumn = std::vector<std::pair<std::size_t, const mpq_class*>>;
  auto sparse_columns = [](const Matrix& m) {
    std::vector<SparseColumn> cols(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m(i, j)) != 0) cols[j].emplace_back(i, &m(i, j));
    return cols;
  };
  const auto ac = sparse_columns(a), bc = sparse_columns(b);
  const std::size_t out_rows = a.rows() * b.rows();
  std::vector<mpq_class> out(out_rows * x.cols());
  mpq_class av;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const std::size_t p = r / b.cols(), q = r % b.cols();
    if (ac[p].empty() || bc[q].empty()) continue;
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const mpq_class& v = x(r, c);
      if (sgn(v) == 0) continue;
      for (const auto& [i, ai] : ac[p]) {
        av = f.mul(*ai, v);
        for (const auto& [k, bk] : bc[q]) f.add_mul(out[(i * b.rows() + k) * x.cols() + c], av, *bk);
      }
    }
  }
  return Matrix(f, out_rows, x.cols(), std::move(out));
}

Matrix permute_factor_rows(const Matrix& x, std::span<const std::size_t> dims,
                           std::span<const std::size_t> perm) {
  const std::size_t k = dims.size();
  if (perm.size() != k) throw DimensionError("permutation length mismatch");
  std::vector<std::size_t> target_dims(k);
  std::vector<bool> seen(k, false);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (perm[i] >= k || seen[perm[i]]) throw DimensionError("not a permutation");
    seen[perm[i]] = true;
    target_dims[perm[i]] = dims[i];
    total *= dims[i];
  }
  if (total != x.rows()) throw DimensionError("factor dimensions do not match " + shape(x));
  std::vector<mpq_class> out(x.rows() * x.cols());
  std::vector<std::size_t> digits(k), target_digits(k);
  for (std::size_t src = 0; src < total; ++src) {
    std::size_t rem = src;
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = rem % dims[i];
      rem /= dims[i];
    }
    for (std::size_t i = 0; i < k; ++i) target_digits[perm[i]] = digits[i];
    std::size_t dst = 0;
    for (std::size_t i = 0; i < k; ++i) dst = dst * target_dims[i] + target_digits[i];
    for (std::size_t c = 0; c < x.cols(); ++c) out[dst * x.cols() + c] = x(src, c);
  }
  return Matrix(x.field(), x.rows(), x.cols(), std::move(out));
}

}  // namespace lhd
