#include "ccr/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccr {

namespace {

void require_same_size(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (a.n() != b.n()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + ")");
  }
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const ExactScalar> d) {
  ExactMatrix m(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t row, std::size_t col, const ExactScalar& value) {
  ExactMatrix m(n);
  m(row, col) = value;
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<ExactScalar>> rows) {
  ExactMatrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw std::invalid_argument("ExactMatrix::from_rows: matrix must be square");
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  require_same_size(*this, rhs, "ExactMatrix +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  require_same_size(*this, rhs, "ExactMatrix -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_same_size(lhs, rhs, "ExactMatrix *");
  const std::size_t n = lhs.n_;
  ExactMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const ExactScalar& l = lhs(r, k);
      if (l.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!rhs(k, c).is_zero()) out(r, c) += l * rhs(k, c);
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  for (auto& v : out.a_) v = -v;
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

ExactScalar ExactMatrix::trace() const {
  ExactScalar t;
  for (std::size_t k = 0; k < n_; ++k) t += (*this)(k, k);
  return t;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const ExactScalar& v) { return v.is_zero(); });
}

ExactMatrix ExactMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  ExactMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    for (std::size_t c = 0; c < indices.size(); ++c) {
      if (indices[r] >= n_ || indices[c] >= n_) throw std::out_of_range("principal_submatrix: index out of range");
      out(r, c) = (*this)(indices[r], indices[c]);
    }
  }
  return out;
}

std::string ExactMatrix::str() const {
  std::vector<std::string> cells(a_.size());
  std::size_t width = 1;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    cells[k] = a_[k].str();
    width = std::max(width, cells[k].size());
  }
  std::string out;
  for (std::size_t r = 0; r < n_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < n_; ++c) {
      const std::string& cell = cells[r * n_ + c];
      out += std::string(width - cell.size() + 1, ' ') + cell;
    }
    out += " ]\n";
  }
  return out;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t n = a.n() * b.n();
  ExactMatrix out(n);
  for (std::size_t ar = 0; ar < a.n(); ++ar)
    for (std::size_t ac = 0; ac < a.n(); ++ac) {
      if (a(ar, ac).is_zero()) continue;
      for (std::size_t br = 0; br < b.n(); ++br)
        for (std::size_t bc = 0; bc < b.n(); ++bc) out(ar * b.n() + br, ac * b.n() + bc) = a(ar, ac) * b(br, bc);
    }
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

}  // namespace ccr
