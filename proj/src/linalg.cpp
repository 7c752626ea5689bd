#include "hmds/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace hmds {

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fq{1};
  return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix out(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
  return out;
}

namespace {

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

Echelon eliminate(const GaloisField& F, Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t r = lead;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(lead, k));
    const Fq s = F.inv(m(lead, c));
    for (std::size_t k = 0; k < m.cols(); ++k) m(lead, k) = F.mul(s, m(lead, k));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, c).is_zero()) continue;
      const Fq f = m(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = F.sub(m(i, k), F.mul(f, m(lead, k)));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Matrix rref(const GaloisField& F, Matrix m) { return eliminate(F, std::move(m)).reduced; }

std::size_t rank(const GaloisField& F, const Matrix& m) { return eliminate(F, m).pivots.size(); }

std::vector<Vector> kernel_basis(const GaloisField& F, const Matrix& m) {
  const auto [R, pivots] = eliminate(F, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(R(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const GaloisField& F, const Matrix& m, std::span<const Fq> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length does not match rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const auto [R, pivots] = eliminate(F, std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = R(i, m.cols());
  return x;
}

Vector multiply(const GaloisField& F, const Matrix& m, std::span<const Fq> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("multiply: vector length does not match columns");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Fq acc;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = F.add(acc, F.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

bool in_row_space(const GaloisField& F, const Matrix& m, std::span<const Fq> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: vector length does not match columns");
  Matrix ext(m.rows() + 1, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) ext(r, c) = m(r, c);
  for (std::size_t c = 0; c < m.cols(); ++c) ext(m.rows(), c) = v[c];
  return rank(F, ext) == rank(F, m);
}

bool same_row_space(const GaloisField& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  auto canonical = [&](const Matrix& m) {
    auto [R, pivots] = eliminate(F, m);
    Matrix out(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = R(r, c);
    return out;
  };
  return canonical(a) == canonical(b);
}

std::string to_text(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(m(r, c).value());
    }
    out += '\n';
  }
  return out;
}

Matrix matrix_from_text(const GaloisField& F, const std::string& text) {
  std::vector<Vector> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Vector row;
    std::istringstream ls(line);
    long long v;
    while (ls >> v) {
      if (v < 0) throw std::invalid_argument("negative matrix entry");
      if (v >= F.order()) throw std::invalid_argument("matrix entry " + std::to_string(v) + " out of range");
      row.push_back(F.element(static_cast<std::uint32_t>(v)));
    }
    if (!ls.eof()) throw std::invalid_argument("malformed matrix line: " + line);
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

}  // namespace hmds
