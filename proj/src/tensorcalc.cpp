#include "homnorden/tensorcalc.hpp"

#include "homnorden/geometry.hpp"

#include <stdexcept>

namespace homnorden {

Tensor::Tensor(int n, int p, int q) : n_(n), p_(p), q_(q) {
  if (n <= 0 || p < 0 || q < 0) throw std::invalid_argument("bad tensor shape");
  std::size_t size = 1;
  for (int i = 0; i < p + q; ++i) size *= static_cast<std::size_t>(n);
  data_.assign(size, Rational(0));
}

std::size_t Tensor::offset_of(const int* indices, std::size_t count) const {
  if (count != static_cast<std::size_t>(order())) {
    throw std::invalid_argument("tensor index arity mismatch");
  }
  std::size_t offset = 0;
  for (std::size_t s = 0; s < count; ++s) {
    const int i = indices[s];
    if (i < 0 || i >= n_) throw std::out_of_range("tensor index out of range");
    offset = offset * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
  }
  return offset;
}

const Rational& Tensor::at(std::initializer_list<int> indices) const {
  return data_[offset_of(indices.begin(), indices.size())];
}

Rational& Tensor::at(std::initializer_list<int> indices) {
  return data_[offset_of(indices.begin(), indices.size())];
}

const Rational& Tensor::at(const std::vector<int>& indices) const {
  return data_[offset_of(indices.data(), indices.size())];
}

Rational& Tensor::at(const std::vector<int>& indices) {
  return data_[offset_of(indices.data(), indices.size())];
}

std::vector<int> Tensor::unflatten(std::size_t offset) const {
  std::vector<int> indices(static_cast<std::size_t>(order()));
  for (int s = order() - 1; s >= 0; --s) {
    indices[s] = static_cast<int>(offset % static_cast<std::size_t>(n_));
    offset /= static_cast<std::size_t>(n_);
  }
  return indices;
}

bool Tensor::is_zero() const {
  for (const Rational& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ && a.data_ == b.data_;
}

Tensor pullback_slot(const Tensor& t, int slot, const Mat& m) {
  if (slot < 0 || slot >= t.q()) throw std::invalid_argument("pullback slot out of range");
  const int n = t.n();
  if (mat_rows(m) != n || mat_cols(m) != n) {
    throw std::invalid_argument("pullback matrix shape mismatch");
  }
  // Strides: the addressed slot is (p + slot) positions from the left in an
  // order-(p+q) row-major layout.
  const int position = t.p() + slot;
  std::size_t inner = 1;  // stride of the addressed slot
  for (int s = t.order() - 1; s > position; --s) inner *= static_cast<std::size_t>(n);
  const std::size_t block = inner * static_cast<std::size_t>(n);

  Tensor out(n, t.p(), t.q());
  for (std::size_t base = 0; base < t.size(); base += block) {
    for (std::size_t rest = 0; rest < inner; ++rest) {
      // out[..., b, ...] = sum_a t[..., a, ...] * m[a][b]
      for (int b = 0; b < n; ++b) {
        Rational acc = 0;
        for (int a = 0; a < n; ++a) {
          const Rational& coeff = m[a][b];
          if (coeff.is_zero()) continue;
          const Rational& value = t.flat(base + static_cast<std::size_t>(a) * inner + rest);
          if (value.is_zero()) continue;
          acc += value * coeff;
        }
        out.flat(base + static_cast<std::size_t>(b) * inner + rest) = std::move(acc);
      }
    }
  }
  return out;
}

namespace {

// Matrix of y -> D_{e_x} y in the basis: column b holds D_{e_x} e_b.
Mat direction_matrix(const Connection& conn, int x) {
  const int n = conn.n;
  Mat m = mat_zero(n, n);
  for (int b = 0; b < n; ++b) {
    const Vec& image = conn.at(x, b);
    for (int r = 0; r < n; ++r) m[r][b] = image[r];
  }
  return m;
}

}  // namespace

Tensor cov_deriv_0q(const HomLieAlgebra& alg, const Connection& conn, const Tensor& t) {
  if (t.p() != 0) {
    throw std::invalid_argument("covariant derivative requires a purely covariant tensor");
  }
  if (t.q() < 1) {
    throw std::invalid_argument("covariant derivative requires at least one slot");
  }
  const int n = alg.n();
  if (t.n() != n || conn.n != n) throw std::invalid_argument("dimension mismatch");

  const int q = t.q();
  std::size_t inner_size = 1;
  for (int s = 0; s < q; ++s) inner_size *= static_cast<std::size_t>(n);

  Tensor out(n, 0, q + 1);
  for (int i = 0; i < q; ++i) {
    // Twist every slot except i, then contract slot i with each direction.
    Tensor twisted = t;
    for (int s = 0; s < q; ++s) {
      if (s != i) twisted = pullback_slot(twisted, s, alg.phi());
    }
    for (int x = 0; x < n; ++x) {
      const Tensor term = pullback_slot(twisted, i, direction_matrix(conn, x));
      const std::size_t base = static_cast<std::size_t>(x) * inner_size;
      for (std::size_t k = 0; k < inner_size; ++k) {
        const Rational& value = term.flat(k);
        if (!value.is_zero()) out.flat(base + k) -= value;
      }
    }
  }
  return out;
}

std::vector<Mat> nabla_endo(const HomLieAlgebra& alg, const Connection& conn, const Mat& a) {
  const int n = alg.n();
  if (mat_rows(a) != n || mat_cols(a) != n || conn.n != n) {
    throw std::invalid_argument("dimension mismatch");
  }
  std::vector<Mat> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Mat deriv = mat_zero(n, n);
    for (int j = 0; j < n; ++j) {
      // D_{e_i}(A e_j) - A(D_{e_i} e_j)
      const Vec value = vec_sub(nabla_vec(alg, conn, vec_basis(n, i), mat_col(a, j)),
                                mat_vec(a, conn.at(i, j)));
      for (int r = 0; r < n; ++r) deriv[r][j] = value[r];
    }
    out.push_back(std::move(deriv));
  }
  return out;
}

PurityReport purity_check(const Tensor& t, const Endomorphism& a) {
  if (t.p() != 0 || t.q() < 2) {
    throw std::invalid_argument("purity scan requires a covariant tensor of order >= 2");
  }
  for (int s = 0; s + 1 < t.q(); ++s) {
    const Tensor left = pullback_slot(t, s, a.m);
    const Tensor right = pullback_slot(t, s + 1, a.m);
    for (std::size_t k = 0; k < left.size(); ++k) {
      if (left.flat(k) != right.flat(k)) {
        PurityReport report;
        report.pure = false;
        report.slot_pair = s + 1;
        report.indices = left.unflatten(k);
        for (int& index : report.indices) ++index;  // 1-based for reporting
        report.defect = left.flat(k) - right.flat(k);
        return report;
      }
    }
  }
  return PurityReport{};
}

TwistDefectResult tachibana(const HomLieAlgebra& alg, const ComplexStructure& j,
                            const Tensor& t, PurityPolicy policy) {
  if (t.p() != 0 || t.q() < 1) {
    throw std::invalid_argument("twist-defect operator requires a covariant tensor");
  }
  const int n = alg.n();
  if (t.n() != n) throw std::invalid_argument("dimension mismatch");

  const Mat a = twisted_complex(alg, j);
  const int q = t.q();
  std::size_t inner_size = 1;
  for (int s = 0; s < q; ++s) inner_size *= static_cast<std::size_t>(n);

  TwistDefectResult result{Tensor(n, 0, q + 1)};
  for (int i = 0; i < q; ++i) {
    Tensor twisted = t;
    for (int s = 0; s < q; ++s) {
      if (s != i) twisted = pullback_slot(twisted, s, alg.phi());
    }
    for (int x = 0; x < n; ++x) {
      // Column y of the contraction matrix: [e_y, A e_x] - A [e_y, e_x].
      Mat bx = mat_zero(n, n);
      const Vec ax = mat_col(a, x);
      for (int y = 0; y < n; ++y) {
        const Vec value = vec_sub(alg.bracket(vec_basis(n, y), ax),
                                  mat_vec(a, alg.structure(y, x)));
        for (int r = 0; r < n; ++r) bx[r][y] = value[r];
      }
      const Tensor term = pullback_slot(twisted, i, bx);
      const std::size_t base = static_cast<std::size_t>(x) * inner_size;
      for (std::size_t k = 0; k < inner_size; ++k) {
        const Rational& value = term.flat(k);
        if (!value.is_zero()) result.value.flat(base + k) += value;
      }
    }
  }

  if (policy == PurityPolicy::Verify && q >= 2) {
    result.purity_verified = true;
    result.purity = purity_check(t, Endomorphism{a});
    result.pure = result.purity->pure;
  } else if (policy == PurityPolicy::Verify && q == 1) {
    // A single covariant slot is vacuously pure.
    result.purity_verified = true;
    result.pure = true;
  }
  return result;
}

}  // namespace homnorden
