#pragma once

// Casoratians: determinants whose column i is f_i and whose row k is either
// Delta^k f_i or f_i(z + k).  The two forms differ by unimodular row
// operations and give the same polynomial.

#include <cstddef>
#include <vector>

#include "fdcalc/diffcalc.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/poly.hpp"

namespace fdcalc {

enum class CasoratiForm { delta, shift };

template <Scalar F>
struct CasoratiMatrix {
  CasoratiForm form;
  std::vector<std::vector<Poly<F>>> entries;  // entries[row][col]
};

template <Scalar F>
CasoratiMatrix<F> casorati_matrix(const std::vector<Poly<F>>& fs, CasoratiForm form) {
  const std::size_t m = fs.size();
  if (m == 0) throw Error("a Casoratian needs at least one polynomial");
  CasoratiMatrix<F> mat{form, std::vector<std::vector<Poly<F>>>(m, std::vector<Poly<F>>(m))};
  for (std::size_t i = 0; i < m; ++i) {
    Poly<F> p = fs[i];
    for (std::size_t k = 0; k < m; ++k) {
      if (form == CasoratiForm::delta) {
        mat.entries[k][i] = p;
        p = delta(p);
      } else {
        mat.entries[k][i] = shift(fs[i], static_cast<long>(k));
      }
    }
  }
  return mat;
}

namespace detail {

/// Laplace expansion along the first row.
template <Scalar F>
Poly<F> cofactor_det(const std::vector<std::vector<Poly<F>>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  Poly<F> det;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<Poly<F>>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor[r - 1].push_back(a[r][c]);
    Poly<F> term = a[0][j] * cofactor_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Fraction-free Bareiss elimination over the polynomial ring.
template <Scalar F>
Poly<F> bareiss_det(std::vector<std::vector<Poly<F>>> a) {
  const std::size_t n = a.size();
  Poly<F> prev(F(1L));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly<F> num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        if constexpr (is_exact_v<F>) {
          a[i][j] = divexact(num, prev);
        } else {
          a[i][j] = divmod(num, prev).first;  // remainder is rounding noise
        }
      }
      a[i][k] = Poly<F>();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace detail

template <Scalar F>
Poly<F> determinant(const CasoratiMatrix<F>& mat) {
  return mat.entries.size() <= 4 ? detail::cofactor_det(mat.entries)
                                 : detail::bareiss_det(mat.entries);
}

template <Scalar F>
Poly<F> casoratian(const std::vector<Poly<F>>& fs, CasoratiForm form = CasoratiForm::delta) {
  return determinant(casorati_matrix(fs, form));
}

/// True iff the Casoratian is not the zero polynomial.
template <Scalar F>
bool linearly_independent(const std::vector<Poly<F>>& fs) {
  return !casoratian(fs).is_zero();
}

/// Casoratian with column i replaced by fsum = f_1 + ... + f_m.  Adding the
/// other columns does not change the determinant, so the result must equal
/// casoratian(fs); both facts are checked.
template <Scalar F>
Poly<F> casoratian_replace(const std::vector<Poly<F>>& fs, std::size_t i, const Poly<F>& fsum) {
  if (i >= fs.size()) throw Error("column index out of range");
  Poly<F> sum;
  for (const auto& f : fs) sum = sum + f;
  if (!(sum == fsum)) throw Error("replacement column is not the sum of the inputs");
  auto replaced = fs;
  replaced[i] = fsum;
  Poly<F> r = casoratian(replaced);
  if (!(r == casoratian(fs)))
    throw InconsistentResult("column replacement changed the Casoratian");
  return r;
}

}  // namespace fdcalc
