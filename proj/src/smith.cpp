#include "ivol/smith.hpp"

#include <optional>
#include <utility>

namespace ivol {

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(S.rows(), S.cols());
  while (r < n && S(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(S(i, i));
  return out;
}

namespace {

struct Reducer {
  IntMatrix a, u, v, u_inv;

  explicit Reducer(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        u_inv(IntMatrix::identity(m.rows())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  // row dst += f * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
    u_inv.add_col_multiple(src, dst, -f);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }

  std::optional<std::pair<std::size_t, std::size_t>> min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a.rows(); ++i) {
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {i, j};
      }
    }
    return best;
  }

  // Smallest nonzero entry of column t below the pivot or row t right of it.
  std::optional<std::pair<std::size_t, std::size_t>> min_in_cross(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (a(i, j) == 0) return;
      if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {i, j};
    };
    for (std::size_t i = t + 1; i < a.rows(); ++i) consider(i, t);
    for (std::size_t j = t + 1; j < a.cols(); ++j) consider(t, j);
    return best;
  }

  void reduce(std::size_t t) {
    while (true) {
      const Integer pivot = a(t, t);
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), pivot.get_mpz_t());
        add_row(i, t, -q);
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), pivot.get_mpz_t());
        add_col(j, t, -q);
      }
      if (auto rem = min_in_cross(t)) {
        // remainder smaller than the pivot: promote it and repeat
        swap_rows(t, rem->first);
        swap_cols(t, rem->second);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (a(t, t) < 0) negate_row(t);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  Reducer r(m);
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    auto pivot = r.min_pivot(t);
    if (!pivot) break;
    r.swap_rows(t, pivot->first);
    r.swap_cols(t, pivot->second);
    r.reduce(t);
  }
  return SmithDecomposition{std::move(r.u), std::move(r.a), std::move(r.v), std::move(r.u_inv)};
}

}  // namespace ivol
