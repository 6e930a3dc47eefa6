#include "gkm.hpp"

#include <algorithm>

namespace splinez {

static int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) swap(at(i, c), at(j, c));
}

void IMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) swap(at(r, i), at(r, j));
}

void IMat::add_row_multiple(int dst, int src, const Int& q) {
  for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IMat::add_col_multiple(int dst, int src, const Int& q) {
  for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

void IMat::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IMat::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

IMat operator*(const IMat& a, const IMat& b) {
  if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "matrix product shape mismatch");
  IMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Int determinant(const IMat& m) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IMat a = m;
  bool negate = false;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      a.swap_rows(k, piv);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return negate ? Int(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

IMat build_gkm(const EdgeLabeledGraph& g) {
  const int n = g.vertex_count(), s = g.edge_count();
  IMat m(n + s, 2 * n + s);
  for (int e = 0; e < s; ++e) {
    const Edge& ed = g.edge(e);
    m.at(e, std::min(ed.u, ed.v)) = 1;
    m.at(e, std::max(ed.u, ed.v)) = -1;
    m.at(e, n + e) = ed.r;
  }
  for (int i = 0; i < n; ++i) {
    m.at(s + i, i) = 1;
    m.at(s + i, n + s + i) = g.multiplier(i);
  }
  return m;
}

// The factorization is cheap to re-check at desk scale; a failure here means
// a bookkeeping bug, not bad input.
static void verify_snf(const IMat& input, const Snf& r) {
  if (!(r.u * input * r.v == r.s)) fail(errc::internal_contradiction, "SNF transform mismatch");
  const int t = std::min(input.rows(), input.cols());
  for (int k = 0; k + 1 < t; ++k) {
    const Int& d = r.s.at(k, k);
    if (d == 0) {
      if (r.s.at(k + 1, k + 1) != 0)
        fail(errc::internal_contradiction, "SNF divisibility chain broken");
    } else if (!mpz_divisible_p(r.s.at(k + 1, k + 1).get_mpz_t(), d.get_mpz_t())) {
      fail(errc::internal_contradiction, "SNF divisibility chain broken");
    }
  }
}

Snf smith_normal_form(const IMat& input) {
  const int m = input.rows(), n = input.cols();
  Snf r{input, IMat::identity(m), IMat::identity(n)};
  IMat& a = r.s;
  const int t = std::min(m, n);

  bool exhausted = false;
  for (int k = 0; k < t && !exhausted; ++k) {
    for (;;) {
      // Minimal-absolute-value pivot in the trailing submatrix.
      int pi = -1, pj = -1;
      for (int i = k; i < m; ++i)
        for (int j = k; j < n; ++j) {
          if (a.at(i, j) == 0) continue;
          if (pi < 0 || cmpabs(a.at(i, j), a.at(pi, pj)) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {  // trailing submatrix is zero
        exhausted = true;
        break;
      }
      a.swap_rows(k, pi);
      r.u.swap_rows(k, pi);
      a.swap_cols(k, pj);
      r.v.swap_cols(k, pj);
      if (a.at(k, k) < 0) {
        a.negate_row(k);
        r.u.negate_row(k);
      }

      bool dirty = false;
      for (int i = k + 1; i < m; ++i) {
        if (a.at(i, k) == 0) continue;
        Int q = a.at(i, k) / a.at(k, k);
        if (q != 0) {
          a.add_row_multiple(i, k, -q);
          r.u.add_row_multiple(i, k, -q);
        }
        if (a.at(i, k) != 0) dirty = true;
      }
      for (int j = k + 1; j < n; ++j) {
        if (a.at(k, j) == 0) continue;
        Int q = a.at(k, j) / a.at(k, k);
        if (q != 0) {
          a.add_col_multiple(j, k, -q);
          r.v.add_col_multiple(j, k, -q);
        }
        if (a.at(k, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Give the pivot a chance to absorb any entry it does not divide yet.
      bool settled = true;
      for (int i = k + 1; i < m && settled; ++i)
        for (int j = k + 1; j < n && settled; ++j)
          if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(k, k).get_mpz_t())) {
            a.add_row_multiple(k, i, 1);
            r.u.add_row_multiple(k, i, 1);
            settled = false;
          }
      if (settled) break;
    }
  }
  verify_snf(input, r);
  return r;
}

LatticeBasis integer_kernel(const IMat& m) {
  Snf snf = smith_normal_form(m);
  const int t = std::min(m.rows(), m.cols());
  LatticeBasis k;
  k.dim = m.cols();
  for (int j = 0; j < m.cols(); ++j) {
    if (j < t && snf.s.at(j, j) != 0) continue;
    std::vector<Int> col(static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.cols(); ++i) col[static_cast<size_t>(i)] = snf.v.at(i, j);
    k.rows.push_back(std::move(col));
  }
  return k;
}

LatticeBasis hermite_normal_form(const LatticeBasis& b) {
  LatticeBasis h = b;
  for (const auto& row : h.rows)
    if (static_cast<int>(row.size()) != h.dim)
      fail(errc::dimension_mismatch, "lattice vector length differs from ambient dimension");

  auto& rows = h.rows;
  size_t rr = 0;
  for (int col = 0; col < h.dim && rr < rows.size(); ++col) {
    for (;;) {
      size_t piv = rows.size();
      for (size_t i = rr; i < rows.size(); ++i) {
        const Int& x = rows[i][static_cast<size_t>(col)];
        if (x == 0) continue;
        if (piv == rows.size() || cmpabs(x, rows[piv][static_cast<size_t>(col)]) < 0) piv = i;
      }
      if (piv == rows.size()) break;
      std::swap(rows[rr], rows[piv]);
      bool again = false;
      for (size_t i = rr + 1; i < rows.size(); ++i) {
        const Int& x = rows[i][static_cast<size_t>(col)];
        if (x == 0) continue;
        Int q = x / rows[rr][static_cast<size_t>(col)];
        if (q != 0)
          for (int j = 0; j < h.dim; ++j)
            rows[i][static_cast<size_t>(j)] -= q * rows[rr][static_cast<size_t>(j)];
        if (rows[i][static_cast<size_t>(col)] != 0) again = true;
      }
      if (!again) break;
    }
    Int& pivot = rows[rr][static_cast<size_t>(col)];
    if (pivot == 0) continue;
    if (pivot < 0)
      for (int j = 0; j < h.dim; ++j) rows[rr][static_cast<size_t>(j)] = -rows[rr][static_cast<size_t>(j)];
    for (size_t i = 0; i < rr; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][static_cast<size_t>(col)].get_mpz_t(),
                 rows[rr][static_cast<size_t>(col)].get_mpz_t());
      if (q != 0)
        for (int j = 0; j < h.dim; ++j)
          rows[i][static_cast<size_t>(j)] -= q * rows[rr][static_cast<size_t>(j)];
    }
    ++rr;
  }
  rows.resize(rr);
  return h;
}

LatticeBasis spline_lattice(const EdgeLabeledGraph& g) {
  const int n = g.vertex_count();
  LatticeBasis kernel = integer_kernel(build_gkm(g));
  LatticeBasis projected;
  projected.dim = n;
  for (const auto& row : kernel.rows)
    projected.rows.emplace_back(row.begin(), row.begin() + n);
  LatticeBasis h = hermite_normal_form(projected);
  for (const auto& row : h.rows) {
    SplineCheck c = check_spline(g, row);
    if (!c.ok)
      fail(errc::internal_contradiction, "kernel projection is not a spline: " + c.message);
  }
  return h;
}

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.dim != b.dim)
    fail(errc::dimension_mismatch, "lattices live in different ambient dimensions (" +
                                       std::to_string(a.dim) + " vs " + std::to_string(b.dim) + ")");
  LatticeBasis ha = hermite_normal_form(a), hb = hermite_normal_form(b);
  return ha.rows == hb.rows;
}

LatticeBasis basis_lattice(const FlowUpBasis& b) {
  LatticeBasis l;
  l.dim = static_cast<int>(b.classes.size());
  for (const FlowUpClass& c : b.classes) l.rows.push_back(c.values);
  return l;
}

}  // namespace splinez
