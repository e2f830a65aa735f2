#include "badlocus/cocycle.hpp"

#include <numeric>

namespace badlocus {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

// Exponent of a word through rhobar (mod p).
long word_exponent(const Word& w, const std::vector<long>& rhobar, long p) {
  long s = 0;
  for (int c : w) {
    if (c > 0)
      s += rhobar[c - 1];
    else
      s -= rhobar[-c - 1];
  }
  return mod(s, p);
}

// Cyclic shift permutation on Z^p: e_i -> e_{i+1}.
IntMat shift_matrix(long p, long k) {
  IntMat s((size_t)p, (size_t)p);
  for (long i = 0; i < p; ++i) s.at((size_t)mod(i + k, p), (size_t)i) = 1;
  return s;
}

// Inverse of a unimodular integer matrix, computed exactly.
IntMat int_inverse(const IntMat& a) {
  size_t n = a.rows;
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);
    m[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw FieldError("matrix not invertible");
    std::swap(m[piv], m[col]);
    mpq_class inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  IntMat out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      mpq_class v = m[i][n + j];
      if (v.get_den() != 1) throw FieldError("matrix not unimodular");
      out.at(i, j) = v.get_num();
    }
  return out;
}

// Columns generating the coefficient "zero" lattice of one p-block at level
// lev: lev * e_t, plus the constant vector unless the module is the full
// (Z/lev)^p.
std::vector<std::vector<mpz_class>> lattice_gens(long p, long lev, bool full) {
  std::vector<std::vector<mpz_class>> out;
  for (long t = 0; t < p; ++t) {
    std::vector<mpz_class> v((size_t)p, 0);
    v[(size_t)t] = lev;
    out.push_back(std::move(v));
  }
  if (!full) out.push_back(std::vector<mpz_class>((size_t)p, 1));
  return out;
}

// Lattice generated by the columns of [A | -L] kernel projections: a basis of
// {x : A x lies in the lattice spanned by the columns of L}.
std::vector<std::vector<mpz_class>> preimage_lattice(
    const IntMat& A, const std::vector<std::vector<mpz_class>>& Lcols) {
  size_t rows = A.rows, nx = A.cols, nl = Lcols.size();
  IntMat big(rows, nx + nl);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < nx; ++j) big.at(i, j) = A.at(i, j);
  for (size_t j = 0; j < nl; ++j)
    for (size_t i = 0; i < rows; ++i) big.at(i, nx + j) = -Lcols[j][i];
  auto ker = int_kernel(big);
  std::vector<std::vector<mpz_class>> out;
  for (const auto& k : ker) {
    std::vector<mpz_class> v(k.begin(), k.begin() + (long)nx);
    out.push_back(std::move(v));
  }
  return out;
}

IntMat cols_to_mat(size_t rows, const std::vector<std::vector<mpz_class>>& c) {
  IntMat m(rows, c.size());
  for (size_t j = 0; j < c.size(); ++j)
    for (size_t i = 0; i < rows; ++i) m.at(i, j) = c[j][i];
  return m;
}

}  // namespace

CohomologyReport cocycle_dims(const Presentation& P,
                              const std::vector<CycMat>& alpha) {
  if (alpha.size() != P.num_generators)
    throw FieldError("one matrix per generator required");
  size_t d = alpha.at(0).rows;
  size_t n = P.num_generators;
  for (const auto& r : P.relators)
    if (!(eval_word(r, alpha) == CycMat::identity(d)))
      throw FieldError("relator not satisfied by the coefficient action");

  CohomologyReport rep;
  if (P.relators.empty()) {
    rep.dim_Z1 = d * n;
  } else {
    CycMat J(P.relators.size() * d, n * d);
    for (size_t r = 0; r < P.relators.size(); ++r)
      for (size_t j = 0; j < n; ++j) {
        CycMat blk =
            eval_group_ring(fox_derivative(P.relators[r], (int)j), alpha, d);
        for (size_t a = 0; a < d; ++a)
          for (size_t b = 0; b < d; ++b)
            J.at(r * d + a, j * d + b) = blk.at(a, b);
      }
    rep.dim_Z1 = n * d - rank(J);
  }
  CycMat B(n * d, d);
  for (size_t j = 0; j < n; ++j) {
    CycMat blk = CycMat::identity(d) - alpha[j];
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b) B.at(j * d + a, b) = blk.at(a, b);
  }
  rep.dim_B1 = rank(B);
  rep.dim_H1 = rep.dim_Z1 - rep.dim_B1;
  return rep;
}

std::vector<std::vector<CycMat>> ad_blocks(const std::vector<ProjMat>& images) {
  if (images.empty()) throw FieldError("no generator images");
  long p = (long)images[0].dim();
  for (const auto& g : images)
    if (!g.cyclic_layer())
      throw FieldError("adjoint blocks require monomial single-cycle images");

  std::vector<std::vector<CycMat>> blocks((size_t)p);
  for (const auto& g : images) {
    const CycMat& G = g.lift();
    CycMat Ginv = inverse(G);
    // Diagonal block, basis E_ii - E_{i+1,i+1}.
    CycMat a0((size_t)(p - 1), (size_t)(p - 1));
    for (long i = 0; i < p - 1; ++i) {
      CycMat b((size_t)p, (size_t)p);
      b.at(i, i) = CycNum(1);
      b.at(i + 1, i + 1) = CycNum(-1);
      CycMat c = G * b * Ginv;
      // c is diagonal with zero trace; coordinates are partial sums.
      CycNum acc(0);
      for (long j = 0; j < p - 1; ++j) {
        acc += c.at(j, j);
        a0.at(j, i) = acc;
      }
    }
    blocks[0].push_back(std::move(a0));
    // Offset-k blocks, basis E_{i,i+k}.
    for (long k = 1; k < p; ++k) {
      CycMat ak((size_t)p, (size_t)p);
      for (long i = 0; i < p; ++i) {
        CycMat b((size_t)p, (size_t)p);
        b.at(i, (i + k) % p) = CycNum(1);
        CycMat c = G * b * Ginv;
        for (long r = 0; r < p; ++r) ak.at(r, i) = c.at(r, (r + k) % p);
      }
      blocks[(size_t)k].push_back(std::move(ak));
    }
  }
  return blocks;
}

TorsionH1 torsion_h1(const Presentation& P, const std::vector<long>& rhobar,
                     long p, long m, bool full_module) {
  size_t n = P.num_generators;
  if (rhobar.size() != n) throw FieldError("rhobar size mismatch");
  for (const auto& r : P.relators)
    if (word_exponent(r, rhobar, p) != 0)
      throw FieldError("rhobar is not a homomorphism to Z/p");
  size_t np = n * (size_t)p;

  // Z: cochains whose Fox-Jacobian image lies in the zero lattice.
  std::vector<std::vector<mpz_class>> zgens;
  if (P.relators.empty()) {
    for (size_t i = 0; i < np; ++i) {
      std::vector<mpz_class> v(np, 0);
      v[i] = 1;
      zgens.push_back(std::move(v));
    }
  } else {
    IntMat J(P.relators.size() * (size_t)p, np);
    for (size_t r = 0; r < P.relators.size(); ++r)
      for (size_t j = 0; j < n; ++j) {
        GroupRingElt fd = fox_derivative(P.relators[r], (int)j);
        for (const auto& [w, coef] : fd) {
          IntMat S = shift_matrix(p, word_exponent(w, rhobar, p));
          for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b)
              J.at(r * (size_t)p + (size_t)a, j * (size_t)p + (size_t)b) +=
                  coef * S.at((size_t)a, (size_t)b);
        }
      }
    std::vector<std::vector<mpz_class>> L;
    auto blk = lattice_gens(p, m, full_module);
    for (size_t r = 0; r < P.relators.size(); ++r)
      for (const auto& g : blk) {
        std::vector<mpz_class> v(P.relators.size() * (size_t)p, 0);
        for (long t = 0; t < p; ++t)
          v[r * (size_t)p + (size_t)t] = g[(size_t)t];
        L.push_back(std::move(v));
      }
    zgens = preimage_lattice(J, L);
  }

  // B: coboundaries of torus potentials whose values are m-torsion,
  // i.e. {x : p x lies in Phi Z^p + (pm-level zero lattice)^n}.
  std::vector<std::vector<mpz_class>> bcols;
  for (long t = 0; t < p; ++t) {
    std::vector<mpz_class> v(np, 0);
    for (size_t j = 0; j < n; ++j) {
      IntMat S = shift_matrix(p, rhobar[j] % p);
      for (long a = 0; a < p; ++a) {
        mpz_class x = (a == t) ? 1 : 0;
        x -= S.at((size_t)a, (size_t)t);
        v[j * (size_t)p + (size_t)a] = x;
      }
    }
    bcols.push_back(std::move(v));
  }
  auto blk2 = lattice_gens(p, p * m, full_module);
  for (size_t j = 0; j < n; ++j)
    for (const auto& g : blk2) {
      std::vector<mpz_class> v(np, 0);
      for (long t = 0; t < p; ++t) v[j * (size_t)p + (size_t)t] = g[(size_t)t];
      bcols.push_back(std::move(v));
    }
  IntMat scaled(np, np);
  for (size_t i = 0; i < np; ++i) scaled.at(i, i) = p;
  auto bgens = preimage_lattice(scaled, bcols);

  // Basis of Z from its generating columns via SNF.
  IntMat Zg = cols_to_mat(np, zgens);
  SnfResult zs = smith_normal_form(Zg);
  for (size_t i = 0; i < np; ++i)
    if (i >= std::min(zs.D.rows, zs.D.cols) || zs.D.at(i, i) == 0)
      throw FieldError("cocycle lattice is not full rank");
  IntMat Uinv = int_inverse(zs.U);
  IntMat ZB(np, np);
  for (size_t i = 0; i < np; ++i)
    for (size_t j = 0; j < np; ++j)
      ZB.at(i, j) = Uinv.at(i, j) * zs.D.at(j, j);

  // Coordinates of the coboundary generators in the Z basis:
  // c = D^{-1} U b (must divide exactly since B is contained in Z).
  IntMat Bg = cols_to_mat(np, bgens);
  IntMat UB = zs.U * Bg;
  IntMat C(np, Bg.cols);
  for (size_t i = 0; i < np; ++i)
    for (size_t j = 0; j < Bg.cols; ++j) {
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), UB.at(i, j).get_mpz_t(),
                  zs.D.at(i, i).get_mpz_t());
      if (r != 0) throw FieldError("coboundary outside the cocycle lattice");
      C.at(i, j) = q;
    }

  SnfResult cs = smith_normal_form(C);
  TorsionH1 out;
  std::vector<size_t> kept;
  std::vector<mpz_class> dc(np);
  for (size_t i = 0; i < np; ++i) {
    if (i >= std::min(cs.D.rows, cs.D.cols) || cs.D.at(i, i) == 0)
      throw FieldError("coboundary lattice is not full rank");
    dc[i] = cs.D.at(i, i);
    if (dc[i] > 1) {
      kept.push_back(i);
      out.invariants.push_back((long)dc[i].get_si());
    }
  }

  // Shift action in invariant-factor coordinates.
  IntMat Sbig(np, np);
  IntMat S1 = shift_matrix(p, 1);
  for (size_t j = 0; j < n; ++j)
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b)
        Sbig.at(j * (size_t)p + (size_t)a, j * (size_t)p + (size_t)b) =
            S1.at((size_t)a, (size_t)b);
  // T = ZB^{-1} Sbig ZB, then conjugate into SNF coordinates of C.
  IntMat USZ = zs.U * (Sbig * ZB);
  IntMat T(np, np);
  for (size_t i = 0; i < np; ++i)
    for (size_t j = 0; j < np; ++j) {
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), USZ.at(i, j).get_mpz_t(),
                  zs.D.at(i, i).get_mpz_t());
      if (r != 0) throw FieldError("shift does not preserve the lattice");
      T.at(i, j) = q;
    }
  IntMat Ucinv = int_inverse(cs.U);
  IntMat W = cs.U * (T * Ucinv);
  out.shift_action = IntMat(kept.size(), kept.size());
  for (size_t i = 0; i < kept.size(); ++i)
    for (size_t j = 0; j < kept.size(); ++j) {
      mpz_class v = W.at(kept[i], kept[j]) % dc[kept[i]];
      if (v < 0) v += dc[kept[i]];
      out.shift_action.at(i, j) = v;
    }

  // Generator cocycles: classes of ZB * Ucinv * e_i for kept indices.
  for (size_t idx : kept) {
    std::vector<TorsionDiag> vals;
    IntMat col(np, 1);
    for (size_t i = 0; i < np; ++i) col.at(i, 0) = Ucinv.at(i, idx);
    IntMat x = ZB * col;
    for (size_t j = 0; j < n; ++j) {
      std::vector<long> e((size_t)p);
      for (long t = 0; t < p; ++t) {
        mpz_class v = x.at(j * (size_t)p + (size_t)t, 0) % m;
        if (v < 0) v += m;
        e[(size_t)t] = (long)v.get_si();
      }
      vals.push_back(TorsionDiag(p, m, std::move(e)));
    }
    out.generator_cocycles.push_back(std::move(vals));
  }
  return out;
}

std::vector<long> cyclic_h1_oracle(long p, long m, bool full_module) {
  size_t pp = (size_t)p;
  // Norm = sum of all shift powers; Z = {x : Norm x in zero lattice}.
  IntMat N(pp, pp);
  for (long k = 0; k < p; ++k) {
    IntMat S = shift_matrix(p, k);
    for (size_t i = 0; i < pp * pp; ++i) N.a[i] += S.a[i];
  }
  auto zgens = preimage_lattice(N, lattice_gens(p, m, full_module));
  // B = (shift - 1) Z^p + zero lattice.
  std::vector<std::vector<mpz_class>> bcols;
  IntMat S1 = shift_matrix(p, 1);
  for (long t = 0; t < p; ++t) {
    std::vector<mpz_class> v(pp, 0);
    for (long a = 0; a < p; ++a)
      v[(size_t)a] = S1.at((size_t)a, (size_t)t) - ((a == t) ? 1 : 0);
    bcols.push_back(std::move(v));
  }
  for (auto& g : lattice_gens(p, m, full_module)) bcols.push_back(g);

  IntMat Zg = cols_to_mat(pp, zgens);
  SnfResult zs = smith_normal_form(Zg);
  IntMat Uinv = int_inverse(zs.U);
  IntMat Bg = cols_to_mat(pp, bcols);
  IntMat UB = zs.U * Bg;
  IntMat C(pp, Bg.cols);
  for (size_t i = 0; i < pp; ++i) {
    if (zs.D.at(i, i) == 0) throw FieldError("norm-kernel lattice degenerate");
    for (size_t j = 0; j < Bg.cols; ++j) {
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), UB.at(i, j).get_mpz_t(),
                  zs.D.at(i, i).get_mpz_t());
      if (r != 0) throw FieldError("trace image outside the norm kernel");
      C.at(i, j) = q;
    }
  }
  std::vector<long> inv;
  for (const auto& d : quotient_invariants(C)) inv.push_back((long)d.get_si());
  return inv;
}

TorsionDiag cocycle_eval(const Word& w,
                         const std::vector<TorsionDiag>& gen_values,
                         const std::vector<long>& rhobar) {
  long p = gen_values.at(0).p, m = gen_values.at(0).m;
  TorsionDiag v = TorsionDiag::zero(p, m);
  long sigma = 0;
  for (int c : w) {
    if (c > 0) {
      v = v + gen_values.at((size_t)(c - 1)).shifted(sigma);
      sigma = mod(sigma + rhobar.at((size_t)(c - 1)), p);
    } else {
      sigma = mod(sigma - rhobar.at((size_t)(-c - 1)), p);
      v = v + (-gen_values.at((size_t)(-c - 1))).shifted(sigma);
    }
  }
  return v;
}

TorsionDiag transgression_obstruction(const KernelHom& f) {
  long p = f.p;
  if (f.fX.shifted(1) != f.fX)
    throw FieldError("transgression input not equivariant: f(X) not fixed");
  for (const auto& row : f.fY) {
    if ((long)row.size() != p)
      throw FieldError("transgression input has wrong shape");
    for (long i = 0; i < p; ++i)
      if (row[(size_t)((i + 1) % p)] != row[(size_t)i].shifted(1))
        throw FieldError("transgression input not equivariant");
  }
  return f.fX;
}

KernelHom restrict_to_kernel(const std::vector<TorsionDiag>& gen_values,
                             const std::vector<long>& rhobar) {
  long p = gen_values.at(0).p;
  if (rhobar.empty() || rhobar[0] % p != 1)
    throw FieldError("restriction assumes rhobar = (1, 0, ..., 0)");
  for (size_t j = 1; j < rhobar.size(); ++j)
    if (rhobar[j] % p != 0)
      throw FieldError("restriction assumes rhobar = (1, 0, ..., 0)");
  KernelHom f;
  f.p = p;
  f.m = gen_values[0].m;
  Word xp((size_t)p, 1);
  f.fX = cocycle_eval(xp, gen_values, rhobar);
  for (size_t j = 1; j < gen_values.size(); ++j) {
    std::vector<TorsionDiag> row;
    for (long i = 0; i < p; ++i) {
      Word w((size_t)i, 1);
      w.push_back((int)j + 1);
      for (long t = 0; t < i; ++t) w.push_back(-1);
      row.push_back(cocycle_eval(w, gen_values, rhobar));
    }
    f.fY.push_back(std::move(row));
  }
  return f;
}

}  // namespace badlocus
