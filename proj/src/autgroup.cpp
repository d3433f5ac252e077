#include "nilzeta/autgroup.hpp"

#include <algorithm>
#include <thread>

#include "nilzeta/error.hpp"

namespace nilzeta::aut {

namespace {

std::vector<Rational> linear_part_row(const LieElement& v) {
  const auto& alg = *v.algebra();
  std::vector<Rational> row(alg.generator_count());
  for (std::size_t g = 0; g < row.size(); ++g) row[g] = v.coefficient(alg.generator_ordinal(g));
  return row;
}

std::size_t ordinal(const AlgebraPtr& alg, const std::string& name) {
  auto k = alg->find(name);
  require(k.has_value(), Errc::invariant, "basis element '" + name + "' missing");
  return *k;
}

}  // namespace

AutMatrix extend_endomorphism(const AlgebraPtr& alg, const GeneratorImages& images, bool require_invertible) {
  require(images.images.size() == alg->generator_count(), Errc::input, "need one image per generator");
  for (const auto& im : images.images)
    require(im.algebra() == alg, Errc::input, "generator image lives in a different algebra");
  if (require_invertible) {
    RatMatrix lin;
    for (const auto& im : images.images) lin.push_back(linear_part_row(im));
    require(determinant(lin) != 0, Errc::singular, "generator images do not span modulo gamma_2");
  }
  const std::size_t d = alg->dimension();
  std::vector<LieElement> rows;
  rows.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto& e = alg->basis(k);
    if (e.generator) {
      rows.push_back(images.images.at(*e.generator));
    } else {
      require(e.factors && e.factors->first < k && e.factors->second < k, Errc::invariant,
              "basis factors must precede their product");
      rows.push_back(bracket(rows[e.factors->first], rows[e.factors->second]));
    }
  }
  AutMatrix g;
  for (const auto& r : rows) g.push_back(r.dense());
  require(preserves_brackets(alg, g), Errc::input, "generator images do not extend to an endomorphism");
  return g;
}

bool preserves_brackets(const AlgebraPtr& alg, const AutMatrix& g) {
  const std::size_t d = alg->dimension();
  std::vector<LieElement> rows;
  for (const auto& r : g) rows.push_back(LieElement::from_dense(alg, r));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      LieElement lhs = bracket(rows[i], rows[j]);
      LieElement rhs(alg);
      for (const auto& [k, c] : alg->structure(i, j)) rhs += c * rows[k];
      if (!(lhs == rhs)) return false;
    }
  return true;
}

LieElement apply(const AutMatrix& g, const LieElement& v) {
  const auto& alg = v.algebra();
  require(g.size() == alg->dimension(), Errc::input, "matrix size does not match the algebra");
  std::vector<Rational> out(alg->dimension());
  for (const auto& [k, c] : v.coeffs())
    for (std::size_t j = 0; j < out.size(); ++j)
      if (g[k][j] != 0) out[j] += c * g[k][j];
  return LieElement::from_dense(alg, out);
}

TorusElement::TorusElement(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  require(a != 0 && b != 0 && c != 0, Errc::input, "torus entries must be nonzero");
  require(a * a * a == b * c, Errc::input, "torus element must satisfy a^3 = b c");
}

GeneratorImages torus_images(const AlgebraPtr& alg, const TorusElement& t) {
  require(alg->generator_count() == 3, Errc::unsupported, "torus is defined on three generators");
  return {{t.a * LieElement::generator(alg, 0), t.b * LieElement::generator(alg, 1),
           t.c * LieElement::generator(alg, 2)}};
}

AutMatrix torus_matrix(const AlgebraPtr& alg, const TorusElement& t) {
  return extend_endomorphism(alg, torus_images(alg, t), true);
}

Rational torus_eigenvalue(const AlgebraPtr& alg, const TorusElement& t, std::size_t k) {
  const auto& md = alg->basis(k).multidegree;
  return rpow(t.a, md.at(0)) * rpow(t.b, md.at(1)) * rpow(t.c, md.at(2));
}

GeneratorImages permutation_images(const AlgebraPtr& alg, const std::array<int, 3>& perm) {
  require(alg->generator_count() == 3, Errc::unsupported, "permutations are defined on three generators");
  GeneratorImages im;
  for (int g : perm) im.images.push_back(LieElement::generator(alg, static_cast<std::size_t>(g)));
  return im;
}

GeneratorImages swap_images(const AlgebraPtr& alg) { return permutation_images(alg, {0, 2, 1}); }

bool descends_to_quotient(const lattice::QuotientLattice& q, const AutMatrix& endo) {
  RatMatrix ideal_rows = to_rational(q.ideal().basis());
  for (const auto& r : q.ideal().basis_elements()) {
    LieElement image = apply(endo, r);
    if (!solve_left(ideal_rows, image.dense())) return false;
  }
  return true;
}

Rational& UnipotentParams::at(std::size_t idx) {
  return const_cast<Rational&>(static_cast<const UnipotentParams&>(*this).at(idx));
}

const Rational& UnipotentParams::at(std::size_t idx) const {
  require(idx < kCount, Errc::input, "parameter index out of range");
  if (idx < 3) return alpha[idx];
  if (idx == 3) return upsilon;
  if (idx == 4) return sigma;
  if (idx == 5) return tau;
  idx -= 6;
  return delta[idx / kDeltaColumns][idx % kDeltaColumns];
}

std::string UnipotentParams::name(std::size_t idx) {
  require(idx < kCount, Errc::input, "parameter index out of range");
  if (idx < 3) return "alpha" + std::to_string(idx + 1);
  if (idx == 3) return "upsilon";
  if (idx == 4) return "sigma";
  if (idx == 5) return "tau";
  idx -= 6;
  return "delta" + std::to_string(idx / kDeltaColumns + 1) + "," + std::to_string(idx % kDeltaColumns + 7);
}

bool UnipotentParams::operator==(const UnipotentParams& o) const {
  for (std::size_t i = 0; i < kCount; ++i)
    if (at(i) != o.at(i)) return false;
  return true;
}

std::size_t param_column(std::size_t idx) {
  require(idx < UnipotentParams::kCount, Errc::input, "parameter index out of range");
  static const std::size_t weight2[] = {3, 4, 5, 3, 5, 5};
  if (idx < 6) return weight2[idx];
  return 6 + (idx - 6) % UnipotentParams::kDeltaColumns;
}

std::size_t param_row(std::size_t idx) {
  require(idx < UnipotentParams::kCount, Errc::input, "parameter index out of range");
  static const std::size_t rows[] = {0, 0, 0, 1, 1, 2};
  if (idx < 6) return rows[idx];
  return (idx - 6) / UnipotentParams::kDeltaColumns;
}

AutMatrix unipotent_matrix(const lattice::QuotientLattice& q, const UnipotentParams& p) {
  const AlgebraPtr& alg = q.algebra();
  require(alg->dimension() == 25, Errc::unsupported, "unipotent parametrization is defined on Lambda");
  std::vector<std::vector<Rational>> gens(3, std::vector<Rational>(25));
  for (std::size_t g = 0; g < 3; ++g) gens[g][g] = 1;
  gens[0][3] = p.alpha[0];
  gens[0][4] = p.alpha[1];
  gens[0][5] = p.alpha[2];
  gens[1][3] = p.upsilon;
  gens[1][5] = p.sigma;
  gens[2][4] = p.upsilon;
  gens[2][5] = p.tau;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < UnipotentParams::kDeltaColumns; ++j) gens[i][6 + j] = p.delta[i][j];
  GeneratorImages im;
  for (const auto& r : gens) im.images.push_back(LieElement::from_dense(alg, r));
  AutMatrix g;
  try {
    g = extend_endomorphism(alg, im);
  } catch (const Error& e) {
    fail(Errc::invariant, std::string("unipotent element is not an automorphism: ") + e.what());
  }
  require(params_from_rows(g) == p, Errc::invariant, "first three rows do not reproduce the parameters");
  return g;
}

UnipotentParams params_from_rows(const AutMatrix& g) {
  require(g.size() == 25, Errc::input, "expected a 25x25 matrix");
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      require(g[r][c] == (r == c ? 1 : 0), Errc::input, "generator rows are not unipotent");
  require(g[1][4] == 0 && g[2][3] == 0 && g[1][3] == g[2][4], Errc::input,
          "weight-2 entries do not have the (upsilon, 0, sigma), (0, upsilon, tau) pattern");
  UnipotentParams p;
  p.alpha = {g[0][3], g[0][4], g[0][5]};
  p.upsilon = g[1][3];
  p.sigma = g[1][5];
  p.tau = g[2][5];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < UnipotentParams::kDeltaColumns; ++j) p.delta[i][j] = g[i][6 + j];
  return p;
}

bool is_integral_by_generators(const AlgebraPtr& alg, const AutMatrix& g, unsigned long p) {
  for (std::size_t gen = 0; gen < alg->generator_count(); ++gen)
    for (const auto& x : g.at(alg->generator_ordinal(gen)))
      if (!nilzeta::is_p_integral(x, p)) return false;
  return true;
}

bool is_p_integral(const AutMatrix& g, unsigned long p) {
  for (const auto& row : g)
    for (const auto& x : row)
      if (!nilzeta::is_p_integral(x, p)) return false;
  return true;
}

CoefficientCheck coefficient_constraints_check(const lattice::QuotientLattice& q, const RatMatrix& a) {
  require(a.size() == 3 && a[0].size() == 3 && a[1].size() == 3 && a[2].size() == 3, Errc::input,
          "expected a 3x3 matrix");
  require(determinant(a) != 0, Errc::singular, "linear part must be invertible");
  const AlgebraPtr& alg = q.algebra();
  auto image = [&](std::size_t r) {
    LieElement v(alg);
    for (std::size_t g = 0; g < 3; ++g) v += a[r][g] * LieElement::generator(alg, g);
    return v;
  };
  LieElement y = image(1), z = image(2);
  LieElement zyz = bracket(bracket(z, y), z);
  CoefficientCheck out;
  const char* names[] = {"xyy", "xzz", "xyx", "xzx"};
  for (int i = 0; i < 4; ++i) out.direct[i] = zyz.coefficient(ordinal(alg, names[i]));
  const Rational &a21 = a[1][0], &a22 = a[1][1], &a23 = a[1][2];
  const Rational &a31 = a[2][0], &a32 = a[2][1], &a33 = a[2][2];
  Rational m12 = a21 * a32 - a22 * a31;
  Rational m13 = a21 * a33 - a23 * a31;
  out.formula = {-a32 * m12, -a33 * m13, -a31 * m12, -a31 * m13};
  out.match = out.direct == out.formula;
  return out;
}

RelationImageCheck relation_images(const lattice::QuotientLattice& q, const Rational& upsilon, const Rational& sigma,
                                const Rational& tau, const LieElement& u, const LieElement& v,
                                const LieElement& w) {
  const auto& f = q.free();
  require(u.in_weight_at_least(2) && v.in_weight_at_least(3) && w.in_weight_at_least(3), Errc::input,
          "corrections must lie in gamma_2 (x) and gamma_3 (y, z)");
  LieElement X = f.generator(0) + u;
  LieElement Y = f.generator(1) + upsilon * f.normal_form("XY") + sigma * f.normal_form("YZ") + v;
  LieElement Z = f.generator(2) + upsilon * f.normal_form("XZ") + tau * f.normal_form("YZ") + w;
  RelationImageCheck out;
  out.r1_image = left_normed({Y, X, X, X}) - left_normed({Y, Z, Y});
  out.r2_image = left_normed({Z, X, X, X}) - left_normed({Z, Y, Z});
  auto rel = lattice::lambda_relations(f);
  out.r1_expected = rel[0] + upsilon * f.normal_form("YZYX") + sigma * f.normal_form("ZYZY") +
                    tau * f.normal_form("YZYY");
  out.r2_expected = rel[1] + upsilon * f.normal_form("ZYZX") - tau * f.normal_form("YZYZ") -
                    sigma * f.normal_form("ZYZZ");
  return out;
}

namespace {

using Vec = std::vector<long>;

long mod(long x, long q) {
  x %= q;
  return x < 0 ? x + q : x;
}

long inv_mod(long a, long q) {
  long r = 1, e = q - 2, b = mod(a, q);
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

// Multilinear bracket tables of Lambda reduced mod q.
struct Tables {
  long q = 0;
  std::size_t d = 0;
  std::vector<std::size_t> w3;  // ordinals of weight 3
  std::vector<Vec> t4, t3, b, dd, c;

  Vec reduce(const LieElement& v) const {
    Vec out(d);
    for (const auto& [k, x] : v.coeffs()) {
      Integer r = x.get_num() % q;
      out[k] = mod(r.get_si(), q);
    }
    return out;
  }
};

Tables build_tables(const lattice::QuotientLattice& ql, long q) {
  const AlgebraPtr& alg = ql.algebra();
  Tables t;
  t.q = q;
  t.d = alg->dimension();
  std::vector<LieElement> g, w;
  for (std::size_t k = 0; k < t.d; ++k) {
    int wt = alg->basis(k).weight;
    if (wt == 1) g.push_back(LieElement::basis(alg, k));
    if (wt == 2) w.push_back(LieElement::basis(alg, k));
    if (wt == 3) t.w3.push_back(k);
  }
  require(g.size() == 3 && w.size() == 3, Errc::unsupported, "classification expects ranks 3 and 3 in weights 1, 2");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        t.t3.push_back(t.reduce(left_normed({g[i], g[j], g[k]})));
        for (int l = 0; l < 3; ++l) t.t4.push_back(t.reduce(left_normed({g[i], g[j], g[k], g[l]})));
        t.b.push_back(t.reduce(left_normed({w[i], g[j], g[k]})));    // [[w_i, g_j], g_k]
        t.dd.push_back(t.reduce(left_normed({g[i], w[j], g[k]})));   // [[g_i, w_j], g_k]
        t.c.push_back(t.reduce(bracket(bracket(g[i], g[j]), w[k])));  // [[g_i, g_j], w_k]
      }
  return t;
}

inline std::size_t i3(int i, int j, int k) { return static_cast<std::size_t>((i * 3 + j) * 3 + k); }
inline std::size_t i4(int i, int j, int k, int l) { return static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l); }

void axpy(Vec& acc, const Vec& v, long s, long q) {
  if (s == 0) return;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (v[k]) acc[k] = (acc[k] + s * v[k]) % q;
}

// Weight-3 part of [[u, v], u] (the only weight-3 contribution to R1, R2).
bool weight3_vanishes(const Tables& t, const long* u, const long* v) {
  for (std::size_t k : t.w3) {
    long s = 0;
    for (int i = 0; i < 3; ++i)
      if (u[i])
        for (int j = 0; j < 3; ++j)
          if (v[j])
            for (int l = 0; l < 3; ++l)
              if (u[l]) s += u[i] * v[j] % t.q * u[l] % t.q * t.t3[i3(i, j, l)][k];
    if (s % t.q != 0) return false;
  }
  return true;
}

// Constant and correction columns for R' = [[[u,x],x],x] - [[u,v],u] with
// u -> u + c_u, v -> v + c_v (weight-2 corrections).
void relation_system(const Tables& t, const long* u, const long* x, const long* v, Vec& constant,
                     std::array<Vec, 3>& du, std::array<Vec, 3>& dv) {
  const long q = t.q;
  constant.assign(t.d, 0);
  for (auto& e : du) e.assign(t.d, 0);
  for (auto& e : dv) e.assign(t.d, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        long s3 = u[i] * v[j] % q * u[k] % q;
        axpy(constant, t.t3[i3(i, j, k)], q - s3, q);
        for (int l = 0; l < 3; ++l) {
          long s4 = u[i] * x[j] % q * x[k] % q * x[l] % q;
          axpy(constant, t.t4[i4(i, j, k, l)], s4, q);
        }
      }
  for (int a = 0; a < 3; ++a)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // -[[c_u, v], u] - [[u, v], c_u]
        axpy(du[a], t.b[i3(a, j, k)], q - v[j] * u[k] % q, q);
        axpy(du[a], t.c[i3(j, k, a)], q - u[j] * v[k] % q, q);
        // -[[u, c_v], u]
        axpy(dv[a], t.dd[i3(j, a, k)], q - u[j] * u[k] % q, q);
      }
}

// Is b in the column span of cols (mod q)?
bool solvable(std::vector<Vec> cols, Vec b, long q) {
  const std::size_t n = cols.size(), m = b.size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t piv = row;
    while (piv < m && cols[c][piv] == 0) ++piv;
    if (piv == m) continue;
    for (auto& col : cols) std::swap(col[row], col[piv]);
    std::swap(b[row], b[piv]);
    long inv = inv_mod(cols[c][row], q);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || cols[c][r] == 0) continue;
      long f = cols[c][r] * inv % q;
      for (auto& col : cols) col[r] = mod(col[r] - f * col[row], q);
      b[r] = mod(b[r] - f * b[row], q);
    }
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (b[r] != 0) return false;
  return true;
}

bool realizable(const Tables& t, const Matrix3& a, bool& pruned) {
  const long* x = &a[0];
  const long* y = &a[3];
  const long* z = &a[6];
  pruned = !(weight3_vanishes(t, y, z) && weight3_vanishes(t, z, y));
  if (pruned) return false;
  Vec c1, c2;
  std::array<Vec, 3> d1y, d1z, d2z, d2y;
  relation_system(t, y, x, z, c1, d1y, d1z);  // R1 = YXXX - YZY
  relation_system(t, z, x, y, c2, d2z, d2y);  // R2 = ZXXX - ZYZ
  // Unknowns: c_y (3), c_z (3). Stack R1 and R2 coordinates.
  std::vector<Vec> cols;
  for (int a2 = 0; a2 < 3; ++a2) {
    Vec col = d1y[a2];
    col.insert(col.end(), d2y[a2].begin(), d2y[a2].end());
    cols.push_back(std::move(col));
  }
  for (int a2 = 0; a2 < 3; ++a2) {
    Vec col = d1z[a2];
    col.insert(col.end(), d2z[a2].begin(), d2z[a2].end());
    cols.push_back(std::move(col));
  }
  Vec rhs;
  for (long v : c1) rhs.push_back(mod(-v, t.q));
  for (long v : c2) rhs.push_back(mod(-v, t.q));
  return solvable(std::move(cols), std::move(rhs), t.q);
}

long det3(const Matrix3& a, long q) {
  long d = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
  return mod(d, q);
}

}  // namespace

FiniteFieldClassification finite_field_classification(const lattice::QuotientLattice& ql, unsigned long order,
                                                       unsigned workers) {
  require(is_prime(order), Errc::unsupported, "only prime field orders are supported");
  require(order > 3, Errc::unsupported, "characteristic must exceed 3");
  require(order <= 13, Errc::input, "field order too large to enumerate GL3");
  const long q = static_cast<long>(order);
  const Tables t = build_tables(ql, q);
  workers = std::max(1u, workers);

  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= order;

  struct Partial {
    std::uint64_t enumerated = 0, passed = 0;
    std::vector<Matrix3> found;
  };
  std::vector<Partial> parts(workers);
  auto work = [&](unsigned id) {
    Partial& out = parts[id];
    Matrix3 a;
    for (std::uint64_t code = id; code < total; code += workers) {
      std::uint64_t c = code;
      for (int i = 8; i >= 0; --i) {
        a[i] = static_cast<long>(c % order);
        c /= order;
      }
      if (det3(a, q) == 0) continue;
      ++out.enumerated;
      bool pruned = false;
      bool ok = realizable(t, a, pruned);
      if (!pruned) ++out.passed;
      if (ok) out.found.push_back(a);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id);
    for (auto& th : threads) th.join();
  }

  FiniteFieldClassification res;
  res.q = order;
  for (auto& p : parts) {
    res.enumerated += p.enumerated;
    res.passed_prune += p.passed;
    res.realizable.insert(res.realizable.end(), p.found.begin(), p.found.end());
  }
  std::sort(res.realizable.begin(), res.realizable.end());
  for (long a = 1; a < q; ++a)
    for (long b = 1; b < q; ++b) {
      long c = a * a % q * a % q * inv_mod(b, q) % q;
      res.predicted.push_back({a, 0, 0, 0, b, 0, 0, 0, c});
      res.predicted.push_back({a, 0, 0, 0, 0, b, 0, c, 0});
    }
  std::sort(res.predicted.begin(), res.predicted.end());
  res.matches_prediction = res.realizable == res.predicted;
  return res;
}

UnipotentParams conjugate_params(const lattice::QuotientLattice& q, const TorusElement& h, const UnipotentParams& n) {
  const AlgebraPtr& alg = q.algebra();
  UnipotentParams out;
  for (std::size_t i = 0; i < UnipotentParams::kCount; ++i) {
    Rational ratio = torus_eigenvalue(alg, h, param_column(i)) / torus_eigenvalue(alg, h, param_row(i));
    out.at(i) = n.at(i) * ratio;
  }
  return out;
}

ConjugationCheck semidirect_check(const lattice::QuotientLattice& q, const TorusElement& h, const UnipotentParams& n) {
  const AlgebraPtr& alg = q.algebra();
  AutMatrix hm = torus_matrix(alg, h);
  AutMatrix conj = multiply(multiply(*inverse(hm), unipotent_matrix(q, n)), hm);
  ConjugationCheck out;
  UnipotentParams read;
  try {
    read = params_from_rows(conj);
    out.unipotent = true;
  } catch (const Error&) {
    return out;
  }
  for (std::size_t r = 0; r < conj.size() && out.unipotent; ++r)
    for (std::size_t c = 0; c < conj.size(); ++c) {
      int wr = alg->basis(r).weight, wc = alg->basis(c).weight;
      bool expect_one = r == c;
      if ((wc <= wr && !expect_one && conj[r][c] != 0) || (expect_one && conj[r][c] != 1)) {
        out.unipotent = false;
        break;
      }
    }
  out.scaled = read == conjugate_params(q, h, n);
  out.determined = unipotent_matrix(q, read) == conj;
  return out;
}

}  // namespace nilzeta::aut
