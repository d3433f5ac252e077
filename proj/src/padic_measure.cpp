#include "nilzeta/padic_measure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "nilzeta/error.hpp"

namespace nilzeta::padic {

ValuationTriple::ValuationTriple(int a, int b, int c) : va(a), vb(b), vc(c) {
  require(a >= 0 && b >= 0 && c >= 0, Errc::input, "valuations must be nonnegative");
  require(3 * a == b + c, Errc::input, "valuations must satisfy 3 va = vb + vc");
}

std::vector<ValuationTriple> triples_up_to(int bound) {
  std::vector<ValuationTriple> out;
  for (int vb = 0; vb <= bound; ++vb)
    for (int vc = 0; vc <= bound; ++vc)
      if ((vb + vc) % 3 == 0) out.emplace_back((vb + vc) / 3, vb, vc);
  return out;
}

long theta(int i, const ValuationTriple& v) {
  switch (i) {
    case 1:
      return 3L * v.va + 4L * v.vb + 4L * v.vc + std::min(v.vb, v.vc);
    case 2:
      return 24L * v.va + 15L * v.vb + 15L * v.vc;
    case 3:
      return 66L * v.va + 45L * v.vb + 45L * v.vc;
    default:
      fail(Errc::input, "theta index must be 1, 2 or 3");
  }
}

long theta_unshared(int i, const ValuationTriple& v) {
  if (i != 1) return theta(i, v);
  return 4L * v.va + 5L * v.vb + 5L * v.vc;
}

long det_valuation(const ValuationTriple& v) { return 33L * v.va + 23L * v.vb + 23L * v.vc; }

aut::TorusElement torus_from_valuations(const ValuationTriple& v, unsigned long p) {
  Integer P(p);
  return aut::TorusElement(Rational(ipow(P, v.va)), Rational(ipow(P, v.vb)), Rational(ipow(P, v.vc)));
}

namespace {

constexpr unsigned long kEigenPrime = 5;  // valuations do not depend on the prime

std::vector<int> column_valuations(const lattice::QuotientLattice& q, const ValuationTriple& v) {
  aut::AutMatrix h = aut::torus_matrix(q.algebra(), torus_from_valuations(v, kEigenPrime));
  std::vector<int> out;
  for (std::size_t k = 0; k < h.size(); ++k) {
    for (std::size_t j = 0; j < h.size(); ++j)
      require(j == k || h[k][j] == 0, Errc::invariant, "torus matrix is not diagonal");
    out.push_back(valuation(h[k][k], kEigenPrime));
  }
  return out;
}

// Columns touched by each parameter in rows x, y, z, read from the matrix.
using Entries = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

Entries parameter_entries(const lattice::QuotientLattice& q) {
  static std::mutex mu;
  static std::map<const LieAlgebra*, Entries> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace(q.algebra().get());
  if (fresh) {
    for (std::size_t idx = 0; idx < aut::UnipotentParams::kCount; ++idx) {
      aut::UnipotentParams prm;
      prm.at(idx) = 1;
      aut::AutMatrix n = aut::unipotent_matrix(q, prm);
      std::vector<std::pair<std::size_t, std::size_t>> entries;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 3; c < n[r].size(); ++c)
          if (n[r][c] != 0) entries.emplace_back(r, c);
      it->second.push_back(std::move(entries));
    }
  }
  return it->second;
}

std::uint64_t count_residues(unsigned long p, int K, const std::vector<int>& exponents) {
  const std::uint64_t modulus = ipow(Integer(p), K).get_ui();
  std::vector<std::uint64_t> step, acc(exponents.size(), 0);
  for (int e : exponents) step.push_back(ipow(Integer(p), e).get_ui() % modulus);
  std::uint64_t count = 0;
  if (step.size() == 1) {
    const std::uint64_t s = step[0];
    std::uint64_t a = 0;
    for (std::uint64_t r = 0; r < modulus; ++r) {
      count += a == 0;
      a += s;
      if (a >= modulus) a -= modulus;
    }
    return count;
  }
  for (std::uint64_t r = 0; r < modulus; ++r) {
    bool ok = true;
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k] != 0) ok = false;
      acc[k] += step[k];
      if (acc[k] >= modulus) acc[k] -= modulus;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

std::vector<StageParameter> stage_parameters(const lattice::QuotientLattice& q, int i, const ValuationTriple& v,
                                             Sharing sharing) {
  require(i >= 1 && i <= 3, Errc::input, "stage must be 1, 2 or 3");
  const auto& alg = q.algebra();
  auto vals = column_valuations(q, v);
  const auto entries = parameter_entries(q);
  std::vector<StageParameter> out;
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    StageParameter sp;
    sp.name = aut::UnipotentParams::name(idx);
    for (auto [r, c] : entries[idx])
      if (alg->basis(c).weight == i + 1) sp.exponents.push_back(vals[c]);
    if (sp.exponents.empty()) continue;
    if (sp.exponents.size() == 1 || sharing == Sharing::shared) {
      out.push_back(std::move(sp));
    } else if (sharing == Sharing::split) {
      for (std::size_t k = 0; k < sp.exponents.size(); ++k)
        out.push_back({sp.name + "#" + std::to_string(k + 1), {sp.exponents[k]}});
    } else {
      std::size_t keep = sharing == Sharing::first_column ? 0 : 1;
      out.push_back({sp.name, {sp.exponents[keep]}});
    }
  }
  return out;
}

int theta_level_bound(const lattice::QuotientLattice& q, int i, const ValuationTriple& v) {
  int bound = 0;
  for (const auto& sp : stage_parameters(q, i, v))
    for (int e : sp.exponents) bound = std::max(bound, e);
  return bound;
}

OracleResult theta_bruteforce(const lattice::QuotientLattice& q, int i, const ValuationTriple& v, unsigned long p,
                              int K, Sharing sharing, unsigned workers) {
  require(is_prime(p), Errc::input, "p must be prime");
  require(K >= 1, Errc::input, "level must be positive");
  auto params = stage_parameters(q, i, v, sharing);
  OracleResult res;
  res.level = K;
  res.bound = theta_level_bound(q, i, v);
  res.parameters = params.size();
  require(K >= res.bound, Errc::precision,
          "level " + std::to_string(K) + " is below the required bound " + std::to_string(res.bound));
  require(ipow(Integer(p), K) < Integer("1000000000000"), Errc::input, "level too large to enumerate");

  std::map<std::vector<int>, std::uint64_t> counts;
  for (auto& sp : params) {
    std::sort(sp.exponents.begin(), sp.exponents.end());
    counts.emplace(sp.exponents, 0);
  }
  std::vector<std::vector<int>> keys;
  for (const auto& [k, _] : counts) keys.push_back(k);
  std::vector<std::uint64_t> results(keys.size());
  auto work = [&](unsigned id, unsigned stride) {
    for (std::size_t k = id; k < keys.size(); k += stride) results[k] = count_residues(p, K, keys[k]);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(keys.size())));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id, workers);
    for (auto& t : threads) t.join();
  }
  for (std::size_t k = 0; k < keys.size(); ++k) counts[keys[k]] = results[k];
  res.signatures = keys.size();

  // Integral parameters are the single residue r = 0, so they have count 1.
  Integer product = 1;
  for (const auto& sp : params) product *= counts.at(sp.exponents);
  res.value = Rational(product);
  return res;
}

aut::UnipotentParams truncate_params(const aut::UnipotentParams& n0, int i) {
  aut::UnipotentParams n = n0;
  for (std::size_t idx = 0; idx < aut::UnipotentParams::kCount; ++idx) {
    std::size_t col = aut::param_column(idx);
    int w = col < 6 ? 2 : col < 12 ? 3 : 4;  // weight layers of the fixed basis
    if (w >= i) n.at(idx) = 0;
  }
  return n;
}

LiftingResult lifting_check(const lattice::QuotientLattice& q, int i, const ValuationTriple& v,
                            const aut::UnipotentParams& n0, unsigned long p) {
  require(i >= 2 && i <= 4, Errc::input, "lifting stage must be 2, 3 or 4");
  require(is_prime(p), Errc::input, "p must be prime");
  const auto& alg = q.algebra();
  aut::AutMatrix h = aut::torus_matrix(alg, torus_from_valuations(v, p));
  aut::AutMatrix g0 = multiply(aut::unipotent_matrix(q, n0), h);
  aut::AutMatrix g = multiply(aut::unipotent_matrix(q, truncate_params(n0, i)), h);
  LiftingResult res;
  res.precondition = true;
  res.same_coset = true;
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (alg->basis(r).weight >= i) continue;
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (alg->basis(c).weight >= i) continue;
      if (!nilzeta::is_p_integral(g0[r][c], p)) res.precondition = false;
      if (g0[r][c] != g[r][c]) res.same_coset = false;
    }
  }
  res.generators_integral = aut::is_integral_by_generators(alg, g, p);
  res.fully_integral = aut::is_p_integral(g, p);
  require(res.generators_integral == res.fully_integral, Errc::invariant,
          "generator-row integrality disagrees with full integrality");
  return res;
}

}  // namespace nilzeta::padic
