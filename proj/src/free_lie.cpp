#include "nilzeta/free_lie.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "nilzeta/error.hpp"
#include "nilzeta/expression.hpp"

namespace nilzeta::free_lie {

std::vector<Generator> default_generators(int n) {
  require(n >= 1 && n <= 26, Errc::input, "generator count must be in 1..26");
  std::vector<Generator> g;
  for (int i = 0; i < n; ++i) {
    std::string name = n <= 3 ? std::string(1, static_cast<char>('X' + i))
                              : std::string(1, static_cast<char>('A' + i));
    g.push_back({i, name});
  }
  return g;
}

std::vector<BasicCommutator> hall_basis(int n, int c) {
  require(n >= 1, Errc::input, "hall_basis: need at least one generator");
  require(c >= 1, Errc::input, "hall_basis: class must be positive");
  std::vector<BasicCommutator> basis;
  for (int i = 0; i < n; ++i) {
    BasicCommutator b;
    b.ordinal = basis.size();
    b.weight = 1;
    b.multidegree.assign(n, 0);
    b.multidegree[i] = 1;
    b.generator = i;
    basis.push_back(b);
  }
  for (int w = 2; w <= c; ++w) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t existing = basis.size();
    for (std::size_t l = 0; l < existing; ++l)
      for (std::size_t r = 0; r < l; ++r) {
        if (basis[l].weight + basis[r].weight != w) continue;
        if (!basis[l].is_leaf() && basis[l].right > r) continue;
        pairs.emplace_back(l, r);
      }
    std::sort(pairs.begin(), pairs.end());
    for (auto [l, r] : pairs) {
      BasicCommutator b;
      b.ordinal = basis.size();
      b.weight = w;
      b.multidegree.assign(n, 0);
      for (int i = 0; i < n; ++i) b.multidegree[i] = basis[l].multidegree[i] + basis[r].multidegree[i];
      b.left = l;
      b.right = r;
      basis.push_back(b);
    }
  }
  return basis;
}

std::string commutator_name(const std::vector<BasicCommutator>& basis, std::size_t ordinal,
                            const std::vector<Generator>& gens) {
  const BasicCommutator& b = basis.at(ordinal);
  if (b.is_leaf()) return gens.at(b.generator).name;
  std::string left = commutator_name(basis, b.left, gens);
  const BasicCommutator& r = basis[b.right];
  if (r.is_leaf()) {
    bool left_plain = left.find('(') == std::string::npos;
    return (left_plain ? left : "(" + left + ")") + gens.at(r.generator).name;
  }
  return "(" + left + ")(" + commutator_name(basis, b.right, gens) + ")";
}

namespace {

// Builds the structure tensor by Hall collection: [e_i, e_j] for i > j is a
// basic element when e_i is a leaf or its right factor is <= e_j; otherwise
// [[d1,d2],e_j] = [[d1,e_j],d2] + [d1,[d2,e_j]].
class TensorBuilder {
 public:
  TensorBuilder(const std::vector<BasicCommutator>& basis, int c) : basis_(basis), c_(c) {
    for (const auto& b : basis_)
      if (!b.is_leaf()) pair_index_.emplace(std::make_pair(b.left, b.right), b.ordinal);
  }

  const Coeffs& basic(std::size_t i, std::size_t j) {
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Coeffs out = compute(i, j);
    return memo_.emplace(key, std::move(out)).first->second;
  }

  Coeffs elements(const Coeffs& a, const Coeffs& b) {
    Coeffs out;
    for (const auto& [i, ai] : a)
      for (const auto& [j, bj] : b) add_scaled(out, basic(i, j), ai * bj);
    return out;
  }

 private:
  Coeffs compute(std::size_t i, std::size_t j) {
    Coeffs out;
    if (i == j || basis_[i].weight + basis_[j].weight > c_) return out;
    if (i < j) {
      add_scaled(out, basic(j, i), Rational(-1));
      return out;
    }
    const BasicCommutator& bi = basis_[i];
    if (bi.is_leaf() || bi.right <= j) {
      auto it = pair_index_.find({i, j});
      require(it != pair_index_.end(), Errc::invariant, "Hall collection reached a non-basic pair");
      out.emplace(it->second, Rational(1));
      return out;
    }
    Coeffs d1j = basic(bi.left, j);
    Coeffs first = elements(d1j, unit(bi.right));
    Coeffs d2j = basic(bi.right, j);
    Coeffs second = elements(unit(bi.left), d2j);
    add_scaled(out, first, Rational(1));
    add_scaled(out, second, Rational(1));
    return out;
  }

  static Coeffs unit(std::size_t k) {
    Coeffs c;
    c.emplace(k, Rational(1));
    return c;
  }

  const std::vector<BasicCommutator>& basis_;
  int c_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
  std::map<std::pair<std::size_t, std::size_t>, Coeffs> memo_;
};

std::vector<std::string> names_from(const std::vector<Generator>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.name);
  return out;
}

}  // namespace

FreeNilpotentAlgebra::FreeNilpotentAlgebra(int n, int c)
    : FreeNilpotentAlgebra(n, c, names_from(default_generators(n))) {}

FreeNilpotentAlgebra::FreeNilpotentAlgebra(int n, int c, std::vector<std::string> generator_names)
    : n_(n), c_(c) {
  require(n >= 1 && c >= 1, Errc::input, "free nilpotent algebra needs n >= 1 and c >= 1");
  require(static_cast<int>(generator_names.size()) == n, Errc::input, "wrong number of generator names");
  for (int i = 0; i < n; ++i) gens_.push_back({i, generator_names[i]});
  hall_ = hall_basis(n, c);

  std::vector<BasisEntry> entries;
  for (const auto& b : hall_) {
    BasisEntry e;
    e.name = commutator_name(hall_, b.ordinal, gens_);
    e.weight = b.weight;
    e.multidegree = b.multidegree;
    if (b.is_leaf())
      e.generator = b.generator;
    else
      e.factors = std::make_pair(b.left, b.right);
    entries.push_back(std::move(e));
  }
  std::size_t d = hall_.size();
  TensorBuilder builder(hall_, c);
  std::vector<Coeffs> tensor(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) tensor[i * d + j] = builder.basic(i, j);
  algebra_ = std::make_shared<const LieAlgebra>("free_nilpotent", generator_names, std::move(entries),
                                                std::move(tensor), c);
}

LieElement FreeNilpotentAlgebra::normal_form(const std::string& expr) const {
  return parse_lie_expression(algebra_, expr);
}

const std::vector<std::string>& left_normed_words_3_4() {
  static const std::vector<std::string> words = {
      "X",    "Y",    "Z",    "XY",   "XZ",   "YZ",   "XYY",  "XZZ",  "XYZ",  "XZY",  "XYX",
      "XZX",  "YZY",  "ZYZ",  "XYYY", "XZZZ", "XYXX", "XZXX", "XYXY", "XZXZ", "XYXZ", "XZXY",
      "XYZX", "XYZZ", "XZYY", "XYZY", "XZYZ", "XYYZ", "XZZY", "YZYY", "YZYZ", "ZYZZ"};
  return words;
}

LeftNormedBasis left_normed_basis(const FreeNilpotentAlgebra& f) {
  require(f.generator_count() == 3 && f.nilpotency_class() == 4, Errc::unsupported,
          "the left-normed basis is defined for F(3,4) only");
  LeftNormedBasis b;
  b.words = left_normed_words_3_4();
  RatMatrix m;
  for (const auto& w : b.words) m.push_back(f.normal_form(w).dense());
  Rational det = determinant(m);
  require(det == 1 || det == -1, Errc::invariant, "left-normed words are not a Z-basis");
  auto inv = inverse(m);
  b.to_hall = to_integer(m);
  b.from_hall = to_integer(*inv);
  return b;
}

std::vector<Rational> to_left_normed(const LeftNormedBasis& b, const LieElement& v) {
  return row_times(v.dense(), to_rational(b.from_hall));
}

RewriteReport verify_rewrite_identities(const FreeNilpotentAlgebra& f) {
  RewriteReport rep;
  const auto& gens = f.generators();
  for (const auto& P : gens)
    for (const auto& Q : gens)
      for (const auto& R : gens)
        for (const auto& S : gens) {
          const std::string p = P.name, q = Q.name, r = R.name, s = S.name;
          std::string lhs = p + q + r + s;
          std::string rhs = p + s + q + r + " + " + s + q + p + r + " + " + r + s + q + p + " + " + s + r + p + q;
          ++rep.pqrs_checked;
          if (!(f.normal_form(lhs) == f.normal_form(rhs))) rep.failures.push_back({"PQRS", lhs, rhs});
        }
  if (f.generator_count() == 3 && f.nilpotency_class() >= 4) {
    const std::vector<std::pair<std::string, std::string>> rel = {
        {"(ZX)(YX)", "YXXZ - YXZX"},
        {"(ZY)(YX)", "XYZY - XYYZ"},
        {"(ZY)(ZX)", "XZZY - XZYZ"},
    };
    for (const auto& [lhs, rhs] : rel) {
      ++rep.base_change_checked;
      if (!(f.normal_form(lhs) == f.normal_form(rhs))) rep.failures.push_back({"base-change", lhs, rhs});
    }
  }
  return rep;
}

StructureCheck check_structure(const LieAlgebra& alg, bool expect_graded) {
  StructureCheck chk;
  std::size_t d = alg.dimension();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ++chk.pairs;
      Coeffs sum = alg.structure(i, j);
      add_scaled(sum, alg.structure(j, i), Rational(1));
      if (!sum.empty()) chk.failures.push_back("antisymmetry fails at (" + alg.basis(i).name + "," + alg.basis(j).name + ")");
      for (const auto& [k, c] : alg.structure(i, j)) {
        if (!is_integer(c))
          chk.failures.push_back("non-integral constant in [" + alg.basis(i).name + "," + alg.basis(j).name + "]");
        const auto& mi = alg.basis(i).multidegree;
        const auto& mj = alg.basis(j).multidegree;
        const auto& mk = alg.basis(k).multidegree;
        int wk = alg.basis(k).weight, wij = alg.basis(i).weight + alg.basis(j).weight;
        if (wk < wij) chk.failures.push_back("filtration fails at (" + alg.basis(i).name + "," + alg.basis(j).name + ")");
        if (expect_graded) {
          for (std::size_t g = 0; g < mk.size(); ++g)
            if (mk[g] != mi[g] + mj[g]) {
              chk.failures.push_back("grading fails at (" + alg.basis(i).name + "," + alg.basis(j).name + ")");
              break;
            }
        }
      }
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        ++chk.triples;
        Coeffs a, b, c;
        a.emplace(i, 1);
        b.emplace(j, 1);
        c.emplace(k, 1);
        Coeffs sum = alg.bracket(alg.bracket(a, b), c);
        add_scaled(sum, alg.bracket(alg.bracket(b, c), a), Rational(1));
        add_scaled(sum, alg.bracket(alg.bracket(c, a), b), Rational(1));
        if (!sum.empty())
          chk.failures.push_back("Jacobi fails at (" + alg.basis(i).name + "," + alg.basis(j).name + "," +
                                 alg.basis(k).name + ")");
      }
  return chk;
}

std::vector<std::size_t> graded_dimensions(const LieAlgebra& alg) {
  std::vector<std::size_t> dims(alg.nilpotency_class(), 0);
  for (const auto& b : alg.basis()) ++dims.at(b.weight - 1);
  return dims;
}

}  // namespace nilzeta::free_lie
