#include "nilzeta/nilzeta.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "nilzeta/commands.hpp"
#include "nilzeta/error.hpp"
#include "nilzeta/free_lie.hpp"
#include "nilzeta/json_export.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/zeta.hpp"

struct nilzeta_report {
  nilzeta::cli::Report report;
  bool json = false;
  std::string text, json_text;
};

struct nilzeta_algebra {
  std::shared_ptr<const nilzeta::free_lie::FreeNilpotentAlgebra> free;
  std::optional<nilzeta::lattice::QuotientLattice> lambda;
  const nilzeta::LieAlgebra& alg() const { return lambda ? *lambda->algebra() : *free->algebra(); }
};

struct nilzeta_ratfn {
  nilzeta::zeta::RationalFn f;
};

namespace {

thread_local std::string last_error;

nilzeta_status code_of(nilzeta::Errc e) {
  switch (e) {
    case nilzeta::Errc::input:
      return NILZETA_ERR_INPUT;
    case nilzeta::Errc::singular:
      return NILZETA_ERR_SINGULAR;
    case nilzeta::Errc::precision:
      return NILZETA_ERR_PRECISION;
    case nilzeta::Errc::unsupported:
      return NILZETA_ERR_UNSUPPORTED;
    case nilzeta::Errc::invariant:
      return NILZETA_ERR_INVARIANT;
  }
  return NILZETA_ERR_INTERNAL;
}

template <class F>
nilzeta_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const nilzeta::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return NILZETA_ERR_INTERNAL;
}

nilzeta_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return NILZETA_ERR_INPUT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* nilzeta_version(void) { return "0.1.0"; }

const char* nilzeta_last_error(void) { return last_error.c_str(); }

void nilzeta_string_free(char* s) { std::free(s); }

void nilzeta_config_init(nilzeta_config* cfg) {
  if (!cfg) return;
  nilzeta::cli::RunConfig d;
  cfg->n = d.n;
  cfg->c = d.c;
  cfg->prime = d.prime;
  cfg->level = d.level;
  cfg->degree = d.degree;
  cfg->ff_order = d.ff_order;
  cfg->seed = d.seed;
  cfg->json = 0;
  cfg->workers = 0;
  cfg->input = nullptr;
  cfg->informational = 0;
}

size_t nilzeta_subcommand_count(void) { return nilzeta::cli::subcommands().size(); }

const char* nilzeta_subcommand_name(size_t i) {
  const auto& s = nilzeta::cli::subcommands();
  return i < s.size() ? s[i].c_str() : nullptr;
}

nilzeta_status nilzeta_run(const char* subcommand, const nilzeta_config* cfg, nilzeta_report** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!subcommand) return null_argument("subcommand");
  return guarded([&] {
    nilzeta_config c;
    nilzeta_config_init(&c);
    if (cfg) c = *cfg;
    nilzeta::cli::RunConfig rc;
    rc.n = c.n;
    rc.c = c.c;
    rc.prime = c.prime;
    rc.level = c.level;
    rc.degree = c.degree;
    rc.ff_order = c.ff_order;
    rc.seed = c.seed;
    rc.json = c.json != 0;
    rc.workers = c.workers;
    rc.input = c.input ? c.input : "zeta";
    rc.informational = c.informational != 0;
    auto r = std::make_unique<nilzeta_report>();
    r->report = nilzeta::cli::run(subcommand, rc);
    r->json = rc.json;
    r->text = r->report.text();
    r->json_text = r->report.json();
    bool passed = r->report.passed();
    *out = r.release();
    return passed ? NILZETA_OK : NILZETA_VERIFICATION_FAILED;
  });
}

int nilzeta_report_passed(const nilzeta_report* r) { return r && r->report.passed() ? 1 : 0; }

const char* nilzeta_report_output(const nilzeta_report* r) {
  if (!r) return "";
  return r->json ? r->json_text.c_str() : r->text.c_str();
}

const char* nilzeta_report_text(const nilzeta_report* r) { return r ? r->text.c_str() : ""; }

const char* nilzeta_report_json(const nilzeta_report* r) { return r ? r->json_text.c_str() : ""; }

void nilzeta_report_free(nilzeta_report* r) { delete r; }

nilzeta_status nilzeta_algebra_free_nilpotent(int n, int c, nilzeta_algebra** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    nilzeta::require(n >= 1 && n <= 6 && c >= 1 && c <= 6, nilzeta::Errc::input, "n and c must lie in 1..6");
    auto a = std::make_unique<nilzeta_algebra>();
    a->free = std::make_shared<nilzeta::free_lie::FreeNilpotentAlgebra>(n, c);
    *out = a.release();
    return NILZETA_OK;
  });
}

nilzeta_status nilzeta_algebra_lambda(nilzeta_algebra** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto a = std::make_unique<nilzeta_algebra>();
    a->lambda.emplace(nilzeta::lattice::build_lambda());
    *out = a.release();
    return NILZETA_OK;
  });
}

size_t nilzeta_algebra_dimension(const nilzeta_algebra* a) { return a ? a->alg().dimension() : 0; }

const char* nilzeta_algebra_basis_name(const nilzeta_algebra* a, size_t i) {
  if (!a || i >= a->alg().dimension()) return nullptr;
  return a->alg().basis(i).name.c_str();
}

nilzeta_status nilzeta_algebra_normal_form(const nilzeta_algebra* a, const char* expr, char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!a) return null_argument("algebra");
  if (!expr) return null_argument("expr");
  return guarded([&] {
    auto v = a->lambda ? a->lambda->element(expr) : a->free->normal_form(expr);
    *out = dup(v.to_string());
    return NILZETA_OK;
  });
}

nilzeta_status nilzeta_algebra_export_json(const nilzeta_algebra* a, char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!a) return null_argument("algebra");
  return guarded([&] {
    auto j = a->lambda ? nilzeta::json::quotient(*a->lambda) : nilzeta::json::algebra(*a->free->algebra());
    *out = dup(j.dump());
    return NILZETA_OK;
  });
}

void nilzeta_algebra_free(nilzeta_algebra* a) { delete a; }

nilzeta_status nilzeta_ratfn_parse(const char* text, nilzeta_ratfn** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!text) return null_argument("text");
  return guarded([&] {
    *out = new nilzeta_ratfn{nilzeta::zeta::parse_rational_function(text)};
    return NILZETA_OK;
  });
}

nilzeta_status nilzeta_ratfn_local_factor(nilzeta_ratfn** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new nilzeta_ratfn{nilzeta::zeta::substitute_to_zeta(nilzeta::zeta::closed_form())};
    return NILZETA_OK;
  });
}

nilzeta_status nilzeta_ratfn_to_string(const nilzeta_ratfn* f, char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!f) return null_argument("function");
  return guarded([&] {
    *out = dup(f->f.to_string());
    return NILZETA_OK;
  });
}

int nilzeta_ratfn_equal(const nilzeta_ratfn* a, const nilzeta_ratfn* b) {
  if (!a || !b) return 0;
  try {
    return a->f == b->f ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

nilzeta_status nilzeta_ratfn_functional_equation(const nilzeta_ratfn* f, int* found, int* a, int64_t* b,
                                                 int64_t* c) {
  if (!f) return null_argument("function");
  if (!found || !a || !b || !c) return null_argument("result");
  return guarded([&] {
    auto fe = nilzeta::zeta::functional_equation_test(f->f);
    *found = fe ? 1 : 0;
    *a = fe ? fe->a : 0;
    *b = fe ? fe->b : 0;
    *c = fe ? fe->c : 0;
    return NILZETA_OK;
  });
}

void nilzeta_ratfn_free(nilzeta_ratfn* f) { delete f; }

}  // extern "C"
