// C binding over the C++ core. Exceptions are caught at the boundary and
// mapped to status codes; the message lands in a thread-local slot served
// by homn_last_error().

#include "homn/homn.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "core_sequences.hpp"
#include "genfun.hpp"
#include "identities.hpp"
#include "matrix_forms.hpp"
#include "sums_transforms.hpp"
#include "verify.hpp"

struct homn_seq {
  std::vector<std::string> terms;
};

struct homn_verify {
  homn::VerifyConfig config;
  homn::VerifyResult result;
  std::vector<std::string> counterexamples;
  bool ran = false;
};

namespace {

thread_local std::string t_last_error;

homn_status fail(homn_status status, const char* message) {
  t_last_error = message;
  return status;
}

template <typename Fn>
homn_status guarded(Fn&& fn) {
  try {
    fn();
    return HOMN_OK;
  } catch (const homn::internal_error& e) {
    return fail(HOMN_EINEXACT, e.what());
  } catch (const std::domain_error& e) {
    return fail(HOMN_EDOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HOMN_EINVAL, e.what());
  } catch (const std::overflow_error& e) {
    return fail(HOMN_EDOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HOMN_EINTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HOMN_EINTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* mem = static_cast<char*>(std::malloc(s.size() + 1));
  if (mem == nullptr) throw std::bad_alloc();
  std::memcpy(mem, s.c_str(), s.size() + 1);
  return mem;
}

homn_seq* seq_from(std::vector<std::string> terms) {
  auto* seq = new homn_seq;
  seq->terms = std::move(terms);
  return seq;
}

std::vector<std::string> stringify(const std::vector<homn::Natural>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

std::vector<std::string> stringify(const std::vector<homn::Integer>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

bool bad_order_or_out(uint32_t k, const void* out) {
  return k == 0 || out == nullptr;
}

homn::RationalFunction pick_ogf(uint32_t k, homn_family which) {
  if (which == HOMN_FAMILY_BASE) return homn::hom_ogf(homn::Order(k));
  if (which == HOMN_FAMILY_TRANSFORM) return homn::bt_ogf(homn::Order(k));
  throw std::invalid_argument("unknown family");
}

}  // namespace

extern "C" {

const char* homn_version(void) { return "1.0.0"; }

const char* homn_last_error(void) { return t_last_error.c_str(); }

void homn_string_free(char* s) { std::free(s); }

homn_status homn_mersenne(uint64_t n, char** out) {
  if (out == nullptr) return fail(HOMN_EINVAL, "null output pointer");
  return guarded([&] { *out = copy_out(homn::mersenne(n).to_string()); });
}

homn_status homn_mersenne_lucas(uint64_t n, char** out) {
  if (out == nullptr) return fail(HOMN_EINVAL, "null output pointer");
  return guarded([&] { *out = copy_out(homn::mersenne_lucas(n).to_string()); });
}

homn_status homn_hom(uint32_t k, uint64_t n, homn_method method, char** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded([&] {
    const homn::Order order(k);
    homn::Natural value;
    switch (method) {
      case HOMN_METHOD_RECURRENCE:
        value = homn::hom_recurrence(order, n);
        break;
      case HOMN_METHOD_CLOSED:
        value = homn::hom_closed(order, n);
        break;
      case HOMN_METHOD_QUOTIENT:
        value = homn::hom_quotient(order, n);
        break;
      case HOMN_METHOD_MATRIX:
        value = homn::hom_via_matrix(order, n);
        break;
      default:
        throw std::invalid_argument("unknown method");
    }
    *out = copy_out(value.to_string());
  });
}

homn_status homn_hoj(uint32_t k, uint64_t n, char** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded([&] { *out = copy_out(homn::hoj(homn::Order(k), n).to_string()); });
}

homn_status homn_hojl(uint32_t k, uint64_t n, char** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded(
      [&] { *out = copy_out(homn::hojl(homn::Order(k), n).to_string()); });
}

homn_status homn_cofactor(uint32_t k, uint64_t n, char** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded(
      [&] { *out = copy_out(homn::cofactor(homn::Order(k), n).to_string()); });
}

homn_status homn_limiting_ratio_gap(uint32_t k, uint64_t n, char** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded([&] {
    *out = copy_out(homn::limiting_ratio_gap(homn::Order(k), n).to_string());
  });
}

homn_status homn_hom_seq(uint32_t k, size_t count, homn_seq** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded([&] {
    *out = seq_from(stringify(homn::hom_stream(homn::Order(k), count)));
  });
}

homn_status homn_bt_seq(uint32_t k, size_t count, int cross_check,
                        homn_seq** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded([&] {
    const homn::Order order(k);
    const auto seq = homn::bt_recurrence(order, count);
    if (cross_check != 0) {
      for (size_t n = 0; n < count; ++n) {
        const homn::Natural by_def = homn::bt_definition(order, n);
        const homn::Natural by_closed = homn::bt_closed(order, n);
        if (by_def != seq.terms[n] || by_closed != seq.terms[n]) {
          throw homn::internal_error(
              "binomial transform routes disagree at k=" + std::to_string(k) +
              ", n=" + std::to_string(n));
        }
      }
    }
    *out = seq_from(stringify(seq.terms));
  });
}

size_t homn_seq_len(const homn_seq* s) {
  return s == nullptr ? 0 : s->terms.size();
}

const char* homn_seq_term(const homn_seq* s, size_t i) {
  if (s == nullptr || i >= s->terms.size()) return nullptr;
  return s->terms[i].c_str();
}

void homn_seq_free(homn_seq* s) { delete s; }

homn_status homn_ogf_numerator(uint32_t k, homn_family which, homn_seq** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded(
      [&] { *out = seq_from(stringify(pick_ogf(k, which).numerator)); });
}

homn_status homn_ogf_denominator(uint32_t k, homn_family which,
                                 homn_seq** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded(
      [&] { *out = seq_from(stringify(pick_ogf(k, which).denominator)); });
}

homn_status homn_ogf_expand(uint32_t k, homn_family which, size_t count,
                            homn_seq** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded([&] {
    const auto coeffs = homn::expand_rational(pick_ogf(k, which), count);
    std::vector<std::string> terms;
    terms.reserve(coeffs.size());
    for (const auto& c : coeffs) terms.push_back(c.to_string());
    *out = seq_from(std::move(terms));
  });
}

homn_status homn_matrix_power(uint32_t k, uint64_t n, homn_seq** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded([&] {
    if (n == 0) throw std::domain_error("matrix power display: requires n >= 1");
    const homn::Matrix2 p = homn::mat_power(homn::mat_u(homn::Order(k)), n);
    *out = seq_from({p.a11.to_string(), p.a12.to_string(), p.a21.to_string(),
                     p.a22.to_string(), p.det().to_string(),
                     p.trace().to_string()});
  });
}

homn_status homn_tridiag_chain(uint32_t k, uint64_t n, homn_seq** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded([&] {
    *out = seq_from(
        stringify(homn::tridiag_det_chain({homn::Order(k), n})));
  });
}

homn_status homn_tridiag_trace(uint32_t k, uint64_t n, char** out) {
  if (bad_order_or_out(k, out)) {
    return fail(HOMN_EINVAL, "null output pointer or zero order");
  }
  return guarded([&] {
    *out = copy_out(homn::tridiag_trace({homn::Order(k), n}).to_string());
  });
}

size_t homn_identity_count(void) { return homn::identity_names().size(); }

const char* homn_identity_name(size_t i) {
  const auto& names = homn::identity_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

homn_verify* homn_verify_new(void) { return new (std::nothrow) homn_verify; }

void homn_verify_free(homn_verify* v) { delete v; }

homn_status homn_verify_set_k_max(homn_verify* v, uint32_t k_max) {
  if (v == nullptr || k_max == 0) return fail(HOMN_EINVAL, "bad k_max");
  v->config.k_max = k_max;
  return HOMN_OK;
}

homn_status homn_verify_set_n_max(homn_verify* v, uint64_t n_max) {
  if (v == nullptr || n_max == 0) return fail(HOMN_EINVAL, "bad n_max");
  v->config.n_max = n_max;
  return HOMN_OK;
}

homn_status homn_verify_set_fail_fast(homn_verify* v, int enable) {
  if (v == nullptr) return fail(HOMN_EINVAL, "null verify handle");
  v->config.fail_fast = (enable != 0);
  return HOMN_OK;
}

homn_status homn_verify_add_identity(homn_verify* v, const char* name) {
  if (v == nullptr || name == nullptr) {
    return fail(HOMN_EINVAL, "null verify handle or name");
  }
  const auto& names = homn::identity_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    t_last_error = "unknown identity: " + std::string(name);
    return HOMN_EINVAL;
  }
  v->config.identities.emplace_back(name);
  return HOMN_OK;
}

homn_status homn_verify_run(homn_verify* v) {
  if (v == nullptr) return fail(HOMN_EINVAL, "null verify handle");
  return guarded([&] {
    v->result = homn::run_verify(v->config);
    v->counterexamples.clear();
    for (const auto& summary : v->result.summaries) {
      for (const auto& rep : summary.counterexamples) {
        v->counterexamples.push_back(homn::to_string(rep));
      }
    }
    v->ran = true;
  });
}

size_t homn_verify_summary_count(const homn_verify* v) {
  return (v == nullptr || !v->ran) ? 0 : v->result.summaries.size();
}

const char* homn_verify_summary_name(const homn_verify* v, size_t i) {
  if (v == nullptr || !v->ran || i >= v->result.summaries.size()) return nullptr;
  return v->result.summaries[i].name.c_str();
}

uint64_t homn_verify_summary_passed(const homn_verify* v, size_t i) {
  if (v == nullptr || !v->ran || i >= v->result.summaries.size()) return 0;
  return v->result.summaries[i].passed;
}

uint64_t homn_verify_summary_failed(const homn_verify* v, size_t i) {
  if (v == nullptr || !v->ran || i >= v->result.summaries.size()) return 0;
  return v->result.summaries[i].failed;
}

const char* homn_verify_summary_note(const homn_verify* v, size_t i) {
  if (v == nullptr || !v->ran || i >= v->result.summaries.size()) return nullptr;
  return v->result.summaries[i].note.c_str();
}

size_t homn_verify_counterexample_count(const homn_verify* v) {
  return (v == nullptr || !v->ran) ? 0 : v->counterexamples.size();
}

const char* homn_verify_counterexample(const homn_verify* v, size_t i) {
  if (v == nullptr || !v->ran || i >= v->counterexamples.size()) return nullptr;
  return v->counterexamples[i].c_str();
}

int homn_verify_all_hold(const homn_verify* v) {
  return (v != nullptr && v->ran && v->result.all_hold()) ? 1 : 0;
}

}  // extern "C"
