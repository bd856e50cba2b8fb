#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "genfun.hpp"
#include "matrix_forms.hpp"
#include "sums_transforms.hpp"

namespace homn {

namespace {

constexpr std::uint64_t kSecondaryCap = 16;

struct Sweep {
  const VerifyConfig& cfg;
  IdentitySummary& summary;
  bool stop = false;

  void add(const IdentityReport& rep) {
    if (rep.holds) {
      ++summary.passed;
    } else {
      ++summary.failed;
      summary.counterexamples.push_back(rep);
      if (cfg.fail_fast) stop = true;
    }
  }
};

void sweep_index_shift(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 0; n <= s.cfg.n_max && !s.stop; ++n) {
      const Index alpha_max = std::min<Index>(k - 1, kSecondaryCap);
      for (Index a = 0; a <= alpha_max && !s.stop; ++a) {
        s.add(check_index_shift(Order(k), n, a));
      }
    }
  }
}

void sweep_index_addition(Sweep& s) {
  for (Index n = 0; n <= s.cfg.n_max && !s.stop; ++n) {
    for (Index m = 0; m <= kSecondaryCap && !s.stop; ++m) {
      s.add(check_index_addition(n, m));
    }
  }
}

void sweep_multiples(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (const auto& rep : check_multiples(Order(k))) {
      s.add(rep);
      if (s.stop) break;
    }
  }
}

void sweep_catalan(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 0; n <= s.cfg.n_max && !s.stop; ++n) {
      const Index r_max = std::min(n, kSecondaryCap);
      for (Index r = 0; r <= r_max && !s.stop; ++r) {
        s.add(catalan(Order(k), n, r));
      }
    }
  }
}

void sweep_cassini(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 1; n <= s.cfg.n_max && !s.stop; ++n) {
      s.add(cassini(Order(k), n));
    }
  }
}

void sweep_docagne(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index m = 1; m <= s.cfg.n_max && !s.stop; ++m) {
      const Index n_hi = std::min(m - 1, kSecondaryCap);
      for (Index n = 0; n <= n_hi && !s.stop; ++n) {
        s.add(docagne(Order(k), m, n));
      }
    }
  }
}

void sweep_vajda(Sweep& s) {
  const Index hi = std::min(s.cfg.n_max, kSecondaryCap);
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 0; n <= hi && !s.stop; ++n) {
      for (Index m = 0; m <= hi && !s.stop; ++m) {
        for (Index r = 0; r <= hi && !s.stop; ++r) {
          s.add(vajda(Order(k), n, m, r));
        }
      }
    }
  }
}

void sweep_honsberger(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index p = 1; p <= kSecondaryCap && !s.stop; ++p) {
      for (Index n = 0; n <= s.cfg.n_max && !s.stop; ++n) {
        s.add(honsberger(Order(k), p, n));
      }
    }
  }
}

void sweep_jacobsthal(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 0; n <= s.cfg.n_max && !s.stop; ++n) {
      for (const auto& rep : jacobsthal_relation(Order(k), n)) {
        s.add(rep);
        if (s.stop) break;
      }
    }
  }
}

void sweep_square_sum_product(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 0; n <= s.cfg.n_max && !s.stop; ++n) {
      for (const auto& rep : square_sum_product_relations(Order(k), n)) {
        s.add(rep);
        if (s.stop) break;
      }
    }
  }
}

void sweep_limiting_ratio(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    Rational prev;
    for (Index n = 1; n <= s.cfg.n_max && !s.stop; ++n) {
      const Rational gap = limiting_ratio_gap(Order(k), n);
      const Rational closed(Integer::pow2(k) - 1,
                            Integer::pow2(checked_kn(Order(k), n)) - 1);
      IdentityReport rep = make_identity_report(
          "limiting_ratio", {{"k", k}, {"n", n}}, gap, closed);
      // Besides the closed form, the gap must stay positive and strictly
      // decrease along n.
      if (rep.holds && gap.sign() <= 0) rep.holds = false;
      if (rep.holds && n > 1 && gap >= prev) rep.holds = false;
      s.add(rep);
      prev = gap;
    }
  }
}

void sweep_partial_sum(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 1; n <= s.cfg.n_max && !s.stop; ++n) {
      s.add(partial_sum(Order(k), n));
    }
  }
}

void sweep_partial_sum_even(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 1; n <= s.cfg.n_max && !s.stop; ++n) {
      s.add(partial_sum_even(Order(k), n));
    }
  }
}

void sweep_partial_sum_odd(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 0; n <= s.cfg.n_max && !s.stop; ++n) {
      s.add(partial_sum_odd(Order(k), n));
    }
  }
}

void sweep_binomial_sum(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (std::uint64_t v = 1; v <= s.cfg.n_max && !s.stop; ++v) {
      const IdentityReport rep = binomial_sum(Order(k), v);
      s.add(rep);
      if (s.stop) break;
      // The same sum is the binomial transform term b_{k,v-1}.
      s.add(make_identity_report("binomial_sum", {{"k", k}, {"s", v}}, rep.lhs,
                        Rational(bt_definition(Order(k), v - 1))));
    }
  }
}

void sweep_alternating_binomial_sum(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (std::uint64_t v = 2; v <= s.cfg.n_max && !s.stop; ++v) {
      s.add(alternating_binomial_sum(Order(k), v));
    }
  }
}

void sweep_bt_agreement(Sweep& s) {
  const Index hi = std::min<std::uint64_t>(s.cfg.n_max, 48);
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    const auto rec = bt_recurrence(Order(k), hi + 1);
    for (Index n = 0; n <= hi && !s.stop; ++n) {
      s.add(make_identity_report("bt_agreement", {{"k", k}, {"n", n}},
                        Rational(bt_definition(Order(k), n)),
                        Rational(rec.terms[n])));
      if (s.stop) break;
      s.add(make_identity_report("bt_agreement", {{"k", k}, {"n", n}},
                        Rational(bt_closed(Order(k), n)),
                        Rational(rec.terms[n])));
    }
  }
}

void sweep_bt_shift(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 0; n <= s.cfg.n_max && !s.stop; ++n) {
      s.add(bt_shift_identity(Order(k), n));
    }
  }
}

void sweep_hom_ogf(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    const std::size_t count = s.cfg.n_max + 1;
    const auto coeffs = expand_rational(hom_ogf(Order(k)), count);
    const auto seq = hom_stream(Order(k), count);
    for (std::size_t n = 0; n < count && !s.stop; ++n) {
      s.add(make_identity_report("hom_ogf", {{"k", k}, {"n", n}}, coeffs[n],
                        Rational(seq[n])));
    }
  }
}

void sweep_bt_ogf(Sweep& s) {
  const std::size_t count = std::min<std::uint64_t>(s.cfg.n_max, 48) + 1;
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    const auto coeffs = expand_rational(bt_ogf(Order(k)), count);
    const auto rec = bt_recurrence(Order(k), count);
    for (std::size_t n = 0; n < count && !s.stop; ++n) {
      s.add(make_identity_report("bt_ogf", {{"k", k}, {"n", n}}, coeffs[n],
                        Rational(rec.terms[n])));
    }
  }
}

void sweep_hom_egf(Sweep& s) {
  const std::size_t count = std::min<std::uint64_t>(s.cfg.n_max, 48) + 1;
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    s.add(egf_check(Order(k), count));
  }
}

void sweep_bt_egf(Sweep& s) {
  const std::size_t count = std::min<std::uint64_t>(s.cfg.n_max, 48) + 1;
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    s.add(bt_egf_check(Order(k), count));
  }
}

void sweep_u_power(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 1; n <= s.cfg.n_max && !s.stop; ++n) {
      s.add(u_power_checks(Order(k), n));
    }
  }
}

void sweep_tridiag(Sweep& s) {
  for (std::uint32_t k = 1; k <= s.cfg.k_max && !s.stop; ++k) {
    for (Index n = 1; n <= s.cfg.n_max && !s.stop; ++n) {
      s.add(tridiag_spectral_checks({Order(k), n}));
    }
  }
}

struct NamedSweep {
  const char* name;
  void (*run)(Sweep&);
  const char* note;
};

const NamedSweep kSweeps[] = {
    {"index_shift", sweep_index_shift, ""},
    {"index_addition", sweep_index_addition, ""},
    {"multiples", sweep_multiples, ""},
    {"catalan", sweep_catalan, ""},
    {"cassini", sweep_cassini, ""},
    {"docagne", sweep_docagne, ""},
    {"vajda", sweep_vajda, nullptr},  // note filled from vajda_convention()
    {"honsberger", sweep_honsberger, ""},
    {"jacobsthal", sweep_jacobsthal, ""},
    {"square_sum_product", sweep_square_sum_product, ""},
    {"limiting_ratio", sweep_limiting_ratio, ""},
    {"partial_sum", sweep_partial_sum, ""},
    {"partial_sum_even", sweep_partial_sum_even, ""},
    {"partial_sum_odd", sweep_partial_sum_odd, ""},
    {"binomial_sum", sweep_binomial_sum, ""},
    {"alternating_binomial_sum", sweep_alternating_binomial_sum, ""},
    {"bt_agreement", sweep_bt_agreement, ""},
    {"bt_shift", sweep_bt_shift, ""},
    {"hom_ogf", sweep_hom_ogf, ""},
    {"bt_ogf", sweep_bt_ogf, ""},
    {"hom_egf", sweep_hom_egf, ""},
    {"bt_egf", sweep_bt_egf, ""},
    {"u_power", sweep_u_power, ""},
    {"tridiag", sweep_tridiag, ""},
};

}  // namespace

bool VerifyResult::all_hold() const {
  return std::all_of(summaries.begin(), summaries.end(),
                     [](const IdentitySummary& s) { return s.failed == 0; });
}

std::uint64_t VerifyResult::total_checks() const {
  std::uint64_t total = 0;
  for (const auto& s : summaries) total += s.passed + s.failed;
  return total;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& sweep : kSweeps) out.emplace_back(sweep.name);
    return out;
  }();
  return names;
}

VerifyResult run_verify(const VerifyConfig& config) {
  if (config.k_max < 1 || config.n_max < 1) {
    throw std::invalid_argument("verify: k_max and n_max must be >= 1");
  }
  std::vector<const NamedSweep*> selected;
  if (config.identities.empty()) {
    for (const auto& sweep : kSweeps) selected.push_back(&sweep);
  } else {
    for (const auto& wanted : config.identities) {
      const auto* found =
          std::find_if(std::begin(kSweeps), std::end(kSweeps),
                       [&](const NamedSweep& s) { return wanted == s.name; });
      if (found == std::end(kSweeps)) {
        throw std::invalid_argument("verify: unknown identity: " + wanted);
      }
      selected.push_back(found);
    }
  }

  VerifyResult result;
  bool stop = false;
  for (const NamedSweep* named : selected) {
    IdentitySummary summary;
    summary.name = named->name;
    summary.note =
        named->note == nullptr ? std::string(vajda_convention()) : named->note;
    if (!stop) {
      Sweep sweep{config, summary};
      named->run(sweep);
      stop = sweep.stop;
    }
    result.summaries.push_back(std::move(summary));
  }
  return result;
}

}  // namespace homn
