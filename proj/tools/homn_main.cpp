// homn CLI: sequence tables, identity verification sweeps, binomial
// transforms, generating-function expansion, and matrix demos, all through
// the C API in homn/homn.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <homn/homn.h>

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct SeqDeleter {
  void operator()(homn_seq* s) const { homn_seq_free(s); }
};
using SeqPtr = std::unique_ptr<homn_seq, SeqDeleter>;

struct VerifyDeleter {
  void operator()(homn_verify* v) const { homn_verify_free(v); }
};
using VerifyPtr = std::unique_ptr<homn_verify, VerifyDeleter>;

[[noreturn]] void die(homn_status status) {
  std::cerr << "homn: " << homn_last_error() << "\n";
  const bool usage = (status == HOMN_EINVAL || status == HOMN_EDOMAIN);
  std::exit(usage ? kExitUsage : kExitVerifyFailure);
}

std::vector<std::string> seq_terms(const homn_seq* s) {
  std::vector<std::string> out;
  out.reserve(homn_seq_len(s));
  for (size_t i = 0; i < homn_seq_len(s); ++i) out.emplace_back(homn_seq_term(s, i));
  return out;
}

void print_sequence(const std::vector<std::string>& terms,
                    const std::string& format, uint32_t k,
                    const std::string& name, bool single_line_table) {
  if (format == "table") {
    if (single_line_table) {
      for (size_t i = 0; i < terms.size(); ++i) {
        std::cout << (i == 0 ? "" : " ") << terms[i];
      }
      std::cout << "\n";
    } else {
      for (size_t i = 0; i < terms.size(); ++i) {
        std::cout << i << "\t" << terms[i] << "\n";
      }
    }
  } else if (format == "csv") {
    for (size_t i = 0; i < terms.size(); ++i) {
      std::cout << i << "," << terms[i] << "\n";
    }
  } else if (format == "bfile") {
    for (size_t i = 0; i < terms.size(); ++i) {
      std::cout << i << " " << terms[i] << "\n";
    }
  } else {  // json
    nlohmann::json j;
    j["k"] = k;
    j["name"] = name;
    j["terms"] = terms;
    std::cout << j.dump() << "\n";
  }
}

int cmd_gen(uint32_t k, size_t count, const std::string& format) {
  homn_seq* raw = nullptr;
  if (homn_status st = homn_hom_seq(k, count, &raw); st != HOMN_OK) die(st);
  SeqPtr seq(raw);
  print_sequence(seq_terms(seq.get()), format, k, "higher_order_mersenne",
                 false);
  return kExitOk;
}

int cmd_transform(uint32_t k, size_t count, const std::string& format) {
  homn_seq* raw = nullptr;
  // cross-check on: every printed term has passed all three routes
  if (homn_status st = homn_bt_seq(k, count, 1, &raw); st != HOMN_OK) die(st);
  SeqPtr seq(raw);
  print_sequence(seq_terms(seq.get()), format, k, "binomial_transform", true);
  return kExitOk;
}

int cmd_genfun(uint32_t k, size_t count, const std::string& which) {
  const homn_family family =
      which == "base" ? HOMN_FAMILY_BASE : HOMN_FAMILY_TRANSFORM;
  homn_seq* raw = nullptr;
  if (homn_status st = homn_ogf_numerator(k, family, &raw); st != HOMN_OK) die(st);
  SeqPtr num(raw);
  if (homn_status st = homn_ogf_denominator(k, family, &raw); st != HOMN_OK) die(st);
  SeqPtr den(raw);
  if (homn_status st = homn_ogf_expand(k, family, count, &raw); st != HOMN_OK) die(st);
  SeqPtr coeffs(raw);

  const auto bracketed = [](const std::vector<std::string>& xs) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) out += ",";
      out += xs[i];
    }
    return out + "]";
  };
  std::cout << "numerator " << bracketed(seq_terms(num.get())) << "\n";
  std::cout << "denominator " << bracketed(seq_terms(den.get())) << "\n";
  std::cout << "coefficients";
  for (const auto& c : seq_terms(coeffs.get())) std::cout << " " << c;
  std::cout << "\n";
  return kExitOk;
}

int cmd_matrix(uint32_t k, uint64_t n) {
  homn_seq* raw = nullptr;
  if (homn_status st = homn_matrix_power(k, n, &raw); st != HOMN_OK) die(st);
  SeqPtr seq(raw);
  const auto terms = seq_terms(seq.get());
  std::cout << "U^" << n << " for k=" << k << "\n";
  std::cout << "a11 = " << terms[0] << "  (-2^k M_(n-1))\n";
  std::cout << "a12 = " << terms[1] << "  (M_n)\n";
  std::cout << "a21 = " << terms[2] << "  (-2^k M_n)\n";
  std::cout << "a22 = " << terms[3] << "  (M_(n+1))\n";
  std::cout << "det = " << terms[4] << "  (2^(k n))\n";
  std::cout << "trace = " << terms[5] << "  (1 + 2^(k n))\n";
  return kExitOk;
}

int cmd_tridiag(uint32_t k, uint64_t n) {
  homn_seq* raw = nullptr;
  if (homn_status st = homn_tridiag_chain(k, n, &raw); st != HOMN_OK) die(st);
  SeqPtr seq(raw);
  const auto dets = seq_terms(seq.get());
  for (size_t i = 0; i < dets.size(); ++i) {
    std::cout << (i == 0 ? "" : " ") << dets[i];
  }
  std::cout << "\n";
  char* trace = nullptr;
  if (homn_status st = homn_tridiag_trace(k, n, &trace); st != HOMN_OK) die(st);
  std::cout << "trace " << trace << "\n";
  homn_string_free(trace);
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& identities, uint32_t k_max,
               uint64_t n_max, bool fail_fast) {
  VerifyPtr verify(homn_verify_new());
  if (!verify) die(HOMN_EINTERNAL);
  if (homn_status st = homn_verify_set_k_max(verify.get(), k_max); st != HOMN_OK)
    die(st);
  if (homn_status st = homn_verify_set_n_max(verify.get(), n_max); st != HOMN_OK)
    die(st);
  if (homn_status st = homn_verify_set_fail_fast(verify.get(), fail_fast ? 1 : 0);
      st != HOMN_OK)
    die(st);
  for (const auto& name : identities) {
    if (homn_status st = homn_verify_add_identity(verify.get(), name.c_str());
        st != HOMN_OK)
      die(st);
  }
  if (homn_status st = homn_verify_run(verify.get()); st != HOMN_OK) die(st);

  const size_t count = homn_verify_summary_count(verify.get());
  std::cout << "verify: k_max=" << k_max << " n_max=" << n_max
            << " identities=" << count << "\n";
  for (size_t i = 0; i < count; ++i) {
    const char* note = homn_verify_summary_note(verify.get(), i);
    if (note != nullptr && note[0] != '\0') {
      std::cout << homn_verify_summary_name(verify.get(), i)
                << " convention: " << note << "\n";
    }
  }
  for (size_t i = 0; i < count; ++i) {
    std::cout << homn_verify_summary_name(verify.get(), i) << ": passed "
              << homn_verify_summary_passed(verify.get(), i) << ", failed "
              << homn_verify_summary_failed(verify.get(), i) << "\n";
  }
  const size_t failures = homn_verify_counterexample_count(verify.get());
  for (size_t i = 0; i < failures; ++i) {
    std::cout << "counterexample: " << homn_verify_counterexample(verify.get(), i)
              << "\n";
  }
  if (homn_verify_all_hold(verify.get()) == 1) {
    std::cout << "result: all identities hold\n";
    return kExitOk;
  }
  std::cout << "result: " << failures << " counterexample(s) found\n";
  return kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact higher-order Mersenne number toolkit"};
  app.require_subcommand(1);

  uint32_t k = 1;
  uint64_t n = 1;
  size_t count = 1;
  std::string format = "table";
  std::string which = "base";
  std::vector<std::string> identities;
  uint32_t k_max = 8;
  uint64_t n_max = 64;
  bool fail_fast = false;

  // Practical envelope for the command line (values grow like 2^(kn);
  // 2^4096-scale integers stay cheap). The library takes any size.
  constexpr uint32_t kOrderCap = 16;
  constexpr uint64_t kIndexCap = 256;

  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv", "bfile"}))
        ->capture_default_str();
  };
  const auto add_k = [&k, kOrderCap](CLI::App* cmd) {
    cmd->add_option("--k", k, "order k")
        ->required()
        ->check(CLI::Range(uint32_t{1}, kOrderCap));
  };

  auto* gen = app.add_subcommand("gen", "print M_0^(k)..M_(count-1)^(k)");
  add_k(gen);
  gen->add_option("--count", count, "number of terms")
      ->required()
      ->check(CLI::Range(uint64_t{1}, kIndexCap));
  add_format(gen);

  auto* verify = app.add_subcommand("verify", "sweep the identity checks");
  verify->add_option("--identity", identities,
                     "identity name (repeatable; default all)");
  verify->add_option("--k-max", k_max, "largest order")
      ->check(CLI::Range(uint32_t{1}, kOrderCap))
      ->capture_default_str();
  verify->add_option("--n-max", n_max, "largest index")
      ->check(CLI::Range(uint64_t{1}, kIndexCap))
      ->capture_default_str();
  verify->add_flag("--fail-fast", fail_fast, "stop at the first failure");

  auto* transform = app.add_subcommand(
      "transform", "print the binomial transform b_(k,0)..b_(k,count-1)");
  add_k(transform);
  transform->add_option("--count", count, "number of terms")
      ->required()
      ->check(CLI::Range(uint64_t{1}, kIndexCap));
  add_format(transform);

  auto* genfun = app.add_subcommand(
      "genfun", "print an ordinary generating function and its expansion");
  add_k(genfun);
  genfun->add_option("--count", count, "number of coefficients")
      ->required()
      ->check(CLI::Range(uint64_t{1}, kIndexCap));
  genfun->add_option("--which", which, "base sequence or binomial transform")
      ->check(CLI::IsMember({"base", "transform"}))
      ->capture_default_str();

  auto* matrix = app.add_subcommand("matrix", "print U^n, its det and trace");
  add_k(matrix);
  matrix->add_option("--n", n, "power n >= 1")
      ->required()
      ->check(CLI::Range(uint64_t{1}, kIndexCap));

  auto* tridiag =
      app.add_subcommand("tridiag", "print the continuant chain det(V_1..V_n)");
  add_k(tridiag);
  tridiag->add_option("--n", n, "dimension n >= 1")
      ->required()
      ->check(CLI::Range(uint64_t{1}, kIndexCap));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen->parsed()) return cmd_gen(k, count, format);
  if (verify->parsed()) return cmd_verify(identities, k_max, n_max, fail_fast);
  if (transform->parsed()) return cmd_transform(k, count, format);
  if (genfun->parsed()) return cmd_genfun(k, count, which);
  if (matrix->parsed()) return cmd_matrix(k, n);
  if (tridiag->parsed()) return cmd_tridiag(k, n);
  return kExitUsage;
}
