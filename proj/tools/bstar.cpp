#include <cctype>
#include <exception>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bstar/certificate.hpp"
#include "bstar/errors.hpp"
#include "bstar/json_io.hpp"
#include "bstar/parse.hpp"
#include "bstar/star.hpp"

namespace {

using bstar::AnyCertificate;
using bstar::Certificate;
using bstar::EulerCertificate;
using bstar::FactoredPoly;
using nlohmann::ordered_json;

ordered_json roots_json(const FactoredPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& f : p.factors())
    out.push_back({{"root", f.root.str()}, {"mult", f.mult}});
  return out;
}

ordered_json embedded_certificate(const Certificate& c) {
  return ordered_json::parse(bstar::certificate_to_json(c));
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct VerifyOutcome {
  std::string file;
  std::string kind;
  bstar::VerifyReport report;
  bool integers_requested = false;
  bool integers_applicable = false;
  bstar::IntegerCheckReport integers;
};

VerifyOutcome verify_one(const std::string& file, long integers) {
  VerifyOutcome out;
  out.file = file;
  const AnyCertificate any = bstar::load_certificate_file(file);
  if (const auto* c = std::get_if<Certificate>(&any)) {
    out.kind = "bs-certificate";
    out.report = bstar::verify_certificate(*c);
    if (integers > 0) {
      out.integers_requested = true;
      out.integers_applicable = true;
      out.integers = bstar::integer_check(*c, integers);
    }
  } else {
    const auto& e = std::get<EulerCertificate>(any);
    out.kind = "euler-certificate";
    out.report = bstar::verify_euler(e);
    out.integers_requested = integers > 0;
  }
  return out;
}

int run_verify(const std::vector<std::string>& files, long integers, long jobs,
               bool json) {
  std::vector<VerifyOutcome> results(files.size());
  std::vector<std::exception_ptr> errors(files.size());
  if (jobs <= 1 || files.size() <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) {
      try {
        results[i] = verify_one(files[i], integers);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&]() {
      while (true) {
        std::size_t i;
        {
          const std::lock_guard<std::mutex> lock(next_mutex);
          if (next >= files.size()) return;
          i = next++;
        }
        try {
          results[i] = verify_one(files[i], integers);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const std::size_t n =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), files.size());
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  bool all_pass = true;
  ordered_json jout = ordered_json::array();
  for (const auto& r : results) {
    const bool ints_ok = !r.integers_applicable || r.integers.pass;
    const bool pass = r.report.pass && ints_ok;
    all_pass = all_pass && pass;
    if (json) {
      ordered_json checks = ordered_json::array();
      for (const auto& [label, ok] : r.report.checks)
        checks.push_back({{"label", label}, {"ok", ok}});
      ordered_json item{{"file", r.file},
                        {"kind", r.kind},
                        {"pass", pass},
                        {"checks", checks}};
      if (!r.report.residual.empty()) item["residual"] = r.report.residual;
      if (r.integers_requested) {
        if (r.integers_applicable) {
          item["integers"] = {{"pass", r.integers.pass},
                              {"upto", r.integers.upto}};
          if (r.integers.failed_at)
            item["integers"]["failed_at"] = *r.integers.failed_at;
        } else {
          item["integers"] = "skipped";
        }
      }
      jout.push_back(std::move(item));
    } else {
      std::cout << r.file << ": " << (pass ? "PASS" : "FAIL") << "\n";
      for (const auto& [label, ok] : r.report.checks)
        if (!ok) std::cout << "  check failed: " << label << "\n";
      if (!r.report.residual.empty())
        std::cout << "  residual: " << r.report.residual << "\n";
      if (r.integers_requested) {
        if (!r.integers_applicable)
          std::cout << "  integers: skipped (euler certificate)\n";
        else if (r.integers.pass)
          std::cout << "  integers 1.." << r.integers.upto << ": pass\n";
        else
          std::cout << "  integers: fail at k=" << *r.integers.failed_at << "\n";
      }
    }
  }
  if (json) emit({{"results", jout}});
  return all_pass ? 0 : 3;
}

std::vector<bstar::Rational> parse_weights(const std::string& spec) {
  std::vector<bstar::Rational> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string piece =
        spec.substr(start, comma == std::string::npos ? comma : comma - start);
    if (piece.empty())
      throw bstar::SyntaxError("empty weight in '" + spec + "'", start);
    out.push_back(bstar::parse_rational(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<std::string, int> parse_bp_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw bstar::SyntaxError("expected var:exponent, got '" + spec + "'", 0);
  const std::string var = spec.substr(0, colon);
  const std::string exp = spec.substr(colon + 1);
  if (var.empty() || var == "s" || var == "t" || var.rfind("d_", 0) == 0 ||
      !std::islower(static_cast<unsigned char>(var[0])))
    throw bstar::SyntaxError("invalid variable '" + var + "'", 0);
  if (exp.empty() ||
      exp.find_first_not_of("0123456789") != std::string::npos ||
      exp.size() > 4)
    throw bstar::SyntaxError("invalid exponent '" + exp + "'", 0);
  const int r = std::stoi(exp);
  if (r < 2)
    throw bstar::BadExponent("exponent must be at least 2, got " + exp);
  return {var, r};
}

void print_compose_result(const Certificate& c, const bstar::CofactorPair* ab,
                          bool json, const std::string& out_file) {
  if (!out_file.empty())
    bstar::save_certificate_file(out_file, AnyCertificate(c));
  if (json) {
    ordered_json j{{"h", to_string(c.f())},
                   {"btilde", c.btilde().str("s")},
                   {"roots", roots_json(c.btilde())}};
    if (ab) {
      j["A"] = to_string(ab->A);
      j["B"] = to_string(ab->B);
    }
    j["R"] = c.assemble().str("s");
    j["certificate"] = embedded_certificate(c);
    emit(j);
  } else {
    std::cout << "h = " << to_string(c.f()) << "\n";
    std::cout << "btilde = " << c.btilde().str("s") << "\n";
    if (ab) {
      std::cout << "A(s,t) = " << to_string(ab->A) << "\n";
      std::cout << "B(s,t) = " << to_string(ab->B) << "\n";
    }
    std::cout << "R = " << c.assemble().str("s") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star products, cofactors, and functional-equation certificates "
               "for Thom-Sebastiani sums"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string star_a, star_b;
  auto* sub_star = app.add_subcommand(
      "star", "star of two factored polynomials, e.g. \"(s+1/2)\" \"(t+1/3)(t+2/3)\"");
  sub_star->add_option("a", star_a, "left factored polynomial")->required();
  sub_star->add_option("b", star_b, "right factored polynomial")->required();

  std::string cof_b, cof_c;
  bool cof_sum = false;
  auto* sub_cof = app.add_subcommand(
      "cofactors", "A(s,t), B(s,t) with (b*c)(s) = A(s,t)b(s-t) + B(s,t)c(t)");
  sub_cof->add_option("b", cof_b, "left factored polynomial")->required();
  sub_cof->add_option("c", cof_c, "right factored polynomial")->required();
  sub_cof->add_flag("--sum", cof_sum,
                    "sum form instead: (b*c)(s+t) = A(s,t)b(s) + B(s,t)c(t)");

  std::vector<std::string> verify_files;
  long verify_integers = 0;
  long verify_jobs = 1;
  auto* sub_verify =
      app.add_subcommand("verify", "check certificate files, PASS/FAIL each");
  sub_verify->add_option("files", verify_files, "certificate JSON files")
      ->required();
  sub_verify->add_option("--integers", verify_integers,
                         "also check P(k) f^k = btilde(k) f^k for k = 1..K")
      ->check(CLI::PositiveNumber);
  sub_verify->add_option("--jobs", verify_jobs, "verify files concurrently")
      ->check(CLI::PositiveNumber);

  std::string euler_g, euler_weights;
  auto* sub_euler =
      app.add_subcommand("euler", "Euler field of a weighted-homogeneous polynomial");
  sub_euler->add_option("g", euler_g, "polynomial")->required();
  sub_euler
      ->add_option("--weights", euler_weights,
                   "comma-separated weights, one per variable")
      ->required();

  int susp_r = 0;
  std::string susp_var = "z";
  std::string susp_out;
  auto* sub_susp =
      app.add_subcommand("suspension", "certificate for the power z^r");
  sub_susp->add_option("r", susp_r, "exponent (>= 2)")->required();
  sub_susp->add_option("--var", susp_var, "variable name");
  sub_susp->add_option("-o,--output", susp_out, "write certificate JSON here");

  std::string comp_f, comp_g, comp_out;
  auto* sub_comp = app.add_subcommand(
      "compose", "Thom-Sebastiani composition of a certificate with an Euler one");
  sub_comp->add_option("f", comp_f, "bs-certificate JSON file")->required();
  sub_comp->add_option("g", comp_g, "euler-certificate JSON file")->required();
  sub_comp->add_option("-o,--output", comp_out, "write composed certificate here");

  std::vector<std::string> bp_specs;
  std::string bp_out;
  auto* sub_bp = app.add_subcommand(
      "bp", "iterated composition for x1^a1 + x2^a2 + ..., e.g. bp x:2 y:3");
  sub_bp->add_option("factors", bp_specs, "var:exponent pairs")->required();
  sub_bp->add_option("-o,--output", bp_out, "write final certificate here");

  for (CLI::App* sub : {sub_star, sub_cof, sub_verify, sub_euler, sub_susp,
                        sub_comp, sub_bp})
    sub->fallthrough();

  try {
    app.parse(argc, argv);

    if (*sub_star) {
      const FactoredPoly result =
          star(bstar::parse_factored(star_a), bstar::parse_factored(star_b));
      if (json)
        emit({{"star", result.str("s")}, {"roots", roots_json(result)}});
      else
        std::cout << result.str("s") << "\n";
    } else if (*sub_cof) {
      const FactoredPoly b = bstar::parse_factored(cof_b);
      const FactoredPoly c = bstar::parse_factored(cof_c);
      const bstar::CofactorPair ab =
          cof_sum ? cofactors_sum_form(b, c) : cofactors_theorem_form(b, c);
      if (json)
        emit({{"A", to_string(ab.A)},
              {"B", to_string(ab.B)},
              {"form", cof_sum ? "sum" : "theorem"},
              {"star", star(b, c).str("s")}});
      else
        std::cout << "A(s,t) = " << to_string(ab.A) << "\n"
                  << "B(s,t) = " << to_string(ab.B) << "\n";
    } else if (*sub_verify) {
      return run_verify(verify_files, verify_integers, verify_jobs, json);
    } else if (*sub_euler) {
      const bstar::MPoly g = bstar::parse_poly(euler_g);
      const bstar::WeylOp chi =
          bstar::euler_field(g, parse_weights(euler_weights));
      if (json)
        emit({{"euler_field", chi.str("t")}, {"variables", g.vars()}});
      else
        std::cout << "chi = " << chi.str("t") << "\n";
    } else if (*sub_susp) {
      const EulerCertificate e = bstar::suspension_certificate(susp_r, susp_var);
      if (!susp_out.empty())
        bstar::save_certificate_file(susp_out, AnyCertificate(e));
      if (json) {
        emit(ordered_json::parse(bstar::certificate_to_json(e)));
      } else {
        std::cout << "g = " << to_string(e.g()) << "\n"
                  << "ctilde = " << e.ctilde().str("t") << "\n"
                  << "chi = " << e.chi().str("t") << "\n"
                  << "Q = " << e.q().str("t") << "\n";
      }
    } else if (*sub_comp) {
      const AnyCertificate fa = bstar::load_certificate_file(comp_f);
      const auto* cf = std::get_if<Certificate>(&fa);
      if (!cf)
        throw bstar::SyntaxError("'" + comp_f + "' is not a bs-certificate", 0);
      const AnyCertificate ga = bstar::load_certificate_file(comp_g);
      const auto* eg = std::get_if<EulerCertificate>(&ga);
      if (!eg)
        throw bstar::SyntaxError("'" + comp_g + "' is not an euler-certificate",
                                 0);
      const Certificate h = compose(*cf, *eg);
      const bstar::CofactorPair ab =
          cofactors_theorem_form(cf->btilde(), eg->ctilde());
      print_compose_result(h, &ab, json, comp_out);
    } else if (*sub_bp) {
      std::vector<std::pair<std::string, int>> factors;
      for (const auto& spec : bp_specs) factors.push_back(parse_bp_spec(spec));
      for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
          if (factors[i].first == factors[j].first)
            throw bstar::SyntaxError(
                "variable '" + factors[i].first + "' repeated", 0);
      Certificate acc =
          bstar::power_certificate(factors[0].second, factors[0].first);
      bstar::CofactorPair last_ab;
      for (std::size_t i = 1; i < factors.size(); ++i) {
        const EulerCertificate e =
            bstar::suspension_certificate(factors[i].second, factors[i].first);
        last_ab = cofactors_theorem_form(acc.btilde(), e.ctilde());
        acc = compose(acc, e);
      }
      print_compose_result(acc, factors.size() > 1 ? &last_ab : nullptr, json,
                           bp_out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const bstar::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bstar::UndeclaredVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bstar::NonRationalRoot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bstar::BadExponent& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bstar::VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bstar::NotWeightedHomogeneous& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bstar::InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
