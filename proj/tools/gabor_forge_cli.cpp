// gabor_forge_cli.cpp -- command-line front end.
//
// Commands:
//   gen        generate a sequence from a named family
//   verify     constant-amplitude / zero-autocorrelation check
//   dpaf       discrete periodic ambiguity function (JSON or magnitude CSV)
//   adjoint    adjoint of a time-frequency subgroup
//   certify    frame tightness by sparsity / gram / bruteforce / all
//   gram       Gram matrix support table (0/1 CSV)
//   roundtrip  cyclic N-root extraction, verification, and reconstruction
//
// Exit codes: 0 success, 1 internal cross-check failure, 2 user error.
// The environment variable GABOR_FORGE_TOL (or --tol) overrides the default
// near-zero tolerance used by verification and certification thresholds.

#include "gaborforge/equivalence.hpp"
#include "gaborforge/frame_engine.hpp"
#include "gaborforge/io.hpp"
#include "gaborforge/lattice.hpp"
#include "gaborforge/sequences.hpp"
#include "gaborforge/tf_core.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct LatticeSpec {
  std::string product;    // "a,b,nprime"
  std::string cyclic;     // "k,l"
  std::string explicit_;  // path to subgroup JSON
};

void add_lattice_options(CLI::App* cmd, LatticeSpec& spec) {
  auto* p = cmd->add_option("--product", spec.product,
                            "product subgroup <a> x <b>, as a,b,nprime");
  auto* c = cmd->add_option("--cyclic", spec.cyclic,
                            "cyclic subgroup generated by k,l");
  auto* e = cmd->add_option("--explicit", spec.explicit_,
                            "subgroup JSON file with an explicit element list");
  p->excludes(c)->excludes(e);
  c->excludes(e);
}

gf::TFSubgroup resolve_lattice(const LatticeSpec& spec, long n) {
  const int given = (!spec.product.empty()) + (!spec.cyclic.empty()) +
                    (!spec.explicit_.empty());
  if (given != 1)
    throw std::invalid_argument(
        "exactly one of --product, --cyclic, --explicit is required");
  if (!spec.product.empty()) {
    long a = 0, b = 0, np = 0;
    if (std::sscanf(spec.product.c_str(), "%ld,%ld,%ld", &a, &b, &np) != 3)
      throw std::invalid_argument("--product expects a,b,nprime");
    return gf::product_subgroup(n, a, b, np);
  }
  if (!spec.cyclic.empty()) {
    long k = 0, l = 0;
    if (std::sscanf(spec.cyclic.c_str(), "%ld,%ld", &k, &l) != 2)
      throw std::invalid_argument("--cyclic expects k,l");
    return gf::subgroup_from_generators(n, {{k, l}});
  }
  gf::TFSubgroup lambda =
      gf::subgroup_from_json(gf::read_file(spec.explicit_));
  if (lambda.n != n)
    throw std::invalid_argument(
        "subgroup modulus does not match the sequence length");
  return lambda;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
  } else {
    gf::write_file(out_path, content);
  }
}

gf::Sequence load_sequence(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("input file is required (-i)");
  return gf::sequence_from_json(gf::read_file(path));
}

double resolve_zero_tol(double flag_tol) {
  if (flag_tol > 0.0) return flag_tol;
  if (const char* env = std::getenv("GABOR_FORGE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || v <= 0.0)
      throw std::invalid_argument(
          "GABOR_FORGE_TOL must be a positive number");
    return v;
  }
  return gf::tol::zero;
}

std::string cazac_report_json(const gf::CazacReport& r) {
  std::string out = "{\"is_ca\":";
  out += r.is_ca ? "true" : "false";
  out += ",\"is_zac\":";
  out += r.is_zac ? "true" : "false";
  out += ",\"max_amplitude_deviation\":" +
         gf::format_double(r.max_amplitude_deviation);
  out += ",\"max_autocorrelation_magnitude\":" +
         gf::format_double(r.max_autocorrelation_magnitude);
  out += '}';
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Gabor frame and CAZAC sequence toolbox"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a sequence");
  std::string family, sigma_name = "id", c_file, u_file, v_file, gen_out;
  long gen_n = 0, gen_s = 1, gen_p = 0, gen_inner = 0;
  gen->add_option("--family", family, "sequence family")->required();
  gen->add_option("--n", gen_n, "length parameter N");
  gen->add_option("--s", gen_s, "wiener chirp multiplier");
  gen->add_option("--p", gen_p, "bjorck prime length");
  gen->add_option("--inner-n", gen_inner, "milewski inner period N");
  gen->add_option("--sigma", sigma_name,
                  "bjorck_saffari_sq permutation: id or reversal");
  gen->add_option("--c-file", c_file, "seed sequence JSON for bjorck_saffari_sq");
  gen->add_option("--u-file", u_file, "left seed sequence JSON for kronecker");
  gen->add_option("--v-file", v_file,
                  "seed sequence JSON for milewski / kronecker");
  gen->add_option("-o,--output", gen_out, "output path (stdout if omitted)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "CA/ZAC verification");
  std::string verify_in, verify_out;
  verify->add_option("-i,--input", verify_in, "sequence JSON")->required();
  verify->add_option("-o,--output", verify_out, "output path");

  // ---- dpaf ----
  auto* dpaf_cmd = app.add_subcommand("dpaf", "periodic ambiguity function");
  std::string dpaf_in, dpaf_out, dpaf_format = "json";
  dpaf_cmd->add_option("-i,--input", dpaf_in, "sequence JSON")->required();
  dpaf_cmd->add_option("--format", dpaf_format, "json or csv");
  dpaf_cmd->add_option("-o,--output", dpaf_out, "output path");

  // ---- adjoint ----
  auto* adjoint = app.add_subcommand("adjoint", "adjoint subgroup");
  LatticeSpec adj_spec;
  std::string adj_out;
  long adj_n = 0;
  adjoint->add_option("--n", adj_n, "ambient modulus N")->required();
  add_lattice_options(adjoint, adj_spec);
  adjoint->add_option("-o,--output", adj_out, "output path");

  // ---- certify ----
  auto* certify = app.add_subcommand("certify", "frame tightness");
  LatticeSpec cert_spec;
  std::string cert_in, cert_out, cert_method = "all";
  double cert_tol = 0.0;
  certify->add_option("-i,--input", cert_in, "sequence JSON")->required();
  add_lattice_options(certify, cert_spec);
  certify->add_option("--method", cert_method,
                      "sparsity, gram, bruteforce, or all");
  certify->add_option("--tol", cert_tol, "near-zero tolerance override");
  certify->add_option("-o,--output", cert_out, "output path");

  // ---- gram ----
  auto* gram = app.add_subcommand("gram", "Gram matrix support table");
  LatticeSpec gram_spec;
  std::string gram_in, gram_out;
  double gram_tol = 0.0;
  gram->add_option("-i,--input", gram_in, "sequence JSON")->required();
  add_lattice_options(gram, gram_spec);
  gram->add_option("--tol", gram_tol, "near-zero tolerance override");
  gram->add_option("-o,--output", gram_out, "output path");

  // ---- roundtrip ----
  auto* roundtrip =
      app.add_subcommand("roundtrip", "cyclic N-root round trip");
  std::string rt_in, rt_out;
  roundtrip->add_option("-i,--input", rt_in, "sequence JSON")->required();
  roundtrip->add_option("-o,--output", rt_out, "output path for the root");

  try {
    app.parse(argc, argv);

    if (gen->parsed()) {
      gf::Sequence phi;
      const gf::Family fam = gf::family_from_name(family);
      switch (fam) {
        case gf::Family::chu:
          phi = gf::gen_chu(gen_n);
          break;
        case gf::Family::p4:
          phi = gf::gen_p4(gen_n);
          break;
        case gf::Family::wiener:
          phi = gf::gen_wiener(gen_n, gen_s);
          break;
        case gf::Family::bjorck:
          phi = gf::gen_bjorck(gen_p);
          break;
        case gf::Family::bjorck_saffari_sq: {
          gf::cvec c;
          if (!c_file.empty()) {
            c = load_sequence(c_file).entries;
          } else {
            // default seed: the length-N quadratic phase exp(i pi k(k-1)/N)
            if (gen_n < 1)
              throw std::invalid_argument(
                  "bjorck_saffari_sq needs --c-file or --n");
            c.resize(static_cast<size_t>(gen_n));
            for (long k = 0; k < gen_n; ++k)
              c[static_cast<size_t>(k)] = std::polar(
                  1.0, M_PI * static_cast<double>(k) *
                           static_cast<double>(k - 1) /
                           static_cast<double>(gen_n));
          }
          const long nn = static_cast<long>(c.size());
          std::vector<long> sigma(static_cast<size_t>(nn));
          if (sigma_name == "id") {
            for (long h = 0; h < nn; ++h) sigma[static_cast<size_t>(h)] = h;
          } else if (sigma_name == "reversal") {
            for (long h = 0; h < nn; ++h)
              sigma[static_cast<size_t>(h)] = nn - 1 - h;
          } else {
            throw std::invalid_argument("--sigma must be id or reversal");
          }
          phi = gf::gen_bjorck_saffari_sq(c, sigma);
          break;
        }
        case gf::Family::milewski: {
          if (v_file.empty())
            throw std::invalid_argument("milewski needs --v-file");
          if (gen_inner < 1)
            throw std::invalid_argument("milewski needs --inner-n");
          phi = gf::gen_milewski(load_sequence(v_file).entries, gen_inner);
          break;
        }
        case gf::Family::kronecker: {
          if (u_file.empty() || v_file.empty())
            throw std::invalid_argument("kronecker needs --u-file and --v-file");
          phi = gf::gen_kronecker(load_sequence(u_file).entries,
                                  load_sequence(v_file).entries);
          break;
        }
        default:
          throw std::invalid_argument("cannot generate the custom family");
      }
      emit(gf::sequence_to_json(phi), gen_out);
      return 0;
    }

    if (verify->parsed()) {
      const gf::Sequence phi = load_sequence(verify_in);
      const double zt = resolve_zero_tol(0.0);
      emit(cazac_report_json(gf::verify_cazac(phi, gf::tol::unit, zt)),
           verify_out);
      return 0;
    }

    if (dpaf_cmd->parsed()) {
      const gf::Sequence phi = load_sequence(dpaf_in);
      const gf::DPAFMatrix a = gf::dpaf(phi);
      if (dpaf_format == "json") {
        emit(gf::dpaf_to_json(a), dpaf_out);
      } else if (dpaf_format == "csv") {
        emit(gf::dpaf_magnitude_csv(a), dpaf_out);
      } else {
        throw std::invalid_argument("--format must be json or csv");
      }
      return 0;
    }

    if (adjoint->parsed()) {
      const gf::TFSubgroup lambda = resolve_lattice(adj_spec, adj_n);
      gf::TFSubgroup adj = gf::adjoint_bruteforce(lambda);
      if (lambda.structure == gf::SubgroupStructure::product) {
        // redundant closed form as a consistency gate
        const gf::TFSubgroup closed = gf::adjoint_product_closed(
            lambda.n, lambda.a, lambda.b, lambda.nprime);
        if (closed.elements != adj.elements)
          throw std::logic_error(
              "adjoint closed form disagrees with exhaustive scan");
      }
      emit(gf::subgroup_to_json(adj), adj_out);
      return 0;
    }

    if (certify->parsed()) {
      const gf::Sequence phi = load_sequence(cert_in);
      const gf::TFSubgroup lambda = resolve_lattice(cert_spec, phi.n);
      gf::CertifyOptions opt;
      opt.zero_tol = resolve_zero_tol(cert_tol);
      opt.witness_tol = opt.zero_tol;
      std::vector<gf::TightnessReport> reports;
      if (cert_method == "all") {
        const gf::GaborSystem sys = gf::build_system(phi, lambda);
        reports.push_back(gf::certify_sparsity(phi, lambda, opt));
        reports.push_back(gf::certify_gram(sys, opt));
        reports.push_back(gf::certify_bruteforce(sys, opt));
      } else {
        const gf::Method m = gf::method_from_name(cert_method);
        if (m == gf::Method::sparsity) {
          reports.push_back(gf::certify_sparsity(phi, lambda, opt));
        } else {
          const gf::GaborSystem sys = gf::build_system(phi, lambda);
          reports.push_back(m == gf::Method::gram
                                ? gf::certify_gram(sys, opt)
                                : gf::certify_bruteforce(sys, opt));
        }
      }
      std::string out;
      if (reports.size() == 1) {
        out = gf::tightness_report_to_json(reports[0]);
      } else {
        out = "[";
        for (size_t i = 0; i < reports.size(); ++i) {
          if (i) out += ',';
          out += gf::tightness_report_to_json(reports[i]);
        }
        out += ']';
      }
      emit(out, cert_out);
      for (const auto& r : reports)
        if (!r.crosscheck_ok)
          throw std::logic_error(
              "tightness cross-check failed inside a certifier");
      for (size_t i = 1; i < reports.size(); ++i)
        if (reports[i].is_tight != reports[0].is_tight ||
            reports[i].is_frame != reports[0].is_frame)
          throw std::logic_error("certification methods disagree");
      return 0;
    }

    if (gram->parsed()) {
      const gf::Sequence phi = load_sequence(gram_in);
      const gf::TFSubgroup lambda = resolve_lattice(gram_spec, phi.n);
      const gf::GaborSystem sys = gf::build_system(phi, lambda);
      const gf::GramMatrix g = gf::gram_direct(sys);
      const double zt = resolve_zero_tol(gram_tol);
      // Gram entries are N-term sums, so the support cut scales with N
      emit(gf::gram_support_csv(g, zt * static_cast<double>(phi.n)), gram_out);
      return 0;
    }

    if (roundtrip->parsed()) {
      const gf::Sequence phi = load_sequence(rt_in);
      const gf::Sequence norm = gf::normalize_rotation(phi);
      const gf::CyclicRoot root = gf::to_cyclic_root(norm);
      const gf::Sequence back = gf::from_cyclic_root(root);
      double max_err = 0.0;
      for (size_t k = 0; k < norm.entries.size(); ++k)
        max_err =
            std::max(max_err, std::abs(back.entries[k] - norm.entries[k]));
      if (max_err > 1e-12)
        throw std::logic_error(
            "cyclic root reconstruction mismatch: " +
            gf::format_double(max_err));
      const gf::CyclicRootCheck check =
          gf::verify_cyclic_root(root, resolve_zero_tol(0.0));
      if (!check.ok)
        throw std::invalid_argument(
            "input is not CAZAC: the cyclic N-root system fails");
      emit(gf::cyclic_root_to_json(root), rt_out);
      return 0;
    }

    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
