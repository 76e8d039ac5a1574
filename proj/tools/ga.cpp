#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ga/lie.hpp"
#include "ga/parse.hpp"
#include "ga/verify.hpp"

using nlohmann::json;

namespace {

struct Common {
  std::string sig_text = "1,0,0";
  std::string format = "text";

  ga::Signature sig() const { return ga::Signature::parse(sig_text); }
  bool json_out() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
  cmd->add_option("--sig", c.sig_text, "signature p,q,r")->required();
  if (with_format) cmd->add_option("--format", c.format, "output format: text|json");
}

json subspace_json(const ga::BladeSubspace& s) {
  json blades = json::array();
  for (ga::Blade b : s.blades()) blades.push_back(ga::blade_name(b, s.sig().n()));
  return {{"blades", blades}, {"dim", s.dim()}};
}

void print_linear(const ga::LinearSubspace& s, const ga::Signature& sig, bool as_json) {
  // A kernel that happens to be blade-spanned prints as blades.
  std::vector<std::string> blades;
  bool blade_spanned = true;
  for (int i = 0; i < s.dim() && blade_spanned; ++i) {
    int nonzero = -1;
    for (int j = 0; j < s.ambient_dim(); ++j)
      if (!ga::is_zero(s.basis().at(i, j))) {
        if (nonzero >= 0) {
          blade_spanned = false;
          break;
        }
        nonzero = j;
      }
    if (nonzero >= 0 && blade_spanned) blades.push_back(ga::blade_name(ga::Blade(nonzero), sig.n()));
  }
  if (as_json) {
    json j;
    if (blade_spanned)
      j["blades"] = blades;
    else {
      j["rref_rows"] = json::array();
      for (int i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (int jcol = 0; jcol < s.ambient_dim(); ++jcol)
          row.push_back(ga::to_string(s.basis().at(i, jcol)));
        j["rref_rows"].push_back(row);
      }
    }
    j["dim"] = s.dim();
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (blade_spanned)
    for (const std::string& b : blades) std::cout << b << "\n";
  else
    for (int i = 0; i < s.dim(); ++i) {
      ga::Multivector row(sig);
      for (int j = 0; j < s.ambient_dim(); ++j)
        if (!ga::is_zero(s.basis().at(i, j))) row.add_term(ga::Blade(j), s.basis().at(i, j));
      std::cout << row.str() << "\n";
    }
  std::cout << "dim " << s.dim() << "\n";
}

int cmd_centralizer(const Common& c, const std::string& target_text, const std::string& of_text,
                    const std::string& kind_text, bool bruteforce) {
  ga::Signature sig = c.sig();
  if (!of_text.empty()) {
    ga::BladeSubspace s = ga::named_subspace(sig, ga::parse_subspace_name(of_text));
    ga::CentralizerKind kind = kind_text == "plain"   ? ga::CentralizerKind::Plain
                               : kind_text == "check" ? ga::CentralizerKind::Check
                               : kind_text == "tilde"
                                   ? ga::CentralizerKind::Tilde
                                   : throw CLI::ValidationError("--kind must be plain|check|tilde");
    print_linear(ga::centralizer_bruteforce(s, kind), sig, c.json_out());
    return 0;
  }
  ga::CTarget target = ga::parse_ctarget(target_text);
  if (bruteforce) {
    ga::BruteSpec spec = ga::brute_spec(sig, target);
    print_linear(ga::centralizer_bruteforce(spec.space, spec.kind), sig, c.json_out());
    return 0;
  }
  ga::BladeSubspace s = ga::centralizer_closed_form(sig, target);
  if (c.json_out()) {
    std::cout << subspace_json(s).dump(2) << "\n";
  } else {
    for (ga::Blade b : s.blades()) std::cout << ga::blade_name(b, sig.n()) << "\n";
    std::cout << "dim " << s.dim() << "\n";
  }
  return 0;
}

int cmd_member(const Common& c, const std::string& group_text, const std::string& mv_text,
               const std::string& mode) {
  ga::Signature sig = c.sig();
  ga::GroupId g = ga::parse_group(group_text);
  ga::Multivector t = ga::parse_multivector(sig, mv_text);
  ga::NormPair nu = ga::norms(t);
  json j{{"signature", sig.str()}, {"group", ga::group_name(g)}, {"mv", t.str()},
         {"psi", nu.psi.str()},    {"chi", nu.chi.str()},        {"mode", mode}};
  if (mode == "stab") {
    j["member"] = ga::member(g, t, ga::MemberMode::Stabilizer);
  } else if (mode == "norm") {
    j["member"] = ga::member(g, t, ga::MemberMode::Norm);
  } else if (mode == "both") {
    bool norm = ga::member(g, t, ga::MemberMode::Norm);
    ga::GroupSpec spec = ga::group_spec(g, sig);
    if (spec.rep) {
      bool stab = ga::member(g, t, ga::MemberMode::Stabilizer);
      j["stabilizer"] = stab;
      j["norm"] = norm;
      j["mode_agreement"] = stab == norm;
      j["member"] = norm;
    } else {
      j["norm"] = norm;
      j["member"] = norm;
      j["mode_agreement"] = true;  // only one mode exists
    }
  } else {
    throw CLI::ValidationError("--mode must be both|stab|norm");
  }
  std::cout << j.dump(2) << "\n";
  bool member = j["member"].get<bool>();
  bool agreement = !j.contains("mode_agreement") || j["mode_agreement"].get<bool>();
  return member && agreement ? 0 : 1;
}

int cmd_factor(const Common& c, const std::string& group_text, const std::string& mv_text) {
  ga::Signature sig = c.sig();
  ga::GroupId g = ga::parse_group(group_text);
  ga::Multivector t = ga::parse_multivector(sig, mv_text);
  ga::Factorization f = ga::factor(g, t);
  json j{{"signature", sig.str()},
         {"group", ga::group_name(g)},
         {"t", t.str()},
         {"t0", f.t0.str()},
         {"y", f.y.str()},
         {"checks",
          {{"t0_in_aux", true}, {"y_in_set", true}, {"product_matches", true}}}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_liealg(const Common& c, const std::string& group_text) {
  ga::Signature sig = c.sig();
  ga::GroupId g = ga::parse_group(group_text);
  ga::LinearSubspace computed = ga::lie_algebra(g, sig);
  auto expect = ga::expected_lie(g, sig);
  if (c.json_out()) {
    json j{{"signature", sig.str()}, {"group", ga::group_name(g)}, {"dim", computed.dim()}};
    std::vector<std::string> blades;
    bool blade_spanned = true;
    for (int i = 0; i < computed.dim() && blade_spanned; ++i) {
      int nonzero = -1;
      for (int jcol = 0; jcol < computed.ambient_dim(); ++jcol)
        if (!ga::is_zero(computed.basis().at(i, jcol))) {
          if (nonzero >= 0) blade_spanned = false;
          nonzero = jcol;
        }
      if (blade_spanned && nonzero >= 0)
        blades.push_back(ga::blade_name(ga::Blade(nonzero), sig.n()));
    }
    if (blade_spanned)
      j["basis"] = blades;
    else {
      j["rref_rows"] = json::array();
      for (int i = 0; i < computed.dim(); ++i) {
        json row = json::array();
        for (int jcol = 0; jcol < computed.ambient_dim(); ++jcol)
          row.push_back(ga::to_string(computed.basis().at(i, jcol)));
        j["rref_rows"].push_back(row);
      }
    }
    if (expect) {
      j["expected_dim"] = expect->dim;
      j["match"] = computed.dim() == expect->dim &&
                   computed == expect->span.to_linear();
      j["status"] = "ok";
      j["table_row"] = expect->row;
    } else {
      j["expected_dim"] = nullptr;
      j["match"] = nullptr;
      j["status"] = "no_table_row";
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  print_linear(computed, sig, false);
  if (expect)
    std::cout << "expected dim " << expect->dim << " ("
              << (computed == expect->span.to_linear() ? "match" : "MISMATCH") << ", row "
              << expect->row << ")\n";
  else
    std::cout << "no table row for this (group, n mod 4, r)\n";
  return 0;
}

int cmd_table(int max_n, const std::string& format) {
  const bool csv = format == "csv";
  if (csv)
    std::cout << "group,p,q,r,computed_dim,table_span_dim,formula_dim,span_match,dim_match,"
                 "status\n";
  for (int n = 1; n <= max_n; ++n) {
    for (auto [p, q, r] : ga::signature_splits(n)) {
      ga::Signature sig(p, q, r);
      for (ga::GroupId g : ga::generalized_group_ids()) {
        ga::LinearSubspace computed = ga::lie_algebra(g, sig);
        auto expect = ga::expected_lie(g, sig);
        std::string status = expect ? "ok" : "no_table_row";
        long long span_dim = expect ? expect->span.dim() : -1;
        long long formula_dim = expect ? expect->dim : -1;
        bool span_match = expect && computed == expect->span.to_linear();
        bool dim_match = expect && computed.dim() == expect->dim;
        if (csv) {
          std::cout << ga::group_name(g) << "," << p << "," << q << "," << r << ","
                    << computed.dim() << "," << span_dim << "," << formula_dim << ","
                    << (expect ? (span_match ? "1" : "0") : "") << ","
                    << (expect ? (dim_match ? "1" : "0") : "") << "," << status << "\n";
        } else {
          std::cout << ga::group_name(g) << " Cl(" << sig.str() << "): dim " << computed.dim();
          if (expect)
            std::cout << " expected " << formula_dim << (span_match && dim_match ? " ok" : " MISMATCH");
          else
            std::cout << " (no table row)";
          std::cout << "\n";
        }
      }
    }
  }
  return 0;
}

int cmd_norms(const Common& c, const std::string& mv_text) {
  ga::Signature sig = c.sig();
  ga::Multivector t = ga::parse_multivector(sig, mv_text);
  ga::NormPair nu = ga::norms(t);
  if (c.json_out()) {
    json j{{"signature", sig.str()}, {"mv", t.str()}, {"psi", nu.psi.str()}, {"chi", nu.chi.str()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "psi = " << nu.psi.str() << "\nchi = " << nu.chi.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for degenerate geometric algebras and their generalized "
               "Clifford/Lipschitz groups"};
  app.require_subcommand(1);

  Common c_cent, c_member, c_factor, c_lie, c_norms;
  std::string target, of_text, kind = "plain", group, mv, mode = "both";
  bool bruteforce = false;

  CLI::App* cent = app.add_subcommand("centralizer", "centralizer of a named target or subspace");
  add_common(cent, c_cent);
  cent->add_option("--target", target, "closed-form target, e.g. Z2, Zc1, Z23bar");
  cent->add_option("--of", of_text, "named subspace, e.g. grade:1 (brute force)");
  cent->add_option("--kind", kind, "plain|check|tilde (with --of)");
  cent->add_flag("--bruteforce", bruteforce, "solve the defining equations instead");

  CLI::App* mem = app.add_subcommand("member", "group membership of a multivector");
  add_common(mem, c_member, false);
  mem->add_option("--group", group, "group id, e.g. A01, Bc23, Qt12, Gamma")->required();
  mem->add_option("--mv", mv, "multivector text")->required();
  mem->add_option("--mode", mode, "both|stab|norm");

  CLI::App* fac = app.add_subcommand("factor", "split a member over the auxiliary group");
  add_common(fac, c_factor, false);
  fac->add_option("--group", group, "factorable group id")->required();
  fac->add_option("--mv", mv, "multivector text")->required();

  CLI::App* lie = app.add_subcommand("liealg", "Lie algebra of a group");
  c_lie.format = "json";
  add_common(lie, c_lie);
  lie->add_option("--group", group, "group id")->required();

  CLI::App* tab = app.add_subcommand("table", "sweep Lie algebra dimensions");
  bool lie_dims = false;
  int table_max_n = 6;
  std::string table_format = "csv";
  tab->add_flag("--lie-dims", lie_dims, "emit one row per (group, p, q, r)");
  tab->add_option("--max-n", table_max_n, "largest dimension to sweep");
  tab->add_option("--format", table_format, "csv|text");

  CLI::App* nrm = app.add_subcommand("norms", "psi and chi of a multivector");
  add_common(nrm, c_norms);
  nrm->add_option("--mv", mv, "multivector text")->required();

  CLI::App* ver = app.add_subcommand("verify", "run the verification sweep");
  ga::VerifyConfig cfg;
  std::string verify_format = "text";
  ver->add_option("--max-n", cfg.max_n, "largest dimension to sweep (default 6)");
  ver->add_option("--samples", cfg.samples, "base sample count per case (default 100)");
  ver->add_option("--seed", cfg.seed, "master seed (default 42)");
  ver->add_option("--coeff-bound", cfg.coeff_bound, "coefficient range (default 3)");
  ver->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
  ver->add_option("--format", verify_format, "text|json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cent->parsed()) {
      if (target.empty() == of_text.empty())
        throw CLI::ValidationError("pass exactly one of --target or --of");
      return cmd_centralizer(c_cent, target, of_text, kind, bruteforce);
    }
    if (mem->parsed()) return cmd_member(c_member, group, mv, mode);
    if (fac->parsed()) return cmd_factor(c_factor, group, mv);
    if (lie->parsed()) return cmd_liealg(c_lie, group);
    if (tab->parsed()) return cmd_table(table_max_n, table_format);
    if (nrm->parsed()) return cmd_norms(c_norms, mv);
    if (ver->parsed()) {
      ga::VerifyReport report = ga::run_verify(cfg);
      if (verify_format == "json")
        std::cout << ga::report_to_json(report) << "\n";
      else
        std::cout << ga::report_to_text(report);
      return report.all_passed() ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
