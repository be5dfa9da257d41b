// Command-line front end: dimension tables, basis listings, DOF counts, and
// the property check suites, with text/csv/json output.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "tsf/proxy.hpp"

using nlohmann::json;

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

// "3" or "1..7".
Range parse_range(const std::string& s) {
  Range r;
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    r.lo = r.hi = std::stoi(s);
  } else {
    r.lo = std::stoi(s.substr(0, pos));
    r.hi = std::stoi(s.substr(pos + 2));
  }
  if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range " + s);
  return r;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

void warn_scale(int n, bool builds_bases) {
  if (builds_bases && n > 4)
    std::cerr << "warning: basis construction above n = 4 may take very long\n";
  else if (n > 5)
    std::cerr << "warning: n above 5 is outside the tested range\n";
}

std::string verdict(bool pass) { return pass ? "pass" : "FAIL"; }

int run_dims(const std::string& n_s, const std::string& r_s,
             const std::string& format, const std::string& out_path,
             bool verify_basis) {
  Range nr = parse_range(n_s), rr = parse_range(r_s);
  warn_scale(nr.hi, verify_basis);
  std::ofstream file;
  std::ostream& os = open_output(out_path, file);
  bool mismatch = false;

  if (format == "csv" || format == "text") {
    const char* sep = format == "csv" ? "," : "  ";
    os << "n" << sep << "k";
    for (int r = rr.lo; r <= rr.hi; ++r) os << sep << "r=" << r;
    os << "\n";
    for (int n = nr.lo; n <= nr.hi; ++n)
      for (int k = 0; k <= n; ++k) {
        os << n << sep << k;
        for (int r = rr.lo; r <= rr.hi; ++r) {
          tsf::Integer d = tsf::dim_Sminus(n, k, r);
          if (verify_basis && tsf::space_Sminus(n, k, r).dim() != d)
            mismatch = true;
          os << sep << d.get_str();
        }
        os << "\n";
      }
  } else {
    for (int n = nr.lo; n <= nr.hi; ++n)
      for (int k = 0; k <= n; ++k)
        for (int r = rr.lo; r <= rr.hi; ++r) {
          tsf::Integer d = tsf::dim_Sminus(n, k, r);
          bool ok = true;
          if (verify_basis) {
            ok = tsf::space_Sminus(n, k, r).dim() == d;
            mismatch = mismatch || !ok;
          }
          json rec{{"n", n}, {"k", k}, {"r", r}, {"dim", d.get_str()}};
          if (verify_basis) rec["basis_matches"] = ok;
          os << rec.dump() << "\n";
        }
  }
  if (mismatch) {
    std::cerr << "error: basis dimension mismatch detected\n";
    return 1;
  }
  return 0;
}

int run_table2(const std::string& r_s, const std::string& format,
               const std::string& out_path) {
  Range rr = parse_range(r_s);
  std::ofstream file;
  std::ostream& os = open_output(out_path, file);
  const int n = 3;
  for (int r = rr.lo; r <= rr.hi; ++r) {
    tsf::Integer q2 = tsf::dim_Qminus(n, 2, r), q3 = tsf::dim_Qminus(n, 3, r);
    tsf::Integer s2 = tsf::dim_S(n, 2, r), s3 = tsf::dim_S(n, 3, r - 1);
    tsf::Integer m2 = tsf::dim_Sminus(n, 2, r), m3 = tsf::dim_Sminus(n, 3, r);
    if (format == "json") {
      os << json{{"r", r},
                 {"Qminus_k2", q2.get_str()},
                 {"Qminus_k3", q3.get_str()},
                 {"Qminus_total", tsf::Integer(q2 + q3).get_str()},
                 {"S_k2", s2.get_str()},
                 {"S_k3", s3.get_str()},
                 {"S_total", tsf::Integer(s2 + s3).get_str()},
                 {"Sminus_k2", m2.get_str()},
                 {"Sminus_k3", m3.get_str()},
                 {"Sminus_total", tsf::Integer(m2 + m3).get_str()}}
                .dump()
         << "\n";
    } else {
      const char* sep = format == "csv" ? "," : "  ";
      if (r == rr.lo)
        os << "r" << sep << "Qminus_k2" << sep << "Qminus_k3" << sep
           << "Qminus_total" << sep << "S_k2" << sep << "S_k3" << sep
           << "S_total" << sep << "Sminus_k2" << sep << "Sminus_k3" << sep
           << "Sminus_total\n";
      os << r << sep << q2.get_str() << sep << q3.get_str() << sep
         << tsf::Integer(q2 + q3).get_str() << sep << s2.get_str() << sep << s3.get_str()
         << sep << tsf::Integer(s2 + s3).get_str() << sep << m2.get_str() << sep
         << m3.get_str() << sep << tsf::Integer(m2 + m3).get_str() << "\n";
    }
  }
  return 0;
}

json form_to_json(const tsf::PolyForm& f) {
  json terms = json::array();
  for (const auto& [key, c] : f.terms())
    terms.push_back(json{{"alpha", key.first},
                         {"sigma", key.second},
                         {"coeff", tsf::to_string(c)}});
  return terms;
}

int run_basis(const std::string& space, int n, int k, int r,
              const std::string& format, const std::string& out_path) {
  warn_scale(n, true);
  tsf::SpaceKind kind = tsf::parse_space_kind(space);
  tsf::FormSpace s = tsf::generate_space(kind, n, k, r);
  std::ofstream file;
  std::ostream& os = open_output(out_path, file);
  if (format == "json") {
    int i = 0;
    for (const auto& f : s.basis())
      os << json{{"space", space}, {"n", n},    {"k", k},
                 {"r", r},         {"index", i++}, {"terms", form_to_json(f)}}
                .dump()
         << "\n";
  } else if (format == "csv") {
    os << "index,form\n";
    int i = 0;
    for (const auto& f : s.basis())
      os << i++ << ",\"" << tsf::to_string(f) << "\"\n";
  } else {
    os << space << " n=" << n << " k=" << k << " r=" << r << " dim=" << s.dim()
       << "\n";
    for (const auto& f : s.basis()) os << "  " << tsf::to_string(f) << "\n";
  }
  return 0;
}

int run_dofs(const std::string& n_s, const std::string& k_s,
             const std::string& r_s, const std::string& format,
             const std::string& out_path) {
  Range nr = parse_range(n_s), rr = parse_range(r_s);
  std::ofstream file;
  std::ostream& os = open_output(out_path, file);
  bool mismatch = false;
  bool header = false;
  for (int n = nr.lo; n <= nr.hi; ++n) {
    Range kr = k_s.empty() ? Range{0, n} : parse_range(k_s);
    for (int k = kr.lo; k <= std::min(kr.hi, n); ++k)
      for (int r = rr.lo; r <= rr.hi; ++r) {
        tsf::Integer count = tsf::dof_count(n, k, r);
        tsf::Integer dim = tsf::dim_Sminus(n, k, r);
        bool ok = count == dim;
        mismatch = mismatch || !ok;
        if (format == "json") {
          os << json{{"n", n},
                     {"k", k},
                     {"r", r},
                     {"dof_count", count.get_str()},
                     {"dim", dim.get_str()},
                     {"match", ok}}
                    .dump()
             << "\n";
        } else {
          const char* sep = format == "csv" ? "," : "  ";
          if (!header) {
            os << "n" << sep << "k" << sep << "r" << sep << "dof_count" << sep
               << "dim" << sep << "match\n";
            header = true;
          }
          os << n << sep << k << sep << r << sep << count.get_str() << sep
             << dim.get_str() << sep << (ok ? "yes" : "NO") << "\n";
        }
      }
  }
  return mismatch ? 1 : 0;
}

void emit_report(std::ostream& os, const std::string& format,
                 const tsf::PropertyReport& rep) {
  if (format == "json") {
    os << json{{"property", rep.property}, {"n", rep.n},
               {"k", rep.k},               {"r", rep.r},
               {"verdict", verdict(rep.pass)}, {"detail", rep.detail}}
              .dump()
       << "\n";
  } else if (format == "csv") {
    os << rep.property << "," << rep.n << "," << rep.k << "," << rep.r << ","
       << verdict(rep.pass) << ",\"" << rep.detail << "\"\n";
  } else {
    os << std::left << std::setw(24) << rep.property << " n=" << rep.n;
    if (rep.k >= 0) os << " k=" << rep.k;
    os << " r=" << rep.r << "  " << verdict(rep.pass) << "  " << rep.detail
       << "\n";
  }
}

int run_check(const std::string& suite, const std::string& n_s,
              const std::string& k_s, const std::string& r_s,
              const std::string& format, const std::string& out_path) {
  Range nr = parse_range(n_s), rr = parse_range(r_s);
  warn_scale(nr.hi, true);
  std::ofstream file;
  std::ostream& os = open_output(out_path, file);
  if (format == "csv") os << "property,n,k,r,verdict,detail\n";
  bool all_pass = true;
  auto emit = [&](const tsf::PropertyReport& rep) {
    all_pass = all_pass && rep.pass;
    emit_report(os, format, rep);
  };
  bool all = suite == "all";
  for (int n = nr.lo; n <= nr.hi; ++n) {
    Range kr = k_s.empty() ? Range{0, n} : parse_range(k_s);
    for (int r = rr.lo; r <= rr.hi; ++r) {
      for (int k = kr.lo; k <= std::min(kr.hi, n); ++k) {
        if (all || suite == "inclusion") emit(tsf::check_inclusion(n, k, r));
        if (all || suite == "subcomplex") emit(tsf::check_subcomplex(n, k, r));
        if (all || suite == "trace") emit(tsf::check_trace(n, k, r));
        if (all || suite == "decomposition")
          emit(tsf::check_decompositions(n, k, r));
        if (all || suite == "unisolvence") emit(tsf::check_unisolvence(n, k, r));
        if (all || suite == "minimality") emit(tsf::check_minimality(n, k, r));
      }
      if (all || suite == "exactness") {
        using CF = tsf::ComplexFamily;
        for (CF fam : {CF::Sminus, CF::SDescending, CF::PDescending, CF::Pminus})
          emit(tsf::check_exactness(n, r, fam));
      }
      if (all || suite == "proxy") {
        if (n == 2) emit(tsf::check_prop_AC(r));
        if (n == 2 || n == 3) emit(tsf::check_prop_CF(n, r));
      }
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trimmed serendipity form space calculator"};
  app.require_subcommand(1);

  std::string n_s = "1..4", k_s, r_s = "1..7", space = "Sminus",
              format = "text", out_path, suite = "all";
  bool verify_basis = false;

  auto add_common = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("--out", out_path);
    if (with_k) sub->add_option("--k", k_s);
  };

  auto* dims = app.add_subcommand("dims", "trimmed serendipity dimensions");
  dims->add_option("--n", n_s);
  dims->add_option("--r", r_s);
  dims->add_flag("--verify-basis", verify_basis);
  add_common(dims, false);

  auto* table2 = app.add_subcommand("table2", "cube dimension comparison");
  std::string t2_r = "1..4";
  table2->add_option("--r", t2_r);
  add_common(table2, false);

  auto* basis = app.add_subcommand("basis", "echelonized basis listing");
  int bn = 2, bk = 0, br = 1;
  basis->add_option("--space", space);
  basis->add_option("--n", bn)->required();
  basis->add_option("--k", bk)->required();
  basis->add_option("--r", br)->required();
  add_common(basis, false);

  auto* dofs = app.add_subcommand("dofs", "degree-of-freedom counts");
  std::string dn = "2..3", dr = "1..5";
  dofs->add_option("--n", dn);
  dofs->add_option("--r", dr);
  add_common(dofs, true);

  auto* check = app.add_subcommand("check", "property check suites");
  std::string cn = "2", cr = "1..3";
  check
      ->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "inclusion", "subcomplex", "exactness",
                             "trace", "decomposition", "unisolvence",
                             "minimality", "proxy"}));
  check->add_option("--n", cn);
  check->add_option("--r", cr);
  add_common(check, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dims->parsed())
      return run_dims(n_s, r_s, format, out_path, verify_basis);
    if (table2->parsed()) return run_table2(t2_r, format, out_path);
    if (basis->parsed())
      return run_basis(space, bn, bk, br, format, out_path);
    if (dofs->parsed()) return run_dofs(dn, k_s, dr, format, out_path);
    if (check->parsed())
      return run_check(suite, cn, k_s, cr, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
