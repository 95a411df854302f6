#include "gbc/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gbc/closed_form.hpp"
#include "gbc/error.hpp"
#include "gbc/qk.hpp"
#include "gbc/row_polynomials.hpp"
#include "gbc/triangle.hpp"

namespace gbc::cli {

namespace {

enum class Format { kPlain, kCsv, kJson };

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  return Format::kPlain;
}

Params parse_params_option(const std::string& text) {
  try {
    return Params::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--params: ") + e.what());
  }
}

// Consistency failures map to their own exit code.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

void emit_poly(std::ostream& out, const Poly& p, Format format) {
  switch (format) {
    case Format::kPlain: out << p.str() << '\n'; break;
    case Format::kCsv: out << to_csv(p) << '\n'; break;
    case Format::kJson: emit_json(out, to_json(p)); break;
  }
}

struct Options {
  std::string params;
  std::string format = "plain";
  long max_n = 0;
  long n = 0;
  long k = 0;
  std::string form = "all";
  long truncation = 400;
  unsigned precision = 128;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--params", o.params, "Six rationals a,b,c,a',b',c' (alpha..gamma')")->required();
}

void cmd_triangle(const Options& o, std::ostream& out) {
  const auto table = compute_table(parse_params_option(o.params), o.max_n);
  switch (parse_format(o.format)) {
    case Format::kPlain:
      for (long n = 0; n <= table.max_n(); ++n) {
        const auto row = table.row(n);
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k].str();
        out << '\n';
      }
      break;
    case Format::kCsv: out << to_csv(table); break;
    case Format::kJson: emit_json(out, to_json(table)); break;
  }
}

void cmd_closed(const Options& o, std::ostream& out) {
  const Params params = parse_params_option(o.params);
  const FactoredValue v = gbc_factored(params, o.n, o.k);
  if (v.product != entry(params, o.n, o.k))
    throw ConsistencyError("factored product disagrees with the recurrence entry");
  switch (parse_format(o.format)) {
    case Format::kPlain:
      out << "first: " << v.first_factor << "\nsecond: " << v.second_factor << "\nproduct: " << v.product << '\n';
      break;
    case Format::kCsv: out << v.first_factor << ',' << v.second_factor << ',' << v.product << '\n'; break;
    case Format::kJson: emit_json(out, to_json(v)); break;
  }
}

void cmd_phi(const Options& o, std::ostream& out) {
  emit_poly(out, phi(parse_params_option(o.params), o.n), parse_format(o.format));
}

void cmd_roots(const Options& o, std::ostream& out) {
  const Poly p = phi(parse_params_option(o.params), o.n);
  if (p.is_zero()) throw PreconditionError("phi_n is the zero polynomial; no certificate");
  const auto cert = certify_all_real(p);
  switch (parse_format(o.format)) {
    case Format::kPlain:
      out << "degree: " << cert.degree << "\nsquarefree_degree: " << cert.squarefree_degree
          << "\ndistinct_real_roots: " << cert.distinct_real_roots
          << "\nall_real: " << (cert.all_real ? "true" : "false") << '\n';
      break;
    case Format::kCsv:
      out << cert.degree << ',' << cert.squarefree_degree << ',' << cert.distinct_real_roots << ','
          << (cert.all_real ? "true" : "false") << '\n';
      break;
    case Format::kJson: emit_json(out, to_json(cert)); break;
  }
}

void cmd_rowsums(const Options& o, std::ostream& out) {
  const auto table = compute_table(parse_params_option(o.params), o.max_n);
  std::vector<std::string> sums;
  for (long n = 0; n <= table.max_n(); ++n) sums.push_back(row_sum(table, n).str());
  switch (parse_format(o.format)) {
    case Format::kPlain:
      for (const auto& s : sums) out << s << '\n';
      break;
    case Format::kCsv:
      for (std::size_t i = 0; i < sums.size(); ++i) out << (i ? "," : "") << sums[i];
      out << '\n';
      break;
    case Format::kJson: emit_json(out, sums); break;
  }
}

void cmd_rowsum_series(const Options& o, std::ostream& out) {
  const auto est = row_sum_series(parse_params_option(o.params), o.n, o.truncation, o.precision);
  const auto digits = static_cast<std::streamsize>(est.precision_bits * 0.30103);
  const std::string value = est.value.str(digits, std::ios_base::fixed);
  const std::string last = est.last_term.str(6, std::ios_base::scientific);
  const std::string ratio = est.residual_ratio.str(6, std::ios_base::scientific);
  if (parse_format(o.format) == Format::kJson) {
    emit_json(out, {{"value", value},
                    {"truncation_j", est.truncation_j},
                    {"precision_bits", est.precision_bits},
                    {"last_term", last},
                    {"residual_ratio", ratio}});
    return;
  }
  if (parse_format(o.format) == Format::kCsv) {
    out << value << ',' << est.truncation_j << ',' << est.precision_bits << ',' << last << ',' << ratio << '\n';
    return;
  }
  out << "value: " << value << "\ntruncation_j: " << est.truncation_j
      << "\nprecision_bits: " << est.precision_bits << "\nlast_term: " << last
      << "\nresidual_ratio: " << ratio << '\n';
}

void cmd_qk(const Options& o, std::ostream& out) {
  const QkSpec spec{o.n, o.k};
  const Format format = parse_format(o.format);
  if (o.form == "rec") return emit_poly(out, qk_recurrence(spec), format);
  if (o.form == "1") return emit_poly(out, qk_form1(spec), format);
  if (o.form == "2") return emit_poly(out, qk_form2(spec), format);
  if (o.form == "3") return emit_poly(out, qk_form3(spec), format);

  const Poly rec = qk_recurrence(spec);
  const Poly forms[] = {qk_form1(spec), qk_form2(spec), qk_form3(spec)};
  for (int i = 0; i < 3; ++i)
    if (forms[i] != rec)
      throw ConsistencyError("form " + std::to_string(i + 1) + " gives " + forms[i].str() +
                             " but the recurrence gives " + rec.str());
  emit_poly(out, rec, format);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized binomial coefficient triangles, row polynomials and Q_k forms", "gbc"};
  app.require_subcommand(1);
  Options o;

  auto* triangle = app.add_subcommand("triangle", "Print rows 0..max_n of {n||k}");
  add_params(triangle, o);
  triangle->add_option("--max-n", o.max_n)->required()->check(CLI::NonNegativeNumber);
  add_format(triangle, o);

  auto* closed = app.add_subcommand("closed", "Factored closed form of {n||k} (alpha' = 0)");
  add_params(closed, o);
  closed->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  closed->add_option("--k", o.k)->required();
  add_format(closed, o);

  auto* phi_cmd = app.add_subcommand("phi", "Row polynomial phi_n(x)");
  add_params(phi_cmd, o);
  phi_cmd->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  add_format(phi_cmd, o);

  auto* roots = app.add_subcommand("roots", "Sturm certificate for the zeros of phi_n");
  add_params(roots, o);
  roots->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  add_format(roots, o);

  auto* rowsums = app.add_subcommand("rowsums", "Exact row sums rho(0..max_n)");
  add_params(rowsums, o);
  rowsums->add_option("--max-n", o.max_n)->required()->check(CLI::NonNegativeNumber);
  add_format(rowsums, o);

  auto* series = app.add_subcommand("rowsum-series", "Floating row-sum series (alpha' = 0; alpha, beta, beta' > 0)");
  add_params(series, o);
  series->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  series->add_option("--truncation", o.truncation, "Last series index j")->check(CLI::PositiveNumber)->capture_default_str();
  series->add_option("--precision", o.precision, "Bits of floating precision")->check(CLI::Range(2u, 1u << 20))->capture_default_str();
  add_format(series, o);

  auto* qk = app.add_subcommand("qk", "Q_k(x) from Q_0 = 1 - x^n");
  qk->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  qk->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
  qk->add_option("--form", o.form, "rec, 1, 2, 3, or all (checks all four agree)")
      ->check(CLI::IsMember({"rec", "1", "2", "3", "all"}))
      ->capture_default_str();
  add_format(qk, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*triangle) cmd_triangle(o, out);
    else if (*closed) cmd_closed(o, out);
    else if (*phi_cmd) cmd_phi(o, out);
    else if (*roots) cmd_roots(o, out);
    else if (*rowsums) cmd_rowsums(o, out);
    else if (*series) cmd_rowsum_series(o, out);
    else if (*qk) cmd_qk(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConsistencyError& e) {
    err << "consistency check failed: " << e.what() << '\n';
    return kConsistencyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolation;
  }
  return kSuccess;
}

}  // namespace gbc::cli
