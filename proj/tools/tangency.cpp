// SPDX-License-Identifier: Apache-2.0
//
// tangency: command-line front end for the relative invariant engine.

#include "tangency/absgw.hpp"
#include "tangency/enumcount.hpp"
#include "tangency/io.hpp"
#include "tangency/k3.hpp"
#include "tangency/localjet.hpp"
#include "tangency/relgw.hpp"
#include "tangency/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using tangency::json;
using tangency::PolyQ;
using tangency::QueryError;
using tangency::Rational;

struct Options {
  std::string format = "text";
  std::optional<long> d;
  bool symbolic = false;
  std::string range = "5:10";
  bool stats = false;

  // invariant
  int e = 2;
  std::string points = "[]";
  std::string query;

  std::string which = "both";
  long series_terms = 5;
  bool stale_k3 = false;
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

void require_d(const Options& opt) {
  if (!opt.symbolic && !opt.d)
    throw QueryError("missing_d", "pass --d <integer> or --symbolic");
}

std::string poly_text(const PolyQ& p) {
  std::ostringstream os;
  os << p << "\n";
  return os.str();
}

int cmd_invariant(const Options& opt) {
  tangency::QueryEnvelope q;
  if (!opt.query.empty()) {
    json parsed;
    try {
      parsed = json::parse(opt.query);
    } catch (const json::parse_error& ex) {
      throw QueryError("malformed_query", ex.what());
    }
    q = tangency::envelope_from_json(parsed);
  } else {
    q.e = opt.e;
    json parsed;
    try {
      parsed = json::parse(opt.points);
    } catch (const json::parse_error& ex) {
      throw QueryError("malformed_points", ex.what());
    }
    q.points = tangency::points_from_json(parsed);
    q.d = opt.d;
    q.symbolic = opt.symbolic;
  }
  if (!q.e) throw QueryError("invalid_degree", "missing curve degree e");
  tangency::RelKey key{*q.e, q.points};

  json out = tangency::to_json_value(q);
  out.erase("command");
  out.erase("format");
  if (q.symbolic) {
    tangency::RelativeEngine<tangency::SymbolicD> engine(tangency::SymbolicD{});
    const PolyQ v = engine.rel_invariant(key);
    out["value"] = tangency::to_json_value(v);
    emit(opt, out, poly_text(v));
  } else {
    if (!q.d) throw QueryError("missing_d", "pass d or \"symbolic\"");
    if (*q.d < 5) throw QueryError("d_out_of_range", "d must be at least 5");
    tangency::RelativeEngine<tangency::NumericD> engine(tangency::NumericD{*q.d});
    const Rational v = engine.rel_invariant(key);
    out["value"] = tangency::to_string(v);
    emit(opt, out, tangency::to_string(v) + "\n");
  }
  return 0;
}

int cmd_count(const Options& opt, bool enumerative) {
  require_d(opt);
  json out;
  out["quantity"] = enumerative ? "n_d" : "N_d";
  if (opt.symbolic) {
    const PolyQ p = enumerative ? tangency::n_enumerative_symbolic()
                                : tangency::N_virtual_symbolic();
    out["d"] = "symbolic";
    out["value"] = tangency::to_json_value(p);
    emit(opt, out, poly_text(p));
  } else {
    const Rational v = enumerative ? tangency::n_enumerative(*opt.d)
                                   : tangency::N_virtual(*opt.d);
    out["d"] = *opt.d;
    out["value"] = tangency::to_string(v);
    emit(opt, out, tangency::to_string(v) + "\n");
  }
  return 0;
}

int cmd_poly(const Options& opt) {
  json out;
  std::string text;
  if (opt.which == "N" || opt.which == "both") {
    const PolyQ p = tangency::N_virtual_symbolic();
    out["N_d"] = tangency::to_json_value(p);
    text += "N_d = " + poly_text(p);
  }
  if (opt.which == "n" || opt.which == "both") {
    const PolyQ p = tangency::n_enumerative_symbolic();
    out["n_d"] = tangency::to_json_value(p);
    text += "n_d = " + poly_text(p);
  }
  if (out.empty()) throw QueryError("invalid_argument", "--which must be N, n or both");
  emit(opt, out, text);
  return 0;
}

int cmd_k3(const Options& opt) {
  if (opt.series_terms < 0) throw QueryError("invalid_argument", "N must be >= 0");
  const auto g = tangency::eta_coeffs(static_cast<std::size_t>(opt.series_terms));
  const auto rep = opt.stale_k3 ? tangency::check_degree6_identity(Rational(323))
                                : tangency::check_degree6_identity();
  const std::vector<tangency::CoverTerm> two_line{{1, 5}, {2, 2}};
  const Rational conj = tangency::n_beta_conjecture(two_line);

  json out;
  out["G"] = json::array();
  for (const auto& c : g) out["G"].push_back(c.get_str());
  out["degree6_identity"] = {{"n_6", tangency::to_string(rep.conics)},
                             {"line_pairs", tangency::to_string(rep.line_pairs)},
                             {"nodal_double_covers", tangency::to_string(rep.nodal_covers)},
                             {"G_5", rep.g5.get_str()},
                             {"holds", rep.holds}};
  out["n_2pi*l"] = {{"value", tangency::to_string(conj)}, {"status", "conjectural"}};

  std::ostringstream os;
  os << "G:";
  for (const auto& c : g) os << " " << c.get_str();
  os << "\n" << tangency::to_string(rep.conics) << " + " << tangency::to_string(rep.line_pairs)
     << " + " << tangency::to_string(rep.nodal_covers) << " = "
     << tangency::to_string(rep.conics + rep.line_pairs + rep.nodal_covers)
     << (rep.holds ? " == " : " != ") << "G_5 = " << rep.g5.get_str() << "\n"
     << "n_{2 pi^* l} = G_5 + G_2/8 = " << tangency::to_string(conj) << " (conjectural)\n";
  emit(opt, out, os.str());
  return rep.holds ? 0 : 1;
}

int cmd_jets(const Options& opt) {
  const auto v = tangency::verify_virtual_constants();
  struct Row {
    std::string check;
    std::string expected;
    std::string computed;
    bool pass;
  };
  auto show = [](std::optional<int> x) { return x ? std::to_string(*x) : std::string(">order"); };
  const std::vector<Row> rows{
      {"double covers of tangent lines: order of sigma", "4", show(v.comp4_order),
       v.comp4_order == 4},
      {"higher-order tails leave that order unchanged", "yes", v.tails_stable ? "yes" : "no",
       v.tails_stable},
      {"psi_5 section on M_C: order", "2", show(v.psi_order), v.psi_order == 2},
      {"[M_(2,2,2,3)] on M_C: degree", "2+1=3",
       show(v.m2223.ramification_branch) + "+" + std::to_string(v.m2223.line_branch) + "=" +
           show(v.m2223.total()),
       v.m2223.total() == 3},
      {"M_B: rank of linearized tangency equations", "6", std::to_string(v.bd.rank),
       v.bd.rank == 6},
      {"M_B: solution space eps1+eps2+eps3 = eps4..eps8 = 0", "yes",
       v.bd.matches_relations ? "yes" : "no", v.bd.matches_relations},
      {"M_B: ramification coordinates rank", "2", std::to_string(v.bd.ramification_rank),
       v.bd.ramification_rank == 2},
  };
  json out = json::array();
  std::ostringstream os;
  bool all = true;
  for (const auto& r : rows) {
    out.push_back({{"check", r.check}, {"expected", r.expected}, {"computed", r.computed},
                   {"pass", r.pass}});
    os << (r.pass ? "PASS  " : "FAIL  ") << r.check << ": expected " << r.expected
       << ", computed " << r.computed << "\n";
    all = all && r.pass;
  }
  if (v.bd.redraws > 0) std::clog << "M_B: redrew F " << v.bd.redraws << " time(s)\n";
  emit(opt, out, os.str());
  return all ? 0 : 1;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto sep = text.find_first_of(":,");
  if (sep == std::string::npos) throw QueryError("invalid_range", "range must be MIN:MAX");
  long lo = 0;
  long hi = 0;
  try {
    lo = std::stol(text.substr(0, sep));
    hi = std::stol(text.substr(sep + 1));
  } catch (const std::exception&) {
    throw QueryError("invalid_range", "range must be MIN:MAX");
  }
  if (lo < 5 || lo > hi) throw QueryError("invalid_range", "need 5 <= MIN <= MAX");
  return {lo, hi};
}

int cmd_tables(const Options& opt) {
  const auto [lo, hi] = parse_range(opt.range);
  struct Row {
    long d;
    Rational big_n, small_n;
    tangency::ComponentCensus census;
  };
  std::vector<std::future<Row>> jobs;
  for (long d = lo; d <= hi; ++d)
    jobs.push_back(std::async(std::launch::async, [d] {
      const Rational big_n = tangency::N_virtual(d);
      const Rational small_n = tangency::n_from_N(big_n, Rational(d), tangency::assemble_bd(),
                                                  tangency::assemble_cd());
      return Row{d, big_n, small_n, tangency::census(d)};
    }));

  json out = json::array();
  std::ostringstream os;
  if (opt.format == "csv")
    os << "d,N_d,n_d,bitangents,B_points_per_bitangent,C_curves_per_bitangent\n";
  else
    os << "d\tN_d\tn_d\tbitangents\n";
  for (auto& job : jobs) {
    const Row r = job.get();
    using tangency::to_string;
    out.push_back({{"d", r.d},
                   {"N_d", to_string(r.big_n)},
                   {"n_d", to_string(r.small_n)},
                   {"bitangents", to_string(r.census.bitangents)},
                   {"B_points_per_bitangent", to_string(r.census.isolated_points_per_bitangent)},
                   {"C_curves_per_bitangent", to_string(r.census.curves_per_bitangent)}});
    if (opt.format == "csv")
      os << r.d << "," << to_string(r.big_n) << "," << to_string(r.small_n) << ","
         << to_string(r.census.bitangents) << ","
         << to_string(r.census.isolated_points_per_bitangent) << ","
         << to_string(r.census.curves_per_bitangent) << "\n";
    else
      os << r.d << "\t" << to_string(r.big_n) << "\t" << to_string(r.small_n) << "\t"
         << to_string(r.census.bitangents) << "\n";
  }
  emit(opt, out, os.str());
  return 0;
}

int cmd_verify(const Options& opt) {
  tangency::VerifyOptions vo;
  vo.stale_k3 = opt.stale_k3;
  const auto results = tangency::run_acceptance(vo);
  json out = json::array();
  std::ostringstream os;
  bool all = true;
  for (const auto& r : results) {
    out.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.passed},
                   {"detail", r.detail}, {"seconds", r.seconds}});
    os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " ("
       << r.seconds << " s): " << r.detail << "\n";
    all = all && r.passed;
  }
  emit(opt, out, os.str());
  return all ? 0 : 1;
}

void print_stats() {
  const auto s = tangency::DescendantEngine::shared().stats();
  std::clog << "descendant memo: " << s.entries << " entries, " << s.hits << " hits, "
            << s.misses << " misses\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-0 relative invariants of P^2 and conics 5-fold tangent to a plane curve"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--stats", opt.stats, "Print memo statistics to stderr");

  auto add_d = [&](CLI::App* sub) {
    sub->add_option("--d", opt.d, "Degree of the plane curve Y");
    sub->add_flag("--symbolic", opt.symbolic, "Keep d formal and return a polynomial");
  };

  auto* inv = app.add_subcommand("invariant", "Relative invariant of M_(m_1..m_n)(P^2, e)");
  inv->add_option("--e", opt.e, "Curve degree (1 or 2)");
  inv->add_option("--points", opt.points, "JSON list of [m, a, b] triples");
  inv->add_option("--query", opt.query, "Full JSON query envelope");
  add_d(inv);

  auto* big_n = app.add_subcommand("Nd", "Virtual number N_d");
  add_d(big_n);
  auto* small_n = app.add_subcommand("nd", "Enumerative number n_d");
  add_d(small_n);
  auto* poly = app.add_subcommand("poly", "N_d and n_d as polynomials in d");
  poly->add_option("--which", opt.which, "N, n or both");
  auto* k3 = app.add_subcommand("k3", "K3 series and the degree-6 identity");
  k3->add_option("--N", opt.series_terms, "Highest series coefficient");
  k3->add_flag("--stale-bitangents", opt.stale_k3, "Use 323 bitangents (failure check)");
  auto* jets = app.add_subcommand("jets", "Local multiplicity report");
  auto* tables = app.add_subcommand("tables", "Table of N_d, n_d and bitangents");
  tables->add_option("--range", opt.range, "MIN:MAX, MIN >= 5");
  auto* verify = app.add_subcommand("verify", "Run every acceptance criterion");
  verify->add_flag("--stale-k3", opt.stale_k3, "Force the K3 identity to fail");

  CLI11_PARSE(app, argc, argv);

  int code = 0;
  try {
    if (*inv) code = cmd_invariant(opt);
    else if (*big_n) code = cmd_count(opt, false);
    else if (*small_n) code = cmd_count(opt, true);
    else if (*poly) code = cmd_poly(opt);
    else if (*k3) code = cmd_k3(opt);
    else if (*jets) code = cmd_jets(opt);
    else if (*tables) code = cmd_tables(opt);
    else if (*verify) code = cmd_verify(opt);
  } catch (const QueryError& ex) {
    if (opt.format == "json")
      std::cout << json{{"error", {{"code", ex.code()}, {"message", ex.what()}}}}.dump(2)
                << "\n";
    else
      std::cerr << "error [" << ex.code() << "]: " << ex.what() << "\n";
    code = 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error [invalid_argument]: " << ex.what() << "\n";
    code = 2;
  }
  if (opt.stats) print_stats();
  return code;
}
