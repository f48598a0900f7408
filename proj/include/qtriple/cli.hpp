#pragma once

// Command-line front end. run_cli() takes the arguments after the program
// name and writes records to `out`; it returns the process exit code:
// 0 all requested checks passed, 1 a mathematical mismatch, 2 a usage or
// domain error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtriple/catalog.hpp"
#include "qtriple/identity.hpp"
#include "qtriple/repcount.hpp"
#include "qtriple/series.hpp"
#include "qtriple/theta.hpp"

namespace qtriple::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

enum class Format { text, json };

struct Record {
  std::string cmd;
  json params = json::object();
  std::string status = "pass";  // pass | fail | error
  json payload = json::object();
  double elapsed_ms = 0;
};

inline json exponent_json(HalfExp e) {
  if (e.is_whole()) return e.units / 2;
  return to_string(e);
}

inline json series_terms_json(const HalfPowerSeries& s, HalfExp through) {
  json out = json::array();
  for (const auto& [e, c] : s.terms())
    if (e <= through) out.push_back({exponent_json(e), c});
  return out;
}

inline json mismatch_json(const std::optional<Mismatch>& m) {
  if (!m) return nullptr;
  return json{{"exponent", exponent_json(m->exponent)}, {"lhs", m->lhs}, {"rhs", m->rhs}};
}

inline json report_json(const IdentityReport& r) {
  return json{{"equal", r.equal},
              {"checked_through", exponent_json(r.checked_through)},
              {"rhs_term_count", r.rhs_term_count},
              {"mismatch", mismatch_json(r.mismatch)}};
}

namespace detail {

inline std::string fmt_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << ms;
  return s.str();
}

inline std::string compact(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline void print_text(std::ostream& out, const Record& r) {
  std::string status = r.status;
  std::transform(status.begin(), status.end(), status.begin(), [](unsigned char c) { return std::toupper(c); });
  out << "[" << status << "] " << r.cmd;
  for (const auto& [k, v] : r.params.items()) out << " " << k << "=" << compact(v);
  out << "  (" << fmt_ms(r.elapsed_ms) << " ms)\n";
  for (const auto& [k, v] : r.payload.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << "  " << k << ":\n";
      for (const auto& row : v) out << "    " << row.dump() << "\n";
    } else {
      out << "  " << k << ": " << compact(v) << "\n";
    }
  }
}

}  // namespace detail

inline void emit(std::ostream& out, Format f, const Record& r) {
  if (f == Format::json) {
    json j{{"cmd", r.cmd}, {"params", r.params}, {"status", r.status}, {"payload", r.payload}, {"elapsed_ms", r.elapsed_ms}};
    out << j.dump() << "\n";
  } else {
    detail::print_text(out, r);
  }
}

// Runs `body`, timing it and converting domain errors into an error record.
inline Record timed(const std::string& cmd, json params, const std::function<void(Record&)>& body) {
  Record r;
  r.cmd = cmd;
  r.params = std::move(params);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = "error";
    r.payload = json{{"error", e.what()}};
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline int exit_code_for(const std::vector<Record>& recs) {
  int code = exit_pass;
  for (const auto& r : recs) {
    if (r.status == "error") return exit_usage;
    if (r.status == "fail") code = exit_fail;
  }
  return code;
}

inline Sign parse_sign(const std::string& s) {
  if (s == "1" || s == "+1" || s == "+") return Sign::plus;
  if (s == "-1" || s == "-") return Sign::minus;
  throw DomainError("sign must be 1 or -1, got '" + s + "'");
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

inline std::int64_t parse_i64(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("not an integer: '" + s + "'");
  return v;
}

// ---------------------------------------------------------------------------
// Commands

inline Record cmd_expand(const std::string& theta, const std::string& name, std::int64_t scale_by, const std::string& expr,
                         std::int64_t order) {
  json params{{"order", order}};
  if (!theta.empty()) params["theta"] = theta;
  if (!name.empty()) params["name"] = name, params["scale"] = scale_by;
  if (!expr.empty()) params["expr"] = expr;
  return timed("expand", params, [&](Record& r) {
    const int chosen = int(!theta.empty()) + int(!name.empty()) + int(!expr.empty());
    if (chosen != 1) throw DomainError("give exactly one of --theta, --name or --expr");
    if (order < 0) throw DomainError("--order must be >= 0");
    const HalfExp through = HalfExp::whole(order);
    HalfPowerSeries s(through);
    if (!theta.empty()) {
      const auto parts = split(theta, ',');
      if (parts.size() != 3) throw DomainError("--theta takes EPS,G,H");
      const ThetaArg arg{parse_sign(parts[0]), HalfExp::whole(parse_i64(parts[1])), HalfExp::whole(parse_i64(parts[2]))};
      s = theta_expand(arg, through);
      r.payload["theta"] = to_string(arg);
    } else if (!name.empty()) {
      const auto which = parse_special(name);
      if (!which) throw DomainError("unknown function name '" + name + "'");
      const ThetaArg arg = theta_special(*which, scale_by);
      s = theta_expand(arg, through);
      r.payload["theta"] = to_string(arg);
    } else {
      s = expand_sum(parse_theta_sum(expr), through);
    }
    r.payload["coefficients"] = series_terms_json(s, through);
  });
}

inline Record identity_record(const std::string& cmd, json params, const std::function<IdentityReport()>& run) {
  return timed(cmd, std::move(params), [&](Record& r) {
    const auto rep = run();
    r.status = rep.equal ? "pass" : "fail";
    r.payload = report_json(rep);
  });
}

inline Record cmd_verify_thm1(const Thm1Params& p, std::int64_t order) {
  json params{{"k", p.k}, {"r", p.r}, {"g", p.g}, {"h", p.h}, {"u", p.u}, {"v", p.v}, {"i", p.i}, {"j", p.j},
              {"eps", {value(p.eps1), value(p.eps2), value(p.eps3)}}, {"order", order}};
  return identity_record("verify thm1", params, [&] { return thm1_verify(p, HalfExp::whole(order)); });
}

inline Record cmd_verify_thm2(const Thm2Params& p, std::int64_t order) {
  json params{{"k", p.k}, {"r", p.r}, {"s", p.s}, {"t", p.t}, {"i", p.i}, {"j", p.j}, {"eps", value(p.eps)}, {"order", order}};
  return identity_record("verify thm2", params, [&] { return thm2_verify(p, HalfExp::whole(order)); });
}

inline Record identity_entry_record(const std::string& cmd, const IdentityEntry& e, std::int64_t order) {
  json params = to_json(e);
  if (params.value("citation", "").empty()) params.erase("citation");
  params["order"] = order;
  return timed(cmd, params, [&](Record& r) {
    const auto o = run_identity(e, HalfExp::whole(order));
    r.status = o.passed ? "pass" : "fail";
    r.payload = json{{"rhs_term_count", o.rhs_term_count}, {"mismatch", mismatch_json(o.mismatch)}};
    if (!o.note.empty()) r.payload["failed_check"] = o.note;
  });
}

// cor1..cor4 with k, r; clp2.1..clp2.8 with m.
inline Record cmd_verify_corollary(const std::string& id, std::int64_t k, std::int64_t r, std::int64_t m, std::int64_t order) {
  IdentityEntry e;
  e.id = id;
  try {
    if (id.size() == 4 && id.substr(0, 3) == "cor" && id[3] >= '1' && id[3] <= '4') {
      e.target = CorollaryRef{id[3] - '0', k, r};
    } else if (id.size() == 6 && id.substr(0, 5) == "clp2." && id[5] >= '1' && id[5] <= '8') {
      e.target = Clp2Ref{id[5] - '0', m};
    } else {
      throw DomainError("corollary id must be cor1..cor4 or clp2.1..clp2.8");
    }
  } catch (const DomainError& ex) {
    return timed("verify corollary", json{{"id", id}}, [&](Record&) { throw ex; });
  }
  return identity_entry_record("verify corollary", e, order);
}

inline json counterexamples_json(const std::vector<Counterexample>& c, std::size_t limit = 10) {
  json out = json::array();
  for (std::size_t i = 0; i < c.size() && i < limit; ++i) out.push_back({{"N", c[i].N}, {"lhs", c[i].lhs}, {"rhs", c[i].rhs}});
  return out;
}

// Empirical relations never fail a run; their outcome is reported as data.
inline Record relation_record(const RelationStatement& rel, std::int64_t n_max, CountTables& tables) {
  json params{{"id", rel.id}, {"statement", to_string(rel)}, {"nmax", n_max}, {"status", to_string(rel.status)}};
  if (rel.residue) params["residue"] = {rel.residue->modulus, rel.residue->residue};
  return timed("verify relation", params, [&](Record& r) {
    const auto bad = verify_relation(rel, n_max, tables);
    r.payload["holds"] = bad.empty();
    r.payload["failures"] = bad.size();
    if (!bad.empty()) r.payload["counterexamples"] = counterexamples_json(bad);
    r.status = (bad.empty() || rel.status == RelationStatus::empirical) ? "pass" : "fail";
  });
}

inline Record classical_record(const std::string& id, std::int64_t n_max, CountTables& tables) {
  return timed("verify classical", json{{"id", id}, {"nmax", n_max}}, [&](Record& r) {
    const auto rep = classical_check(id, n_max, tables);
    r.payload["claim"] = rep.claim;
    json parts = json::array();
    for (const auto& p : rep.parts) parts.push_back({{"label", p.label}, {"discrepancies", p.discrepancies}});
    r.payload["parts"] = parts;
    r.status = rep.passed() ? "pass" : "fail";
  });
}

inline Record scan_record(const MixedSumSpec& spec, std::int64_t modulus, std::int64_t residue, std::int64_t n_max,
                          const std::string& expect, CountTables& tables, const std::string& label = "") {
  json params{{"form", to_string(spec)}, {"modulus", modulus}, {"residue", residue}, {"nmax", n_max}, {"expect", expect}};
  if (!label.empty()) params["claim"] = label;
  return timed("scan", params, [&](Record& r) {
    if (expect != "empty" && expect != "covered") throw DomainError("--expect must be empty or covered");
    const auto hit = nonrep_scan(spec, modulus, residue, n_max, tables);
    if (expect == "empty") {
      r.payload["represented"] = hit;
      r.status = hit.empty() ? "pass" : "fail";
    } else {
      std::vector<std::int64_t> missing;
      std::size_t at = 0;
      for (std::int64_t N = residue; N <= n_max; N += modulus) {
        while (at < hit.size() && hit[at] < N) ++at;
        if (N > 0 && (at == hit.size() || hit[at] != N)) missing.push_back(N);
      }
      r.payload["represented_count"] = hit.size();
      r.payload["unrepresented"] = missing;
      r.status = missing.empty() ? "pass" : "fail";
    }
  });
}

inline Record cmd_count(const std::string& form, std::int64_t lo, std::int64_t hi, const std::string& method) {
  json params{{"form", form}, {"method", method}};
  if (lo == hi) {
    params["n"] = lo;
  } else {
    params["range"] = std::to_string(lo) + ".." + std::to_string(hi);
  }
  return timed("count", params, [&](Record& r) {
    if (method != "enumerate" && method != "series" && method != "both") throw DomainError("--method must be enumerate, series or both");
    if (hi < lo) throw DomainError("empty range");
    const auto spec = parse_form(form);
    std::optional<HalfPowerSeries> series;
    if (method != "enumerate") series = count_series(spec, std::max<std::int64_t>(hi, 0));
    json values = json::array();
    bool agree = true;
    for (std::int64_t N = lo; N <= hi; ++N) {
      json row{{"N", N}};
      if (method != "series") row["enumerate"] = count_enumerate(spec, N);
      if (method != "enumerate") row["series"] = series_count(*series, N);
      if (method == "both") {
        const bool same = row["enumerate"] == row["series"];
        row["agree"] = same;
        agree = agree && same;
      }
      values.push_back(row);
    }
    r.payload["values"] = values;
    if (method == "both") r.payload["methods_agree"] = agree;
    r.status = agree ? "pass" : "fail";
  });
}

inline std::int64_t default_classical_nmax(const std::string& id) {
  if (id == "gauss3tri") return 5000;
  if (id == "liouville" || id == "sun_sq_sq_t" || id == "sun_sq_t_t") return 2000;
  return 4096;
}

inline std::vector<RelationStatement> load_relations(const std::string& extra_catalog) {
  auto rels = builtin_relations();
  if (!extra_catalog.empty()) {
    std::ifstream in(extra_catalog);
    if (!in) throw DomainError("cannot read catalog file '" + extra_catalog + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    for (auto& r : parse_relation_catalog(buf.str())) rels.push_back(std::move(r));
  }
  return rels;
}

struct AllOptions {
  std::int64_t order = 150;
  std::int64_t nmax = 1000;
  std::int64_t scan_nmax = 10000;
  std::int64_t classical_nmax = -1;  // per-check defaults when negative
  std::string catalog;
};

inline std::vector<Record> cmd_verify_all(const AllOptions& o) {
  std::vector<Record> recs;
  for (const auto& e : builtin_identities()) recs.push_back(identity_entry_record("verify identity", e, o.order));
  CountTables tables;
  std::vector<RelationStatement> rels;
  try {
    rels = load_relations(o.catalog);
  } catch (const std::exception& ex) {
    recs.push_back(timed("verify relation", json{{"catalog", o.catalog}}, [&](Record&) { throw; }));
    (void)ex;
  }
  for (const auto& rel : rels) recs.push_back(relation_record(rel, o.nmax, tables));
  for (const auto& c : builtin_nonrep_claims())
    recs.push_back(scan_record(c.spec, c.modulus, c.residue, o.scan_nmax, "empty", tables, c.description));
  for (const auto& id : classical_ids())
    recs.push_back(classical_record(id, o.classical_nmax >= 0 ? o.classical_nmax : default_classical_nmax(id), tables));
  return recs;
}

inline Record summary_record(const std::vector<Record>& recs, double elapsed_ms) {
  Record s;
  s.cmd = "verify all";
  std::map<std::string, std::array<int, 3>> by_cmd;
  int empirical_fail = 0;
  for (const auto& r : recs) {
    auto& row = by_cmd[r.cmd];
    ++row[r.status == "pass" ? 0 : (r.status == "fail" ? 1 : 2)];
    if (r.cmd == "verify relation" && r.params.value("status", "") == "empirical" && !r.payload.value("holds", true))
      ++empirical_fail;
  }
  json table = json::array();
  for (const auto& [cmd, row] : by_cmd) table.push_back({{"check", cmd}, {"pass", row[0]}, {"fail", row[1]}, {"error", row[2]}});
  s.payload["summary"] = table;
  s.payload["empirical_relations_not_holding"] = empirical_fail;
  const int code = exit_code_for(recs);
  s.status = code == exit_pass ? "pass" : (code == exit_fail ? "fail" : "error");
  s.elapsed_ms = elapsed_ms;
  return s;
}

// ---------------------------------------------------------------------------
// Argument parsing

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Theta-function identity and representation-count verifier"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  // expand
  auto* expand = app.add_subcommand("expand", "Expand a theta function");
  std::string theta, name, expr;
  std::int64_t scale_by = 1, order = 20;
  expand->add_option("--theta", theta, "EPS,G,H for f(EPS q^G, EPS q^H)");
  expand->add_option("--name", name, "phi, psi, f, X or Y");
  expand->add_option("--scale", scale_by, "Evaluate the named function at q^SCALE");
  expand->add_option("--expr", expr, "Sum of theta products, e.g. \"psi(q)^2*phi(q)\"");
  expand->add_option("--order", order, "Highest power of q")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Verify identities and relations");
  verify->require_subcommand(1);
  std::int64_t k = 2, r = 1, g = 0, h = 0, u = 0, v = 0, i = 0, j = 0, s = 0, t = 0, m = 1, nmax = 1000;
  std::string eps = "1,1,1", id, catalog;
  std::int64_t v_order = 150;

  auto* v1 = verify->add_subcommand("thm1", "Three-theta decomposition for one parameter set");
  v1->set_help_flag("--help");  // --h is a parameter here
  for (auto [flag, ref] : std::initializer_list<std::pair<const char*, std::int64_t*>>{
           {"--k", &k}, {"--r", &r}, {"--g", &g}, {"--h", &h}, {"--u", &u}, {"--v", &v}, {"--i", &i}, {"--j", &j}})
    v1->add_option(flag, *ref)->required();
  v1->add_option("--eps", eps, "E1,E2,E3");
  v1->add_option("--order", v_order);

  auto* v2 = verify->add_subcommand("thm2", "Two-theta decomposition for one parameter set");
  std::string eps2 = "1";
  for (auto [flag, ref] : std::initializer_list<std::pair<const char*, std::int64_t*>>{
           {"--k", &k}, {"--r", &r}, {"--s", &s}, {"--t", &t}, {"--i", &i}, {"--j", &j}})
    v2->add_option(flag, *ref)->required();
  v2->add_option("--eps", eps2, "1 or -1");
  v2->add_option("--order", v_order);

  auto* vc = verify->add_subcommand("corollary", "cor1..cor4 (with --k --r) or clp2.1..clp2.8 (with --m)");
  vc->add_option("--id", id)->required();
  vc->add_option("--k", k);
  vc->add_option("--r", r);
  vc->add_option("--m", m);
  vc->add_option("--order", v_order);

  auto* vi = verify->add_subcommand("identity", "Entries of the identity catalog, by id or id prefix");
  vi->add_option("--id", id)->required();
  vi->add_option("--order", v_order);

  auto* vr = verify->add_subcommand("relation", "Entries of the relation catalog, by id or id prefix");
  vr->add_option("--id", id)->required();
  vr->add_option("--nmax", nmax);
  vr->add_option("--catalog", catalog, "Extra relation catalog (JSON)");

  auto* vk = verify->add_subcommand("classical", "Classical representation facts");
  vk->add_option("--id", id)->required();
  std::int64_t classical_nmax = -1;
  vk->add_option("--nmax", classical_nmax);

  auto* va = verify->add_subcommand("all", "Every built-in check");
  AllOptions all;
  va->add_option("--order", all.order);
  va->add_option("--nmax", all.nmax);
  va->add_option("--scan-nmax", all.scan_nmax);
  va->add_option("--classical-nmax", all.classical_nmax);
  va->add_option("--catalog", all.catalog, "Extra relation catalog (JSON)");

  // count
  auto* count = app.add_subcommand("count", "Representation numbers");
  std::string form, range, method = "enumerate";
  std::int64_t n = -1;
  count->add_option("--form", form, "NAME(a1,a2,a3)")->required();
  auto* n_opt = count->add_option("--n", n);
  auto* range_opt = count->add_option("--range", range, "A..B");
  n_opt->excludes(range_opt);
  count->add_option("--method", method)->check(CLI::IsMember({"enumerate", "series", "both"}));

  // scan
  auto* scan = app.add_subcommand("scan", "List represented N in a residue class");
  std::int64_t modulus = 1, residue = 0, scan_nmax = 1000;
  std::string expect = "empty";
  scan->add_option("--form", form)->required();
  scan->add_option("--modulus", modulus)->required();
  scan->add_option("--residue", residue)->required();
  scan->add_option("--nmax", scan_nmax)->required();
  scan->add_option("--expect", expect, "empty (no N represented) or covered (every positive N represented)")
      ->check(CLI::IsMember({"empty", "covered"}));

  // catalog
  auto* cat = app.add_subcommand("catalog", "Print a built-in catalog as JSON");
  std::string which = "relations";
  cat->add_option("which", which)->check(CLI::IsMember({"relations", "identities", "scans"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }
  const Format fmt = format == "json" ? Format::json : Format::text;

  std::vector<Record> recs;
  try {
    if (*expand) {
      recs.push_back(cmd_expand(theta, name, scale_by, expr, order));
    } else if (*v1) {
      const auto e = split(eps, ',');
      if (e.size() != 3) throw DomainError("--eps takes E1,E2,E3");
      recs.push_back(cmd_verify_thm1(Thm1Params{k, r, g, h, u, v, i, j, parse_sign(e[0]), parse_sign(e[1]), parse_sign(e[2])}, v_order));
    } else if (*v2) {
      recs.push_back(cmd_verify_thm2(Thm2Params{k, r, s, t, i, j, parse_sign(eps2)}, v_order));
    } else if (*vc) {
      recs.push_back(cmd_verify_corollary(id, k, r, m, v_order));
    } else if (*vi) {
      const auto sel = select_by_id(builtin_identities(), id);
      if (sel.empty()) throw DomainError("no identity with id '" + id + "'");
      for (const auto* e : sel) recs.push_back(identity_entry_record("verify identity", *e, v_order));
    } else if (*vr) {
      const auto rels = load_relations(catalog);
      const auto sel = select_by_id(rels, id);
      if (sel.empty()) throw DomainError("no relation with id '" + id + "'");
      CountTables tables;
      for (const auto* rel : sel) recs.push_back(relation_record(*rel, nmax, tables));
    } else if (*vk) {
      CountTables tables;
      recs.push_back(classical_record(id, classical_nmax >= 0 ? classical_nmax : default_classical_nmax(id), tables));
    } else if (*va) {
      const auto t0 = std::chrono::steady_clock::now();
      recs = cmd_verify_all(all);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      for (const auto& rec : recs) emit(out, fmt, rec);
      const auto sum = summary_record(recs, ms);
      emit(out, fmt, sum);
      return exit_code_for(recs);
    } else if (*count) {
      std::int64_t lo = n, hi = n;
      if (!range.empty()) {
        const auto dots = range.find("..");
        if (dots == std::string::npos) throw DomainError("--range takes A..B");
        lo = parse_i64(range.substr(0, dots));
        hi = parse_i64(range.substr(dots + 2));
      } else if (n < 0 && n_opt->count() == 0) {
        throw DomainError("give --n or --range");
      }
      recs.push_back(cmd_count(form, lo, hi, method));
    } else if (*scan) {
      CountTables tables;
      MixedSumSpec spec;
      try {
        spec = parse_form(form);
      } catch (const DomainError& e) {
        recs.push_back(timed("scan", json{{"form", form}}, [&](Record&) { throw; }));
        (void)e;
      }
      if (recs.empty()) recs.push_back(scan_record(spec, modulus, residue, scan_nmax, expect, tables));
    } else if (*cat) {
      json dump = json::array();
      if (which == "relations") {
        for (const auto& rel : builtin_relations()) dump.push_back(to_json(rel));
      } else if (which == "identities") {
        for (const auto& e : builtin_identities()) dump.push_back(to_json(e));
      } else {
        for (const auto& c : builtin_nonrep_claims())
          dump.push_back({{"id", c.id}, {"form", to_string(c.spec)}, {"modulus", c.modulus}, {"residue", c.residue}, {"claim", c.description}});
      }
      out << dump.dump(1) << "\n";
      return exit_pass;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  for (const auto& rec : recs) emit(out, fmt, rec);
  return exit_code_for(recs);
}

}  // namespace qtriple::cli
