#pragma once

// Command-line front end: parses a subcommand, runs it, and emits a report
// envelope {command, parameters, config, result, deviations} as a table,
// JSON, JSON lines or CSV.
//
// Exit codes: 0 success, 2 computed with deviations from the predicted
// outcome, 1 error, 64 usage.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chebcurve/autgroup.hpp"
#include "chebcurve/json.hpp"

namespace chebcurve::cli {

using json::Json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDeviation = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kConfigEnv = "CHEBCURVE_CONFIG";

struct RunConfig {
  std::uint64_t enumeration_cap = std::uint64_t{1} << 22;
  unsigned extension_cap = 24;
  unsigned jobs = 1;
  std::string output_format = "table";
  std::uint64_t seed = 1;

  Limits limits() const { return {enumeration_cap, extension_cap}; }

  void validate() const {
    if (enumeration_cap == 0 || extension_cap == 0 || jobs == 0) throw DomainError("caps and jobs must be positive");
    if (output_format != "table" && output_format != "json" && output_format != "jsonl" && output_format != "csv")
      throw DomainError("unknown output format " + output_format);
  }

  Json snapshot() const {
    Json j;
    j["enumeration_cap"] = enumeration_cap;
    j["extension_cap"] = extension_cap;
    j["jobs"] = jobs;
    j["output_format"] = output_format;
    j["seed"] = seed;
    j["field_convention"] =
        "defining polynomial: lexicographically first monic irreducible, coefficients (c0, c1, ...) compared "
        "with c0 first; element order: index sum c_i p^i";
    return j;
  }
};

/// Overrides the defaults with the JSON object in file `path`.
inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  const Json j = Json::parse(in);
  RunConfig c;
  c.enumeration_cap = j.value("enumeration_cap", c.enumeration_cap);
  c.extension_cap = j.value("extension_cap", c.extension_cap);
  c.jobs = j.value("jobs", c.jobs);
  c.output_format = j.value("output_format", c.output_format);
  c.seed = j.value("seed", c.seed);
  c.validate();
  return c;
}

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json result = Json::object();
  std::vector<std::string> deviations;
  /// Pre-rendered rows for csv / table output of grid commands.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  /// One JSON object per line in jsonl mode (scan).
  std::vector<Json> stream;
};

namespace detail {

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoll(item, &used));
    if (used != item.size()) throw DomainError("not an integer: " + item);
  }
  if (out.empty()) throw DomainError("empty coefficient list");
  return out;
}

inline std::uint32_t prime_of(std::uint64_t q) {
  for (std::uint64_t l = 2; l * l <= q; ++l)
    if (q % l == 0) return static_cast<std::uint32_t>(l);
  if (q < 2) throw DomainError(std::to_string(q) + " is not a prime power");
  return static_cast<std::uint32_t>(q);
}

inline Json inflection_json(const InflectionReport& r) {
  Json j;
  j["field"] = json::field(r.search_field);
  j["count"] = r.points.size();
  j["predicted_case"] = r.predicted_case;
  j["predicted_count"] = r.predicted_count;
  j["observed_case"] = r.observed_case;
  j["all_on_predicted_lines"] = r.all_on_predicted_lines;
  j["field_covers_prediction"] = r.field_covers_prediction;
  Json pts = Json::array();
  for (const auto& P : r.points) pts.push_back(json::point(P));
  j["witnesses"] = pts;
  return j;
}

inline Json aut_json(const AutReport& r) {
  Json j;
  j["case"] = r.inflection.fermat ? "FermatCase" : "Generic";
  if (r.inflection.fermat) j["fermat_exponent"] = r.inflection.exponent;
  j["kernel_order"] = r.kernel_order;
  if (r.image) j["image"] = json::fingerprint(*r.image);
  j["total_order"] = r.total_order;
  j["structure_label"] = r.structure_label;
  if (r.kernel_central) j["kernel_central"] = *r.kernel_central;
  if (r.abelian) j["abelian"] = *r.abelian;
  if (r.extension_splits) j["extension_splits"] = *r.extension_splits;
  if (r.splitting_field) j["splitting_field"] = json::field(r.splitting_field);
  if (r.lift_field) j["lift_field"] = json::field(r.lift_field);
  Json w = Json::array();
  for (const auto& a : r.witnesses) w.push_back(json::automorphism(a));
  j["witnesses"] = w;
  if (r.fermat) {
    Json f;
    f["q"] = r.fermat->q;
    f["field"] = json::field(r.fermat->field);
    f["a"] = json::element(r.fermat->a);
    f["identity"] = r.fermat->identity;
    f["samples_checked"] = r.fermat->samples.size();
    f["verified"] = r.fermat->verified();
    j["fermat_iso"] = f;
  }
  j["notes"] = r.notes;
  return j;
}

inline std::string render_scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void render_table(const Json& j, std::ostream& out, int indent) {
  for (const auto& [k, v] : j.items()) {
    out << std::string(indent, ' ') << k << ":";
    if (v.is_object() && !v.empty()) {
      out << "\n";
      render_table(v, out, indent + 2);
    } else {
      out << " " << render_scalar(v) << "\n";
    }
  }
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

}  // namespace detail

// Subcommand bodies. Each fills `rep` and returns nothing; deviations go
// into rep.deviations.

inline void run_cheb(Report& rep, unsigned d, std::uint32_t p, unsigned m) {
  const Field F = make_field(p, m);
  const ChebSpec spec(d, F);
  const Poly phi = cheb(spec);
  rep.parameters = {{"d", d}, {"p", p}, {"m", m}};
  rep.result["field"] = json::field(F);
  rep.result["coeffs"] = json::coefficients(phi);
  rep.result["separable"] = is_separable(phi);
  rep.result["laurent_identity"] = verify_laurent_identity(spec);
  Json closed = Json::array();
  for (unsigned j = 0; j <= d / 2; ++j) closed.push_back(cheb_coefficient_exact(d, j).str());
  rep.result["closed_form_integer_coefficients"] = closed;
  rep.header = {"degree", "coefficient"};
  for (std::size_t i = phi.coeffs().size(); i-- > 0;)
    if (!phi.coeffs()[i].is_zero()) rep.rows.push_back({std::to_string(i), phi.coeffs()[i].to_string()});
}

inline void run_inflect(Report& rep, unsigned d, std::uint32_t p, std::optional<unsigned> ext, const Limits& limits) {
  const Field Fp = make_field(p, 1);
  const PlaneCurve c = PlaneCurve::chebyshev(d, Fp);
  unsigned m = ext.value_or(0);
  if (!ext) {
    // Smallest multiple of the splitting degree over which every predicted point is rational.
    const unsigned k = splitting_degree(c.g(), limits);
    for (m = k; exceptional_exponent(d, p); m += k) {
      if (m > limits.extension_cap) throw CapExceeded("no search field within the extension cap");
      const Field K = make_field(p, m);
      if (chebcurve::detail::count_kth_roots(FieldElement::from_int(K, 2), d, *K->size()) == d) break;
    }
  }
  rep.parameters = {{"d", d}, {"p", p}, {"ext", m}};
  const auto r = total_inflections(c, make_field(p, m), limits);
  rep.result = detail::inflection_json(r);
  if (r.deviation) rep.deviations.push_back(*r.deviation);
}

inline void run_count(Report& rep, unsigned d, std::uint64_t q, std::optional<unsigned> m, const std::string& family,
                      const Limits& limits) {
  const std::uint32_t p = detail::prime_of(q);
  const Field Fp = make_field(p, 1);
  const Field K = make_field(p, chebcurve::detail::log_p(q, p));
  rep.parameters = {{"d", d}, {"q", q}, {"family", family}};
  if (m) rep.parameters["m"] = *m;
  std::uint64_t n, g;
  if (!m && family == "cheb") {
    const PlaneCurve c = PlaneCurve::chebyshev(d, Fp);
    n = count_points(c, K, limits);
    g = c.genus();
  } else {
    const unsigned e = m.value_or(d);
    const auto c = family == "fermat" ? SuperellipticCurve::fermat(e, d, Fp) : SuperellipticCurve::chebyshev(e, d, Fp);
    n = count_points(c, K, limits);
    g = c.genus();
  }
  rep.result["field"] = json::field(K);
  rep.result["count"] = n;
  rep.result["genus"] = g;
}

inline void run_maximal(Report& rep, unsigned d, std::uint64_t q, std::optional<unsigned> m, const std::string& family,
                        const Limits& limits) {
  const std::uint32_t p = detail::prime_of(q);
  const Field Fp = make_field(p, 1);
  rep.parameters = {{"d", d}, {"q", q}, {"family", family}};
  if (m) rep.parameters["m"] = *m;
  MaximalityVerdict v;
  if (!m && family == "cheb") {
    v = is_maximal(PlaneCurve::chebyshev(d, Fp), q, limits);
  } else {
    const unsigned e = m.value_or(d);
    v = is_maximal(family == "fermat" ? SuperellipticCurve::fermat(e, d, Fp) : SuperellipticCurve::chebyshev(e, d, Fp),
                   q, limits);
  }
  rep.result = json::verdict(v);
}

inline void run_stab(Report& rep, unsigned d, std::uint32_t p, const Limits& limits) {
  rep.parameters = {{"d", d}, {"p", p}};
  if (p == 2 || d % p == 0) throw HypothesisViolation("p divides 2d");
  const Field K = make_field(p, cheb_splitting_degree(d, p));
  std::vector<ProjPoint1> S;
  for (const auto& z : chebyshev_roots(d, K, limits)) S.push_back(ProjPoint1::finite(z));
  const auto stab = setwise_stabilizer(S);
  const auto fp = fingerprint(stab);
  rep.result["field"] = json::field(K);
  rep.result["order"] = fp.order;
  rep.result["fingerprint"] = json::fingerprint(fp);
  Json gens = Json::array();
  for (std::size_t i : chebcurve::detail::greedy_generators(stab)) gens.push_back(json::moebius(stab[i]));
  rep.result["generators"] = gens;
  if (auto t = predicted_total_order(d, p); t && !exceptional_exponent(d, p) && fp.order * d != *t)
    rep.deviations.push_back("stabilizer order " + std::to_string(fp.order) + ", predicted " + std::to_string(*t / d));
}

inline void run_aut(Report& rep, unsigned d, std::uint32_t p, const std::optional<std::string>& g, const Limits& limits) {
  rep.parameters = {{"d", d}, {"p", p}};
  std::optional<Poly> gp;
  if (g) {
    rep.parameters["g"] = *g;
    gp = Poly::from_ints(make_field(p, 1), detail::parse_int_list(*g));
  }
  const AutReport r = compute_aut(d, p, gp, limits);
  rep.result = detail::aut_json(r);
  if (!gp)
    if (auto t = predicted_total_order(d, p); t && *t != r.total_order)
      rep.deviations.push_back("total order " + std::to_string(r.total_order) + ", predicted " + std::to_string(*t));
}

inline void run_scan(Report& rep, unsigned d_min, unsigned d_max, std::uint32_t p_max, unsigned jobs,
                     const Limits& limits) {
  rep.parameters = {{"d_min", d_min}, {"d_max", d_max}, {"p_max", p_max}};
  const auto cells = scan_expectation(d_min, d_max, p_max, jobs, limits);
  rep.header = {"d", "p", "eligible", "splitting_degree", "stabilizer_order", "fingerprint", "deviation"};
  std::size_t eligible = 0, deviating = 0, skipped = 0;
  Json list = Json::array();
  for (const auto& c : cells) {
    Json j;
    j["d"] = c.d;
    j["p"] = c.p;
    j["eligible"] = c.eligible;
    j["splitting_degree"] = c.eligible && !c.skipped ? Json(c.splitting_degree) : Json(nullptr);
    j["stabilizer_order"] = c.eligible && !c.skipped ? Json(c.stabilizer_order) : Json(nullptr);
    j["fingerprint"] = c.fingerprint;
    j["deviation"] = c.deviation;
    if (!c.reason.empty()) j["note"] = c.reason;
    rep.stream.push_back(j);
    list.push_back(j);
    rep.rows.push_back({std::to_string(c.d), std::to_string(c.p), c.eligible ? "true" : "false",
                        c.eligible && !c.skipped ? std::to_string(c.splitting_degree) : "",
                        c.eligible && !c.skipped ? std::to_string(c.stabilizer_order) : "", c.fingerprint,
                        c.skipped ? "skipped" : c.deviation ? "true" : "false"});
    eligible += c.eligible;
    skipped += c.skipped;
    if (c.deviation) {
      ++deviating;
      rep.deviations.push_back("d = " + std::to_string(c.d) + ", p = " + std::to_string(c.p) + ": stabilizer " +
                               c.fingerprint + " of order " + std::to_string(c.stabilizer_order));
    }
  }
  rep.result["cells"] = list;
  rep.result["eligible"] = eligible;
  rep.result["deviating"] = deviating;
  rep.result["skipped"] = skipped;
}

inline void run_verify(Report& rep, const std::string& which, unsigned d, std::uint32_t p, unsigned m) {
  rep.parameters = {{"which", which}};
  if (which == "prop31") {
    rep.parameters["d"] = d;
    rep.parameters["p"] = p;
    const bool ok = verify_prop31_identity(d, p);
    const bool predicted = p != 2 && exceptional_exponent(d, p).has_value();
    rep.result["identity"] = ok;
    rep.result["hypothesis_2d_eq_q_plus_1"] = predicted;
    if (predicted && !ok) rep.deviations.push_back("identity fails although 2d = q + 1");
  } else if (which == "prop315") {
    rep.parameters["d"] = d;
    rep.parameters["p"] = p;
    const auto r = verify_prop315_identity(d, p);
    const bool predicted = chebcurve::detail::is_prime_power_of(4 * std::uint64_t{d} - 1, p);
    rep.result["identity"] = r.holds();
    rep.result["polynomial_identity"] = r.polynomial_identity;
    rep.result["scalar_identity"] = r.scalar_identity;
    rep.result["hypothesis_4d_eq_q_plus_1"] = predicted;
    if (predicted && !r.holds()) rep.deviations.push_back("identity fails although 4d = q + 1");
  } else if (which == "remark311") {
    Json list = Json::array();
    for (const auto& w : remark311_witnesses()) {
      Json j;
      j["beta"] = json::element(w.beta);
      j["verified"] = w.verified;
      j["order"] = w.order;
      if (w.order3_lift) {
        j["order3_lift"] = json::automorphism(*w.order3_lift);
        j["order3_lift_verified"] = verify_automorphism(4, cheb_poly(4, make_field(5, 4)), *w.order3_lift);
      }
      list.push_back(j);
      if (!w.verified || w.order != 3)
        rep.deviations.push_back("beta = " + w.beta.to_string() + ": verified " + (w.verified ? "true" : "false") +
                                 ", order " + std::to_string(w.order));
    }
    rep.result["field"] = json::field(make_field(5, 4));
    rep.result["witnesses"] = list;
  } else if (which == "prop42") {
    rep.parameters["n"] = d;
    rep.parameters["m"] = m;
    rep.parameters["p"] = p;
    const CurveAutomorphism a = order3_aut(d, m, p);
    rep.result["automorphism"] = json::automorphism(a);
    rep.result["verified"] = true;
    rep.result["order"] = order(a);
  } else {
    throw DomainError("unknown identity " + which);
  }
}

inline void run_jinv(Report& rep, const std::string& coeffs, std::uint32_t p) {
  rep.parameters = {{"coeffs", coeffs}, {"p", p}};
  const auto c = detail::parse_int_list(coeffs);
  if (c.size() != 5) throw DomainError("jinv needs five coefficients a,b,c,d,e");
  const Field F = make_field(p, 1);
  auto k = [&](std::int64_t v) { return FieldElement::from_int(F, v); };
  const auto j = j_invariant_quartic(k(c[0]), k(c[1]), k(c[2]), k(c[3]), k(c[4]));
  rep.result["field"] = json::field(F);
  rep.result["j"] = j ? json::element(*j) : Json("singular");
}

inline void run_distinguish(Report& rep, unsigned n, unsigned m, std::uint64_t q, const Limits& limits) {
  rep.parameters = {{"n", n}, {"m", m}, {"q", q}};
  const PairEvidence ev = distinguish_pair(n, m, q, limits);
  rep.result["mode"] = ev.mode;
  rep.result["genus_phi"] = ev.genus_phi;
  rep.result["genus_fermat"] = ev.genus_fermat;
  rep.result["maximal_phi"] = json::verdict(ev.maximal_phi);
  rep.result["maximal_fermat"] = json::verdict(ev.maximal_fermat);
  if (ev.order3_witness) {
    rep.result["order3_witness"] = json::automorphism(*ev.order3_witness);
    rep.result["cited"] = ev.cited_fact;
  }
  if (ev.j_phi || ev.j_fermat) {
    rep.result["j_phi"] = ev.j_phi ? json::element(*ev.j_phi) : Json("singular");
    rep.result["j_fermat"] = ev.j_fermat ? json::element(*ev.j_fermat) : Json("singular");
    rep.result["j_equal"] = ev.j_equal.value_or(false);
  }
  if (ev.genus_phi != ev.genus_fermat) rep.deviations.push_back("genera differ");
  if (ev.mode == "order3" && (!ev.maximal_phi.maximal() || !ev.maximal_fermat.maximal()))
    rep.deviations.push_back("a curve of the pair is not maximal over F_q^2");
}

inline void emit(const Report& rep, const RunConfig& cfg, std::optional<double> wall_ms, std::ostream& out) {
  const std::string& fmt = cfg.output_format;
  if ((fmt == "csv" || (fmt == "table" && !rep.header.empty() && rep.command == "scan"))) {
    if (fmt == "csv") {
      if (rep.header.empty()) throw DomainError("csv output is only available for scan and cheb");
      for (std::size_t i = 0; i < rep.header.size(); ++i) out << (i ? "," : "") << rep.header[i];
      out << "\n";
      for (const auto& row : rep.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_cell(row[i]);
        out << "\n";
      }
      return;
    }
  }
  Json env;
  env["command"] = rep.command;
  env["parameters"] = rep.parameters;
  env["config"] = cfg.snapshot();
  env["result"] = rep.result;
  env["deviations"] = rep.deviations;
  if (wall_ms) env["wall_time_ms"] = *wall_ms;
  if (fmt == "json") {
    out << env.dump(2) << "\n";
  } else if (fmt == "jsonl") {
    if (rep.stream.empty()) {
      out << env.dump() << "\n";
    } else {
      for (const auto& line : rep.stream) out << line.dump() << "\n";
    }
  } else if (rep.command == "scan") {
    std::vector<std::size_t> width(rep.header.size());
    for (std::size_t i = 0; i < rep.header.size(); ++i) width[i] = rep.header[i].size();
    for (const auto& row : rep.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
      out << "\n";
    };
    line(rep.header);
    for (const auto& row : rep.rows) line(row);
    out << "eligible " << rep.result["eligible"] << ", deviating " << rep.result["deviating"] << ", skipped "
        << rep.result["skipped"] << "\n";
  } else {
    Json shown = env;
    shown.erase("config");
    detail::render_table(shown, out, 0);
  }
}

/// Runs one command line; output goes to `out`, diagnostics to `err`.
inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chebyshev curves y^d = phi_d(x) over finite fields"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::uint64_t> enum_cap;
  std::optional<unsigned> ext_cap, jobs;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  app.add_option("--format", format, "table, json, jsonl or csv")
      ->check(CLI::IsMember({"table", "json", "jsonl", "csv"}));
  app.add_option("--enumeration-cap", enum_cap, "largest enumerable field size");
  app.add_option("--extension-cap", ext_cap, "largest extension degree searched");
  app.add_option("--jobs", jobs, "worker threads for grid commands");
  app.add_option("--seed", seed, "seed for randomized commands");
  app.add_flag("--timing", timing, "include wall time in the report (breaks byte-identical output)");
  app.fallthrough();

  unsigned d = 0, m = 1, n = 0, d_min = 5, d_max = 12;
  std::uint32_t p = 0, p_max = 30;
  std::uint64_t q = 0;
  std::optional<unsigned> m_opt, ext_opt;
  std::string family = "cheb", which, coeffs;
  std::optional<std::string> g;

  auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev polynomials");
  auto* print_cmd = cheb_cmd->add_subcommand("print", "coefficients of phi_d over F_{p^m}");
  cheb_cmd->require_subcommand(1);
  print_cmd->add_option("--d", d)->required();
  print_cmd->add_option("--p", p)->required();
  print_cmd->add_option("--m", m);

  auto* inflect_cmd = app.add_subcommand("inflect", "total inflection points of C_d");
  inflect_cmd->add_option("--d", d)->required();
  inflect_cmd->add_option("--p", p)->required();
  inflect_cmd->add_option("--ext", ext_opt, "search field degree over F_p (default: the smallest field holding every predicted point)");

  auto* count_cmd = app.add_subcommand("count", "points of C_d (or y^m = f(x)) over F_q");
  count_cmd->add_option("--d", d)->required();
  count_cmd->add_option("--q", q)->required();
  count_cmd->add_option("--m", m_opt, "exponent of y for the superelliptic y^m = f(x)");
  count_cmd->add_option("--family", family, "cheb (f = phi_d) or fermat (f = x^d + 1)")
      ->check(CLI::IsMember({"cheb", "fermat"}));

  auto* maximal_cmd = app.add_subcommand("maximal", "maximality over F_{q^2}");
  maximal_cmd->add_option("--d", d)->required();
  maximal_cmd->add_option("--q", q)->required();
  maximal_cmd->add_option("--m", m_opt);
  maximal_cmd->add_option("--family", family)->check(CLI::IsMember({"cheb", "fermat"}));

  auto* stab_cmd = app.add_subcommand("stab", "stabilizer in PGL(2) of the zeros of phi_d");
  stab_cmd->add_option("--d", d)->required();
  stab_cmd->add_option("--p", p)->required();

  auto* aut_cmd = app.add_subcommand("aut", "automorphism group of y^d = g(x)");
  aut_cmd->add_option("--d", d)->required();
  aut_cmd->add_option("--p", p)->required();
  aut_cmd->add_option("--g", g, "coefficients of g, low degree first (default phi_d)");

  auto* scan_cmd = app.add_subcommand("scan", "stabilizer scan over a (d, p) grid");
  scan_cmd->add_option("--d-min", d_min);
  scan_cmd->add_option("--d-max", d_max);
  scan_cmd->add_option("--p-max", p_max);

  auto* verify_cmd = app.add_subcommand("verify", "explicit identities and automorphisms");
  verify_cmd->add_option("--which", which)->required()->check(CLI::IsMember({"prop31", "prop315", "remark311", "prop42"}));
  verify_cmd->add_option("--d,--n", d, "degree (n for prop42)");
  verify_cmd->add_option("--p", p);
  verify_cmd->add_option("--m", m, "exponent of y for prop42");

  auto* jinv_cmd = app.add_subcommand("jinv", "j-invariant of y^2 = a x^4 + b x^3 + c x^2 + d x + e");
  jinv_cmd->add_option("--coeffs", coeffs, "a,b,c,d,e")->required();
  jinv_cmd->add_option("--p", p)->required();

  auto* dist_cmd = app.add_subcommand("distinguish", "y^m = phi_n(x) versus y^m = x^n + 1 over F_{q^2}");
  dist_cmd->add_option("--n", n)->required();
  dist_cmd->add_option("--m", m)->required();
  dist_cmd->add_option("--q", q)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Report rep;
  try {
    if (const char* path = std::getenv(kConfigEnv); path && *path) cfg = load_config(path);
    if (enum_cap) cfg.enumeration_cap = *enum_cap;
    if (ext_cap) cfg.extension_cap = *ext_cap;
    if (jobs) cfg.jobs = *jobs;
    if (format) cfg.output_format = *format;
    if (seed) cfg.seed = *seed;
    cfg.validate();
    const Limits limits = cfg.limits();
    const auto t0 = std::chrono::steady_clock::now();
    if (cheb_cmd->parsed()) {
      rep.command = "cheb print";
      run_cheb(rep, d, p, m);
    } else if (inflect_cmd->parsed()) {
      rep.command = "inflect";
      run_inflect(rep, d, p, ext_opt, limits);
    } else if (count_cmd->parsed()) {
      rep.command = "count";
      run_count(rep, d, q, m_opt, family, limits);
    } else if (maximal_cmd->parsed()) {
      rep.command = "maximal";
      run_maximal(rep, d, q, m_opt, family, limits);
    } else if (stab_cmd->parsed()) {
      rep.command = "stab";
      run_stab(rep, d, p, limits);
    } else if (aut_cmd->parsed()) {
      rep.command = "aut";
      run_aut(rep, d, p, g, limits);
    } else if (scan_cmd->parsed()) {
      rep.command = "scan";
      run_scan(rep, d_min, d_max, p_max, cfg.jobs, limits);
    } else if (verify_cmd->parsed()) {
      rep.command = "verify";
      run_verify(rep, which, d, p, m);
    } else if (jinv_cmd->parsed()) {
      rep.command = "jinv";
      run_jinv(rep, coeffs, p);
    } else if (dist_cmd->parsed()) {
      rep.command = "distinguish";
      run_distinguish(rep, n, m, q, limits);
    }
    std::optional<double> wall;
    if (timing) wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(rep, cfg, wall, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  for (const auto& dv : rep.deviations) err << "deviation: " << dv << "\n";
  return rep.deviations.empty() ? kExitOk : kExitDeviation;
}

}  // namespace chebcurve::cli
