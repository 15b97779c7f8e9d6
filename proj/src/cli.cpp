#include "sperner/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

#include "sperner/chains.hpp"
#include "sperner/dilworth.hpp"
#include "sperner/egh.hpp"
#include "sperner/errors.hpp"
#include "sperner/graded_algebra.hpp"

namespace sperner::cli {

namespace {

using Record = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// The message of a ParseError without its "line L, column C: " prefix.
std::string bare_message(const ParseError& e) {
  const std::string what = e.what();
  const auto pos = what.find(": ");
  return pos == std::string::npos ? what : what.substr(pos + 2);
}

long long parse_int(std::string_view s, std::size_t line, std::size_t column) {
  long long v = 0;
  const auto t = trim(s);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError("expected an integer, got '" + t + "'", line, column);
  }
  return v;
}

std::vector<long long> parse_int_list(std::string_view s, std::size_t line, std::size_t column) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const auto piece = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    out.push_back(parse_int(piece, line, column + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_monomials(const std::vector<Monomial>& ms) {
  std::vector<std::string> parts;
  for (const auto& m : ms) parts.push_back(m.to_string());
  return join(parts, ",");
}

std::string join_values(const std::vector<std::uint64_t>& v) {
  std::vector<std::string> parts;
  for (const auto x : v) parts.push_back(std::to_string(x));
  return join(parts, " ");
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void emit(const Record& rec) {
    if (json_) {
      out_ << rec.dump() << '\n';
      return;
    }
    bool first = true;
    for (const auto& [key, value] : rec.items()) {
      if (!first) out_ << '\t';
      first = false;
      out_ << key << '=' << render(value);
    }
    out_ << '\n';
  }

 private:
  static std::string render(const Record& v) {
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      for (auto& ch : s) {
        if (ch == '\t' || ch == '\n') ch = ' ';
      }
      return s;
    }
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "none";
    if (v.is_array()) {
      std::vector<std::string> parts;
      for (const auto& x : v) parts.push_back(render(x));
      return join(parts, ",");
    }
    return v.dump();
  }

  std::ostream& out_;
  bool json_;
};

struct Job {
  std::string input;
  std::string degrees;
  std::size_t vars = 0;
  std::vector<std::string> gens;
  std::string field;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  std::string format = "tsv";

  int degree = 0;
  bool exhaustive = false;
  std::string mode = "monomial_exhaustive";
  std::string hilbert;
  std::size_t samples = 20;
  std::string ideal;
};

AlgebraSpec load_spec(const Job& job) {
  std::optional<Field> field;
  if (!job.field.empty()) field = parse_field(job.field);
  if (!job.input.empty()) {
    std::ifstream in(job.input);
    if (!in) throw std::invalid_argument("cannot read " + job.input);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str(), field);
  }
  std::string text;
  if (job.vars) text += "vars " + std::to_string(job.vars) + "\n";
  if (!job.degrees.empty()) text += "degrees " + job.degrees + "\n";
  for (const auto& g : job.gens) text += "gen " + g + "\n";
  if (text.empty()) throw std::invalid_argument("no algebra given: use --input, --degrees or --gen");
  return parse_input(text, field);
}

AlgebraTable build_algebra(const AlgebraSpec& spec) {
  if (spec.generators.empty()) return AlgebraTable::monomial(spec.field, spec.degrees);
  return AlgebraTable::build(spec.field, spec.generators, spec.degrees);
}

Record algebra_record(const AlgebraSpec& spec, const AlgebraTable& A) {
  Record r;
  r["check"] = "algebra";
  r["field"] = spec.field.name();
  r["vars"] = spec.nvars;
  r["degrees"] = spec.degrees.to_string();
  std::vector<std::string> gens;
  if (spec.generators.empty()) {
    for (std::size_t i = 0; i < spec.nvars; ++i) {
      gens.push_back(Monomial::variable(spec.nvars, i, spec.degrees[i]).to_string());
    }
  } else {
    for (const auto& g : spec.generators) gens.push_back(g.to_string());
  }
  r["generators"] = gens;
  r["monomial"] = A.is_monomial();
  r["socle_degree"] = A.top_degree();
  return r;
}

int worst(int a, int b) {
  // Falsification outranks inconclusive.
  if (a == kFalsified || b == kFalsified) return kFalsified;
  return std::max(a, b);
}

int cmd_hilbert(const AlgebraTable& A, Emitter& em) {
  const auto h = A.hilbert();
  const auto u = is_unimodal(h);
  Record r;
  r["check"] = "hilbert";
  r["H"] = h.to_string();
  r["total"] = h.total();
  r["max_H"] = h.max();
  r["symmetric"] = h.is_symmetric();
  r["unimodal"] = u.unimodal;
  r["first_descent"] = u.first_descent;
  em.emit(r);
  const bool ok = h.is_symmetric() && u.unimodal && h.total() == A.degrees().product();
  return ok ? kPass : kFalsified;
}

int cmd_scd(const AlgebraTable& A, Emitter& em) {
  const auto scd = symmetric_chain_decomposition(A.degrees());
  for (std::size_t i = 0; i < scd.chains.size(); ++i) {
    const auto& c = scd.chains[i];
    Record r;
    r["check"] = "chain";
    r["index"] = i;
    r["start_rank"] = c.start_rank();
    r["end_rank"] = c.end_rank();
    r["elements"] = join_monomials(c.elements);
    em.emit(r);
  }
  const auto au = audit(scd);
  Record r;
  r["check"] = "scd";
  r["chains"] = scd.chains.size();
  r["partition"] = au.partition;
  r["saturated"] = au.saturated;
  r["symmetric"] = au.symmetric;
  r["count_ok"] = au.count_ok;
  em.emit(r);
  return au.ok() ? kPass : kFalsified;
}

int cmd_match(const AlgebraTable& A, const Job& job, Emitter& em) {
  const auto& a = A.degrees();
  const int j = job.degree;
  if (j < 0 || j >= a.socle_degree()) {
    throw std::invalid_argument("--degree must lie in [0, " + std::to_string(a.socle_degree() - 1) + "]");
  }
  const auto cert = layer_matching(a, j);
  std::vector<std::string> pairs;
  for (const auto& [x, y] : cert.pairs) pairs.push_back(x.to_string() + ":" + y.to_string());
  const bool valid = verify_certificate(cert, a);
  Record r;
  r["check"] = "matching";
  r["j"] = j;
  r["lower"] = layer(a, j).monomials.size();
  r["upper"] = layer(a, j + 1).monomials.size();
  r["direction"] = cert.upward ? "upward" : "downward";
  r["derived_by_duality"] = cert.derived_by_duality;
  r["pairs"] = cert.pairs.size();
  r["augmentations"] = cert.augmentations;
  r["certificate_valid"] = valid;
  r["matching"] = join(pairs, ",");
  em.emit(r);
  int code = valid ? kPass : kFalsified;
  if (job.exhaustive) {
    const auto hall = exhaustive_hall_check(a, j);
    Record h;
    h["check"] = "hall";
    h["j"] = j;
    h["lower"] = hall.lower_size;
    h["upper"] = hall.upper_size;
    h["asserted"] = hall.asserted;
    h["subsets"] = hall.scan.subsets_checked;
    h["violations"] = hall.scan.violations;
    h["first_violation"] = hall.scan.first_violation ? Record(*hall.scan.first_violation) : Record();
    h["universe"] = "all subsets of P_" + std::to_string(j);
    em.emit(h);
    code = worst(code, hall.pass() ? kPass : kFalsified);
  }
  return code;
}

Record dilworth_record(const DilworthReport& rep) {
  Record r;
  r["check"] = "dilworth";
  r["d"] = rep.d;
  r["max_H"] = rep.max_h;
  r["sperner"] = rep.sperner;
  r["mode"] = to_string(rep.mode);
  r["exact"] = rep.exact;
  r["universe"] = rep.universe;
  r["ideals_examined"] = rep.ideals_examined;
  r["witness"] = rep.witness ? rep.witness->to_string() : "none";
  return r;
}

int cmd_dilworth(const AlgebraTable& A, const Job& job, Emitter& em) {
  const auto mode = parse_search_mode(job.mode);
  if (!mode) throw std::invalid_argument("unknown mode '" + job.mode + "'");
  DilworthOptions opt;
  opt.budget = job.budget.value_or(opt.budget);
  opt.seed = job.seed;
  em.emit(dilworth_record(dilworth_number(A, *mode, opt)));
  return kPass;
}

int cmd_lattice(const AlgebraTable& A, const Job& job, Emitter& em) {
  const std::uint64_t budget = job.budget.value_or(1'000'000);
  LatticeFamilyReport rep;
  if (A.is_monomial()) {
    rep = lattice_family_check(A, monomial_ideal_universe(A, budget), "monomial ideals");
  } else if (A.field().characteristic() == 2) {
    rep = lattice_family_check(A, gf2_graded_ideal_universe(A, budget), "graded ideals over GF(2)");
  } else {
    throw std::invalid_argument("lattice needs a monomial algebra or the field GF(2)");
  }
  for (const auto& c : rep.checks) {
    Record r;
    r["check"] = "lattice";
    r["name"] = c.name;
    r["cases"] = c.cases;
    r["failures"] = c.failures;
    r["holds"] = c.holds();
    em.emit(r);
  }
  Record r;
  r["check"] = "lattice_summary";
  r["universe"] = rep.universe;
  r["universe_size"] = rep.universe_size;
  r["d"] = rep.d;
  r["F"] = rep.f_family.size();
  r["G"] = rep.g_family.size();
  r["all_hold"] = rep.all_hold();
  em.emit(r);
  return rep.all_hold() ? kPass : kFalsified;
}

int cmd_egh(const AlgebraTable& A, const Job& job, Emitter& em) {
  if (job.hilbert.empty()) throw std::invalid_argument("egh needs --hilbert h0,h1,...");
  std::vector<std::uint64_t> h;
  for (const auto v : parse_int_list(job.hilbert, 1, 1)) {
    if (v < 0) throw std::invalid_argument("--hilbert values must be >= 0");
    h.push_back(static_cast<std::uint64_t>(v));
  }
  const auto inst = egh_instance(A.degrees(), h);
  const auto res = egh_witness(inst, kAllStrategies, job.budget.value_or(200'000));
  Record r;
  r["check"] = "egh";
  r["degrees"] = A.degrees().to_string();
  r["h"] = join_values(inst.h);
  switch (res.status) {
    case WitnessStatus::kFound: r["status"] = "found"; break;
    case WitnessStatus::kBudgetExhausted: r["status"] = "budget_exhausted"; break;
    case WitnessStatus::kExhaustiveFailure: r["status"] = "no_witness"; break;
  }
  r["witness"] = res.witness ? res.witness->to_string() : "none";
  r["strategy"] = res.witness ? to_string(res.witness->strategy) : "none";
  r["dfs_nodes"] = res.dfs_nodes;
  em.emit(r);
  return res.witness ? kPass : kInconclusive;
}

int status_code(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return kPass;
    case CheckStatus::kFalsified: return kFalsified;
    case CheckStatus::kInconclusive: return kInconclusive;
  }
  return kInconclusive;
}

VerifyReport verify(const AlgebraTable& A, const Job& job, Emitter& em) {
  VerifyOptions opt;
  opt.sampling_budget = job.samples;
  opt.seed = job.seed;
  opt.witness_budget = job.budget.value_or(opt.witness_budget);
  auto rep = sperner_verify_ci(A, opt);
  Record r;
  r["check"] = "matching_steps";
  std::vector<std::string> degrees;
  for (const int j : rep.degrees) degrees.push_back(std::to_string(j));
  r["degrees"] = join(degrees, ",");
  r["checks"] = rep.checks;
  r["coordinate"] = rep.coordinate_checks;
  r["random"] = rep.random_checks;
  r["falsifications"] = rep.falsifications;
  r["inconclusive"] = rep.inconclusive;
  r["identity_failures"] = rep.identity_failures;
  r["by_initial_ideal"] = rep.by_initial_ideal;
  r["by_lex_plus_powers"] = rep.by_lex_plus_powers;
  r["by_dfs"] = rep.by_dfs;
  r["status"] = to_string(rep.status());
  em.emit(r);
  for (const auto& f : rep.failures) {
    Record x;
    x["check"] = "matching_failure";
    x["j"] = f.j;
    x["dim_v"] = f.dim_v;
    x["dim_image"] = f.dim_image;
    x["generators_identity"] = f.generators_identity;
    x["image_identity"] = f.image_identity;
    x["restricted_identity"] = f.restricted_identity;
    x["final_inequality"] = f.final_inequality;
    x["witness"] = f.witness.witness ? f.witness.witness->to_string() : "none";
    x["status"] = to_string(f.status);
    em.emit(x);
  }
  return rep;
}

int cmd_sperner(const AlgebraTable& A, const Job& job, Emitter& em) {
  const auto rep = verify(A, job, em);
  Record r;
  r["check"] = "sperner";
  if (rep.certified) {
    r["d"] = rep.certified->d;
    r["max_H"] = rep.certified->max_h;
    r["sperner"] = rep.certified->sperner;
    r["mode"] = to_string(rep.certified->mode);
    r["universe"] = rep.certified->universe;
  } else {
    r["certified"] = false;
    r["max_H"] = A.hilbert().max();
  }
  r["status"] = to_string(rep.status());
  em.emit(r);
  return status_code(rep.status());
}

int cmd_walk(const AlgebraTable& A, const Job& job, Emitter& em) {
  if (job.ideal.empty()) throw std::invalid_argument("walk needs --ideal m1,m2,...");
  std::vector<Monomial> gens;
  std::size_t start = 0;
  while (true) {
    const auto comma = job.ideal.find(',', start);
    const auto piece = job.ideal.substr(start, comma == std::string::npos ? comma : comma - start);
    const auto p = parse_polynomial(piece, A.nvars(), A.field());
    if (p.size() != 1) throw std::invalid_argument("'" + trim(piece) + "' is not a monomial");
    gens.push_back(p.leading_monomial());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const auto I = ideal_from_monomials(A, gens);
  DilworthReport d;
  bool matching = A.is_monomial();
  if (matching) {
    d = dilworth_number(A, SearchMode::kTheoremCertified);
  } else {
    const auto rep = verify(A, job, em);
    if (!rep.certified) return status_code(rep.status());
    d = *rep.certified;
    matching = true;
  }
  const auto steps = sperner_walk(A, I, d.d, matching);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Record r;
    r["check"] = "walk_step";
    r["step"] = i;
    r["kind"] = to_string(steps[i].kind);
    r["initial_degree"] = steps[i].initial_degree;
    r["mu"] = steps[i].mu;
    r["ideal"] = steps[i].ideal.to_string();
    em.emit(r);
  }
  const int j0 = is_unimodal(A.hilbert()).first_descent;
  Record r;
  r["check"] = "walk";
  r["d"] = d.d;
  r["steps"] = steps.size();
  r["j0"] = j0;
  r["reached_middle_power"] = steps.back().ideal == maximal_power(A, j0);
  em.emit(r);
  return kPass;
}

Record error_record(const std::string& kind, const std::string& message) {
  Record r;
  r["check"] = "error";
  r["kind"] = kind;
  r["message"] = message;
  return r;
}

}  // namespace

Field parse_field(std::string_view text) {
  const auto t = trim(text);
  if (t == "rational" || t == "QQ") return Field::rationals();
  std::string_view digits = t;
  if (digits.starts_with("q=")) digits.remove_prefix(2);
  unsigned long long p = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || p >= (1ULL << 31)) {
    throw std::invalid_argument("field must be q=<prime> or rational, got '" + t + "'");
  }
  return Field::prime(static_cast<std::uint32_t>(p));
}

AlgebraSpec parse_input(std::string_view text, std::optional<Field> field_override) {
  AlgebraSpec spec;
  std::optional<std::vector<int>> degrees;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> gen_lines;
  bool vars_given = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const auto key_end = raw.find_first_of(" \t", first);
    const std::string key(raw.substr(first, key_end == std::string_view::npos ? raw.npos : key_end - first));
    const std::size_t arg_col = key_end == std::string_view::npos ? raw.size() + 1 : key_end + 2;
    const std::string arg = key_end == std::string_view::npos ? std::string() : trim(raw.substr(key_end));
    if (arg.empty()) throw ParseError("'" + key + "' needs an argument", line_no, first + 1);

    if (key == "field") {
      try {
        spec.field = parse_field(arg);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, arg_col);
      }
      spec.field_given = true;
    } else if (key == "vars") {
      const long long n = parse_int(arg, line_no, arg_col);
      if (n < 1) throw ParseError("vars must be >= 1", line_no, arg_col);
      spec.nvars = static_cast<std::size_t>(n);
      vars_given = true;
    } else if (key == "degrees") {
      std::vector<int> a;
      for (const auto v : parse_int_list(arg, line_no, arg_col)) {
        if (v < 1) throw ParseError("degrees must be >= 1", line_no, arg_col);
        a.push_back(static_cast<int>(v));
      }
      degrees = std::move(a);
    } else if (key == "gen") {
      gen_lines.push_back({arg, {line_no, arg_col}});
    } else {
      throw ParseError("unknown keyword '" + key + "'", line_no, first + 1);
    }
  }
  if (field_override) spec.field = *field_override;

  if (!vars_given) {
    if (!degrees) throw ParseError("missing 'vars' or 'degrees' line", line_no, 1);
    spec.nvars = degrees->size();
  }
  if (degrees && degrees->size() != spec.nvars) {
    throw DimensionMismatch("degrees lists " + std::to_string(degrees->size()) + " entries for " +
                            std::to_string(spec.nvars) + " variables");
  }
  for (const auto& [text_line, where] : gen_lines) {
    try {
      spec.generators.push_back(parse_polynomial(text_line, spec.nvars, spec.field));
    } catch (const ParseError& e) {
      throw ParseError(bare_message(e), where.first, where.second + e.column() - 1);
    }
  }
  if (spec.generators.empty()) {
    if (!degrees) throw ParseError("monomial algebra needs a 'degrees' line", line_no, 1);
    spec.degrees = DegreeVector(*degrees);
    return spec;
  }
  if (spec.generators.size() != spec.nvars) {
    throw DimensionMismatch(std::to_string(spec.generators.size()) + " generators for " +
                            std::to_string(spec.nvars) + " variables");
  }
  std::vector<int> gen_degrees;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    const auto d = spec.generators[i].homogeneous_degree();
    if (!d) {
      throw NotHomogeneous("generator " + std::to_string(i + 1) + " is zero or not homogeneous");
    }
    gen_degrees.push_back(*d);
  }
  if (degrees && *degrees != gen_degrees) {
    throw DimensionMismatch("degrees line disagrees with the generator degrees");
  }
  spec.degrees = DegreeVector(gen_degrees);
  return spec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sperner property checks for Artinian complete intersections", "sperner"};
  app.fallthrough();
  app.require_subcommand(1);
  Job job;
  app.add_option("--input", job.input, "Algebra file (field/vars/degrees/gen lines)");
  app.add_option("--degrees", job.degrees, "Monomial CI degrees a1,a2,...");
  app.add_option("--vars", job.vars, "Number of variables");
  app.add_option("--gen", job.gens, "Generator polynomial (repeatable)");
  app.add_option("--field", job.field, "q=<prime> or rational (default q=32003)");
  app.add_option("--seed", job.seed, "Seed for sampled checks");
  app.add_option("--budget", job.budget, "Enumeration or search budget");
  app.add_option("--format", job.format, "tsv or jsonl")->check(CLI::IsMember({"tsv", "jsonl"}));

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of A");
  auto* scd = app.add_subcommand("scd", "Symmetric chain decomposition of the box");
  auto* match = app.add_subcommand("match", "Matching between layers j and j+1");
  match->add_option("--degree", job.degree, "Lower layer j")->required();
  match->add_flag("--exhaustive", job.exhaustive, "Also check every subset of P_j");
  auto* dilworth = app.add_subcommand("dilworth", "Dilworth number d(A)");
  dilworth->add_option("--mode", job.mode,
                       "monomial_exhaustive, gf2_all_graded, random_sampled or theorem_certified");
  auto* lattice = app.add_subcommand("lattice", "Families F(A), G(A) and their correspondences");
  auto* egh = app.add_subcommand("egh", "Monomial witness for a Hilbert function");
  egh->add_option("--hilbert", job.hilbert, "h0,h1,...")->required();
  auto* sperner = app.add_subcommand("sperner", "Matching checks and the certified Sperner property");
  sperner->add_option("--samples", job.samples, "Random subspaces per ascending degree");
  auto* walk = app.add_subcommand("walk", "Walk from a maximizing ideal to m^j0");
  walk->add_option("--ideal", job.ideal, "Monomial generators m1,m2,...")->required();
  walk->add_option("--samples", job.samples, "Random subspaces per ascending degree");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  Emitter em(out, job.format == "jsonl");
  try {
    const AlgebraSpec spec = load_spec(job);
    const AlgebraTable A = build_algebra(spec);
    em.emit(algebra_record(spec, A));
    if (hilbert->parsed()) return cmd_hilbert(A, em);
    if (scd->parsed()) return cmd_scd(A, em);
    if (match->parsed()) return cmd_match(A, job, em);
    if (dilworth->parsed()) return cmd_dilworth(A, job, em);
    if (lattice->parsed()) return cmd_lattice(A, job, em);
    if (egh->parsed()) return cmd_egh(A, job, em);
    if (sperner->parsed()) return cmd_sperner(A, job, em);
    if (walk->parsed()) return cmd_walk(A, job, em);
    return kUsageError;
  } catch (const Falsification& e) {
    em.emit(error_record("falsification", e.what()));
    return kFalsified;
  } catch (const HypothesisViolated& e) {
    em.emit(error_record("hypothesis_violated", e.what()));
    return kInconclusive;
  } catch (const BudgetExceeded& e) {
    em.emit(error_record("budget_exceeded", e.what()));
    return kInconclusive;
  } catch (const SizeLimitExceeded& e) {
    em.emit(error_record("size_limit", e.what()));
    return kInconclusive;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "input error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace sperner::cli
