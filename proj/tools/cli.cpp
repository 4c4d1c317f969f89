#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "zguess/analysis.hpp"
#include "zguess/bfile.hpp"

namespace zguess::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string terms;
  std::vector<std::string> bfiles;
  long offset = 0;
  bool offset_set = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool many_bfiles) {
  cmd->add_option("--terms", in.terms, "sequence terms, comma separated (integers or p/q)");
  auto* bf = cmd->add_option("--bfile", in.bfiles, "OEIS b-file");
  if (!many_bfiles) bf->expected(1);
  cmd->add_option_function<long>(
      "--offset",
      [&in](long v) {
        in.offset = v;
        in.offset_set = true;
      },
      "index of the first term given with --terms");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

SequenceData load_bfile(const std::string& path) {
  BFile b = parse_bfile(read_file(path));
  return SequenceData::from_ints(b.terms, b.offset);
}

struct NamedSequence {
  std::string label;
  SequenceData data;
};

std::vector<NamedSequence> load_inputs(const InputOptions& in) {
  std::vector<NamedSequence> out;
  if (!in.terms.empty()) out.push_back({"terms", SequenceData(parse_terms(in.terms), in.offset)});
  for (const auto& path : in.bfiles) {
    SequenceData d = load_bfile(path);
    if (in.offset_set) d.offset = in.offset;
    out.push_back({path, std::move(d)});
  }
  return out;
}

SequenceData load_single(const InputOptions& in) {
  std::vector<NamedSequence> all = load_inputs(in);
  if (all.size() != 1) throw UsageError("give exactly one of --terms or --bfile");
  return std::move(all.front().data);
}

Method parse_method(const std::string& name) {
  auto m = parse_method_name(name);
  if (!m) throw UsageError("unknown algorithm '" + name + "'");
  return *m;
}

std::vector<BasisFamily> families_for(const std::string& name, std::size_t order) {
  if (name == "all") return default_families(order);
  auto kind = parse_basis_name(name);
  if (!kind) throw UsageError("unknown basis '" + name + "'");
  return {BasisFamily{*kind, default_shift(order)}};
}

std::string family_label(const BasisFamily& f) {
  std::string s(basis_name(f.kind));
  if (f.effective_shift() != 0) s += "(" + std::to_string(f.effective_shift()) + ")";
  return s;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      throw UsageError("bad prime '" + tok + "'");
    }
  }
  return out;
}

ReductionParams params_from(const std::string& delta) {
  ReductionParams p;
  p.delta = parse_rat(delta);
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------
// guess

struct GuessOptions {
  InputOptions input;
  std::optional<std::size_t> order, degree, degree_min, degree_max, max_order, max_degree;
  std::string basis = "standard";
  std::string algorithm = "hnf-lll";
  std::string primes;
  std::size_t plausibility_terms = 10;
  std::string lll_delta = "0.99";
  bool json = false;
};

struct Candidate {
  Recurrence rec;
  GuessResult res;
  std::size_t order;
  BasisFamily family;
};

bool plausible(const Recurrence& rec, const SequenceData& data, std::size_t t) {
  const std::size_t r = rec.order();
  if (r == 0 || is_zero(rec.grid()[r]) || is_zero(rec.grid()[0])) return false;
  if (!fits_data(rec, data)) return false;
  if (t == 0 || !data.integral()) return true;
  return integrality_check(rec, data, t);
}

RatVector predict(const Recurrence& rec, const SequenceData& data, std::size_t count) {
  RatVector out;
  for (std::size_t i = 1; i <= count; ++i) {
    try {
      out = unroll(rec, data.terms, i);
    } catch (const LeadingCoefficientVanishes&) {
      break;
    }
  }
  return out;
}

void report(const Candidate& c, const GuessOptions& o, const SequenceData& data, Method method,
            std::ostream& out) {
  const std::size_t horizon = o.plausibility_terms == 0 ? 10 : o.plausibility_terms;
  RatVector next = predict(c.rec, data, horizon);
  bool integral = data.integral() && next.size() == horizon;
  for (const auto& x : next) integral = integral && is_integer(x);

  if (o.json) {
    Json j;
    j["found"] = true;
    j["order"] = c.rec.order();
    j["degree"] = c.rec.degree();
    j["basisFamily"] = std::string(basis_name(c.family.kind));
    j["basisShift"] = c.family.effective_shift();
    j["algorithm"] = std::string(method_name(method));
    j["offset"] = data.offset;
    j["recurrence"] = format(c.rec);
    Json coeffs = Json::array();
    for (const auto& row : c.rec.grid()) {
      Json jr = Json::array();
      for (const auto& x : row) jr.push_back(x.get_str());
      coeffs.push_back(std::move(jr));
    }
    j["coefficients"] = std::move(coeffs);
    j["matchedTerms"] = data.size();
    Json pn = Json::array();
    for (const auto& x : next) pn.push_back(to_string(x));
    j["predictedNext"] = std::move(pn);
    j["integral"] = integral;
    j["kernelDim"] = c.res.kernel_dim;
    j["overdetermination"] = c.res.overdetermination;
    j["supNorm"] = c.rec.sup_norm().get_str();
    if (c.res.modulus != 0) j["modulus"] = c.res.modulus.get_str();
    out << j.dump(2) << '\n';
    return;
  }
  out << "recurrence: " << format(c.rec) << '\n';
  if (data.offset != 0) out << "variable: n = index - " << data.offset << '\n';
  out << "order: " << c.rec.order() << '\n';
  out << "degree: " << c.rec.degree() << '\n';
  out << "basis: " << family_label(c.family) << '\n';
  out << "algorithm: " << method_name(method) << '\n';
  out << "kernel dimension: " << c.res.kernel_dim << '\n';
  out << "overdetermination: " << c.res.overdetermination << '\n';
  out << "sup-norm: " << c.rec.sup_norm() << '\n';
  if (c.res.modulus != 0) out << "modulus: " << c.res.modulus << '\n';
  out << "matched terms: " << data.size() << '\n';
  if (o.plausibility_terms > 0 && data.integral()) {
    out << "plausibility: next " << o.plausibility_terms << " terms integral\n";
  }
  out << "next terms:";
  for (std::size_t i = 0; i < next.size(); ++i) out << (i ? ", " : " ") << to_string(next[i]);
  out << '\n';
}

int run_guess(const GuessOptions& o, std::ostream& out) {
  SequenceData data = load_single(o.input);
  const Method method = parse_method(o.algorithm);
  const std::size_t n_last = data.last_index();
  if (n_last < 1) throw UsageError("need at least two terms");

  GuessProblem base;
  base.data = data;
  base.plausibility_terms = o.plausibility_terms;
  base.params = params_from(o.lll_delta);
  base.primes = parse_primes(o.primes);

  auto emit_none = [&]() {
    if (o.json) {
      out << Json{{"found", false}}.dump(2) << '\n';
    } else {
      out << "no recurrence found\n";
    }
    return 1;
  };

  auto gate = [&](const Recurrence& rec) { return plausible(rec, data, o.plausibility_terms); };

  const std::size_t max_order = o.order ? *o.order : o.max_order.value_or(n_last);
  if (method == Method::kIncremental) {
    std::vector<std::size_t> orders;
    if (o.order) {
      orders.push_back(*o.order);
    } else {
      for (std::size_t r = 1; r <= std::min(max_order, n_last); ++r) orders.push_back(r);
    }
    for (std::size_t r : orders) {
      if (r > n_last) continue;
      const std::size_t dmin = o.degree_min.value_or(o.degree.value_or(0));
      std::size_t dmax = o.degree_max.value_or(o.degree.value_or(o.max_degree.value_or(0)));
      if (!o.degree_max && !o.degree && !o.max_degree) {
        // widest degree inside (r+1)(d+2) <= 3N
        dmax = 3 * n_last / (r + 1) >= 2 ? 3 * n_last / (r + 1) - 2 : 0;
      }
      if (dmin > dmax) continue;
      for (const auto& family : families_for(o.basis, r)) {
        GuessProblem p = base;
        p.order = r;
        p.degree_min = dmin;
        p.degree_max = dmax;
        p.family = family;
        GuessResult res = guess_alg3(p, gate);
        if (res.recurrence) {
          report({*res.recurrence, res, r, family}, o, data, method, out);
          return 0;
        }
      }
    }
    return emit_none();
  }

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  if (o.order && o.degree) {
    cells.emplace_back(*o.order, *o.degree);
  } else {
    const std::size_t max_degree = o.degree ? *o.degree : o.max_degree.value_or(3 * n_last);
    for (auto [r, d] : default_grid(n_last, max_order, max_degree)) {
      if (o.order && r != *o.order) continue;
      if (o.degree && d != *o.degree) continue;
      cells.emplace_back(r, d);
    }
  }
  for (auto [r, d] : cells) {
    if (r > n_last) continue;
    for (const auto& family : families_for(o.basis, r)) {
      GuessProblem p = base;
      p.order = r;
      p.degree = p.degree_min = p.degree_max = d;
      p.family = family;
      GuessResult res = run_method(method, p);
      if (res.recurrence && gate(*res.recurrence)) {
        report({*res.recurrence, res, r, family}, o, data, method, out);
        return 0;
      }
    }
  }
  return emit_none();
}

// ---------------------------------------------------------------------------
// minterms / compare

struct MinTermsOptions {
  InputOptions input;
  std::size_t order = 1;
  std::optional<std::size_t> degree, degree_min, degree_max;
  std::string basis = "all";
  std::string algorithm = "hnf-lll";
  std::string primes;
  std::size_t plausibility_terms = 10;
  std::string lll_delta = "0.99";
  bool json = false;
};

MinTermsQuery query_from(const MinTermsOptions& o, Method method) {
  MinTermsQuery q;
  q.order = o.order;
  q.degree_min = o.degree_min.value_or(o.degree.value_or(0));
  q.degree_max = o.degree_max.value_or(o.degree.value_or(q.degree_min));
  if (q.degree_min > q.degree_max) throw UsageError("--degree-min exceeds --degree-max");
  q.method = method;
  if (method != Method::kClassical) q.families = families_for(o.basis, o.order);
  q.plausibility_terms = o.plausibility_terms;
  q.params = params_from(o.lll_delta);
  q.primes = parse_primes(o.primes);
  return q;
}

std::string count_or_empty(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

int run_minterms(const MinTermsOptions& o, std::ostream& out) {
  SequenceData data = load_single(o.input);
  const Method method = parse_method(o.algorithm);
  MinTermsQuery q = query_from(o, method);
  std::optional<std::size_t> len = min_terms(data, q);
  if (o.json) {
    Json j;
    j["found"] = len.has_value();
    j["order"] = q.order;
    j["degreeMin"] = q.degree_min;
    j["degreeMax"] = q.degree_max;
    j["algorithm"] = std::string(method_name(method));
    if (len) j["minTerms"] = *len;
    out << j.dump(2) << '\n';
  } else if (len) {
    out << "min terms: " << *len << " (a_0..a_" << *len - 1 << ")\n";
  } else {
    out << "no prefix of the " << data.size() << " terms suffices\n";
  }
  return len ? 0 : 1;
}

int run_compare(const MinTermsOptions& o, std::ostream& out) {
  std::vector<NamedSequence> inputs = load_inputs(o.input);
  if (inputs.empty()) throw UsageError("no input: use --terms or --bfile");
  Method method = parse_method(o.algorithm);
  if (method == Method::kClassical) method = Method::kHnfLll;
  const MinTermsQuery classical = query_from(o, Method::kClassical);
  const MinTermsQuery lattice = query_from(o, method);
  out << "input,r,dmin,dmax,classical," << method_name(method) << '\n';
  bool any = false;
  for (const auto& in : inputs) {
    auto a = min_terms(in.data, classical);
    auto b = min_terms(in.data, lattice);
    any = any || a || b;
    out << in.label << ',' << o.order << ',' << classical.degree_min << ',' << classical.degree_max
        << ',' << count_or_empty(a) << ',' << count_or_empty(b) << '\n';
  }
  return any ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bound

struct BoundOptions {
  InputOptions input;
  std::size_t order = 4;
  std::string degree = "0";
  unsigned ell = 16;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> rows;
  bool json = false;
};

int run_bound(const BoundOptions& o, std::ostream& out) {
  const double d = std::stod(o.degree);
  if (d < 0) throw UsageError("--degree must be nonnegative");
  const double sb = soft_bound(static_cast<double>(o.order), d);
  Json j;
  j["order"] = o.order;
  j["degree"] = d;
  j["softBound"] = sb;
  std::ostringstream text;
  text << std::fixed << std::setprecision(4);
  text << "soft bound: N <~ " << sb << '\n';

  const bool has_input = !o.input.terms.empty() || !o.input.bfiles.empty();
  const double dint = std::floor(d);
  if ((has_input || o.seed) && dint != d) throw UsageError("--degree must be an integer here");
  const std::size_t deg = static_cast<std::size_t>(dint);

  if (has_input) {
    GuessProblem p;
    p.data = load_single(o.input);
    p.order = o.order;
    if (p.data.last_index() < o.order) throw UsageError("fewer terms than order + 1");
    GuessMatrix g = build_matrix(p, deg);
    j["rows"] = g.rows();
    j["cols"] = g.cols();
    if (g.rows() < g.cols() && rank(g.m) == g.rows()) {
      BvBound b = bv_bound(g.m);
      j["bvLog2"] = b.log2_value;
      j["bvG"] = b.g.get_str();
      j["bvGExact"] = b.g_exact;
      text << "matrix: " << g.rows() << " x " << g.cols() << '\n';
      text << "Bombieri-Vaaler: log2 bound " << b.log2_value << " (g = " << b.g
           << (b.g_exact ? "" : ", minors not enumerated") << ")\n";
      if (b.log2_value < 60) text << "sup-norm bound: " << b.max_sup_norm() << '\n';
    } else {
      text << "matrix: " << g.rows() << " x " << g.cols() << " (no bound: needs full row rank and rows < cols)\n";
    }
  }
  if (o.seed) {
    GenericModel model{o.order, deg, o.ell, 1};
    model.rows = o.rows.value_or(model.cols() - 1);
    if (model.rows >= model.cols()) throw UsageError("--rows must be below (r+1)(d+1)");
    RandomInstance inst = random_recurrence(model, *o.seed);
    const std::size_t r = o.order;
    const Int a_prev = inst.initial[r - 1];
    const double est = bv_bitsize_estimate(model, a_prev, inst.rec.coeff(r - 1, 0), inst.rec.coeff(r - 1, deg));
    const double exact = bv_exact_log2(generic_matrix(inst, model.rows));
    j["estimateLog2"] = est;
    j["exactLog2"] = exact;
    text << "random instance (ell = " << o.ell << ", k = " << model.rows << "): estimate log2 " << est
         << ", exact log2 " << exact << ", ratio " << est / exact << '\n';
  }
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// experiment

struct ExperimentOptions {
  std::vector<std::size_t> orders{4};
  std::size_t degree_min = 0;
  std::size_t degree_max = 6;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  unsigned ell = 16;
  std::size_t extra_terms = 4;
  unsigned threads = 1;
};

int run_experiment(const ExperimentOptions& o, std::ostream& out, std::ostream& err) {
  if (o.degree_min > o.degree_max) throw UsageError("--degree-min exceeds --degree-max");
  if (o.trials == 0) throw UsageError("--trials must be positive");
  ExperimentConfig cfg;
  cfg.orders = o.orders;
  cfg.degrees.clear();
  for (std::size_t d = o.degree_min; d <= o.degree_max; ++d) cfg.degrees.push_back(d);
  cfg.ell = o.ell;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.extra_terms = o.extra_terms;
  cfg.threads = o.threads;
  ExperimentReport rep = generic_experiment(cfg);
  out << experiment_csv(rep);
  for (const auto& [key, med] : rep.medians) {
    err << "median r=" << key.first << " d=" << key.second << ": " << med
        << " (soft bound " << std::fixed << std::setprecision(2)
        << soft_bound(static_cast<double>(key.first), static_cast<double>(key.second)) << ")\n"
        << std::defaultfloat;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bruteforce

struct BruteForceOptions {
  InputOptions input;
  std::size_t order = 2;
  std::size_t degree = 1;
  long coeff_bound = 9;
  long init_bound = 9;
  std::size_t horizon = 20;
  std::size_t target_index = 8;
  std::string target_value;
  std::size_t keep = 16;
  unsigned threads = 1;
  bool huge = false;
  bool json = false;
};

IntVector central_delannoy(std::size_t count) {
  IntVector out;
  for (std::size_t n = 0; n < count; ++n) {
    Int s = 0;
    for (std::size_t k = 0; k <= n; ++k) s += binomial(Int(static_cast<unsigned long>(n)), k) *
                                              binomial(Int(static_cast<unsigned long>(n + k)), k);
    out.push_back(s);
  }
  return out;
}

int run_bruteforce(const BruteForceOptions& o, std::ostream& out) {
  BruteForceSpec spec;
  spec.order = o.order;
  spec.degree = o.degree;
  spec.coeff_bound = o.coeff_bound;
  spec.init_bound = o.init_bound;
  spec.horizon = o.horizon;
  spec.target_index = o.target_index;
  spec.keep = o.keep;
  spec.threads = o.threads;
  if (o.huge) spec.budget = std::numeric_limits<double>::infinity();

  IntVector reference;
  if (!o.input.terms.empty() || !o.input.bfiles.empty()) {
    SequenceData d = load_single(o.input);
    if (!d.integral()) throw UsageError("reference terms must be integers");
    for (const auto& x : d.terms) reference.push_back(x.get_num());
  } else {
    reference = central_delannoy(o.horizon + 1);
  }
  spec.reference = reference;
  if (!o.target_value.empty()) {
    spec.target_value = parse_int(o.target_value);
  } else if (o.target_index < reference.size()) {
    spec.target_value = reference[o.target_index];
  } else {
    throw UsageError("--target-value required beyond the reference terms");
  }

  BruteForceResult res = brute_force_single_term(spec);
  if (o.json) {
    Json j;
    j["recurrences"] = res.recurrences;
    j["integral"] = res.integral;
    j["targetIndex"] = spec.target_index;
    j["targetValue"] = spec.target_value.get_str();
    j["count"] = res.count;
    Json per = Json::array();
    for (std::size_t n = spec.order; n < res.per_index.size(); ++n) per.push_back({{"n", n}, {"count", res.per_index[n]}});
    j["perIndex"] = std::move(per);
    Json matches = Json::array();
    for (const auto& m : res.matches) {
      Json init = Json::array();
      for (const auto& x : m.initial) init.push_back(x.get_str());
      matches.push_back({{"recurrence", format(m.rec)}, {"initial", std::move(init)}});
    }
    j["matches"] = std::move(matches);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "recurrences: " << res.recurrences << '\n';
  out << "integral sequences: " << res.integral << '\n';
  out << "a(" << spec.target_index << ") = " << spec.target_value << ": " << res.count << '\n';
  out << "n,count\n";
  for (std::size_t n = spec.order; n < res.per_index.size(); ++n) out << n << ',' << res.per_index[n] << '\n';
  for (const auto& m : res.matches) out << "match: " << format(m.rec) << "  initial " << to_string(m.initial) << '\n';
  return 0;
}

}  // namespace

RatVector parse_terms(const std::string& text) {
  RatVector out;
  std::string tok;
  for (char ch : text + ",") {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!tok.empty()) out.push_back(parse_rat(tok));
      tok.clear();
    } else {
      tok += ch;
    }
  }
  if (out.empty()) throw UsageError("--terms: no terms given");
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> default_grid(std::size_t last_index,
                                                               std::size_t max_order,
                                                               std::size_t max_degree) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 1; r <= max_order && r <= last_index; ++r) {
    for (std::size_t d = 0; d <= max_degree && (r + 1) * (d + 2) <= 3 * last_index; ++d) cells.emplace_back(r, d);
  }
  std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    const std::size_t ma = (a.first + 1) * (a.second + 1);
    const std::size_t mb = (b.first + 1) * (b.second + 1);
    return ma != mb ? ma < mb : a.first < b.first;
  });
  return cells;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Guess linear recurrences with polynomial coefficients from sequence terms"};
  app.require_subcommand(1);

  GuessOptions go;
  auto* guess = app.add_subcommand("guess", "guess a recurrence");
  add_input_options(guess, go.input, false);
  guess->add_option("--order", go.order, "recurrence order r");
  guess->add_option("--degree", go.degree, "coefficient degree d");
  guess->add_option("--degree-min", go.degree_min, "lowest degree of the sweep (incremental)");
  guess->add_option("--degree-max", go.degree_max, "highest degree of the sweep (incremental)");
  guess->add_option("--max-order", go.max_order, "largest order of the search grid");
  guess->add_option("--max-degree", go.max_degree, "largest degree of the search grid");
  guess->add_option("--basis", go.basis, "standard, shifted, binomial, shifted-binomial or all")
      ->capture_default_str();
  guess->add_option("--algorithm", go.algorithm, "classical, hnf-lll, modular or incremental")
      ->capture_default_str();
  guess->add_option("--primes", go.primes, "pinned primes for the modular algorithm, p1,p2,...");
  guess->add_option("--plausibility-terms", go.plausibility_terms,
                    "further terms that must come out integral (0 disables)")
      ->capture_default_str();
  guess->add_option("--lll-delta", go.lll_delta, "LLL parameter delta")->capture_default_str();
  guess->add_flag("--json", go.json, "JSON report");

  MinTermsOptions mo;
  auto* minterms = app.add_subcommand("minterms", "smallest prefix from which the recurrence is guessed");
  MinTermsOptions co;
  auto* compare = app.add_subcommand("compare", "classical vs lattice minimal term counts (CSV)");
  for (auto [cmd, opt] : {std::pair{minterms, &mo}, std::pair{compare, &co}}) {
    add_input_options(cmd, opt->input, cmd == compare);
    cmd->add_option("--order", opt->order, "recurrence order r")->required();
    cmd->add_option("--degree", opt->degree, "coefficient degree d");
    cmd->add_option("--degree-min", opt->degree_min, "lowest degree");
    cmd->add_option("--degree-max", opt->degree_max, "highest degree");
    cmd->add_option("--basis", opt->basis, "basis family or all")->capture_default_str();
    cmd->add_option("--algorithm", opt->algorithm, "classical, hnf-lll, modular or incremental")
        ->capture_default_str();
    cmd->add_option("--primes", opt->primes, "pinned primes for the modular algorithm");
    cmd->add_option("--plausibility-terms", opt->plausibility_terms, "integrality horizon (incremental)")
        ->capture_default_str();
    cmd->add_option("--lll-delta", opt->lll_delta, "LLL parameter delta")->capture_default_str();
    if (cmd == minterms) cmd->add_flag("--json", opt->json, "JSON report");
  }

  BoundOptions bo;
  auto* bound = app.add_subcommand("bound", "soft bound, Bombieri-Vaaler bound and its estimate");
  add_input_options(bound, bo.input, false);
  bound->add_option("--order", bo.order, "order r")->capture_default_str();
  bound->add_option("--degree", bo.degree, "degree d (fractional allowed for the soft bound)")
      ->capture_default_str();
  bound->add_option("--ell", bo.ell, "coefficient bitsize of the random instance")->capture_default_str();
  bound->add_option("--seed", bo.seed, "compare estimate and exact value on a random instance");
  bound->add_option("--rows", bo.rows, "rows k of the random instance (default (r+1)(d+1)-1)");
  bound->add_flag("--json", bo.json, "JSON report");

  ExperimentOptions eo;
  auto* experiment = app.add_subcommand("experiment", "minimal N for random recurrences (CSV)");
  experiment->add_option("--order", eo.orders, "orders, comma separated")->delimiter(',')->capture_default_str();
  experiment->add_option("--degree-min", eo.degree_min)->capture_default_str();
  experiment->add_option("--degree-max", eo.degree_max)->capture_default_str();
  experiment->add_option("--trials", eo.trials)->capture_default_str();
  experiment->add_option("--seed", eo.seed)->capture_default_str();
  experiment->add_option("--ell", eo.ell)->capture_default_str();
  experiment->add_option("--extra-terms", eo.extra_terms, "terms beyond the classical threshold")
      ->capture_default_str();
  experiment->add_option("--threads", eo.threads)->capture_default_str();

  BruteForceOptions fo;
  auto* brute = app.add_subcommand("bruteforce", "count small recurrences matching a single term");
  add_input_options(brute, fo.input, false);
  brute->add_option("--order", fo.order)->capture_default_str();
  brute->add_option("--degree", fo.degree)->capture_default_str();
  brute->add_option("--coeff-bound", fo.coeff_bound, "bound on |c_ij|")->capture_default_str();
  brute->add_option("--init-bound", fo.init_bound, "initial values in 0..bound")->capture_default_str();
  brute->add_option("--horizon", fo.horizon, "last index that must be integral")->capture_default_str();
  brute->add_option("--target-index", fo.target_index)->capture_default_str();
  brute->add_option("--target-value", fo.target_value, "default: reference term at the target index");
  brute->add_option("--keep", fo.keep, "list matches when at most this many")->capture_default_str();
  brute->add_option("--threads", fo.threads)->capture_default_str();
  brute->add_flag("--huge", fo.huge, "lift the candidate budget");
  brute->add_flag("--json", fo.json, "JSON report");

  std::vector<const char*> argv{"zguess"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (guess->parsed()) return run_guess(go, out);
    if (minterms->parsed()) return run_minterms(mo, out);
    if (compare->parsed()) return run_compare(co, out);
    if (bound->parsed()) return run_bound(bo, out);
    if (experiment->parsed()) return run_experiment(eo, out, err);
    if (brute->parsed()) return run_bruteforce(fo, out);
  } catch (const BFileError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (use --huge to run anyway)\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace zguess::cli
