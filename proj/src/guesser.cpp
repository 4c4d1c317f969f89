#include "zguess/guesser.hpp"

#include <stdexcept>

#include "zguess/modular.hpp"

namespace zguess {

void GuessProblem::validate() const {
  if (data.terms.empty()) throw std::invalid_argument("GuessProblem: no data");
  if (data.last_index() < order) throw std::invalid_argument("GuessProblem: fewer terms than order + 1");
  if (degree_min > degree_max) throw std::invalid_argument("GuessProblem: degree_min > degree_max");
}

GuessMatrix build_matrix(const GuessProblem& p, std::size_t degree) {
  const std::size_t r = p.order;
  if (p.data.terms.empty() || p.data.last_index() < r) {
    throw std::invalid_argument("build_matrix: fewer terms than order + 1");
  }
  const std::size_t k = p.data.last_index() - r + 1;
  const std::size_t width = r + 1;
  GuessMatrix g{IntMatrix(k, width * (degree + 1)), r, degree};
  const bool integral = p.data.integral();
  IntVector basis_values(degree + 1);
  RatVector row(g.cols());
  for (std::size_t n = 0; n < k; ++n) {
    const Int nn(static_cast<unsigned long>(n));
    for (std::size_t j = 0; j <= degree; ++j)
      basis_values[j] = eval_basis(p.family, static_cast<unsigned>(j), nn);
    if (integral) {
      for (std::size_t j = 0; j <= degree; ++j)
        for (std::size_t i = 0; i < width; ++i)
          g.m(n, (degree - j) * width + i) = basis_values[j] * p.data.terms[n + i].get_num();
      continue;
    }
    Int den = 1;
    for (std::size_t i = 0; i < width; ++i) den = lcm(den, p.data.terms[n + i].get_den());
    for (std::size_t i = 0; i < width; ++i) {
      Int scaled = p.data.terms[n + i].get_num() * (den / p.data.terms[n + i].get_den());
      for (std::size_t j = 0; j <= degree; ++j)
        g.m(n, (degree - j) * width + i) = basis_values[j] * scaled;
    }
  }
  return g;
}

namespace {

long overdetermination(const GuessProblem& p, std::size_t degree) {
  const long k = static_cast<long>(p.data.last_index() - p.order + 1);
  return k - static_cast<long>((p.order + 1) * (degree + 1));
}

bool is_kernel_vector(const IntMatrix& m, const IntVector& v) { return is_zero(m * v); }

GuessResult base_result(const GuessProblem& p, std::size_t degree) {
  GuessResult res;
  res.overdetermination = overdetermination(p, degree);
  res.degree = degree;
  return res;
}

}  // namespace

GuessResult guess_classical(const GuessProblem& p) {
  p.validate();
  GuessResult res = base_result(p, p.degree);
  GuessMatrix g = build_matrix(p, p.degree);
  std::vector<RatVector> null = rational_nullspace(g.m);
  res.kernel_dim = null.size();
  if (null.size() != 1) return res;
  Int den = 1;
  for (const auto& x : null.front()) den = lcm(den, x.get_den());
  IntVector v(null.front().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(null.front()[i] * den).get_num();
  Recurrence rec = Recurrence::from_vector(v, p.order, p.degree, p.family);
  if (fits_data(rec, p.data)) res.recurrence = std::move(rec);
  return res;
}

GuessResult guess_alg1(const GuessProblem& p) {
  p.validate();
  GuessResult res = base_result(p, p.degree);
  GuessMatrix g = build_matrix(p, p.degree);
  std::vector<IntVector> kernel = integer_kernel(g.m);
  res.kernel_dim = kernel.size();
  if (kernel.empty()) return res;
  LatticeBasis reduced = lll_reduce(LatticeBasis::trusted(std::move(kernel)), p.params);
  res.recurrence = Recurrence::from_vector(reduced[0], p.order, p.degree, p.family);
  return res;
}

GuessResult guess_alg2(const GuessProblem& p) {
  p.validate();
  GuessResult res = base_result(p, p.degree);
  GuessMatrix g = build_matrix(p, p.degree);
  PrimeSequence primes(p.primes);
  ModularKernel current = kernel_mod_p(g.m, primes.next());
  res.kernel_dim = current.dimension();
  if (current.dimension() == 0) return res;

  constexpr int kMaxPrimes = 100000;
  for (int iter = 0; iter < kMaxPrimes; ++iter) {
    ModularKernel next = kernel_mod_p(g.m, primes.next());
    if (next.dimension() < current.dimension() ||
        (next.dimension() == current.dimension() && next.pivot_cols < current.pivot_cols)) {
      // the accumulated modulus was unlucky: restart from the new prime
      current = std::move(next);
      res.kernel_dim = current.dimension();
      if (current.dimension() == 0) return res;
      continue;
    }
    if (next.pivot_cols != current.pivot_cols) continue;  // new prime is unlucky
    current = crt_merge(current, next);
    LatticeBasis reduced = lll_reduce(lift_lattice(current), p.params);
    const IntVector& w = reduced[0];
    if (!is_kernel_vector(g.m, w)) continue;
    Recurrence rec = Recurrence::from_vector(w, p.order, p.degree, p.family);
    if (!fits_data(rec, p.data)) continue;
    res.recurrence = std::move(rec);
    res.modulus = current.modulus;
    return res;
  }
  throw std::runtime_error("guess_alg2: no convergence after " + std::to_string(kMaxPrimes) + " primes");
}

GuessResult guess_alg3(const GuessProblem& p, const Plausibility& plausible,
                       std::vector<SweepStep>* trace) {
  p.validate();
  const std::size_t width = p.order + 1;
  Plausibility check = plausible;
  if (!check) {
    if (p.data.integral()) {
      check = [&p](const Recurrence& rec) {
        return integrality_check(rec, p.data, p.plausibility_terms);
      };
    } else {
      check = [](const Recurrence&) { return true; };
    }
  }

  GuessResult res = base_result(p, p.degree_min);
  LatticeBasis reduced;
  for (std::size_t d = p.degree_min; d <= p.degree_max; ++d) {
    GuessMatrix g = build_matrix(p, d);
    std::vector<IntVector> kernel = integer_kernel(g.m);
    res = base_result(p, d);
    res.kernel_dim = kernel.size();

    std::vector<IntVector> fresh;
    LatticeBasis prefix;
    if (d == p.degree_min) {
      fresh = kernel;
    } else {
      // kernel rows are in Hermite normal form: those with a nonzero entry
      // among the first r+1 columns come first
      for (const auto& v : kernel) {
        bool leading_zero = true;
        for (std::size_t i = 0; i < width && leading_zero; ++i) leading_zero = (v[i] == 0);
        if (leading_zero) break;
        fresh.push_back(v);
      }
      std::vector<IntVector> padded;
      for (const auto& w : reduced.vectors()) {
        IntVector v(width, Int(0));
        v.insert(v.end(), w.begin(), w.end());
        padded.push_back(std::move(v));
      }
      prefix = LatticeBasis::trusted(std::move(padded));
    }

    SweepStep step;
    step.degree = d;
    if (trace) {
      step.kernel = kernel;
      step.lll_input = prefix.vectors();
      step.lll_input.insert(step.lll_input.end(), fresh.begin(), fresh.end());
    }
    if (prefix.empty() && fresh.empty()) {
      reduced = LatticeBasis{};
      if (trace) trace->push_back(std::move(step));
      continue;
    }
    reduced = lll_reduce_with_prefix(prefix, fresh, p.params);
    Recurrence rec = Recurrence::from_vector(reduced[0], p.order, d, p.family);
    step.plausible = check(rec);
    if (trace) {
      step.reduced = reduced.vectors();
      trace->push_back(std::move(step));
    }
    if (step.plausible) {
      res.recurrence = std::move(rec);
      return res;
    }
  }
  return res;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kClassical: return "classical";
    case Method::kHnfLll: return "hnf-lll";
    case Method::kModular: return "modular";
    case Method::kIncremental: return "incremental";
  }
  return "?";
}

std::optional<Method> parse_method_name(std::string_view name) {
  for (auto m : {Method::kClassical, Method::kHnfLll, Method::kModular, Method::kIncremental}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

GuessResult run_method(Method method, const GuessProblem& p) {
  switch (method) {
    case Method::kClassical: return guess_classical(p);
    case Method::kHnfLll: return guess_alg1(p);
    case Method::kModular: return guess_alg2(p);
    case Method::kIncremental: return guess_alg3(p);
  }
  throw std::logic_error("run_method: unknown method");
}

std::optional<std::size_t> min_terms(const SequenceData& full_data, const MinTermsQuery& q) {
  if (q.degree_min > q.degree_max) throw std::invalid_argument("min_terms: degree_min > degree_max");
  std::vector<BasisFamily> families =
      q.method == Method::kClassical
          ? std::vector<BasisFamily>{BasisFamily::standard()}
          : (q.families.empty() ? default_families(q.order) : q.families);

  for (std::size_t len = q.order + 1; len <= full_data.size(); ++len) {
    SequenceData prefix = full_data.prefix(len);
    for (const auto& family : families) {
      GuessProblem p;
      p.data = prefix;
      p.order = q.order;
      p.degree_min = q.degree_min;
      p.degree_max = q.degree_max;
      p.family = family;
      p.plausibility_terms = q.plausibility_terms;
      p.params = q.params;
      p.primes = q.primes;
      auto succeeds = [&](const GuessResult& res) {
        return res.recurrence && res.recurrence->order() <= full_data.last_index() &&
               fits_data(*res.recurrence, full_data);
      };
      if (q.method == Method::kIncremental) {
        if (succeeds(guess_alg3(p))) return len;
        continue;
      }
      for (std::size_t d = q.degree_min; d <= q.degree_max; ++d) {
        p.degree = d;
        if (succeeds(run_method(q.method, p))) return len;
      }
    }
  }
  return std::nullopt;
}

}  // namespace zguess
