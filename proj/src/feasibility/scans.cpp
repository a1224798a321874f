#include "regspec/feasibility/scans.hpp"

#include <algorithm>
#include <thread>

#include "regspec/error.hpp"

namespace regspec {

namespace {

using S = QuadraticSurd;

std::string str(const Rational& q) { return to_string(q); }

}  // namespace

std::vector<NonIntegerScanEntry> scan_noninteger(long kmin, long kmax) {
  if (kmin < 2) throw Error(Errc::InvalidArgument, "scan_noninteger: k must be at least 2");
  std::vector<NonIntegerScanEntry> out;
  for (long k = kmin; k <= kmax; ++k) {
    NonIntegerScanEntry e;
    e.k = k;
    for (long n = k + 2; n <= 2 * k; ++n) {
      if ((2 * (k - 1)) % (n - 2) == 0) e.admissible_orders.push_back(n);
    }
    e.n = 2 * k;
    // alpha, beta = (-k + 1 +- sqrt((kn-k-1)(n-k-1)))/(n-2) at n = 2k
    const Integer n(e.n), kk(k);
    const Integer radicand = (kk * n - kk - 1) * (n - kk - 1);
    e.alpha = S(fraction(1 - k, e.n - 2), fraction(1, e.n - 2), radicand);
    e.beta = S(fraction(1 - k, e.n - 2), fraction(-1, e.n - 2), radicand);
    e.partition_degree = fraction(k - 1, 2);
    const S t = (S(k) - e.alpha) * (S(k) - e.beta);
    const S u = (S(-1) - e.alpha) * (S(-1) - e.beta);
    e.same_adjacent = e.alpha + e.beta + (t + u) / Rational(e.n);
    e.same_nonadjacent = (t + u) / Rational(e.n);

    PutativeSpectrum ps;
    ps.n = e.n;
    ps.k = k;
    ps.lambda2 = S(-1);
    ps.lambda3 = e.alpha;
    ps.lambda4 = e.beta;
    ps.m = Rational(k - 1);
    e.pipeline = feasibility_pipeline(ps);

    bool contradiction = true;
    if (k == 2) {
      e.certificate = "k = 2: G = C_4 is bipartite with three distinct eigenvalues, and m = 1 < 2";
    } else if (k % 2 == 1) {
      e.certificate = "k odd: same-half adjacent common neighbours k/2 - 1 = " + e.same_adjacent.to_string() + " not integral";
      contradiction = !e.same_adjacent.is_integer();
    } else {
      e.certificate = "k even: partition degree (k-1)/2 = " + str(e.partition_degree) + " not integral";
      contradiction = !is_integer(e.partition_degree);
    }
    if (e.alpha.is_rational()) {
      e.certificate += "; 2k+1 = " + std::to_string(2 * k + 1) + " is a square, so alpha and beta are integers anyway";
    }
    e.feasible = !contradiction && e.pipeline.feasible;
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<std::string> integer_case_check(long n, long k, long alpha, const Integer& beta, long c) {
  const Integer N(n), K(k), A(alpha);
  // same-half adjacent common neighbours of the halves partition
  const Rational t = Rational(Integer((K - A) * (K - beta))), u = Rational(Integer((1 + A) * (1 + beta)));
  const Rational same_adj = Rational(Integer(A + beta)) + (t + u) / Rational(N);
  if (c == 1 && same_adj < 0) {
    return "c = 1: same-half adjacent common neighbours " + str(same_adj) + " (k - n/2 - 1 = " +
           str(Rational(k - 1) - fraction(n, 2)) + ") < 0";
  }
  if (c == 2 && same_adj < 0) {
    return "c = 2: same-half adjacent common neighbours " + str(same_adj) + " (k - n - 1 = " + std::to_string(k - n - 1) +
           ") < 0";
  }
  if (c == 3) {
    const Integer s1 = 2 * (N - K - 1) * A * A;
    const Integer s2 = (3 * N * N - (2 * K + 4) * N + 2 * K * K - 2) * A;
    const Integer s3 = (K - 3) * N + 2 * K * K + 2 * K;
    if (s1 > 0 && s2 > 0 && s3 >= 0) {
      return "c = 3 needs " + to_string(s1) + " + " + to_string(s2) + " + " + to_string(s3) +
             " = 0, all summands >= 0 and the first positive";
    }
  }
  return std::nullopt;
}

IntegerScanEntry scan_integer_triple(long n, long k, long alpha) {
  IntegerScanEntry e;
  e.n = n;
  e.k = k;
  e.alpha = alpha;
  const Integer N(n), K(k), A(alpha);
  e.beta = fraction(-(K * (N - K) + (K - 1) * A - 1), (N - 2) * A + K - 1);
  auto fail = [&](const char* what, std::string why) {
    e.failed = what;
    e.certificate = std::move(why);
    return e;
  };
  if (!is_integer(e.beta)) return fail("beta", "beta = " + str(e.beta) + " not integral");
  if (e.beta > -2) return fail("beta", "beta = " + str(e.beta) + " > -2");
  const Rational& b = e.beta;

  e.m = Rational((-(Rational(K) - 1) - (Rational(N) - 2) * b) / (Rational(A) - b));
  if (!is_integer(*e.m) || *e.m < 2 || *e.m > n - 4) {
    return fail("multiplicity", "m = " + str(*e.m) + " not an integer in [2, " + std::to_string(n - 4) + "]");
  }

  e.c = Rational(-2 * (1 + Rational(A)) * (1 + b) / Rational(N));
  if (!is_integer(*e.c) || *e.c <= 0) return fail("c_integral", "c = " + str(*e.c) + " not a positive integer");
  const Rational bound = fraction(4 * (n - k - 1), n);
  if (*e.c >= bound) {
    return fail("c_bound", "c = " + str(*e.c) + " >= 4(n-k-1)/n = " + str(bound));
  }
  const long c_int = e.c->get_num().get_si();

  if (auto why = integer_case_check(n, k, alpha, b.get_num(), c_int)) {
    return fail(("case" + std::to_string(c_int)).c_str(), *why);
  }

  PutativeSpectrum ps;
  ps.n = n;
  ps.k = K;
  ps.lambda2 = S(-1);
  ps.lambda3 = S(alpha);
  ps.m = *e.m;
  ps.lambda4 = S(b);
  const FeasibilityReport r = feasibility_pipeline(ps);
  if (!r.feasible) {
    const auto& cond = r.conditions[*r.first_failure];
    return fail(("pipeline:" + cond.name).c_str(), cond.witness);
  }
  e.feasible = true;
  e.certificate = "all necessary conditions hold";
  return e;
}

IntegerScanReport scan_integer(long n_max, unsigned threads, long n_min) {
  IntegerScanReport rep;
  rep.n_min = std::max<long>(n_min + (n_min % 2), 4);
  rep.n_max = n_max;
  std::vector<long> orders;
  for (long n = rep.n_min; n <= n_max; n += 2) orders.push_back(n);
  std::vector<std::vector<IntegerScanEntry>> per_order(orders.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < orders.size(); i += stride) {
      const long n = orders[i];
      for (long k = 3; k <= n - 2; ++k) {
        for (long a = 1; a <= k - 1; ++a) per_order[i].push_back(scan_integer_triple(n, k, a));
      }
    }
  };
  threads = std::max(1U, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  for (auto& chunk : per_order) {
    for (auto& e : chunk) {
      if (e.feasible) ++rep.feasible_count;
      else ++rep.failures[e.failed];
      if (e.failed == "c_bound") ++rep.bound_violations;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

}  // namespace regspec
