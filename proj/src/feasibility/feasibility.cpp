#include "regspec/feasibility/feasibility.hpp"

#include <sstream>

#include "regspec/error.hpp"
#include "regspec/feasibility/surd.hpp"

namespace regspec {

std::optional<PutativeSpectrum> PutativeSpectrum::from_spectrum(const Spectrum& s) {
  if (s.distinct() != 4 || s.simple_count() != 2) return std::nullopt;
  const auto& es = s.entries();
  if (es[0].multiplicity != 1 || !es[0].value.is_integer()) return std::nullopt;
  PutativeSpectrum ps;
  ps.n = static_cast<long>(s.order());
  ps.k = es[0].value.value();
  std::vector<const SpectrumEntry*> rest;
  for (std::size_t i = 1; i < 4; ++i) {
    if (es[i].value.kind() == AlgebraicNumber::Kind::Isolated) return std::nullopt;
    if (es[i].multiplicity == 1) {
      ps.lambda2 = QuadraticSurd::from_algebraic(es[i].value);
    } else {
      rest.push_back(&es[i]);
    }
  }
  ps.lambda3 = QuadraticSurd::from_algebraic(rest[0]->value);
  ps.m = Rational(static_cast<long>(rest[0]->multiplicity));
  ps.lambda4 = QuadraticSurd::from_algebraic(rest[1]->value);
  return ps;
}

std::string PutativeSpectrum::to_string() const {
  std::ostringstream out;
  out << "n=" << n << " {[" << regspec::to_string(k) << "]^1, [" << lambda2.to_string() << "]^1, [" << lambda3.to_string()
      << "]^" << regspec::to_string(m) << ", [" << lambda4.to_string() << "]^"
      << regspec::to_string(Rational(Rational(n - 2) - m)) << "}";
  return out.str();
}

BetaM derive_beta_m(const Integer& n, const Integer& k, const Rational& a) {
  const Rational nn(n), kk(k);
  const Rational beta_den = nn - kk - a - 2;
  const Rational m_den = kk * kk + (2 - nn) * kk + a * a + 2 * a - nn + 2;
  if (beta_den == 0) throw Error(Errc::DegenerateDenominator, "derive_beta_m: n - k - alpha - 2 = 0");
  if (m_den == 0) throw Error(Errc::DegenerateDenominator, "derive_beta_m: k^2 + (2-n)k + alpha^2 + 2alpha - n + 2 = 0");
  BetaM r;
  r.beta = Rational((kk * nn - kk * kk - kk - a * a - a) / beta_den);
  r.m = Rational(nn - 1 + (nn - kk - 1) * (nn - 2 * a - 2) / m_den);
  return r;
}

namespace {

using S = QuadraticSurd;

class Pipeline {
 public:
  explicit Pipeline(const PutativeSpectrum& ps)
      : n_(ps.n),
        k_(Rational(ps.k)),
        l2_(ps.lambda2),
        l3_(ps.lambda3),
        l4_(ps.lambda4),
        m3_(ps.m),
        m4_(Rational(ps.n - 2) - ps.m) {
    Integer d = 0;
    for (const S* v : {&l2_, &l3_, &l4_}) {
      if (v->is_rational()) continue;
      if (d != 0 && d != v->d()) throw Error(Errc::InvalidArgument, "feasibility_pipeline: values in different quadratic fields");
      d = v->d();
    }
  }

  FeasibilityReport run() {
    multiplicities();
    trace();
    trace_of_squares();
    partition_degrees();
    divisibility();
    common_neighbors();
    exclusions();
    derived();
    r_.feasible = !r_.first_failure.has_value();
    return std::move(r_);
  }

 private:
  Rational n_, k_;
  S l2_, l3_, l4_;
  Rational m3_, m4_;
  FeasibilityReport r_;

  void add(const char* name, bool ok, std::string witness) {
    if (!ok && !r_.first_failure) r_.first_failure = r_.conditions.size();
    r_.conditions.push_back({name, ok, std::move(witness)});
  }

  // first + lambda2-term + m lambda3-term + (n-2-m) lambda4-term
  S weighted(const S& a, const S& b, const S& c, const S& d) const { return a + b + S(m3_) * c + S(m4_) * d; }

  void multiplicities() {
    std::string why;
    const S k(k_);
    if ((k - l2_).sign() <= 0 || (k - l3_).sign() <= 0 || (k - l4_).sign() <= 0) why = "a value is not below k";
    else if (l2_ == l3_ || l2_ == l4_ || l3_ == l4_) why = "values not distinct";
    else if (!is_integer(m3_)) why = "m = " + to_string(m3_) + " not integral";
    else if (m3_ < 2 || m4_ < 2) why = "m = " + to_string(m3_) + " outside [2, n-4] = [2, " + to_string(Rational(n_ - 4)) + "]";
    else if (!l2_.is_rational()) why = "simple value " + l2_.to_string() + " irrational";
    else if ((!l3_.is_rational() || !l4_.is_rational()) && (!(l4_ == l3_.conjugate()) || m3_ != m4_)) {
      why = "irrational values not a conjugate pair of equal multiplicity";
    }
    add("multiplicities", why.empty(), why.empty() ? "m = " + to_string(m3_) + ", n-2-m = " + to_string(m4_) : why);
  }

  void trace() {
    const S t = weighted(S(k_), l2_, l3_, l4_);
    add("trace", t.sign() == 0, "trace = " + t.to_string());
  }

  void trace_of_squares() {
    const S t = weighted(S(k_ * k_), l2_ * l2_, l3_ * l3_, l4_ * l4_);
    const S kn(k_ * n_);
    add("trace_of_squares", t == kn, "sum of squares = " + t.to_string() + ", kn = " + kn.to_string());
  }

  void partition_degrees() {
    std::string why;
    if (!is_integer(Rational(n_ / 2))) why = "n odd";
    else if (!l2_.is_integer()) why = "lambda2 = " + l2_.to_string() + " not integral";
    else if (!is_integer(Rational((k_ + l2_.rational()) / 2))) why = "(k + lambda2)/2 = " + to_string(Rational((k_ + l2_.rational()) / 2)) + " not integral";
    std::string ok;
    if (why.empty()) {
      ok = "halves degrees (" + to_string(Rational((k_ + l2_.rational()) / 2)) + ", " + to_string(Rational((k_ - l2_.rational()) / 2)) + ")";
    }
    add("partition_degrees", why.empty(), why.empty() ? ok : why);
  }

  void divisibility() {
    const S p = (S(k_) - l3_) * (S(k_) - l4_);
    const S q = (l2_ - l3_) * (l2_ - l4_);
    const S sum = p + q, diff = p - q;
    std::string why;
    auto divisible = [&](const S& v) { return v.is_integer() && divides(n_.get_num(), v.rational().get_num()); };
    if (!sum.is_integer() || !diff.is_integer()) why = "P + Q = " + sum.to_string() + ", P - Q = " + diff.to_string() + " not integral";
    else if (!divisible(sum)) why = to_string(n_) + " does not divide P + Q = " + sum.to_string();
    else if (!divisible(diff)) why = to_string(n_) + " does not divide P - Q = " + diff.to_string();
    add("divisibility", why.empty(), why.empty() ? "n | " + sum.to_string() + " and n | " + diff.to_string() : why);
  }

  void common_neighbors() {
    const S t = (S(k_) - l3_) * (S(k_) - l4_);
    const S u = (l2_ - l3_) * (l2_ - l4_);
    const S l34 = l3_ + l4_;
    struct Kind {
      const char* label;
      S value;
      bool exists;
      bool adjacent;
    };
    // pair types that occur under the halves partition
    bool same_adj = true, same_non = true, cross_adj = true, cross_non = true;
    if (l2_.is_rational() && is_integer(Rational(n_ / 2))) {
      const Rational inner = (k_ + l2_.rational()) / 2, outer = (k_ - l2_.rational()) / 2, half = n_ / 2;
      same_adj = inner > 0;
      same_non = half - 1 - inner > 0;
      cross_adj = outer > 0;
      cross_non = half - outer > 0;
    }
    const Kind kinds[] = {
        {"same-half adjacent", l34 + (t + u) / n_, same_adj, true},
        {"same-half non-adjacent", (t + u) / n_, same_non, false},
        {"cross adjacent", l34 + (t - u) / n_, cross_adj, true},
        {"cross non-adjacent", (t - u) / n_, cross_non, false},
    };
    std::string why, values;
    for (const auto& kd : kinds) {
      if (!values.empty()) values += ", ";
      values += std::string(kd.label) + " " + kd.value.to_string();
      if (!kd.exists || !why.empty()) continue;
      const Rational cap = kd.adjacent ? Rational(k_ - 1) : k_;
      if (!kd.value.is_integer()) why = std::string(kd.label) + " value " + kd.value.to_string() + " not integral";
      else if (kd.value.sign() < 0) why = std::string(kd.label) + " value " + kd.value.to_string() + " negative";
      else if (kd.value.rational() > cap) why = std::string(kd.label) + " value " + kd.value.to_string() + " exceeds " + to_string(cap);
    }
    add("common_neighbors", why.empty(), why.empty() ? values : why);
  }

  void exclusions() {
    std::string why;
    const S minus_one(-1);
    const bool below = (l2_ - minus_one).sign() < 0 || (l3_ - minus_one).sign() < 0 || (l4_ - minus_one).sign() < 0;
    const bool positive = l2_.sign() > 0 || l3_.sign() > 0 || l4_.sign() > 0;
    if (!below) why = "least eigenvalue >= -1: only complete graphs";
    else if (!positive) why = "k the only positive eigenvalue: complete multipartite, three eigenvalues";
    add("exclusions", why.empty(), why.empty() ? "least eigenvalue < -1, second positive eigenvalue present" : why);
  }

  void derived() {
    const S minus_one(-1);
    if (l2_.is_rational() && (l3_ == minus_one || l4_ == minus_one)) {
      try {
        const BetaM bm = derive_beta_m(n_.get_num(), k_.get_num(), l2_.rational());
        r_.beta = bm.beta;
        r_.m = bm.m;
      } catch (const Error&) {
      }
    }
    if (l2_ == minus_one) {
      const S c = S(-2) * (S(1) + l3_) * (S(1) + l4_) / n_;
      if (c.is_rational()) r_.c = c.rational();
    }
  }
};

}  // namespace

FeasibilityReport feasibility_pipeline(const PutativeSpectrum& ps) {
  if (ps.n <= 0) throw Error(Errc::InvalidArgument, "feasibility_pipeline: n must be positive");
  return Pipeline(ps).run();
}

}  // namespace regspec
