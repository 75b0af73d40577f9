#include "ivol/bounds.hpp"

#include <mpfr.h>

#include <sstream>

#include "ivol/error.hpp"

namespace ivol {

LogExpr LogExpr::log(const Integer& c, const Rational& coefficient) {
  if (c < 1) throw Error(ErrorCode::invalid_input, "logarithm of a non-positive integer");
  LogExpr e;
  Rational k = coefficient;
  k.canonicalize();
  if (c != 1 && k != 0) e.logs_[c] = k;
  return e;
}

LogExpr& LogExpr::operator+=(const LogExpr& o) {
  constant_ += o.constant_;
  for (const auto& [c, b] : o.logs_) {
    auto& slot = logs_[c];
    slot += b;
    if (slot == 0) logs_.erase(c);
  }
  return *this;
}

LogExpr& LogExpr::operator-=(const LogExpr& o) { return *this += Rational(-1) * o; }

LogExpr operator*(const Rational& k, const LogExpr& e) {
  LogExpr r;
  if (k == 0) return r;
  r.constant_ = k * e.constant_;
  for (const auto& [c, b] : e.logs_) r.logs_[c] = k * b;
  return r;
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(unsigned long bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Enclosure of value in [lo, hi] with outward rounding.
void enclose(const LogExpr& e, const LogBase& base, unsigned long bits, mpfr_ptr lo, mpfr_ptr hi) {
  Mpfr t_lo(bits), t_hi(bits), l_lo(bits), l_hi(bits), b_lo(bits), b_hi(bits), q_lo(bits), q_hi(bits),
      z(bits);
  mpfr_set_q(lo, e.constant().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, e.constant().get_mpq_t(), MPFR_RNDU);
  for (const auto& [c, b] : e.logs()) {
    mpfr_set_z(z.get(), c.get_mpz_t(), MPFR_RNDD);
    mpfr_log(q_lo.get(), z.get(), MPFR_RNDD);
    mpfr_set_z(z.get(), c.get_mpz_t(), MPFR_RNDU);
    mpfr_log(q_hi.get(), z.get(), MPFR_RNDU);
    if (base.integer_base) {
      mpfr_set_ui(z.get(), *base.integer_base, MPFR_RNDN);
      mpfr_log(l_lo.get(), z.get(), MPFR_RNDD);
      mpfr_log(l_hi.get(), z.get(), MPFR_RNDU);
      mpfr_div(q_lo.get(), q_lo.get(), l_hi.get(), MPFR_RNDD);
      mpfr_div(q_hi.get(), q_hi.get(), l_lo.get(), MPFR_RNDU);
    }
    mpfr_set_q(b_lo.get(), b.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b_hi.get(), b.get_mpq_t(), MPFR_RNDU);
    if (b > 0) {
      mpfr_mul(t_lo.get(), b_lo.get(), q_lo.get(), MPFR_RNDD);
      mpfr_mul(t_hi.get(), b_hi.get(), q_hi.get(), MPFR_RNDU);
    } else {
      mpfr_mul(t_lo.get(), b_lo.get(), q_hi.get(), MPFR_RNDD);
      mpfr_mul(t_hi.get(), b_hi.get(), q_lo.get(), MPFR_RNDU);
    }
    mpfr_add(lo, lo, t_lo.get(), MPFR_RNDD);
    mpfr_add(hi, hi, t_hi.get(), MPFR_RNDU);
  }
}

Integer lcm_of_denominators(const LogExpr& e) {
  Integer l = e.constant().get_den();
  for (const auto& [c, b] : e.logs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_den_mpz_t());
  return l;
}

Integer power(const Integer& base, const Integer& exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return r;
}

// Exact test for value == 0. With the natural logarithm a nonzero rational
// constant makes the value nonzero (e^r is transcendental for rational r != 0),
// so only sum b_i log c_i = 0 remains, i.e. prod c_i^{b_i} = 1. In an integer
// base B the value is zero iff B^r prod c_i^{b_i} = 1.
bool is_zero(const LogExpr& e, const LogBase& base) {
  if (e.logs().empty()) return e.constant() == 0;
  if (!base.integer_base && e.constant() != 0) return false;
  const Integer den = lcm_of_denominators(e);
  Integer num = 1;
  Integer denom = 1;
  auto absorb = [&](const Integer& c, const Rational& b) {
    const Rational scaled = b * den;
    const Integer k = scaled.get_num();
    if (k == 0) return;
    if (abs(k) > Integer(1) << 24) {
      throw Error(ErrorCode::invalid_input, "exponent too large for exact comparison");
    }
    if (k > 0) {
      num *= power(c, k);
    } else {
      denom *= power(c, -k);
    }
  };
  for (const auto& [c, b] : e.logs()) absorb(c, b);
  if (base.integer_base && e.constant() != 0) absorb(Integer(*base.integer_base), e.constant());
  return num == denom;
}

}  // namespace

int LogExpr::sign(const LogBase& base) const {
  if (logs_.empty()) return sgn(constant_);
  bool zero_checked = false;
  for (unsigned long bits = 128; bits <= (1ul << 18); bits *= 4) {
    Mpfr lo(bits), hi(bits);
    enclose(*this, base, bits, lo.get(), hi.get());
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
    if (!zero_checked) {
      if (is_zero(*this, base)) return 0;
      zero_checked = true;
    }
  }
  throw Error(ErrorCode::invalid_input, "could not separate value from zero");
}

std::pair<double, double> LogExpr::enclosure(const LogBase& base, unsigned long bits) const {
  Mpfr lo(bits), hi(bits);
  enclose(*this, base, bits, lo.get(), hi.get());
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

double LogExpr::approx(const LogBase& base) const {
  auto [lo, hi] = enclosure(base);
  return (lo + hi) / 2;
}

std::string LogExpr::to_string(const LogBase& base) const {
  std::ostringstream out;
  bool first = true;
  if (constant_ != 0 || logs_.empty()) {
    out << constant_.get_str();
    first = false;
  }
  for (const auto& [c, b] : logs_) {
    if (!first) out << (b > 0 ? " + " : " - ");
    else if (b < 0) out << "-";
    first = false;
    const Rational m = abs(b);
    if (m != 1) out << m.get_str() << "*";
    out << (base.integer_base ? "log" + base.name() : std::string("ln")) << "(" << c.get_str() << ")";
  }
  return out.str();
}

LogExpr size_expr(const HomologyGroup& h) {
  return LogExpr(Integer(static_cast<unsigned long>(h.betti))) + LogExpr::log(h.torsion_order());
}

Integer theorem1_constant(std::size_t d) {
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, d + 1);
  return two_pow * static_cast<unsigned long>(d + 1) * factorial(d + 1);
}

LogExpr theorem1_threshold(std::size_t d, const std::vector<HomologyGroup>& h) {
  if (h.size() != d + 1) throw Error(ErrorCode::invalid_input, "need one homology group per degree 0..d");
  LogExpr total;
  for (const auto& g : h) total += size_expr(g);
  return Rational(1) / Rational(theorem1_constant(d)) * total;
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
  }
  return "?";
}

Inequality compare(std::string name, LogExpr left, Relation rel, LogExpr right, const LogBase& base) {
  Inequality q;
  q.name = std::move(name);
  const int s = (left - right).sign(base);
  q.holds = rel == Relation::le ? s <= 0 : rel == Relation::ge ? s >= 0 : s == 0;
  q.left = std::move(left);
  q.relation = rel;
  q.right = std::move(right);
  return q;
}

bool BoundReport::holds() const {
  for (const auto& l : lines) {
    if (!l.holds) return false;
  }
  return true;
}

BoundReport verify_theorem1(const Integer& broken, const LogExpr& threshold, const LogBase& base) {
  BoundReport rep;
  rep.base = base;
  auto q = compare("maximally broken trajectories >= threshold", LogExpr(broken), Relation::ge, threshold, base);
  q.left_source = "morse";
  q.right_source = "homology";
  rep.lines.push_back(std::move(q));
  return rep;
}

BoundReport verify_theorem3(const Integer& norm, std::size_t d, const std::vector<HomologyGroup>& h,
                            bool norm_certified, const LogBase& base) {
  if (h.size() != d + 1) throw Error(ErrorCode::invalid_input, "need one homology group per degree 0..d");
  BoundReport rep;
  rep.base = base;
  for (std::size_t p = 0; p <= d; ++p) {
    auto rank = compare("rank H_" + std::to_string(p) + " <= N", Integer(static_cast<unsigned long>(h[p].betti)),
                        Relation::le, norm, base);
    rank.left_source = "homology";
    rank.right_source = "norms";
    rank.certified = norm_certified;
    rep.lines.push_back(std::move(rank));

    const Integer exponent = binomial(d + 1, p + 1) * norm;
    const Integer t = h[p].torsion_order();
    Inequality tors;
    tors.name = "log|tors H_" + std::to_string(p) + "| <= log(d+1) C(d+1,p+1) N";
    tors.left = LogExpr::log(t);
    tors.relation = Relation::le;
    tors.right = LogExpr::log(Integer(static_cast<unsigned long>(d + 1)), Rational(exponent));
    // |tors| <= (d+1)^e; once e reaches the bit length of |tors| it holds
    // since (d+1)^e >= 2^e > |tors|
    const std::size_t bits = mpz_sizeinbase(t.get_mpz_t(), 2);
    if (t == 1 || exponent >= static_cast<unsigned long>(bits)) {
      tors.holds = true;
    } else {
      tors.holds = t <= power(Integer(static_cast<unsigned long>(d + 1)), exponent);
    }
    tors.left_source = "homology";
    tors.right_source = "norms";
    tors.certified = norm_certified;
    rep.lines.push_back(std::move(tors));
  }
  return rep;
}

bool binomial_identity_holds(std::size_t d) {
  Integer lhs = 0;
  for (std::size_t p = 0; p <= d; ++p) lhs += binomial(d + 1, p + 1);
  Integer full = 0;
  for (std::size_t p = 0; p <= d + 1; ++p) full += binomial(d + 1, p);
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, d + 1);
  return lhs == two_pow - 1 && lhs == full - 1;
}

BoundReport chain_of_inequalities(std::size_t d, const Integer& oriented_norm, const std::optional<Integer>& norm,
                                  const std::optional<std::vector<HomologyGroup>>& h, const LogBase& base) {
  BoundReport rep;
  rep.base = base;
  const Integer n = norm ? *norm : factorial(d + 1) * oriented_norm;
  const Integer dp1(static_cast<unsigned long>(d + 1));
  const LogExpr log_d = LogExpr::log(dp1);

  std::vector<std::pair<std::string, LogExpr>> lines;
  if (h) {
    if (h->size() != d + 1) throw Error(ErrorCode::invalid_input, "need one homology group per degree 0..d");
    LogExpr s;
    for (const auto& g : *h) s += size_expr(g);
    lines.emplace_back("sum_p size(H_p)", s);
  }
  LogExpr l1;
  for (std::size_t p = 0; p <= d; ++p) l1 += Rational(binomial(d + 1, p + 1) * n) * log_d + LogExpr(n);
  lines.emplace_back("sum_p (log(d+1) C(d+1,p+1) + 1) N", l1);

  Integer sum_c = 0;
  for (std::size_t p = 0; p <= d; ++p) sum_c += binomial(d + 1, p + 1);
  lines.emplace_back("(log(d+1) sum_p C(d+1,p+1) + (d+1)) N",
                     Rational(n) * (Rational(sum_c) * log_d + LogExpr(dp1)));

  Integer full = 0;
  for (std::size_t p = 0; p <= d + 1; ++p) full += binomial(d + 1, p);
  lines.emplace_back("(log(d+1) ((sum_{p<=d+1} C(d+1,p)) - 1) + (d+1)) N",
                     Rational(n) * (Rational(full - 1) * log_d + LogExpr(dp1)));

  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, d + 1);
  lines.emplace_back("((d+1)(2^{d+1} - 1) + (d+1)) N", LogExpr(Integer(n * (dp1 * (two_pow - 1) + dp1))));
  lines.emplace_back("2^{d+1} (d+1) N", LogExpr(Integer(two_pow * dp1 * n)));
  lines.emplace_back("2^{d+1} (d+1) (d+1)! |[M]|_o", LogExpr(Integer(theorem1_constant(d) * oriented_norm)));

  // relation between consecutive lines as displayed
  std::vector<Relation> rel;
  if (h) rel.push_back(Relation::le);
  rel.insert(rel.end(), {Relation::eq, Relation::eq, Relation::le, Relation::eq, Relation::le});
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    auto q = compare(lines[i].first + " " + relation_symbol(rel[i]) + " " + lines[i + 1].first, lines[i].second,
                     rel[i], lines[i + 1].second, base);
    q.left_source = q.right_source = "bounds";
    rep.lines.push_back(std::move(q));
  }
  return rep;
}

}  // namespace ivol
