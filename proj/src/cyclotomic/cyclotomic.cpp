#include "ekrm/cyclotomic.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace ekrm {

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(\s*([+-]?\d+)(\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) throw std::invalid_argument("malformed rational '" + text + "'");
  Rational r(Integer(m[1].str()), m[3].matched ? Integer(m[3].str()) : Integer(1));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- BigFloat

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}
BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}
BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}
BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return buf.data();
}

bool RealInterval::contains(double x) const { return mpfr_cmp_d(lo.get(), x) <= 0 && mpfr_cmp_d(hi.get(), x) >= 0; }
bool RealInterval::contains_zero() const { return mpfr_sgn(lo.get()) <= 0 && mpfr_sgn(hi.get()) >= 0; }
double RealInterval::width() const {
  BigFloat w(mpfr_get_prec(hi.get()));
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

// -------------------------------------------------------------- Cyclotomic

namespace {

std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::size_t mod_inverse(std::size_t a, std::size_t m) {
  if (m == 1) return 0;
  long long t = 0, nt = 1, r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr) {
    long long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw std::logic_error("mod_inverse of non-unit");
  return static_cast<std::size_t>((t % static_cast<long long>(m) + static_cast<long long>(m)) % static_cast<long long>(m));
}

std::size_t mod(long long a, std::size_t n) {
  long long m = a % static_cast<long long>(n);
  return static_cast<std::size_t>(m < 0 ? m + static_cast<long long>(n) : m);
}

// Rewrites c onto the Zumbroich basis of Q(zeta_n), one prime at a time.
// Substitutions for p shift exponents by multiples of n/p, which leave the
// other primes' components fixed.
void to_basis(std::size_t n, std::vector<Rational>& c) {
  for (auto [p, e] : factorize(n)) {
    const std::size_t pe = ipow(p, e), top = pe / p, m = n / pe, u = mod_inverse(m, pe), step = n / p;
    for (std::size_t a = 0; a < n; ++a) {
      if (sgn(c[a]) == 0) continue;
      const std::size_t k = (a % pe) * u % pe / top;
      if (p == 2) {
        if (k == 1) {
          c[(a + step) % n] -= c[a];
          c[a] = 0;
        }
      } else if (k == 0) {
        for (std::size_t t = 1; t < p; ++t) c[(a + t * step) % n] -= c[a];
        c[a] = 0;
      }
    }
  }
}

// One step down the conductor if the value lies in a proper subfield.
std::optional<std::pair<std::size_t, std::vector<Rational>>> shrink(std::size_t n, const std::vector<Rational>& c) {
  for (auto [p, e] : factorize(n)) {
    const std::size_t m = n / p;
    std::vector<Rational> out(m);
    if (e >= 2) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        if (a % p && sgn(c[a])) ok = false;
      if (!ok) continue;
      for (std::size_t a = 0; a < n; a += p) out[a / p] = c[a];
      return std::make_pair(m, std::move(out));
    }
    if (p == 2) {
      // m odd: zeta_{2m}^a = -zeta_{2m}^{a+m}, pick the even exponent.
      for (std::size_t a = 0; a < n; ++a) {
        if (sgn(c[a]) == 0) continue;
        if (a % 2 == 0)
          out[a / 2] += c[a];
        else
          out[((a + m) % n) / 2] -= c[a];
      }
      return std::make_pair(m, std::move(out));
    }
    // e == 1, p odd: constant on each fibre {a0 + t m : t = 1..p-1}.
    bool ok = true;
    for (std::size_t r = 0; r < m && ok; ++r) {
      std::size_t a0 = r;
      while (a0 % p) a0 += m;
      const Rational& v = c[(a0 + m) % n];
      for (std::size_t t = 2; t < p && ok; ++t)
        if (c[(a0 + t * m) % n] != v) ok = false;
      if (ok) out[(a0 / p) % m] = -v;
    }
    if (ok) return std::make_pair(m, std::move(out));
  }
  return std::nullopt;
}

}  // namespace

Cyclotomic::Cyclotomic() : n_(1), c_(1) {}
Cyclotomic::Cyclotomic(long long v) : n_(1), c_{Rational(static_cast<long>(v))} {}
Cyclotomic::Cyclotomic(const Rational& v) : n_(1), c_{v} {}
Cyclotomic::Cyclotomic(std::size_t n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::canonical(std::size_t n, std::vector<Rational> c) {
  to_basis(n, c);
  while (n > 1) {
    auto s = shrink(n, c);
    if (!s) break;
    n = s->first;
    c = std::move(s->second);
    to_basis(n, c);
  }
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::zeta(std::size_t n, long long k) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  std::vector<Rational> c(n);
  c[mod(k, n)] = 1;
  return canonical(n, std::move(c));
}

Cyclotomic Cyclotomic::from_terms(std::size_t n, const std::vector<std::pair<long long, Rational>>& terms) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  std::vector<Rational> c(n);
  for (const auto& [k, v] : terms) c[mod(k, n)] += v;
  return canonical(n, std::move(c));
}

std::vector<std::pair<std::size_t, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<std::size_t, Rational>> out;
  for (std::size_t a = 0; a < n_; ++a)
    if (sgn(c_[a])) out.emplace_back(a, c_[a]);
  return out;
}

bool Cyclotomic::is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }

Rational Cyclotomic::rational_value() const {
  if (n_ != 1) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return c_[0];
}

bool Cyclotomic::is_real() const { return conjugate() == *this; }

std::vector<Rational> Cyclotomic::lift(std::size_t m) const {
  std::vector<Rational> out(m);
  const std::size_t f = m / n_;
  for (std::size_t a = 0; a < n_; ++a)
    if (sgn(c_[a])) out[a * f] = c_[a];
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  auto c = c_;
  for (auto& v : c) v = -v;
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const std::size_t l = std::lcm(a.n_, b.n_);
  auto c = a.lift(l);
  const std::size_t f = l / b.n_;
  for (std::size_t k = 0; k < b.n_; ++k)
    if (sgn(b.c_[k])) c[k * f] += b.c_[k];
  return Cyclotomic::canonical(l, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1 && b.n_ == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
  const std::size_t l = std::lcm(a.n_, b.n_);
  const std::size_t fa = l / a.n_, fb = l / b.n_;
  std::vector<Rational> c(l);
  Rational t;
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.n_; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      t = a.c_[i] * b.c_[j];
      c[(i * fa + j * fb) % l] += t;
    }
  }
  return Cyclotomic::canonical(l, std::move(c));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::galois(long long k) const {
  if (n_ == 1) return *this;
  const std::size_t kk = mod(k, n_);
  if (std::gcd(kk, n_) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
  std::vector<Rational> c(n_);
  for (std::size_t a = 0; a < n_; ++a)
    if (sgn(c_[a])) c[a * kk % n_] = c_[a];
  return canonical(n_, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero cyclotomic");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  Cyclotomic others(1);
  for (std::size_t k = 2; k < n_; ++k)
    if (std::gcd(k, n_) == 1) others *= galois(static_cast<long long>(k));
  const Cyclotomic norm = *this * others;
  return others * Cyclotomic(Rational(1) / norm.rational_value());
}

bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t k = 0; k < a.n_; ++k) {
    int c = cmp(a.c_[k], b.c_[k]);
    if (c) return c < 0;
  }
  return false;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << "cyc(" << n_ << ";";
  bool first = true;
  for (const auto& [k, v] : terms()) {
    os << (first ? " " : ", ") << k << ":" << v.get_str();
    first = false;
  }
  os << ")";
  return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  static const std::regex whole(R"(\s*cyc\(\s*(\d+)\s*;(.*)\)\s*)");
  static const std::regex term(R"(\s*(\d+)\s*:\s*([+-]?\d+(\s*/\s*\d+)?)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, whole)) throw std::invalid_argument("malformed cyclotomic '" + text + "'");
  const std::size_t n = std::stoul(m[1].str());
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  std::vector<std::pair<long long, Rational>> terms;
  const std::string body = m[2].str();
  if (body.find_first_not_of(" \t") != std::string::npos) {
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      std::smatch t;
      if (!std::regex_match(piece, t, term)) throw std::invalid_argument("malformed term '" + piece + "'");
      const std::size_t k = std::stoul(t[1].str());
      if (k >= n) throw std::invalid_argument("exponent out of range in '" + piece + "'");
      terms.emplace_back(static_cast<long long>(k), parse_rational(t[2].str()));
    }
  }
  return from_terms(n, terms);
}

double Cyclotomic::real_approx() const {
  long double s = 0;
  const long double two_pi = 2 * std::acos(-1.0L);
  for (const auto& [k, v] : terms()) s += static_cast<long double>(v.get_d()) * std::cos(two_pi * k / n_);
  return static_cast<double>(s);
}

double Cyclotomic::imag_approx() const {
  long double s = 0;
  const long double two_pi = 2 * std::acos(-1.0L);
  for (const auto& [k, v] : terms()) s += static_cast<long double>(v.get_d()) * std::sin(two_pi * k / n_);
  return static_cast<double>(s);
}

std::string Cyclotomic::preview(int digits) const {
  char buf[96];
  double re = real_approx(), im = imag_approx();
  if (std::abs(re) < 1e-12) re = 0;
  if (std::abs(im) < 1e-12) im = 0;
  if (im == 0)
    std::snprintf(buf, sizeof buf, "%.*g", digits, re);
  else
    std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, re, digits, im);
  return buf;
}

RealInterval Cyclotomic::to_real_interval(unsigned precision) const {
  if (!is_real()) throw std::domain_error("interval evaluation of a non-real cyclotomic " + to_string());
  const auto ts = terms();
  const mpfr_prec_t out_prec = static_cast<mpfr_prec_t>(precision) + 64;
  RealInterval iv{BigFloat(out_prec), BigFloat(out_prec)};
  if (n_ == 1) {
    mpfr_set_q(iv.lo.get(), c_[0].get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(iv.hi.get(), c_[0].get_mpq_t(), MPFR_RNDU);
    return iv;
  }
  // Each term c*cos(2 pi k/n) carries a few ulps of error relative to |c|;
  // the working precision absorbs the sum of |c| and the term count.
  Rational abs_sum = 0;
  for (const auto& [k, v] : ts) abs_sum += abs(v);
  const long slack = static_cast<long>(mpz_sizeinbase(Integer(abs_sum.get_num() / abs_sum.get_den() + 2).get_mpz_t(), 2)) +
                     static_cast<long>(std::log2(static_cast<double>(ts.size()) + 1)) + 8;
  const mpfr_prec_t work = static_cast<mpfr_prec_t>(precision) + static_cast<mpfr_prec_t>(slack) + 16;

  BigFloat sum(work), term(work), coef(work), angle(work);
  for (const auto& [k, v] : ts) {
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), 2 * k, MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), n_, MPFR_RNDN);
    mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
    mpfr_set_q(coef.get(), v.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), coef.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  // err = 2^(slack - work) bounds (sum|c| + terms) * 8 ulp at this precision.
  BigFloat err(64);
  mpfr_set_ui_2exp(err.get(), 1, slack - static_cast<long>(work), MPFR_RNDU);
  mpfr_sub(iv.lo.get(), sum.get(), err.get(), MPFR_RNDD);
  mpfr_add(iv.hi.get(), sum.get(), err.get(), MPFR_RNDU);
  return iv;
}

int Cyclotomic::sign() const {
  if (is_zero()) return 0;
  if (n_ == 1) return sgn(c_[0]);
  for (unsigned prec = 64;; prec *= 2) {
    const auto iv = to_real_interval(prec);
    if (mpfr_sgn(iv.lo.get()) > 0) return 1;
    if (mpfr_sgn(iv.hi.get()) < 0) return -1;
    if (prec > (1u << 20)) throw std::logic_error("sign refinement did not terminate for " + to_string());
  }
}

int compare_real(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).sign(); }

}  // namespace ekrm
