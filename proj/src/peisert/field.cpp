#include <stdexcept>

#include "ekrm/peisert.hpp"

namespace ekrm {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, unsigned n) {
  std::vector<std::uint32_t> d(n);
  for (unsigned i = 0; i < n; ++i, a /= p) d[i] = a % p;
  return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

// Product in F_p[x]/(x^n + sum tail[i] x^i).
std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, unsigned n,
                       const std::vector<std::uint32_t>& tail) {
  const auto da = digits(a, p, n), db = digits(b, p, n);
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p;
  for (unsigned k = 2 * n - 1; k >= n; --k) {
    const std::uint64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - tail[i]) * c) % p;
  }
  std::vector<std::uint32_t> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return encode(out, p);
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned n) : p_(p), n_(n) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= p;
    if (size > (1u << 24)) throw std::invalid_argument("field too large");
  }
  size_ = static_cast<std::uint32_t>(size);

  // Monic tails in increasing code order: the code's top digit is the
  // x^(n-1) coefficient, so this is lexicographic from the top down.
  for (std::uint32_t code = 0; code < size_; ++code) {
    const auto tail = digits(code, p, n);
    if (n > 1 && tail[0] == 0) continue;  // divisible by x
    // Irreducible iff some element has multiplicative order p^n - 1.
    for (std::uint32_t a = 1; a < size_; ++a) {
      std::uint32_t x = a, steps = 1;
      while (x != 1 && steps < size_ - 1) {
        x = poly_mul(x, a, p, n, tail);
        ++steps;
      }
      if (x == 1 && steps == size_ - 1) {
        modulus_ = tail;
        modulus_.push_back(1);
        exp_.resize(size_ - 1);
        log_.assign(size_, 0);
        std::uint32_t y = 1;
        for (std::uint32_t j = 0; j + 1 < size_; ++j) {
          exp_[j] = y;
          log_[y] = j;
          y = poly_mul(y, a, p, n, tail);
        }
        break;
      }
    }
    if (!modulus_.empty()) break;
  }
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

  trace_.assign(size_, 0);
  for (Element a = 1; a < size_; ++a) {
    Element t = 0;
    std::uint64_t e = log_[a];
    for (unsigned i = 0; i < n_; ++i) {
      t = add(t, exp_[e % (size_ - 1)]);
      e = e * p_ % (size_ - 1);
    }
    if (t >= p_) throw std::logic_error("trace left the prime field");
    trace_[a] = t;
  }
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  Element out = 0, place = 1;
  for (unsigned i = 0; i < n_; ++i, a /= p_, b /= p_, place *= p_) out += (a % p_ + b % p_) % p_ * place;
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  Element out = 0, place = 1;
  for (unsigned i = 0; i < n_; ++i, a /= p_, place *= p_) out += (p_ - a % p_) % p_ * place;
  return out;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) + log_[b]) % (size_ - 1)];
}

std::uint32_t FiniteField::log(Element a) const {
  if (a == 0 || a >= size_) throw std::invalid_argument("log of zero or of a non-element");
  return log_[a];
}

}  // namespace ekrm
