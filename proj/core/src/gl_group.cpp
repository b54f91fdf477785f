#include <sstream>

#include "jaglab/error.hpp"
#include "jaglab/groups.hpp"

namespace jaglab::groups {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

namespace {

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::int32_t inv_mod(std::int32_t a, int p) { return static_cast<std::int32_t>(pow_mod(a, p - 2, p)); }

}  // namespace

int least_primitive_root(int p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<int> factors;
  int m = p - 1;
  for (int q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root found");
}

GLGroup::GLGroup(int n, int p, std::uint64_t cap) : n_(n), p_(p) {
  if (n < 1) throw InputError("GL dimension must be positive");
  if (!is_prime(p)) throw InputError("GL field size " + std::to_string(p) + " is not prime");
  omega_ = least_primitive_root(p);
  // |GL(n,p)| = prod_{i<n} (p^n - p^i)
  long double estimate = 1;
  std::uint64_t pn = 1;
  for (int i = 0; i < n; ++i) {
    pn *= static_cast<std::uint64_t>(p);
    if (pn > (1ULL << 40)) throw LimitError("GL(" + std::to_string(n) + "," + std::to_string(p) + ") is too large");
  }
  order_ = 1;
  std::uint64_t pi = 1;
  for (int i = 0; i < n; ++i) {
    estimate *= static_cast<long double>(pn - pi);
    if (estimate > static_cast<long double>(cap)) {
      throw LimitError("GL(" + std::to_string(n) + "," + std::to_string(p) + ") exceeds the cap of " +
                       std::to_string(cap) + " elements");
    }
    order_ *= pn - pi;
    pi *= static_cast<std::uint64_t>(p);
  }
}

std::string GLGroup::name() const { return "GL(" + std::to_string(n_) + "," + std::to_string(p_) + ")"; }

Element GLGroup::identity() const {
  Element e(n_ * n_, 0);
  for (int i = 0; i < n_; ++i) e[i * n_ + i] = 1;
  return e;
}

Element GLGroup::multiply(const Element& a, const Element& b) const {
  Element c(n_ * n_, 0);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const std::int32_t x = a[i * n_ + k];
      if (!x) continue;
      for (int j = 0; j < n_; ++j) c[i * n_ + j] = (c[i * n_ + j] + x * b[k * n_ + j]) % p_;
    }
  }
  return c;
}

Element GLGroup::inverse(const Element& a) const {
  // Gauss-Jordan on [a | I]
  const int w = 2 * n_;
  std::vector<std::int32_t> m(n_ * w, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m[i * w + j] = a[i * n_ + j];
    m[i * w + n_ + i] = 1;
  }
  for (int col = 0; col < n_; ++col) {
    int piv = col;
    while (piv < n_ && m[piv * w + col] == 0) ++piv;
    if (piv == n_) throw InputError("matrix is singular");
    if (piv != col) {
      for (int j = 0; j < w; ++j) std::swap(m[piv * w + j], m[col * w + j]);
    }
    const std::int32_t s = inv_mod(m[col * w + col], p_);
    for (int j = 0; j < w; ++j) m[col * w + j] = m[col * w + j] * s % p_;
    for (int r = 0; r < n_; ++r) {
      if (r == col || m[r * w + col] == 0) continue;
      const std::int32_t f = m[r * w + col];
      for (int j = 0; j < w; ++j) m[r * w + j] = ((m[r * w + j] - f * m[col * w + j]) % p_ + p_) % p_;
    }
  }
  Element out(n_ * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i * n_ + j] = m[i * w + n_ + j];
  }
  return out;
}

std::int32_t GLGroup::determinant(const Element& a) const {
  Element m = a;
  std::int64_t det = 1;
  for (int col = 0; col < n_; ++col) {
    int piv = col;
    while (piv < n_ && m[piv * n_ + col] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != col) {
      for (int j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[col * n_ + j]);
      det = (p_ - det) % p_;
    }
    det = det * m[col * n_ + col] % p_;
    const std::int32_t s = inv_mod(m[col * n_ + col], p_);
    for (int r = col + 1; r < n_; ++r) {
      const std::int32_t f = m[r * n_ + col] * s % p_;
      if (!f) continue;
      for (int j = col; j < n_; ++j) m[r * n_ + j] = ((m[r * n_ + j] - f * m[col * n_ + j]) % p_ + p_) % p_;
    }
  }
  return static_cast<std::int32_t>(det);
}

std::vector<Element> GLGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  Element e(n_ * n_, 0);
  const std::size_t len = e.size();
  while (true) {
    if (determinant(e) != 0) out.push_back(e);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++e[i] < p_) break;
      e[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::string GLGroup::format(const Element& a) const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) out << ';';
    for (int j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << a[i * n_ + j];
    }
  }
  out << ']';
  return out.str();
}

GeneratorSet GLGroup::column_generators() const {
  GeneratorSet gens;
  Element w = identity();
  w[0] = omega_;
  gens.push_back(w);
  if (n_ >= 2) {
    Element add = identity();
    add[0 * n_ + 1] = 1;  // column 2 += column 1
    gens.push_back(add);
    Element sw(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) {
      const int src = i == 0 ? 1 : i == 1 ? 0 : i;
      sw[src * n_ + i] = 1;
    }
    gens.push_back(sw);
    Element cy(n_ * n_, 0);
    for (int j = 0; j < n_; ++j) cy[((j + 1) % n_) * n_ + j] = 1;
    gens.push_back(cy);
  }
  return gens;
}

}  // namespace jaglab::groups
