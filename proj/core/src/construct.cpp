#include "finring/construct.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace finring {

namespace {

void check_cap(long long order, const std::string& what) {
  if (order > order_cap())
    throw std::invalid_argument(what + ": order " + std::to_string(order) +
                                " exceeds cap " + std::to_string(order_cap()));
}

// Modulus of make_gf per (p,k), k >= 2: lexicographically least monic
// irreducible, ascending coefficients with the leading 1 stored last.
// Each entry is revalidated by the test suite.
const std::map<std::pair<int, int>, std::vector<int>>& irreducible_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 1, 0, 0, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 0, 1}},
      {{5, 3}, {1, 1, 0, 1}},
      {{7, 2}, {1, 0, 1}},
      {{7, 3}, {2, 0, 0, 1}},
      {{11, 2}, {1, 0, 1}},
      {{13, 2}, {2, 0, 1}},
      {{17, 2}, {3, 0, 1}},
      {{19, 2}, {1, 0, 1}},
  };
  return table;
}

std::string gf_term_label(int coeff, int deg, int p) {
  std::string s;
  if (deg == 0) return std::to_string(coeff);
  if (coeff != 1 || p == 1) s += std::to_string(coeff);
  s += "t";
  if (deg > 1) s += "^" + std::to_string(deg);
  return s;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteRing make_zmod(int n) {
  if (n < 1) throw std::invalid_argument("Zmod: modulus must be >= 1");
  check_cap(n, "Zmod");
  FiniteRing r;
  r.order = n;
  r.provenance = "Zmod(" + std::to_string(n) + ")";
  r.add_table.resize(size_t(n) * n);
  r.mul_table.resize(size_t(n) * n);
  r.neg_table.resize(n);
  r.labels.resize(n);
  for (int a = 0; a < n; ++a) {
    r.labels[a] = std::to_string(a);
    r.neg_table[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      r.add_table[size_t(a) * n + b] = (a + b) % n;
      r.mul_table[size_t(a) * n + b] = (a * b) % n;
    }
  }
  r.one = n == 1 ? 0 : 1;
  return r;
}

const std::vector<int>& gf_modulus(int p, int k) {
  auto it = irreducible_table().find({p, k});
  if (it == irreducible_table().end())
    throw std::invalid_argument("GF: no built-in modulus for p=" +
                                std::to_string(p) + ", k=" +
                                std::to_string(k));
  return it->second;
}

FiniteRing make_gf(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("GF: p must be prime");
  if (k < 1) throw std::invalid_argument("GF: k must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    check_cap(q, "GF");
  }
  if (k == 1) {
    FiniteRing r = make_zmod(p);
    r.provenance = "GF(" + std::to_string(p) + ")";
    return r;
  }
  const std::vector<int>& f = gf_modulus(p, k);
  const int n = int(q);
  FiniteRing r;
  r.order = n;
  r.provenance = "GF(" + std::to_string(p) + "," + std::to_string(k) + ")";
  r.add_table.resize(size_t(n) * n);
  r.mul_table.resize(size_t(n) * n);
  r.neg_table.resize(n);
  r.labels.resize(n);
  auto digits = [&](int v) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
    return v;
  };
  for (int a = 0; a < n; ++a) {
    auto da = digits(a);
    std::vector<int> neg(k);
    for (int i = 0; i < k; ++i) neg[i] = (p - da[i]) % p;
    r.neg_table[a] = pack(neg);
    std::string lab;
    for (int i = k - 1; i >= 0; --i) {
      if (da[i] == 0) continue;
      if (!lab.empty()) lab += "+";
      lab += gf_term_label(da[i], i, p);
    }
    r.labels[a] = lab.empty() ? "0" : lab;
    for (int b = 0; b < n; ++b) {
      auto db = digits(b);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      r.add_table[size_t(a) * n + b] = pack(sum);
      // schoolbook product, then reduce by t^k = -(f_0 + ... + f_{k-1}t^{k-1})
      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int i = 2 * k - 2; i >= k; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < k; ++j)
          prod[i - k + j] = ((prod[i - k + j] - c * f[j]) % p + p) % p;
      }
      prod.resize(k);
      r.mul_table[size_t(a) * n + b] = pack(prod);
    }
  }
  r.one = 1;
  if (!r.is_field())
    throw std::logic_error("GF: modulus table produced a non-field");
  return r;
}

FiniteRing make_product(const FiniteRing& r, const FiniteRing& s) {
  check_cap(1LL * r.order * s.order, "product");
  const int n = r.order * s.order;
  FiniteRing p;
  p.order = n;
  p.provenance = "product(" + r.provenance + ", " + s.provenance + ")";
  p.add_table.resize(size_t(n) * n);
  p.mul_table.resize(size_t(n) * n);
  p.neg_table.resize(n);
  p.labels.resize(n);
  auto idx = [&](int a, int b) { return a * s.order + b; };
  for (int a1 = 0; a1 < r.order; ++a1)
    for (int a2 = 0; a2 < s.order; ++a2) {
      int a = idx(a1, a2);
      p.labels[a] = "(" + r.label(a1) + "," + s.label(a2) + ")";
      p.neg_table[a] = idx(r.neg(a1), s.neg(a2));
      for (int b1 = 0; b1 < r.order; ++b1)
        for (int b2 = 0; b2 < s.order; ++b2) {
          int b = idx(b1, b2);
          p.add_table[size_t(a) * n + b] = idx(r.add(a1, b1), s.add(a2, b2));
          p.mul_table[size_t(a) * n + b] = idx(r.mul(a1, b1), s.mul(a2, b2));
        }
    }
  if (r.one && s.one) p.one = idx(*r.one, *s.one);
  return p;
}

FiniteRing make_function_ring(int x_size, const FiniteRing& kappa) {
  if (x_size < 1) throw std::invalid_argument("fnring: x_size must be >= 1");
  if (!kappa.is_field())
    throw std::invalid_argument("fnring: coefficient ring must be a field");
  long long n = 1;
  for (int i = 0; i < x_size; ++i) {
    n *= kappa.order;
    check_cap(n, "fnring");
  }
  const int q = kappa.order, total = int(n);
  FiniteRing r;
  r.order = total;
  r.provenance =
      "fnring(" + std::to_string(x_size) + ", " + kappa.provenance + ")";
  r.add_table.resize(size_t(total) * total);
  r.mul_table.resize(size_t(total) * total);
  r.neg_table.resize(total);
  r.labels.resize(total);
  // coordinate 0 is the most significant digit, so x_size = 2 matches
  // make_product(kappa, kappa) exactly
  auto coords = [&](int v) {
    std::vector<int> c(x_size);
    for (int i = x_size - 1; i >= 0; --i) {
      c[i] = v % q;
      v /= q;
    }
    return c;
  };
  auto pack = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = 0; i < x_size; ++i) v = v * q + c[i];
    return v;
  };
  for (int a = 0; a < total; ++a) {
    auto ca = coords(a);
    std::string lab = "(";
    std::vector<int> neg(x_size);
    for (int i = 0; i < x_size; ++i) {
      neg[i] = kappa.neg(ca[i]);
      if (i) lab += ",";
      lab += kappa.label(ca[i]);
    }
    r.labels[a] = lab + ")";
    r.neg_table[a] = pack(neg);
    for (int b = 0; b < total; ++b) {
      auto cb = coords(b);
      std::vector<int> s(x_size), m(x_size);
      for (int i = 0; i < x_size; ++i) {
        s[i] = kappa.add(ca[i], cb[i]);
        m[i] = kappa.mul(ca[i], cb[i]);
      }
      r.add_table[size_t(a) * total + b] = pack(s);
      r.mul_table[size_t(a) * total + b] = pack(m);
    }
  }
  std::vector<int> ones(x_size, *kappa.one);
  r.one = pack(ones);
  return r;
}

FiniteRing make_poly_quotient(const FiniteRing& kappa,
                              const std::vector<int>& monic_coeffs) {
  if (!kappa.is_field())
    throw std::invalid_argument("polyquot: coefficient ring must be a field");
  if (monic_coeffs.size() < 2)
    throw std::invalid_argument("polyquot: degree must be >= 1");
  for (int c : monic_coeffs)
    if (c < 0 || c >= kappa.order)
      throw std::invalid_argument("polyquot: coefficient index out of range");
  if (monic_coeffs.back() != *kappa.one)
    throw std::invalid_argument("polyquot: polynomial must be monic");
  const int d = int(monic_coeffs.size()) - 1;
  const int q = kappa.order;
  long long n = 1;
  for (int i = 0; i < d; ++i) {
    n *= q;
    check_cap(n, "polyquot");
  }
  const int total = int(n);
  FiniteRing r;
  r.order = total;
  {
    std::string cs = "[";
    for (size_t i = 0; i < monic_coeffs.size(); ++i) {
      if (i) cs += ",";
      cs += std::to_string(monic_coeffs[i]);
    }
    r.provenance = "polyquot(" + kappa.provenance + ", " + cs + "])";
  }
  r.add_table.resize(size_t(total) * total);
  r.mul_table.resize(size_t(total) * total);
  r.neg_table.resize(total);
  r.labels.resize(total);
  auto digits = [&](int v) {
    std::vector<int> c(d);
    for (int i = 0; i < d; ++i) {
      c[i] = v % q;
      v /= q;
    }
    return c;
  };
  auto pack = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = d - 1; i >= 0; --i) v = v * q + c[i];
    return v;
  };
  auto coeff_label = [&](int c, int deg) {
    std::string l = kappa.label(c);
    if (deg == 0) return l;
    std::string out;
    if (c != *kappa.one) {
      out = l.find('+') != std::string::npos ? "(" + l + ")" : l;
    }
    out += "x";
    if (deg > 1) out += "^" + std::to_string(deg);
    return out;
  };
  for (int a = 0; a < total; ++a) {
    auto da = digits(a);
    std::vector<int> neg(d);
    std::string lab;
    for (int i = d - 1; i >= 0; --i) {
      neg[i] = kappa.neg(da[i]);
      if (da[i] != 0) {
        if (!lab.empty()) lab += "+";
        lab += coeff_label(da[i], i);
      }
    }
    r.labels[a] = lab.empty() ? "0" : lab;
    r.neg_table[a] = pack(neg);
    for (int b = 0; b < total; ++b) {
      auto db = digits(b);
      std::vector<int> sum(d), prod(2 * d - 1, 0);
      for (int i = 0; i < d; ++i) sum[i] = kappa.add(da[i], db[i]);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          prod[i + j] =
              kappa.add(prod[i + j], kappa.mul(da[i], db[j]));
      for (int i = 2 * d - 2; i >= d; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < d; ++j)
          prod[i - d + j] =
              kappa.sub(prod[i - d + j], kappa.mul(c, monic_coeffs[j]));
      }
      prod.resize(d);
      r.add_table[size_t(a) * total + b] = pack(sum);
      r.mul_table[size_t(a) * total + b] = pack(prod);
    }
  }
  r.one = *kappa.one;  // the constant polynomial 1
  return r;
}

}  // namespace finring
