// Exact arithmetic in Q(z), z a primitive 16th root of unity.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopf32 {

/// Element sum_k c_k z^k of Q(z), z^8 = -1, in the basis z^0..z^7.
class Cyc {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kRootOrder = 16;

  Cyc() = default;
  Cyc(long n) { c_[0] = n; }
  Cyc(const mpq_class& q) {
    c_[0] = q;
    c_[0].canonicalize();
  }

  /// z^k for any integer k.
  static Cyc zeta(long k) {
    Cyc r;
    k = mod16(k);
    if (k < kDegree) {
      r.c_[k] = 1;
    } else {
      r.c_[k - kDegree] = -1;
    }
    return r;
  }
  static Cyc i() { return zeta(4); }
  static Cyc xi() { return zeta(2); }

  const mpq_class& coeff(int k) const { return c_[k]; }
  void set_coeff(int k, const mpq_class& v) { c_[k] = v; }

  bool is_zero() const {
    for (const auto& q : c_) {
      if (sgn(q) != 0) return false;
    }
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (int k = 1; k < kDegree; ++k) {
      if (sgn(c_[k]) != 0) return false;
    }
    return true;
  }
  bool is_rational() const {
    for (int k = 1; k < kDegree; ++k) {
      if (sgn(c_[k]) != 0) return false;
    }
    return true;
  }
  bool is_integral() const {
    for (const auto& q : c_) {
      if (q.get_den() != 1) return false;
    }
    return true;
  }

  Cyc& operator+=(const Cyc& o) {
    for (int k = 0; k < kDegree; ++k) {
      if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
    }
    return *this;
  }
  Cyc& operator-=(const Cyc& o) {
    for (int k = 0; k < kDegree; ++k) {
      if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
    }
    return *this;
  }
  Cyc operator-() const {
    Cyc r;
    for (int k = 0; k < kDegree; ++k) r.c_[k] = -c_[k];
    return r;
  }
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    std::array<mpq_class, 2 * kDegree> t;
    mpq_class p;
    for (int i = 0; i < kDegree; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (int j = 0; j < kDegree; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        p = a.c_[i] * b.c_[j];
        t[i + j] += p;
      }
    }
    Cyc r;
    for (int k = 0; k < kDegree; ++k) r.c_[k] = t[k] - t[k + kDegree];
    return r;
  }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  /// Multiplication by z^k, a signed rotation of the coefficients.
  Cyc times_zeta(long k) const {
    k = mod16(k);
    if (k == 0) return *this;
    Cyc r;
    for (int j = 0; j < kDegree; ++j) {
      if (sgn(c_[j]) == 0) continue;
      int e = j + static_cast<int>(k);
      if (e >= kRootOrder) e -= kRootOrder;
      if (e < kDegree) {
        r.c_[e] = c_[j];
      } else {
        r.c_[e - kDegree] = -c_[j];
      }
    }
    return r;
  }

  Cyc scaled(mpq_class q) const {
    q.canonicalize();
    Cyc r;
    for (int k = 0; k < kDegree; ++k) {
      if (sgn(c_[k]) != 0) r.c_[k] = c_[k] * q;
    }
    return r;
  }

  /// Image under the automorphism z -> z^k, k odd.
  Cyc galois(int k) const {
    Cyc r;
    for (int j = 0; j < kDegree; ++j) {
      if (sgn(c_[j]) == 0) continue;
      r += zeta(static_cast<long>(j) * k).scaled(c_[j]);
    }
    return r;
  }

  Cyc inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(z16)");
    if (is_rational()) return Cyc(mpq_class(1 / c_[0]));
    if (auto k = root_index()) return zeta(-*k);
    Cyc p(1);
    for (int k = 3; k < kRootOrder; k += 2) p *= galois(k);
    Cyc n = *this * p;
    return p.scaled(mpq_class(1 / n.c_[0]));
  }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

  Cyc pow(long n) const {
    if (n < 0) return inv().pow(-n);
    Cyc r(1), b = *this;
    while (n > 0) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const Cyc& a) { return os << a.str(); }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// k in [0,16) with *this == z^k, if any.
  std::optional<int> root_index() const {
    int found = -1;
    for (int k = 0; k < kDegree; ++k) {
      int s = sgn(c_[k]);
      if (s == 0) continue;
      if (found >= 0) return std::nullopt;
      if (c_[k] == 1) {
        found = k;
      } else if (c_[k] == -1) {
        found = k + kDegree;
      } else {
        return std::nullopt;
      }
    }
    if (found < 0) return std::nullopt;
    return found;
  }

  /// Canonical text "c0 + c1*z + ... + c7*z^7", zero terms omitted.
  std::string str() const {
    std::string out;
    for (int k = 0; k < kDegree; ++k) {
      if (sgn(c_[k]) == 0) continue;
      if (!out.empty()) out += " + ";
      out += c_[k].get_str();
      if (k == 1) out += "*z";
      if (k > 1) out += "*z^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

  /// Inverse of str(); also accepts bare "z^k" and "-z^k" terms.
  static Cyc parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw std::invalid_argument("empty scalar");
    Cyc r;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find('+', pos);
      if (next == std::string::npos) next = s.size();
      r += parse_term(s.substr(pos, next - pos));
      pos = next + 1;
    }
    return r;
  }

 private:
  static long mod16(long k) {
    k %= kRootOrder;
    return k < 0 ? k + kRootOrder : k;
  }

  static Cyc parse_term(const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty term in scalar");
    std::size_t zpos = t.find('z');
    std::string coef = zpos == std::string::npos ? t : t.substr(0, zpos);
    long power = 0;
    if (zpos != std::string::npos) {
      power = 1;
      std::string rest = t.substr(zpos + 1);
      if (!rest.empty()) {
        if (rest[0] != '^') throw std::invalid_argument("bad term: " + t);
        power = std::stol(rest.substr(1));
      }
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
    }
    mpq_class q;
    if (coef.empty() || coef == "+") {
      q = 1;
    } else if (coef == "-") {
      q = -1;
    } else {
      if (q.set_str(coef, 10) != 0) throw std::invalid_argument("bad coefficient: " + coef);
      q.canonicalize();
    }
    return zeta(power).scaled(q);
  }

  std::array<mpq_class, kDegree> c_;
};

/// Multiplicative order of q when q is a root of unity.
inline std::optional<int> root_order(const Cyc& q) {
  auto k = q.root_index();
  if (!k) return std::nullopt;
  int n = Cyc::kRootOrder;
  int e = *k;
  while (e != 0 && n > 1 && e % 2 == 0) {
    e /= 2;
    n /= 2;
  }
  return e == 0 ? 1 : n;
}

/// N(q): order of q != 1 when q is a root of unity; empty means infinite.
inline std::optional<int> nq(const Cyc& q) {
  auto n = root_order(q);
  if (!n || *n == 1) return std::nullopt;
  return n;
}

/// (n)_q = 1 + q + ... + q^{n-1}.
inline Cyc q_number(int n, const Cyc& q) {
  Cyc r, p(1);
  for (int k = 0; k < n; ++k) {
    r += p;
    p *= q;
  }
  return r;
}

inline Cyc q_factorial(int n, const Cyc& q) {
  Cyc r(1);
  for (int k = 1; k <= n; ++k) r *= q_number(k, q);
  return r;
}

/// Gaussian binomial via the q-Pascal rule, defined at roots of unity.
inline Cyc q_binomial(int n, int k, const Cyc& q) {
  if (k < 0 || k > n) return Cyc();
  std::vector<Cyc> row(1, Cyc(1));
  for (int m = 1; m <= n; ++m) {
    std::vector<Cyc> next(m + 1);
    next[0] = 1;
    next[m] = 1;
    for (int j = 1; j < m; ++j) next[j] = row[j - 1] + q.pow(j) * row[j];
    row.swap(next);
  }
  return row[k];
}

/// Short scalar syntax: products of factors such as -1, 2, i, x (= z^2), z,
/// each with an optional integer power, e.g. "-x^3" or "i*z".
/// Falls back to the canonical str() format.
inline Cyc parse_scalar(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty scalar");
  auto simple = [&]() -> std::optional<Cyc> {
    Cyc r(1);
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
      if (s[0] == '-') r = Cyc(-1);
      pos = 1;
    }
    if (pos >= s.size()) return std::nullopt;
    for (std::size_t k = pos; k < s.size(); ++k) {
      if (s[k] == '+' || (s[k] == '-' && s[k - 1] != '^')) return std::nullopt;
    }
    while (pos < s.size()) {
      std::size_t end = s.find('*', pos);
      if (end == std::string::npos) end = s.size();
      std::string f = s.substr(pos, end - pos);
      if (f.empty()) return std::nullopt;
      long power = 1;
      std::size_t caret = f.find('^');
      std::string base = f.substr(0, caret);
      if (caret != std::string::npos) {
        std::string e = f.substr(caret + 1);
        std::size_t used = 0;
        try {
          power = std::stol(e, &used);
        } catch (...) {
          return std::nullopt;
        }
        if (used != e.size()) return std::nullopt;
      }
      Cyc b;
      if (base == "i") {
        b = Cyc::i();
      } else if (base == "x") {
        b = Cyc::xi();
      } else if (base == "z") {
        b = Cyc::zeta(1);
      } else {
        mpq_class q;
        if (base.empty() || q.set_str(base, 10) != 0) return std::nullopt;
        q.canonicalize();
        b = Cyc(q);
      }
      r *= b.pow(power);
      pos = end + 1;
    }
    return r;
  };
  if (auto r = simple()) return *r;
  return Cyc::parse(s);
}

/// Compact text: 1, -1, i, -i, x^k (x = z^2), z^k for roots of unity; str() otherwise.
inline std::string short_str(const Cyc& c) {
  auto k = c.root_index();
  if (!k) return c.str();
  switch (*k) {
    case 0: return "1";
    case 8: return "-1";
    case 4: return "i";
    case 12: return "-i";
    default: break;
  }
  if (*k % 2 == 0) return *k == 2 ? "x" : "x^" + std::to_string(*k / 2);
  return *k == 1 ? "z" : "z^" + std::to_string(*k);
}

}  // namespace hopf32
