#pragma once

// Arithmetic in F_q, q = p^e, with elements carried as integer indices.
//
// An element with index i = c_0 + c_1 p + ... + c_{e-1} p^{e-1} is the residue
// class of c_0 + c_1 X + ... + c_{e-1} X^{e-1} modulo the context's reduction
// polynomial. Index 0 is zero and index 1 is one for every field.

#include <atomic>
#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wps/errors.hpp"

namespace wps {

class FieldCtx;

class FieldElement {
 public:
  constexpr FieldElement() = default;

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr bool operator==(FieldElement a, FieldElement b) {
    return a.index_ == b.index_;
  }
  friend constexpr std::strong_ordering operator<=>(FieldElement a,
                                                    FieldElement b) {
    return a.index_ <=> b.index_;
  }

 private:
  friend class FieldCtx;
  constexpr FieldElement(std::uint32_t index, std::uint32_t ctx)
      : index_(index), ctx_(ctx) {}

  std::uint32_t index_ = 0;
  // Owning context id; 0 marks a default-constructed (unbound) zero.
  std::uint32_t ctx_ = 0;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, coefficient i is the X^i coefficient.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quo = r / new_r;
    t = std::exchange(new_t, t - quo * new_t);
    r = std::exchange(new_r, r - quo * new_r);
  }
  return static_cast<std::uint32_t>((t % p + p) % p);
}

// Remainder of f modulo g (g nonzero).
inline PrimePoly poly_mod(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor =
        static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

// Irreducibility by trial division against every monic divisor candidate of
// degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      PrimePoly g(k + 1, 0);
      std::uint64_t rest = n;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[k] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline std::uint32_t next_ctx_id() {
  static std::atomic<std::uint32_t> counter{0};
  return ++counter;
}

}  // namespace detail

/// Immutable field context. Copies share the same id and remain compatible.
class FieldCtx {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;
  // Fields up to this order also carry dense addition/multiplication tables
  // for the sweep kernels.
  static constexpr std::uint32_t kDenseTableOrder = 256;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& reduction_poly() const { return reduction_; }
  std::uint32_t id() const { return id_; }

  FieldElement zero() const { return {0, id_}; }
  FieldElement one() const { return {1, id_}; }
  FieldElement element(std::uint32_t index) const {
    if (index >= q_)
      throw std::out_of_range("field index " + std::to_string(index) +
                              " outside F_" + std::to_string(q_));
    return {index, id_};
  }
  // Canonical generator of the multiplicative group.
  FieldElement generator() const { return {exp_[1 % (q_ - 1)], id_}; }
  // g^k for the canonical generator, k taken modulo q-1.
  FieldElement generator_power(std::uint64_t k) const {
    return {exp_[k % (q_ - 1)], id_};
  }
  // Discrete log base the canonical generator; a must be nonzero.
  std::uint32_t log(FieldElement a) const {
    check(a);
    assert(!a.is_zero());
    return log_[a.index()];
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    check(a), check(b);
    return {add_idx(a.index(), b.index()), id_};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    check(a), check(b);
    return {add_idx(a.index(), neg_idx(b.index())), id_};
  }
  FieldElement neg(FieldElement a) const {
    check(a);
    return {neg_idx(a.index()), id_};
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    check(a), check(b);
    return {mul_idx(a.index(), b.index()), id_};
  }
  FieldElement inv(FieldElement a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return {inv_idx(a.index()), id_};
  }
  FieldElement div(FieldElement a, FieldElement b) const {
    return mul(a, inv(b));
  }
  FieldElement pow(FieldElement a, std::uint64_t n) const {
    check(a);
    return {pow_idx(a.index(), n), id_};
  }

  // Index-level primitives used by the hot loops.
  std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    if (e_ == 1) return (a + b) % p_;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_, b /= p_, scale *= p_;
    }
    return out;
  }
  std::uint32_t neg_idx(std::uint32_t a) const {
    if (e_ == 1) return (p_ - a) % p_;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      out += ((p_ - a % p_) % p_) * scale;
      a /= p_, scale *= p_;
    }
    return out;
  }
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    std::uint32_t k = log_[a] + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
  }
  std::uint32_t inv_idx(std::uint32_t a) const {
    assert(a != 0);
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  std::uint32_t pow_idx(std::uint32_t a, std::uint64_t n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1)) % (q_ - 1)];
  }

  std::string to_string() const {
    return e_ == 1 ? std::to_string(p_)
                   : std::to_string(p_) + "^" + std::to_string(e_);
  }

 private:
  friend FieldCtx make_field(std::uint32_t p, std::uint32_t e);

  void check([[maybe_unused]] FieldElement a) const {
    assert((a.ctx_ == 0 || a.ctx_ == id_) && "element from another field");
  }

  // Product of two elements by polynomial multiplication and reduction; only
  // used while building the tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    detail::PrimePoly fa(e_), fb(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      fa[i] = a % p_, a /= p_;
      fb[i] = b % p_, b /= p_;
    }
    detail::PrimePoly prod(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
      for (std::uint32_t j = 0; j < e_; ++j)
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(fa[i]) * fb[j]) % p_);
    detail::PrimePoly modulus = reduction_;
    modulus.push_back(1);
    const detail::PrimePoly r = detail::poly_mod(prod, modulus, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r.size(); ++i, scale *= p_) out += r[i] * scale;
    return out;
  }

  void build_tables();

  std::uint32_t p_ = 2, e_ = 1, q_ = 2;
  std::uint32_t id_ = 0;
  // Non-leading coefficients of the monic reduction polynomial, low degree
  // first (empty for prime fields).
  std::vector<std::uint32_t> reduction_;
  std::vector<std::uint32_t> exp_, log_;
  std::vector<std::uint32_t> add_table_, mul_table_;
};

inline void FieldCtx::build_tables() {
  const std::uint32_t n = q_ - 1;
  exp_.assign(n, 0);
  log_.assign(q_, 0);
  // Smallest-index element of multiplicative order q-1.
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1, k = 0;
    std::vector<bool> seen(q_, false);
    bool ok = true;
    for (; k < n; ++k) {
      if (seen[x]) {
        ok = false;
        break;
      }
      seen[x] = true;
      exp_[k] = x;
      log_[x] = k;
      x = e_ == 1 ? static_cast<std::uint32_t>(
                        static_cast<std::uint64_t>(x) * g % p_)
                  : slow_mul(x, g);
    }
    if (ok && x == 1) break;
    if (g + 1 == q_) throw std::logic_error("no multiplicative generator");
  }
  if (q_ <= kDenseTableOrder) {
    std::vector<std::uint32_t> add(q_ * q_), mul(q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        add[a * q_ + b] = add_idx(a, b);
        mul[a * q_ + b] = mul_idx(a, b);
      }
    add_table_ = std::move(add);
    mul_table_ = std::move(mul);
  }
}

/// Builds F_{p^e}. The reduction polynomial is the first irreducible monic of
/// degree e when coefficient tuples (c_0, ..., c_{e-1}) are compared
/// lexicographically with c_0 most significant.
inline FieldCtx make_field(std::uint32_t p, std::uint32_t e) {
  if (!detail::is_prime(p))
    throw InvalidArgument("field characteristic " + std::to_string(p) +
                          " is not prime");
  if (e < 1) throw InvalidArgument("field extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > FieldCtx::kMaxOrder)
      throw InvalidArgument("field order " + std::to_string(p) + "^" +
                            std::to_string(e) + " exceeds the cap 2^16");
  }
  FieldCtx ctx;
  ctx.p_ = p;
  ctx.e_ = e;
  ctx.q_ = static_cast<std::uint32_t>(q);
  ctx.id_ = detail::next_ctx_id();
  if (e > 1) {
    bool found = false;
    for (std::uint64_t n = 0; n < q && !found; ++n) {
      detail::PrimePoly f(e + 1, 0);
      std::uint64_t rest = n;
      for (std::uint32_t i = e; i-- > 0;) {  // c_0 is the most significant
        f[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      f[e] = 1;
      if (detail::is_irreducible(f, p)) {
        ctx.reduction_.assign(f.begin(), f.end() - 1);
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
  }
  ctx.build_tables();
  return ctx;
}

/// Parses "19", "2^2" or a bare prime power such as "9".
inline FieldCtx parse_field(std::string_view spec) {
  auto to_uint = [&](std::string_view s) -> std::uint32_t {
    if (s.empty() || s.size() > 9 ||
        s.find_first_not_of("0123456789") != std::string_view::npos)
      throw InvalidArgument("malformed field spec '" + std::string(spec) + "'");
    return static_cast<std::uint32_t>(std::stoul(std::string(s)));
  };
  if (auto caret = spec.find('^'); caret != std::string_view::npos)
    return make_field(to_uint(spec.substr(0, caret)),
                      to_uint(spec.substr(caret + 1)));
  std::uint32_t q = to_uint(spec);
  if (q < 2) throw InvalidArgument("field order must be >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  for (std::uint32_t rest = q; rest > 1; rest /= p, ++e)
    if (rest % p != 0)
      throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return make_field(p, e);
}

}  // namespace wps
