#include "staralg/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace staralg {

namespace {

StarPolynomial yv(std::uint32_t i, unsigned p) {
  return StarPolynomial::variable(Indet::y(i), p);
}
StarPolynomial zv(std::uint32_t i, unsigned p) {
  return StarPolynomial::variable(Indet::z(i), p);
}

StarPolynomial comm(std::vector<StarPolynomial> args) {
  return commutator(std::span<const StarPolynomial>(args));
}

bool permutation_sign(const std::vector<std::uint32_t>& perm) {
  // true = odd permutation
  std::size_t n = perm.size();
  std::vector<bool> seen(n + 1, false);
  bool odd = false;
  for (std::uint32_t s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::uint32_t len = 0, cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = perm[cur - 1];
      ++len;
    }
    if (len % 2 == 0) odd = !odd;
  }
  return odd;
}

void validate_permutation(const std::vector<std::uint32_t>& perm) {
  std::vector<std::uint32_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i + 1) throw DomainError("not a permutation of 1..l");
}

}  // namespace

StarPolynomial make_H(unsigned k, unsigned p) {
  switch (k) {
    case 1:
      return comm({yv(1, p), yv(2, p)});
    case 2:
      return zv(1, p) * zv(2, p) * zv(3, p) - zv(3, p) * zv(2, p) * zv(1, p);
    case 3:
      return comm({zv(1, p), zv(2, p)}) * comm({zv(3, p), zv(4, p)});
    case 4:
      return comm({yv(1, p), zv(1, p), zv(2, p), zv(3, p)}) -
             Scalar::integer(4, p) *
                 (jordan(zv(1, p), zv(2, p)) * comm({yv(1, p), zv(3, p)}));
    case 5:
      return comm({zv(1, p), zv(2, p)}) * yv(1, p) * comm({zv(3, p), zv(4, p)}) +
             comm({zv(3, p), zv(4, p)}) * yv(1, p) * comm({zv(1, p), zv(2, p)});
    case 6:
      return Scalar::integer(2, p) *
                 (zv(1, p) * comm({yv(1, p), zv(2, p), zv(3, p)})) +
             comm({yv(1, p), zv(1, p), zv(2, p), zv(3, p)}) +
             comm({zv(1, p), zv(2, p)}) * comm({yv(1, p), zv(3, p)}) +
             comm({zv(1, p), zv(3, p)}) * comm({yv(1, p), zv(2, p)}) +
             comm({zv(2, p), zv(3, p)}) * comm({yv(1, p), zv(1, p)});
    case 7:
      return Scalar::integer(2, p) *
                 (comm({zv(1, p), zv(2, p)}) * zv(3, p) *
                  comm({yv(1, p), zv(4, p)})) +
             comm({zv(1, p), zv(2, p)}) * comm({yv(1, p), zv(3, p), zv(4, p)});
    case 8:
      return comm({yv(1, p), zv(1, p)}) * comm({yv(2, p), zv(2, p)}) +
             comm({yv(1, p), zv(2, p)}) * comm({yv(2, p), zv(1, p)});
    case 9:
      return comm({yv(1, p), zv(1, p)}) * comm({yv(2, p), zv(2, p), zv(3, p)}) -
             comm({yv(1, p), zv(2, p), zv(1, p)}) * comm({yv(2, p), zv(3, p)});
    case 10:
      return comm({zv(1, p), zv(2, p)}) * comm({yv(1, p), zv(3, p)}) *
                 comm({yv(2, p), zv(4, p)}) -
             comm({zv(1, p), zv(4, p)}) * comm({yv(1, p), zv(2, p)}) *
                 comm({yv(2, p), zv(3, p)}) -
             comm({zv(2, p), zv(3, p)}) * comm({yv(1, p), zv(1, p)}) *
                 comm({yv(2, p), zv(4, p)}) +
             comm({zv(3, p), zv(4, p)}) * comm({yv(1, p), zv(1, p)}) *
                 comm({yv(2, p), zv(2, p)});
    default:
      throw DomainError("H index must be 1..10");
  }
}

StarPolynomial make_central_a(unsigned p) { return jordan(zv(1, p), zv(2, p)); }

StarPolynomial make_central_b(unsigned p) {
  return comm({yv(1, p), zv(1, p), zv(2, p)}) -
         Scalar::integer(4, p) * (jordan(zv(1, p), zv(2, p)) * yv(1, p));
}

StarPolynomial make_central_c(unsigned p) {
  if (p < 3) throw DomainError("y1^p needs characteristic p > 2");
  RingConfig{p, false}.validate();
  return yv(1, p).pow(p);
}

StarPolynomial make_alt_central_b(unsigned p) {
  return comm({yv(1, p), zv(1, p), zv(2, p)}) -
         comm({yv(1, p), zv(2, p), zv(1, p)});
}

StarPolynomial make_P(unsigned i, unsigned l, unsigned p) {
  if (l < 1) throw DomainError("P needs l >= 1");
  if (i < 1 || i > l + 1) throw DomainError("P index must lie in 1..l+1");
  StarPolynomial acc;
  if (i == 1) {
    acc = comm({yv(2, p), zv(1, p), zv(2, p)});
    for (unsigned j = 3; j <= l + 1; ++j) acc = acc * comm({yv(j, p), zv(j, p)});
  } else {
    acc = comm({yv(2, p), zv(i, p), zv(1, p)});
    for (unsigned j = 3; j <= i; ++j) acc = acc * comm({yv(j, p), zv(j - 1, p)});
    for (unsigned j = i + 1; j <= l + 1; ++j)
      acc = acc * comm({yv(j, p), zv(j, p)});
  }
  return acc;
}

StarPolynomial make_C(unsigned l, unsigned p) {
  StarPolynomial acc = StarPolynomial::zero(p);
  for (unsigned n = 1; n <= l + 1; ++n) {
    StarPolynomial pn = make_P(n, l, p);
    if (n % 2 == 1)
      acc -= pn;
    else
      acc += pn;
  }
  return acc;
}

StarPolynomial make_D(unsigned l, unsigned p) {
  StarPolynomial prod = comm({yv(1, p), zv(1, p)});
  for (unsigned j = 2; j <= l + 1; ++j) prod = prod * comm({yv(j, p), zv(j, p)});
  return yv(1, p) * make_C(l, p) + prod;
}

StarPolynomial make_G(unsigned n, unsigned p) {
  if (n < 1) throw DomainError("G needs n >= 1");
  StarPolynomial acc = jordan(zv(1, p), zv(2, p));
  for (unsigned i = 2; i <= n; ++i)
    acc = acc * jordan(zv(2 * i - 1, p), zv(2 * i, p));
  return acc;
}

namespace {

/// P_{m,n} for m < n: the head commutator absorbs z_m, z_n and the smallest
/// remaining index; the tail pairs y_3..y_{l+1} with the other indices.
StarPolynomial make_P_mn(unsigned m, unsigned n, unsigned l, unsigned p) {
  std::vector<unsigned> ks;
  for (unsigned t = 1; t <= l + 2; ++t)
    if (t != m && t != n) ks.push_back(t);
  StarPolynomial acc =
      comm({yv(2, p), zv(m, p), zv(n, p), zv(ks[0], p)});
  for (unsigned j = 1; j < ks.size(); ++j)
    acc = acc * comm({yv(2 + j, p), zv(ks[j], p)});
  return acc;
}

}  // namespace

StarPolynomial make_eq1_residual(unsigned i, unsigned l, unsigned p) {
  if (l < 1) throw DomainError("eq1 needs l >= 1");
  if (i < 1 || i > l + 1) throw DomainError("eq1 index must lie in 1..l+1");
  StarPolynomial lhs = comm({make_P(i, l, p), zv(l + 2, p)});
  StarPolynomial rhs = StarPolynomial::zero(p);
  for (unsigned j = 1; j < i; ++j) {
    StarPolynomial pji = make_P_mn(j, i, l, p);
    if ((l - j) % 2 == 1)
      rhs -= pji;
    else
      rhs += pji;
  }
  for (unsigned j = i + 1; j <= l + 1; ++j) {
    StarPolynomial pij = make_P_mn(i, j, l, p);
    if ((l + 1 - j) % 2 == 1)
      rhs -= pij;
    else
      rhs += pij;
  }
  return lhs - rhs;
}

StarPolynomial make_eq6_residual(const std::vector<std::uint32_t>& zword,
                                 unsigned p) {
  if (zword.size() % 2 != 0)
    throw DomainError("eq6 needs a z-word of even length");
  unsigned n = static_cast<unsigned>(zword.size() / 2);
  Word w;
  for (auto i : zword) w.push_back(Indet::z(i));
  StarPolynomial lhs = StarPolynomial::word(w, p);
  if (n == 0) return lhs - StarPolynomial::unit(p);

  auto pair_jordan = [&](unsigned k) {
    return jordan(zv(zword[2 * k], p), zv(zword[2 * k + 1], p));
  };
  StarPolynomial main = pair_jordan(0);
  for (unsigned k = 1; k < n; ++k) main = main * pair_jordan(k);

  StarPolynomial g = StarPolynomial::zero(p);
  for (unsigned k = 0; k < n; ++k) {
    StarPolynomial prod = StarPolynomial::unit(p);
    for (unsigned j = 0; j < n; ++j)
      if (j != k) prod = prod * pair_jordan(j);
    prod = prod * comm({zv(zword[2 * k], p), zv(zword[2 * k + 1], p)});
    g += Scalar::inverse_of_two(p) * prod;
  }
  return lhs - main - g;
}

StarPolynomial make_eq8_residual(unsigned n, unsigned p) {
  if (n < 1) throw DomainError("eq8 needs n >= 1");
  std::vector<StarPolynomial> args;
  args.push_back(yv(1, p));
  for (unsigned i = 1; i <= 2 * n; ++i) args.push_back(zv(i, p));
  BigInt denom = 1;
  for (unsigned i = 0; i < n; ++i) denom *= 4;
  return make_G(n, p) * yv(1, p) -
         Scalar::rational(1, denom, p) *
             commutator(std::span<const StarPolynomial>(args));
}

StarPolynomial make_swap_product(const std::vector<std::uint32_t>& sigma,
                                 const std::vector<std::uint32_t>& tau,
                                 unsigned p) {
  if (sigma.size() != tau.size() || sigma.empty())
    throw DomainError("swap product needs two permutations of equal size");
  validate_permutation(sigma);
  validate_permutation(tau);
  unsigned l = static_cast<unsigned>(sigma.size());
  StarPolynomial lhs = comm({yv(1, p), zv(1, p)});
  for (unsigned i = 2; i <= l; ++i) lhs = lhs * comm({yv(i, p), zv(i, p)});
  StarPolynomial rhs = comm({yv(sigma[0], p), zv(tau[0], p)});
  for (unsigned i = 1; i < l; ++i)
    rhs = rhs * comm({yv(sigma[i], p), zv(tau[i], p)});
  bool odd = permutation_sign(sigma) != permutation_sign(tau);
  if (odd) return lhs + rhs;
  return lhs - rhs;
}

StarPolynomial make_swap_nested(const std::vector<std::uint32_t>& sigma,
                                unsigned p) {
  if (sigma.empty()) throw DomainError("swap nested needs a permutation");
  validate_permutation(sigma);
  unsigned l = static_cast<unsigned>(sigma.size());
  std::vector<StarPolynomial> lhs_args{yv(1, p)};
  for (unsigned i = 0; i < l; ++i) lhs_args.push_back(zv(sigma[i], p));
  lhs_args.push_back(zv(l + 1, p));
  std::vector<StarPolynomial> rhs_args{yv(1, p)};
  for (unsigned i = 1; i <= l + 1; ++i) rhs_args.push_back(zv(i, p));
  return commutator(std::span<const StarPolynomial>(lhs_args)) -
         commutator(std::span<const StarPolynomial>(rhs_args));
}

std::vector<CatalogEntry> catalog_entries(unsigned p) {
  std::vector<CatalogEntry> out;
  for (unsigned k = 1; k <= 10; ++k)
    out.push_back({"H" + std::to_string(k), "prop4.H" + std::to_string(k),
                   ExpectedStatus::Identity, make_H(k, p)});
  out.push_back({"central-a", "central.a", ExpectedStatus::Central,
                 make_central_a(p)});
  out.push_back({"central-b", "central.b", ExpectedStatus::Central,
                 make_central_b(p)});
  if (p > 2)
    out.push_back({"central-c", "central.c", ExpectedStatus::Central,
                   make_central_c(p)});
  out.push_back({"thmT-gen", "thmT.gen", ExpectedStatus::Central,
                 make_alt_central_b(p)});
  for (unsigned l = 1; l <= 2; ++l)
    for (unsigned i = 1; i <= l + 1; ++i)
      out.push_back({"P" + std::to_string(i) + "." + std::to_string(l),
                     "eq1.P" + std::to_string(i) + ".l" + std::to_string(l),
                     ExpectedStatus::Neither, make_P(i, l, p)});
  for (unsigned l = 1; l <= 3; ++l) {
    out.push_back({"C" + std::to_string(l), "eq2.C" + std::to_string(l),
                   ExpectedStatus::Central, make_C(l, p)});
    out.push_back({"D" + std::to_string(l), "eq2.D" + std::to_string(l),
                   ExpectedStatus::Central, make_D(l, p)});
  }
  for (unsigned n = 1; n <= 3; ++n)
    out.push_back({"G" + std::to_string(n), "lemmaL.G" + std::to_string(n),
                   ExpectedStatus::Central, make_G(n, p)});
  for (unsigned n = 1; n <= 2; ++n)
    out.push_back({"eq8-" + std::to_string(n), "eq8.n" + std::to_string(n),
                   ExpectedStatus::Central, make_eq8_residual(n, p)});
  return out;
}

StarPolynomial catalog_get(const std::string& name,
                           const std::vector<std::uint32_t>& params,
                           unsigned p) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw DomainError("catalog entry '" + name + "' expects " +
                        std::to_string(n) + " parameter(s)");
  };
  if (name.size() >= 2 && name[0] == 'H' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    need(0);
    return make_H(static_cast<unsigned>(std::stoul(name.substr(1))), p);
  }
  if (name == "central-a") {
    need(0);
    return make_central_a(p);
  }
  if (name == "central-b") {
    need(0);
    return make_central_b(p);
  }
  if (name == "central-c") {
    need(0);
    return make_central_c(p);
  }
  if (name == "thmT-gen") {
    need(0);
    return make_alt_central_b(p);
  }
  if (name == "P") {
    need(2);
    return make_P(params[0], params[1], p);
  }
  if (name == "C") {
    need(1);
    return make_C(params[0], p);
  }
  if (name == "D") {
    need(1);
    return make_D(params[0], p);
  }
  if (name == "G") {
    need(1);
    return make_G(params[0], p);
  }
  if (name == "eq1") {
    need(2);
    return make_eq1_residual(params[0], params[1], p);
  }
  if (name == "eq6") {
    if (params.empty() || params.size() % 2 != 0)
      throw DomainError("eq6 expects an even-length list of z-indices");
    return make_eq6_residual(params, p);
  }
  if (name == "eq8") {
    need(1);
    return make_eq8_residual(params[0], p);
  }
  throw DomainError("unknown catalog entry '" + name + "'");
}

}  // namespace staralg
