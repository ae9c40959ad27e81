#include "staralg/m11.hpp"

#include <bit>
#include <random>
#include <sstream>

namespace staralg {

namespace {

void require_entry_rings(const GrassmannElement& x, const GrassmannElement& y) {
  if (x.truncation() != y.truncation())
    throw TruncationError("matrix entries have different truncations");
  if (x.characteristic() != y.characteristic())
    throw RingMismatchError("matrix entries have different coefficient rings");
}

}  // namespace

M11Element::M11Element(GrassmannElement a, GrassmannElement b, GrassmannElement c,
                       GrassmannElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  require_entry_rings(a_, b_);
  require_entry_rings(a_, c_);
  require_entry_rings(a_, d_);
  if (!a_.is_even() || !d_.is_even())
    throw DomainError("diagonal entries must be even");
  if (!b_.is_odd() || !c_.is_odd())
    throw DomainError("off-diagonal entries must be odd");
}

M11Element M11Element::zero(unsigned truncation, unsigned characteristic) {
  GrassmannElement z = GrassmannElement::zero(truncation, characteristic);
  return M11Element(z, z, z, z);
}

M11Element M11Element::identity(unsigned truncation, unsigned characteristic) {
  GrassmannElement z = GrassmannElement::zero(truncation, characteristic);
  GrassmannElement u = GrassmannElement::unit(truncation, characteristic);
  return M11Element(u, z, z, u);
}

M11Element M11Element::symmetric(const GrassmannElement& alpha,
                                 const GrassmannElement& beta) {
  if (!alpha.is_even()) throw DomainError("symmetric element needs an even alpha");
  if (!beta.is_odd()) throw DomainError("symmetric element needs an odd beta");
  GrassmannElement z = GrassmannElement::zero(alpha.truncation(),
                                              alpha.characteristic());
  return M11Element(alpha, beta, z, alpha);
}

M11Element M11Element::skew(const GrassmannElement& alpha,
                            const GrassmannElement& beta) {
  if (!alpha.is_even()) throw DomainError("skew element needs an even alpha");
  if (!beta.is_odd()) throw DomainError("skew element needs an odd beta");
  GrassmannElement z = GrassmannElement::zero(alpha.truncation(),
                                              alpha.characteristic());
  return M11Element(alpha, z, beta, -alpha);
}

bool M11Element::is_zero() const {
  return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
}

M11Element M11Element::star() const {
  return M11Element(d_, b_, -c_, a_);
}

M11Element M11Element::operator-() const {
  return M11Element(-a_, -b_, -c_, -d_);
}

M11Element& M11Element::operator+=(const M11Element& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

M11Element& M11Element::operator-=(const M11Element& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

M11Element operator*(const M11Element& x, const M11Element& y) {
  return M11Element(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                    x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

M11Element operator*(const Scalar& s, const M11Element& x) {
  return M11Element(s * x.a_, s * x.b_, s * x.c_, s * x.d_);
}

bool M11Element::operator==(const M11Element& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

bool M11Element::is_central() const { return is_central_element(*this); }

std::string M11Element::to_string() const {
  std::ostringstream os;
  os << "[[" << a_.to_string() << " | " << b_.to_string() << "],["
     << c_.to_string() << " | " << d_.to_string() << "]]";
  return os.str();
}

bool is_central_element(const M11Element& x) {
  unsigned n = x.truncation();
  unsigned p = x.characteristic();
  GrassmannElement zg = GrassmannElement::zero(n, p);
  GrassmannElement ug = GrassmannElement::unit(n, p);
  std::vector<M11Element> probes;
  probes.push_back(M11Element(ug, zg, zg, zg));  // diag(1,0)
  probes.push_back(M11Element(zg, zg, zg, ug));  // diag(0,1)
  for (std::uint32_t i = 1; i <= n; ++i) {
    GrassmannElement ei = GrassmannElement::generator(i, n, p);
    probes.push_back(M11Element(zg, ei, zg, zg));
    probes.push_back(M11Element(zg, zg, ei, zg));
  }
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      std::uint32_t idx[2] = {i, j};
      GrassmannElement m = GrassmannElement::basis(idx, n, p);
      probes.push_back(M11Element(m, zg, zg, zg));
      probes.push_back(M11Element(zg, zg, zg, m));
    }
  for (auto& r : probes) {
    M11Element lhs = x * r;
    M11Element rhs = r * x;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<M11Element> TestFamily::symmetric_members() const {
  std::vector<M11Element> out;
  for (auto& s : slots)
    if (s.var.kind == VarKind::Y)
      out.insert(out.end(), s.candidates.begin(), s.candidates.end());
  return out;
}

std::vector<M11Element> TestFamily::skew_members() const {
  std::vector<M11Element> out;
  for (auto& s : slots)
    if (s.var.kind == VarKind::Z)
      out.insert(out.end(), s.candidates.begin(), s.candidates.end());
  return out;
}

namespace {

M11Element unit_shape(VarKind kind, unsigned n, unsigned p) {
  GrassmannElement u = GrassmannElement::unit(n, p);
  GrassmannElement z = GrassmannElement::zero(n, p);
  if (kind == VarKind::Y) return M11Element::symmetric(u, z);
  return M11Element::skew(u, z);  // diag(1,-1)
}

M11Element pair_shape(VarKind kind, std::uint32_t i, std::uint32_t j, unsigned n,
                      unsigned p) {
  std::uint32_t idx[2] = {i, j};
  GrassmannElement m = GrassmannElement::basis(idx, n, p);
  GrassmannElement z = GrassmannElement::zero(n, p);
  if (kind == VarKind::Y) return M11Element::symmetric(m, z);
  return M11Element::skew(m, z);
}

M11Element odd_shape(VarKind kind, std::uint32_t k, unsigned n, unsigned p) {
  GrassmannElement e = GrassmannElement::generator(k, n, p);
  GrassmannElement z = GrassmannElement::zero(n, p);
  if (kind == VarKind::Y) return M11Element::symmetric(z, e);
  return M11Element::skew(z, e);
}

M11Element weighted_shapes(VarKind kind, const Scalar& c0, const Scalar& c1,
                           const Scalar& c2, std::uint32_t base, unsigned n,
                           unsigned p) {
  M11Element x = c0 * unit_shape(kind, n, p);
  x += c1 * pair_shape(kind, base, base + 1, n, p);
  x += c2 * odd_shape(kind, base + 2, n, p);
  return x;
}

}  // namespace

TestFamily make_test_family(const StarPolynomial& f, FamilyStrategy strategy,
                            std::uint64_t seed, unsigned spare_generators) {
  if (f.is_zero()) throw DomainError("test family for the zero polynomial");
  std::vector<Indet> vars = f.variables();
  unsigned p = f.characteristic();
  TestFamily fam;
  fam.provenance = strategy;
  fam.characteristic = p;

  if (strategy == FamilyStrategy::Spanning) {
    unsigned n = 2 * static_cast<unsigned>(vars.size()) + spare_generators;
    fam.truncation = n;
    std::uint32_t base = 1;
    for (auto& v : vars) {
      TestFamily::Slot slot{v, {}};
      slot.candidates.push_back(unit_shape(v.kind, n, p));
      slot.candidates.push_back(pair_shape(v.kind, base, base + 1, n, p));
      slot.candidates.push_back(odd_shape(v.kind, base, n, p));
      fam.slots.push_back(std::move(slot));
      base += 2;
    }
    return fam;
  }

  unsigned n = 3 * static_cast<unsigned>(vars.size()) + spare_generators;
  fam.truncation = n;
  if (strategy == FamilyStrategy::GenericSymbolic) {
    std::uint32_t next_t = 1;
    std::uint32_t base = 1;
    for (auto& v : vars) {
      Scalar c0 = Scalar::variable(next_t++, p);
      Scalar c1 = Scalar::variable(next_t++, p);
      Scalar c2 = Scalar::variable(next_t++, p);
      fam.slots.push_back(
          {v, {weighted_shapes(v.kind, c0, c1, c2, base, n, p)}});
      base += 3;
    }
    return fam;
  }

  // Random: seeded scalar coefficients on the same shapes.
  std::mt19937_64 rng(seed);
  auto rnd = [&]() {
    if (p == 0) {
      std::uniform_int_distribution<long> d(-3, 3);
      return Scalar::integer(d(rng), 0);
    }
    std::uniform_int_distribution<long> d(0, p - 1);
    return Scalar::integer(d(rng), p);
  };
  std::uint32_t base = 1;
  for (auto& v : vars) {
    fam.slots.push_back(
        {v, {weighted_shapes(v.kind, rnd(), rnd(), rnd(), base, n, p)}});
    base += 3;
  }
  return fam;
}

}  // namespace staralg
