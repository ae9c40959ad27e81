#include "staralg/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace staralg {

bool inversion_parity_mask(Blade s, Blade t) {
  // For each generator t_j in T, count the generators of S above it.
  bool parity = false;
  Blade rest = t;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    Blade above = s & ~((Blade{1} << j) | ((Blade{1} << j) - 1));
    parity ^= (std::popcount(above) & 1) != 0;
  }
  return parity;
}

bool inversion_parity_merge(std::span<const std::uint32_t> s,
                            std::span<const std::uint32_t> t) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    while (i < s.size() && s[i] < t[j]) ++i;
    count += s.size() - i;
    // equal indices never occur for disjoint supports; treat s == t as above
    if (i < s.size() && s[i] == t[j]) --count;
  }
  return (count & 1) != 0;
}

std::vector<std::uint32_t> blade_indices(Blade b) {
  std::vector<std::uint32_t> out;
  while (b) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(b)) + 1);
    b &= b - 1;
  }
  return out;
}

Blade blade_from_indices(std::span<const std::uint32_t> indices,
                         unsigned truncation) {
  Blade b = 0;
  for (auto i : indices) {
    if (i < 1 || i > truncation)
      throw TruncationError("generator index " + std::to_string(i) +
                            " outside truncation " + std::to_string(truncation));
    Blade bit = Blade{1} << (i - 1);
    if (b & bit)
      throw DomainError("repeated generator index in blade");
    b |= bit;
  }
  return b;
}

GrassmannElement::GrassmannElement(unsigned truncation, unsigned characteristic)
    : trunc_(truncation), p_(characteristic) {
  if (truncation > 64)
    throw TruncationError("truncation above 64 generators is not supported");
}

GrassmannElement GrassmannElement::zero(unsigned truncation,
                                        unsigned characteristic) {
  return GrassmannElement(truncation, characteristic);
}

GrassmannElement GrassmannElement::unit(unsigned truncation,
                                        unsigned characteristic) {
  GrassmannElement g(truncation, characteristic);
  g.terms_[0] = Scalar::one(characteristic);
  return g;
}

GrassmannElement GrassmannElement::generator(std::uint32_t i, unsigned truncation,
                                             unsigned characteristic) {
  GrassmannElement g(truncation, characteristic);
  std::uint32_t idx[1] = {i};
  g.terms_[blade_from_indices(idx, truncation)] = Scalar::one(characteristic);
  return g;
}

GrassmannElement GrassmannElement::basis(std::span<const std::uint32_t> indices,
                                         unsigned truncation,
                                         unsigned characteristic) {
  GrassmannElement g(truncation, characteristic);
  g.terms_[blade_from_indices(indices, truncation)] = Scalar::one(characteristic);
  return g;
}

GrassmannElement GrassmannElement::term(const Scalar& coeff, Blade blade,
                                        unsigned truncation) {
  GrassmannElement g(truncation, coeff.characteristic());
  if (!coeff.is_zero()) g.terms_[blade] = coeff;
  return g;
}

bool GrassmannElement::is_even() const {
  for (auto& [b, c] : terms_)
    if (std::popcount(b) & 1) return false;
  return true;
}

bool GrassmannElement::is_odd() const {
  for (auto& [b, c] : terms_)
    if (!(std::popcount(b) & 1)) return false;
  return true;
}

Scalar GrassmannElement::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar::zero(p_) : it->second;
}

GrassmannElement GrassmannElement::parity_project(Parity parity) const {
  GrassmannElement g(trunc_, p_);
  for (auto& [b, c] : terms_) {
    bool odd = (std::popcount(b) & 1) != 0;
    if ((parity == Parity::Odd) == odd) g.terms_[b] = c;
  }
  return g;
}

void GrassmannElement::require_compatible(const GrassmannElement& a,
                                          const GrassmannElement& b) {
  if (a.trunc_ != b.trunc_)
    throw TruncationError("Grassmann truncations differ (" +
                          std::to_string(a.trunc_) + " vs " +
                          std::to_string(b.trunc_) + ")");
  if (a.p_ != b.p_)
    throw RingMismatchError("Grassmann coefficient rings differ");
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement g(trunc_, p_);
  for (auto& [b, c] : terms_) g.terms_[b] = -c;
  return g;
}

void GrassmannElement::add_term(Blade b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  require_compatible(*this, o);
  for (auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  require_compatible(*this, o);
  for (auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement::require_compatible(a, b);
  GrassmannElement r(a.trunc_, a.p_);
  for (auto& [s, cs] : a.terms_)
    for (auto& [t, ct] : b.terms_) {
      if (s & t) continue;  // shared generator: product vanishes
      Scalar c = cs * ct;
      if (inversion_parity_mask(s, t)) c = -c;
      r.add_term(s | t, c);
    }
  return r;
}

GrassmannElement operator*(const Scalar& s, const GrassmannElement& a) {
  GrassmannElement r(a.trunc_, a.p_);
  if (s.is_zero()) return r;
  if (s.characteristic() != a.p_)
    throw RingMismatchError("scalar ring differs from Grassmann coefficients");
  for (auto& [b, c] : a.terms_) r.add_term(b, s * c);
  return r;
}

GrassmannElement GrassmannElement::pow(unsigned k) const {
  GrassmannElement r = unit(trunc_, p_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool GrassmannElement::operator==(const GrassmannElement& o) const {
  return trunc_ == o.trunc_ && p_ == o.p_ && terms_ == o.terms_;
}

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  // print by (support size, mask)
  std::vector<std::pair<Blade, const Scalar*>> order;
  for (auto& [b, c] : terms_) order.push_back({b, &c});
  std::stable_sort(order.begin(), order.end(), [](auto& x, auto& y) {
    int px = std::popcount(x.first), py = std::popcount(y.first);
    if (px != py) return px < py;
    return x.first < y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [b, c] : order) {
    std::string cs = c->is_sum_like() ? "(" + c->to_string() + ")" : c->to_string();
    bool lead_minus = cs.size() && cs[0] == '-';
    if (first) {
      first = false;
      if (lead_minus) {
        os << "-";
        cs = cs.substr(1);
      }
    } else {
      if (lead_minus) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    std::string blade;
    {
      std::ostringstream bs;
      bool bfirst = true;
      for (auto i : blade_indices(b)) {
        if (!bfirst) bs << "*";
        bfirst = false;
        bs << "e" << i;
      }
      blade = bs.str();
    }
    if (blade.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << blade;
    } else {
      os << cs << "*" << blade;
    }
  }
  return os.str();
}

}  // namespace staralg
