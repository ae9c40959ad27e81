#include "staralg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace staralg {

MultiDegree MultiDegree::of_word(const Word& w) {
  MultiDegree d;
  for (auto& v : w) ++d.deg_[v];
  return d;
}

unsigned MultiDegree::total() const {
  unsigned t = 0;
  for (auto& [v, d] : deg_) t += d;
  return t;
}

unsigned MultiDegree::degree_of(Indet v) const {
  auto it = deg_.find(v);
  return it == deg_.end() ? 0 : it->second;
}

void MultiDegree::set(Indet v, unsigned d) {
  if (d == 0)
    deg_.erase(v);
  else
    deg_[v] = d;
}

bool MultiDegree::is_multilinear() const {
  for (auto& [v, d] : deg_)
    if (d != 1) return false;
  return true;
}

std::string MultiDegree::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [v, d] : deg_) {
    if (!first) os << ", ";
    first = false;
    os << v.to_string() << ":" << d;
  }
  os << "}";
  return os.str();
}

StarPolynomial StarPolynomial::zero(unsigned characteristic) {
  return StarPolynomial(characteristic);
}

StarPolynomial StarPolynomial::unit(unsigned characteristic) {
  return word({}, characteristic);
}

StarPolynomial StarPolynomial::constant(const Scalar& c) {
  StarPolynomial f(c.characteristic());
  f.add_term({}, c);
  return f;
}

StarPolynomial StarPolynomial::variable(Indet v, unsigned characteristic) {
  return word({v}, characteristic);
}

StarPolynomial StarPolynomial::word(const Word& w, unsigned characteristic) {
  StarPolynomial f(characteristic);
  f.terms_[w] = Scalar::one(characteristic);
  return f;
}

StarPolynomial StarPolynomial::term(const Scalar& c, const Word& w) {
  StarPolynomial f(c.characteristic());
  f.add_term(w, c);
  return f;
}

Scalar StarPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(p_) : it->second;
}

void StarPolynomial::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void StarPolynomial::require_same_ring(const StarPolynomial& a,
                                       const StarPolynomial& b) {
  if (a.p_ != b.p_)
    throw RingMismatchError("polynomial rings differ (characteristic " +
                            std::to_string(a.p_) + " vs " +
                            std::to_string(b.p_) + ")");
}

StarPolynomial StarPolynomial::operator-() const {
  StarPolynomial r(p_);
  for (auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}

StarPolynomial& StarPolynomial::operator+=(const StarPolynomial& o) {
  require_same_ring(*this, o);
  for (auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

StarPolynomial& StarPolynomial::operator-=(const StarPolynomial& o) {
  require_same_ring(*this, o);
  for (auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b) {
  StarPolynomial::require_same_ring(a, b);
  StarPolynomial r(a.p_);
  for (auto& [wa, ca] : a.terms_)
    for (auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

StarPolynomial operator*(const Scalar& s, const StarPolynomial& a) {
  if (s.characteristic() != a.p_)
    throw RingMismatchError("scalar ring differs from polynomial ring");
  StarPolynomial r(a.p_);
  if (s.is_zero()) return r;
  for (auto& [w, c] : a.terms_) r.add_term(w, s * c);
  return r;
}

StarPolynomial StarPolynomial::pow(unsigned k) const {
  StarPolynomial r = unit(p_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool StarPolynomial::operator==(const StarPolynomial& o) const {
  return p_ == o.p_ && terms_ == o.terms_;
}

std::vector<Indet> StarPolynomial::variables() const {
  std::vector<Indet> out;
  for (auto& [w, c] : terms_)
    for (auto& v : w)
      if (!std::binary_search(out.begin(), out.end(), v)) {
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
      }
  return out;
}

std::uint32_t StarPolynomial::max_index(VarKind kind) const {
  std::uint32_t m = 0;
  for (auto& [w, c] : terms_)
    for (auto& v : w)
      if (v.kind == kind) m = std::max(m, v.index);
  return m;
}

unsigned StarPolynomial::total_degree() const {
  unsigned m = 0;
  for (auto& [w, c] : terms_) m = std::max<unsigned>(m, w.size());
  return m;
}

StarPolynomial star(const StarPolynomial& f) {
  StarPolynomial r(f.characteristic());
  for (auto& [w, c] : f.terms()) {
    Word rev(w.rbegin(), w.rend());
    std::size_t zs = std::count_if(w.begin(), w.end(), [](const Indet& v) {
      return v.kind == VarKind::Z;
    });
    r.add_term(rev, (zs & 1) ? -c : c);
  }
  return r;
}

StarPolynomial commutator(std::span<const StarPolynomial> args) {
  if (args.size() < 2)
    throw DomainError("commutator needs at least 2 arguments");
  StarPolynomial acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i)
    acc = acc * args[i] - args[i] * acc;
  return acc;
}

StarPolynomial commutator(std::initializer_list<StarPolynomial> args) {
  std::vector<StarPolynomial> v(args);
  return commutator(std::span<const StarPolynomial>(v));
}

StarPolynomial letter_commutator(std::span<const Indet> letters,
                                 unsigned characteristic) {
  std::vector<StarPolynomial> args;
  args.reserve(letters.size());
  for (auto& v : letters) args.push_back(StarPolynomial::variable(v, characteristic));
  return commutator(args);
}

StarPolynomial jordan(const StarPolynomial& f, const StarPolynomial& g) {
  return Scalar::inverse_of_two(f.characteristic()) * (f * g + g * f);
}

MultiDegreeResult multidegree(const StarPolynomial& f) {
  if (f.is_zero()) throw DomainError("multidegree of the zero polynomial");
  MultiDegreeResult res;
  const Word* first = nullptr;
  MultiDegree d0;
  for (auto& [w, c] : f.terms()) {
    MultiDegree d = MultiDegree::of_word(w);
    if (!first) {
      first = &w;
      d0 = d;
    } else if (!(d == d0)) {
      res.mismatch = {*first, w};
      return res;
    }
  }
  res.degree = d0;
  return res;
}

std::map<MultiDegree, StarPolynomial> homogeneous_components(
    const StarPolynomial& f) {
  std::map<MultiDegree, StarPolynomial> out;
  for (auto& [w, c] : f.terms()) {
    MultiDegree d = MultiDegree::of_word(w);
    auto [it, inserted] = out.try_emplace(d, StarPolynomial(f.characteristic()));
    it->second.add_term(w, c);
  }
  return out;
}

StarPolynomial substitute(const StarPolynomial& f,
                          const std::map<Indet, StarPolynomial>& images) {
  StarPolynomial r(f.characteristic());
  for (auto& [w, c] : f.terms()) {
    StarPolynomial acc = StarPolynomial::term(c, {});
    for (auto& v : w) {
      auto it = images.find(v);
      if (it == images.end())
        acc = acc * StarPolynomial::variable(v, f.characteristic());
      else
        acc = acc * it->second;
    }
    r += acc;
  }
  return r;
}

Polarization multilinearize(const StarPolynomial& f) {
  auto md = multidegree(f);
  if (!md.homogeneous())
    throw DomainError("multilinearize requires a multihomogeneous polynomial");
  unsigned p = f.characteristic();
  if (p != 0)
    for (auto& [v, d] : md.degree->entries())
      if (d >= p)
        throw DomainError(
            "multilinearization invalid: characteristic " + std::to_string(p) +
            " does not exceed the degree of " + v.to_string());

  Polarization out;
  out.poly = f;
  std::uint32_t next_y = f.max_index(VarKind::Y) + 1;
  std::uint32_t next_z = f.max_index(VarKind::Z) + 1;
  for (auto& [v, d] : md.degree->entries()) {
    std::vector<Indet> replicas{v};
    if (d > 1) {
      StarPolynomial sum = StarPolynomial::variable(v, p);
      for (unsigned j = 1; j < d; ++j) {
        std::uint32_t idx = (v.kind == VarKind::Y) ? next_y++ : next_z++;
        Indet fresh{v.kind, idx};
        replicas.push_back(fresh);
        sum += StarPolynomial::variable(fresh, p);
      }
      StarPolynomial expanded = substitute(out.poly, {{v, sum}});
      // keep only words where every replica occurs exactly once
      StarPolynomial kept(p);
      for (auto& [w, c] : expanded.terms()) {
        MultiDegree wd = MultiDegree::of_word(w);
        bool ok = true;
        for (auto& rv : replicas)
          if (wd.degree_of(rv) != 1) {
            ok = false;
            break;
          }
        if (ok) kept.add_term(w, c);
      }
      out.poly = kept;
    }
    out.frame[v] = replicas;
  }
  return out;
}

std::pair<StarPolynomial, StarPolynomial> sym_skew_split(const StarPolynomial& f) {
  Scalar h = Scalar::inverse_of_two(f.characteristic());
  StarPolynomial fs = h * (f + star(f));
  StarPolynomial fk = h * (f - star(f));
  return {fs, fk};
}

std::string StarPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms_) {
    std::string cs;
    bool minus = false;
    if (c.is_constant()) {
      const BigRat& v = c.rational_value();
      minus = v < 0;
      if (first && minus) {
        // leading negative terms carry the coefficient explicitly
        std::ostringstream tmp;
        tmp << v;
        cs = tmp.str();
        minus = false;
      } else {
        std::ostringstream tmp;
        tmp << (minus ? BigRat(-v) : v);
        cs = tmp.str();
      }
    } else {
      cs = "(" + c.to_string() + ")";
    }
    if (first) {
      first = false;
    } else {
      os << (minus ? " - " : " + ");
    }
    if (w.empty()) {
      os << cs;
    } else if (cs == "1") {
      for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? "*" : "") << w[i].to_string();
    } else {
      os << cs << "*";
      for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? "*" : "") << w[i].to_string();
    }
  }
  return os.str();
}

}  // namespace staralg
