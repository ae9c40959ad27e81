#include "staralg/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace staralg {

namespace {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// decreasing lexicographic order on tuples of equal length
struct TupleDescLex {
  bool operator()(const std::vector<unsigned>& a,
                  const std::vector<unsigned>& b) const {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

std::uint32_t fresh_symbol_base(const StarPolynomial& f) {
  std::uint32_t base = 1;
  for (auto& [w, c] : f.terms()) base = std::max(base, c.max_symbol() + 1);
  return base;
}

/// Expands f(y_i + t_i) and buckets terms by the exponents of the window
/// t-variables [base, base + frame.size()).
std::map<std::vector<unsigned>, StarPolynomial, TupleDescLex> shift_layers(
    const StarPolynomial& f, const std::vector<Indet>& frame,
    std::uint32_t base) {
  unsigned p = f.characteristic();
  std::map<Indet, StarPolynomial> shift;
  for (std::size_t i = 0; i < frame.size(); ++i)
    shift.emplace(frame[i],
                  StarPolynomial::variable(frame[i], p) +
                      StarPolynomial::constant(Scalar::variable(
                          base + static_cast<std::uint32_t>(i), p)));
  StarPolynomial expanded = substitute(f, shift);

  std::map<std::vector<unsigned>, StarPolynomial, TupleDescLex> layers;
  std::vector<unsigned> zero_key(frame.size(), 0);
  auto bucket_add = [&](const std::vector<unsigned>& key, const Word& w,
                        const Scalar& c) {
    auto [it, inserted] = layers.try_emplace(key, StarPolynomial::zero(p));
    it->second.add_term(w, c);
  };
  for (auto& [w, s] : expanded.terms()) {
    if (s.constant_part() != 0)
      bucket_add(zero_key, w, Scalar::of_rat(s.constant_part(), p));
    for (auto& [mono, coeff] : s.symbolic_terms()) {
      std::vector<unsigned> key(frame.size(), 0);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> rest;
      for (auto& [var, exp] : mono.factors()) {
        if (var >= base && var < base + frame.size())
          key[var - base] = exp;
        else
          rest.push_back({var, exp});
      }
      bucket_add(key, w, Scalar::monomial(TMono::from_factors(rest), coeff, p));
    }
  }
  return layers;
}

}  // namespace

StarPolynomial PBWDecomposition::recombine() const {
  StarPolynomial acc = StarPolynomial::zero(characteristic);
  for (auto& [tuple, w] : entries) {
    Word prefix;
    for (std::size_t i = 0; i < frame.size(); ++i)
      for (unsigned k = 0; k < tuple[i]; ++k) prefix.push_back(frame[i]);
    acc += StarPolynomial::word(prefix, characteristic) * w;
  }
  return acc;
}

StarPolynomial PBWDecomposition::part(const std::vector<unsigned>& tuple) const {
  for (auto& [t, w] : entries)
    if (t == tuple) return w;
  return StarPolynomial::zero(characteristic);
}

PBWDecomposition pbw_decompose(const StarPolynomial& f) {
  PBWDecomposition out;
  out.characteristic = f.characteristic();
  for (auto& v : f.variables())
    if (v.kind == VarKind::Y) out.frame.push_back(v);
  if (f.is_zero()) return out;

  unsigned p = f.characteristic();
  std::size_t L = out.frame.size();
  if (L == 0) {
    // no y-letters at all: f is already proper
    out.entries.push_back({{}, f});
    return out;
  }

  auto layers = shift_layers(f, out.frame, fresh_symbol_base(f));

  // candidate tuples: the componentwise box spanned by the layer keys
  std::vector<unsigned> box(L, 0);
  for (auto& [key, poly] : layers)
    for (std::size_t i = 0; i < L; ++i) box[i] = std::max(box[i], key[i]);

  std::map<std::vector<unsigned>, StarPolynomial, TupleDescLex> parts;
  std::vector<unsigned> tuple = box;
  for (;;) {
    // T_a minus the contributions of all greater layers
    StarPolynomial w = StarPolynomial::zero(p);
    auto lit = layers.find(tuple);
    if (lit != layers.end()) w = lit->second;
    for (auto& [b, wb] : parts) {
      bool dominates = true;
      for (std::size_t i = 0; i < L; ++i)
        if (b[i] < tuple[i]) {
          dominates = false;
          break;
        }
      if (!dominates || b == tuple) continue;
      BigInt coeff = 1;
      Word prefix;
      for (std::size_t i = 0; i < L; ++i) {
        coeff *= binomial(b[i], tuple[i]);
        for (unsigned k = 0; k < b[i] - tuple[i]; ++k)
          prefix.push_back(out.frame[i]);
      }
      w -= StarPolynomial::term(Scalar::integer(coeff, p), prefix) * wb;
    }
    if (!w.is_zero()) parts.emplace(tuple, std::move(w));

    // next tuple in decreasing lexicographic order within the box
    std::size_t i = L;
    for (;;) {
      if (i == 0) goto done;
      --i;
      if (tuple[i] > 0) {
        --tuple[i];
        for (std::size_t j = i + 1; j < L; ++j) tuple[j] = box[j];
        break;
      }
    }
  }
done:
  for (auto& [t, w] : parts) out.entries.push_back({t, w});
  return out;
}

std::vector<unsigned> rank_tuple(const StarPolynomial& f) {
  if (f.is_zero()) throw DomainError("rank of the zero polynomial");
  if (!multidegree(f).homogeneous())
    throw DomainError("rank requires a multihomogeneous polynomial");
  auto d = pbw_decompose(f);
  return d.entries.front().first;
}

StarPolynomial leading_proper_part(const StarPolynomial& f) {
  if (f.is_zero()) throw DomainError("zero polynomial has no proper part");
  if (!multidegree(f).homogeneous())
    throw DomainError("leading proper part requires a multihomogeneous polynomial");
  auto d = pbw_decompose(f);
  return d.entries.front().second;
}

bool is_proper(const StarPolynomial& f) {
  unsigned p = f.characteristic();
  std::uint32_t t = fresh_symbol_base(f);
  std::map<Indet, StarPolynomial> shift;
  for (auto& v : f.variables())
    if (v.kind == VarKind::Y)
      shift.emplace(v, StarPolynomial::variable(v, p) +
                           StarPolynomial::constant(Scalar::variable(t++, p)));
  if (shift.empty()) return true;
  return substitute(f, shift) == f;
}

std::vector<StarPolynomial> proper_spanning_set(const MultiDegree& degree,
                                                unsigned characteristic,
                                                unsigned degree_cap) {
  if (degree.total() > degree_cap)
    throw DegreeCapError("multidegree total " + std::to_string(degree.total()) +
                         " exceeds the cap " + std::to_string(degree_cap));
  std::vector<StarPolynomial> out;
  std::map<Indet, unsigned> remaining = degree.entries();

  std::function<void(const StarPolynomial&)> rec =
      [&](const StarPolynomial& acc) {
        unsigned total_left = 0;
        for (auto& [v, d] : remaining) total_left += d;
        if (total_left == 0) {
          out.push_back(acc);
          return;
        }
        // single z-letter block
        for (auto& [v, d] : remaining) {
          if (d == 0 || v.kind != VarKind::Z) continue;
          --remaining[v];
          rec(acc * StarPolynomial::variable(v, characteristic));
          ++remaining[v];
        }
        // left-normed commutator block of length r >= 2
        std::vector<Indet> seq;
        std::function<void(unsigned)> pick = [&](unsigned r) {
          if (seq.size() == r) {
            if (!(seq[0] == seq[1]))
              rec(acc * letter_commutator(seq, characteristic));
            return;
          }
          for (auto& [v, d] : remaining) {
            if (d == 0) continue;
            --remaining[v];
            seq.push_back(v);
            pick(r);
            seq.pop_back();
            ++remaining[v];
          }
        };
        for (unsigned r = 2; r <= total_left; ++r) pick(r);
      };
  rec(StarPolynomial::unit(characteristic));
  return out;
}

}  // namespace staralg
