// Acceptance suite: runs every criterion end to end and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "staralg/catalog.hpp"
#include "staralg/check.hpp"
#include "staralg/cli.hpp"
#include "staralg/membership.hpp"
#include "staralg/parse.hpp"
#include "staralg/structure.hpp"

using namespace staralg;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, bool ok, double ms) {
  std::ostringstream line;
  line << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": "
       << label << " (" << static_cast<long>(ms) << " ms)";
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

template <class F>
void run(int number, const std::string& label, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  if (!note.empty()) std::cout << "       error: " << note << "\n";
  criterion(number, label, ok, ms);
}

bool witness_reevaluates(const CheckReport& r) {
  if (!r.witness) return false;
  return !evaluate(r.witness->checked, r.witness->assignment).is_zero();
}

StarPolynomial random_instance(std::mt19937_64& rng, const StarPolynomial& g,
                               bool ideal_frames) {
  // random monomial images over a small alphabet, symmetrized per kind
  std::vector<Indet> alphabet{Indet::y(1), Indet::y(2), Indet::z(1),
                              Indet::z(2), Indet::z(3)};
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<unsigned> len(1, 2);
  Scalar half = Scalar::inverse_of_two(0);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::map<Indet, StarPolynomial> sub;
    bool zero = false;
    for (auto& v : g.variables()) {
      Word w;
      for (unsigned i = len(rng); i > 0; --i) w.push_back(alphabet[pick(rng)]);
      StarPolynomial m = StarPolynomial::word(w);
      StarPolynomial img = v.kind == VarKind::Y ? half * (m + star(m))
                                                : half * (m - star(m));
      if (img.is_zero()) {
        zero = true;
        break;
      }
      sub.emplace(v, img);
    }
    if (zero) continue;
    StarPolynomial inst = substitute(g, sub);
    if (ideal_frames) {
      Word u{alphabet[pick(rng)]};
      inst = StarPolynomial::word(u) * inst;
    }
    if (!inst.is_zero() && inst.total_degree() <= 6) return inst;
  }
  return StarPolynomial::zero();
}

}  // namespace

int main() {
  CheckConfig exhaustive;
  CheckConfig symbolic{Strategy::Symbolic};

  run(1, "identity suite H1..H10 with negative controls", [&] {
    for (unsigned k = 1; k <= 10; ++k)
      if (!is_identity(make_H(k, 0), exhaustive).holds()) return false;
    for (const char* text : {"[y1,z1]", "z1*z2 - z2*z1", "y1"}) {
      CheckReport r = is_identity(parse_polynomial(text), exhaustive);
      if (r.verdict != Verdict::Fails) return false;
      if (!witness_reevaluates(r)) return false;
    }
    return true;
  });

  run(2, "central suite (a), (b); y1^p central at p in {3,5}", [&] {
    CheckReport a = is_central(make_central_a(0), exhaustive);
    CheckReport b = is_central(make_central_b(0), exhaustive);
    if (!(a.holds() && !*a.identity_itself)) return false;
    if (!(b.holds() && !*b.identity_itself)) return false;
    for (unsigned p : {3u, 5u}) {
      CheckReport c = is_central(make_central_c(p), symbolic);
      if (!(c.holds() && !*c.identity_itself)) return false;
    }
    return true;
  });

  run(3, "C_l, D_l central for l <= 3; G_n central for n <= 3", [&] {
    for (unsigned l = 1; l <= 3; ++l) {
      if (!is_central(make_C(l, 0), symbolic).holds()) return false;
      if (!is_central(make_D(l, 0), symbolic).holds()) return false;
    }
    for (unsigned n = 1; n <= 3; ++n)
      if (!is_central(make_G(n, 0), symbolic).holds()) return false;
    return true;
  });

  run(4, "equation residuals: brackets, z-word rewriting, central residuals, swaps", [&] {
    for (unsigned l = 1; l <= 3; ++l)
      for (unsigned i = 1; i <= l + 1; ++i)
        if (!is_identity(make_eq1_residual(i, l, 0), symbolic).holds())
          return false;
    // every z-word of length <= 6 over 4 distinct variables, cached by the
    // first-occurrence relabeling (the checker is renaming invariant)
    std::map<std::vector<std::uint32_t>, bool> cache;
    for (unsigned len : {2u, 4u, 6u}) {
      std::vector<std::uint32_t> word(len, 1);
      for (;;) {
        std::vector<std::uint32_t> pat;
        {
          std::map<std::uint32_t, std::uint32_t> rename;
          for (auto i : word) {
            auto [it, ins] = rename.try_emplace(i, rename.size() + 1);
            pat.push_back(it->second);
          }
        }
        auto it = cache.find(pat);
        if (it == cache.end()) {
          StarPolynomial res = make_eq6_residual(pat, 0);
          bool ok = res.is_zero() || is_identity(res, symbolic).holds();
          it = cache.emplace(pat, ok).first;
        }
        if (!it->second) return false;
        std::size_t i = len;
        bool wrapped = true;
        while (i > 0) {
          --i;
          if (++word[i] <= 4) {
            wrapped = false;
            break;
          }
          word[i] = 1;
        }
        if (wrapped) break;
      }
    }
    for (unsigned n = 1; n <= 2; ++n)
      if (!is_central(make_eq8_residual(n, 0), symbolic).holds()) return false;
    // swap families for every permutation pair, l <= 3
    for (unsigned l = 1; l <= 3; ++l) {
      std::vector<std::uint32_t> sigma(l);
      for (unsigned i = 0; i < l; ++i) sigma[i] = i + 1;
      do {
        std::vector<std::uint32_t> tau(l);
        for (unsigned i = 0; i < l; ++i) tau[i] = i + 1;
        do {
          if (!is_identity(make_swap_product(sigma, tau, 0), exhaustive)
                   .holds())
            return false;
        } while (std::next_permutation(tau.begin(), tau.end()));
        if (!is_identity(make_swap_nested(sigma, 0), exhaustive).holds())
          return false;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return true;
  });

  run(5, "power formula: (1,2)-entry of ((a,b),(0,a))^k = k a^{k-1} b", [&] {
    std::mt19937_64 rng(7);
    const unsigned n = 8;
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<Blade> blade(0, (Blade{1} << n) - 1);
    for (int trial = 0; trial < 50; ++trial) {
      GrassmannElement alpha = GrassmannElement::zero(n, 0);
      GrassmannElement beta = GrassmannElement::zero(n, 0);
      for (int t = 0; t < 4; ++t) {
        alpha.add_term(blade(rng), Scalar::integer(coeff(rng)));
        beta.add_term(blade(rng), Scalar::integer(coeff(rng)));
      }
      alpha = alpha.even_part();
      beta = beta.odd_part();
      M11Element x = M11Element::symmetric(alpha, beta);
      M11Element acc = M11Element::identity(n, 0);
      for (unsigned k = 1; k <= 6; ++k) {
        acc = acc * x;
        if (!(acc.b() == Scalar::integer(k) * (alpha.pow(k - 1) * beta)))
          return false;
      }
    }
    return true;
  });

  run(6, "random members of V split into a central part and an identity", [&] {
    std::mt19937_64 rng(20240);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> which(0, 1);
    std::uniform_int_distribution<unsigned> hpick(1, 10);
    int built = 0;
    while (built < 100) {
      StarPolynomial g = which(rng) ? make_central_a(0) : make_central_b(0);
      StarPolynomial f =
          Scalar::integer(coeff(rng)) * random_instance(rng, g, false);
      StarPolynomial ideal_part =
          random_instance(rng, make_H(hpick(rng), 0), true);
      if (ideal_part.total_degree() <= 6)
        f += Scalar::integer(coeff(rng)) * ideal_part;
      if (f.is_zero() || f.total_degree() > 6) continue;
      ++built;
      auto [fs, fk] = sym_skew_split(f);
      if (!is_central(fs, symbolic).holds()) return false;
      if (!is_identity(fk, symbolic).holds()) return false;
    }
    return true;
  });

  run(7, "PBW roundtrip on 200 random polynomials; leading parts central", [&] {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> nterms(1, 5);
    for (int i = 0; i < 200; ++i) {
      StarPolynomial f;
      for (unsigned t = nterms(rng); t > 0; --t) {
        Word w;
        std::uniform_int_distribution<unsigned> len(0, 5);
        std::uniform_int_distribution<int> kind(0, 1);
        std::uniform_int_distribution<std::uint32_t> idx(1, 3);
        for (unsigned j = len(rng); j > 0; --j)
          w.push_back(Indet{kind(rng) ? VarKind::Z : VarKind::Y, idx(rng)});
        f.add_term(w, Scalar::integer(coeff(rng)));
      }
      auto d = pbw_decompose(f);
      if (!(d.recombine() == f)) return false;
      for (auto& [t, w] : d.entries)
        if (!is_proper(w)) return false;
    }
    std::vector<StarPolynomial> centrals{make_central_a(0), make_central_b(0),
                                         make_eq8_residual(1, 0),
                                         make_eq8_residual(2, 0)};
    for (unsigned l = 1; l <= 3; ++l) {
      centrals.push_back(make_C(l, 0));
      centrals.push_back(make_D(l, 0));
    }
    for (unsigned n = 1; n <= 3; ++n) centrals.push_back(make_G(n, 0));
    for (auto& f : centrals)
      if (!is_central(leading_proper_part(f), symbolic).holds()) return false;
    return true;
  });

  run(8, "membership certificates: C1, D1, C2 found; y1 not found", [&] {
    VLemmaReport rep = verify_V_lemma(2, 2);
    bool c1 = false, d1 = false, c2 = false;
    std::vector<GeneratorSet> base{central_space_set(0), identity_ideal_set(0)};
    for (auto& s : rep.steps) {
      if (!s.ok || !s.certificate) return false;
      if (s.name == "C1") c1 = true;
      if (s.name == "D1") d1 = s.certificate->recombine(base) == make_D(1, 0);
      if (s.name == "C2") c2 = s.certificate->recombine(base) == make_C(2, 0);
    }
    if (!(c1 && d1 && c2)) return false;
    std::vector<GeneratorSet> ideal{identity_ideal_set(0)};
    if (is_member(parse_polynomial("y1"), ideal).has_value()) return false;
    return true;
  });

  run(9, "generator cross-check for the central space", [&] {
    std::vector<GeneratorSet> from_b{
        GeneratorSet{{make_central_b(0)}, ClosureMode::StarSpace, "space(b)"},
        identity_ideal_set(0)};
    if (!is_member(make_alt_central_b(0), from_b).has_value()) return false;
    // the converse direction genuinely needs (a): values of (b) depend on
    // the even part of y1's image, those of the alternative generator do not
    std::vector<GeneratorSet> alt_only{
        GeneratorSet{{make_alt_central_b(0)}, ClosureMode::StarSpace,
                     "space(alt)"},
        identity_ideal_set(0)};
    if (is_member(make_central_b(0), alt_only).has_value()) return false;
    std::vector<GeneratorSet> from_a_alt{
        GeneratorSet{{make_central_a(0), make_alt_central_b(0)},
                     ClosureMode::StarSpace, "space(a,alt)"},
        identity_ideal_set(0)};
    return is_member(make_central_b(0), from_a_alt).has_value();
  });

  run(10, "verify-paper --json --seed 7 is byte-identical across runs", [&] {
    SessionConfig cfg;
    cfg.seed = 7;
    std::string first = verify_paper_json(cfg);
    std::string second = verify_paper_json(cfg);
    if (first != second) return false;
    auto pos = first.find("\"failed\": 0");
    return pos != std::string::npos;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: failures present")
            << std::endl;
  return failures;
}
