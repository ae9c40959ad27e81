#include "staralg/check.hpp"

#include <algorithm>

namespace staralg {

void Assignment::validate() const {
  for (auto& [v, x] : images) {
    M11Element s = x.star();
    if (v.kind == VarKind::Y) {
      if (!(s == x))
        throw DomainError(v.to_string() + " must be assigned a symmetric element");
    } else {
      if (!(s == -x))
        throw DomainError(v.to_string() + " must be assigned a skew element");
    }
  }
}

std::uint32_t Assignment::max_symbol() const {
  std::uint32_t m = 0;
  for (auto& [v, x] : images)
    for (const GrassmannElement* g : {&x.a(), &x.b(), &x.c(), &x.d()})
      for (auto& [b, c] : g->terms()) m = std::max(m, c.max_symbol());
  return m;
}

M11Element evaluate(const StarPolynomial& f, const Assignment& a,
                    unsigned truncation, unsigned characteristic) {
  if (f.characteristic() != characteristic)
    throw RingMismatchError("polynomial and assignment rings differ");
  M11Element acc = M11Element::zero(truncation, characteristic);
  // words in canonical order share prefixes; cache prefix products
  std::map<Word, M11Element, WordOrder> cache;
  Word prev;
  for (auto& [w, c] : f.terms()) {
    // longest common prefix with the previous word (all its prefixes are cached)
    std::size_t common = 0;
    while (common < prev.size() && common < w.size() && prev[common] == w[common])
      ++common;
    M11Element prod = M11Element::identity(truncation, characteristic);
    if (common > 0) {
      Word pre(w.begin(), w.begin() + common);
      auto it = cache.find(pre);
      if (it != cache.end())
        prod = it->second;
      else
        common = 0;
    }
    for (std::size_t i = common; i < w.size(); ++i) {
      auto it = a.images.find(w[i]);
      if (it == a.images.end())
        throw DomainError("unassigned variable " + w[i].to_string());
      prod = prod * it->second;
      cache.emplace(Word(w.begin(), w.begin() + i + 1), prod);
    }
    acc += c * prod;
    prev = w;
  }
  return acc;
}

M11Element evaluate(const StarPolynomial& f, const Assignment& a) {
  if (a.images.empty())
    throw DomainError("empty assignment: truncation and ring unknown");
  const M11Element& x = a.images.begin()->second;
  return evaluate(f, a, x.truncation(), x.characteristic());
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "staralg/check-report/v1";
  j["verdict"] = verdict == Verdict::Holds ? "holds" : "fails";
  j["strategy"] = strategy == Strategy::Exhaustive   ? "exhaustive"
                  : strategy == Strategy::Symbolic ? "symbolic"
                                                   : "random";
  j["truncation"] = truncation;
  j["char"] = characteristic;
  j["completeness"] =
      completeness == Completeness::Exact ? "exact" : "heuristic";
  if (witness) {
    nlohmann::json w;
    nlohmann::json imgs;
    for (auto& [v, x] : witness->assignment.images)
      imgs[v.to_string()] = x.to_string();
    w["assignment"] = imgs;
    w["checked"] = witness->checked.to_string();
    w["value"] = witness->value.to_string();
    j["witness"] = w;
  }
  if (identity_itself) j["identity_itself"] = *identity_itself;
  if (failing_bracket) j["failing_bracket"] = *failing_bracket;
  return j;
}

namespace {

struct ComponentResult {
  bool fails = false;
  std::optional<Assignment> assignment;  // witness for the component
  unsigned truncation = 0;
  bool heuristic = false;
  bool used_symbolic = false;
};

void require_truncation(const CheckConfig& cfg, unsigned needed) {
  if (cfg.truncation && *cfg.truncation < needed)
    throw TruncationError("truncation " + std::to_string(*cfg.truncation) +
                          " insufficient: this check needs at least " +
                          std::to_string(needed));
}

ComponentResult exhaustive_check(const StarPolynomial& c, const CheckConfig& cfg) {
  TestFamily fam = make_test_family(c, FamilyStrategy::Spanning);
  require_truncation(cfg, fam.truncation);
  ComponentResult res;
  res.truncation = fam.truncation;
  std::size_t k = fam.slots.size();
  std::vector<std::size_t> choice(k, 0);
  for (;;) {
    Assignment a;
    for (std::size_t i = 0; i < k; ++i)
      a.images.emplace(fam.slots[i].var, fam.slots[i].candidates[choice[i]]);
    M11Element v = evaluate(c, a, fam.truncation, fam.characteristic);
    if (!v.is_zero()) {
      res.fails = true;
      res.assignment = a;
      return res;
    }
    // next grid point; the last slot varies fastest
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++choice[i] < fam.slots[i].candidates.size()) break;
      choice[i] = 0;
      if (i == 0) return res;
    }
    if (k == 0) return res;
  }
}

/// Reduced generic assignment for the symbolic strategy. The even diagonal
/// parts of elements of R^+ / R^- are central, so the value of a
/// multihomogeneous polynomial depends on them only through scalar powers;
/// one symbolic scalar per variable is therefore exhaustive for the even
/// part, and one odd generator covers the off-diagonal part. Truncation is
/// #variables plus the requested spare generators.
Assignment reduced_generic_assignment(const StarPolynomial& c, unsigned spare,
                                      unsigned& truncation_out) {
  std::vector<Indet> vars = c.variables();
  unsigned p = c.characteristic();
  unsigned n = static_cast<unsigned>(vars.size()) + spare;
  truncation_out = n;
  Assignment a;
  std::uint32_t t = 1;
  std::uint32_t block = 1;
  for (auto& v : vars) {
    GrassmannElement zg = GrassmannElement::zero(n, p);
    GrassmannElement even =
        GrassmannElement::term(Scalar::variable(t++, p), 0, n);
    GrassmannElement odd = GrassmannElement::zero(n, p);
    odd.add_term(Blade{1} << (block - 1), Scalar::variable(t++, p));
    (void)zg;
    M11Element x = v.kind == VarKind::Y ? M11Element::symmetric(even, odd)
                                        : M11Element::skew(even, odd);
    a.images.emplace(v, x);
    ++block;
  }
  return a;
}

ComponentResult symbolic_check(const StarPolynomial& c, const CheckConfig& cfg) {
  ComponentResult res;
  res.used_symbolic = true;
  Assignment a = reduced_generic_assignment(c, 0, res.truncation);
  require_truncation(cfg, res.truncation);
  M11Element v = evaluate(c, a, res.truncation, c.characteristic());
  if (!v.is_zero()) {
    res.fails = true;
    res.assignment = a;
  }
  return res;
}

ComponentResult random_check(const StarPolynomial& c, const CheckConfig& cfg) {
  ComponentResult res;
  res.heuristic = true;
  for (unsigned trial = 0; trial < cfg.random_trials; ++trial) {
    TestFamily fam =
        make_test_family(c, FamilyStrategy::Random, cfg.seed + trial);
    require_truncation(cfg, fam.truncation);
    res.truncation = fam.truncation;
    Assignment a;
    for (auto& slot : fam.slots) a.images.emplace(slot.var, slot.candidates[0]);
    M11Element v = evaluate(c, a, fam.truncation, fam.characteristic);
    if (!v.is_zero()) {
      res.fails = true;
      res.heuristic = false;
      res.assignment = a;
      return res;
    }
  }
  return res;
}

/// Polarize, run the exhaustive grid, and map a failing assignment back to
/// the original variables through a symbolic combination of the replicas.
ComponentResult polarized_check(const StarPolynomial& c, const CheckConfig& cfg) {
  Polarization pol = multilinearize(c);
  ComponentResult inner = exhaustive_check(pol.poly, cfg);
  if (!inner.fails) return inner;

  ComponentResult res;
  res.truncation = inner.truncation;
  res.fails = true;
  const Assignment& wa = *inner.assignment;
  unsigned p = c.characteristic();
  std::uint32_t next_t = 1;
  Assignment lifted;
  for (auto& [v, replicas] : pol.frame) {
    auto it = replicas.begin();
    M11Element sum = Scalar::variable(next_t++, p) * wa.images.at(*it);
    for (++it; it != replicas.end(); ++it)
      sum += Scalar::variable(next_t++, p) * wa.images.at(*it);
    lifted.images.emplace(v, sum);
  }
  res.assignment = lifted;
  return res;
}

ComponentResult check_component(const StarPolynomial& c, const CheckConfig& cfg) {
  if (cfg.strategy == Strategy::Random) return random_check(c, cfg);
  if (cfg.strategy == Strategy::Symbolic) return symbolic_check(c, cfg);
  auto md = multidegree(c);
  if (md.degree->is_multilinear()) return exhaustive_check(c, cfg);
  if (c.characteristic() != 0) return symbolic_check(c, cfg);
  return polarized_check(c, cfg);
}

}  // namespace

CheckReport is_identity(const StarPolynomial& f, const CheckConfig& cfg) {
  RingConfig{f.characteristic(), false}.validate();
  CheckReport report;
  report.strategy = cfg.strategy;
  report.characteristic = f.characteristic();
  if (f.is_zero()) {
    if (cfg.truncation) report.truncation = *cfg.truncation;
    return report;
  }

  auto comps = homogeneous_components(f);
  bool any_symbolic = false;
  for (auto& [deg, c] : comps) {
    ComponentResult r = check_component(c, cfg);
    report.truncation = std::max(report.truncation, r.truncation);
    if (r.heuristic) report.completeness = Completeness::Heuristic;
    any_symbolic = any_symbolic || r.used_symbolic;
    if (r.fails) {
      report.verdict = Verdict::Fails;
      report.completeness = Completeness::Exact;
      Assignment final_assignment;
      if (comps.size() == 1) {
        final_assignment = *r.assignment;
      } else {
        // Scale the component witness by fresh symbolic coefficients and
        // send the remaining variables to zero: distinct multidegrees land
        // in distinct t-layers, so f itself evaluates to a nonzero element.
        std::uint32_t next_t = r.assignment->max_symbol() + 1;
        for (auto& v : f.variables()) {
          auto it = r.assignment->images.find(v);
          if (it != r.assignment->images.end())
            final_assignment.images.emplace(
                v, Scalar::variable(next_t++, f.characteristic()) * it->second);
          else
            final_assignment.images.emplace(
                v, M11Element::zero(r.truncation, f.characteristic()));
        }
      }
      M11Element value =
          evaluate(f, final_assignment, r.truncation, f.characteristic());
      report.witness = Witness{final_assignment, f, value};
      if (cfg.strategy != Strategy::Random && any_symbolic)
        report.strategy = Strategy::Symbolic;
      return report;
    }
  }
  if (cfg.strategy != Strategy::Random && any_symbolic)
    report.strategy = Strategy::Symbolic;
  return report;
}

namespace {

/// Centrality of one multihomogeneous component by bracketing with fresh
/// variables and running is_identity on the brackets.
struct BracketRoute {
  CheckReport ry, rz, self;
};

BracketRoute central_by_brackets(const StarPolynomial& c, std::uint32_t fresh,
                                 const CheckConfig& cfg) {
  unsigned p = c.characteristic();
  StarPolynomial ybr =
      commutator({c, StarPolynomial::variable(Indet::y(fresh), p)});
  StarPolynomial zbr =
      commutator({c, StarPolynomial::variable(Indet::z(fresh), p)});
  BracketRoute r;
  r.ry = is_identity(ybr, cfg);
  r.rz = r.ry.holds() ? is_identity(zbr, cfg) : CheckReport{};
  r.self = is_identity(c, cfg);
  return r;
}

}  // namespace

CheckReport is_central(const StarPolynomial& f, const CheckConfig& cfg) {
  RingConfig{f.characteristic(), false}.validate();
  unsigned p = f.characteristic();
  std::uint32_t fresh =
      std::max(f.max_index(VarKind::Y), f.max_index(VarKind::Z)) + 1;

  CheckReport report;
  report.strategy = cfg.strategy;
  report.characteristic = p;
  report.identity_itself = true;
  if (f.is_zero()) return report;

  auto comps = homogeneous_components(f);
  bool any_symbolic = false;
  bool identity_all = true;
  for (auto& [deg, c] : comps) {
    bool symbolic_route =
        cfg.strategy == Strategy::Symbolic ||
        (cfg.strategy == Strategy::Exhaustive && !deg.is_multilinear() && p != 0);
    if (!symbolic_route) {
      BracketRoute r = central_by_brackets(c, fresh, cfg);
      report.truncation = std::max({report.truncation, r.ry.truncation,
                                    r.rz.truncation, r.self.truncation});
      if (r.ry.completeness == Completeness::Heuristic ||
          r.rz.completeness == Completeness::Heuristic)
        report.completeness = Completeness::Heuristic;
      identity_all = identity_all && r.self.holds();
      if (!r.ry.holds() || !r.rz.holds()) {
        bool yfail = !r.ry.holds();
        report.verdict = Verdict::Fails;
        report.completeness = Completeness::Exact;
        report.failing_bracket = yfail ? "y" : "z";
        report.witness = yfail ? r.ry.witness : r.rz.witness;
        report.identity_itself = r.self.holds();
        return report;
      }
      continue;
    }

    // Symbolic route: a single generic evaluation. The component is central
    // iff the generic value has the shape a*I with a even: bracketing the
    // value against a fresh generic skew/symmetric element vanishes exactly
    // when b = c = 0 and a = d (the spare generator rules out truncation
    // artifacts in a - d).
    any_symbolic = true;
    unsigned trunc = 0;
    Assignment generic = reduced_generic_assignment(c, 1, trunc);
    require_truncation(cfg, trunc);
    report.truncation = std::max(report.truncation, trunc);
    M11Element v = evaluate(c, generic, trunc, p);
    identity_all = identity_all && v.is_zero();
    bool central = v.b().is_zero() && v.c().is_zero() && v.a() == v.d();
    if (!central) {
      report.verdict = Verdict::Fails;
      report.completeness = Completeness::Exact;
      report.failing_bracket = "z";
      // concrete probe: diag(1,-1) catches b or c, a skew e21 generator on
      // the spare index catches a != d
      GrassmannElement zg = GrassmannElement::zero(trunc, p);
      GrassmannElement ug = GrassmannElement::unit(trunc, p);
      M11Element probe = M11Element::skew(ug, zg);
      if (v.b().is_zero() && v.c().is_zero())
        probe = M11Element::skew(zg,
                                 GrassmannElement::generator(trunc, trunc, p));
      Assignment wa = generic;
      wa.images.emplace(Indet::z(fresh), probe);
      StarPolynomial zbr =
          commutator({c, StarPolynomial::variable(Indet::z(fresh), p)});
      M11Element value = evaluate(zbr, wa, trunc, p);
      report.witness = Witness{wa, zbr, value};
      report.identity_itself = v.is_zero();
      return report;
    }
  }
  report.identity_itself = identity_all;
  if (cfg.strategy != Strategy::Random && any_symbolic)
    report.strategy = Strategy::Symbolic;
  return report;
}

bool check_sym_skew_theorem(const StarPolynomial& f, const CheckConfig& cfg) {
  if (!is_central(f, cfg).holds())
    throw DomainError("check_sym_skew_theorem requires a central polynomial");
  auto [fs, fk] = sym_skew_split(f);
  return is_central(fs, cfg).holds() && is_identity(fk, cfg).holds();
}

}  // namespace staralg
