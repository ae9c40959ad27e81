#include "staralg/membership.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "staralg/catalog.hpp"

namespace staralg {

namespace {

StarPolynomial multilinearized(const StarPolynomial& g) {
  auto md = multidegree(g);
  if (!md.homogeneous())
    throw DomainError("generators must be multihomogeneous");
  if (md.degree->is_multilinear()) return g;
  return multilinearize(g).poly;
}

StarPolynomial sym_part_of_word(const Word& w, unsigned p) {
  StarPolynomial m = StarPolynomial::word(w, p);
  return Scalar::inverse_of_two(p) * (m + star(m));
}

StarPolynomial skew_part_of_word(const Word& w, unsigned p) {
  StarPolynomial m = StarPolynomial::word(w, p);
  return Scalar::inverse_of_two(p) * (m - star(m));
}

/// Distinct permutations of a letter multiset in lexicographic order.
std::vector<Word> words_of(const MultiDegree& d) {
  Word base;
  for (auto& [v, k] : d.entries())
    for (unsigned i = 0; i < k; ++i) base.push_back(v);
  std::vector<Word> out;
  std::sort(base.begin(), base.end());
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

struct RowMeta {
  std::size_t set_index;
  std::size_t generator_index;
  std::map<Indet, StarPolynomial> substitution;
  Word left_frame, right_frame;
};

/// Enumerates nonzero consequence instances of the sets at multidegree D in
/// a canonical order, deduplicated; stops early when the callback returns
/// false.
void enumerate_instances(
    const std::vector<GeneratorSet>& sets, const MultiDegree& D,
    unsigned degree_cap,
    const std::function<bool(const RowMeta&, const StarPolynomial&)>& emit) {
  if (D.total() > degree_cap)
    throw DegreeCapError("target multidegree total " +
                         std::to_string(D.total()) + " exceeds the cap " +
                         std::to_string(degree_cap));
  unsigned p = 0;
  for (auto& s : sets)
    for (auto& g : s.generators) {
      p = g.characteristic();
      if (p != 0)
        throw DomainError("membership enumeration is characteristic-0 only");
    }

  std::vector<std::pair<Indet, unsigned>> letters(D.entries().begin(),
                                                  D.entries().end());
  std::set<std::string> seen;

  for (std::size_t si = 0; si < sets.size(); ++si) {
    const GeneratorSet& S = sets[si];
    for (std::size_t gi = 0; gi < S.generators.size(); ++gi) {
      StarPolynomial gml = multilinearized(S.generators[gi]);
      std::vector<Indet> vars = gml.variables();
      bool ideal = S.mode == ClosureMode::StarIdeal;
      std::size_t nslots = vars.size() + (ideal ? 2 : 0);

      // split D across slots: slot degrees, letter by letter
      std::vector<MultiDegree> slot_deg(nslots);
      bool stop = false;

      std::function<void(std::size_t)> assign = [&](std::size_t li) {
        if (stop) return;
        if (li == letters.size()) {
          // z-variable slots with empty degree give zero instances
          for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i].kind == VarKind::Z && slot_deg[i].total() == 0) return;
          // enumerate words per slot
          std::vector<std::vector<Word>> choices(nslots);
          for (std::size_t i = 0; i < nslots; ++i) choices[i] = words_of(slot_deg[i]);
          std::vector<std::size_t> pick(nslots, 0);
          for (;;) {
            std::map<Indet, StarPolynomial> sub;
            bool zero_image = false;
            for (std::size_t i = 0; i < vars.size() && !zero_image; ++i) {
              StarPolynomial img =
                  vars[i].kind == VarKind::Y
                      ? sym_part_of_word(choices[i][pick[i]], p)
                      : skew_part_of_word(choices[i][pick[i]], p);
              if (img.is_zero()) zero_image = true;
              sub.emplace(vars[i], std::move(img));
            }
            if (!zero_image) {
              StarPolynomial inst = substitute(gml, sub);
              if (ideal) {
                const Word& lw = choices[vars.size()][pick[vars.size()]];
                const Word& rw = choices[vars.size() + 1][pick[vars.size() + 1]];
                inst = StarPolynomial::word(lw, p) * inst *
                       StarPolynomial::word(rw, p);
              }
              if (!inst.is_zero()) {
                std::string key = inst.to_string();
                if (seen.insert(key).second) {
                  RowMeta meta;
                  meta.set_index = si;
                  meta.generator_index = gi;
                  meta.substitution = sub;
                  if (ideal) {
                    meta.left_frame = choices[vars.size()][pick[vars.size()]];
                    meta.right_frame =
                        choices[vars.size() + 1][pick[vars.size() + 1]];
                  }
                  if (!emit(meta, inst)) {
                    stop = true;
                    return;
                  }
                }
              }
            }
            // advance
            std::size_t i = nslots;
            bool done = true;
            while (i > 0) {
              --i;
              if (++pick[i] < choices[i].size()) {
                done = false;
                break;
              }
              pick[i] = 0;
            }
            if (done || nslots == 0) break;
          }
          return;
        }
        auto [letter, count] = letters[li];
        // distribute `count` copies of `letter` over the slots
        std::vector<unsigned> alloc(nslots, 0);
        std::function<void(std::size_t, unsigned)> distribute =
            [&](std::size_t slot, unsigned left) {
              if (stop) return;
              if (slot + 1 == nslots) {
                alloc[slot] = left;
                for (std::size_t i = 0; i < nslots; ++i)
                  slot_deg[i].set(letter, alloc[i]);
                assign(li + 1);
                for (std::size_t i = 0; i < nslots; ++i)
                  slot_deg[i].set(letter, 0);
                return;
              }
              for (unsigned give = 0; give <= left; ++give) {
                alloc[slot] = give;
                distribute(slot + 1, left - give);
                if (stop) return;
              }
            };
        if (nslots == 0) return;
        distribute(0, count);
      };
      assign(0);
      if (stop) return;
    }
  }
}

using SparseVec = std::map<Word, Scalar, WordOrder>;

SparseVec to_vec(const StarPolynomial& f) {
  SparseVec v;
  for (auto& [w, c] : f.terms()) v.emplace(w, c);
  return v;
}

void axpy(SparseVec& v, const Scalar& k, const SparseVec& b) {
  for (auto& [w, c] : b) {
    auto [it, inserted] = v.try_emplace(w, Scalar::zero(k.characteristic()));
    it->second -= k * c;
    if (it->second.is_zero()) v.erase(it);
  }
}

}  // namespace

StarPolynomial CertificateRow::instance(const std::vector<GeneratorSet>& sets) const {
  const StarPolynomial& g =
      sets.at(set_index).generators.at(generator_index);
  StarPolynomial gml = multilinearized(g);
  unsigned p = g.characteristic();
  StarPolynomial inst = substitute(gml, substitution);
  if (sets.at(set_index).mode == ClosureMode::StarIdeal)
    inst = StarPolynomial::word(left_frame, p) * inst *
           StarPolynomial::word(right_frame, p);
  return StarPolynomial::constant(coeff) * inst;
}

StarPolynomial MembershipCertificate::recombine(
    const std::vector<GeneratorSet>& sets) const {
  StarPolynomial acc = StarPolynomial::zero(target.characteristic());
  for (auto& row : rows) acc += row.instance(sets);
  return acc;
}

nlohmann::json MembershipCertificate::to_json(
    const std::vector<GeneratorSet>& sets) const {
  nlohmann::json j;
  j["schema"] = "staralg/membership-certificate/v1";
  j["target"] = target.to_string();
  j["target_degree"] = target_degree.to_string();
  nlohmann::json rows_json = nlohmann::json::array();
  for (auto& row : rows) {
    nlohmann::json r;
    r["coeff"] = row.coeff.to_string();
    r["set"] = sets.at(row.set_index).label;
    r["generator"] =
        sets.at(row.set_index).generators.at(row.generator_index).to_string();
    nlohmann::json sub;
    for (auto& [v, img] : row.substitution) sub[v.to_string()] = img.to_string();
    r["substitution"] = sub;
    if (sets.at(row.set_index).mode == ClosureMode::StarIdeal) {
      r["left_frame"] = StarPolynomial::word(row.left_frame, 0).to_string();
      r["right_frame"] = StarPolynomial::word(row.right_frame, 0).to_string();
    }
    rows_json.push_back(r);
  }
  j["rows"] = rows_json;
  return j;
}

std::vector<StarPolynomial> consequences(const GeneratorSet& S,
                                         const MultiDegree& D,
                                         unsigned degree_cap) {
  std::vector<StarPolynomial> out;
  enumerate_instances({S}, D, degree_cap,
                      [&](const RowMeta&, const StarPolynomial& inst) {
                        out.push_back(inst);
                        return true;
                      });
  return out;
}

std::optional<MembershipCertificate> is_member(
    const StarPolynomial& f, const std::vector<GeneratorSet>& sets,
    unsigned degree_cap) {
  if (f.is_zero()) {
    MembershipCertificate cert;
    cert.target = f;
    return cert;
  }
  auto md = multidegree(f);
  if (!md.homogeneous())
    throw DomainError("membership targets must be multihomogeneous");
  if (f.characteristic() != 0)
    throw DomainError("membership testing is characteristic-0 only");
  const MultiDegree& D = *md.degree;

  struct BasisRow {
    SparseVec vec;
    Word pivot;
    std::map<std::size_t, Scalar> expr;  // in terms of original column ids
  };
  std::vector<BasisRow> basis;
  std::vector<RowMeta> metas;

  SparseVec fres = to_vec(f);
  std::map<std::size_t, Scalar> fexpr;
  bool found = false;

  enumerate_instances(
      sets, D, degree_cap,
      [&](const RowMeta& meta, const StarPolynomial& inst) {
        std::size_t col_id = metas.size();
        metas.push_back(meta);
        SparseVec vec = to_vec(inst);
        std::map<std::size_t, Scalar> expr{{col_id, Scalar::one(0)}};
        for (auto& b : basis) {
          auto it = vec.find(b.pivot);
          if (it == vec.end()) continue;
          Scalar k = it->second * b.vec.at(b.pivot).inverse();
          axpy(vec, k, b.vec);
          for (auto& [id, c] : b.expr) {
            auto [eit, ins] = expr.try_emplace(id, Scalar::zero(0));
            eit->second -= k * c;
            if (eit->second.is_zero()) expr.erase(eit);
          }
        }
        if (vec.empty()) return true;  // dependent column
        BasisRow row{std::move(vec), {}, std::move(expr)};
        row.pivot = row.vec.begin()->first;
        // reduce the target residual by the new basis vector
        auto it = fres.find(row.pivot);
        if (it != fres.end()) {
          Scalar k = it->second * row.vec.at(row.pivot).inverse();
          axpy(fres, k, row.vec);
          for (auto& [id, c] : row.expr) {
            auto [eit, ins] = fexpr.try_emplace(id, Scalar::zero(0));
            eit->second += k * c;
            if (eit->second.is_zero()) fexpr.erase(eit);
          }
        }
        basis.push_back(std::move(row));
        if (fres.empty()) {
          found = true;
          return false;
        }
        return true;
      });

  if (!found && !fres.empty()) return std::nullopt;

  MembershipCertificate cert;
  cert.target = f;
  cert.target_degree = D;
  for (auto& [id, c] : fexpr) {
    CertificateRow row;
    row.coeff = c;
    row.set_index = metas[id].set_index;
    row.generator_index = metas[id].generator_index;
    row.substitution = metas[id].substitution;
    row.left_frame = metas[id].left_frame;
    row.right_frame = metas[id].right_frame;
    cert.rows.push_back(std::move(row));
  }
  if (!(cert.recombine(sets) == f))
    throw Error("internal: membership certificate failed re-verification");
  return cert;
}

MembershipCertificate substitute_certificate(
    const MembershipCertificate& cert, const std::vector<GeneratorSet>& sets,
    const std::map<Indet, StarPolynomial>& images) {
  MembershipCertificate out;
  out.target = substitute(cert.target, images);
  if (!out.target.is_zero()) {
    auto md = multidegree(out.target);
    if (md.homogeneous()) out.target_degree = *md.degree;
  }
  for (auto& row : cert.rows) {
    // composed substitution for the generator's variables
    std::map<Indet, StarPolynomial> comp;
    for (auto& [v, img] : row.substitution)
      comp.emplace(v, substitute(img, images));
    // frames map to polynomials; expand them into monomial frames
    StarPolynomial lp = substitute(StarPolynomial::word(row.left_frame, 0), images);
    StarPolynomial rp = substitute(StarPolynomial::word(row.right_frame, 0), images);
    for (auto& [lw, lc] : lp.terms())
      for (auto& [rw, rc] : rp.terms()) {
        CertificateRow nr;
        nr.coeff = row.coeff * lc * rc;
        nr.set_index = row.set_index;
        nr.generator_index = row.generator_index;
        nr.substitution = comp;
        nr.left_frame = lw;
        nr.right_frame = rw;
        out.rows.push_back(std::move(nr));
      }
  }
  if (!(out.recombine(sets) == out.target))
    throw Error("internal: substituted certificate failed re-verification");
  return out;
}

GeneratorSet identity_ideal_set(unsigned characteristic) {
  GeneratorSet s;
  s.mode = ClosureMode::StarIdeal;
  s.label = "identity-ideal(H1..H10)";
  for (unsigned k = 1; k <= 10; ++k)
    s.generators.push_back(make_H(k, characteristic));
  return s;
}

GeneratorSet central_space_set(unsigned characteristic) {
  GeneratorSet s;
  s.mode = ClosureMode::StarSpace;
  s.label = "central-space(a,b)";
  s.generators.push_back(make_central_a(characteristic));
  s.generators.push_back(make_central_b(characteristic));
  return s;
}

VLemmaReport verify_V_lemma(unsigned L, unsigned N, unsigned degree_cap) {
  VLemmaReport report;
  std::vector<GeneratorSet> base{central_space_set(0), identity_ideal_set(0)};
  std::vector<GeneratorSet> b_only{
      GeneratorSet{{make_central_b(0)}, ClosureMode::StarSpace, "space(b)"}};
  std::vector<GeneratorSet> ideal_only{identity_ideal_set(0)};

  auto push = [&](const std::string& name, std::optional<MembershipCertificate> c) {
    bool ok = c.has_value();
    report.steps.push_back({name, ok, std::move(c)});
    report.all_ok = report.all_ok && ok;
    return ok;
  };

  // G_n by direct solve (degree 2n, z-letters only)
  for (unsigned n = 1; n <= N; ++n)
    push("G" + std::to_string(n), is_member(make_G(n, 0), base, degree_cap));

  // C1 as a consequence of (b) alone
  std::optional<MembershipCertificate> c1 =
      is_member(make_C(1, 0), b_only, degree_cap);
  push("C1", c1);

  // D1 against the full base family
  std::optional<MembershipCertificate> d1 =
      is_member(make_D(1, 0), base, degree_cap);
  push("D1", d1);

  // rebase the D1 certificate onto the base sets (space(b) is generator 1
  // of central_space_set)
  std::optional<MembershipCertificate> prev_c;  // C_l certificate against base
  if (c1) {
    prev_c = *c1;
    for (auto& row : prev_c->rows) {
      row.set_index = 0;
      row.generator_index = 1;
    }
    if (!(prev_c->recombine(base) == prev_c->target))
      throw Error("internal: rebased C1 certificate failed re-verification");
  }

  for (unsigned l = 2; l <= L && report.all_ok && d1; ++l) {
    // C_l: substitute y1 -> [y3,z3]...[y_{l+1},z_{l+1}] in the D1 relation
    StarPolynomial Y = commutator({StarPolynomial::variable(Indet::y(3), 0),
                                   StarPolynomial::variable(Indet::z(3), 0)});
    for (unsigned j = 4; j <= l + 1; ++j)
      Y = Y * commutator({StarPolynomial::variable(Indet::y(j), 0),
                          StarPolynomial::variable(Indet::z(j), 0)});
    MembershipCertificate e_cert =
        substitute_certificate(*d1, base, {{Indet::y(1), Y}});
    StarPolynomial residual = make_C(l, 0) - e_cert.target;
    std::optional<MembershipCertificate> rcert =
        is_member(residual, ideal_only, degree_cap);
    if (!rcert) {
      push("C" + std::to_string(l), std::nullopt);
      break;
    }
    MembershipCertificate cl;
    cl.target = make_C(l, 0);
    cl.target_degree = *multidegree(cl.target).degree;
    cl.rows = e_cert.rows;
    for (auto row : rcert->rows) {
      row.set_index = 1;  // ideal set position within `base`
      cl.rows.push_back(std::move(row));
    }
    if (!(cl.recombine(base) == cl.target))
      throw Error("internal: chained C_l certificate failed re-verification");
    push("C" + std::to_string(l), cl);
    prev_c = cl;

    // D_l: substitute z1 -> jord(y1, z1) in C_l
    StarPolynomial yz = jordan(StarPolynomial::variable(Indet::y(1), 0),
                               StarPolynomial::variable(Indet::z(1), 0));
    MembershipCertificate e2 =
        substitute_certificate(*prev_c, base, {{Indet::z(1), yz}});
    StarPolynomial residual2 = make_D(l, 0) - e2.target;
    std::optional<MembershipCertificate> r2 =
        is_member(residual2, ideal_only, degree_cap);
    if (!r2) {
      push("D" + std::to_string(l), std::nullopt);
      break;
    }
    MembershipCertificate dl;
    dl.target = make_D(l, 0);
    dl.target_degree = *multidegree(dl.target).degree;
    dl.rows = e2.rows;
    for (auto row : r2->rows) {
      row.set_index = 1;
      dl.rows.push_back(std::move(row));
    }
    if (!(dl.recombine(base) == dl.target))
      throw Error("internal: chained D_l certificate failed re-verification");
    push("D" + std::to_string(l), dl);
  }
  return report;
}

}  // namespace staralg
