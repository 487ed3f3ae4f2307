#include "minors/recollement.hpp"

#include <random>
#include <sstream>

#include "homalg/resolution.hpp"

namespace ncm::minors {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skipped:
      return "SKIPPED";
  }
  return "?";
}

bool RecollementReport::all_pass() const {
  for (const Check& c : checks)
    if (!c.informational && c.verdict == Verdict::Fail) return false;
  return true;
}

namespace {

alg::BasicPtr try_basic(const AlgebraPtr& a) {
  try {
    return alg::make_basic(a);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonBasicTop) return nullptr;
    throw;
  }
}

bool invertible(const Mat& m) { return m.rows() == m.cols() && la::rank(m) == m.rows(); }

Vec flat(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

size_t rank_of_maps(const std::vector<Mat>& maps) {
  if (maps.empty()) return 0;
  std::vector<Vec> v;
  for (const Mat& m : maps) v.push_back(flat(m));
  return la::rank(Mat::from_columns(v, v[0].size()));
}

Check make_check(std::string name, bool ok, const std::string& pass_witness, const std::string& fail_witness) {
  return {std::move(name), ok ? Verdict::Pass : Verdict::Fail, ok ? pass_witness : fail_witness, false};
}

}  // namespace

TestModules default_test_modules(const MinorData& md) {
  TestModules tm;
  const alg::BasicPtr bb = try_basic(md.b);
  const alg::BasicPtr ab = try_basic(md.a);
  if (bb)
    for (size_t i = 0; i < bb->vertex_count(); ++i) {
      tm.b_names.push_back("S(" + bb->idempotents.labels[i] + ")");
      tm.b_modules.push_back(bb->simples[i]);
    }
  tm.b_names.push_back("B");
  tm.b_modules.push_back(alg::regular_module(md.b));
  if (bb)
    for (size_t i = 0; i < bb->vertex_count(); ++i) {
      tm.b_names.push_back("P(" + bb->idempotents.labels[i] + ")");
      tm.b_modules.push_back(bb->projectives[i]);
    }
  if (ab)
    for (size_t i = 0; i < ab->vertex_count(); ++i) {
      tm.a_names.push_back("S(" + ab->idempotents.labels[i] + ")");
      tm.a_modules.push_back(ab->simples[i]);
    }
  tm.a_names.push_back("A");
  tm.a_modules.push_back(alg::regular_module(md.a));
  if (ab)
    for (size_t i = 0; i < ab->vertex_count(); ++i) {
      tm.a_names.push_back("P(" + ab->idempotents.labels[i] + ")");
      tm.a_modules.push_back(ab->projectives[i]);
    }
  tm.a_pair_count = tm.a_modules.size();
  tm.b_pair_count = tm.b_modules.size();

  for (size_t i = 0; i < tm.a_pair_count; ++i) {
    tm.b_names.push_back("F" + tm.a_names[i]);
    tm.b_modules.push_back(functor_F(md, tm.a_modules[i]).module);
    tm.b_names.push_back("H" + tm.a_names[i]);
    tm.b_modules.push_back(functor_H(md, tm.a_modules[i]).module);
  }
  for (size_t i = 0; i < tm.b_pair_count; ++i) {
    tm.a_names.push_back("G" + tm.b_names[i]);
    tm.a_modules.push_back(functor_G(md, tm.b_modules[i]).module);
  }
  return tm;
}

std::optional<bool> trace_ideal_right_projective(const MinorData& md, const Mat& ideal) {
  if (ideal.cols() == md.b->dim()) return true;  // I_P = B is free
  if (ideal.cols() == 0) return true;
  const AlgebraPtr op = alg::opposite(md.b);
  const alg::BasicPtr ob = try_basic(op);
  if (!ob) return std::nullopt;
  const Representation m = right_module_as_left(md.b, ideal, op, Mat::identity(md.b->dim()));
  return homalg::is_projective(ob, m);
}

Check semi_orthogonality(const MinorData& md, const Mat& ideal, size_t cap) {
  Check c{"semi_orthogonality", Verdict::Pass, "", false};
  if (ideal.cols() == md.b->dim()) {
    c.witness = "B/I_P = 0";
    return c;
  }
  const alg::BasicPtr bb = try_basic(md.b);
  const alg::QuotientAlgebra q = quotient_algebra(md.b, ideal);
  const alg::BasicPtr qb = try_basic(q.algebra);
  const alg::BasicPtr ab = try_basic(md.a);
  if (!bb || !qb) {
    c.verdict = Verdict::Skipped;
    c.witness = "B has no split basic top";
    return c;
  }
  std::vector<Representation> ps;
  if (ab)
    ps = ab->projectives;
  else
    ps.push_back(alg::regular_module(md.a));
  std::string fail;
  size_t tested = 0;
  for (size_t i = 0; i < ps.size() && fail.empty(); ++i) {
    const Representation fp = functor_F(md, ps[i]).module;
    const homalg::ProjectiveResolution res = homalg::projective_resolution(bb, fp, cap + 1);
    for (size_t s = 0; s < qb->vertex_count() && fail.empty(); ++s) {
      const Representation sb = alg::inflate(qb->simples[s], md.b, q.map.projection);
      const std::vector<size_t> e = homalg::ext_dims(bb, res, sb, cap);
      ++tested;
      for (size_t k = 0; k <= cap; ++k)
        if (e[k] != 0) {
          fail = "Ext^" + std::to_string(k) + "(F P(" + (ab ? ab->idempotents.labels[i] : "A") + "), S(" +
                 qb->idempotents.labels[s] + ")) has dim " + std::to_string(e[k]);
          break;
        }
    }
  }
  c.verdict = fail.empty() ? Verdict::Pass : Verdict::Fail;
  c.witness = fail.empty() ? std::to_string(tested) + " pairs, degrees 0.." + std::to_string(cap) : fail;
  return c;
}

RecollementReport recollement_report(const MinorData& md, size_t cap) {
  return recollement_report(md, default_test_modules(md), cap);
}

RecollementReport recollement_report(const MinorData& md, const TestModules& tm, size_t cap) {
  RecollementReport rep;
  const Mat ideal = trace_ideal(md);
  rep.trace_ideal_dim = ideal.cols();
  rep.quotient_dim = md.b->dim() - ideal.cols();

  // (i) G on short exact sequences 0 -> ker f -> M -> im f -> 0.
  {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coef(-3, 3);
    size_t tested = 0;
    std::string fail;
    for (size_t i = 0; i < tm.b_pair_count && fail.empty(); ++i)
      for (size_t j = 0; j < tm.b_pair_count && fail.empty(); ++j) {
        const std::vector<Mat> hom = alg::hom_space(tm.b_modules[i], tm.b_modules[j]);
        if (hom.empty()) continue;
        Mat f(tm.b_modules[j].dim, tm.b_modules[i].dim);
        for (const Mat& h : hom) f = f + h.scaled(coef(rng));
        const Mat kb = la::kernel_basis(f);
        const Mat ib = la::column_space_basis(f);
        const Representation ker = alg::submodule(tm.b_modules[i], kb);
        const Representation im = alg::submodule(tm.b_modules[j], ib);
        const GImage gm = functor_G(md, tm.b_modules[i]);
        const size_t gk = functor_G(md, ker).module.dim;
        const size_t gi = functor_G(md, im).module.dim;
        // G(f) restricted to eM must have kernel G(ker f) and image G(im f).
        const size_t rank_gf = gm.basis.cols() == 0 ? 0 : la::rank(f * gm.basis);
        ++tested;
        if (gk + gi != gm.module.dim || rank_gf != gi)
          fail = "sequence from random map " + tm.b_names[i] + " -> " + tm.b_names[j] + ": dim G = " +
                 std::to_string(gk) + " + " + std::to_string(gi) + " vs " + std::to_string(gm.module.dim);
      }
    rep.checks.push_back(make_check("g_exact", fail.empty(), std::to_string(tested) + " short exact sequences", fail));
  }

  // (ii) unit and (iii) counit.
  {
    std::string fail_u, fail_c;
    for (size_t i = 0; i < tm.a_modules.size(); ++i) {
      const Representation& n = tm.a_modules[i];
      if (fail_u.empty()) {
        const FImage f = functor_F(md, n);
        const GImage gf = functor_G(md, f.module);
        const Mat u = unit_map(md, f, gf);
        if (!invertible(u) || !alg::is_homomorphism(n, gf.module, u))
          fail_u = "N -> GF(N) not an isomorphism for " + tm.a_names[i];
      }
      if (fail_c.empty()) {
        const HImage h = functor_H(md, n);
        const GImage gh = functor_G(md, h.module);
        const Mat c = counit_map(md, h, gh);
        if (!invertible(c) || (n.dim > 0 && !alg::is_homomorphism(gh.module, n, c)))
          fail_c = "GH(N) -> N not an isomorphism for " + tm.a_names[i];
      }
    }
    const std::string ok = std::to_string(tm.a_modules.size()) + " A-modules, invertible intertwiners";
    rep.checks.push_back(make_check("unit_iso", fail_u.empty(), ok, fail_u));
    rep.checks.push_back(make_check("counit_iso", fail_c.empty(), ok, fail_c));
  }

  // (iv) F and H on Hom spaces.
  {
    std::vector<FImage> fs;
    std::vector<HImage> hs;
    for (size_t i = 0; i < tm.a_pair_count; ++i) {
      fs.push_back(functor_F(md, tm.a_modules[i]));
      hs.push_back(functor_H(md, tm.a_modules[i]));
    }
    std::string fail_f, fail_h;
    size_t pairs = 0;
    for (size_t i = 0; i < tm.a_pair_count; ++i)
      for (size_t j = 0; j < tm.a_pair_count; ++j) {
        ++pairs;
        const std::vector<Mat> hom = alg::hom_space(tm.a_modules[i], tm.a_modules[j]);
        const std::string tag = tm.a_names[i] + " -> " + tm.a_names[j];
        if (fail_f.empty()) {
          std::vector<Mat> imgs;
          for (const Mat& g : hom) imgs.push_back(functor_F_map(md, fs[i], fs[j], g));
          const size_t target = alg::hom_space(fs[i].module, fs[j].module).size();
          if (rank_of_maps(imgs) != hom.size() || target != hom.size())
            fail_f = tag + ": dim Hom_A = " + std::to_string(hom.size()) + ", dim Hom_B(F,F) = " +
                     std::to_string(target);
        }
        if (fail_h.empty()) {
          std::vector<Mat> imgs;
          for (const Mat& g : hom) imgs.push_back(functor_H_map(md, hs[i], hs[j], g));
          const size_t target = alg::hom_space(hs[i].module, hs[j].module).size();
          if (rank_of_maps(imgs) != hom.size() || target != hom.size())
            fail_h = tag + ": dim Hom_A = " + std::to_string(hom.size()) + ", dim Hom_B(H,H) = " +
                     std::to_string(target);
        }
      }
    const std::string ok = std::to_string(pairs) + " pairs, injective with equal dimensions";
    rep.checks.push_back(make_check("f_fully_faithful", fail_f.empty(), ok, fail_f));
    rep.checks.push_back(make_check("h_fully_faithful", fail_h.empty(), ok, fail_h));
  }

  // (v) G(M) = 0 iff I_P M = 0.
  {
    std::string fail;
    for (size_t i = 0; i < tm.b_modules.size() && fail.empty(); ++i) {
      const bool g_zero = la::rank(tm.b_modules[i].act(md.e)) == 0;
      if (g_zero != alg::annihilated_by(tm.b_modules[i], ideal))
        fail = tm.b_names[i] + ": G(M) " + (g_zero ? "= 0" : "!= 0") + " but I_P M " + (g_zero ? "!= 0" : "= 0");
    }
    rep.checks.push_back(make_check("kernel_matches_trace_ideal", fail.empty(),
                                    std::to_string(tm.b_modules.size()) + " B-modules", fail));
  }
  if (const alg::BasicPtr bb = try_basic(md.b))
    for (size_t i = 0; i < bb->vertex_count(); ++i)
      if (la::rank(bb->simples[i].act(md.e)) == 0) rep.kernel_simples.push_back(bb->idempotents.labels[i]);

  // (vi) Ext^k_B(F P_i, S) = 0 for simples S of B/I_P.
  rep.checks.push_back(semi_orthogonality(md, ideal, cap));

  // (vii) hypothesis: I_P projective as a right B-module.
  {
    Check c{"qmod_hypothesis", Verdict::Pass, "", true};
    const std::optional<bool> rp = trace_ideal_right_projective(md, ideal);
    if (!rp) {
      c.verdict = Verdict::Skipped;
      c.witness = "B has no split basic top";
    } else {
      c.verdict = *rp ? Verdict::Pass : Verdict::Fail;
      c.witness = *rp ? "I_P is a projective right B-module" : "I_P is not projective as a right B-module";
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace ncm::minors
