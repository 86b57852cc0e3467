#include "baileykit/corpus.hpp"

#include <chrono>
#include <cstdlib>
#include <set>

#include "baileykit/instance.hpp"
#include "corpus_support.hpp"

namespace baileykit {

std::string kind_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Series: return "series-equality";
    case IdentityKind::Polynomial: return "polynomial-equality";
    case IdentityKind::Bivariate: return "bivariate-equality";
  }
  return "?";
}

std::string kind_name(ParamKind kind) {
  switch (kind) {
    case ParamKind::NonnegInt: return "nonneg-int";
    case ParamKind::PosInt: return "pos-int";
    case ParamKind::Monomial: return "monomial";
  }
  return "?";
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

const Monomial& Params::mono(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw UnknownParameter("no parameter named " + name);
  return it->second;
}

long Params::integer(const std::string& name) const {
  const Monomial& v = mono(name);
  if (v.is_infinite() || v.texp() != 0 || v.coeff().get_den() != 1 || !v.coeff().get_num().fits_slong_p()) {
    throw ConstraintViolation(name + " must be an integer");
  }
  return v.coeff().get_num().get_si();
}

namespace {

using namespace rows;

ParamSpec nonneg(const std::string& name, const std::string& dflt) {
  return {name, ParamKind::NonnegInt, dflt};
}
ParamSpec posint(const std::string& name, const std::string& dflt) {
  return {name, ParamKind::PosInt, dflt};
}
ParamSpec mono(const std::string& name, const std::string& dflt) {
  return {name, ParamKind::Monomial, dflt};
}

void no_check(const Params&) {}

void check_range(const Params& p, const std::string& name, long lo, long hi) {
  const long v = p.integer(name);
  require(v >= lo && v <= hi,
          name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void check_qps(const Params& p) {
  check_range(p, "n", 0, 8);
  for (const char* n : {"a", "b", "c"}) require_finite_nonzero(p, n);
  const long n = p.integer("n");
  const Monomial a = p.mono("a"), b = p.mono("b"), c = p.mono("c");
  for (const Monomial& x : {c, a * b * qm(1 - n) / c, c / (a * b)}) {
    for (long j = 0; j < n; ++j) {
      require(!(x * qm(j) == Monomial::constant(1)),
              "denominator parameter " + x.to_string() + " makes a factor vanish");
    }
  }
}

std::vector<IdentityDef> make_corpus() {
  std::vector<IdentityDef> rows;
  auto add = [&](IdentityDef d) { rows.push_back(std::move(d)); };

  add({"RR1", "first Rogers-Ramanujan identity", "Rogers-Ramanujan, parts = +-1 mod 5",
       IdentityKind::Series, {}, "none", no_check,
       [](const Params& p, long o, const BuildOptions& b) { return build_rr(p, o, b, 1); }});
  add({"RR2", "second Rogers-Ramanujan identity", "Rogers-Ramanujan, parts = +-2 mod 5",
       IdentityKind::Series, {}, "none", no_check,
       [](const Params& p, long o, const BuildOptions& b) { return build_rr(p, o, b, 2); }});
  add({"QBI", "finite q-binomial theorem", "classical summation", IdentityKind::Series,
       {nonneg("n", "4"), mono("z", "3q")}, "0 <= n <= 10; z finite",
       [](const Params& p) {
         check_range(p, "n", 0, 10);
         require(!p.mono("z").is_infinite(), "z must be finite");
       },
       build_qbi});
  add({"QPS", "q-Pfaff-Saalschuetz summation", "classical summation", IdentityKind::Series,
       {nonneg("n", "3"), mono("a", "2q"), mono("b", "3q^2"), mono("c", "5q")},
       "0 <= n <= 8; a, b, c finite nonzero; no denominator factor vanishes", check_qps,
       build_qps});
  add({"JTP", "Jacobi triple product", "classical product formula", IdentityKind::Series,
       {mono("z", "2q^(1/2)")}, "z finite nonzero (both sides are formal for every such z)",
       [](const Params& p) { require_finite_nonzero(p, "z"); }, build_jtp});
  auto km = [&](const char* id, const char* title, const char* tag, auto build) {
    add({id, title, tag, IdentityKind::Series, {posint("k", "2"), nonneg("m", "0")},
         "k >= 1; m >= 0", no_check, build});
  };
  km("KMRR", "m-version of the Andrews-Gordon identities",
     "shifted pair + k applications of the lemma at rho1, rho2 -> infinity", build_kmrr);
  km("KMGG", "m-version of the generalized Goellnitz-Gordon identities",
     "shifted pair + (k-1) steps at infinity + one step at rho1 = sqrt(aq)", build_kmgg);
  auto k1 = [&](const char* id, const char* title, const char* dflt, auto build) {
    add({id, title, "k = 1 case of the m-versions", IdentityKind::Polynomial,
         {nonneg("m", dflt)}, "m >= 0", no_check, build});
  };
  k1("K1MRR", "polynomial analogue of the pentagonal number theorem", "3", build_k1mrr);
  k1("K1MGG_EVEN", "terminating identity from the Goellnitz-Gordon m-version, even shift", "1",
     build_k1mgg_even);
  k1("K1MGG_ODD", "terminating identity from the Goellnitz-Gordon m-version, odd shift", "2",
     build_k1mgg_odd);
  add({"MRR", "m-version of the Rogers-Ramanujan identities", "k = 2 case rearranged",
       IdentityKind::Series, {nonneg("m", "0")}, "m >= 0", no_check, build_mrr});
  add({"MGG", "m-version of the Goellnitz-Gordon identities", "k = 2 case rearranged",
       IdentityKind::Series, {nonneg("m", "0")}, "m >= 0", no_check, build_mgg});
  add({"GIS", "inverse m-version of the Rogers-Ramanujan identities",
       "finite sum of theta quotients", IdentityKind::Series, {nonneg("m", "0")}, "m >= 0",
       no_check, build_gis});
  km("KMRR_INV", "inversion of the Andrews-Gordon m-version", "classical Bailey inversion at a = q",
     build_kmrr_inv);
  km("K2MRR", "Andrews-Gordon m-version with even shift, recentred",
     "full Andrews-Gordon product side", build_k2mrr);
  add({"LHS_FULL_AG", "two multisums with the full Andrews-Gordon product",
       "identification of product sides", IdentityKind::Series,
       {posint("k", "3"), posint("m", "1")}, "k >= 2; 1 <= m <= k - 1",
       [](const Params& p) {
         const long k = p.integer("k");
         check_range(p, "m", 1, k - 1);
       },
       build_lhs_full_ag});
  km("KMRR_CHANGE", "m-version of Bressoud's identities for even moduli",
     "quadratic change of base at b -> infinity + (k-1) steps at infinity", build_kmrr_change);
  km("KMGG_INV", "inversion of the even-moduli Bressoud m-version",
     "classical Bailey inversion at a = q", build_kmgg_inv);
  add({"T8PSI8", "bilateral 8psi8 transformation", "two WP-lemma steps on the unit WP pair",
       IdentityKind::Series,
       {nonneg("m", "1"), mono("a", "2q^(5/2)"), mono("alpha", "3q^3"), mono("rho1", "2q"),
        mono("rho2", "3q"), mono("mu1", "2q^2"), mono("mu2", "5q")},
       "m >= 0; a, rho1, rho2, mu1, mu2 finite nonzero; val(alpha) - val(a) >= 1 or alpha = 0; "
       "val(a q / (mu1 mu2)) >= 1",
       validate_t8psi8, build_t8psi8});
  add({"R1PSI1", "Ramanujan's 1psi1 summation", "degeneration of the 8psi8 transformation",
       IdentityKind::Series, {mono("b", "2"), mono("c", "2q^2"), mono("z", "q")},
       "b, c, z finite nonzero; val(z) >= 1; val(c/b) >= val(z) + 1", validate_r1psi1,
       build_r1psi1});
  add({"B6PSI6", "Bailey's 6psi6 summation", "degeneration of the 8psi8 transformation",
       IdentityKind::Series,
       {mono("a", "q^2"), mono("b", "2q"), mono("c", "3q"), mono("d", "5q"), mono("e", "7q")},
       "a, b, c, d, e finite nonzero; val(a^2 q / bcde) >= 1", validate_b6psi6, build_b6psi6});
  add({"EXT63", "bilateral extension of a transformation of Garrett-Ismail-Stanton",
       "WP-shifted pair + both WP lemmas", IdentityKind::Series,
       {nonneg("m", "0"), mono("beta", "2"), mono("gamma", "3"), mono("rho", "5q")},
       "m >= 0; beta, gamma, rho finite nonzero; val(beta) <= 0", validate_ext63, build_ext63});
  add({"QULTRA_CONN", "connection coefficients of continuous q-ultraspherical polynomials",
       "expansion of C_n(x; c) in C_j(x; beta)", IdentityKind::Bivariate,
       {nonneg("n", "2"), mono("beta", "2q"), mono("c", "3q")},
       "0 <= n <= 12; beta finite nonzero with beta q^j != 1; c finite", validate_qultra,
       build_qultra});
  return rows;
}

}  // namespace

const std::vector<IdentityDef>& corpus() {
  static const std::vector<IdentityDef> rows = make_corpus();
  return rows;
}

const IdentityDef& find_identity(const std::string& id) {
  for (const auto& d : corpus()) {
    if (d.id == id) return d;
  }
  throw UnknownIdentity("unknown identity " + id);
}

long default_order() {
  if (const char* env = std::getenv("BAILEYKIT_DEFAULT_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 60;
}

Params resolve_params(const IdentityInstance& inst) {
  const IdentityDef& def = find_identity(inst.id);
  Params p;
  std::set<std::string> seen;
  for (const auto& [name, value] : inst.bindings) {
    const ParamSpec* spec = nullptr;
    for (const auto& s : def.params) {
      if (s.name == name) spec = &s;
    }
    if (!spec) throw UnknownParameter(inst.id + " has no parameter " + name);
    if (!seen.insert(name).second) throw ConstraintViolation(name + " is bound twice");
    p.set(name, value);
  }
  for (const auto& s : def.params) {
    if (!p.has(s.name)) p.set(s.name, parse_value(s.default_value));
    if (s.kind != ParamKind::Monomial) {
      const long v = p.integer(s.name);
      if (s.kind == ParamKind::PosInt) require(v >= 1, s.name + " must be >= 1");
      if (s.kind == ParamKind::NonnegInt) require(v >= 0, s.name + " must be >= 0");
    }
  }
  require(inst.order >= 0, "order must be nonnegative");
  def.validate(p);
  return p;
}

Sides build_sides(const IdentityInstance& inst, const BuildOptions& options) {
  const IdentityDef& def = find_identity(inst.id);
  Params p = resolve_params(inst);
  Sides s = def.build(p, inst.order, options);
  s.kind = def.kind;
  return s;
}

namespace {

Comparison compare_series(const TSeries& f, const TSeries& g, long order) {
  Comparison c;
  if (f == g) return c;
  long upto = order;
  if (f.is_exact() && g.is_exact()) upto = std::max(f.max_exp(), g.max_exp());
  auto d = first_difference(f, g, upto);
  if (!d) return c;
  c.equal = false;
  c.texp = *d;
  c.lhs = f.coeff(*d);
  c.rhs = g.coeff(*d);
  return c;
}

bool same_series(const TSeries& f, const TSeries& g, long order) {
  if (f.is_exact() && g.is_exact()) return f == g;
  return f.truncated(order) == g.truncated(order);
}

}  // namespace

Comparison compare_sides(const Sides& sides, long order) {
  if (sides.kind != IdentityKind::Bivariate) return compare_series(sides.lhs, sides.rhs, order);
  std::set<long> xs;
  for (const auto& [e, c] : sides.lhs_x.terms()) xs.insert(e);
  for (const auto& [e, c] : sides.rhs_x.terms()) xs.insert(e);
  for (long e : xs) {
    Comparison c = compare_series(sides.lhs_x.coeff(e), sides.rhs_x.coeff(e), order);
    if (!c.equal) {
      c.xexp = e;
      return c;
    }
  }
  return {};
}

bool same_coefficients(const Sides& a, const Sides& b, long order) {
  if (a.kind != b.kind) return false;
  if (a.kind != IdentityKind::Bivariate) {
    return same_series(a.lhs, b.lhs, order) && same_series(a.rhs, b.rhs, order);
  }
  return a.lhs_x.truncated(order) == b.lhs_x.truncated(order) &&
         a.rhs_x.truncated(order) == b.rhs_x.truncated(order);
}

VerificationReport verify(const IdentityInstance& inst) {
  VerificationReport r;
  r.instance = inst;
  const auto start = std::chrono::steady_clock::now();
  try {
    Sides s = build_sides(inst);
    r.derived = s.derived;
    r.terms_summed = s.terms;
    Comparison c = compare_sides(s, inst.order);
    BuildOptions doubled;
    doubled.window_scale = 2;
    Sides s2 = build_sides(inst, doubled);
    if (!same_coefficients(s, s2, inst.order)) {
      r.status = Status::Error;
      r.message = "doubling the summation windows changed coefficients";
    } else if (c.equal) {
      r.status = Status::Pass;
    } else {
      r.status = Status::Fail;
      r.first_mismatch_texp = c.texp;
      r.mismatch_xexp = c.xexp;
      r.lhs_coeff = c.lhs;
      r.rhs_coeff = c.rhs;
    }
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.message = e.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

std::vector<std::pair<std::string, std::string>> display_params(const IdentityInstance& inst) {
  std::vector<std::pair<std::string, std::string>> out;
  const IdentityDef& def = find_identity(inst.id);
  for (const auto& s : def.params) {
    std::string value = parse_value(s.default_value).to_string();
    for (const auto& [name, v] : inst.bindings) {
      if (name == s.name) value = v.to_string();
    }
    out.emplace_back(s.name, value);
  }
  return out;
}

}  // namespace baileykit
