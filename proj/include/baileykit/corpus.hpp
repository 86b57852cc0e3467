#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baileykit/laurent_x.hpp"
#include "baileykit/monomial.hpp"
#include "baileykit/series.hpp"

namespace baileykit {

enum class ParamKind { NonnegInt, PosInt, Monomial };
enum class IdentityKind { Series, Polynomial, Bivariate };

std::string kind_name(IdentityKind kind);
std::string kind_name(ParamKind kind);

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Monomial;
  /// Value used when the instance does not bind the parameter, in instance syntax.
  std::string default_value;
};

/// Parameter values of one instance with defaults filled in.
class Params {
 public:
  void set(const std::string& name, const Monomial& value) { values_[name] = value; }
  bool has(const std::string& name) const { return values_.count(name) != 0; }
  const Monomial& mono(const std::string& name) const;
  /// The value as an integer; the parameter must have been validated as integral.
  long integer(const std::string& name) const;

 private:
  std::map<std::string, Monomial> values_;
};

/// Both sides of an identity instance, each known at least to the requested order.
struct Sides {
  IdentityKind kind = IdentityKind::Series;
  TSeries lhs;
  TSeries rhs;
  LaurentPolyX lhs_x;
  LaurentPolyX rhs_x;
  long terms = 0;
  /// Bindings computed by the builder (never supplied by the user), in display form.
  std::vector<std::pair<std::string, std::string>> derived;
};

struct BuildOptions {
  /// Multiplies the initial size of every summation window.
  long window_scale = 1;
  /// Accumulates every sum from its far end.
  bool reverse = false;
};

struct IdentityDef {
  std::string id;
  std::string title;
  /// Short description of where the identity sits among the classical ones.
  std::string tag;
  IdentityKind kind = IdentityKind::Series;
  std::vector<ParamSpec> params;
  /// Human-readable constraints, including the valuation reading of |.| < 1 conditions.
  std::string constraints;
  /// Throws ConstraintViolation when the values are outside the row's domain.
  std::function<void(const Params&)> validate;
  std::function<Sides(const Params&, long order, const BuildOptions&)> build;
};

struct IdentityInstance {
  std::string id;
  /// Bindings in the order they were written.
  std::vector<std::pair<std::string, Monomial>> bindings;
  /// t-units.
  long order = 0;
};

enum class Status { Pass, Fail, Error };
std::string status_name(Status s);

struct VerificationReport {
  IdentityInstance instance;
  Status status = Status::Error;
  std::optional<long> first_mismatch_texp;
  /// x-exponent of the mismatch for bivariate identities.
  std::optional<long> mismatch_xexp;
  std::optional<Rational> lhs_coeff;
  std::optional<Rational> rhs_coeff;
  long terms_summed = 0;
  long elapsed_ms = 0;
  std::string message;
  std::vector<std::pair<std::string, std::string>> derived;
};

/// All rows of the corpus in presentation order.
const std::vector<IdentityDef>& corpus();
/// Throws UnknownIdentity.
const IdentityDef& find_identity(const std::string& id);

/// Order used when an instance does not give one: BAILEYKIT_DEFAULT_ORDER or 60.
long default_order();

/// Checks parameter names and kinds, fills defaults and runs the row's constraints.
/// Throws UnknownIdentity, UnknownParameter or ConstraintViolation.
Params resolve_params(const IdentityInstance& inst);

/// Builds both sides at inst.order. Throws ConstraintViolation, FormalDivergence,
/// ZeroSeriesInversion or DegenerateParameter.
Sides build_sides(const IdentityInstance& inst, const BuildOptions& options = {});

/// Outcome of comparing two sides coefficientwise up to `order`.
struct Comparison {
  bool equal = true;
  std::optional<long> texp;
  std::optional<long> xexp;
  Rational lhs;
  Rational rhs;
};
Comparison compare_sides(const Sides& sides, long order);
/// True when both builds carry identical coefficients up to `order` on both sides.
bool same_coefficients(const Sides& a, const Sides& b, long order);

/// Builds, compares and re-runs with doubled windows; never throws for evaluation errors.
VerificationReport verify(const IdentityInstance& inst);

/// Display form "name=value" of every binding plus defaults, in parameter order.
std::vector<std::pair<std::string, std::string>> display_params(const IdentityInstance& inst);

}  // namespace baileykit
