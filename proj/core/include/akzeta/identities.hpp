#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "akzeta/combinatorics.hpp"
#include "akzeta/numerics.hpp"
#include "akzeta/types.hpp"

namespace akzeta {

/// Parameters of one identity instance. Unused fields stay empty.
struct ParamSet {
  std::optional<Composition> alpha;
  std::optional<unsigned> m;
  /// Kept as text so values such as "8+4*sqrt(3)" survive round trips.
  std::optional<std::string> p;
  std::optional<Rational> x;
  std::optional<unsigned> q;
  std::optional<unsigned> r;
  std::optional<Rational> z;
  std::optional<Rational> t;

  /// (name, value) pairs of the fields that are set, in declaration order.
  std::vector<std::pair<std::string, std::string>> entries() const;
  std::string str() const;
};

enum class ToleranceClass { exact, rigorous, estimated };

std::string_view to_string(ToleranceClass c);
std::optional<ToleranceClass> parse_tolerance_class(std::string_view text);

struct Tolerance {
  ToleranceClass cls;
  /// Absolute tolerance; 0 for exact identities.
  double value;
};

/// One side of an identity: a named evaluator operation plus the mapping
/// from identity parameters to its arguments.
struct SideRecipe {
  using Evaluate = std::function<Evaluation(const ParamSet&, const PrecisionContext&)>;
  using Exact = std::function<std::vector<Rational>(const ParamSet&)>;

  SideRecipe(std::string op, Evaluate eval, Exact ex = {})
      : operation(std::move(op)), evaluate(std::move(eval)), exact(std::move(ex)) {}

  std::string operation;
  Evaluate evaluate;
  /// Exact identities also expose the compared rationals; sides are equal
  /// exactly when these vectors are equal.
  Exact exact;
};

struct IdentityCase {
  std::string id;
  std::string statement;
  SideRecipe lhs;
  SideRecipe rhs;
  std::function<Tolerance(const ParamSet&)> tolerance;
  /// Default parameter grid, in verification order.
  std::vector<ParamSet> grid;
  std::string notes;
};

struct IdentityReport {
  std::string id;
  ParamSet params;
  Evaluation lhs;
  Evaluation rhs;
  Real abs_diff;
  Real bound;
  BoundKind bound_kind = BoundKind::exact;
  Tolerance tolerance{ToleranceClass::exact, 0};
  bool pass = false;
  double seconds = 0;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The fixed catalog, in a deterministic order.
const std::vector<IdentityCase>& catalog();

/// Exact id lookup. Throws UnknownIdentity.
const IdentityCase& find_identity(std::string_view id);

/// Cases whose id equals `selector` or starts with it. Throws UnknownIdentity
/// when nothing matches.
std::vector<const IdentityCase*> select_identities(std::string_view selector);

/// pass ⇔ |lhs − rhs| ≤ max(combined bound, class tolerance); exact cases
/// compare their rational vectors instead.
IdentityReport verify(const IdentityCase& c, const ParamSet& params, const PrecisionContext& ctx);
IdentityReport verify(std::string_view id, const ParamSet& params, const PrecisionContext& ctx);

struct VerifyFilter {
  /// Id or id prefix; empty selects everything.
  std::string selector;
  std::optional<ToleranceClass> tolerance_class;
};

struct VerifySummary {
  std::vector<IdentityReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Largest |lhs − rhs| among non-exact reports and where it occurred.
  Real worst_abs_diff;
  std::string worst_case;
};

/// Runs every selected case over its default grid. With threads > 1 cases
/// run concurrently; reports keep catalog order either way.
VerifySummary verify_all(const VerifyFilter& filter, const PrecisionContext& ctx, unsigned threads = 1);

}  // namespace akzeta
