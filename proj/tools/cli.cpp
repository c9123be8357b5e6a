#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "conelab/composition.hpp"
#include "conelab/degrees.hpp"
#include "conelab/doubling.hpp"
#include "conelab/errors.hpp"
#include "conelab/invariants.hpp"
#include "conelab/json_io.hpp"
#include "conelab/ldl.hpp"
#include "conelab/rank3.hpp"
#include "conelab/verify.hpp"

namespace conelab::cli {
namespace {

using io::Json;

/// Well-formed input whose answer is negative, e.g. a point outside V.
struct SemanticFailure {
  std::string message;
};

struct Options {
  std::uint64_t seed = 1;
  std::int64_t num_bound = 100;
  std::int64_t den_bound = 10;
  bool approx = false;

  std::string dims_file, cone_file, point_file, in_file, out_file, family_file;
  std::size_t rank = 0;
  std::int64_t r = 0, n = 0;
  std::vector<std::int64_t> triple;
  std::size_t samples = 100;
  bool dual = false;
};

std::size_t rank_cap() {
  if (const char* env = std::getenv("CONELAB_RANK_CAP")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) return static_cast<std::size_t>(cap);
    } catch (const std::logic_error&) {
    }
    throw InvalidArgument(std::string("CONELAB_RANK_CAP must be a positive integer, got \"") + env + "\"");
  }
  return kDefaultRankCap;
}

RationalSampler make_sampler(const Options& o) { return RationalSampler(o.seed, {o.num_bound, o.den_bound}); }

void emit(std::ostream& out, const Options& o, const Json& j) {
  if (o.out_file.empty()) {
    out << io::dump(j);
  } else {
    io::write_json_file(o.out_file, j);
  }
}

Json rational_field(const Rational& value, bool approx) {
  if (!approx) return io::to_json(value);
  return {{"exact", io::to_json(value)}, {"approx", to_decimal(value)}};
}

void check_failed(const ConditionResult& c, const std::string& name) {
  if (!c.passed) throw InternalInvariant(name + " failed: " + c.first->describe());
}

int cmd_sigma(const Options& o, std::ostream& out) {
  if (o.dims_file.empty() == o.cone_file.empty()) throw InvalidArgument("give exactly one of --dims or --cone");
  const DimTable dims = o.dims_file.empty() ? DimTable::of(io::realization_from_json(io::read_json_file(o.cone_file)))
                                            : io::dim_table_from_json(io::read_json_file(o.dims_file));
  emit(out, o, io::to_json(sigma_from_dims(dims)));
  return kSuccess;
}

int cmd_theorem(const Options& o, std::ostream& out) {
  const std::size_t r = o.rank;
  const Realization v = iterate_construction(r, rank_cap());
  const auto report = verify_v_conditions(v);
  check_failed(report.v1, "V1");
  check_failed(report.v2, "V2");
  check_failed(report.v3, "V3");

  const DimTable dims = DimTable::of(v);
  if (dims != DimTable::powers_of_two(r)) throw InternalInvariant("measured dims differ from 2^(k-j)");
  const std::size_t expected_n = (std::size_t{1} << r) - 1;
  if (v.total_size() != expected_n) throw InternalInvariant("N != 2^r - 1");

  const SigmaMatrix sigma = sigma_from_dims(dims);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sigma.entries[i][j] != (std::int64_t{1} << (i - j - 1))) {
        throw InternalInvariant("sigma differs from 2^(i-j-1) at (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ")");
      }
    }
  }
  const auto degrees = degrees_from_sigma(sigma);
  if (degrees.back() != (std::int64_t{1} << (r - 1))) throw InternalInvariant("deg Delta_r != 2^(r-1)");

  Json result = io::to_json(sigma);
  result.erase("trace");
  result["rank"] = r;
  result["N"] = v.total_size();
  result["dims"] = io::to_json(dims)["dims"];
  result["verified"] = true;
  emit(out, o, result);
  return kSuccess;
}

int cmd_iterate(const Options& o, std::ostream& out) {
  emit(out, o, io::to_json(iterate_construction(o.rank, rank_cap())));
  return kSuccess;
}

int cmd_double(const Options& o, std::ostream& out) {
  emit(out, o, io::to_json(double_realization(io::realization_from_json(io::read_json_file(o.in_file)))));
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto report = verify_v_conditions(io::realization_from_json(io::read_json_file(o.cone_file)));
  emit(out, o, io::to_json(report));
  return report.passed() ? kSuccess : kSemanticFailure;
}

int cmd_member(const Options& o, std::ostream& out) {
  const Realization v = io::realization_from_json(io::read_json_file(o.cone_file));
  const Json point = io::read_json_file(o.point_file);
  ConeElement x;
  if (point.is_object() && point.contains("matrix")) {
    auto projected = project(v, io::matrix_from_json(point["matrix"], "point.matrix"));
    if (!projected) {
      const auto& bad = projected.violation;
      throw SemanticFailure{"point not in V at block (" + std::to_string(bad.row_block + 1) + ", " +
                            std::to_string(bad.col_block + 1) + "): " + bad.reason};
    }
    x = std::move(*projected.element);
  } else {
    x = io::cone_element_from_json(point, v);
  }
  const LdlResult ldl = ldl_decompose(v, x);
  emit(out, o, io::to_json(ldl, o.approx));
  return ldl.is_member ? kSuccess : kSemanticFailure;
}

rank3::CompositionFamily load_family(const Options& o) {
  return io::family_from_json(io::read_json_file(o.family_file));
}

int cmd_rank3_family(const Options& o, std::ostream& out) {
  emit(out, o, io::to_json(rank3::composition_family(o.r, o.n)));
  return kSuccess;
}

int cmd_rank3_verify(const Options& o, std::ostream& out) {
  const auto f = load_family(o);
  const auto composition = rank3::verify_composition(f);
  const auto consistency = rank3::consistency_lr(f);
  auto report_json = [](const rank3::CompositionReport& c) {
    Json j{{"passed", c.passed}};
    if (c.failing_pair) j["failing_pair"] = {c.failing_pair->first, c.failing_pair->second};
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
  };
  const bool passed = composition.passed && consistency.passed;
  emit(out, o, {{"passed", passed}, {"composition", report_json(composition)}, {"consistency_lr", report_json(consistency)}});
  return passed ? kSuccess : kSemanticFailure;
}

int cmd_rank3_build(const Options& o, std::ostream& out) {
  const auto f = load_family(o);
  const Realization v = o.dual ? rank3::build_rank3_dual(f) : rank3::build_rank3_cone(f);
  const auto report = verify_v_conditions(v);
  check_failed(report.v1, "V1");
  check_failed(report.v2, "V2");
  check_failed(report.v3, "V3");
  emit(out, o, io::to_json(v));
  return kSuccess;
}

int cmd_rank3_classify(const Options& o, std::ostream& out) {
  if (o.triple.size() != 3) throw InvalidArgument("--triple takes r s n");
  emit(out, o, io::to_json(rank3::classify_degrees(o.triple[0], o.triple[1], o.triple[2])));
  return kSuccess;
}

int cmd_rank3_det(const Options& o, std::ostream& out) {
  const auto f = load_family(o);
  const Json point = io::read_json_file(o.point_file);
  Rational closed;
  LdlResult ldl;
  Realization v;
  if (o.dual) {
    const auto xi = io::dual_rank3_element_from_json(point, f);
    closed = rank3::det_rank3_dual_closed(f, xi);
    v = rank3::build_rank3_dual(f);
    ldl = ldl_decompose(v, rank3::to_cone_element(f, xi));
  } else {
    const auto x = io::rank3_element_from_json(point, f);
    closed = rank3::det_rank3_closed(f, x);
    v = rank3::build_rank3_cone(f);
    ldl = ldl_decompose(v, rank3::to_cone_element(f, x));
  }
  Json result{{"det", rational_field(closed, o.approx)}, {"member", ldl.is_member}};
  if (ldl.status == LdlStatus::complete) {
    const Rational from_pivots = determinant_from_pivots(v, ldl);
    if (from_pivots != closed) throw InternalInvariant("closed-form determinant disagrees with the pivots");
    result["pivots"] = io::to_json(ldl, false)["pivots"];
  }
  emit(out, o, result);
  return kSuccess;
}

int cmd_rank3_duality(const Options& o, std::ostream& out) {
  const auto f = load_family(o);
  RationalSampler sampler = make_sampler(o);
  const auto report = rank3::duality_check(f, sampler, o.samples);
  emit(out, o,
       {{"passed", report.passed()},
        {"pairs", report.pairs},
        {"boundary_samples", report.boundary_samples},
        {"decomposition_failures", report.decomposition_failures},
        {"positivity_failures", report.positivity_failures},
        {"seed", o.seed}});
  return report.passed() ? kSuccess : kSemanticFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact realizations of homogeneous cones", "conelab"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed of the rational sampler");
  app.add_option("--num-bound", o.num_bound, "Bound on sampled numerators")->check(CLI::PositiveNumber);
  app.add_option("--den-bound", o.den_bound, "Bound on sampled denominators")->check(CLI::PositiveNumber);
  app.add_flag("--approx", o.approx, "Add decimal renderings next to exact values");

  int (*handler)(const Options&, std::ostream&) = nullptr;
  auto command = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
    sub->fallthrough();
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  auto* sigma = command(app.add_subcommand("sigma", "sigma matrix and degrees from structure constants"), cmd_sigma);
  sigma->add_option("--dims", o.dims_file, "Dimension table JSON")->check(CLI::ExistingFile);
  sigma->add_option("--cone", o.cone_file, "Realization JSON; dims are measured")->check(CLI::ExistingFile);
  sigma->add_option("--out", o.out_file, "Write the result here instead of stdout");

  auto* theorem = command(app.add_subcommand("theorem", "Build, verify and measure the rank-r doubling cone"), cmd_theorem);
  theorem->add_option("--rank", o.rank)->required()->check(CLI::PositiveNumber);

  auto* iterate = command(app.add_subcommand("iterate", "Emit the rank-r doubling realization"), cmd_iterate);
  iterate->add_option("--rank", o.rank)->required()->check(CLI::PositiveNumber);
  iterate->add_option("--out", o.out_file);

  auto* dbl = command(app.add_subcommand("double", "Apply one doubling step"), cmd_double);
  dbl->add_option("--in", o.in_file)->required()->check(CLI::ExistingFile);
  dbl->add_option("--out", o.out_file);

  auto* member = command(app.add_subcommand("member", "Membership by exact block LDL"), cmd_member);
  member->add_option("--cone", o.cone_file)->required()->check(CLI::ExistingFile);
  member->add_option("--point", o.point_file, "Coordinates or {\"matrix\": ...}")->required()->check(CLI::ExistingFile);

  auto* verify = command(app.add_subcommand("verify", "Check (V1)-(V3) for a realization"), cmd_verify);
  verify->add_option("--cone", o.cone_file)->required()->check(CLI::ExistingFile);

  auto* rank3 = app.add_subcommand("rank3", "Rank-3 cones from composition families");
  rank3->require_subcommand(1);
  rank3->fallthrough();

  auto* family = command(rank3->add_subcommand("family", "Hurwitz-Radon family (r, n, n)"), cmd_rank3_family);
  family->add_option("--r", o.r)->required();
  family->add_option("--n", o.n)->required();
  family->add_option("--out", o.out_file);

  auto* rverify = command(rank3->add_subcommand("verify", "Check a composition family"), cmd_rank3_verify);
  rverify->add_option("--family", o.family_file)->required()->check(CLI::ExistingFile);

  auto* build = command(rank3->add_subcommand("build", "Realization of the cone or its dual"), cmd_rank3_build);
  build->add_option("--family", o.family_file)->required()->check(CLI::ExistingFile);
  build->add_flag("--dual", o.dual, "Dual cone, blocks in reverse order");
  build->add_option("--out", o.out_file);

  auto* classify = command(rank3->add_subcommand("classify", "Degree table of a triple"), cmd_rank3_classify);
  classify->add_option("--triple", o.triple, "r s n")->required()->expected(3);

  auto* det = command(rank3->add_subcommand("det", "Closed-form determinant"), cmd_rank3_det);
  det->add_option("--family", o.family_file)->required()->check(CLI::ExistingFile);
  det->add_option("--point", o.point_file)->required()->check(CLI::ExistingFile);
  det->add_flag("--dual", o.dual, "Point is a dual element");

  auto* duality = command(rank3->add_subcommand("duality", "Sampled coupling checks"), cmd_rank3_duality);
  duality->add_option("--family", o.family_file)->required()->check(CLI::ExistingFile);
  duality->add_option("--samples", o.samples)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kInputError;
  }

  try {
    return handler(o, out);
  } catch (const SemanticFailure& e) {
    err << "error: " << e.message << "\n";
    return kSemanticFailure;
  } catch (const InternalInvariant& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternalError;
  } catch (const InconsistentDims& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticFailure;
  } catch (const NotRealizable& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticFailure;
  } catch (const ConditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace conelab::cli
