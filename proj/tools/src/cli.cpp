#include "sigmaconic_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sigmaconic/census.hpp"
#include "sigmaconic/cfsets.hpp"
#include "sigmaconic/classify.hpp"
#include "sigmaconic/gf.hpp"
#include "sigmaconic/mrdcodes.hpp"
#include "sigmaconic/sesqui.hpp"

namespace sigmaconic::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kEncoding =
    "element code = sum_i c_i p^i over the polynomial-basis coordinates c_0..c_{en-1} of F_p[x]/(modulus); "
    "matrices row-major";

struct FieldArgs {
  unsigned p = 2, e = 1, n = 1, m = 1;
};

struct Options {
  FieldArgs field;
  std::vector<std::uint32_t> matrix;
  std::string mode = "exhaustive";
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string matrix_class = "invertible";
  std::string shape = "full";
  std::string records = "violations";
  unsigned threads = 1;
  bool verify_sublines = false;
  std::vector<std::uint32_t> T{1};
  std::string scalars = "all";
  std::string out_path;
  std::string code_out;
  std::string format = "jsonl";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes JSON lines or, for csv, key/value rows gathered from the summary.
class Report {
 public:
  Report(std::ostream& os, std::string format) : os_(os), csv_(format == "csv") {
    if (csv_) os_ << "section,key,value\n";
  }

  void line(const json& j) {
    if (csv_) {
      const std::string type = j.value("type", "");
      if (type == "header" || type == "summary" || type == "result") flatten(type, j);
      return;
    }
    os_ << j.dump() << '\n';
  }

 private:
  void flatten(const std::string& section, const json& j) {
    for (const auto& [k, v] : j.items()) {
      if (k == "type") continue;
      if (v.is_object()) {
        flatten(section + "." + k, v);
      } else {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find_first_of(",\"") != std::string::npos) {
          std::string quoted = "\"";
          for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
          s = quoted + "\"";
        }
        os_ << section << ',' << k << ',' << s << '\n';
      }
    }
  }

  std::ostream& os_;
  bool csv_;
};

json header(const FieldTower& F, const std::string& command) {
  json h;
  h["type"] = "header";
  h["tool"] = "sigmaconic";
  h["version"] = kVersion;
  h["command"] = command;
  h["p"] = F.p();
  h["e"] = F.e();
  h["n"] = F.n();
  h["m"] = F.m();
  h["q"] = F.q();
  h["Q"] = F.size();
  h["modulus"] = F.modulus();
  h["encoding"] = kEncoding;
  return h;
}

json point_json(const ProjPoint& p) {
  json a = json::array();
  for (auto c : p.coords()) a.push_back(c.code);
  return a;
}

json record_json(const CensusRecord& r) {
  json j;
  j["type"] = "record";
  j["index"] = r.index;
  j["matrix"] = r.a;
  j["rank"] = r.rank;
  j["kind"] = to_string(r.kind);
  j["cardinality"] = r.cardinality;
  j["epsilon"] = r.epsilon ? json(*r.epsilon) : json(nullptr);
  j["family"] = r.family.empty() ? json(nullptr) : json(r.family);
  if (r.has_fixed) {
    j["fixed_in"] = r.fixed_in;
    j["fixed_out"] = r.fixed_out;
    j["fixed_in_collinear"] = r.fixed_in_collinear;
  }
  if (r.base) j["base"] = to_string(*r.base);
  if (r.steiner_checked) j["steiner_checked"] = true;
  json spec = json::array();
  for (const auto& [k, c] : r.spectrum) spec.push_back({k, c});
  j["spectrum"] = spec;
  j["violations"] = r.violations;
  return j;
}

json summary_json(const CensusSummary& s) {
  json j;
  j["type"] = "summary";
  j["attempts"] = s.attempts;
  j["matched"] = s.matched;
  auto keyed = [](const auto& m) {
    json o = json::object();
    for (const auto& [k, v] : m) {
      std::ostringstream key;
      key << k;
      o[key.str()] = v;
    }
    return o;
  };
  j["cardinality"] = keyed(s.cardinality);
  j["kinds"] = keyed(s.kinds);
  json fp = json::object();
  for (const auto& [k, v] : s.fixed_profiles) fp[std::to_string(k.first) + "/" + std::to_string(k.second)] = v;
  j["fixed_profiles"] = fp;
  j["epsilon"] = keyed(s.epsilon);
  j["families"] = keyed(s.families);
  j["spectrum"] = keyed(s.spectrum);
  j["steiner_checked"] = s.steiner_checked;
  j["q1_fixed"] = s.q1_fixed;
  j["q1_fixed_collinear"] = s.q1_fixed_collinear;
  j["records_with_violations"] = s.records_with_violations;
  j["violation_kinds"] = keyed(s.violation_kinds);
  return j;
}

Field make_field(const FieldArgs& a) { return build_field(a.p, a.e, a.n, a.m); }

CensusConfig census_config(const Options& o) {
  CensusConfig c;
  c.mode = o.mode == "random" ? SourceMode::Random : SourceMode::Exhaustive;
  if (c.mode == SourceMode::Random) {
    if (!o.seed_given) throw UsageError("random mode requires --seed");
    if (o.count == 0) throw UsageError("random mode requires --count > 0");
  }
  c.count = o.count;
  c.seed = o.seed;
  c.matrix_class = o.matrix_class == "all"          ? MatrixClass::All
                   : o.matrix_class == "degenerate" ? MatrixClass::Degenerate
                                                    : MatrixClass::Invertible;
  c.shape = o.shape == "diagonal" ? MatrixShape::Diagonal : MatrixShape::Full;
  c.threads = o.threads;
  c.verify_sublines = o.verify_sublines;
  return c;
}

MatrixCodes matrix9(const Options& o, const FieldTower& F) {
  if (o.matrix.size() != 9) throw UsageError("--matrix needs 9 entries here");
  MatrixCodes a{};
  for (std::size_t i = 0; i < 9; ++i) a[i] = F.from_code(o.matrix[i]).code;
  return a;
}

int cmd_classify(const Options& o, Report& rep) {
  const Field F = make_field(o.field);
  if (o.matrix.size() != 4 && o.matrix.size() != 9) throw UsageError("--matrix needs 4 or 9 entries");
  json h = header(*F, "classify");
  rep.line(h);

  if (o.matrix.size() == 4) {
    const Matrix a = Matrix::from_codes(*F, 2, 2, o.matrix);
    const SesquiForm form(F, a);
    json j;
    j["type"] = "record";
    j["matrix"] = a.codes();
    j["rank"] = form_rank(form);
    std::vector<std::string> violations;
    try {
      const auto lc = classify_line_form(form);
      j["kind"] = to_string(lc.kind);
      j["cardinality"] = lc.points.size();
      j["degenerate"] = lc.degenerate;
      json pts = json::array();
      for (const auto& p : lc.points) pts.push_back(point_json(p));
      j["points"] = pts;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisViolation) throw;
      const auto gamma = absolute_points(form);
      j["kind"] = nullptr;
      j["cardinality"] = gamma.size();
      violations.emplace_back("line-shape");
    }
    j["violations"] = violations;
    rep.line(j);
    return violations.empty() ? kOk : kViolation;
  }

  CensusConfig cfg;
  cfg.matrix_class = MatrixClass::All;
  cfg.verify_sublines = true;
  const CensusEngine engine(F, cfg);
  const auto rec = engine.process(0, matrix9(o, *F));
  json j = record_json(*rec);
  j.erase("index");
  json pts = json::array();
  const SesquiForm form(F, Matrix::from_codes(*F, 3, 3, rec->a));
  for (const auto& p : absolute_points(form).points) pts.push_back(point_json(p));
  j["points"] = pts;
  rep.line(j);
  return rec->violations.empty() ? kOk : kViolation;
}

json config_json(const Options& o) {
  json c;
  c["mode"] = o.mode;
  c["class"] = o.matrix_class;
  c["shape"] = o.shape;
  if (o.mode == "random") {
    c["count"] = o.count;
    c["seed"] = o.seed;
  }
  c["verify_sublines"] = o.verify_sublines;
  return c;
}

int run_engine(const Options& o, Report& rep, const std::string& command, CensusConfig cfg) {
  const Field F = make_field(o.field);
  json h = header(*F, command);
  h["config"] = config_json(o);
  // Fail on the resource cap before anything is written.
  if (cfg.mode == SourceMode::Exhaustive && exhaustive_count(F->size(), cfg.shape) > kExhaustiveCap)
    throw Error(ErrorCode::TooLargeForExhaustive,
                "exhaustive enumeration exceeds " + std::to_string(kExhaustiveCap) + " matrices; use --mode random");
  const CensusEngine engine(F, cfg);
  rep.line(h);
  const bool all = o.records == "all";
  const bool violations_only = o.records == "violations";
  const auto sum = engine.run([&](const CensusRecord& r) {
    if (all || (violations_only && !r.violations.empty())) rep.line(record_json(r));
  });
  rep.line(summary_json(sum));
  return sum.records_with_violations == 0 ? kOk : kViolation;
}

int cmd_census(const Options& o, Report& rep) { return run_engine(o, rep, "census", census_config(o)); }

int cmd_steiner(const Options& o, Report& rep) {
  if (!o.matrix.empty()) {
    const Field F = make_field(o.field);
    const MatrixCodes a = matrix9(o, *F);
    const SesquiForm form(F, Matrix::from_codes(*F, 3, 3, a));
    if (form_rank(form) != 2) throw UsageError("steiner-check needs a rank-2 matrix");
    const auto rad = radicals(form);
    if (ProjPoint::normalize(*F, rad.left.at(0)) == ProjPoint::normalize(*F, rad.right.at(0)))
      throw UsageError("left and right radicals coincide: Gamma is a cone, not a C_F^m-set");
    rep.line(header(*F, "steiner-check"));
    const auto phi = pencil_collineation_from_form(form);
    const auto gen = steiner_generate(*F, phi);
    const auto gamma = absolute_points(form);
    json j;
    j["type"] = "result";
    j["matrix"] = a;
    j["R"] = point_json(phi.R);
    j["L"] = point_json(phi.L);
    j["fixes_RL"] = fixes_line_RL(phi);
    j["generated"] = gen.size();
    j["cardinality"] = gamma.size();
    j["equal"] = gen == gamma.points;
    rep.line(j);
    return gen == gamma.points ? kOk : kViolation;
  }
  CensusConfig cfg = census_config(o);
  cfg.matrix_class = MatrixClass::Degenerate;
  cfg.steiner_check = true;
  return run_engine(o, rep, "steiner-check", cfg);
}

int cmd_mrd(const Options& o, Report& rep, std::ostream& err) {
  const Field F = make_field(o.field);
  const auto& f = *F;
  if (f.q() <= 2 || f.n() < 3) throw Error(ErrorCode::HypothesisViolation, "the MRD construction needs q > 2 and n >= 3");
  std::vector<FieldElem> T;
  for (auto c : o.T) T.push_back(f.from_code(c));
  const ScalarSet scalars = o.scalars == "subfield" ? ScalarSet::SubfieldUnits : ScalarSet::AllUnits;

  rep.line(header(f, "mrd"));
  const CfSet cf = cf_canonical(f, f.m());
  const auto comps = components(f, cf);
  const ExteriorSet X = exterior_set(f, cf, T);
  const bool exterior = verify_exterior(f, X.points, X.subplane);
  const RankCode code = build_code(f, X, scalars);
  const std::size_t dist = min_rank_distance(f, code);
  const std::uint64_t bound = singleton_bound(f.q(), 3, f.n(), 2);
  const auto witness = nonlinearity_witness(f, code);

  json j;
  j["type"] = "result";
  json tj = json::array();
  for (auto a : X.T) tj.push_back(a.code);
  j["T"] = tj;
  j["scalars"] = o.scalars;
  j["cf_size"] = cf.points.size();
  json cs = json::object();
  for (const auto& [a, pts] : comps) cs[std::to_string(a)] = pts.size();
  j["components"] = cs;
  j["subplane_size"] = X.subplane.points.size();
  j["exterior_size"] = X.points.size();
  j["exterior"] = exterior;
  j["code_size"] = code.size();
  j["min_distance"] = dist;
  j["singleton_bound"] = bound;
  j["meets_bound"] = code.size() == bound;
  j["nonlinear"] = witness.has_value();
  if (witness) j["nonlinear_witness"] = {witness->first, witness->second};

  std::vector<std::string> violations;
  if (!exterior) violations.emplace_back("not-exterior");
  if (X.points.size() != f.size() + 1) violations.emplace_back("exterior-size");
  if (dist < code.claimed_distance) violations.emplace_back("distance");
  if (scalars == ScalarSet::AllUnits && code.size() != bound) violations.emplace_back("singleton");
  j["violations"] = violations;
  rep.line(j);

  if (!o.code_out.empty()) {
    std::ofstream cf_out(o.code_out, std::ios::binary);
    if (!cf_out) {
      err << "cannot open " << o.code_out << '\n';
      return kUsage;
    }
    cf_out << "# q=" << f.q() << " rows=3 cols=" << f.n() << " size=" << code.size() << " encoding: " << kEncoding
           << "\n";
    for (const auto& m : code.matrices) {
      for (std::size_t i = 0; i < m.entries.size(); ++i) cf_out << (i ? " " : "") << m.entries[i].code;
      cf_out << '\n';
    }
  }
  return violations.empty() ? kOk : kViolation;
}

void add_field_options(CLI::App* app, Options& o) {
  app->add_option("--p", o.field.p, "characteristic")->required();
  app->add_option("--e", o.field.e, "q = p^e")->capture_default_str();
  app->add_option("--n", o.field.n, "extension degree over F_q")->required();
  app->add_option("--m", o.field.m, "sigma: x -> x^{q^m}")->capture_default_str();
  app->add_option("--out", o.out_path, "report path (default stdout)");
  app->add_option("--format", o.format, "report format")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
}

void add_source_options(CLI::App* app, Options& o) {
  app->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "random"}))->capture_default_str();
  app->add_option("--count", o.count, "random mode: matrices to evaluate");
  app->add_option_function<std::uint64_t>(
      "--seed",
      [&o](const std::uint64_t& s) {
        o.seed = s;
        o.seed_given = true;
      },
      "random mode: generator seed");
  app->add_option("--shape", o.shape)->check(CLI::IsMember({"full", "diagonal"}))->capture_default_str();
  app->add_option("--records", o.records)->check(CLI::IsMember({"all", "violations", "none"}))->capture_default_str();
  app->add_option("--threads", o.threads)->check(CLI::Range(1u, 256u))->capture_default_str();
  app->add_flag("--verify-sublines", o.verify_sublines, "check every (q+1)-point line section is an F_q-subline");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sigma-sesquilinear forms, C_F^m-sets and MRD codes over finite fields", "sigmaconic-cli"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "classify one form (4 or 9 encoded entries)");
  add_field_options(classify, o);
  classify->add_option("--matrix", o.matrix, "row-major entry codes")->required()->expected(4, 9);

  auto* census = app.add_subcommand("census", "census over 3x3 forms");
  add_field_options(census, o);
  add_source_options(census, o);
  census->add_option("--class", o.matrix_class)
      ->check(CLI::IsMember({"invertible", "degenerate", "all"}))
      ->capture_default_str();

  auto* mrd = app.add_subcommand("mrd", "exterior set and rank-distance code");
  add_field_options(mrd, o);
  mrd->add_option("--T", o.T, "codes of the elements of T (must contain 1)")->capture_default_str();
  mrd->add_option("--scalars", o.scalars)->check(CLI::IsMember({"subfield", "all"}))->capture_default_str();
  mrd->add_option("--code-out", o.code_out, "write the code, one matrix per line");

  auto* steiner = app.add_subcommand("steiner-check", "compare Gamma with the Steiner construction");
  add_field_options(steiner, o);
  add_source_options(steiner, o);
  steiner->add_option("--matrix", o.matrix, "single rank-2 matrix, 9 entry codes")->expected(9);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int rc = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return rc == 0 ? kOk : kUsage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &out;
  try {
    if (!o.out_path.empty()) {
      file = std::make_unique<std::ofstream>(o.out_path, std::ios::binary);
      if (!*file) throw UsageError("cannot open " + o.out_path);
      os = file.get();
    }
    Report rep(*os, o.format);
    if (*classify) return cmd_classify(o, rep);
    if (*census) return cmd_census(o, rep);
    if (*mrd) return cmd_mrd(o, rep, err);
    return cmd_steiner(o, rep);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::TooLargeForExhaustive:
      case ErrorCode::FieldTooLarge: return kResourceCap;
      default: return kUsage;
    }
  }
}

}  // namespace sigmaconic::cli
