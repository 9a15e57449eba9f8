// Command-line front end. Every subcommand prints one JSON object on
// stdout; diagnostics go to stderr.
//
// Exit status: 0 success, 1 bad input, 2 a verification came out false,
// 3 a size or attempt limit was hit.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "suptrop/error.hpp"
#include "suptrop/io.hpp"

namespace {

using namespace suptrop;
using io::Json;

constexpr int kOk = 0;
constexpr int kUserError = 1;
constexpr int kVerificationFailed = 2;
constexpr int kLimitExceeded = 3;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::size_limit_exceeded:
    case ErrorKind::attempts_exhausted:
      return kLimitExceeded;
    case ErrorKind::lemma_violation:
    case ErrorKind::internal:
      return kVerificationFailed;
    default:
      return kUserError;
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json labelled(const std::vector<std::size_t>& idx, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(labels[i]);
  return out;
}

SeriesMatrix convert_field(const SeriesMatrix& l, const std::optional<std::string>& field_text) {
  if (!field_text) return l;
  const Field f = Field::parse(*field_text);
  if (f == l.field()) return l;
  if (!l.field().is_rational()) {
    fail(ErrorKind::invalid_argument, "only series over Q can be moved to another field");
  }
  std::vector<PuiseuxPoly> entries;
  for (const PuiseuxPoly& p : l.entries()) {
    std::vector<Term> terms;
    for (const Term& t : p.terms()) terms.push_back(Term{Coeff(f, t.coeff.rational()), t.exponent});
    entries.push_back(PuiseuxPoly::from_terms(f, std::move(terms)));
  }
  return SeriesMatrix(f, l.row_labels(), l.col_labels(), std::move(entries));
}

struct Args {
  std::string matrix, sym, series, zero_one, phi, tuple, out;
  std::vector<std::string> index_labels, other_labels;
  std::optional<std::string> field;
  bool exhaustive = false;
  std::uint64_t randomized = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_checks = 0;
  std::size_t k = 0, d = 0, n = 0, attempts = kDefaultMaxAttempts;
  std::string q, alpha;
  bool out_of_range = false;
};

int run_permanent(const Args& a) {
  const Matrix m = io::matrix_from_json(io::read_file(a.matrix));
  if (!m.is_square()) fail(ErrorKind::not_square, "permanent needs a square matrix, got " +
                                                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const bool brute = m.rows() <= kPermanentLimit;
  const Scalar p = brute ? permanent(m) : permanent_by_assignment(m);
  emit(Json{{"permanent", p.str()}, {"nonsingular", p.is_tangible()}, {"method", brute ? "enumeration" : "assignment"}});
  return kOk;
}

int run_rank(const Args& a) {
  const Matrix m = io::matrix_from_json(io::read_file(a.matrix));
  RankOptions o;
  o.max_checks = a.max_checks;
  o.seed = a.seed;
  if (a.randomized > 0) {
    o.mode = RankMode::randomized;
    o.samples_per_size = a.randomized;
  }
  const RankResult r = tropical_rank(m, o);
  Json j = io::to_json(r);
  j["witness_row_labels"] = labelled(r.rows, m.row_labels());
  j["witness_col_labels"] = labelled(r.cols, m.col_labels());
  emit(j);
  return kOk;
}

int run_sigma(const Args& a) {
  emit(io::to_json(sigma(io::symmetrized_from_json(io::read_file(a.sym)))));
  return kOk;
}

int run_symmetrize(const Args& a) {
  const Matrix m = io::matrix_from_json(io::read_file(a.matrix));
  if (a.index_labels.empty() != a.other_labels.empty()) {
    fail(ErrorKind::invalid_argument, "--I and --J must be given together");
  }
  const SymmetrizedMatrix t =
      a.index_labels.empty() ? symmetrize(m) : symmetrize(m, a.index_labels, a.other_labels);
  emit(io::to_json(t));
  return kOk;
}

int run_additivity(const Args& a) {
  const AdditivityReport r = verify_rank_additivity(io::symmetrized_from_json(io::read_file(a.sym)));
  emit(io::to_json(r));
  return r.holds ? kOk : kVerificationFailed;
}

int run_series_rank(const Args& a) {
  const SeriesMatrix l = io::series_from_json(io::read_file(a.series));
  emit(Json{{"series_rank", series_rank(l)}, {"rows", l.rows()}, {"cols", l.cols()}, {"field", l.field().str()}});
  return kOk;
}

int run_lift_check(const Args& a) {
  const Matrix m = io::matrix_from_json(io::read_file(a.matrix));
  const SeriesMatrix l = io::series_from_json(io::read_file(a.series));
  const bool ok = lifting_check(m, l);
  emit(Json{{"lifts", ok}});
  return ok ? kOk : kVerificationFailed;
}

int run_lift_transform(const Args& a) {
  const SymmetrizedMatrix t = io::symmetrized_from_json(io::read_file(a.sym));
  const SeriesMatrix l = convert_field(io::series_from_json(io::read_file(a.series)), a.field);
  const SeriesMatrix lifted = lift_transform(t, l);
  emit(Json{{"matrix", io::to_json(lifted)},
            {"source_rank", series_rank(l)},
            {"series_rank", series_rank(lifted)},
            {"I", t.I().size()},
            {"lifts", lifting_check(t.base(), lifted)}});
  return kOk;
}

int run_row_reduce(const Args& a) {
  const SymmetrizedMatrix t = io::symmetrized_from_json(io::read_file(a.sym));
  const SeriesMatrix l = io::series_from_json(io::read_file(a.series));
  const SeriesMatrix reduced = row_reduce_symmetrized(t, l);
  emit(Json{{"matrix", io::to_json(reduced)},
            {"source_rank", series_rank(l)},
            {"series_rank", series_rank(reduced)},
            {"I", t.I().size()},
            {"lifts", lifting_check(sigma(t), reduced)}});
  return kOk;
}

int run_build_phi(const Args& a) {
  emit(io::to_json(build_phi(io::zero_one_from_json(io::read_file(a.zero_one)), a.k)));
  return kOk;
}

int run_verify_phi(const Args& a) {
  const PhiMatrix phi = io::phi_from_json(io::read_file(a.phi));
  const GoodTuple tuple = io::tuple_from_json(io::read_file(a.tuple));
  if (phi.d != tuple.d() || phi.k != tuple.k()) {
    fail(ErrorKind::invalid_argument, "Phi and the tuple disagree on d or k");
  }
  PhiBoundsOptions o;
  o.seed = a.seed;
  if (a.randomized > 0) {
    o.randomized = true;
    o.samples = a.randomized;
  }
  if (a.max_checks > 0) o.max_checks = a.max_checks;
  const PhiBoundsReport r = verify_phi_bounds(phi, tuple, o);
  emit(io::to_json(r));
  return r.all_singular ? kOk : kVerificationFailed;
}

int run_sample_good(const Args& a) {
  SamplerParams p{a.d, Rat::parse(a.q), a.seed, a.out_of_range};
  const SampledTuple s = sample_good_tuple(p, a.attempts);
  emit(Json{{"tuple", io::to_json(s.tuple)},
            {"attempts", s.attempts},
            {"lemma_params", io::to_json(s.params)},
            {"goodness", io::to_json(s.report)}});
  return kOk;
}

int run_separate(const Args& a) {
  SeparateOptions o;
  o.max_attempts = a.attempts;
  const SeparationReport r = separate(a.n, Rat::parse(a.alpha), a.seed, o);
  const std::filesystem::path dir(a.out);
  std::filesystem::create_directories(dir);
  const Json files{{"M", "M.json"}, {"phi", "phi.json"}, {"phi0", "phi0.json"}, {"report", "report.json"}};
  io::write_file(dir / "M.json", io::to_json(r.m));
  io::write_file(dir / "phi.json", io::to_json(r.phi));
  io::write_file(dir / "phi0.json", io::to_json(r.phi0));
  const Json report = io::to_json(r, files);
  io::write_file(dir / "report.json", report);
  emit(report);
  return kOk;
}

int run_bounds(const Args& a) {
  const Rat q = Rat::parse(a.q);
  const LemmaParams p = lemma_params(a.d, q);
  emit(Json{{"d", a.d},
            {"q", q.str()},
            {"lemma_params", io::to_json(p)},
            {"hoeffding", io::to_json(hoeffding_bound(a.d))},
            {"union", io::to_json(union_bound(a.d, q, p.r))}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supertropical matrices, tropical ranks and Puiseux liftings"};
  app.require_subcommand(1);
  Args a;
  int (*action)(const Args&) = nullptr;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Args&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  auto* perm = sub("permanent", "supertropical permanent of a square matrix", run_permanent);
  perm->add_option("matrix", a.matrix)->required();

  auto* rank = sub("rank", "tropical rank", run_rank);
  rank->add_option("matrix", a.matrix)->required();
  auto* ex = rank->add_flag("--exhaustive", a.exhaustive, "exact search (default)");
  rank->add_option("--randomized", a.randomized, "samples per size")->excludes(ex);
  rank->add_option("--seed", a.seed);
  rank->add_option("--max-checks", a.max_checks, "0 = unlimited");

  auto* sig = sub("sigma", "collapse a symmetrized matrix", run_sigma);
  sig->add_option("sym", a.sym)->required();

  auto* sym = sub("symmetrize", "canonical symmetrized preimage", run_symmetrize);
  sym->add_option("matrix", a.matrix)->required();
  sym->add_option("--I", a.index_labels, "labels for the rows");
  sym->add_option("--J", a.other_labels, "labels for the columns");

  auto* add = sub("verify-additivity", "check rank T = rank sigma(T) + |I|", run_additivity);
  add->add_option("sym", a.sym)->required();

  auto* sr = sub("series-rank", "rank of a Puiseux series matrix", run_series_rank);
  sr->add_option("series", a.series)->required();

  auto* lc = sub("lift-check", "is the series matrix a lifting", run_lift_check);
  lc->add_option("matrix", a.matrix)->required();
  lc->add_option("series", a.series)->required();

  auto* lt = sub("lift-transform", "lift T from a lifting of sigma(T)", run_lift_transform);
  lt->add_option("sym", a.sym)->required();
  lt->add_option("series", a.series)->required();
  lt->add_option("--field", a.field, "Q or Fp:<p>");

  auto* rr = sub("row-reduce", "lifting of sigma(T) from a lifting of T", run_row_reduce);
  rr->add_option("sym", a.sym)->required();
  rr->add_option("series", a.series)->required();

  auto* bp = sub("build-phi", "build Phi(M)", run_build_phi);
  bp->add_option("zeroone", a.zero_one)->required();
  bp->add_option("--k", a.k)->required();

  auto* vp = sub("verify-phi", "check the tropical rank bound of Phi", run_verify_phi);
  vp->add_option("phi", a.phi)->required();
  vp->add_option("tuple", a.tuple)->required();
  vp->add_option("--randomized", a.randomized, "sample this many submatrices instead");
  vp->add_option("--seed", a.seed);
  vp->add_option("--max-checks", a.max_checks);

  auto* sg = sub("sample-good", "sample a good tuple", run_sample_good);
  sg->add_option("--d", a.d)->required();
  sg->add_option("--q", a.q)->required();
  sg->add_option("--seed", a.seed)->required();
  sg->add_option("--attempts", a.attempts);
  sg->add_flag("--allow-out-of-range", a.out_of_range, "accept q outside (0, 1/10)");

  auto* sp = sub("separate", "run the separation pipeline", run_separate);
  sp->add_option("--n", a.n)->required();
  sp->add_option("--alpha", a.alpha)->required();
  sp->add_option("--seed", a.seed)->required();
  sp->add_option("--out", a.out)->required();
  sp->add_option("--attempts", a.attempts);

  auto* bd = sub("bounds", "lemma parameters and probability bounds", run_bounds);
  bd->add_option("--d", a.d)->required();
  bd->add_option("--q", a.q)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUserError;
  }
  try {
    return action(a);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    std::cerr << "error (internal): " << e.what() << "\n";
    return kVerificationFailed;
  }
}
