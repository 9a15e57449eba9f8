// Acceptance run: one PASS/FAIL line per criterion, with timings. Exit
// status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "suptrop/error.hpp"
#include "suptrop/sampler.hpp"

using namespace suptrop;
using io::Json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::filesystem::path data(const char* name) { return std::filesystem::path(SUPTROP_TEST_DATA) / name; }

// 1. Worked example ranks from the golden files.
Outcome worked_example() {
  const Matrix s = io::matrix_from_json(io::read_file(data("example33_sigma.json")));
  const SymmetrizedMatrix a = io::symmetrized_from_json(io::read_file(data("example33_A.json")));
  const std::size_t rs = tropical_rank(s).rank;
  const std::size_t ra = tropical_rank(a.base()).rank;
  std::ostringstream os;
  os << "rank sigma(A) = " << rs << ", rank A = " << ra;
  return {rs == 1 && ra == 4, os.str()};
}

// 2. Rank additivity over random symmetrized matrices.
Outcome additivity() {
  std::mt19937_64 rng(1002);
  int fails = 0, count = 0;
  for (; count < 300; ++count) {
    const auto t = oracle::random_symmetrized(rng, 1 + rng() % 3, 1 + rng() % 4, 3);
    if (!verify_rank_additivity(t).holds) ++fails;
  }
  return {fails == 0, std::to_string(count) + " instances, " + std::to_string(fails) + " violations"};
}

// Random n x n matrix meeting expand_first_column's precondition.
Matrix expandable(std::mt19937_64& rng, std::size_t n) {
  Matrix m = oracle::random_matrix(rng, n, n, 20, 25, 4);
  m(0, 0) = oracle::t(0);
  m(1, 0) = oracle::t(0);
  for (std::size_t i = 2; i < n; ++i) m(i, 0) = oracle::inf();
  return m;
}

// 3. Permanent preserved by expanding the first column.
Outcome expansion() {
  std::mt19937_64 rng(1003);
  int fails = 0, count = 0;
  for (; count < 600; ++count) {
    const Matrix a = expandable(rng, 2 + rng() % 4);
    if (!(permanent(a) == permanent(expand_first_column(a)))) ++fails;
  }
  return {fails == 0, std::to_string(count) + " instances, " + std::to_string(fails) + " mismatches"};
}

// 4. Column replacement keeps non-singularity.
Outcome column_replacement() {
  std::mt19937_64 rng(1004);
  int fails = 0, count = 0;
  while (count < 300) {
    const std::size_t n = 2 + rng() % 4;
    const Matrix a = oracle::random_matrix(rng, n, n, 20, 25, 6);
    if (!is_nonsingular(a)) continue;
    ++count;
    const Rat x(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 4));
    const Rat y(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 4));
    try {
      const std::string label = replace_column_keep_nonsingular(a, x, y);
      const std::size_t j = *a.col_index(label);
      const bool ok = is_nonsingular(with_replaced_column(a, j, x, y)) &&
                      (a(0, j).is_tangible() || a(1, j).is_tangible());
      if (!ok) ++fails;
    } catch (const Error&) {
      ++fails;
    }
  }
  return {fails == 0, std::to_string(count) + " non-singular instances, " + std::to_string(fails) + " failures"};
}

// 5. Lifting transfer on the worked example over Q and F_3.
Outcome lifting_transfer() {
  const SymmetrizedMatrix sym = io::symmetrized_from_json(io::read_file(data("example33_A.json")));
  std::ostringstream os;
  bool ok = true;
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    const SeriesMatrix l = oracle::frozen_lifting(f);
    const SeriesMatrix big = lift_transform(sym, l);
    const std::size_t rl = series_rank(l);
    const std::size_t rb = series_rank(big);
    const bool lifts = lifting_check(sym.base(), big);
    const std::size_t back = series_rank(row_reduce_symmetrized(sym, big));
    os << f.str() << ": " << big.rows() << "x" << big.cols() << " rank " << rb << " = " << rl << " + 3, lifts "
       << lifts << ", round trip " << back << "; ";
    ok = ok && big.rows() == 6 && big.cols() == 6 && rl == 2 && rb == 5 && lifts && back == 2;
  }
  return {ok, os.str()};
}

// 6. Fast routines against brute-force oracles.
Outcome oracle_equivalence() {
  std::mt19937_64 rng(1006);
  int perm_fails = 0, rank_fails = 0;
  const int perm_count = 800, rank_count = 250;
  for (int it = 0; it < perm_count; ++it) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix a = oracle::random_matrix(rng, n, n, 20, 25, 3);
    if (is_nonsingular_fast(a) != is_nonsingular(a)) ++perm_fails;
  }
  const Field fields[] = {Field::rationals(), Field::prime(3), Field::prime(5)};
  for (int it = 0; it < rank_count; ++it) {
    const Field& f = fields[it % 3];
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    SeriesMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = oracle::random_series(rng, f, 2, 1 + static_cast<long>(rng() % 3));
    }
    if (r > 1 && rng() % 3 == 0) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * PuiseuxPoly::monomial(Coeff::from_int(f, 2), Rat(1, 2));
    }
    if (series_rank(m) != oracle::rank_by_minors(m)) ++rank_fails;
  }
  std::ostringstream os;
  os << "non-singularity " << perm_fails << "/" << perm_count << " disagreements, series rank " << rank_fails << "/"
     << rank_count;
  return {perm_fails == 0 && rank_fails == 0, os.str()};
}

// 7. Tropical bound on the desk instance.
Outcome desk_bound() {
  const ZeroOneMatrix m = oracle::desk_instance();
  const GoodTuple good(2, Rat(2), Rat(16), m);
  const PhiMatrix phi = build_phi(m, 2);
  const PhiBoundsReport rep = verify_phi_bounds(phi, good);
  std::ostringstream os;
  os << phi.base.rows() << "x" << phi.base.cols() << ", " << rep.checked << " submatrices of size >= "
     << rep.threshold << " all singular: " << rep.all_singular << ", exact rank "
     << (rep.exact_rank ? std::to_string(*rep.exact_rank) : "n/a") << " <= " << rep.bound
     << "; Kapranov figure " << rep.kapranov_bound << " (" << rep.kapranov_caveat << ")";
  const bool ok = phi.base.rows() == 12 && rep.threshold == 11 && rep.checked == 145 && rep.all_singular &&
                  rep.exhaustive && rep.exact_rank && *rep.exact_rank <= 10;
  return {ok, os.str()};
}

// 8. Finite replacement equals the min-plus product D ⊙ Φ.
Outcome finite_replacement() {
  std::mt19937_64 rng(1008);
  std::vector<PhiMatrix> phis = {build_phi(oracle::desk_instance(), 2), build_phi(ZeroOneMatrix::from_rows({{0}}), 2),
                                 build_phi(ZeroOneMatrix::from_rows({{1}}), 2)};
  for (int it = 0; it < 30; ++it) {
    const std::size_t d = 1 + rng() % 3, k = 2 + rng() % 2;
    ZeroOneMatrix m(d, (k - 1) * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < m.width(); ++j) m.set(i, j, rng() % 2);
    }
    phis.push_back(build_phi(m, k));
  }
  int product_fails = 0, rank_fails = 0, ranked = 0;
  for (const PhiMatrix& phi : phis) {
    const Matrix fe = finite_entries(phi.base);
    const Matrix d = offset_matrix(phi.base);
    const std::size_t n = fe.rows();
    // Min-plus product computed directly on values.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::optional<Rat> best;
        for (std::size_t l = 0; l < n; ++l) {
          if (phi.base(l, j).is_infinite()) continue;
          const Rat v = d(i, l).value() + phi.base(l, j).value();
          if (!best || v < *best) best = v;
        }
        if (!best || !fe(i, j).is_tangible() || fe(i, j).value() != *best) ++product_fails;
      }
    }
    if (n <= 12) {
      ++ranked;
      if (tropical_rank(fe).rank > tropical_rank(phi.base).rank) ++rank_fails;
    }
  }
  std::ostringstream os;
  os << phis.size() << " matrices, " << product_fails << " entries differ from D*Phi; " << ranked
     << " rank comparisons, " << rank_fails << " violations";
  return {product_fails == 0 && rank_fails == 0, os.str()};
}

ZeroOneMatrix from_strings(const std::vector<std::string>& rows) {
  std::vector<std::vector<int>> bits;
  for (const auto& r : rows) {
    std::vector<int> row;
    for (char c : r) row.push_back(c == '1');
    bits.push_back(row);
  }
  return ZeroOneMatrix::from_rows(bits);
}

// 9. Sampler reproducibility and bounds.
Outcome sampler() {
  std::ostringstream os;
  // Reference matrices from an independent implementation of the generator.
  const bool frozen =
      sample_candidate(SamplerParams{3, Rat(1, 20), 42, false}, 0) == from_strings({"111111", "111111", "011111"}) &&
      sample_candidate(SamplerParams{4, Rat(1, 4), 7, true}, 0) ==
          from_strings({"111111110101", "011101110001", "110100110110", "001111111111"});
  bool hoeffding = true;
  for (std::size_t d = 2; d <= 64; ++d) hoeffding = hoeffding && hoeffding_bound(d).hi < Rat(1, 2);

  const SamplerParams p{6, Rat(1, 20), 2024, false};
  const LemmaParams lp = lemma_params(6, p.q);
  int failures = 0;
  for (std::uint64_t a = 0; a < 200; ++a) {
    if (!verify_good(sample_candidate(p, a), lp.k, lp.r_check(), lp.u_check()).cond1) ++failures;
  }
  const double h = hoeffding_bound(6).hi.to_double();
  const double limit = h + 3 * std::sqrt(h * (1 - h) / 200.0);
  const bool rate_ok = failures / 200.0 <= limit;

  std::mt19937_64 rng(1009);
  int cond2_fails = 0;
  for (int it = 0; it < 300; ++it) {
    ZeroOneMatrix m(8, 16);
    const int pct = 30 + static_cast<int>(rng() % 60);
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 16; ++j) m.set(i, j, static_cast<int>(rng() % 100) < pct);
    }
    const long block = 1 + static_cast<long>(rng() % 5);
    const GoodnessReport rep = verify_good(m, 3, Rat(2 * block - 1, 2), Rat(0));
    if (rep.cond2 == oracle::has_all_ones_block(m, static_cast<std::size_t>(block))) ++cond2_fails;
  }
  os << "frozen seeds " << frozen << ", Hoeffding < 1/2 for d=2..64 " << hoeffding << ", cond1 failures "
     << failures << "/200 (limit " << limit << "), cond2 disagreements " << cond2_fails << "/300";
  return {frozen && hoeffding && rate_ok && cond2_fails == 0, os.str()};
}

// Required report keys and their JSON types.
bool schema_valid(const Json& j, std::string& why) {
  const std::vector<std::pair<const char*, Json::value_t>> keys = {
      {"n", Json::value_t::number_unsigned},      {"alpha", Json::value_t::string},
      {"d", Json::value_t::number_unsigned},      {"k", Json::value_t::number_unsigned},
      {"q", Json::value_t::string},               {"q_enclosure", Json::value_t::array},
      {"r", Json::value_t::array},                {"u", Json::value_t::array},
      {"attempts", Json::value_t::number_unsigned}, {"goodness", Json::value_t::object},
      {"phi_size", Json::value_t::number_unsigned}, {"phi0_size", Json::value_t::number_unsigned},
      {"trop_rank_bound", Json::value_t::array},  {"lemma_trop_bound", Json::value_t::string},
      {"kapranov_bound", Json::value_t::string},  {"exact_trop_rank", Json::value_t::number_unsigned},
      {"exact_trop_rank_phi", Json::value_t::number_unsigned},
      {"bounds_guaranteed", Json::value_t::boolean}, {"hypothesis_caveats", Json::value_t::array},
      {"files", Json::value_t::object}};
  for (const auto& [key, type] : keys) {
    if (!j.contains(key)) {
      why = std::string("missing ") + key;
      return false;
    }
    if (j[key].type() != type) {
      why = std::string("wrong type for ") + key;
      return false;
    }
  }
  for (const char* key : {"q_enclosure", "r", "u", "trop_rank_bound"}) {
    if (j[key].size() != 2 || !j[key][0].is_string() || !j[key][1].is_string()) {
      why = std::string(key) + " is not an interval";
      return false;
    }
  }
  return true;
}

// 10. Separation pipeline smoke test.
Outcome separation() {
  const SeparationReport rep = separate(16, Rat(1, 2), 42);
  const Json j = Json::parse(io::to_json(rep, Json{{"report", "report.json"}}).dump());
  std::string why = "ok";
  const bool schema = schema_valid(j, why);
  std::ostringstream os;
  os << "d=" << rep.d << ", q=" << rep.q << ", attempts " << rep.attempts << ", Phi0 " << rep.phi0.rows() << "x"
     << rep.phi0.cols() << ", exact rank Phi "
     << (rep.exact_trop_rank_phi ? std::to_string(*rep.exact_trop_rank_phi) : "n/a") << ", Phi0 "
     << (rep.exact_trop_rank_phi0 ? std::to_string(*rep.exact_trop_rank_phi0) : "n/a")
     << ", bounds_guaranteed " << rep.bounds_guaranteed << ", schema " << why;
  const bool ok = schema && !rep.bounds_guaranteed && rep.d == 4 && rep.phi0.rows() == 16 && rep.phi0.cols() == 16 &&
                  rep.exact_trop_rank_phi && rep.exact_trop_rank_phi0 &&
                  *rep.exact_trop_rank_phi == *rep.exact_trop_rank_phi0;
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, const char*, double, std::function<Outcome()>>> criteria = {
      {1, "worked example ranks", 1, worked_example},
      {2, "symmetrized rank additivity", 30, additivity},
      {3, "first-column expansion keeps the permanent", 10, expansion},
      {4, "column replacement keeps non-singularity", 0, column_replacement},
      {5, "lifting transfer on the worked example", 0, lifting_transfer},
      {6, "fast routines match brute-force oracles", 0, oracle_equivalence},
      {7, "tropical bound on the desk instance", 60, desk_bound},
      {8, "finite replacement equals D*Phi", 0, finite_replacement},
      {9, "sampler reproducibility and bounds", 0, sampler},
      {10, "separation pipeline smoke test", 120, separation},
  };
  int failed = 0;
  for (const auto& [id, name, limit, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs > limit) {
      out.pass = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(limit)) + " s limit)";
    }
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << " [" << secs << " s] "
              << out.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
