#include "suptrop/io.hpp"

#include <fstream>
#include <sstream>

#include "suptrop/error.hpp"

namespace suptrop::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a string");
  return j.get<std::string>();
}

std::size_t size_of(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad(where + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Rat rat_of(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  try {
    return Rat::parse(string_of(j, where));
  } catch (const Error& e) {
    bad(where + ": " + e.what());
  }
}

std::vector<std::string> labels_of(const Json& j, const char* key) {
  const Json& arr = field(j, key);
  if (!arr.is_array()) bad(std::string("\"") + key + "\" must be an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(string_of(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Rows of "entries" after checking the rectangular shape.
const Json& entry_rows(const Json& j, std::size_t rows, std::size_t cols) {
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) bad("\"entries\" must have one array per row label");
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols) {
      bad("entries row " + std::to_string(i) + " must have one entry per column label");
    }
  }
  return e;
}

std::string where(std::size_t i, std::size_t j) {
  return "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

Json labels_json(const std::vector<std::string>& v) { return Json(v); }

Json matrix_fields(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", labels_json(m.row_labels())},
              {"cols", labels_json(m.col_labels())},
              {"entries", std::move(entries)}};
}

std::string coeff_key(std::size_t i, std::size_t j, std::size_t a) {
  return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(a);
}

}  // namespace

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path.string() + ": invalid JSON: " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::invalid_argument, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

Json to_json(const Matrix& m) { return matrix_fields(m); }

Matrix matrix_from_json(const Json& j) {
  auto rows = labels_of(j, "rows");
  auto cols = labels_of(j, "cols");
  const Json& e = entry_rows(j, rows.size(), cols.size());
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const std::string text = string_of(e[i][k], where(i, k));
      try {
        entries.push_back(Scalar::parse(text));
      } catch (const Error& err) {
        bad(where(i, k) + ": " + err.what());
      }
    }
  }
  return Matrix(std::move(rows), std::move(cols), std::move(entries));
}

Json to_json(const SymmetrizedMatrix& t) {
  Json j = matrix_fields(t.base());
  j["I"] = labels_json(t.I());
  j["J"] = labels_json(t.J());
  return j;
}

SymmetrizedMatrix symmetrized_from_json(const Json& j) {
  return SymmetrizedMatrix(matrix_from_json(j), labels_of(j, "I"), labels_of(j, "J"));
}

Json to_json(const SeriesMatrix& l) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < l.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < l.cols(); ++k) {
      Json terms = Json::array();
      for (const Term& t : l(i, k).terms()) terms.push_back(Json::array({t.coeff.str(), t.exponent.str()}));
      row.push_back(std::move(terms));
    }
    entries.push_back(std::move(row));
  }
  return Json{{"field", l.field().str()},
              {"rows", labels_json(l.row_labels())},
              {"cols", labels_json(l.col_labels())},
              {"entries", std::move(entries)}};
}

SeriesMatrix series_from_json(const Json& j) {
  Field f = Field::rationals();
  try {
    f = Field::parse(string_of(field(j, "field"), "field"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    bad(std::string("field: ") + e.what());
  }
  auto rows = labels_of(j, "rows");
  auto cols = labels_of(j, "cols");
  const Json& e = entry_rows(j, rows.size(), cols.size());
  std::vector<PuiseuxPoly> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Json& cell = e[i][k];
      if (!cell.is_array()) bad(where(i, k) + ": expected a list of [coefficient, exponent] pairs");
      std::vector<Term> terms;
      for (const Json& pair : cell) {
        if (!pair.is_array() || pair.size() != 2) bad(where(i, k) + ": each term must be [coefficient, exponent]");
        Coeff c;
        try {
          c = Coeff::parse(string_of(pair[0], where(i, k)), f);
        } catch (const Error& err) {
          bad(where(i, k) + ": " + err.what());
        }
        terms.push_back(Term{c, rat_of(pair[1], where(i, k))});
      }
      entries.push_back(PuiseuxPoly::from_terms(f, std::move(terms)));
    }
  }
  return SeriesMatrix(f, std::move(rows), std::move(cols), std::move(entries));
}

Json to_json(const ZeroOneMatrix& m) {
  Json bits = Json::array();
  for (std::size_t i = 0; i < m.d(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.width(); ++j) row.push_back(m(i, j) ? 1 : 0);
    bits.push_back(std::move(row));
  }
  return Json{{"d", m.d()}, {"width", m.width()}, {"bits", std::move(bits)}};
}

ZeroOneMatrix zero_one_from_json(const Json& j) {
  const std::size_t d = size_of(field(j, "d"), "d");
  const std::size_t width = size_of(field(j, "width"), "width");
  const Json& b = field(j, "bits");
  if (!b.is_array() || b.size() != d) bad("\"bits\" must have d rows");
  ZeroOneMatrix m(d, width);
  for (std::size_t i = 0; i < d; ++i) {
    if (!b[i].is_array() || b[i].size() != width) bad("bits row " + std::to_string(i) + " must have width entries");
    for (std::size_t k = 0; k < width; ++k) {
      const Json& v = b[i][k];
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
        bad("bits[" + std::to_string(i) + "][" + std::to_string(k) + "] must be 0 or 1");
      }
      m.set(i, k, v.get<int>() == 1);
    }
  }
  return m;
}

Json to_json(const PhiMatrix& phi) {
  Json j = matrix_fields(phi.base);
  j["d"] = phi.d;
  j["k"] = phi.k;
  Json coeffs = Json::object();
  for (const auto& [key, v] : phi.coeffs) {
    coeffs[coeff_key(std::get<0>(key), std::get<1>(key), std::get<2>(key))] = v.str();
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

PhiMatrix phi_from_json(const Json& j) {
  PhiMatrix phi;
  phi.base = matrix_from_json(j);
  phi.d = size_of(field(j, "d"), "d");
  phi.k = size_of(field(j, "k"), "k");
  if (phi.base.rows() != phi.n() || phi.base.cols() != phi.n()) {
    bad("Phi must be (k d) x (k d)");
  }
  const Json& c = field(j, "coeffs");
  if (!c.is_object()) bad("\"coeffs\" must be an object keyed \"i,j,alpha\"");
  for (const auto& [key, value] : c.items()) {
    std::size_t i = 0, jj = 0, a = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ks(key);
    if (!(ks >> i >> c1 >> jj >> c2 >> a) || c1 != ',' || c2 != ',' || !ks.eof()) {
      bad("coeffs key \"" + key + "\" is not \"i,j,alpha\"");
    }
    phi.coeffs[{i, jj, a}] = rat_of(value, "coeffs[" + key + "]");
  }
  return phi;
}

Json to_json(const GoodTuple& t) {
  return Json{{"d", t.d()}, {"k", t.k()}, {"r", t.r().str()}, {"u", t.u().str()}, {"matrix", to_json(t.matrix())}};
}

GoodTuple tuple_from_json(const Json& j) {
  ZeroOneMatrix m = zero_one_from_json(field(j, "matrix"));
  const std::size_t d = size_of(field(j, "d"), "d");
  if (d != m.d()) bad("\"d\" disagrees with the matrix");
  return GoodTuple(size_of(field(j, "k"), "k"), rat_of(field(j, "r"), "r"), rat_of(field(j, "u"), "u"),
                   std::move(m));
}

Json to_json(const Interval& x) { return Json::array({x.lo.str(), x.hi.str()}); }

Json to_json(const RankResult& r) {
  return Json{{"tropical_rank", r.rank}, {"upper_bound", r.upper_bound}, {"certified", r.certified},
              {"witness_rows", r.rows},  {"witness_cols", r.cols},       {"checks", r.checks}};
}

Json to_json(const AdditivityReport& r) {
  return Json{{"trop_T", r.trop_T}, {"trop_sigma", r.trop_sigma}, {"I", r.index_count}, {"holds", r.holds}};
}

Json to_json(const GoodnessReport& r) {
  return Json{{"ones_count", r.ones_count}, {"block", r.block}, {"cond1", r.cond1},
              {"cond2", r.cond2},           {"cond2_vacuous", r.cond2_vacuous}};
}

Json to_json(const PhiBoundsReport& r) {
  Json j{{"bound", r.bound.str()},
         {"threshold", r.threshold},
         {"checked", r.checked},
         {"exhaustive", r.exhaustive},
         {"all_singular", r.all_singular},
         {"kapranov_bound", r.kapranov_bound},
         {"kapranov_caveat", r.kapranov_caveat}};
  j["counterexample"] = r.counterexample ? Json{{"rows", r.counterexample->first}, {"cols", r.counterexample->second}}
                                         : Json(nullptr);
  j["exact_rank"] = r.exact_rank ? Json(*r.exact_rank) : Json(nullptr);
  return j;
}

Json to_json(const LemmaParams& p) {
  return Json{{"k", p.k}, {"r", to_json(p.r)}, {"u", to_json(p.u)}, {"r_check", p.r_check().str()},
              {"u_check", p.u_check().str()}};
}

Json to_json(const UnionBound& b) {
  return Json{{"log_value", to_json(b.log_value)},
              {"value", to_json(b.value)},
              {"value_approx", b.value.hi.to_double()},
              {"log_intermediate", to_json(b.log_intermediate)},
              {"intermediate", to_json(b.intermediate)},
              {"log_ratio", to_json(b.log_ratio)},
              {"ratio_below_minus_one", b.ratio_below_minus_one},
              {"degenerate", b.degenerate}};
}

Json to_json(const SeparationReport& r, const Json& files) {
  auto optional_size = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{
      {"n", r.n},
      {"alpha", r.alpha.str()},
      {"d", r.d},
      {"k", r.k},
      {"q", r.q.str()},
      {"q_enclosure", to_json(r.q_enclosure)},
      {"r", to_json(r.lemma.r)},
      {"u", to_json(r.lemma.u)},
      {"r_check", r.lemma.r_check().str()},
      {"u_check", r.lemma.u_check().str()},
      {"attempts", r.attempts},
      {"goodness", to_json(r.goodness)},
      {"phi_size", r.phi.n()},
      {"phi0_size", r.phi0.rows()},
      {"trop_rank_bound", to_json(r.trop_rank_bound)},
      {"lemma_trop_bound", r.lemma_trop_bound.str()},
      {"kapranov_bound", r.kapranov_bound.str()},
      {"lemma_kapranov_bound", r.lemma_kapranov_bound},
      {"exact_trop_rank", optional_size(r.exact_trop_rank_phi0)},
      {"exact_trop_rank_phi", optional_size(r.exact_trop_rank_phi)},
      {"alpha_threshold", to_json(r.alpha_threshold)},
      {"alpha_above_threshold", r.alpha_above_threshold},
      {"bounds_guaranteed", r.bounds_guaranteed},
      {"hypothesis_caveats", r.hypothesis_caveats},
      {"files", files},
  };
}

}  // namespace suptrop::io
