#pragma once

// JSON encodings of every artifact. Loaders throw Error(ErrorKind::parse)
// with a message naming the offending field; structural checks of the
// loaded objects (symmetrized invariants, goodness) raise their own kinds.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "suptrop/construction.hpp"
#include "suptrop/interval.hpp"
#include "suptrop/rank.hpp"
#include "suptrop/sampler.hpp"
#include "suptrop/series_matrix.hpp"
#include "suptrop/symmetrize.hpp"

namespace suptrop::io {

using Json = nlohmann::json;

Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);

// {"rows":[...],"cols":[...],"entries":[["t:0","inf",...],...]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Matrix format plus "I" and "J".
Json to_json(const SymmetrizedMatrix& t);
SymmetrizedMatrix symmetrized_from_json(const Json& j);

// Matrix format with "field" and entries as lists of [coefficient, exponent].
Json to_json(const SeriesMatrix& l);
SeriesMatrix series_from_json(const Json& j);

// {"d":..,"width":..,"bits":[[0,1,...],...]}
Json to_json(const ZeroOneMatrix& m);
ZeroOneMatrix zero_one_from_json(const Json& j);

// Matrix format plus "d", "k" and "coeffs" keyed "i,j,alpha".
Json to_json(const PhiMatrix& phi);
PhiMatrix phi_from_json(const Json& j);

// {"d":..,"k":..,"r":"p/q","u":"p/q","matrix":<zero-one>}
Json to_json(const GoodTuple& t);
GoodTuple tuple_from_json(const Json& j);

Json to_json(const Interval& x);  // ["lo", "hi"]
Json to_json(const RankResult& r);
Json to_json(const AdditivityReport& r);
Json to_json(const GoodnessReport& r);
Json to_json(const PhiBoundsReport& r);
Json to_json(const LemmaParams& p);
Json to_json(const UnionBound& b);
/// Report without the matrix payloads; `files` maps payload names to paths.
Json to_json(const SeparationReport& r, const Json& files);

}  // namespace suptrop::io
